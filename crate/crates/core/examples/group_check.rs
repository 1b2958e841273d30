//! Polynomials without positive roots make N0[β] a group.

use valuate::poly::IntPoly;
use valuate::valuation::{group_check, GroupCheck};

fn main() -> valuate::Result<()> {
    for c in [&[1, 1, 1][..], &[1, -1, 1], &[3, -4, 2], &[-1, -1, 1]] {
        let m = IntPoly::from_i64(c);
        match group_check(&m, 64)? {
            GroupCheck::IsGroup { phi, product } => {
                println!("{m}: group, φ = {phi}, φ·m = {product}")
            }
            GroupCheck::HasPositiveRoot => println!("{m}: has a positive root"),
        }
    }
    Ok(())
}
