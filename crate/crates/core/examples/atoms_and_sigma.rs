//! σ, the atom set and power membership for a few monoids.

use valuate::poly::IntPoly;
use valuate::valuation::{Membership, SearchCaps, ValuationMonoid};

fn main() -> valuate::Result<()> {
    let cases: [&[i64]; 4] = [&[-1, -1, 1], &[-2, 2, -2, 1], &[-2, -2, 4, -6, 1], &[-3, 2]];
    for c in cases {
        let m = ValuationMonoid::from_poly(&IntPoly::from_i64(c).to_rat(), SearchCaps::default())?;
        println!("{}", m.alpha().min_poly());
        println!("  σ: {}", valuate::cli::sigma_text(&m.sigma()));
        println!("  atoms: {}", m.atoms());
        for n in 1..=m.rank() + 2 {
            let verdict = match m.power_membership(n)? {
                Membership::Yes(w) => format!("α^{n} = {}", valuate::valuation::fmt_alpha(&w)),
                Membership::No => format!("α^{n} is not a combination of lower powers"),
                Membership::Undetermined => format!("α^{n}: search budget exhausted"),
            };
            println!("  {verdict}");
        }
    }
    Ok(())
}
