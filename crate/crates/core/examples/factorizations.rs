//! Factorization sets and length sets.

use valuate::factorization::{enumerate, is_arith_progression};
use valuate::poly::IntPoly;
use valuate::valuation::{fmt_alpha, SearchCaps, ValuationMonoid};

fn show(min_poly: &[i64], element: &[i64]) -> valuate::Result<()> {
    let m =
        ValuationMonoid::from_poly(&IntPoly::from_i64(min_poly).to_rat(), SearchCaps::default())?;
    let x = IntPoly::from_i64(element);
    let set = enumerate(&m, &x, 24)?;
    println!(
        "in N0[α], α root of {}: x = {}",
        m.alpha().min_poly(),
        fmt_alpha(&x)
    );
    for f in &set.items {
        println!("  {}  (length {})", fmt_alpha(&f.z), f.length);
    }
    let lengths = set.lengths();
    let (ap, step) = is_arith_progression(&lengths)?;
    println!(
        "  lengths {lengths:?}, arithmetic progression: {ap} {step:?}, complete: {}",
        set.complete
    );
    Ok(())
}

fn main() -> valuate::Result<()> {
    show(&[-3, 2], &[3])?;
    show(&[-3, 2], &[0, 0, 0, 4])?;
    show(&[-1, -1, 1], &[2, 0, 3])?;
    show(&[-2, 2, -2, 1], &[1, 0, 0, 0, 2])?;
    Ok(())
}
