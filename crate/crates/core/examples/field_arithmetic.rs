//! Exact arithmetic and sign decisions in Q(α).

use std::sync::Arc;

use valuate::algebraic::{elem_from_intpoly, make_algebraic, RootChoice};
use valuate::poly::IntPoly;

fn main() -> valuate::Result<()> {
    let m = IntPoly::from_i64(&[-1, -1, 1]);
    let phi = Arc::new(make_algebraic(&m.to_rat(), RootChoice::Largest)?);
    println!("α = {phi}");
    let mp = phi.minimal_pair();
    println!("minimal pair: p = {}, q = {}", mp.p, mp.q);

    let a5 = elem_from_intpoly(&phi, &IntPoly::x_pow(5));
    println!("α^5 = {a5}");
    let x = elem_from_intpoly(&phi, &IntPoly::from_i64(&[3, -2]));
    let prod = a5.mul(&x)?;
    println!("α^5 · (3 − 2α) = {prod}, sign {}", prod.sign());

    // a difference of about 1e-4 is still decided exactly
    let near = Arc::new(make_algebraic(
        &IntPoly::from_i64(&[-1001, 0, 1000]).to_rat(),
        RootChoice::Largest,
    )?);
    let d = elem_from_intpoly(&near, &IntPoly::from_i64(&[-1, 1]));
    println!("√1.001 − 1 has sign {}", d.sign());
    Ok(())
}
