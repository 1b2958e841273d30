//! Sturm counting, isolation, refinement and Curtiss multipliers.

use num_rational::BigRational;
use valuate::poly::IntPoly;
use valuate::realroots::{
    count_positive_roots, curtiss_multiplier, isolate_positive_roots, refine, sturm_chain,
};

fn main() -> valuate::Result<()> {
    // (x - 1)(x - 2)(x - 3)(x^2 + 1)
    let f = &IntPoly::from_i64(&[-6, 11, -6, 1]) * &IntPoly::from_i64(&[1, 0, 1]);
    println!("f = {f}");
    println!("sign variations: {}", f.sign_variations());
    println!("positive roots:  {}", count_positive_roots(&f)?);
    let chain = sturm_chain(&f)?;
    let half = BigRational::new(3.into(), 2.into());
    println!("roots above 3/2: {}", chain.distinct_roots_above(&half));
    for iv in isolate_positive_roots(&f)? {
        println!("  isolated in {iv}");
    }

    let g = IntPoly::from_i64(&[-2, 0, 1]);
    let iv = &isolate_positive_roots(&g)?[0];
    let tight = refine(&g, iv, &BigRational::new(1.into(), 1_000_000.into()))?;
    let (lo, hi) = tight.to_f64();
    println!("√2 ∈ [{lo:.7}, {hi:.7}]");

    // x^2 - x + 1 has no positive root; (1 + x)·f = x^3 + 1 has no sign variation
    let h = IntPoly::from_i64(&[1, -1, 1]);
    let phi = curtiss_multiplier(&h, 64)?;
    println!("multiplier for {h}: {phi}, product {}", &phi * &h);
    Ok(())
}
