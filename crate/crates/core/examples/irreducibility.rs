//! Irreducibility over Q, including polynomials that factor modulo every prime.

use valuate::algebraic::{irreducibility, IrreducibilityProof};
use valuate::poly::IntPoly;

fn main() -> valuate::Result<()> {
    let cases = [
        IntPoly::from_i64(&[-2, -2, 4, -6, 1]),
        IntPoly::from_i64(&[1, 0, 0, 0, 1]),
        IntPoly::from_i64(&[1, 0, -10, 0, 1]),
        &IntPoly::from_i64(&[1, 0, 1]) * &IntPoly::from_i64(&[1, 1, 1]),
        IntPoly::from_i64(&[-5, 1, 3]),
    ];
    for f in cases {
        let verdict = match irreducibility(&f)? {
            Some(IrreducibilityProof::Eisenstein { prime, reversed }) => {
                format!(
                    "irreducible (Eisenstein at {prime}{})",
                    if reversed { ", reversed" } else { "" }
                )
            }
            Some(IrreducibilityProof::FactorDegrees { primes }) => {
                format!("irreducible (factor degrees modulo {primes:?})")
            }
            Some(IrreducibilityProof::Recombination { prime, exponent }) => {
                format!("irreducible (no recombination modulo {prime}^{exponent})")
            }
            Some(IrreducibilityProof::Linear) => "irreducible (linear)".to_string(),
            None => "reducible".to_string(),
        };
        println!("{f:<28} {verdict}");
    }
    Ok(())
}
