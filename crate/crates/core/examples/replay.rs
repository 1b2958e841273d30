//! Serializes a verdict, reads it back and replays every certificate.

use valuate::cli::parse_input;
use valuate::valuation::{Certificate, SearchCaps, ValuationMonoid, Verdict};

fn main() -> valuate::Result<()> {
    let m = ValuationMonoid::from_poly(&parse_input("x^3+x^2+x-2")?, SearchCaps::default())?;
    let v = m.classify()?;
    let json = serde_json::to_string(&v).expect("verdict serializes");
    let back: Verdict = serde_json::from_str(&json).expect("verdict deserializes");
    back.replay(m.alpha())?;
    println!("{} certificates replayed", back.certificates.len());

    // the ACCP failure is witnessed by an explicit strictly ascending chain of principal ideals
    if let Some(Certificate::Chain(w)) = back
        .certificates
        .values()
        .find(|c| matches!(c, Certificate::Chain(_)))
    {
        println!("chain certificate: {}", Certificate::Chain(w.clone()));
    }
    let forged = Certificate::AntimatterWitness {
        coeffs: valuate::poly::IntPoly::from_i64(&[0, 1, 1]),
    };
    println!(
        "forged antimatter witness rejected: {}",
        forged.replay(m.alpha()).is_err()
    );
    Ok(())
}
