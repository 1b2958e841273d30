//! Classifies a few valuation monoids and prints each verdict with its certificate.
//!
//! Run with `cargo run --example classify -- "x^3 + x^2 + x - 2"`, or without an argument
//! to walk a built-in list.

use valuate::cli::parse_input;
use valuate::valuation::{Property, SearchCaps, ValuationMonoid};

fn main() -> valuate::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        [
            "x^2+x-1",
            "x^3+x^2+x-2",
            "x^2+2x-2",
            "rational:2/3",
            "rational:3/2",
            "x^2-x-1",
        ]
        .map(String::from)
        .to_vec()
    } else {
        args
    };
    for input in inputs {
        let m = ValuationMonoid::from_poly(&parse_input(&input)?, SearchCaps::default())?;
        let v = m.classify()?;
        v.replay(m.alpha())?;
        println!("{input}: {}", m.alpha());
        for p in Property::ALL {
            let why = v
                .certificates
                .get(&p)
                .map(|c| c.to_string())
                .or_else(|| v.unknown.get(&p).map(|r| r.to_string()))
                .unwrap_or_default();
            println!("  {:<7} {:<8} {why}", p.name(), v.get(p).to_string());
        }
        println!("  atoms   {}", v.atoms);
    }
    Ok(())
}
