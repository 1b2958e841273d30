//! Members of the four parametric families, checked against their expected verdicts.

use num_rational::BigRational;
use valuate::families::{eisenstein_family, ffm_not_fgm_family, fgm_not_ohfm_family, ohfm_family};
use valuate::valuation::SearchCaps;

fn main() -> valuate::Result<()> {
    let instances = [
        eisenstein_family(2, &BigRational::new(2.into(), 3.into()))?,
        ffm_not_fgm_family(2, 5)?,
        ohfm_family(3, 2)?,
        fgm_not_ohfm_family(4, 2)?,
    ];
    for inst in instances {
        let m = inst.monoid(SearchCaps::default())?;
        let v = m.classify()?;
        let bad = inst.mismatches(&v);
        println!(
            "{:<14} d={} param={:<4} {:<32} σ: {:<3} {}",
            inst.family.name(),
            inst.d,
            inst.param.to_string(),
            inst.poly.to_string(),
            v.sigma.finite().map_or("∞?".into(), |s| s.to_string()),
            if bad.is_empty() {
                "as expected".to_string()
            } else {
                bad.join(", ")
            }
        );
        if let Some(rel) = inst.multiplier_relation() {
            rel.replay(m.alpha())?;
            println!("    multiplier relation: {rel}");
        }
    }
    Ok(())
}
