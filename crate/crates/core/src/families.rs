//! Parametric families of minimal polynomials with known classifications, and a sweep
//! recording how far the number of atoms exceeds the rank.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebraic::{from_irreducible, is_irreducible, RootChoice};
use crate::error::{Error, Result};
use crate::poly::{serde_num, IntPoly};
use crate::valuation::{
    Certificate, Property, SearchCaps, SigmaResult, Tri, ValuationMonoid, Verdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `x^d − q`, atomic without the ACCP.
    Eisenstein,
    /// `(p−2)x^d + x − p`, FFM but not finitely generated.
    FfmNotFgm,
    /// Proper OHFMs with `d + 1` atoms.
    Ohfm,
    /// Finitely generated with `d + 2` atoms, not OHFM.
    FgmNotOhfm,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Eisenstein => "eisenstein",
            Family::FfmNotFgm => "ffm-not-fgm",
            Family::Ohfm => "ohfm",
            Family::FgmNotOhfm => "fgm-not-ohfm",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        [
            Family::Eisenstein,
            Family::FfmNotFgm,
            Family::Ohfm,
            Family::FgmNotOhfm,
        ]
        .into_iter()
        .find(|f| f.name() == s)
    }

    pub fn instance(self, d: usize, param: &BigRational) -> Result<FamilyInstance> {
        let prime = || -> Result<u64> {
            if !param.is_integer() || param.is_negative() {
                return Err(Error::BadParams(format!("{param} is not a prime")));
            }
            num_traits::ToPrimitive::to_u64(&param.to_integer())
                .ok_or_else(|| Error::BadParams(format!("{param} is too large")))
        };
        match self {
            Family::Eisenstein => eisenstein_family(d, param),
            Family::FfmNotFgm => ffm_not_fgm_family(d, prime()?),
            Family::Ohfm => ohfm_family(d, prime()?),
            Family::FgmNotOhfm => fgm_not_ohfm_family(d, prime()?),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Only the fields the family's defining result asserts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub rank: usize,
    pub fields: BTreeMap<Property, Tri>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_above_one: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub family: Family,
    pub d: usize,
    #[serde(
        serialize_with = "serde_num::ser_rat",
        deserialize_with = "serde_num::de_rat"
    )]
    pub param: BigRational,
    pub poly: IntPoly,
    pub expected: Expected,
}

impl FamilyInstance {
    pub fn monoid(&self, caps: SearchCaps) -> Result<ValuationMonoid> {
        ValuationMonoid::new(
            from_irreducible(self.poly.clone(), RootChoice::Largest)?,
            caps,
        )
    }

    /// Fields of `v` that disagree with the expectation, as readable lines.
    pub fn mismatches(&self, v: &Verdict) -> Vec<String> {
        let mut out = Vec::new();
        if v.rank != self.expected.rank {
            out.push(format!("rank {} ≠ {}", v.rank, self.expected.rank));
        }
        for (&p, &t) in &self.expected.fields {
            if v.get(p) != t {
                out.push(format!("{p} = {} ≠ {t}", v.get(p)));
            }
        }
        if let Some(s) = self.expected.sigma {
            if v.sigma.finite() != Some(s) {
                out.push(format!("σ = {:?} ≠ {s}", v.sigma));
            }
        }
        out
    }

    /// The relation `x^{d+2} = x^{d+2} − m·(x^2 + x + 1)` for the FGM-not-OHFM family.
    pub fn multiplier_relation(&self) -> Option<Certificate> {
        if self.family != Family::FgmNotOhfm {
            return None;
        }
        let f = &self.poly * &IntPoly::from_i64(&[1, 1, 1]);
        let lhs = IntPoly::x_pow(self.d + 2);
        let rhs = &lhs - &f;
        rhs.is_nonnegative()
            .then_some(Certificate::AtomRelation { lhs, rhs })
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

fn is_squarefree(n: &BigInt) -> bool {
    let mut n = n.abs();
    let mut k = BigInt::from(2);
    while &k * &k <= n {
        if (&n % (&k * &k)).is_zero() {
            return false;
        }
        while (&n % &k).is_zero() {
            n /= &k;
        }
        k += 1;
    }
    true
}

fn fields(pairs: &[(Property, Tri)]) -> BTreeMap<Property, Tri> {
    pairs.iter().copied().collect()
}

fn finish(
    family: Family,
    d: usize,
    param: BigRational,
    poly: IntPoly,
    expected: Expected,
) -> Result<FamilyInstance> {
    if !is_irreducible(&poly)? {
        return Err(Error::NotIrreducible(poly.to_string()));
    }
    Ok(FamilyInstance {
        family,
        d,
        param,
        poly,
        expected,
    })
}

/// `den·x^d − num` for `q = num/den ∈ (0,1)` with squarefree numerator at least 2.
pub fn eisenstein_family(d: usize, q: &BigRational) -> Result<FamilyInstance> {
    let (num, den) = (q.numer().clone(), q.denom().clone());
    if d == 0 {
        return Err(Error::BadParams("degree must be at least 1".into()));
    }
    if !q.is_positive() || q >= &BigRational::one() {
        return Err(Error::BadParams(format!("{q} is not in (0, 1)")));
    }
    if num < BigInt::from(2) || !is_squarefree(&num) {
        return Err(Error::BadParams(format!(
            "numerator {num} is not squarefree and at least 2"
        )));
    }
    let poly = IntPoly::monomial(den, d) - IntPoly::constant(num);
    finish(
        Family::Eisenstein,
        d,
        q.clone(),
        poly,
        Expected {
            rank: d,
            fields: fields(&[(Property::Atomic, Tri::Yes), (Property::Accp, Tri::No)]),
            sigma: None,
            root_above_one: Some(false),
        },
    )
}

/// `(p−2)x^d + x − p` for `d >= 2` and a prime `p >= 5`.
pub fn ffm_not_fgm_family(d: usize, p: u64) -> Result<FamilyInstance> {
    if d < 2 || p < 5 || !is_prime(p) {
        return Err(Error::BadParams(format!(
            "need d ≥ 2 and a prime p ≥ 5, got d = {d}, p = {p}"
        )));
    }
    let p = BigInt::from(p);
    let poly =
        IntPoly::monomial(&p - 2, d) + IntPoly::from_i64(&[0, 1]) - IntPoly::constant(p.clone());
    finish(
        Family::FfmNotFgm,
        d,
        BigRational::from_integer(p),
        poly,
        Expected {
            rank: d,
            fields: fields(&[(Property::Ffm, Tri::Yes), (Property::Fgm, Tri::No)]),
            sigma: None,
            root_above_one: Some(true),
        },
    )
}

/// `x^d − p·x^{d−1} + p·x^{d−2} − p·Σ_{i<d−2} x^i`.
pub fn ohfm_family(d: usize, p: u64) -> Result<FamilyInstance> {
    if d < 3 || !is_prime(p) {
        return Err(Error::BadParams(format!(
            "need d ≥ 3 and a prime p, got d = {d}, p = {p}"
        )));
    }
    let pb = BigInt::from(p);
    let mut c = vec![-pb.clone(); d + 1];
    c[d] = BigInt::one();
    c[d - 1] = -pb.clone();
    c[d - 2] = pb.clone();
    finish(
        Family::Ohfm,
        d,
        BigRational::from_integer(pb),
        IntPoly::new(c),
        Expected {
            rank: d,
            fields: fields(&[
                (Property::Ohfm, Tri::Yes),
                (Property::Ufm, Tri::No),
                (Property::Fgm, Tri::Yes),
            ]),
            sigma: Some(d + 1),
            root_above_one: Some(true),
        },
    )
}

/// `x^d − 3p·x^{d−1} + 2p·x^{d−2} − p·Σ_{i<d−2} x^i` for `d >= 4`.
pub fn fgm_not_ohfm_family(d: usize, p: u64) -> Result<FamilyInstance> {
    if d < 4 || !is_prime(p) {
        return Err(Error::BadParams(format!(
            "need d ≥ 4 and a prime p, got d = {d}, p = {p}"
        )));
    }
    let pb = BigInt::from(p);
    let mut c = vec![-pb.clone(); d + 1];
    c[d] = BigInt::one();
    c[d - 1] = -(&pb * BigInt::from(3));
    c[d - 2] = &pb * BigInt::from(2);
    finish(
        Family::FgmNotOhfm,
        d,
        BigRational::from_integer(pb),
        IntPoly::new(c),
        Expected {
            rank: d,
            fields: fields(&[
                (Property::Fgm, Tri::Yes),
                (Property::Ohfm, Tri::No),
                (Property::Ufm, Tri::No),
            ]),
            sigma: Some(d + 2),
            root_above_one: Some(true),
        },
    )
}

/// Ranges swept by [`survey_gap`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveySpec {
    pub degrees: RangeInclusive<usize>,
    pub primes: RangeInclusive<u64>,
    /// Also sweep monic polynomials with lower coefficients in `[-b, b]`; 0 disables.
    pub coeff_bound: i64,
}

impl Default for SurveySpec {
    fn default() -> Self {
        SurveySpec {
            degrees: 2..=5,
            primes: 2..=5,
            coeff_bound: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapObservation {
    pub source: String,
    pub poly: IntPoly,
    pub sigma: SigmaResult,
    /// `σ − d` when σ is finite.
    pub gap: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub observations: Vec<GapObservation>,
    pub achieved_gaps: BTreeSet<usize>,
}

fn monic_sweep(degrees: &RangeInclusive<usize>, b: i64) -> Vec<IntPoly> {
    let mut out = Vec::new();
    for d in degrees.clone() {
        let width = (2 * b + 1) as usize;
        let total = width.pow(d as u32);
        for idx in 0..total {
            let mut k = idx;
            let mut c: Vec<i64> = (0..d)
                .map(|_| {
                    let v = (k % width) as i64 - b;
                    k /= width;
                    v
                })
                .collect();
            c.push(1);
            out.push(IntPoly::from_i64(&c));
        }
    }
    out
}

/// Records `σ − d` for family members and swept polynomials with finite σ.
/// Never asserts anything about which gaps are possible.
pub fn survey_gap(spec: &SurveySpec, caps: &SearchCaps, jobs: usize) -> Result<SurveyReport> {
    let mut tasks: Vec<(String, IntPoly)> = Vec::new();
    for d in spec.degrees.clone() {
        for p in spec.primes.clone().filter(|&p| is_prime(p)) {
            if let Ok(inst) = ohfm_family(d, p) {
                tasks.push((format!("ohfm(d={d}, p={p})"), inst.poly));
            }
            if let Ok(inst) = fgm_not_ohfm_family(d, p) {
                tasks.push((format!("fgm-not-ohfm(d={d}, p={p})"), inst.poly));
            }
        }
    }
    if spec.coeff_bound > 0 {
        for f in monic_sweep(&spec.degrees, spec.coeff_bound) {
            tasks.push(("sweep".into(), f));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::BadParams(e.to_string()))?;
    let observations: Vec<GapObservation> = pool.install(|| {
        tasks
            .into_par_iter()
            .filter_map(|(source, poly)| observe(source, poly, caps))
            .collect()
    });
    let achieved_gaps = observations.iter().filter_map(|o| o.gap).collect();
    Ok(SurveyReport {
        observations,
        achieved_gaps,
    })
}

/// `None` for polynomials outside the scope of the sweep (reducible, no root above 1).
fn observe(source: String, poly: IntPoly, caps: &SearchCaps) -> Option<GapObservation> {
    if poly.coeff(0).is_zero() || !is_irreducible(&poly).ok()? {
        return None;
    }
    let alpha = from_irreducible(poly.clone(), RootChoice::Largest).ok()?;
    if alpha.cmp_one() != std::cmp::Ordering::Greater || alpha.positive_root_count() != 1 {
        return None;
    }
    let d = alpha.degree();
    let sigma = ValuationMonoid::new(alpha, caps.clone()).ok()?.sigma();
    let gap = sigma.finite().map(|s| s - d);
    Some(GapObservation {
        source,
        poly,
        sigma,
        gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn eisenstein_examples() {
        assert_eq!(eisenstein_family(2, &r(2, 3)).unwrap().poly, p(&[-2, 0, 3]));
        assert_eq!(eisenstein_family(1, &r(2, 3)).unwrap().poly, p(&[-2, 3]));
        assert_eq!(
            eisenstein_family(3, &r(2, 5)).unwrap().poly,
            p(&[-2, 0, 0, 5])
        );
        assert!(eisenstein_family(2, &r(4, 5)).is_err());
        assert!(eisenstein_family(2, &r(3, 2)).is_err());
    }

    #[test]
    fn ffm_not_fgm_examples() {
        assert_eq!(ffm_not_fgm_family(2, 5).unwrap().poly, p(&[-5, 1, 3]));
        assert_eq!(ffm_not_fgm_family(3, 7).unwrap().poly, p(&[-7, 1, 0, 5]));
        assert!(matches!(ffm_not_fgm_family(2, 4), Err(Error::BadParams(_))));
    }

    #[test]
    fn ohfm_examples() {
        let i = ohfm_family(3, 2).unwrap();
        assert_eq!(i.poly, p(&[-2, 2, -2, 1]));
        assert_eq!(i.poly.coeff_sum(), BigInt::from(-1));
        assert_eq!(ohfm_family(4, 3).unwrap().poly, p(&[-3, -3, 3, -3, 1]));
        assert_eq!(ohfm_family(3, 5).unwrap().poly, p(&[-5, 5, -5, 1]));
    }

    #[test]
    fn fgm_not_ohfm_examples() {
        assert_eq!(
            fgm_not_ohfm_family(4, 2).unwrap().poly,
            p(&[-2, -2, 4, -6, 1])
        );
        assert_eq!(
            fgm_not_ohfm_family(5, 2).unwrap().poly,
            p(&[-2, -2, -2, 4, -6, 1])
        );
        assert!(matches!(
            fgm_not_ohfm_family(3, 2),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn multiplier_relation_replays() {
        let i = fgm_not_ohfm_family(4, 2).unwrap();
        let c = i.multiplier_relation().unwrap();
        let m = i.monoid(SearchCaps::default()).unwrap();
        c.replay(m.alpha()).unwrap();
    }

    #[test]
    fn survey_reports_gaps() {
        let spec = SurveySpec {
            degrees: 2..=4,
            primes: 2..=2,
            coeff_bound: 1,
        };
        let rep = survey_gap(&spec, &SearchCaps::default(), 2).unwrap();
        assert!(rep.achieved_gaps.contains(&0));
        assert!(rep.achieved_gaps.contains(&1));
        assert!(rep.achieved_gaps.contains(&2));
    }
}
