//! The monoid `N0[α]` and decision procedures for its factorization properties.
//!
//! Every determined answer carries a [`Certificate`] that can be replayed with exact
//! arithmetic. Searches that run out of room answer [`Tri::Unknown`] with the exhausted cap.

mod certificate;
mod verdict;

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use certificate::{fmt_alpha, Certificate, ChainWitness, Hypothesis, CHAIN_HORIZON};
pub use verdict::{
    implication_holds, AtomSet, Decision, NecessaryScan, Property, SigmaResult, Tri, UnknownReason,
    Verdict,
};

use crate::algebraic::{elem_from_intpoly, AlgebraicNumber, QAlphaElem};
use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatPoly};
use crate::realroots;
use crate::search::{self, Budget, Mode};

/// Limits for the semi-decision searches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCaps {
    /// Largest `n` tried when looking for σ; `None` means `2d + 16`.
    pub sigma_cap: Option<usize>,
    pub antimatter_deg_cap: usize,
    pub antimatter_height_cap: u64,
    pub curtiss_cap: u32,
    pub exponent_cap: usize,
    /// Search nodes shared by one σ scan or one antimatter scan.
    pub node_budget: u64,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            sigma_cap: None,
            antimatter_deg_cap: 8,
            antimatter_height_cap: 30,
            curtiss_cap: 64,
            exponent_cap: 24,
            node_budget: 200_000,
        }
    }
}

impl SearchCaps {
    pub fn sigma_cap_for(&self, degree: usize) -> usize {
        self.sigma_cap.unwrap_or(2 * degree + 16)
    }

    fn validate(&self) -> Result<()> {
        let zero = self.sigma_cap == Some(0)
            || self.antimatter_deg_cap == 0
            || self.antimatter_height_cap == 0
            || self.curtiss_cap == 0
            || self.exponent_cap == 0
            || self.node_budget == 0;
        if zero {
            Err(Error::BadParams("search caps must be at least 1".into()))
        } else {
            Ok(())
        }
    }
}

/// Outcome of asking whether `α^n` is a nonnegative combination of `1, α, …, α^{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Yes(IntPoly),
    No,
    /// The node budget ran out first.
    Undetermined,
}

/// Either `N0[β]` is the group `Z[β]`, or the polynomial has a positive root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupCheck {
    IsGroup { phi: IntPoly, product: IntPoly },
    HasPositiveRoot,
}

impl GroupCheck {
    pub fn certificate(&self) -> Option<Certificate> {
        match self {
            GroupCheck::IsGroup { phi, product } => Some(Certificate::Group {
                phi: phi.clone(),
                product: product.clone(),
            }),
            GroupCheck::HasPositiveRoot => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ValuationMonoid {
    alpha: Arc<AlgebraicNumber>,
    caps: SearchCaps,
}

pub(crate) fn power_membership_with(
    alpha: &Arc<AlgebraicNumber>,
    n: usize,
    budget: &mut Budget,
) -> Membership {
    match alpha.cmp_one() {
        Ordering::Less => Membership::No,
        Ordering::Equal => Membership::Yes(IntPoly::one()),
        // σ is infinite for these, so no power is a combination of lower ones
        Ordering::Greater if sigma_infinite_reason(alpha).is_some() => Membership::No,
        Ordering::Greater => power_membership_search(alpha, n, budget),
    }
}

/// The bare depth-first search behind [`ValuationMonoid::power_membership`].
fn power_membership_search(
    alpha: &Arc<AlgebraicNumber>,
    n: usize,
    budget: &mut Budget,
) -> Membership {
    match alpha.cmp_one() {
        Ordering::Less => Membership::No,
        Ordering::Equal => Membership::Yes(IntPoly::one()),
        Ordering::Greater => {
            let target = elem_from_intpoly(alpha, &IntPoly::x_pow(n));
            let exps: Vec<usize> = (0..n).collect();
            let out = search::solve(alpha, &target, &exps, None, Mode::First, budget);
            match out.solutions.into_iter().next() {
                Some(w) => Membership::Yes(w),
                None if out.exhausted => Membership::Undetermined,
                None => Membership::No,
            }
        }
    }
}

/// Analytic reason for σ = ∞ when α > 1: each rules out finite generation.
fn sigma_infinite_reason(alpha: &AlgebraicNumber) -> Option<Hypothesis> {
    [
        Hypothesis::NonIntegralMinPoly,
        Hypothesis::MultiplePositiveRoots,
        Hypothesis::RankTwoNotMonomial,
    ]
    .into_iter()
    .find(|h| h.holds(alpha))
}

fn quick(h: Hypothesis, result: &str) -> Certificate {
    Certificate::QuickReject {
        hypothesis: h,
        result: result.into(),
    }
}

fn axiom(h: Hypothesis, result: &str) -> Certificate {
    Certificate::Axiom {
        hypothesis: h,
        result: result.into(),
    }
}

fn budget_reason(budget: u64) -> UnknownReason {
    UnknownReason::CapExhausted {
        cap: "node_budget".into(),
        value: budget,
    }
}

impl ValuationMonoid {
    /// The monoid generated by the powers of α, re-rooted at the largest positive conjugate.
    pub fn new(alpha: AlgebraicNumber, caps: SearchCaps) -> Result<Self> {
        Self::at_root(alpha.canonical(), caps)
    }

    /// Keeps the given root instead of moving to the largest conjugate.
    pub fn at_root(alpha: AlgebraicNumber, caps: SearchCaps) -> Result<Self> {
        caps.validate()?;
        Ok(ValuationMonoid {
            alpha: Arc::new(alpha),
            caps,
        })
    }

    /// Builds the canonical monoid from a minimal polynomial with rational coefficients.
    pub fn from_poly(m: &RatPoly, caps: SearchCaps) -> Result<Self> {
        let a = crate::algebraic::make_algebraic(m, crate::algebraic::RootChoice::Largest)?;
        Self::at_root(a, caps)
    }

    pub fn alpha(&self) -> &Arc<AlgebraicNumber> {
        &self.alpha
    }

    pub fn caps(&self) -> &SearchCaps {
        &self.caps
    }

    pub fn rank(&self) -> usize {
        self.alpha.degree()
    }

    fn prim(&self) -> &IntPoly {
        self.alpha.min_poly()
    }

    fn is_integral(&self) -> bool {
        self.prim().leading().is_some_and(One::is_one)
    }

    fn positive_roots(&self) -> usize {
        self.alpha.positive_root_count()
    }

    fn p_is_monomial(&self) -> bool {
        self.alpha.minimal_pair().p == IntPoly::x_pow(self.rank())
    }

    pub fn elem(&self, f: &IntPoly) -> QAlphaElem {
        elem_from_intpoly(&self.alpha, f)
    }

    /// Whether `α^n` lies in the monoid generated by lower powers. Requires `n >= 1`.
    pub fn power_membership(&self, n: usize) -> Result<Membership> {
        if n == 0 {
            return Err(Error::BadParams("power index must be at least 1".into()));
        }
        Ok(power_membership_with(
            &self.alpha,
            n,
            &mut Budget::new(self.caps.node_budget),
        ))
    }

    /// [`Self::power_membership`] without the analytic shortcuts: always runs the search.
    pub fn power_membership_dfs(&self, n: usize) -> Result<Membership> {
        if n == 0 {
            return Err(Error::BadParams("power index must be at least 1".into()));
        }
        Ok(power_membership_search(
            &self.alpha,
            n,
            &mut Budget::new(self.caps.node_budget),
        ))
    }

    /// Least `n` with `α^n` a nonnegative combination of lower powers.
    pub fn sigma(&self) -> SigmaResult {
        let d = self.rank();
        match self.alpha.cmp_one() {
            Ordering::Less => {
                return SigmaResult::Infinite {
                    reason: Hypothesis::AlphaBelowOne,
                }
            }
            Ordering::Equal => {
                return SigmaResult::Finite {
                    sigma: 1,
                    witness: IntPoly::one(),
                }
            }
            Ordering::Greater => {}
        }
        if let Some(reason) = sigma_infinite_reason(&self.alpha) {
            return SigmaResult::Infinite { reason };
        }
        if self.p_is_monomial() {
            return SigmaResult::Finite {
                sigma: d,
                witness: self.alpha.minimal_pair().q,
            };
        }
        let cap = self.caps.sigma_cap_for(d);
        let mut budget = Budget::new(self.caps.node_budget);
        for n in 1..=cap {
            match power_membership_with(&self.alpha, n, &mut budget) {
                Membership::Yes(witness) => return SigmaResult::Finite { sigma: n, witness },
                Membership::No => {}
                Membership::Undetermined => {
                    return SigmaResult::NotFoundUpToCap {
                        cap,
                        checked_through: n - 1,
                    }
                }
            }
        }
        SigmaResult::NotFoundUpToCap {
            cap,
            checked_through: cap,
        }
    }

    /// Searches for `1 = Σ_{i≥1} c_i α^i`, `c_i <= height`, with growing exponent range.
    fn antimatter_witness(&self) -> std::result::Result<IntPoly, UnknownReason> {
        let d = self.rank();
        let one = QAlphaElem::one(&self.alpha);
        let height = BigInt::from(self.caps.antimatter_height_cap);
        let mut budget = Budget::new(self.caps.node_budget);
        for top in 1..=d + self.caps.antimatter_deg_cap {
            let exps: Vec<usize> = (1..=top).collect();
            let out = search::solve(
                &self.alpha,
                &one,
                &exps,
                Some(&height),
                Mode::First,
                &mut budget,
            );
            if let Some(w) = out.solutions.into_iter().next() {
                return Ok(w);
            }
            if out.exhausted {
                return Err(budget_reason(self.caps.node_budget));
            }
        }
        Err(UnknownReason::CapExhausted {
            cap: "antimatter_deg_cap".into(),
            value: self.caps.antimatter_deg_cap as u64,
        })
    }

    pub fn atomicity(&self) -> Decision {
        if self.alpha.cmp_one() != Ordering::Less {
            return Decision::yes(axiom(
                Hypothesis::AlphaAtLeastOne,
                "powers of α are increasing, so the monoid is increasingly generated and atomic",
            ));
        }
        if Hypothesis::ConstantTermNotUnit.holds(&self.alpha) {
            return Decision::yes(axiom(
                Hypothesis::ConstantTermNotUnit,
                "1 cannot be a positive combination of higher powers, so 1 is an atom",
            ));
        }
        if Hypothesis::MultiplePositiveRoots.holds(&self.alpha) {
            return Decision::yes(axiom(
                Hypothesis::MultiplePositiveRoots,
                "1 = Σ c_i α^i would hold at every positive root, impossible for the larger one",
            ));
        }
        match self.antimatter_witness() {
            Ok(w) => Decision::no(Certificate::AntimatterWitness { coeffs: w }),
            Err(r) => Decision::unknown(r),
        }
    }

    /// Scan for `k` with `p − x^k q ∈ N0[x]`; only meaningful for α < 1.
    pub fn necessary_condition_scan(&self) -> Option<(NecessaryScan, Option<Certificate>)> {
        if self.alpha.cmp_one() != Ordering::Less {
            return None;
        }
        let mp = self.alpha.minimal_pair();
        let range = mp.p.degree()? - mp.q.degree().unwrap_or(0);
        for k in 0..=range {
            let w = &mp.p - &mp.q.shift(k);
            if w.is_nonnegative() {
                return Some((
                    NecessaryScan { range, k: Some(k) },
                    Some(Certificate::NecessaryCondition { k, witness: w }),
                ));
            }
        }
        Some((NecessaryScan { range, k: None }, None))
    }

    /// Chain of principal ideals built from a one-variation multiple of `m`.
    pub fn chain_witness(&self) -> Result<ChainWitness> {
        let phi = realroots::curtiss_multiplier(self.prim(), self.caps.curtiss_cap)?;
        let f = &phi * self.prim();
        if f.sign_variations() != 1 {
            return Err(Error::NotApplicable(
                "multiple has more than one sign variation".into(),
            ));
        }
        let mut partial = BigInt::zero();
        let mut k = None;
        for (j, c) in f.coeffs().iter().enumerate() {
            partial += c;
            if partial.is_negative() {
                k = Some(j);
            } else {
                break;
            }
        }
        let k = k.ok_or_else(|| Error::NotApplicable("constant term is not negative".into()))?;
        Ok(ChainWitness::Multiplier { phi, f, k })
    }

    fn accp_given(&self, atomic: &Decision) -> Decision {
        if self.alpha.cmp_one() != Ordering::Less {
            return Decision::yes(axiom(
                Hypothesis::AlphaAtLeastOne,
                "increasingly generated monoids are FFMs",
            ));
        }
        if atomic.value == Tri::No {
            return Decision::implied(Property::Atomic, Tri::No);
        }
        if let Some((_, Some(cert))) = self.necessary_condition_scan() {
            return Decision::no(cert);
        }
        if self.positive_roots() == 1 {
            return match self.chain_witness() {
                Ok(w) => Decision::no(Certificate::Chain(w)),
                Err(Error::CapExhausted(n)) => Decision::unknown(UnknownReason::CapExhausted {
                    cap: "curtiss_cap".into(),
                    value: n as u64,
                }),
                Err(e) => Decision::unknown(UnknownReason::Undecided {
                    region: e.to_string(),
                }),
            };
        }
        Decision::unknown(UnknownReason::Undecided {
            region: "α < 1 with several positive roots and no k with p − x^k q ∈ N0[x]".into(),
        })
    }

    /// ACCP, which for these monoids coincides with BFM and FFM.
    pub fn accp_status(&self) -> Decision {
        self.accp_given(&self.atomicity())
    }

    /// Rank at most 2: finitely generated iff `p = x^d`.
    pub fn fgm_refine_quadratic(&self) -> Result<Decision> {
        let d = self.rank();
        if d > 2 || !self.is_integral() || self.positive_roots() != 1 {
            return Err(Error::NotApplicable(
                "needs rank at most 2, an integral minimal polynomial and one positive root".into(),
            ));
        }
        Ok(if self.p_is_monomial() {
            Decision::yes(Certificate::Sigma {
                sigma: d,
                witness: self.alpha.minimal_pair().q,
            })
        } else {
            Decision::no(quick(
                Hypothesis::RankTwoNotMonomial,
                "in rank at most 2 a finitely generated valuation has p = x^d",
            ))
        })
    }

    fn fgm_given(&self, sigma: &SigmaResult) -> Decision {
        if !self.is_integral() {
            return Decision::no(quick(
                Hypothesis::NonIntegralMinPoly,
                "finitely generated valuations have minimal polynomial in Z[x]",
            ));
        }
        if self.positive_roots() >= 2 {
            return Decision::no(quick(
                Hypothesis::MultiplePositiveRoots,
                "finitely generated valuations have a single positive conjugate",
            ));
        }
        if let Ok(d) = self.fgm_refine_quadratic() {
            return d;
        }
        if self.alpha.cmp_one() == Ordering::Less {
            return Decision::no(quick(
                Hypothesis::AlphaBelowOne,
                "no power of α < 1 is a combination of lower powers, so the atoms are infinite",
            ));
        }
        match sigma {
            SigmaResult::Finite { sigma, witness } => Decision::yes(Certificate::Sigma {
                sigma: *sigma,
                witness: witness.clone(),
            }),
            SigmaResult::Infinite { reason } => {
                Decision::no(quick(*reason, "σ is infinite, so the atom set is infinite"))
            }
            SigmaResult::NotFoundUpToCap {
                cap,
                checked_through,
            } if checked_through == cap => Decision::unknown(UnknownReason::CapExhausted {
                cap: "sigma_cap".into(),
                value: *cap as u64,
            }),
            SigmaResult::NotFoundUpToCap { .. } => {
                Decision::unknown(budget_reason(self.caps.node_budget))
            }
        }
    }

    pub fn fgm_status(&self) -> Decision {
        self.fgm_given(&self.sigma())
    }

    /// UFM iff `p = x^d`; HFM coincides with UFM.
    pub fn ufm_hfm_test(&self) -> Decision {
        let mp = self.alpha.minimal_pair();
        let monomial = self.p_is_monomial();
        let c = Certificate::MinimalPair {
            p: mp.p,
            q: mp.q,
            monomial,
        };
        if monomial {
            Decision::yes(c)
        } else {
            Decision::no(c)
        }
    }

    fn ohfm_given(&self, ufm: &Decision, sigma: &SigmaResult) -> Decision {
        let d = self.rank();
        if ufm.value == Tri::Yes {
            return Decision::implied(Property::Ufm, Tri::Yes);
        }
        let reject = "OHFMs are finitely generated";
        if !self.is_integral() {
            return Decision::no(quick(Hypothesis::NonIntegralMinPoly, reject));
        }
        if self.positive_roots() >= 2 {
            return Decision::no(quick(Hypothesis::MultiplePositiveRoots, reject));
        }
        if self.alpha.cmp_one() == Ordering::Less {
            return Decision::no(quick(Hypothesis::AlphaBelowOne, reject));
        }
        if d <= 2 {
            return Decision::no(quick(
                Hypothesis::RankTwoNotMonomial,
                "in rank at most 2 OHFM coincides with UFM",
            ));
        }
        // OHFM iff σ ∈ {d, d+1}; α^{d+1} outside the span of lower powers means σ > d+1
        match sigma {
            SigmaResult::Finite { sigma, witness } if *sigma <= d + 1 => {
                Decision::yes(Certificate::Sigma {
                    sigma: *sigma,
                    witness: witness.clone(),
                })
            }
            SigmaResult::Finite { .. } | SigmaResult::Infinite { .. } => {
                Decision::no(Certificate::NonMembership { n: d + 1 })
            }
            SigmaResult::NotFoundUpToCap {
                checked_through, ..
            } if *checked_through > d => Decision::no(Certificate::NonMembership { n: d + 1 }),
            SigmaResult::NotFoundUpToCap { .. } => {
                Decision::unknown(budget_reason(self.caps.node_budget))
            }
        }
    }

    pub fn ohfm_status(&self) -> Decision {
        self.ohfm_given(&self.ufm_hfm_test(), &self.sigma())
    }

    fn atoms_given(&self, atomic: Tri, sigma: &SigmaResult) -> AtomSet {
        match (atomic, sigma) {
            (Tri::No, _) => AtomSet::Empty,
            (Tri::Unknown, _) => AtomSet::Unknown,
            (Tri::Yes, SigmaResult::Finite { sigma, .. }) => {
                AtomSet::FinitePowers { up_to: sigma - 1 }
            }
            (Tri::Yes, SigmaResult::Infinite { .. }) => AtomSet::AllPowers,
            (Tri::Yes, SigmaResult::NotFoundUpToCap { .. }) => AtomSet::Unknown,
        }
    }

    pub fn atoms(&self) -> AtomSet {
        self.atoms_given(self.atomicity().value, &self.sigma())
    }

    /// Runs every ladder and assembles a consistency-checked verdict.
    ///
    /// All positive conjugates give isomorphic monoids, so a monoid built at another root
    /// is classified (and certified) at the largest one.
    pub fn classify(&self) -> Result<Verdict> {
        if !self.alpha.is_largest_root() {
            return Self::new((*self.alpha).clone(), self.caps.clone())?.classify();
        }
        let atomic = self.atomicity();
        let sigma = self.sigma();
        let necessary = self.necessary_condition_scan().map(|(s, _)| s);
        let atoms = self.atoms_given(atomic.value, &sigma);
        let rank = self.rank();
        if atomic.value == Tri::No {
            let no = || Decision::implied(Property::Atomic, Tri::No);
            return Verdict::assemble(
                rank,
                [
                    (Property::Atomic, atomic),
                    (Property::Accp, no()),
                    (Property::Bfm, no()),
                    (Property::Ffm, no()),
                    (Property::Fgm, no()),
                    (Property::Ufm, no()),
                    (Property::Hfm, no()),
                    (Property::Ohfm, no()),
                ],
                atoms,
                sigma,
                necessary,
            );
        }
        let accp = self.accp_given(&atomic);
        let (bfm, ffm) = match accp.value {
            Tri::No => (
                Decision::implied(Property::Accp, Tri::No),
                Decision::implied(Property::Accp, Tri::No),
            ),
            _ => (accp.clone(), accp.clone()),
        };
        let fgm = self.fgm_given(&sigma);
        let ufm = self.ufm_hfm_test();
        let hfm = Decision::implied(Property::Ufm, ufm.value);
        let ohfm = self.ohfm_given(&ufm, &sigma);
        Verdict::assemble(
            rank,
            [
                (Property::Atomic, atomic),
                (Property::Accp, accp),
                (Property::Bfm, bfm),
                (Property::Ffm, ffm),
                (Property::Fgm, fgm),
                (Property::Ufm, ufm),
                (Property::Hfm, hfm),
                (Property::Ohfm, ohfm),
            ],
            atoms,
            sigma,
            necessary,
        )
    }
}

/// Isomorphism of two atomic valuation monoids.
pub fn isomorphic(a: &ValuationMonoid, b: &ValuationMonoid) -> Result<bool> {
    if a.atomicity().value != Tri::Yes || b.atomicity().value != Tri::Yes {
        return Err(Error::RequiresAtomic);
    }
    let (ma, mb) = (a.alpha.min_poly(), b.alpha.min_poly());
    if a.rank() == 1 && b.rank() == 1 {
        let integer = |m: &IntPoly| m.leading().is_some_and(One::is_one);
        return Ok(ma == mb || (integer(ma) && integer(mb)));
    }
    Ok(ma == mb)
}

/// For a polynomial without positive roots, a multiplier `φ` with `φ·m ∈ N0[x]`, which
/// puts `−1` in `N0[β]` for every root β.
pub fn group_check(m: &IntPoly, curtiss_cap: u32) -> Result<GroupCheck> {
    let m = m.primitive_part();
    if m.degree().ok_or(Error::ZeroPoly)? == 0 {
        return Err(Error::BadParams("constant polynomial".into()));
    }
    if m.coeff(0).is_zero() {
        return Err(Error::BadParams("0 is a root".into()));
    }
    if realroots::count_positive_roots(&m)? > 0 {
        return Ok(GroupCheck::HasPositiveRoot);
    }
    let phi = realroots::curtiss_multiplier(&m, curtiss_cap)?;
    let product = &phi * &m;
    certificate::replay_group(&m, &phi, &product)?;
    Ok(GroupCheck::IsGroup { phi, product })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::{make_algebraic, RootChoice};

    fn monoid(c: &[i64]) -> ValuationMonoid {
        ValuationMonoid::from_poly(&IntPoly::from_i64(c).to_rat(), SearchCaps::default()).unwrap()
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn classify(c: &[i64]) -> Verdict {
        let m = monoid(c);
        let v = m.classify().unwrap();
        v.replay(m.alpha()).unwrap();
        v
    }

    #[test]
    fn power_membership_examples() {
        let g = monoid(&[-1, -1, 1]);
        assert_eq!(g.power_membership(2).unwrap(), Membership::Yes(p(&[1, 1])));
        assert_eq!(g.power_membership(1).unwrap(), Membership::No);
        let q = monoid(&[-3, 2]);
        for n in 1..=12 {
            assert_eq!(q.power_membership(n).unwrap(), Membership::No);
        }
        assert!(g.power_membership(0).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(
            monoid(&[-1, -1, 1]).sigma(),
            SigmaResult::Finite {
                sigma: 2,
                witness: p(&[1, 1])
            }
        );
        assert_eq!(monoid(&[-2, 2, -2, 1]).sigma().finite(), Some(4));
        assert_eq!(
            monoid(&[-2, 0, 3]).sigma(),
            SigmaResult::Infinite {
                reason: Hypothesis::AlphaBelowOne
            }
        );
    }

    #[test]
    fn atomicity_examples() {
        let a = monoid(&[-1, 1, 1]).atomicity();
        assert_eq!(a.value, Tri::No);
        assert_eq!(
            a.certificate,
            Some(Certificate::AntimatterWitness {
                coeffs: p(&[0, 1, 1])
            })
        );
        let b = monoid(&[-2, 1, 1, 1]).atomicity();
        assert!(matches!(
            b.certificate,
            Some(Certificate::Axiom {
                hypothesis: Hypothesis::ConstantTermNotUnit,
                ..
            })
        ));
        let c = monoid(&[1, -3, 1]).atomicity();
        assert!(matches!(
            c.certificate,
            Some(Certificate::Axiom {
                hypothesis: Hypothesis::AlphaAtLeastOne,
                ..
            })
        ));
    }

    #[test]
    fn accp_examples() {
        let two_thirds = monoid(&[-2, 3]).accp_status();
        assert_eq!(
            two_thirds.certificate,
            Some(Certificate::NecessaryCondition {
                k: 1,
                witness: p(&[0, 1])
            })
        );
        let cubic = monoid(&[-2, 1, 1, 1]);
        assert!(matches!(
            cubic.accp_status().certificate,
            Some(Certificate::Chain(ChainWitness::Multiplier { .. }))
        ));
        assert_eq!(cubic.necessary_condition_scan().unwrap().0.k, None);
        assert_eq!(monoid(&[-1, -1, 1]).accp_status().value, Tri::Yes);
    }

    #[test]
    fn fgm_examples() {
        assert_eq!(monoid(&[-3, 2]).fgm_status().value, Tri::No);
        let d = monoid(&[-2, 2, 1]).fgm_status();
        assert_eq!(d.value, Tri::No);
        assert!(matches!(
            d.certificate,
            Some(Certificate::QuickReject {
                hypothesis: Hypothesis::RankTwoNotMonomial,
                ..
            })
        ));
        assert_eq!(
            monoid(&[-1, -1, 1]).fgm_refine_quadratic().unwrap().value,
            Tri::Yes
        );
        // x^2 − 3x + 1 has two positive roots, outside the refinement's scope
        assert!(matches!(
            monoid(&[1, -3, 1]).fgm_refine_quadratic(),
            Err(Error::NotApplicable(_))
        ));
        assert_eq!(monoid(&[1, -3, 1]).fgm_status().value, Tri::No);
        let f = monoid(&[-2, 2, -2, 1]).fgm_status();
        assert_eq!(f.value, Tri::Yes);
    }

    #[test]
    fn ufm_and_ohfm_examples() {
        assert_eq!(monoid(&[-1, -1, 1]).ufm_hfm_test().value, Tri::Yes);
        assert_eq!(monoid(&[-1, 1]).ufm_hfm_test().value, Tri::Yes);
        assert_eq!(monoid(&[-3, 2]).ufm_hfm_test().value, Tri::No);
        assert_eq!(monoid(&[-2, 2, -2, 1]).ohfm_status().value, Tri::Yes);
        let m = monoid(&[-2, -2, 4, -6, 1]);
        assert_eq!(m.sigma().finite(), Some(6));
        assert_eq!(m.ohfm_status().value, Tri::No);
        assert_eq!(monoid(&[-1, -1, 1]).ohfm_status().value, Tri::Yes);
    }

    #[test]
    fn atom_sets() {
        assert_eq!(
            monoid(&[-1, -1, 1]).atoms(),
            AtomSet::FinitePowers { up_to: 1 }
        );
        assert_eq!(monoid(&[-3, 2]).atoms(), AtomSet::AllPowers);
        assert_eq!(monoid(&[-1, 1, 1]).atoms(), AtomSet::Empty);
    }

    #[test]
    fn classify_examples() {
        let v = classify(&[-1, 1, 1]);
        assert_eq!(v.atomic, Tri::No);
        assert!(Property::ALL.iter().all(|&q| v.get(q) == Tri::No));
        assert_eq!(v.rank, 2);

        let v = classify(&[-2, 1, 1, 1]);
        assert_eq!(
            [v.atomic, v.accp, v.bfm, v.ffm, v.fgm, v.ufm, v.hfm, v.ohfm],
            [
                Tri::Yes,
                Tri::No,
                Tri::No,
                Tri::No,
                Tri::No,
                Tri::No,
                Tri::No,
                Tri::No
            ]
        );

        let v = classify(&[-1, -1, 1]);
        assert!(Property::ALL.iter().all(|&q| v.get(q) == Tri::Yes));
        assert_eq!(v.atoms, AtomSet::FinitePowers { up_to: 1 });

        let v = classify(&[-2, 2, 1]);
        assert_eq!(
            [v.atomic, v.fgm, v.accp, v.ufm, v.ohfm],
            [Tri::Yes, Tri::No, Tri::No, Tri::No, Tri::No]
        );
    }

    #[test]
    fn verdict_json_round_trip() {
        let v = classify(&[-2, 1, 1, 1]);
        let s = serde_json::to_string(&v).unwrap();
        let back: Verdict = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn isomorphism_examples() {
        let caps = SearchCaps::default;
        let lo = ValuationMonoid::at_root(
            make_algebraic(&p(&[1, -3, 1]).to_rat(), RootChoice::Smallest).unwrap(),
            caps(),
        )
        .unwrap();
        let hi = monoid(&[1, -3, 1]);
        assert!(isomorphic(&lo, &hi).unwrap());
        assert!(!isomorphic(&monoid(&[-3, 2]), &monoid(&[-5, 2])).unwrap());
        assert!(isomorphic(&monoid(&[-2, 1]), &monoid(&[-3, 1])).unwrap());
        assert_eq!(
            isomorphic(&monoid(&[-1, 1, 1]), &hi),
            Err(Error::RequiresAtomic)
        );
    }

    #[test]
    fn group_check_examples() {
        assert_eq!(
            group_check(&p(&[1, 1, 1]), 64).unwrap(),
            GroupCheck::IsGroup {
                phi: IntPoly::one(),
                product: p(&[1, 1, 1])
            }
        );
        assert_eq!(
            group_check(&p(&[1, -1, 1]), 64).unwrap(),
            GroupCheck::IsGroup {
                phi: p(&[1, 1]),
                product: p(&[1, 0, 0, 1])
            }
        );
        assert_eq!(
            group_check(&p(&[-1, -1, 1]), 64).unwrap(),
            GroupCheck::HasPositiveRoot
        );
    }
}
