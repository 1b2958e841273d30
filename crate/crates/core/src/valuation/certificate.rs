//! Replayable witnesses attached to determined verdict fields.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{power_membership_with, Membership, Property, Tri};
use crate::algebraic::{elem_from_intpoly, AlgebraicNumber, QAlphaElem};
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::realroots;
use crate::search::Budget;

/// Node allowance for re-running exact membership searches during replay.
pub(crate) const REPLAY_BUDGET: u64 = 5_000_000;

/// Number of chain steps re-verified on replay.
pub const CHAIN_HORIZON: usize = 10;

/// A checkable fact about α or its minimal polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    AlphaAtLeastOne,
    AlphaBelowOne,
    ConstantTermNotUnit,
    MultiplePositiveRoots,
    NonIntegralMinPoly,
    /// Degree at most 2, integral minimal polynomial, one positive root, `p ≠ x^d`.
    RankTwoNotMonomial,
}

impl Hypothesis {
    pub fn holds(&self, alpha: &AlgebraicNumber) -> bool {
        let m = alpha.min_poly();
        let d = alpha.degree();
        match self {
            Hypothesis::AlphaAtLeastOne => alpha.cmp_one() != Ordering::Less,
            Hypothesis::AlphaBelowOne => alpha.cmp_one() == Ordering::Less,
            Hypothesis::ConstantTermNotUnit => !m.coeff(0).abs().is_one(),
            Hypothesis::MultiplePositiveRoots => {
                realroots::count_positive_roots(m).is_ok_and(|n| n >= 2)
            }
            Hypothesis::NonIntegralMinPoly => !m.leading().is_some_and(One::is_one),
            Hypothesis::RankTwoNotMonomial => {
                d <= 2
                    && m.leading().is_some_and(One::is_one)
                    && (realroots::count_positive_roots(m) == Ok(1))
                    && alpha.minimal_pair().p != IntPoly::x_pow(d)
            }
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Hypothesis::AlphaAtLeastOne => "α ≥ 1",
            Hypothesis::AlphaBelowOne => "α < 1",
            Hypothesis::ConstantTermNotUnit => "|m(0)| ≠ 1 for the primitive minimal polynomial",
            Hypothesis::MultiplePositiveRoots => {
                "the minimal polynomial has at least two positive roots"
            }
            Hypothesis::NonIntegralMinPoly => "the monic minimal polynomial is not in Z[x]",
            Hypothesis::RankTwoNotMonomial => "rank at most 2 and p ≠ x^d",
        }
    }
}

/// Chain of principal ideals that never stabilizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum ChainWitness {
    /// `f = φ·m` has one sign variation; `k` is the last index with a negative partial sum.
    Multiplier { phi: IntPoly, f: IntPoly, k: usize },
    /// `x_n = base(α)·α^{n·step}` with `x_n − x_{n+1} = diff(α)·α^{n·step}`.
    Shifted {
        base: IntPoly,
        step: usize,
        diff: IntPoly,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `lhs(α) = rhs(α)` with both sides in N0[x].
    AtomRelation {
        lhs: IntPoly,
        rhs: IntPoly,
    },
    /// `1 = coeffs(α)` with zero constant term, so 1 is not an atom.
    AntimatterWitness {
        coeffs: IntPoly,
    },
    Chain(ChainWitness),
    /// `p − x^k q ∈ N0[x]` for α < 1.
    NecessaryCondition {
        k: usize,
        witness: IntPoly,
    },
    /// The minimal pair, and whether `p` is the monomial `x^d`.
    MinimalPair {
        p: IntPoly,
        q: IntPoly,
        monomial: bool,
    },
    /// `α^σ = witness(α)` with support below σ, and no smaller power is such a combination.
    Sigma {
        sigma: usize,
        witness: IntPoly,
    },
    /// `α^n` is not a nonnegative combination of lower powers.
    NonMembership {
        n: usize,
    },
    QuickReject {
        hypothesis: Hypothesis,
        result: String,
    },
    Axiom {
        hypothesis: Hypothesis,
        result: String,
    },
    /// `product = φ·m ∈ N0[x]` with positive constant term.
    Group {
        phi: IntPoly,
        product: IntPoly,
    },
    /// Follows from another field of the same verdict.
    Implied {
        premise: Property,
        value: Tri,
    },
}

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Replay(msg.into()))
}

fn elem(alpha: &Arc<AlgebraicNumber>, f: &IntPoly) -> QAlphaElem {
    elem_from_intpoly(alpha, f)
}

/// `x_n` for the one-variation construction, as `(lhs, rhs)` with `lhs(α) = rhs(α)` and
/// `rhs ∈ N0[x]`.
pub(crate) fn multiplier_chain_term(f: &IntPoly, k: usize, n: usize) -> (IntPoly, IntPoly) {
    let s = f.degree().expect("nonzero");
    let c = f.coeffs();
    let f1 = f.coeff_sum();
    let partial: Vec<BigInt> = c
        .iter()
        .scan(BigInt::zero(), |acc, x| {
            *acc += x;
            Some(acc.clone())
        })
        .collect();
    let mut lhs = vec![BigInt::zero(); n + 1];
    for j in 0..=k {
        lhs[j] = -partial[j].clone();
    }
    for item in lhs.iter_mut().take(n + 1).skip(s) {
        *item -= &f1;
    }
    let mut rhs = vec![BigInt::zero(); n + s + 1];
    rhs[k + 1..s].clone_from_slice(&partial[k + 1..s]);
    for (j, item) in rhs.iter_mut().enumerate().take(n + s + 1).skip(n + 1) {
        let from = j - n;
        *item = c[from..].iter().sum();
    }
    (IntPoly::new(lhs), IntPoly::new(rhs))
}

impl ChainWitness {
    pub fn replay(&self, alpha: &Arc<AlgebraicNumber>) -> Result<()> {
        if alpha.cmp_one() != Ordering::Less {
            return fail("chain witnesses need α < 1");
        }
        match self {
            ChainWitness::Multiplier { phi, f, k } => {
                if !phi.is_nonnegative() || phi.coeff_sum() <= BigInt::zero() {
                    return fail("multiplier must lie in N0[x] with φ(1) > 0");
                }
                if &(phi * alpha.min_poly()) != f {
                    return fail("f ≠ φ·m");
                }
                if f.sign_variations() != 1 {
                    return fail("f must have exactly one sign variation");
                }
                let f1 = f.coeff_sum();
                if !f1.is_positive() {
                    return fail("f(1) must be positive");
                }
                let s = f.degree().unwrap();
                if *k + 1 > s {
                    return fail("split index out of range");
                }
                let mut partial = BigInt::zero();
                for (j, c) in f.coeffs().iter().enumerate().take(k + 2) {
                    partial += c;
                    let ok = if j <= *k {
                        partial.is_negative()
                    } else {
                        !partial.is_negative()
                    };
                    if !ok {
                        return fail("partial sums do not split at k");
                    }
                }
                let f1_elem = |n: usize| elem(alpha, &IntPoly::monomial(f1.clone(), n));
                let mut prev: Option<QAlphaElem> = None;
                for step in 1..=CHAIN_HORIZON + 1 {
                    let n = s + step;
                    let (lhs, rhs) = multiplier_chain_term(f, *k, n);
                    if !rhs.is_nonnegative() || rhs.is_zero() {
                        return fail(format!("x_{n} is not a nonzero element of N0[x]"));
                    }
                    let x_n = elem(alpha, &rhs);
                    if elem(alpha, &lhs) != x_n {
                        return fail(format!("x_{n} identity fails"));
                    }
                    if let Some(p) = prev {
                        // x_{n-1} − x_n = f(1) α^n
                        if p.sub(&x_n)? != f1_elem(n) {
                            return fail(format!("x_{} − x_{n} ≠ f(1)·α^{n}", n - 1));
                        }
                    }
                    prev = Some(x_n);
                }
                Ok(())
            }
            ChainWitness::Shifted { base, step, diff } => {
                if *step == 0 {
                    return fail("step must be positive");
                }
                if !base.is_nonnegative() || base.is_zero() {
                    return fail("base must be a nonzero element of N0[x]");
                }
                if !diff.is_nonnegative() || diff.is_zero() {
                    return fail("difference must be a nonzero element of N0[x]");
                }
                for n in 1..=CHAIN_HORIZON {
                    let x_n = elem(alpha, &base.shift(n * step));
                    let x_next = elem(alpha, &base.shift((n + 1) * step));
                    let d_n = elem(alpha, &diff.shift(n * step));
                    if x_n.sub(&x_next)? != d_n {
                        return fail(format!("x_{n} − x_{} ≠ diff·α^{}", n + 1, n * step));
                    }
                }
                Ok(())
            }
        }
    }
}

impl Certificate {
    /// Re-verifies the certificate against α. `Implied` is checked by the verdict.
    pub fn replay(&self, alpha: &Arc<AlgebraicNumber>) -> Result<()> {
        let m = alpha.min_poly();
        let d = alpha.degree();
        match self {
            Certificate::AtomRelation { lhs, rhs } => {
                if !lhs.is_nonnegative() || !rhs.is_nonnegative() {
                    return fail("relation sides must lie in N0[x]");
                }
                if elem(alpha, lhs) != elem(alpha, rhs) {
                    return fail("relation does not hold at α");
                }
                Ok(())
            }
            Certificate::AntimatterWitness { coeffs } => {
                if !coeffs.is_nonnegative() || !coeffs.coeff(0).is_zero() || coeffs.is_zero() {
                    return fail("witness must be a nonzero element of x·N0[x]");
                }
                if elem(alpha, coeffs) != QAlphaElem::one(alpha) {
                    return fail("witness does not evaluate to 1");
                }
                Ok(())
            }
            Certificate::Chain(w) => w.replay(alpha),
            Certificate::NecessaryCondition { k, witness } => {
                if alpha.cmp_one() != Ordering::Less {
                    return fail("necessary condition applies to α < 1");
                }
                let mp = alpha.minimal_pair();
                if &(&mp.p - &mp.q.shift(*k)) != witness {
                    return fail("witness ≠ p − x^k q");
                }
                if !witness.is_nonnegative() {
                    return fail("p − x^k q has a negative coefficient");
                }
                Ok(())
            }
            Certificate::MinimalPair { p, q, monomial } => {
                let mp = alpha.minimal_pair();
                if &mp.p != p || &mp.q != q {
                    return fail("minimal pair mismatch");
                }
                if !p.support().is_disjoint(&q.support()) || &(p - q) != m {
                    return fail("minimal pair does not split the minimal polynomial");
                }
                if (*p == IntPoly::x_pow(d)) != *monomial {
                    return fail("monomial flag mismatch");
                }
                Ok(())
            }
            Certificate::Sigma { sigma, witness } => {
                if !witness.is_nonnegative() || witness.degree().is_some_and(|w| w >= *sigma) {
                    return fail("witness must lie in N0[x] with degree below σ");
                }
                if elem(alpha, witness) != elem(alpha, &IntPoly::x_pow(*sigma)) {
                    return fail("witness does not evaluate to α^σ");
                }
                let mut budget = Budget::new(REPLAY_BUDGET);
                for n in 1..*sigma {
                    match power_membership_with(alpha, n, &mut budget) {
                        Membership::No => {}
                        Membership::Yes(_) => return fail(format!("α^{n} already lies below σ")),
                        Membership::Undetermined => {
                            return fail(format!("replay budget exhausted at n = {n}"))
                        }
                    }
                }
                Ok(())
            }
            Certificate::NonMembership { n } => {
                let mut budget = Budget::new(REPLAY_BUDGET);
                match power_membership_with(alpha, *n, &mut budget) {
                    Membership::No => Ok(()),
                    Membership::Yes(_) => fail(format!("α^{n} is a combination of lower powers")),
                    Membership::Undetermined => fail("replay budget exhausted"),
                }
            }
            Certificate::QuickReject { hypothesis, .. } | Certificate::Axiom { hypothesis, .. } => {
                if hypothesis.holds(alpha) {
                    Ok(())
                } else {
                    fail(format!("hypothesis fails: {}", hypothesis.describe()))
                }
            }
            Certificate::Group { phi, product } => replay_group(m, phi, product),
            Certificate::Implied { .. } => Ok(()),
        }
    }
}

pub(crate) fn replay_group(m: &IntPoly, phi: &IntPoly, product: &IntPoly) -> Result<()> {
    if &(phi * m) != product {
        return fail("product ≠ φ·m");
    }
    if !product.is_nonnegative() || !product.coeff(0).is_positive() {
        return fail("product must lie in N0[x] with positive constant term");
    }
    Ok(())
}

/// `p(α)` written with superscript exponents, e.g. `α² + α`.
pub fn fmt_alpha(p: &IntPoly) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let text = p.to_string();
    let mut out = String::with_capacity(text.len());
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c != 'x' {
            out.push(c);
            continue;
        }
        out.push('α');
        if chars.peek() == Some(&'^') {
            chars.next();
            while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                out.push(SUP[d as usize]);
                chars.next();
            }
        }
    }
    out
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::AtomRelation { lhs, rhs } => {
                write!(f, "{} = {}", fmt_alpha(lhs), fmt_alpha(rhs))
            }
            Certificate::AntimatterWitness { coeffs } => write!(f, "1 = {}", fmt_alpha(coeffs)),
            Certificate::Chain(ChainWitness::Multiplier { phi, f: g, k }) => write!(
                f,
                "chain from f = ({phi})·m = {g}, split after index {k}; x_n − x_(n+1) = {}·α^(n+1)",
                g.coeff_sum()
            ),
            Certificate::Chain(ChainWitness::Shifted { base, step, diff }) => write!(
                f,
                "chain x_n = ({})·α^({step}n), x_n − x_(n+1) = ({})·α^({step}n)",
                fmt_alpha(base),
                fmt_alpha(diff)
            ),
            Certificate::NecessaryCondition { k, witness } => {
                write!(f, "p − x^{k}·q = {witness} ∈ N0[x]")
            }
            Certificate::MinimalPair { p, q, monomial } => {
                let rel = if *monomial { "=" } else { "≠" };
                write!(f, "minimal pair p = {p}, q = {q}; p {rel} x^d")
            }
            Certificate::Sigma { sigma, witness } => {
                write!(
                    f,
                    "σ = {sigma}: {} = {}",
                    fmt_alpha(&IntPoly::x_pow(*sigma)),
                    fmt_alpha(witness)
                )
            }
            Certificate::NonMembership { n } => {
                write!(
                    f,
                    "{} is not a combination of lower powers",
                    fmt_alpha(&IntPoly::x_pow(*n))
                )
            }
            Certificate::QuickReject { hypothesis, result }
            | Certificate::Axiom { hypothesis, result } => {
                write!(f, "{}; {result}", hypothesis.describe())
            }
            Certificate::Group { phi, product } => write!(f, "φ = {phi}, φ·m = {product}"),
            Certificate::Implied { premise, value } => write!(f, "implied by {premise} = {value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::{from_irreducible, RootChoice};

    fn alpha(c: &[i64]) -> Arc<AlgebraicNumber> {
        Arc::new(from_irreducible(IntPoly::from_i64(c), RootChoice::Largest).unwrap())
    }

    #[test]
    fn shifted_chain_for_cubic_example() {
        let a = alpha(&[-2, 1, 1, 1]);
        let w = ChainWitness::Shifted {
            base: IntPoly::from_i64(&[3, 2, 1]),
            step: 1,
            diff: IntPoly::one(),
        };
        w.replay(&a).unwrap();
        let bad = ChainWitness::Shifted {
            base: IntPoly::from_i64(&[3, 2, 1]),
            step: 1,
            diff: IntPoly::from_i64(&[2]),
        };
        assert!(bad.replay(&a).is_err());
    }

    #[test]
    fn multiplier_chain_terms_balance() {
        // m itself has one variation: x^3 + x^2 + x − 2
        let f = IntPoly::from_i64(&[-2, 1, 1, 1]);
        let (lhs, rhs) = multiplier_chain_term(&f, 1, 5);
        // f · (1 + x + … + x^5) = rhs − lhs
        let ones = IntPoly::from_i64(&[1; 6]);
        assert_eq!(&f * &ones, &rhs - &lhs);
        let w = ChainWitness::Multiplier {
            phi: IntPoly::one(),
            f: f.clone(),
            k: 1,
        };
        w.replay(&alpha(&[-2, 1, 1, 1])).unwrap();
        // partial sums are −2, −1, 0, 1, so the split is after index 1
        let off = ChainWitness::Multiplier {
            phi: IntPoly::one(),
            f,
            k: 0,
        };
        assert!(off.replay(&alpha(&[-2, 1, 1, 1])).is_err());
    }

    #[test]
    fn antimatter_witness_replays() {
        let a = alpha(&[-1, 1, 1]);
        let ok = Certificate::AntimatterWitness {
            coeffs: IntPoly::from_i64(&[0, 1, 1]),
        };
        ok.replay(&a).unwrap();
        let bad = Certificate::AntimatterWitness {
            coeffs: IntPoly::from_i64(&[0, 2, 1]),
        };
        assert!(bad.replay(&a).is_err());
    }

    #[test]
    fn superscripts() {
        assert_eq!(fmt_alpha(&IntPoly::from_i64(&[0, 1, 1])), "α² + α");
        assert_eq!(fmt_alpha(&IntPoly::x_pow(12)), "α¹²");
        assert_eq!(fmt_alpha(&IntPoly::from_i64(&[3, 2])), "2α + 3");
    }

    #[test]
    fn hypotheses() {
        let a = alpha(&[-2, 1, 1, 1]);
        assert!(Hypothesis::ConstantTermNotUnit.holds(&a));
        assert!(Hypothesis::AlphaBelowOne.holds(&a));
        assert!(!Hypothesis::MultiplePositiveRoots.holds(&a));
        let b = alpha(&[-2, 2, 1]);
        assert!(Hypothesis::RankTwoNotMonomial.holds(&b));
        let g = alpha(&[-1, -1, 1]);
        assert!(!Hypothesis::RankTwoNotMonomial.holds(&g));
    }
}
