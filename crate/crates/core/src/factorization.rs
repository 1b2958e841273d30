//! Factorization sets and length sets of individual elements.
//!
//! A factorization is a polynomial `z ∈ N0[x]` supported on atom exponents with
//! `z(α)` equal to the element; its length is `z(1)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebraic::QAlphaElem;
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::search::{self, Budget, Mode};
use crate::valuation::{AtomSet, ValuationMonoid};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Factorization {
    pub z: IntPoly,
    pub length: u64,
}

impl Factorization {
    fn new(z: IntPoly) -> Self {
        let length = z.coeff_sum().to_u64().expect("length fits in u64");
        Factorization { z, length }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationSet {
    /// Sorted by `z`.
    pub items: Vec<Factorization>,
    /// True only when every factorization is provably listed.
    pub complete: bool,
    /// Largest atom exponent allowed when the search had to be truncated.
    pub exponent_cap_used: Option<usize>,
}

impl FactorizationSet {
    pub fn lengths(&self) -> BTreeSet<u64> {
        self.items.iter().map(|f| f.length).collect()
    }

    /// Factorizations using the atom `α^n`.
    pub fn containing_exponent(&self, n: usize) -> Vec<&Factorization> {
        self.items
            .iter()
            .filter(|f| f.z.support().contains(&n))
            .collect()
    }
}

/// Exponents `j` with `α^j <= x(α)`; these are all the atoms that can occur when α > 1.
fn exponents_below(m: &ValuationMonoid, target: &QAlphaElem) -> Vec<usize> {
    let mut out = Vec::new();
    let mut power = QAlphaElem::one(m.alpha());
    while power.compare(target).expect("same field") != Ordering::Greater {
        out.push(out.len());
        power = power.mul_by_power(1);
    }
    out
}

/// All factorizations of the element `x(α)`, `x ∈ N0[x]`.
pub fn enumerate(
    m: &ValuationMonoid,
    x: &IntPoly,
    exponent_cap: usize,
) -> Result<FactorizationSet> {
    enumerate_with_atoms(m, &m.atoms(), x, exponent_cap)
}

/// Like [`enumerate`] with the atom set supplied by the caller.
pub fn enumerate_with_atoms(
    m: &ValuationMonoid,
    atoms: &AtomSet,
    x: &IntPoly,
    exponent_cap: usize,
) -> Result<FactorizationSet> {
    if !x.is_nonnegative() {
        return Err(Error::BadParams(format!("{x} has a negative coefficient")));
    }
    let target = m.elem(x);
    let above_one = m.alpha().cmp_one() != Ordering::Less;
    let (exps, capped): (Vec<usize>, _) = match (atoms, above_one) {
        (AtomSet::Empty, _) => return Err(Error::NoFactorizations),
        (AtomSet::Unknown, _) => return Err(Error::RequiresAtoms),
        (AtomSet::FinitePowers { up_to }, _) => ((0..=*up_to).collect(), None),
        (AtomSet::AllPowers, true) => (exponents_below(m, &target), None),
        (AtomSet::AllPowers, false) => ((0..=exponent_cap).collect(), Some(exponent_cap)),
    };
    if x.is_zero() {
        return Ok(FactorizationSet {
            items: vec![Factorization::new(IntPoly::zero())],
            complete: above_one,
            exponent_cap_used: capped,
        });
    }
    let mut budget = Budget::new(m.caps().node_budget);
    let out = search::solve(m.alpha(), &target, &exps, None, Mode::All, &mut budget);
    let mut items: Vec<Factorization> = out.solutions.into_iter().map(Factorization::new).collect();
    items.sort();
    items.dedup();
    Ok(FactorizationSet {
        items,
        complete: above_one && !out.exhausted,
        exponent_cap_used: capped,
    })
}

/// `L(x)` together with the completeness flag of the underlying enumeration.
pub fn length_set(
    m: &ValuationMonoid,
    x: &IntPoly,
    exponent_cap: usize,
) -> Result<(BTreeSet<u64>, bool)> {
    let set = enumerate(m, x, exponent_cap)?;
    Ok((set.lengths(), set.complete))
}

/// Whether sorted lengths have a common difference; a singleton has none.
pub fn is_arith_progression(lengths: &BTreeSet<u64>) -> Result<(bool, Option<u64>)> {
    let v: Vec<u64> = lengths.iter().copied().collect();
    match v.len() {
        0 => Err(Error::EmptyInput),
        1 => Ok((true, None)),
        _ => {
            let d = v[1] - v[0];
            if v.windows(2).all(|w| w[1] - w[0] == d) {
                Ok((true, Some(d)))
            } else {
                Ok((false, None))
            }
        }
    }
}

/// Sum of `z(α)` over a factorization, for replay.
pub fn evaluate(m: &ValuationMonoid, f: &Factorization) -> QAlphaElem {
    m.elem(&f.z)
}
