//! Real algebraic numbers, their minimal pairs, and exact arithmetic in Q(α).

mod irreducible;
pub(crate) mod modp;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use irreducible::{
    eisenstein, irreducibility, is_irreducible, IrreducibilityProof, MAX_IRREDUCIBLE_DEGREE,
};

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatPoly};
use crate::realroots::{self, Interval};

/// Bits of precision kept in the working enclosure of α.
const WORK_BITS: u32 = 48;

/// Which positive root of the minimal polynomial to select.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootChoice {
    Largest,
    Smallest,
    /// Zero-based index among positive roots in increasing order.
    Index(usize),
}

/// A positive real root of an irreducible integer polynomial.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    min_poly: IntPoly,
    root_iv: Interval,
    fine_iv: Interval,
    index: usize,
    positive_roots: usize,
    vs_one: Ordering,
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.min_poly == other.min_poly && self.index == other.index
    }
}

impl Eq for AlgebraicNumber {}

impl AlgebraicNumber {
    /// Primitive minimal polynomial with positive leading coefficient.
    pub fn min_poly(&self) -> &IntPoly {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.min_poly.degree().expect("nonzero")
    }

    /// Isolating interval with nonroot endpoints.
    pub fn root_interval(&self) -> &Interval {
        &self.root_iv
    }

    /// Zero-based position among the positive roots, increasing.
    pub fn root_index(&self) -> usize {
        self.index
    }

    pub fn positive_root_count(&self) -> usize {
        self.positive_roots
    }

    pub fn is_largest_root(&self) -> bool {
        self.index + 1 == self.positive_roots
    }

    /// Ordering of α against 1.
    pub fn cmp_one(&self) -> Ordering {
        self.vs_one
    }

    /// Enclosure of width at most `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> Interval {
        if bits <= WORK_BITS {
            self.fine_iv.clone()
        } else {
            realroots::refine_bits(&self.min_poly, &self.fine_iv, bits)
        }
    }

    /// Decimal approximation for display.
    pub fn approx(&self) -> f64 {
        let (lo, hi) = self.fine_iv.to_f64();
        (lo + hi) / 2.0
    }

    pub fn minimal_pair(&self) -> MinimalPair {
        minimal_pair(&self.min_poly)
    }

    /// The same number with its root index pointing at the largest positive root.
    pub fn canonical(&self) -> AlgebraicNumber {
        if self.is_largest_root() {
            self.clone()
        } else {
            from_irreducible(self.min_poly.clone(), RootChoice::Largest)
                .expect("largest root exists")
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root #{} of {} in {} (≈ {:.6})",
            self.index,
            self.min_poly,
            self.root_iv,
            self.approx()
        )
    }
}

/// Validates `m`, normalizes it to a primitive integer polynomial, and selects a positive root.
pub fn make_algebraic(m: &RatPoly, which: RootChoice) -> Result<AlgebraicNumber> {
    let (_, prim) = m.content_primitive()?;
    match prim.degree() {
        Some(0) | None => return Err(Error::BadParams("constant polynomial".into())),
        _ => {}
    }
    if !is_irreducible(&prim)? {
        return Err(Error::NotIrreducible(prim.to_string()));
    }
    from_irreducible(prim, which)
}

/// Like [`make_algebraic`] for a polynomial already known to be irreducible and primitive.
pub fn from_irreducible(prim: IntPoly, which: RootChoice) -> Result<AlgebraicNumber> {
    let roots = realroots::isolate_positive_roots(&prim)?;
    if roots.is_empty() {
        return Err(Error::NoPositiveRoot(prim.to_string()));
    }
    let n = roots.len();
    let index = match which {
        RootChoice::Largest => n - 1,
        RootChoice::Smallest => 0,
        RootChoice::Index(k) if k < n => k,
        RootChoice::Index(k) => return Err(Error::RootIndex { index: k, count: n }),
    };
    let root_iv = roots[index].clone();
    let fine_iv = realroots::refine_bits(&prim, &root_iv, WORK_BITS);
    let one = BigRational::one();
    let vs_one = if prim.eval(&one).is_zero() {
        Ordering::Equal
    } else {
        let mut iv = fine_iv.clone();
        let mut bits = WORK_BITS;
        loop {
            if iv.hi < one {
                break Ordering::Less;
            }
            if iv.lo > one {
                break Ordering::Greater;
            }
            bits *= 2;
            iv = realroots::refine_bits(&prim, &iv, bits);
        }
    };
    Ok(AlgebraicNumber {
        min_poly: prim,
        root_iv,
        fine_iv,
        index,
        positive_roots: n,
        vs_one,
    })
}

/// The split `ℓ·m = p − q` into nonnegative parts with disjoint supports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalPair {
    #[serde(with = "bigint_str")]
    pub ell: BigInt,
    pub p: IntPoly,
    pub q: IntPoly,
}

impl MinimalPair {
    /// `p − q`, the primitive minimal polynomial.
    pub fn primitive(&self) -> IntPoly {
        &self.p - &self.q
    }
}

/// Minimal pair of a primitive minimal polynomial; depends only on the polynomial.
pub fn minimal_pair(prim: &IntPoly) -> MinimalPair {
    let (p, q) = prim.split_signs();
    MinimalPair {
        ell: prim.leading().cloned().unwrap_or_default(),
        p,
        q,
    }
}

pub(crate) mod bigint_str {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Element `Σ coords[j] α^j` of Q(α), `j < d`.
#[derive(Clone, Debug)]
pub struct QAlphaElem {
    coords: Vec<BigRational>,
    owner: Arc<AlgebraicNumber>,
}

impl PartialEq for QAlphaElem {
    fn eq(&self, other: &Self) -> bool {
        *self.owner == *other.owner && self.coords == other.coords
    }
}

impl Eq for QAlphaElem {}

impl QAlphaElem {
    pub fn zero(owner: &Arc<AlgebraicNumber>) -> Self {
        QAlphaElem {
            coords: vec![BigRational::zero(); owner.degree()],
            owner: owner.clone(),
        }
    }

    pub fn one(owner: &Arc<AlgebraicNumber>) -> Self {
        let mut e = Self::zero(owner);
        e.coords[0] = BigRational::one();
        e
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn owner(&self) -> &Arc<AlgebraicNumber> {
        &self.owner
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn check_owner(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.owner, &other.owner) || *self.owner == *other.owner {
            Ok(())
        } else {
            Err(Error::MixedField)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_owner(other)?;
        Ok(QAlphaElem {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
            owner: self.owner.clone(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_owner(other)?;
        Ok(QAlphaElem {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
            owner: self.owner.clone(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let k = BigRational::from_integer(k.clone());
        QAlphaElem {
            coords: self.coords.iter().map(|c| c * &k).collect(),
            owner: self.owner.clone(),
        }
    }

    /// Multiplication by `α^k`.
    pub fn mul_by_power(&self, k: usize) -> Self {
        let poly = RatPoly::new(self.coords.clone());
        let shifted = RatPoly::new(
            std::iter::repeat_n(BigRational::zero(), k)
                .chain(poly.coeffs().iter().cloned())
                .collect(),
        );
        reduce(&self.owner, &shifted)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_owner(other)?;
        let prod = &RatPoly::new(self.coords.clone()) * &RatPoly::new(other.coords.clone());
        Ok(reduce(&self.owner, &prod))
    }

    /// Exact sign via interval evaluation, refining the root enclosure until it is decisive.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let mut bits = WORK_BITS;
        let mut iv = self.owner.fine_iv.clone();
        loop {
            let (lo, hi) = eval_interval(&self.coords, &iv);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits *= 2;
            iv = realroots::refine_bits(&self.owner.min_poly, &iv, bits);
        }
    }

    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        Ok(match self.sub(other)?.sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        })
    }

    /// Whether every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for QAlphaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = RatPoly::new(self.coords.clone());
        write!(f, "{}", poly.to_string().replace('x', "α"))
    }
}

/// Bounds of `Σ c_j t^j` for `t` in a nonnegative interval.
pub(crate) fn eval_interval(coords: &[BigRational], iv: &Interval) -> (BigRational, BigRational) {
    let mut lo = BigRational::zero();
    let mut hi = BigRational::zero();
    let mut plo = BigRational::one();
    let mut phi = BigRational::one();
    for c in coords {
        if c.is_positive() {
            lo += c * &plo;
            hi += c * &phi;
        } else if c.is_negative() {
            lo += c * &phi;
            hi += c * &plo;
        }
        plo *= &iv.lo;
        phi *= &iv.hi;
    }
    (lo, hi)
}

fn reduce(owner: &Arc<AlgebraicNumber>, f: &RatPoly) -> QAlphaElem {
    let d = owner.degree();
    let (_, r) = f
        .div_rem(&owner.min_poly.to_rat())
        .expect("nonzero minimal polynomial");
    let mut coords: Vec<BigRational> = r.coeffs().to_vec();
    coords.resize(d, BigRational::zero());
    QAlphaElem {
        coords,
        owner: owner.clone(),
    }
}

/// `f(α)` reduced to the basis `1, α, …, α^{d−1}`.
pub fn elem_from_intpoly(owner: &Arc<AlgebraicNumber>, f: &IntPoly) -> QAlphaElem {
    reduce(owner, &f.to_rat())
}

/// Coordinates of `α^j` for `j = 0..count`, built incrementally.
pub(crate) fn power_table(owner: &Arc<AlgebraicNumber>, count: usize) -> Vec<QAlphaElem> {
    let mut out = Vec::with_capacity(count);
    let mut cur = QAlphaElem::one(owner);
    for _ in 0..count {
        let next = cur.mul_by_power(1);
        out.push(cur);
        cur = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn alg(c: &[i64], which: RootChoice) -> Arc<AlgebraicNumber> {
        Arc::new(make_algebraic(&p(c).to_rat(), which).unwrap())
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn make_examples() {
        let a = make_algebraic(
            &RatPoly::from_ratios(&[(-3, 2), (1, 1)]),
            RootChoice::Largest,
        )
        .unwrap();
        assert_eq!(a.min_poly(), &p(&[-3, 2]));
        assert!(a.root_interval().contains(&r(3, 2)));
        assert_eq!(a.cmp_one(), Ordering::Greater);

        let b = alg(&[1, -3, 1], RootChoice::Largest);
        assert!(b.root_interval().lo >= r(2, 1) && b.root_interval().hi <= r(3, 1));
        assert_eq!(b.positive_root_count(), 2);

        assert_eq!(
            make_algebraic(&p(&[1, 1, 1]).to_rat(), RootChoice::Largest),
            Err(Error::NoPositiveRoot("x^2 + x + 1".into()))
        );
        assert!(matches!(
            make_algebraic(&p(&[-1, 0, 1]).to_rat(), RootChoice::Largest),
            Err(Error::NotIrreducible(_))
        ));
        assert_eq!(
            make_algebraic(&p(&[1, -3, 1]).to_rat(), RootChoice::Index(2)),
            Err(Error::RootIndex { index: 2, count: 2 })
        );
    }

    #[test]
    fn minimal_pairs() {
        let mp = minimal_pair(&p(&[-1, 1, 1]));
        assert_eq!((mp.p, mp.q), (p(&[0, 1, 1]), p(&[1])));
        let mp = minimal_pair(&p(&[-2, 1, 1, 1]));
        assert_eq!((mp.p, mp.q), (p(&[0, 1, 1, 1]), p(&[2])));
        let mp = minimal_pair(&p(&[-7, 1]));
        assert_eq!((mp.p, mp.q, mp.ell), (p(&[0, 1]), p(&[7]), BigInt::one()));
        let mp = minimal_pair(&p(&[-5, 1, 3]));
        assert_eq!(mp.ell, BigInt::from(3));
    }

    #[test]
    fn reduction() {
        let g = alg(&[-1, -1, 1], RootChoice::Largest);
        let e = elem_from_intpoly(&g, &p(&[0, 0, 1]));
        assert_eq!(e.coords(), &[r(1, 1), r(1, 1)]);
        assert!(elem_from_intpoly(&g, &IntPoly::zero()).is_zero());

        let h = alg(&[-5, 1, 3], RootChoice::Largest);
        let e = elem_from_intpoly(&h, &p(&[0, 0, 1]));
        assert_eq!(e.coords(), &[r(5, 3), r(-1, 3)]);
    }

    #[test]
    fn arithmetic() {
        let g = alg(&[-1, -1, 1], RootChoice::Largest);
        let x = elem_from_intpoly(&g, &p(&[3, -2]));
        assert!(x.sub(&x).unwrap().is_zero());
        assert_eq!(
            QAlphaElem::one(&g).mul_by_power(2).coords(),
            &[r(1, 1), r(1, 1)]
        );
        assert!(x.scale(&BigInt::zero()).is_zero());
        let other = alg(&[-2, 0, 1], RootChoice::Largest);
        assert_eq!(x.add(&QAlphaElem::one(&other)), Err(Error::MixedField));
    }

    #[test]
    fn signs_and_comparisons() {
        let b = alg(&[1, -3, 1], RootChoice::Largest);
        let alpha_minus_one = elem_from_intpoly(&b, &p(&[-1, 1]));
        assert_eq!(alpha_minus_one.sign(), 1);

        let s = alg(&[-2, 2, 1], RootChoice::Largest);
        assert_eq!(elem_from_intpoly(&s, &p(&[-1, 1])).sign(), -1);
        assert_eq!(QAlphaElem::zero(&s).sign(), 0);

        let g = alg(&[-1, -1, 1], RootChoice::Largest);
        let a2 = elem_from_intpoly(&g, &p(&[0, 0, 1]));
        let a1 = elem_from_intpoly(&g, &p(&[0, 1]));
        assert_eq!(a2.compare(&a1).unwrap(), Ordering::Greater);
        assert_eq!(a1.compare(&a1).unwrap(), Ordering::Equal);
        let a2 = elem_from_intpoly(&s, &p(&[0, 0, 1]));
        let a1 = elem_from_intpoly(&s, &p(&[0, 1]));
        assert_eq!(a2.compare(&a1).unwrap(), Ordering::Less);
    }

    #[test]
    fn sign_of_tiny_differences() {
        // α = sqrt(1.001) sits just above 1
        let a = alg(&[-1001, 0, 1000], RootChoice::Largest);
        let d = elem_from_intpoly(&a, &p(&[-1, 1]));
        assert_eq!(d.sign(), 1);
        assert_eq!(d.mul(&d).unwrap().mul(&d).unwrap().sign(), 1);
    }

    #[test]
    fn conjugates_share_minimal_pair() {
        let lo = alg(&[1, -3, 1], RootChoice::Smallest);
        let hi = alg(&[1, -3, 1], RootChoice::Largest);
        assert_eq!(lo.minimal_pair(), hi.minimal_pair());
        assert_eq!(lo.cmp_one(), Ordering::Less);
        assert_eq!(hi.cmp_one(), Ordering::Greater);
        assert_eq!(lo.canonical(), *hi);
    }
}
