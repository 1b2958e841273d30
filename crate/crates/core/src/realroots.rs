//! Sturm chains, exact positive-root counting and isolation, and
//! `(1+x)^N` sign multipliers.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{rat_sign, sign_of, IntPoly};

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    #[serde(
        serialize_with = "crate::poly::serde_num::ser_rat",
        deserialize_with = "crate::poly::serde_num::de_rat"
    )]
    pub lo: BigRational,
    #[serde(
        serialize_with = "crate::poly::serde_num::ser_rat",
        deserialize_with = "crate::poly::serde_num::de_rat"
    )]
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        Interval { lo, hi }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Self {
        Interval::new(
            BigRational::from_integer(lo.into()),
            BigRational::from_integer(hi.into()),
        )
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Whether `other` lies inside `self`.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.lo.to_f64().unwrap_or(f64::NAN),
            self.hi.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// Signed pseudo-remainder sequence starting with `f, f'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    pub polys: Vec<IntPoly>,
}

/// Point at which sign variations of a chain are evaluated.
enum At<'a> {
    Value(&'a BigRational),
    PosInf,
}

impl SturmChain {
    fn sign_variations(&self, at: At<'_>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.polys {
            let s = match at {
                At::Value(x) => rat_sign(&p.eval(x)),
                At::PosInf => p.leading().map(sign_of).unwrap_or(0),
            };
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots of the chain's first polynomial in `(a, b]`.
    pub fn distinct_roots_between(&self, a: &BigRational, b: &BigRational) -> usize {
        self.sign_variations(At::Value(a))
            .saturating_sub(self.sign_variations(At::Value(b)))
    }

    /// Distinct roots in `(a, +inf)`.
    pub fn distinct_roots_above(&self, a: &BigRational) -> usize {
        self.sign_variations(At::Value(a))
            .saturating_sub(self.sign_variations(At::PosInf))
    }
}

/// Pseudo-remainder of `a` by `b` with a positive multiplier `|lc(b)|^k`.
fn positive_prem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let bd = b.degree().expect("nonzero divisor");
    let lc = b.leading().unwrap().clone();
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    let Some(ad) = a.degree() else {
        return IntPoly::zero();
    };
    if ad < bd {
        return a.clone();
    }
    let steps = ad - bd + 1;
    for k in (0..steps).rev() {
        let top = rem[k + bd].clone();
        for c in rem.iter_mut() {
            *c *= &lc;
        }
        for (i, bc) in b.coeffs().iter().enumerate() {
            rem[k + i] -= &top * bc;
        }
    }
    rem.truncate(bd);
    // rem = lc^steps * a mod b; flip sign if lc^steps is negative
    let mut r = IntPoly::new(rem);
    if lc.is_negative() && steps % 2 == 1 {
        r = -r;
    }
    r
}

/// Builds the Sturm chain of `f`, each remainder divided by its (positive) content.
pub fn sturm_chain(f: &IntPoly) -> Result<SturmChain> {
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let mut polys = vec![f.clone()];
    let df = f.derivative();
    if df.is_zero() {
        return Ok(SturmChain { polys });
    }
    polys.push(df);
    loop {
        let n = polys.len();
        let r = positive_prem(&polys[n - 2], &polys[n - 1]);
        if r.is_zero() {
            break;
        }
        let c = r.content();
        let next = -IntPoly::new(r.coeffs().iter().map(|x| x / &c).collect());
        polys.push(next);
    }
    Ok(SturmChain { polys })
}

/// Where roots are counted.
#[derive(Clone, Debug)]
pub enum RootRange {
    PositiveAxis,
    Open(Interval),
}

/// Yun's squarefree decomposition over Q: `f = c * prod f_i^i`, returned as `(i, f_i)`
/// with each `f_i` primitive and nonconstant.
pub fn squarefree_decomposition(f: &IntPoly) -> Result<Vec<(usize, IntPoly)>> {
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let mut out = Vec::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    let fr = f.to_rat();
    let df = fr.derivative();
    let a0 = fr.gcd(&df);
    let mut b = fr.exact_div(&a0)?;
    let mut c = df.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((i, a.content_primitive()?.1));
        }
        b = b.exact_div(&a)?;
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// Squarefree part of `f` as a primitive integer polynomial.
pub fn squarefree_part(f: &IntPoly) -> Result<IntPoly> {
    let parts = squarefree_decomposition(f)?;
    Ok(parts
        .into_iter()
        .fold(IntPoly::one(), |acc, (_, g)| &acc * &g))
}

/// Number of real roots of `f` in the open range, counted with multiplicity.
pub fn count_roots(f: &IntPoly, range: &RootRange) -> Result<usize> {
    let parts = squarefree_decomposition(f)?;
    let mut total = 0;
    for (mult, g) in parts {
        let chain = sturm_chain(&g)?;
        let n = match range {
            RootRange::PositiveAxis => chain.distinct_roots_above(&BigRational::zero()),
            RootRange::Open(iv) => {
                let closed_right = chain.distinct_roots_between(&iv.lo, &iv.hi);
                if g.eval(&iv.hi).is_zero() {
                    closed_right - 1
                } else {
                    closed_right
                }
            }
        };
        total += mult * n;
    }
    Ok(total)
}

/// Positive roots with multiplicity.
pub fn count_positive_roots(f: &IntPoly) -> Result<usize> {
    count_roots(f, &RootRange::PositiveAxis)
}

/// Strict upper bound `1 + max|c_i| / |lead|` on the absolute value of every root.
pub fn cauchy_bound(f: &IntPoly) -> Result<BigRational> {
    let lead = f.leading().ok_or(Error::ZeroPoly)?.abs();
    let d = f.degree().unwrap();
    let m = f.coeffs()[..d]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    Ok(BigRational::one() + BigRational::new(m, lead))
}

/// A point strictly inside `(lo, hi)` that is not a root of `g`.
fn split_point(g: &IntPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let half = BigRational::new(1.into(), 2.into());
    let w = hi - lo;
    let mut t = half.clone();
    let mut step = half.clone();
    loop {
        let x = lo + &w * &t;
        if !g.eval(&x).is_zero() {
            return x;
        }
        step *= &half;
        t = &half + &step;
    }
}

/// Disjoint isolating intervals for the distinct positive roots of `f`, sorted.
/// Endpoints are never roots; the squarefree part changes sign across each interval.
pub fn isolate_positive_roots(f: &IntPoly) -> Result<Vec<Interval>> {
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let g = squarefree_part(&f.strip_x())?;
    if g.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let chain = sturm_chain(&g)?;
    let zero = BigRational::zero();
    let bound = cauchy_bound(&g)?;
    let mut out = Vec::new();
    let mut stack = vec![(zero, bound)];
    while let Some((lo, hi)) = stack.pop() {
        match chain.distinct_roots_between(&lo, &hi) {
            0 => {}
            1 => out.push(Interval::new(lo, hi)),
            _ => {
                let mid = split_point(&g, &lo, &hi);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out.into_iter().map(|iv| unit_cell(&g, iv)).collect())
}

/// Bisects until the interval no longer straddles an integer, unless the root is that integer.
fn unit_cell(g: &IntPoly, mut iv: Interval) -> Interval {
    loop {
        let k = BigRational::from_integer(iv.lo.floor().to_integer() + 1);
        if k >= iv.hi || g.eval(&k).is_zero() {
            return iv;
        }
        let slo = rat_sign(&g.eval(&iv.lo));
        if rat_sign(&g.eval(&k)) == slo {
            iv.lo = k;
        } else {
            iv.hi = k;
        }
    }
}

/// Shrinks an isolating interval of a simple root by bisection until its width is at most `width`.
pub fn refine(f: &IntPoly, iv: &Interval, width: &BigRational) -> Result<Interval> {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let slo = rat_sign(&f.eval(&lo));
    let shi = rat_sign(&f.eval(&hi));
    if slo == 0 || shi == 0 || slo == shi {
        return Err(Error::NotIsolating);
    }
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        let s = rat_sign(&f.eval(&mid));
        if s == 0 {
            let quarter = BigRational::new(1.into(), 4.into());
            let delta = width.clone().min(&hi - &lo) * quarter;
            return Ok(Interval::new(&mid - &delta, &mid + &delta));
        }
        if s == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Interval::new(lo, hi))
}

/// Sign-change bisection with a dyadic width target `2^-bits`, for hot paths.
pub(crate) fn refine_bits(f: &IntPoly, iv: &Interval, bits: u32) -> Interval {
    let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
    refine(f, iv, &width).unwrap_or_else(|_| iv.clone())
}

/// Least `(1+x)^N`, `N <= n_max`, whose product with `f` has as many sign variations
/// as `f` has positive roots.
pub fn curtiss_multiplier(f: &IntPoly, n_max: u32) -> Result<IntPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let target = count_positive_roots(f)?;
    let step = IntPoly::from_i64(&[1, 1]);
    let mut prod = f.clone();
    for n in 0..=n_max {
        if prod.sign_variations() == target {
            return Ok(IntPoly::one_plus_x_pow(n));
        }
        prod = &prod * &step;
    }
    Err(Error::CapExhausted(n_max))
}

/// Whether `f` has a sign change across `iv` with nonzero endpoint values.
pub fn is_isolating(f: &IntPoly, iv: &Interval) -> bool {
    let a = rat_sign(&f.eval(&iv.lo));
    let b = rat_sign(&f.eval(&iv.hi));
    a != 0 && b != 0 && a != b
}
