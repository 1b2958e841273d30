//! Bounded exact search for representations `T = Σ c_j α^j`, `c_j ∈ N0`.
//!
//! Exponents at or above the degree are explored depth first. The coefficients of the
//! basis exponents `0..d` are then forced by the coordinates and checked exactly.
//! Fixed-point enclosures of `α^j` prune branches whose residual must be negative.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebraic::{eval_interval, power_table, AlgebraicNumber, QAlphaElem};
use crate::poly::IntPoly;

const FIX_BITS: u32 = 64;
const ENCLOSURE_BITS: u32 = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    First,
    All,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Outcome {
    /// Each solution as the polynomial `Σ c_j x^j`.
    pub solutions: Vec<IntPoly>,
    /// Set when the node budget ran out before the search space was covered.
    pub exhausted: bool,
}

/// Remaining node allowance shared across related searches.
#[derive(Clone, Debug)]
pub(crate) struct Budget {
    pub remaining: u64,
}

impl Budget {
    pub fn new(nodes: u64) -> Self {
        Budget { remaining: nodes }
    }

    fn tick(&mut self) -> bool {
        if self.remaining == 0 {
            false
        } else {
            self.remaining -= 1;
            true
        }
    }
}

fn floor_fixed(x: &BigRational) -> BigInt {
    (x * BigRational::from_integer(BigInt::one() << FIX_BITS))
        .floor()
        .to_integer()
}

fn ceil_fixed(x: &BigRational) -> BigInt {
    (x * BigRational::from_integer(BigInt::one() << FIX_BITS))
        .ceil()
        .to_integer()
}

struct Free {
    exp: usize,
    lo: BigInt,
    hi: BigInt,
    scaled: Vec<BigInt>,
}

struct Ctx<'a> {
    d: usize,
    scale: BigInt,
    free: Vec<Free>,
    basis_allowed: Vec<bool>,
    height: Option<&'a BigInt>,
    /// `H · Σ` of upper enclosures of exponents not yet fixed, per depth.
    rest_max: Vec<Option<BigInt>>,
    mode: Mode,
    coeffs: Vec<BigInt>,
    max_exp: usize,
    out: Outcome,
}

/// Searches for `target = Σ_{j ∈ exponents} c_j α^j` with `c_j ∈ N0`, each `c_j <= height` if given.
pub(crate) fn solve(
    owner: &Arc<AlgebraicNumber>,
    target: &QAlphaElem,
    exponents: &[usize],
    height: Option<&BigInt>,
    mode: Mode,
    budget: &mut Budget,
) -> Outcome {
    let d = owner.degree();
    let max_exp = exponents.iter().copied().max().unwrap_or(0).max(d - 1);
    let powers = power_table(owner, max_exp + 1);
    let lead = owner.min_poly().leading().unwrap().clone();
    let den = target
        .coords()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scale = lead.pow((max_exp + 1).saturating_sub(d) as u32) * den;
    let to_scaled = |e: &QAlphaElem| -> Vec<BigInt> {
        e.coords()
            .iter()
            .map(|c| {
                let v = c * BigRational::from_integer(scale.clone());
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect()
    };

    let iv = owner.enclosure(ENCLOSURE_BITS);
    let (t_lo, t_hi) = eval_interval(target.coords(), &iv);
    let (t_lo, t_hi) = (floor_fixed(&t_lo), ceil_fixed(&t_hi));

    let mut plo = BigRational::one();
    let mut phi = BigRational::one();
    let mut bounds = Vec::with_capacity(max_exp + 1);
    for _ in 0..=max_exp {
        bounds.push((floor_fixed(&plo), ceil_fixed(&phi)));
        plo *= &iv.lo;
        phi *= &iv.hi;
    }

    let mut basis_allowed = vec![false; d];
    let mut free = Vec::new();
    for &e in exponents {
        if e < d {
            basis_allowed[e] = true;
        } else if !free.iter().any(|f: &Free| f.exp == e) {
            free.push(Free {
                exp: e,
                lo: bounds[e].0.clone(),
                hi: bounds[e].1.clone(),
                scaled: to_scaled(&powers[e]),
            });
        }
    }
    free.sort_by(|a, b| b.hi.cmp(&a.hi).then(b.exp.cmp(&a.exp)));

    let rest_max = match height {
        Some(h) => {
            let basis_sum: BigInt = (0..d)
                .filter(|&j| basis_allowed[j])
                .map(|j| bounds[j].1.clone())
                .sum();
            let mut acc = basis_sum;
            let mut v = vec![Some(&acc * h)];
            for f in free.iter().rev() {
                acc += &f.hi;
                v.push(Some(&acc * h));
            }
            v.reverse();
            v
        }
        None => vec![None; free.len() + 1],
    };

    let residual = to_scaled(target);
    let mut ctx = Ctx {
        d,
        scale: scale.clone(),
        free,
        basis_allowed,
        height,
        rest_max,
        mode,
        coeffs: vec![BigInt::zero(); max_exp + 1],
        max_exp,
        out: Outcome::default(),
    };
    dfs(&mut ctx, 0, t_lo, t_hi, residual, budget);
    ctx.out
}

/// Returns false when the search should stop.
fn dfs(
    ctx: &mut Ctx<'_>,
    k: usize,
    r_lo: BigInt,
    r_hi: BigInt,
    residual: Vec<BigInt>,
    budget: &mut Budget,
) -> bool {
    if !budget.tick() {
        ctx.out.exhausted = true;
        return false;
    }
    if r_hi.is_negative() {
        return true;
    }
    if let Some(max) = &ctx.rest_max[k] {
        if &r_lo > max {
            return true;
        }
    }
    if k == ctx.free.len() {
        leaf(ctx, &residual);
        return !(ctx.mode == Mode::First && !ctx.out.solutions.is_empty());
    }
    let (lo, hi) = (ctx.free[k].lo.clone(), ctx.free[k].hi.clone());
    let mut c_max = if lo.is_positive() {
        r_hi.div_floor(&lo)
    } else {
        match ctx.height {
            Some(h) => h.clone(),
            // enclosure too coarse to bound c; the branch is not covered
            None => {
                ctx.out.exhausted = true;
                return true;
            }
        }
    };
    if let Some(h) = ctx.height {
        c_max = c_max.min(h.clone());
    }
    let exp = ctx.free[k].exp;
    let scaled = ctx.free[k].scaled.clone();
    let mut c = c_max;
    let mut res: Vec<BigInt> = residual
        .iter()
        .zip(&scaled)
        .map(|(r, s)| r - &c * s)
        .collect();
    loop {
        ctx.coeffs[exp] = c.clone();
        let next_lo = &r_lo - &c * &hi;
        let next_hi = &r_hi - &c * &lo;
        if !dfs(ctx, k + 1, next_lo, next_hi, res.clone(), budget) {
            ctx.coeffs[exp] = BigInt::zero();
            return false;
        }
        if c.is_zero() {
            break;
        }
        c -= 1;
        for (r, s) in res.iter_mut().zip(&scaled) {
            *r += s;
        }
    }
    ctx.coeffs[exp] = BigInt::zero();
    true
}

fn leaf(ctx: &mut Ctx<'_>, residual: &[BigInt]) {
    let mut basis = Vec::with_capacity(ctx.d);
    for (j, r) in residual.iter().enumerate() {
        let (q, rem) = r.div_rem(&ctx.scale);
        if !rem.is_zero() || q.is_negative() {
            return;
        }
        if !q.is_zero() && !ctx.basis_allowed[j] {
            return;
        }
        if let Some(h) = ctx.height {
            if &q > h {
                return;
            }
        }
        basis.push(q);
    }
    let mut coeffs = ctx.coeffs.clone();
    coeffs.truncate(ctx.max_exp + 1);
    for (j, q) in basis.into_iter().enumerate() {
        coeffs[j] = q;
    }
    ctx.out.solutions.push(IntPoly::new(coeffs));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::{elem_from_intpoly, from_irreducible, RootChoice};

    fn owner(c: &[i64]) -> Arc<AlgebraicNumber> {
        Arc::new(from_irreducible(IntPoly::from_i64(c), RootChoice::Largest).unwrap())
    }

    #[test]
    fn golden_square_is_one_plus_alpha() {
        let a = owner(&[-1, -1, 1]);
        let t = elem_from_intpoly(&a, &IntPoly::x_pow(2));
        let out = solve(&a, &t, &[0, 1], None, Mode::All, &mut Budget::new(10_000));
        assert_eq!(out.solutions, vec![IntPoly::from_i64(&[1, 1])]);
        assert!(!out.exhausted);
    }

    #[test]
    fn three_halves_has_two_factorizations_of_three() {
        let a = owner(&[-3, 2]);
        let t = elem_from_intpoly(&a, &IntPoly::from_i64(&[3]));
        let out = solve(
            &a,
            &t,
            &[0, 1, 2],
            None,
            Mode::All,
            &mut Budget::new(10_000),
        );
        let mut sols = out.solutions;
        sols.sort();
        assert_eq!(
            sols,
            vec![IntPoly::from_i64(&[0, 2]), IntPoly::from_i64(&[3])]
        );
    }

    #[test]
    fn antimatter_witness_for_golden_conjugate() {
        // α = (√5 − 1)/2 satisfies 1 = α + α²
        let a = owner(&[-1, 1, 1]);
        let one = elem_from_intpoly(&a, &IntPoly::one());
        let h = BigInt::from(30);
        let out = solve(
            &a,
            &one,
            &[1, 2, 3, 4],
            Some(&h),
            Mode::First,
            &mut Budget::new(100_000),
        );
        let w = &out.solutions[0];
        assert!(w.coeff(0).is_zero());
        assert_eq!(elem_from_intpoly(&a, w), one);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let a = owner(&[-1, -1, 1]);
        let t = elem_from_intpoly(&a, &IntPoly::x_pow(9));
        let out = solve(
            &a,
            &t,
            &(0..9).collect::<Vec<_>>(),
            None,
            Mode::All,
            &mut Budget::new(5),
        );
        assert!(out.exhausted);
    }
}
