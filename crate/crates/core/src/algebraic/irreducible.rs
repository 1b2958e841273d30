//! Irreducibility over Q for desk-scale integer polynomials.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

pub const MAX_IRREDUCIBLE_DEGREE: usize = 10;

const SMALL_PRIMES: [u64; 45] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199,
];

/// Which test settled an irreducibility question.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityProof {
    Linear,
    Eisenstein { prime: BigInt, reversed: bool },
    FactorDegrees { primes: Vec<u64> },
    Recombination { prime: u64, exponent: u32 },
}

/// True iff `f` is irreducible over Q. Accepts degree at most 10.
pub fn is_irreducible(f: &IntPoly) -> Result<bool> {
    Ok(irreducibility(f)?.is_some())
}

/// `Some(proof)` when `f` is irreducible, `None` when it factors.
pub fn irreducibility(f: &IntPoly) -> Result<Option<IrreducibilityProof>> {
    let d = f.degree().ok_or(Error::ZeroPoly)?;
    if d > MAX_IRREDUCIBLE_DEGREE {
        return Err(Error::UnsupportedDegree {
            degree: d,
            max: MAX_IRREDUCIBLE_DEGREE,
        });
    }
    let f = f.primitive_part();
    match d {
        0 => return Ok(None),
        1 => return Ok(Some(IrreducibilityProof::Linear)),
        _ => {}
    }
    if f.coeff(0).is_zero() {
        return Ok(None);
    }
    if let Some(proof) = eisenstein(&f) {
        return Ok(Some(proof));
    }
    if has_rational_root(&f) {
        return Ok(None);
    }
    let sqf = crate::realroots::squarefree_part(&f)?;
    if sqf.degree() != Some(d) {
        return Ok(None);
    }
    zassenhaus(&f)
}

/// Eisenstein at a prime dividing every non-leading coefficient, tried on `f` and its reversal.
pub fn eisenstein(f: &IntPoly) -> Option<IrreducibilityProof> {
    let d = f.degree()?;
    let rev = IntPoly::new(f.coeffs().iter().rev().cloned().collect());
    for (g, reversed) in [(f.clone(), false), (rev, true)] {
        if g.degree() != Some(d) {
            continue;
        }
        let gc = g.coeffs()[..d]
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        for p in prime_factors(&gc) {
            let lead_ok = !(g.leading().unwrap() % &p).is_zero();
            let const_ok = !(g.coeff(0) % (&p * &p)).is_zero();
            if lead_ok && const_ok {
                return Some(IrreducibilityProof::Eisenstein { prime: p, reversed });
            }
        }
    }
    None
}

/// Prime divisors by trial division; gives up (returns what it has) above 10^12.
fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() || n > BigInt::from(1_000_000_000_000u64) {
        return out;
    }
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            out.push(p.clone());
            while (&n % &p).is_zero() {
                n /= &p;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() || n > BigInt::from(1_000_000_000_000u64) {
        return None;
    }
    let r = n.sqrt();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = BigInt::one();
    while k <= r {
        if (&n % &k).is_zero() {
            let other = &n / &k;
            if other != k {
                large.push(other);
            }
            small.push(k.clone());
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Rational root test; false when the constant or leading coefficient is too large to factor.
fn has_rational_root(f: &IntPoly) -> bool {
    let (Some(nums), Some(dens)) = (divisors(&f.coeff(0)), divisors(f.leading().unwrap())) else {
        return false;
    };
    for a in &nums {
        for b in &dens {
            if !a.gcd(b).is_one() {
                continue;
            }
            for s in [a.clone(), -a.clone()] {
                let x = num_rational::BigRational::new(s, b.clone());
                if f.eval(&x).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

/// Degrees `k` for which some product of modular factors has degree `k`.
fn subset_degrees(degs: &[usize]) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0usize]);
    for &d in degs {
        let shifted: Vec<usize> = sums.iter().map(|s| s + d).collect();
        sums.extend(shifted);
    }
    sums
}

fn zassenhaus(f: &IntPoly) -> Result<Option<IrreducibilityProof>> {
    let d = f.degree().unwrap();
    let lead = f.leading().unwrap().clone();
    let mut allowed: BTreeSet<usize> = (0..=d).collect();
    let mut used = Vec::new();
    let mut best: Option<(u64, Vec<modp::Fp>)> = None;
    for &p in SMALL_PRIMES.iter() {
        if (&lead % p).is_zero() || !modp::is_good_prime(f, p) {
            continue;
        }
        let factors = modp::berlekamp(f, p);
        let degs: Vec<usize> = factors.iter().map(|g| g.len() - 1).collect();
        allowed = allowed
            .intersection(&subset_degrees(&degs))
            .copied()
            .collect();
        used.push(p);
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        if allowed.len() == 2 {
            return Ok(Some(IrreducibilityProof::FactorDegrees { primes: used }));
        }
        if used.len() >= 6 {
            break;
        }
    }
    let (p, factors) = best.expect("a good prime exists for squarefree input of degree <= 10");
    // bound on coefficients of lead/lc(g) * g for any factor g
    let norm2 = f.coeffs().iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = BigInt::from(2) * &lead * (BigInt::one() << d) * norm2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
        k += 1;
    }
    let lifted = modp::hensel_lift(f, &factors, p, k);
    let r = lifted.len();
    let degs: Vec<usize> = lifted.iter().map(|g| g.len() - 1).collect();
    for size in 1..=r / 2 {
        for subset in combinations(r, size) {
            let deg: usize = subset.iter().map(|&i| degs[i]).sum();
            if !allowed.contains(&deg) || deg == 0 || deg == d {
                continue;
            }
            let prod = subset.iter().fold(vec![lead.clone()], |acc, &i| {
                modp::mul_mod(&acc, &lifted[i], &m)
            });
            let cand = modp::symmetric(&prod, &m).primitive_part();
            if f.exact_div(&cand).is_ok() {
                return Ok(None);
            }
        }
    }
    Ok(Some(IrreducibilityProof::Recombination {
        prime: p,
        exponent: k,
    }))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn examples() {
        assert!(is_irreducible(&p(&[-1, 1, 1])).unwrap());
        assert!(!is_irreducible(&p(&[-1, 0, 1])).unwrap());
        assert!(is_irreducible(&p(&[-2, -2, 4, -6, 1])).unwrap());
    }

    #[test]
    fn eisenstein_detects_family_members() {
        assert!(matches!(
            eisenstein(&p(&[-2, -2, 4, -6, 1])),
            Some(IrreducibilityProof::Eisenstein { .. })
        ));
        assert!(eisenstein(&p(&[-1, 1, 1])).is_none());
    }

    #[test]
    fn products_without_rational_roots_are_caught() {
        // (x^2 + 1)(x^2 + x + 1): no rational roots
        let f = &p(&[1, 0, 1]) * &p(&[1, 1, 1]);
        assert!(!is_irreducible(&f).unwrap());
        // (x^2 - 2)(x^3 + x + 1)
        let f = &p(&[-2, 0, 1]) * &p(&[1, 1, 0, 1]);
        assert!(!is_irreducible(&f).unwrap());
        // (3x^2 + x - 5)(2x^3 - 7)
        let f = &p(&[-5, 1, 3]) * &p(&[-7, 0, 0, 2]);
        assert!(!is_irreducible(&f).unwrap());
        // (x^5 + x + 3)(x^5 - x^2 + 2)
        let f = &p(&[3, 1, 0, 0, 0, 1]) * &p(&[2, 0, -1, 0, 0, 1]);
        assert!(!is_irreducible(&f).unwrap());
    }

    #[test]
    fn irreducibles_that_split_mod_every_prime() {
        // x^4 + 1 and x^4 - 10x^2 + 1 factor modulo every prime
        assert!(is_irreducible(&p(&[1, 0, 0, 0, 1])).unwrap());
        assert!(is_irreducible(&p(&[1, 0, -10, 0, 1])).unwrap());
    }

    #[test]
    fn squares_and_constants() {
        assert!(!is_irreducible(&p(&[1, 2, 1])).unwrap());
        assert!(!is_irreducible(&p(&[5])).unwrap());
        assert!(!is_irreducible(&p(&[0, 1, 1])).unwrap());
        assert!(is_irreducible(&p(&[-3, 2])).unwrap());
    }

    #[test]
    fn degree_cap() {
        let f = IntPoly::x_pow(11) - IntPoly::from_i64(&[2]);
        assert_eq!(
            is_irreducible(&f),
            Err(Error::UnsupportedDegree {
                degree: 11,
                max: 10
            })
        );
    }
}
