//! Polynomials over small prime fields: Berlekamp factorization and Hensel lifting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::poly::IntPoly;

/// Coefficients mod `p`, ascending, trimmed.
pub(crate) type Fp = Vec<u64>;

fn trim(v: &mut Fp) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn reduce(f: &IntPoly, p: u64) -> Fp {
    let pb = BigInt::from(p);
    let mut v: Fp = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
        .collect();
    trim(&mut v);
    v
}

fn sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    let mut out: Fp = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

fn mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

fn div_rem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return (Vec::new(), a.clone());
    }
    let inv = inv_mod(b[db], p);
    let mut rem = a.clone();
    let mut quot = vec![0u64; a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db] * inv % p;
        if c == 0 {
            continue;
        }
        for (i, &bc) in b.iter().enumerate() {
            rem[k + i] = (rem[k + i] + p - c * bc % p) % p;
        }
        quot[k] = c;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.iter().map(|c| c * inv % p).collect()
        }
        None => Vec::new(),
    }
}

fn gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

fn derivative(a: &Fp, p: u64) -> Fp {
    let mut out: Fp = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| (i as u64 % p) * c % p)
        .collect();
    trim(&mut out);
    out
}

/// `(g, s, t)` with `s a + t b = g` and `g` monic.
fn ext_gcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Fp, Fp) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = inv_mod(*r0.last().expect("nonzero gcd"), p);
    let scale = |v: &Fp| {
        let mut out: Fp = v.iter().map(|c| c * inv % p).collect();
        trim(&mut out);
        out
    };
    (scale(&r0), scale(&s0), scale(&t0))
}

/// Whether `f mod p` keeps its degree and stays squarefree.
pub(crate) fn is_good_prime(f: &IntPoly, p: u64) -> bool {
    let fp = reduce(f, p);
    if fp.len() != f.coeffs().len() {
        return false;
    }
    gcd(&fp, &derivative(&fp, p), p).len() == 1
}

/// Monic irreducible factors of a squarefree `f mod p` by Berlekamp's algorithm.
pub(crate) fn berlekamp(f: &IntPoly, p: u64) -> Vec<Fp> {
    let fp = monic(&reduce(f, p), p);
    let n = fp.len() - 1;
    if n <= 1 {
        return vec![fp];
    }
    // rows of Q - I: x^{ip} mod f
    let xp = powmod_x(p, &fp, p);
    let mut rows = Vec::with_capacity(n);
    let mut cur: Fp = vec![1];
    for i in 0..n {
        let mut row = vec![0u64; n];
        for (j, &c) in cur.iter().enumerate() {
            row[j] = c;
        }
        row[i] = (row[i] + p - 1) % p;
        rows.push(row);
        cur = div_rem(&mul(&cur, &xp, p), &fp, p).1;
    }
    let basis = left_nullspace(rows, p);
    let r = basis.len();
    let mut factors = vec![fp];
    for v in basis {
        if factors.len() == r {
            break;
        }
        let mut v = v;
        trim(&mut v);
        if v.len() <= 1 {
            continue;
        }
        let mut next = Vec::new();
        for u in factors {
            if u.len() <= 2 {
                next.push(u);
                continue;
            }
            let mut rest = u;
            for s in 0..p {
                if rest.len() <= 2 {
                    break;
                }
                let vs = sub(&v, &vec![s], p);
                let g = gcd(&rest, &vs, p);
                if g.len() > 1 && g.len() < rest.len() {
                    rest = div_rem(&rest, &g, p).0;
                    next.push(g);
                }
            }
            next.push(rest);
        }
        factors = next;
    }
    factors
}

/// `x^e mod f` over F_p.
fn powmod_x(e: u64, f: &Fp, p: u64) -> Fp {
    let mut acc: Fp = vec![1];
    let mut base = div_rem(&vec![0, 1], f, p).1;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = div_rem(&mul(&acc, &base, p), f, p).1;
        }
        base = div_rem(&mul(&base, &base, p), f, p).1;
        e >>= 1;
    }
    acc
}

/// Basis of `{v : v M = 0}` for a square matrix given by rows.
fn left_nullspace(rows: Vec<Vec<u64>>, p: u64) -> Vec<Fp> {
    let n = rows.len();
    // transpose so we solve M^T v = 0 by column reduction
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|j| (0..n).map(|i| rows[i][j]).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..n).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..n {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                let pivot = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - a[row][fc]) % p;
            }
            v
        })
        .collect()
}

/// Symmetric residue of every coefficient mod `m`.
pub(crate) fn symmetric(f: &[BigInt], m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn to_big(a: &Fp) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn big_mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out.iter().map(|c| c.mod_floor(m)).collect()
}

/// Lifts `f ≡ lc * g * h (mod p)`, `g, h` monic, to the modulus `p^k`.
fn hensel_pair(f_monic: &[BigInt], g: &Fp, h: &Fp, p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let pb = BigInt::from(p);
    let (_, s, t) = ext_gcd(g, h, p);
    let mut gl = to_big(g);
    let mut hl = to_big(h);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        let prod = big_mul_mod(&gl, &hl, &next);
        let n = f_monic.len().max(prod.len());
        let mut e: Fp = (0..n)
            .map(|i| {
                let fi = f_monic.get(i).cloned().unwrap_or_default();
                let pi = prod.get(i).cloned().unwrap_or_default();
                let d = (fi - pi).mod_floor(&next);
                debug_assert!((&d % &pj).is_zero());
                (d / &pj).to_u64().expect("digit fits")
            })
            .collect();
        trim(&mut e);
        let (q, r) = div_rem(&mul(&t, &e, p), g, p);
        let dh = add_fp(&mul(&s, &e, p), &mul(&q, h, p), p);
        debug_assert!(dh.len() < h.len());
        gl = add_scaled(&gl, &r, &pj, &next);
        hl = add_scaled(&hl, &dh, &pj, &next);
        pj = next;
    }
    (gl, hl)
}

fn add_fp(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    let mut out: Fp = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

fn add_scaled(base: &[BigInt], delta: &Fp, scale: &BigInt, m: &BigInt) -> Vec<BigInt> {
    let n = base.len().max(delta.len());
    (0..n)
        .map(|i| {
            let b = base.get(i).cloned().unwrap_or_default();
            let d = BigInt::from(delta.get(i).copied().unwrap_or(0));
            (b + d * scale).mod_floor(m)
        })
        .collect()
}

/// Lifts the monic factorization of `f / lc(f) mod p` to `p^k`.
pub(crate) fn hensel_lift(f: &IntPoly, factors: &[Fp], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    let m = BigInt::from(p).pow(k);
    let lc = f.leading().expect("nonzero").clone();
    let lc_inv = lc.extended_gcd(&m).x.mod_floor(&m);
    let mut target: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * &lc_inv).mod_floor(&m))
        .collect();
    let mut out = Vec::new();
    for (i, g) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            out.push(target.clone());
            break;
        }
        let h = factors[i + 1..]
            .iter()
            .fold(vec![1u64], |acc, x| mul(&acc, x, p));
        let (gl, hl) = hensel_pair(&target, g, &h, p, k);
        out.push(gl);
        target = hl;
    }
    out
}

pub(crate) fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    big_mul_mod(a, b, m)
}
