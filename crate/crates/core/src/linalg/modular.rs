//! Rank computation modulo a word-sized prime.
//!
//! Reduction mod p of a rational matrix is only defined when no denominator
//! vanishes mod p; [`modular_rank`] reports that case as [`BadPrime`] instead
//! of silently producing garbage. The modular rank never exceeds the rational
//! rank, which is what makes it useful as one side of a certificate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

#[cfg(test)]
use super::Scalar;
use super::SparseMatrix;

/// A sampled prime divided some denominator of the matrix entries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("prime {prime} divides a denominator of the matrix")]
pub struct BadPrime {
    pub prime: u64,
}

fn mod_u64(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: p is prime and a != 0 mod p.
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u64 = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Rank of `m` over the field with `p` elements.
///
/// Errors with [`BadPrime`] if any entry's denominator is divisible by `p`.
/// For every prime, `modular_rank(m, p) <= exact rank of m`.
pub fn modular_rank(m: &SparseMatrix, p: u64) -> Result<usize, BadPrime> {
    let mut rows = vec![vec![0u64; m.cols()]; m.rows()];
    for (r, c, v) in m.iter() {
        let den = mod_u64(v.denom(), p);
        if den == 0 {
            return Err(BadPrime { prime: p });
        }
        rows[r][c] = mul_mod(mod_u64(v.numer(), p), inv_mod(den, p), p);
    }
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col], p);
        for x in rows[rank][col..].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let (pivot_row, rest) = {
            let (a, b) = rows.split_at_mut(rank + 1);
            (&a[rank], b)
        };
        for row in rest.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = (*x + p - mul_mod(f, *pv, p)) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}

/// Deterministic Miller–Rabin, valid for all `n < 2^32` (bases 2, 7, 61).
pub fn is_prime(n: u64) -> bool {
    assert!(n < 1 << 32, "primality bases only cover 32-bit inputs");
    if n < 2 {
        return false;
    }
    for q in [2, 3, 5, 7, 11, 13] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 7, 61] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Sample `count` distinct primes in `[2^30, 2^31)` from `rng`.
pub fn sample_primes(rng: &mut impl Rng, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let candidate = rng.gen_range((1u64 << 30)..(1u64 << 31));
        if is_prime(candidate) && !out.contains(&candidate) {
            out.push(candidate);
        }
    }
    out
}

/// Sample `count` distinct primes in `[2^30, 2^31)` that divide no denominator
/// appearing in any of `matrices`.
pub fn admissible_primes(rng: &mut impl Rng, count: usize, matrices: &[&SparseMatrix]) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = sample_primes(rng, 1)[0];
        if out.contains(&p) {
            continue;
        }
        let big = BigInt::from(p);
        let ok = matrices.iter().all(|m| {
            m.iter()
                .all(|(_, _, v)| !v.denom().mod_floor(&big).eq(&BigInt::from(0)))
        });
        if ok {
            out.push(p);
        }
    }
    out
}
