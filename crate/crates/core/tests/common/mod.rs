//! Test-only oracles, independent of the library's arithmetic.

#![allow(dead_code)]

use rand::Rng;

/// Full product of degree up to 2N-2, then every exponent k >= N folded onto k mod N.
pub fn schoolbook_fold(a: &[i64], b: &[i64]) -> Vec<i64> {
    assert_eq!(a.len(), b.len());
    let n = a.len();
    let mut full = vec![0i64; 2 * n - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            full[i + j] += x * y;
        }
    }
    let mut folded = vec![0i64; n];
    for (k, c) in full.into_iter().enumerate() {
        folded[k % n] += c;
    }
    folded
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[i64], k: i64) -> Vec<i64> {
    a.iter().map(|x| x * k).collect()
}

pub fn modq(a: &[i64], q: i64) -> Vec<i64> {
    a.iter().map(|x| x.rem_euclid(q)).collect()
}

pub fn random_coeffs<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<i64> {
    (0..n).map(|_| rng.random_range(-bound..=bound)).collect()
}

/// Random plaintext with coefficients in (-p/2, p/2].
pub fn random_message<R: Rng>(rng: &mut R, n: usize, p: i64) -> Vec<i64> {
    let lo = -((p - 1) / 2);
    let hi = p / 2;
    (0..n).map(|_| rng.random_range(lo..=hi)).collect()
}
