//! Exact arithmetic in the convolution ring `Z[x]/(x^N - 1)`.
//!
//! A [`ConvPoly`] always holds exact integers. Reduction to `R_p` or `R_q` is an
//! explicit step ([`ConvPoly::reduce_mod`], [`ConvPoly::center_lift`]), so the
//! same type carries both the small ternary secrets and the mod-`q` public data.
//!
//! Products accumulate in `i128` and are narrowed back to `i64`; a coefficient
//! that does not fit reports [`RingError::Overflow`]. For the parameter ranges
//! this crate targets (`q <= 2^16`, `N <= 503`) every intermediate sum is below
//! `N * q^2` and never comes close.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors produced by ring arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("polynomial rank must be at least 1")]
    ZeroRank,
    #[error("invalid modulus {0}")]
    InvalidModulus(i64),
    #[error("polynomial is not invertible")]
    NotInvertible,
    #[error("coefficient overflow")]
    Overflow,
    #[error("malformed polynomial text: {0}")]
    Parse(String),
}

/// A coefficient modulus, always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus(i64);

impl Modulus {
    pub fn new(value: i64) -> Result<Self, RingError> {
        if value < 2 {
            return Err(RingError::InvalidModulus(value));
        }
        Ok(Modulus(value))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    /// Canonical representative in `[0, m)`.
    pub fn reduce(self, x: i64) -> i64 {
        x.rem_euclid(self.0)
    }

    /// Representative in the half-open interval `(-m/2, m/2]`.
    pub fn center(self, x: i64) -> i64 {
        let r = x.rem_euclid(self.0);
        if 2 * (r as i128) > self.0 as i128 {
            r - self.0
        } else {
            r
        }
    }
}

impl TryFrom<i64> for Modulus {
    type Error = RingError;

    fn try_from(value: i64) -> Result<Self, Self::Error> {
        Modulus::new(value)
    }
}

/// An element of `Z[x]/(x^N - 1)`; index `i` holds the coefficient of `x^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConvPoly {
    coeffs: Vec<i64>,
}

impl ConvPoly {
    pub fn new(coeffs: Vec<i64>) -> Result<Self, RingError> {
        if coeffs.is_empty() {
            return Err(RingError::ZeroRank);
        }
        Ok(ConvPoly { coeffs })
    }

    pub fn zero(n: usize) -> Result<Self, RingError> {
        ConvPoly::new(vec![0; n])
    }

    /// The multiplicative identity `[1, 0, ..., 0]`.
    pub fn one(n: usize) -> Result<Self, RingError> {
        ConvPoly::constant(n, 1)
    }

    pub fn constant(n: usize, c: i64) -> Result<Self, RingError> {
        let mut p = ConvPoly::zero(n)?;
        p.coeffs[0] = c;
        Ok(p)
    }

    /// The rank `N`.
    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    fn check_rank(&self, other: &ConvPoly) -> Result<(), RingError> {
        if self.rank() != other.rank() {
            return Err(RingError::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &ConvPoly,
        op: impl Fn(i64, i64) -> Option<i64>,
    ) -> Result<ConvPoly, RingError> {
        self.check_rank(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| op(a, b).ok_or(RingError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ConvPoly { coeffs })
    }

    pub fn add(&self, other: &ConvPoly) -> Result<ConvPoly, RingError> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn sub(&self, other: &ConvPoly) -> Result<ConvPoly, RingError> {
        self.zip_with(other, i64::checked_sub)
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: i64) -> Result<ConvPoly, RingError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| c.checked_mul(k).ok_or(RingError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ConvPoly { coeffs })
    }

    /// Cyclic convolution: `c_k = sum_{i+j = k mod N} a_i b_j`.
    pub fn mul(&self, other: &ConvPoly) -> Result<ConvPoly, RingError> {
        self.check_rank(other)?;
        let n = self.rank();
        let mut acc = vec![0i128; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = if i + j >= n { i + j - n } else { i + j };
                acc[k] = acc[k]
                    .checked_add(a as i128 * b as i128)
                    .ok_or(RingError::Overflow)?;
            }
        }
        let coeffs = acc
            .into_iter()
            .map(|c| i64::try_from(c).map_err(|_| RingError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ConvPoly { coeffs })
    }

    /// Product in `R_m`, with the result in canonical form.
    pub fn mul_mod(&self, other: &ConvPoly, m: Modulus) -> Result<ConvPoly, RingError> {
        self.reduce_mod(m)
            .mul(&other.reduce_mod(m))
            .map(|p| p.reduce_mod(m))
    }

    /// Every coefficient mapped to its canonical representative in `[0, m)`.
    pub fn reduce_mod(&self, m: Modulus) -> ConvPoly {
        ConvPoly {
            coeffs: self.coeffs.iter().map(|&c| m.reduce(c)).collect(),
        }
    }

    /// Every coefficient mapped into `(-m/2, m/2]`.
    pub fn center_lift(&self, m: Modulus) -> ConvPoly {
        ConvPoly {
            coeffs: self.coeffs.iter().map(|&c| m.center(c)).collect(),
        }
    }

    /// `a(1)`, the sum of all coefficients.
    pub fn evaluate_at_one(&self) -> i128 {
        self.coeffs.iter().map(|&c| c as i128).sum()
    }

    /// Inverse in `(Z/pZ)[x]/(x^N - 1)` for prime `p`.
    ///
    /// Runs the extended Euclidean algorithm against `x^N - 1`; the input is
    /// invertible exactly when the gcd is a nonzero constant.
    pub fn invert_mod_prime(&self, p: Modulus) -> Result<ConvPoly, RingError> {
        if !is_prime(p.value() as u64) {
            return Err(RingError::InvalidModulus(p.value()));
        }
        let n = self.rank();
        let field = PrimeField(p.value());

        let mut modulus = vec![0i64; n + 1];
        modulus[0] = field.neg(1);
        modulus[n] = 1;

        let mut r0 = modulus;
        let mut r1 = trim(self.reduce_mod(p).coeffs);
        let mut t0: Vec<i64> = Vec::new();
        let mut t1: Vec<i64> = vec![1];

        while !r1.is_empty() {
            let (quot, rem) = field.div_rem(&r0, &r1);
            let t2 = field.sub(&t0, &field.mul(&quot, &t1));
            r0 = std::mem::replace(&mut r1, rem);
            t0 = std::mem::replace(&mut t1, t2);
        }

        // r0 = gcd(a, x^N - 1) up to a unit
        if r0.len() != 1 {
            return Err(RingError::NotInvertible);
        }
        let lead_inv = field.inv(r0[0]);
        let mut out = vec![0i64; n];
        for (i, c) in t0.into_iter().enumerate() {
            out[i % n] = field.add(out[i % n], field.mul_scalar(c, lead_inv));
        }
        Ok(ConvPoly { coeffs: out })
    }

    /// Inverse modulo `p^k`: invert mod `p`, then Newton-lift with
    /// `F <- F * (2 - a * F)`, doubling the precision each round.
    pub fn invert_mod_prime_power(&self, p: Modulus, k: u32) -> Result<ConvPoly, RingError> {
        if k == 0 {
            return Err(RingError::InvalidModulus(1));
        }
        let modulus = p
            .value()
            .checked_pow(k)
            .filter(|&v| v <= i32::MAX as i64)
            .ok_or(RingError::InvalidModulus(p.value()))?;
        let target = Modulus::new(modulus)?;
        let mut inv = self.invert_mod_prime(p)?;
        let a = self.reduce_mod(target);
        let two = ConvPoly::constant(self.rank(), 2)?;
        let mut precision = 1u32;
        while precision < k {
            let af = a.mul_mod(&inv, target)?;
            let correction = two.sub(&af)?;
            inv = inv.mul_mod(&correction, target)?;
            precision = precision.saturating_mul(2);
        }
        Ok(inv.reduce_mod(target))
    }

    /// Inverse modulo any prime power `m`.
    pub fn invert_mod(&self, m: Modulus) -> Result<ConvPoly, RingError> {
        let (p, k) = prime_power(m.value() as u64).ok_or(RingError::InvalidModulus(m.value()))?;
        let p = Modulus::new(p as i64)?;
        if k == 1 {
            self.invert_mod_prime(p)
        } else {
            self.invert_mod_prime_power(p, k)
        }
    }
}

impl fmt::Display for ConvPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for ConvPoly {
    type Err = RingError;

    /// Parses `[c0,c1,...]`; whitespace anywhere is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| RingError::Parse(format!("expected [..], got {s:?}")))?;
        if inner.is_empty() {
            return Err(RingError::ZeroRank);
        }
        let coeffs = inner
            .split(',')
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|e| RingError::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        ConvPoly::new(coeffs)
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits `n = p^k` with `p` prime, if possible.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d) || d.saturating_mul(*d) > n)?;
    let p = if n.is_multiple_of(p) { p } else { n };
    let mut rest = n;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Dense polynomials over `Z/pZ`, lowest degree first, trimmed (zero is `[]`).
struct PrimeField(i64);

impl PrimeField {
    fn add(&self, a: i64, b: i64) -> i64 {
        (a + b).rem_euclid(self.0)
    }

    fn neg(&self, a: i64) -> i64 {
        (-a).rem_euclid(self.0)
    }

    fn mul_scalar(&self, a: i64, b: i64) -> i64 {
        ((a as i128 * b as i128).rem_euclid(self.0 as i128)) as i64
    }

    fn inv(&self, a: i64) -> i64 {
        // a^(p-2) by square-and-multiply
        let mut base = a.rem_euclid(self.0);
        let mut exp = self.0 - 2;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_scalar(acc, base);
            }
            base = self.mul_scalar(base, base);
            exp >>= 1;
        }
        acc
    }

    fn sub(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let len = a.len().max(b.len());
        let out = (0..len)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x - y).rem_euclid(self.0)
            })
            .collect();
        trim(out)
    }

    fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul_scalar(x, y));
            }
        }
        trim(out)
    }

    fn div_rem(&self, num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let mut rem = num.to_vec();
        if rem.len() < den.len() {
            return (Vec::new(), rem);
        }
        let lead_inv = self.inv(*den.last().expect("nonzero divisor"));
        let mut quot = vec![0i64; rem.len() - den.len() + 1];
        while rem.len() >= den.len() && !rem.is_empty() {
            let shift = rem.len() - den.len();
            let factor = self.mul_scalar(*rem.last().unwrap(), lead_inv);
            quot[shift] = factor;
            for (i, &d) in den.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] - self.mul_scalar(factor, d)).rem_euclid(self.0);
            }
            rem = trim(rem);
        }
        (trim(quot), rem)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> ConvPoly {
        ConvPoly::new(c.to_vec()).unwrap()
    }

    fn m(v: i64) -> Modulus {
        Modulus::new(v).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(
            poly(&[1, 2, 3]).add(&poly(&[0, 0, 0])).unwrap(),
            poly(&[1, 2, 3])
        );
        assert_eq!(
            poly(&[1, -1, 0]).add(&poly(&[-1, 1, 0])).unwrap(),
            poly(&[0, 0, 0])
        );
        assert_eq!(poly(&[2, 5]).add(&poly(&[3, -7])).unwrap(), poly(&[5, -2]));
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let err = poly(&[1, 2]).add(&poly(&[1, 2, 3])).unwrap_err();
        assert_eq!(err, RingError::RankMismatch { left: 2, right: 3 });
        assert!(poly(&[1]).mul(&poly(&[1, 2])).is_err());
    }

    #[test]
    fn zero_rank_rejected() {
        assert_eq!(ConvPoly::new(vec![]).unwrap_err(), RingError::ZeroRank);
        assert_eq!("[]".parse::<ConvPoly>().unwrap_err(), RingError::ZeroRank);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            poly(&[1, 1, 0]).mul(&poly(&[1, 0, 1])).unwrap(),
            poly(&[2, 1, 1])
        );
        let a = poly(&[4, -3, 2, 9, 0]);
        assert_eq!(a.mul(&ConvPoly::one(5).unwrap()).unwrap(), a);
    }

    #[test]
    fn mul_overflow_detected() {
        let big = poly(&[i64::MAX, i64::MAX]);
        assert_eq!(big.mul(&big).unwrap_err(), RingError::Overflow);
    }

    #[test]
    fn reduce_mod_examples() {
        assert_eq!(poly(&[7, -1, 41]).reduce_mod(m(41)), poly(&[7, 40, 0]));
        assert_eq!(poly(&[0, 0, 0]).reduce_mod(m(3)), poly(&[0, 0, 0]));
        assert_eq!(poly(&[5, -5]).reduce_mod(m(3)), poly(&[2, 1]));
    }

    #[test]
    fn center_lift_examples() {
        assert_eq!(poly(&[5]).center_lift(m(7)), poly(&[-2]));
        assert_eq!(poly(&[2]).center_lift(m(3)), poly(&[-1]));
        assert_eq!(poly(&[20, 21]).center_lift(m(41)), poly(&[20, -20]));
        assert_eq!(poly(&[20, -20]).center_lift(m(41)), poly(&[20, -20]));
    }

    #[test]
    fn center_lift_even_modulus_keeps_upper_boundary() {
        assert_eq!(poly(&[2, -2, 3]).center_lift(m(4)), poly(&[2, 2, -1]));
        assert_eq!(
            poly(&[1024, 1025]).center_lift(m(2048)),
            poly(&[1024, -1023])
        );
    }

    #[test]
    fn evaluate_at_one_examples() {
        assert_eq!(poly(&[3, -1, 4]).evaluate_at_one(), 6);
        assert_eq!(poly(&[1, -1, 0, 1, -1, 0, 0]).evaluate_at_one(), 0);
    }

    #[test]
    fn modulus_rejects_small_values() {
        assert_eq!(Modulus::new(1).unwrap_err(), RingError::InvalidModulus(1));
        assert!(Modulus::new(-5).is_err());
    }

    #[test]
    fn inverse_of_identity() {
        let one = ConvPoly::one(7).unwrap();
        assert_eq!(one.invert_mod_prime(m(3)).unwrap(), one);
        assert_eq!(one.invert_mod_prime_power(m(2), 5).unwrap(), one);
    }

    #[test]
    fn inverse_requires_prime() {
        let one = ConvPoly::one(7).unwrap();
        assert_eq!(
            one.invert_mod_prime(m(9)).unwrap_err(),
            RingError::InvalidModulus(9)
        );
    }

    #[test]
    fn balanced_ternary_is_never_invertible() {
        let a = poly(&[1, -1, 0, 1, 0, -1, 0]);
        assert_eq!(
            a.invert_mod_prime(m(3)).unwrap_err(),
            RingError::NotInvertible
        );
        assert_eq!(
            a.invert_mod_prime_power(m(2), 11).unwrap_err(),
            RingError::NotInvertible
        );
        assert_eq!(a.invert_mod(m(41)).unwrap_err(), RingError::NotInvertible);
    }

    #[test]
    fn zero_is_not_invertible() {
        let z = ConvPoly::zero(5).unwrap();
        assert_eq!(
            z.invert_mod_prime(m(3)).unwrap_err(),
            RingError::NotInvertible
        );
    }

    #[test]
    fn inverse_product_check() {
        let f = poly(&[-1, 1, 1, 0, -1, 0, 1]);
        for modulus in [3, 41, 5, 7] {
            let inv = f.invert_mod_prime(m(modulus)).unwrap();
            assert_eq!(
                f.mul_mod(&inv, m(modulus)).unwrap(),
                ConvPoly::one(7).unwrap()
            );
        }
        let inv = f.invert_mod_prime_power(m(2), 5).unwrap();
        assert_eq!(f.mul_mod(&inv, m(32)).unwrap(), ConvPoly::one(7).unwrap());
        let inv = f.invert_mod(m(2048)).unwrap();
        assert_eq!(f.mul_mod(&inv, m(2048)).unwrap(), ConvPoly::one(7).unwrap());
    }

    #[test]
    fn text_form() {
        let p: ConvPoly = " [ 1, -2 ,3 ]".parse().unwrap();
        assert_eq!(p, poly(&[1, -2, 3]));
        assert_eq!(p.to_string(), "[1,-2,3]");
        assert!("1,2".parse::<ConvPoly>().is_err());
        assert!("[1,,2]".parse::<ConvPoly>().is_err());
        assert!("[1,x]".parse::<ConvPoly>().is_err());
    }

    #[test]
    fn number_theory_helpers() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_power(2048), Some((2, 11)));
        assert_eq!(prime_power(41), Some((41, 1)));
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(39), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(gcd(7, 41), 1);
        assert_eq!(gcd(3, 39), 3);
    }
}
