//! Textbook NTRU over `R = Z[x]/(x^N - 1)`.
//!
//! Secret `f` is drawn from `T(d+1, d)` and `g` from `T(d, d)`; the public key
//! is `h = F_q * g (mod q)` where `F_q` inverts `f` in `R_q`. A message `m` with
//! coefficients in `(-p/2, p/2]` encrypts to `e = p * h * r + m (mod q)` for a
//! fresh blinding polynomial `r` in `T(d, d)`.
//!
//! Decryption computes `a = f * e (mod q)`, center-lifts it, and returns the
//! center lift of `F_p * a (mod p)`. When `q > (6d + 1) p` every coefficient of
//! the lifted `a` is bounded by `(3d + 1/2) p < q/2`, so the lift recovers
//! `p * g * r + f * m` exactly over the integers and decryption never fails.
//! [`Profile::Unchecked`] drops that bound for experimenting with parameter
//! sets where decryption can silently return the wrong plaintext.

use rand::Rng;
use thiserror::Error;

use crate::ring::{gcd, is_prime, prime_power, ConvPoly, Modulus, RingError};
use crate::ternary::{TernaryError, TernaryShape};

/// Resamples of `f` attempted before keygen gives up.
pub const KEYGEN_RETRY_CAP: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("InvalidModulus: {name} = {value} must be at least 2")]
    InvalidModulus { name: &'static str, value: i64 },
    #[error("NotPrimeN: N = {0} is not prime")]
    NotPrimeN(usize),
    #[error("DegenerateWeight: d must be at least 1")]
    DegenerateWeight,
    #[error("WeightTooLarge: f in T({d}+1,{d}) needs 2d+1 <= N = {n}")]
    WeightTooLarge { d: usize, n: usize },
    #[error("DecryptionBoundViolation: q = {q} must exceed (6d+1)p = {bound}")]
    DecryptionBoundViolation { q: i64, bound: i64 },
    #[error("GcdViolation: gcd({a_name},{b_name}) = gcd({a},{b}) = {g}")]
    GcdViolation {
        a_name: &'static str,
        b_name: &'static str,
        a: i64,
        b: i64,
        g: i64,
    },
    #[error("UnsupportedModulus: {name} = {value} must be a prime or a prime power")]
    UnsupportedModulus { name: &'static str, value: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NtruError {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("RetriesExhausted: no invertible f after {0} attempts")]
    RetriesExhausted(usize),
    #[error("PlaintextOutOfRange: coefficient {index} = {value} outside (-p/2, p/2]")]
    PlaintextOutOfRange { index: usize, value: i64 },
    #[error("CiphertextOutOfRange: coefficient {index} = {value} outside [0, q)")]
    CiphertextOutOfRange { index: usize, value: i64 },
    #[error("BadBlindingPolynomial: r is not in T(d,d)")]
    BadBlindingPolynomial,
    #[error("ParamsMismatch: key or message built for different parameters")]
    ParamsMismatch,
    #[error("InvalidKey: {0}")]
    InvalidKey(String),
}

impl From<TernaryError> for NtruError {
    fn from(e: TernaryError) -> Self {
        match e {
            TernaryError::Ring(r) => NtruError::Ring(r),
            TernaryError::ShapeTooLarge { .. } => NtruError::InvalidKey(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Profile {
    /// Enforces `q > (6d + 1) p`; decryption is always correct.
    #[default]
    GuaranteedDecryption,
    /// Skips the decryption bound; decryption may fail silently.
    Unchecked,
}

/// Validated public parameters `(N, p, q, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NtruParams {
    n: usize,
    p: Modulus,
    q: Modulus,
    d: usize,
    profile: Profile,
}

impl NtruParams {
    /// Checks, in order: moduli at least 2, `N` prime, `d >= 1`, `2d + 1 <= N`,
    /// the decryption bound (guaranteed profile only), `gcd(N, q) = gcd(p, q) = 1`,
    /// and that `p` and `q` are primes or prime powers.
    pub fn new(n: usize, p: i64, q: i64, d: usize, profile: Profile) -> Result<Self, ParamError> {
        let p_mod = Modulus::new(p).map_err(|_| ParamError::InvalidModulus {
            name: "p",
            value: p,
        })?;
        let q_mod = Modulus::new(q).map_err(|_| ParamError::InvalidModulus {
            name: "q",
            value: q,
        })?;
        if !is_prime(n as u64) {
            return Err(ParamError::NotPrimeN(n));
        }
        if d == 0 {
            return Err(ParamError::DegenerateWeight);
        }
        if d.checked_mul(2)
            .and_then(|w| w.checked_add(1))
            .is_none_or(|w| w > n)
        {
            return Err(ParamError::WeightTooLarge { d, n });
        }
        if profile == Profile::GuaranteedDecryption {
            let bound = (6 * d as i128 + 1) * p as i128;
            if (q as i128) <= bound {
                return Err(ParamError::DecryptionBoundViolation {
                    q,
                    bound: bound.try_into().unwrap_or(i64::MAX),
                });
            }
        }
        for (a_name, a) in [("N", n as i64), ("p", p)] {
            let g = gcd(a as u64, q as u64) as i64;
            if g != 1 {
                return Err(ParamError::GcdViolation {
                    a_name,
                    b_name: "q",
                    a,
                    b: q,
                    g,
                });
            }
        }
        for (name, value) in [("p", p), ("q", q)] {
            if prime_power(value as u64).is_none() {
                return Err(ParamError::UnsupportedModulus { name, value });
            }
        }
        Ok(NtruParams {
            n,
            p: p_mod,
            q: q_mod,
            d,
            profile,
        })
    }

    /// Parameters under the strongest profile they satisfy.
    pub fn detect_profile(n: usize, p: i64, q: i64, d: usize) -> Result<Self, ParamError> {
        match NtruParams::new(n, p, q, d, Profile::GuaranteedDecryption) {
            Err(ParamError::DecryptionBoundViolation { .. }) => {
                NtruParams::new(n, p, q, d, Profile::Unchecked)
            }
            other => other,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> Modulus {
        self.p
    }

    pub fn q(&self) -> Modulus {
        self.q
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn profile(&self) -> Profile {
        self.profile
    }

    /// `(3d + 1/2) p`, doubled to stay integral.
    pub fn twice_coefficient_bound(&self) -> i64 {
        (6 * self.d as i64 + 1) * self.p.value()
    }

    pub fn secret_shape(&self) -> TernaryShape {
        TernaryShape::new(self.d + 1, self.d, self.n).expect("validated weight")
    }

    pub fn blinding_shape(&self) -> TernaryShape {
        TernaryShape::new(self.d, self.d, self.n).expect("validated weight")
    }

    /// Whether every coefficient of `m` lies in `(-p/2, p/2]`.
    pub fn check_plaintext(&self, m: &ConvPoly) -> Result<(), NtruError> {
        if m.rank() != self.n {
            return Err(RingError::RankMismatch {
                left: m.rank(),
                right: self.n,
            }
            .into());
        }
        let p = self.p.value();
        match m.coeffs().iter().position(|&c| 2 * c <= -p || 2 * c > p) {
            Some(index) => Err(NtruError::PlaintextOutOfRange {
                index,
                value: m.coeffs()[index],
            }),
            None => Ok(()),
        }
    }
}

/// Parameters validated under the guaranteed-decryption profile.
pub fn validate_params(n: usize, p: i64, q: i64, d: usize) -> Result<NtruParams, ParamError> {
    NtruParams::new(n, p, q, d, Profile::GuaranteedDecryption)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NtruPublicKey {
    params: NtruParams,
    h: ConvPoly,
}

impl NtruPublicKey {
    /// Rebuilds a public key, checking rank, canonical form, and `h(1) = 0 mod q`.
    pub fn from_parts(params: NtruParams, h: ConvPoly) -> Result<Self, NtruError> {
        if h.rank() != params.n {
            return Err(RingError::RankMismatch {
                left: h.rank(),
                right: params.n,
            }
            .into());
        }
        if h.reduce_mod(params.q) != h {
            return Err(NtruError::InvalidKey("h must be canonical mod q".into()));
        }
        if h.evaluate_at_one().rem_euclid(params.q.value() as i128) != 0 {
            return Err(NtruError::InvalidKey("h(1) is not 0 mod q".into()));
        }
        Ok(NtruPublicKey { params, h })
    }

    pub fn params(&self) -> &NtruParams {
        &self.params
    }

    pub fn h(&self) -> &ConvPoly {
        &self.h
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NtruSecretKey {
    params: NtruParams,
    f: ConvPoly,
    f_p: ConvPoly,
}

impl NtruSecretKey {
    /// Rebuilds a secret key, checking `f` in `T(d+1, d)` and `f * F_p = 1 mod p`.
    pub fn from_parts(params: NtruParams, f: ConvPoly, f_p: ConvPoly) -> Result<Self, NtruError> {
        if !params.secret_shape().contains(&f)? {
            return Err(NtruError::InvalidKey("f is not in T(d+1,d)".into()));
        }
        let f_p = f_p.reduce_mod(params.p);
        if f.mul_mod(&f_p, params.p)? != ConvPoly::one(params.n)? {
            return Err(NtruError::InvalidKey("f * Fp is not 1 mod p".into()));
        }
        Ok(NtruSecretKey { params, f, f_p })
    }

    pub fn params(&self) -> &NtruParams {
        &self.params
    }

    pub fn f(&self) -> &ConvPoly {
        &self.f
    }

    pub fn f_p(&self) -> &ConvPoly {
        &self.f_p
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NtruKeyPair {
    pub public: NtruPublicKey,
    pub secret: NtruSecretKey,
}

/// Keygen output together with the values that are normally discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeygenTrace {
    pub keypair: NtruKeyPair,
    pub g: ConvPoly,
    pub f_q: ConvPoly,
    /// Number of `f` candidates drawn, including the accepted one.
    pub attempts: usize,
}

/// A message polynomial with coefficients in `(-p/2, p/2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NtruPlaintext(ConvPoly);

impl NtruPlaintext {
    pub fn new(params: &NtruParams, m: ConvPoly) -> Result<Self, NtruError> {
        params.check_plaintext(&m)?;
        Ok(NtruPlaintext(m))
    }

    pub fn poly(&self) -> &ConvPoly {
        &self.0
    }

    pub fn into_poly(self) -> ConvPoly {
        self.0
    }
}

/// A ciphertext with coefficients in `[0, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NtruCiphertext(ConvPoly);

impl NtruCiphertext {
    pub fn new(params: &NtruParams, e: ConvPoly) -> Result<Self, NtruError> {
        if e.rank() != params.n {
            return Err(RingError::RankMismatch {
                left: e.rank(),
                right: params.n,
            }
            .into());
        }
        let q = params.q.value();
        if let Some(index) = e.coeffs().iter().position(|&c| !(0..q).contains(&c)) {
            return Err(NtruError::CiphertextOutOfRange {
                index,
                value: e.coeffs()[index],
            });
        }
        Ok(NtruCiphertext(e))
    }

    pub fn poly(&self) -> &ConvPoly {
        &self.0
    }

    pub fn into_poly(self) -> ConvPoly {
        self.0
    }
}

pub fn keygen<R: Rng + ?Sized>(params: &NtruParams, rng: &mut R) -> Result<NtruKeyPair, NtruError> {
    keygen_trace(params, rng).map(|t| t.keypair)
}

pub fn keygen_trace<R: Rng + ?Sized>(
    params: &NtruParams,
    rng: &mut R,
) -> Result<KeygenTrace, NtruError> {
    keygen_with_retries(params, rng, KEYGEN_RETRY_CAP)
}

/// Keygen with an explicit cap on the number of `f` candidates.
pub fn keygen_with_retries<R: Rng + ?Sized>(
    params: &NtruParams,
    rng: &mut R,
    cap: usize,
) -> Result<KeygenTrace, NtruError> {
    let secret_shape = params.secret_shape();
    for attempt in 1..=cap {
        let f = secret_shape.sample(rng);
        let f_p = match f.invert_mod(params.p) {
            Ok(inv) => inv,
            Err(RingError::NotInvertible) => continue,
            Err(e) => return Err(e.into()),
        };
        let f_q = match f.invert_mod(params.q) {
            Ok(inv) => inv,
            Err(RingError::NotInvertible) => continue,
            Err(e) => return Err(e.into()),
        };
        let g = params.blinding_shape().sample(rng);
        let h = f_q.mul_mod(&g, params.q)?;
        return Ok(KeygenTrace {
            keypair: NtruKeyPair {
                public: NtruPublicKey { params: *params, h },
                secret: NtruSecretKey {
                    params: *params,
                    f,
                    f_p,
                },
            },
            g,
            f_q,
            attempts: attempt,
        });
    }
    Err(NtruError::RetriesExhausted(cap))
}

pub fn encrypt<R: Rng + ?Sized>(
    params: &NtruParams,
    pk: &NtruPublicKey,
    m: &NtruPlaintext,
    rng: &mut R,
) -> Result<NtruCiphertext, NtruError> {
    let r = params.blinding_shape().sample(rng);
    encrypt_with_r(params, pk, m, &r)
}

/// `e = p * h * r + m (mod q)` for a caller-supplied `r` in `T(d, d)`.
pub fn encrypt_with_r(
    params: &NtruParams,
    pk: &NtruPublicKey,
    m: &NtruPlaintext,
    r: &ConvPoly,
) -> Result<NtruCiphertext, NtruError> {
    if pk.params != *params {
        return Err(NtruError::ParamsMismatch);
    }
    params.check_plaintext(&m.0)?;
    if r.rank() != params.n || !params.blinding_shape().contains(r)? {
        return Err(NtruError::BadBlindingPolynomial);
    }
    let e =
        pk.h.mul_mod(r, params.q)?
            .scale(params.p.value())?
            .add(&m.0)?
            .reduce_mod(params.q);
    Ok(NtruCiphertext(e))
}

/// The two decryption stages: the center-lifted `a = f * e` and the result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecryptTrace {
    pub a_lifted: ConvPoly,
    pub b: NtruPlaintext,
}

pub fn decrypt(
    params: &NtruParams,
    sk: &NtruSecretKey,
    e: &NtruCiphertext,
) -> Result<NtruPlaintext, NtruError> {
    decrypt_trace(params, sk, e).map(|t| t.b)
}

pub fn decrypt_trace(
    params: &NtruParams,
    sk: &NtruSecretKey,
    e: &NtruCiphertext,
) -> Result<DecryptTrace, NtruError> {
    if sk.params != *params {
        return Err(NtruError::ParamsMismatch);
    }
    if e.0.rank() != params.n {
        return Err(RingError::RankMismatch {
            left: e.0.rank(),
            right: params.n,
        }
        .into());
    }
    let a_lifted = sk.f.mul_mod(&e.0, params.q)?.center_lift(params.q);
    let b = sk.f_p.mul_mod(&a_lifted, params.p)?.center_lift(params.p);
    Ok(DecryptTrace {
        a_lifted,
        b: NtruPlaintext(b),
    })
}
