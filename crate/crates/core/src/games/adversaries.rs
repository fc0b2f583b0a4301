use rand::{Rng, RngCore};

use super::{Adversary, NtruScheme, Oracles, PublicKeyScheme};
use crate::ntru::{NtruCiphertext, NtruParams, NtruPlaintext, NtruPublicKey};
use crate::ring::ConvPoly;

/// Distinguisher for textbook NTRU.
///
/// Every `T(d, d)` polynomial vanishes at `x = 1`, so `h(1) = 0 (mod q)` and
/// `e(1) = m(1) (mod q)` for any ciphertext. Choosing `m0 = 0` and `m1 = 1`
/// makes the challenge's value at 1 reveal the hidden bit outright.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NtruCpaAdversary;

pub fn ntru_cpa_adversary() -> NtruCpaAdversary {
    NtruCpaAdversary
}

impl NtruCpaAdversary {
    pub fn messages(params: &NtruParams) -> (NtruPlaintext, NtruPlaintext) {
        let n = params.n();
        let m0 = ConvPoly::zero(n).expect("N >= 2");
        let m1 = ConvPoly::one(n).expect("N >= 2");
        (
            NtruPlaintext::new(params, m0).expect("zero is a valid plaintext"),
            NtruPlaintext::new(params, m1).expect("p >= 2 admits coefficient 1"),
        )
    }

    /// `true` iff `e(1) = m1(1) = 1 (mod q)`.
    pub fn distinguish(params: &NtruParams, challenge: &NtruCiphertext) -> bool {
        let q = params.q().value() as i128;
        challenge.poly().evaluate_at_one().rem_euclid(q) == 1
    }
}

impl Adversary<NtruScheme> for NtruCpaAdversary {
    fn choose_messages(
        &mut self,
        pk: &NtruPublicKey,
        _oracles: &mut Oracles<'_, NtruScheme>,
        _rng: &mut dyn RngCore,
    ) -> (NtruPlaintext, NtruPlaintext) {
        NtruCpaAdversary::messages(pk.params())
    }

    fn guess(
        &mut self,
        pk: &NtruPublicKey,
        challenge: &NtruCiphertext,
        _oracles: &mut Oracles<'_, NtruScheme>,
        _rng: &mut dyn RngCore,
    ) -> bool {
        NtruCpaAdversary::distinguish(pk.params(), challenge)
    }
}

/// Submits a fixed message pair and answers with a fair coin.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinFlipAdversary<P> {
    pub m0: P,
    pub m1: P,
}

impl<P> CoinFlipAdversary<P> {
    pub fn new(m0: P, m1: P) -> Self {
        CoinFlipAdversary { m0, m1 }
    }
}

impl CoinFlipAdversary<NtruPlaintext> {
    /// Same message pair as [`NtruCpaAdversary`], so only the guess differs.
    pub fn for_ntru(params: &NtruParams) -> Self {
        let (m0, m1) = NtruCpaAdversary::messages(params);
        CoinFlipAdversary { m0, m1 }
    }
}

impl<S: PublicKeyScheme> Adversary<S> for CoinFlipAdversary<S::Plaintext> {
    fn choose_messages(
        &mut self,
        _pk: &S::PublicKey,
        _oracles: &mut Oracles<'_, S>,
        _rng: &mut dyn RngCore,
    ) -> (S::Plaintext, S::Plaintext) {
        (self.m0.clone(), self.m1.clone())
    }

    fn guess(
        &mut self,
        _pk: &S::PublicKey,
        _challenge: &S::Ciphertext,
        _oracles: &mut Oracles<'_, S>,
        rng: &mut dyn RngCore,
    ) -> bool {
        rng.random()
    }
}

/// Beats any deterministic scheme: encrypts `m0` through the oracle before
/// the challenge and answers 0 iff the challenge matches that ciphertext.
#[derive(Debug, Clone, PartialEq)]
pub struct ReplayAdversary<P, C> {
    pub m0: P,
    pub m1: P,
    reference: Option<C>,
}

impl<P, C> ReplayAdversary<P, C> {
    pub fn new(m0: P, m1: P) -> Self {
        ReplayAdversary {
            m0,
            m1,
            reference: None,
        }
    }
}

impl<S: PublicKeyScheme> Adversary<S> for ReplayAdversary<S::Plaintext, S::Ciphertext> {
    fn choose_messages(
        &mut self,
        _pk: &S::PublicKey,
        oracles: &mut Oracles<'_, S>,
        _rng: &mut dyn RngCore,
    ) -> (S::Plaintext, S::Plaintext) {
        self.reference = oracles.encrypt(&self.m0).ok();
        (self.m0.clone(), self.m1.clone())
    }

    fn guess(
        &mut self,
        _pk: &S::PublicKey,
        challenge: &S::Ciphertext,
        _oracles: &mut Oracles<'_, S>,
        _rng: &mut dyn RngCore,
    ) -> bool {
        self.reference.as_ref() != Some(challenge)
    }
}

/// Wraps another adversary and, before guessing, asks the decryption oracle
/// for the challenge itself. The harness must refuse; the guess is always the
/// inner adversary's.
#[derive(Debug, Clone, PartialEq)]
pub struct ChallengeDecryptingAdversary<A> {
    pub inner: A,
    pub refused: usize,
}

impl<A> ChallengeDecryptingAdversary<A> {
    pub fn new(inner: A) -> Self {
        ChallengeDecryptingAdversary { inner, refused: 0 }
    }
}

impl<S, A> Adversary<S> for ChallengeDecryptingAdversary<A>
where
    S: PublicKeyScheme,
    A: Adversary<S>,
{
    fn choose_messages(
        &mut self,
        pk: &S::PublicKey,
        oracles: &mut Oracles<'_, S>,
        rng: &mut dyn RngCore,
    ) -> (S::Plaintext, S::Plaintext) {
        self.inner.choose_messages(pk, oracles, rng)
    }

    fn guess(
        &mut self,
        pk: &S::PublicKey,
        challenge: &S::Ciphertext,
        oracles: &mut Oracles<'_, S>,
        rng: &mut dyn RngCore,
    ) -> bool {
        if oracles.decrypt(challenge).is_err() {
            self.refused += 1;
        }
        self.inner.guess(pk, challenge, oracles, rng)
    }
}
