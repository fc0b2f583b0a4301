//! Indistinguishability experiments over pluggable schemes and adversaries.
//!
//! One run of [`run_game`] follows the textbook experiment:
//!
//! 1. the challenger generates `(pk, sk)`;
//! 2. the adversary sees `pk` and its oracles and outputs `m0 != m1`;
//! 3. the challenger draws a uniform bit `b` and encrypts `m_b`;
//! 4. the adversary, still holding its oracles, outputs a guess `b'`;
//! 5. the run is won iff `b' == b`.
//!
//! In the CCA variants the decryption oracle answers every query except the
//! challenge itself. Refused queries are recorded in the transcript rather
//! than aborting the run. [`GameKind::Cca1`] additionally closes the
//! decryption oracle once the challenge is issued.
//!
//! The scheme's fixed parameter set plays the role of the security
//! parameter; advantage is reported per parameter set.

use std::fmt;

use rand::{Rng, RngCore};
use thiserror::Error;

use crate::random::{fork, RandomSource};

mod adversaries;
mod schemes;

pub use adversaries::{
    ntru_cpa_adversary, ChallengeDecryptingAdversary, CoinFlipAdversary, NtruCpaAdversary,
    ReplayAdversary,
};
pub use schemes::{
    KeyHandle, NtruScheme, ShiftCipher, SubstitutionCipher, Symmetric, SymmetricCipher,
};

/// A public-key encryption scheme as a triple of algorithms.
///
/// Implementations must be correct: `decrypt(sk, encrypt(pk, m)) == m` for
/// every valid plaintext.
pub trait PublicKeyScheme {
    type PublicKey: Clone + fmt::Debug;
    type SecretKey;
    type Plaintext: Clone + PartialEq + fmt::Debug;
    type Ciphertext: Clone + PartialEq + fmt::Debug;
    type Error: std::error::Error;

    fn keygen(
        &self,
        rng: &mut dyn RngCore,
    ) -> Result<(Self::PublicKey, Self::SecretKey), Self::Error>;

    fn encrypt(
        &self,
        pk: &Self::PublicKey,
        m: &Self::Plaintext,
        rng: &mut dyn RngCore,
    ) -> Result<Self::Ciphertext, Self::Error>;

    fn decrypt(
        &self,
        sk: &Self::SecretKey,
        c: &Self::Ciphertext,
    ) -> Result<Self::Plaintext, Self::Error>;

    fn is_valid_plaintext(&self, m: &Self::Plaintext) -> bool;
}

/// An adversary strategy. Bits are `false` for 0 and `true` for 1.
pub trait Adversary<S: PublicKeyScheme> {
    fn choose_messages(
        &mut self,
        pk: &S::PublicKey,
        oracles: &mut Oracles<'_, S>,
        rng: &mut dyn RngCore,
    ) -> (S::Plaintext, S::Plaintext);

    fn guess(
        &mut self,
        pk: &S::PublicKey,
        challenge: &S::Ciphertext,
        oracles: &mut Oracles<'_, S>,
        rng: &mut dyn RngCore,
    ) -> bool;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GameKind {
    Cpa,
    /// Decryption oracle only before the challenge ("lunchtime").
    Cca1,
    /// Decryption oracle before and after the challenge.
    Cca2,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("AdversaryContractViolation: {0}")]
    AdversaryContractViolation(String),
    #[error("scheme failure: {0}")]
    Scheme(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    BeforeChallenge,
    AfterChallenge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Refusal {
    /// The query was the challenge ciphertext.
    Challenge,
    /// CCA1 run after the challenge was issued.
    Closed,
    /// No decryption oracle in this experiment.
    NotGranted,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("decryption refused: {0:?}")]
    Refused(Refusal),
    #[error("plaintext rejected by the scheme")]
    InvalidPlaintext,
    #[error("scheme failure: {0}")]
    Scheme(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecryptOutcome {
    Answered,
    Refused(Refusal),
    Failed,
}

#[derive(Debug, Clone, PartialEq)]
pub enum OracleEvent<P, C> {
    Encrypt {
        phase: Phase,
        plaintext: P,
    },
    Decrypt {
        phase: Phase,
        ciphertext: C,
        outcome: DecryptOutcome,
    },
}

/// Encryption oracle and optional guarded decryption oracle for one run.
pub struct Oracles<'a, S: PublicKeyScheme> {
    scheme: &'a S,
    pk: &'a S::PublicKey,
    sk: Option<&'a S::SecretKey>,
    rng: RandomSource,
    kind: GameKind,
    challenge: Option<S::Ciphertext>,
    events: Vec<OracleEvent<S::Plaintext, S::Ciphertext>>,
}

impl<'a, S: PublicKeyScheme> Oracles<'a, S> {
    fn new(
        scheme: &'a S,
        pk: &'a S::PublicKey,
        sk: &'a S::SecretKey,
        kind: GameKind,
        rng: RandomSource,
    ) -> Self {
        let sk = (kind != GameKind::Cpa).then_some(sk);
        Oracles {
            scheme,
            pk,
            sk,
            rng,
            kind,
            challenge: None,
            events: Vec::new(),
        }
    }

    pub fn phase(&self) -> Phase {
        if self.challenge.is_some() {
            Phase::AfterChallenge
        } else {
            Phase::BeforeChallenge
        }
    }

    /// Whether a decryption query issued now could be answered at all.
    pub fn decryption_available(&self) -> bool {
        match self.kind {
            GameKind::Cpa => false,
            GameKind::Cca1 => self.challenge.is_none(),
            GameKind::Cca2 => true,
        }
    }

    pub fn encrypt(&mut self, m: &S::Plaintext) -> Result<S::Ciphertext, OracleError> {
        let phase = self.phase();
        self.events.push(OracleEvent::Encrypt {
            phase,
            plaintext: m.clone(),
        });
        if !self.scheme.is_valid_plaintext(m) {
            return Err(OracleError::InvalidPlaintext);
        }
        self.scheme
            .encrypt(self.pk, m, &mut self.rng)
            .map_err(|e| OracleError::Scheme(e.to_string()))
    }

    pub fn decrypt(&mut self, c: &S::Ciphertext) -> Result<S::Plaintext, OracleError> {
        let phase = self.phase();
        let refusal = match (self.sk, self.kind, &self.challenge) {
            (None, _, _) => Some(Refusal::NotGranted),
            (Some(_), GameKind::Cca1, Some(_)) => Some(Refusal::Closed),
            (Some(_), _, Some(ch)) if ch == c => Some(Refusal::Challenge),
            _ => None,
        };
        let (outcome, result) = match (refusal, self.sk) {
            (Some(r), _) => (DecryptOutcome::Refused(r), Err(OracleError::Refused(r))),
            (None, Some(sk)) => match self.scheme.decrypt(sk, c) {
                Ok(m) => (DecryptOutcome::Answered, Ok(m)),
                Err(e) => (
                    DecryptOutcome::Failed,
                    Err(OracleError::Scheme(e.to_string())),
                ),
            },
            (None, None) => unreachable!("missing key is always refused"),
        };
        self.events.push(OracleEvent::Decrypt {
            phase,
            ciphertext: c.clone(),
            outcome,
        });
        result
    }
}

/// Everything observable about one run.
#[derive(Debug, Clone, PartialEq)]
pub struct Transcript<P, C> {
    pub m0: P,
    pub m1: P,
    pub challenge: C,
    pub events: Vec<OracleEvent<P, C>>,
}

impl<P, C> Transcript<P, C> {
    pub fn enc_calls(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, OracleEvent::Encrypt { .. }))
            .count()
    }

    pub fn dec_calls(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, OracleEvent::Decrypt { .. }))
            .count()
    }

    pub fn refusals(&self) -> impl Iterator<Item = Refusal> + '_ {
        self.events.iter().filter_map(|e| match e {
            OracleEvent::Decrypt {
                outcome: DecryptOutcome::Refused(r),
                ..
            } => Some(*r),
            _ => None,
        })
    }

    /// The message that was actually encrypted.
    pub fn encrypted_message(&self, b: bool) -> &P {
        if b {
            &self.m1
        } else {
            &self.m0
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GameOutcome<P, C> {
    pub b: bool,
    pub guess: bool,
    pub win: bool,
    pub transcript: Transcript<P, C>,
}

pub type Outcome<S> =
    GameOutcome<<S as PublicKeyScheme>::Plaintext, <S as PublicKeyScheme>::Ciphertext>;

/// Runs one experiment. All randomness (keys, hidden bit, challenge, oracle
/// answers, adversary coins) is forked from `rng` in a fixed order.
pub fn run_game<S, A>(
    scheme: &S,
    adversary: &mut A,
    kind: GameKind,
    rng: &mut RandomSource,
) -> Result<Outcome<S>, GameError>
where
    S: PublicKeyScheme,
    A: Adversary<S> + ?Sized,
{
    let mut keygen_rng = fork(rng);
    let mut challenger_rng = fork(rng);
    let oracle_rng = fork(rng);
    let mut adversary_rng = fork(rng);

    let (pk, sk) = scheme
        .keygen(&mut keygen_rng)
        .map_err(|e| GameError::Scheme(e.to_string()))?;
    let mut oracles = Oracles::new(scheme, &pk, &sk, kind, oracle_rng);

    let (m0, m1) = adversary.choose_messages(&pk, &mut oracles, &mut adversary_rng);
    if m0 == m1 {
        return Err(GameError::AdversaryContractViolation("m0 == m1".into()));
    }
    for (name, m) in [("m0", &m0), ("m1", &m1)] {
        if !scheme.is_valid_plaintext(m) {
            return Err(GameError::AdversaryContractViolation(format!(
                "{name} is not a valid plaintext"
            )));
        }
    }

    let b: bool = challenger_rng.random();
    let challenge = scheme
        .encrypt(&pk, if b { &m1 } else { &m0 }, &mut challenger_rng)
        .map_err(|e| GameError::Scheme(e.to_string()))?;
    oracles.challenge = Some(challenge.clone());

    let guess = adversary.guess(&pk, &challenge, &mut oracles, &mut adversary_rng);
    Ok(GameOutcome {
        b,
        guess,
        win: b == guess,
        transcript: Transcript {
            m0,
            m1,
            challenge,
            events: oracles.events,
        },
    })
}

pub fn run_ind_cpa<S, A>(
    scheme: &S,
    adversary: &mut A,
    rng: &mut RandomSource,
) -> Result<Outcome<S>, GameError>
where
    S: PublicKeyScheme,
    A: Adversary<S> + ?Sized,
{
    run_game(scheme, adversary, GameKind::Cpa, rng)
}

pub fn run_ind_cca1<S, A>(
    scheme: &S,
    adversary: &mut A,
    rng: &mut RandomSource,
) -> Result<Outcome<S>, GameError>
where
    S: PublicKeyScheme,
    A: Adversary<S> + ?Sized,
{
    run_game(scheme, adversary, GameKind::Cca1, rng)
}

pub fn run_ind_cca2<S, A>(
    scheme: &S,
    adversary: &mut A,
    rng: &mut RandomSource,
) -> Result<Outcome<S>, GameError>
where
    S: PublicKeyScheme,
    A: Adversary<S> + ?Sized,
{
    run_game(scheme, adversary, GameKind::Cca2, rng)
}

/// Runs `trials` independent experiments, each on its own stream forked from `rng`.
pub fn run_trials<S, A>(
    scheme: &S,
    adversary: &mut A,
    kind: GameKind,
    trials: usize,
    rng: &mut RandomSource,
) -> Result<Vec<Outcome<S>>, GameError>
where
    S: PublicKeyScheme,
    A: Adversary<S> + ?Sized,
{
    (0..trials)
        .map(|_| {
            let mut run_rng = fork(rng);
            run_game(scheme, adversary, kind, &mut run_rng)
        })
        .collect()
}

/// Empirical success rate of an adversary with a 95% Wilson score interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdvantageEstimate {
    pub trials: usize,
    pub wins: usize,
    pub success_rate: f64,
    pub interval: (f64, f64),
}

impl AdvantageEstimate {
    const Z95: f64 = 1.959_963_984_540_054;

    pub fn from_counts(trials: usize, wins: usize) -> Self {
        assert!(
            trials >= 1 && wins <= trials,
            "need 1 <= trials and wins <= trials"
        );
        let n = trials as f64;
        let rate = wins as f64 / n;
        let z2 = Self::Z95 * Self::Z95;
        let center = (rate + z2 / (2.0 * n)) / (1.0 + z2 / n);
        let half =
            Self::Z95 / (1.0 + z2 / n) * (rate * (1.0 - rate) / n + z2 / (4.0 * n * n)).sqrt();
        AdvantageEstimate {
            trials,
            wins,
            success_rate: rate,
            interval: ((center - half).max(0.0), (center + half).min(1.0)),
        }
    }

    pub fn from_outcomes<P, C>(outcomes: &[GameOutcome<P, C>]) -> Self {
        AdvantageEstimate::from_counts(outcomes.len(), outcomes.iter().filter(|o| o.win).count())
    }

    /// Excess of the success rate over 1/2.
    pub fn advantage(&self) -> f64 {
        self.success_rate - 0.5
    }
}

pub fn estimate_advantage<S, A>(
    scheme: &S,
    adversary: &mut A,
    kind: GameKind,
    trials: usize,
    rng: &mut RandomSource,
) -> Result<AdvantageEstimate, GameError>
where
    S: PublicKeyScheme,
    A: Adversary<S> + ?Sized,
{
    let outcomes = run_trials(scheme, adversary, kind, trials, rng)?;
    Ok(AdvantageEstimate::from_outcomes(&outcomes))
}

/// `run <i> b <0|1> b' <0|1> win <0|1> enc_calls <n> dec_calls <n>`
pub fn transcript_line<P, C>(index: usize, outcome: &GameOutcome<P, C>) -> String {
    format!(
        "run {index} b {} b' {} win {} enc_calls {} dec_calls {}",
        u8::from(outcome.b),
        u8::from(outcome.guess),
        u8::from(outcome.win),
        outcome.transcript.enc_calls(),
        outcome.transcript.dec_calls(),
    )
}

/// `trials <n> wins <n> rate <decimal>`
pub fn summary_line(estimate: &AdvantageEstimate) -> String {
    format!(
        "trials {} wins {} rate {:?}",
        estimate.trials, estimate.wins, estimate.success_rate
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn estimate_bounds() {
        let perfect = AdvantageEstimate::from_counts(100, 100);
        assert_eq!(perfect.success_rate, 1.0);
        assert_eq!(perfect.advantage(), 0.5);
        assert!(perfect.interval.0 > 0.95 && perfect.interval.1 == 1.0);

        let half = AdvantageEstimate::from_counts(10_000, 5_000);
        assert!((half.interval.0 - 0.4902).abs() < 1e-3);
        assert!((half.interval.1 - 0.5098).abs() < 1e-3);
    }

    #[test]
    fn summary_formatting() {
        assert_eq!(
            summary_line(&AdvantageEstimate::from_counts(100, 100)),
            "trials 100 wins 100 rate 1.0"
        );
        assert_eq!(
            summary_line(&AdvantageEstimate::from_counts(4, 1)),
            "trials 4 wins 1 rate 0.25"
        );
    }
}
