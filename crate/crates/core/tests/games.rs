use ntru_lab::classical::Z26Text;
use ntru_lab::games::{
    estimate_advantage, ntru_cpa_adversary, run_game, run_ind_cca1, run_ind_cca2, run_ind_cpa,
    run_trials, summary_line, transcript_line, AdvantageEstimate, ChallengeDecryptingAdversary,
    CoinFlipAdversary, DecryptOutcome, GameError, GameKind, NtruCpaAdversary, NtruScheme,
    OracleEvent, Phase, Refusal, ReplayAdversary, ShiftCipher, SubstitutionCipher, Symmetric,
};
use ntru_lab::ntru::{validate_params, NtruParams, NtruPlaintext};
use ntru_lab::random::seeded;
use ntru_lab::ring::ConvPoly;

fn params() -> NtruParams {
    validate_params(7, 3, 41, 2).unwrap()
}

#[test]
fn distinguisher_wins_every_cpa_run() {
    let scheme = NtruScheme::new(params());
    let outcomes = run_trials(
        &scheme,
        &mut ntru_cpa_adversary(),
        GameKind::Cpa,
        100,
        &mut seeded(1),
    )
    .unwrap();
    assert!(outcomes.iter().all(|o| o.win));
    let est = AdvantageEstimate::from_outcomes(&outcomes);
    assert_eq!(est.success_rate, 1.0);
    assert_eq!(est.advantage(), 0.5);
    // both hidden-bit values were exercised
    assert!(outcomes.iter().any(|o| o.b) && outcomes.iter().any(|o| !o.b));
}

#[test]
fn distinguisher_win_explained_by_identity() {
    let p = params();
    let scheme = NtruScheme::new(p);
    for o in run_trials(
        &scheme,
        &mut NtruCpaAdversary,
        GameKind::Cpa,
        200,
        &mut seeded(2),
    )
    .unwrap()
    {
        let t = &o.transcript;
        let q = p.q().value() as i128;
        assert_eq!(
            t.challenge.poly().evaluate_at_one().rem_euclid(q),
            t.encrypted_message(o.b)
                .poly()
                .evaluate_at_one()
                .rem_euclid(q)
        );
        assert_eq!(NtruCpaAdversary::distinguish(&p, &t.challenge), o.b);
    }
}

#[test]
fn distinguisher_on_hand_built_challenges() {
    let p = params();
    let scheme = NtruScheme::new(p);
    let kp = ntru_lab::ntru::keygen(&p, &mut seeded(3)).unwrap();
    let (m0, m1) = NtruCpaAdversary::messages(&p);
    for s in 0..20 {
        let c1 = ntru_lab::ntru::encrypt(&p, &kp.public, &m1, &mut seeded(s)).unwrap();
        let c0 = ntru_lab::ntru::encrypt(&p, &kp.public, &m0, &mut seeded(s)).unwrap();
        assert!(NtruCpaAdversary::distinguish(&p, &c1));
        assert!(!NtruCpaAdversary::distinguish(&p, &c0));
    }
    let _ = scheme;
}

#[test]
fn coin_flip_is_calibrated() {
    let p = params();
    let scheme = NtruScheme::new(p);
    let est = estimate_advantage(
        &scheme,
        &mut CoinFlipAdversary::for_ntru(&p),
        GameKind::Cpa,
        10_000,
        &mut seeded(10),
    )
    .unwrap();
    assert!((0.49..=0.51).contains(&est.success_rate), "{est:?}");
    assert!(est.advantage().abs() <= 0.01);
}

#[test]
fn hidden_bit_is_fair() {
    let p = params();
    let scheme = NtruScheme::new(p);
    let n = 4000;
    let outcomes = run_trials(
        &scheme,
        &mut CoinFlipAdversary::for_ntru(&p),
        GameKind::Cpa,
        n,
        &mut seeded(11),
    )
    .unwrap();
    let ones = outcomes.iter().filter(|o| o.b).count() as f64;
    // binomial 99% two-sided: |ones - n/2| <= 2.576 * sqrt(n) / 2
    assert!(
        (ones - n as f64 / 2.0).abs() <= 2.576 * (n as f64).sqrt() / 2.0,
        "{ones}"
    );
}

#[test]
fn equal_messages_violate_contract() {
    let p = params();
    let zero = NtruPlaintext::new(&p, ConvPoly::zero(7).unwrap()).unwrap();
    let mut adv = CoinFlipAdversary::new(zero.clone(), zero);
    let err = run_ind_cpa(&NtruScheme::new(p), &mut adv, &mut seeded(1)).unwrap_err();
    assert!(matches!(err, GameError::AdversaryContractViolation(_)));
}

#[test]
fn foreign_messages_violate_contract() {
    let p = params();
    let other = validate_params(11, 3, 41, 2).unwrap();
    let (m0, m1) = NtruCpaAdversary::messages(&other);
    let mut adv = CoinFlipAdversary::new(m0, m1);
    let err = run_ind_cpa(&NtruScheme::new(p), &mut adv, &mut seeded(1)).unwrap_err();
    assert!(matches!(err, GameError::AdversaryContractViolation(_)));
}

#[test]
fn cca2_refuses_the_challenge_and_continues() {
    let scheme = NtruScheme::new(params());
    let mut adv = ChallengeDecryptingAdversary::new(NtruCpaAdversary);
    let outcomes = run_trials(&scheme, &mut adv, GameKind::Cca2, 50, &mut seeded(4)).unwrap();
    assert_eq!(adv.refused, 50);
    for o in &outcomes {
        assert!(o.win);
        assert_eq!(
            o.transcript.refusals().collect::<Vec<_>>(),
            vec![Refusal::Challenge]
        );
        assert_eq!(o.transcript.dec_calls(), 1);
        for e in &o.transcript.events {
            if let OracleEvent::Decrypt {
                ciphertext,
                outcome,
                ..
            } = e
            {
                if ciphertext == &o.transcript.challenge {
                    assert_ne!(*outcome, DecryptOutcome::Answered);
                }
            }
        }
    }
}

#[test]
fn cca2_answers_other_ciphertexts() {
    struct Probe;
    impl ntru_lab::games::Adversary<NtruScheme> for Probe {
        fn choose_messages(
            &mut self,
            pk: &ntru_lab::NtruPublicKey,
            oracles: &mut ntru_lab::games::Oracles<'_, NtruScheme>,
            _rng: &mut dyn rand::RngCore,
        ) -> (NtruPlaintext, NtruPlaintext) {
            let (m0, m1) = NtruCpaAdversary::messages(pk.params());
            let c = oracles.encrypt(&m1).unwrap();
            assert_eq!(oracles.decrypt(&c).unwrap(), m1);
            (m0, m1)
        }
        fn guess(
            &mut self,
            pk: &ntru_lab::NtruPublicKey,
            challenge: &ntru_lab::NtruCiphertext,
            oracles: &mut ntru_lab::games::Oracles<'_, NtruScheme>,
            _rng: &mut dyn rand::RngCore,
        ) -> bool {
            // e + 1 decrypts to m_b + 1 while the challenge itself is refused
            let mut shifted = challenge.poly().clone().into_coeffs();
            shifted[0] = (shifted[0] + 1) % pk.params().q().value();
            let c = ntru_lab::NtruCiphertext::new(pk.params(), ConvPoly::new(shifted).unwrap())
                .unwrap();
            let m = oracles.decrypt(&c).unwrap();
            m.poly().coeffs()[0] == -1
        }
    }
    let scheme = NtruScheme::new(params());
    let o = run_ind_cca2(&scheme, &mut Probe, &mut seeded(8)).unwrap();
    assert_eq!(o.transcript.enc_calls(), 1);
    assert_eq!(o.transcript.dec_calls(), 2);
    assert_eq!(o.transcript.refusals().count(), 0);
    let phases: Vec<Phase> = o
        .transcript
        .events
        .iter()
        .map(|e| match e {
            OracleEvent::Encrypt { phase, .. } | OracleEvent::Decrypt { phase, .. } => *phase,
        })
        .collect();
    assert_eq!(
        phases,
        vec![
            Phase::BeforeChallenge,
            Phase::BeforeChallenge,
            Phase::AfterChallenge
        ]
    );
}

#[test]
fn cca1_closes_decryption_after_challenge() {
    let scheme = NtruScheme::new(params());
    let mut adv = ChallengeDecryptingAdversary::new(NtruCpaAdversary);
    let o = run_ind_cca1(&scheme, &mut adv, &mut seeded(5)).unwrap();
    assert_eq!(
        o.transcript.refusals().collect::<Vec<_>>(),
        vec![Refusal::Closed]
    );
}

#[test]
fn cpa_has_no_decryption_oracle() {
    let scheme = NtruScheme::new(params());
    let mut adv = ChallengeDecryptingAdversary::new(NtruCpaAdversary);
    let o = run_ind_cpa(&scheme, &mut adv, &mut seeded(5)).unwrap();
    assert_eq!(
        o.transcript.refusals().collect::<Vec<_>>(),
        vec![Refusal::NotGranted]
    );
}

#[test]
fn cpa_adversary_lifted_into_cca2_still_wins() {
    let scheme = NtruScheme::new(params());
    let cpa = run_trials(
        &scheme,
        &mut NtruCpaAdversary,
        GameKind::Cpa,
        100,
        &mut seeded(12),
    )
    .unwrap();
    let cca = run_trials(
        &scheme,
        &mut NtruCpaAdversary,
        GameKind::Cca2,
        100,
        &mut seeded(12),
    )
    .unwrap();
    assert!(cca.iter().all(|o| o.win));
    // same seed, same keys, bits and challenges: the extra oracle changes nothing
    assert_eq!(cpa, cca);
}

#[test]
fn determinism_under_master_seed() {
    let p = params();
    let scheme = NtruScheme::new(p);
    let a = run_trials(
        &scheme,
        &mut CoinFlipAdversary::for_ntru(&p),
        GameKind::Cca2,
        50,
        &mut seeded(99),
    )
    .unwrap();
    let b = run_trials(
        &scheme,
        &mut CoinFlipAdversary::for_ntru(&p),
        GameKind::Cca2,
        50,
        &mut seeded(99),
    )
    .unwrap();
    assert_eq!(a, b);
    let c = run_trials(
        &scheme,
        &mut CoinFlipAdversary::for_ntru(&p),
        GameKind::Cca2,
        50,
        &mut seeded(100),
    )
    .unwrap();
    assert_ne!(a, c);
}

#[test]
fn deterministic_shift_cipher_loses_cpa() {
    let scheme = Symmetric(ShiftCipher);
    let m0 = Z26Text::encode("attackatdawn").unwrap();
    let m1 = Z26Text::encode("retreatatdus").unwrap();
    let mut adv = ReplayAdversary::new(m0, m1);
    let est = estimate_advantage(&scheme, &mut adv, GameKind::Cpa, 200, &mut seeded(13)).unwrap();
    assert_eq!(est.success_rate, 1.0);

    let scheme = Symmetric(SubstitutionCipher);
    let m0 = Z26Text::encode("aaaa").unwrap();
    let m1 = Z26Text::encode("abab").unwrap();
    let est = estimate_advantage(
        &scheme,
        &mut ReplayAdversary::new(m0, m1),
        GameKind::Cpa,
        200,
        &mut seeded(14),
    )
    .unwrap();
    assert_eq!(est.success_rate, 1.0);
}

#[test]
fn replay_does_not_help_against_ntru() {
    let p = params();
    let (m0, m1) = NtruCpaAdversary::messages(&p);
    let mut adv = ReplayAdversary::new(m0, m1);
    let est = estimate_advantage(
        &NtruScheme::new(p),
        &mut adv,
        GameKind::Cpa,
        2000,
        &mut seeded(15),
    )
    .unwrap();
    // randomized encryption: replayed ciphertexts rarely collide with the challenge
    assert!(est.success_rate < 0.6, "{est:?}");
}

#[test]
fn symmetric_key_handle_hides_the_key() {
    use ntru_lab::games::PublicKeyScheme;
    let (pk, _sk) = Symmetric(ShiftCipher).keygen(&mut seeded(1)).unwrap();
    assert_eq!(format!("{pk:?}"), "KeyHandle(..)");
}

#[test]
fn transcript_export_format() {
    let scheme = NtruScheme::new(params());
    let mut adv = ChallengeDecryptingAdversary::new(NtruCpaAdversary);
    let o = run_game(&scheme, &mut adv, GameKind::Cca2, &mut seeded(3)).unwrap();
    let b = u8::from(o.b);
    assert_eq!(
        transcript_line(7, &o),
        format!("run 7 b {b} b' {b} win 1 enc_calls 0 dec_calls 1")
    );
    assert_eq!(
        summary_line(&AdvantageEstimate::from_counts(3, 2)),
        "trials 3 wins 2 rate 0.6666666666666666"
    );
}
