//! Decryption oracles in the CCA1 and CCA2 games, and what they refuse.

use ntru_lab::games::{
    ntru_cpa_adversary, run_game, ChallengeDecryptingAdversary, DecryptOutcome, GameKind,
    NtruScheme, OracleEvent,
};
use ntru_lab::ntru::validate_params;
use ntru_lab::random::seeded;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let scheme = NtruScheme::new(validate_params(7, 3, 41, 2)?);
    for kind in [GameKind::Cpa, GameKind::Cca1, GameKind::Cca2] {
        let mut adv = ChallengeDecryptingAdversary::new(ntru_cpa_adversary());
        let o = run_game(&scheme, &mut adv, kind, &mut seeded(3))?;
        println!("{kind:?}: win {}", o.win);
        for event in &o.transcript.events {
            if let OracleEvent::Decrypt {
                phase,
                ciphertext,
                outcome,
            } = event
            {
                let verdict = match outcome {
                    DecryptOutcome::Answered => "answered".to_string(),
                    DecryptOutcome::Refused(r) => format!("refused ({r:?})"),
                    DecryptOutcome::Failed => "failed".to_string(),
                };
                println!(
                    "  decrypt {} during {phase:?}: {verdict}",
                    ciphertext.poly()
                );
            }
        }
    }
    Ok(())
}
