//! Per-run transcripts and a Wilson interval for an adversary's advantage.

use ntru_lab::games::{
    run_trials, summary_line, transcript_line, AdvantageEstimate, CoinFlipAdversary, GameKind,
    NtruScheme,
};
use ntru_lab::ntru::validate_params;
use ntru_lab::random::seeded;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = validate_params(7, 3, 41, 2)?;
    let scheme = NtruScheme::new(params);
    let mut adv = CoinFlipAdversary::for_ntru(&params);
    for trials in [10, 100, 1000, 10_000] {
        let outcomes = run_trials(
            &scheme,
            &mut adv,
            GameKind::Cpa,
            trials,
            &mut seeded(trials as u64),
        )?;
        if trials == 10 {
            for (i, o) in outcomes.iter().enumerate() {
                println!("{}", transcript_line(i, o));
            }
        }
        let est = AdvantageEstimate::from_outcomes(&outcomes);
        println!(
            "{}  CI [{:.4}, {:.4}]",
            summary_line(&est),
            est.interval.0,
            est.interval.1
        );
    }
    Ok(())
}
