//! The x = 1 distinguisher against textbook NTRU, next to a coin-flipping baseline.

use ntru_lab::games::{
    estimate_advantage, ntru_cpa_adversary, run_ind_cpa, CoinFlipAdversary, GameKind, NtruScheme,
};
use ntru_lab::ntru::validate_params;
use ntru_lab::random::seeded;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = validate_params(107, 3, 128, 5)?;
    let scheme = NtruScheme::new(params);
    let mut rng = seeded(1);

    let o = run_ind_cpa(&scheme, &mut ntru_cpa_adversary(), &mut rng)?;
    let q = params.q().value() as i128;
    println!(
        "hidden bit {}, challenge e(1) mod q = {}, guess {}",
        u8::from(o.b),
        o.transcript
            .challenge
            .poly()
            .evaluate_at_one()
            .rem_euclid(q),
        u8::from(o.guess)
    );

    let attack = estimate_advantage(
        &scheme,
        &mut ntru_cpa_adversary(),
        GameKind::Cpa,
        500,
        &mut rng,
    )?;
    let coin = estimate_advantage(
        &scheme,
        &mut CoinFlipAdversary::for_ntru(&params),
        GameKind::Cpa,
        500,
        &mut rng,
    )?;
    for (name, est) in [("x = 1 distinguisher", attack), ("coin flip", coin)] {
        println!(
            "{name:<20} rate {:.3}  advantage {:+.3}  95% CI [{:.3}, {:.3}]",
            est.success_rate,
            est.advantage(),
            est.interval.0,
            est.interval.1
        );
    }
    Ok(())
}
