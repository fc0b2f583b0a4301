//! With q below (6d+1)p the center lift of a(x) can wrap and decryption silently fails.

use ntru_lab::ntru::{decrypt_trace, encrypt, keygen, NtruParams, NtruPlaintext, Profile};
use ntru_lab::random::seeded;
use ntru_lab::ring::ConvPoly;
use rand::Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trials = 2000;
    for q in [16, 23, 32, 41, 64] {
        let params = NtruParams::new(7, 3, q, 2, Profile::Unchecked)?;
        let mut rng = seeded(q as u64);
        let mut failures = 0;
        for _ in 0..trials {
            let kp = keygen(&params, &mut rng)?;
            let m: Vec<i64> = (0..7).map(|_| rng.random_range(-1..=1)).collect();
            let m = NtruPlaintext::new(&params, ConvPoly::new(m)?)?;
            let e = encrypt(&params, &kp.public, &m, &mut rng)?;
            if decrypt_trace(&params, &kp.secret, &e)?.b != m {
                failures += 1;
            }
        }
        println!(
            "q = {q:>2} (bound {}): {failures}/{trials} decryption failures",
            params.twice_coefficient_bound()
        );
    }
    Ok(())
}
