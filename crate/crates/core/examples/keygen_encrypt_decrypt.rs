//! One full NTRU round trip with every intermediate printed.

use ntru_lab::ntru::{decrypt_trace, encrypt, keygen_trace, validate_params, NtruPlaintext};
use ntru_lab::random::seeded;
use ntru_lab::ring::ConvPoly;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(2024);
    let params = validate_params(11, 3, 64, 3)?;
    let mut rng = seeded(seed);

    let t = keygen_trace(&params, &mut rng)?;
    println!(
        "N={} p={} q={} d={}  seed {seed}",
        params.n(),
        params.p().value(),
        params.q().value(),
        params.d()
    );
    println!(
        "f    = {}  ({} attempt(s))",
        t.keypair.secret.f(),
        t.attempts
    );
    println!("g    = {}", t.g);
    println!("F_p  = {}", t.keypair.secret.f_p());
    println!("F_q  = {}", t.f_q);
    println!("h    = {}", t.keypair.public.h());

    let m = NtruPlaintext::new(&params, "[1,0,-1,1,1,0,0,-1,0,1,-1]".parse::<ConvPoly>()?)?;
    let e = encrypt(&params, &t.keypair.public, &m, &mut rng)?;
    println!("m    = {}", m.poly());
    println!("e    = {}", e.poly());

    let trace = decrypt_trace(&params, &t.keypair.secret, &e)?;
    println!(
        "a    = {}  (max |a| = {}, bound {})",
        trace.a_lifted,
        trace.a_lifted.max_abs(),
        params.twice_coefficient_bound() as f64 / 2.0
    );
    println!("b    = {}", trace.b.poly());
    assert_eq!(trace.b, m);
    println!("recovered the plaintext");
    Ok(())
}
