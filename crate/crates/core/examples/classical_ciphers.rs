//! Shift and substitution ciphers over Z_26, and why they fail IND-CPA.

use ntru_lab::classical::{
    shift_decrypt, shift_encrypt, substitution_encrypt, PermutationKey, ShiftKey, Z26Text,
};
use ntru_lab::games::{estimate_advantage, GameKind, ReplayAdversary, ShiftCipher, Symmetric};
use ntru_lab::random::seeded;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = Z26Text::encode("iamacat")?;
    let k = ShiftKey::new(13)?;
    let y = shift_encrypt(&x, k);
    println!(
        "{x} -> {:?} -> {y} -> {}",
        y.symbols(),
        shift_decrypt(&y, k)
    );

    let pi = PermutationKey::from_letters("qwertyuiopasdfghjklzxcvbnm")?;
    println!("substitution: {x} -> {}", substitution_encrypt(&x, &pi));
    println!(
        "rotation by 13 as a permutation: {}",
        PermutationKey::rotation(k).to_letters()
    );

    let m0 = Z26Text::encode("attackatdawn")?;
    let m1 = Z26Text::encode("holdposition")?;
    let est = estimate_advantage(
        &Symmetric(ShiftCipher),
        &mut ReplayAdversary::new(m0, m1),
        GameKind::Cpa,
        100,
        &mut seeded(4),
    )?;
    println!(
        "replay adversary against the shift cipher: rate {}",
        est.success_rate
    );
    Ok(())
}
