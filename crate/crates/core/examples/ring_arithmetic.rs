//! Convolution products, center lifts and inverses in Z[x]/(x^N - 1).

use ntru_lab::ring::{ConvPoly, Modulus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a: ConvPoly = "[1,-2,0,4,-1]".parse()?;
    let b: ConvPoly = "[3,2,-4,1,0]".parse()?;
    println!("a       = {a}");
    println!("b       = {b}");
    println!("a * b   = {}", a.mul(&b)?);

    let q = Modulus::new(32)?;
    let prod = a.mul_mod(&b, q)?;
    println!("a * b mod 32         = {prod}");
    println!("center-lifted mod 32 = {}", prod.center_lift(q));

    let f: ConvPoly = "[-1,1,1,0,-1,0,1]".parse()?;
    for m in [3, 41, 64] {
        let m = Modulus::new(m)?;
        let inv = f.invert_mod(m)?;
        println!(
            "f^-1 mod {:>2} = {inv}   (f * f^-1 = {})",
            m.value(),
            f.mul_mod(&inv, m)?
        );
    }

    let balanced: ConvPoly = "[1,-1,0,1,-1,0,0]".parse()?;
    println!(
        "T(2,2) example {balanced} at x = 1: {}",
        balanced.evaluate_at_one()
    );
    println!("inverse mod 3: {:?}", balanced.invert_mod(Modulus::new(3)?));
    Ok(())
}
