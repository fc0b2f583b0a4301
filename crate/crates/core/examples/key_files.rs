//! Writing and reading keys, ciphertexts and letter-encoded plaintexts.

use ntru_lab::formats::{
    decode_letters, encode_letters, letter_capacity, parse_ciphertext, parse_public_key,
    parse_secret_key, write_ciphertext, write_public_key, write_secret_key,
};
use ntru_lab::ntru::{decrypt, encrypt, keygen, validate_params, NtruPlaintext};
use ntru_lab::random::seeded;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = validate_params(23, 3, 128, 3)?;
    let kp = keygen(&params, &mut seeded(5))?;

    let pub_text = write_public_key(&kp.public);
    let sec_text = write_secret_key(&kp.secret);
    print!("{pub_text}{sec_text}");

    let pk = parse_public_key(&pub_text)?;
    let sk = parse_secret_key(&sec_text)?;

    println!("room for {} letters", letter_capacity(&params));
    let m = NtruPlaintext::new(&params, encode_letters(&params, "hello")?)?;
    let c_text = write_ciphertext(&params, &encrypt(&params, &pk, &m, &mut seeded(6))?);
    print!("{c_text}");

    let (params_back, c) = parse_ciphertext(&c_text)?;
    let back = decrypt(&params_back, &sk, &c)?;
    println!("decrypted: {}", decode_letters(back.poly())?);
    Ok(())
}
