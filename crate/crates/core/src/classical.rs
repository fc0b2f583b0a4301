//! Shift and substitution ciphers over `Z_26`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

pub const ALPHABET: u8 = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassicalError {
    #[error("symbol {0} outside Z_26")]
    SymbolOutOfRange(u8),
    #[error("shift key {0} outside [0, 26)")]
    KeyOutOfRange(i64),
    #[error("InvalidPermutation: {0}")]
    InvalidPermutation(String),
    #[error("CodecError: {ch:?} at position {index} is not a letter")]
    Codec { index: usize, ch: char },
}

/// A sequence of symbols in `[0, 26)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Z26Text(Vec<u8>);

impl Z26Text {
    pub fn new(symbols: Vec<u8>) -> Result<Self, ClassicalError> {
        if let Some(&s) = symbols.iter().find(|&&s| s >= ALPHABET) {
            return Err(ClassicalError::SymbolOutOfRange(s));
        }
        Ok(Z26Text(symbols))
    }

    /// Letters to symbols, `a = 0` through `z = 25`. Case is folded; anything
    /// that is not an ASCII letter is rejected.
    pub fn encode(text: &str) -> Result<Self, ClassicalError> {
        text.chars()
            .enumerate()
            .map(|(index, ch)| {
                if ch.is_ascii_alphabetic() {
                    Ok(ch.to_ascii_lowercase() as u8 - b'a')
                } else {
                    Err(ClassicalError::Codec { index, ch })
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Z26Text)
    }

    pub fn decode(&self) -> String {
        self.0.iter().map(|&s| (b'a' + s) as char).collect()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn map(&self, f: impl Fn(u8) -> u8) -> Z26Text {
        Z26Text(self.0.iter().map(|&s| f(s)).collect())
    }
}

impl fmt::Display for Z26Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.decode())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftKey(u8);

impl ShiftKey {
    pub fn new(k: i64) -> Result<Self, ClassicalError> {
        if !(0..ALPHABET as i64).contains(&k) {
            return Err(ClassicalError::KeyOutOfRange(k));
        }
        Ok(ShiftKey(k as u8))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        ShiftKey(rng.random_range(0..ALPHABET))
    }
}

/// A permutation of `Z_26` stored as its image table, with the inverse cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationKey {
    image: [u8; 26],
    preimage: [u8; 26],
}

impl PermutationKey {
    pub fn from_table(table: &[u8]) -> Result<Self, ClassicalError> {
        if table.len() != ALPHABET as usize {
            return Err(ClassicalError::InvalidPermutation(format!(
                "expected 26 entries, got {}",
                table.len()
            )));
        }
        let mut image = [0u8; 26];
        let mut preimage = [u8::MAX; 26];
        for (x, &y) in table.iter().enumerate() {
            if y >= ALPHABET {
                return Err(ClassicalError::InvalidPermutation(format!(
                    "entry {y} out of range"
                )));
            }
            if preimage[y as usize] != u8::MAX {
                return Err(ClassicalError::InvalidPermutation(format!(
                    "{y} appears twice"
                )));
            }
            image[x] = y;
            preimage[y as usize] = x as u8;
        }
        Ok(PermutationKey { image, preimage })
    }

    /// Parses a 26-letter string giving the images of `a..z`.
    pub fn from_letters(letters: &str) -> Result<Self, ClassicalError> {
        let text = Z26Text::encode(letters)?;
        PermutationKey::from_table(text.symbols())
    }

    pub fn identity() -> Self {
        PermutationKey::rotation(ShiftKey(0))
    }

    /// The permutation `x -> x + k mod 26`.
    pub fn rotation(k: ShiftKey) -> Self {
        let table: Vec<u8> = (0..ALPHABET).map(|x| (x + k.0) % ALPHABET).collect();
        PermutationKey::from_table(&table).expect("rotation is a bijection")
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut table: Vec<u8> = (0..ALPHABET).collect();
        table.shuffle(rng);
        PermutationKey::from_table(&table).expect("shuffle is a bijection")
    }

    pub fn image(&self) -> &[u8; 26] {
        &self.image
    }

    pub fn to_letters(&self) -> String {
        Z26Text(self.image.to_vec()).decode()
    }
}

pub fn shift_encrypt(x: &Z26Text, k: ShiftKey) -> Z26Text {
    x.map(|s| (s + k.0) % ALPHABET)
}

pub fn shift_decrypt(y: &Z26Text, k: ShiftKey) -> Z26Text {
    y.map(|s| (s + ALPHABET - k.0) % ALPHABET)
}

pub fn substitution_encrypt(x: &Z26Text, pi: &PermutationKey) -> Z26Text {
    x.map(|s| pi.image[s as usize])
}

pub fn substitution_decrypt(y: &Z26Text, pi: &PermutationKey) -> Z26Text {
    y.map(|s| pi.preimage[s as usize])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::seeded;

    #[test]
    fn worked_example_numbers() {
        // the published symbol sequence, taken as given
        let x = Z26Text::new(vec![8, 0, 12, 0, 3, 0, 19]).unwrap();
        let y = shift_encrypt(&x, ShiftKey::new(13).unwrap());
        assert_eq!(y.symbols(), &[21, 13, 25, 13, 16, 13, 6]);
        assert_eq!(y.decode(), "vnznqng");
        assert_eq!(shift_decrypt(&y, ShiftKey::new(13).unwrap()), x);
    }

    #[test]
    fn worked_example_letters() {
        // with a = 0, the letter c is 2, so "iamacat" shifts to "vnznpng"
        let x = Z26Text::encode("iamacat").unwrap();
        assert_eq!(x.symbols(), &[8, 0, 12, 0, 2, 0, 19]);
        let y = shift_encrypt(&x, ShiftKey::new(13).unwrap());
        assert_eq!(y.decode(), "vnznpng");
        assert_eq!(
            Z26Text::new(vec![8, 0, 12, 0, 3, 0, 19]).unwrap().decode(),
            "iamadat"
        );
    }

    #[test]
    fn codec_edges() {
        assert_eq!(Z26Text::encode("a").unwrap().symbols(), &[0]);
        assert_eq!(Z26Text::encode("IamACat").unwrap().decode(), "iamacat");
        assert_eq!(
            Z26Text::encode("i am").unwrap_err(),
            ClassicalError::Codec { index: 1, ch: ' ' }
        );
        assert!(Z26Text::encode("caté").is_err());
        assert!(Z26Text::encode("").unwrap().is_empty());
    }

    #[test]
    fn key_ranges() {
        assert!(ShiftKey::new(25).is_ok());
        assert_eq!(
            ShiftKey::new(26).unwrap_err(),
            ClassicalError::KeyOutOfRange(26)
        );
        assert!(ShiftKey::new(-1).is_err());
        assert!(Z26Text::new(vec![0, 26]).is_err());
    }

    #[test]
    fn zero_shift_is_identity() {
        let x = Z26Text::encode("thequickbrownfox").unwrap();
        assert_eq!(shift_encrypt(&x, ShiftKey::new(0).unwrap()), x);
    }

    #[test]
    fn rotation_table_is_shift() {
        let x = Z26Text::encode("iamacat").unwrap();
        for k in 0..26 {
            let key = ShiftKey::new(k).unwrap();
            assert_eq!(
                substitution_encrypt(&x, &PermutationKey::rotation(key)),
                shift_encrypt(&x, key)
            );
        }
        assert_eq!(substitution_encrypt(&x, &PermutationKey::identity()), x);
    }

    #[test]
    fn malformed_permutations() {
        let mut table: Vec<u8> = (0..26).collect();
        table[3] = 4;
        assert!(matches!(
            PermutationKey::from_table(&table),
            Err(ClassicalError::InvalidPermutation(_))
        ));
        assert!(PermutationKey::from_table(&[0, 1, 2]).is_err());
        table[3] = 30;
        assert!(PermutationKey::from_table(&table).is_err());
        assert!(PermutationKey::from_letters("abc").is_err());
    }

    #[test]
    fn substitution_roundtrip_random_keys() {
        let mut rng = seeded(26);
        let x = Z26Text::encode("semanticsecurity").unwrap();
        for _ in 0..100 {
            let pi = PermutationKey::random(&mut rng);
            assert_eq!(substitution_decrypt(&substitution_encrypt(&x, &pi), &pi), x);
            assert_eq!(PermutationKey::from_letters(&pi.to_letters()).unwrap(), pi);
        }
    }
}
