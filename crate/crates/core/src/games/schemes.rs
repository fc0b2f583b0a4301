use std::fmt;

use rand::RngCore;

use super::PublicKeyScheme;
use crate::classical::{
    shift_decrypt, shift_encrypt, substitution_decrypt, substitution_encrypt, ClassicalError,
    PermutationKey, ShiftKey, Z26Text,
};
use crate::ntru::{
    self, NtruCiphertext, NtruError, NtruParams, NtruPlaintext, NtruPublicKey, NtruSecretKey,
};

/// Textbook NTRU under a fixed parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NtruScheme {
    pub params: NtruParams,
}

impl NtruScheme {
    pub fn new(params: NtruParams) -> Self {
        NtruScheme { params }
    }
}

impl PublicKeyScheme for NtruScheme {
    type PublicKey = NtruPublicKey;
    type SecretKey = NtruSecretKey;
    type Plaintext = NtruPlaintext;
    type Ciphertext = NtruCiphertext;
    type Error = NtruError;

    fn keygen(&self, rng: &mut dyn RngCore) -> Result<(NtruPublicKey, NtruSecretKey), NtruError> {
        let kp = ntru::keygen(&self.params, rng)?;
        Ok((kp.public, kp.secret))
    }

    fn encrypt(
        &self,
        pk: &NtruPublicKey,
        m: &NtruPlaintext,
        rng: &mut dyn RngCore,
    ) -> Result<NtruCiphertext, NtruError> {
        ntru::encrypt(&self.params, pk, m, rng)
    }

    fn decrypt(&self, sk: &NtruSecretKey, c: &NtruCiphertext) -> Result<NtruPlaintext, NtruError> {
        ntru::decrypt(&self.params, sk, c)
    }

    fn is_valid_plaintext(&self, m: &NtruPlaintext) -> bool {
        self.params.check_plaintext(m.poly()).is_ok()
    }
}

/// A deterministic secret-key cipher.
pub trait SymmetricCipher {
    type Key: Clone;
    type Plaintext: Clone + PartialEq + fmt::Debug;
    type Ciphertext: Clone + PartialEq + fmt::Debug;

    fn keygen(&self, rng: &mut dyn RngCore) -> Self::Key;
    fn encrypt(&self, key: &Self::Key, m: &Self::Plaintext) -> Self::Ciphertext;
    fn decrypt(&self, key: &Self::Key, c: &Self::Ciphertext) -> Self::Plaintext;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ShiftCipher;

impl SymmetricCipher for ShiftCipher {
    type Key = ShiftKey;
    type Plaintext = Z26Text;
    type Ciphertext = Z26Text;

    fn keygen(&self, rng: &mut dyn RngCore) -> ShiftKey {
        ShiftKey::random(rng)
    }

    fn encrypt(&self, key: &ShiftKey, m: &Z26Text) -> Z26Text {
        shift_encrypt(m, *key)
    }

    fn decrypt(&self, key: &ShiftKey, c: &Z26Text) -> Z26Text {
        shift_decrypt(c, *key)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SubstitutionCipher;

impl SymmetricCipher for SubstitutionCipher {
    type Key = PermutationKey;
    type Plaintext = Z26Text;
    type Ciphertext = Z26Text;

    fn keygen(&self, rng: &mut dyn RngCore) -> PermutationKey {
        PermutationKey::random(rng)
    }

    fn encrypt(&self, key: &PermutationKey, m: &Z26Text) -> Z26Text {
        substitution_encrypt(m, key)
    }

    fn decrypt(&self, key: &PermutationKey, c: &Z26Text) -> Z26Text {
        substitution_decrypt(c, key)
    }
}

/// Opaque stand-in for a symmetric key in the public-key harness. The
/// adversary can hand it back to the scheme but cannot read the key.
#[derive(Clone)]
pub struct KeyHandle<K>(K);

impl<K> fmt::Debug for KeyHandle<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("KeyHandle(..)")
    }
}

/// Runs a symmetric cipher inside the public-key experiments: the adversary
/// gets encryption (through [`KeyHandle`]) but never the key itself.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Symmetric<C>(pub C);

impl<C: SymmetricCipher> PublicKeyScheme for Symmetric<C> {
    type PublicKey = KeyHandle<C::Key>;
    type SecretKey = C::Key;
    type Plaintext = C::Plaintext;
    type Ciphertext = C::Ciphertext;
    type Error = ClassicalError;

    fn keygen(&self, rng: &mut dyn RngCore) -> Result<(KeyHandle<C::Key>, C::Key), ClassicalError> {
        let key = self.0.keygen(rng);
        Ok((KeyHandle(key.clone()), key))
    }

    fn encrypt(
        &self,
        pk: &KeyHandle<C::Key>,
        m: &C::Plaintext,
        _rng: &mut dyn RngCore,
    ) -> Result<C::Ciphertext, ClassicalError> {
        Ok(self.0.encrypt(&pk.0, m))
    }

    fn decrypt(&self, sk: &C::Key, c: &C::Ciphertext) -> Result<C::Plaintext, ClassicalError> {
        Ok(self.0.decrypt(sk, c))
    }

    fn is_valid_plaintext(&self, _m: &C::Plaintext) -> bool {
        true
    }
}
