//! A small laboratory for textbook NTRU.
//!
//! * [`ring`]: exact arithmetic in `Z[x]/(x^N - 1)`, reduction, center lifting,
//!   and inversion modulo primes and prime powers.
//! * [`ternary`]: the sets `T(d1, d2)` and a uniform sampler.
//! * [`ntru`]: parameter validation, keygen, encryption, decryption.
//! * [`classical`]: shift and substitution ciphers over `Z_26`.
//! * [`games`]: IND-CPA / IND-CCA1 / IND-CCA2 experiments, adversaries, and
//!   advantage estimates, including the `x = 1` distinguisher that wins the
//!   IND-CPA game against textbook NTRU every time.
//! * [`formats`]: key, ciphertext and plaintext files.
//! * [`cli`]: the `ntru-lab` command line.
//!
//! ```
//! use ntru_lab::games::{run_ind_cpa, ntru_cpa_adversary, NtruScheme};
//! use ntru_lab::ntru::validate_params;
//! use ntru_lab::random::seeded;
//!
//! let scheme = NtruScheme::new(validate_params(7, 3, 41, 2).unwrap());
//! let outcome = run_ind_cpa(&scheme, &mut ntru_cpa_adversary(), &mut seeded(1)).unwrap();
//! assert!(outcome.win);
//! ```

pub mod classical;
pub mod cli;
pub mod formats;
pub mod games;
pub mod ntru;
pub mod random;
pub mod ring;
pub mod ternary;

pub use ntru::{
    NtruCiphertext, NtruKeyPair, NtruParams, NtruPlaintext, NtruPublicKey, NtruSecretKey,
};
pub use random::RandomSource;
pub use ring::{ConvPoly, Modulus};
