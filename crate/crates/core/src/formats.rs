//! Line-oriented text files for keys, ciphertexts and plaintexts.
//!
//! ```text
//! ntru-params N p q d        ntru-params N p q d        ntru-params N p q d
//! h [h0,...,h_{N-1}]         f [...]                    e [...]
//!                            Fp [...]
//!   public key                 secret key                 ciphertext
//! ```
//!
//! A plaintext file holds a single polynomial `[m0,...]`. When `p = 3` it may
//! instead hold a lowercase letter string, packed by [`encode_letters`].

use thiserror::Error;

use crate::classical::{ClassicalError, Z26Text};
use crate::ntru::{NtruCiphertext, NtruParams, NtruPlaintext, NtruPublicKey, NtruSecretKey};
use crate::ring::ConvPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("ParseError: line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("CodecError: {0}")]
    Codec(String),
    #[error(transparent)]
    Ntru(#[from] crate::ntru::NtruError),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty lines, numbered from 1.
fn lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

pub fn params_line(params: &NtruParams) -> String {
    format!(
        "ntru-params {} {} {} {}",
        params.n(),
        params.p().value(),
        params.q().value(),
        params.d()
    )
}

fn parse_params((line, text): (usize, &str)) -> Result<NtruParams, FormatError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 5 || fields[0] != "ntru-params" {
        return Err(parse_err(line, "expected `ntru-params N p q d`"));
    }
    let num = |i: usize| {
        fields[i]
            .parse::<i64>()
            .map_err(|e| parse_err(line, format!("{:?}: {e}", fields[i])))
    };
    let (n, p, q, d) = (num(1)?, num(2)?, num(3)?, num(4)?);
    if n < 1 || d < 0 {
        return Err(parse_err(line, "N and d must be positive"));
    }
    NtruParams::detect_profile(n as usize, p, q, d as usize)
        .map_err(|e| parse_err(line, e.to_string()))
}

fn parse_tagged((line, text): (usize, &str), tag: &str) -> Result<ConvPoly, FormatError> {
    let rest = text
        .strip_prefix(tag)
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| parse_err(line, format!("expected `{tag} <poly>`")))?;
    rest.parse::<ConvPoly>()
        .map_err(|e| parse_err(line, e.to_string()))
}

fn expect_lines(text: &str, count: usize) -> Result<Vec<(usize, &str)>, FormatError> {
    let ls = lines(text);
    if ls.len() != count {
        let line = ls.get(count).map_or(ls.len() + 1, |(n, _)| *n);
        return Err(parse_err(
            line,
            format!("expected {count} lines, found {}", ls.len()),
        ));
    }
    Ok(ls)
}

fn check_rank(line: usize, poly: &ConvPoly, params: &NtruParams) -> Result<(), FormatError> {
    if poly.rank() != params.n() {
        return Err(parse_err(
            line,
            format!(
                "expected {} coefficients, found {}",
                params.n(),
                poly.rank()
            ),
        ));
    }
    Ok(())
}

pub fn write_public_key(pk: &NtruPublicKey) -> String {
    format!("{}\nh {}\n", params_line(pk.params()), pk.h())
}

pub fn parse_public_key(text: &str) -> Result<NtruPublicKey, FormatError> {
    let ls = expect_lines(text, 2)?;
    let params = parse_params(ls[0])?;
    let h = parse_tagged(ls[1], "h")?;
    check_rank(ls[1].0, &h, &params)?;
    NtruPublicKey::from_parts(params, h).map_err(|e| parse_err(ls[1].0, e.to_string()))
}

pub fn write_secret_key(sk: &NtruSecretKey) -> String {
    format!(
        "{}\nf {}\nFp {}\n",
        params_line(sk.params()),
        sk.f(),
        sk.f_p()
    )
}

pub fn parse_secret_key(text: &str) -> Result<NtruSecretKey, FormatError> {
    let ls = expect_lines(text, 3)?;
    let params = parse_params(ls[0])?;
    let f = parse_tagged(ls[1], "f")?;
    check_rank(ls[1].0, &f, &params)?;
    let f_p = parse_tagged(ls[2], "Fp")?;
    check_rank(ls[2].0, &f_p, &params)?;
    NtruSecretKey::from_parts(params, f, f_p).map_err(|e| parse_err(ls[2].0, e.to_string()))
}

pub fn write_ciphertext(params: &NtruParams, e: &NtruCiphertext) -> String {
    format!("{}\ne {}\n", params_line(params), e.poly())
}

pub fn parse_ciphertext(text: &str) -> Result<(NtruParams, NtruCiphertext), FormatError> {
    let ls = expect_lines(text, 2)?;
    let params = parse_params(ls[0])?;
    let e = parse_tagged(ls[1], "e")?;
    check_rank(ls[1].0, &e, &params)?;
    let e = NtruCiphertext::new(&params, e).map_err(|err| parse_err(ls[1].0, err.to_string()))?;
    Ok((params, e))
}

pub fn write_plaintext(m: &NtruPlaintext) -> String {
    format!("{}\n", m.poly())
}

/// Reads a plaintext file: a polynomial, or (for `p = 3`) a letter string.
pub fn parse_plaintext(params: &NtruParams, text: &str) -> Result<NtruPlaintext, FormatError> {
    let ls = lines(text);
    let poly = match ls.as_slice() {
        [] => encode_letters(params, "")?,
        [(line, body)] if body.starts_with('[') => {
            let m = body
                .parse::<ConvPoly>()
                .map_err(|e| parse_err(*line, e.to_string()))?;
            check_rank(*line, &m, params)?;
            m
        }
        [(_, body)] => encode_letters(params, body)?,
        [_, (line, _), ..] => return Err(parse_err(*line, "plaintext must be a single line")),
    };
    Ok(NtruPlaintext::new(params, poly)?)
}

/// Letters per plaintext under the `p = 3` packing.
pub fn letter_capacity(params: &NtruParams) -> usize {
    params.n() / 3
}

/// Packs letters into ternary coefficients for `p = 3`.
///
/// Letter `v` (with `a = 0`) becomes `v + 1`, written as three base-3 digits,
/// least significant first, each digit centered into `{-1, 0, 1}`. The
/// remaining coefficients are zero, and an all-zero triple marks the end.
pub fn encode_letters(params: &NtruParams, text: &str) -> Result<ConvPoly, FormatError> {
    if params.p().value() != 3 {
        return Err(FormatError::Codec(format!(
            "letter packing needs p = 3, have p = {}",
            params.p().value()
        )));
    }
    let symbols =
        Z26Text::encode(text).map_err(|e: ClassicalError| FormatError::Codec(e.to_string()))?;
    if symbols.len() > letter_capacity(params) {
        return Err(FormatError::Codec(format!(
            "{} letters exceed capacity {} for N = {}",
            symbols.len(),
            letter_capacity(params),
            params.n()
        )));
    }
    let mut coeffs = vec![0i64; params.n()];
    for (i, &s) in symbols.symbols().iter().enumerate() {
        let mut v = s as i64 + 1;
        for slot in &mut coeffs[3 * i..3 * i + 3] {
            *slot = match v % 3 {
                2 => -1,
                digit => digit,
            };
            v /= 3;
        }
    }
    Ok(ConvPoly::new(coeffs).map_err(crate::ntru::NtruError::from)?)
}

/// Inverse of [`encode_letters`].
pub fn decode_letters(m: &ConvPoly) -> Result<String, FormatError> {
    let mut symbols = Vec::new();
    for triple in m.coeffs().chunks_exact(3) {
        let mut v = 0;
        for &c in triple.iter().rev() {
            if !(-1..=1).contains(&c) {
                return Err(FormatError::Codec(format!(
                    "coefficient {c} is not ternary"
                )));
            }
            v = 3 * v + c.rem_euclid(3);
        }
        if v == 0 {
            break;
        }
        symbols.push((v - 1) as u8);
    }
    Z26Text::new(symbols)
        .map(|t| t.decode())
        .map_err(|e| FormatError::Codec(e.to_string()))
}
