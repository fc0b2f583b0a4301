//! The ternary sets `T(d1, d2)`: exactly `d1` coefficients equal to `+1`,
//! `d2` equal to `-1`, the rest zero.

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::ring::{ConvPoly, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TernaryError {
    #[error("T({d1},{d2}) does not fit in rank {n}")]
    ShapeTooLarge { d1: usize, d2: usize, n: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TernaryShape {
    d1: usize,
    d2: usize,
    n: usize,
}

impl TernaryShape {
    pub fn new(d1: usize, d2: usize, n: usize) -> Result<Self, TernaryError> {
        if n == 0 {
            return Err(RingError::ZeroRank.into());
        }
        if d1.checked_add(d2).is_none_or(|w| w > n) {
            return Err(TernaryError::ShapeTooLarge { d1, d2, n });
        }
        Ok(TernaryShape { d1, d2, n })
    }

    pub fn ones(&self) -> usize {
        self.d1
    }

    pub fn minus_ones(&self) -> usize {
        self.d2
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Uniform draw from `T(d1, d2)`: shuffle the coefficient multiset.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> ConvPoly {
        let mut coeffs = Vec::with_capacity(self.n);
        coeffs.extend(std::iter::repeat_n(1i64, self.d1));
        coeffs.extend(std::iter::repeat_n(-1i64, self.d2));
        coeffs.resize(self.n, 0);
        coeffs.shuffle(rng);
        ConvPoly::new(coeffs).expect("shape rank is nonzero")
    }

    pub fn contains(&self, a: &ConvPoly) -> Result<bool, RingError> {
        if a.rank() != self.n {
            return Err(RingError::RankMismatch {
                left: a.rank(),
                right: self.n,
            });
        }
        let (mut plus, mut minus) = (0, 0);
        for &c in a.coeffs() {
            match c {
                1 => plus += 1,
                -1 => minus += 1,
                0 => {}
                _ => return Ok(false),
            }
        }
        Ok(plus == self.d1 && minus == self.d2)
    }
}

pub fn sample_ternary<R: Rng + ?Sized>(shape: TernaryShape, rng: &mut R) -> ConvPoly {
    shape.sample(rng)
}

pub fn is_member(a: &ConvPoly, shape: TernaryShape) -> Result<bool, RingError> {
    shape.contains(a)
}
