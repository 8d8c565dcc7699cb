use std::fmt;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// Letter `i > 0` is the generator σᵢ and `-i` its inverse. Construction
/// never simplifies; see [`BraidWord::free_reduce`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::TooFewStrands { min: 1, got: 0 });
        }
        if let Some(&bad) = letters
            .iter()
            .find(|l| **l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(Error::LetterOutOfRange {
                letter: bad,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    /// The empty word on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "braid group needs at least one strand");
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    /// σᵢ^{±1} as a one-letter word.
    pub fn generator(strands: usize, letter: i32) -> Result<Self> {
        Self::new(strands, vec![letter])
    }

    /// The positive full twist, written as Δ² with Δ from [`BraidWord::half_twist`].
    pub fn full_twist(strands: usize) -> Result<Self> {
        let half = Self::half_twist(strands)?;
        Ok(half.compose_unchecked(&half))
    }

    /// The positive half twist Δ = (σ₁)(σ₂σ₁)…(σ_{d−1}…σ₁).
    pub fn half_twist(strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::TooFewStrands { min: 1, got: 0 });
        }
        let mut letters = Vec::with_capacity(strands * (strands - 1) / 2);
        for top in 1..strands as i32 {
            letters.extend((1..=top).rev());
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.letters
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Appends `other` in place. Panics on a strand mismatch.
    pub(crate) fn extend(&mut self, other: &Self) {
        assert_eq!(self.strands, other.strands);
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn invert(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self^n` for `n ≥ 0`; negative `n` uses the inverse.
    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = Self::identity(self.strands);
        for _ in 0..n.unsigned_abs() {
            out.extend(&base);
        }
        out
    }

    /// Cancels adjacent `σᵢσᵢ⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Self {
            strands: self.strands,
            letters: stack,
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.signum())).sum()
    }

    /// Image under `B_d → S_d`, σᵢ ↦ (i i+1), as the composition
    /// `s_{l₁} ∘ s_{l₂} ∘ …` of the letters' transpositions.
    pub fn underlying_permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        // images[p] = (s_{l₁} ∘ … ∘ s_{l_k})(p); appending a letter on the right
        // precomposes, which swaps two entries.
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            images.swap(i - 1, i);
        }
        Permutation::from_images(images).expect("swaps preserve bijectivity")
    }

    /// Conjugates `self` by τ: σᵢ ↦ σ_{d−i}.
    pub fn flip(&self) -> Self {
        let d = self.strands as i32;
        Self {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .map(|&l| l.signum() * (d - l.abs()))
                .collect(),
        }
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}{:?}", self.strands, self.letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if *l > 0 {
                write!(f, "s{l}")?;
            } else {
                write!(f, "s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}
