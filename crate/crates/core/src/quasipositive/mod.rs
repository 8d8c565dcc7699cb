//! Factorizations of the full twist into band factors `g σ₁^{εk} g⁻¹`.

mod hurwitz;

pub use hurwitz::{hurwitz_move, hurwitz_orbit, Direction, Orbit, OrbitKey};

use std::fmt;

use serde::Serialize;

use crate::braid::{self, BraidWord};
use crate::error::{Error, Result};

/// Sign ε of a band: the sign of the tangency or singularity it records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn from_i64(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(Error::BadSign(other)),
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// One band factor `g σ₁^{εk} g⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BandFactor {
    conjugator: BraidWord,
    exponent: u32,
    sign: Sign,
}

impl BandFactor {
    /// Builds a factor; the conjugator is stored free-reduced.
    pub fn new(conjugator: BraidWord, exponent: u32, sign: Sign) -> Result<Self> {
        if conjugator.strands() < 2 {
            return Err(Error::TooFewStrands {
                min: 2,
                got: conjugator.strands(),
            });
        }
        if exponent < 1 {
            return Err(Error::BadExponent(i64::from(exponent)));
        }
        Ok(Self {
            conjugator: conjugator.free_reduce(),
            exponent,
            sign,
        })
    }

    /// The smooth band `g σ₁ g⁻¹`.
    pub fn positive(conjugator: BraidWord) -> Result<Self> {
        Self::new(conjugator, 1, Sign::Positive)
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn strands(&self) -> usize {
        self.conjugator.strands()
    }

    /// εk, this factor's contribution to the exponent sum.
    pub fn signed_exponent(&self) -> i64 {
        self.sign.as_i64() * i64::from(self.exponent)
    }

    pub fn is_smooth(&self) -> bool {
        self.exponent == 1 && self.sign == Sign::Positive
    }

    /// The word `g σ₁^{εk} g⁻¹`.
    pub fn expand(&self) -> BraidWord {
        let d = self.strands();
        let core = BraidWord::generator(d, 1)
            .expect("d >= 2")
            .pow(self.signed_exponent());
        let mut w = self.conjugator.clone();
        w.extend(&core);
        w.extend(&self.conjugator.invert());
        w
    }
}

/// A band factor recording an A-type singularity: `g σ₁^{εn} g⁻¹`.
pub fn singular_factor(conjugator: BraidWord, n: i64, sign: Sign) -> Result<BandFactor> {
    if n < 1 {
        return Err(Error::BadExponent(n));
    }
    let exponent = u32::try_from(n).map_err(|_| Error::BadExponent(n))?;
    BandFactor::new(conjugator, exponent, sign)
}

/// An ordered list of band factors whose product should be Δ²_d.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    strands: usize,
    factors: Vec<BandFactor>,
}

impl Factorization {
    pub fn new(strands: usize, factors: Vec<BandFactor>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::TooFewStrands { min: 1, got: 0 });
        }
        for f in &factors {
            if f.strands() != strands {
                return Err(Error::StrandMismatch {
                    left: strands,
                    right: f.strands(),
                });
            }
        }
        Ok(Self { strands, factors })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[BandFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn into_factors(self) -> Vec<BandFactor> {
        self.factors
    }

    /// Every factor has ε = +1 and k = 1.
    pub fn is_smooth(&self) -> bool {
        self.factors.iter().all(BandFactor::is_smooth)
    }

    /// Σ εᵢkᵢ.
    pub fn signed_exponent_sum(&self) -> i64 {
        self.factors.iter().map(BandFactor::signed_exponent).sum()
    }

    /// Total free-reduced conjugator length Σ|gᵢ|.
    pub fn conjugator_length(&self) -> usize {
        self.factors.iter().map(|f| f.conjugator.len()).sum()
    }

    /// Product of the factors in order.
    pub fn expand(&self) -> BraidWord {
        let mut w = BraidWord::identity(self.strands);
        for f in &self.factors {
            w.extend(&f.expand());
        }
        w
    }

    /// Conjugates every factor by `h`. The product of the result is
    /// `h Δ² h⁻¹ = Δ²`, so validity is preserved.
    pub fn conjugate_all(&self, h: &BraidWord) -> Result<Self> {
        let factors = self
            .factors
            .iter()
            .map(|f| {
                let g = h.compose(&f.conjugator)?;
                BandFactor::new(g, f.exponent, f.sign)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.strands, factors)
    }

    pub fn replace_factor(&mut self, index: usize, factor: BandFactor) -> Result<()> {
        if factor.strands() != self.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: factor.strands(),
            });
        }
        self.factors[index] = factor;
        Ok(())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for b in &self.factors {
            write!(f, " ({} | {})", b.conjugator, b.signed_exponent())?;
        }
        Ok(())
    }
}

/// Result of [`validate`]. Invalid input gives failing flags, never an error.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub strands: usize,
    pub factor_count: usize,
    pub exponent_sum: i64,
    pub expected_exponent_sum: i64,
    /// The product equals Δ²_d.
    pub product_ok: bool,
    /// Σ εᵢkᵢ = d(d−1).
    pub sum_ok: bool,
    /// n = d² − d; only checked for smooth factorizations.
    pub count_ok: Option<bool>,
    pub smooth: bool,
    /// Factors with ε = −1. Accepted here, rejected by diagram assembly.
    pub negative_factors: Vec<usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.product_ok && self.sum_ok && self.count_ok.unwrap_or(true)
    }
}

pub fn validate(f: &Factorization) -> ValidationReport {
    let d = f.strands();
    let expected = (d * (d - 1)) as i64;
    let exponent_sum = f.signed_exponent_sum();
    let twist = BraidWord::full_twist(d).expect("d >= 1");
    let product_ok = braid::equal(&f.expand(), &twist).expect("same strands");
    let smooth = f.is_smooth();
    ValidationReport {
        strands: d,
        factor_count: f.len(),
        exponent_sum,
        expected_exponent_sum: expected,
        product_ok,
        sum_ok: exponent_sum == expected,
        count_ok: smooth.then(|| f.len() == d * d - d),
        smooth,
        negative_factors: f
            .factors()
            .iter()
            .enumerate()
            .filter(|(_, b)| b.sign == Sign::Negative)
            .map(|(i, _)| i)
            .collect(),
    }
}

/// Conjugator `(σ_{i−1}σᵢ)(σ_{i−2}σ_{i−1})⋯(σ₁σ₂)` carrying σ₁ to σᵢ.
fn cascade_conjugator(d: usize, i: usize) -> BraidWord {
    let mut letters = Vec::with_capacity(2 * (i - 1));
    for j in (1..i as i32).rev() {
        letters.extend_from_slice(&[j, j + 1]);
    }
    BraidWord::new(d, letters).expect("indices below d")
}

/// The factorization read off `Δ² = (σ₁σ₂⋯σ_{d−1})^d`, rewriting each σᵢ as
/// a conjugate of σ₁.
pub fn standard_factorization(d: usize) -> Result<Factorization> {
    if d < 2 {
        return Err(Error::TooFewStrands { min: 2, got: d });
    }
    let mut factors = Vec::with_capacity(d * (d - 1));
    for _ in 0..d {
        for i in 1..d {
            factors.push(BandFactor::positive(cascade_conjugator(d, i))?);
        }
    }
    Factorization::new(d, factors)
}
