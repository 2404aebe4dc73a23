//! Monomial valuations with an exact total order on values.
//!
//! Real weights that are rationally independent never give two monomials the
//! same value. Here the weights are exact rationals and ties on the weighted
//! sum are broken lexicographically on the exponent, which induces the same
//! kind of total, additive order.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<BigRational>,
}

/// First primes, used for the default weights `1, 1 + 1/2, 1 + 1/3, 1 + 1/5, ...`.
const PRIMES: [i64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

impl WeightVector {
    pub fn new(weights: Vec<BigRational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::ZeroDimension);
        }
        let one = BigRational::one();
        if let Some(index) = weights.iter().position(|w| *w < one) {
            return Err(Error::InvalidWeight { index });
        }
        Ok(WeightVector { weights })
    }

    /// `λ = (1, 1 + 1/2, 1 + 1/3, 1 + 1/5, ...)`.
    pub fn default_for(dim: usize) -> Self {
        let weights = (0..dim)
            .map(|i| match i {
                0 => BigRational::one(),
                _ => {
                    let p = PRIMES.get(i - 1).copied().unwrap_or(i as i64 * 1000 + 1);
                    BigRational::one() + BigRational::new(BigInt::one(), BigInt::from(p))
                }
            })
            .collect();
        WeightVector { weights }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }
}

/// A value `ν(x^n)`: the weighted sum, tie-broken by the exponent itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuValue {
    pub weight: BigRational,
    pub exponent: ExponentVector,
}

impl Ord for NuValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight.cmp(&other.weight).then_with(|| self.exponent.cmp(&other.exponent))
    }
}

impl PartialOrd for NuValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &NuValue {
    type Output = NuValue;

    fn add(self, rhs: &NuValue) -> NuValue {
        NuValue { weight: &self.weight + &rhs.weight, exponent: &self.exponent + &rhs.exponent }
    }
}

pub fn nu_value(e: &ExponentVector, w: &WeightVector) -> Result<NuValue> {
    if e.dim() != w.dim() {
        return Err(Error::DimensionMismatch { expected: w.dim(), found: e.dim() });
    }
    let weight = e
        .coords()
        .iter()
        .zip(&w.weights)
        .fold(BigRational::zero(), |acc, (&c, l)| acc + l * BigInt::from(c));
    Ok(NuValue { weight, exponent: e.clone() })
}

/// `ν` of a polynomial with the given support: the least monomial value.
/// `None` for the empty support (the zero polynomial).
pub fn nu_value_of_support<'a, I>(support: I, w: &WeightVector) -> Result<Option<NuValue>>
where
    I: IntoIterator<Item = &'a ExponentVector>,
{
    let mut best: Option<NuValue> = None;
    for e in support {
        let v = nu_value(e, w)?;
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    }
    Ok(best)
}

/// `K_λ = {f : ν(f) ≥ λ}`, or `K_λ^+ = {f : ν(f) > λ}` when `strict`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationCut {
    pub threshold: NuValue,
    pub strict: bool,
}

impl ValuationCut {
    pub fn contains(&self, e: &ExponentVector, w: &WeightVector) -> Result<bool> {
        let v = nu_value(e, w)?;
        Ok(if self.strict { v > self.threshold } else { v >= self.threshold })
    }
}

/// Coordinate sum of the exponent of the leading monomial.
pub fn psi(e: &ExponentVector) -> u64 {
    e.degree()
}

/// The exponent of the leading monomial.
pub fn phi(e: &ExponentVector) -> ExponentVector {
    e.clone()
}
