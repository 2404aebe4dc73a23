//! Amao and epsilon multiplicities of monomial ideals.
//!
//! For `J ⊆ I` with `ℓ(I/J) < ∞` the function `n ↦ ℓ(I^n/J^n)` is eventually a
//! polynomial of degree at most `d`, and the Amao multiplicity `a(J, I)` is `d!`
//! times its degree-`d` coefficient. That is exactly the eventual value of the
//! `d`-th forward difference, which is what [`leading_difference`] reads off.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::colength::{colength, max_quotient_degree};
use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

pub const DEFAULT_WINDOW: usize = 3;
pub const DEFAULT_K_MAX: u32 = 20;
pub const DEFAULT_M_MAX: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmaoResult {
    pub value: BigUint,
    /// 1-based index of the first sequence term whose `d`-th difference
    /// already equals the stable value.
    pub stabilized_at: usize,
    /// Length of the constant tail of the `d`-th difference sequence.
    pub window: usize,
}

/// Read the eventual `d`-th forward difference off `seq`.
///
/// Requires the last `window` differences to agree; anything shorter is
/// reported as [`Error::Inconclusive`] rather than extrapolated.
pub fn leading_difference(seq: &[BigUint], d: usize, window: usize) -> Result<AmaoResult> {
    if window == 0 {
        return Err(Error::ZeroParameter("window"));
    }
    let needed = d + window;
    if seq.len() < needed {
        return Err(Error::SequenceTooShort { len: seq.len(), needed });
    }
    let mut diffs: Vec<BigInt> = seq.iter().map(|v| BigInt::from(v.clone())).collect();
    for _ in 0..d {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let last = diffs.last().expect("len ≥ window ≥ 1");
    let tail = diffs.iter().rev().take_while(|v| *v == last).count();
    if tail < window {
        return Err(Error::Inconclusive { terms: seq.len(), tail, window });
    }
    if last.is_negative() {
        return Err(Error::NegativeLeadingDifference);
    }
    Ok(AmaoResult {
        value: last.magnitude().clone(),
        stabilized_at: diffs.len() - tail + 1,
        window: tail,
    })
}

/// `a(inner, outer)` from `ℓ(outer^k / inner^k)`, `k = 1..=k_max`.
pub fn amao(inner: &MonomialIdeal, outer: &MonomialIdeal, k_max: u32, window: usize) -> Result<AmaoResult> {
    if k_max == 0 {
        return Err(Error::ZeroParameter("k_max"));
    }
    if !inner.is_subideal(outer)? {
        return Err(Error::NotContained);
    }
    let inner_powers = inner.powers_up_to(k_max);
    let outer_powers = outer.powers_up_to(k_max);
    let seq = (1..=k_max as usize)
        .map(|k| colength(&inner_powers[k], &outer_powers[k]).map_err(|e| Error::at(k, e)))
        .collect::<Result<Vec<_>>>()?;
    leading_difference(&seq, inner.dim(), window)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonEstimate {
    /// `ℓ((I^n)^sat / I^n)` for `n = 1..=n_max`.
    pub lengths: Vec<BigUint>,
    /// `e_n = d!·ℓ_n / n^d`.
    pub values: Vec<BigRational>,
}

impl EpsilonEstimate {
    pub fn n_max(&self) -> usize {
        self.values.len()
    }

    pub fn last(&self) -> Option<&BigRational> {
        self.values.last()
    }
}

pub fn factorial(d: usize) -> BigUint {
    (1..=d).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `d!·length / n^d` as an exact rational.
pub fn normalized(length: &BigUint, n: u64, d: usize) -> BigRational {
    let num = BigInt::from(factorial(d) * length);
    let den = BigInt::from(BigUint::from(n).pow(d as u32));
    BigRational::new(num, den)
}

fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() || ideal.is_unit() {
        Err(Error::TrivialIdeal)
    } else {
        Ok(())
    }
}

pub fn epsilon_sequence(ideal: &MonomialIdeal, n_max: u32) -> Result<EpsilonEstimate> {
    require_proper(ideal)?;
    if n_max == 0 {
        return Err(Error::ZeroParameter("n_max"));
    }
    let d = ideal.dim();
    let powers = ideal.powers_up_to(n_max);
    let mut lengths = Vec::with_capacity(n_max as usize);
    let mut values = Vec::with_capacity(n_max as usize);
    for (n, p) in powers.iter().enumerate().skip(1) {
        let len = colength(p, &p.saturate()).map_err(|e| Error::at(n, e))?;
        values.push(normalized(&len, n as u64, d));
        lengths.push(len);
    }
    Ok(EpsilonEstimate { lengths, values })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremARow {
    pub m: u32,
    /// `a(I^m, (I^m)^sat)`, or why it could not be determined.
    pub amao: core::result::Result<AmaoResult, Error>,
    /// `a_m / m^d` when `a_m` is known.
    pub ratio: Option<BigRational>,
}

/// Rows `(m, a(I^m, (I^m)^sat), a_m / m^d)` for `m = 1..=m_max`.
///
/// A row that fails to stabilize keeps its error; the remaining rows are
/// still produced.
pub fn theorem_a_table(ideal: &MonomialIdeal, m_max: u32, k_max: u32, window: usize) -> Result<Vec<TheoremARow>> {
    require_proper(ideal)?;
    if m_max == 0 {
        return Err(Error::ZeroParameter("m_max"));
    }
    let d = ideal.dim();
    let powers = ideal.powers_up_to(m_max);
    Ok((1..=m_max)
        .map(|m| {
            let inner = &powers[m as usize];
            let amao = amao(inner, &inner.saturate(), k_max, window);
            let ratio = amao.as_ref().ok().map(|a| ratio_over_m_pow(&a.value, m, d));
            TheoremARow { m, amao, ratio }
        })
        .collect())
}

fn ratio_over_m_pow(value: &BigUint, m: u32, d: usize) -> BigRational {
    BigRational::new(BigInt::from(value.clone()), BigInt::from(m).pow(d as u32))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatPowerCounterexample {
    pub power: u32,
    /// A generator of `(I^sat)^i` outside `(I^i)^sat`.
    pub witness: ExponentVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatPowerCheck {
    pub i_max: u32,
    pub counterexample: Option<SatPowerCounterexample>,
}

impl SatPowerCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Check `(I^sat)^i ⊆ (I^i)^sat` for `i = 1..=i_max`.
pub fn check_sat_power_containment(ideal: &MonomialIdeal, i_max: u32) -> SatPowerCheck {
    let sat = ideal.saturate();
    let mut sat_power = MonomialIdeal::unit(ideal.dim());
    let mut power = MonomialIdeal::unit(ideal.dim());
    for i in 1..=i_max {
        sat_power = sat_power.product(&sat).expect("same dimension");
        power = power.product(ideal).expect("same dimension");
        let target = power.saturate();
        if let Some(w) = sat_power.generators().iter().find(|g| !target.contains_unchecked(g)) {
            return SatPowerCheck {
                i_max,
                counterexample: Some(SatPowerCounterexample { power: i, witness: w.clone() }),
            };
        }
    }
    SatPowerCheck { i_max, counterexample: None }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwansonPair {
    pub m: u32,
    pub k: u32,
    /// Top degree of a monomial in `((I^m)^sat)^k` outside `I^{mk}`.
    pub gap_degree: Option<u64>,
}

impl SwansonPair {
    /// Whether `I^{mk} ∩ m^{cmk} = ((I^m)^sat)^k ∩ m^{cmk}`.
    ///
    /// `I^{mk} ⊆ ((I^m)^sat)^k`, so the two truncations agree exactly when no
    /// monomial of the difference has degree `≥ cmk`.
    pub fn holds_for(&self, c: u32) -> bool {
        self.gap_degree.is_none_or(|top| top < u64::from(c) * u64::from(self.m) * u64::from(self.k))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwansonSearch {
    /// Least `c ≤ c_max` passing every tested pair. This is verified on the
    /// grid only; it is not a proof for all `(m, k)`.
    pub grid_c: Option<u32>,
    pub c_max: u32,
    pub mk_bound: u32,
    pub pairs: Vec<SwansonPair>,
}

/// Search the least `c` with `I^{mk} ∩ m^{cmk} = ((I^m)^sat)^k ∩ m^{cmk}` for all
/// `m·k ≤ mk_bound`.
pub fn swanson_c_search(ideal: &MonomialIdeal, c_max: u32, mk_bound: u32) -> Result<SwansonSearch> {
    require_proper(ideal)?;
    if c_max == 0 {
        return Err(Error::ZeroParameter("c_max"));
    }
    if mk_bound == 0 {
        return Err(Error::ZeroParameter("mk_bound"));
    }
    let powers = ideal.powers_up_to(mk_bound);
    let mut pairs = Vec::new();
    for m in 1..=mk_bound {
        let sat = powers[m as usize].saturate();
        let mut sat_power = MonomialIdeal::unit(ideal.dim());
        for k in 1..=mk_bound / m {
            sat_power = sat_power.product(&sat)?;
            let inner = &powers[(m * k) as usize];
            let gap_degree = max_quotient_degree(inner, &sat_power).map_err(|e| Error::at((m * k) as usize, e))?;
            pairs.push(SwansonPair { m, k, gap_degree });
        }
    }
    let grid_c = (1..=c_max).find(|&c| pairs.iter().all(|p| p.holds_for(c)));
    Ok(SwansonSearch { grid_c, c_max, mk_bound, pairs })
}

/// The same equality evaluated literally, by intersecting both sides with
/// `m^{cmk}`.
pub fn swanson_equality_by_intersection(ideal: &MonomialIdeal, m: u32, k: u32, c: u32) -> bool {
    let d = ideal.dim();
    let cut = MonomialIdeal::maximal_power(d, c * m * k);
    let left = ideal.power(m * k).intersect(&cut).expect("same dimension");
    let right = ideal.power(m).saturate().power(k).intersect(&cut).expect("same dimension");
    left == right
}

impl TheoremARow {
    pub fn is_zero(&self) -> bool {
        matches!(&self.amao, Ok(a) if a.value.is_zero())
    }
}
