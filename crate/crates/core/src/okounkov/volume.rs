//! Volumes of Okounkov bodies and the volume-difference formula for `ε`.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Signed;

use super::hull::convex_hull_volume;
use super::semigroup::{semigroup_count, Semigroup};
use super::valuation::WeightVector;
use crate::colength::count_up_to_degree;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::multiplicity::normalized;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeResult {
    /// `vol(Δ(S))` when it can be computed from a hull.
    pub exact: Option<BigRational>,
    /// `#S_n / n^d` at `n = n_used`.
    pub estimate: BigRational,
    pub count: u128,
    pub n_used: u32,
}

/// `#S_n / n^d`, plus the exact volume when `S` is generated in degree one
/// (then `Δ(S)` is the convex hull of the generators) and `d ≤ 3`.
pub fn delta_volume(s: &Semigroup, n_probe: u32) -> Result<VolumeResult> {
    if n_probe == 0 {
        return Err(Error::ZeroParameter("n_probe"));
    }
    let count = semigroup_count(s, n_probe)?;
    let estimate = count_ratio(count, n_probe, s.dim());
    let exact = s.degree_one_generators().and_then(|gens| {
        let pts: Vec<Vec<i64>> = gens.iter().map(|g| g.iter().map(|&c| i64::from(c)).collect()).collect();
        if pts.is_empty() {
            return None;
        }
        convex_hull_volume(&pts, s.dim())
    });
    Ok(VolumeResult { exact, estimate, count, n_used: n_probe })
}

pub fn count_ratio(count: u128, n: u32, d: usize) -> BigRational {
    BigRational::new(BigInt::from(count), BigInt::from(n).pow(d as u32))
}

/// `#Γ_β(𝒜)_n` for the ideal `A_n`: the monomials of `A_n` of degree `≤ β n`.
pub fn gamma_beta_count(ideal: &MonomialIdeal, beta: u32, n: u32) -> Result<u128> {
    count_up_to_degree(ideal, u64::from(beta) * u64::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeDifference {
    pub beta: u32,
    pub n_probe: u32,
    /// `#Γ_β(sat-powers)_n`.
    pub outer_count: u128,
    /// `#Γ_β(powers)_n`.
    pub inner_count: u128,
    /// `d!·(outer_count - inner_count) / n^d`.
    pub value: BigRational,
}

/// `d!·(vol Δ(Γ_β(J)) - vol Δ(Γ_β(I)))` with `I_n = I^n`, `J_n = (I^n)^sat`,
/// each volume estimated by its level count at `n_probe`.
///
/// The counts only depend on `ψ`, not on the weights; `w` fixes the valuation
/// and must match the ambient dimension.
pub fn epsilon_via_volumes(ideal: &MonomialIdeal, beta: u32, n_probe: u32, w: &WeightVector) -> Result<VolumeDifference> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::TrivialIdeal);
    }
    if w.dim() != ideal.dim() {
        return Err(Error::DimensionMismatch { expected: ideal.dim(), found: w.dim() });
    }
    if beta == 0 {
        return Err(Error::ZeroParameter("beta"));
    }
    if n_probe == 0 {
        return Err(Error::ZeroParameter("n_probe"));
    }
    let inner = ideal.power(n_probe);
    let outer = inner.saturate();
    let inner_count = gamma_beta_count(&inner, beta, n_probe)?;
    let outer_count = gamma_beta_count(&outer, beta, n_probe)?;
    let diff = outer_count.checked_sub(inner_count).ok_or(Error::NotContained)?;
    let value = normalized(&BigUint::from(diff), u64::from(n_probe), ideal.dim());
    Ok(VolumeDifference { beta, n_probe, outer_count, inner_count, value })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaStability {
    pub trail: Vec<VolumeDifference>,
    /// The `β` whose value agreed with the previous one within tolerance.
    pub stable_beta: Option<u32>,
}

/// Double `β` from `beta0` until two successive volume differences agree
/// within `tolerance`, trying at most `max_doublings` doublings.
pub fn stabilize_beta(
    ideal: &MonomialIdeal,
    beta0: u32,
    n_probe: u32,
    w: &WeightVector,
    tolerance: &BigRational,
    max_doublings: u32,
) -> Result<BetaStability> {
    let mut trail = Vec::new();
    let mut beta = beta0;
    trail.push(epsilon_via_volumes(ideal, beta, n_probe, w)?);
    for _ in 0..max_doublings {
        beta = beta.checked_mul(2).ok_or(Error::Overflow)?;
        let next = epsilon_via_volumes(ideal, beta, n_probe, w)?;
        let close = (&next.value - &trail.last().expect("nonempty").value).abs() <= *tolerance;
        trail.push(next);
        if close {
            return Ok(BetaStability { trail, stable_beta: Some(beta) });
        }
    }
    Ok(BetaStability { trail, stable_beta: None })
}
