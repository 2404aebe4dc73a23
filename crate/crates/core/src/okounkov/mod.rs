//! Okounkov bodies of truncated value semigroups, in the monomial case.
//!
//! A monomial valuation `ν(x^n) = Σ n_i λ_i` separates monomials, so for a
//! graded family of monomial ideals the truncated value semigroup is just the
//! set of exponent vectors `(n, i)` with `x^n ∈ A_i` and `|n| ≤ β i`. Its level
//! counts grow like `vol(Δ)·i^d`, and differences of such volumes recover
//! `ℓ(J_n/I_n)` asymptotically.

pub mod hull;
pub mod lattice;
pub mod semigroup;
pub mod valuation;
pub mod volume;

pub use semigroup::{check_cone_conditions, gamma_beta, k_fold_sum_count, semigroup_count, ConeConditions, Semigroup};
pub use valuation::{nu_value, nu_value_of_support, phi, psi, NuValue, ValuationCut, WeightVector};
pub use volume::{delta_volume, epsilon_via_volumes, gamma_beta_count, stabilize_beta, BetaStability, VolumeDifference, VolumeResult};
