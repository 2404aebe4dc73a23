//! Exact lengths `ℓ(J/I)` for monomial ideals `I ⊆ J`.
//!
//! `J/I` has a `k`-basis given by the monomials of `J` outside `I`, so the
//! length is a lattice-point count. The count runs a descent over the first
//! `d - 1` coordinates; along the last coordinate both staircases are
//! half-lines `[t_J, ∞)` and `[t_I, ∞)`, which contribute `t_I - t_J` points
//! in closed form.
//!
//! When `J ⊆ I^sat`, every monomial of `J` outside `I` has `e_i < a_i` where
//! `a_i` is the largest exponent of `x_i` among the generators of `I`: if
//! `e_i ≥ a_i` and `e + N·1_i ∈ I`, the generator witnessing this already
//! divides `e`. That box bounds the descent.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::family::GradedFamilySpec;
use crate::monomial::{ExponentVector, MonomialIdeal};

/// `J/I` has finite length, i.e. `J ⊆ I^sat`. Requires `I ⊆ J`.
pub fn is_finite_colength(inner: &MonomialIdeal, outer: &MonomialIdeal) -> Result<bool> {
    if !inner.is_subideal(outer)? {
        return Err(Error::NotContained);
    }
    outer.is_subideal(&inner.saturate())
}

/// Exact `ℓ(outer / inner)`.
pub fn colength(inner: &MonomialIdeal, outer: &MonomialIdeal) -> Result<BigUint> {
    Ok(BigUint::from(quotient_profile(inner, outer)?.count))
}

/// Largest total degree of a monomial in `outer` but not in `inner`, or `None`
/// when the ideals coincide.
pub fn max_quotient_degree(inner: &MonomialIdeal, outer: &MonomialIdeal) -> Result<Option<u64>> {
    Ok(quotient_profile(inner, outer)?.max_degree)
}

/// Count and top degree of the monomials in `outer \ inner`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientProfile {
    pub count: u128,
    pub max_degree: Option<u64>,
}

pub fn quotient_profile(inner: &MonomialIdeal, outer: &MonomialIdeal) -> Result<QuotientProfile> {
    if !is_finite_colength(inner, outer)? {
        return Err(Error::InfiniteLength);
    }
    let mut profile = QuotientProfile { count: 0, max_degree: None };
    if inner == outer {
        return Ok(profile);
    }
    let bounds = inner.max_exponents();
    let inner_gens: Vec<&ExponentVector> = inner.generators().iter().collect();
    let outer_gens: Vec<&ExponentVector> = outer.generators().iter().collect();
    let mut walk = QuotientWalk { bounds: &bounds, profile: &mut profile };
    walk.descend(0, 0, &inner_gens, &outer_gens)?;
    Ok(profile)
}

struct QuotientWalk<'a> {
    bounds: &'a [u32],
    profile: &'a mut QuotientProfile,
}

impl QuotientWalk<'_> {
    fn descend(
        &mut self,
        axis: usize,
        prefix_degree: u64,
        inner: &[&ExponentVector],
        outer: &[&ExponentVector],
    ) -> Result<()> {
        let last = self.bounds.len() - 1;
        if outer.is_empty() {
            return Ok(());
        }
        if axis == last {
            let t_inner = inner.iter().map(|g| g.coords()[last]).min();
            let t_outer = outer.iter().map(|g| g.coords()[last]).min().expect("nonempty");
            let t_inner = t_inner.ok_or(Error::InfiniteLength)?;
            if t_outer < t_inner {
                let run = u128::from(t_inner - t_outer);
                self.profile.count = self.profile.count.checked_add(run).ok_or(Error::Overflow)?;
                let top = prefix_degree + u64::from(t_inner) - 1;
                self.profile.max_degree = Some(self.profile.max_degree.map_or(top, |m| m.max(top)));
            }
            return Ok(());
        }
        let inner_sorted = sorted_by_axis(inner, axis);
        let outer_sorted = sorted_by_axis(outer, axis);
        let (mut ni, mut no) = (0, 0);
        for v in 0..self.bounds[axis] {
            while ni < inner_sorted.len() && inner_sorted[ni].coords()[axis] <= v {
                ni += 1;
            }
            while no < outer_sorted.len() && outer_sorted[no].coords()[axis] <= v {
                no += 1;
            }
            self.descend(axis + 1, prefix_degree + u64::from(v), &inner_sorted[..ni], &outer_sorted[..no])?;
        }
        Ok(())
    }
}

fn sorted_by_axis<'a>(gens: &[&'a ExponentVector], axis: usize) -> Vec<&'a ExponentVector> {
    let mut v = gens.to_vec();
    v.sort_by_key(|g| g.coords()[axis]);
    v
}

/// `#{e ∈ I : |e| ≤ max_degree}`.
pub fn count_up_to_degree(ideal: &MonomialIdeal, max_degree: u64) -> Result<u128> {
    let gens: Vec<&ExponentVector> = ideal.generators().iter().collect();
    let mut total = 0u128;
    count_descend(ideal.dim(), 0, max_degree, &gens, &mut total)?;
    Ok(total)
}

fn count_descend(
    dim: usize,
    axis: usize,
    budget: u64,
    active: &[&ExponentVector],
    total: &mut u128,
) -> Result<()> {
    if active.is_empty() {
        return Ok(());
    }
    if axis + 1 == dim {
        let t = active.iter().map(|g| u64::from(g.coords()[axis])).min().expect("nonempty");
        if t <= budget {
            *total = total.checked_add(u128::from(budget - t + 1)).ok_or(Error::Overflow)?;
        }
        return Ok(());
    }
    let sorted = sorted_by_axis(active, axis);
    let mut n = 0;
    for v in 0..=budget {
        while n < sorted.len() && u64::from(sorted[n].coords()[axis]) <= v {
            n += 1;
        }
        count_descend(dim, axis + 1, budget - v, &sorted[..n], total)?;
    }
    Ok(())
}

/// `[ℓ(famJ(n) / famI(n))]` for `n = 1..=n_max`.
pub fn length_sequence(
    fam_inner: &GradedFamilySpec,
    fam_outer: &GradedFamilySpec,
    n_max: u32,
) -> Result<Vec<BigUint>> {
    if n_max == 0 {
        return Err(Error::ZeroParameter("n_max"));
    }
    let inner = fam_inner.ideals_up_to(n_max);
    let outer = fam_outer.ideals_up_to(n_max);
    (1..=n_max as usize)
        .map(|n| colength(&inner[n], &outer[n]).map_err(|e| Error::at(n, e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilyKind;

    fn ideal(dim: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(dim, rows).unwrap()
    }

    #[test]
    fn finite_colength_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let x = ideal(2, &[&[1, 0]]);
        assert!(is_finite_colength(&i, &x).unwrap());
        let x2 = ideal(2, &[&[2, 0]]);
        assert!(!is_finite_colength(&x2, &x).unwrap());
        assert!(is_finite_colength(&i, &i).unwrap());
        assert_eq!(is_finite_colength(&x, &i), Err(Error::NotContained));
    }

    #[test]
    fn colength_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let x = ideal(2, &[&[1, 0]]);
        assert_eq!(colength(&i, &x).unwrap(), BigUint::from(1u32));
        let m3 = MonomialIdeal::maximal(2).power(3);
        assert_eq!(colength(&m3, &MonomialIdeal::unit(2)).unwrap(), BigUint::from(6u32));
        assert_eq!(colength(&x, &x).unwrap(), BigUint::from(0u32));
        let x2 = ideal(2, &[&[2, 0]]);
        assert_eq!(colength(&x2, &x), Err(Error::InfiniteLength));
    }

    #[test]
    fn colength_in_one_variable() {
        let x5 = ideal(1, &[&[5]]);
        assert_eq!(colength(&x5, &MonomialIdeal::unit(1)).unwrap(), BigUint::from(5u32));
        assert_eq!(max_quotient_degree(&x5, &MonomialIdeal::unit(1)).unwrap(), Some(4));
    }

    #[test]
    fn max_degree_of_quotient() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let x = ideal(2, &[&[1, 0]]);
        assert_eq!(max_quotient_degree(&i, &x).unwrap(), Some(1));
        assert_eq!(max_quotient_degree(&x, &x).unwrap(), None);
        let m3 = MonomialIdeal::maximal(2).power(3);
        assert_eq!(max_quotient_degree(&m3, &MonomialIdeal::unit(2)).unwrap(), Some(2));
    }

    #[test]
    fn sequences() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let pow = GradedFamilySpec::new(FamilyKind::Powers, i.clone());
        let sat = GradedFamilySpec::new(FamilyKind::SaturatedPowers, i.clone());
        let seq = length_sequence(&pow, &sat, 4).unwrap();
        assert_eq!(seq, [1u32, 3, 6, 10].map(BigUint::from).to_vec());
        assert!(length_sequence(&pow, &pow, 3).unwrap().iter().all(|l| *l == BigUint::from(0u32)));
        let m2 = GradedFamilySpec::new(FamilyKind::FixedPower { m: 2 }, MonomialIdeal::maximal(2));
        let unit = GradedFamilySpec::constant_unit(2);
        let seq = length_sequence(&m2, &unit, 3).unwrap();
        assert_eq!(seq, [3u32, 10, 21].map(BigUint::from).to_vec());
    }

    #[test]
    fn sequence_errors_carry_index() {
        let x2 = GradedFamilySpec::new(FamilyKind::Powers, ideal(2, &[&[2, 0]]));
        let x = GradedFamilySpec::new(FamilyKind::Powers, ideal(2, &[&[1, 0]]));
        let err = length_sequence(&x2, &x, 3).unwrap_err();
        assert_eq!(err, Error::at(1, Error::InfiniteLength));
    }

    #[test]
    fn counting_up_to_degree() {
        // the full simplex of degree ≤ 4 in d = 2 has 15 points
        assert_eq!(count_up_to_degree(&MonomialIdeal::unit(2), 4).unwrap(), 15);
        let x = ideal(2, &[&[1, 0]]);
        // x·(simplex of degree ≤ 3)
        assert_eq!(count_up_to_degree(&x, 4).unwrap(), 10);
        assert_eq!(count_up_to_degree(&MonomialIdeal::zero(3), 4).unwrap(), 0);
    }
}
