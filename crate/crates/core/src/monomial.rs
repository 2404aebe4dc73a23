//! Monomial ideals in `k[x_1, ..., x_d]`, stored by their minimal generators.
//!
//! Every constructor and operation returns a minimal generating set sorted
//! lexicographically, so structural equality is ideal equality.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use crate::error::{Error, Result};

/// Exponent of a monomial: a point of `N^d`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: Vec<u32>) -> Self {
        ExponentVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    /// The exponent of the variable `x_{index+1}`.
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = vec![0; dim];
        v[index] = 1;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.0
    }

    /// Total degree `n_1 + ... + n_d`.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise `self ≤ other`, i.e. the monomial `self` divides `other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn join(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    /// `max(self - other, 0)` componentwise: the generator of `(self) : (other)`.
    pub fn saturating_sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.saturating_sub(b)).collect())
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: dim, found: self.dim() })
        }
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;

    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

/// Reduce `gens` to the antichain of its componentwise-minimal elements.
pub fn minimalize<I>(gens: I, dim: usize) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = ExponentVector>,
{
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut all: Vec<ExponentVector> = Vec::new();
    for g in gens {
        g.check_dim(dim)?;
        all.push(g);
    }
    Ok(MonomialIdeal { dim, gens: minimal_antichain(all) })
}

// A divisor has degree at most that of its multiple, so after sorting by
// degree each candidate only needs checking against already accepted ones.
fn minimal_antichain(mut all: Vec<ExponentVector>) -> Vec<ExponentVector> {
    all.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for g in all {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable();
    kept
}

impl MonomialIdeal {
    pub fn new<I>(dim: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        minimalize(gens, dim)
    }

    /// Convenience constructor from raw coordinate rows.
    pub fn from_rows(dim: usize, rows: &[&[u32]]) -> Result<Self> {
        minimalize(rows.iter().map(|r| ExponentVector::new(r.to_vec())), dim)
    }

    pub fn zero(dim: usize) -> Self {
        MonomialIdeal { dim, gens: Vec::new() }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal { dim, gens: vec![ExponentVector::zero(dim)] }
    }

    /// The maximal ideal `m = (x_1, ..., x_d)`.
    pub fn maximal(dim: usize) -> Self {
        MonomialIdeal { dim, gens: (0..dim).rev().map(|i| ExponentVector::unit(dim, i)).collect() }
    }

    /// `m^n`: every monomial of degree exactly `n`.
    pub fn maximal_power(dim: usize, n: u32) -> Self {
        let mut gens = Vec::new();
        let mut cur = vec![0u32; dim];
        compositions(&mut cur, 0, n, &mut gens);
        gens.sort_unstable();
        MonomialIdeal { dim, gens }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    /// Largest exponent of each variable among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for g in &self.gens {
            for (o, &c) in out.iter_mut().zip(g.coords()) {
                *o = (*o).max(c);
            }
        }
        out
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.gens.iter().map(ExponentVector::degree).max().unwrap_or(0)
    }

    fn check_same(&self, other: &MonomialIdeal) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, found: other.dim })
        }
    }

    pub fn contains(&self, e: &ExponentVector) -> Result<bool> {
        e.check_dim(self.dim)?;
        Ok(self.contains_unchecked(e))
    }

    pub(crate) fn contains_unchecked(&self, e: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(e))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let all = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { dim: self.dim, gens: minimal_antichain(all) })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let mut all = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                all.push(a + b);
            }
        }
        Ok(MonomialIdeal { dim: self.dim, gens: minimal_antichain(all) })
    }

    /// `I^n`, with `I^0` the unit ideal.
    pub fn power(&self, n: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.dim);
        for _ in 0..n {
            acc = acc.product(self).expect("same dimension");
        }
        acc
    }

    /// All powers `I^0, I^1, ..., I^n`.
    pub fn powers_up_to(&self, n: u32) -> Vec<MonomialIdeal> {
        let mut out = Vec::with_capacity(n as usize + 1);
        out.push(MonomialIdeal::unit(self.dim));
        for i in 0..n as usize {
            let next = out[i].product(self).expect("same dimension");
            out.push(next);
        }
        out
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let mut all = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                all.push(a.join(b));
            }
        }
        Ok(MonomialIdeal { dim: self.dim, gens: minimal_antichain(all) })
    }

    /// `I : (g)` for a single monomial `g`.
    pub fn colon_monomial(&self, g: &ExponentVector) -> Result<MonomialIdeal> {
        g.check_dim(self.dim)?;
        let all = self.gens.iter().map(|h| h.saturating_sub(g)).collect();
        Ok(MonomialIdeal { dim: self.dim, gens: minimal_antichain(all) })
    }

    /// `I : J = ∩_{g ∈ gens(J)} I : (g)`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let mut gens = other.gens.iter();
        let first = gens.next().ok_or(Error::ColonByZero)?;
        let mut acc = self.colon_monomial(first)?;
        for g in gens {
            acc = acc.intersect(&self.colon_monomial(g)?)?;
        }
        Ok(acc)
    }

    /// `I : x_i^∞`: set the `i`-th exponent of every generator to zero.
    pub fn colon_variable_infinity(&self, index: usize) -> MonomialIdeal {
        let all = self
            .gens
            .iter()
            .map(|g| {
                let mut c = g.coords().to_vec();
                c[index] = 0;
                ExponentVector(c)
            })
            .collect();
        MonomialIdeal { dim: self.dim, gens: minimal_antichain(all) }
    }

    /// `I^sat = I : m^∞`.
    ///
    /// The ideals `(x_1^N, ..., x_d^N)` and `m^N` are cofinal, so
    /// `I : m^∞ = ∩_i (I : x_i^∞)`. [`saturate_by_colon_iteration`] computes
    /// the same ideal as the fixed point of `J ↦ J : m`.
    ///
    /// [`saturate_by_colon_iteration`]: MonomialIdeal::saturate_by_colon_iteration
    pub fn saturate(&self) -> MonomialIdeal {
        if self.is_zero() {
            return self.clone();
        }
        let mut acc = self.colon_variable_infinity(0);
        for i in 1..self.dim {
            acc = acc.intersect(&self.colon_variable_infinity(i)).expect("same dimension");
        }
        acc
    }

    /// Iterate `J ← J : m` until it stops growing, failing after `cap` steps.
    pub fn saturate_by_colon_iteration(&self, cap: usize) -> Result<MonomialIdeal> {
        let m = MonomialIdeal::maximal(self.dim);
        let mut cur = self.clone();
        for _ in 0..cap {
            let next = cur.colon(&m)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::SaturationDiverged { cap })
    }

    /// Number of colon steps that always suffices for [`saturate_by_colon_iteration`].
    ///
    /// With `a_i` the largest exponent of `x_i` among the generators, any
    /// monomial `u` of degree `Σ a_i` has some `u_i ≥ a_i`, so
    /// `I : m^{Σ a_i} = I^sat`; one more step observes the fixed point.
    ///
    /// [`saturate_by_colon_iteration`]: MonomialIdeal::saturate_by_colon_iteration
    pub fn colon_iteration_bound(&self) -> usize {
        self.max_exponents().iter().map(|&a| a as usize).sum::<usize>() + 2
    }

    /// `self ⊆ other`.
    pub fn is_subideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate() == *self
    }
}

fn compositions(cur: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<ExponentVector>) {
    if pos + 1 == cur.len() {
        cur[pos] = remaining;
        out.push(ExponentVector(cur.clone()));
        return;
    }
    for v in 0..=remaining {
        cur[pos] = v;
        compositions(cur, pos + 1, remaining - v, out);
    }
    cur[pos] = 0;
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(d={}, {:?})", self.dim, self.gens)
    }
}

/// Renders generators as `x^2*y, y^3` (variables `x1..xd` beyond four).
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        const NAMES: [&str; 4] = ["x", "y", "z", "w"];
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if g.is_zero() {
                f.write_str("1")?;
                continue;
            }
            let mut first = true;
            for (i, &c) in g.coords().iter().enumerate() {
                if c == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if self.dim <= 4 {
                    f.write_str(NAMES[i])?;
                } else {
                    write!(f, "x{}", i + 1)?;
                }
                if c > 1 {
                    write!(f, "^{c}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(dim: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(dim, rows).unwrap()
    }

    fn ev(c: &[u32]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    /// Every exponent vector of total degree ≤ `deg`.
    fn monomials_up_to(dim: usize, deg: u32) -> Vec<ExponentVector> {
        (0..=deg).flat_map(|n| MonomialIdeal::maximal_power(dim, n).gens).collect()
    }

    #[test]
    fn minimalize_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[3, 0]]);
        assert_eq!(i.generators(), &[ev(&[1, 1]), ev(&[2, 0])]);
        assert!(minimalize(Vec::new(), 2).unwrap().is_zero());
        let u = ideal(2, &[&[0, 0], &[1, 1]]);
        assert!(u.is_unit());
        assert_eq!(u, MonomialIdeal::unit(2));
        assert_eq!(
            minimalize([ev(&[1, 0]), ev(&[1])], 2),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        );
        assert_eq!(minimalize(Vec::new(), 0), Err(Error::ZeroDimension));
    }

    #[test]
    fn contains_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(i.contains(&ev(&[1, 3])).unwrap());
        assert!(!i.contains(&ev(&[1, 0])).unwrap());
        assert!(!MonomialIdeal::zero(2).contains(&ev(&[5, 5])).unwrap());
        assert!(i.contains(&ev(&[1])).is_err());
    }

    #[test]
    fn products_and_powers() {
        let x = ideal(2, &[&[1, 0]]);
        let m = MonomialIdeal::maximal(2);
        assert_eq!(x.product(&m).unwrap(), ideal(2, &[&[2, 0], &[1, 1]]));
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.power(2), ideal(2, &[&[4, 0], &[3, 1], &[2, 2]]));
        assert!(i.power(0).is_unit());
        assert_eq!(i.powers_up_to(3)[3], i.power(3));
        assert!(x.sum(&MonomialIdeal::zero(3)).is_err());
    }

    #[test]
    fn power_matches_pairwise_sums() {
        // brute force: all sums of two generators, then keep the minimal ones
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let mut sums = Vec::new();
        for a in i.generators() {
            for b in i.generators() {
                sums.push(a + b);
            }
        }
        let minimal: Vec<_> = sums
            .iter()
            .filter(|s| !sums.iter().any(|t| t != *s && t.divides(s)))
            .cloned()
            .collect();
        assert_eq!(i.power(2), minimalize(minimal, 2).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(2, &[&[1, 1]]));
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let m3 = MonomialIdeal::maximal(2).power(3);
        assert_eq!(i.intersect(&m3).unwrap(), ideal(2, &[&[3, 0], &[2, 1], &[1, 2]]));
        assert_eq!(i.intersect(&MonomialIdeal::unit(2)).unwrap(), i);
    }

    #[test]
    fn colon_examples_against_membership() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let x = ideal(2, &[&[1, 0]]);
        let c = i.colon(&x).unwrap();
        assert_eq!(c, MonomialIdeal::maximal(2));
        // e ∈ I : (x) iff e + (1,0) ∈ I, over degree ≤ 3
        for e in monomials_up_to(2, 3) {
            let shifted = &e + &ev(&[1, 0]);
            assert_eq!(c.contains(&e).unwrap(), i.contains(&shifted).unwrap());
        }
        assert_eq!(i.colon(&MonomialIdeal::unit(2)).unwrap(), i);
        let xy = ideal(2, &[&[1, 1]]);
        let x2 = ideal(2, &[&[2, 0]]);
        assert_eq!(xy.colon(&x2).unwrap(), y_ideal());
        assert_eq!(i.colon(&MonomialIdeal::zero(2)), Err(Error::ColonByZero));
    }

    fn y_ideal() -> MonomialIdeal {
        ideal(2, &[&[0, 1]])
    }

    #[test]
    fn saturation_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let x = ideal(2, &[&[1, 0]]);
        assert_eq!(i.saturate(), x);
        assert_eq!(i.saturate_by_colon_iteration(10).unwrap(), x);
        assert!(x.colon(&MonomialIdeal::maximal(2)).unwrap() == x);
        assert!(MonomialIdeal::maximal(2).saturate().is_unit());
        let xy3 = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(xy3.saturate(), xy3);
        assert!(MonomialIdeal::zero(2).saturate().is_zero());
        assert!(MonomialIdeal::unit(2).saturate().is_unit());
    }

    #[test]
    fn colon_iteration_cap_is_reported() {
        let i = MonomialIdeal::maximal(2).power(5);
        assert_eq!(i.saturate_by_colon_iteration(2), Err(Error::SaturationDiverged { cap: 2 }));
        assert!(i.saturate_by_colon_iteration(i.colon_iteration_bound()).unwrap().is_unit());
    }

    #[test]
    fn subideal_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let x = ideal(2, &[&[1, 0]]);
        assert!(i.is_subideal(&x).unwrap());
        assert!(!x.is_subideal(&i).unwrap());
        assert!(MonomialIdeal::zero(2).is_subideal(&i).unwrap());
    }

    #[test]
    fn display_uses_named_variables() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(alloc::format!("{i}"), "x*y, x^2");
        assert_eq!(alloc::format!("{}", MonomialIdeal::zero(5)), "0");
        assert_eq!(alloc::format!("{}", ideal(5, &[&[0, 0, 0, 0, 2]])), "x5^2");
    }

    #[test]
    fn maximal_power_counts() {
        assert_eq!(MonomialIdeal::maximal_power(3, 4).generators().len(), 15);
        assert_eq!(MonomialIdeal::maximal_power(2, 3), MonomialIdeal::maximal(2).power(3));
    }
}
