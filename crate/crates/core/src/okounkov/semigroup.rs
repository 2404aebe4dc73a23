//! Subsemigroups of `N^{d+1}` graded by the last coordinate.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::lattice::hermite_normal_form;
use super::valuation::{nu_value, phi, psi, WeightVector};
use crate::error::{Error, Result};
use crate::family::GradedFamilySpec;
use crate::monomial::ExponentVector;

/// Upper bound on the number of cells in one dense level grid.
pub const MAX_GRID_CELLS: u128 = 1 << 33;

pub type Levels = BTreeMap<u32, BTreeSet<ExponentVector>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Representation {
    /// Finite generating set; each point is `(n_1, ..., n_d, level)`.
    Generators(Vec<Vec<u32>>),
    /// Explicit level sets `S_i ⊂ N^d` for the materialized levels.
    Leveled(Levels),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    dim: usize,
    repr: Representation,
}

impl Semigroup {
    pub fn from_generators(dim: usize, generators: Vec<Vec<u32>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for g in &generators {
            if g.len() != dim + 1 {
                return Err(Error::DimensionMismatch { expected: dim + 1, found: g.len() });
            }
            if g[dim] == 0 && g[..dim].iter().any(|&c| c != 0) {
                return Err(Error::InvalidSemigroup("nonzero generator at level 0"));
            }
        }
        Ok(Semigroup { dim, repr: Representation::Generators(generators) })
    }

    /// Level sets keyed by level; `S_0 = {0}` is inserted when missing.
    pub fn from_levels(dim: usize, mut levels: Levels) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for e in levels.values().flatten() {
            if e.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: e.dim() });
            }
        }
        let origin: BTreeSet<ExponentVector> = [ExponentVector::zero(dim)].into_iter().collect();
        match levels.get(&0) {
            Some(l) if *l != origin => return Err(Error::InvalidSemigroup("level 0 must be the origin")),
            Some(_) => {}
            None => {
                levels.insert(0, origin);
            }
        }
        Ok(Semigroup { dim, repr: Representation::Leveled(levels) })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn representation(&self) -> &Representation {
        &self.repr
    }

    /// Generators all at level one, the case where `Δ(S)` is their convex hull.
    pub fn degree_one_generators(&self) -> Option<Vec<Vec<u32>>> {
        match &self.repr {
            Representation::Generators(g) if g.iter().all(|p| p[self.dim] == 1) => {
                Some(g.iter().map(|p| p[..self.dim].to_vec()).collect())
            }
            _ => None,
        }
    }

    /// Every explicitly known point `(n, i)`: the generators, or all points of
    /// the materialized levels.
    pub fn known_points(&self) -> Vec<Vec<u32>> {
        match &self.repr {
            Representation::Generators(g) => g.clone(),
            Representation::Leveled(levels) => levels
                .iter()
                .flat_map(|(&i, set)| {
                    set.iter().map(move |e| {
                        let mut p = e.coords().to_vec();
                        p.push(i);
                        p
                    })
                })
                .collect(),
        }
    }

    /// `S_n ⊂ N^d`.
    pub fn level(&self, n: u32) -> Result<BTreeSet<ExponentVector>> {
        match &self.repr {
            Representation::Leveled(levels) => levels.get(&n).cloned().ok_or(Error::LevelUnavailable { level: n }),
            Representation::Generators(_) => {
                let (grid, bits) = self.generated_levels(n)?.into_last();
                Ok(grid.points(&bits).collect())
            }
        }
    }

    /// `[#S_0, ..., #S_{n_max}]`.
    pub fn level_counts(&self, n_max: u32) -> Result<Vec<u128>> {
        match &self.repr {
            Representation::Leveled(levels) => (0..=n_max)
                .map(|n| levels.get(&n).map(|s| s.len() as u128).ok_or(Error::LevelUnavailable { level: n }))
                .collect(),
            Representation::Generators(_) => Ok(self.generated_levels(n_max)?.counts),
        }
    }

    // Level i is the union of S_{i-l} + v over generators (v, l). Every point
    // of a level ≤ n lies in the box [0, n·max v_j], so shifting a flattened
    // bitset by the flat offset of v never wraps.
    fn generated_levels(&self, n: u32) -> Result<GeneratedLevels> {
        let Representation::Generators(gens) = &self.repr else {
            unreachable!("generated_levels on leveled semigroup")
        };
        let d = self.dim;
        let gens: Vec<&Vec<u32>> = gens.iter().filter(|g| g[d] > 0).collect();
        let extent: Vec<u64> =
            (0..d).map(|j| u64::from(n) * gens.iter().map(|g| u64::from(g[j])).max().unwrap_or(0) + 1).collect();
        let grid = Grid::new(&extent)?;
        let depth = gens.iter().map(|g| g[d] as usize).max().unwrap_or(1);
        let mut ring: Vec<Vec<u64>> = vec![grid.empty(); depth + 1];
        ring[0][0] = 1;
        let mut counts = vec![1u128];
        let offsets: Vec<(usize, usize)> = gens.iter().map(|g| (grid.flat(&g[..d]), g[d] as usize)).collect();
        for i in 1..=n as usize {
            let mut cur = grid.empty();
            for &(offset, l) in &offsets {
                if l <= i {
                    or_shifted(&mut cur, &ring[(i - l) % (depth + 1)], offset);
                }
            }
            counts.push(popcount(&cur));
            ring[i % (depth + 1)] = cur;
        }
        let last = core::mem::take(&mut ring[n as usize % (depth + 1)]);
        Ok(GeneratedLevels { grid, counts, last })
    }
}

struct GeneratedLevels {
    grid: Grid,
    counts: Vec<u128>,
    last: Vec<u64>,
}

impl GeneratedLevels {
    fn into_last(self) -> (Grid, Vec<u64>) {
        (self.grid, self.last)
    }
}

/// Dense row-major box `[0, extent_0) × ... × [0, extent_{d-1})`.
struct Grid {
    extent: Vec<u64>,
    strides: Vec<usize>,
    cells: usize,
}

impl Grid {
    fn new(extent: &[u64]) -> Result<Self> {
        let cells = extent.iter().try_fold(1u128, |acc, &e| acc.checked_mul(u128::from(e))).ok_or(Error::Overflow)?;
        if cells > MAX_GRID_CELLS {
            return Err(Error::TooLarge { cells });
        }
        let mut strides = vec![1usize; extent.len()];
        for j in (0..extent.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * extent[j + 1] as usize;
        }
        Ok(Grid { extent: extent.to_vec(), strides, cells: cells as usize })
    }

    fn empty(&self) -> Vec<u64> {
        vec![0; self.cells.div_ceil(64)]
    }

    fn flat(&self, p: &[u32]) -> usize {
        p.iter().zip(&self.strides).map(|(&c, &s)| c as usize * s).sum()
    }

    fn unflat(&self, mut idx: usize) -> ExponentVector {
        let mut c = vec![0u32; self.extent.len()];
        for (j, &s) in self.strides.iter().enumerate() {
            c[j] = (idx / s) as u32;
            idx %= s;
        }
        ExponentVector::new(c)
    }

    fn set(&self, bits: &mut [u64], p: &[u32]) {
        let i = self.flat(p);
        bits[i / 64] |= 1 << (i % 64);
    }

    fn points<'a>(&'a self, bits: &'a [u64]) -> impl Iterator<Item = ExponentVector> + 'a {
        bits.iter().enumerate().flat_map(move |(w, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| self.unflat(w * 64 + b))
        })
    }
}

fn or_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for (j, d) in dst.iter_mut().skip(ws).enumerate() {
        let mut v = src[j] << bs;
        if bs > 0 && j > 0 {
            v |= src[j - 1] >> (64 - bs);
        }
        *d |= v;
    }
}

fn popcount(bits: &[u64]) -> u128 {
    bits.iter().map(|w| u128::from(w.count_ones())).sum()
}

/// `#S_n`.
pub fn semigroup_count(s: &Semigroup, n: u32) -> Result<u128> {
    Ok(*s.level_counts_at(n)?.last().expect("nonempty"))
}

impl Semigroup {
    fn level_counts_at(&self, n: u32) -> Result<Vec<u128>> {
        match &self.repr {
            Representation::Leveled(levels) => {
                levels.get(&n).map(|s| vec![s.len() as u128]).ok_or(Error::LevelUnavailable { level: n })
            }
            Representation::Generators(_) => self.level_counts(n),
        }
    }
}

/// `#(k * S_p)` where `k * S_p = {x_1 + ... + x_k : x_i ∈ S_p}`.
pub fn k_fold_sum_count(s: &Semigroup, p: u32, k: u32) -> Result<u128> {
    if k == 0 {
        return Err(Error::ZeroParameter("k"));
    }
    let base: Vec<ExponentVector> = s.level(p)?.into_iter().collect();
    if base.is_empty() {
        return Ok(0);
    }
    let d = s.dim();
    let extent: Vec<u64> = (0..d)
        .map(|j| u64::from(k) * base.iter().map(|e| u64::from(e.coords()[j])).max().unwrap_or(0) + 1)
        .collect();
    let grid = Grid::new(&extent)?;
    let mut cur = grid.empty();
    for e in &base {
        grid.set(&mut cur, e.coords());
    }
    let offsets: Vec<usize> = base.iter().map(|e| grid.flat(e.coords())).collect();
    for _ in 1..k {
        let mut next = grid.empty();
        for &o in &offsets {
            or_shifted(&mut next, &cur, o);
        }
        cur = next;
    }
    Ok(popcount(&cur))
}

/// The truncated value semigroup of a graded family, levels `0..=i_max`.
///
/// Level `i` holds `φ` of every value class of `A_i` whose leading exponent
/// has `ψ ≤ β·i`. For monomial ideals each class is a single monomial, so
/// this is the set of exponents `n` with `x^n ∈ A_i` and `|n| ≤ β·i`.
pub fn gamma_beta(fam: &GradedFamilySpec, beta: u32, i_max: u32, w: &WeightVector) -> Result<Semigroup> {
    let d = fam.dim();
    if w.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: w.dim() });
    }
    if beta == 0 {
        return Err(Error::ZeroParameter("beta"));
    }
    let ideals = fam.ideals_up_to(i_max.max(1));
    if ideals[1].is_zero() {
        return Err(Error::EmptyFamily);
    }
    let mut levels = Levels::new();
    for (i, ideal) in ideals.iter().enumerate().take(i_max as usize + 1).skip(1) {
        let budget = u64::from(beta) * i as u64;
        let mut classes = BTreeSet::new();
        for e in simplex_points(d, budget) {
            if ideal.contains_unchecked(&e) {
                classes.insert(nu_value(&e, w)?);
            }
        }
        let set: BTreeSet<ExponentVector> =
            classes.into_iter().map(|v| phi(&v.exponent)).filter(|n| psi(n) <= budget).collect();
        levels.insert(i as u32, set);
    }
    Semigroup::from_levels(d, levels)
}

/// All `e ∈ N^d` with `|e| ≤ budget`.
pub fn simplex_points(dim: usize, budget: u64) -> Vec<ExponentVector> {
    fn rec(cur: &mut Vec<u32>, axis: usize, left: u64, out: &mut Vec<ExponentVector>) {
        if axis == cur.len() {
            out.push(ExponentVector::new(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[axis] = v as u32;
            rec(cur, axis + 1, left - v, out);
        }
        cur[axis] = 0;
    }
    let mut out = Vec::new();
    rec(&mut vec![0; dim], 0, budget, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeConditions {
    /// Every known `(n, i)` has `|n| ≤ β i`, so `S` lies in the semigroup
    /// generated by the level-one points of that cone.
    pub cone2: bool,
    /// The known points generate `Z^{d+1}` as a group.
    pub cone3: bool,
    /// `[Z^{d+1} : G]` when the generated group has full rank.
    pub lattice_index: Option<BigInt>,
}

pub fn check_cone_conditions(s: &Semigroup, beta: u32) -> Result<ConeConditions> {
    let d = s.dim();
    let points = s.known_points();
    // fewer than d + 1 points cannot span Z^{d+1}; the HNF reports that as a
    // rank deficiency, so only an empty point set is rejected
    let nonzero = points.iter().filter(|p| p.iter().any(|&c| c != 0)).count();
    if nonzero == 0 {
        return Err(Error::InsufficientData { points: 0, needed: d + 1 });
    }
    let cone2 = points.iter().all(|p| {
        let sum: u64 = p[..d].iter().map(|&c| u64::from(c)).sum();
        sum <= u64::from(beta) * u64::from(p[d])
    });
    let rows: Vec<Vec<i64>> = points.iter().map(|p| p.iter().map(|&c| i64::from(c)).collect()).collect();
    let hnf = hermite_normal_form(&rows, d + 1);
    let lattice_index = hnf.index();
    let cone3 = hnf.is_full_lattice();
    Ok(ConeConditions { cone2, cone3, lattice_index })
}
