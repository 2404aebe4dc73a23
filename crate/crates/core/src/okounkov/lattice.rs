//! Hermite normal form of integer row lattices.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-style Hermite normal form of the lattice spanned by the rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteForm {
    /// Nonzero rows in echelon order, positive pivots, entries above each
    /// pivot reduced into `[0, pivot)`.
    pub rows: Vec<Vec<BigInt>>,
    /// Column of each row's pivot.
    pub pivot_columns: Vec<usize>,
    pub width: usize,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &BigInt> + '_ {
        self.rows.iter().zip(&self.pivot_columns).map(|(r, &c)| &r[c])
    }

    /// `[Z^width : L]` for a full-rank lattice, `None` otherwise.
    pub fn index(&self) -> Option<BigInt> {
        (self.rank() == self.width).then(|| self.pivots().fold(BigInt::one(), |acc, p| acc * p))
    }

    pub fn is_full_lattice(&self) -> bool {
        self.index().is_some_and(|i| i.is_one())
    }
}

pub fn hermite_normal_form(rows: &[Vec<i64>], width: usize) -> HermiteForm {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), width, "row width");
            r.iter().map(|&v| BigInt::from(v)).collect()
        })
        .collect();
    let mut pivot_columns = Vec::new();
    let mut top = 0;
    for col in 0..width {
        loop {
            // smallest nonzero entry at or below `top` becomes the pivot candidate
            let best = (top..m.len())
                .filter(|&r| !m[r][col].is_zero())
                .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
            let Some(best) = best else { break };
            m.swap(top, best);
            let mut done = true;
            for r in top + 1..m.len() {
                if m[r][col].is_zero() {
                    continue;
                }
                let q = m[r][col].div_floor(&m[top][col]);
                let (head, tail) = m.split_at_mut(r);
                for (x, y) in tail[0].iter_mut().zip(&head[top]) {
                    *x -= &q * y;
                }
                if !tail[0][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top < m.len() && !m[top][col].is_zero() {
            if m[top][col].is_negative() {
                for x in m[top].iter_mut() {
                    *x = -&*x;
                }
            }
            for r in 0..top {
                let q = m[r][col].div_floor(&m[top][col]);
                if q.is_zero() {
                    continue;
                }
                let (head, tail) = m.split_at_mut(top);
                for (x, y) in head[r].iter_mut().zip(&tail[0]) {
                    *x -= &q * y;
                }
            }
            pivot_columns.push(col);
            top += 1;
        }
    }
    m.truncate(top);
    HermiteForm { rows: m, pivot_columns, width }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn unimodular_simplex_generators() {
        let h = hermite_normal_form(&[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1]], 3);
        assert_eq!(h.index(), Some(BigInt::one()));
        assert!(h.is_full_lattice());
    }

    #[test]
    fn index_two_lattice() {
        let h = hermite_normal_form(&[vec![0, 2], vec![1, 2]], 2);
        assert_eq!(h.index(), Some(BigInt::from(2)));
        assert_eq!(h.rows, vec![vec![BigInt::from(1), BigInt::from(0)], vec![BigInt::from(0), BigInt::from(2)]]);
    }

    #[test]
    fn rank_deficient() {
        let h = hermite_normal_form(&[vec![1, 2, 3], vec![2, 4, 6]], 3);
        assert_eq!(h.rank(), 1);
        assert_eq!(h.index(), None);
    }

    #[test]
    fn gcd_of_a_column() {
        let h = hermite_normal_form(&[vec![6], vec![10], vec![15]], 1);
        assert_eq!(h.index(), Some(BigInt::one()));
        let h = hermite_normal_form(&[vec![-4], vec![6]], 1);
        assert_eq!(h.index(), Some(BigInt::from(2)));
    }
}
