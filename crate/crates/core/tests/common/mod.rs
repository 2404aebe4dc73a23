#![allow(dead_code)]

use epsmult_core::{ExponentVector, MonomialIdeal};
use proptest::prelude::*;

/// Random ideals with `d ≤ 3`, at most five generators, exponents at most six.
pub fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(|d| {
        prop::collection::vec(prop::collection::vec(0u32..=6, d), 1..=5)
            .prop_map(move |rows| MonomialIdeal::new(d, rows.into_iter().map(ExponentVector::new)).unwrap())
    })
}

pub fn ideal_pair_strategy() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=3).prop_flat_map(|d| {
        let one = prop::collection::vec(prop::collection::vec(0u32..=6, d), 1..=5);
        (one.clone(), one).prop_map(move |(a, b)| {
            (
                MonomialIdeal::new(d, a.into_iter().map(ExponentVector::new)).unwrap(),
                MonomialIdeal::new(d, b.into_iter().map(ExponentVector::new)).unwrap(),
            )
        })
    })
}

/// Every exponent vector in the box `[0, side)^d`.
pub fn box_points(dim: usize, side: u32) -> Vec<ExponentVector> {
    let mut out = vec![ExponentVector::new(Vec::new())];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..side).map(move |v| {
                    let mut c = p.coords().to_vec();
                    c.push(v);
                    ExponentVector::new(c)
                })
            })
            .collect();
    }
    out
}

/// Brute-force membership: some generator divides `e`.
pub fn member(gens: &[ExponentVector], e: &ExponentVector) -> bool {
    gens.iter().any(|g| g.coords().iter().zip(e.coords()).all(|(a, b)| a <= b))
}
