//! Shared helpers for unit tests.

use proptest::prelude::*;

use crate::probcore::Pmf3;

/// X = Y with Z independent uniform: a pure unique-information channel.
pub(crate) fn copy_y_triple() -> Pmf3 {
    Pmf3::from_fn(|x, y, _| if x == y { 0.25 } else { 0.0 }).unwrap()
}

/// Strictly positive random joint distributions (every cell at least
/// 0.02 / 8 before normalization).
pub(crate) fn arb_pmf3() -> impl Strategy<Value = Pmf3> {
    proptest::array::uniform8(0.02f64..1.0).prop_map(|raw| {
        let sum: f64 = raw.iter().sum();
        let mut cells = raw;
        for c in &mut cells {
            *c /= sum;
        }
        Pmf3::new(cells).unwrap()
    })
}

/// Deterministic strictly positive draws for seeded non-proptest tests.
pub(crate) fn seeded_pmf3(rng: &mut impl rand::Rng) -> Pmf3 {
    let mut cells = [0.0f64; 8];
    for c in &mut cells {
        *c = rng.random_range(0.02..1.0);
    }
    let sum: f64 = cells.iter().sum();
    for c in &mut cells {
        *c /= sum;
    }
    Pmf3::new(cells).unwrap()
}
