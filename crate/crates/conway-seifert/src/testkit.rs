//! Shared test fixtures and proptest strategies.

use proptest::prelude::*;

use crate::arith::{Int, Matrix};
use crate::seifert::SeifertData;

pub fn int_matrix(rows: &[&[i64]]) -> Matrix<Int> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&c| Int::from(c)).collect())
            .collect(),
    )
}

/// Seifert data for the trefoil with one band: g = 1, m = 1,
/// M = [[-1, 1], [0, -1]], V = [[1, 0]], A = [[0]].
pub fn trefoil_band() -> SeifertData {
    SeifertData::new(
        1,
        1,
        int_matrix(&[&[-1, 1], &[0, -1]]),
        int_matrix(&[&[1, 0]]),
        int_matrix(&[&[0]]),
    )
    .unwrap()
}

/// Hopf-link data: g = 0, m = 1, A = [[1]].
pub fn hopf() -> SeifertData {
    SeifertData::new(0, 1, Matrix::zero(0, 0), Matrix::zero(1, 0), int_matrix(&[&[1]])).unwrap()
}

fn symmetric_plus_shift(g: usize, upper: &[i64]) -> Matrix<Int> {
    let n = 2 * g;
    Matrix::from_fn(n, n, |i, j| {
        let sym = if i <= j { upper[i * n + j] } else { upper[j * n + i] };
        let shift = i64::from(i < g && j == i + g);
        Int::from(sym + shift)
    })
}

prop_compose! {
    /// M = S + [[0, I_g], [0, 0]] with S symmetric; always has M - M^T = -P.
    pub fn arb_knot_matrix(max_genus: usize)
        (g in 0..=max_genus)
        (g in Just(g), upper in proptest::collection::vec(-3i64..=3, (2 * g) * (2 * g)))
        -> Matrix<Int>
    {
        symmetric_plus_shift(g, &upper)
    }
}

prop_compose! {
    /// Validated Seifert data with bounded genus and component count.
    pub fn arb_seifert_data(max_genus: usize, max_components: usize)
        (g in 0..=max_genus, m in 1..=max_components)
        (
            g in Just(g),
            m in Just(m),
            upper in proptest::collection::vec(-3i64..=3, (2 * max_genus) * (2 * max_genus) + 1),
            linking in proptest::collection::vec(-3i64..=3, max_components * 2 * max_genus + 1),
            band_upper in proptest::collection::vec(-3i64..=3, max_components * max_components + 1),
        )
        -> SeifertData
    {
        let n = 2 * g;
        let seifert = symmetric_plus_shift(g, &upper);
        let v = Matrix::from_fn(m, n, |i, j| Int::from(linking[i * n + j]));
        let a = Matrix::from_fn(m, m, |i, j| {
            Int::from(if i <= j { band_upper[i * m + j] } else { band_upper[j * m + i] })
        });
        SeifertData::new(g, m, seifert, v, a).expect("generator produces valid data")
    }
}
