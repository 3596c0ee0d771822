//! Seeded random generators for the randomized identity suites.
//!
//! Construction rule for valid Seifert blocks: M = S + [[0, I_g], [0, 0]]
//! with S symmetric, which guarantees M - M^T = -P; V is arbitrary and A is
//! an arbitrary symmetric matrix.

use conway_seifert::{Int, Matrix, SeifertData};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_knot_matrix(rng: &mut ChaCha8Rng, genus: usize, bound: i64) -> Matrix<Int> {
    let n = 2 * genus;
    let mut upper = vec![0i64; n * n];
    for v in upper.iter_mut() {
        *v = rng.random_range(-bound..=bound);
    }
    Matrix::from_fn(n, n, |i, j| {
        let sym = if i <= j { upper[i * n + j] } else { upper[j * n + i] };
        let shift = i64::from(i < genus && j == i + genus);
        Int::from(sym + shift)
    })
}

pub fn random_row(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<Int> {
    (0..len).map(|_| Int::from(rng.random_range(-bound..=bound))).collect()
}

pub fn random_seifert_data(
    rng: &mut ChaCha8Rng,
    genus: usize,
    components: usize,
    bound: i64,
) -> SeifertData {
    let seifert = random_knot_matrix(rng, genus, bound);
    let linking = Matrix::from_fn(components, 2 * genus, |_, _| {
        Int::from(rng.random_range(-bound..=bound))
    });
    let mut band_upper = vec![0i64; components * components];
    for v in band_upper.iter_mut() {
        *v = rng.random_range(-bound..=bound);
    }
    let bands = Matrix::from_fn(components, components, |i, j| {
        Int::from(if i <= j {
            band_upper[i * components + j]
        } else {
            band_upper[j * components + i]
        })
    });
    SeifertData::new(genus, components, seifert, linking, bands)
        .expect("generator produces valid data")
}

/// Random data with the band form identically zero (algebraically split case).
pub fn random_split_data(
    rng: &mut ChaCha8Rng,
    genus: usize,
    components: usize,
    bound: i64,
) -> SeifertData {
    let seifert = random_knot_matrix(rng, genus, bound);
    let linking = Matrix::from_fn(components, 2 * genus, |_, _| {
        Int::from(rng.random_range(-bound..=bound))
    });
    SeifertData::new(
        genus,
        components,
        seifert,
        linking,
        Matrix::zero(components, components),
    )
    .expect("generator produces valid data")
}
