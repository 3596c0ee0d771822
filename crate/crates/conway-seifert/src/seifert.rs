//! Validated Seifert data for an (m+1)-component link K_0 ∪ J_1 ∪ … ∪ J_m.
//!
//! The data records the Seifert form of a surface for the link in a basis
//! p_1..p_g, q_1..q_g, r_1..r_m, where the p, q part is symplectic and each
//! band curve r_i is represented by the component J_i. Cutting the bands
//! leaves a surface whose boundary is a knot; everything downstream (Conway
//! polynomials, linking pairings, derived invariants) is computed from the
//! three integer blocks stored here.

use std::fmt;

use crate::arith::{Int, LaurentPoly, Matrix, Ring};

/// One violated invariant found while validating raw Seifert data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// m must be at least 1.
    NoLinkComponents,
    /// The Seifert form block must be 2g x 2g.
    SeifertShape { expected: (usize, usize), got: (usize, usize) },
    /// The curve-linking block must be m x 2g.
    LinkingShape { expected: (usize, usize), got: (usize, usize) },
    /// The band form block must be m x m.
    BandShape { expected: (usize, usize), got: (usize, usize) },
    /// M - M^T must equal minus the standard symplectic intersection matrix.
    NotSymplectic { row: usize, col: usize, expected: Int, got: Int },
    /// The band form must be symmetric.
    BandNotSymmetric { row: usize, col: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoLinkComponents => {
                write!(f, "m must be at least 1 (the link needs a J component)")
            }
            Violation::SeifertShape { expected, got } => write!(
                f,
                "Seifert block M must be {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            Violation::LinkingShape { expected, got } => write!(
                f,
                "linking block V must be {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            Violation::BandShape { expected, got } => write!(
                f,
                "band block A must be {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            Violation::NotSymplectic { row, col, expected, got } => write!(
                f,
                "(M - M^T)[{},{}] = {}, expected {} from the symplectic basis",
                row + 1,
                col + 1,
                got,
                expected
            ),
            Violation::BandNotSymmetric { row, col } => write!(
                f,
                "band block A is not symmetric at ({},{})",
                row + 1,
                col + 1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "invalid Seifert data:")?;
        for v in &self.violations {
            writeln!(f, "  - {v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationError {}

/// The standard symplectic intersection matrix P = [[0, -I_g], [I_g, 0]].
///
/// Satisfies P^T = -P and P^2 = -I; a valid Seifert block has M - M^T = -P.
pub fn intersection_form(genus: usize) -> Matrix<Int> {
    Matrix::from_fn(2 * genus, 2 * genus, |i, j| {
        if i < genus && j == i + genus {
            Int::from(-1)
        } else if i >= genus && j == i - genus {
            Int::from(1)
        } else {
            Int::zero()
        }
    })
}

/// Check that a 2g x 2g integer matrix is a Seifert matrix of a knot with
/// respect to a symplectic basis, i.e. M - M^T = -P.
pub fn check_knot_matrix(m: &Matrix<Int>) -> Result<(), ValidationError> {
    let mut violations = Vec::new();
    if !m.is_square() || m.rows() % 2 != 0 {
        violations.push(Violation::SeifertShape {
            expected: (m.rows(), m.rows()),
            got: (m.rows(), m.cols()),
        });
        return Err(ValidationError { violations });
    }
    let genus = m.rows() / 2;
    let p = intersection_form(genus);
    let diff = &(m - &m.transpose()) + &p;
    for i in 0..2 * genus {
        for j in 0..2 * genus {
            if !diff[(i, j)].is_zero() {
                violations.push(Violation::NotSymplectic {
                    row: i,
                    col: j,
                    expected: -p[(i, j)].clone(),
                    got: m[(i, j)].clone() - m[(j, i)].clone(),
                });
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(ValidationError { violations })
    }
}

/// Validated Seifert data (g, m, M, V, A).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    genus: usize,
    components: usize,
    seifert: Matrix<Int>,
    linking: Matrix<Int>,
    bands: Matrix<Int>,
}

impl SeifertData {
    /// Validate raw blocks. All violated invariants are reported, not just
    /// the first one.
    pub fn new(
        genus: usize,
        components: usize,
        seifert: Matrix<Int>,
        linking: Matrix<Int>,
        bands: Matrix<Int>,
    ) -> Result<Self, ValidationError> {
        let mut violations = Vec::new();
        if components < 1 {
            violations.push(Violation::NoLinkComponents);
        }
        let n = 2 * genus;
        if (seifert.rows(), seifert.cols()) != (n, n) {
            violations.push(Violation::SeifertShape {
                expected: (n, n),
                got: (seifert.rows(), seifert.cols()),
            });
        }
        if (linking.rows(), linking.cols()) != (components, n) {
            violations.push(Violation::LinkingShape {
                expected: (components, n),
                got: (linking.rows(), linking.cols()),
            });
        }
        if (bands.rows(), bands.cols()) != (components, components) {
            violations.push(Violation::BandShape {
                expected: (components, components),
                got: (bands.rows(), bands.cols()),
            });
        }
        if (seifert.rows(), seifert.cols()) == (n, n) {
            if let Err(e) = check_knot_matrix(&seifert) {
                violations.extend(e.violations);
            }
        }
        if bands.is_square() {
            for i in 0..bands.rows() {
                for j in i + 1..bands.cols() {
                    if bands[(i, j)] != bands[(j, i)] {
                        violations.push(Violation::BandNotSymmetric { row: i, col: j });
                    }
                }
            }
        }
        if violations.is_empty() {
            Ok(SeifertData { genus, components, seifert, linking, bands })
        } else {
            Err(ValidationError { violations })
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Number of J components (the banded-together components of the link).
    pub fn components(&self) -> usize {
        self.components
    }

    /// The Seifert form on the symplectic part of the basis, 2g x 2g.
    pub fn seifert_matrix(&self) -> &Matrix<Int> {
        &self.seifert
    }

    /// Row i holds lk(J_i, p_1), …, lk(J_i, p_g), lk(J_i, q_1), …, lk(J_i, q_g).
    pub fn linking_matrix(&self) -> &Matrix<Int> {
        &self.linking
    }

    pub fn linking_row(&self, i: usize) -> &[Int] {
        self.linking.row(i)
    }

    /// The Seifert form on the band curves, m x m symmetric.
    pub fn band_matrix(&self) -> &Matrix<Int> {
        &self.bands
    }

    /// The full Seifert matrix [[M, V^T], [V, A]] of the link surface.
    pub fn full_seifert_matrix(&self) -> Matrix<Int> {
        let n = 2 * self.genus;
        let m = self.components;
        Matrix::from_fn(n + m, n + m, |i, j| {
            match (i < n, j < n) {
                (true, true) => self.seifert[(i, j)].clone(),
                (true, false) => self.linking[(j - n, i)].clone(),
                (false, true) => self.linking[(i - n, j)].clone(),
                (false, false) => self.bands[(i - n, j - n)].clone(),
            }
        })
    }

    /// The Alexander matrix tM - M^T of the banded knot.
    pub fn alexander_matrix(&self) -> Matrix<LaurentPoly<'t'>> {
        alexander_matrix_of(&self.seifert)
    }
}

/// tM - M^T over Laurent polynomials in t.
pub fn alexander_matrix_of(seifert: &Matrix<Int>) -> Matrix<LaurentPoly<'t'>> {
    Matrix::from_fn(seifert.rows(), seifert.cols(), |i, j| {
        LaurentPoly::from_terms([
            (1, seifert[(i, j)].clone()),
            (0, -seifert[(j, i)].clone()),
        ])
    })
}

/// Integer homology class on the cut surface, in the basis p_1..p_g, q_1..q_g.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisClass(pub Vec<Int>);

impl BasisClass {
    pub fn zero(genus: usize) -> Self {
        BasisClass(vec![Int::zero(); 2 * genus])
    }

    pub fn coefficients(&self) -> &[Int] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for BasisClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
