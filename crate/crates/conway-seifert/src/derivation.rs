//! Derivation of curves with respect to a Seifert surface, and the beta
//! invariants of iterated derived links.
//!
//! A curve disjoint from the surface derives to the homology class cut out on
//! the surface by one of its Seifert surfaces; in the symplectic basis this
//! is the product of its linking row with the intersection matrix P. Pushing
//! a class off the surface and deriving again iterates the construction, and
//! the linking numbers of the iterated derivatives close up into the matrix
//! formula beta^{k,l} = (-1)^l V_1 (PM)^{k+l-1} P V_2^T.

use crate::arith::matrix::row_times_matrix;
use crate::arith::{Int, Matrix, Ring};
use crate::invariants::alpha_invariant;
use crate::report::{Check, VerificationReport};
use crate::seifert::{intersection_form, BasisClass};

/// Which side of the surface a class is pushed to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Positive,
    Negative,
}

/// beta^{k,l} is defined for k = l = 0 (the plain linking number) and for
/// k >= 1; the remaining corner k = 0, l >= 1 is left undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("beta^{{{k},{l}}} is undefined: k = 0 requires l = 0")]
pub struct BetaUndefined {
    pub k: usize,
    pub l: usize,
}

/// The derived class of a curve with linking row `linking`: the coefficient
/// vector of lk(L, q_i) p_i - lk(L, p_i) q_i, which is `linking · P`.
pub fn derive_class(linking: &[Int], genus: usize) -> BasisClass {
    assert_eq!(linking.len(), 2 * genus, "linking row must have length 2g");
    BasisClass(row_times_matrix(linking, &intersection_form(genus)))
}

/// Linking numbers of a pushed-off class with the basis curves: `c · M` for a
/// positive pushoff, `c · M^T` for a negative one.
pub fn pushoff_linking_vector(
    seifert: &Matrix<Int>,
    class: &BasisClass,
    direction: Direction,
) -> Vec<Int> {
    match direction {
        Direction::Positive => row_times_matrix(class.coefficients(), seifert),
        Direction::Negative => {
            row_times_matrix(class.coefficients(), &seifert.transpose())
        }
    }
}

/// The n-th derived class of a curve, n >= 1: V (PM)^{n-1} P for positive
/// pushoffs and V (PM^T)^{n-1} P for negative ones.
///
/// The 0-th derivative is the curve itself, which is not a class on the
/// surface; n = 0 is rejected.
pub fn iterated_derivative(
    seifert: &Matrix<Int>,
    linking: &[Int],
    n: usize,
    direction: Direction,
) -> BasisClass {
    assert!(n >= 1, "the 0-th derivative is the curve itself, not a surface class");
    let genus = seifert.rows() / 2;
    let mut class = derive_class(linking, genus);
    for _ in 1..n {
        let pushed = pushoff_linking_vector(seifert, &class, direction);
        class = derive_class(&pushed, genus);
    }
    class
}

/// beta^{k,l}(J_1, J_2) = lk(J_1 derived k times and pushed +, J_2 derived l
/// times and pushed -), via the closed form (-1)^l V_1 (PM)^{k+l-1} P V_2^T.
///
/// `lk12` supplies the base case beta^{0,0} = lk(J_1, J_2), which the
/// matrices do not determine.
pub fn beta(
    seifert: &Matrix<Int>,
    v1: &[Int],
    v2: &[Int],
    lk12: &Int,
    k: usize,
    l: usize,
) -> Result<Int, BetaUndefined> {
    match (k, l) {
        (0, 0) => Ok(lk12.clone()),
        (0, _) => Err(BetaUndefined { k, l }),
        _ => {
            let value = alpha_invariant(seifert, v1, v2, lk12, k + l);
            Ok(if l % 2 == 0 { value } else { -value })
        }
    }
}

/// Verify the reduction law beta^{k,l} = (-1)^l beta^{k+l,0} for
/// 1 <= k <= kmax, 0 <= l <= lmax.
pub fn verify_beta_reduction(
    seifert: &Matrix<Int>,
    v1: &[Int],
    v2: &[Int],
    kmax: usize,
    lmax: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new();
    let lk12 = Int::zero(); // never reaches the k = l = 0 base case
    for k in 1..=kmax {
        for l in 0..=lmax {
            let lhs = beta(seifert, v1, v2, &lk12, k, l).unwrap();
            let reduced = beta(seifert, v1, v2, &lk12, k + l, 0).unwrap();
            let rhs = if l % 2 == 0 { reduced } else { -reduced };
            report.push(Check::equality(format!("beta_reduction[k={k},l={l}]"), &lhs, &rhs));
        }
    }
    report
}

/// Verify that alpha^n agrees with beta^{n,0} for 1 <= n < n_max and that
/// alpha^0 is the supplied linking number.
pub fn alpha_equals_beta_check(
    seifert: &Matrix<Int>,
    v1: &[Int],
    v2: &[Int],
    lk12: &Int,
    n_max: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.push(Check::equality(
        "alpha_beta[n=0]",
        &alpha_invariant(seifert, v1, v2, lk12, 0),
        lk12,
    ));
    for n in 1..n_max {
        let a = alpha_invariant(seifert, v1, v2, lk12, n);
        let b = beta(seifert, v1, v2, lk12, n, 0).unwrap();
        report.push(Check::equality(format!("alpha_beta[n={n}]"), &a, &b));
    }
    report
}
