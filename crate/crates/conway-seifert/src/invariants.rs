//! Potential functions, Conway polynomials, linking pairings in the infinite
//! cyclic cover, their Taylor expansions, and the verified identities tying
//! them together.
//!
//! The central computation: for Seifert data (g, m, M, V, A) of a link
//! L = K_0 ∪ J_1 ∪ … ∪ J_m, the pairing of lifted components in the infinite
//! cyclic cover of the banded knot's complement is
//!
//!   p_ij = A_ij + (1-t) · V_i (tM - M^T)^{-1} V_j^T,
//!
//! realized exactly as adjugate/determinant, and the Conway polynomial of L
//! factors as z^m · (Conway polynomial of the knot) · det(p_ij). The verify_*
//! functions check these identities as exact algebraic statements and report
//! witnesses on failure.

use crate::arith::{
    series_of_ratfunc, to_conway_basis, ArithError, ConwayPoly, Int, LaurentPoly, Matrix, Rat,
    RationalFunction, Ring, TruncatedSeries,
};
use crate::arith::matrix::{dot, row_times_matrix};
use crate::report::{Check, VerificationReport};
use crate::seifert::{
    alexander_matrix_of, check_knot_matrix, intersection_form, SeifertData, ValidationError,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum InvariantError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

/// The potential function: det(sqrt(t) M_Ω - 1/sqrt(t) M_Ω^T) as a Laurent
/// polynomial in s = sqrt(t).
pub fn potential_function(data: &SeifertData) -> LaurentPoly<'s'> {
    potential_of_matrix(&data.full_seifert_matrix())
}

fn potential_of_matrix(m: &Matrix<Int>) -> LaurentPoly<'s'> {
    Matrix::from_fn(m.rows(), m.cols(), |i, j| {
        LaurentPoly::from_terms([(1, m[(i, j)].clone()), (-1, -m[(j, i)].clone())])
    })
    .det()
}

/// The Conway polynomial of the link, from its potential function.
pub fn conway_link(data: &SeifertData) -> Result<ConwayPoly, ArithError> {
    to_conway_basis(&potential_function(data))
}

/// The Conway polynomial of a knot given by a Seifert matrix with respect to
/// a symplectic basis. The constant term is always a unit; its sign is kept
/// as computed rather than normalized away.
pub fn conway_knot(seifert: &Matrix<Int>) -> Result<ConwayPoly, InvariantError> {
    check_knot_matrix(seifert)?;
    let nabla = to_conway_basis(&potential_of_matrix(seifert)).map_err(ArithError::from)?;
    let c0 = nabla.constant_term();
    assert!(
        (&c0 * &c0).is_one(),
        "Conway polynomial of a knot must have unit constant term, got {c0}"
    );
    Ok(nabla)
}

/// The m x m matrix of linking pairings p_ij in the infinite cyclic cover.
///
/// All entries share the denominator det(tM - M^T); the inverse is realized
/// as adjugate over determinant so everything stays polynomial until the last
/// step.
pub fn pairing_matrix(data: &SeifertData) -> Matrix<RationalFunction> {
    let m = data.components();
    let alexander = data.alexander_matrix();
    let det = alexander.det();
    let adj = alexander.adjugate();
    let one_minus_t = LaurentPoly::from_coeffs(&[1, -1]);
    Matrix::from_fn(m, m, |i, j| {
        let vi = data.linking_row(i);
        let vj = data.linking_row(j);
        // V_i · adj · V_j^T
        let mut quad = LaurentPoly::zero();
        for (a, va) in vi.iter().enumerate() {
            for (b, vb) in vj.iter().enumerate() {
                quad = &quad + &adj[(a, b)].scale(va).scale(vb);
            }
        }
        let num = &det.scale(&data.band_matrix()[(i, j)]) + &(&one_minus_t * &quad);
        RationalFunction::new(num, det.clone()).expect("Alexander determinant is nonzero")
    })
}

/// Verify the factorization of the link's Conway polynomial into
/// z^m · (knot Conway polynomial) · det(pairing matrix), as an exact identity
/// of Laurent polynomials in s after cross-multiplication.
pub fn verify_factorization(data: &SeifertData) -> VerificationReport {
    let m = data.components();
    let potential_link = potential_function(data);
    let potential_knot = potential_of_matrix(data.seifert_matrix());
    let det_pairing = pairing_matrix(data).det();
    // everything in s, substituting t = s^2
    let num_s = det_pairing.numerator().subst_pow::<'s'>(2);
    let den_s = det_pairing.denominator().subst_pow::<'s'>(2);
    let z = LaurentPoly::from_terms([(1, Int::from(1)), (-1, Int::from(-1))]);
    let lhs = &potential_link * &den_s;
    let rhs = &(&z.pow(m) * &potential_knot) * &num_s;
    let mut report = VerificationReport::new();
    report.push(Check::equality("factorization", &lhs, &rhs));
    report
}

/// alpha^n for a pair of linking rows: lk12 for n = 0, and
/// V_1 (PM)^{n-1} P V_2^T for n >= 1.
pub fn alpha_invariant(
    seifert: &Matrix<Int>,
    v1: &[Int],
    v2: &[Int],
    lk12: &Int,
    n: usize,
) -> Int {
    if n == 0 {
        return lk12.clone();
    }
    let genus = seifert.rows() / 2;
    let p = intersection_form(genus);
    // V_1 (PM)^{n-1} P = (((V_1 P) M) P) M ... P, alternating
    let mut row = row_times_matrix(v1, &p);
    for _ in 1..n {
        row = row_times_matrix(&row_times_matrix(&row, seifert), &p);
    }
    dot(&row, v2)
}

/// alpha^n(J_i, J_j) from validated Seifert data; i, j are zero-based.
pub fn alpha(data: &SeifertData, i: usize, j: usize, n: usize) -> Int {
    alpha_invariant(
        data.seifert_matrix(),
        data.linking_row(i),
        data.linking_row(j),
        &data.band_matrix()[(i, j)],
        n,
    )
}

/// The m x m matrix of alpha^n values.
pub fn alpha_matrix(data: &SeifertData, n: usize) -> Matrix<Int> {
    let m = data.components();
    Matrix::from_fn(m, m, |i, j| alpha(data, i, j, n))
}

/// Taylor expansion of p_ij around t = 1; i, j are zero-based. The
/// coefficients are always integers for valid Seifert data.
pub fn taylor_pairing(
    data: &SeifertData,
    i: usize,
    j: usize,
    order: usize,
) -> Result<TruncatedSeries, ArithError> {
    let series = series_of_ratfunc(&pairing_matrix(data)[(i, j)], order)?;
    assert!(
        series.is_integral(),
        "pairing series must have integer coefficients, got {series}"
    );
    Ok(series)
}

/// Verify that the Taylor coefficients of every pairing entry are
/// (-1)^k alpha^k through the given order.
pub fn verify_taylor_alpha(data: &SeifertData, order: usize) -> VerificationReport {
    let mut report = VerificationReport::new();
    let pairings = pairing_matrix(data);
    for i in 0..data.components() {
        for j in 0..data.components() {
            let series = match series_of_ratfunc(&pairings[(i, j)], order) {
                Ok(s) => s,
                Err(e) => {
                    report.push(Check::fail(
                        format!("taylor_alpha[i={},j={}]", i + 1, j + 1),
                        format!("series error: {e}"),
                        "finite Taylor expansion",
                    ));
                    continue;
                }
            };
            let expected = TruncatedSeries::from_coeffs(
                (0..order)
                    .map(|k| {
                        let a = alpha(data, i, j, k);
                        Rat::from_integer(if k % 2 == 0 { a } else { -a })
                    })
                    .collect(),
                order,
            );
            report.push(Check::equality(
                format!("taylor_alpha[i={},j={}]", i + 1, j + 1),
                &series,
                &expected,
            ));
        }
    }
    report
}

/// Verify (tM - M^T) · Σ_{n<N} (1-t)^n (PM)^n P ≡ I mod (t-1)^N, exactly.
pub fn verify_inverse_series(seifert: &Matrix<Int>, order: usize) -> VerificationReport {
    let mut report = VerificationReport::new();
    if let Err(e) = check_knot_matrix(seifert) {
        report.push(Check::fail("inverse_series", e, "a valid knot Seifert matrix"));
        return report;
    }
    let n = seifert.rows();
    let genus = n / 2;
    let p = intersection_form(genus).to_laurent::<'t'>();
    let m_poly = seifert.to_laurent::<'t'>();
    let one_minus_t = LaurentPoly::<'t'>::from_coeffs(&[1, -1]);
    let pm = &p * &m_poly;
    // partial sum Σ (1-t)^n (PM)^n P
    let mut partial = Matrix::zero(n, n);
    let mut term = p.clone();
    let mut unit = LaurentPoly::one();
    for _ in 0..order {
        partial = &partial + &term.scale(&unit);
        term = &pm * &term;
        unit = &unit * &one_minus_t;
    }
    let alexander = alexander_matrix_of(seifert);
    let residue = &(&alexander * &partial) - &Matrix::identity(n);
    let ok = (0..n).all(|i| {
        (0..n).all(|j| residue[(i, j)].vanishes_at_one_to_order(order))
    });
    let name = format!("inverse_series[order={order}]");
    if ok {
        report.push(Check::pass(name));
    } else {
        report.push(Check::fail(
            name,
            format!("residue {residue}"),
            format!("0 mod (t-1)^{order}"),
        ));
    }
    report
}

/// Locate the first non-vanishing alpha level and verify the leading
/// coefficient statement: all z-coefficients of the link's Conway polynomial
/// below m(n*+1) vanish and the coefficient at m(n*+1) is det((-1)^n* alpha^n*).
///
/// The search stops at 2g+1: the powers of the 2g x 2g matrix PM satisfy a
/// degree-2g recurrence, so if every level through 2g vanishes they all do,
/// and then the pairing matrix itself is zero and the Conway polynomial must
/// vanish ("degenerate" case).
pub fn leading_coefficient_check(data: &SeifertData) -> VerificationReport {
    let mut report = VerificationReport::new();
    let nabla = match conway_link(data) {
        Ok(p) => p,
        Err(e) => {
            report.push(Check::fail("leading_coefficient", e, "a Conway polynomial"));
            return report;
        }
    };
    let m = data.components();
    let bound = 2 * data.genus() + 1;
    let first_level = (0..=bound).find(|&n| !alpha_matrix(data, n).is_zero());
    let level = match first_level {
        None => {
            // all pairings have identically zero expansions, so det(p) = 0
            report.push(Check::equality(
                "leading_coefficient[degenerate]",
                &nabla,
                &ConwayPoly::zero(),
            ));
            return report;
        }
        Some(n) => n,
    };
    let leading_exp = m * (level + 1);
    for k in 0..leading_exp {
        let c = nabla.coeff(k);
        if !c.is_zero() {
            report.push(Check::fail(
                format!("leading_coefficient[vanish z^{k}]"),
                c,
                Int::zero(),
            ));
        }
    }
    let signed = alpha_matrix(data, level).map(|a| {
        if level % 2 == 0 {
            a.clone()
        } else {
            -a.clone()
        }
    });
    report.push(Check::equality(
        format!("leading_coefficient[n*={level}, z^{leading_exp}]"),
        &nabla.coeff(leading_exp),
        &signed.det(),
    ));
    report
}

/// The Kojima–Yamasaki eta function of a knot (Seifert matrix M) and a
/// disjoint curve with linking row v: (1-t) · v (tM - M^T)^{-1} v^T.
pub fn eta_function(seifert: &Matrix<Int>, linking: &[Int]) -> RationalFunction {
    let alexander = alexander_matrix_of(seifert);
    let det = alexander.det();
    let adj = alexander.adjugate();
    let mut quad = LaurentPoly::zero();
    for (a, va) in linking.iter().enumerate() {
        for (b, vb) in linking.iter().enumerate() {
            quad = &quad + &adj[(a, b)].scale(va).scale(vb);
        }
    }
    let one_minus_t = LaurentPoly::from_coeffs(&[1, -1]);
    RationalFunction::new(&one_minus_t * &quad, det).expect("Alexander determinant is nonzero")
}

/// Verify Cochran's expansion of the eta function: with c_k the k-th derived
/// class of the curve and l_k = c_k M c_k^T,
///
///   eta(t) ≡ Σ_{k=1..K} l_k · x(t)^k  mod (t-1)^(2K+2),
///
/// where x(t) = (t-1)(1/t - 1) = -(t-1)^2/t. The modulus 2K+2 is sharp: the
/// first omitted term l_{K+1} x^{K+1} has order 2K+2 in (t-1).
pub fn verify_eta_cochran(
    seifert: &Matrix<Int>,
    linking: &[Int],
    depth: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new();
    let order = 2 * depth + 2;
    let eta = eta_function(seifert, linking);
    let eta_series = match series_of_ratfunc(&eta, order) {
        Ok(s) => s,
        Err(e) => {
            report.push(Check::fail("eta_cochran", e, "finite Taylor expansion"));
            return report;
        }
    };
    // x(t) = -(t-1)^2 / t as a series in u = t-1
    let x = series_of_ratfunc(
        &RationalFunction::new(
            LaurentPoly::from_coeffs(&[-1, 2, -1]),
            LaurentPoly::variable(),
        )
        .unwrap(),
        order,
    )
    .unwrap();
    let mut sum = TruncatedSeries::zero_of_order(order);
    let mut x_power = x.clone();
    for k in 1..=depth {
        let class = crate::derivation::iterated_derivative(
            seifert,
            linking,
            k,
            crate::derivation::Direction::Positive,
        );
        let self_linking = dot(&row_times_matrix(class.coefficients(), seifert), class.coefficients());
        sum = &sum + &x_power.scale(&Rat::from_integer(self_linking));
        x_power = &x_power * &x;
    }
    report.push(Check::equality(
        format!("eta_cochran[depth={depth}]"),
        &eta_series,
        &sum,
    ));
    report
}
