//! Acceptance suite: every identity the crate promises, exercised at desk
//! scale with fixed seeds, plus frozen golden values for the worked examples.
//! Each test prints one PASS line; run with `--nocapture` to see them.

mod common;

use std::process::Command;

use conway_seifert::arith::matrix::{dot, row_times_matrix};
use conway_seifert::derivation::{self, Direction};
use conway_seifert::invariants;
use conway_seifert::{Int, Matrix, Ring};

use common::{random_knot_matrix, random_row, random_seifert_data, random_split_data, rng};

fn pass(line: &str) {
    println!("[PASS] {line}");
}

/// Criterion 1: the Conway factorization identity holds exactly on 200
/// random validated data sets with g <= 3, m <= 3, entries in [-3, 3].
#[test]
fn criterion_1_factorization() {
    let mut rng = rng(0xC0817_01);
    for case in 0..200 {
        let g = (case % 4) as usize;
        let m = 1 + (case % 3) as usize;
        let data = random_seifert_data(&mut rng, g, m, 3);
        let report = invariants::verify_factorization(&data);
        assert!(report.passed(), "case {case} (g={g}, m={m}): {report}");
    }
    pass("criterion 1: factorization identity on 200 random data sets");
}

/// Criterion 2: Taylor coefficients of every pairing match the alpha
/// invariants through order 10 on 100 random data sets, and are integral.
#[test]
fn criterion_2_taylor_alpha() {
    let mut rng = rng(0xC0817_02);
    for case in 0..100 {
        let g = (case % 4) as usize;
        let m = 1 + (case % 3) as usize;
        let data = random_seifert_data(&mut rng, g, m, 3);
        let report = invariants::verify_taylor_alpha(&data, 10);
        assert!(report.passed(), "case {case}: {report}");
        for i in 0..m {
            for j in 0..m {
                let series = invariants::taylor_pairing(&data, i, j, 10).unwrap();
                assert!(series.is_integral(), "case {case}: non-integral {series}");
            }
        }
    }
    pass("criterion 2: Taylor/alpha agreement through order 10 on 100 random data sets");
}

/// Criterion 3: the inverse Alexander matrix series identity holds mod
/// (t-1)^10 for 100 random Seifert matrices up to size 8x8.
#[test]
fn criterion_3_inverse_series() {
    let mut rng = rng(0xC0817_03);
    for case in 0..100 {
        let g = (case % 5) as usize; // sizes 0..=8
        let m = random_knot_matrix(&mut rng, g, 3);
        let report = invariants::verify_inverse_series(&m, 10);
        assert!(report.passed(), "case {case} (g={g}): {report}");
    }
    pass("criterion 3: inverse-series identity mod (t-1)^10 on 100 random matrices");
}

/// Criterion 4: leading coefficients. Hoste case on 100 random data sets:
/// the z^m coefficient is det(A) and all lower ones vanish. Split case on 50
/// random data sets with A = 0: divisibility by z^{2m} with coefficient
/// det(-alpha^1).
#[test]
fn criterion_4_leading_coefficients() {
    let mut rng = rng(0xC0817_04);
    for case in 0..100 {
        let g = (case % 4) as usize;
        let m = 1 + (case % 3) as usize;
        let data = random_seifert_data(&mut rng, g, m, 3);
        let nabla = invariants::conway_link(&data).unwrap();
        for k in 0..m {
            assert!(nabla.coeff(k).is_zero(), "case {case}: coefficient below z^m");
        }
        assert_eq!(
            nabla.coeff(m),
            data.band_matrix().det(),
            "case {case}: Hoste coefficient"
        );
    }
    for case in 0..50 {
        let g = (case % 4) as usize;
        let m = 1 + (case % 3) as usize;
        let data = random_split_data(&mut rng, g, m, 3);
        let nabla = invariants::conway_link(&data).unwrap();
        for k in 0..2 * m {
            assert!(nabla.coeff(k).is_zero(), "case {case}: coefficient below z^2m");
        }
        let neg_alpha1 = invariants::alpha_matrix(&data, 1).map(|a| -a.clone());
        assert_eq!(
            nabla.coeff(2 * m),
            neg_alpha1.det(),
            "case {case}: split leading coefficient"
        );
    }
    pass("criterion 4: Hoste coefficient on 100 data sets, split case on 50");
}

/// Independent route to beta^{k,l}: iterate the derive/pushoff recursion on
/// both curves and pair the classes through the Seifert form.
fn beta_via_derivation(
    seifert: &Matrix<Int>,
    v1: &[Int],
    v2: &[Int],
    k: usize,
    l: usize,
) -> Int {
    let a = derivation::iterated_derivative(seifert, v1, k, Direction::Positive);
    if l == 0 {
        return dot(a.coefficients(), v2);
    }
    let b = derivation::iterated_derivative(seifert, v2, l, Direction::Negative);
    dot(&row_times_matrix(a.coefficients(), seifert), b.coefficients())
}

/// Criterion 5: the beta reduction law and the two-path equivalence of the
/// closed form with the recursion, for k, l <= 4 on 100 random triples.
#[test]
fn criterion_5_beta_reduction_and_two_path() {
    let mut rng = rng(0xC0817_05);
    for case in 0..100 {
        let g = 1 + (case % 3) as usize;
        let m = random_knot_matrix(&mut rng, g, 3);
        let v1 = random_row(&mut rng, 2 * g, 3);
        let v2 = random_row(&mut rng, 2 * g, 3);
        let report = derivation::verify_beta_reduction(&m, &v1, &v2, 4, 4);
        assert!(report.passed(), "case {case}: {report}");
        for k in 1..=4 {
            for l in 0..=4 {
                let closed = derivation::beta(&m, &v1, &v2, &Int::zero(), k, l).unwrap();
                let recursive = beta_via_derivation(&m, &v1, &v2, k, l);
                assert_eq!(closed, recursive, "case {case}: beta^({k},{l}) routes disagree");
            }
        }
    }
    pass("criterion 5: beta reduction and two-path equivalence on 100 random triples");
}

/// Criterion 6: Cochran's expansion of the eta function mod (t-1)^10
/// (depth 4) on 100 random matrix/row pairs.
#[test]
fn criterion_6_eta_cochran() {
    let mut rng = rng(0xC0817_06);
    for case in 0..100 {
        let g = (case % 4) as usize;
        let m = random_knot_matrix(&mut rng, g, 3);
        let v = random_row(&mut rng, 2 * g, 3);
        let report = invariants::verify_eta_cochran(&m, &v, 4);
        assert!(report.passed(), "case {case}: {report}");
    }
    pass("criterion 6: eta/Cochran expansion mod (t-1)^10 on 100 random pairs");
}

fn run_cli(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_conway-seifert"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8 output"),
        out.status.code().unwrap_or(-1),
    )
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Criterion 7: frozen golden values for the worked examples, matched
/// byte-for-byte in machine output mode.
#[test]
fn criterion_7_golden_values() {
    let trefoil = fixture("trefoil_band.sd");
    let hopf = fixture("hopf.sd");

    let (out, code) = run_cli(&["--format", "machine", "conway", &hopf]);
    assert_eq!((out.as_str(), code), ("nabla_L=1*z^1\n", 0));

    let (out, code) = run_cli(&["--format", "machine", "conway", &trefoil]);
    assert_eq!((out.as_str(), code), ("nabla_L=1*z^3\n", 0));

    let (out, code) = run_cli(&["--format", "machine", "conway-knot", &trefoil]);
    assert_eq!((out.as_str(), code), ("nabla_K=1 + 1*z^2\nconstant=1\n", 0));

    let (out, code) = run_cli(&["--format", "machine", "alexander", &trefoil]);
    assert_eq!(code, 0);
    assert!(out.contains("det=1 - 1*t^1 + 1*t^2\n"), "got: {out}");

    let (out, code) = run_cli(&["--format", "machine", "pairing", &trefoil]);
    assert_eq!(
        (out.as_str(), code),
        ("m=1\np.1.1=(1 - 2*t^1 + 1*t^2) / (1 - 1*t^1 + 1*t^2)\n", 0)
    );

    let (out, code) = run_cli(&[
        "--format", "machine", "taylor", "--order", "4", "--i", "1", "--j", "1", &trefoil,
    ]);
    assert_eq!((out.as_str(), code), ("series=u^2 - u^3 + O(u^4)\n", 0));

    for (n, expected) in [(0, "0"), (1, "0"), (2, "1"), (3, "1")] {
        let n_arg = n.to_string();
        let (out, code) = run_cli(&[
            "--format", "machine", "alpha", "--n", &n_arg, "--i", "1", "--j", "1", &trefoil,
        ]);
        assert_eq!((out.as_str(), code), (format!("alpha={expected}\n").as_str(), 0));
    }

    let (_, code) = run_cli(&["verify", "--all", &trefoil]);
    assert_eq!(code, 0);

    pass("criterion 7: golden machine-mode values for Hopf and trefoil-band data");
}

/// Criterion 8: parity and vanishing. The link polynomial only carries
/// exponents congruent to m mod 2 and none below m; the knot polynomial has
/// unit constant term.
#[test]
fn criterion_8_parity_and_vanishing() {
    let mut rng = rng(0xC0817_08);
    for case in 0..100 {
        let g = (case % 4) as usize;
        let m = 1 + (case % 3) as usize;
        let data = random_seifert_data(&mut rng, g, m, 3);
        let nabla = invariants::conway_link(&data).unwrap();
        for (e, _) in nabla.terms() {
            assert_eq!(e % 2, m % 2, "case {case}: parity");
            assert!(e >= m, "case {case}: exponent below m");
        }
        let knot = invariants::conway_knot(data.seifert_matrix()).unwrap();
        let c0 = knot.constant_term();
        assert!((&c0 * &c0).is_one(), "case {case}: constant {c0}");
    }
    pass("criterion 8: parity, vanishing below z^m, and unit knot constant on 100 data sets");
}
