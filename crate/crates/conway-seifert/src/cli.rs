//! Command-line front end.
//!
//! Subcommands read a `seifert-data v1` document from a file argument (or
//! standard input when the argument is absent or `-`), run the requested
//! computation, and print deterministic text. Exit codes: 0 success,
//! 1 validation or argument error, 2 verification failure, 3 parse error
//! (of the document or the command line).

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::derivation;
use crate::document::{self, DocumentError};
use crate::invariants;
use crate::report::VerificationReport;
use crate::seifert::SeifertData;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl RunOutput {
    fn ok(stdout: String) -> Self {
        RunOutput { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn error(code: i32, message: impl std::fmt::Display) -> Self {
        RunOutput { stdout: String::new(), stderr: format!("{message}\n"), code }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Parser, Debug)]
#[command(
    name = "conway-seifert",
    version,
    about = "Conway polynomials and covering linking pairings from Seifert data"
)]
struct Cli {
    /// Output format: human-readable text or one key=value per line
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a Seifert data document
    Validate { file: Option<PathBuf> },
    /// Conway polynomial of the link
    Conway { file: Option<PathBuf> },
    /// Conway polynomial of the knot obtained by cutting the bands
    #[command(name = "conway-knot")]
    ConwayKnot { file: Option<PathBuf> },
    /// Alexander matrix tM - M^T and its determinant
    Alexander { file: Option<PathBuf> },
    /// Matrix of linking pairings in the infinite cyclic cover
    Pairing { file: Option<PathBuf> },
    /// Taylor expansion of the pairing p_ij around t = 1
    Taylor {
        /// Truncation order N (series mod u^N)
        #[arg(long)]
        order: usize,
        /// Row index, 1-based
        #[arg(long)]
        i: usize,
        /// Column index, 1-based
        #[arg(long)]
        j: usize,
        file: Option<PathBuf>,
    },
    /// The invariant alpha^n(J_i, J_j)
    Alpha {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        file: Option<PathBuf>,
    },
    /// The invariant beta^{k,l}(J_i, J_j)
    Beta {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        file: Option<PathBuf>,
    },
    /// Kojima-Yamasaki eta function of the banded knot and J_i
    Eta {
        #[arg(long)]
        i: usize,
        file: Option<PathBuf>,
    },
    /// Run theorem verifications; exits 2 if any check fails
    Verify {
        /// Run every verification (the default when no group is selected)
        #[arg(long)]
        all: bool,
        /// Conway polynomial factorization
        #[arg(long)]
        factorization: bool,
        /// Taylor coefficients of the pairings against alpha invariants
        #[arg(long)]
        taylor: bool,
        /// Series expansion of the inverse Alexander matrix
        #[arg(long)]
        series: bool,
        /// Leading-coefficient statements
        #[arg(long)]
        leading: bool,
        /// Beta reduction law and alpha/beta agreement
        #[arg(long)]
        beta: bool,
        /// Cochran expansion of the eta functions
        #[arg(long)]
        eta: bool,
        /// Truncation order for the taylor and series groups
        #[arg(long, default_value_t = 10)]
        order: usize,
        file: Option<PathBuf>,
    },
    /// Everything: computed values plus all verifications
    Report { file: Option<PathBuf> },
}

impl Command {
    fn file(&self) -> &Option<PathBuf> {
        match self {
            Command::Validate { file }
            | Command::Conway { file }
            | Command::ConwayKnot { file }
            | Command::Alexander { file }
            | Command::Pairing { file }
            | Command::Taylor { file, .. }
            | Command::Alpha { file, .. }
            | Command::Beta { file, .. }
            | Command::Eta { file, .. }
            | Command::Verify { file, .. }
            | Command::Report { file } => file,
        }
    }
}

/// Run the CLI on the given argument list (including the program name).
pub fn run<I, S>(args: I) -> RunOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    RunOutput::ok(e.to_string())
                }
                _ => RunOutput::error(EXIT_PARSE, e),
            }
        }
    };
    let input = match read_input(cli.command.file()) {
        Ok(text) => text,
        Err(e) => return RunOutput::error(EXIT_VALIDATION, format_args!("cannot read input: {e}")),
    };
    let data = match document::parse(&input) {
        Ok(data) => data,
        Err(DocumentError::Parse(e)) => return RunOutput::error(EXIT_PARSE, e),
        Err(DocumentError::Validation(e)) => return RunOutput::error(EXIT_VALIDATION, e),
    };
    execute(&cli.command, &data, cli.format)
}

fn read_input(path: &Option<PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn check_index(i: usize, m: usize, name: &str) -> Result<usize, RunOutput> {
    if i >= 1 && i <= m {
        Ok(i - 1)
    } else {
        Err(RunOutput::error(
            EXIT_VALIDATION,
            format_args!("index --{name} {i} out of range 1..={m}"),
        ))
    }
}

fn execute(command: &Command, data: &SeifertData, format: Format) -> RunOutput {
    let mut pairs: Vec<(String, String)> = Vec::new();
    let mut verify_groups: Vec<(&'static str, VerificationReport)> = Vec::new();

    match command {
        Command::Validate { .. } => {
            pairs.push(("valid".into(), "true".into()));
            pairs.push(("g".into(), data.genus().to_string()));
            pairs.push(("m".into(), data.components().to_string()));
        }
        Command::Conway { .. } => match invariants::conway_link(data) {
            Ok(nabla) => pairs.push(("nabla_L".into(), nabla.to_string())),
            Err(e) => return RunOutput::error(EXIT_VALIDATION, e),
        },
        Command::ConwayKnot { .. } => match invariants::conway_knot(data.seifert_matrix()) {
            Ok(nabla) => {
                pairs.push(("nabla_K".into(), nabla.to_string()));
                pairs.push(("constant".into(), nabla.constant_term().to_string()));
            }
            Err(e) => return RunOutput::error(EXIT_VALIDATION, e),
        },
        Command::Alexander { .. } => {
            let alexander = data.alexander_matrix();
            pairs.push(("size".into(), alexander.rows().to_string()));
            for i in 0..alexander.rows() {
                for j in 0..alexander.cols() {
                    pairs.push((
                        format!("entry.{}.{}", i + 1, j + 1),
                        alexander[(i, j)].to_string(),
                    ));
                }
            }
            pairs.push(("det".into(), alexander.det().to_string()));
        }
        Command::Pairing { .. } => {
            let p = invariants::pairing_matrix(data);
            pairs.push(("m".into(), data.components().to_string()));
            for i in 0..p.rows() {
                for j in 0..p.cols() {
                    pairs.push((format!("p.{}.{}", i + 1, j + 1), p[(i, j)].to_string()));
                }
            }
        }
        Command::Taylor { order, i, j, .. } => {
            if *order < 1 {
                return RunOutput::error(EXIT_VALIDATION, "--order must be at least 1");
            }
            let (i, j) = match indices(*i, *j, data.components()) {
                Ok(ij) => ij,
                Err(out) => return out,
            };
            match invariants::taylor_pairing(data, i, j, *order) {
                Ok(series) => pairs.push(("series".into(), series.to_string())),
                Err(e) => return RunOutput::error(EXIT_VALIDATION, e),
            }
        }
        Command::Alpha { n, i, j, .. } => {
            let (i, j) = match indices(*i, *j, data.components()) {
                Ok(ij) => ij,
                Err(out) => return out,
            };
            pairs.push(("alpha".into(), invariants::alpha(data, i, j, *n).to_string()));
        }
        Command::Beta { k, l, i, j, .. } => {
            let (i, j) = match indices(*i, *j, data.components()) {
                Ok(ij) => ij,
                Err(out) => return out,
            };
            let lk12 = data.band_matrix()[(i, j)].clone();
            match derivation::beta(
                data.seifert_matrix(),
                data.linking_row(i),
                data.linking_row(j),
                &lk12,
                *k,
                *l,
            ) {
                Ok(value) => pairs.push(("beta".into(), value.to_string())),
                Err(e) => return RunOutput::error(EXIT_VALIDATION, e),
            }
        }
        Command::Eta { i, .. } => {
            let i = match check_index(*i, data.components(), "i") {
                Ok(i) => i,
                Err(out) => return out,
            };
            let eta = invariants::eta_function(data.seifert_matrix(), data.linking_row(i));
            pairs.push(("eta".into(), eta.to_string()));
        }
        Command::Verify {
            all,
            factorization,
            taylor,
            series,
            leading,
            beta,
            eta,
            order,
            ..
        } => {
            let any = *factorization || *taylor || *series || *leading || *beta || *eta;
            let everything = *all || !any;
            if *order < 1 {
                return RunOutput::error(EXIT_VALIDATION, "--order must be at least 1");
            }
            if everything || *factorization {
                verify_groups.push(("factorization", invariants::verify_factorization(data)));
            }
            if everything || *taylor {
                verify_groups.push(("taylor", invariants::verify_taylor_alpha(data, *order)));
            }
            if everything || *series {
                verify_groups.push((
                    "series",
                    invariants::verify_inverse_series(data.seifert_matrix(), *order),
                ));
            }
            if everything || *leading {
                verify_groups.push(("leading", invariants::leading_coefficient_check(data)));
            }
            if everything || *beta {
                verify_groups.push(("beta", beta_group(data)));
            }
            if everything || *eta {
                verify_groups.push(("eta", eta_group(data)));
            }
        }
        Command::Report { .. } => {
            pairs.push(("g".into(), data.genus().to_string()));
            pairs.push(("m".into(), data.components().to_string()));
            match invariants::conway_link(data) {
                Ok(nabla) => pairs.push(("nabla_L".into(), nabla.to_string())),
                Err(e) => return RunOutput::error(EXIT_VALIDATION, e),
            }
            match invariants::conway_knot(data.seifert_matrix()) {
                Ok(nabla) => {
                    pairs.push(("nabla_K".into(), nabla.to_string()));
                    pairs.push(("nabla_K_constant".into(), nabla.constant_term().to_string()));
                }
                Err(e) => return RunOutput::error(EXIT_VALIDATION, e),
            }
            pairs.push(("alexander_det".into(), data.alexander_matrix().det().to_string()));
            let p = invariants::pairing_matrix(data);
            for i in 0..p.rows() {
                for j in 0..p.cols() {
                    pairs.push((format!("p.{}.{}", i + 1, j + 1), p[(i, j)].to_string()));
                }
            }
            for i in 0..data.components() {
                for j in 0..data.components() {
                    match invariants::taylor_pairing(data, i, j, 8) {
                        Ok(series) => pairs
                            .push((format!("taylor.{}.{}", i + 1, j + 1), series.to_string())),
                        Err(e) => return RunOutput::error(EXIT_VALIDATION, e),
                    }
                    for n in 0..=4 {
                        pairs.push((
                            format!("alpha.{}.{}.{n}", i + 1, j + 1),
                            invariants::alpha(data, i, j, n).to_string(),
                        ));
                    }
                }
            }
            for i in 0..data.components() {
                let eta = invariants::eta_function(data.seifert_matrix(), data.linking_row(i));
                pairs.push((format!("eta.{}", i + 1), eta.to_string()));
            }
            verify_groups.push(("factorization", invariants::verify_factorization(data)));
            verify_groups.push(("taylor", invariants::verify_taylor_alpha(data, 10)));
            verify_groups.push((
                "series",
                invariants::verify_inverse_series(data.seifert_matrix(), 10),
            ));
            verify_groups.push(("leading", invariants::leading_coefficient_check(data)));
            verify_groups.push(("beta", beta_group(data)));
            verify_groups.push(("eta", eta_group(data)));
        }
    }

    render(pairs, verify_groups, format)
}

fn indices(i: usize, j: usize, m: usize) -> Result<(usize, usize), RunOutput> {
    Ok((check_index(i, m, "i")?, check_index(j, m, "j")?))
}

/// Beta reduction law and alpha/beta agreement over all component pairs.
fn beta_group(data: &SeifertData) -> VerificationReport {
    let mut report = VerificationReport::new();
    let seifert = data.seifert_matrix();
    for i in 0..data.components() {
        for j in 0..data.components() {
            let mut sub = derivation::verify_beta_reduction(
                seifert,
                data.linking_row(i),
                data.linking_row(j),
                4,
                4,
            );
            prefix_checks(&mut sub, i, j);
            report.merge(sub);
            let mut sub = derivation::alpha_equals_beta_check(
                seifert,
                data.linking_row(i),
                data.linking_row(j),
                &data.band_matrix()[(i, j)],
                6,
            );
            prefix_checks(&mut sub, i, j);
            report.merge(sub);
        }
    }
    report
}

/// Cochran expansion of the eta function for every component.
fn eta_group(data: &SeifertData) -> VerificationReport {
    let mut report = VerificationReport::new();
    for i in 0..data.components() {
        let mut sub =
            invariants::verify_eta_cochran(data.seifert_matrix(), data.linking_row(i), 4);
        for check in &mut sub.checks {
            check.name = format!("J{}:{}", i + 1, check.name);
        }
        report.merge(sub);
    }
    report
}

fn prefix_checks(report: &mut VerificationReport, i: usize, j: usize) {
    for check in &mut report.checks {
        check.name = format!("J{}J{}:{}", i + 1, j + 1, check.name);
    }
}

fn single_line(s: &str) -> String {
    s.replace('\n', "; ")
}

fn render(
    pairs: Vec<(String, String)>,
    verify_groups: Vec<(&'static str, VerificationReport)>,
    format: Format,
) -> RunOutput {
    let mut out = String::new();
    for (key, value) in &pairs {
        match format {
            Format::Text => writeln!(out, "{key} = {value}").unwrap(),
            Format::Machine => writeln!(out, "{key}={value}").unwrap(),
        }
    }
    if verify_groups.is_empty() {
        return RunOutput::ok(out);
    }
    let mut all_passed = true;
    for (group, report) in &verify_groups {
        let passed = report.passed();
        all_passed &= passed;
        let status = if passed { "pass" } else { "fail" };
        match format {
            Format::Text => {
                writeln!(out, "{group}: {status}").unwrap();
                for check in report.failures() {
                    writeln!(out, "  {}: fail", check.name).unwrap();
                    if let Some(w) = &check.witness {
                        writeln!(out, "    lhs: {}", single_line(&w.lhs)).unwrap();
                        writeln!(out, "    rhs: {}", single_line(&w.rhs)).unwrap();
                    }
                }
            }
            Format::Machine => {
                writeln!(out, "check.{group}={status}").unwrap();
                for check in report.failures() {
                    let name = check.name.replace(['=', ' '], "_");
                    writeln!(out, "fail.{group}.{name}=1").unwrap();
                    if let Some(w) = &check.witness {
                        writeln!(out, "witness.{group}.{name}.lhs={}", single_line(&w.lhs))
                            .unwrap();
                        writeln!(out, "witness.{group}.{name}.rhs={}", single_line(&w.rhs))
                            .unwrap();
                    }
                }
            }
        }
    }
    let status = if all_passed { "pass" } else { "fail" };
    match format {
        Format::Text => writeln!(out, "result: {status}").unwrap(),
        Format::Machine => writeln!(out, "result={status}").unwrap(),
    }
    RunOutput {
        stdout: out,
        stderr: String::new(),
        code: if all_passed { EXIT_OK } else { EXIT_VERIFICATION },
    }
}
