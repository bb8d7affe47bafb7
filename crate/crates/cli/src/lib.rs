//! Command-line front end for `kalman-core`.
//!
//! Every subcommand renders its report into a `String`; `main` prints it and
//! maps failures to exit codes (1 assertion, 2 input, 3 internal).

use std::collections::BTreeSet;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kalman_core::audit::{factorization_audit, Status};
use kalman_core::chow::{class_w, coeff_ctilde, wtilde};
use kalman_core::enumerative::{degree_table, discrepancies, discriminant_budget};
use kalman_core::kalman::{kalman_det, KalmanInstance};
use kalman_core::salmon::kalman_conic_equation;
use kalman_core::veronese::{sym_power, Partition};
use kalman_core::witness::{check_eigenpairs, mu_witness, polarization_at, rational_normal_curve, Sampler, Strategy};
use kalman_core::{Error, MonomialOrder, PolyMatrix, Polynomial, Scalar, Universe};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "kalman", version, about = "Exact computations on nonlinear Kalman varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Symmetric power rho_d(A) of a symbolic n x n matrix.
    Sympower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Kalman matrix K_d(f) of a hypersurface over symbolic A.
    KalmanMatrix {
        #[arg(long)]
        f: String,
    },
    /// Symbolic det K_d(f).
    KalmanDet {
        #[arg(long)]
        f: String,
        /// Print the determinant itself, not only its size.
        #[arg(long)]
        print: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Kalman variety of a plane conic via the Salmon resultant.
    Salmon {
        #[arg(long)]
        conic: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Pointwise certification of the determinant factorization.
    Audit {
        #[arg(long)]
        f: String,
        #[arg(long, default_value_t = 20)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        points: PointArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Degree formulas: the pinned table, or the budget for one (n, d).
    Degrees {
        #[arg(long, conflicts_with_all = ["n", "d"])]
        table: bool,
        #[arg(long, requires = "d")]
        n: Option<u64>,
        #[arg(long, requires = "n")]
        d: Option<u32>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Classes in the truncated Chow ring.
    Chow {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: usize,
    },
    /// A matrix with eigenvectors satisfying the polarization f_mu.
    Witness {
        #[arg(long)]
        f: String,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        points: PointArgs,
    },
}

/// How points on `V(f)` are found.
#[derive(Args, Debug, Clone)]
pub struct PointArgs {
    /// Sample along the rational normal curve (1, t, t^2, ...).
    #[arg(long, conflicts_with = "point")]
    pub rnc: bool,
    /// A fixed point on V(f), comma separated.
    #[arg(long)]
    pub point: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitKind {
    Assertion = 1,
    Input = 2,
    Internal = 3,
}

#[derive(Debug)]
pub struct Failure {
    pub kind: ExitKind,
    pub message: String,
    /// Report produced before the failure was detected, if any.
    pub output: Option<String>,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure { kind: ExitKind::Input, message: message.into(), output: None }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let kind = match e {
            Error::Parse { .. }
            | Error::NotHomogeneous(_)
            | Error::OutOfRange(_)
            | Error::UnsupportedPartition(_)
            | Error::Unsupported(_)
            | Error::DegenerateDegree(_)
            | Error::UniverseMismatch => ExitKind::Input,
            Error::NoStrategy | Error::RetryExhausted(_) | Error::SingularV => ExitKind::Assertion,
            _ => ExitKind::Internal,
        };
        Failure { kind, message: e.to_string(), output: None }
    }
}

pub type CmdResult = Result<String, Failure>;

/// Identifiers in polynomial text, in order of first appearance.
pub fn identifiers(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_alphabetic() || bytes[i] == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let name = &text[start..i];
            if !out.iter().any(|n| n == name) {
                out.push(name.to_string());
            }
        } else if bytes[i].is_ascii_digit() {
            // Skip numbers so that the digits of `3x` never start a name.
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
        } else {
            i += 1;
        }
    }
    out
}

fn coordinate_index(name: &str) -> Option<usize> {
    name.strip_prefix('x').and_then(|r| r.parse::<usize>().ok()).filter(|&i| i >= 1 && !name[1..].starts_with('0'))
}

/// Parses a form in `x1..xn`, where `n` is the largest index that occurs.
pub fn parse_form(text: &str) -> Result<Polynomial, Failure> {
    let mut n = 0;
    for name in identifiers(text) {
        match coordinate_index(&name) {
            Some(i) => n = n.max(i),
            None => return Err(Failure::input(format!("unknown variable {name}; forms use x1, x2, ..."))),
        }
    }
    if n == 0 {
        return Err(Failure::input("the form has no variables"));
    }
    Ok(Polynomial::parse(&Universe::coordinates(n), text)?)
}

/// Parses a ternary conic whose coefficients may be further variables; those
/// come first, sorted by name, then `x1, x2, x3`.
pub fn parse_conic(text: &str) -> Result<Polynomial, Failure> {
    let coords = ["x1", "x2", "x3"];
    let mut params: BTreeSet<String> = BTreeSet::new();
    for name in identifiers(text) {
        if coordinate_index(&name).is_some() && !coords.contains(&name.as_str()) {
            return Err(Failure::input(format!("{name}: a conic lives in x1, x2, x3")));
        }
        if !coords.contains(&name.as_str()) {
            params.insert(name);
        }
    }
    let names: Vec<String> = params.into_iter().chain(coords.iter().map(|s| s.to_string())).collect();
    let u: Arc<Universe> = Universe::new(names, MonomialOrder::GradedLex);
    let f = Polynomial::parse(&u, text)?;
    let x: Vec<usize> = coords.iter().map(|c| u.index_of(c).expect("declared")).collect();
    if f.is_homogeneous_in_block(&x) != Some(2) {
        return Err(Failure::input("the conic must be a quadratic form in x1, x2, x3"));
    }
    Ok(f)
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    Ok(Partition::parse(text.trim_matches(|c| c == '(' || c == ')'))?)
}

fn strategy(points: &PointArgs, n: usize) -> Result<Strategy, Failure> {
    if points.rnc {
        return Ok(Strategy::Parametrization(rational_normal_curve(n)));
    }
    match &points.point {
        Some(text) => {
            let values = text
                .split(',')
                .map(|s| kalman_core::scalar::parse_scalar(s.trim()))
                .collect::<kalman_core::Result<Vec<Scalar>>>()?;
            Ok(Strategy::UserPoint(values))
        }
        None => Ok(Strategy::SolvableVariable),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

pub fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Sympower { n, d, format } => sympower(*n, *d, *format),
        Command::KalmanMatrix { f } => kalman_matrix(f),
        Command::KalmanDet { f, print, format } => kalman_det_cmd(f, *print, *format),
        Command::Salmon { conic, format } => salmon(conic, *format),
        Command::Audit { f, trials, seed, points, format } => audit(f, *trials, *seed, points, *format),
        Command::Degrees { table, n, d, format } => degrees(*table, *n, *d, *format),
        Command::Chow { n, s } => chow(*n, *s),
        Command::Witness { f, mu, seed, points } => witness(f, mu, *seed, points),
    }
}

#[derive(Serialize)]
struct MatrixReport {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

fn matrix_report(m: &PolyMatrix) -> MatrixReport {
    MatrixReport {
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows()).map(|i| m.row(i).iter().map(|p| p.to_text()).collect()).collect(),
    }
}

pub fn sympower(n: usize, d: u32, format: Format) -> CmdResult {
    if n == 0 || d == 0 {
        return Err(Failure::input("need n >= 1 and d >= 1"));
    }
    let m = sym_power(&PolyMatrix::symbolic(n), d)?;
    Ok(match format {
        Format::Json => to_json(&matrix_report(&m)),
        Format::Text | Format::Csv => format!("{m}\n"),
    })
}

pub fn kalman_matrix(f: &str) -> CmdResult {
    let f = parse_form(f)?;
    let inst = KalmanInstance::hypersurface(&f)?;
    let k = inst.kalman_matrix(&PolyMatrix::symbolic(inst.n()))?;
    Ok(format!("{k}\n"))
}

#[derive(Serialize)]
struct SizeReport {
    degree: Option<u32>,
    term_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    polynomial: Option<String>,
}

pub fn kalman_det_cmd(f: &str, print: bool, format: Format) -> CmdResult {
    let det = kalman_det(&parse_form(f)?)?;
    let report = SizeReport {
        degree: det.total_degree(),
        term_count: det.num_terms(),
        polynomial: print.then(|| det.to_text()),
    };
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Text | Format::Csv => {
            let mut out = format!(
                "degree: {}\nterms: {}\n",
                report.degree.map_or_else(|| "-inf".to_string(), |d| d.to_string()),
                report.term_count
            );
            if let Some(p) = report.polynomial {
                out.push_str(&format!("det = {p}\n"));
            }
            out
        }
    })
}

#[derive(Serialize)]
struct SalmonSummary {
    degree: Option<u32>,
    term_count: usize,
    /// Degrees in the matrix entries and in the coefficient variables.
    bidegree: [Option<u32>; 2],
}

#[derive(Serialize)]
struct SalmonReport {
    g1: String,
    g2: String,
    #[serde(flatten)]
    summary: SalmonSummary,
}

pub fn salmon(conic: &str, format: Format) -> CmdResult {
    let f = parse_conic(conic)?;
    let eq = kalman_conic_equation(&f)?;
    let names = eq.g2.universe().names();
    let (a_vars, b_vars): (Vec<usize>, Vec<usize>) = (0..names.len()).partition(|&i| i < 9);
    let b_deg = if b_vars.is_empty() { Some(0) } else { eq.g2.degree_in_block(&b_vars) };
    let summary = SalmonSummary {
        degree: eq.g2.total_degree(),
        term_count: eq.g2.num_terms(),
        bidegree: [eq.g2.degree_in_block(&a_vars), b_deg],
    };
    Ok(match format {
        Format::Json => to_json(&SalmonReport { g1: eq.g1.to_text(), g2: eq.g2.to_text(), summary }),
        Format::Text | Format::Csv => format!(
            "g1 = {}\ng2 = {}\n{}\n",
            eq.g1,
            eq.g2,
            serde_json::to_string(&summary).expect("report serializes")
        ),
    })
}

#[derive(Serialize)]
struct AuditEntryJson<'a> {
    assertion: &'a str,
    status: &'a str,
    witness_seed: u64,
    certificate: &'a str,
}

#[derive(Serialize)]
struct AuditJson<'a> {
    n: usize,
    d: u32,
    trials: u64,
    passed: bool,
    entries: Vec<AuditEntryJson<'a>>,
}

pub fn audit(f: &str, trials: u64, seed: u64, points: &PointArgs, format: Format) -> CmdResult {
    let f = parse_form(f)?;
    let strategy = strategy(points, f.universe().len())?;
    let report = factorization_audit(&f, &strategy, trials, seed)?;
    let out = match format {
        Format::Json => to_json(&AuditJson {
            n: report.n,
            d: report.d,
            trials: report.trials,
            passed: report.passed(),
            entries: report
                .entries
                .iter()
                .map(|e| AuditEntryJson {
                    assertion: &e.assertion,
                    status: e.status.as_str(),
                    witness_seed: e.witness_seed,
                    certificate: &e.certificate,
                })
                .collect(),
        }),
        Format::Csv => to_csv(
            &["assertion", "status", "witness_seed", "certificate"],
            &report
                .entries
                .iter()
                .map(|e| {
                    vec![e.assertion.clone(), e.status.as_str().to_string(), e.witness_seed.to_string(), e.certificate.clone()]
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut out = String::new();
            for e in &report.entries {
                out.push_str(&format!("[{}] {}: {}\n", e.status.as_str(), e.assertion, e.certificate));
            }
            out
        }
    };
    if report.entries.iter().any(|e| e.status == Status::Fail) {
        return Err(Failure { kind: ExitKind::Assertion, message: "audit failed".into(), output: Some(out) });
    }
    Ok(out)
}

pub fn degrees(table: bool, n: Option<u64>, d: Option<u32>, format: Format) -> CmdResult {
    let (header, rows): (Vec<&str>, Vec<Vec<String>>) = match (table, n, d) {
        (true, _, _) => (
            vec!["quantity", "params", "value"],
            degree_table()?.into_iter().map(|r| vec![r.quantity.to_string(), r.params, r.value.to_string()]).collect(),
        ),
        (false, Some(n), Some(d)) => (
            vec!["quantity", "value"],
            discriminant_budget(n, d)?.values.into_iter().map(|(k, v)| vec![k.to_string(), v.to_string()]).collect(),
        ),
        _ => return Err(Failure::input("pass --table, or both --n and --d")),
    };
    Ok(match format {
        Format::Csv => to_csv(&header, &rows),
        Format::Json => {
            let objects: Vec<serde_json::Map<String, serde_json::Value>> = rows
                .iter()
                .map(|row| header.iter().zip(row).map(|(k, v)| (k.to_string(), serde_json::Value::from(v.as_str()))).collect())
                .collect();
            to_json(&objects)
        }
        Format::Text => {
            let mut out: String = rows.iter().map(|row| format!("{}\n", row.join(" "))).collect();
            if table {
                for disc in discrepancies() {
                    out.push_str(&format!("# {}: computed {}, stated {} ({})\n", disc.label, disc.computed, disc.stated, disc.note));
                }
            }
            out
        }
    })
}

pub fn chow(n: u32, s: usize) -> CmdResult {
    let w = class_w(n, s)?;
    let mut out = format!("[W_{s}] = {w}\n");
    match wtilde(n, s) {
        Ok(class) => {
            out.push_str(&format!("[W~_{s}] = {class}\n"));
            let linear = class.linear_coefficient();
            let expected = coeff_ctilde(n as u64, s as u64);
            out.push_str(&format!("c~_{s} = {expected}\n"));
            if linear.as_ref() != Some(&expected) {
                return Err(Failure {
                    kind: ExitKind::Internal,
                    message: format!("linear part of [W~_{s}] is {linear:?}, expected {expected}"),
                    output: Some(out),
                });
            }
        }
        Err(_) => out.push_str(&format!("c~_{s} = {}\n", coeff_ctilde(n as u64, s as u64))),
    }
    Ok(out)
}

#[derive(Serialize)]
struct WitnessChecks {
    eigenpairs: bool,
    polarization_vanishes: bool,
    kalman_det_vanishes: bool,
}

#[derive(Serialize)]
struct WitnessReport {
    seed: u64,
    mu: String,
    #[serde(rename = "A")]
    a: Vec<Vec<String>>,
    #[serde(rename = "V")]
    v: Vec<Vec<String>>,
    #[serde(rename = "D")]
    d: Vec<String>,
    points: Vec<Vec<String>>,
    checks: WitnessChecks,
}

fn strings(values: &[Scalar]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

pub fn witness(f: &str, mu: &str, seed: u64, points: &PointArgs) -> CmdResult {
    let f = parse_form(f)?;
    let mu = parse_partition(mu)?;
    let strategy = strategy(points, f.universe().len())?;
    let w = mu_witness(&f, &mu, &strategy, &mut Sampler::new(seed))?;
    let inst = KalmanInstance::hypersurface(&f)?;
    let checks = WitnessChecks {
        eigenpairs: check_eigenpairs(&w.a, &w.spec)?,
        polarization_vanishes: is_zero(&polarization_at(&f, &mu, &w.points)?),
        kalman_det_vanishes: is_zero(&inst.det_at(&w.a)?),
    };
    let ok = checks.eigenpairs && checks.polarization_vanishes && checks.kalman_det_vanishes;
    let report = WitnessReport {
        seed,
        mu: mu.to_string(),
        a: (0..w.a.rows()).map(|i| strings(w.a.row(i))).collect(),
        v: (0..w.spec.v.rows()).map(|i| strings(w.spec.v.row(i))).collect(),
        d: strings(&w.spec.eigenvalues),
        points: w.points.iter().map(|p| strings(p)).collect(),
        checks,
    };
    let out = to_json(&report);
    if !ok {
        return Err(Failure { kind: ExitKind::Assertion, message: "witness checks failed".into(), output: Some(out) });
    }
    Ok(out)
}

fn is_zero(v: &Scalar) -> bool {
    *v == kalman_core::scalar::int(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_kinds() {
        let kind = |e: Error| Failure::from(e).kind;
        assert_eq!(kind(Error::Parse { pos: 0, msg: "x".into() }), ExitKind::Input);
        assert_eq!(kind(Error::NoStrategy), ExitKind::Assertion);
        assert_eq!(kind(Error::Inconsistent("x".into())), ExitKind::Internal);
        assert_eq!(kind(Error::NotDivisible), ExitKind::Internal);
    }

    #[test]
    fn identifier_scan() {
        assert_eq!(identifiers("3*x1^2 - b12*x2 + (x1)"), vec!["x1", "b12", "x2"]);
        assert!(parse_form("x1 + z").is_err());
        assert_eq!(parse_form("x3").unwrap().universe().len(), 3);
        let conic = parse_conic("b*x1^2 + x2*x3").unwrap();
        assert_eq!(conic.universe().names(), ["b", "x1", "x2", "x3"]);
        assert!(parse_conic("x4^2").is_err());
        assert!(parse_conic("x1^3").is_err());
    }
}
