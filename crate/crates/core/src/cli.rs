//! Command-line front end: `matrix`, `counts`, `charpoly`, `eigen` and
//! `verify`.
//!
//! [`run`] takes the argument list and returns the rendered output and the
//! exit code, so the binary is a thin wrapper and commands are testable
//! without spawning processes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::HTMatrix;
use crate::oracle::{enumerate_spanning_structures, EnumOptions, SpanningKind};
use crate::production::{count_sequence, GraphClass, GraphClassSpec};
use crate::spectral::{
    class_charpoly, dominant_eigenvalue_with_precision, eigenvector_from_charpoly, to_decimal,
    CharPolyMethod, Precision,
};
use crate::verify::{run_suite, Limits, Suite};

pub const FORMAT_VERSION: u32 = 1;
pub const DETERMINANT_CAP: usize = 8;
pub const COUNTS_GUARD: usize = 256;
pub const MATRIX_GUARD: usize = 256;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "convex-count",
    version,
    about = "Production matrices and exact counts for plane graphs on convex point sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the production matrix.
    Matrix {
        #[command(flatten)]
        class: ClassArgs,
        /// Matrix size (for k-angulations, the number of k-gons r).
        #[arg(long, alias = "r")]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Iterate the matrix and print root-degree vectors and totals.
    Counts {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        n_max: usize,
        /// OEIS b-file lines "level total".
        #[arg(long)]
        bfile: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Characteristic polynomial coefficients, low to high.
    Charpoly {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, alias = "r")]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Recurrence)]
        method: MethodArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Largest real eigenvalue, its eigenvector and residual.
    Eigen {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, alias = "r")]
        n: usize,
        /// Bracket width for the eigenvalue; overrides --precision.
        #[arg(long)]
        tol: Option<f64>,
        /// Bits of precision (default: CONVEX_COUNT_PRECISION or 256).
        #[arg(long)]
        precision: Option<u32>,
        /// Decimal digits shown.
        #[arg(long, default_value_t = 30)]
        digits: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run verification suites.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        n_max: Option<usize>,
        /// Bound for the summation identity suite.
        #[arg(long)]
        max: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        precision: Option<u32>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ClassArgs {
    #[arg(value_enum)]
    pub class: ClassArg,
    /// Face size for k-angulations.
    #[arg(long)]
    pub k: Option<i64>,
    /// Component counts inserted by the relation matrix.
    #[arg(long, value_enum, default_value_t = SourceArg::Connected)]
    pub source: SourceArg,
    /// Custom c_2, c_3, … for the relation matrix (implies --source custom).
    #[arg(long, value_delimiter = ',')]
    pub c: Vec<BigInt>,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Lift the soft size guards.
    #[arg(long)]
    pub force: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassArg {
    Kangulation,
    Geometric,
    Connected,
    Partition,
    Relation,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourceArg {
    Connected,
    Trees,
    Paths,
    Custom,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    Recurrence,
    Closed,
    Determinant,
}

impl From<MethodArg> for CharPolyMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Recurrence => Self::Recurrence,
            MethodArg::Closed => Self::Closed,
            MethodArg::Determinant => Self::Determinant,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    All,
    Vectors,
    Charpoly,
    Eigen,
    Oracle,
    Lemma1,
    Relation,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Machine-readable result of one command. Big integers are decimal
/// strings; maps are ordered so output is byte-stable.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub format_version: u32,
    pub command: String,
    pub class: Option<String>,
    pub parameters: BTreeMap<String, String>,
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Matrix {
        rows: Vec<Vec<String>>,
    },
    Counts {
        levels: Vec<LevelRecord>,
    },
    Charpoly {
        method: String,
        coefficients: Vec<String>,
        polynomial: String,
    },
    Eigen {
        lambda: String,
        lambda_lo: String,
        lambda_hi: String,
        vector: Vec<String>,
        residual: f64,
        real_roots: usize,
        sign_changes: usize,
    },
    Verify {
        passed: bool,
        suites: Vec<SuiteRecord>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub level: usize,
    pub vector: Vec<String>,
    pub total: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRecord {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

/// Parse `args` (including the program name) and execute. Returns the text
/// to print and the exit code.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (e.render().to_string(), code);
        }
    };
    match execute(&cli.command) {
        Ok(out) => out,
        Err(e) => (format!("error: {e}\n"), EXIT_USAGE),
    }
}

fn resolve_class(args: &ClassArgs, levels: usize, force: bool) -> Result<GraphClass> {
    if args.k.is_some() && args.class != ClassArg::Kangulation {
        return Err(Error::InvalidParameter("--k only applies to kangulation".into()));
    }
    Ok(match args.class {
        ClassArg::Kangulation => {
            let k = args
                .k
                .ok_or_else(|| Error::InvalidParameter("kangulation needs --k".into()))?;
            if k < 3 {
                return Err(Error::InvalidK(k));
            }
            GraphClass::KAngulation { k }
        }
        ClassArg::Geometric => GraphClass::Geometric,
        ClassArg::Connected => GraphClass::Connected,
        ClassArg::Partition => GraphClass::NonCrossingPartition,
        ClassArg::Relation => GraphClass::Relation {
            counts: relation_counts(args, levels, force)?,
        },
    })
}

/// `c_2, …, c_{levels}` for the relation matrix.
fn relation_counts(args: &ClassArgs, levels: usize, force: bool) -> Result<Vec<BigInt>> {
    let needed = levels.saturating_sub(1);
    if !args.c.is_empty() || args.source == SourceArg::Custom {
        if args.c.len() < needed {
            return Err(Error::SequenceTooShort {
                needed,
                got: args.c.len(),
            });
        }
        return Ok(args.c.clone());
    }
    let opts = EnumOptions {
        force,
        workers: None,
    };
    match args.source {
        SourceArg::Connected => {
            let spec = GraphClassSpec::new(GraphClass::Connected)?;
            Ok(count_sequence(&spec, levels.max(2))?
                .into_iter()
                .map(|l| l.total)
                .collect())
        }
        SourceArg::Trees | SourceArg::Paths => {
            let kind = if args.source == SourceArg::Trees {
                SpanningKind::Tree
            } else {
                SpanningKind::Path
            };
            (2..=levels.max(2))
                .map(|i| enumerate_spanning_structures(i, kind, &opts))
                .collect()
        }
        SourceArg::Custom => unreachable!("handled above"),
    }
}

fn guard(what: &'static str, value: usize, limit: usize, force: bool) -> Result<()> {
    if value > limit && !force {
        return Err(Error::GuardExceeded { what, value, limit });
    }
    Ok(())
}

fn base_parameters(class: &GraphClass, args: &ClassArgs) -> BTreeMap<String, String> {
    let mut p = BTreeMap::new();
    if let GraphClass::KAngulation { k } = class {
        p.insert("k".into(), k.to_string());
    }
    if let GraphClass::Relation { .. } = class {
        let source = if args.c.is_empty() { args.source } else { SourceArg::Custom };
        let name = source.to_possible_value().expect("value").get_name().to_string();
        p.insert("source".into(), name);
    }
    p
}

fn execute(cmd: &Command) -> Result<(String, i32)> {
    match cmd {
        Command::Matrix { class, n, out } => {
            guard("matrix size", *n, MATRIX_GUARD, out.force)?;
            let c = resolve_class(class, *n, out.force)?;
            let m = c.matrix(*n)?;
            let mut params = base_parameters(&c, class);
            params.insert("n".into(), n.to_string());
            let record = record("matrix", &c, params, matrix_payload(&m));
            Ok((render(&record, out.format, false), EXIT_OK))
        }
        Command::Counts {
            class,
            n_max,
            bfile,
            out,
        } => {
            guard("n_max", *n_max, COUNTS_GUARD, out.force)?;
            let c = resolve_class(class, *n_max, out.force)?;
            let spec = GraphClassSpec::new(c.clone())?;
            let levels = count_sequence(&spec, *n_max)?
                .into_iter()
                .map(|l| LevelRecord {
                    level: l.level,
                    vector: strings(l.vector.entries()),
                    total: l.total.to_string(),
                })
                .collect();
            let mut params = base_parameters(&c, class);
            params.insert("n_max".into(), n_max.to_string());
            let record = record("counts", &c, params, Payload::Counts { levels });
            Ok((render(&record, out.format, *bfile), EXIT_OK))
        }
        Command::Charpoly {
            class,
            n,
            method,
            out,
        } => {
            if *method == MethodArg::Determinant {
                guard("determinant size", *n, DETERMINANT_CAP, out.force)?;
            }
            guard("matrix size", *n, MATRIX_GUARD, out.force)?;
            let c = resolve_class(class, *n, out.force)?;
            let method = CharPolyMethod::from(*method);
            let p = class_charpoly(&c, *n, method)?;
            let mut params = base_parameters(&c, class);
            params.insert("n".into(), n.to_string());
            params.insert("method".into(), method.name().into());
            let payload = Payload::Charpoly {
                method: method.name().into(),
                coefficients: strings(p.coeffs()),
                polynomial: p.to_string(),
            };
            let record = record("charpoly", &c, params, payload);
            Ok((render(&record, out.format, false), EXIT_OK))
        }
        Command::Eigen {
            class,
            n,
            tol,
            precision,
            digits,
            out,
        } => {
            guard("matrix size", *n, MATRIX_GUARD, out.force)?;
            let c = resolve_class(class, *n, out.force)?;
            let m = c.matrix(*n)?;
            let prec = match (tol, precision) {
                (Some(t), _) => Precision::from_tolerance(*t),
                (None, Some(b)) => Precision::new(*b),
                (None, None) => Precision::from_env(),
            };
            let dom = dominant_eigenvalue_with_precision(&m, prec)?;
            let pair = eigenvector_from_charpoly(&m, &dom.value())?;
            let mut params = base_parameters(&c, class);
            params.insert("n".into(), n.to_string());
            params.insert("precision_bits".into(), prec.bits.to_string());
            let payload = Payload::Eigen {
                lambda: to_decimal(&dom.value(), *digits),
                lambda_lo: to_decimal(&dom.root.lo, *digits),
                lambda_hi: to_decimal(&dom.root.hi, *digits),
                vector: pair.vector.iter().map(|x| to_decimal(x, *digits)).collect(),
                residual: pair.residual,
                real_roots: dom.real_roots,
                sign_changes: dom.sign_changes,
            };
            let record = record("eigen", &c, params, payload);
            Ok((render(&record, out.format, false), EXIT_OK))
        }
        Command::Verify {
            suite,
            n_max,
            max,
            workers,
            precision,
            out,
        } => {
            let limits = Limits {
                n_max: *n_max,
                max: *max,
                enumeration: EnumOptions {
                    force: out.force,
                    workers: *workers,
                },
                precision: precision.map(Precision::new),
            };
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Vectors => vec![Suite::Vectors],
                SuiteArg::Charpoly => vec![Suite::Charpoly],
                SuiteArg::Eigen => vec![Suite::Eigen],
                SuiteArg::Oracle => vec![Suite::Oracle],
                SuiteArg::Lemma1 => vec![Suite::Lemma1],
                SuiteArg::Relation => vec![Suite::Relation],
            };
            let reports: Vec<SuiteRecord> = suites
                .into_iter()
                .map(|s| {
                    let r = run_suite(s, &limits);
                    SuiteRecord {
                        suite: s.name().into(),
                        passed: r.passed(),
                        checks: r
                            .checks
                            .into_iter()
                            .map(|c| CheckRecord {
                                name: c.name,
                                passed: c.passed,
                                detail: c.detail,
                            })
                            .collect(),
                    }
                })
                .collect();
            let passed = reports.iter().all(|r| r.passed);
            let mut params = BTreeMap::new();
            if let Some(n) = n_max {
                params.insert("n_max".into(), n.to_string());
            }
            if let Some(m) = max {
                params.insert("max".into(), m.to_string());
            }
            let record = OutputRecord {
                format_version: FORMAT_VERSION,
                command: "verify".into(),
                class: None,
                parameters: params,
                payload: Payload::Verify {
                    passed,
                    suites: reports,
                },
            };
            let code = if passed { EXIT_OK } else { EXIT_FAIL };
            Ok((render(&record, out.format, false), code))
        }
    }
}

fn record(command: &str, class: &GraphClass, parameters: BTreeMap<String, String>, payload: Payload) -> OutputRecord {
    OutputRecord {
        format_version: FORMAT_VERSION,
        command: command.into(),
        class: Some(class.name().into()),
        parameters,
        payload,
    }
}

fn matrix_payload(m: &HTMatrix) -> Payload {
    Payload::Matrix {
        rows: m.rows().iter().map(|r| strings(r)).collect(),
    }
}

/// Render a record as table, JSON or CSV; `bfile` overrides the format for
/// count records.
pub fn render(record: &OutputRecord, format: Format, bfile: bool) -> String {
    if let (true, Payload::Counts { levels }) = (bfile, &record.payload) {
        return levels.iter().map(|l| format!("{} {}\n", l.level, l.total)).collect();
    }
    match format {
        Format::Json => record.to_json() + "\n",
        Format::Csv => render_csv(&record.payload),
        Format::Table => render_table(record),
    }
}

fn render_csv(payload: &Payload) -> String {
    let mut s = String::new();
    match payload {
        Payload::Matrix { rows } => {
            for r in rows {
                let _ = writeln!(s, "{}", r.join(","));
            }
        }
        Payload::Counts { levels } => {
            s.push_str("level,total,vector\n");
            for l in levels {
                let _ = writeln!(s, "{},{},{}", l.level, l.total, l.vector.join(","));
            }
        }
        Payload::Charpoly { coefficients, .. } => {
            s.push_str("power,coefficient\n");
            for (t, c) in coefficients.iter().enumerate() {
                let _ = writeln!(s, "{t},{c}");
            }
        }
        Payload::Eigen {
            lambda,
            vector,
            residual,
            ..
        } => {
            s.push_str("quantity,value\n");
            let _ = writeln!(s, "lambda,{lambda}");
            let n = vector.len();
            for (i, x) in vector.iter().enumerate() {
                let _ = writeln!(s, "x{},{x}", n - 1 - i);
            }
            let _ = writeln!(s, "residual,{residual:e}");
        }
        Payload::Verify { suites, .. } => {
            s.push_str("suite,check,verdict,detail\n");
            for r in suites {
                for c in &r.checks {
                    let verdict = if c.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "{},{},{verdict},{}", r.suite, csv_field(&c.name), csv_field(&c.detail));
                }
            }
        }
    }
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_table(record: &OutputRecord) -> String {
    let mut s = String::new();
    let header: Vec<String> = record
        .parameters
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    if let Some(c) = &record.class {
        let _ = writeln!(s, "# {} {} {}", record.command, c, header.join(" "));
    }
    match &record.payload {
        Payload::Matrix { rows } => {
            let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
            for r in rows {
                let cells: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
                let _ = writeln!(s, "{}", cells.join(" "));
            }
        }
        Payload::Counts { levels } => {
            for l in levels {
                let _ = writeln!(s, "{:>4}  {:>24}  ({})", l.level, l.total, l.vector.join(", "));
            }
        }
        Payload::Charpoly {
            coefficients,
            polynomial,
            ..
        } => {
            let _ = writeln!(s, "{polynomial}");
            let _ = writeln!(s, "coefficients (low to high): {}", coefficients.join(" "));
        }
        Payload::Eigen {
            lambda,
            vector,
            residual,
            real_roots,
            sign_changes,
            ..
        } => {
            let _ = writeln!(s, "lambda   = {lambda}");
            let _ = writeln!(s, "vector   = ({})", vector.join(", "));
            let _ = writeln!(s, "residual = {residual:e}");
            let _ = writeln!(s, "real roots = {real_roots}, coefficient sign changes = {sign_changes}");
        }
        Payload::Verify { passed, suites } => {
            for r in suites {
                for c in &r.checks {
                    let verdict = if c.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "[{}] {verdict} {}: {}", r.suite, c.name, c.detail);
                }
            }
            let _ = writeln!(s, "{}", if *passed { "PASS" } else { "FAIL" });
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> String {
        let (out, code) = run(std::iter::once("convex-count").chain(args.iter().copied()));
        assert_eq!(code, EXIT_OK, "{out}");
        out
    }

    #[test]
    fn partition_matrix_csv() {
        let out = run_ok(&["matrix", "partition", "--n", "4", "--format", "csv"]);
        let rows: Vec<&str> = out.lines().collect();
        assert_eq!(rows.len(), 4);
        assert!(rows[0].starts_with("0,1,2,4"));
    }

    #[test]
    fn kangulation_matrix() {
        let out = run_ok(&["matrix", "kangulation", "--k", "3", "--r", "2", "--format", "csv"]);
        assert_eq!(out, "1,1\n1,1\n");
    }

    #[test]
    fn geometric_matrix_json() {
        let out = run_ok(&["matrix", "geometric", "--n", "3", "--format", "json"]);
        let rec = OutputRecord::from_json(&out).unwrap();
        match rec.payload {
            Payload::Matrix { rows } => {
                assert_eq!(rows.len(), 3);
                assert_eq!(rows[0], ["2", "4", "8"]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bfile_output() {
        let out = run_ok(&["counts", "geometric", "--n-max", "5", "--bfile"]);
        assert_eq!(out, "2 2\n3 8\n4 48\n5 352\n");
    }

    #[test]
    fn counts_json_totals() {
        let out = run_ok(&["counts", "partition", "--n-max", "4", "--format", "json"]);
        let rec = OutputRecord::from_json(&out).unwrap();
        let Payload::Counts { levels } = rec.payload else { panic!() };
        let totals: Vec<&str> = levels.iter().map(|l| l.total.as_str()).collect();
        assert_eq!(totals, ["1", "2", "5", "14"]);
    }

    #[test]
    fn charpoly_commands() {
        let out = run_ok(&["charpoly", "geometric", "--n", "5", "--method", "closed", "--format", "csv"]);
        assert_eq!(out, "power,coefficient\n0,32\n1,-16\n2,-16\n3,-8\n4,10\n5,-1\n");
        let out = run_ok(&["charpoly", "partition", "--n", "1", "--format", "csv"]);
        assert_eq!(out, "power,coefficient\n0,0\n1,-1\n");
        let out = run_ok(&["charpoly", "connected", "--n", "0", "--format", "csv"]);
        assert_eq!(out, "power,coefficient\n0,1\n");
    }

    #[test]
    fn determinant_cap() {
        let (out, code) = run(["convex-count", "charpoly", "geometric", "--n", "9", "--method", "determinant"]);
        assert_eq!(code, EXIT_USAGE, "{out}");
        run_ok(&["charpoly", "geometric", "--n", "9", "--method", "determinant", "--force"]);
    }

    #[test]
    fn usage_errors() {
        let (_, code) = run(["convex-count", "matrix", "nope", "--n", "3"]);
        assert_eq!(code, EXIT_USAGE);
        let (_, code) = run(["convex-count", "matrix", "kangulation", "--n", "3"]);
        assert_eq!(code, EXIT_USAGE);
        let (_, code) = run(["convex-count", "matrix", "kangulation", "--k", "2", "--n", "3"]);
        assert_eq!(code, EXIT_USAGE);
        let (_, code) = run(["convex-count", "charpoly", "relation", "--n", "3", "--method", "closed"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn relation_sources() {
        let out = run_ok(&["counts", "relation", "--n-max", "5", "--bfile"]);
        assert_eq!(out, "1 1\n2 2\n3 8\n4 48\n5 352\n");
        let out = run_ok(&["counts", "relation", "--source", "trees", "--n-max", "3", "--bfile"]);
        assert_eq!(out, "1 1\n2 2\n3 7\n");
        let out = run_ok(&["counts", "relation", "--c", "1,4,23", "--n-max", "4", "--bfile"]);
        assert_eq!(out, "1 1\n2 2\n3 8\n4 48\n");
    }

    #[test]
    fn eigen_command() {
        let out = run_ok(&["eigen", "geometric", "--n", "1", "--format", "json"]);
        let rec = OutputRecord::from_json(&out).unwrap();
        let Payload::Eigen { lambda, vector, .. } = rec.payload else { panic!() };
        assert!(lambda.starts_with("2.000"));
        assert_eq!(vector.len(), 1);
    }

    #[test]
    fn verify_exit_code() {
        let (out, code) = run(["convex-count", "verify", "lemma1", "--max", "6"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.ends_with("PASS\n"));
    }

    #[test]
    fn deterministic_output() {
        let a = run_ok(&["counts", "connected", "--n-max", "9", "--format", "json"]);
        let b = run_ok(&["counts", "connected", "--n-max", "9", "--format", "json"]);
        assert_eq!(a, b);
    }
}
