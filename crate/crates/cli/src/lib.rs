//! Command-line front end: file ingestion, dispatch to the core operations,
//! JSON result documents, the identity-verification suite and the benchmark
//! harness.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage, 3 parse/shape,
//! 4 domain (singular matrix, nonpositive lambda, ...), 5 capacity.

pub mod bench;
pub mod input;
pub mod output;
pub mod verify;

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use genchar_core::{
    char_coeffs_faddeev, classical_resolvent_with_cap, delta_functional, det_ratio_sequence,
    distance_sq_gram, distance_sq_solve, eval_gen_charpoly, eval_gen_charpoly_minor_form_with_cap,
    eval_gen_resolvent, gen_charpoly_with_cap, gen_resolvent_terms_with_cap, gram_ratio_sequence,
    min_quadratic_constrained, one_plus_quadform, ones_plus_diag_distance,
    ones_plus_diag_gram_ratio, quad_form_gen_with_cap, truncated_quadform_sequence, Error, Mode,
    Scalar, SpanProblem, Vector, DEFAULT_SUBSET_CAP,
};
use serde_json::{json, Value};

use output::{matrix_to_value, report_to_value, scalar_to_value, vector_to_value, ResultDocument};

/// Environment variable overriding the default subset cap.
pub const CAP_ENV_VAR: &str = "GENCHAR_SUBSET_CAP";

#[derive(Debug)]
pub enum CliError {
    /// Bad command line (missing/duplicate options); exit 2.
    Usage(String),
    /// Malformed input file or literal; exit 3.
    Parse(String),
    /// Failure reading or writing a file; exit 3.
    Io(String),
    /// Error surfaced by the core library; exit 3/4/5 by class.
    Core(Error),
    /// An identity check found a mismatch; exit 1.
    VerifyFailed(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Io(m) => write!(f, "io error: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::VerifyFailed(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse(_) | CliError::Io(_) => 3,
            CliError::Core(e) => match e {
                Error::Shape(_) => 3,
                Error::Domain(_)
                | Error::Singular { .. }
                | Error::NotPositiveDefinite
                | Error::DegenerateBasis => 4,
                Error::Capacity { .. } => 5,
            },
            CliError::VerifyFailed(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse(_) | CliError::Io(_) => "parse",
            CliError::Core(e) => match e {
                Error::Shape(_) => "shape",
                Error::Domain(_) => "domain",
                Error::Singular { .. } => "singular",
                Error::NotPositiveDefinite => "not-positive-definite",
                Error::DegenerateBasis => "degenerate-basis",
                Error::Capacity { .. } => "capacity",
            },
            CliError::VerifyFailed(_) => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Float,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Float,
        }
    }
}

#[derive(Debug, Args, Clone, Default)]
pub struct CommonOpts {
    /// Input matrix file (CSV rows, or a JSON document with a `data` field)
    #[arg(long)]
    pub input: Option<PathBuf>,

    /// Arithmetic mode; default exact (a JSON input may also carry a mode)
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,

    /// Diagonal shift entries, comma-separated (e.g. 1,2,3 or 1/2,-3)
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,

    /// Vector argument, comma-separated; also the constraint vector for
    /// `minimize` and the probe vector for `verify`
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,

    /// Subset-enumeration cap override (float mode may raise it to 24)
    #[arg(long)]
    pub cap: Option<usize>,

    /// Truncation count / window size / grid points, by command
    #[arg(long = "N")]
    pub n: Option<usize>,

    /// Divergence threshold (default 1000000)
    #[arg(long, allow_hyphen_values = true)]
    pub threshold: Option<String>,

    /// Row to omit in ratio-sequence denominators (default 0)
    #[arg(long)]
    pub omit: Option<usize>,

    /// Scalar shift for the classical resolvent (tI − C)⁻¹
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,

    /// Sequence specs `kind:params:N[:start]`; repeatable, order matters
    #[arg(long = "spec")]
    pub specs: Vec<String>,

    /// Ratio-sequence variant for `diverge`: quadform (default), gram or det
    #[arg(long)]
    pub ratio: Option<String>,

    /// Write the result document here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(
    name = "genchar",
    version,
    about = "Subset-expanded determinants, resolvents, Gram geometry and divergence diagnostics",
    after_help = "Subset masks serialize as decimal integers with bit (k-1) set when index k \
is in the subset. Exact mode (the default) prints rationals as canonical p/q strings. \
Exit codes: 0 ok, 1 verify mismatch, 2 usage, 3 parse/shape, 4 domain, 5 capacity. \
The GENCHAR_SUBSET_CAP environment variable overrides the default subset cap of 16."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characteristic-polynomial coefficients (Faddeev–LeVerrier)
    Charpoly(CommonOpts),
    /// All 2^n subset coefficients of det(C + diag(lambda))
    Genpoly(CommonOpts),
    /// Evaluate the subset expansion at a lambda vector
    Geneval(CommonOpts),
    /// (C + diag(lambda))^-1 via the subset sum, or (tI - C)^-1 with --t
    Resolvent(CommonOpts),
    /// Quadratic form (C(lambda)^-1 a, a) and its determinant-ratio companion
    Quadform(CommonOpts),
    /// Squared distance from the first row to the span of the rest
    Gramdist(CommonOpts),
    /// Shifted-Gram delta functional of the input rows
    Delta(CommonOpts),
    /// Minimize (Ax, x) subject to (x, a) = 1
    Minimize(CommonOpts),
    /// Truncation-sequence divergence diagnostics
    Diverge(CommonOpts),
    /// Closed-form vs Gram-ratio distance for the ones-plus-diagonal family
    Onesdist(CommonOpts),
    /// Time subset evaluation against repeated direct determinants
    Bench(CommonOpts),
    /// Run every cross-identity on the input; stop at the first mismatch
    Verify(CommonOpts),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Charpoly(_) => "charpoly",
            Command::Genpoly(_) => "genpoly",
            Command::Geneval(_) => "geneval",
            Command::Resolvent(_) => "resolvent",
            Command::Quadform(_) => "quadform",
            Command::Gramdist(_) => "gramdist",
            Command::Delta(_) => "delta",
            Command::Minimize(_) => "minimize",
            Command::Diverge(_) => "diverge",
            Command::Onesdist(_) => "onesdist",
            Command::Bench(_) => "bench",
            Command::Verify(_) => "verify",
        }
    }

    pub fn opts(&self) -> &CommonOpts {
        match self {
            Command::Charpoly(o)
            | Command::Genpoly(o)
            | Command::Geneval(o)
            | Command::Resolvent(o)
            | Command::Quadform(o)
            | Command::Gramdist(o)
            | Command::Delta(o)
            | Command::Minimize(o)
            | Command::Diverge(o)
            | Command::Onesdist(o)
            | Command::Bench(o)
            | Command::Verify(o) => o,
        }
    }
}

/// Mode precedence: explicit --mode flag, then a JSON document's mode field,
/// then exact.
fn effective_mode(opts: &CommonOpts, input_text: Option<&str>) -> Result<Mode, CliError> {
    if let Some(m) = opts.mode {
        return Ok(m.into());
    }
    if let Some(text) = input_text {
        if let Some(m) = input::file_mode(text)? {
            return Ok(m);
        }
    }
    Ok(Mode::Exact)
}

fn read_input(opts: &CommonOpts) -> Result<(String, Mode), CliError> {
    let path = opts
        .input
        .as_ref()
        .ok_or_else(|| CliError::Usage("this command needs --input <path>".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let mode = effective_mode(opts, Some(&text))?;
    Ok((text, mode))
}

fn effective_cap(opts: &CommonOpts) -> Result<usize, CliError> {
    if let Some(cap) = opts.cap {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV_VAR) {
        Ok(v) => v.parse().map_err(|_| {
            CliError::Usage(format!(
                "{CAP_ENV_VAR} must be an unsigned integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_SUBSET_CAP),
    }
}

fn require_vector(text: &Option<String>, flag: &str, mode: Mode) -> Result<Vector, CliError> {
    let raw = text
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("this command needs {flag} <values>")))?;
    input::parse_scalar_list(raw, mode)
}

fn parse_threshold(opts: &CommonOpts, mode: Mode) -> Result<Option<Scalar>, CliError> {
    match &opts.threshold {
        None => Ok(None),
        Some(raw) => Scalar::parse(raw, mode)
            .map(Some)
            .map_err(|e| CliError::Parse(e.to_string())),
    }
}

/// Everything a successful run produces: the document, any plain-text lines
/// that precede it (bench table, verify listing), and the mode echo.
pub struct Execution {
    pub document: ResultDocument,
    pub preface: Vec<String>,
}

/// Dispatch a parsed command.
pub fn execute(command: &Command) -> Result<Execution, CliError> {
    let started = Instant::now();
    let name = command.name();
    let mut preface = Vec::new();
    let mode_label: String;

    let payload: Value = match command {
        Command::Charpoly(opts) => {
            let (text, mode) = read_input(opts)?;
            mode_label = mode.to_string();
            let c = input::parse_matrix_text(&text, mode)?;
            let p = char_coeffs_faddeev(&c)?;
            json!({
                "n": p.n(),
                "coefficients": p.coeffs().iter().map(scalar_to_value).collect::<Vec<_>>(),
            })
        }
        Command::Genpoly(opts) => {
            let (text, mode) = read_input(opts)?;
            mode_label = mode.to_string();
            let c = input::parse_matrix_text(&text, mode)?;
            let cap = effective_cap(opts)?;
            let p = gen_charpoly_with_cap(&c, cap)?;
            let coefficients: Vec<Value> = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(mask, coeff)| json!({ "mask": mask, "coeff": scalar_to_value(coeff) }))
                .collect();
            json!({ "n": p.n(), "coefficients": coefficients })
        }
        Command::Geneval(opts) => {
            let (text, mode) = read_input(opts)?;
            mode_label = mode.to_string();
            let c = input::parse_matrix_text(&text, mode)?;
            let lambda = require_vector(&opts.lambda, "--lambda", mode)?;
            let cap = effective_cap(opts)?;
            let p = gen_charpoly_with_cap(&c, cap)?;
            let value = eval_gen_charpoly(&p, &lambda)?;
            let minor_form = if lambda.iter().any(Scalar::is_zero) {
                Value::Null
            } else {
                scalar_to_value(&eval_gen_charpoly_minor_form_with_cap(&c, &lambda, cap)?)
            };
            json!({ "value": scalar_to_value(&value), "minor_form": minor_form })
        }
        Command::Resolvent(opts) => {
            let (text, mode) = read_input(opts)?;
            mode_label = mode.to_string();
            let c = input::parse_matrix_text(&text, mode)?;
            let cap = effective_cap(opts)?;
            match (&opts.t, &opts.lambda) {
                (Some(t_raw), None) => {
                    let t = Scalar::parse(t_raw, mode).map_err(CliError::Core)?;
                    let res = classical_resolvent_with_cap(&c, &t, cap)?;
                    json!({
                        "kind": "classical",
                        "t": scalar_to_value(&t),
                        "matrix": matrix_to_value(&res),
                    })
                }
                (None, Some(_)) => {
                    let lambda = require_vector(&opts.lambda, "--lambda", mode)?;
                    let terms = gen_resolvent_terms_with_cap(&c, cap)?;
                    let res = eval_gen_resolvent(&terms, &c, &lambda)?;
                    json!({ "kind": "generalized", "matrix": matrix_to_value(&res) })
                }
                _ => {
                    return Err(CliError::Usage(
                        "resolvent needs exactly one of --lambda or --t".into(),
                    ))
                }
            }
        }
        Command::Quadform(opts) => {
            let (text, mode) = read_input(opts)?;
            mode_label = mode.to_string();
            let c = input::parse_matrix_text(&text, mode)?;
            let lambda = require_vector(&opts.lambda, "--lambda", mode)?;
            let a = require_vector(&opts.a, "--a", mode)?;
            let cap = effective_cap(opts)?;
            let quad = quad_form_gen_with_cap(&c, &lambda, &a, cap)?;
            let one_plus = one_plus_quadform(&c, &lambda, &a)?;
            json!({
                "quad_form": scalar_to_value(&quad),
                "one_plus_quad_form": scalar_to_value(&one_plus),
            })
        }
        Command::Gramdist(opts) => {
            let (text, mode) = read_input(opts)?;
            mode_label = mode.to_string();
            let m = input::parse_matrix_text(&text, mode)?;
            if m.n_rows() < 2 {
                return Err(CliError::Usage(
                    "gramdist needs at least two rows: the vector then the spanning family".into(),
                ));
            }
            let rows = m.rows();
            let p = SpanProblem::new(rows[0].clone(), rows[1..].to_vec())?;
            let via_gram = distance_sq_gram(&p)?;
            let via_solve = distance_sq_solve(&p)?;
            json!({
                "distance_sq_gram": scalar_to_value(&via_gram),
                "distance_sq_solve": scalar_to_value(&via_solve),
            })
        }
        Command::Delta(opts) => {
            let (text, mode) = read_input(opts)?;
            mode_label = mode.to_string();
            let m = input::parse_matrix_text(&text, mode)?;
            let value = delta_functional(&m.rows())?;
            json!({ "delta": scalar_to_value(&value) })
        }
        Command::Minimize(opts) => {
            let (text, mode) = read_input(opts)?;
            mode_label = mode.to_string();
            let a_mat = input::parse_matrix_text(&text, mode)?;
            let b = require_vector(&opts.a, "--a", mode)?;
            let (value, x) = min_quadratic_constrained(&a_mat, &b)?;
            json!({
                "minimum": scalar_to_value(&value),
                "minimizer": vector_to_value(&x),
            })
        }
        Command::Diverge(opts) => {
            let mode = effective_mode(opts, None)?;
            mode_label = mode.to_string();
            let n = opts
                .n
                .ok_or_else(|| CliError::Usage("diverge needs --N <truncations>".into()))?;
            let threshold = parse_threshold(opts, mode)?;
            let variant = opts.ratio.as_deref().unwrap_or("quadform");
            let specs: Vec<_> = opts
                .specs
                .iter()
                .map(|s| input::parse_sequence_spec(s, mode))
                .collect::<Result<_, _>>()?;
            let report = match variant {
                "quadform" => {
                    if specs.len() != 2 {
                        return Err(CliError::Usage(
                            "diverge (quadform) needs two --spec flags: lambda then b".into(),
                        ));
                    }
                    truncated_quadform_sequence(&specs[0], &specs[1], n, threshold)?
                }
                "gram" => {
                    if specs.is_empty() {
                        return Err(CliError::Usage(
                            "diverge --ratio gram needs row --spec flags".into(),
                        ));
                    }
                    gram_ratio_sequence(&specs, opts.omit.unwrap_or(0), n, threshold)?
                }
                "det" => {
                    if specs.is_empty() {
                        return Err(CliError::Usage(
                            "diverge --ratio det needs row --spec flags".into(),
                        ));
                    }
                    det_ratio_sequence(&specs, opts.omit.unwrap_or(0), n, threshold)?
                }
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown --ratio `{other}` (quadform, gram, det)"
                    )))
                }
            };
            report_to_value(&report)
        }
        Command::Onesdist(opts) => {
            let mode = effective_mode(opts, None)?;
            mode_label = mode.to_string();
            let window = opts
                .n
                .ok_or_else(|| CliError::Usage("onesdist needs --N <window>".into()))?;
            if opts.specs.len() != 1 {
                return Err(CliError::Usage(
                    "onesdist needs exactly one --spec for the diagonal sequence".into(),
                ));
            }
            let spec = input::parse_sequence_spec(&opts.specs[0], mode)?;
            let closed = ones_plus_diag_distance(&spec, window)?;
            let ratio = ones_plus_diag_gram_ratio(&spec, window)?;
            json!({
                "closed_form": scalar_to_value(&closed),
                "gram_ratio": scalar_to_value(&ratio),
                "equal": closed == ratio,
            })
        }
        Command::Bench(opts) => {
            let (text, mode) = read_input(opts)?;
            mode_label = mode.to_string();
            let c = input::parse_matrix_text(&text, mode)?;
            let points = opts.n.unwrap_or(100);
            let cap = effective_cap(opts)?;
            let report = bench::run_bench(&c, points, cap)?;
            preface.push(bench::render_table(std::slice::from_ref(&report)));
            bench::report_to_value(&report)
        }
        Command::Verify(opts) => {
            let (text, mode) = read_input(opts)?;
            mode_label = mode.to_string();
            let c = input::parse_matrix_text(&text, mode)?;
            if !c.is_square() {
                return Err(CliError::Core(Error::Shape(
                    "verify needs a square matrix".into(),
                )));
            }
            let n = c.n_rows();
            let lambda = match &opts.lambda {
                Some(raw) => input::parse_scalar_list(raw, mode)?,
                None => {
                    let vals: Vec<i64> = (1..=n as i64).collect();
                    Vector::from_ints(&vals, mode)
                }
            };
            let a = match &opts.a {
                Some(raw) => input::parse_scalar_list(raw, mode)?,
                None => Vector::from_ints(&vec![1; n], mode),
            };
            let results = verify::run_verify(&c, &lambda, &a);
            let mut entries = Vec::new();
            let mut failure: Option<String> = None;
            for r in &results {
                let (status, detail) = match &r.outcome {
                    verify::CheckOutcome::Ok => ("ok", String::new()),
                    verify::CheckOutcome::Skipped(why) => ("skipped", why.clone()),
                    verify::CheckOutcome::Mismatch(what) => ("FAIL", what.clone()),
                };
                if status == "FAIL" && failure.is_none() {
                    failure = Some(format!("{}: {detail}", r.name));
                }
                preface.push(if detail.is_empty() {
                    format!("{status:>7}  {}", r.name)
                } else {
                    format!("{status:>7}  {} ({detail})", r.name)
                });
                entries.push(json!({ "identity": r.name, "status": status, "detail": detail }));
            }
            if let Some(msg) = failure {
                for line in &preface {
                    println!("{line}");
                }
                return Err(CliError::VerifyFailed(msg));
            }
            json!({ "identities": entries })
        }
    };

    let timing_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(Execution {
        document: ResultDocument::ok(name, &mode_label, payload, timing_ms),
        preface,
    })
}

/// Full run: execute, emit output, map errors to documents and exit codes.
pub fn run(cli: &Cli) -> i32 {
    let name = cli.command.name();
    let opts = cli.command.opts();
    match execute(&cli.command) {
        Ok(execution) => {
            for line in &execution.preface {
                println!("{line}");
            }
            let rendered = execution.document.render();
            match &opts.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, rendered + "\n") {
                        eprintln!("io error: cannot write {}: {e}", path.display());
                        return 3;
                    }
                }
                None => println!("{rendered}"),
            }
            0
        }
        Err(err) => {
            let code = err.exit_code();
            let mode_label = opts
                .mode
                .map(|m| Mode::from(m).to_string())
                .unwrap_or_else(|| "exact".into());
            let doc = ResultDocument::error(name, &mode_label, err.kind(), &err.to_string(), code);
            eprintln!("{}", doc.render());
            code
        }
    }
}
