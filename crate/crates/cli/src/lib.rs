//! Command-line front end: reads polynomial systems as JSON and prints
//! resultants, matrices, Bezoutians, characteristic polynomials and size tables.

pub mod input;
pub mod output;

use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use resultant_core::bezoutian::{bezoutian, BezoutianError, PolySystem};
use resultant_core::combinat::DegreeSystem;
use resultant_core::macaulay::{
    build_assembly, gcp, resultant_generic, resultant_specialized, MacaulayError, ResultantOptions, ResultantValue,
};
use resultant_core::ring::Scalar;
use resultant_core::verify::{self, oracles::default_oracles, CriterionReport};

pub use input::{parse_input, CommandOptions, InputDocument, Mode, System, Term};
pub use output::{parse_label, parse_output, CriterionLine, OutputDocument, Payload, SizeRow, Slice};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Parse(String),
    #[error("degenerate specialization: {0}")]
    Degenerate(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 1,
            CliError::Degenerate(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

/// Exit status of a `verify` run with at least one failing criterion.
pub const EXIT_VERIFY_FAILED: i32 = 4;

impl From<MacaulayError> for CliError {
    fn from(e: MacaulayError) -> Self {
        let msg = e.to_string();
        match e {
            MacaulayError::Degenerate => CliError::Degenerate(msg),
            MacaulayError::SymbolicTooLarge { .. } | MacaulayError::NotApplicable(_) | MacaulayError::Degrees(_) => {
                CliError::Usage(msg)
            }
            MacaulayError::Bezoutian(BezoutianError::DegreeOutOfRange { .. }) => CliError::Usage(msg),
            MacaulayError::Bezoutian(_) => CliError::Parse(msg),
            MacaulayError::InexactQuotient | MacaulayError::Invariant(_) | MacaulayError::Linalg(_) | MacaulayError::Ring(_) => {
                CliError::Internal(msg)
            }
        }
    }
}

impl From<BezoutianError> for CliError {
    fn from(e: BezoutianError) -> Self {
        MacaulayError::from(e).into()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

#[derive(Parser, Debug)]
#[command(name = "resultant", version, about = "Exact multivariate resultants via Macaulay-type quotient formulas")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Degree of the matrix construction; each command has its own default.
    #[arg(long = "t", global = true)]
    pub t: Option<u32>,
    #[arg(long, global = true, value_enum)]
    pub normalize_sign: Option<Switch>,
    /// Largest matrix size for which symbolic resultants are attempted (default 16).
    #[arg(long, global = true)]
    pub max_symbolic_size: Option<u64>,
    /// Report wall-clock time in the output.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The normalized resultant of the system.
    Resultant {
        /// JSON input file; standard input when omitted.
        input: Option<PathBuf>,
    },
    /// The labeled matrix M_t with its extraneous block.
    Matrix { input: Option<PathBuf> },
    /// The Bezoutian Delta(X, Y) and its slices of degree t (default 0).
    Bezoutian { input: Option<PathBuf> },
    /// The generalized characteristic polynomial (default t = t_n + 1).
    Gcp { input: Option<PathBuf> },
    /// Minimal and classical matrix sizes.
    Sizes {
        input: Option<PathBuf>,
        /// Comma-separated degrees, instead of an input document.
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
        /// Every row of the reference size table.
        #[arg(long)]
        table: bool,
    },
    /// Runs the acceptance checks: `all` or a criterion number.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

/// Command-line overrides; `None` falls back to the document, then to defaults.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub t: Option<u32>,
    pub normalize_sign: Option<bool>,
    pub max_symbolic_size: Option<u64>,
}

impl Flags {
    fn options(&self, doc: &InputDocument) -> ResultantOptions {
        let d = ResultantOptions::default();
        ResultantOptions {
            normalize_sign: self.normalize_sign.or(doc.options.normalize_sign).unwrap_or(d.normalize_sign),
            max_symbolic_size: self.max_symbolic_size.or(doc.options.max_symbolic_size).unwrap_or(d.max_symbolic_size),
        }
    }
}

const NORMALIZED_NOTE: &str = "normalized so that Res(X_1^d_1, ..., X_n^d_n) = 1";
const RAW_NOTE: &str = "det(M_t)/det(E_t) as computed, sign not normalized";

fn document(command: &str, doc: &InputDocument, t: Option<u32>, result: Payload) -> OutputDocument {
    OutputDocument {
        command: command.into(),
        degrees: doc.degrees.clone(),
        mode: Some(doc.mode),
        t,
        sign_note: None,
        result,
        timing_ms: None,
    }
}

fn resultant_payload<R: Scalar>(v: &ResultantValue<R>) -> Payload {
    Payload::Resultant {
        value: v.value.to_string(),
        sign: v.sign,
        normalized: v.normalized,
        permutation: v.permutation.iter().map(|i| i + 1).collect(),
        variable_permutation: v.variable_permutation.iter().map(|i| i + 1).collect(),
        matrix_size: v.matrix_size,
        extraneous_size: v.extraneous_size,
        det_extraneous: v.det_e_t.mul(&v.det_e_dual).to_string(),
    }
}

pub fn cmd_resultant(doc: &InputDocument, flags: &Flags) -> Result<OutputDocument, CliError> {
    let opts = flags.options(doc);
    let t = flags.t.or(doc.t);
    let (payload, used) = match doc.system()? {
        System::Generic(s) => {
            let v = resultant_generic(&s, t.unwrap_or_else(|| s.degree_system().minimal_t()), &opts)?;
            (resultant_payload(&v), v.t)
        }
        System::Integer(s) => {
            let v = resultant_specialized(&s, t, &opts)?;
            (resultant_payload(&v), v.t)
        }
        System::Rational(s) => {
            let v = resultant_specialized(&s, t, &opts)?;
            (resultant_payload(&v), v.t)
        }
    };
    let mut out = document("resultant", doc, Some(used), payload);
    out.sign_note = Some(if opts.normalize_sign { NORMALIZED_NOTE } else { RAW_NOTE }.into());
    Ok(out)
}

fn matrix_of<R: Scalar>(sys: &PolySystem<R>, t: u32) -> Result<Payload, CliError> {
    let asm = build_assembly(sys, t)?;
    let ext_rows: Vec<_> = asm.e_rows.iter().chain(&asm.dual_e_rows).cloned().collect();
    let ext_cols: Vec<_> = asm.e_cols.iter().chain(&asm.dual_e_cols).cloned().collect();
    Ok(output::matrix_payload(&asm.matrix, &ext_rows, &ext_cols))
}

pub fn cmd_matrix(doc: &InputDocument, t: Option<u32>) -> Result<OutputDocument, CliError> {
    let sys = doc.system()?;
    let t = t.or(doc.t).unwrap_or_else(|| sys.degree_system().minimal_t());
    let payload = match &sys {
        System::Generic(s) => matrix_of(s, t)?,
        System::Integer(s) => matrix_of(s, t)?,
        System::Rational(s) => matrix_of(s, t)?,
    };
    Ok(document("matrix", doc, Some(t), payload))
}

fn bezoutian_of<R: Scalar>(sys: &PolySystem<R>, t: u32) -> Result<Payload, CliError> {
    let b = bezoutian(sys)?;
    let slices = b
        .slices(i64::from(t))?
        .into_iter()
        .map(|(g, p)| Slice { label: resultant_core::linalg::Label::Dual(g).to_string(), terms: output::terms_of(&p) })
        .collect();
    Ok(Payload::Bezoutian { delta: output::terms_of(b.poly()), slice_degree: t, slices })
}

pub fn cmd_bezoutian(doc: &InputDocument, t: Option<u32>) -> Result<OutputDocument, CliError> {
    let t = t.or(doc.t).unwrap_or(0);
    let payload = match &doc.system()? {
        System::Generic(s) => bezoutian_of(s, t)?,
        System::Integer(s) => bezoutian_of(s, t)?,
        System::Rational(s) => bezoutian_of(s, t)?,
    };
    Ok(document("bezoutian", doc, Some(t), payload))
}

fn gcp_of<R: Scalar>(sys: &PolySystem<R>, t: u32) -> Result<Payload, CliError> {
    let g = gcp(sys, t)?;
    let strings = |p: &resultant_core::ring::UniPoly<R>| p.coeffs().iter().map(R::to_string).collect();
    let lowest = g.lowest();
    Ok(Payload::Gcp {
        raw: strings(&g.raw),
        normalized: strings(&g.normalized),
        lowest_degree: lowest.as_ref().map(|(k, _)| *k),
        lowest: lowest.map(|(_, c)| c.to_string()),
    })
}

pub fn cmd_gcp(doc: &InputDocument, t: Option<u32>) -> Result<OutputDocument, CliError> {
    let sys = doc.system()?;
    let t = t.or(doc.t).unwrap_or_else(|| sys.degree_system().critical_degree() + 1);
    let payload = match &sys {
        System::Generic(_) => return Err(CliError::Usage("gcp needs integer or rational coefficients".into())),
        System::Integer(s) => gcp_of(s, t)?,
        System::Rational(s) => gcp_of(s, t)?,
    };
    let mut out = document("gcp", doc, Some(t), payload);
    out.sign_note = Some("normalized so that the monomial system gives (1 - s)^k".into());
    Ok(out)
}

pub fn size_row(degrees: &[u32]) -> Result<SizeRow, CliError> {
    let ds = DegreeSystem::new(degrees.to_vec()).map_err(|e| CliError::Usage(e.to_string()))?;
    let s = ds.size_summary().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(SizeRow {
        degrees: degrees.to_vec(),
        critical_degree: ds.critical_degree(),
        minimal_t: s.minimal_t,
        min_size: s.min_size,
        classical_size: s.classical_size,
        determinantal: ds.determinantal_range().map(|r| [r.min, r.max]),
    })
}

/// Size rows for each degree list; with no lists, the reference table.
pub fn cmd_sizes(systems: &[Vec<u32>]) -> Result<OutputDocument, CliError> {
    let table: Vec<Vec<u32>>;
    let systems = if systems.is_empty() {
        table = verify::size_table().into_iter().map(|(d, _, _)| d).collect();
        &table
    } else {
        systems
    };
    let rows = systems.iter().map(|d| size_row(d)).collect::<Result<Vec<_>, _>>()?;
    Ok(OutputDocument {
        command: "sizes".into(),
        degrees: if systems.len() == 1 { systems[0].clone() } else { Vec::new() },
        mode: None,
        t: None,
        sign_note: None,
        result: Payload::Sizes { rows },
        timing_ms: None,
    })
}

fn criterion_line(r: CriterionReport) -> CriterionLine {
    CriterionLine { id: r.id, title: r.title.into(), passed: r.passed, detail: r.detail }
}

pub fn cmd_verify(suite: &str) -> Result<OutputDocument, CliError> {
    let o = default_oracles();
    let reports = match suite {
        "all" | "acceptance" => verify::run_all(&o),
        s => {
            let id: u32 = s.parse().map_err(|_| CliError::Usage(format!("unknown suite `{}`; use `all` or 1..10", s)))?;
            vec![verify::run_one(id, &o).ok_or_else(|| CliError::Usage(format!("no criterion {}", id)))?]
        }
    };
    let criteria: Vec<CriterionLine> = reports.into_iter().map(criterion_line).collect();
    Ok(OutputDocument {
        command: "verify".into(),
        degrees: Vec::new(),
        mode: None,
        t: None,
        sign_note: None,
        result: Payload::Verify { suite: suite.into(), passed: criteria.iter().all(|c| c.passed), criteria },
        timing_ms: None,
    })
}

fn read_document(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<InputDocument, CliError> {
    let bytes = match path {
        Some(p) => std::fs::read(p).map_err(|e| CliError::Usage(format!("cannot read {}: {}", p.display(), e)))?,
        None => {
            let mut buf = Vec::new();
            stdin.read_to_end(&mut buf).map_err(|e| CliError::Usage(format!("cannot read standard input: {}", e)))?;
            buf
        }
    };
    parse_input(&bytes)
}

/// Runs one parsed command line; `stdin` supplies the document when no file is given.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<OutputDocument, CliError> {
    let start = Instant::now();
    let flags = Flags {
        t: cli.t,
        normalize_sign: cli.normalize_sign.map(|s| s == Switch::On),
        max_symbolic_size: cli.max_symbolic_size,
    };
    let mut out = match &cli.command {
        Command::Resultant { input } => cmd_resultant(&read_document(input, stdin)?, &flags)?,
        Command::Matrix { input } => cmd_matrix(&read_document(input, stdin)?, flags.t)?,
        Command::Bezoutian { input } => cmd_bezoutian(&read_document(input, stdin)?, flags.t)?,
        Command::Gcp { input } => cmd_gcp(&read_document(input, stdin)?, flags.t)?,
        Command::Sizes { input, degrees, table } => {
            if *table {
                cmd_sizes(&[])?
            } else if !degrees.is_empty() {
                cmd_sizes(std::slice::from_ref(degrees))?
            } else {
                cmd_sizes(&[read_document(input, stdin)?.degrees])?
            }
        }
        Command::Verify { suite } => cmd_verify(suite)?,
    };
    if cli.timing {
        out.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(out)
}

pub fn render(doc: &OutputDocument, format: Format) -> String {
    match format {
        Format::Text => doc.to_text(),
        Format::Json => doc.to_json() + "\n",
    }
}

/// Exit status for a successful run: nonzero only for a failed verification.
pub fn exit_status(doc: &OutputDocument) -> i32 {
    match &doc.result {
        Payload::Verify { passed: false, .. } => EXIT_VERIFY_FAILED,
        _ => 0,
    }
}
