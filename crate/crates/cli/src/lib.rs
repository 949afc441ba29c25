//! Command line front end for the `schubert-smt` engine.

pub mod document;

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use schubert_smt::{
    enumerate_standard, generation_degree_probe, invariant_basis, normality_probe, run_cases,
    straighten_with, Case, IndexTuple, StraightenOptions, Tableau, VerificationReport,
};

use document::tableau_rows;
pub use document::{GeneratorsDocument, PolynomialDocument, TermDocument};

/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "SCHUBERT_SMT_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<schubert_smt::Error> for CliError {
    fn from(e: schubert_smt::Error) -> Self {
        use schubert_smt::Error as E;
        match e {
            E::InvalidTuple { .. } | E::ShapeMismatch { .. } | E::InvalidArgument(_) => {
                CliError::Input(e.to_string())
            }
            E::RankDeficient { .. } | E::BasisMismatch | E::VerificationFailed | E::Internal(_) => {
                CliError::Internal(e.to_string())
            }
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "schubert-smt",
    version,
    about = "Standard monomial computations on Grassmannians and Schubert varieties"
)]
pub struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Emit a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a polynomial document in the standard monomial basis.
    Straighten(StraightenArgs),
    /// List the standard tableaux of a graded piece.
    Basis(BasisArgs),
    /// Check the identities and claims about X(w_5).
    Verify(VerifyArgs),
    /// Normality or generation probe on X(w).
    Probe(ProbeArgs),
}

#[derive(Debug, Args)]
pub struct StraightenArgs {
    /// Polynomial document; stdin when omitted.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Straighten on X(w) instead of the whole Grassmannian.
    #[arg(long, value_name = "LIST")]
    pub w: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    #[arg(long, value_name = "LIST")]
    pub w: String,
    /// Ambient dimension; defaults to twice the length of w.
    #[arg(long)]
    pub n2n: Option<usize>,
    /// Row length; must match w when given.
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub k: usize,
    /// Invariant tableaux only (the default).
    #[arg(long, conflicts_with = "all")]
    pub invariant: bool,
    /// Every standard tableau with 2k rows bounded by w.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Lemma,
    Appendix,
    Theorem,
    Proposition,
    Remarks,
    All,
}

impl CaseArg {
    fn cases(self) -> Vec<Case> {
        match self {
            CaseArg::Lemma => vec![Case::Lemma],
            CaseArg::Appendix => vec![Case::Appendix],
            CaseArg::Theorem => vec![Case::Theorem],
            CaseArg::Proposition => vec![Case::Proposition],
            CaseArg::Remarks => vec![Case::Remarks],
            CaseArg::All => Case::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = CaseArg::All)]
    pub case: CaseArg,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Degree bound for the Hilbert function checks.
    #[arg(long, default_value_t = 3)]
    pub k_max: usize,
    /// Allow n ≥ 5.
    #[arg(long)]
    pub gate_n5: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProbeMode {
    Normality,
    Generation,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long, value_name = "LIST")]
    pub w: String,
    #[arg(long)]
    pub n2n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub degree: usize,
    #[arg(long, value_enum, default_value_t = ProbeMode::Normality)]
    pub mode: ProbeMode,
    #[arg(long, default_value_t = 4)]
    pub k_max: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Rendered result plus the exit status it implies.
#[derive(Debug)]
pub struct Output {
    pub json: serde_json::Value,
    pub text: String,
    /// `false` turns into exit code 1.
    pub passed: bool,
}

impl Output {
    fn ok(json: serde_json::Value, text: String) -> Self {
        Self {
            json,
            text,
            passed: true,
        }
    }

    pub fn render(&self, text: bool) -> String {
        if text {
            self.text.clone()
        } else {
            let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
            s.push('\n');
            s
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

pub fn parse_tuple(list: &str, n: Option<usize>) -> Result<IndexTuple, CliError> {
    let values = list
        .split(',')
        .map(|v| {
            v.trim().parse::<usize>().map_err(|_| {
                CliError::Usage(format!(
                    "{list:?} is not a comma-separated list of positive integers"
                ))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let n = n.unwrap_or(2 * values.len());
    Ok(IndexTuple::new(values, n)?)
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("values serialize")
}

fn read_input(path: Option<&PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Straighten(a) => {
            cmd_straighten(&read_input(a.input.as_ref())?, a.w.as_deref(), a.seed)
        }
        Command::Basis(a) => cmd_basis(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Probe(a) => cmd_probe(a),
    }
}

pub fn cmd_straighten(input: &str, w: Option<&str>, seed: u64) -> Result<Output, CliError> {
    let doc = PolynomialDocument::parse(input)?;
    let f = doc.to_polynomial()?;
    let bound = w.map(|w| parse_tuple(w, Some(doc.n))).transpose()?;
    if let Some(w) = &bound {
        if w.r() != doc.r {
            return Err(CliError::Usage(format!(
                "bound {w} does not have {} entries",
                doc.r
            )));
        }
    }
    let s = straighten_with(&f, bound.as_ref(), &StraightenOptions::with_seed(seed))?;
    let out = PolynomialDocument::from_polynomial(&s);
    let text = if s.is_zero() {
        "0\n".to_string()
    } else {
        format!("{s}\n")
    };
    Ok(Output::ok(to_json(&out), text))
}

fn tableaux_text(header: String, tableaux: &[Tableau]) -> String {
    let mut text = header;
    text.push('\n');
    for t in tableaux {
        let _ = writeln!(text, "  {t}");
    }
    text
}

pub fn cmd_basis(a: &BasisArgs) -> Result<Output, CliError> {
    let w = parse_tuple(&a.w, a.n2n)?;
    if let Some(r) = a.r {
        if r != w.r() {
            return Err(CliError::Usage(format!("--r {r} disagrees with w = {w}")));
        }
    }
    if a.k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    let (kind, tableaux) = if a.all {
        (
            "standard",
            enumerate_standard(2 * a.k, w.r(), w.n(), Some(&w), None)?,
        )
    } else {
        ("invariant", invariant_basis(&w, a.k)?.tableaux().to_vec())
    };
    let json = json!({
        "w": w.values(),
        "n": w.n(),
        "k": a.k,
        "kind": kind,
        "count": tableaux.len(),
        "tableaux": tableaux.iter().map(tableau_rows).collect::<Vec<_>>(),
    });
    let text = tableaux_text(
        format!(
            "{} {kind} tableaux of degree {} on X{w} in G({}, {})",
            tableaux.len(),
            a.k,
            w.r(),
            w.n()
        ),
        &tableaux,
    );
    Ok(Output::ok(json, text))
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Output, CliError> {
    if a.n >= 5 && !a.gate_n5 {
        return Err(CliError::Usage(
            "n ≥ 5 runs the heavier suite; pass --gate-n5".into(),
        ));
    }
    let cases: Vec<Case> = match (a.case, a.n) {
        (CaseArg::All, 2) => Case::ALL
            .into_iter()
            .filter(|c| c.runs_at_rank_two())
            .collect(),
        (c, _) => c.cases(),
    };
    let reports = run_cases(&cases, a.n, a.k_max, a.seed)?;
    let passed = reports.iter().all(VerificationReport::passed);
    let json = json!({
        "n": a.n,
        "seed": a.seed,
        "passed": passed,
        "reports": reports,
    });
    Ok(Output {
        json,
        text: reports_text(&reports),
        passed,
    })
}

fn reports_text(reports: &[VerificationReport]) -> String {
    let mut text = String::new();
    for r in reports {
        let _ = writeln!(
            text,
            "{} (n = {}): {}",
            r.case,
            r.n,
            r.status.to_string().to_uppercase()
        );
        for d in &r.details {
            let mark = if d.passed { "ok  " } else { "FAIL" };
            let _ = write!(text, "  {mark} {}", d.label);
            if !d.note.is_empty() {
                let _ = write!(text, ": {}", d.note);
            }
            text.push('\n');
            if !d.residual.is_empty() {
                let _ = writeln!(text, "       residual: {} term(s)", d.residual.len());
            }
        }
    }
    text
}

pub fn cmd_probe(a: &ProbeArgs) -> Result<Output, CliError> {
    let w = parse_tuple(&a.w, a.n2n)?;
    let options = StraightenOptions::with_seed(a.seed);
    match a.mode {
        ProbeMode::Normality => {
            let r = normality_probe(&w, a.degree, &options)?;
            let json = json!({
                "mode": "normality",
                "w": w.values(),
                "n": w.n(),
                "degree": r.degree,
                "seed": a.seed,
                "dim_lower_products": r.dim_lower_products,
                "dim_rd": r.dim_rd,
                "spanned": r.spanned,
                "cokernel_dimension": r.cokernel_dimension,
                "cokernel_witnesses": r.cokernel_witnesses.iter().map(tableau_rows).collect::<Vec<_>>(),
                "products_considered": r.products_considered,
            });
            let text = tableaux_text(
                format!(
                    "R_{} on X{w}: products span {} of {} (spanned = {}), cokernel dimension {}, witnesses:",
                    r.degree, r.dim_lower_products, r.dim_rd, r.spanned, r.cokernel_dimension
                ),
                &r.cokernel_witnesses,
            );
            Ok(Output::ok(json, text))
        }
        ProbeMode::Generation => {
            let r = generation_degree_probe(&w, a.k_max, &options)?;
            let json = json!({
                "mode": "generation",
                "w": w.values(),
                "n": w.n(),
                "k_max": a.k_max,
                "seed": a.seed,
                "all_spanned": r.all_spanned(),
                "degrees": r.degrees,
            });
            let mut text = format!("generation on X{w} up to degree {}\n", a.k_max);
            for d in &r.degrees {
                let _ = writeln!(
                    text,
                    "  d = {}: rank {} of {} (spanned = {}, cokernel {})",
                    d.degree, d.rank, d.dimension, d.spanned, d.cokernel_dimension
                );
            }
            Ok(Output::ok(json, text))
        }
    }
}

/// Reads the thread cap from the environment.
pub fn thread_cap(value: Option<&str>) -> Result<Option<usize>, CliError> {
    match value {
        None => Ok(None),
        Some(v) => match v.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(CliError::Usage(format!(
                "{THREADS_ENV}={v:?} must be a positive integer"
            ))),
            Ok(k) => Ok(Some(k)),
        },
    }
}
