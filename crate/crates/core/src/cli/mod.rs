//! The `stablerank` command line.
//!
//! ```text
//! stablerank rank tensor <file> [--alpha p1/q1,...]
//! stablerank rank symm <file>
//! stablerank rank ideal <file> [--change <matrixfile>]...
//! stablerank lct <file>
//! stablerank semistable <file>
//! stablerank verify <suite> [--seed S] [--cases N]
//! ```
//!
//! `--json` prints one object `{"value", "witness", "notes"}` with exact
//! rational strings (`"p/q"`, or `"inf"`). Exit status is 0 on success, 1
//! when a verify suite has failures and 2 on usage or input errors.

pub mod input;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::ideal::{lct_monomial, newton_threshold, t_stable_rank, LinearChange, PolyIdeal};
use crate::lp::SlopeValue;
use crate::tensor::{
    is_symm_torus_semistable, is_torus_semistable, symm_torus_destabilizer, symm_torus_rank,
    torus_destabilizer, torus_rank, AlphaWeights, WeightAssignment,
};
use crate::verify::{RandomInstanceConfig, Suite, Summary};
use input::{parse_input, parse_rational_list, InputDocument};

pub use input::{parse_input as parse, serialize, ParseError};

const TORUS_NOTE: &str = "upper bound on rk^G; exact for torus-optimal tensors";

#[derive(Debug, Parser)]
#[command(name = "stablerank", version, about = "Exact torus stable ranks and monomial log canonical thresholds")]
struct Cli {
    /// Print a single JSON object instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stable rank of a tensor, a form or an ideal
    Rank {
        #[command(subcommand)]
        target: RankTarget,
    },
    /// Log canonical threshold of a monomial ideal
    Lct { file: PathBuf },
    /// Diagonal-torus semistability of a tensor or a form
    Semistable { file: PathBuf },
    /// Run a randomized check suite
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Debug, Subcommand)]
enum RankTarget {
    /// Torus-restricted G-stable rank of a `tensor` file
    Tensor {
        file: PathBuf,
        /// Positive rational weights per factor, comma separated
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Torus-restricted symmetric G-stable rank of a `symm` file
    Symm { file: PathBuf },
    /// T-stable rank at the origin of an `mideal` or `pideal` file
    Ideal {
        file: PathBuf,
        /// `matrix` file of a linear change of local parameters (repeatable)
        #[arg(long = "change")]
        changes: Vec<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    SymmMulti,
    Semistable,
    MonomialLct,
    IdealProps,
    LctAnchor,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::SymmMulti => Suite::SymmMulti,
            SuiteArg::Semistable => Suite::Semistable,
            SuiteArg::MonomialLct => Suite::MonomialLct,
            SuiteArg::IdealProps => Suite::IdealProps,
            SuiteArg::LctAnchor => Suite::LctAnchor,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Result of one invocation, rendered as text or JSON.
struct Output {
    value: Value,
    witness: Value,
    notes: Vec<String>,
    /// Extra text-only lines, printed before the notes.
    details: Vec<String>,
    exit: i32,
}

impl Output {
    fn new(value: Value) -> Self {
        Self {
            value,
            witness: Value::Null,
            notes: Vec::new(),
            details: Vec::new(),
            exit: 0,
        }
    }

    fn render(&self, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
        if json {
            let obj = json!({
                "value": self.value,
                "witness": self.witness,
                "notes": self.notes,
            });
            return writeln!(out, "{obj}");
        }
        match &self.value {
            Value::String(s) => writeln!(out, "{s}")?,
            v => writeln!(out, "{v}")?,
        }
        if !self.witness.is_null() {
            writeln!(out, "witness: {}", self.witness)?;
        }
        for d in &self.details {
            writeln!(out, "{d}")?;
        }
        for n in &self.notes {
            writeln!(out, "note: {n}")?;
        }
        Ok(())
    }
}

/// An input problem: printed as a diagnostic, exit status 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(output) => {
            if output.render(cli.json, out).is_err() {
                return 2;
            }
            output.exit
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read_document(path: &Path) -> Result<InputDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn wrong_kind(path: &Path, doc: &InputDocument, expected: &str) -> Failure {
    Failure(format!(
        "{}: expected a {expected} file, found `{}`",
        path.display(),
        doc.kind()
    ))
}

fn value_json(v: &SlopeValue) -> Value {
    Value::String(v.to_string())
}

fn bigints_json(v: &[BigInt]) -> Value {
    Value::Array(
        v.iter()
            .map(|x| serde_json::from_str(&x.to_string()).unwrap_or_else(|_| Value::String(x.to_string())))
            .collect(),
    )
}

fn dispatch(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Rank { target } => rank(target),
        Command::Lct { file } => {
            let doc = read_document(file)?;
            let InputDocument::MonomialIdeal(a) = &doc else {
                return Err(wrong_kind(file, &doc, "mideal"));
            };
            let lct = lct_monomial(a)?;
            let rank = t_stable_rank(a)?;
            let threshold = newton_threshold(a)?;
            let mut o = Output::new(Value::String(lct.to_string()));
            o.witness = json!(rank.witness);
            o.notes.push("computed as the T-stable rank of the monomial ideal".into());
            o.notes.push(format!("Newton polyhedron threshold: {threshold}"));
            Ok(o)
        }
        Command::Semistable { file } => {
            let doc = read_document(file)?;
            let (stable, destabilizer) = match &doc {
                InputDocument::Tensor(v) => (
                    is_torus_semistable(v),
                    torus_destabilizer(v).map(|w| Value::Array(w.iter().map(|b| bigints_json(b)).collect())),
                ),
                InputDocument::Symm(v) => (
                    is_symm_torus_semistable(v),
                    symm_torus_destabilizer(v).map(|w| bigints_json(&w)),
                ),
                _ => return Err(wrong_kind(file, &doc, "tensor or symm")),
            };
            let mut o = Output::new(Value::Bool(stable));
            if let Some(w) = destabilizer {
                o.witness = w;
                o.notes.push("witness: traceless weights with positive valuation".into());
            }
            o.notes.push("restricted to 1-parameter subgroups of the diagonal torus".into());
            Ok(o)
        }
        Command::Verify { suite, seed, cases } => {
            let cfg = RandomInstanceConfig::with_seed(*seed, *cases);
            let results = Suite::from(*suite).run(&cfg)?;
            let mut o = Output::new(Value::Null);
            let mut ok = true;
            for (suite, reports) in &results {
                let s = Summary::of(reports);
                ok &= s.all_passed();
                o.notes.push(format!(
                    "{}: {}/{} cases, {}/{} anchors",
                    suite.name(),
                    s.cases_passed,
                    s.cases_total,
                    s.anchors_passed,
                    s.anchors_total
                ));
                for r in reports.iter().filter(|r| !r.passed) {
                    o.details.push(r.to_string());
                    o.notes.push(format!("failed {}: {}", r.check_name, r.instance.replace('\n', "; ")));
                }
            }
            o.value = Value::String(if ok { "pass" } else { "fail" }.into());
            o.exit = if ok { 0 } else { 1 };
            Ok(o)
        }
    }
}

fn rank(target: &RankTarget) -> Result<Output, Failure> {
    match target {
        RankTarget::Tensor { file, alpha } => {
            let doc = read_document(file)?;
            let InputDocument::Tensor(v) = &doc else {
                return Err(wrong_kind(file, &doc, "tensor"));
            };
            let alpha = match alpha {
                Some(text) => AlphaWeights::new(
                    parse_rational_list(text).ok_or_else(|| Failure(format!("invalid --alpha {text:?}")))?,
                )?,
                None => AlphaWeights::ones(v.order()),
            };
            let r = torus_rank(v, &alpha)?;
            let mut o = Output::new(value_json(&r.value));
            if let Some(w) = &r.witness {
                let lam = WeightAssignment::from_flat(w, v.order(), v.dim())?;
                o.witness = json!(lam.per_factor());
            }
            o.notes.push(TORUS_NOTE.into());
            Ok(o)
        }
        RankTarget::Symm { file } => {
            let doc = read_document(file)?;
            let InputDocument::Symm(v) = &doc else {
                return Err(wrong_kind(file, &doc, "symm"));
            };
            let r = symm_torus_rank(v)?;
            let mut o = Output::new(value_json(&r.value));
            o.witness = json!(r.witness);
            o.notes.push(TORUS_NOTE.into());
            Ok(o)
        }
        RankTarget::Ideal { file, changes } => {
            let doc = read_document(file)?;
            let ideal: PolyIdeal = match &doc {
                InputDocument::PolyIdeal(a) => a.clone(),
                InputDocument::MonomialIdeal(a) => a.to_poly_ideal(),
                _ => return Err(wrong_kind(file, &doc, "mideal or pideal")),
            };
            let standard = t_stable_rank(&ideal)?;
            let mut notes = vec![format!("standard parameters: {}", standard.value)];
            let mut best = standard;
            for path in changes {
                let doc = read_document(path)?;
                let InputDocument::Matrix(m) = &doc else {
                    return Err(wrong_kind(path, &doc, "matrix"));
                };
                let changed = change_ideal(&ideal, m)?;
                let r = t_stable_rank(&changed)?;
                notes.push(format!("change {}: {}", path.display(), r.value));
                if r.value < best.value {
                    best = r;
                }
            }
            notes.push("upper bound on rk^G (minimum over the listed systems of local parameters)".into());
            let mut o = Output::new(value_json(&best.value));
            o.witness = json!(best.witness);
            o.notes = notes;
            Ok(o)
        }
    }
}

fn change_ideal(ideal: &PolyIdeal, m: &LinearChange) -> Result<PolyIdeal, Failure> {
    Ok(ideal.apply_change(m)?)
}
