//! The `symkey` command line tool.
//!
//! [`run`] does all the work and returns what would be printed together with
//! the exit code, so the binary is a thin wrapper and tests can drive every
//! subcommand in-process. Exit codes: 0 success, 1 domain error, 2 usage or
//! parse error.

use std::ffi::OsString;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::column::Column;
use crate::enumerate::enumerate_kn;
use crate::error::Error;
use crate::keys::{right_key, right_key_column_direct, right_key_column_jdt, Method};
use crate::letter::Partition;
use crate::sjdt::{rectify_traced, skew_variant, SlideKind, SlideTrace};
use crate::tableau::{key_from_vector, KnTableau, SkewTableau};

#[derive(Parser, Debug)]
#[command(
    name = "symkey",
    version,
    about = "Kashiwara-Nakashima tableaux, symplectic jeu de taquin and right keys"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Rank n of the alphabet 1 < ... < n < -n < ... < -1
    #[arg(short = 'n', long = "rank")]
    n: usize,
    /// Emit a JSON object instead of text
    #[arg(long)]
    json: bool,
    /// Render barred letters with an overline in text output
    #[arg(long)]
    bars: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Jdt,
    Direct,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Jdt => Method::Jdt,
            MethodArg::Direct => Method::Direct,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Kashiwara-Nakashima condition
    Validate {
        #[command(flatten)]
        common: Common,
        /// Tableau file, or - for standard input
        file: PathBuf,
    },
    /// Print the split form
    Split {
        #[command(flatten)]
        common: Common,
        file: PathBuf,
    },
    /// Print the weight (#i - #-i for each i)
    Weight {
        #[command(flatten)]
        common: Common,
        file: PathBuf,
    },
    /// Rectify a skew tableau by symplectic jeu de taquin
    Rectify {
        #[command(flatten)]
        common: Common,
        /// Log every elementary slide as a comment line
        #[arg(long)]
        trace: bool,
        file: PathBuf,
    },
    /// Skew tableau with the given column lengths that rectifies to the input
    SkewVariant {
        #[command(flatten)]
        common: Common,
        /// Target column lengths, left to right, a rearrangement of the input's
        #[arg(long, value_delimiter = ',', required = true)]
        perm: Vec<usize>,
        file: PathBuf,
    },
    /// Right key of a straight tableau
    RightKey {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "jdt")]
        method: MethodArg,
        /// Print only the first key column
        #[arg(long)]
        column_only: bool,
        file: PathBuf,
    },
    /// Key tableau of a weight vector
    KeyFromVector {
        #[command(flatten)]
        common: Common,
        #[arg(value_delimiter = ',', allow_negative_numbers = true, required = true)]
        vector: Vec<i32>,
    },
    /// List every tableau of a straight shape
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true)]
        shape: Vec<usize>,
        #[arg(long)]
        count_only: bool,
    },
    /// Compare both right key methods on every tableau up to a size
    CheckEquivalence {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_cells: usize,
    },
}

/// Everything a command invocation produced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = Output::default();
    match dispatch(cli.command, &mut out) {
        Ok(code) => out.code = code,
        Err(Failure::Usage(m)) => {
            out.code = 2;
            out.stderr.push_str(&format!("error: {m}\n"));
        }
        Err(Failure::Domain(m)) => {
            out.code = 1;
            out.stderr.push_str(&format!("error: {m}\n"));
        }
    }
    out
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))
}

fn load(path: &Path, n: usize) -> Result<SkewTableau, Failure> {
    Ok(SkewTableau::parse(&read_input(path)?, n)?)
}

fn load_kn(path: &Path, n: usize) -> Result<KnTableau, Failure> {
    Ok(KnTableau::new(load(path, n)?)?)
}

fn tableau_json(t: &SkewTableau) -> Value {
    let rows: Vec<Vec<Option<i32>>> = t
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(|c| c.map(|l| l.value())).collect())
        .collect();
    json!({
        "shape": t.outer_shape().parts(),
        "inner_shape": t.inner_shape().parts(),
        "rows": rows,
        "weight": t.weight().entries(),
    })
}

fn with_fields(mut v: Value, extra: Value) -> Value {
    if let (Some(obj), Value::Object(extra)) = (v.as_object_mut(), extra) {
        obj.extend(extra);
    }
    v
}

fn column_tableau(c: &Column) -> SkewTableau {
    SkewTableau::straight(c.rank(), vec![c.clone()]).expect("a single column is a tableau")
}

fn trace_json(tr: &SlideTrace) -> Value {
    let steps: Vec<Value> = tr
        .steps
        .iter()
        .map(|s| {
            let (kind, contracted) = match s.kind {
                SlideKind::Vertical => ("vertical", None),
                SlideKind::HorizontalBarred(_) => ("horizontal-barred", None),
                SlideKind::HorizontalUnbarred { contracted, .. } => {
                    ("horizontal-unbarred", contracted)
                }
            };
            json!({
                "from": [s.from.row, s.from.col],
                "kind": kind,
                "entry": s.kind.slid_entry().map(|l| l.value()),
                "contracted": contracted,
            })
        })
        .collect();
    json!({ "corner": [tr.start.row, tr.start.col], "steps": steps, "end": [tr.end.row, tr.end.col] })
}

fn emit(out: &mut Output, common: &Common, t: &SkewTableau, extra: Value) {
    if common.json {
        out.stdout
            .push_str(&with_fields(tableau_json(t), extra).to_string());
        out.stdout.push('\n');
    } else {
        out.stdout.push_str(&t.to_text(common.bars));
    }
}

fn dispatch(command: Command, out: &mut Output) -> Result<i32, Failure> {
    match command {
        Command::Validate { common, file } => {
            let t = load(&file, common.n)?;
            let verdict = t.check_kn();
            if common.json {
                let extra = json!({
                    "valid": verdict.is_ok(),
                    "reason": verdict.as_ref().err().map(|v| v.to_string()),
                });
                emit(out, &common, &t, extra);
            } else {
                match &verdict {
                    Ok(()) => out.stdout.push_str("valid\n"),
                    Err(v) => out.stdout.push_str(&format!("invalid: {v}\n")),
                }
            }
            Ok(if verdict.is_ok() { 0 } else { 1 })
        }
        Command::Split { common, file } => {
            let t = load(&file, common.n)?;
            emit(out, &common, &t.split_form()?, json!({}));
            Ok(0)
        }
        Command::Weight { common, file } => {
            let t = load(&file, common.n)?;
            if common.json {
                emit(out, &common, &t, json!({}));
            } else {
                out.stdout.push_str(&format!("{}\n", t.weight()));
            }
            Ok(0)
        }
        Command::Rectify {
            common,
            trace,
            file,
        } => {
            let t = load_kn(&file, common.n)?;
            let (r, traces) = rectify_traced(&t)?;
            if trace && !common.json {
                for tr in &traces {
                    out.stdout.push_str(&format!("# corner {}\n", tr.start));
                    for line in tr.log_lines() {
                        out.stdout.push_str(&format!("#   {line}\n"));
                    }
                }
            }
            let extra = if trace {
                json!({ "trace": traces.iter().map(trace_json).collect::<Vec<_>>() })
            } else {
                json!({})
            };
            emit(out, &common, &r, extra);
            Ok(0)
        }
        Command::SkewVariant { common, perm, file } => {
            let t = load_kn(&file, common.n)?;
            emit(out, &common, &skew_variant(&t, &perm)?, json!({}));
            Ok(0)
        }
        Command::RightKey {
            common,
            method,
            column_only,
            file,
        } => {
            let t = load_kn(&file, common.n)?;
            let method = Method::from(method);
            if column_only {
                let c = match method {
                    Method::Jdt => right_key_column_jdt(&t)?,
                    Method::Direct => right_key_column_direct(&t)?,
                };
                emit(
                    out,
                    &common,
                    &column_tableau(&c),
                    json!({ "method": method.to_string() }),
                );
            } else {
                let k = right_key(&t, method)?;
                emit(out, &common, &k, json!({ "method": method.to_string() }));
            }
            Ok(0)
        }
        Command::KeyFromVector { common, vector } => {
            let k = key_from_vector(&vector, common.n)?;
            emit(out, &common, &k, json!({}));
            Ok(0)
        }
        Command::Enumerate {
            common,
            shape,
            count_only,
        } => {
            let lambda = Partition::new(shape)?;
            if common.n == 0 {
                return Err(Error::ZeroRank.into());
            }
            if count_only {
                let count = enumerate_kn(&lambda, common.n).count();
                if common.json {
                    out.stdout.push_str(&format!(
                        "{}\n",
                        json!({ "shape": lambda.parts(), "count": count })
                    ));
                } else {
                    out.stdout.push_str(&format!("{count}\n"));
                }
            } else if common.json {
                let all: Vec<Value> = enumerate_kn(&lambda, common.n)
                    .map(|t| tableau_json(&t))
                    .collect();
                let v = json!({ "shape": lambda.parts(), "count": all.len(), "tableaux": all });
                out.stdout.push_str(&format!("{v}\n"));
            } else {
                let texts: Vec<String> = enumerate_kn(&lambda, common.n)
                    .map(|t| t.to_text(common.bars))
                    .collect();
                out.stdout.push_str(&texts.join("\n"));
            }
            Ok(0)
        }
        Command::CheckEquivalence { common, max_cells } => {
            check_equivalence(&common, max_cells, out)
        }
    }
}

fn check_equivalence(common: &Common, max_cells: usize, out: &mut Output) -> Result<i32, Failure> {
    if common.n == 0 {
        return Err(Error::ZeroRank.into());
    }
    let (mut shapes, mut checked, mut mismatches) = (0usize, 0usize, Vec::new());
    for size in 0..=max_cells {
        for lambda in Partition::all_of_size(size, common.n) {
            shapes += 1;
            for t in enumerate_kn(&lambda, common.n) {
                checked += 1;
                let jdt = right_key(&t, Method::Jdt)?;
                let direct = right_key(&t, Method::Direct)?;
                if jdt != direct {
                    mismatches.push(t.to_text(false));
                }
            }
        }
    }
    if common.json {
        let v = json!({
            "n": common.n,
            "max_cells": max_cells,
            "shapes": shapes,
            "checked": checked,
            "mismatches": mismatches.len(),
        });
        out.stdout.push_str(&format!("{v}\n"));
    } else {
        for m in &mismatches {
            out.stdout.push_str(&format!("mismatch:\n{m}"));
        }
        out.stdout.push_str(&format!(
            "checked {checked} tableaux over {shapes} shapes (n = {}, at most {max_cells} cells): {} mismatches\n",
            common.n,
            mismatches.len()
        ));
    }
    Ok(if mismatches.is_empty() { 0 } else { 1 })
}
