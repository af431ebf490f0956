//! Command-line front end. The binary only parses arguments and forwards to
//! [`execute`], which returns the text to print and the exit status.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::index::{build_position_index, build_truth_table};
use crate::kernel::{self, round6};
use crate::lcs::{self, count_lcs, psi_lengths, DEFAULT_CAP};
use crate::model::{parse_orderings, OrderingSet, Symbol};
use crate::oracle;
use crate::report::render;
use crate::scs;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "concord", version, about = "Concordance of preference orderings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of all common subsequences, normalized concordance and llcs.
    Concordance(InputArgs),
    /// All longest common subsequences.
    Lcs(InputArgs),
    /// Smallest covering set.
    Scs(InputArgs),
    /// Pairwise feature-space distances between judges.
    Distance(InputArgs),
    /// Judges ranked by mean distance to the others.
    Outliers(InputArgs),
    /// Maximum number of k-long common subsequences of two n-long sequences.
    Maxk {
        n: usize,
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Orderings file, one per line; stdin when absent or `-`.
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Cross-check against brute-force enumeration.
    #[arg(long)]
    pub oracle: bool,
    /// Report only the number of longest common subsequences.
    #[arg(long)]
    pub count_only: bool,
    /// Keep duplicate orderings.
    #[arg(long)]
    pub no_dedupe: bool,
    /// Derive truth-table rows on the fly instead of storing the table.
    #[arg(long)]
    pub low_memory: bool,
    /// Maximum number of sequences to materialize.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Print the position index and truth table to stderr.
    #[arg(long)]
    pub dump_index: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Analysis {
    Concordance,
    Lcs,
    Scs,
    Distance,
    Outliers,
}

/// A validated invocation.
#[derive(Debug, Clone)]
pub enum RunConfig {
    Input { analysis: Analysis, args: InputArgs },
    MaxK { n: usize, k: usize, format: Format },
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, String> {
        let (analysis, args) = match cli.command {
            Command::Maxk { n, k, format } => return Ok(RunConfig::MaxK { n, k, format }),
            Command::Concordance(a) => (Analysis::Concordance, a),
            Command::Lcs(a) => (Analysis::Lcs, a),
            Command::Scs(a) => (Analysis::Scs, a),
            Command::Distance(a) => (Analysis::Distance, a),
            Command::Outliers(a) => (Analysis::Outliers, a),
        };
        if args.count_only && analysis != Analysis::Lcs {
            return Err("--count-only applies to `lcs` only".into());
        }
        if args.low_memory && analysis != Analysis::Concordance {
            return Err("--low-memory applies to `concordance` only".into());
        }
        if args.oracle
            && !matches!(analysis, Analysis::Concordance | Analysis::Lcs | Analysis::Scs)
        {
            return Err("--oracle applies to `concordance`, `lcs` and `scs` only".into());
        }
        if args.cap == 0 {
            return Err("--cap must be positive".into());
        }
        Ok(RunConfig::Input { analysis, args })
    }
}

/// What to print and how to exit.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code,
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::NoProgress(_) => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

/// Runs a parsed command line. Input is read from the named file or `stdin`.
pub fn execute(cli: Cli, stdin: &mut dyn Read) -> Outcome {
    let cfg = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(msg) => return Outcome::fail(EXIT_INPUT, msg),
    };
    match cfg {
        RunConfig::MaxK { n, k, format } => match kernel::max_common_count(n, k) {
            Ok(f) => Outcome {
                stdout: match format {
                    Format::Json => json_line(&json!({"n": n, "k": k, "f": f.to_string()})),
                    Format::Tsv => format!("{f}\n"),
                },
                ..Default::default()
            },
            Err(e) => Outcome::fail(exit_code(&e), e),
        },
        RunConfig::Input { analysis, args } => {
            let mut text = String::new();
            let read = match args.file.as_ref().filter(|p| p.as_os_str() != "-") {
                Some(path) => std::fs::read_to_string(path)
                    .map(|t| text = t)
                    .map_err(|e| format!("{}: {e}", path.display())),
                None => stdin
                    .read_to_string(&mut text)
                    .map(|_| ())
                    .map_err(|e| format!("stdin: {e}")),
            };
            if let Err(msg) = read {
                return Outcome::fail(EXIT_INPUT, msg);
            }
            run_on_text(analysis, &args, &text)
        }
    }
}

/// Runs one analysis on the text of an orderings file.
pub fn run_on_text(analysis: Analysis, args: &InputArgs, text: &str) -> Outcome {
    let parsed = match parse_orderings(text) {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_INPUT, e),
    };
    let set = if args.no_dedupe {
        OrderingSet::keep_duplicates(parsed)
    } else {
        OrderingSet::dedupe(parsed)
    };
    let set = match set {
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_INPUT, e),
    };

    let mut stderr = String::new();
    if args.no_dedupe {
        stderr.push_str(
            "warning: duplicates kept; concordance is defined on sets, so repeated orderings do not change kappa\n",
        );
    } else if set.duplicates_dropped() > 0 {
        let _ = writeln!(stderr, "note: dropped {} duplicate ordering(s)", set.duplicates_dropped());
    }
    if set.lengths_differ() {
        stderr.push_str("note: orderings rank different item sets\n");
    }
    if args.dump_index {
        let index = build_position_index(&set);
        let t = build_truth_table(&index);
        let _ = write!(stderr, "# position index\n{}# truth table\n{}", index.to_tsv(), t.to_tsv());
    }

    let result = match analysis {
        Analysis::Concordance => concordance(&set, args),
        Analysis::Lcs => lcs_cmd(&set, args),
        Analysis::Scs => scs_cmd(&set, args),
        Analysis::Distance => Ok(distance_cmd(&set, args)),
        Analysis::Outliers => outliers_cmd(&set, args),
    };
    match result {
        Ok((stdout, code, extra)) => {
            stderr.push_str(&extra);
            Outcome { stdout, stderr, code }
        }
        Err(e) => {
            let mut out = Outcome::fail(exit_code(&e), e);
            out.stderr.insert_str(0, &stderr);
            out
        }
    }
}

type CmdResult = Result<(String, i32, String), Error>;

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Oracle verdict: `None` when the set is beyond the brute-force bound.
fn oracle_set(set: &OrderingSet) -> Option<oracle::SubsequenceSet> {
    oracle::intersect_all(set).ok()
}

fn verdict(agree: Option<bool>) -> (&'static str, i32, String) {
    match agree {
        Some(true) => ("agree", EXIT_OK, String::new()),
        Some(false) => ("disagree", EXIT_VERIFY, "error: oracle disagrees\n".into()),
        None => (
            "skipped",
            EXIT_OK,
            format!("note: oracle skipped, an ordering exceeds {} items\n", oracle::MAX_ORACLE_LEN),
        ),
    }
}

fn concordance(set: &OrderingSet, args: &InputArgs) -> CmdResult {
    let report = if args.low_memory {
        kernel::kappa_set_low_memory(set)
    } else {
        kernel::kappa_set(set)
    };
    let mut v = serde_json::to_value(&report).expect("serializable");
    v["duplicates_dropped"] = json!(set.duplicates_dropped());
    v["lengths_differ"] = json!(set.lengths_differ());
    let (mut code, mut extra) = (EXIT_OK, String::new());
    if args.oracle {
        let brute = oracle_set(set);
        let (word, c, msg) = verdict(brute.as_ref().map(|b| report.kappa == b.len().into()));
        v["oracle"] = json!({
            "kappa": brute.map(|b| b.len().to_string()),
            "verdict": word,
        });
        code = c;
        extra = msg;
    }
    let out = match args.format {
        Format::Json => json_line(&v),
        Format::Tsv => {
            let mut s = String::new();
            let per: Vec<String> = report.per_symbol.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "kappa\t{}", report.kappa);
            let _ = writeln!(s, "per_symbol\t{}", per.join(","));
            let _ = writeln!(s, "normalized\t{:.6}", report.normalized);
            let _ = writeln!(s, "llcs\t{}", report.llcs);
            let _ = writeln!(s, "n\t{}", report.n);
            let _ = writeln!(s, "N\t{}", report.orderings);
            if let Some(o) = v.get("oracle") {
                let _ = writeln!(s, "oracle_kappa\t{}", o["kappa"].as_str().unwrap_or("-"));
                let _ = writeln!(s, "oracle_verdict\t{}", o["verdict"].as_str().unwrap_or("-"));
            }
            s
        }
    };
    Ok((out, code, extra))
}

fn sorted_joined(seqs: &[Vec<Symbol>]) -> Vec<String> {
    let mut v: Vec<String> = seqs.iter().map(|q| render(q, " ")).collect();
    v.sort();
    v
}

fn oracle_joined(seqs: Vec<oracle::Sequence>) -> Vec<String> {
    let mut v: Vec<String> = seqs.into_iter().map(|q| q.join(" ")).collect();
    v.sort();
    v
}

fn tsv_sequences(seqs: &[Vec<Symbol>]) -> String {
    seqs.iter().map(|q| render(q, "\t") + "\n").collect()
}

fn lcs_cmd(set: &OrderingSet, args: &InputArgs) -> CmdResult {
    let (mut code, mut extra) = (EXIT_OK, String::new());
    if args.count_only {
        let t = build_truth_table(&build_position_index(set));
        let psi = psi_lengths(&t);
        let count = count_lcs(&psi, &t);
        let mut v = json!({"llcs": psi.llcs, "count": count.to_string()});
        if args.oracle {
            let brute = oracle_set(set);
            let (word, c, msg) = verdict(brute.map(|b| {
                let longest = b.longest();
                count == longest.len().into() && longest.first().map_or(0, Vec::len) == psi.llcs
            }));
            v["oracle"] = json!({"verdict": word});
            code = c;
            extra = msg;
        }
        let out = match args.format {
            Format::Json => json_line(&v),
            Format::Tsv => format!("llcs\t{}\ncount\t{}\n", psi.llcs, count),
        };
        return Ok((out, code, extra));
    }

    let found = lcs::all_lcs(set, args.cap)?;
    let mut v = serde_json::to_value(&found).expect("serializable");
    v["count"] = json!(found.len().to_string());
    if args.oracle {
        let brute = oracle_set(set);
        let (word, c, msg) =
            verdict(brute.map(|b| oracle_joined(b.longest()) == sorted_joined(&found.sequences)));
        v["oracle"] = json!({"verdict": word});
        code = c;
        extra = msg;
    }
    let out = match args.format {
        Format::Json => json_line(&v),
        Format::Tsv => format!(
            "# llcs\t{}\n# count\t{}\n{}",
            found.llcs,
            found.len(),
            tsv_sequences(&found.sequences)
        ),
    };
    Ok((out, code, extra))
}

fn scs_cmd(set: &OrderingSet, args: &InputArgs) -> CmdResult {
    let report = scs::smallest_covering_set(set, args.cap)?;
    let mut v = serde_json::to_value(&report).expect("serializable");
    let (mut code, mut extra) = (EXIT_OK, String::new());
    if args.oracle {
        let brute = oracle_set(set);
        let (word, c, msg) = verdict(brute.map(|b| {
            oracle_joined(oracle::maximal_elements(&b)) == sorted_joined(&report.covering_set.sequences)
        }));
        v["oracle"] = json!({"verdict": word});
        code = c;
        extra = msg;
    }
    let out = match args.format {
        Format::Json => json_line(&v),
        Format::Tsv => tsv_sequences(&report.covering_set.sequences),
    };
    Ok((out, code, extra))
}

fn distance_cmd(set: &OrderingSet, args: &InputArgs) -> (String, i32, String) {
    let m = kernel::distance_matrix(set);
    let out = match args.format {
        Format::Json => {
            let rounded: Vec<Vec<f64>> = m
                .values
                .iter()
                .map(|r| r.iter().copied().map(round6).collect())
                .collect();
            json_line(&json!({"judges": m.judges, "matrix": rounded}))
        }
        Format::Tsv => {
            let mut s = String::new();
            let _ = writeln!(s, "\t{}", m.judges.join("\t"));
            for (judge, row) in m.judges.iter().zip(&m.values) {
                let cells: Vec<String> = row.iter().map(|d| format!("{d:.6}")).collect();
                let _ = writeln!(s, "{judge}\t{}", cells.join("\t"));
            }
            s
        }
    };
    (out, EXIT_OK, String::new())
}

fn outliers_cmd(set: &OrderingSet, args: &InputArgs) -> CmdResult {
    let scores = kernel::outlier_scores(set)?;
    let out = match args.format {
        Format::Json => json_line(&serde_json::to_value(&scores).expect("serializable")),
        Format::Tsv => scores
            .iter()
            .map(|s| format!("{}\t{:.6}\n", s.judge, s.score))
            .collect(),
    };
    Ok((out, EXIT_OK, String::new()))
}
