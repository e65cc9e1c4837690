//! Command-line front end: parsing, translation, permutations,
//! Schreier decomposition and rewriting, bounded equality search, and
//! representation-based verification, with JSON output for scripting.
//!
//! Exit codes: 0 = success/pass, 1 = fail/unequal/unknown, 2 = usage or
//! input error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vsb_core::cyclotomic::CycInt;
use vsb_core::equivalence::{search_equivalent, Direction, RewriteStep, SearchBudget, Verdict};
use vsb_core::morphisms::{normalize_to, permutation_of, TargetAlphabet};
use vsb_core::presentations::{catalog, CatalogName};
use vsb_core::representation::{
    apply_word, rep_equal, verify_operator_conditions, verify_relations_parallel, BasisState,
    VerificationReport,
};
use vsb_core::schreier::{decompose, rewrite_pure};
use vsb_core::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Standard,
    Fusing,
    #[value(name = "subscript-one")]
    SubscriptOne,
    Expanded,
}

impl From<Target> for TargetAlphabet {
    fn from(t: Target) -> TargetAlphabet {
        match t {
            Target::Standard => TargetAlphabet::Standard,
            Target::Fusing => TargetAlphabet::Fusing,
            Target::SubscriptOne => TargetAlphabet::SubscriptOne,
            Target::Expanded => TargetAlphabet::Expanded,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "vsb",
    version,
    about = "Virtual singular braid monoid toolkit",
    after_help = "Word grammar: whitespace-separated tokens s<i> S<i> v<i> t<i> u<i> U<i> g<i> \
                  u[<k>,<l>] U[<k>,<l>] g[<k>,<l>]; empty input is the identity word."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized suites. Reserved: every current subcommand is
    /// deterministic, but the flag is part of the stable interface.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every relation instance of a catalog for n strands.
    Relations {
        #[arg(long)]
        catalog: CatalogName,
        #[arg(short = 'n', long = "strands")]
        n: usize,
    },
    /// Permutation of a word under the homomorphism onto S_n.
    Perm {
        #[arg(short = 'n', long = "strands")]
        n: usize,
        word: String,
    },
    /// Translate a word to another generator alphabet.
    Translate {
        #[arg(long, value_enum)]
        to: Target,
        #[arg(short = 'n', long = "strands")]
        n: usize,
        word: String,
    },
    /// Split a word into its pure part and coset representative.
    Decompose {
        #[arg(short = 'n', long = "strands")]
        n: usize,
        word: String,
    },
    /// Rewrite a pure standard-alphabet word into generalized fusing strings.
    RewritePure {
        #[arg(short = 'n', long = "strands")]
        n: usize,
        word: String,
    },
    /// Search for a relation-application path between two words.
    Equal {
        #[arg(long, default_value = "standard")]
        catalog: CatalogName,
        #[arg(short = 'n', long = "strands")]
        n: usize,
        /// Maximum number of relation edges on the connecting path.
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, default_value_t = 200_000)]
        max_states: usize,
        /// Maximum state length; defaults to max input length + 8.
        #[arg(long)]
        max_length: Option<usize>,
        /// Prime for the fingerprint check attached to unknown verdicts.
        #[arg(long, default_value_t = 3)]
        p: u64,
        word1: String,
        word2: String,
    },
    /// Fingerprint a word: its image on every basis state at prime p.
    Eval {
        #[arg(long)]
        p: u64,
        #[arg(short = 'n', long = "strands")]
        n: usize,
        word: String,
    },
    /// Verify every relation of a catalog under the representation.
    Verify {
        #[arg(long)]
        catalog: CatalogName,
        #[arg(short = 'n', long = "strands")]
        n: usize,
        #[arg(long)]
        p: u64,
        /// Worker threads for the relation checks.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Check the seven operator conditions of the representation.
    VerifyOps {
        #[arg(long)]
        p: u64,
    },
}

fn parse_word(text: &str, n: usize) -> Result<Word, String> {
    Word::parse(text, n).map_err(|e| e.to_string())
}

fn scalar_json(c: &CycInt) -> Value {
    Value::Array(
        c.coeffs()
            .iter()
            .map(|b| Value::String(b.to_string()))
            .collect(),
    )
}

fn state_json(s: &BasisState) -> Value {
    json!(s.entries())
}

fn step_json(step: &RewriteStep) -> Value {
    json!({
        "family": step.relation.family,
        "params": step.relation.params,
        "lhs": step.relation.lhs.to_string(),
        "rhs": step.relation.rhs.to_string(),
        "position": step.position,
        "direction": match step.direction {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        },
    })
}

fn report_json(report: &VerificationReport) -> Value {
    json!({
        "catalog": report.catalog,
        "n": report.n,
        "p": report.p,
        "passed": report.passed(),
        "instances": report.instances(),
        "families": report.families.iter().map(|f| json!({
            "family": f.family,
            "instances": f.instances,
            "passed": f.failures.is_empty(),
            "failures": f.failures.iter().map(|fail| json!({
                "params": fail.params,
                "witness_state": state_json(&fail.mismatch.state),
                "lhs_scalar": scalar_json(&fail.mismatch.lhs_image.scalar),
                "lhs_state": state_json(&fail.mismatch.lhs_image.state),
                "rhs_scalar": scalar_json(&fail.mismatch.rhs_image.scalar),
                "rhs_state": state_json(&fail.mismatch.rhs_image.state),
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn emit(format: Format, value: &Value, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("valid json")),
        Format::Text => println!("{}", text()),
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let format = cli.format;
    match cli.command {
        Command::Relations { catalog: name, n } => {
            let rels = catalog(name).instantiate(n);
            let value = Value::Array(
                rels.iter()
                    .map(|r| {
                        json!({
                            "family": r.family,
                            "params": r.params,
                            "lhs": r.lhs.to_string(),
                            "rhs": r.rhs.to_string(),
                        })
                    })
                    .collect(),
            );
            emit(format, &value, || {
                rels.iter()
                    .map(|r| format!("{} [{}]: {} = {}", r.family, r.params, r.lhs, r.rhs))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(0)
        }
        Command::Perm { n, word } => {
            let word = parse_word(&word, n)?;
            let perm = permutation_of(&word);
            let value = json!({
                "word": word.to_string(),
                "images": perm.images(),
                "cycles": perm.to_string(),
            });
            emit(format, &value, || perm.to_string());
            Ok(0)
        }
        Command::Translate { to, n, word } => {
            let word = parse_word(&word, n)?;
            let output = normalize_to(&word, to.into());
            let value = json!({
                "input": word.to_string(),
                "output": output.to_string(),
            });
            emit(format, &value, || output.to_string());
            Ok(0)
        }
        Command::Decompose { n, word } => {
            let word = parse_word(&word, n)?;
            let d = decompose(&word);
            let perm = permutation_of(&word);
            let value = json!({
                "pure": d.pure.to_string(),
                "representative": d.representative.to_string(),
                "permutation_cycles": perm.to_string(),
            });
            emit(format, &value, || {
                format!(
                    "pure: {}\nrepresentative: {}\npermutation: {}",
                    d.pure, d.representative, perm
                )
            });
            Ok(0)
        }
        Command::RewritePure { n, word } => {
            let word = parse_word(&word, n)?;
            let rewritten = rewrite_pure(&word).map_err(|e| e.to_string())?;
            let value = json!({
                "input": word.to_string(),
                "rewritten": rewritten.to_string(),
            });
            emit(format, &value, || rewritten.to_string());
            Ok(0)
        }
        Command::Equal {
            catalog: name,
            n,
            depth,
            max_states,
            max_length,
            p,
            word1,
            word2,
        } => {
            let w1 = parse_word(&word1, n)?;
            let w2 = parse_word(&word2, n)?;
            let budget = SearchBudget {
                max_depth: depth,
                max_states,
                max_length,
            };
            let verdict =
                search_equivalent(&w1, &w2, &catalog(name), budget).map_err(|e| e.to_string())?;
            match verdict {
                Verdict::Equivalent(steps) => {
                    let value = json!({
                        "verdict": "equivalent",
                        "steps": steps.len(),
                        "trace": steps.iter().map(step_json).collect::<Vec<_>>(),
                    });
                    emit(format, &value, || {
                        let mut lines = vec![format!("equivalent in {} steps", steps.len())];
                        lines.extend(steps.iter().map(|s| {
                            format!(
                                "  {} [{}] at {} ({})",
                                s.relation.family,
                                s.relation.params,
                                s.position,
                                match s.direction {
                                    Direction::Forward => "forward",
                                    Direction::Backward => "backward",
                                }
                            )
                        }));
                        lines.join("\n")
                    });
                    Ok(0)
                }
                Verdict::Unknown(stats) => {
                    let distinguished = !rep_equal(&w1, &w2, p).map_err(|e| e.to_string())?;
                    let value = json!({
                        "verdict": "unknown",
                        "stats": {
                            "states": stats.states,
                            "depth_reached": stats.depth_reached,
                            "frontier_exhausted": stats.frontier_exhausted,
                        },
                        "rep_check": {
                            "p": p,
                            "distinguished": distinguished,
                        },
                    });
                    emit(format, &value, || {
                        if distinguished {
                            format!("unknown by search; fingerprints at p={p} certify inequality")
                        } else {
                            format!(
                                "unknown: budget exhausted after {} states, depth {}",
                                stats.states, stats.depth_reached
                            )
                        }
                    });
                    Ok(1)
                }
            }
        }
        Command::Eval { p, n, word } => {
            let word = parse_word(&word, n)?;
            let states = BasisState::enumerate(p, n).map_err(|e| e.to_string())?;
            let mut entries = Vec::with_capacity(states.len());
            for state in &states {
                let img = apply_word(&word, state).map_err(|e| e.to_string())?;
                entries.push(json!({
                    "state": state_json(state),
                    "scalar": scalar_json(&img.scalar),
                    "image": state_json(&img.state),
                }));
            }
            let value = json!({
                "word": word.to_string(),
                "p": p,
                "n": n,
                "fingerprint": entries,
            });
            emit(format, &value, || {
                states
                    .iter()
                    .map(|s| {
                        let img = apply_word(&word, s).expect("checked above");
                        format!(
                            "{:?} -> {:?} * {:?}",
                            s.entries(),
                            img.scalar.coeffs(),
                            img.state.entries()
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(0)
        }
        Command::Verify {
            catalog: name,
            n,
            p,
            threads,
        } => {
            let report = verify_relations_parallel(&catalog(name), n, p, threads)
                .map_err(|e| e.to_string())?;
            let value = report_json(&report);
            emit(format, &value, || {
                let mut lines = vec![format!(
                    "catalog {} at n={}, p={}: {}",
                    report.catalog,
                    report.n,
                    report.p,
                    if report.passed() { "PASS" } else { "FAIL" }
                )];
                lines.extend(report.families.iter().map(|f| {
                    format!(
                        "  {:<16} {:>4} instances  {}",
                        f.family,
                        f.instances,
                        if f.failures.is_empty() { "ok" } else { "FAIL" }
                    )
                }));
                lines.join("\n")
            });
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::VerifyOps { p } => {
            let report = verify_operator_conditions(p).map_err(|e| e.to_string())?;
            let value = json!({
                "p": report.p,
                "passed": report.passed(),
                "conditions": report.conditions.iter().map(|c| json!({
                    "index": c.index,
                    "description": c.description,
                    "passed": c.passed,
                })).collect::<Vec<_>>(),
            });
            emit(format, &value, || {
                report
                    .conditions
                    .iter()
                    .map(|c| {
                        format!(
                            "condition {}: {} ({})",
                            c.index,
                            if c.passed { "ok" } else { "FAIL" },
                            c.description
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
