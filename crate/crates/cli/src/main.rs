//! Command-line front end: P/Q-symbols, congruence tests, class sizes,
//! twin-pair extraction, identity checking, linear-extension counts and
//! class enumeration, with canonical JSON or compact output.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use plackit::congruence::{equiv, rewrite_class, DEFAULT_REWRITE_GUARD};
use plackit::correspond::{extract_mst, extract_mtg, TwinBstmPair, TwinStPair};
use plackit::counting::{
    class_size, le_count_brute, le_count_g, twin_count_bstm_bounds, twin_count_st,
};
use plackit::identities::{check_id, Identity};
use plackit::monoid::{Family, MonoidId};
use plackit::stalactic::{p_st, q_st, Side};
use plackit::taiga::{build_set_tree, p_tg, BtsVariant};
use plackit::words::Word;
use plackit_cli::{doc, CliError};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Compact,
}

#[derive(Parser)]
#[command(
    name = "plackit",
    version,
    about = "Stalactic and taiga monoids: insertion symbols, congruences, counting and identities"
)]
struct Cli {
    /// Output format for structured values.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Insertion symbol (tableau or tree) of a word.
    Psym { monoid: String, word: String },
    /// Recording symbol of a word.
    Qsym { monoid: String, word: String },
    /// Decide whether two words are congruent; exit 0 iff they are.
    Equiv {
        monoid: String,
        u: String,
        v: String,
    },
    /// Size of the congruence class of a word.
    ClassSize { monoid: String, word: String },
    /// Extract a representative word from a twin-pair JSON file.
    Extract { family: String, pair: PathBuf },
    /// Check an identity such as xzxyty=xzyxty; exit 0 iff satisfied.
    CheckId { monoid: String, identity: String },
    /// Count linear extensions of a poset JSON file, or of the gap poset
    /// described by --G.
    CountLe {
        /// JSON file with {"n":..., "relations":[[i,j],...]}.
        poset: Option<PathBuf>,
        /// Chain vector V, gap vector B and permutation SIGMA
        /// (comma-separated numbers; "-" for an empty B).
        #[arg(long = "G", num_args = 3, value_names = ["V", "B", "SIGMA"])]
        gap: Option<Vec<String>>,
    },
    /// Count the twin partners of a stalactic tableau, or bound them for a
    /// tree with multiplicities.
    Twins { tableau: PathBuf },
    /// List every word of the congruence class of a word (guarded).
    EnumerateClass { monoid: String, word: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn monoid(s: &str) -> Result<MonoidId, CliError> {
    s.parse().map_err(CliError::from)
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

fn guard_from_env() -> Result<u64, CliError> {
    match std::env::var("PLACKIT_GUARD") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::usage("PLACKIT_GUARD must be a positive integer")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_REWRITE_GUARD),
        Err(e) => Err(CliError::usage(format!("cannot read PLACKIT_GUARD: {e}"))),
    }
}

fn number_list(s: &str) -> Result<Vec<usize>, CliError> {
    let t = s.trim();
    if t.is_empty() || t == "-" {
        return Ok(Vec::new());
    }
    if t.contains(',') {
        return t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| CliError::usage(format!("invalid number {p:?}")))
            })
            .collect();
    }
    if t.len() > 1 && t.chars().all(|c| c.is_ascii_digit()) {
        return Ok(t
            .chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect());
    }
    Ok(vec![t.parse().map_err(|_| {
        CliError::usage(format!("invalid number {t:?}"))
    })?])
}

fn word_arg(s: &str) -> Result<Word, CliError> {
    doc::word_from_text(s)
}

fn emit(format: Format, json: Value, compact: String) {
    match format {
        Format::Json => println!("{}", doc::render(&json)),
        Format::Compact => println!("{compact}"),
    }
}

fn pair_compact(l: String, r: String) -> String {
    format!("({l},{r})")
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.cmd {
        Cmd::Psym { monoid: m, word } => {
            let m = monoid(&m)?;
            let word = word_arg(&word)?;
            match m {
                MonoidId::LSt | MonoidId::RSt => {
                    let side = if m == MonoidId::LSt {
                        Side::Left
                    } else {
                        Side::Right
                    };
                    let t = p_st(&word, side);
                    emit(
                        cli.format,
                        doc::stalactic_value(&t),
                        doc::stalactic_compact(&t),
                    );
                }
                MonoidId::MSt => {
                    let (l, r) = (p_st(&word, Side::Left), p_st(&word, Side::Right));
                    emit(
                        cli.format,
                        doc::pair_value(doc::stalactic_value(&l), doc::stalactic_value(&r)),
                        pair_compact(doc::stalactic_compact(&l), doc::stalactic_compact(&r)),
                    );
                }
                MonoidId::LTg | MonoidId::RTg => {
                    let side = if m == MonoidId::LTg {
                        Side::Left
                    } else {
                        Side::Right
                    };
                    let t = p_tg(&word, side);
                    emit(cli.format, doc::bstm_value(&t), doc::bstm_compact(&t));
                }
                MonoidId::MTg => {
                    let (l, r) = (p_tg(&word, Side::Left), p_tg(&word, Side::Right));
                    emit(
                        cli.format,
                        doc::pair_value(doc::bstm_value(&l), doc::bstm_value(&r)),
                        pair_compact(doc::bstm_compact(&l), doc::bstm_compact(&r)),
                    );
                }
                _ => return Err(CliError::usage(format!("{m} has no insertion symbol"))),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Qsym { monoid: m, word } => {
            let m = monoid(&m)?;
            let word = word_arg(&word)?;
            match m {
                MonoidId::LSt | MonoidId::RSt => {
                    let side = if m == MonoidId::LSt {
                        Side::Left
                    } else {
                        Side::Right
                    };
                    let q = q_st(&word, side);
                    emit(cli.format, doc::ps_value(&q), doc::ps_compact(&q));
                }
                MonoidId::MSt => {
                    let (l, r) = (q_st(&word, Side::Left), q_st(&word, Side::Right));
                    emit(
                        cli.format,
                        doc::pair_value(doc::ps_value(&l), doc::ps_value(&r)),
                        pair_compact(doc::ps_compact(&l), doc::ps_compact(&r)),
                    );
                }
                MonoidId::LTg | MonoidId::RTg => {
                    let variant = if m == MonoidId::LTg {
                        BtsVariant::Increasing
                    } else {
                        BtsVariant::Decreasing
                    };
                    let q = build_set_tree(&word, variant);
                    emit(cli.format, doc::bts_value(&q), doc::bts_compact(&q));
                }
                MonoidId::MTg => {
                    let l = build_set_tree(&word, BtsVariant::Increasing);
                    let r = build_set_tree(&word, BtsVariant::Decreasing);
                    emit(
                        cli.format,
                        doc::pair_value(doc::bts_value(&l), doc::bts_value(&r)),
                        pair_compact(doc::bts_compact(&l), doc::bts_compact(&r)),
                    );
                }
                _ => return Err(CliError::usage(format!("{m} has no recording symbol"))),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Equiv { monoid: m, u, v } => {
            let m = monoid(&m)?;
            let congruent = equiv(m, &word_arg(&u)?, &word_arg(&v)?)?;
            println!("{congruent}");
            Ok(if congruent {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::ClassSize { monoid: m, word } => {
            let m = monoid(&m)?;
            let size = class_size(m, &word_arg(&word)?)?;
            println!("{size}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Extract { family, pair } => {
            let family: Family = family.parse().map_err(CliError::from)?;
            let text = read_file(&pair)?;
            let extracted = match family {
                Family::Stalactic => {
                    let (l, r) = doc::twin_st_from_text(&text)?;
                    extract_mst(&TwinStPair::new(l, r)?)
                }
                Family::Taiga => {
                    let (l, r) = doc::twin_bstm_from_text(&text)?;
                    extract_mtg(&TwinBstmPair::new(l, r)?)
                }
            };
            println!("{extracted}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::CheckId {
            monoid: m,
            identity,
        } => {
            let m = monoid(&m)?;
            let id: Identity = identity.parse().map_err(CliError::from)?;
            let satisfied = check_id(m, &id)?;
            println!("{satisfied}");
            Ok(if satisfied {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::CountLe { poset, gap } => {
            let count = match (poset, gap) {
                (Some(path), None) => {
                    let p = doc::poset_from_text(&read_file(&path)?)?;
                    le_count_brute(&p)?
                }
                (None, Some(args)) => {
                    let v = number_list(&args[0])?;
                    let b = number_list(&args[1])?;
                    let sigma = number_list(&args[2])?;
                    le_count_g(&v, &b, &sigma)?
                }
                _ => {
                    return Err(CliError::usage(
                        "pass exactly one of a poset file or --G V B SIGMA",
                    ))
                }
            };
            println!("{count}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Twins { tableau } => {
            match doc::tableau_from_text(&read_file(&tableau)?)? {
                doc::TableauDoc::Stalactic(t) => {
                    println!("{}", twin_count_st(&t));
                }
                doc::TableauDoc::Tree(t) => {
                    let bounds = twin_count_bstm_bounds(&t);
                    match cli.format {
                        Format::Json => {
                            let exact = bounds
                                .exact
                                .as_ref()
                                .map(|e| Value::String(e.to_string()))
                                .unwrap_or(Value::Null);
                            let json = serde_json::json!({
                                "lower": bounds.lower.to_string(),
                                "upper": bounds.upper.to_string(),
                                "exact": exact,
                            });
                            println!("{}", doc::render(&json));
                        }
                        Format::Compact => {
                            let exact = bounds
                                .exact
                                .as_ref()
                                .map(|e| e.to_string())
                                .unwrap_or_else(|| "-".into());
                            println!("{} {} {}", bounds.lower, bounds.upper, exact);
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::EnumerateClass { monoid: m, word } => {
            let m = monoid(&m)?;
            let guard = guard_from_env()?;
            let class = rewrite_class(m, &word_arg(&word)?, guard)?;
            for member in class {
                println!("{member}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
