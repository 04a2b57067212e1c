mod explore;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use omega_power::classify::{classify_report, gclass_report, GClassReport};
use omega_power::corpus::{corpus, CorpusDictionary, CorpusEntry, EntryReport};
use omega_power::dict::{parse_dictionary, DictionaryExpression, FiniteDict};
use omega_power::engine::{equivalent, greedy_decompose, included, member_lasso, minimal_generator};
use omega_power::error::Error;
use omega_power::rank::{e_level, rank_lasso, RankResult, RankSummary};
use omega_power::reductions::{alpha0_death_step, alpha0_rank, tree_dict, tree_ranges, FiniteTree};
use omega_power::streams::{alpha0, Lasso, OmegaStream};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "omegapow", version, about = "Decision procedures for ω-powers A^∞ of dictionaries")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Whether the lasso u(v) lies in A^∞.
    Member { dict: PathBuf, lasso: String },
    /// Topological class, generator classes and rank summary of a finite dictionary.
    Classify { dict: PathBuf },
    /// Whether A^∞ is generated by one, two (or up to --max-p) words.
    Gclass {
        dict: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_p: usize,
    },
    /// Whether two finite dictionaries have the same ω-power.
    Equiv { a: PathBuf, b: PathBuf },
    /// Whether A^∞ ⊆ B^∞ for finite dictionaries.
    Included { a: PathBuf, b: PathBuf },
    /// Rank of the decomposition tree of the lasso.
    Rank { dict: PathBuf, lasso: String },
    /// Whether the lasso lies in the level set E_k.
    Elevel { dict: PathBuf, lasso: String, k: usize },
    /// First k chunks of the leftmost-minimal decomposition.
    Decompose { dict: PathBuf, lasso: String, k: usize },
    /// Unique decipherability of a finite dictionary.
    CodeCheck { dict: PathBuf },
    /// Whether no member is a proper prefix of another.
    Antichain { dict: PathBuf },
    /// A minimal subset with the same ω-power.
    Minimal { dict: PathBuf },
    /// The dictionary φ[T] of a finite tree, as a dictionary file.
    TreeEncode { tree: PathBuf },
    /// A prefix of α₀ = 1 0 1 0² 1 0³ ….
    Alpha0 {
        #[arg(long)]
        prefix: usize,
    },
    /// List the built-in corpus, or check all of its facts.
    Examples {
        #[arg(long)]
        run: bool,
        /// Write every expression entry to DIR/<name>.dict.
        #[arg(long, value_name = "DIR")]
        export: Option<PathBuf>,
    },
    /// Search small finite dictionaries for counterexamples to the
    /// two-generator length inequality and generator uniqueness.
    ExploreConjecture {
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        max_words: usize,
    },
}

/// A finished report: JSON value, text rendering and exit code.
pub struct Outcome {
    json: Value,
    text: String,
    code: u8,
}

impl Outcome {
    fn new(json: Value, text: impl Into<String>, ok: bool) -> Self {
        Outcome { json, text: text.into(), code: if ok { 0 } else { 1 } }
    }
}

/// Malformed input or a request the tool cannot serve; exit code 2.
#[derive(Debug)]
pub struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut text = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("serializable") + "\n"
            } else {
                out.text
            };
            if !text.ends_with('\n') {
                text.push('\n');
            }
            // A closed pipe (e.g. `| head`) is not an error worth a panic.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(Failure(msg)) => {
            if cli.json {
                println!("{}", json!({ "error": msg }));
            }
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Res<DictionaryExpression> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_dictionary(&src).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_finite(path: &Path) -> Res<FiniteDict> {
    load(path)?.to_finite().map_err(|e| match e {
        Error::NotFinite => Failure(format!("{}: dictionary is infinite; this verb needs a finite one", path.display())),
        other => other.into(),
    })
}

fn parse_lasso(s: &str, d: &DictionaryExpression) -> Res<Lasso> {
    let l: Lasso = s.parse()?;
    d.alphabet().check(l.head())?;
    d.alphabet().check(l.cycle())?;
    Ok(l)
}

fn to_json<T: Serialize>(verb: &str, value: &T) -> Value {
    let mut v = serde_json::to_value(value).expect("serializable");
    if let Value::Object(map) = &mut v {
        map.insert("verb".into(), json!(verb));
    }
    v
}

fn words_json(d: &FiniteDict) -> Value {
    json!(d.words().iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn summary_text(s: &RankSummary) -> String {
    match s {
        RankSummary::Zero => "0 (A^∞ is everything)".into(),
        RankSummary::One => "1 (A^∞ is empty)".into(),
        RankSummary::FiniteClopen(r) => format!("finite, at least {r} on sampled lassos"),
        RankSummary::Omega => "ω".into(),
    }
}

fn run(command: Command) -> Res<Outcome> {
    match command {
        Command::Member { dict, lasso } => {
            let d = load(&dict)?;
            let alpha = parse_lasso(&lasso, &d)?;
            let m = member_lasso(&d, &alpha);
            let sign = if m { "∈" } else { "∉" };
            Ok(Outcome::new(
                json!({ "verb": "member", "lasso": alpha, "member": m }),
                format!("{alpha} {sign} A^∞  (some factorization into infinitely many members {})\n",
                    if m { "exists" } else { "does not exist" }),
                m,
            ))
        }
        Command::Classify { dict } => {
            let d = load_finite(&dict)?;
            let r = classify_report(&d)?;
            let mut text = String::new();
            writeln!(text, "class: {:?}", r.class).unwrap();
            writeln!(text, "g0: {}  g1: {}  g2: {}", r.gclass.g0, r.gclass.g1, r.gclass.g2).unwrap();
            if let Some(w) = &r.gclass.g1_witness {
                writeln!(text, "one-word generator: {w}").unwrap();
            }
            if let Some((a, b)) = &r.gclass.g2_witness {
                writeln!(text, "two-word generator: {{{a}, {b}}}").unwrap();
            }
            writeln!(text, "rank R(A): {}", summary_text(&r.rank_summary)).unwrap();
            Ok(Outcome::new(to_json("classify", &r), text, true))
        }
        Command::Gclass { dict, max_p } => {
            let d = load_finite(&dict)?;
            let r = gclass_report(&d, max_p)?;
            let mut text = format!("g0: {}\ng1: {}\ng2: {}\n", gclass_line(&r, 0), gclass_line(&r, 1), gclass_line(&r, 2));
            if let Some(s) = &r.deeper {
                let status = match (&s.witness, s.conclusive) {
                    (Some(ws), _) => format!("yes, {{{}}}", join(ws)),
                    (None, true) => "no".into(),
                    (None, false) => "no generator among member prefixes (inconclusive)".into(),
                };
                writeln!(text, "g{}: {status}", s.p).unwrap();
            }
            Ok(Outcome::new(to_json("gclass", &r), text, true))
        }
        Command::Equiv { a, b } => {
            let (da, db) = (load_finite(&a)?, load_finite(&b)?);
            let eq = equivalent(&da, &db)?;
            Ok(Outcome::new(
                json!({ "verb": "equiv", "equivalent": eq }),
                format!("{da}^∞ {} {db}^∞\n", if eq { "=" } else { "≠" }),
                eq,
            ))
        }
        Command::Included { a, b } => {
            let (da, db) = (load_finite(&a)?, load_finite(&b)?);
            let inc = included(&da, &db)?;
            Ok(Outcome::new(
                json!({ "verb": "included", "included": inc }),
                format!("{da}^∞ {} {db}^∞\n", if inc { "⊆" } else { "⊈" }),
                inc,
            ))
        }
        Command::Rank { dict, lasso } => {
            let d = load(&dict)?;
            let alpha = parse_lasso(&lasso, &d)?;
            let r = rank_lasso(&d, &alpha);
            let text = match r {
                RankResult::Member => format!("{alpha} ∈ A^∞: its decomposition tree is ill-founded\n"),
                RankResult::Rank(k) => format!("rank {k}\n"),
            };
            Ok(Outcome::new(serde_json::to_value(r).expect("serializable"), text, true))
        }
        Command::Elevel { dict, lasso, k } => {
            let d = load(&dict)?;
            let alpha = parse_lasso(&lasso, &d)?;
            let inside = e_level(&d, &alpha, k);
            Ok(Outcome::new(
                json!({ "verb": "elevel", "lasso": alpha, "k": k, "in_level": inside }),
                format!("{alpha} {} E_{k}\n", if inside { "∈" } else { "∉" }),
                inside,
            ))
        }
        Command::Decompose { dict, lasso, k } => {
            let d = load(&dict)?;
            let alpha = parse_lasso(&lasso, &d)?;
            match greedy_decompose(&d, &alpha, k) {
                Ok(chunks) => {
                    let text: Vec<String> = chunks.iter().map(ToString::to_string).collect();
                    Ok(Outcome::new(
                        json!({ "verb": "decompose", "lasso": alpha, "chunks": text }),
                        format!("{}\n", text.join(" · ")),
                        true,
                    ))
                }
                Err(Error::NotMember(_)) => Ok(Outcome::new(
                    json!({ "verb": "decompose", "lasso": alpha, "chunks": Value::Null }),
                    format!("{alpha} ∉ A^∞: no decomposition\n"),
                    false,
                )),
                Err(e) => Err(e.into()),
            }
        }
        Command::CodeCheck { dict } => {
            let d = load_finite(&dict)?;
            let (code, note) = match d.is_code() {
                Ok(c) => (c, None),
                Err(Error::EmptyWordInCode) => (false, Some("contains the empty word")),
                Err(e) => return Err(e.into()),
            };
            let mut text = format!("{d} is {}a code", if code { "" } else { "not " });
            if let Some(n) = note {
                write!(text, " ({n})").unwrap();
            }
            Ok(Outcome::new(json!({ "verb": "code-check", "code": code }), text + "\n", code))
        }
        Command::Antichain { dict } => {
            let d = load_finite(&dict)?;
            let anti = d.is_antichain();
            Ok(Outcome::new(
                json!({ "verb": "antichain", "antichain": anti }),
                format!("{d} is {}an antichain\n", if anti { "" } else { "not " }),
                anti,
            ))
        }
        Command::Minimal { dict } => {
            let d = load_finite(&dict)?;
            let m = minimal_generator(&d)?;
            let mut text = format!("# minimal generator of {d}\n");
            text.push_str(&m.to_file_string("main"));
            Ok(Outcome::new(json!({ "verb": "minimal", "words": words_json(&m) }), text, true))
        }
        Command::TreeEncode { tree } => {
            let src = std::fs::read_to_string(&tree)
                .map_err(|e| Failure(format!("{}: {e}", tree.display())))?;
            let t: FiniteTree = src.parse().map_err(|e: Error| Failure(format!("{}: {e}", tree.display())))?;
            let ranges = tree_ranges(&t)?;
            let d = tree_dict(&t)?;
            let json = json!({
                "verb": "tree-encode",
                "nodes": t.len(),
                "tree_rank": t.rank(),
                "alpha0_rank": alpha0_rank(&t)?,
                "alpha0_death_step": alpha0_death_step(&t)?.to_string(),
                "blocks": ranges.iter().map(|r| json!([r.lo.to_string(), r.hi.to_string()])).collect::<Vec<_>>(),
                "words": words_json(&d),
            });
            let text = format!("# φ[T] for a tree with {} nodes\n{}", t.len(), d.to_file_string("main"));
            Ok(Outcome::new(json, text, true))
        }
        Command::Alpha0 { prefix } => {
            let p = alpha0().prefix(prefix);
            Ok(Outcome::new(json!({ "verb": "alpha0", "prefix": p }), format!("{p}\n"), true))
        }
        Command::Examples { run, export } => examples(run, export),
        Command::ExploreConjecture { max_len, max_words } => explore::run(max_len, max_words),
    }
}

fn join(ws: &[omega_power::words::Word]) -> String {
    ws.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn gclass_line(r: &GClassReport, p: usize) -> String {
    match p {
        0 => format!("{}", r.g0),
        1 => match &r.g1_witness {
            Some(w) if r.g1 => format!("true, generated by {{{w}}}"),
            _ => "false".into(),
        },
        _ => match &r.g2_witness {
            Some((a, b)) if r.g2 => format!("true, generated by {{{a}, {b}}}"),
            _ => "false".into(),
        },
    }
}

fn examples(run: bool, export: Option<PathBuf>) -> Res<Outcome> {
    let mut entries = corpus();
    entries.sort_by_key(|e| e.name);
    if let Some(dir) = export {
        std::fs::create_dir_all(&dir).map_err(|e| Failure(format!("{}: {e}", dir.display())))?;
        for e in &entries {
            if let Some(src) = e.source() {
                let path = dir.join(format!("{}.dict", e.name));
                let text = format!("# {}\n{src}", e.about);
                std::fs::write(&path, text).map_err(|err| Failure(format!("{}: {err}", path.display())))?;
            }
        }
    }
    if !run {
        let list: Vec<Value> = entries.iter().map(entry_json).collect();
        let mut text = String::new();
        for e in &entries {
            writeln!(text, "{:<24} {:>2} facts  {}", e.name, e.facts.len(), e.about).unwrap();
        }
        return Ok(Outcome::new(json!({ "verb": "examples", "entries": list }), text, true));
    }
    let reports: Vec<EntryReport> = entries.par_iter().map(CorpusEntry::check).collect();
    let ok = reports.iter().all(|r| r.passed);
    let mut text = String::new();
    for r in &reports {
        let passed = r.facts.iter().filter(|f| f.passed).count();
        writeln!(text, "{} {:<24} {passed}/{}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.facts.len()).unwrap();
        for f in r.facts.iter().filter(|f| !f.passed) {
            writeln!(text, "     {}: {}", f.fact, f.observed.as_deref().unwrap_or("")).unwrap();
        }
    }
    Ok(Outcome::new(json!({ "verb": "examples", "passed": ok, "entries": reports }), text, ok))
}

fn entry_json(e: &CorpusEntry) -> Value {
    let kind = match e.dictionary {
        CorpusDictionary::Expression { .. } => "expression",
        CorpusDictionary::Oracle(_) => "oracle",
    };
    json!({ "name": e.name, "about": e.about, "dictionary": kind, "facts": e.facts.len() })
}
