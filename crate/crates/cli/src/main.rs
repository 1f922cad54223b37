use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qrw::filters::{self, EnumLimit, FilterKind, Subset};
use qrw::io::{self, ReportDocument};
use qrw::model::{validate, AxiomSet, Classification, Element, FiniteStructure};
use qrw::propositions::{self, ClosureReading, PropArgs, PropError, PropId, PropVerdict};
use qrw::search::{
    enumerate_models, gen_lukasiewicz, hunt_models, FoundModel, HuntHit, HuntPredicate,
    HuntWitness, SearchConfig, SearchStats,
};

#[derive(Parser)]
#[command(name = "qrw", version, about = "Finite quasi-ordered residuated Wajsberg structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a structure against the axiom catalog.
    Validate {
        file: PathBuf,
        /// Require x→y = 1 exactly when x ≼ y.
        #[arg(long)]
        strict_link: bool,
        #[arg(long)]
        json: bool,
    },
    /// Test one subset for the filter or implicative-filter clauses.
    Check {
        file: PathBuf,
        /// Comma-separated element indices, e.g. `0,2`.
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        #[arg(long)]
        implicative: bool,
        #[arg(long)]
        json: bool,
    },
    /// List every filter (or implicative filter).
    Filters {
        file: PathBuf,
        #[arg(long)]
        implicative: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the proposition checkers.
    Props {
        file: PathBuf,
        /// Proposition id such as 2.1.9; all of them when omitted.
        #[arg(long)]
        prop: Option<String>,
        /// Subset argument; repeat for propositions taking two.
        #[arg(long)]
        subset: Vec<String>,
        /// Reading of the closure condition in 2.1.8.
        #[arg(long = "p218-reading")]
        reading: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Generate models, optionally hunting for counterexamples.
    Search(SearchArgs),
    /// Write a built-in structure.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    order: usize,
    #[arg(long, conflicts_with = "random")]
    exhaustive: bool,
    #[arg(long)]
    random: bool,
    #[arg(long, requires = "random", default_value_t = 0)]
    seed: u64,
    #[arg(long, requires = "random", default_value_t = 1000)]
    count: u64,
    /// filter-not-implicative, prop-2.1.9-disagreement or
    /// non-antisymmetric-valid-model.
    #[arg(long)]
    hunt: Option<String>,
    /// Comma-separated axiom codes, or `all`.
    #[arg(long, default_value = "all")]
    axioms: String,
    #[arg(long)]
    strict_link: bool,
    /// Exhaustive mode: stop after this many complete candidates.
    #[arg(long, conflicts_with = "random")]
    budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    json: bool,
    /// Directory for `.qrw` files and witness sidecars.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenFamily {
    /// The Łukasiewicz chain with N elements.
    Luk {
        n: usize,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
}

/// Anything that maps to exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    // Die quietly when the reader of stdout goes away, e.g. `qrw ... | head`.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate {
            file,
            strict_link,
            json,
        } => run_validate(&file, strict_link, json),
        Command::Check {
            file,
            subset,
            implicative,
            json,
        } => run_check(&file, &subset, implicative, json),
        Command::Filters {
            file,
            implicative,
            json,
        } => run_filters(&file, implicative, json),
        Command::Props {
            file,
            prop,
            subset,
            reading,
            json,
        } => run_props(&file, prop.as_deref(), &subset, reading.as_deref(), json),
        Command::Search(args) => run_search(&args),
        Command::Gen {
            family: GenFamily::Luk { n, out },
        } => run_gen(n, out.as_deref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(message)) => {
            eprintln!("qrw: {message}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<FiniteStructure, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    io::parse_bytes(&bytes).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn parse_subset(s: &FiniteStructure, text: &str) -> Result<Subset, Failure> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let indices = inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<Element>()
                .map_err(|_| Failure(format!("bad subset element `{t}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Subset::from_indices(s.size(), &indices)?)
}

fn tuple(s: &FiniteStructure, t: &[Element]) -> String {
    let parts: Vec<String> = t.iter().map(|&x| s.label(x)).collect();
    format!("({})", parts.join(", "))
}

fn set(s: &FiniteStructure, m: &Subset) -> String {
    let parts: Vec<String> = m.iter().map(|x| s.label(x)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn run_validate(path: &Path, strict_link: bool, json: bool) -> Outcome {
    let s = load(path)?;
    let report = validate(&s, strict_link);
    if json {
        print!(
            "{}",
            ReportDocument::new(&path.display().to_string(), &s, &report).to_json()
        );
    } else {
        println!("classification: {}", report.classification);
        println!("antisymmetric: {}", report.antisymmetric);
        for d in &report.diagnostics {
            let status = match (d.applicable, d.holds) {
                (false, _) => "skip",
                (true, true) => "ok",
                (true, false) => "FAIL",
            };
            match &d.witness {
                Some(w) => println!("{:<9} {:<4} {} at {}", d.axiom.code(), status, d.detail, tuple(&s, w)),
                None => println!("{:<9} {:<4} {}", d.axiom.code(), status, d.detail),
            }
        }
    }
    Ok(report.classification == Classification::QuasiOrderedRlWajsberg)
}

fn run_check(path: &Path, subset: &str, implicative: bool, json: bool) -> Outcome {
    let s = load(path)?;
    let m = parse_subset(&s, subset)?;
    let kind = if implicative {
        FilterKind::Implicative
    } else {
        FilterKind::Filter
    };
    let verdict = filters::check(&s, &m, kind)?;
    if json {
        let report = validate(&s, false);
        print!(
            "{}",
            ReportDocument::new(&path.display().to_string(), &s, &report)
                .with_filter_check(&m, &verdict)
                .to_json()
        );
    } else {
        match (&verdict.failed_clause, &verdict.witness) {
            (Some(clause), Some(w)) => println!(
                "{} is not a{} filter: {clause} fails at {}",
                set(&s, &m),
                if implicative { "n implicative" } else { "" },
                tuple(&s, w)
            ),
            _ => println!(
                "{} is a{} filter",
                set(&s, &m),
                if implicative { "n implicative" } else { "" }
            ),
        }
    }
    Ok(verdict.holds)
}

fn run_filters(path: &Path, implicative: bool, json: bool) -> Outcome {
    let s = load(path)?;
    let kind = if implicative {
        FilterKind::Implicative
    } else {
        FilterKind::Filter
    };
    let found = filters::enumerate_filters(&s, kind)?;
    if json {
        let subsets: Vec<Vec<Element>> = found.iter().map(Subset::indices).collect();
        let doc = json!({ "kind": kind.as_str(), "subsets": subsets });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        for m in &found {
            println!("{}", set(&s, m));
        }
    }
    Ok(true)
}

fn run_props(
    path: &Path,
    prop: Option<&str>,
    subsets: &[String],
    reading: Option<&str>,
    json: bool,
) -> Outcome {
    let s = load(path)?;
    let args = PropArgs {
        subsets: subsets
            .iter()
            .map(|t| parse_subset(&s, t))
            .collect::<Result<_, _>>()?,
        reading: reading
            .map(str::parse::<ClosureReading>)
            .transpose()
            .map_err(Failure)?,
        limit: EnumLimit::from_env(),
    };
    let mut verdicts: Vec<PropVerdict> = Vec::new();
    match prop {
        Some(id) => {
            let id: PropId = id.parse().map_err(Failure)?;
            verdicts.push(propositions::check(&s, id, &args)?);
        }
        None => {
            for id in PropId::ALL {
                match propositions::check(&s, id, &args) {
                    Ok(v) => verdicts.push(v),
                    Err(e @ (PropError::MissingSubset { .. } | PropError::MissingReading(_))) => {
                        eprintln!("qrw: skipped {id}: {e}");
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    if json {
        let report = validate(&s, false);
        print!(
            "{}",
            ReportDocument::new(&path.display().to_string(), &s, &report)
                .with_props(&verdicts)
                .to_json()
        );
    } else {
        for v in &verdicts {
            println!("{:<7} {:<14} {}", v.prop.id(), v.outcome, v.detail);
            if let Some(w) = &v.witness {
                let sets: Vec<String> = w.subsets.iter().map(|m| set(&s, m)).collect();
                println!("        witness subsets [{}] elements {}", sets.join(", "), tuple(&s, &w.elements));
            }
        }
    }
    Ok(verdicts.iter().all(PropVerdict::holds))
}

fn witness_json(w: &HuntWitness) -> Value {
    match w {
        HuntWitness::Subset(m) => json!({ "subset": m.indices() }),
        HuntWitness::Disagreement { subset, conditions } => {
            json!({ "subset": subset.indices(), "conditions": conditions })
        }
        HuntWitness::Pair(x, y) => json!({ "pair": [x, y] }),
    }
}

fn witness_text(s: &FiniteStructure, w: &HuntWitness) -> String {
    match w {
        HuntWitness::Subset(m) => set(s, m),
        HuntWitness::Disagreement { subset, conditions } => {
            let flags: String = conditions.iter().map(|&b| if b { 'T' } else { 'F' }).collect();
            format!("{} conditions {flags}", set(s, subset))
        }
        HuntWitness::Pair(x, y) => format!("{} ≼ {} ≼ {}", s.label(*x), s.label(*y), s.label(*x)),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn run_search(args: &SearchArgs) -> Outcome {
    let axioms: AxiomSet = args.axioms.parse()?;
    let base = if args.random {
        SearchConfig::random(args.order, args.seed, args.count)
    } else {
        SearchConfig::exhaustive(args.order).with_budget(args.budget)
    };
    let mut cfg = base
        .with_axioms(axioms)
        .strict(args.strict_link)
        .with_workers(args.workers);
    if let Some(id) = &args.hunt {
        cfg = cfg.with_hunt(id.parse::<HuntPredicate>()?);
    }
    let stream = enumerate_models(&cfg)?;
    let hits: Option<Vec<HuntHit>> = match cfg.hunt {
        Some(pred) => Some(hunt_models(&stream.models, pred, EnumLimit::from_env(), cfg.workers)?),
        None => None,
    };

    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).map_err(|e| Failure(format!("{}: {e}", dir.display())))?;
        match (&hits, cfg.hunt) {
            (Some(hits), Some(pred)) => {
                for (i, hit) in hits.iter().enumerate() {
                    let stem = format!("hit-{:04}", i + 1);
                    write_file(&dir.join(format!("{stem}.qrw")), &io::render(&hit.model.structure))?;
                    let sidecar = json!({
                        "predicate": pred.id(),
                        "canonical": hit.model.canonical.to_hex(),
                        "witness": witness_json(&hit.witness),
                    });
                    write_file(
                        &dir.join(format!("{stem}.json")),
                        &(serde_json::to_string_pretty(&sidecar)? + "\n"),
                    )?;
                }
            }
            _ => {
                for (i, m) in stream.models.iter().enumerate() {
                    write_file(&dir.join(format!("model-{:04}.qrw", i + 1)), &io::render(&m.structure))?;
                }
            }
        }
    }

    if args.json {
        let doc = search_json(&cfg, &stream.stats, &stream.models, hits.as_deref());
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        match print_search(&cfg, &stream.stats, &stream.models, hits.as_deref()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(e.into()),
            _ => {}
        }
    }
    Ok(true)
}

fn search_json(
    cfg: &SearchConfig,
    stats: &SearchStats,
    models: &[FoundModel],
    hits: Option<&[HuntHit]>,
) -> Value {
    let mut doc = json!({
        "mode": cfg.mode.to_string(),
        "order": cfg.order,
        "axioms": cfg.axioms.to_string(),
        "strict_link": cfg.strict_link,
        "seed": cfg.seed,
        "candidates": stats.candidates,
        "accepted": stats.accepted,
        "emitted": stats.emitted,
        "complete": stats.complete,
        "models": models.iter().map(|m| m.canonical.to_hex()).collect::<Vec<_>>(),
    });
    if let (Some(hits), Some(pred)) = (hits, cfg.hunt) {
        doc["hunt"] = json!({
            "predicate": pred.id(),
            "hits": hits
                .iter()
                .map(|h| json!({
                    "canonical": h.model.canonical.to_hex(),
                    "witness": witness_json(&h.witness),
                }))
                .collect::<Vec<_>>(),
        });
    }
    doc
}

fn print_search(
    cfg: &SearchConfig,
    stats: &SearchStats,
    models: &[FoundModel],
    hits: Option<&[HuntHit]>,
) -> std::io::Result<()> {
    let mut out = std::io::stdout().lock();
    writeln!(out, "mode: {}", cfg.mode)?;
    writeln!(out, "order: {}", cfg.order)?;
    writeln!(out, "axioms: {}", cfg.axioms)?;
    writeln!(out, "strict-link: {}", cfg.strict_link)?;
    writeln!(out, "candidates: {}", stats.candidates)?;
    writeln!(out, "accepted: {}", stats.accepted)?;
    writeln!(out, "emitted: {}", stats.emitted)?;
    writeln!(out, "complete: {}", stats.complete)?;
    match (hits, cfg.hunt) {
        (Some(hits), Some(pred)) => {
            writeln!(out, "hunt: {pred}")?;
            writeln!(out, "hits: {}", hits.len())?;
            for h in hits {
                writeln!(
                    out,
                    "  {} {}",
                    h.model.canonical.to_hex(),
                    witness_text(&h.model.structure, &h.witness)
                )?;
            }
        }
        _ => {
            for m in models {
                writeln!(out, "  {}", m.canonical.to_hex())?;
            }
        }
    }
    Ok(())
}

fn run_gen(n: usize, out: Option<&Path>) -> Outcome {
    let s = gen_lukasiewicz(n)?;
    let text = io::render(&s);
    match out {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(true)
}
