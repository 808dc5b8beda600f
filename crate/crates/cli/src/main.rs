//! `nilpotra`: command-line front end to `nilpotra-core`.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nilpotra_core::lab::{run_suites, SuiteConfig};
use nilpotra_core::{
    witt_count, BigInt, Endomorphism, EndomorphismJson, Error, GroupContext, HallBasis, Limits, NilpotentElement,
    NormalFormJson, Result,
};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "nilpotra", version, about = "Computations in free nilpotent groups F(n,c)")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Number of generators.
    #[arg(short = 'n', long = "rank", global = true, default_value_t = 2,
          value_parser = clap::value_parser!(u32).range(1..))]
    rank: u32,
    /// Nilpotency class.
    #[arg(short = 'c', long = "class", global = true, default_value_t = 2,
          value_parser = clap::value_parser!(u32).range(1..))]
    class: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Longest word, in letters, accepted for collection.
    #[arg(long, global = true, env = "NILPOTRA_MAX_WORD_LEN", default_value_t = 1_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_word_len: u64,
    /// Largest Hall basis (total basic commutators) a context may use.
    #[arg(long, global = true, default_value_t = 100_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_witt: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Collect a word into Hall normal form.
    Nf { word: String },
    /// List the Hall basis of F(N,C), or only the per-weight counts.
    Hall {
        n: u32,
        c: u32,
        #[arg(long)]
        counts: bool,
    },
    /// Endomorphisms given as `x1 -> word; x2 -> word` (or their JSON form).
    Aut {
        #[command(subcommand)]
        op: AutOp,
    },
    /// Run a lab suite by id, or `all`.
    Verify {
        suite: String,
        /// Keep per-check wall-clock timings in the output.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Subcommand, Debug)]
enum AutOp {
    /// Image of an element under a map.
    Apply {
        map: String,
        element: String,
    },
    /// The composite `f ∘ g`.
    Compose {
        f: String,
        g: String,
    },
    Invert {
        map: String,
    },
    /// Whether the map is an automorphism.
    Check {
        map: String,
    },
    IaLevel {
        map: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(Failure::Checks(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
    }
}

enum Failure {
    Core(Error),
    /// The suite ran but some asserted check failed; carries the output.
    Checks(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn limits(g: &Global) -> Limits {
    Limits {
        max_word_len: g.max_word_len as u128,
        max_witt: g.max_witt as u128,
    }
}

fn context(g: &Global) -> Result<Arc<GroupContext>> {
    GroupContext::with_limits(g.rank as usize, g.class as usize, limits(g))
}

fn json_line(v: &impl serde::Serialize) -> String {
    format!("{}\n", serde_json::to_string(v).expect("serializable"))
}

fn run(cli: &Cli) -> std::result::Result<String, Failure> {
    let g = &cli.global;
    let out = match &cli.command {
        Command::Nf { word } => {
            let ctx = context(g)?;
            show_element(&ctx.parse(word)?, g.format)
        }
        Command::Hall { n, c, counts } => hall(*n as usize, *c as usize, *counts, g)?,
        Command::Aut { op } => aut(op, g)?,
        Command::Verify { suite, timings } => return verify(suite, *timings, g),
    };
    Ok(out)
}

fn show_element(a: &NilpotentElement, format: Format) -> String {
    match format {
        Format::Text => a.to_aligned_text(),
        Format::Json => json_line(&a.to_json()),
    }
}

fn show_map(f: &Endomorphism, format: Format) -> String {
    match format {
        Format::Text => format!("{f}\n"),
        Format::Json => json_line(&f.to_json()),
    }
}

fn hall(n: usize, c: usize, counts_only: bool, g: &Global) -> Result<String> {
    if n == 0 || c == 0 {
        return Err(Error::InvalidArgument("rank and class must be positive".into()));
    }
    if counts_only {
        let counts: Vec<_> = (1..=c as u32).map(|m| witt_count(n as u64, m)).collect();
        let total: BigInt = counts.iter().sum();
        if total > BigInt::from(g.max_witt) {
            return Err(Error::ResourceCap {
                what: "basic commutators",
                needed: u128::try_from(&total).unwrap_or(u128::MAX),
                limit: g.max_witt as u128,
            });
        }
        return Ok(match g.format {
            Format::Text => format!(
                "{}\n",
                counts.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            ),
            Format::Json => json_line(&json!({
                "rank": n,
                "class": c,
                "counts": counts.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            })),
        });
    }
    let basis = HallBasis::with_limit(n, c, g.max_witt as u128)?;
    Ok(match g.format {
        Format::Text => (0..basis.len())
            .map(|p| format!("{}\tweight {}\n", basis.format_entry(p), basis.weight(p)))
            .collect(),
        Format::Json => {
            let entries: Vec<Value> = (0..basis.len())
                .map(|p| json!({"index": p + 1, "commutator": basis.format_entry(p), "weight": basis.weight(p)}))
                .collect();
            json_line(&json!({"rank": n, "class": c, "entries": entries}))
        }
    })
}

fn parse_map(ctx: &Arc<GroupContext>, text: &str) -> Result<Endomorphism> {
    if text.trim_start().starts_with('{') {
        let json: EndomorphismJson = serde_json::from_str(text).map_err(|e| Error::Syntax {
            pos: e.column(),
            msg: e.to_string(),
        })?;
        return Endomorphism::from_json(ctx, &json);
    }
    Endomorphism::parse(ctx, text)
}

fn parse_element(ctx: &Arc<GroupContext>, text: &str) -> Result<NilpotentElement> {
    if text.trim_start().starts_with('{') {
        let json: NormalFormJson = serde_json::from_str(text).map_err(|e| Error::Syntax {
            pos: e.column(),
            msg: e.to_string(),
        })?;
        return ctx.element_from_json(&json);
    }
    ctx.parse(text)
}

fn aut(op: &AutOp, g: &Global) -> Result<String> {
    let ctx = context(g)?;
    Ok(match op {
        AutOp::Apply { map, element } => {
            let f = parse_map(&ctx, map)?;
            show_element(&f.apply(&parse_element(&ctx, element)?)?, g.format)
        }
        AutOp::Compose { f, g: h } => {
            let composite = parse_map(&ctx, f)?.compose(&parse_map(&ctx, h)?)?;
            show_map(&composite, g.format)
        }
        AutOp::Invert { map } => show_map(&parse_map(&ctx, map)?.invert()?, g.format),
        AutOp::Check { map } => {
            let m = parse_map(&ctx, map)?.abelianization_matrix();
            let det = m.det();
            let ok = m.is_unimodular();
            match g.format {
                Format::Text => format!("{ok}\n"),
                Format::Json => json_line(&json!({"automorphism": ok, "det": det.to_string()})),
            }
        }
        AutOp::IaLevel { map } => {
            let level = parse_map(&ctx, map)?.ia_level()?;
            match g.format {
                Format::Text => format!("{level}\n"),
                Format::Json => json_line(&json!({"ia_level": level})),
            }
        }
    })
}

fn verify(suite: &str, timings: bool, g: &Global) -> std::result::Result<String, Failure> {
    let cfg = SuiteConfig {
        seed: g.seed,
        trials: g.trials,
        limits: limits(g),
        timings,
    };
    let reports = run_suites(suite, &cfg)?;
    let failed = reports.iter().filter(|r| r.is_blocking_failure()).count();
    let passed = reports.iter().filter(|r| r.passed()).count();
    let probes = reports.iter().filter(|r| r.advisory).count();
    let out = match g.format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&r.summary_line());
                s.push('\n');
                for f in &r.failures {
                    s.push_str(&format!("    {}: {}\n", f.case, f.detail));
                }
                for o in &r.observations {
                    s.push_str(&format!("    note: {o}\n"));
                }
            }
            s.push_str(&format!(
                "summary: {} checks, {passed} passed, {failed} failed ({probes} probes, never failing)\n",
                reports.len()
            ));
            s
        }
        Format::Json => json_line(&json!({
            "reports": reports,
            "passed": passed,
            "failed": failed,
        })),
    };
    if failed > 0 {
        Err(Failure::Checks(out))
    } else {
        Ok(out)
    }
}
