use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hng::enumerate::{enumerate_order, store_catalog};
use hng::graph::graph6_decode;
use hng::invariants::invariant_record;
use hng::membership::{hereditary_ng_defect, ng_defect};
use hng::mine::{mine_defect_obstructions, store_obstruction_set};
use hng::report::{build_context_cached, run_suite, SuiteContext, SUITES};
use hng::structure::{
    check_characterization, chromatic_number_fast, clique_cover_number_fast, clique_number_fast,
    find_induced_c5, independence_number_fast, TheoremId,
};
use hng::Error;

/// Exact invariants, obstruction mining, and verification suites for
/// hereditary Nordhaus-Gaddum graph classes.
#[derive(Parser)]
#[command(name = "hng", version)]
struct Cli {
    /// Cache directory for catalogs and obstruction sets
    /// (default: $HNG_CACHE_DIR, then .hng-cache)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetName {
    F,
    FS,
    FC,
    Claw,
    Triangle,
    LineObstructions,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    LineGraphs,
    ClawFree,
    TriangleFree,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate all graphs of one order and write them as graph6 lines
    Enumerate {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mine the minimal forbidden induced subgraphs for hereditary defect <= amax
    Mine {
        #[arg(long, default_value_t = 1)]
        amax: usize,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Derive a named obstruction set and write it with its JSON sidecar
    Derive {
        #[arg(long, value_enum)]
        set: SetName,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact invariants and defects of one graph6 line
    Invariants { g6: String },
    /// Defect-based class membership of one graph6 line
    Membership {
        g6: String,
        #[arg(long, default_value_t = 2)]
        amax: usize,
    },
    /// An induced C5 of the graph with the types of all outside vertices
    ProfileC5 { g6: String },
    /// Evaluate the clauses of one characterization on a graph
    Check {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        g6: String,
    },
    /// Run verification suites; exits 1 when any counterexample is found
    Verify {
        /// Suite name, or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 20260823)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structure-based fast invariants of one class member
    FastInvariants { g6: String },
}

fn cache_dir(cli: &Cli) -> PathBuf {
    cli.cache_dir.clone().unwrap_or_else(|| {
        std::env::var_os("HNG_CACHE_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".hng-cache"))
    })
}

fn context(cli: &Cli) -> Result<SuiteContext, Error> {
    build_context_cached(&cache_dir(cli))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.cmd {
        Cmd::Enumerate { nmax, out } => {
            let catalog = enumerate_order(*nmax)?;
            match out {
                Some(path) => store_catalog(&catalog, path)?,
                None => {
                    for g in &catalog.graphs {
                        println!("{}", hng::graph::graph6_encode(g));
                    }
                }
            }
            eprintln!("order {}: {} graphs", catalog.order, catalog.len());
            Ok(0)
        }
        Cmd::Mine { amax, nmax, out } => {
            let catalogs = hng::enumerate::enumerate_up_to(*nmax)?;
            let table = hng::mine::hereditary_defect_table(&catalogs)?;
            let set = mine_defect_obstructions(
                &format!("hdef{amax}"),
                &catalogs,
                &table,
                *amax,
            )?;
            let dir = out.clone().unwrap_or_else(|| cache_dir(cli));
            store_obstruction_set(&set, &dir)?;
            println!(
                "{}: {} minimal obstructions, by order {:?}",
                set.name, set.total(), set.counts_by_order
            );
            Ok(0)
        }
        Cmd::Derive { set, out } => {
            let ctx = context(cli)?;
            let chosen = match set {
                SetName::F => &ctx.f,
                SetName::FS => &ctx.f_s,
                SetName::FC => &ctx.f_c,
                SetName::Claw => &ctx.claw_set,
                SetName::Triangle => &ctx.triangle_set,
                SetName::LineObstructions => &ctx.line_set,
            };
            if let Some(dir) = out {
                store_obstruction_set(chosen, dir)?;
            }
            println!(
                "{}: {} members, by order {:?}, complement-closed: {}",
                chosen.name, chosen.total(), chosen.counts_by_order, chosen.complement_closed
            );
            Ok(0)
        }
        Cmd::Invariants { g6 } => {
            let g = graph6_decode(g6)?;
            let record = invariant_record(&g)?;
            let defect = hereditary_ng_defect(&g)?;
            let combined = serde_json::json!({
                "invariants": record,
                "defect": defect,
            });
            println!("{}", serde_json::to_string_pretty(&combined)?);
            Ok(0)
        }
        Cmd::Membership { g6, amax } => {
            let g = graph6_decode(g6)?;
            let report = hereditary_ng_defect(&g)?;
            let classes: Vec<serde_json::Value> = (0..=*amax)
                .map(|a| {
                    serde_json::json!({
                        "a": a,
                        "ng": report.defect <= a,
                        "hng": report.hereditary_defect <= a,
                    })
                })
                .collect();
            let combined = serde_json::json!({
                "defect": ng_defect(&g),
                "hereditary_defect": report.hereditary_defect,
                "witness": report.witness,
                "classes": classes,
            });
            println!("{}", serde_json::to_string_pretty(&combined)?);
            Ok(0)
        }
        Cmd::ProfileC5 { g6 } => {
            let g = graph6_decode(g6)?;
            match find_induced_c5(&g) {
                None => {
                    println!("no induced C5");
                    Ok(0)
                }
                Some(profile) => {
                    println!("C5: {:?}", profile.c5);
                    for (v, t) in &profile.types {
                        let labels: Vec<String> =
                            (0..5).filter(|i| t >> i & 1 == 1).map(|i| format!("c{}", i + 1)).collect();
                        println!("vertex {v}: type {{{}}}", labels.join(","));
                    }
                    Ok(0)
                }
            }
        }
        Cmd::Check { theorem, g6 } => {
            let g = graph6_decode(g6)?;
            let ctx = context(cli)?;
            let (id, aux) = match theorem {
                TheoremArg::LineGraphs => (TheoremId::LineGraphs, &ctx.line_set),
                TheoremArg::ClawFree => (TheoremId::ClawFree, &ctx.claw_set),
                TheoremArg::TriangleFree => (TheoremId::TriangleFree, &ctx.triangle_set),
            };
            let report = check_characterization(id, &g, &ctx.f, aux)?;
            for (name, value) in &report.clauses {
                println!("{name}: {value}");
            }
            println!("consistent: {}", report.consistent);
            Ok(if report.consistent { 0 } else { 1 })
        }
        Cmd::Verify {
            suite,
            seed,
            format,
            out,
        } => {
            let ctx = context(cli)?;
            let ids: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut all_pass = true;
            let mut chunks = Vec::new();
            for id in ids {
                let report = run_suite(id, &ctx, *seed)?;
                all_pass &= report.passed();
                chunks.push(match format {
                    Format::Text => report.to_text(),
                    Format::Json => report.to_json()?,
                });
            }
            let body = match format {
                Format::Text => chunks.join("\n"),
                Format::Json => format!("[\n{}\n]", chunks.join(",\n")),
            };
            emit(out, &body)?;
            Ok(if all_pass { 0 } else { 1 })
        }
        Cmd::FastInvariants { g6 } => {
            let g = graph6_decode(g6)?;
            let ctx = context(cli)?;
            let combined = serde_json::json!({
                "omega": clique_number_fast(&g, &ctx.f)?,
                "alpha": independence_number_fast(&g, &ctx.f)?,
                "chi": chromatic_number_fast(&g, &ctx.f)?,
                "theta": clique_cover_number_fast(&g, &ctx.f)?,
            });
            println!("{}", serde_json::to_string_pretty(&combined)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
