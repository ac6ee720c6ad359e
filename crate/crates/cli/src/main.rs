//! `cfconn`: verify, solve, reduce and self-test from the command line.
//!
//! Exit codes: 0 success, 1 negative verdict or failed self-test, 2 usage
//! or input error, 3 search budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use cfconn::coloring::{EdgeColoring, PairSet, VertexColoring};
use cfconn::generate::{self, Family};
use cfconn::io::{parse_coloring, parse_graph, parse_pairs, parse_partial, write_coloring, write_graph, write_pairs, write_partial};
use cfconn::reduce::{self, parse_maps, PartialEdgeColoring, ReductionInstance, ReductionKind};
use cfconn::selftest::{self, Scale};
use cfconn::solve::{Solver, DEFAULT_BUDGET};
use cfconn::verify::{self, VerifyReport};
use cfconn::{Error, Graph};

#[derive(Parser)]
#[command(name = "cfconn", version, about = "Conflict-free connection colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a colored graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum)]
        mode: VerifyMode,
        /// Pair file, required for scfc-subset.
        #[arg(long)]
        pairs: Option<PathBuf>,
    },
    /// Compute a connection number exactly.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        mode: SolveMode,
        /// Maximum number of pair tests.
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        /// Where to write the witness coloring.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a reduction gadget and write it to a directory.
    Reduce {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        cnf: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        partial: Option<PathBuf>,
        #[arg(long)]
        pairs: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        k: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Map a gadget coloring back to the source problem.
    Extract {
        #[arg(long, value_enum)]
        kind: Kind,
        /// The gadget graph.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        maps: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        partial: Option<PathBuf>,
        #[arg(long)]
        pairs: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write members of a graph family.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(long)]
        n: usize,
        /// Edge probability for gnp.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file, or directory for all-connected.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance suites.
    Selftest {
        #[arg(long, value_enum, default_value_t = ScaleArg::Quick)]
        scale: ScaleArg,
        /// Run only these criteria.
        #[arg(long)]
        only: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    Cfc,
    Vcfc,
    Scfc,
    ScfcSubset,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMode {
    Cfc,
    Vcfc,
    Scfc,
    Rc,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sat2partial,
    Partial2subset,
    Kcolor2subset,
    Star2scfc,
}

impl Kind {
    fn reduction(self) -> ReductionKind {
        match self {
            Kind::Sat2partial => ReductionKind::SatToPartial,
            Kind::Partial2subset => ReductionKind::PartialToSubset,
            Kind::Kcolor2subset => ReductionKind::KColorToSubset,
            Kind::Star2scfc => ReductionKind::StarToScfc,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Path,
    Cycle,
    Star,
    Complete,
    RandomTree,
    Gnp,
    AllConnected,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleArg {
    Quick,
    Full,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            if let Some(Error::BudgetExceeded { lower, upper, .. }) = e.downcast_ref::<Error>() {
                println!("inconclusive bounds=[{lower},{upper}]");
                return ExitCode::from(3);
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    parse_graph(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn read_pairs(path: &Path) -> anyhow::Result<PairSet> {
    parse_pairs(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Verify { graph, coloring, mode, pairs } => {
            let g = read_graph(&graph)?;
            let text = read(&coloring)?;
            let ctx = || format!("in {}", coloring.display());
            let report = match mode {
                VerifyMode::Cfc => verify::verify_cfc_edge(&g, &parse_coloring(&text).with_context(ctx)?)?,
                VerifyMode::Vcfc => {
                    let c: VertexColoring = parse_coloring(&text).with_context(ctx)?;
                    verify::verify_cfc_vertex(&g, &c)?
                }
                VerifyMode::Scfc => verify::verify_scfc(&g, &parse_coloring(&text).with_context(ctx)?)?,
                VerifyMode::ScfcSubset => {
                    let Some(pairs) = pairs else {
                        bail!("--pairs is required for scfc-subset");
                    };
                    let p = read_pairs(&pairs)?;
                    verify::verify_scfc_subset(&g, &parse_coloring(&text).with_context(ctx)?, &p)?
                }
            };
            Ok(print_verdict(&report))
        }
        Command::Solve { graph, mode, budget, out } => {
            let g = read_graph(&graph)?;
            let solver = Solver::with_budget(budget);
            let (value, witness) = match mode {
                SolveMode::Cfc => solver.cfc(&g).map(|s| (s.value, write_coloring(&s.witness)))?,
                SolveMode::Vcfc => solver.vcfc(&g).map(|s| (s.value, write_coloring(&s.witness)))?,
                SolveMode::Scfc => solver.scfc(&g).map(|s| (s.value, write_coloring(&s.witness)))?,
                SolveMode::Rc => solver.rc(&g).map(|s| (s.value, write_coloring(&s.witness)))?,
            };
            println!("value={value}");
            if let Some(out) = out {
                write(&out, &witness)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce { kind, cnf, graph, partial, pairs, k, out } => {
            let need = |p: Option<PathBuf>, flag: &str| {
                p.with_context(|| format!("--{flag} is required for {}", kind.reduction().name()))
            };
            let inst = match kind {
                Kind::Sat2partial => {
                    let path = need(cnf, "cnf")?;
                    let f = reduce::parse_dimacs_cnf(&read(&path)?).with_context(|| format!("in {}", path.display()))?;
                    reduce::reduce_3sat_to_partial2(&f)?
                }
                Kind::Partial2subset => {
                    let g = read_graph(&need(graph, "graph")?)?;
                    let assigned = parse_partial(&read(&need(partial, "partial")?)?)?;
                    let partial = PartialEdgeColoring::new(g.clone(), assigned)?;
                    reduce::reduce_partial2_to_subset(&g, &partial)?
                }
                Kind::Kcolor2subset => reduce::reduce_kcolor_to_subset(&read_graph(&need(graph, "graph")?)?, k)?,
                Kind::Star2scfc => {
                    let g = read_graph(&need(graph, "graph")?)?;
                    let p = match pairs {
                        Some(path) => read_pairs(&path)?,
                        None => PairSet::new(),
                    };
                    reduce::reduce_subset_star_to_scfc(&g, &p)?
                }
            };
            fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
            write(&out.join("graph.txt"), &write_graph(&inst.graph))?;
            write(&out.join("maps.txt"), &inst.maps.to_string())?;
            if !inst.pairs.is_empty() || kind.reduction() != ReductionKind::SatToPartial {
                write(&out.join("pairs.txt"), &write_pairs(&inst.pairs))?;
            }
            if let Some(p) = &inst.partial {
                write(&out.join("partial.txt"), &write_partial(&p.assigned))?;
            }
            println!("{}", inst.summary());
            Ok(ExitCode::SUCCESS)
        }
        Command::Extract { kind, graph, maps, coloring, partial, pairs, out } => {
            let g = read_graph(&graph)?;
            let maps = parse_maps(&read(&maps)?)?;
            let partial = partial.map(|p| read(&p).and_then(|t| Ok(parse_partial(&t)?))).transpose()?;
            let pairs = match pairs {
                Some(p) => read_pairs(&p)?,
                None => PairSet::new(),
            };
            let inst = ReductionInstance::from_parts(kind.reduction(), g, pairs, partial, maps)?;
            let c: EdgeColoring = parse_coloring(&read(&coloring)?).with_context(|| format!("in {}", coloring.display()))?;
            extract(&inst, kind, &c, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { family, n, p, seed, out } => {
            let family = match family {
                FamilyName::Path => Family::Path(n),
                FamilyName::Cycle => Family::Cycle(n),
                FamilyName::Star => Family::Star(n),
                FamilyName::Complete => Family::Complete(n),
                FamilyName::RandomTree => Family::RandomTree { n, seed },
                FamilyName::Gnp => Family::Gnp { n, p, seed },
                FamilyName::AllConnected => Family::AllConnected(n),
            };
            let graphs = generate::generate_family(&family)?;
            if let Family::AllConnected(_) = family {
                let mut count = 0;
                for (i, g) in graphs.enumerate() {
                    match &out {
                        Some(dir) => {
                            fs::create_dir_all(dir)?;
                            write(&dir.join(format!("g{i:07}.txt")), &write_graph(&g))?;
                        }
                        None => print!("# graph {i}\n{}", write_graph(&g)),
                    }
                    count += 1;
                }
                eprintln!("{count} graphs");
            } else {
                for g in graphs {
                    emit(out.as_deref(), &write_graph(&g))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest { scale, only } => {
            let scale = match scale {
                ScaleArg::Quick => Scale::Quick,
                ScaleArg::Full => Scale::Full,
            };
            let ids: Vec<String> = if only.is_empty() {
                selftest::CRITERIA.iter().map(|s| s.to_string()).collect()
            } else {
                only
            };
            if let Some(bad) = ids.iter().find(|id| !selftest::CRITERIA.contains(&id.as_str())) {
                bail!("unknown criterion {bad:?}");
            }
            let threads = std::env::var("CFCONN_THREADS")
                .ok()
                .and_then(|v| v.parse::<usize>().ok())
                .unwrap_or(0);
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
            let reports: Vec<_> = pool.install(|| {
                ids.par_iter()
                    .map(|id| selftest::run_criterion(id, scale).expect("checked above"))
                    .collect()
            });
            let mut all = true;
            for r in &reports {
                println!("{}", r.line());
                for f in &r.failures {
                    println!("    counterexample: {f}");
                }
                all &= r.passed;
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            println!("{passed}/{} criteria passed", reports.len());
            Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn print_verdict(report: &VerifyReport) -> ExitCode {
    match report.witness_pair {
        None => {
            println!("OK");
            println!("verdict=true witness=none");
            ExitCode::SUCCESS
        }
        Some((u, v)) => {
            println!("FAIL {u} {v}");
            println!("verdict=false witness={u},{v}");
            ExitCode::from(1)
        }
    }
}

fn extract(inst: &ReductionInstance, kind: Kind, c: &EdgeColoring, out: Option<&Path>) -> anyhow::Result<()> {
    match kind {
        Kind::Sat2partial => {
            let a = reduce::extract_sat_assignment(inst, c)?;
            let text: Vec<String> = a
                .iter()
                .enumerate()
                .map(|(i, &x)| if x { format!("{}", i + 1) } else { format!("-{}", i + 1) })
                .collect();
            emit(out, &format!("v {} 0\n", text.join(" ")))
        }
        Kind::Partial2subset => emit(out, &write_coloring(&reduce::extract_host_coloring(inst, c)?)),
        Kind::Kcolor2subset => emit(out, &write_coloring(&reduce::extract_vertex_coloring(inst, c)?)),
        Kind::Star2scfc => {
            let host_m = inst.maps.of(reduce::MapKind::HostEdge).count();
            let star = EdgeColoring::new(c.colors()[..host_m].to_vec(), c.k())?;
            emit(out, &write_coloring(&star))
        }
    }
}
