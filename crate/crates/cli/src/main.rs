use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use epgt_core::classify::{classify_c4, classify_maximal_clique};
use epgt_core::coloring::{clique_color, monochromatic_cliques, verify_clique_coloring};
use epgt_core::constructions::{
    claw_witness, gallery, k2n_representation, random_b1_family, sun_representation,
};
use epgt_core::epgt::{intersection_graph, remark_suite, validate, Representation, ValidationMode};
use epgt_core::format::{parse_graph, parse_paths, write_graph, write_paths};
use epgt_core::graph::{self, chordless_4cycles, maximal_cliques, SimpleGraph};
use epgt_core::helly::{helly_violation_search, lemma_checks};
use epgt_core::render::{render_svg, RenderOptions};
use epgt_core::search::{
    find_representation_with_stats, k27_counting_check, SearchBounds, SearchOutcome,
};

const EXIT_FAIL: u8 = 1;
const EXIT_EXHAUSTED: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_FILE: u8 = 66;

#[derive(Parser)]
#[command(
    name = "epgt",
    version,
    about = "Paths on the triangular grid and their edge-intersection graphs"
)]
struct Cli {
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print a flat key=value block instead of the text report.
    #[arg(long, global = true)]
    kv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sun,
    K2n,
    ClawWitness,
    Gallery,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Build a representation and write it in path file format.
    Construct {
        kind: Kind,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Gallery entry name.
        #[arg(long)]
        name: Option<String>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value = "8x8")]
        window: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the intended graph (its intersection graph for gallery and random).
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Check bends and adjacency of a path file against a graph file.
    Validate {
        #[arg(long)]
        paths: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        max_bends: usize,
        /// Compare edge sets under the path ids instead of up to isomorphism.
        #[arg(long)]
        labeled: bool,
    },
    /// Classify maximal cliques (all of size >= 3, or the given members).
    ClassifyClique {
        #[arg(long)]
        paths: PathBuf,
        /// Comma-separated path indices in file order.
        #[arg(long, value_delimiter = ',')]
        members: Vec<usize>,
    },
    /// Classify chordless 4-cycles (all, or the given members in cyclic order).
    ClassifyC4 {
        #[arg(long)]
        paths: PathBuf,
        #[arg(long, value_delimiter = ',')]
        members: Vec<usize>,
    },
    /// Clique-color a family of paths with at most one bend.
    Color {
        #[arg(long)]
        paths: PathBuf,
        /// Show line colorings and recoloring events.
        #[arg(long)]
        explain: bool,
    },
    /// Look for 4-member families violating the Helly number 3.
    HellyCheck {
        #[arg(long, default_value = "4x4")]
        window: String,
        #[arg(long)]
        max_seg: usize,
        #[arg(long, default_value_t = 1)]
        max_bends: usize,
        /// Check the strong Helly number instead.
        #[arg(long)]
        strong: bool,
    },
    /// Search a window for a representation of a graph.
    Search {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        window: String,
        #[arg(long)]
        max_bends: usize,
        /// Seconds before giving up.
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive pairwise checks over one-bend paths in a window.
    Remarks {
        #[arg(long, default_value = "4x4")]
        window: String,
    },
    /// Draw a path file as SVG.
    Render {
        #[arg(long)]
        paths: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        no_grid: bool,
        #[arg(long)]
        no_labels: bool,
    },
    /// Contiguity checks for paths with at most two bends.
    Lemmas {
        #[arg(long, default_value = "5x5")]
        window: String,
    },
    /// Largest set of edge-disjoint common neighbours of two edge-disjoint hubs.
    K27Count {
        #[arg(long, default_value = "4x4")]
        window: String,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    File(String),
}

type Outcome = Result<u8, CliError>;

fn parse_window(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("window must look like WxH, got `{s}`"));
    let (w, h) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    let w = w.trim().parse().map_err(|_| bad())?;
    let h = h.trim().parse().map_err(|_| bad())?;
    Ok((w, h))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::File(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::File(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_paths(path: &Path) -> Result<Representation, CliError> {
    parse_paths(&read(path)?).map_err(|e| CliError::File(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<SimpleGraph, CliError> {
    parse_graph(&read(path)?).map_err(|e| CliError::File(format!("{}: {e}", path.display())))
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn verdict(ok: bool) -> u8 {
    if ok {
        0
    } else {
        EXIT_FAIL
    }
}

fn construct(
    kind: Kind,
    k: Option<usize>,
    n: Option<usize>,
    name: Option<&str>,
    (count, window, seed): (usize, &str, u64),
) -> Result<(Representation, SimpleGraph), CliError> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
    };
    let rep = match kind {
        Kind::Sun => {
            let k = need(k, "k")?;
            let rep = sun_representation(k).map_err(usage)?;
            return Ok((rep, graph::sun(k).map_err(usage)?));
        }
        Kind::K2n => {
            let n = need(n, "n")?;
            let rep = k2n_representation(n).map_err(usage)?;
            return Ok((rep, graph::complete_bipartite(2, n).map_err(usage)?));
        }
        Kind::ClawWitness => claw_witness(),
        Kind::Gallery => {
            let name = name.ok_or_else(|| CliError::Usage("missing --name".into()))?;
            gallery(name).map_err(usage)?
        }
        Kind::Random => {
            let (w, h) = parse_window(window)?;
            random_b1_family(count, w, h, seed).map_err(usage)?
        }
    };
    let g = intersection_graph(&rep);
    Ok((rep, g))
}

fn check_members(rep: &Representation, members: &[usize]) -> Result<(), CliError> {
    match members.iter().find(|&&m| m >= rep.len()) {
        Some(m) => Err(CliError::Usage(format!(
            "member {m} out of range for {} paths",
            rep.len()
        ))),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> Outcome {
    let kv = cli.kv;
    match cli.command {
        Command::Construct {
            kind,
            k,
            n,
            name,
            count,
            window,
            seed,
            output,
            graph_out,
        } => {
            let (rep, g) = construct(kind, k, n, name.as_deref(), (count, &window, seed))?;
            write_out(output.as_deref(), &write_paths(&rep))?;
            if let Some(p) = graph_out {
                write_out(Some(&p), &write_graph(&g))?;
            }
            if output.is_some() {
                let (rows, cols) = rep.rows_cols();
                eprintln!(
                    "wrote {} paths, bounding box {rows} rows x {cols} columns",
                    rep.len()
                );
            }
            Ok(0)
        }
        Command::Validate {
            paths,
            graph,
            max_bends,
            labeled,
        } => {
            let rep = load_paths(&paths)?;
            let g = load_graph(&graph)?;
            let mode = if labeled {
                ValidationMode::Labeled
            } else {
                ValidationMode::Unlabeled
            };
            let report = validate(&rep, &g, max_bends, mode);
            print!("{}", if kv { report.to_kv() } else { report.to_text() });
            Ok(verdict(report.passed()))
        }
        Command::ClassifyClique { paths, members } => {
            let rep = load_paths(&paths)?;
            check_members(&rep, &members)?;
            let cliques = if members.is_empty() {
                maximal_cliques(&intersection_graph(&rep))
                    .into_iter()
                    .filter(|c| c.len() >= 3)
                    .collect()
            } else {
                vec![members]
            };
            let mut ok = true;
            let mut out = String::new();
            for (i, c) in cliques.iter().enumerate() {
                let ids = c.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                let class = classify_maximal_clique(&rep, c);
                ok &= class.is_ok();
                let text = match &class {
                    Ok(cl) => cl.to_string(),
                    Err(e) => format!("error: {e}"),
                };
                if kv {
                    let _ = writeln!(out, "clique.{i}.members={ids}");
                    let _ = writeln!(
                        out,
                        "clique.{i}.class={}",
                        class.as_ref().map_or("error".into(), |c| c.name())
                    );
                } else {
                    let _ = writeln!(out, "clique {{{ids}}}: {text}");
                }
            }
            if kv {
                let _ = writeln!(out, "cliques={}", cliques.len());
            } else if cliques.is_empty() {
                out.push_str("no maximal clique with three or more paths\n");
            }
            print!("{out}");
            Ok(verdict(ok))
        }
        Command::ClassifyC4 { paths, members } => {
            let rep = load_paths(&paths)?;
            check_members(&rep, &members)?;
            let cycles: Vec<[usize; 4]> = if members.is_empty() {
                chordless_4cycles(&intersection_graph(&rep))
            } else {
                let m: [usize; 4] = members
                    .as_slice()
                    .try_into()
                    .map_err(|_| CliError::Usage("--members needs exactly four indices".into()))?;
                vec![m]
            };
            let mut ok = true;
            let mut out = String::new();
            for (i, c) in cycles.iter().enumerate() {
                let p = |j: usize| &rep.paths[c[j]];
                let class = classify_c4(p(0), p(1), p(2), p(3));
                ok &= class.is_ok();
                let ids = format!("{},{},{},{}", c[0], c[1], c[2], c[3]);
                if kv {
                    let _ = writeln!(out, "c4.{i}.members={ids}");
                    let _ = writeln!(
                        out,
                        "c4.{i}.class={}",
                        class.as_ref().map_or("error", |c| c.name())
                    );
                } else {
                    match &class {
                        Ok(cl) => writeln!(out, "c4 ({ids}): {cl}"),
                        Err(e) => writeln!(out, "c4 ({ids}): error: {e}"),
                    }
                    .expect("write to string");
                }
            }
            if kv {
                let _ = writeln!(out, "c4s={}", cycles.len());
            } else if cycles.is_empty() {
                out.push_str("no chordless 4-cycle\n");
            }
            print!("{out}");
            Ok(verdict(ok))
        }
        Command::Color { paths, explain } => {
            let rep = load_paths(&paths)?;
            let colored = match clique_color(&rep) {
                Ok(c) => c,
                Err(e) => {
                    println!("coloring failed: {e}");
                    return Ok(EXIT_FAIL);
                }
            };
            let ok = verify_clique_coloring(&rep, &colored.colors);
            let mut out = String::new();
            if kv {
                for (i, c) in colored.colors.iter().enumerate() {
                    let _ = writeln!(out, "color.P{i}={c}");
                }
                let _ = writeln!(out, "distinct_colors={}", colored.color_count());
                let _ = writeln!(out, "recolor_events={}", colored.events.len());
                let _ = writeln!(out, "verified={ok}");
            } else {
                if explain {
                    out.push_str(&colored.explain());
                } else {
                    for (i, c) in colored.colors.iter().enumerate() {
                        let _ = writeln!(out, "P{i} color {c}");
                    }
                }
                let _ = writeln!(out, "distinct colors: {}", colored.color_count());
                let _ = writeln!(out, "verifier: {}", if ok { "PASS" } else { "FAIL" });
                for c in monochromatic_cliques(&rep, &colored.colors) {
                    let _ = writeln!(out, "monochromatic maximal clique: {c:?}");
                }
            }
            print!("{out}");
            Ok(verdict(ok))
        }
        Command::HellyCheck {
            window,
            max_seg,
            max_bends,
            strong,
        } => {
            let (w, h) = parse_window(&window)?;
            let report = helly_violation_search(w, h, max_seg, max_bends).map_err(usage)?;
            let found = report.violation_found(strong);
            let witness = if strong {
                &report.strong_witness
            } else {
                &report.helly_witness
            };
            if kv {
                println!("families={}", report.families);
                println!("pool={}", report.pool_size);
                println!("violation={found}");
            } else {
                print!("{}", report.to_text());
            }
            if let Some(family) = witness.as_ref().filter(|_| found) {
                print!(
                    "{}",
                    write_paths(&Representation::identity_labeled(family.clone()))
                );
            }
            Ok(verdict(!found))
        }
        Command::Search {
            graph,
            window,
            max_bends,
            timeout,
            output,
        } => {
            let g = load_graph(&graph)?;
            let (w, h) = parse_window(&window)?;
            let mut bounds = SearchBounds::new(w, h, max_bends);
            if let Some(t) = timeout {
                let t = Duration::try_from_secs_f64(t).map_err(usage)?;
                bounds = bounds.with_timeout(t);
            }
            let (outcome, stats) = find_representation_with_stats(&g, &bounds).map_err(usage)?;
            let (name, code) = match &outcome {
                SearchOutcome::Found(_) => ("found", 0),
                SearchOutcome::Exhausted => ("exhausted", EXIT_EXHAUSTED),
                SearchOutcome::TimedOut => ("timeout", EXIT_TIMEOUT),
            };
            if kv {
                println!("outcome={name}");
                println!("pool={}", stats.pool_size);
                println!("nodes={}", stats.nodes);
            } else {
                eprintln!(
                    "{name}: {w}x{h} window, {} candidate paths, {} nodes",
                    stats.pool_size, stats.nodes
                );
            }
            if let SearchOutcome::Found(rep) = outcome {
                let text = write_paths(&rep);
                if output.is_some() || !kv {
                    write_out(output.as_deref(), &text)?;
                }
            }
            Ok(code)
        }
        Command::Remarks { window } => {
            let (w, h) = parse_window(&window)?;
            let report = remark_suite(w, h).map_err(usage)?;
            if kv {
                println!("paths={}", report.paths);
                println!("ordered_pairs={}", report.ordered_pairs);
                println!("all_ok={}", report.all_ok());
            } else {
                print!("{}", report.to_text());
            }
            Ok(verdict(report.all_ok()))
        }
        Command::Render {
            paths,
            output,
            no_grid,
            no_labels,
        } => {
            let rep = load_paths(&paths)?;
            let opts = RenderOptions {
                grid: !no_grid,
                labels: !no_labels,
                ..RenderOptions::default()
            };
            write_out(output.as_deref(), &render_svg(&rep, &opts))?;
            Ok(0)
        }
        Command::Lemmas { window } => {
            let (w, h) = parse_window(&window)?;
            let report = lemma_checks(w, h).map_err(usage)?;
            if kv {
                println!("paths_checked={}", report.paths_checked);
                println!("pairs_checked={}", report.pairs_checked);
                println!("all_ok={}", report.all_ok());
            } else {
                print!("{}", report.to_text());
            }
            Ok(verdict(report.all_ok()))
        }
        Command::K27Count { window } => {
            let (w, h) = parse_window(&window)?;
            let report = k27_counting_check(&SearchBounds::new(w, h, 1)).map_err(usage)?;
            if kv {
                println!("paths={}", report.paths);
                println!("hub_pairs={}", report.hub_pairs);
                println!("max_common={}", report.max_common);
            } else {
                print!("{}", report.to_text());
            }
            Ok(verdict(report.max_common <= 6))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::File(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_FILE)
        }
    }
}
