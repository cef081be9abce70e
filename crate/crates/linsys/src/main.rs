//! Command-line front end: analyze instances, verify known bounds,
//! search the lattice for extremal segment systems, and export drawings.
//!
//! Exit codes: 0 = success / all checks hold, 1 = a hard check was
//! violated (the counterexample is printed), 2 = unreadable or invalid
//! input.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use linsys::formats::{parse_linsys, parse_segsys, serialize_segsys};
use linsys::incidence::LinearSystem;
use linsys::levi::{levi_graph, levi_planarity_of};
use linsys::segment::{enumerate, Point, SearchParams, SegmentSystem};
use linsys::solvers::{transversal_number, two_packing_number, SolveResult, DEFAULT_NODE_BUDGET};
use linsys::svg::render_segments;
use linsys::theorems::{self, CheckRecord, Enforcement, Evidence, Quantities, CHECK_IDS};

#[derive(Parser)]
#[command(
    name = "linsys",
    version,
    about = "Exact invariants, incidence-graph certificates, and lattice-segment search \
             for finite linear systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the invariants of one instance.
    Analyze(AnalyzeArgs),
    /// Check every known bound against one instance.
    Verify(VerifyArgs),
    /// Enumerate intersecting segment systems up to symmetry.
    Search(SearchArgs),
    /// Draw a segment system as an SVG file.
    ExportSvg(ExportArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Instance file (`linsys 1` or `segsys 1` format).
    path: PathBuf,
    /// Emit one `key<TAB>value` line per quantity, in a fixed order:
    /// format, points, lines, uniform, intersecting, max_degree, tau,
    /// tau_witness, nu2, nu2_witness, levi_vertices, levi_edges,
    /// levi_girth, levi_planar.
    #[arg(long)]
    machine: bool,
    /// Also print the incidence graph as a sorted edge list.
    #[arg(long)]
    dump_levi: bool,
    /// Node budget for the exact solvers; past it, values degrade to
    /// certified intervals.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance file (`linsys 1` or `segsys 1` format).
    path: PathBuf,
    /// Comma-separated check identifiers, or `all`.
    #[arg(long, default_value = "all")]
    theorems: String,
    /// Node budget for the exact solvers.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Replace the computed transversal number; plumbing test hook.
    #[arg(long, hide = true)]
    override_tau: Option<usize>,
}

#[derive(Args)]
struct SearchArgs {
    /// Points per segment.
    #[arg(long)]
    r: usize,
    /// Box half-width: every system must fit in a translate of
    /// [-B, B] x [-B, B].
    #[arg(long = "box")]
    box_half_width: i64,
    /// Emit systems with at most this many segments.
    #[arg(long, default_value_t = 6)]
    max_lines: usize,
    /// Only count systems containing a triangle.
    #[arg(long)]
    require_triangle: bool,
    /// Split the work into this many deterministic shards.
    #[arg(long)]
    shards: Option<usize>,
    /// Which shard to run (0-based; requires --shards).
    #[arg(long)]
    shard: Option<usize>,
    /// Stream one sorted encoding line per system to stdout and move
    /// the summary to stderr. Shard streams concatenated and re-sorted
    /// equal the unsharded stream byte for byte.
    #[arg(long)]
    list: bool,
    /// Write up to --sample extremal systems into this directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cap on extremal systems kept for --out.
    #[arg(long, default_value_t = 50)]
    sample: usize,
}

#[derive(Args)]
struct ExportArgs {
    /// Segment-system file (`segsys 1` format).
    path: PathBuf,
    /// Output SVG path.
    out: PathBuf,
    /// Highlight a minimum transversal in the drawing.
    #[arg(long)]
    show_transversal: bool,
    /// Node budget for the transversal solver.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Cmd::Analyze(args) => cmd_analyze(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Search(args) => cmd_search(args),
        Cmd::ExportSvg(args) => cmd_export_svg(args),
    }
}

fn fail(msg: impl Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

enum Input {
    Abstract(LinearSystem),
    Segments(SegmentSystem),
}

/// Reads a file and dispatches on its header line.
fn load_input(path: &Path) -> Result<Input, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let header = text
        .lines()
        .map(|l| l.find('#').map_or(l, |pos| &l[..pos]).trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let at = |e: &dyn Display| format!("{}: {e}", path.display());
    match header {
        "linsys 1" => {
            let ls = parse_linsys(&text).map_err(|e| at(&e))?;
            ls.validate().map_err(|e| at(&e))?;
            Ok(Input::Abstract(ls))
        }
        "segsys 1" => Ok(Input::Segments(parse_segsys(&text).map_err(|e| at(&e))?)),
        other => Err(format!(
            "{}: unrecognized header `{other}`; expected `linsys 1` or `segsys 1`",
            path.display()
        )),
    }
}

/// Exact value, or the certified interval when the budget ran out.
fn render_value<W>(result: &SolveResult<W>) -> String {
    let (lo, hi) = result.bounds();
    if lo == hi {
        lo.to_string()
    } else {
        format!("{lo}..{hi}")
    }
}

fn render_girth(girth: Option<usize>) -> String {
    match girth {
        Some(g) => g.to_string(),
        None => "none".into(),
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> ExitCode {
    let input = match load_input(&args.path) {
        Ok(input) => input,
        Err(e) => return fail(e),
    };
    let (format, ls) = match &input {
        Input::Abstract(ls) => ("linsys", ls.clone()),
        Input::Segments(ss) => ("segsys", ss.to_linear_system()),
    };
    let tau = transversal_number(&ls, args.budget);
    let nu2 = two_packing_number(&ls, args.budget);
    let levi = levi_planarity_of(&ls);

    let uniform = match ls.uniformity() {
        Some(r) => r.to_string(),
        None => "none".into(),
    };
    let tau_witness = tau
        .witness()
        .iter()
        .cloned()
        .collect::<Vec<_>>()
        .join("; ");
    let nu2_witness = nu2
        .witness()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");

    let rows: Vec<(&str, String)> = vec![
        ("format", format.into()),
        ("points", ls.point_count().to_string()),
        ("lines", ls.line_count().to_string()),
        ("uniform", uniform),
        ("intersecting", ls.is_intersecting().to_string()),
        ("max_degree", ls.max_degree().to_string()),
        ("tau", render_value(&tau)),
        ("tau_witness", tau_witness),
        ("nu2", render_value(&nu2)),
        ("nu2_witness", nu2_witness),
        ("levi_vertices", levi.vertex_count.to_string()),
        ("levi_edges", levi.edge_count.to_string()),
        ("levi_girth", render_girth(levi.girth)),
        ("levi_planar", levi.planar.to_string()),
    ];

    if args.machine {
        for (key, value) in &rows {
            println!("{key}\t{value}");
        }
        if args.dump_levi {
            for edge in levi_graph(&ls).to_edge_list_string().lines() {
                println!("levi_edge\t{edge}");
            }
        }
    } else {
        for (key, value) in &rows {
            println!("{key:<13} {value}");
        }
        if args.dump_levi {
            println!();
            println!("incidence graph edges:");
            print!("{}", levi_graph(&ls).to_edge_list_string());
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let selected: Option<BTreeSet<&str>> = if args.theorems == "all" {
        None
    } else {
        let mut set = BTreeSet::new();
        for id in args.theorems.split(',') {
            let id = id.trim();
            if !CHECK_IDS.contains(&id) {
                return fail(format!(
                    "unknown check `{id}`; valid identifiers: {}",
                    CHECK_IDS.join(", ")
                ));
            }
            set.insert(id);
        }
        Some(set)
    };

    let input = match load_input(&args.path) {
        Ok(input) => input,
        Err(e) => return fail(e),
    };
    let (mut report, evidence_desc) = match &input {
        Input::Abstract(ls) => {
            let evidence = if levi_planarity_of(ls).planar {
                Evidence::LeviPlanar
            } else {
                Evidence::Unknown
            };
            let mut quantities = Quantities::compute(ls, args.budget);
            if let Some(tau) = args.override_tau {
                quantities.override_tau(tau);
            }
            let desc = match evidence {
                Evidence::LeviPlanar => "planar incidence graph (heuristic)",
                _ => "none",
            };
            (theorems::abstract_report(&quantities, evidence), desc)
        }
        Input::Segments(ss) => {
            let mut quantities = Quantities::compute(&ss.to_linear_system(), args.budget);
            if let Some(tau) = args.override_tau {
                quantities.override_tau(tau);
            }
            (
                theorems::segment_report(ss, &quantities),
                "lattice realization",
            )
        }
    };
    if let Some(ids) = &selected {
        report.checks.retain(|c| ids.contains(c.id));
    }

    println!("straight-line evidence: {evidence_desc}");
    for check in &report.checks {
        print_check(check);
    }
    let violations = report.violations().count();
    println!(
        "{} checks, {} applicable, {} violated",
        report.checks.len(),
        report.checks.iter().filter(|c| c.applicable).count(),
        violations
    );
    if violations > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn print_check(check: &CheckRecord) {
    let status = if check.is_violation() {
        "VIOLATED"
    } else if !check.applicable {
        "skip"
    } else {
        match (check.holds, check.enforcement) {
            (Some(true), _) => "ok",
            (Some(false), _) => "ADVISORY",
            (None, Enforcement::Hard) => "undecided",
            (None, Enforcement::Advisory) => "note",
        }
    };
    let details = check
        .details
        .iter()
        .map(|(key, value)| format!("{key}={value}"))
        .collect::<Vec<_>>()
        .join(" ");
    println!("{status:<9} {id:<24} {details}", id = check.id);
    if let Some(witness) = &check.witness {
        println!("          - counterexample: {witness}");
    }
    for note in &check.notes {
        println!("          - {note}");
    }
}

fn encode_line(ss: &SegmentSystem) -> String {
    ss.encoding()
        .iter()
        .map(|(dx, dy, bx, by)| format!("{dx},{dy},{bx},{by}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_search(args: SearchArgs) -> ExitCode {
    if args.r < 2 {
        return fail("--r must be at least 2");
    }
    let shard = match (args.shards, args.shard) {
        (None, None) => None,
        (Some(n), Some(i)) if n >= 1 && i < n => Some((n, i)),
        (Some(_), Some(_)) => return fail("--shard must be below --shards"),
        _ => return fail("--shards and --shard must be given together"),
    };
    let params = SearchParams {
        r: args.r,
        max_lines: args.max_lines,
        box_half_width: args.box_half_width,
        shard,
        require_triangle: args.require_triangle,
    };

    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    let mut best = 0usize;
    let mut samples: Vec<SegmentSystem> = Vec::new();
    let mut listing: Vec<String> = Vec::new();
    enumerate(&params, |ss| {
        let n = ss.line_count();
        *counts.entry(n).or_insert(0) += 1;
        if n > best {
            best = n;
            samples.clear();
        }
        if n == best && samples.len() < args.sample {
            samples.push(ss.clone());
        }
        if args.list {
            listing.push(encode_line(ss));
        }
    });

    if args.list {
        listing.sort();
        for line in &listing {
            println!("{line}");
        }
    }

    // In list mode the summary moves to stderr so stdout stays a pure,
    // mergeable stream.
    let mut summary = String::new();
    summary.push_str(&format!(
        "search r={} box={} max-lines={} require-triangle={}\n",
        args.r, args.box_half_width, args.max_lines, args.require_triangle
    ));
    if let Some((n, i)) = shard {
        summary.push_str(&format!("shard {i}/{n}\n"));
    }
    let total: u64 = counts.values().sum();
    for (size, count) in &counts {
        summary.push_str(&format!("count {size} {count}\n"));
    }
    summary.push_str(&format!("classes {total}\n"));
    match counts.keys().next_back() {
        Some(size) => summary.push_str(&format!("best {size}\n")),
        None => summary.push_str("best none\n"),
    }
    if args.list {
        eprint!("{summary}");
    } else {
        print!("{summary}");
    }

    if let Some(dir) = &args.out {
        if let Err(e) = fs::create_dir_all(dir) {
            return fail(format!("{}: {e}", dir.display()));
        }
        for (i, ss) in samples.iter().enumerate() {
            let path = dir.join(format!("extremal-{i:03}.segsys"));
            if let Err(e) = fs::write(&path, serialize_segsys(ss)) {
                return fail(format!("{}: {e}", path.display()));
            }
        }
        let msg = format!(
            "wrote {} extremal system(s) to {}",
            samples.len(),
            dir.display()
        );
        if args.list {
            eprintln!("{msg}");
        } else {
            println!("{msg}");
        }
    }
    ExitCode::SUCCESS
}

fn cmd_export_svg(args: ExportArgs) -> ExitCode {
    let ss = match load_input(&args.path) {
        Ok(Input::Segments(ss)) => ss,
        Ok(Input::Abstract(_)) => {
            return fail(format!(
                "{}: abstract systems have no coordinates to draw; \
                 provide a `segsys 1` file",
                args.path.display()
            ))
        }
        Err(e) => return fail(e),
    };
    let highlight: Vec<Point> = if args.show_transversal {
        let tau = transversal_number(&ss.to_linear_system(), args.budget);
        tau.witness()
            .iter()
            .filter_map(|token| {
                let (x, y) = token.split_once(',')?;
                Some((x.parse().ok()?, y.parse().ok()?))
            })
            .collect()
    } else {
        Vec::new()
    };
    let svg = render_segments(&ss, &highlight);
    if let Err(e) = fs::write(&args.out, &svg) {
        return fail(format!("{}: {e}", args.out.display()));
    }
    println!(
        "wrote {} ({} segments, {} points)",
        args.out.display(),
        ss.line_count(),
        ss.points().len()
    );
    ExitCode::SUCCESS
}
