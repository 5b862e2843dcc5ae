//! `ic` — interval edge colorings of complete graphs and hypercubes.
//!
//! Exit codes: 0 success/feasible, 1 verification failure, 2
//! infeasible or missing prerequisite, 3 unknown/budget exhausted,
//! 4 bad input.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use ic_core::bounds::{upper_bound_max_t, BoundReport};
use ic_core::cert::{Certificate, CertificateError, CertificateStore, Provenance};
use ic_core::coloring::{verify_interval, EdgeColoring, IntervalVerdict};
use ic_core::construct::{
    build_complete_tower, build_hypercube_tower, canonical_complete_coloring, dimension_coloring,
    spectrum_colorings, ConstructError, FactorizationParams,
};
use ic_core::export::{to_csv, to_dot};
use ic_core::graph::{Family, Graph};
use ic_core::report::{family_report, render_csv, render_json, render_markdown, ReportFamily};
use ic_core::search::{
    exact_max_t, exact_max_t_from, exact_min_t, find_interval_coloring, make_certificate,
    MaxPaletteResult, MinPaletteResult, SearchBudget, SearchOptions, SearchStatus,
};
use std::path::{Path, PathBuf};
use std::time::Duration;

const EXIT_VERIFY_FAIL: i32 = 1;
const EXIT_INFEASIBLE: i32 = 2;
const EXIT_UNKNOWN: i32 = 3;
const EXIT_BAD_INPUT: i32 = 4;

#[derive(Parser)]
#[command(
    name = "ic",
    version,
    about = "Interval edge colorings of complete graphs and hypercubes",
    long_about = "Construct interval edge colorings of complete graphs K_{2n} and hypercubes \
                  Q_n, verify the interval property, realize every feasible palette size, \
                  compute bound ceilings, and decide feasibility exactly with a backtracking \
                  oracle at desk scale."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Complete,
    Hypercube,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Canonical,
    Dimension,
    Tower,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColoringFormat {
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundsFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Markdown,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Down,
    Up,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Wall-clock limit in seconds (default: IC_BUDGET_SECS or 30)
    #[arg(long)]
    budget_secs: Option<u64>,
    /// Search node limit (default: 100000000)
    #[arg(long)]
    budget_nodes: Option<u64>,
}

impl BudgetArgs {
    fn resolve(&self) -> SearchBudget {
        let secs = self
            .budget_secs
            .or_else(|| {
                std::env::var("IC_BUDGET_SECS")
                    .ok()
                    .and_then(|s| s.parse().ok())
            })
            .unwrap_or(30);
        SearchBudget {
            wall_clock: Some(Duration::from_secs(secs)),
            node_limit: Some(self.budget_nodes.unwrap_or(SearchBudget::DEFAULT_NODE_LIMIT)),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph file (complete takes the vertex count, hypercube
    /// the dimension)
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        param: usize,
        /// Output path
        #[arg(long, short)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
    },
    /// Construct a verified interval coloring (complete takes n and
    /// colors K_{2n}; hypercube takes the dimension)
    Color {
        #[arg(value_enum)]
        family: FamilyArg,
        param: usize,
        #[arg(long, value_enum)]
        method: Method,
        /// Base certificate file for complete towers with odd part > 1
        #[arg(long)]
        base: Option<PathBuf>,
        /// Certificate store directory
        #[arg(long, default_value = "certs")]
        store: PathBuf,
        /// Coloring output path
        #[arg(long, short)]
        out: PathBuf,
        /// Also write the graph file here
        #[arg(long)]
        graph_out: Option<PathBuf>,
        /// Also seal the coloring as a certificate (construction
        /// provenance, with the doubling trace for towers)
        #[arg(long)]
        cert_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: ColoringFormat,
    },
    /// Verify that a coloring file is a valid interval coloring of a
    /// graph file
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
    },
    /// Evaluate the palette upper-bound rules for a graph file
    Bounds {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: BoundsFormat,
    },
    /// Decide interval t-colorability, or sweep for the exact
    /// minimum/maximum feasible palette
    Search {
        graph: PathBuf,
        /// Decide feasibility for this palette size
        #[arg(long, group = "query")]
        t: Option<u32>,
        /// Sweep for the exact minimum feasible palette
        #[arg(long = "exact-w", group = "query")]
        exact_min: bool,
        /// Sweep for the exact maximum feasible palette
        #[arg(long = "exact-W", group = "query")]
        exact_max: bool,
        /// Sweep direction for --exact-W
        #[arg(long, value_enum, default_value = "down")]
        direction: Direction,
        /// Certificate store (for --direction up tower bases)
        #[arg(long, default_value = "certs")]
        store: PathBuf,
        /// Where to write the feasibility witness
        #[arg(long)]
        witness_out: Option<PathBuf>,
        /// Disable first-edge symmetry breaking (audit runs)
        #[arg(long)]
        no_symmetry_breaking: bool,
        /// Print solver statistics as JSON to stderr
        #[arg(long)]
        stats: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Write one coloring file per feasible palette size in
    /// [degree, t_max], downshifting from the given coloring
    Spectrum {
        graph: PathBuf,
        coloring: PathBuf,
        /// Output directory
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Certificate store operations
    Cert {
        #[command(subcommand)]
        action: CertAction,
    },
    /// Tabulate degree, palette bounds, and construction results over a
    /// parameter range (e.g. `report hypercube 1..5`)
    Report {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Inclusive range `lo..hi`, or a single value
        range: String,
        #[arg(long, value_enum, default_value = "markdown")]
        format: ReportFormat,
        #[arg(long, default_value = "certs")]
        store: PathBuf,
        /// Confirm each construction with the search oracle
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum CertAction {
    /// Search for a coloring and store it (complete takes p and targets
    /// K_{2p}; hypercube takes the dimension)
    Make {
        #[arg(value_enum)]
        family: FamilyArg,
        param: usize,
        /// Target palette size
        #[arg(long)]
        t: u32,
        #[arg(long, default_value = "certs")]
        store: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Re-verify a certificate file and add it to the store
    Add {
        file: PathBuf,
        #[arg(long, default_value = "certs")]
        store: PathBuf,
    },
    /// List stored certificates, quarantining any that fail
    /// re-verification
    List {
        #[arg(long, default_value = "certs")]
        store: PathBuf,
    },
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    fn bad_input(message: impl Into<String>) -> Self {
        CliError::new(EXIT_BAD_INPUT, message)
    }
}

type CliResult = Result<(), CliError>;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            print!("{err}");
            std::process::exit(0);
        }
        Err(err) => {
            eprint!("{err}");
            std::process::exit(EXIT_BAD_INPUT);
        }
    };
    match run(cli) {
        Ok(()) => {}
        Err(err) => {
            eprintln!("error: {}", err.message);
            std::process::exit(err.code);
        }
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Gen {
            family,
            param,
            out,
            format,
        } => cmd_gen(family, param, &out, format),
        Command::Color {
            family,
            param,
            method,
            base,
            store,
            out,
            graph_out,
            cert_out,
            format,
        } => cmd_color(
            family,
            param,
            method,
            base.as_deref(),
            &store,
            &out,
            graph_out.as_deref(),
            cert_out.as_deref(),
            format,
        ),
        Command::Verify { graph, coloring } => cmd_verify(&graph, &coloring),
        Command::Bounds { graph, format } => cmd_bounds(&graph, format),
        Command::Search {
            graph,
            t,
            exact_min,
            exact_max,
            direction,
            store,
            witness_out,
            no_symmetry_breaking,
            stats,
            budget,
        } => cmd_search(
            &graph,
            t,
            exact_min,
            exact_max,
            direction,
            &store,
            witness_out.as_deref(),
            no_symmetry_breaking,
            stats,
            budget,
        ),
        Command::Spectrum {
            graph,
            coloring,
            out_dir,
        } => cmd_spectrum(&graph, &coloring, &out_dir),
        Command::Cert { action } => match action {
            CertAction::Make {
                family,
                param,
                t,
                store,
                budget,
            } => cmd_cert_make(family, param, t, &store, budget),
            CertAction::Add { file, store } => cmd_cert_add(&file, &store),
            CertAction::List { store } => cmd_cert_list(&store),
        },
        Command::Report {
            family,
            range,
            format,
            store,
            oracle,
            budget,
        } => cmd_report(family, &range, format, &store, oracle, budget),
    }
}

fn write_file(path: &Path, contents: &str) -> CliResult {
    std::fs::write(path, contents)
        .map_err(|e| CliError::bad_input(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::bad_input(format!("cannot read {}: {e}", path.display())))?;
    Graph::from_json(&text)
        .map_err(|e| CliError::bad_input(format!("{}: {e}", path.display())))
}

fn load_coloring(path: &Path, graph: &Graph) -> Result<EdgeColoring, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::bad_input(format!("cannot read {}: {e}", path.display())))?;
    EdgeColoring::from_json(&text, graph)
        .map_err(|e| CliError::bad_input(format!("{}: {e}", path.display())))
}

fn open_store(dir: &Path) -> Result<CertificateStore, CliError> {
    CertificateStore::open(dir)
        .map_err(|e| CliError::bad_input(format!("cannot open store {}: {e}", dir.display())))
}

fn cmd_gen(family: FamilyArg, param: usize, out: &Path, format: GraphFormat) -> CliResult {
    let graph = match family {
        FamilyArg::Complete => Graph::complete(param),
        FamilyArg::Hypercube => Graph::hypercube(param),
    }
    .map_err(|e| CliError::bad_input(e.to_string()))?;
    let contents = match format {
        GraphFormat::Json => graph.to_json(),
        GraphFormat::Dot => to_dot(&graph, None).expect("no coloring to mismatch"),
    };
    write_file(out, &contents)?;
    println!(
        "wrote {} ({} vertices, {} edges) to {}",
        graph.family(),
        graph.vertex_count(),
        graph.edge_count(),
        out.display()
    );
    Ok(())
}

/// Resolves the base coloring for a complete tower with odd part `p`:
/// K_2 is built in, anything else comes from an explicit certificate or
/// the store.
fn tower_base(
    odd_part: usize,
    base: Option<&Path>,
    store_dir: &Path,
) -> Result<(Graph, EdgeColoring, String), CliError> {
    if let Some(path) = base {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::bad_input(format!("cannot read {}: {e}", path.display())))?;
        let cert = Certificate::from_json(&text)
            .map_err(|e| CliError::bad_input(format!("{}: {e}", path.display())))?;
        let (graph, coloring) = cert
            .reverify()
            .map_err(|e| CliError::new(EXIT_VERIFY_FAIL, format!("{}: {e}", path.display())))?;
        if graph.family() != (Family::Complete { vertices: 2 * odd_part }) {
            return Err(CliError::bad_input(format!(
                "base certificate is for {}, expected K_{}",
                graph.family(),
                2 * odd_part
            )));
        }
        return Ok((graph, coloring, format!("certificate {}", path.display())));
    }
    if odd_part == 1 {
        let (graph, coloring) =
            canonical_complete_coloring(1).map_err(|e| CliError::bad_input(e.to_string()))?;
        return Ok((graph, coloring, "built-in K_2 base".to_string()));
    }
    let store = open_store(store_dir)?;
    let found = store
        .find_complete_base(odd_part)
        .map_err(|e| CliError::bad_input(format!("store error: {e}")))?;
    match found {
        Some(cert) => {
            let (graph, coloring) = cert.reverify().map_err(|e| {
                CliError::new(EXIT_VERIFY_FAIL, format!("stored base certificate: {e}"))
            })?;
            Ok((graph, coloring, format!("stored certificate {}", &cert.content_id()[..12])))
        }
        None => Err(CliError::new(
            EXIT_INFEASIBLE,
            format!(
                "no base certificate for K_{} (odd part {odd_part}); run `ic cert make complete \
                 {odd_part} --t {}` first, or pass --base",
                2 * odd_part,
                3 * odd_part - 2
            ),
        )),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_color(
    family: FamilyArg,
    param: usize,
    method: Method,
    base: Option<&Path>,
    store: &Path,
    out: &Path,
    graph_out: Option<&Path>,
    cert_out: Option<&Path>,
    format: ColoringFormat,
) -> CliResult {
    if param == 0 {
        return Err(CliError::bad_input("parameter must be at least 1"));
    }
    let construct_err = |e: ConstructError| CliError::bad_input(e.to_string());
    let (graph, coloring, trace, floor_label, floor) = match (family, method) {
        (FamilyArg::Complete, Method::Canonical) => {
            let (g, c) = canonical_complete_coloring(param).map_err(construct_err)?;
            let floor = (2 * param - 1) as u32;
            (g, c, Vec::new(), "min-palette formula 2n-1", floor)
        }
        (FamilyArg::Complete, Method::Tower) => {
            let params = FactorizationParams::of(param).map_err(construct_err)?;
            let (base_graph, base_coloring, base_desc) =
                tower_base(params.odd_part, base, store)?;
            let (g, c, trace) =
                build_complete_tower(param, &base_graph, &base_coloring).map_err(construct_err)?;
            eprintln!("tower base: {base_desc}");
            (g, c, trace, "doubling formula 4n-2-p-q", params.tower_t_from_least_base())
        }
        (FamilyArg::Hypercube, Method::Dimension) => {
            let (g, c) = dimension_coloring(param).map_err(construct_err)?;
            (g, c, Vec::new(), "min-palette formula n", param as u32)
        }
        (FamilyArg::Hypercube, Method::Tower) => {
            let (g, c, trace) = build_hypercube_tower(param).map_err(construct_err)?;
            let floor = (param * (param + 1) / 2) as u32;
            (g, c, trace, "doubling formula n(n+1)/2", floor)
        }
        (FamilyArg::Complete, Method::Dimension) => {
            return Err(CliError::bad_input(
                "method `dimension` applies to hypercubes only",
            ))
        }
        (FamilyArg::Hypercube, Method::Canonical) => {
            return Err(CliError::bad_input(
                "method `canonical` applies to complete graphs only",
            ))
        }
    };

    // Self-check before anything is written.
    let verdict = verify_interval(&graph, &coloring)
        .map_err(|e| CliError::new(EXIT_VERIFY_FAIL, e.to_string()))?;
    if !verdict.is_ok() {
        return Err(CliError::new(
            EXIT_VERIFY_FAIL,
            format!("construction failed self-verification: {verdict}"),
        ));
    }

    let contents = match format {
        ColoringFormat::Json => coloring.to_json(),
        ColoringFormat::Dot => to_dot(&graph, Some(&coloring)).expect("coloring is bound"),
        ColoringFormat::Csv => to_csv(&graph, &coloring).expect("coloring is bound"),
    };
    write_file(out, &contents)?;
    if let Some(path) = graph_out {
        write_file(path, &graph.to_json())?;
    }
    if let Some(path) = cert_out {
        let cert = Certificate::seal(&graph, &coloring, Provenance::Construction { trace })
            .map_err(|e| CliError::new(EXIT_VERIFY_FAIL, e.to_string()))?;
        write_file(path, &cert.to_json())?;
    }
    let relation = if coloring.t() == floor { "matches" } else { "differs from" };
    println!(
        "{}: interval {}-coloring verified; {relation} {floor_label} = {floor}; wrote {}",
        graph.family(),
        coloring.t(),
        out.display()
    );
    Ok(())
}

fn cmd_verify(graph_path: &Path, coloring_path: &Path) -> CliResult {
    let graph = load_graph(graph_path)?;
    let coloring = load_coloring(coloring_path, &graph)?;
    let verdict = verify_interval(&graph, &coloring)
        .map_err(|e| CliError::bad_input(e.to_string()))?;
    match verdict {
        IntervalVerdict::Ok => {
            println!(
                "ok: interval {}-coloring of {} ({} edges)",
                coloring.t(),
                graph.family(),
                graph.edge_count()
            );
            Ok(())
        }
        failure => Err(CliError::new(EXIT_VERIFY_FAIL, failure.to_string())),
    }
}

fn render_bounds_table(report: &BoundReport) -> String {
    let mut out = String::from("rule | applicable | value\n");
    for entry in &report.entries {
        out.push_str(&format!(
            "{} | {} | {}\n",
            entry.rule,
            if entry.applicable { "yes" } else { "no" },
            entry.value.map_or("-".to_string(), |v| v.to_string())
        ));
    }
    match report.upper_max_t {
        Some(upper) => out.push_str(&format!(
            "upper bound on max t: {upper} (conditional on the graph being interval-colorable)\n"
        )),
        None => out.push_str("no applicable bound (graph has no edges)\n"),
    }
    out
}

fn cmd_bounds(graph_path: &Path, format: BoundsFormat) -> CliResult {
    let graph = load_graph(graph_path)?;
    let report = upper_bound_max_t(&graph.structural_profile());
    match format {
        BoundsFormat::Table => print!("{}", render_bounds_table(&report)),
        BoundsFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("bound report serializes")
        ),
    }
    Ok(())
}

fn write_witness(
    witness: &EdgeColoring,
    requested: Option<&Path>,
    t: u32,
) -> Result<PathBuf, CliError> {
    let path = requested
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from(format!("witness-t{t}.json")));
    write_file(&path, &witness.to_json())?;
    Ok(path)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    graph_path: &Path,
    t: Option<u32>,
    exact_min: bool,
    exact_max: bool,
    direction: Direction,
    store: &Path,
    witness_out: Option<&Path>,
    no_symmetry_breaking: bool,
    stats: bool,
    budget: BudgetArgs,
) -> CliResult {
    let graph = load_graph(graph_path)?;
    if graph.edge_count() == 0 {
        return Err(CliError::bad_input("graph has no edges"));
    }
    let options = SearchOptions {
        budget: budget.resolve(),
        symmetry_breaking: !no_symmetry_breaking,
    };

    if let Some(t) = t {
        if t == 0 {
            return Err(CliError::bad_input("palette size must be at least 1"));
        }
        let outcome = find_interval_coloring(&graph, t, &options);
        if stats {
            eprintln!("{}", outcome.stats_json());
        }
        return match outcome.status {
            SearchStatus::Feasible(witness) => {
                let path = write_witness(&witness, witness_out, t)?;
                println!("feasible: wrote witness to {}", path.display());
                Ok(())
            }
            SearchStatus::Infeasible => Err(CliError::new(
                EXIT_INFEASIBLE,
                format!("no interval {t}-coloring exists (search space exhausted)"),
            )),
            SearchStatus::Unknown => Err(CliError::new(
                EXIT_UNKNOWN,
                format!("undecided at t={t}: budget exhausted after {} nodes", outcome.nodes),
            )),
        };
    }

    if exact_min {
        let report = exact_min_t(&graph, &options);
        if stats {
            for (t, status) in &report.queries {
                eprintln!("t={t}: {status}");
            }
            eprintln!(
                "{{\"nodes\":{},\"elapsed_ms\":{}}}",
                report.nodes,
                report.elapsed.as_millis()
            );
        }
        return match report.result {
            MinPaletteResult::Exact { value, witness } => {
                if witness_out.is_some() {
                    write_witness(&witness, witness_out, value)?;
                }
                println!("{value}");
                Ok(())
            }
            MinPaletteResult::NotColorable => Err(CliError::new(
                EXIT_INFEASIBLE,
                "not interval-colorable: every palette up to the bound ceiling is infeasible",
            )),
            MinPaletteResult::Unknown { first_unresolved } => Err(CliError::new(
                EXIT_UNKNOWN,
                format!("budget exhausted at t={first_unresolved} before a decision"),
            )),
        };
    }

    if exact_max {
        let report = match direction {
            Direction::Down => exact_max_t(&graph, &options),
            Direction::Up => {
                let start = construction_for(&graph, store)?;
                exact_max_t_from(&graph, &start, &options)
            }
        };
        if stats {
            for (t, status) in &report.queries {
                eprintln!("t={t}: {status}");
            }
            eprintln!(
                "{{\"nodes\":{},\"elapsed_ms\":{}}}",
                report.nodes,
                report.elapsed.as_millis()
            );
        }
        return match report.result {
            MaxPaletteResult::Exact { value, witness } => {
                if witness_out.is_some() {
                    write_witness(&witness, witness_out, value)?;
                }
                println!("{value}");
                Ok(())
            }
            MaxPaletteResult::NotColorable => Err(CliError::new(
                EXIT_INFEASIBLE,
                "not interval-colorable: every palette up to the bound ceiling is infeasible",
            )),
            MaxPaletteResult::Bracket {
                best_feasible,
                highest_unresolved,
            } => Err(CliError::new(
                EXIT_UNKNOWN,
                match best_feasible {
                    Some(lo) => format!(
                        "bracket: feasible at {lo}, unresolved up to {highest_unresolved}"
                    ),
                    None => format!("bracket: nothing proved, unresolved up to {highest_unresolved}"),
                },
            )),
        };
    }

    Err(CliError::bad_input(
        "choose one of --t, --exact-w, --exact-W",
    ))
}

/// Best construction coloring for a family-tagged graph, used as the
/// starting point of upward max-palette sweeps.
fn construction_for(graph: &Graph, store: &Path) -> Result<EdgeColoring, CliError> {
    match graph.family() {
        Family::Hypercube { dimension } => {
            let (_, coloring, _) = build_hypercube_tower(dimension)
                .map_err(|e| CliError::bad_input(e.to_string()))?;
            Ok(coloring)
        }
        Family::Complete { vertices } if vertices % 2 == 0 => {
            let n = vertices / 2;
            let params = FactorizationParams::of(n)
                .map_err(|e| CliError::bad_input(e.to_string()))?;
            let base = tower_base(params.odd_part, None, store);
            match base {
                Ok((base_graph, base_coloring, _)) => {
                    let (_, coloring, _) = build_complete_tower(n, &base_graph, &base_coloring)
                        .map_err(|e| CliError::bad_input(e.to_string()))?;
                    Ok(coloring)
                }
                // No stored base: start from the round-robin coloring.
                Err(err) if err.code == EXIT_INFEASIBLE => {
                    let (_, coloring) = canonical_complete_coloring(n)
                        .map_err(|e| CliError::bad_input(e.to_string()))?;
                    Ok(coloring)
                }
                Err(err) => Err(err),
            }
        }
        _ => Err(CliError::bad_input(
            "--direction up needs a construction, so the graph must be a generator-built \
             hypercube or even complete graph",
        )),
    }
}

fn cmd_spectrum(graph_path: &Path, coloring_path: &Path, out_dir: &Path) -> CliResult {
    let graph = load_graph(graph_path)?;
    let coloring = load_coloring(coloring_path, &graph)?;
    let all = spectrum_colorings(&graph, &coloring).map_err(|e| match e {
        ConstructError::NotRegular => CliError::bad_input(
            "spectrum realization by downshift applies to regular graphs only",
        ),
        ConstructError::BaseNotInterval(v) => CliError::new(
            EXIT_VERIFY_FAIL,
            format!("input coloring is not a valid interval coloring: {v}"),
        ),
        other => CliError::bad_input(other.to_string()),
    })?;
    std::fs::create_dir_all(out_dir)
        .map_err(|e| CliError::bad_input(format!("cannot create {}: {e}", out_dir.display())))?;
    for c in &all {
        let path = out_dir.join(format!("coloring-t{}.json", c.t()));
        write_file(&path, &c.to_json())?;
    }
    println!(
        "wrote {} colorings (t = {}..={}) to {}",
        all.len(),
        all.first().expect("nonempty").t(),
        all.last().expect("nonempty").t(),
        out_dir.display()
    );
    Ok(())
}

fn cmd_cert_make(
    family: FamilyArg,
    param: usize,
    t: u32,
    store_dir: &Path,
    budget: BudgetArgs,
) -> CliResult {
    if param == 0 {
        return Err(CliError::bad_input("parameter must be at least 1"));
    }
    let family = match family {
        FamilyArg::Complete => Family::Complete { vertices: 2 * param },
        FamilyArg::Hypercube => Family::Hypercube { dimension: param },
    };
    let options = SearchOptions {
        budget: budget.resolve(),
        symmetry_breaking: true,
    };
    let cert = make_certificate(family, t, &options).map_err(|e| match e {
        CertificateError::TargetInfeasible { t } => CliError::new(
            EXIT_INFEASIBLE,
            format!("no interval {t}-coloring of {family} exists"),
        ),
        CertificateError::BudgetExhausted { t } => CliError::new(
            EXIT_UNKNOWN,
            format!("budget exhausted before t={t} was decided for {family}"),
        ),
        other => CliError::bad_input(other.to_string()),
    })?;
    let store = open_store(store_dir)?;
    let (path, created) = store
        .add(&cert)
        .map_err(|e| CliError::bad_input(format!("store error: {e}")))?;
    println!(
        "{} certificate {} ({family}, t={t}) at {}",
        if created { "stored" } else { "already stored" },
        &cert.content_id()[..12],
        path.display()
    );
    Ok(())
}

fn cmd_cert_add(file: &Path, store_dir: &Path) -> CliResult {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::bad_input(format!("cannot read {}: {e}", file.display())))?;
    let cert = Certificate::from_json(&text)
        .map_err(|e| CliError::bad_input(format!("{}: {e}", file.display())))?;
    let store = open_store(store_dir)?;
    let (path, created) = store.add(&cert).map_err(|e| match e {
        CertificateError::Io(io) => CliError::bad_input(format!("store error: {io}")),
        verify_failure => CliError::new(EXIT_VERIFY_FAIL, verify_failure.to_string()),
    })?;
    println!(
        "{} certificate {} at {}",
        if created { "added" } else { "already present:" },
        &cert.content_id()[..12],
        path.display()
    );
    Ok(())
}

fn cmd_cert_list(store_dir: &Path) -> CliResult {
    let store = open_store(store_dir)?;
    let (valid, quarantined) = store
        .list()
        .map_err(|e| CliError::bad_input(format!("store error: {e}")))?;
    for record in &quarantined {
        eprintln!(
            "quarantined {}: {}",
            record.path.display(),
            record.reason
        );
    }
    if valid.is_empty() {
        println!("no certificates in {}", store_dir.display());
        return Ok(());
    }
    for cert in &valid {
        println!(
            "{} {} t={} provenance={} created_at={}",
            &cert.content_id()[..12],
            cert.family,
            cert.t,
            cert.provenance.kind(),
            cert.created_at_unix
        );
    }
    Ok(())
}

fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let invalid = || CliError::bad_input(format!("invalid range `{text}`, expected `lo..hi`"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| invalid())?;
        let hi: usize = hi.trim().parse().map_err(|_| invalid())?;
        if lo == 0 || hi < lo {
            return Err(invalid());
        }
        Ok((lo, hi))
    } else {
        let v: usize = text.trim().parse().map_err(|_| invalid())?;
        if v == 0 {
            return Err(invalid());
        }
        Ok((v, v))
    }
}

fn cmd_report(
    family: FamilyArg,
    range: &str,
    format: ReportFormat,
    store_dir: &Path,
    oracle: bool,
    budget: BudgetArgs,
) -> CliResult {
    let (lo, hi) = parse_range(range)?;
    let report_family = match family {
        FamilyArg::Complete => ReportFamily::Complete,
        FamilyArg::Hypercube => ReportFamily::Hypercube,
    };
    let store = open_store(store_dir)?;
    let options = SearchOptions {
        budget: budget.resolve(),
        symmetry_breaking: true,
    };
    let oracle_options = oracle.then_some(&options);
    let rows = family_report(report_family, lo, hi, Some(&store), oracle_options)
        .map_err(|e| CliError::bad_input(e.to_string()))?;
    match format {
        ReportFormat::Markdown => print!("{}", render_markdown(&rows)),
        ReportFormat::Csv => print!("{}", render_csv(&rows)),
        ReportFormat::Json => println!("{}", render_json(&rows)),
    }
    Ok(())
}
