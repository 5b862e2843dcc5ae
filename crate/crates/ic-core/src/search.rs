//! Exhaustive backtracking search for interval t-colorings, plus the
//! sweeps that compute exact minimum/maximum feasible palettes and the
//! certificate factory.
//!
//! The solver decides feasibility outright at desk scale: `Infeasible` is
//! returned only after the (pruned but complete) search space is
//! exhausted, and a budget exit is always reported as `Unknown`. Every
//! `Feasible` witness is re-run through the interval verifier before it
//! is returned.

use crate::bounds::upper_bound_max_t;
use crate::cert::{Certificate, CertificateError, Provenance};
use crate::coloring::{verify_interval, EdgeColoring};
use crate::graph::{Family, Graph};
use std::time::{Duration, Instant};

/// Wall-clock and node limits. For graphs with more than 16 edges the
/// solver insists on at least one limit: if both are `None` it runs under
/// [`SearchBudget::default_desk`] instead of unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchBudget {
    pub wall_clock: Option<Duration>,
    pub node_limit: Option<u64>,
}

impl SearchBudget {
    pub const DEFAULT_WALL_CLOCK: Duration = Duration::from_secs(30);
    pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

    /// No limits at all. Only honored verbatim for graphs small enough
    /// (at most 16 edges) that exhaustion is guaranteed cheap.
    pub fn unlimited() -> Self {
        SearchBudget::default()
    }

    /// The CLI default: 30 s wall clock and 10^8 nodes.
    pub fn default_desk() -> Self {
        SearchBudget {
            wall_clock: Some(Self::DEFAULT_WALL_CLOCK),
            node_limit: Some(Self::DEFAULT_NODE_LIMIT),
        }
    }

    pub fn seconds(secs: u64) -> Self {
        SearchBudget {
            wall_clock: Some(Duration::from_secs(secs)),
            node_limit: None,
        }
    }

    pub fn nodes(limit: u64) -> Self {
        SearchBudget {
            wall_clock: None,
            node_limit: Some(limit),
        }
    }

    fn is_unlimited(&self) -> bool {
        self.wall_clock.is_none() && self.node_limit.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: SearchBudget,
    /// Restrict the first edge's colors to the lower half of the palette.
    /// Palette reversal (`c -> t+1-c`) maps interval colorings to
    /// interval colorings, so one representative per reversal orbit is
    /// enough; disable for audit runs.
    pub symmetry_breaking: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: SearchBudget::default_desk(),
            symmetry_breaking: true,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: SearchBudget) -> Self {
        SearchOptions {
            budget,
            ..SearchOptions::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchStatus {
    Feasible(EdgeColoring),
    Infeasible,
    Unknown,
}

impl SearchStatus {
    pub fn label(&self) -> &'static str {
        match self {
            SearchStatus::Feasible(_) => "feasible",
            SearchStatus::Infeasible => "infeasible",
            SearchStatus::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl SearchOutcome {
    pub fn stats_json(&self) -> String {
        format!(
            "{{\"nodes\":{},\"elapsed_ms\":{},\"status\":\"{}\"}}",
            self.nodes,
            self.elapsed.as_millis(),
            self.status.label()
        )
    }
}

enum Step {
    Found,
    Exhausted,
    Aborted,
}

struct Solver<'g> {
    edges: &'g [(usize, usize)],
    t: u32,
    order: Vec<usize>,
    colors: Vec<u32>,
    degree: Vec<u32>,
    fits: Vec<bool>,
    colored_at: Vec<u32>,
    lo: Vec<u32>,
    hi: Vec<u32>,
    used_words: Vec<u64>,
    words: usize,
    color_uses: Vec<u32>,
    distinct_used: u32,
    nodes: u64,
    node_limit: u64,
    deadline: Option<Instant>,
}

impl<'g> Solver<'g> {
    fn new(graph: &'g Graph, t: u32, budget: &SearchBudget, start: Instant) -> Self {
        let n = graph.vertex_count();
        let mut degree = vec![0u32; n];
        for &(u, v) in graph.edges() {
            degree[u] += 1;
            degree[v] += 1;
        }
        // Fixed decision order: edges whose endpoints have the largest
        // combined degree first, ties broken canonically. Deterministic,
        // so infeasibility exhaustions are reproducible.
        let mut order: Vec<usize> = (0..graph.edge_count()).collect();
        order.sort_by(|&a, &b| {
            let (au, av) = graph.edges()[a];
            let (bu, bv) = graph.edges()[b];
            let ka = degree[au] + degree[av];
            let kb = degree[bu] + degree[bv];
            kb.cmp(&ka).then(graph.edges()[a].cmp(&graph.edges()[b]))
        });
        let words = (t as usize + 63) / 64;
        let fits = degree.iter().map(|&d| d <= t).collect();
        Solver {
            edges: graph.edges(),
            t,
            order,
            colors: vec![0; graph.edge_count()],
            degree,
            fits,
            colored_at: vec![0; n],
            lo: vec![0; n],
            hi: vec![0; n],
            used_words: vec![0; n * words],
            words,
            color_uses: vec![0; t as usize],
            distinct_used: 0,
            nodes: 0,
            node_limit: budget.node_limit.unwrap_or(u64::MAX),
            deadline: budget.wall_clock.map(|d| start + d),
        }
    }

    #[inline]
    fn color_used_at(&self, v: usize, c: u32) -> bool {
        let bit = (c - 1) as usize;
        self.used_words[v * self.words + bit / 64] >> (bit % 64) & 1 == 1
    }

    #[inline]
    fn flip_color_at(&mut self, v: usize, c: u32) {
        let bit = (c - 1) as usize;
        self.used_words[v * self.words + bit / 64] ^= 1 << (bit % 64);
    }

    /// Running interval feasibility at one endpoint: the color must be
    /// new at `v` (properness), a window of width `degree(v)` covering
    /// the grown span must still fit inside `[1, t]`, and once the last
    /// incident edge is colored the span must equal the degree exactly.
    #[inline]
    fn admissible(&self, v: usize, c: u32) -> bool {
        if !self.fits[v] || self.color_used_at(v, c) {
            return false;
        }
        let (nlo, nhi) = if self.colored_at[v] == 0 {
            (c, c)
        } else {
            (self.lo[v].min(c), self.hi[v].max(c))
        };
        let span = nhi - nlo + 1;
        if span > self.degree[v] {
            return false;
        }
        if self.colored_at[v] + 1 == self.degree[v] && span != self.degree[v] {
            return false;
        }
        true
    }

    #[inline]
    fn assign(&mut self, edge: usize, u: usize, v: usize, c: u32) {
        self.colors[edge] = c;
        for w in [u, v] {
            self.flip_color_at(w, c);
            if self.colored_at[w] == 0 {
                self.lo[w] = c;
                self.hi[w] = c;
            } else {
                self.lo[w] = self.lo[w].min(c);
                self.hi[w] = self.hi[w].max(c);
            }
            self.colored_at[w] += 1;
        }
        let uses = &mut self.color_uses[(c - 1) as usize];
        *uses += 1;
        if *uses == 1 {
            self.distinct_used += 1;
        }
    }

    #[inline]
    fn unassign(&mut self, edge: usize, u: usize, v: usize, c: u32, saved: [u32; 4]) {
        self.colors[edge] = 0;
        self.flip_color_at(u, c);
        self.flip_color_at(v, c);
        self.colored_at[u] -= 1;
        self.colored_at[v] -= 1;
        self.lo[u] = saved[0];
        self.hi[u] = saved[1];
        self.lo[v] = saved[2];
        self.hi[v] = saved[3];
        let uses = &mut self.color_uses[(c - 1) as usize];
        *uses -= 1;
        if *uses == 0 {
            self.distinct_used -= 1;
        }
    }

    #[inline]
    fn over_budget(&self) -> bool {
        if self.nodes >= self.node_limit {
            return true;
        }
        // Wall clock sampled every 2^12 nodes.
        if self.nodes & 0xFFF == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return true;
                }
            }
        }
        false
    }

    fn dfs(&mut self, pos: usize, symmetry: bool) -> Step {
        if pos == self.edges.len() {
            return if self.distinct_used == self.t {
                Step::Found
            } else {
                Step::Exhausted
            };
        }
        // Each remaining edge can introduce at most one unused color.
        let remaining = (self.edges.len() - pos) as u32;
        if self.t - self.distinct_used > remaining {
            return Step::Exhausted;
        }
        let edge = self.order[pos];
        let (u, v) = self.edges[edge];
        let cap = if pos == 0 && symmetry {
            (self.t + 1) / 2
        } else {
            self.t
        };
        for c in 1..=cap {
            self.nodes += 1;
            if self.over_budget() {
                return Step::Aborted;
            }
            if !self.admissible(u, c) || !self.admissible(v, c) {
                continue;
            }
            let saved = [self.lo[u], self.hi[u], self.lo[v], self.hi[v]];
            self.assign(edge, u, v, c);
            match self.dfs(pos + 1, symmetry) {
                Step::Exhausted => self.unassign(edge, u, v, c, saved),
                found_or_aborted => return found_or_aborted,
            }
        }
        Step::Exhausted
    }
}

/// Decides whether `graph` has an interval t-coloring. Backtracking over
/// edges in a fixed order with properness and running interval-window
/// pruning; final acceptance additionally requires every color used.
pub fn find_interval_coloring(graph: &Graph, t: u32, options: &SearchOptions) -> SearchOutcome {
    let start = Instant::now();
    if t == 0 {
        // The definition needs t >= 1; zero colors never work.
        return SearchOutcome {
            status: SearchStatus::Infeasible,
            nodes: 0,
            elapsed: start.elapsed(),
        };
    }
    let budget = if options.budget.is_unlimited() && graph.edge_count() > 16 {
        SearchBudget::default_desk()
    } else {
        options.budget
    };
    let mut solver = Solver::new(graph, t, &budget, start);
    let step = solver.dfs(0, options.symmetry_breaking);
    let nodes = solver.nodes;
    let status = match step {
        Step::Aborted => SearchStatus::Unknown,
        Step::Exhausted => SearchStatus::Infeasible,
        Step::Found => {
            let witness = EdgeColoring::new(graph, t, solver.colors)
                .expect("solver assigned a color in range to every edge");
            let verdict = verify_interval(graph, &witness)
                .expect("solver witness is bound to its own graph");
            assert!(
                verdict.is_ok(),
                "solver witness failed re-verification: {verdict}"
            );
            SearchStatus::Feasible(witness)
        }
    };
    SearchOutcome {
        status,
        nodes,
        elapsed: start.elapsed(),
    }
}

/// Result of a maximum-palette sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum MaxPaletteResult {
    Exact { value: u32, witness: EdgeColoring },
    /// Budget ran out before every gap query resolved: feasibility is
    /// proved at `best_feasible` (when present) and everything from
    /// there up to `highest_unresolved` is undecided.
    Bracket {
        best_feasible: Option<u32>,
        highest_unresolved: u32,
    },
    NotColorable,
}

/// Result of a minimum-palette sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum MinPaletteResult {
    Exact { value: u32, witness: EdgeColoring },
    NotColorable,
    Unknown { first_unresolved: u32 },
}

/// One (t, status) pair from a sweep, for reporting.
pub type SweepQuery = (u32, &'static str);

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport<R> {
    pub result: R,
    pub queries: Vec<SweepQuery>,
    pub nodes: u64,
    pub elapsed: Duration,
}

fn degree_floor(graph: &Graph) -> u32 {
    graph
        .incidence()
        .max_degree()
        .try_into()
        .expect("degree fits in u32")
}

/// Exact maximum feasible palette, sweeping t downward from the bound
/// ceiling. The first feasible t is the maximum: everything above it was
/// just exhausted, and beyond the ceiling nothing is feasible for a graph
/// that is interval-colorable at all.
pub fn exact_max_t(graph: &Graph, options: &SearchOptions) -> SweepReport<MaxPaletteResult> {
    let start = Instant::now();
    let mut queries = Vec::new();
    let mut nodes = 0;
    let ceiling = upper_bound_max_t(&graph.structural_profile()).upper_max_t;
    let Some(ceiling) = ceiling else {
        return SweepReport {
            result: MaxPaletteResult::NotColorable,
            queries,
            nodes,
            elapsed: start.elapsed(),
        };
    };
    let floor = degree_floor(graph).max(1);
    let mut highest_unresolved = None;
    for t in (floor..=ceiling).rev() {
        let outcome = find_interval_coloring(graph, t, options);
        nodes += outcome.nodes;
        queries.push((t, outcome.status.label()));
        match outcome.status {
            SearchStatus::Feasible(witness) => {
                let result = match highest_unresolved {
                    None => MaxPaletteResult::Exact { value: t, witness },
                    Some(unresolved) => MaxPaletteResult::Bracket {
                        best_feasible: Some(t),
                        highest_unresolved: unresolved,
                    },
                };
                return SweepReport {
                    result,
                    queries,
                    nodes,
                    elapsed: start.elapsed(),
                };
            }
            SearchStatus::Infeasible => {}
            SearchStatus::Unknown => {
                highest_unresolved.get_or_insert(t);
            }
        }
    }
    let result = match highest_unresolved {
        Some(unresolved) => MaxPaletteResult::Bracket {
            best_feasible: None,
            highest_unresolved: unresolved,
        },
        None => MaxPaletteResult::NotColorable,
    };
    SweepReport {
        result,
        queries,
        nodes,
        elapsed: start.elapsed(),
    }
}

/// Exact maximum feasible palette sweeping upward from a known feasible
/// coloring (typically a construction output). Stops at the first
/// infeasible t or at the bound ceiling.
pub fn exact_max_t_from(
    graph: &Graph,
    start_witness: &EdgeColoring,
    options: &SearchOptions,
) -> SweepReport<MaxPaletteResult> {
    let start = Instant::now();
    let mut queries = Vec::new();
    let mut nodes = 0;
    let verdict = verify_interval(graph, start_witness)
        .expect("starting witness must be bound to the graph");
    assert!(
        verdict.is_ok(),
        "upward sweep needs a valid starting coloring: {verdict}"
    );
    let ceiling = upper_bound_max_t(&graph.structural_profile())
        .upper_max_t
        .expect("a colored graph has edges, so a ceiling exists");
    let mut best = (start_witness.t(), start_witness.clone());
    for t in (start_witness.t() + 1)..=ceiling {
        let outcome = find_interval_coloring(graph, t, options);
        nodes += outcome.nodes;
        queries.push((t, outcome.status.label()));
        match outcome.status {
            SearchStatus::Feasible(witness) => best = (t, witness),
            SearchStatus::Infeasible => break,
            SearchStatus::Unknown => {
                return SweepReport {
                    result: MaxPaletteResult::Bracket {
                        best_feasible: Some(best.0),
                        highest_unresolved: ceiling,
                    },
                    queries,
                    nodes,
                    elapsed: start.elapsed(),
                };
            }
        }
    }
    SweepReport {
        result: MaxPaletteResult::Exact {
            value: best.0,
            witness: best.1,
        },
        queries,
        nodes,
        elapsed: start.elapsed(),
    }
}

/// Exact minimum feasible palette, sweeping t upward from the maximum
/// degree (no smaller palette can host the degree-many consecutive colors
/// a maximum-degree vertex needs). Exhausting every t up to the ceiling
/// proves the graph has no interval coloring at all.
pub fn exact_min_t(graph: &Graph, options: &SearchOptions) -> SweepReport<MinPaletteResult> {
    let start = Instant::now();
    let mut queries = Vec::new();
    let mut nodes = 0;
    let ceiling = upper_bound_max_t(&graph.structural_profile()).upper_max_t;
    let Some(ceiling) = ceiling else {
        return SweepReport {
            result: MinPaletteResult::NotColorable,
            queries,
            nodes,
            elapsed: start.elapsed(),
        };
    };
    let floor = degree_floor(graph).max(1);
    for t in floor..=ceiling {
        let outcome = find_interval_coloring(graph, t, options);
        nodes += outcome.nodes;
        queries.push((t, outcome.status.label()));
        match outcome.status {
            SearchStatus::Feasible(witness) => {
                return SweepReport {
                    result: MinPaletteResult::Exact { value: t, witness },
                    queries,
                    nodes,
                    elapsed: start.elapsed(),
                };
            }
            SearchStatus::Infeasible => {}
            SearchStatus::Unknown => {
                return SweepReport {
                    result: MinPaletteResult::Unknown { first_unresolved: t },
                    queries,
                    nodes,
                    elapsed: start.elapsed(),
                };
            }
        }
    }
    SweepReport {
        result: MinPaletteResult::NotColorable,
        queries,
        nodes,
        elapsed: start.elapsed(),
    }
}

/// Searches for an interval `target_t`-coloring of a family graph and, on
/// success, seals the witness into an oracle-provenance certificate
/// (re-verified before sealing).
pub fn make_certificate(
    family: Family,
    target_t: u32,
    options: &SearchOptions,
) -> Result<Certificate, CertificateError> {
    let graph = match family {
        Family::Complete { vertices } => Graph::complete(vertices)?,
        Family::Hypercube { dimension } => Graph::hypercube(dimension)?,
        Family::Generic => return Err(CertificateError::UnreproducibleFamily),
    };
    let outcome = find_interval_coloring(&graph, target_t, options);
    match outcome.status {
        SearchStatus::Feasible(witness) => Certificate::seal(
            &graph,
            &witness,
            Provenance::Oracle {
                nodes: outcome.nodes,
                elapsed_ms: outcome.elapsed.as_millis() as u64,
            },
        ),
        SearchStatus::Infeasible => Err(CertificateError::TargetInfeasible { t: target_t }),
        SearchStatus::Unknown => Err(CertificateError::BudgetExhausted { t: target_t }),
    }
}
