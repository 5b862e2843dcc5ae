//! Constructive interval colorings: the canonical round-robin coloring of
//! even complete graphs, the dimension coloring of hypercubes, the two
//! doubling constructions that add `4m-1` (complete) or `n` (hypercube)
//! colors per size-doubling step, tower iteration of those steps, and the
//! downshift that realizes every palette size between the maximum reached
//! and the degree.
//!
//! Every operation is a pure function of its inputs and iterates edges in
//! canonical order, so repeated runs are byte-identical.

use crate::coloring::{verify_interval, ColoringError, EdgeColoring, IntervalVerdict};
use crate::graph::{Family, Graph, GraphError};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("parameter must be at least 1")]
    ZeroParameter,
    #[error("base coloring is not a valid interval coloring: {0}")]
    BaseNotInterval(IntervalVerdict),
    #[error("base graph must be a generator-built complete graph, found {0}")]
    BaseNotComplete(Family),
    #[error("complete doubling needs an even-order base, found K_{0}")]
    OddOrderBase(usize),
    #[error("base graph must be a generator-built hypercube, found {0}")]
    BaseNotHypercube(Family),
    #[error("tower base has {got} vertices, expected {expected} for odd part {odd_part}")]
    BaseOrderMismatch {
        got: usize,
        expected: usize,
        odd_part: usize,
    },
    #[error("coloring already uses the minimum palette t = degree = {0}")]
    AlreadyAtMinimum(u32),
    #[error("operation requires a regular graph")]
    NotRegular,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("internal error: {0} (this is a bug)")]
    Internal(String),
}

/// Offsets applied by one doubling step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum StepOffsets {
    /// Doubling K_{2m} -> K_{4m}: matching edges shift the spectrum
    /// minimum by `2m-1`, cross edges copy shifted by `2m`, far-block
    /// edges copy shifted by `4m-1`.
    Complete { matching: u32, cross: u32, far: u32 },
    /// Doubling Q_{n-1} -> Q_n: matching edges shift the spectrum
    /// minimum by `n-1`, second-copy edges copy shifted by `n`.
    Hypercube { matching: u32, shifted: u32 },
}

/// Provenance record for one doubling step of a tower.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublingTrace {
    pub step: usize,
    pub source_vertices: usize,
    pub source_t: u32,
    pub result_t: u32,
    pub offsets: StepOffsets,
}

/// Factorization `n = odd_part * 2^two_adic` that determines a complete
/// tower's shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FactorizationParams {
    pub n: usize,
    pub odd_part: usize,
    pub two_adic: u32,
}

impl FactorizationParams {
    pub fn of(n: usize) -> Result<Self, ConstructError> {
        if n == 0 {
            return Err(ConstructError::ZeroParameter);
        }
        let two_adic = n.trailing_zeros();
        Ok(FactorizationParams {
            n,
            odd_part: n >> two_adic,
            two_adic,
        })
    }

    /// Palette size a tower reaches from a base with `3*odd_part - 2`
    /// colors: `4n - 2 - odd_part - two_adic`.
    pub fn tower_t_from_least_base(&self) -> u32 {
        (4 * self.n - 2 - self.odd_part) as u32 - self.two_adic
    }
}

fn ensure_interval(graph: &Graph, coloring: &EdgeColoring) -> Result<(), ConstructError> {
    let verdict = verify_interval(graph, coloring)?;
    if verdict.is_ok() {
        Ok(())
    } else {
        Err(ConstructError::BaseNotInterval(verdict))
    }
}

/// Minimum incident color per vertex. Input must cover every vertex
/// (true for colorings of complete graphs and hypercubes).
fn spectrum_minima(graph: &Graph, coloring: &EdgeColoring) -> Vec<u32> {
    let mut minima = vec![u32::MAX; graph.vertex_count()];
    for (idx, &(u, v)) in graph.edges().iter().enumerate() {
        let c = coloring.color_of(idx);
        minima[u] = minima[u].min(c);
        minima[v] = minima[v].min(c);
    }
    minima
}

fn edge_lookup(graph: &Graph) -> HashMap<(usize, usize), usize> {
    graph
        .edges()
        .iter()
        .enumerate()
        .map(|(idx, &e)| (e, idx))
        .collect()
}

/// Proper interval (2n-1)-coloring of K_{2n} via the circle method: in
/// round `r` (zero-based), color `r+1` goes to edge `(r, 2n-1)` and to
/// every pair `(r-k mod 2n-1, r+k mod 2n-1)`. Each round is a perfect
/// matching, so every vertex sees all 2n-1 colors and the spectra are
/// full intervals.
pub fn canonical_complete_coloring(n: usize) -> Result<(Graph, EdgeColoring), ConstructError> {
    if n == 0 {
        return Err(ConstructError::ZeroParameter);
    }
    let vertices = 2 * n;
    let graph = Graph::complete(vertices)?;
    let modulus = vertices - 1;
    let mut colors = vec![0u32; graph.edge_count()];
    let set = |colors: &mut Vec<u32>, u: usize, v: usize, c: u32| -> Result<(), ConstructError> {
        let idx = graph
            .edge_index(u, v)
            .ok_or_else(|| ConstructError::Internal(format!("missing edge ({u}, {v})")))?;
        if colors[idx] != 0 {
            return Err(ConstructError::Internal(format!(
                "edge ({u}, {v}) colored twice"
            )));
        }
        colors[idx] = c;
        Ok(())
    };
    for r in 0..modulus {
        let color = (r + 1) as u32;
        set(&mut colors, r, vertices - 1, color)?;
        for k in 1..n {
            let a = (r + modulus - k) % modulus;
            let b = (r + k) % modulus;
            set(&mut colors, a, b, color)?;
        }
    }
    if colors.iter().any(|&c| c == 0) {
        return Err(ConstructError::Internal(
            "round-robin left an edge uncolored".to_string(),
        ));
    }
    let coloring = EdgeColoring::new(&graph, modulus as u32, colors)?;
    Ok((graph, coloring))
}

/// Doubles an interval coloring of K_{2m} to one of K_{4m} with exactly
/// `4m-1` extra colors. With the base on vertices `0..2m` and its copy on
/// `2m..4m`:
///
/// * edges inside the base keep their color;
/// * matching edges `(i, i+2m)` get `min spectrum(i) + 2m - 1`;
/// * cross edges `(i, j+2m)` with `i != j` get `color(i, j) + 2m`;
/// * edges inside the copy get `color(i-2m, j-2m) + 4m - 1`.
pub fn double_complete(
    base_graph: &Graph,
    base: &EdgeColoring,
) -> Result<(Graph, EdgeColoring), ConstructError> {
    let half = match base_graph.family() {
        Family::Complete { vertices } => {
            if vertices % 2 != 0 {
                return Err(ConstructError::OddOrderBase(vertices));
            }
            vertices
        }
        other => return Err(ConstructError::BaseNotComplete(other)),
    };
    ensure_interval(base_graph, base)?;

    let graph = Graph::complete(2 * half)?;
    let base_index = edge_lookup(base_graph);
    let minima = spectrum_minima(base_graph, base);
    let matching_shift = (half - 1) as u32;
    let cross_shift = half as u32;
    let far_shift = (2 * half - 1) as u32;

    let mut colors = Vec::with_capacity(graph.edge_count());
    for &(i, j) in graph.edges() {
        let color = if j < half {
            base.color_of(base_index[&(i, j)])
        } else if i < half && j == i + half {
            minima[i] + matching_shift
        } else if i < half {
            let (a, b) = order(i, j - half);
            base.color_of(base_index[&(a, b)]) + cross_shift
        } else {
            base.color_of(base_index[&(i - half, j - half)]) + far_shift
        };
        colors.push(color);
    }
    let coloring = EdgeColoring::new(&graph, base.t() + far_shift, colors)?;
    Ok((graph, coloring))
}

fn order(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Iterates [`double_complete`] from a base coloring of K_{2p} (p the odd
/// part of `n`) up to K_{2n}, recording one trace entry per step. The
/// palette grows by `4p(2^q - 1) - q` overall; from a base with `3p-2`
/// colors that lands exactly on `4n - 2 - p - q`.
pub fn build_complete_tower(
    n: usize,
    base_graph: &Graph,
    base: &EdgeColoring,
) -> Result<(Graph, EdgeColoring, Vec<DoublingTrace>), ConstructError> {
    let params = FactorizationParams::of(n)?;
    let expected = 2 * params.odd_part;
    match base_graph.family() {
        Family::Complete { vertices } if vertices == expected => {}
        Family::Complete { vertices } => {
            return Err(ConstructError::BaseOrderMismatch {
                got: vertices,
                expected,
                odd_part: params.odd_part,
            })
        }
        other => return Err(ConstructError::BaseNotComplete(other)),
    }
    ensure_interval(base_graph, base)?;

    let mut graph = base_graph.clone();
    let mut coloring = base.clone();
    let mut trace = Vec::with_capacity(params.two_adic as usize);
    for step in 0..params.two_adic {
        let source_vertices = graph.vertex_count();
        let source_t = coloring.t();
        let (next_graph, next_coloring) = double_complete(&graph, &coloring)?;
        trace.push(DoublingTrace {
            step: step as usize,
            source_vertices,
            source_t,
            result_t: next_coloring.t(),
            offsets: StepOffsets::Complete {
                matching: (source_vertices - 1) as u32,
                cross: source_vertices as u32,
                far: (2 * source_vertices - 1) as u32,
            },
        });
        graph = next_graph;
        coloring = next_coloring;
    }
    Ok((graph, coloring, trace))
}

/// Interval n-coloring of Q_n: the edge flipping bit `i` gets color
/// `i+1`. Every vertex touches all n directions, so every spectrum is
/// the full interval `1..=n`.
pub fn dimension_coloring(dimension: usize) -> Result<(Graph, EdgeColoring), ConstructError> {
    let graph = Graph::hypercube(dimension)?;
    let colors: Vec<u32> = graph
        .edges()
        .iter()
        .map(|&(u, v)| (v - u).trailing_zeros() + 1)
        .collect();
    let coloring = EdgeColoring::new(&graph, dimension as u32, colors)?;
    Ok((graph, coloring))
}

/// Doubles an interval coloring of Q_{n-1} to one of Q_n with exactly
/// `n` extra colors. The two copies are split by the top bit and the
/// copy bijection is `x -> x + 2^(n-1)`:
///
/// * first-copy edges keep their color;
/// * matching edges `(x, x + 2^(n-1))` get `min spectrum(x) + n - 1`;
/// * second-copy edges get the color of their preimage plus `n`.
pub fn double_hypercube(
    base_graph: &Graph,
    base: &EdgeColoring,
) -> Result<(Graph, EdgeColoring), ConstructError> {
    let base_dim = match base_graph.family() {
        Family::Hypercube { dimension } => dimension,
        other => return Err(ConstructError::BaseNotHypercube(other)),
    };
    ensure_interval(base_graph, base)?;

    let dimension = base_dim + 1;
    let graph = Graph::hypercube(dimension)?;
    let half = 1usize << base_dim;
    let base_index = edge_lookup(base_graph);
    let minima = spectrum_minima(base_graph, base);
    let matching_shift = (dimension - 1) as u32;
    let copy_shift = dimension as u32;

    let mut colors = Vec::with_capacity(graph.edge_count());
    for &(u, v) in graph.edges() {
        let color = if v - u == half {
            minima[u] + matching_shift
        } else if v < half {
            base.color_of(base_index[&(u, v)])
        } else {
            base.color_of(base_index[&(u - half, v - half)]) + copy_shift
        };
        colors.push(color);
    }
    let coloring = EdgeColoring::new(&graph, base.t() + copy_shift, colors)?;
    Ok((graph, coloring))
}

/// Iterates [`double_hypercube`] from the one-edge coloring of Q_1 up to
/// Q_n, reaching exactly `n(n+1)/2` colors.
pub fn build_hypercube_tower(
    dimension: usize,
) -> Result<(Graph, EdgeColoring, Vec<DoublingTrace>), ConstructError> {
    let (mut graph, mut coloring) = dimension_coloring(1)?;
    let mut trace = Vec::new();
    for step in 2..=dimension {
        let source_vertices = graph.vertex_count();
        let source_t = coloring.t();
        let (next_graph, next_coloring) = double_hypercube(&graph, &coloring)?;
        trace.push(DoublingTrace {
            step: step - 2,
            source_vertices,
            source_t,
            result_t: next_coloring.t(),
            offsets: StepOffsets::Hypercube {
                matching: (step - 1) as u32,
                shifted: step as u32,
            },
        });
        graph = next_graph;
        coloring = next_coloring;
    }
    Ok((graph, coloring, trace))
}

/// Recolors every edge of the top color `t` to `t - degree`, turning an
/// interval t-coloring of a regular graph into an interval (t-1)-coloring.
///
/// Any vertex meeting color `t` has spectrum exactly `[t-degree+1, t]`,
/// so `t - degree` is free there and the new spectrum `[t-degree, t-1]`
/// is again consecutive. That argument is re-checked by running the
/// verifier on the output; a failure is surfaced as an internal error,
/// never returned as a coloring.
pub fn downshift_regular(
    graph: &Graph,
    coloring: &EdgeColoring,
) -> Result<EdgeColoring, ConstructError> {
    let incidence = graph.incidence();
    let degree = incidence.max_degree() as u32;
    if !incidence.degrees().all(|d| d as u32 == degree) {
        return Err(ConstructError::NotRegular);
    }
    ensure_interval(graph, coloring)?;
    let t = coloring.t();
    if t <= degree {
        return Err(ConstructError::AlreadyAtMinimum(t));
    }
    let colors: Vec<u32> = coloring
        .colors()
        .iter()
        .map(|&c| if c == t { t - degree } else { c })
        .collect();
    let shifted = EdgeColoring::new(graph, t - 1, colors)?;
    let verdict = verify_interval(graph, &shifted)?;
    if !verdict.is_ok() {
        return Err(ConstructError::Internal(format!(
            "downshift produced an invalid coloring: {verdict}"
        )));
    }
    Ok(shifted)
}

/// Realizes the full palette spectrum of a regular graph from a top
/// coloring: returns verified interval t-colorings for every t from the
/// degree up to `top.t()`, in ascending palette order.
pub fn spectrum_colorings(
    graph: &Graph,
    top: &EdgeColoring,
) -> Result<Vec<EdgeColoring>, ConstructError> {
    let incidence = graph.incidence();
    let degree = incidence.max_degree() as u32;
    if !incidence.degrees().all(|d| d as u32 == degree) {
        return Err(ConstructError::NotRegular);
    }
    ensure_interval(graph, top)?;
    let mut out = vec![top.clone()];
    while out.last().expect("nonempty").t() > degree {
        let next = downshift_regular(graph, out.last().expect("nonempty"))?;
        out.push(next);
    }
    out.reverse();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::vertex_spectrum;

    fn assert_interval(graph: &Graph, coloring: &EdgeColoring) {
        let verdict = verify_interval(graph, coloring).unwrap();
        assert!(verdict.is_ok(), "expected interval coloring, got: {verdict}");
        // Cross-cutting invariants for everything the suite accepts.
        let profile = graph.structural_profile();
        assert!(coloring.t() as usize >= profile.max_degree);
        if profile.is_triangle_free {
            assert!((coloring.t() as usize) <= profile.vertex_count - 1);
        }
    }

    #[test]
    fn factorization() {
        let f = FactorizationParams::of(12).unwrap();
        assert_eq!((f.odd_part, f.two_adic), (3, 2));
        assert_eq!(FactorizationParams::of(1).unwrap().two_adic, 0);
        assert!(FactorizationParams::of(0).is_err());
    }

    #[test]
    fn canonical_coloring_smallest_cases() {
        let (g, c) = canonical_complete_coloring(1).unwrap();
        assert_eq!(c.colors(), &[1]);
        assert_interval(&g, &c);

        let (g, c) = canonical_complete_coloring(2).unwrap();
        assert_eq!(c.t(), 3);
        for v in 0..4 {
            assert_eq!(vertex_spectrum(&g, &c, v).unwrap().colors, vec![1, 2, 3]);
        }
    }

    #[test]
    fn canonical_coloring_k8_is_interval() {
        let (g, c) = canonical_complete_coloring(4).unwrap();
        assert_eq!(c.t(), 7);
        assert_interval(&g, &c);
        // Brute-force properness cross-check over all vertex pairs of
        // incident edges.
        let incidence = g.incidence();
        for v in 0..g.vertex_count() {
            let edges = incidence.edges_at(v);
            for (i, &a) in edges.iter().enumerate() {
                for &b in &edges[i + 1..] {
                    assert_ne!(c.color_of(a), c.color_of(b));
                }
            }
        }
    }

    #[test]
    fn doubling_k2_gives_the_expected_k4_coloring() {
        let (k2, base) = canonical_complete_coloring(1).unwrap();
        let (k4, c) = double_complete(&k2, &base).unwrap();
        // Canonical edge order of K_4: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
        assert_eq!(c.colors(), &[1, 2, 3, 3, 2, 4]);
        assert_eq!(c.t(), 4);
        assert_interval(&k4, &c);
        assert_eq!(vertex_spectrum(&k4, &c, 2).unwrap().colors, vec![2, 3, 4]);
        assert_eq!(vertex_spectrum(&k4, &c, 0).unwrap().colors, vec![1, 2, 3]);
    }

    #[test]
    fn doubling_copies_the_base_block_exactly() {
        let (k4, base) = canonical_complete_coloring(2).unwrap();
        let (k8, c) = double_complete(&k4, &base).unwrap();
        assert_eq!(c.t(), base.t() + 7);
        assert_interval(&k8, &c);
        for (idx, &(u, v)) in k4.edges().iter().enumerate() {
            let big_idx = k8.edge_index(u, v).unwrap();
            assert_eq!(c.color_of(big_idx), base.color_of(idx));
        }
    }

    #[test]
    fn doubling_grows_palette_by_4m_minus_1_for_all_small_m() {
        for m in 1..=8 {
            let (g, base) = canonical_complete_coloring(m).unwrap();
            let (big, c) = double_complete(&g, &base).unwrap();
            assert_eq!(c.t(), base.t() + (4 * m - 1) as u32);
            assert_interval(&big, &c);
        }
    }

    #[test]
    fn doubling_rejects_bad_bases() {
        let (k4, base) = canonical_complete_coloring(2).unwrap();
        let q2 = Graph::hypercube(2).unwrap();
        let q2c = dimension_coloring(2).unwrap().1;
        assert!(matches!(
            double_complete(&q2, &q2c),
            Err(ConstructError::BaseNotComplete(_))
        ));
        let k3 = Graph::complete(3).unwrap();
        let k3c = EdgeColoring::new(&k3, 3, vec![1, 2, 3]).unwrap();
        assert!(matches!(
            double_complete(&k3, &k3c),
            Err(ConstructError::OddOrderBase(3))
        ));
        // Improper base: rejected before any doubling happens.
        let bad = EdgeColoring::new(&k4, 3, vec![1; 6]).unwrap();
        assert!(matches!(
            double_complete(&k4, &bad),
            Err(ConstructError::BaseNotInterval(_))
        ));
        let _ = base;
    }

    #[test]
    fn complete_tower_hits_the_closed_form_from_least_bases() {
        // Base K_2 with one color sits at the least-base level 3*1-2 = 1.
        for q in 0..=4 {
            let n = 1usize << q;
            let (k2, base) = canonical_complete_coloring(1).unwrap();
            let (g, c, trace) = build_complete_tower(n, &k2, &base).unwrap();
            assert_eq!(g.vertex_count(), 2 * n);
            let params = FactorizationParams::of(n).unwrap();
            assert_eq!(c.t(), params.tower_t_from_least_base());
            assert_eq!(trace.len(), q);
            assert_interval(&g, &c);
        }
    }

    #[test]
    fn complete_tower_with_trivial_exponent_returns_base() {
        let (k2, base) = canonical_complete_coloring(1).unwrap();
        let (g, c, trace) = build_complete_tower(1, &k2, &base).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(c, base);
        assert!(trace.is_empty());
    }

    #[test]
    fn complete_tower_rejects_base_order_mismatch() {
        let (k4, base) = canonical_complete_coloring(2).unwrap();
        assert!(matches!(
            build_complete_tower(6, &k4, &base),
            Err(ConstructError::BaseOrderMismatch {
                expected: 6,
                odd_part: 3,
                ..
            })
        ));
    }

    #[test]
    fn tower_palette_growth_matches_trace() {
        let (k2, base) = canonical_complete_coloring(1).unwrap();
        let (_, _, trace) = build_complete_tower(8, &k2, &base).unwrap();
        for step in &trace {
            match step.offsets {
                StepOffsets::Complete { far, .. } => {
                    assert_eq!(step.result_t, step.source_t + far)
                }
                _ => panic!("complete tower produced a hypercube step"),
            }
        }
    }

    #[test]
    fn dimension_coloring_examples() {
        let (g, c) = dimension_coloring(1).unwrap();
        assert_eq!(c.colors(), &[1]);
        assert_interval(&g, &c);

        let (g, c) = dimension_coloring(2).unwrap();
        assert_eq!(c.t(), 2);
        assert_interval(&g, &c);

        let (g, c) = dimension_coloring(4).unwrap();
        assert_eq!(c.t(), 4);
        assert_interval(&g, &c);
        for v in 0..16 {
            assert_eq!(
                vertex_spectrum(&g, &c, v).unwrap().colors,
                vec![1, 2, 3, 4]
            );
        }
    }

    #[test]
    fn hypercube_doubling_q1_gives_the_expected_q2_coloring() {
        let (q1, base) = dimension_coloring(1).unwrap();
        let (q2, c) = double_hypercube(&q1, &base).unwrap();
        // Canonical edge order of Q_2: (0,1) (0,2) (1,3) (2,3).
        assert_eq!(c.colors(), &[1, 2, 2, 3]);
        assert_eq!(c.t(), 3);
        assert_interval(&q2, &c);
        assert_eq!(vertex_spectrum(&q2, &c, 0).unwrap().colors, vec![1, 2]);
        assert_eq!(vertex_spectrum(&q2, &c, 3).unwrap().colors, vec![2, 3]);
    }

    #[test]
    fn hypercube_doubling_grows_palette_by_n_for_all_small_n() {
        let mut state = dimension_coloring(1).unwrap();
        for n in 2..=12 {
            let (g, c) = double_hypercube(&state.0, &state.1).unwrap();
            assert_eq!(c.t(), state.1.t() + n as u32);
            assert_interval(&g, &c);
            state = (g, c);
        }
    }

    #[test]
    fn hypercube_tower_hits_the_closed_form() {
        for n in 1..=8 {
            let (g, c, trace) = build_hypercube_tower(n).unwrap();
            assert_eq!(g.vertex_count(), 1 << n);
            assert_eq!(c.t() as usize, n * (n + 1) / 2);
            assert_eq!(trace.len(), n.saturating_sub(1));
            assert_interval(&g, &c);
        }
    }

    #[test]
    fn downshift_k4_example() {
        let (k2, base) = canonical_complete_coloring(1).unwrap();
        let (k4, c) = double_complete(&k2, &base).unwrap();
        let shifted = downshift_regular(&k4, &c).unwrap();
        // Only the top-colored edge (2,3) moves: 4 -> 4-3 = 1.
        assert_eq!(shifted.colors(), &[1, 2, 3, 3, 2, 1]);
        assert_eq!(shifted.t(), 3);
        for v in 0..4 {
            assert_eq!(
                vertex_spectrum(&k4, &shifted, v).unwrap().colors,
                vec![1, 2, 3]
            );
        }
    }

    #[test]
    fn downshift_q2_example() {
        let q2 = Graph::hypercube(2).unwrap();
        // Cycle coloring (1,2,3,2) in canonical edge order.
        let c = EdgeColoring::new(&q2, 3, vec![1, 2, 2, 3]).unwrap();
        let shifted = downshift_regular(&q2, &c).unwrap();
        assert_eq!(shifted.colors(), &[1, 2, 2, 1]);
        assert_eq!(shifted.t(), 2);
    }

    #[test]
    fn downshift_refuses_minimum_and_irregular_inputs() {
        let (q1, c) = dimension_coloring(1).unwrap();
        assert!(matches!(
            downshift_regular(&q1, &c),
            Err(ConstructError::AlreadyAtMinimum(1))
        ));
        let path = Graph::generic(3, vec![(0, 1), (1, 2)]).unwrap();
        let pc = EdgeColoring::new(&path, 2, vec![1, 2]).unwrap();
        assert!(matches!(
            downshift_regular(&path, &pc),
            Err(ConstructError::NotRegular)
        ));
    }

    #[test]
    fn downshift_changes_only_top_colored_edges() {
        let (g, top, _) = build_hypercube_tower(4).unwrap();
        let shifted = downshift_regular(&g, &top).unwrap();
        let t = top.t();
        for (idx, (&before, &after)) in top.colors().iter().zip(shifted.colors()).enumerate() {
            if before == t {
                assert_eq!(after, t - 4, "edge {idx}");
            } else {
                assert_eq!(after, before, "edge {idx}");
            }
        }
    }

    #[test]
    fn spectrum_covers_every_palette_down_to_the_degree() {
        let (g, top, _) = build_hypercube_tower(3).unwrap();
        let all = spectrum_colorings(&g, &top).unwrap();
        assert_eq!(all.len(), 4); // t = 3, 4, 5, 6
        for (offset, c) in all.iter().enumerate() {
            assert_eq!(c.t(), 3 + offset as u32);
            assert_interval(&g, c);
        }
        // The floor coloring uses exactly the degree-many colors at every
        // vertex.
        let floor = &all[0];
        for v in 0..g.vertex_count() {
            assert_eq!(
                vertex_spectrum(&g, floor, v).unwrap().colors,
                vec![1, 2, 3]
            );
        }
    }

    #[test]
    fn spectrum_of_single_edge_graph_is_a_single_coloring() {
        let (k2, c) = canonical_complete_coloring(1).unwrap();
        let all = spectrum_colorings(&k2, &c).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0], c);
    }

    #[test]
    fn constructions_are_deterministic() {
        let (g1, c1, t1) = build_complete_tower(
            4,
            &canonical_complete_coloring(1).unwrap().0,
            &canonical_complete_coloring(1).unwrap().1,
        )
        .unwrap();
        let (g2, c2, t2) = build_complete_tower(
            4,
            &canonical_complete_coloring(1).unwrap().0,
            &canonical_complete_coloring(1).unwrap().1,
        )
        .unwrap();
        assert_eq!(g1.to_json(), g2.to_json());
        assert_eq!(c1.to_json(), c2.to_json());
        assert_eq!(t1, t2);
    }
}
