//! Simple undirected graphs in canonical form, plus the two generators
//! (complete graphs and hypercubes) and the structural queries the bound
//! formulas need.
//!
//! Graphs are immutable after construction: the edge list is stored sorted
//! with `u < v` on every pair, so equal graphs serialize byte-identically
//! and a content hash can bind colorings to them.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::VecDeque;
use thiserror::Error;

/// Version tag written into every graph file.
pub const GRAPH_FORMAT: &str = "ic-graph/1";

/// Largest accepted hypercube dimension. Vertex ids are bitmasks, so the
/// cap comes from edge-list memory, not id width.
pub const MAX_HYPERCUBE_DIMENSION: usize = 22;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("hypercube dimension must be in 1..={MAX_HYPERCUBE_DIMENSION}, got {0}")]
    DimensionOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {endpoint} out of range for {vertex_count} vertices")]
    EndpointOutOfRange { endpoint: usize, vertex_count: usize },
    #[error("family tag `{0}` does not match the vertex and edge sets")]
    FamilyMismatch(String),
    #[error("unsupported graph format `{0}`, expected `{GRAPH_FORMAT}`")]
    UnsupportedFormat(String),
    #[error("malformed graph file: {0}")]
    Malformed(String),
}

/// Which generator produced a graph, if any. Drives membership facts and
/// construction dispatch; `Generic` graphs get neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Family {
    Complete {
        #[serde(rename = "param")]
        vertices: usize,
    },
    Hypercube {
        #[serde(rename = "param")]
        dimension: usize,
    },
    Generic,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Complete { vertices } => write!(f, "K_{vertices}"),
            Family::Hypercube { dimension } => write!(f, "Q_{dimension}"),
            Family::Generic => write!(f, "generic"),
        }
    }
}

/// Immutable simple undirected graph: a vertex count and a sorted list of
/// edges `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    family: Family,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    format: String,
    vertices: usize,
    edges: Vec<(usize, usize)>,
    family: Family,
}

impl Graph {
    /// Builds a graph from raw parts, normalizing edge orientation and
    /// order. Rejects loops, duplicates, out-of-range endpoints, and
    /// family tags that do not reproduce the given edge set.
    pub fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        family: Family,
    ) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v >= vertex_count {
                return Err(GraphError::EndpointOutOfRange {
                    endpoint: v,
                    vertex_count,
                });
            }
            normalized.push((u, v));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let graph = Graph {
            vertex_count,
            edges: normalized,
            family,
        };
        match family {
            Family::Generic => Ok(graph),
            Family::Complete { vertices } => {
                let expected = Graph::complete(vertices)?;
                if expected.vertex_count == graph.vertex_count && expected.edges == graph.edges {
                    Ok(graph)
                } else {
                    Err(GraphError::FamilyMismatch(family.to_string()))
                }
            }
            Family::Hypercube { dimension } => {
                let expected = Graph::hypercube(dimension)?;
                if expected.vertex_count == graph.vertex_count && expected.edges == graph.edges {
                    Ok(graph)
                } else {
                    Err(GraphError::FamilyMismatch(family.to_string()))
                }
            }
        }
    }

    /// Convenience constructor for untagged graphs.
    pub fn generic(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        Graph::new(vertex_count, edges, Family::Generic)
    }

    /// Complete graph on `vertices` vertices with all C(n,2) edges.
    pub fn complete(vertices: usize) -> Result<Self, GraphError> {
        if vertices == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut edges = Vec::with_capacity(vertices * (vertices - 1) / 2);
        for u in 0..vertices {
            for v in (u + 1)..vertices {
                edges.push((u, v));
            }
        }
        Ok(Graph {
            vertex_count: vertices,
            edges,
            family: Family::Complete { vertices },
        })
    }

    /// Hypercube of the given dimension: vertex ids are bitmasks
    /// `0..2^n`, edges connect ids differing in exactly one bit. The
    /// vertices with the top bit clear/set form the two sub-hypercubes
    /// of dimension `n-1` used by the doubling construction.
    pub fn hypercube(dimension: usize) -> Result<Self, GraphError> {
        if dimension == 0 || dimension > MAX_HYPERCUBE_DIMENSION {
            return Err(GraphError::DimensionOutOfRange(dimension));
        }
        let n = 1usize << dimension;
        let mut edges = Vec::with_capacity(dimension * (n >> 1));
        for u in 0..n {
            for bit in 0..dimension {
                let v = u | (1 << bit);
                if v != u {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        Ok(Graph {
            vertex_count: n,
            edges,
            family: Family::Hypercube { dimension },
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (sorted, `u < v`) order. Edge indices used by
    /// colorings refer to positions in this slice.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Index of edge `(u, v)` in canonical order, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    /// Per-vertex incidence lists (edge indices) and degrees.
    pub fn incidence(&self) -> VertexIncidence {
        let mut lists = vec![Vec::new(); self.vertex_count];
        for (idx, &(u, v)) in self.edges.iter().enumerate() {
            lists[u].push(idx);
            lists[v].push(idx);
        }
        VertexIncidence { lists }
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Stable content hash over the structural part (vertex count and
    /// edge list, family tag excluded), so structurally equal graphs
    /// share colorings regardless of how they were tagged.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(b"ic-graph-struct/1");
        hasher.update((self.vertex_count as u64).to_le_bytes());
        for &(u, v) in &self.edges {
            hasher.update((u as u64).to_le_bytes());
            hasher.update((v as u64).to_le_bytes());
        }
        let digest = hasher.finalize();
        let mut out = String::with_capacity(7 + 64);
        out.push_str("sha256:");
        for byte in digest {
            out.push_str(&format!("{byte:02x}"));
        }
        out
    }

    /// Degree maximum, regularity, bipartiteness, triangle-freeness, and
    /// diameter (`None` when disconnected: reporting infinity would let
    /// the diameter-based bound be misapplied).
    pub fn structural_profile(&self) -> StructuralProfile {
        let adj = self.adjacency();
        let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let is_regular = degrees.iter().all(|&d| d == max_degree);
        let is_bipartite = self.check_bipartite(&adj);
        let is_triangle_free = self.check_triangle_free(&adj);
        let diameter = self.diameter(&adj);
        StructuralProfile {
            vertex_count: self.vertex_count,
            edge_count: self.edges.len(),
            max_degree,
            is_regular,
            is_bipartite,
            is_triangle_free,
            diameter,
        }
    }

    fn check_bipartite(&self, adj: &[Vec<usize>]) -> bool {
        let mut side = vec![u8::MAX; self.vertex_count];
        let mut queue = VecDeque::new();
        for start in 0..self.vertex_count {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn check_triangle_free(&self, adj: &[Vec<usize>]) -> bool {
        for &(u, v) in &self.edges {
            let (mut i, mut j) = (0, 0);
            let (a, b) = (&adj[u], &adj[v]);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
        }
        true
    }

    fn diameter(&self, adj: &[Vec<usize>]) -> Option<usize> {
        let n = self.vertex_count;
        let mut diameter = 0;
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[start] = 0;
            queue.clear();
            queue.push_back(start);
            let mut seen = 1;
            let mut far = 0;
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        far = far.max(dist[w]);
                        seen += 1;
                        queue.push_back(w);
                    }
                }
            }
            if seen != n {
                return None;
            }
            diameter = diameter.max(far);
        }
        Some(diameter)
    }

    /// Canonical JSON serialization; equal graphs produce identical bytes.
    pub fn to_json(&self) -> String {
        let file = GraphFile {
            format: GRAPH_FORMAT.to_string(),
            vertices: self.vertex_count,
            edges: self.edges.clone(),
            family: self.family,
        };
        serde_json::to_string(&file).expect("graph serialization cannot fail")
    }

    /// Parses and fully validates a graph file (format tag, loops,
    /// duplicates, endpoint range, family consistency).
    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| GraphError::Malformed(e.to_string()))?;
        if file.format != GRAPH_FORMAT {
            return Err(GraphError::UnsupportedFormat(file.format));
        }
        Graph::new(file.vertices, file.edges, file.family)
    }
}

/// Incidence structure: per-vertex lists of incident edge indices.
#[derive(Debug, Clone)]
pub struct VertexIncidence {
    lists: Vec<Vec<usize>>,
}

impl VertexIncidence {
    /// Edge indices incident to `v`, in ascending order.
    pub fn edges_at(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.lists[v].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.lists.iter().map(Vec::len)
    }

    pub fn max_degree(&self) -> usize {
        self.lists.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Structural facts consumed by the bound formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralProfile {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub is_regular: bool,
    pub is_bipartite: bool,
    pub is_triangle_free: bool,
    /// `None` for disconnected graphs.
    pub diameter: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn complete_graph_examples() {
        assert_eq!(Graph::complete(2).unwrap().edges(), &[(0, 1)]);
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
        assert_eq!(Graph::complete(12).unwrap().edge_count(), 66);
        assert_eq!(Graph::complete(0), Err(GraphError::EmptyVertexSet));
    }

    #[test]
    fn complete_graphs_are_regular_with_binomial_edge_count() {
        for n in 1..=10 {
            let g = Graph::complete(n).unwrap();
            assert_eq!(g.edge_count(), n * (n - 1) / 2);
            let inc = g.incidence();
            assert!(inc.degrees().all(|d| d == n - 1));
        }
    }

    #[test]
    fn hypercube_examples() {
        let q1 = Graph::hypercube(1).unwrap();
        assert_eq!((q1.vertex_count(), q1.edge_count()), (2, 1));
        let q3 = Graph::hypercube(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        let q4 = Graph::hypercube(4).unwrap();
        assert_eq!((q4.vertex_count(), q4.edge_count()), (16, 32));
        assert!(Graph::hypercube(0).is_err());
        assert!(Graph::hypercube(MAX_HYPERCUBE_DIMENSION + 1).is_err());
    }

    #[test]
    fn hypercubes_are_regular_bipartite_triangle_free_with_diameter_n() {
        for n in 1..=10 {
            let g = Graph::hypercube(n).unwrap();
            let p = g.structural_profile();
            assert_eq!(p.max_degree, n);
            assert!(p.is_regular);
            assert!(p.is_bipartite);
            assert!(p.is_triangle_free);
            assert_eq!(p.diameter, Some(n));
        }
    }

    #[test]
    fn structural_profile_examples() {
        let k4 = Graph::complete(4).unwrap().structural_profile();
        assert_eq!(k4.max_degree, 3);
        assert!(k4.is_regular);
        assert!(!k4.is_bipartite);
        assert!(!k4.is_triangle_free);
        assert_eq!(k4.diameter, Some(1));

        let q3 = Graph::hypercube(3).unwrap().structural_profile();
        assert_eq!(q3.max_degree, 3);
        assert!(q3.is_regular && q3.is_bipartite && q3.is_triangle_free);
        assert_eq!(q3.diameter, Some(3));

        let k2 = Graph::complete(2).unwrap().structural_profile();
        assert_eq!(k2.max_degree, 1);
        assert!(k2.is_regular && k2.is_bipartite && k2.is_triangle_free);
        assert_eq!(k2.diameter, Some(1));
    }

    #[test]
    fn disconnected_graph_has_undefined_diameter() {
        let g = Graph::generic(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.structural_profile().diameter, None);
    }

    #[test]
    fn generators_are_byte_deterministic() {
        assert_eq!(
            Graph::complete(9).unwrap().to_json(),
            Graph::complete(9).unwrap().to_json()
        );
        assert_eq!(
            Graph::hypercube(5).unwrap().to_json(),
            Graph::hypercube(5).unwrap().to_json()
        );
        assert_eq!(
            Graph::hypercube(5).unwrap().content_hash(),
            Graph::hypercube(5).unwrap().content_hash()
        );
    }

    #[test]
    fn reader_rejects_bad_input() {
        assert!(matches!(
            Graph::generic(3, vec![(1, 1)]),
            Err(GraphError::SelfLoop(1))
        ));
        assert!(matches!(
            Graph::generic(3, vec![(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::generic(3, vec![(0, 5)]),
            Err(GraphError::EndpointOutOfRange { .. })
        ));
        let bad_format = r#"{"format":"ic-graph/9","vertices":2,"edges":[[0,1]],"family":{"kind":"generic"}}"#;
        assert!(matches!(
            Graph::from_json(bad_format),
            Err(GraphError::UnsupportedFormat(_))
        ));
        let lying_tag = r#"{"format":"ic-graph/1","vertices":4,"edges":[[0,1]],"family":{"kind":"complete","param":4}}"#;
        assert!(matches!(
            Graph::from_json(lying_tag),
            Err(GraphError::FamilyMismatch(_))
        ));
    }

    #[test]
    fn edges_normalize_to_sorted_canonical_form() {
        let g = Graph::generic(4, vec![(3, 2), (1, 0), (0, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_index(2, 0), Some(1));
        assert_eq!(g.edge_index(1, 3), None);
    }

    #[test]
    fn hypercube_splits_into_two_subcubes_by_top_bit() {
        let q4 = Graph::hypercube(4).unwrap();
        let q3 = Graph::hypercube(3).unwrap();
        let half = 8;
        let low: Vec<_> = q4
            .edges()
            .iter()
            .copied()
            .filter(|&(_, v)| v < half)
            .collect();
        let high: Vec<_> = q4
            .edges()
            .iter()
            .copied()
            .filter(|&(u, _)| u >= half)
            .map(|(u, v)| (u - half, v - half))
            .collect();
        assert_eq!(low, q3.edges());
        let mut high_sorted = high;
        high_sorted.sort_unstable();
        assert_eq!(high_sorted, q3.edges());
        let matching: Vec<_> = q4
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| u < half && v >= half)
            .collect();
        assert_eq!(matching.len(), 8);
        assert!(matching.iter().all(|&(u, v)| v == u + half));
    }

    proptest! {
        #[test]
        fn graph_json_round_trips(
            vertex_count in 1usize..9,
            raw_edges in proptest::collection::vec((0usize..9, 0usize..9), 0..16)
        ) {
            let edges: Vec<(usize, usize)> = raw_edges
                .into_iter()
                .filter(|&(a, b)| a != b && a < vertex_count && b < vertex_count)
                .collect();
            let mut dedup = edges
                .iter()
                .map(|&(a, b)| if a < b { (a, b) } else { (b, a) })
                .collect::<Vec<_>>();
            dedup.sort_unstable();
            dedup.dedup();
            let g = Graph::generic(vertex_count, dedup).unwrap();
            let back = Graph::from_json(&g.to_json()).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(back.content_hash(), g.content_hash());
        }
    }
}
