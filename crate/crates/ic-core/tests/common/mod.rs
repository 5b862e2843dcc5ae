//! Shared test infrastructure: an exhaustive reference decision
//! procedure for interval t-colorability and an enumerator for all
//! connected graphs with few edges, one representative per isomorphism
//! class.
//!
//! The reference is deliberately naive and independent of the shipped
//! solver: it walks edge-color assignments in canonical edge order,
//! skips a branch only on a direct properness conflict, and evaluates
//! the interval conditions at complete assignments from per-vertex color
//! bitmasks alone.

// Not every test target uses every helper.
#![allow(dead_code)]

use std::collections::HashMap;

/// A raw (vertex count, edge list) pair small enough for exhaustive work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

struct NaiveRef<'a> {
    edges: &'a [(usize, usize)],
    t: u32,
    used: Vec<u64>,
    distinct_used: u32,
}

impl NaiveRef<'_> {
    fn leaf_is_interval(&self) -> bool {
        if self.distinct_used != self.t {
            return false;
        }
        for &mask in &self.used {
            if mask == 0 {
                continue;
            }
            let lo = mask.trailing_zeros();
            let hi = 63 - mask.leading_zeros();
            // Colors at a vertex are distinct under properness, so the
            // spectrum is consecutive iff span equals popcount.
            if hi - lo + 1 != mask.count_ones() {
                return false;
            }
        }
        true
    }

    fn recurse(&mut self, pos: usize, uses: &mut [u32]) -> bool {
        if pos == self.edges.len() {
            return self.leaf_is_interval();
        }
        let (u, v) = self.edges[pos];
        for c in 0..self.t {
            let bit = 1u64 << c;
            if self.used[u] & bit != 0 || self.used[v] & bit != 0 {
                continue;
            }
            self.used[u] |= bit;
            self.used[v] |= bit;
            uses[c as usize] += 1;
            if uses[c as usize] == 1 {
                self.distinct_used += 1;
            }
            if self.recurse(pos + 1, uses) {
                return true;
            }
            uses[c as usize] -= 1;
            if uses[c as usize] == 0 {
                self.distinct_used -= 1;
            }
            self.used[u] &= !bit;
            self.used[v] &= !bit;
        }
        false
    }
}

/// Ground-truth decision: does the graph admit an interval t-coloring?
pub fn naive_interval_decision(vertex_count: usize, edges: &[(usize, usize)], t: u32) -> bool {
    assert!(t >= 1 && t <= 64, "reference supports 1..=64 colors");
    let mut state = NaiveRef {
        edges,
        t,
        used: vec![0; vertex_count],
        distinct_used: 0,
    };
    let mut uses = vec![0u32; t as usize];
    state.recurse(0, &mut uses)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Minimum adjacency bitmask over all vertex relabelings; equal masks
/// mean isomorphic graphs (for at most 8 vertices).
fn canonical_mask(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    let mut best = u64::MAX;
    for perm in perms {
        let mut mask = 0u64;
        for &(a, b) in edges {
            let (x, y) = (perm[a], perm[b]);
            let (lo, hi) = if x < y { (x, y) } else { (y, x) };
            mask |= 1 << (lo * 8 + hi);
        }
        best = best.min(mask);
    }
    best
}

/// All connected graphs with 1..=max_edges edges (max 7), one per
/// isomorphism class, grown by edge augmentation: every connected graph
/// arises from a connected graph with one edge fewer by adding an edge
/// between existing vertices (any cycle edge reverses this) or attaching
/// a fresh vertex (a leaf edge reverses it).
pub fn connected_graphs_up_to(max_edges: usize) -> Vec<SmallGraph> {
    assert!((1..=7).contains(&max_edges), "vertex ids must fit 8 slots");
    let perms_by_size: Vec<Vec<Vec<usize>>> = (0..=max_edges + 1).map(permutations).collect();
    let mut all = Vec::new();
    let mut level: HashMap<(usize, u64), SmallGraph> = HashMap::new();
    let k2 = SmallGraph {
        vertex_count: 2,
        edges: vec![(0, 1)],
    };
    level.insert((2, canonical_mask(&k2.edges, &perms_by_size[2])), k2);

    for edge_count in 1..=max_edges {
        let mut sorted: Vec<&SmallGraph> = level.values().collect();
        sorted.sort_by_key(|g| (g.vertex_count, g.edges.clone()));
        all.extend(sorted.into_iter().cloned());
        if edge_count == max_edges {
            break;
        }
        let mut next: HashMap<(usize, u64), SmallGraph> = HashMap::new();
        for graph in level.values() {
            let mut push = |vertex_count: usize, mut edges: Vec<(usize, usize)>| {
                edges.sort_unstable();
                let key = (
                    vertex_count,
                    canonical_mask(&edges, &perms_by_size[vertex_count]),
                );
                next.entry(key).or_insert(SmallGraph {
                    vertex_count,
                    edges,
                });
            };
            for u in 0..graph.vertex_count {
                for v in (u + 1)..graph.vertex_count {
                    if !graph.edges.contains(&(u, v)) {
                        let mut edges = graph.edges.clone();
                        edges.push((u, v));
                        push(graph.vertex_count, edges);
                    }
                }
                let mut edges = graph.edges.clone();
                edges.push((u, graph.vertex_count));
                push(graph.vertex_count + 1, edges);
            }
        }
        level = next;
    }
    all
}

/// Connected-graph counts by edge count, used to validate the enumerator
/// against independently known values.
pub const CONNECTED_GRAPH_COUNTS: [usize; 7] = [1, 1, 3, 5, 12, 30, 79];
