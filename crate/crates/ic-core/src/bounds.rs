//! Upper bounds on the largest feasible palette and closed-form
//! membership facts for the two generated families.
//!
//! All upper bounds are conditional: they hold only if the graph admits
//! an interval coloring at all, and the report carries that caveat
//! explicitly instead of asserting the bounds unconditionally.

use crate::graph::{Family, StructuralProfile};
use serde::Serialize;

/// The individual upper-bound rules. Each is gated on the structural
/// facts it needs; `value` is reported even when the gate fails so the
/// numbers can be audited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundRule {
    /// diameter * (max_degree - 1) + 1, for connected bipartite graphs.
    BipartiteDiameter,
    /// 2|V| - 3, for graphs with at least one edge.
    TwiceOrderMinusThree,
    /// 2|V| - 4, for graphs on at least three vertices.
    TwiceOrderMinusFour,
    /// |V| - 1, for triangle-free graphs.
    TriangleFreeOrder,
}

impl std::fmt::Display for BoundRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundRule::BipartiteDiameter => write!(f, "d*(max_degree-1)+1 (bipartite)"),
            BoundRule::TwiceOrderMinusThree => write!(f, "2|V|-3"),
            BoundRule::TwiceOrderMinusFour => write!(f, "2|V|-4"),
            BoundRule::TriangleFreeOrder => write!(f, "|V|-1 (triangle-free)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub rule: BoundRule,
    /// The formula value, when its inputs are defined.
    pub value: Option<i64>,
    /// Whether the rule's hypothesis holds for this graph.
    pub applicable: bool,
}

/// Per-graph record of the applicable upper bounds on the largest
/// feasible palette, with the minimum extracted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
    /// Minimum over applicable bounds; `None` when no rule applies
    /// (edgeless graphs).
    pub upper_max_t: Option<u32>,
    /// The bounds presuppose the graph is interval-colorable at all.
    pub conditional_on_colorability: bool,
}

impl BoundReport {
    pub fn best_entry(&self) -> Option<&BoundEntry> {
        self.entries
            .iter()
            .filter(|e| e.applicable)
            .min_by_key(|e| e.value.unwrap_or(i64::MAX))
    }
}

/// Evaluates every upper-bound rule against a structural profile. Each
/// applicable value is at least 1 (a graph with an edge always gets a
/// positive ceiling).
pub fn upper_bound_max_t(profile: &StructuralProfile) -> BoundReport {
    let v = profile.vertex_count as i64;
    let has_edges = profile.edge_count > 0;
    let mut entries = Vec::with_capacity(4);

    let diameter_value = profile
        .diameter
        .map(|d| d as i64 * (profile.max_degree as i64 - 1) + 1);
    entries.push(BoundEntry {
        rule: BoundRule::BipartiteDiameter,
        value: diameter_value,
        applicable: has_edges && profile.is_bipartite && diameter_value.is_some(),
    });
    entries.push(BoundEntry {
        rule: BoundRule::TwiceOrderMinusThree,
        value: Some(2 * v - 3),
        applicable: has_edges,
    });
    entries.push(BoundEntry {
        rule: BoundRule::TwiceOrderMinusFour,
        value: Some(2 * v - 4),
        applicable: has_edges && profile.vertex_count >= 3,
    });
    entries.push(BoundEntry {
        rule: BoundRule::TriangleFreeOrder,
        value: Some(v - 1),
        applicable: has_edges && profile.is_triangle_free,
    });

    let upper_max_t = entries
        .iter()
        .filter(|e| e.applicable)
        .filter_map(|e| e.value)
        .min()
        .map(|m| u32::try_from(m).expect("applicable bounds are positive"));

    BoundReport {
        entries,
        upper_max_t,
        conditional_on_colorability: true,
    }
}

/// Closed-form membership verdict for a family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    /// Interval-colorable, with the minimum feasible palette size.
    Colorable { min_t: u32 },
    NotColorable,
    /// Generic graphs: only the search oracle can decide.
    Unknown,
}

/// Membership and minimum palette for the generated families: even
/// complete graphs are colorable with min palette `vertices - 1`, odd
/// complete graphs are not colorable at all, hypercubes are colorable
/// with min palette equal to the dimension.
pub fn family_membership(family: Family) -> Membership {
    match family {
        Family::Complete { vertices } => {
            if vertices % 2 == 0 {
                Membership::Colorable {
                    min_t: (vertices - 1) as u32,
                }
            } else {
                Membership::NotColorable
            }
        }
        Family::Hypercube { dimension } => Membership::Colorable {
            min_t: dimension as u32,
        },
        Family::Generic => Membership::Unknown,
    }
}
