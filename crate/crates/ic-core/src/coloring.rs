//! Edge colorings, vertex spectra, and the proper/interval verifiers.
//!
//! A coloring stores the graph's content hash rather than the graph
//! itself; every operation re-checks the binding so a coloring can never
//! silently be applied to the wrong graph.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Version tag written into every coloring file.
pub const COLORING_FORMAT: &str = "ic-coloring/1";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("palette size t must be at least 1")]
    ZeroPalette,
    #[error("coloring has {got} colors but the graph has {expected} edges")]
    LengthMismatch { got: usize, expected: usize },
    #[error("edge {edge} has color {color}, outside 1..={t}")]
    ColorOutOfRange { edge: usize, color: u32, t: u32 },
    #[error("coloring is bound to a different graph (content hash mismatch)")]
    GraphMismatch,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("unsupported coloring format `{0}`, expected `{COLORING_FORMAT}`")]
    UnsupportedFormat(String),
    #[error("malformed coloring file: {0}")]
    Malformed(String),
}

/// An assignment of a color in `1..=t` to every edge of one specific
/// graph, identified by content hash. Colors align with the graph's
/// canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    graph_hash: String,
    t: u32,
    colors: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct ColoringFile {
    format: String,
    graph_hash: String,
    t: u32,
    colors: Vec<u32>,
}

impl EdgeColoring {
    /// Validates length and color range against `graph` and binds the
    /// coloring to it. Palette coverage (every color used) is checked by
    /// [`verify_interval`], not here, so callers may hold colorings that
    /// use only part of the declared palette.
    pub fn new(graph: &Graph, t: u32, colors: Vec<u32>) -> Result<Self, ColoringError> {
        if t == 0 {
            return Err(ColoringError::ZeroPalette);
        }
        if colors.len() != graph.edge_count() {
            return Err(ColoringError::LengthMismatch {
                got: colors.len(),
                expected: graph.edge_count(),
            });
        }
        for (edge, &color) in colors.iter().enumerate() {
            if color == 0 || color > t {
                return Err(ColoringError::ColorOutOfRange { edge, color, t });
            }
        }
        Ok(EdgeColoring {
            graph_hash: graph.content_hash(),
            t,
            colors,
        })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_of(&self, edge_index: usize) -> u32 {
        self.colors[edge_index]
    }

    pub fn graph_hash(&self) -> &str {
        &self.graph_hash
    }

    pub fn is_bound_to(&self, graph: &Graph) -> bool {
        self.graph_hash == graph.content_hash()
    }

    fn ensure_bound(&self, graph: &Graph) -> Result<(), ColoringError> {
        if self.is_bound_to(graph) {
            Ok(())
        } else {
            Err(ColoringError::GraphMismatch)
        }
    }

    pub fn to_json(&self) -> String {
        let file = ColoringFile {
            format: COLORING_FORMAT.to_string(),
            graph_hash: self.graph_hash.clone(),
            t: self.t,
            colors: self.colors.clone(),
        };
        serde_json::to_string(&file).expect("coloring serialization cannot fail")
    }

    /// Parses a coloring file and binds it to `graph`, rejecting hash
    /// mismatches and structurally invalid color data.
    pub fn from_json(text: &str, graph: &Graph) -> Result<Self, ColoringError> {
        let file: ColoringFile =
            serde_json::from_str(text).map_err(|e| ColoringError::Malformed(e.to_string()))?;
        if file.format != COLORING_FORMAT {
            return Err(ColoringError::UnsupportedFormat(file.format));
        }
        if file.graph_hash != graph.content_hash() {
            return Err(ColoringError::GraphMismatch);
        }
        EdgeColoring::new(graph, file.t, file.colors)
    }
}

/// The sorted set of distinct colors on edges incident to one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSpectrum {
    pub vertex: usize,
    pub colors: Vec<u32>,
}

impl VertexSpectrum {
    pub fn min(&self) -> Option<u32> {
        self.colors.first().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.colors.last().copied()
    }

    /// True when the spectrum is a run of consecutive integers of the
    /// given length (vacuously true for isolated vertices).
    pub fn is_consecutive_run_of(&self, degree: usize) -> bool {
        if self.colors.len() != degree {
            return false;
        }
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize == degree,
            _ => degree == 0,
        }
    }
}

/// Distinct sorted colors incident to `v`.
pub fn vertex_spectrum(
    graph: &Graph,
    coloring: &EdgeColoring,
    v: usize,
) -> Result<VertexSpectrum, ColoringError> {
    coloring.ensure_bound(graph)?;
    if v >= graph.vertex_count() {
        return Err(ColoringError::VertexOutOfRange(v));
    }
    let incidence = graph.incidence();
    let mut colors: Vec<u32> = incidence
        .edges_at(v)
        .iter()
        .map(|&e| coloring.color_of(e))
        .collect();
    colors.sort_unstable();
    colors.dedup();
    Ok(VertexSpectrum { vertex: v, colors })
}

/// Outcome of the properness check. The witness is the first conflict in
/// (vertex id, edge index) order, so reruns report identical failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProperVerdict {
    Ok,
    Violation {
        vertex: usize,
        first_edge: usize,
        second_edge: usize,
    },
}

impl ProperVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, ProperVerdict::Ok)
    }
}

impl std::fmt::Display for ProperVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProperVerdict::Ok => write!(f, "ok"),
            ProperVerdict::Violation {
                vertex,
                first_edge,
                second_edge,
            } => write!(
                f,
                "edges {first_edge} and {second_edge} share vertex {vertex} and a color"
            ),
        }
    }
}

/// Outcome of the full interval check, distinguishing the three failure
/// classes: properness, per-vertex consecutiveness, palette coverage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalVerdict {
    Ok,
    NotProper {
        vertex: usize,
        first_edge: usize,
        second_edge: usize,
    },
    NotConsecutive {
        vertex: usize,
        degree: usize,
        spectrum_min: u32,
        spectrum_max: u32,
    },
    UnusedColor {
        color: u32,
    },
}

impl IntervalVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, IntervalVerdict::Ok)
    }
}

impl std::fmt::Display for IntervalVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IntervalVerdict::Ok => write!(f, "ok"),
            IntervalVerdict::NotProper {
                vertex,
                first_edge,
                second_edge,
            } => write!(
                f,
                "not proper: edges {first_edge} and {second_edge} share vertex {vertex} and a color"
            ),
            IntervalVerdict::NotConsecutive {
                vertex,
                degree,
                spectrum_min,
                spectrum_max,
            } => write!(
                f,
                "vertex {vertex} has degree {degree} but its colors span [{spectrum_min}, {spectrum_max}]"
            ),
            IntervalVerdict::UnusedColor { color } => {
                write!(f, "color {color} is not used by any edge")
            }
        }
    }
}

/// Checks that no two edges sharing a vertex have equal color.
pub fn verify_proper(graph: &Graph, coloring: &EdgeColoring) -> Result<ProperVerdict, ColoringError> {
    coloring.ensure_bound(graph)?;
    let incidence = graph.incidence();
    for v in 0..graph.vertex_count() {
        let edges = incidence.edges_at(v);
        for (i, &e1) in edges.iter().enumerate() {
            for &e2 in &edges[i + 1..] {
                if coloring.color_of(e1) == coloring.color_of(e2) {
                    return Ok(ProperVerdict::Violation {
                        vertex: v,
                        first_edge: e1,
                        second_edge: e2,
                    });
                }
            }
        }
    }
    Ok(ProperVerdict::Ok)
}

/// Full interval check: proper, every vertex's colors form exactly
/// `degree` consecutive integers, and every color `1..=t` occurs on some
/// edge. Failures name the first witness in deterministic order.
pub fn verify_interval(
    graph: &Graph,
    coloring: &EdgeColoring,
) -> Result<IntervalVerdict, ColoringError> {
    coloring.ensure_bound(graph)?;
    if let ProperVerdict::Violation {
        vertex,
        first_edge,
        second_edge,
    } = verify_proper(graph, coloring)?
    {
        return Ok(IntervalVerdict::NotProper {
            vertex,
            first_edge,
            second_edge,
        });
    }
    let incidence = graph.incidence();
    for v in 0..graph.vertex_count() {
        let edges = incidence.edges_at(v);
        if edges.is_empty() {
            continue;
        }
        let mut lo = u32::MAX;
        let mut hi = 0u32;
        for &e in edges {
            let c = coloring.color_of(e);
            lo = lo.min(c);
            hi = hi.max(c);
        }
        // Properness already holds, so the colors at v are distinct and
        // the spectrum is consecutive iff its span equals the degree.
        if (hi - lo + 1) as usize != edges.len() {
            return Ok(IntervalVerdict::NotConsecutive {
                vertex: v,
                degree: edges.len(),
                spectrum_min: lo,
                spectrum_max: hi,
            });
        }
    }
    let t = coloring.t() as usize;
    let edge_count = graph.edge_count();
    // Only edge_count colors can be in use; anything beyond that range is
    // unused without scanning.
    let tracked = t.min(edge_count + 1);
    let mut used = vec![false; tracked + 1];
    for &c in coloring.colors() {
        let c = c as usize;
        if c <= tracked {
            used[c] = true;
        }
    }
    for color in 1..=t {
        if color > tracked || !used[color] {
            return Ok(IntervalVerdict::UnusedColor { color: color as u32 });
        }
    }
    Ok(IntervalVerdict::Ok)
}
