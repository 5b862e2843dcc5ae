//! One-way export formats: DOT (edges labeled with their colors) and CSV
//! rows `u,v,color`. Output follows canonical edge order, so identical
//! inputs export identically.

use crate::coloring::{ColoringError, EdgeColoring};
use crate::graph::Graph;

/// Renders a graph in DOT, labeling edges with their colors when a
/// coloring is supplied. Isolated vertices are emitted as bare nodes.
pub fn to_dot(graph: &Graph, coloring: Option<&EdgeColoring>) -> Result<String, ColoringError> {
    if let Some(c) = coloring {
        if !c.is_bound_to(graph) {
            return Err(ColoringError::GraphMismatch);
        }
    }
    let mut out = String::from("graph ic {\n");
    let incidence = graph.incidence();
    for v in 0..graph.vertex_count() {
        if incidence.degree(v) == 0 {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (idx, &(u, v)) in graph.edges().iter().enumerate() {
        match coloring {
            Some(c) => out.push_str(&format!("  {u} -- {v} [label=\"{}\"];\n", c.color_of(idx))),
            None => out.push_str(&format!("  {u} -- {v};\n")),
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Renders a coloring as CSV with header `u,v,color`.
pub fn to_csv(graph: &Graph, coloring: &EdgeColoring) -> Result<String, ColoringError> {
    if !coloring.is_bound_to(graph) {
        return Err(ColoringError::GraphMismatch);
    }
    let mut out = String::from("u,v,color\n");
    for (idx, &(u, v)) in graph.edges().iter().enumerate() {
        out.push_str(&format!("{u},{v},{}\n", coloring.color_of(idx)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::dimension_coloring;

    #[test]
    fn dot_labels_edges_with_colors() {
        let (g, c) = dimension_coloring(2).unwrap();
        let dot = to_dot(&g, Some(&c)).unwrap();
        assert!(dot.starts_with("graph ic {"));
        assert!(dot.contains("0 -- 1 [label=\"1\"];"));
        assert!(dot.contains("0 -- 2 [label=\"2\"];"));
    }

    #[test]
    fn dot_without_coloring_lists_plain_edges() {
        let g = Graph::generic(3, vec![(0, 1)]).unwrap();
        let dot = to_dot(&g, None).unwrap();
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("  2;\n"));
    }

    #[test]
    fn csv_rows_follow_canonical_edge_order() {
        let (g, c) = dimension_coloring(2).unwrap();
        let csv = to_csv(&g, &c).unwrap();
        assert_eq!(csv, "u,v,color\n0,1,1\n0,2,2\n1,3,2\n2,3,1\n");
    }

    #[test]
    fn exports_reject_unbound_colorings() {
        let (_, c) = dimension_coloring(2).unwrap();
        let other = Graph::complete(3).unwrap();
        assert!(to_dot(&other, Some(&c)).is_err());
        assert!(to_csv(&other, &c).is_err());
    }
}
