//! Interval edge colorings of complete graphs and hypercubes.
//!
//! An interval t-coloring is a proper edge coloring with colors `1..=t`
//! in which every color is used and the colors at each vertex form a run
//! of consecutive integers of length equal to the vertex degree. This
//! crate provides, for even complete graphs K_{2n} and hypercubes Q_n:
//!
//! * generators and structural queries ([`graph`]);
//! * the coloring data model and the proper/interval verifiers
//!   ([`coloring`]);
//! * upper bounds on the largest feasible palette and closed-form
//!   membership facts ([`bounds`]);
//! * constructive colorings — round-robin and dimension colorings,
//!   size-doubling steps that add `4m-1` / `n` colors, towers of those
//!   steps, and the downshift that realizes every palette size between
//!   the degree and the tower maximum ([`construct`]);
//! * an exhaustive backtracking oracle deciding interval
//!   t-colorability exactly at desk scale ([`search`]);
//! * re-verified certificates and a content-addressed store ([`cert`]);
//! * batch reports and DOT/CSV export ([`report`], [`export`]).
//!
//! All values are immutable after construction and all operations are
//! deterministic pure functions, so everything here is safe to share
//! across threads.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod cert;
pub mod coloring;
pub mod construct;
pub mod export;
pub mod graph;
pub mod report;
pub mod search;

pub use bounds::{family_membership, upper_bound_max_t, BoundReport, BoundRule, Membership};
pub use cert::{Certificate, CertificateError, CertificateStore, Provenance};
pub use coloring::{
    verify_interval, verify_proper, vertex_spectrum, ColoringError, EdgeColoring, IntervalVerdict,
    ProperVerdict, VertexSpectrum,
};
pub use construct::{
    build_complete_tower, build_hypercube_tower, canonical_complete_coloring, dimension_coloring,
    double_complete, double_hypercube, downshift_regular, spectrum_colorings, ConstructError,
    DoublingTrace, FactorizationParams,
};
pub use graph::{Family, Graph, GraphError, StructuralProfile, VertexIncidence};
pub use search::{
    exact_max_t, exact_max_t_from, exact_min_t, find_interval_coloring, make_certificate,
    MaxPaletteResult, MinPaletteResult, SearchBudget, SearchOptions, SearchOutcome, SearchStatus,
};
