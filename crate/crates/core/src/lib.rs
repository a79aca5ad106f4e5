//! Graphical small cancellation: pieces, C(p) and T(q) checks, vertex links of
//! the coned-off complex, and the CAT(0)/CAT(−1) link condition.
//!
//! The input is an immersion `f: Γ → Θ` of finite graphs, read from the JSON
//! format in [`format`].

pub mod complex;
pub mod corpus;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod metrics;
pub mod pieces;
pub mod presentation;
pub mod report;
pub mod tcond;

pub use complex::{build_complex, link_girth_report, ComplexVertex, LinkGraph, TriangleComplex};
pub use format::{parse, serialize, ParseError, ParseOptions};
pub use graph::{ClosedWalk, Dart, SerreGraph, Vertex, Walk};
pub use metrics::{verify_link_condition, AngleQ, MetricSpec, Model, Sides};
pub use pieces::{build_fiber_product, check_c, max_piece_length, min_piece_cover, CVerdict, PieceLength};
pub use presentation::{subdivide, Presentation};
pub use tcond::{check_t, find_t_witness, necessary_link_girth, witness_from_long_piece, JasmineWitness, TVerdict};

/// Exact angle in units of π.
pub type Angle = metrics::Angle;
/// Exact rational used for angle coefficients.
pub type Rational = num_rational::Ratio<i64>;
pub type Sides64 = metrics::Sides64;
pub type Sides32 = metrics::Sides32;
