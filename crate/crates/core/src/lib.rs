//! Graph burning on trees.
//!
//! * [`graph`]: immutable graphs and trees, structural queries, generators.
//! * [`burning`]: the burning process, sequence validation, canonicalization.
//! * [`exact`]: exact burning numbers for small graphs.
//! * [`bounds`]: exact integer evaluation of closed-form burning bounds.
//! * [`construct`]: constructive burning sequences for trees that meet
//!   `ceil(sqrt(n + n2 - ceil(sqrt(n + n2 + 1/4) - 3/2)))` rounds.
//! * [`certificate`]: self-checking JSON certificates.
//! * [`bench`]: seeded corpus runs producing CSV rows.

pub mod bench;
pub mod bounds;
pub mod burning;
pub mod certificate;
pub mod construct;
pub mod edgelist;
pub mod exact;
pub mod graph;

pub use burning::{
    canonicalize, simulate, validate_sequence, BurnError, BurningSequence, RoundLabeling, Schedule,
};
pub use graph::{Forest, Graph, GraphError, Tree, Vertex};
