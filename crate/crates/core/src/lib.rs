//! Signless-Laplacian least eigenvalue and domination number of small graphs.
//!
//! The crate builds the graph families used in extremal `q_min` results,
//! computes exact domination numbers and `Q`-spectra, enumerates small graphs
//! up to isomorphism, and runs exhaustive certification suites that emit
//! machine-readable reports.

pub mod canon;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod spectral;
pub mod verify;

pub use canon::{canonical_form, CanonicalForm};
pub use error::{
    DominationError, EnumerateError, FamilyError, GraphError, SpectralError, VerifyError,
};
pub use families::{FamilyGraph, FamilySpec};
pub use graph::{Graph, VertexSet};
