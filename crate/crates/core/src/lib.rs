//! Degree-based topological indices of double-wheel and Hanoi graphs.
//!
//! The crate builds the two graph families, partitions their edges by
//! endpoint labels, evaluates six indices by direct edge summation and
//! checks the published closed forms against those sums.
//!
//! ```
//! use degree_indices::{closed_forms, generators, indices::{compute_index, IndexKind}};
//!
//! let h3 = generators::hanoi(3).unwrap();
//! let brute = compute_index(&h3, IndexKind::Abc);
//! let closed = closed_forms::hanoi_closed_form(IndexKind::Abc, 3).unwrap().value;
//! assert!((brute - closed).abs() < 1e-12 * brute);
//! ```

pub mod closed_forms;
pub mod edgelist;
pub mod error;
pub mod generators;
pub mod graph;
pub mod indices;
pub mod partition;
pub mod render;
pub mod verify;

pub use closed_forms::{ClosedFormResult, FormulaVariant};
pub use error::{Error, Result};
pub use generators::Family;
pub use graph::{Edge, Graph, Violation};
pub use indices::IndexKind;
pub use partition::{DegreePairKey, EdgePartition, Labeling};
pub use verify::VerificationReport;
