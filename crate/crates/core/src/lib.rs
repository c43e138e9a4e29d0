//! Ordinal relative belief entropy for Dempster-Shafer frames of discernment.
//!
//! The crate measures the uncertainty of a basic probability assignment whose
//! focal elements are confirmed in a given order ([`ordinal`]), averages that
//! measure over every order for unordered assignments ([`permutation`]) and
//! provides the classic Deng and Dubois & Prade entropies for comparison
//! ([`classic`]).
//!
//! ```
//! use ordinal_entropy::document::parse_frame_document;
//! use ordinal_entropy::ordinal::compute_ordinal_entropy;
//!
//! let doc = r#"{"elements":["P1","P2","P3"],
//!     "focals":[{"members":["P1"],"mass":"1/3"},
//!               {"members":["P2"],"mass":"1/3"},
//!               {"members":["P3"],"mass":"1/3"}],
//!     "ordering":[1,2,3]}"#;
//! let parsed = parse_frame_document(doc).unwrap();
//! let report = compute_ordinal_entropy(parsed.ordinal.as_ref().unwrap()).unwrap();
//! assert!((report.inu - 2.1087).abs() < 1e-3);
//! ```

pub mod classic;
pub mod document;
pub mod frame;
pub mod ordinal;
pub mod permutation;
pub mod render;
pub mod reproduce;

pub use classic::{deng_entropy, dp_hartley_entropy, EntropyValue};
pub use document::{parse_frame_document, DocumentError, FrameDocument, ParsedDocument};
pub use frame::{BasicProbabilityAssignment, FocalElement, FrameError, FrameOfDiscernment};
pub use ordinal::{compute_ordinal_entropy, OrdinalAssignment, OrdinalEntropyReport, OrdinalError};
pub use permutation::{average_inu, enumerate_orderings, PermutationError, PermutationReport};
pub use reproduce::{run_reproduce, ErrataRecord, TableSelector};
