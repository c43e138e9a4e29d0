//! JSON input documents.
//!
//! ```json
//! {
//!   "elements": ["P1", "P2", "P3"],
//!   "focals": [
//!     {"members": ["P1"], "mass": "1/3"},
//!     {"members": ["P2"], "mass": "1/3"},
//!     {"members": ["P3"], "mass": "0.3333333333333333"}
//!   ],
//!   "ordering": [1, 2, 3]
//! }
//! ```
//!
//! Masses are strings holding a decimal or a `p/q` rational. `ordering` is
//! optional and gives the confirmation position of each focal element.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frame::{parse_mass, BasicProbabilityAssignment, FrameError, FrameOfDiscernment};
use crate::ordinal::{OrdinalAssignment, OrdinalError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FocalSpec {
    pub members: Vec<String>,
    pub mass: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameDocument {
    pub elements: Vec<String>,
    pub focals: Vec<FocalSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ordering: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Parse(String),
    #[error("document does not match the schema: {0}")]
    Schema(String),
    #[error("{path}: {source}")]
    Invalid {
        path: String,
        #[source]
        source: FrameError,
    },
    #[error("ordering: {0}")]
    Ordering(#[source] OrdinalError),
}

impl DocumentError {
    fn at(path: impl Into<String>, source: FrameError) -> Self {
        Self::Invalid {
            path: path.into(),
            source,
        }
    }
}

/// A validated document: the assignment, plus its ordering when one was given.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedDocument {
    pub bpa: BasicProbabilityAssignment,
    pub ordinal: Option<OrdinalAssignment>,
}

impl FrameDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| match e.classify() {
            serde_json::error::Category::Data => DocumentError::Schema(e.to_string()),
            _ => DocumentError::Parse(e.to_string()),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn to_bpa(&self) -> Result<BasicProbabilityAssignment, DocumentError> {
        let frame = FrameOfDiscernment::new(&self.elements)
            .map_err(|e| DocumentError::at("elements", e))?;
        let mut entries = Vec::with_capacity(self.focals.len());
        for (i, spec) in self.focals.iter().enumerate() {
            let focal = frame
                .focal(&spec.members)
                .map_err(|e| DocumentError::at(format!("focals[{i}].members"), e))?;
            let mass = parse_mass(&spec.mass)
                .map_err(|e| DocumentError::at(format!("focals[{i}].mass"), e))?;
            entries.push((focal, mass));
        }
        BasicProbabilityAssignment::new(frame, entries).map_err(|e| {
            let path = match &e {
                FrameError::NonpositiveMass { index, .. } => format!("focals[{index}].mass"),
                _ => "focals".into(),
            };
            DocumentError::at(path, e)
        })
    }

    pub fn validate(&self) -> Result<ParsedDocument, DocumentError> {
        let bpa = self.to_bpa()?;
        let ordinal = self
            .ordering
            .as_deref()
            .map(|positions| OrdinalAssignment::from_positions(&bpa, positions))
            .transpose()
            .map_err(DocumentError::Ordering)?;
        Ok(ParsedDocument { bpa, ordinal })
    }
}

pub fn parse_frame_document(text: &str) -> Result<ParsedDocument, DocumentError> {
    FrameDocument::from_json(text)?.validate()
}

#[cfg(test)]
mod tests {
    use super::*;

    const EQUAL_THIRDS: &str = r#"{"elements":["P1","P2","P3"],"focals":[{"members":["P1"],"mass":"1/3"},{"members":["P2"],"mass":"1/3"},{"members":["P3"],"mass":"1/3"}],"ordering":[1,2,3]}"#;

    #[test]
    fn parses_ordered_document() {
        let parsed = parse_frame_document(EQUAL_THIRDS).unwrap();
        assert_eq!(parsed.bpa.len(), 3);
        assert_eq!(parsed.bpa.entries()[0].1, 1.0 / 3.0);
        assert_eq!(parsed.ordinal.unwrap().sequence(), vec![0, 1, 2]);
    }

    #[test]
    fn ordering_is_optional() {
        let text = EQUAL_THIRDS.replace(r#","ordering":[1,2,3]"#, "");
        let parsed = parse_frame_document(&text).unwrap();
        assert!(parsed.ordinal.is_none());
    }

    #[test]
    fn zero_mass_reports_path() {
        let text = r#"{"elements":["P1","P2"],"focals":[{"members":["P1"],"mass":"1"},{"members":["P2"],"mass":"0/1"}]}"#;
        match parse_frame_document(text) {
            Err(DocumentError::Invalid { path, source }) => {
                assert_eq!(path, "focals[1].mass");
                assert_eq!(
                    source,
                    FrameError::NonpositiveMass {
                        index: 1,
                        mass: 0.0
                    }
                );
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn error_classes() {
        assert!(matches!(
            parse_frame_document("{not json"),
            Err(DocumentError::Parse(_))
        ));
        assert!(matches!(
            parse_frame_document(r#"{"elements":["P1"]}"#),
            Err(DocumentError::Schema(_))
        ));
        assert!(matches!(
            parse_frame_document(r#"{"elements":["P1"],"focals":[{"members":["P1"],"mass":1}]}"#),
            Err(DocumentError::Schema(_))
        ));
        let unknown = r#"{"elements":["P1"],"focals":[{"members":["P9"],"mass":"1"}]}"#;
        match parse_frame_document(unknown) {
            Err(DocumentError::Invalid { path, .. }) => assert_eq!(path, "focals[0].members"),
            other => panic!("unexpected {other:?}"),
        }
        let bad_order = EQUAL_THIRDS.replace("[1,2,3]", "[1,1,3]");
        assert!(matches!(
            parse_frame_document(&bad_order),
            Err(DocumentError::Ordering(_))
        ));
        let dup = r#"{"elements":["P1","P1"],"focals":[{"members":["P1"],"mass":"1"}]}"#;
        match parse_frame_document(dup) {
            Err(DocumentError::Invalid { path, source }) => {
                assert_eq!(path, "elements");
                assert_eq!(source, FrameError::DuplicateElement("P1".into()));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trip_keeps_mass_strings() {
        let doc = FrameDocument::from_json(EQUAL_THIRDS).unwrap();
        let again = FrameDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(doc, again);
        let a = doc.to_bpa().unwrap();
        let b = again.to_bpa().unwrap();
        for (x, y) in a.entries().iter().zip(b.entries()) {
            assert_eq!(x.1.to_bits(), y.1.to_bits());
        }
    }
}
