//! Frames of discernment, focal elements and basic probability assignments.
//!
//! A [`FrameOfDiscernment`] is an ordered list of named base elements. Subsets
//! of the frame are stored as bitmasks over that ordering, so a
//! [`FocalElement`] is a nonempty mask and a [`BasicProbabilityAssignment`]
//! is a validated list of `(focal, mass)` pairs whose masses sum to one.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Largest number of base elements a frame may hold.
pub const MAX_FRAME_SIZE: usize = 20;

/// Allowed deviation of the mass total from one.
pub const MASS_SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrameError {
    #[error("frame must contain at least one element")]
    EmptyFrame,
    #[error("element names must be nonempty")]
    EmptyElementName,
    #[error("duplicate element `{0}` in frame")]
    DuplicateElement(String),
    #[error("frame has {0} elements, at most {MAX_FRAME_SIZE} are supported")]
    FrameTooLarge(usize),
    #[error("element `{0}` is not part of the frame")]
    UnknownElement(String),
    #[error("a focal element needs at least one member")]
    EmptySubset,
    #[error("an assignment needs at least one focal element")]
    EmptyAssignment,
    #[error("masses sum to {sum}, expected 1 within {MASS_SUM_TOLERANCE:e}")]
    MassSumViolation { sum: f64 },
    #[error("mass {mass} of focal element {index} is not positive")]
    NonpositiveMass { index: usize, mass: f64 },
    #[error("focal element {0} appears more than once")]
    DuplicateFocal(String),
    #[error("cannot parse mass `{0}`: expected a decimal or a p/q rational")]
    InvalidMass(String),
}

/// Ordered registry of the named base elements of a finite universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameOfDiscernment {
    elements: Vec<String>,
}

impl FrameOfDiscernment {
    /// Builds a frame whose bit indices follow the order of `names`.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, FrameError> {
        if names.is_empty() {
            return Err(FrameError::EmptyFrame);
        }
        if names.len() > MAX_FRAME_SIZE {
            return Err(FrameError::FrameTooLarge(names.len()));
        }
        let mut seen = HashSet::with_capacity(names.len());
        let mut elements = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            if name.is_empty() {
                return Err(FrameError::EmptyElementName);
            }
            if !seen.insert(name) {
                return Err(FrameError::DuplicateElement(name.to_owned()));
            }
            elements.push(name.to_owned());
        }
        Ok(Self { elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    /// Creates the focal element made of `members`. Repeated names are
    /// collapsed, so the cardinality counts distinct members.
    pub fn focal<S: AsRef<str>>(&self, members: &[S]) -> Result<FocalElement, FrameError> {
        if members.is_empty() {
            return Err(FrameError::EmptySubset);
        }
        let mut mask = 0u32;
        for member in members {
            let member = member.as_ref();
            let idx = self
                .index_of(member)
                .ok_or_else(|| FrameError::UnknownElement(member.to_owned()))?;
            mask |= 1 << idx;
        }
        Ok(FocalElement { mask })
    }

    /// Human label for a focal element: `P1` for singletons, `{P1,P2}` otherwise.
    pub fn label(&self, focal: FocalElement) -> String {
        let names: Vec<&str> = focal.indices().map(|i| self.elements[i].as_str()).collect();
        if names.len() == 1 {
            names[0].to_owned()
        } else {
            format!("{{{}}}", names.join(","))
        }
    }
}

/// A nonempty subset of a frame, as a bitmask over the frame's element order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FocalElement {
    mask: u32,
}

impl FocalElement {
    /// Wraps a raw mask. Returns `None` for the empty set.
    pub fn from_mask(mask: u32) -> Option<Self> {
        (mask != 0).then_some(Self { mask })
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    pub fn cardinality(self) -> u32 {
        self.mask.count_ones()
    }

    /// Bit indices of the members, ascending.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.mask;
        (0..32).filter(move |i| mask & (1 << i) != 0)
    }
}

impl fmt::Display for FocalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#b}", self.mask)
    }
}

/// A validated mass function. Entry order is kept as given.
#[derive(Debug, Clone, PartialEq)]
pub struct BasicProbabilityAssignment {
    frame: FrameOfDiscernment,
    entries: Vec<(FocalElement, f64)>,
}

impl BasicProbabilityAssignment {
    pub fn new(
        frame: FrameOfDiscernment,
        entries: Vec<(FocalElement, f64)>,
    ) -> Result<Self, FrameError> {
        if entries.is_empty() {
            return Err(FrameError::EmptyAssignment);
        }
        let full = (1u32 << frame.len()) - 1;
        let mut seen = HashSet::with_capacity(entries.len());
        for (index, &(focal, mass)) in entries.iter().enumerate() {
            if focal.mask() & !full != 0 {
                return Err(FrameError::UnknownElement(focal.to_string()));
            }
            if !(mass.is_finite() && mass > 0.0) {
                return Err(FrameError::NonpositiveMass { index, mass });
            }
            if !seen.insert(focal) {
                return Err(FrameError::DuplicateFocal(frame.label(focal)));
            }
        }
        let sum: f64 = entries.iter().map(|&(_, m)| m).sum();
        if (sum - 1.0).abs() > MASS_SUM_TOLERANCE {
            return Err(FrameError::MassSumViolation { sum });
        }
        Ok(Self { frame, entries })
    }

    pub fn frame(&self) -> &FrameOfDiscernment {
        &self.frame
    }

    pub fn entries(&self) -> &[(FocalElement, f64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries sorted by ascending bitmask, independent of input order.
    pub fn canonical_entries(&self) -> Vec<(FocalElement, f64)> {
        let mut sorted = self.entries.clone();
        sorted.sort_by_key(|&(focal, _)| focal);
        sorted
    }
}

/// Parses a mass written as a decimal (`0.25`) or a rational (`1/4`).
pub fn parse_mass(text: &str) -> Result<f64, FrameError> {
    let invalid = || FrameError::InvalidMass(text.to_owned());
    let trimmed = text.trim();
    let value = match trimmed.split_once('/') {
        Some((num, den)) => {
            let num: u64 = num.trim().parse().map_err(|_| invalid())?;
            let den: u64 = den.trim().parse().map_err(|_| invalid())?;
            if den == 0 {
                return Err(invalid());
            }
            num as f64 / den as f64
        }
        None => trimmed.parse::<f64>().map_err(|_| invalid())?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(invalid())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> FrameOfDiscernment {
        FrameOfDiscernment::new(&["P1", "P2", "P3"]).unwrap()
    }

    #[test]
    fn builds_frames() {
        assert_eq!(p3().len(), 3);
        assert_eq!(FrameOfDiscernment::new(&["P1"]).unwrap().len(), 1);
        assert_eq!(
            FrameOfDiscernment::new(&["P1", "P1"]),
            Err(FrameError::DuplicateElement("P1".into()))
        );
        assert_eq!(
            FrameOfDiscernment::new::<&str>(&[]),
            Err(FrameError::EmptyFrame)
        );
        assert_eq!(
            FrameOfDiscernment::new(&["P1", ""]),
            Err(FrameError::EmptyElementName)
        );
        let big: Vec<String> = (0..21).map(|i| format!("E{i}")).collect();
        assert_eq!(
            FrameOfDiscernment::new(&big),
            Err(FrameError::FrameTooLarge(21))
        );
    }

    #[test]
    fn focal_cardinality() {
        let frame = p3();
        let union = frame.focal(&["P1", "P2"]).unwrap();
        assert_eq!(union.cardinality(), 2);
        assert_eq!(union.mask(), 0b011);
        assert_eq!(frame.label(union), "{P1,P2}");
        let one = FrameOfDiscernment::new(&["P1"]).unwrap();
        assert_eq!(one.focal(&["P1"]).unwrap().cardinality(), 1);
        assert_eq!(frame.focal(&["P2", "P2"]).unwrap().cardinality(), 1);
        assert_eq!(frame.focal::<&str>(&[]), Err(FrameError::EmptySubset));
        assert_eq!(
            frame.focal(&["P9"]),
            Err(FrameError::UnknownElement("P9".into()))
        );
        assert!(FocalElement::from_mask(0).is_none());
    }

    #[test]
    fn validates_assignments() {
        let frame = p3();
        let single = |n: &str| frame.focal(&[n]).unwrap();
        let third = 1.0 / 3.0;
        let bpa = BasicProbabilityAssignment::new(
            frame.clone(),
            vec![
                (single("P1"), third),
                (single("P2"), third),
                (single("P3"), third),
            ],
        )
        .unwrap();
        assert_eq!(bpa.len(), 3);
        assert_eq!(bpa.entries()[1], (single("P2"), third));

        assert!(BasicProbabilityAssignment::new(frame.clone(), vec![(single("P1"), 1.0)]).is_ok());

        match BasicProbabilityAssignment::new(
            frame.clone(),
            vec![(single("P1"), 0.5), (single("P2"), 0.4)],
        ) {
            Err(FrameError::MassSumViolation { sum }) => assert!((sum - 0.9).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            BasicProbabilityAssignment::new(
                frame.clone(),
                vec![(single("P1"), 1.0), (single("P2"), 0.0)]
            ),
            Err(FrameError::NonpositiveMass {
                index: 1,
                mass: 0.0
            })
        );
        assert_eq!(
            BasicProbabilityAssignment::new(
                frame.clone(),
                vec![(single("P1"), 0.5), (single("P1"), 0.5)]
            ),
            Err(FrameError::DuplicateFocal("P1".into()))
        );
        assert_eq!(
            BasicProbabilityAssignment::new(frame, vec![]),
            Err(FrameError::EmptyAssignment)
        );
    }

    #[test]
    fn thirteenths_pass_the_sum_tolerance() {
        let frame = p3();
        let entries = vec![
            (frame.focal(&["P1"]).unwrap(), parse_mass("4/13").unwrap()),
            (frame.focal(&["P2"]).unwrap(), parse_mass("3/13").unwrap()),
            (frame.focal(&["P3"]).unwrap(), parse_mass("5/13").unwrap()),
            (
                frame.focal(&["P1", "P2"]).unwrap(),
                parse_mass("1/13").unwrap(),
            ),
        ];
        assert!(BasicProbabilityAssignment::new(frame, entries).is_ok());
    }

    #[test]
    fn parses_masses() {
        assert_eq!(parse_mass("1/4").unwrap(), 0.25);
        assert_eq!(parse_mass(" 7 / 12 ").unwrap(), 7.0 / 12.0);
        assert_eq!(parse_mass("0.5").unwrap(), 0.5);
        assert_eq!(parse_mass("0/1").unwrap(), 0.0);
        assert!(parse_mass("1/0").is_err());
        assert!(parse_mass("abc").is_err());
        assert!(parse_mass("inf").is_err());
        assert!(parse_mass("-1/2").is_err());
    }

    #[test]
    fn canonical_order_is_by_mask() {
        let frame = p3();
        let bpa = BasicProbabilityAssignment::new(
            frame.clone(),
            vec![
                (frame.focal(&["P3"]).unwrap(), 0.5),
                (frame.focal(&["P1"]).unwrap(), 0.5),
            ],
        )
        .unwrap();
        let masks: Vec<u32> = bpa.canonical_entries().iter().map(|e| e.0.mask()).collect();
        assert_eq!(masks, vec![0b001, 0b100]);
    }
}
