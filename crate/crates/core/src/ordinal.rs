//! Ordinal relative belief entropy.
//!
//! Each focal element of an [`OrdinalAssignment`] occupies a confirmation
//! position `1..=n`. Evaluation runs in four stages:
//!
//! 1. the element at position `j` gets the linear weight `n − j + 1`;
//! 2. masses are multiplied by their weights and renormalized to sum to one;
//! 3. every earlier/later pair `(j, b)` contributes the relative belief entropy
//!    `U(j, b) = v_j · ln( (v_j / (2^|A_j| − 1)) / (v_b / (2^|A_b| − 1)) + e )`;
//! 4. `IU_j` sums `U(j, b)` over all later positions `b`, with `IU_n = 0`, and
//!    `INU` sums the `IU` vector.
//!
//! All sums run in ascending index order so results are bit-reproducible.

use std::f64::consts::E;

use thiserror::Error;

use crate::classic::focal_spread;
use crate::frame::{BasicProbabilityAssignment, FocalElement, FrameOfDiscernment};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrdinalError {
    #[error("position {position} is outside 1..={n}")]
    PositionOutOfRange { position: usize, n: usize },
    #[error("normalized value {0} is not positive")]
    NonpositiveValue(f64),
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
}

/// One focal element at its confirmation position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Slot {
    /// 1-based confirmation position.
    pub position: usize,
    /// Index of the focal element in the source BPA's entry list.
    pub entry: usize,
    pub focal: FocalElement,
    pub mass: f64,
}

/// A BPA whose focal elements are totally ordered by confirmation position.
#[derive(Debug, Clone, PartialEq)]
pub struct OrdinalAssignment {
    frame: FrameOfDiscernment,
    slots: Vec<Slot>,
}

impl OrdinalAssignment {
    /// Places BPA entry `i` at position `positions[i]` (1-based).
    pub fn from_positions(
        bpa: &BasicProbabilityAssignment,
        positions: &[usize],
    ) -> Result<Self, OrdinalError> {
        let n = bpa.len();
        if positions.len() != n {
            return Err(OrdinalError::InvalidOrdering(format!(
                "{} positions given for {n} focal elements",
                positions.len()
            )));
        }
        let mut sequence = vec![usize::MAX; n];
        for (entry, &position) in positions.iter().enumerate() {
            if position == 0 || position > n {
                return Err(OrdinalError::PositionOutOfRange { position, n });
            }
            if sequence[position - 1] != usize::MAX {
                return Err(OrdinalError::InvalidOrdering(format!(
                    "position {position} is used twice"
                )));
            }
            sequence[position - 1] = entry;
        }
        Ok(Self::build(bpa, &sequence))
    }

    /// Places BPA entry `sequence[j]` at position `j + 1`.
    pub fn from_sequence(
        bpa: &BasicProbabilityAssignment,
        sequence: &[usize],
    ) -> Result<Self, OrdinalError> {
        let n = bpa.len();
        if sequence.len() != n {
            return Err(OrdinalError::InvalidOrdering(format!(
                "sequence of length {} for {n} focal elements",
                sequence.len()
            )));
        }
        let mut used = vec![false; n];
        for &entry in sequence {
            if entry >= n || std::mem::replace(&mut used[entry], true) {
                return Err(OrdinalError::InvalidOrdering(format!(
                    "sequence {sequence:?} is not a permutation of 0..{n}"
                )));
            }
        }
        Ok(Self::build(bpa, sequence))
    }

    fn build(bpa: &BasicProbabilityAssignment, sequence: &[usize]) -> Self {
        let entries = bpa.entries();
        let slots = sequence
            .iter()
            .enumerate()
            .map(|(j, &entry)| Slot {
                position: j + 1,
                entry,
                focal: entries[entry].0,
                mass: entries[entry].1,
            })
            .collect();
        Self {
            frame: bpa.frame().clone(),
            slots,
        }
    }

    pub fn frame(&self) -> &FrameOfDiscernment {
        &self.frame
    }

    /// Slots sorted by position.
    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// Cardinalities in position order.
    pub fn cardinalities(&self) -> Vec<u32> {
        self.slots.iter().map(|s| s.focal.cardinality()).collect()
    }

    /// BPA entry indices in position order.
    pub fn sequence(&self) -> Vec<usize> {
        self.slots.iter().map(|s| s.entry).collect()
    }

    /// Position of each BPA entry, indexed by entry.
    pub fn positions(&self) -> Vec<usize> {
        let mut positions = vec![0; self.slots.len()];
        for slot in &self.slots {
            positions[slot.entry] = slot.position;
        }
        positions
    }

    /// Labels of the focal elements in position order.
    pub fn labels(&self) -> Vec<String> {
        self.slots
            .iter()
            .map(|s| self.frame.label(s.focal))
            .collect()
    }
}

/// Position-weighted masses after renormalization, indexed by position − 1.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedValues {
    pub weights: Vec<u32>,
    pub intermediate: Vec<f64>,
    pub values: Vec<f64>,
}

/// Linear weight `n − position + 1` of the element confirmed at `position`.
pub fn assign_weights(n: usize, position: usize) -> Result<u32, OrdinalError> {
    if position == 0 || position > n {
        return Err(OrdinalError::PositionOutOfRange { position, n });
    }
    Ok((n - position + 1) as u32)
}

pub fn normalize_values(ordinal: &OrdinalAssignment) -> NormalizedValues {
    let n = ordinal.len();
    let weights: Vec<u32> = (1..=n).map(|position| (n - position + 1) as u32).collect();
    let intermediate: Vec<f64> = ordinal
        .slots()
        .iter()
        .zip(&weights)
        .map(|(slot, &w)| slot.mass * f64::from(w))
        .collect();
    let total: f64 = intermediate.iter().sum();
    let values = intermediate.iter().map(|x| x / total).collect();
    NormalizedValues {
        weights,
        intermediate,
        values,
    }
}

/// Relative belief entropy of an earlier element (`vj`, `card_j`) with
/// respect to a later one (`vb`, `card_b`). Natural log; never below `vj`.
pub fn pairwise_relative_entropy(
    vj: f64,
    card_j: u32,
    vb: f64,
    card_b: u32,
) -> Result<f64, OrdinalError> {
    for v in [vj, vb] {
        if !(v.is_finite() && v > 0.0) {
            return Err(OrdinalError::NonpositiveValue(v));
        }
    }
    let ratio = (vj / focal_spread(card_j)) / (vb / focal_spread(card_b));
    Ok(vj * (ratio + E).ln())
}

/// `IU` of the element at 1-based `position`: the sum of its pairwise
/// entropies towards every later position. The last position is exactly 0.
pub fn individual_iu(
    values: &NormalizedValues,
    cardinalities: &[u32],
    position: usize,
) -> Result<f64, OrdinalError> {
    let n = values.values.len();
    if position == 0 || position > n {
        return Err(OrdinalError::PositionOutOfRange { position, n });
    }
    let j = position - 1;
    let mut total = 0.0;
    for b in position..n {
        total += pairwise_relative_entropy(
            values.values[j],
            cardinalities[j],
            values.values[b],
            cardinalities[b],
        )?;
    }
    Ok(total)
}

/// `INU`, the sum of the `IU` vector.
pub fn integral_inu(iu: &[f64]) -> f64 {
    iu.iter().sum()
}

/// Strictly upper-triangular matrix of pairwise entropies `U(j, b)`, `j < b`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseMatrix {
    n: usize,
    rows: Vec<Vec<f64>>,
}

impl PairwiseMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `U(j, b)` for 1-based positions `j < b`.
    pub fn get(&self, j: usize, b: usize) -> Option<f64> {
        if j == 0 || j >= b || b > self.n {
            return None;
        }
        Some(self.rows[j - 1][b - j - 1])
    }

    /// Entries `U(j, j+1..=n)` for 1-based `j`.
    pub fn row(&self, j: usize) -> &[f64] {
        &self.rows[j - 1]
    }

    /// All `(j, b, U)` triples, row by row.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, &u)| (r + 1, r + c + 2, u))
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrdinalEntropyReport {
    pub normalized: NormalizedValues,
    pub pairwise: PairwiseMatrix,
    pub iu: Vec<f64>,
    pub inu: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("report invariant violated: {0}")]
pub struct InvariantViolation(pub String);

impl OrdinalEntropyReport {
    /// Re-checks the structural invariants of a finished report.
    pub fn check_invariants(&self) -> Result<(), InvariantViolation> {
        let n = self.iu.len();
        let fail = |msg: String| Err(InvariantViolation(msg));
        if n == 0 {
            return fail("empty report".into());
        }
        if self.iu[n - 1] != 0.0 {
            return fail(format!("IU of last position is {}", self.iu[n - 1]));
        }
        let value_sum: f64 = self.normalized.values.iter().sum();
        if (value_sum - 1.0).abs() > 1e-9 {
            return fail(format!("normalized values sum to {value_sum}"));
        }
        for (j, iu) in self.iu.iter().enumerate() {
            let row: f64 = self.pairwise.row(j + 1).iter().sum();
            if (row - iu).abs() > 1e-12 {
                return fail(format!(
                    "IU{} = {iu} but its pairwise row sums to {row}",
                    j + 1
                ));
            }
        }
        for (j, b, u) in self.pairwise.iter() {
            let vj = self.normalized.values[j - 1];
            if u.is_nan() || u < vj {
                return fail(format!("U({j},{b}) = {u} is below v{j} = {vj}"));
            }
        }
        let total = integral_inu(&self.iu);
        if (total - self.inu).abs() > 1e-12 {
            return fail(format!("INU {} differs from IU sum {total}", self.inu));
        }
        Ok(())
    }
}

/// Runs the full weighting, normalization and entropy pipeline.
pub fn compute_ordinal_entropy(
    ordinal: &OrdinalAssignment,
) -> Result<OrdinalEntropyReport, OrdinalError> {
    let n = ordinal.len();
    let normalized = normalize_values(ordinal);
    let cards = ordinal.cardinalities();
    let values = &normalized.values;

    let mut rows = Vec::with_capacity(n);
    for j in 0..n {
        let row = (j + 1..n)
            .map(|b| pairwise_relative_entropy(values[j], cards[j], values[b], cards[b]))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    let iu = (1..=n)
        .map(|position| individual_iu(&normalized, &cards, position))
        .collect::<Result<Vec<_>, _>>()?;
    let inu = integral_inu(&iu);
    Ok(OrdinalEntropyReport {
        normalized,
        pairwise: PairwiseMatrix { n, rows },
        iu,
        inu,
    })
}
