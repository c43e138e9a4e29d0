//! Extends the ordinal measure to unordered assignments by averaging `INU`
//! over every ordering of the focal elements.
//!
//! Orderings are visited in lexicographic order of the position sequence
//! (the list of entry indices from position 1 to n). Per-ordering values may be
//! computed in parallel; the mean is always summed in lexicographic order.

use rayon::prelude::*;
use thiserror::Error;

use crate::frame::BasicProbabilityAssignment;
use crate::ordinal::{compute_ordinal_entropy, OrdinalAssignment, OrdinalError};

/// Largest number of focal elements accepted for exhaustive averaging.
pub const MAX_FOCAL_ELEMENTS: usize = 10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PermutationError {
    #[error(
        "{0} focal elements exceed the limit of {MAX_FOCAL_ELEMENTS} for exhaustive averaging"
    )]
    TooManyFocalElements(usize),
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Lexicographic successor of `seq` in place. Returns false after the last one.
fn next_permutation(seq: &mut [usize]) -> bool {
    let Some(pivot) = seq.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let swap = seq.iter().rposition(|&x| x > seq[pivot]).unwrap();
    seq.swap(pivot, swap);
    seq[pivot + 1..].reverse();
    true
}

/// The `rank`-th permutation of `0..n` in lexicographic order.
pub fn unrank_sequence(n: usize, mut rank: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let block = factorial(i);
        out.push(pool.remove(rank / block));
        rank %= block;
    }
    out
}

/// Iterator over every [`OrdinalAssignment`] of a BPA, lexicographic order.
pub struct Orderings<'a> {
    bpa: &'a BasicProbabilityAssignment,
    next: Option<Vec<usize>>,
}

impl Iterator for Orderings<'_> {
    type Item = OrdinalAssignment;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        let ordinal = OrdinalAssignment::from_sequence(self.bpa, &current)
            .expect("permutation of entry indices");
        let mut succ = current;
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(ordinal)
    }
}

pub fn enumerate_orderings(
    bpa: &BasicProbabilityAssignment,
) -> Result<Orderings<'_>, PermutationError> {
    check_size(bpa)?;
    Ok(Orderings {
        bpa,
        next: Some((0..bpa.len()).collect()),
    })
}

fn check_size(bpa: &BasicProbabilityAssignment) -> Result<(), PermutationError> {
    if bpa.len() > MAX_FOCAL_ELEMENTS {
        return Err(PermutationError::TooManyFocalElements(bpa.len()));
    }
    Ok(())
}

/// `INU` of every ordering together with their mean.
#[derive(Debug, Clone, PartialEq)]
pub struct PermutationReport {
    n: usize,
    inu: Vec<f64>,
    mean_inu: f64,
}

impl PermutationReport {
    /// Number of orderings, `n!`.
    pub fn count(&self) -> usize {
        self.inu.len()
    }

    pub fn focal_count(&self) -> usize {
        self.n
    }

    pub fn mean_inu(&self) -> f64 {
        self.mean_inu
    }

    /// Per-ordering `INU`, indexed by lexicographic rank.
    pub fn inu_values(&self) -> &[f64] {
        &self.inu
    }

    /// `(sequence, INU)` per ordering, lexicographic order.
    pub fn records(&self) -> impl Iterator<Item = (Vec<usize>, f64)> + '_ {
        self.inu
            .iter()
            .enumerate()
            .map(|(rank, &inu)| (unrank_sequence(self.n, rank), inu))
    }

    pub fn min_inu(&self) -> f64 {
        self.inu.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_inu(&self) -> f64 {
        self.inu.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

pub fn average_inu(
    bpa: &BasicProbabilityAssignment,
) -> Result<PermutationReport, PermutationError> {
    check_size(bpa)?;
    let n = bpa.len();
    let inu = (0..factorial(n))
        .into_par_iter()
        .map(|rank| {
            let ordinal = OrdinalAssignment::from_sequence(bpa, &unrank_sequence(n, rank))?;
            Ok(compute_ordinal_entropy(&ordinal)?.inu)
        })
        .collect::<Result<Vec<f64>, PermutationError>>()?;
    let mean_inu = inu.iter().sum::<f64>() / inu.len() as f64;
    Ok(PermutationReport { n, inu, mean_inu })
}
