//! Baseline belief entropies: Dubois & Prade's weighted Hartley entropy and
//! Deng entropy, both in bits.
//!
//! Terms are summed in ascending focal-mask order so results do not depend on
//! the order in which a BPA's entries were listed.

use std::fmt;

use crate::frame::BasicProbabilityAssignment;

/// A nonnegative, finite entropy value.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EntropyValue(f64);

impl EntropyValue {
    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<EntropyValue> for f64 {
    fn from(v: EntropyValue) -> f64 {
        v.0
    }
}

impl fmt::Display for EntropyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Dubois & Prade's weighted Hartley entropy, `Σ m(A)·log₂|A|`.
pub fn dp_hartley_entropy(bpa: &BasicProbabilityAssignment) -> EntropyValue {
    let total = bpa
        .canonical_entries()
        .into_iter()
        .map(|(focal, mass)| mass * f64::from(focal.cardinality()).log2())
        .sum();
    EntropyValue(total)
}

/// Deng entropy, `−Σ m(A)·log₂(m(A) / (2^|A| − 1))`.
///
/// For an all-singleton assignment this is the Shannon entropy of the masses.
pub fn deng_entropy(bpa: &BasicProbabilityAssignment) -> EntropyValue {
    let total: f64 = bpa
        .canonical_entries()
        .into_iter()
        .map(|(focal, mass)| {
            let spread = focal_spread(focal.cardinality());
            -mass * (mass / spread).log2()
        })
        .sum();
    // a lone singleton with mass 1 yields -0.0
    EntropyValue(total + 0.0)
}

/// `2^c − 1`, the number of nonempty subsets of a set of size `c`.
pub(crate) fn focal_spread(cardinality: u32) -> f64 {
    ((1u64 << cardinality) - 1) as f64
}
