//! Shared test support: an independent scalar oracle, BPA generators and a
//! criterion checker that prints one line per check.
#![allow(dead_code)]

use ordinal_entropy::frame::{BasicProbabilityAssignment, FrameOfDiscernment};
use proptest::prelude::*;

/// Direct transcription of the ordinal pipeline over `(mass, cardinality)`
/// pairs listed in position order. Shares no code with the library.
pub fn oracle_iu(seq: &[(f64, u32)]) -> (Vec<f64>, f64) {
    let n = seq.len();
    let mut weighted = Vec::new();
    for (idx, (mass, _)) in seq.iter().enumerate() {
        weighted.push(mass * (n - idx) as f64);
    }
    let mut total = 0.0;
    for w in &weighted {
        total += w;
    }
    let v: Vec<f64> = weighted.iter().map(|w| w / total).collect();
    let denom = |c: u32| 2f64.powi(c as i32) - 1.0;
    let mut iu = vec![0.0; n];
    for j in 0..n {
        for b in j + 1..n {
            let ratio = (v[j] / denom(seq[j].1)) / (v[b] / denom(seq[b].1));
            iu[j] += v[j] * (ratio + std::f64::consts::E).ln();
        }
    }
    let inu = iu.iter().sum();
    (iu, inu)
}

pub fn oracle_deng_bits(entries: &[(f64, u32)]) -> f64 {
    entries
        .iter()
        .map(|&(m, c)| -m * (m / (2f64.powi(c as i32) - 1.0)).log2())
        .sum()
}

pub fn oracle_dp_bits(entries: &[(f64, u32)]) -> f64 {
    entries.iter().map(|&(m, c)| m * (c as f64).log2()).sum()
}

/// Frame `E1..E6` used by the generators.
pub const GEN_FRAME_SIZE: usize = 6;

pub fn gen_frame() -> FrameOfDiscernment {
    let names: Vec<String> = (1..=GEN_FRAME_SIZE).map(|i| format!("E{i}")).collect();
    FrameOfDiscernment::new(&names).unwrap()
}

fn masks_with_cardinality(lo: u32, hi: u32) -> Vec<u32> {
    (1u32..1 << GEN_FRAME_SIZE)
        .filter(|m| (lo..=hi).contains(&m.count_ones()))
        .collect()
}

pub fn bpa_from_masks(masks: &[u32], weights: &[f64]) -> BasicProbabilityAssignment {
    let frame = gen_frame();
    let total: f64 = weights.iter().sum();
    let entries = masks
        .iter()
        .zip(weights)
        .map(|(&mask, &w)| {
            let members: Vec<String> = (0..GEN_FRAME_SIZE)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| format!("E{}", i + 1))
                .collect();
            (frame.focal(&members).unwrap(), w / total)
        })
        .collect();
    BasicProbabilityAssignment::new(frame, entries).unwrap()
}

/// `(masks, weights)` for 1-6 distinct focal elements of cardinality 1-3.
pub fn raw_bpa() -> impl Strategy<Value = (Vec<u32>, Vec<f64>)> {
    (1usize..=6).prop_flat_map(|n| {
        (
            proptest::sample::subsequence(masks_with_cardinality(1, 3), n).prop_shuffle(),
            proptest::collection::vec(0.01f64..1.0, n),
        )
    })
}

pub fn any_bpa() -> impl Strategy<Value = BasicProbabilityAssignment> {
    raw_bpa().prop_map(|(masks, weights)| bpa_from_masks(&masks, &weights))
}

/// Equal masses on focal elements that all share one cardinality.
pub fn symmetric_bpa() -> impl Strategy<Value = BasicProbabilityAssignment> {
    (1usize..=6, 1u32..=3)
        .prop_flat_map(|(n, card)| {
            proptest::sample::subsequence(masks_with_cardinality(card, card), n)
        })
        .prop_map(|masks| {
            let weights = vec![1.0; masks.len()];
            bpa_from_masks(&masks, &weights)
        })
}

/// Collects pass/fail lines for one acceptance criterion.
pub struct Checker {
    id: &'static str,
    title: &'static str,
    failures: Vec<String>,
    checks: usize,
}

impl Checker {
    pub fn new(id: &'static str, title: &'static str) -> Self {
        println!("== criterion {id}: {title}");
        Self {
            id,
            title,
            failures: Vec::new(),
            checks: 0,
        }
    }

    pub fn check(&mut self, label: &str, ok: bool, detail: String) {
        self.checks += 1;
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("   [{tag}] {label}: {detail}");
        if !ok {
            self.failures.push(format!("{label}: {detail}"));
        }
    }

    pub fn close(&mut self, label: &str, got: f64, want: f64, tol: f64) {
        let ok = (got - want).abs() <= tol;
        self.check(label, ok, format!("got {got:.6}, want {want} ± {tol:e}"));
    }

    pub fn finish(self) {
        let verdict = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {} [{verdict}] {} ({} checks, {} failed)",
            self.id,
            self.title,
            self.checks,
            self.failures.len()
        );
        assert!(
            self.failures.is_empty(),
            "criterion {} failed:\n{}",
            self.id,
            self.failures.join("\n")
        );
    }
}
