//! Text tables for people and CSV for machines.
//!
//! Text output rounds to a fixed number of decimals. CSV output writes every
//! number with the shortest representation that parses back to the same f64.

use std::fmt::Write as _;
use std::io;

use crate::classic::{deng_entropy, dp_hartley_entropy};
use crate::frame::BasicProbabilityAssignment;
use crate::ordinal::{
    compute_ordinal_entropy, OrdinalAssignment, OrdinalEntropyReport, OrdinalError,
};
use crate::permutation::PermutationReport;
use crate::reproduce::TableReproduction;

pub const DEFAULT_PRECISION: usize = 4;

/// Everything the `compute` command reports for one ordered assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct ComputeOutput {
    pub labels: Vec<String>,
    pub masses: Vec<f64>,
    pub cardinalities: Vec<u32>,
    pub report: OrdinalEntropyReport,
    pub deng: f64,
    pub dp: f64,
}

impl ComputeOutput {
    pub fn new(
        ordinal: &OrdinalAssignment,
        bpa: &BasicProbabilityAssignment,
    ) -> Result<Self, OrdinalError> {
        Ok(Self {
            labels: ordinal.labels(),
            masses: ordinal.slots().iter().map(|s| s.mass).collect(),
            cardinalities: ordinal.cardinalities(),
            report: compute_ordinal_entropy(ordinal)?,
            deng: deng_entropy(bpa).value(),
            dp: dp_hartley_entropy(bpa).value(),
        })
    }
}

fn fixed(values: &[f64], precision: usize) -> String {
    values
        .iter()
        .map(|v| format!("{v:.precision$}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_compute(out: &ComputeOutput, precision: usize) -> String {
    let r = &out.report;
    let mut s = String::new();
    writeln!(s, "Sequence: {}", out.labels.join(" ")).unwrap();
    let weights: Vec<String> = r.normalized.weights.iter().map(u32::to_string).collect();
    writeln!(s, "Weights: {}", weights.join(" ")).unwrap();
    writeln!(
        s,
        "Weighted masses: {}",
        fixed(&r.normalized.intermediate, precision)
    )
    .unwrap();
    writeln!(
        s,
        "Normalized values: {}",
        fixed(&r.normalized.values, precision)
    )
    .unwrap();
    if r.pairwise.iter().next().is_some() {
        writeln!(s, "Pairwise U:").unwrap();
        for (j, b, u) in r.pairwise.iter() {
            writeln!(s, "  U({j},{b}) = {u:.precision$}").unwrap();
        }
    }
    writeln!(
        s,
        "IU: {}  INU: {:.p$}  Deng: {:.p$}  DP: {:.p$}",
        fixed(&r.iu, precision),
        r.inu,
        out.deng,
        out.dp,
        p = precision
    )
    .unwrap();
    s
}

pub fn write_compute_csv<W: io::Write>(out: &ComputeOutput, writer: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record([
        "position",
        "focal",
        "cardinality",
        "mass",
        "weight",
        "weighted_mass",
        "value",
        "iu",
        "inu",
        "deng",
        "dp",
    ])?;
    let r = &out.report;
    for j in 0..out.labels.len() {
        w.write_record([
            (j + 1).to_string(),
            out.labels[j].clone(),
            out.cardinalities[j].to_string(),
            out.masses[j].to_string(),
            r.normalized.weights[j].to_string(),
            r.normalized.intermediate[j].to_string(),
            r.normalized.values[j].to_string(),
            r.iu[j].to_string(),
            r.inu.to_string(),
            out.deng.to_string(),
            out.dp.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn sequence_label(bpa: &BasicProbabilityAssignment, sequence: &[usize]) -> String {
    sequence
        .iter()
        .map(|&i| bpa.frame().label(bpa.entries()[i].0))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_permutations(
    bpa: &BasicProbabilityAssignment,
    report: &PermutationReport,
    precision: usize,
) -> String {
    let rows: Vec<(String, String, String)> = report
        .records()
        .enumerate()
        .map(|(i, (seq, inu))| {
            (
                (i + 1).to_string(),
                sequence_label(bpa, &seq),
                format!("{inu:.precision$}"),
            )
        })
        .collect();
    let width = rows
        .iter()
        .map(|r| r.1.len())
        .max()
        .unwrap_or(0)
        .max("Sequence".len());
    let mut s = String::new();
    writeln!(s, "{:>5}  {:<width$}  INU", "#", "Sequence").unwrap();
    for (i, seq, inu) in &rows {
        writeln!(s, "{i:>5}  {seq:<width$}  {inu}").unwrap();
    }
    writeln!(
        s,
        "Mean INU over {} orderings: {:.precision$}",
        report.count(),
        report.mean_inu()
    )
    .unwrap();
    s
}

pub fn write_permutations_csv<W: io::Write>(
    bpa: &BasicProbabilityAssignment,
    report: &PermutationReport,
    writer: W,
) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["ordering", "sequence", "inu"])?;
    for (i, (seq, inu)) in report.records().enumerate() {
        w.write_record([
            (i + 1).to_string(),
            sequence_label(bpa, &seq),
            inu.to_string(),
        ])?;
    }
    w.write_record([
        "mean".to_string(),
        String::new(),
        report.mean_inu().to_string(),
    ])?;
    w.flush()?;
    Ok(())
}

pub fn render_reproduction(tables: &[TableReproduction], precision: usize) -> String {
    let mut s = String::new();
    for t in tables {
        writeln!(s, "Table {}: {}", t.id, t.caption).unwrap();
        let n = t.rows.first().map_or(0, |r| r.iu.len());
        let seq_width = t
            .rows
            .iter()
            .map(|r| r.sequence.len())
            .max()
            .unwrap_or(0)
            .max("Sequence".len());
        let cell = precision + 4;
        let mut header = format!("{:>4}  {:<seq_width$}", "#", "Sequence");
        for j in 1..=n {
            write!(header, "  {:>cell$}", format!("IU{j}")).unwrap();
        }
        for col in ["INU", "Deng", "DP"] {
            write!(header, "  {col:>cell$}").unwrap();
        }
        writeln!(s, "{header}").unwrap();
        for r in &t.rows {
            write!(s, "{:>4}  {:<seq_width$}", r.row, r.sequence).unwrap();
            for v in r.iu.iter().chain([&r.inu, &r.deng, &r.dp]) {
                write!(s, "  {v:>cell$.precision$}").unwrap();
            }
            writeln!(s).unwrap();
        }
        if let Some(mean) = t.mean_inu {
            writeln!(s, "Mean INU over all orderings: {mean:.precision$}").unwrap();
        }
        if t.errata.is_empty() {
            writeln!(s, "Errata: none").unwrap();
        } else {
            writeln!(s, "Errata ({}):", t.errata.len()).unwrap();
            for e in &t.errata {
                writeln!(
                    s,
                    "  table {} row {} ({}) {}: printed {}, computed {:.p$} ({:+.p$}) [{}]",
                    e.table,
                    e.row,
                    e.sequence,
                    e.column,
                    e.paper_value,
                    e.computed_value,
                    e.discrepancy,
                    e.kind,
                    p = precision
                )
                .unwrap();
            }
        }
        writeln!(s).unwrap();
    }
    s
}

pub fn write_reproduction_csv<W: io::Write>(
    tables: &[TableReproduction],
    writer: W,
) -> csv::Result<()> {
    let width = tables
        .iter()
        .flat_map(|t| t.rows.iter().map(|r| r.iu.len()))
        .max()
        .unwrap_or(0);
    let mut w = csv::Writer::from_writer(writer);
    let mut header = vec!["table".to_string(), "row".into(), "sequence".into()];
    header.extend((1..=width).map(|j| format!("IU{j}")));
    header.extend(["INU".into(), "Deng".into(), "DP".into()]);
    w.write_record(&header)?;
    for t in tables {
        for r in &t.rows {
            let mut record = vec![t.id.to_string(), r.row.clone(), r.sequence.clone()];
            record.extend((0..width).map(|j| r.iu.get(j).map(f64::to_string).unwrap_or_default()));
            record.extend([r.inu.to_string(), r.deng.to_string(), r.dp.to_string()]);
            w.write_record(&record)?;
        }
        if let Some(mean) = t.mean_inu {
            let first = t.rows.first();
            let mut record = vec![t.id.to_string(), "mean".into(), "all orderings".into()];
            record.extend((0..width).map(|_| String::new()));
            record.extend([
                mean.to_string(),
                first.map(|r| r.deng.to_string()).unwrap_or_default(),
                first.map(|r| r.dp.to_string()).unwrap_or_default(),
            ]);
            w.write_record(&record)?;
        }
    }
    w.flush()?;
    Ok(())
}
