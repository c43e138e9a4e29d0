//! Recomputes the published reference tables and reports every printed cell
//! that disagrees with the formulas.
//!
//! Printed values are kept verbatim, including the ones known to be wrong.
//! A cell becomes an [`ErrataRecord`] when it differs from the recomputed
//! value by more than [`ERRATA_TOLERANCE`]. Rows whose printed `INU` does not
//! match the sum of their printed `IU` columns are reported as well.

use std::fmt;
use std::str::FromStr;

use crate::classic::{deng_entropy, dp_hartley_entropy};
use crate::frame::{parse_mass, BasicProbabilityAssignment, FrameOfDiscernment};
use crate::ordinal::{compute_ordinal_entropy, OrdinalAssignment};
use crate::permutation::average_inu;

/// Cells closer than this to the recomputed value are accepted.
pub const ERRATA_TOLERANCE: f64 = 1e-3;

/// Printed values of one table row. `sequence` lists the BPA entry at each
/// position, first to last.
#[derive(Debug, Clone, Copy)]
pub struct PrintedRow {
    pub sequence: &'static [usize],
    pub iu: &'static [f64],
    pub inu: f64,
    pub deng: Option<f64>,
    pub dp: Option<f64>,
}

/// Printed cells of the summary table for the permutation average.
#[derive(Debug, Clone, Copy)]
pub struct PrintedSummary {
    pub dp: f64,
    pub deng: f64,
    pub mean_inu: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct ReferenceTable {
    pub id: u8,
    pub caption: &'static str,
    pub elements: &'static [&'static str],
    pub focals: &'static [(&'static [&'static str], &'static str)],
    pub rows: &'static [PrintedRow],
    pub summary: Option<PrintedSummary>,
}

impl ReferenceTable {
    pub fn bpa(&self) -> BasicProbabilityAssignment {
        let frame = FrameOfDiscernment::new(self.elements).expect("reference frame");
        let entries = self
            .focals
            .iter()
            .map(|(members, mass)| {
                (
                    frame.focal(members).expect("reference focal"),
                    parse_mass(mass).expect("reference mass"),
                )
            })
            .collect();
        BasicProbabilityAssignment::new(frame, entries).expect("reference assignment")
    }
}

const fn row(
    sequence: &'static [usize],
    iu: &'static [f64],
    inu: f64,
    deng: f64,
    dp: f64,
) -> PrintedRow {
    PrintedRow {
        sequence,
        iu,
        inu,
        deng: Some(deng),
        dp: Some(dp),
    }
}

const fn ordering(sequence: &'static [usize], inu: f64) -> PrintedRow {
    PrintedRow {
        sequence,
        iu: &[],
        inu,
        deng: None,
        dp: None,
    }
}

const P123: &[&str] = &["P1", "P2", "P3"];

pub const TABLE_1: ReferenceTable = ReferenceTable {
    id: 1,
    caption: "Permutation average versus classic entropies for masses 1/6, 1/2, 1/3",
    elements: P123,
    focals: &[(&["P1"], "1/6"), (&["P2"], "1/2"), (&["P3"], "1/3")],
    rows: &[
        ordering(&[0, 1, 2], 1.6624),
        ordering(&[0, 2, 1], 1.3267),
        ordering(&[1, 0, 2], 2.9388),
        ordering(&[1, 2, 0], 3.1569),
        ordering(&[2, 0, 1], 2.0190),
        ordering(&[2, 1, 0], 2.6049),
    ],
    summary: Some(PrintedSummary {
        dp: 0.0,
        deng: 1.0113,
        mean_inu: 2.1181,
    }),
};

pub const TABLE_2: ReferenceTable = ReferenceTable {
    id: 2,
    caption: "Six orderings of masses 1/4, 1/6, 7/12",
    elements: P123,
    focals: &[(&["P1"], "1/4"), (&["P2"], "1/6"), (&["P3"], "7/12")],
    rows: &[
        row(&[0, 1, 2], &[1.3456, 0.2381, 0.0], 1.5838, 1.3844, 0.0),
        row(&[0, 2, 1], &[1.1480, 1.2734, 0.0], 2.4214, 1.3844, 0.0),
        row(&[1, 0, 2], &[0.8170, 0.4023, 0.0], 1.2194, 1.3844, 0.0),
        row(&[1, 2, 0], &[0.7037, 1.2170, 0.0], 1.9208, 1.3844, 0.0),
        row(&[2, 0, 1], &[3.1927, 0.3607, 0.0], 3.5535, 1.3844, 0.0),
        row(&[2, 1, 0], &[3.2621, 0.1998, 0.0], 3.4619, 1.3844, 0.0),
    ],
    summary: None,
};

pub const TABLE_3: ReferenceTable = ReferenceTable {
    id: 3,
    caption: "Six orderings of masses 1/2, 5/12, 1/12",
    elements: P123,
    focals: &[(&["P1"], "1/2"), (&["P2"], "5/12"), (&["P3"], "1/12")],
    rows: &[
        row(&[0, 1, 2], &[2.8174, 0.8769, 0.0], 3.6943, 1.3250, 0.0),
        row(&[0, 2, 1], &[3.0993, 0.0909, 0.0], 3.1903, 1.3250, 0.0),
        row(&[1, 0, 2], &[2.2783, 1.1524, 0.0], 3.4308, 1.3250, 0.0),
        row(&[1, 2, 0], &[2.5932, 0.0970, 0.0], 2.6902, 1.3250, 0.0),
        row(&[2, 0, 1], &[0.3431, 0.9796, 0.0], 1.3228, 1.3250, 0.0),
        row(&[2, 1, 0], &[0.3376, 0.7111, 0.0], 1.0488, 1.3250, 0.0),
    ],
    summary: None,
};

pub const TABLE_4: ReferenceTable = ReferenceTable {
    id: 4,
    caption: "Twenty-four orderings of masses 4/13, 3/13, 5/13 and 1/13 on {P1,P2}",
    elements: P123,
    focals: &[
        (&["P1"], "4/13"),
        (&["P2"], "3/13"),
        (&["P3"], "5/13"),
        (&["P1", "P2"], "1/13"),
    ],
    rows: &[
        row(
            &[0, 1, 2, 3],
            &[3.0632, 1.1694, 0.9688, 0.0],
            5.2015,
            1.8262,
            0.0769,
        ),
        row(
            &[0, 1, 3, 2],
            &[3.2833, 1.2077, 0.0654, 0.0],
            4.5565,
            1.8262,
            0.0769,
        ),
        row(
            &[0, 2, 1, 3],
            &[2.9225, 2.1779, 0.4785, 0.0],
            5.5790,
            1.8262,
            0.0769,
        ),
        row(
            &[0, 2, 3, 1],
            &[2.9787, 2.1963, 0.0599, 0.0],
            5.2350,
            1.8262,
            0.0769,
        ),
        row(
            &[0, 3, 1, 2],
            &[3.4086, 0.2130, 0.2731, 0.0],
            3.8948,
            1.3250,
            0.0769,
        ),
        row(
            &[0, 3, 2, 1],
            &[2.8173, 0.2266, 0.5626, 0.0],
            3.6065,
            1.8262,
            0.0769,
        ),
        row(
            &[1, 0, 2, 3],
            &[2.1720, 1.7218, 0.9965, 0.0],
            4.8904,
            1.8262,
            0.0769,
        ),
        row(
            &[1, 0, 3, 2],
            &[2.3137, 1.8053, 0.0676, 0.0],
            4.1866,
            1.8262,
            0.0769,
        ),
        row(
            &[1, 2, 0, 3],
            &[2.1179, 2.2458, 0.7300, 0.0],
            2.8004,
            1.8262,
            0.0769,
        ),
        row(
            &[1, 2, 3, 0],
            &[2.1936, 2.3156, 0.0642, 0.0],
            4.5735,
            1.8262,
            0.0769,
        ),
        row(
            &[1, 3, 0, 2],
            &[2.4691, 0.2267, 0.4179, 0.0],
            3.1138,
            1.8262,
            0.0769,
        ),
        row(
            &[1, 3, 2, 0],
            &[2.3993, 0.2197, 0.5697, 0.0],
            3.1887,
            1.8262,
            0.0769,
        ),
        row(
            &[2, 0, 1, 3],
            &[3.8036, 1.6023, 0.46631, 0.0],
            5.8723,
            1.8262,
            0.0769,
        ),
        row(
            &[2, 0, 3, 1],
            &[3.8947, 1.6008, 0.0583, 0.0],
            5.5538,
            1.8262,
            0.0769,
        ),
        row(
            &[2, 1, 0, 3],
            &[3.8885, 1.1221, 0.6916, 0.0],
            5.7024,
            1.8262,
            0.0769,
        ),
        row(
            &[2, 1, 3, 0],
            &[4.0737, 1.1286, 0.0605, 0.0],
            5.2629,
            1.8262,
            0.0769,
        ),
        row(
            &[2, 3, 0, 1],
            &[4.1261, 0.1906, 0.3961, 0.0],
            4.7129,
            1.8262,
            0.0769,
        ),
        row(
            &[2, 3, 1, 0],
            &[4.2224, 0.1952, 0.2617, 0.0],
            4.6794,
            1.8262,
            0.0769,
        ),
        row(
            &[3, 0, 1, 2],
            &[0.4758, 1.4152, 0.3034, 0.0],
            2.1945,
            1.8262,
            0.0769,
        ),
        row(
            &[3, 0, 2, 1],
            &[0.4932, 0.9880, 0.4501, 0.0],
            1.9314,
            1.8262,
            0.0769,
        ),
        row(
            &[3, 1, 0, 2],
            &[0.4932, 0.9880, 0.4501, 0.0],
            1.9314,
            1.8262,
            0.0769,
        ),
        row(
            &[3, 1, 2, 0],
            &[0.4765, 0.9630, 0.6119, 0.0],
            2.0514,
            1.8262,
            0.0769,
        ),
        row(
            &[3, 2, 0, 1],
            &[0.4324, 1.7840, 0.4489, 0.0],
            2.6654,
            1.3250,
            0.0769,
        ),
        row(
            &[3, 2, 1, 0],
            &[0.4450, 1.8202, 0.2978, 0.0],
            2.5630,
            1.8262,
            0.0769,
        ),
    ],
    summary: None,
};

pub const TABLE_5: ReferenceTable = ReferenceTable {
    id: 5,
    caption: "Six orderings of masses 6/17, 4/17 and 7/17 on {P1,P2}",
    elements: P123,
    focals: &[
        (&["P1"], "6/17"),
        (&["P2"], "4/17"),
        (&["P1", "P2"], "7/17"),
    ],
    rows: &[
        row(&[0, 1, 2], &[2.1534, 0.4402, 0.0], 2.5936, 1.5485, 0.4117),
        row(&[0, 2, 1], &[2.0867, 1.0039, 0.0], 3.0906, 1.5485, 0.4117),
        row(&[1, 0, 2], &[1.3065, 0.7981, 0.0], 2.1046, 1.5485, 0.4117),
        row(&[1, 2, 0], &[1.2898, 0.9948, 0.0], 2.2846, 1.5485, 0.4117),
        row(&[2, 0, 1], &[2.5047, 0.7982, 0.0], 3.3029, 1.5485, 0.4117),
        row(&[2, 1, 0], &[2.5544, 0.4353, 0.0], 2.9898, 1.5485, 0.4117),
    ],
    summary: None,
};

pub const TABLES: [&ReferenceTable; 5] = [&TABLE_1, &TABLE_2, &TABLE_3, &TABLE_4, &TABLE_5];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableSelector {
    One(u8),
    All,
}

impl TableSelector {
    pub fn tables(self) -> Vec<&'static ReferenceTable> {
        match self {
            TableSelector::All => TABLES.to_vec(),
            TableSelector::One(id) => TABLES.iter().copied().filter(|t| t.id == id).collect(),
        }
    }
}

impl FromStr for TableSelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "all" => Ok(TableSelector::All),
            other => match other.parse::<u8>() {
                Ok(id @ 1..=5) => Ok(TableSelector::One(id)),
                _ => Err(format!("unknown table `{s}`, expected 1-5 or all")),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrataKind {
    /// Printed value differs from the recomputed value.
    Recomputed,
    /// Printed `INU` differs from the sum of the row's printed `IU` cells.
    PrintedSum,
}

impl fmt::Display for ErrataKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ErrataKind::Recomputed => "recomputed",
            ErrataKind::PrintedSum => "printed-IU-sum",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrataRecord {
    pub table: u8,
    /// 1-based row number, or `mean` for the summary row.
    pub row: String,
    pub sequence: String,
    pub column: String,
    pub paper_value: f64,
    pub computed_value: f64,
    /// `computed_value − paper_value`.
    pub discrepancy: f64,
    pub kind: ErrataKind,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComputedRow {
    pub row: String,
    pub sequence: String,
    pub iu: Vec<f64>,
    pub inu: f64,
    pub deng: f64,
    pub dp: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableReproduction {
    pub id: u8,
    pub caption: &'static str,
    pub rows: Vec<ComputedRow>,
    /// Permutation mean of `INU`, for tables that print one.
    pub mean_inu: Option<f64>,
    pub errata: Vec<ErrataRecord>,
}

struct ErrataSink<'a> {
    table: u8,
    row: &'a str,
    sequence: &'a str,
    out: &'a mut Vec<ErrataRecord>,
}

impl ErrataSink<'_> {
    fn check(&mut self, column: &str, paper: f64, computed: f64, kind: ErrataKind) {
        if (paper - computed).abs() > ERRATA_TOLERANCE {
            self.out.push(ErrataRecord {
                table: self.table,
                row: self.row.to_owned(),
                sequence: self.sequence.to_owned(),
                column: column.to_owned(),
                paper_value: paper,
                computed_value: computed,
                discrepancy: computed - paper,
                kind,
            });
        }
    }
}

pub fn reproduce_table(table: &ReferenceTable) -> TableReproduction {
    let bpa = table.bpa();
    let deng = deng_entropy(&bpa).value();
    let dp = dp_hartley_entropy(&bpa).value();
    let mut rows = Vec::with_capacity(table.rows.len());
    let mut errata = Vec::new();

    for (i, printed) in table.rows.iter().enumerate() {
        let ordinal = OrdinalAssignment::from_sequence(&bpa, printed.sequence)
            .expect("reference sequence is a permutation");
        let report = compute_ordinal_entropy(&ordinal).expect("reference inputs are positive");
        let row_id = (i + 1).to_string();
        let sequence = ordinal.labels().join(" ");
        let mut sink = ErrataSink {
            table: table.id,
            row: &row_id,
            sequence: &sequence,
            out: &mut errata,
        };
        for (j, (&paper, &computed)) in printed.iu.iter().zip(&report.iu).enumerate() {
            sink.check(
                &format!("IU{}", j + 1),
                paper,
                computed,
                ErrataKind::Recomputed,
            );
        }
        sink.check("INU", printed.inu, report.inu, ErrataKind::Recomputed);
        if !printed.iu.is_empty() {
            let printed_sum: f64 = printed.iu.iter().sum();
            sink.check("INU", printed.inu, printed_sum, ErrataKind::PrintedSum);
        }
        if let Some(paper) = printed.deng {
            sink.check("Deng", paper, deng, ErrataKind::Recomputed);
        }
        if let Some(paper) = printed.dp {
            sink.check("DP", paper, dp, ErrataKind::Recomputed);
        }
        rows.push(ComputedRow {
            row: row_id,
            sequence,
            iu: report.iu,
            inu: report.inu,
            deng,
            dp,
        });
    }

    let mean_inu = table.summary.map(|summary| {
        let mean = average_inu(&bpa)
            .expect("reference table is small")
            .mean_inu();
        let mut sink = ErrataSink {
            table: table.id,
            row: "mean",
            sequence: "all orderings",
            out: &mut errata,
        };
        sink.check("DP", summary.dp, dp, ErrataKind::Recomputed);
        sink.check("Deng", summary.deng, deng, ErrataKind::Recomputed);
        sink.check("Proposed", summary.mean_inu, mean, ErrataKind::Recomputed);
        mean
    });

    TableReproduction {
        id: table.id,
        caption: table.caption,
        rows,
        mean_inu,
        errata,
    }
}

pub fn run_reproduce(selector: TableSelector) -> Vec<TableReproduction> {
    selector.tables().into_iter().map(reproduce_table).collect()
}
