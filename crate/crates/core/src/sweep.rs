//! Grid sweeps over parameterized families `<fixed ∪ slots>_r`.
//!
//! Grid points are evaluated in parallel one threshold at a time and emitted
//! in `(threshold, generator tuple)` order, so output never depends on the
//! degree of parallelism. With dedupe on, a semigroup reached from several
//! grid points is kept once, at its smallest point; only packed small-element
//! keys are retained for that.

use std::collections::HashSet;
use std::io;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{report, InvariantReport};
use crate::output::ReportRow;
use crate::semigroup::GeneratorSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    EliahouNegative,
    /// Inclusive bounds.
    EliahouIn(i64, i64),
    HighlyDense,
    All,
}

impl Predicate {
    pub fn accepts(&self, r: &InvariantReport) -> bool {
        match *self {
            Predicate::EliahouNegative => r.eliahou.is_some_and(|e| e < 0),
            Predicate::EliahouIn(lo, hi) => r.eliahou.is_some_and(|e| lo <= e && e <= hi),
            Predicate::HighlyDense => r.highly_dense,
            Predicate::All => true,
        }
    }
}

fn default_dedupe() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    #[serde(rename = "fixed")]
    pub fixed_generators: Vec<u64>,
    /// Inclusive `[lo, hi]`, one per varying generator.
    #[serde(rename = "slots")]
    pub variable_slots: Vec<(u64, u64)>,
    #[serde(rename = "threshold")]
    pub threshold_range: (u64, u64),
    pub predicate: Predicate,
    #[serde(default = "default_dedupe")]
    pub dedupe: bool,
}

impl SweepSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: SweepSpec =
            serde_json::from_str(text).map_err(|e| Error::SpecInvalid(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.fixed_generators.contains(&0) {
            return Err(Error::SpecInvalid(
                "fixed generators must be positive".into(),
            ));
        }
        for &(lo, hi) in &self.variable_slots {
            if lo == 0 || lo > hi {
                return Err(Error::SpecInvalid(format!("bad slot range [{lo}, {hi}]")));
            }
        }
        let (lo, hi) = self.threshold_range;
        if lo == 0 || lo > hi {
            return Err(Error::SpecInvalid(format!(
                "bad threshold range [{lo}, {hi}]"
            )));
        }
        if let Predicate::EliahouIn(a, b) = self.predicate {
            if a > b {
                return Err(Error::SpecInvalid(format!(
                    "empty Eliahou window [{a}, {b}]"
                )));
            }
        }
        Ok(())
    }

    /// Number of grid points: product of slot sizes times threshold count.
    pub fn grid_size(&self) -> u64 {
        let span = |(lo, hi): (u64, u64)| hi - lo + 1;
        self.variable_slots
            .iter()
            .copied()
            .map(span)
            .product::<u64>()
            * span(self.threshold_range)
    }

    /// Generator tuples for one threshold, lexicographic in the slot values.
    fn tuples(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut current: Vec<u64> = self.variable_slots.iter().map(|&(lo, _)| lo).collect();
        loop {
            let mut g = self.fixed_generators.clone();
            g.extend_from_slice(&current);
            out.push(g);
            // odometer, last slot fastest
            let mut i = current.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if current[i] < self.variable_slots[i].1 {
                    current[i] += 1;
                    break;
                }
                current[i] = self.variable_slots[i].0;
            }
        }
    }
}

/// `<100, 170, a, b>_r` with `a, b` in `[171, 180]`, `r` in `[593, 602]`.
pub fn builtin_type1() -> SweepSpec {
    SweepSpec {
        fixed_generators: vec![100, 170],
        variable_slots: vec![(171, 180), (171, 180)],
        threshold_range: (593, 602),
        predicate: Predicate::EliahouNegative,
        dedupe: true,
    }
}

/// `<100, 270, a, b>_r` with `a, b` in `[271, 280]`, `r` in `[993, 1005]`.
pub fn builtin_type2() -> SweepSpec {
    SweepSpec {
        fixed_generators: vec![100, 270],
        variable_slots: vec![(271, 280), (271, 280)],
        threshold_range: (993, 1005),
        predicate: Predicate::EliahouNegative,
        dedupe: true,
    }
}

pub fn builtin(name: &str) -> Option<SweepSpec> {
    match name {
        "type1" => Some(builtin_type1()),
        "type2" => Some(builtin_type2()),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub point: GeneratorSpec,
    pub report: InvariantReport,
}

impl SweepRow {
    pub fn to_report_row(&self) -> ReportRow {
        ReportRow::new(&self.point, &self.report)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepStats {
    pub grid_size: u64,
    /// Grid points passing the predicate.
    pub raw_hits: u64,
    /// Rows emitted; equals `raw_hits` without dedupe.
    pub distinct: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub rows: Vec<SweepRow>,
    pub stats: SweepStats,
}

type Key = (u64, Vec<u64>);

/// Runs the sweep, handing rows to `sink` in output order as each
/// threshold's slice of the grid completes.
pub fn run<F>(spec: &SweepSpec, mut sink: F) -> Result<SweepStats>
where
    F: FnMut(&SweepRow) -> io::Result<()>,
{
    spec.validate()?;
    let tuples = spec.tuples();
    let mut seen: HashSet<Key> = HashSet::new();
    let mut stats = SweepStats {
        grid_size: spec.grid_size(),
        raw_hits: 0,
        distinct: 0,
    };

    for r in spec.threshold_range.0..=spec.threshold_range.1 {
        let hits: Vec<Option<(SweepRow, Option<Key>)>> = tuples
            .par_iter()
            .map(|gens| -> Result<_> {
                let point = GeneratorSpec::with_threshold(gens.clone(), r);
                let s = point.build()?;
                let report = report(&s);
                if !spec.predicate.accepts(&report) {
                    return Ok(None);
                }
                let key = spec.dedupe.then(|| s.canonical_key());
                Ok(Some((SweepRow { point, report }, key)))
            })
            .collect::<Result<_>>()?;

        for (row, key) in hits.into_iter().flatten() {
            stats.raw_hits += 1;
            if let Some(key) = key {
                if !seen.insert(key) {
                    continue;
                }
            }
            stats.distinct += 1;
            sink(&row).map_err(|e| Error::Io(e.to_string()))?;
        }
    }
    Ok(stats)
}

pub fn enumerate(spec: &SweepSpec) -> Result<SweepOutcome> {
    let mut rows = Vec::new();
    let stats = run(spec, |row| {
        rows.push(row.clone());
        Ok(())
    })?;
    Ok(SweepOutcome { rows, stats })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Type1,
    Type2,
    Other,
}

/// Type 1: `<100, 170, a, b>_c` with `a, b` in `[171, 176]`, conductor in
/// `[597, 600]`, `e_s` in `{3, 4}` and `c > 5m`. Type 2: `<100, 270, a, b>_c`
/// with `a, b` in `[271, 276]`, conductor in `[997, 1000]`, `e_s` in `{3, 4}`
/// and `c > 9m`.
pub fn classify_family(row: &SweepRow) -> Family {
    let r = &row.report;
    let shaped = |second: u64, slot: (u64, u64), conductor: (u64, u64), factor: u64| {
        let g = &row.point.generators;
        g.len() == 4
            && g[0] == 100
            && g[1] == second
            && g[2..].iter().all(|&x| slot.0 <= x && x <= slot.1)
            && conductor.0 <= r.c
            && r.c <= conductor.1
            && (r.e_s == 3 || r.e_s == 4)
            && r.c > factor * r.m
    };
    if shaped(170, (171, 176), (597, 600), 5) {
        Family::Type1
    } else if shaped(270, (271, 276), (997, 1000), 9) {
        Family::Type2
    } else {
        Family::Other
    }
}

/// One row of the published table of negative-Eliahou examples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PublishedRow {
    pub spec: String,
    pub eliahou: i64,
    pub concentration: i64,
    pub e: i64,
    pub mu: i64,
    pub wilf_e: i64,
    pub wilf_mu: i64,
}

const TABLE1_CSV: &str = include_str!("../data/table1.csv");

pub fn table1_published() -> Vec<PublishedRow> {
    csv::Reader::from_reader(TABLE1_CSV.as_bytes())
        .deserialize()
        .collect::<std::result::Result<Vec<PublishedRow>, _>>()
        .expect("bundled table1.csv is well formed")
}

pub fn builtin_table1() -> Vec<GeneratorSpec> {
    table1_published()
        .iter()
        .map(|row| row.spec.parse().expect("bundled table1.csv specs parse"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub column: String,
    pub published: i64,
    pub computed: Option<i64>,
}

impl Cell {
    pub fn matches(&self) -> bool {
        self.computed == Some(self.published)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Comparison {
    pub spec: GeneratorSpec,
    pub cells: Vec<Cell>,
}

impl Table1Comparison {
    pub fn all_match(&self) -> bool {
        self.cells.iter().all(Cell::matches)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.matches())
    }
}

/// Rebuilds every published row and compares the six printed columns.
pub fn compare_table1() -> Result<Vec<Table1Comparison>> {
    table1_published()
        .into_iter()
        .map(|p| {
            let spec: GeneratorSpec = p.spec.parse()?;
            let r = report(&spec.build()?);
            let cell = |column: &str, published: i64, computed: Option<i64>| Cell {
                column: column.to_string(),
                published,
                computed,
            };
            let cells = vec![
                cell("eliahou", p.eliahou, r.eliahou),
                cell(
                    "concentration",
                    p.concentration,
                    Some(r.concentration as i64),
                ),
                cell("e", p.e, Some(r.e as i64)),
                cell("mu", p.mu, Some(r.mu as i64)),
                cell("wilf_e", p.wilf_e, Some(r.wilf_e)),
                cell("wilf_mu", p.wilf_mu, Some(r.wilf_mu)),
            ];
            Ok(Table1Comparison { spec, cells })
        })
        .collect()
}
