//! Flat CSV / JSON rows for invariant reports, and the human-readable text
//! form with the interval decompositions spelled out.

use std::fmt::Write as _;
use std::io;

use serde::{Deserialize, Serialize};

use crate::invariants::{partition_profile, InvariantReport};
use crate::semigroup::{GeneratorSpec, NumericalSemigroup};
use crate::theorems::TheoremVerdict;

/// CSV column order for report rows.
pub const COLUMNS: [&str; 21] = [
    "generators",
    "threshold",
    "m",
    "c",
    "e",
    "e_s",
    "e_c",
    "delta",
    "q",
    "nu",
    "L",
    "rho",
    "concentration",
    "mu",
    "eliahou",
    "wilf_e",
    "wilf_mu",
    "type",
    "symmetric",
    "pseudo_symmetric",
    "highly_dense",
];

/// One semigroup as given (generators, threshold) plus its invariants,
/// flattened. JSON keys follow [`COLUMNS`], then a few extras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub generators: Vec<u64>,
    pub threshold: Option<u64>,
    pub m: u64,
    pub c: u64,
    pub e: u64,
    pub e_s: u64,
    pub e_c: u64,
    pub delta: u64,
    pub q: u64,
    pub nu: u64,
    #[serde(rename = "L")]
    pub l: Option<u64>,
    pub rho: Option<u64>,
    pub concentration: u64,
    pub mu: u64,
    pub eliahou: Option<i64>,
    pub wilf_e: i64,
    pub wilf_mu: i64,
    #[serde(rename = "type")]
    pub type_: u64,
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub highly_dense: bool,
    pub f: i64,
    pub wilf_es: i64,
    pub min_generators: Vec<u64>,
}

impl ReportRow {
    pub fn new(spec: &GeneratorSpec, r: &InvariantReport) -> Self {
        ReportRow {
            generators: spec.generators.clone(),
            threshold: spec.threshold,
            m: r.m,
            c: r.c,
            e: r.e,
            e_s: r.e_s,
            e_c: r.e_c,
            delta: r.delta,
            q: r.q,
            nu: r.nu,
            l: r.l,
            rho: r.rho,
            concentration: r.concentration,
            mu: r.mu,
            eliahou: r.eliahou,
            wilf_e: r.wilf_e,
            wilf_mu: r.wilf_mu,
            type_: r.type_,
            symmetric: r.symmetric,
            pseudo_symmetric: r.pseudo_symmetric,
            highly_dense: r.highly_dense,
            f: r.f,
            wilf_es: r.wilf_es,
            min_generators: r.min_generators.clone(),
        }
    }

    /// Cells in [`COLUMNS`] order; `None` becomes an empty cell.
    pub fn csv_record(&self) -> Vec<String> {
        fn opt<T: ToString>(v: Option<T>) -> String {
            v.map(|x| x.to_string()).unwrap_or_default()
        }
        let gens = self
            .generators
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        vec![
            gens,
            opt(self.threshold),
            self.m.to_string(),
            self.c.to_string(),
            self.e.to_string(),
            self.e_s.to_string(),
            self.e_c.to_string(),
            self.delta.to_string(),
            self.q.to_string(),
            self.nu.to_string(),
            opt(self.l),
            opt(self.rho),
            self.concentration.to_string(),
            self.mu.to_string(),
            opt(self.eliahou),
            self.wilf_e.to_string(),
            self.wilf_mu.to_string(),
            self.type_.to_string(),
            self.symmetric.to_string(),
            self.pseudo_symmetric.to_string(),
            self.highly_dense.to_string(),
        ]
    }
}

/// Writes rows as CSV with the [`COLUMNS`] header.
pub struct CsvSink<W: io::Write> {
    inner: csv::Writer<W>,
}

impl<W: io::Write> CsvSink<W> {
    pub fn new(w: W) -> io::Result<Self> {
        let mut inner = csv::Writer::from_writer(w);
        inner.write_record(COLUMNS).map_err(io::Error::other)?;
        Ok(CsvSink { inner })
    }

    pub fn write(&mut self, row: &ReportRow) -> io::Result<()> {
        self.inner
            .write_record(row.csv_record())
            .map_err(io::Error::other)
    }

    pub fn finish(mut self) -> io::Result<W> {
        self.inner.flush()?;
        self.inner
            .into_inner()
            .map_err(|e| io::Error::other(e.to_string()))
    }
}

pub fn to_csv(rows: &[ReportRow]) -> String {
    let mut sink = CsvSink::new(Vec::new()).expect("in-memory write");
    for row in rows {
        sink.write(row).expect("in-memory write");
    }
    String::from_utf8(sink.finish().expect("in-memory write")).expect("utf-8")
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

/// Multi-line report including the `I_α` and `J_α` block decompositions.
pub fn render_text(spec: &GeneratorSpec, s: &NumericalSemigroup, r: &InvariantReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "semigroup        {spec}");
    let _ = writeln!(w, "min generators   <{}>", join(&r.min_generators));
    let _ = writeln!(
        w,
        "m={}  c={}  f={}  e={}  e_s={}  e_c={}",
        r.m, r.c, r.f, r.e, r.e_s, r.e_c
    );
    let _ = writeln!(w, "delta={}  q={}  nu={}", r.delta, r.q, r.nu);
    if let (Some(l), Some(rho)) = (r.l, r.rho) {
        let _ = writeln!(w, "c = L*m + rho with L={l}, rho={rho}");
    }
    let _ = writeln!(w, "concentration={}  mu={}", r.concentration, r.mu);
    match r.eliahou {
        Some(e) => {
            let _ = writeln!(w, "eliahou={e}");
        }
        None => {
            let _ = writeln!(w, "eliahou=undefined");
        }
    }
    let _ = writeln!(
        w,
        "W(e)={}  W(e_s)={}  W(mu)={}",
        r.wilf_e, r.wilf_es, r.wilf_mu
    );
    let _ = writeln!(
        w,
        "type={}  symmetric={}  pseudo_symmetric={}  highly_dense={}",
        r.type_, r.symmetric, r.pseudo_symmetric, r.highly_dense
    );

    if let Ok(p) = partition_profile(s) {
        let count = |lo: u64, hi: u64| (lo..hi).filter(|&x| s.contains(x as i64)).count();
        let _ = writeln!(w, "Sammartano blocks I_a = [a*m, (a+1)*m):");
        for (a, b) in p.sammartano_blocks(r.m).iter().enumerate() {
            let _ = writeln!(
                w,
                "  I_{a:<3} [{:>6}, {:>6})  members={:<4} small={}",
                b.start,
                b.end,
                count(b.start, b.end),
                p.n_alpha[a]
            );
        }
        let _ = writeln!(w, "Eliahou blocks J_a = [a*m - nu, (a+1)*m - nu):");
        for (a, b) in p.eliahou_blocks(r.m).iter().enumerate() {
            let _ = writeln!(
                w,
                "  J_{a:<3} [{:>6}, {:>6})  members={}",
                b.start,
                b.end,
                count(b.start, b.end)
            );
        }
        let eta: Vec<String> = p
            .eta
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(j, n)| format!("eta_{}={n}", j + 1))
            .collect();
        let _ = writeln!(w, "nonzero eta: {}", eta.join(" "));
    }
    out
}

pub fn render_verdicts_text(verdicts: &[TheoremVerdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let status = match (v.hypotheses_met, v.conclusion_holds) {
            (false, _) => "hypotheses not met",
            (true, Some(true)) => "holds",
            (true, _) => "FALSIFIED",
        };
        let witness: Vec<String> = v.witness.iter().map(|(k, x)| format!("{k}={x}")).collect();
        let _ = writeln!(
            out,
            "{:<32} {:<20} {}",
            v.theorem,
            status,
            witness.join(" ")
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::report;

    #[test]
    fn csv_header_and_row() {
        let spec: GeneratorSpec = "30,42,51;290".parse().unwrap();
        let s = spec.build().unwrap();
        let row = ReportRow::new(&spec, &report(&s));
        let csv = to_csv(&[row]);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), COLUMNS.join(","));
        assert_eq!(
            lines.next().unwrap(),
            "\"30,42,51\",290,30,290,23,3,20,65,10,10,9,20,12,5,105,1205,35,21,false,false,false"
        );
    }

    #[test]
    fn json_keys_follow_columns() {
        let spec: GeneratorSpec = "2,3".parse().unwrap();
        let row = ReportRow::new(&spec, &report(&spec.build().unwrap()));
        let json = serde_json::to_string(&row).unwrap();
        let mut last = 0;
        for col in COLUMNS {
            let at = json.find(&format!("\"{col}\":")).unwrap();
            assert!(at >= last, "{col} out of order");
            last = at;
        }
        let back: ReportRow = serde_json::from_str(&json).unwrap();
        assert_eq!(back, row);
    }

    #[test]
    fn text_lists_blocks() {
        let spec: GeneratorSpec = "30,42,51;290".parse().unwrap();
        let s = spec.build().unwrap();
        let text = render_text(&spec, &s, &report(&s));
        assert!(text.contains("eliahou=105"));
        assert!(text.contains("I_9"));
        assert!(text.contains("J_10  [   290,    320)"));
    }
}
