// Sweeps `<100, 170, a, b>_r` over a grid of `(a, b, r)` and keeps the
// distinct semigroups with negative Eliahou number, then writes them as CSV.
//
//     cargo run --release --example family_sweep

use std::collections::BTreeMap;

use nsg::output::to_csv;
use nsg::sweep::{builtin_type1, classify_family, enumerate};

pub fn run_example() -> nsg::Result<()> {
    let spec = builtin_type1();
    let outcome = enumerate(&spec)?;
    let st = outcome.stats;
    println!(
        "grid {} points, {} hits, {} distinct semigroups",
        st.grid_size, st.raw_hits, st.distinct
    );

    let mut by_eliahou: BTreeMap<i64, usize> = BTreeMap::new();
    for row in &outcome.rows {
        *by_eliahou
            .entry(row.report.eliahou.unwrap_or_default())
            .or_default() += 1;
        assert_ne!(classify_family(row), nsg::sweep::Family::Other);
    }
    println!("count by Eliahou number: {by_eliahou:?}");

    let rows: Vec<_> = outcome
        .rows
        .iter()
        .take(3)
        .map(|r| r.to_report_row())
        .collect();
    print!("{}", to_csv(&rows));
    Ok(())
}

fn main() -> nsg::Result<()> {
    run_example()
}
