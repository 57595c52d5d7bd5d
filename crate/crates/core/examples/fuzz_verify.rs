// Streams seeded random semigroups through all checkers and counts how
// often each one's hypotheses applied. A falsification would be a bug in
// either the implementation or the statement.
//
//     cargo run --release --example fuzz_verify

use std::collections::BTreeMap;

use nsg::fuzz::{random_specs, FuzzParams};
use nsg::theorems::check_all;

pub fn run_example() -> nsg::Result<()> {
    let params = FuzzParams {
        seed: 7,
        max_multiplicity: 60,
        count: 500,
        ..FuzzParams::default()
    };
    let mut applied: BTreeMap<String, usize> = BTreeMap::new();
    let mut falsified = 0;
    for spec in random_specs(&params)? {
        for v in check_all(&spec.build()?)? {
            if v.hypotheses_met {
                *applied.entry(v.theorem.to_string()).or_default() += 1;
            }
            if v.is_falsification() {
                falsified += 1;
                println!("FALSIFIED {} on {spec}", v.theorem);
            }
        }
    }
    println!("{} semigroups, {falsified} falsifications", params.count);
    for (name, n) in &applied {
        println!("  {name:<32} applied {n}");
    }
    assert_eq!(falsified, 0);
    Ok(())
}

fn main() -> nsg::Result<()> {
    run_example()
}
