// Runs every theorem checker on a few semigroups and shows when the
// hypotheses apply, whether the conclusion held, and the witness numbers.
//
//     cargo run --example theorem_checks

use nsg::output::render_verdicts_text;
use nsg::theorems::{check_all, check_wilf_at_twice_concentration, is_highly_dense};
use nsg::wilf::wilf;
use nsg::NumericalSemigroup;

pub fn run_example() -> nsg::Result<()> {
    let dense = NumericalSemigroup::from_generators(&[
        50, 55, 60, 65, 70, 73, 77, 81, 86, 91, 96, 194, 199,
    ])?;
    println!("{dense}  highly dense: {}", is_highly_dense(&dense));
    print!("{}", render_verdicts_text(&check_all(&dense)?));

    // Large multiplicity, small concentration: E >= 0 is forced.
    let mut gens: Vec<u64> = (0..40).map(|k| 1000 + 25 * k).collect();
    gens.extend([1507, 1899, 13765, 13790, 13815]);
    let big = NumericalSemigroup::from_generators(&gens)?;
    println!(
        "\nm={} c={} e={}",
        big.multiplicity(),
        big.conductor(),
        big.embedding_dimension()
    );
    print!("{}", render_verdicts_text(&check_all(&big)?));

    // {0, 3, ->} has W(2) = -1; the c > 2m hypothesis keeps it out.
    let ordinary = NumericalSemigroup::ordinary(3)?;
    let v = check_wilf_at_twice_concentration(&ordinary)?;
    println!(
        "\n{ordinary}: W(2) = {}, hypotheses met: {}",
        wilf(&ordinary, 2),
        v.hypotheses_met
    );
    Ok(())
}

fn main() -> nsg::Result<()> {
    run_example()
}
