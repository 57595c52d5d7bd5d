// Builds `<30, 42, 51>_290` (everything from 290 on thrown in) and prints
// its invariants, Apéry set and block decompositions.
//
//     cargo run --example invariants

use nsg::invariants::{apery, concentration, delta, partition_profile, pseudo_frobenius};
use nsg::output::render_text;
use nsg::{report, GeneratorSpec};

pub fn run_example() -> nsg::Result<()> {
    let spec: GeneratorSpec = "30,42,51;290".parse()?;
    let s = spec.build()?;

    println!("{s}");
    println!("gaps: {}, small elements: {}", s.gaps().len(), delta(&s));
    println!("concentration: {}", concentration(&s));

    let ap = apery(&s, s.multiplicity())?;
    println!("Ap(S, {}) sorted: {:?}", ap.base(), &ap.sorted()[..8]);
    println!("max of Ap(S, m) = f + m = {}", ap.max());

    let profile = partition_profile(&s)?;
    println!(
        "L={} rho={} q={} nu={}",
        profile.l, profile.rho, profile.q, profile.nu
    );
    println!("pseudo-Frobenius numbers: {}", pseudo_frobenius(&s)?.len());

    print!("{}", render_text(&spec, &s, &report(&s)));
    Ok(())
}

fn main() -> nsg::Result<()> {
    run_example()
}
