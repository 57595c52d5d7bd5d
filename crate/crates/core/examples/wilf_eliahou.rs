// The Wilf function `W(k) = k*delta - c`, the threshold `mu` where it turns
// nonnegative, and the Eliahou number, on a few semigroups including the
// extremal family `W_{m,q}`.
//
//     cargo run --example wilf_eliahou

use nsg::wilf::{eliahou, mu, w_mq, wilf};
use nsg::NumericalSemigroup;

pub fn run_example() -> nsg::Result<()> {
    let s = NumericalSemigroup::from_generators(&[
        50, 55, 60, 65, 70, 73, 77, 81, 86, 91, 96, 194, 199,
    ])?;
    let e = s.embedding_dimension() as u64;
    println!("{s}");
    println!("W(e) = W({e}) = {}", wilf(&s, e));
    println!("W(6) = {}", wilf(&s, 6));
    println!(
        "mu = {}, W(mu) = {}, W(mu - 1) = {}",
        mu(&s),
        wilf(&s, mu(&s)),
        wilf(&s, mu(&s) - 1)
    );
    println!("E = {}", eliahou(&s)?);

    // Semigroups with negative Eliahou number still satisfy Wilf's inequality.
    let neg: NumericalSemigroup = "100,170,172,175;600"
        .parse::<nsg::GeneratorSpec>()?
        .build()?;
    println!("\n{neg}");
    println!(
        "E = {}, W(e) = {}",
        eliahou(&neg)?,
        wilf(&neg, neg.embedding_dimension() as u64)
    );

    println!("\nW_{{m,q}} = <m, qm+1, ..., qm+m-1>:");
    for (m, q) in [(5, 1), (5, 2), (7, 3)] {
        let w = w_mq(m, q)?;
        let ks: Vec<i64> = (1..=m).map(|k| wilf(&w, k)).collect();
        println!(
            "  m={m} q={q}: c={} delta={} W(1..=m)={ks:?}",
            w.conductor(),
            w.small_count()
        );
    }
    Ok(())
}

fn main() -> nsg::Result<()> {
    run_example()
}
