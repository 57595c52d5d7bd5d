//! The Wilf function `W(k) = kδ - c`, its threshold `μ`, and the Eliahou
//! number `E = e_s·δ - q·|d_q| + ν`.

use crate::error::{Error, Result};
use crate::invariants::{delta, generator_split, partition_profile};
use crate::semigroup::{GeneratorSpec, NumericalSemigroup};

pub fn wilf(s: &NumericalSemigroup, k: u64) -> i64 {
    k as i64 * delta(s) as i64 - s.conductor() as i64
}

/// Least `k` with `W(k) >= 0`, i.e. `⌈c/δ⌉`; 0 for N.
pub fn mu(s: &NumericalSemigroup) -> u64 {
    let d = delta(s);
    if d == 0 {
        0
    } else {
        s.conductor().div_ceil(d)
    }
}

/// `d_q` is read on the half-open window `[c, c + m)`, so `|d_q| = m - e_c`.
pub fn eliahou(s: &NumericalSemigroup) -> Result<i64> {
    let split = generator_split(s)?;
    let profile = partition_profile(s)?;
    Ok(split.e_s as i64 * delta(s) as i64 - (profile.q * split.d_q) as i64 + profile.nu as i64)
}

/// `W_{m,q} = <m, qm+1, ..., qm+m-1>`.
pub fn w_mq(m: u64, q: u64) -> Result<NumericalSemigroup> {
    if m < 2 || q == 0 {
        return Err(Error::BadParams(format!(
            "W(m,q) needs m > 1 and q > 0, got m={m}, q={q}"
        )));
    }
    let gens: Vec<u64> = std::iter::once(m)
        .chain((1..m).map(|i| q * m + i))
        .collect();
    GeneratorSpec::generators(gens).build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{concentration, partition_profile};

    fn sg(s: &str) -> NumericalSemigroup {
        s.parse::<GeneratorSpec>().unwrap().build().unwrap()
    }

    fn mu_by_scan(s: &NumericalSemigroup) -> u64 {
        (0..).find(|&k| wilf(s, k) >= 0).unwrap()
    }

    const DENSE_REF: &str = "50,55,60,65,70,73,77,81,86,91,96,194,199";

    #[test]
    fn wilf_examples() {
        let sparse_ref = sg("30,42,51;290");
        assert_eq!(wilf(&sparse_ref, 23), 1205);
        assert_eq!(wilf(&sparse_ref, 5), 35);
        assert_eq!(wilf(&sparse_ref, 0), -290);
        assert_eq!(wilf(&sg(DENSE_REF), 6), 206);
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(&sg("30,42,51;290")), 5);
        assert_eq!(mu(&sg(DENSE_REF)), 3);
        assert_eq!(mu(&sg("100,170,171,176;599")), 13);
        assert_eq!(mu(&sg("2,3")), 2);
        assert_eq!(mu(&sg("1")), 0);
        for t in ["30,42,51;290", DENSE_REF, "2,3", "1", "7,9,11", ";12"] {
            assert_eq!(mu(&sg(t)), mu_by_scan(&sg(t)), "{t}");
        }
    }

    #[test]
    fn eliahou_examples() {
        assert_eq!(eliahou(&sg("30,42,51;290")), Ok(105));
        assert_eq!(eliahou(&sg(DENSE_REF)), Ok(544));
        assert_eq!(eliahou(&sg("100,170,172,175;600")), Ok(-8));
        assert_eq!(eliahou(&NumericalSemigroup::ordinary(11).unwrap()), Ok(0));
        assert_eq!(eliahou(&sg("1")), Err(Error::TrivialSemigroup));
    }

    #[test]
    fn w_mq_examples() {
        assert_eq!(w_mq(2, 1).unwrap(), sg("2,3"));
        assert!(matches!(w_mq(1, 3), Err(Error::BadParams(_))));
        assert!(matches!(w_mq(4, 0), Err(Error::BadParams(_))));
        // W(m,1) = {0, m, ->} has concentration 1; the jump m only appears for q >= 2
        assert_eq!(
            w_mq(6, 1).unwrap(),
            NumericalSemigroup::ordinary(6).unwrap()
        );
        for (m, q) in [(3, 1), (5, 4), (12, 3)] {
            let s = w_mq(m, q).unwrap();
            let p = partition_profile(&s).unwrap();
            assert_eq!(delta(&s), p.l + 1);
            assert_eq!(p.l, q - 1);
            assert_eq!(p.rho, m);
            let expected_c = if q == 1 { 1 } else { m };
            assert_eq!(concentration(&s), expected_c);
            for k in 1..=m {
                assert!(wilf(&s, k) <= 0);
            }
        }
    }
}
