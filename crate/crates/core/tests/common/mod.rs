//! Brute-force oracles sharing no code with the library.

#![allow(dead_code)]

use nsg::NumericalSemigroup;

/// Membership over `[0, bound)` by plain additive closure: `x` is in iff
/// `x >= r` or `x - g` is in for some generator `g`.
pub fn members(gens: &[u64], threshold: Option<u64>, bound: u64) -> Vec<bool> {
    let mut m = vec![false; bound as usize];
    if bound > 0 {
        m[0] = true;
    }
    for x in 1..bound {
        m[x as usize] = threshold.is_some_and(|r| x >= r)
            || gens.iter().any(|&g| g <= x && m[(x - g) as usize]);
    }
    m
}

/// Conductor of `<gens>_r` from a window large enough to contain `m`
/// consecutive members past every gap. `min(gens) * max(gens)` bounds the
/// Frobenius number of coprime generators from above.
pub fn conductor(gens: &[u64], threshold: Option<u64>) -> u64 {
    let lo = *gens.iter().chain(threshold.iter()).min().unwrap();
    let hi = *gens.iter().chain(threshold.iter()).max().unwrap();
    let bound = threshold.unwrap_or(lo * hi).min(lo * hi) + lo + 1;
    let m = members(gens, threshold, bound);
    m.iter().rposition(|&b| !b).map_or(0, |f| f as u64 + 1)
}

/// `η_j` for `j = 1..m-1` by counting members in each block `[am, (a+1)m)`
/// below the last block meeting the small elements.
pub fn eta_by_blocks(s: &NumericalSemigroup) -> Vec<u64> {
    let m = s.multiplicity();
    let l = (s.conductor() - 1) / m;
    let mut eta = vec![0; m as usize - 1];
    for a in 0..=l {
        let count = (a * m..(a + 1) * m)
            .filter(|&x| s.contains(x as i64))
            .count();
        if count >= 1 && count < m as usize {
            eta[count - 1] += 1;
        }
    }
    eta
}

/// Least `k >= 1` with `k * delta >= c`, by scanning.
pub fn mu_by_scan(s: &NumericalSemigroup) -> u64 {
    let c = s.conductor() as i64;
    let d = (0..c).filter(|&x| s.contains(x)).count() as i64;
    (1..).find(|&k| k * d >= c).unwrap() as u64
}

/// Largest gap between consecutive nonzero members below the conductor.
pub fn concentration_by_scan(s: &NumericalSemigroup) -> u64 {
    let c = s.conductor() as i64;
    let elems: Vec<i64> = (1..=c).filter(|&x| s.contains(x)).collect();
    elems
        .windows(2)
        .map(|w| (w[1] - w[0]) as u64)
        .max()
        .unwrap_or(1)
        .max(1)
}
