//! Classical invariants, the Apéry set, and the block partitions used to
//! count small elements.
//!
//! Two interval partitions appear here. The Sammartano blocks
//! `I_α = [αm, (α+1)m - 1]` for `α = 0..=L` tile `[0, (L+1)m)`; the
//! Eliahou blocks `J_α = [αm - ν, (α+1)m - ν)` for `α = 0..=q` end exactly at
//! the window `[c, c + m)`. Both are exposed half-open.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::{theorems, wilf};

/// `Ap(S, s)`: the least member of each residue class modulo `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    base: u64,
    by_residue: Vec<u64>,
}

impl AperySet {
    pub fn base(&self) -> u64 {
        self.base
    }

    /// `w[i] = min { z in S : z ≡ i (mod s) }`.
    pub fn by_residue(&self) -> &[u64] {
        &self.by_residue
    }

    /// The same elements in increasing order, `w_0 = 0 < w_1 < ... < w_{s-1}`.
    pub fn sorted(&self) -> Vec<u64> {
        let mut w = self.by_residue.clone();
        w.sort_unstable();
        w
    }

    pub fn max(&self) -> u64 {
        self.by_residue.iter().copied().max().unwrap_or(0)
    }
}

pub fn apery(s: &NumericalSemigroup, base: u64) -> Result<AperySet> {
    if base == 0 || !s.contains(base as i64) {
        return Err(Error::BaseNotInSemigroup { base });
    }
    let b = base as usize;
    let mut w = vec![u64::MAX; b];
    let mut missing = b;
    // every residue class is hit by c, c+1, ..., c+base-1
    for x in s.elements_up_to(s.conductor() + base - 1) {
        let slot = &mut w[x as usize % b];
        if *slot == u64::MAX {
            *slot = x;
            missing -= 1;
            if missing == 0 {
                break;
            }
        }
    }
    debug_assert_eq!(missing, 0);
    Ok(AperySet {
        base,
        by_residue: w,
    })
}

/// Direct count of small elements.
pub fn delta(s: &NumericalSemigroup) -> u64 {
    s.small_count()
}

fn require_nontrivial(s: &NumericalSemigroup) -> Result<()> {
    if s.is_trivial() {
        Err(Error::TrivialSemigroup)
    } else {
        Ok(())
    }
}

/// `L = ⌊(c-1)/m⌋` and `ρ = c - Lm`, so that `c = Lm + ρ` with `2 <= ρ <= m`.
fn sammartano_split(s: &NumericalSemigroup) -> (u64, u64) {
    let (c, m) = (s.conductor(), s.multiplicity());
    let l = (c - 1) / m;
    (l, c - l * m)
}

/// `δ = m⌊w_{m-1}/m⌋ - Σ_j ⌊w_j/m⌋ + ρ - m`, from the Apéry set of `m`.
pub fn delta_via_apery(s: &NumericalSemigroup) -> Result<u64> {
    require_nontrivial(s)?;
    let m = s.multiplicity();
    let w = apery(s, m)?.sorted();
    let (_, rho) = sammartano_split(s);
    let top = w[w.len() - 1] / m;
    let floor_sum: u64 = w.iter().map(|&x| x / m).sum();
    Ok((m * top + rho) - (floor_sum + m))
}

/// `η_j = ⌊w_j/m⌋ - ⌊w_{j-1}/m⌋` for `j = 1..m-1`: the number of blocks
/// `I_α` holding exactly `j` members. Index 0 of the result is `η_1`.
pub fn eta(s: &NumericalSemigroup) -> Result<Vec<u64>> {
    require_nontrivial(s)?;
    let m = s.multiplicity();
    let w = apery(s, m)?.sorted();
    Ok(w.windows(2).map(|p| p[1] / m - p[0] / m).collect())
}

/// Largest jump `next(s) - s` over nonzero members; 1 for N.
pub fn concentration(s: &NumericalSemigroup) -> u64 {
    let (c, m) = (s.conductor(), s.multiplicity());
    let mut best = 1;
    let mut x = m;
    while x < c {
        let next = s.next_element(x);
        best = best.max(next - x);
        x = next;
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionProfile {
    pub l: u64,
    pub rho: u64,
    pub q: u64,
    pub nu: u64,
    /// `η_1 ..= η_{m-1}`.
    pub eta: Vec<u64>,
    /// `n_0 ..= n_L`: small elements in each block `I_α`.
    pub n_alpha: Vec<u64>,
}

impl PartitionProfile {
    /// Sammartano blocks `I_α`, `α = 0..=L`, half-open.
    pub fn sammartano_blocks(&self, m: u64) -> Vec<Range<u64>> {
        (0..=self.l).map(|a| a * m..(a + 1) * m).collect()
    }

    /// Eliahou blocks `J_α`, `α = 0..=q`, half-open and clipped to N. The
    /// last one is `[c, c + m)`.
    pub fn eliahou_blocks(&self, m: u64) -> Vec<Range<u64>> {
        (0..=self.q)
            .map(|a| (a * m).saturating_sub(self.nu)..(a + 1) * m - self.nu)
            .collect()
    }
}

pub fn partition_profile(s: &NumericalSemigroup) -> Result<PartitionProfile> {
    require_nontrivial(s)?;
    let (c, m) = (s.conductor(), s.multiplicity());
    let (l, rho) = sammartano_split(s);
    let q = c.div_ceil(m);
    let nu = q * m - c;
    let n_alpha = (0..=l)
        .map(|a| {
            (a * m..((a + 1) * m).min(c))
                .filter(|&x| s.contains(x as i64))
                .count() as u64
        })
        .collect();
    Ok(PartitionProfile {
        l,
        rho,
        q,
        nu,
        eta: eta(s)?,
        n_alpha,
    })
}

/// Minimal generators split around the conductor, and the non-generators of
/// the window `[c, c + m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSplit {
    pub e_s: u64,
    pub e_c: u64,
    /// `|d_q| = m - e_c`.
    pub d_q: u64,
}

pub fn generator_split(s: &NumericalSemigroup) -> Result<GeneratorSplit> {
    require_nontrivial(s)?;
    let c = s.conductor();
    let e_s = s.min_generators().iter().filter(|&&g| g < c).count() as u64;
    let e_c = s.min_generators().len() as u64 - e_s;
    Ok(GeneratorSplit {
        e_s,
        e_c,
        d_q: s.multiplicity() - e_c,
    })
}

/// Gaps `x` with `x + a` in S for every minimal generator `a`.
pub fn pseudo_frobenius(s: &NumericalSemigroup) -> Result<Vec<u64>> {
    require_nontrivial(s)?;
    Ok(s.gaps()
        .as_slice()
        .iter()
        .copied()
        .filter(|&x| {
            s.min_generators()
                .iter()
                .all(|&a| s.contains((x + a) as i64))
        })
        .collect())
}

pub fn semigroup_type(s: &NumericalSemigroup) -> Result<u64> {
    Ok(pseudo_frobenius(s)?.len() as u64)
}

pub fn is_symmetric(s: &NumericalSemigroup) -> Result<bool> {
    require_nontrivial(s)?;
    let f = s.frobenius();
    Ok(s.gaps()
        .as_slice()
        .iter()
        .all(|&g| s.contains(f - g as i64)))
}

pub fn is_pseudo_symmetric(s: &NumericalSemigroup) -> Result<bool> {
    require_nontrivial(s)?;
    let f = s.frobenius();
    if f % 2 != 0 {
        return Ok(false);
    }
    let half = (f / 2) as u64;
    Ok(s.gaps()
        .as_slice()
        .iter()
        .filter(|&&g| g != half)
        .all(|&g| s.contains(f - g as i64)))
}

/// Every invariant of one semigroup. Fields that depend on `c = Lm + ρ`
/// or on the Eliahou partition are `None` for N.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub min_generators: Vec<u64>,
    pub m: u64,
    pub c: u64,
    pub f: i64,
    pub e: u64,
    pub e_s: u64,
    pub e_c: u64,
    pub delta: u64,
    pub q: u64,
    pub nu: u64,
    pub l: Option<u64>,
    pub rho: Option<u64>,
    pub concentration: u64,
    pub mu: u64,
    pub eliahou: Option<i64>,
    pub wilf_e: i64,
    pub wilf_es: i64,
    pub wilf_mu: i64,
    #[serde(rename = "type")]
    pub type_: u64,
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub highly_dense: bool,
}

pub fn report(s: &NumericalSemigroup) -> InvariantReport {
    let (c, m) = (s.conductor(), s.multiplicity());
    let e = s.embedding_dimension() as u64;
    let delta = delta(s);
    let mu = wilf::mu(s);
    let concentration = concentration(s);
    let highly_dense = theorems::is_highly_dense(s);
    let q = c.div_ceil(m);
    let nu = q * m - c;

    if s.is_trivial() {
        // N: the only generator 1 sits in [c, c + m) = [0, 1).
        return InvariantReport {
            min_generators: s.min_generators().to_vec(),
            m,
            c,
            f: s.frobenius(),
            e,
            e_s: 0,
            e_c: e,
            delta,
            q,
            nu,
            l: None,
            rho: None,
            concentration,
            mu,
            eliahou: None,
            wilf_e: wilf::wilf(s, e),
            wilf_es: wilf::wilf(s, 0),
            wilf_mu: wilf::wilf(s, mu),
            type_: 0,
            symmetric: true,
            pseudo_symmetric: false,
            highly_dense,
        };
    }

    let split = generator_split(s).expect("nontrivial");
    let (l, rho) = sammartano_split(s);
    InvariantReport {
        min_generators: s.min_generators().to_vec(),
        m,
        c,
        f: s.frobenius(),
        e,
        e_s: split.e_s,
        e_c: split.e_c,
        delta,
        q,
        nu,
        l: Some(l),
        rho: Some(rho),
        concentration,
        mu,
        eliahou: wilf::eliahou(s).ok(),
        wilf_e: wilf::wilf(s, e),
        wilf_es: wilf::wilf(s, split.e_s),
        wilf_mu: wilf::wilf(s, mu),
        type_: semigroup_type(s).expect("nontrivial"),
        symmetric: is_symmetric(s).expect("nontrivial"),
        pseudo_symmetric: is_pseudo_symmetric(s).expect("nontrivial"),
        highly_dense,
    }
}
