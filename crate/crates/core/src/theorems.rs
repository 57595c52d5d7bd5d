//! Executable hypothesis/conclusion checks for the bounds relating the Wilf
//! function, the Eliahou number and the concentration `k = C(S)`.
//!
//! Every rational inequality is cross-multiplied and evaluated in `i64`.
//! A verdict whose hypotheses hold but whose conclusion fails is a
//! falsification; on a correctly built semigroup that is always a bug here.
//!
//! The `W(2k) >= 0` bound and the highly-dense Wilf bound are only proved
//! for `c > 2m` (the argument borrows `e_s >= m/k`), so both checkers carry
//! that guard. `{0, 3, ->}` has `k = 1` and `W(2) = -1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{concentration, delta, generator_split};
use crate::semigroup::NumericalSemigroup;
use crate::wilf::{eliahou, mu};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    /// `δ >= ((L-1)m + ρ)/k + 1`.
    DeltaLowerBound,
    /// `c > 2m` implies `e_s >= m/k`.
    SmallGeneratorBound,
    /// `c > 2m` implies `W(2k) >= 0` and `2k >= μ`.
    WilfAtTwiceConcentration,
    /// `δ >= m - k` implies `W(k+1) >= 0` and `k+1 >= μ`.
    WilfAfterConcentration,
    /// `W(e) >= E >= W(e_s)`.
    EliahouSandwich,
    /// `E < 0` implies `W(e) < e_c·δ` and `μ > e_s`.
    NegativeEliahouWilf,
    /// `c > 2m` and `m/k² > (L+1)/(L-1)` imply `E >= 0`.
    ConcentrationForcesEliahou,
    /// `E < 0` implies `m/k² < (L+1)/(L-1)`.
    NegativeEliahouConcentration,
    /// The highly-dense clauses agree with [`is_highly_dense`].
    HighlyDenseClauses,
    /// Highly dense and `c > 2m` imply `W(e) >= 0`.
    HighlyDenseWilf,
    /// `k >= 2`, `c > 2m`, `e_s >= 2k` imply `E >= 0`.
    HighlyDenseEliahou,
    /// `k >= 2`, `e_s >= k+1`, `δ >= m-k`, `c > 2m` imply `E >= 0`.
    HighlyDenseEliahouDelta,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::DeltaLowerBound,
        TheoremId::SmallGeneratorBound,
        TheoremId::WilfAtTwiceConcentration,
        TheoremId::WilfAfterConcentration,
        TheoremId::EliahouSandwich,
        TheoremId::NegativeEliahouWilf,
        TheoremId::ConcentrationForcesEliahou,
        TheoremId::NegativeEliahouConcentration,
        TheoremId::HighlyDenseClauses,
        TheoremId::HighlyDenseWilf,
        TheoremId::HighlyDenseEliahou,
        TheoremId::HighlyDenseEliahouDelta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::DeltaLowerBound => "delta_lower_bound",
            TheoremId::SmallGeneratorBound => "small_generator_bound",
            TheoremId::WilfAtTwiceConcentration => "wilf_at_twice_concentration",
            TheoremId::WilfAfterConcentration => "wilf_after_concentration",
            TheoremId::EliahouSandwich => "eliahou_sandwich",
            TheoremId::NegativeEliahouWilf => "negative_eliahou_wilf",
            TheoremId::ConcentrationForcesEliahou => "concentration_forces_eliahou",
            TheoremId::NegativeEliahouConcentration => "negative_eliahou_concentration",
            TheoremId::HighlyDenseClauses => "highly_dense_clauses",
            TheoremId::HighlyDenseWilf => "highly_dense_wilf",
            TheoremId::HighlyDenseEliahou => "highly_dense_eliahou",
            TheoremId::HighlyDenseEliahouDelta => "highly_dense_eliahou_delta",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub hypotheses_met: bool,
    pub conclusion_holds: Option<bool>,
    pub witness: BTreeMap<String, i64>,
}

impl TheoremVerdict {
    fn new(theorem: TheoremId, hypotheses_met: bool, conclusion: impl FnOnce() -> bool) -> Self {
        TheoremVerdict {
            theorem,
            hypotheses_met,
            conclusion_holds: hypotheses_met.then(conclusion),
            witness: BTreeMap::new(),
        }
    }

    fn with(mut self, pairs: &[(&str, i64)]) -> Self {
        for &(k, v) in pairs {
            self.witness.insert(k.to_string(), v);
        }
        self
    }

    pub fn is_falsification(&self) -> bool {
        self.hypotheses_met && self.conclusion_holds == Some(false)
    }
}

/// Everything the statements mention, computed once per semigroup.
#[derive(Debug, Clone, Copy)]
struct Facts {
    m: i64,
    c: i64,
    k: i64,
    l: i64,
    rho: i64,
    delta: i64,
    e: i64,
    e_s: i64,
    e_c: i64,
    eliahou: i64,
    mu: i64,
    highly_dense: bool,
}

impl Facts {
    fn of(s: &NumericalSemigroup) -> Result<Self> {
        if s.is_trivial() {
            return Err(Error::TrivialSemigroup);
        }
        let (m, c) = (s.multiplicity() as i64, s.conductor() as i64);
        let l = (c - 1) / m;
        let split = generator_split(s)?;
        Ok(Facts {
            m,
            c,
            k: concentration(s) as i64,
            l,
            rho: c - l * m,
            delta: delta(s) as i64,
            e: s.embedding_dimension() as i64,
            e_s: split.e_s as i64,
            e_c: split.e_c as i64,
            eliahou: eliahou(s)?,
            mu: mu(s) as i64,
            highly_dense: is_highly_dense(s),
        })
    }

    fn wilf(&self, k: i64) -> i64 {
        k * self.delta - self.c
    }

    fn conductor_above_2m(&self) -> bool {
        self.c > 2 * self.m
    }
}

/// `C <= 2`, or `2C <= e` with `e >= 4`.
pub fn is_highly_dense(s: &NumericalSemigroup) -> bool {
    let k = concentration(s);
    let e = s.embedding_dimension() as u64;
    k <= 2 || (2 * k <= e && e >= 4)
}

fn delta_lower_bound(f: &Facts) -> TheoremVerdict {
    // δ >= ((L-1)m + ρ)/k + 1  <=>  k(δ - 1) >= (L-1)m + ρ
    let lhs = f.k * (f.delta - 1);
    let rhs = (f.l - 1) * f.m + f.rho;
    TheoremVerdict::new(TheoremId::DeltaLowerBound, true, || lhs >= rhs).with(&[
        ("delta", f.delta),
        ("k", f.k),
        ("L", f.l),
        ("m", f.m),
        ("rho", f.rho),
        ("k_times_delta_minus_1", lhs),
        ("bound_numerator", rhs),
    ])
}

fn small_generator_bound(f: &Facts) -> TheoremVerdict {
    TheoremVerdict::new(
        TheoremId::SmallGeneratorBound,
        f.conductor_above_2m(),
        || f.e_s * f.k >= f.m,
    )
    .with(&[("c", f.c), ("m", f.m), ("k", f.k), ("e_s", f.e_s)])
}

fn wilf_at_twice_concentration(f: &Facts) -> TheoremVerdict {
    let w = f.wilf(2 * f.k);
    TheoremVerdict::new(
        TheoremId::WilfAtTwiceConcentration,
        f.conductor_above_2m(),
        || w >= 0 && 2 * f.k >= f.mu,
    )
    .with(&[
        ("c", f.c),
        ("m", f.m),
        ("k", f.k),
        ("mu", f.mu),
        ("wilf_2k", w),
    ])
}

fn wilf_after_concentration(f: &Facts) -> TheoremVerdict {
    let w = f.wilf(f.k + 1);
    TheoremVerdict::new(
        TheoremId::WilfAfterConcentration,
        f.delta >= f.m - f.k,
        || w >= 0 && f.k + 1 >= f.mu,
    )
    .with(&[
        ("delta", f.delta),
        ("m", f.m),
        ("k", f.k),
        ("mu", f.mu),
        ("wilf_k_plus_1", w),
    ])
}

fn eliahou_sandwich(f: &Facts) -> TheoremVerdict {
    let (we, wes) = (f.wilf(f.e), f.wilf(f.e_s));
    TheoremVerdict::new(TheoremId::EliahouSandwich, true, || {
        we >= f.eliahou && f.eliahou >= wes
    })
    .with(&[
        ("wilf_e", we),
        ("eliahou", f.eliahou),
        ("wilf_es", wes),
        ("e", f.e),
        ("e_s", f.e_s),
    ])
}

fn negative_eliahou_wilf(f: &Facts) -> TheoremVerdict {
    let we = f.wilf(f.e);
    TheoremVerdict::new(TheoremId::NegativeEliahouWilf, f.eliahou < 0, || {
        we < f.e_c * f.delta && f.mu > f.e_s
    })
    .with(&[
        ("eliahou", f.eliahou),
        ("wilf_e", we),
        ("e_c_times_delta", f.e_c * f.delta),
        ("mu", f.mu),
        ("e_s", f.e_s),
    ])
}

/// `m(L-1)` against `k²(L+1)`.
fn concentration_sides(f: &Facts) -> (i64, i64) {
    (f.m * (f.l - 1), f.k * f.k * (f.l + 1))
}

fn concentration_forces_eliahou(f: &Facts) -> TheoremVerdict {
    let (lhs, rhs) = concentration_sides(f);
    TheoremVerdict::new(
        TheoremId::ConcentrationForcesEliahou,
        f.conductor_above_2m() && lhs > rhs,
        || f.eliahou >= 0,
    )
    .with(&[
        ("c", f.c),
        ("m", f.m),
        ("k", f.k),
        ("L", f.l),
        ("m_times_L_minus_1", lhs),
        ("k2_times_L_plus_1", rhs),
        ("eliahou", f.eliahou),
    ])
}

fn negative_eliahou_concentration(f: &Facts) -> TheoremVerdict {
    let (lhs, rhs) = concentration_sides(f);
    TheoremVerdict::new(
        TheoremId::NegativeEliahouConcentration,
        f.eliahou < 0,
        || lhs < rhs,
    )
    .with(&[
        ("eliahou", f.eliahou),
        ("m", f.m),
        ("k", f.k),
        ("L", f.l),
        ("m_times_L_minus_1", lhs),
        ("k2_times_L_plus_1", rhs),
    ])
}

fn highly_dense_clauses(f: &Facts) -> TheoremVerdict {
    // clause (1): k <= 2; clause (2): k <= e/2 and e >= 4
    let clause = if f.k <= 2 {
        1
    } else if 2 * f.k <= f.e && f.e >= 4 {
        2
    } else {
        0
    };
    TheoremVerdict::new(TheoremId::HighlyDenseClauses, true, || {
        (clause != 0) == f.highly_dense
    })
    .with(&[
        ("k", f.k),
        ("e", f.e),
        ("clause", clause),
        ("highly_dense", f.highly_dense as i64),
    ])
}

fn highly_dense_wilf(f: &Facts) -> TheoremVerdict {
    let we = f.wilf(f.e);
    TheoremVerdict::new(
        TheoremId::HighlyDenseWilf,
        f.highly_dense && f.conductor_above_2m(),
        || we >= 0,
    )
    .with(&[
        ("highly_dense", f.highly_dense as i64),
        ("c", f.c),
        ("m", f.m),
        ("wilf_e", we),
    ])
}

fn highly_dense_eliahou(f: &Facts) -> TheoremVerdict {
    let hyp = f.k >= 2 && f.conductor_above_2m() && f.e_s >= 2 * f.k;
    TheoremVerdict::new(TheoremId::HighlyDenseEliahou, hyp, || f.eliahou >= 0).with(&[
        ("k", f.k),
        ("c", f.c),
        ("m", f.m),
        ("e_s", f.e_s),
        ("eliahou", f.eliahou),
    ])
}

fn highly_dense_eliahou_delta(f: &Facts) -> TheoremVerdict {
    let hyp = f.k >= 2 && f.e_s > f.k && f.delta >= f.m - f.k && f.conductor_above_2m();
    TheoremVerdict::new(TheoremId::HighlyDenseEliahouDelta, hyp, || f.eliahou >= 0).with(&[
        ("k", f.k),
        ("e_s", f.e_s),
        ("delta", f.delta),
        ("c", f.c),
        ("m", f.m),
        ("eliahou", f.eliahou),
    ])
}

fn dispatch(id: TheoremId, f: &Facts) -> TheoremVerdict {
    match id {
        TheoremId::DeltaLowerBound => delta_lower_bound(f),
        TheoremId::SmallGeneratorBound => small_generator_bound(f),
        TheoremId::WilfAtTwiceConcentration => wilf_at_twice_concentration(f),
        TheoremId::WilfAfterConcentration => wilf_after_concentration(f),
        TheoremId::EliahouSandwich => eliahou_sandwich(f),
        TheoremId::NegativeEliahouWilf => negative_eliahou_wilf(f),
        TheoremId::ConcentrationForcesEliahou => concentration_forces_eliahou(f),
        TheoremId::NegativeEliahouConcentration => negative_eliahou_concentration(f),
        TheoremId::HighlyDenseClauses => highly_dense_clauses(f),
        TheoremId::HighlyDenseWilf => highly_dense_wilf(f),
        TheoremId::HighlyDenseEliahou => highly_dense_eliahou(f),
        TheoremId::HighlyDenseEliahouDelta => highly_dense_eliahou_delta(f),
    }
}

pub fn check(id: TheoremId, s: &NumericalSemigroup) -> Result<TheoremVerdict> {
    Ok(dispatch(id, &Facts::of(s)?))
}

pub fn check_delta_lower_bound(s: &NumericalSemigroup) -> Result<TheoremVerdict> {
    check(TheoremId::DeltaLowerBound, s)
}

pub fn check_small_generator_bound(s: &NumericalSemigroup) -> Result<TheoremVerdict> {
    check(TheoremId::SmallGeneratorBound, s)
}

pub fn check_wilf_at_twice_concentration(s: &NumericalSemigroup) -> Result<TheoremVerdict> {
    check(TheoremId::WilfAtTwiceConcentration, s)
}

pub fn check_wilf_after_concentration(s: &NumericalSemigroup) -> Result<TheoremVerdict> {
    check(TheoremId::WilfAfterConcentration, s)
}

pub fn check_eliahou_sandwich(s: &NumericalSemigroup) -> Result<TheoremVerdict> {
    check(TheoremId::EliahouSandwich, s)
}

pub fn check_negative_eliahou_wilf(s: &NumericalSemigroup) -> Result<TheoremVerdict> {
    check(TheoremId::NegativeEliahouWilf, s)
}

pub fn check_concentration_forces_eliahou(s: &NumericalSemigroup) -> Result<TheoremVerdict> {
    check(TheoremId::ConcentrationForcesEliahou, s)
}

pub fn check_negative_eliahou_concentration(s: &NumericalSemigroup) -> Result<TheoremVerdict> {
    check(TheoremId::NegativeEliahouConcentration, s)
}

pub fn check_highly_dense_clauses(s: &NumericalSemigroup) -> Result<TheoremVerdict> {
    check(TheoremId::HighlyDenseClauses, s)
}

pub fn check_highly_dense_wilf(s: &NumericalSemigroup) -> Result<TheoremVerdict> {
    check(TheoremId::HighlyDenseWilf, s)
}

pub fn check_highly_dense_eliahou(s: &NumericalSemigroup) -> Result<TheoremVerdict> {
    check(TheoremId::HighlyDenseEliahou, s)
}

pub fn check_highly_dense_eliahou_delta(s: &NumericalSemigroup) -> Result<TheoremVerdict> {
    check(TheoremId::HighlyDenseEliahouDelta, s)
}

/// One verdict per [`TheoremId`], in declaration order.
pub fn check_all(s: &NumericalSemigroup) -> Result<Vec<TheoremVerdict>> {
    let facts = Facts::of(s)?;
    Ok(TheoremId::ALL
        .iter()
        .map(|&id| dispatch(id, &facts))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::GeneratorSpec;
    use crate::wilf::w_mq;

    fn sg(s: &str) -> NumericalSemigroup {
        s.parse::<GeneratorSpec>().unwrap().build().unwrap()
    }

    const SPARSE_REF: &str = "30,42,51;290";
    const DENSE_REF: &str = "50,55,60,65,70,73,77,81,86,91,96,194,199";
    const NEG_E_REF: &str = "100,170,171,176;599";

    fn big_m_ref() -> NumericalSemigroup {
        let mut g: Vec<u64> = (0..40).map(|k| 1000 + 25 * k).collect();
        g.extend([1507, 1899, 13765, 13790, 13815]);
        NumericalSemigroup::from_generators(&g).unwrap()
    }

    fn w(v: &TheoremVerdict, key: &str) -> i64 {
        v.witness[key]
    }

    #[test]
    fn trivial_is_rejected() {
        assert_eq!(check_all(&sg("1")), Err(Error::TrivialSemigroup));
        assert_eq!(
            check_delta_lower_bound(&sg(";1")),
            Err(Error::TrivialSemigroup)
        );
    }

    #[test]
    fn delta_lower_bound_examples() {
        for (m, q) in [(2, 3), (7, 5), (13, 2)] {
            let v = check_delta_lower_bound(&w_mq(m, q).unwrap()).unwrap();
            assert_eq!(v.conclusion_holds, Some(true));
            assert_eq!(w(&v, "k_times_delta_minus_1"), w(&v, "bound_numerator"));
        }
        assert_eq!(
            check_delta_lower_bound(&sg(SPARSE_REF)).unwrap().conclusion_holds,
            Some(true)
        );

        let v = check_delta_lower_bound(&NumericalSemigroup::ordinary(6).unwrap()).unwrap();
        assert_eq!((w(&v, "L"), w(&v, "rho"), w(&v, "k")), (0, 6, 1));
        // ((L-1)m + ρ)/k + 1 = (-6 + 6)/1 + 1 = 1 = δ
        assert_eq!(w(&v, "k_times_delta_minus_1"), 0);
        assert_eq!(w(&v, "bound_numerator"), 0);
    }

    #[test]
    fn small_generator_bound_examples() {
        let v = check_small_generator_bound(&sg(DENSE_REF)).unwrap();
        assert!(v.hypotheses_met);
        assert_eq!((w(&v, "e_s"), w(&v, "k")), (11, 5));
        assert_eq!(v.conclusion_holds, Some(true));

        let v = check_small_generator_bound(&NumericalSemigroup::ordinary(5).unwrap()).unwrap();
        assert!(!v.hypotheses_met);
        assert_eq!(v.conclusion_holds, None);
    }

    #[test]
    fn wilf_at_twice_concentration_examples() {
        let v = check_wilf_at_twice_concentration(&sg(DENSE_REF)).unwrap();
        assert!(v.hypotheses_met);
        assert_eq!(w(&v, "wilf_2k"), 470);
        assert_eq!(v.conclusion_holds, Some(true));

        // {0,3,->}: k = 1, W(2) = -1, the c > 2m guard keeps this out
        let v =
            check_wilf_at_twice_concentration(&NumericalSemigroup::ordinary(3).unwrap()).unwrap();
        assert!(!v.hypotheses_met);
        assert_eq!(w(&v, "wilf_2k"), -1);
    }

    #[test]
    fn wilf_after_concentration_examples() {
        let v = check_wilf_after_concentration(&sg(DENSE_REF)).unwrap();
        assert!(v.hypotheses_met);
        assert_eq!(w(&v, "wilf_k_plus_1"), 206);
        assert_eq!(v.conclusion_holds, Some(true));

        let v = check_wilf_after_concentration(&sg("2,3")).unwrap();
        assert!(v.hypotheses_met);
        assert_eq!(w(&v, "wilf_k_plus_1"), 0);
        assert_eq!(v.conclusion_holds, Some(true));
    }

    #[test]
    fn eliahou_sandwich_examples() {
        let v = check_eliahou_sandwich(&sg(SPARSE_REF)).unwrap();
        assert_eq!(
            (w(&v, "wilf_e"), w(&v, "eliahou"), w(&v, "wilf_es")),
            (1205, 105, -95)
        );
        assert_eq!(v.conclusion_holds, Some(true));

        let v = check_eliahou_sandwich(&sg(NEG_E_REF)).unwrap();
        assert_eq!(
            (w(&v, "wilf_e"), w(&v, "eliahou"), w(&v, "wilf_es")),
            (2880, -1, -403)
        );
        assert_eq!(v.conclusion_holds, Some(true));

        let v = check_eliahou_sandwich(&NumericalSemigroup::ordinary(9).unwrap()).unwrap();
        assert_eq!(
            (w(&v, "wilf_e"), w(&v, "eliahou"), w(&v, "wilf_es")),
            (0, 0, -9)
        );
    }

    #[test]
    fn negative_eliahou_wilf_examples() {
        let v = check_negative_eliahou_wilf(&sg(NEG_E_REF)).unwrap();
        assert!(v.hypotheses_met);
        assert_eq!((w(&v, "mu"), w(&v, "e_s")), (13, 4));
        assert_eq!((w(&v, "wilf_e"), w(&v, "e_c_times_delta")), (2880, 67 * 49));
        assert_eq!(v.conclusion_holds, Some(true));

        assert!(
            !check_negative_eliahou_wilf(&sg(SPARSE_REF))
                .unwrap()
                .hypotheses_met
        );
    }

    #[test]
    fn concentration_forces_eliahou_examples() {
        let v = check_concentration_forces_eliahou(&big_m_ref()).unwrap();
        assert_eq!((w(&v, "m"), w(&v, "k"), w(&v, "L")), (1000, 25, 13));
        assert!(v.hypotheses_met);
        assert_eq!(v.conclusion_holds, Some(true));

        // 50·2 = 25·4: the strict inequality fails though E = 544
        let v = check_concentration_forces_eliahou(&sg(DENSE_REF)).unwrap();
        assert_eq!(
            (w(&v, "m_times_L_minus_1"), w(&v, "k2_times_L_plus_1")),
            (100, 100)
        );
        assert!(!v.hypotheses_met);
        assert_eq!(w(&v, "eliahou"), 544);

        assert!(
            !check_concentration_forces_eliahou(&sg(NEG_E_REF))
                .unwrap()
                .hypotheses_met
        );
    }

    #[test]
    fn negative_eliahou_concentration_examples() {
        let v = check_negative_eliahou_concentration(&sg(NEG_E_REF)).unwrap();
        assert!(v.hypotheses_met);
        assert_eq!(
            (w(&v, "m_times_L_minus_1"), w(&v, "k2_times_L_plus_1")),
            (400, 4900 * 6)
        );
        assert_eq!(v.conclusion_holds, Some(true));
        assert!(
            !check_negative_eliahou_concentration(&sg(SPARSE_REF))
                .unwrap()
                .hypotheses_met
        );
    }

    #[test]
    fn highly_dense_examples() {
        let s = sg(DENSE_REF);
        assert!(is_highly_dense(&s));
        let v = check_highly_dense_wilf(&s).unwrap();
        assert!(v.hypotheses_met);
        assert_eq!(w(&v, "wilf_e"), 668);
        assert_eq!(v.conclusion_holds, Some(true));

        let v = check_highly_dense_eliahou(&s).unwrap();
        assert!(v.hypotheses_met);
        assert_eq!(v.conclusion_holds, Some(true));
        assert_eq!(w(&v, "eliahou"), 544);

        // C <= 2 is enough on its own
        assert!(is_highly_dense(&sg("2,3")));
        assert!(is_highly_dense(&sg("3,5")));
        assert!(is_highly_dense(&NumericalSemigroup::ordinary(40).unwrap()));

        assert!(!is_highly_dense(&big_m_ref()));
        let v = check_highly_dense_clauses(&big_m_ref()).unwrap();
        assert_eq!(w(&v, "clause"), 0);
        assert_eq!(v.conclusion_holds, Some(true));
    }

    #[test]
    fn check_all_has_no_falsifications() {
        for t in [SPARSE_REF, DENSE_REF, NEG_E_REF, "2,3", "3,5,7", "100,170,172,175;600"] {
            let verdicts = check_all(&sg(t)).unwrap();
            assert_eq!(verdicts.len(), 12);
            assert!(
                verdicts.iter().all(|v| !v.is_falsification()),
                "{t}: {verdicts:?}"
            );
            for v in &verdicts {
                assert_eq!(v.hypotheses_met, v.conclusion_holds.is_some());
            }
        }
    }

    #[test]
    fn verdict_json_shape() {
        let v = check_small_generator_bound(&sg(DENSE_REF)).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["theorem"], "small_generator_bound");
        assert_eq!(json["hypotheses_met"], true);
        assert_eq!(json["conclusion_holds"], true);
        assert_eq!(json["witness"]["e_s"], 11);
    }
}
