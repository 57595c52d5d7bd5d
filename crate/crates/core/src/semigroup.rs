//! Canonical numerical semigroups.
//!
//! A semigroup is stored as its membership bitmap over `[0, c + m)`, which
//! determines everything else: every integer at or above the conductor `c`
//! is a member, and the window `[c, c + m)` holds all minimal generators that
//! are not small elements.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generators plus an optional threshold `r`, written `g1,g2,...,gk;r`.
///
/// With a threshold the described semigroup is `<g1,...,gk>_r`: the smallest
/// semigroup containing the generators and every integer `>= r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub generators: Vec<u64>,
    pub threshold: Option<u64>,
}

impl GeneratorSpec {
    pub fn new(generators: impl Into<Vec<u64>>, threshold: Option<u64>) -> Self {
        Self {
            generators: generators.into(),
            threshold,
        }
    }

    pub fn generators(generators: impl Into<Vec<u64>>) -> Self {
        Self::new(generators, None)
    }

    pub fn with_threshold(generators: impl Into<Vec<u64>>, threshold: u64) -> Self {
        Self::new(generators, Some(threshold))
    }

    pub fn validate(&self) -> Result<()> {
        if self.generators.contains(&0) || self.threshold == Some(0) {
            return Err(Error::ZeroGenerator);
        }
        if self.generators.is_empty() && self.threshold.is_none() {
            return Err(Error::EmptySpec);
        }
        if self.threshold.is_none() {
            let g = self.generators.iter().fold(0, |acc, &x| gcd(acc, x));
            if g != 1 {
                return Err(Error::NonCoprime { gcd: g });
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::build(self)
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.generators {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        if let Some(r) = self.threshold {
            write!(f, ";{r}")?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (gens, threshold) = match s.split_once(';') {
            Some((g, r)) => {
                let r = r.trim();
                if r.is_empty() {
                    return Err(err("empty threshold after ';'"));
                }
                let r: u64 = r
                    .parse()
                    .map_err(|_| err("threshold is not a nonnegative integer"))?;
                (g, Some(r))
            }
            None => (s, None),
        };
        let gens = gens.trim();
        let generators = if gens.is_empty() {
            Vec::new()
        } else {
            gens.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|_| err("generator is not a nonnegative integer"))
                })
                .collect::<Result<Vec<_>>>()?
        };
        let spec = GeneratorSpec {
            generators,
            threshold,
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// The sorted gaps of a semigroup, `N \ S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSet(pub Vec<u64>);

impl GapSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

/// An immutable numerical semigroup in canonical form.
#[derive(Clone)]
pub struct NumericalSemigroup {
    min_generators: Vec<u64>,
    conductor: u64,
    multiplicity: u64,
    /// `members[x]` for `x` in `[0, c + m)`.
    members: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn build(spec: &GeneratorSpec) -> Result<Self> {
        spec.validate()?;

        let threshold = spec.threshold;
        let mut gens: Vec<u64> = spec
            .generators
            .iter()
            .copied()
            .filter(|&g| threshold.is_none_or(|r| g < r))
            .collect();
        gens.sort_unstable();
        gens.dedup();

        let multiplicity = match (gens.first(), threshold) {
            (Some(&g), Some(r)) => g.min(r),
            (Some(&g), None) => g,
            (None, Some(r)) => r,
            (None, None) => unreachable!("validated"),
        };
        let m = multiplicity as usize;
        let gens: Vec<usize> = gens.iter().map(|&g| g as usize).collect();

        let mut capacity = match threshold {
            Some(r) => r as usize + m,
            None => 4 * gens.last().copied().unwrap_or(1),
        }
        .max(m + 1);

        let mut members: Vec<bool> = Vec::with_capacity(capacity);
        let mut run = 0usize;
        let mut last_gap: Option<usize> = None;
        let mut x = 0usize;
        loop {
            while x < capacity {
                let member = x == 0
                    || threshold.is_some_and(|r| x as u64 >= r)
                    || gens
                        .iter()
                        .take_while(|&&g| g <= x)
                        .any(|&g| members[x - g]);
                members.push(member);
                if member {
                    run += 1;
                } else {
                    run = 0;
                    last_gap = Some(x);
                }
                x += 1;
                if run == m {
                    let conductor = last_gap.map_or(0, |g| g + 1);
                    debug_assert_eq!(members.len(), conductor + m);
                    let mut sg = NumericalSemigroup {
                        min_generators: Vec::new(),
                        conductor: conductor as u64,
                        multiplicity,
                        members,
                    };
                    sg.min_generators = sg.compute_min_generators();
                    return Ok(sg);
                }
            }
            capacity *= 2;
        }
    }

    pub fn from_generators(generators: &[u64]) -> Result<Self> {
        GeneratorSpec::generators(generators.to_vec()).build()
    }

    /// `{0, m, ->}`, the semigroup of concentration 1.
    pub fn ordinary(m: u64) -> Result<Self> {
        GeneratorSpec::with_threshold(Vec::new(), m).build()
    }

    fn compute_min_generators(&self) -> Vec<u64> {
        // c + m is decomposable unless c = 0, where it is the generator 1 of N.
        let mut mins: Vec<u64> = Vec::new();
        for x in 1..=self.conductor + self.multiplicity {
            if self.contains(x as i64) && !mins.iter().any(|&a| self.contains((x - a) as i64)) {
                mins.push(x);
            }
        }
        mins
    }

    pub fn min_generators(&self) -> &[u64] {
        &self.min_generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.min_generators.len()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Frobenius number `c - 1`; `-1` for N.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.conductor == 0
    }

    /// Membership bitmap over `[0, c + m)`.
    pub fn membership(&self) -> &[bool] {
        &self.members
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        x >= self.conductor || self.members[x as usize]
    }

    pub fn gaps(&self) -> GapSet {
        GapSet(
            (0..self.conductor)
                .filter(|&x| !self.members[x as usize])
                .collect(),
        )
    }

    pub fn small_elements(&self) -> Vec<u64> {
        (0..self.conductor)
            .filter(|&x| self.members[x as usize])
            .collect()
    }

    /// Number of small elements, the delta invariant.
    pub fn small_count(&self) -> u64 {
        self.members[..self.conductor as usize]
            .iter()
            .filter(|&&b| b)
            .count() as u64
    }

    /// Smallest member strictly greater than `s`.
    pub fn next_element(&self, s: u64) -> u64 {
        let mut x = s + 1;
        while x < self.conductor && !self.members[x as usize] {
            x += 1;
        }
        x
    }

    /// Members in increasing order, stopping at (and including) `bound`.
    pub fn elements_up_to(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..=bound).filter(move |&x| self.contains(x as i64))
    }

    /// Packed small-element bitmap; equal keys mean equal semigroups.
    pub fn canonical_key(&self) -> (u64, Vec<u64>) {
        let c = self.conductor as usize;
        let mut words = vec![0u64; c.div_ceil(64)];
        for (i, &b) in self.members[..c].iter().enumerate() {
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        (self.conductor, words)
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.conductor == other.conductor
            && self.members[..self.conductor as usize] == other.members[..other.conductor as usize]
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalSemigroup")
            .field("min_generators", &self.min_generators)
            .field("conductor", &self.conductor)
            .field("multiplicity", &self.multiplicity)
            .finish()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.min_generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
