//! Seeded random semigroups for soundness sweeps over the theorem checkers.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{gcd, GeneratorSpec, NumericalSemigroup};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzParams {
    pub seed: u64,
    /// Multiplicities are drawn from `[2, max_multiplicity]`.
    pub max_multiplicity: u64,
    /// Upper bound on the number of generators drawn besides `m`.
    pub max_generators: usize,
    pub threshold_probability: f64,
    pub count: usize,
}

impl Default for FuzzParams {
    fn default() -> Self {
        FuzzParams {
            seed: 42,
            max_multiplicity: 200,
            max_generators: 6,
            threshold_probability: 0.5,
            count: 1000,
        }
    }
}

impl FuzzParams {
    pub fn validate(&self) -> Result<()> {
        if self.max_multiplicity < 2 {
            return Err(Error::BadParams(
                "max_multiplicity must be at least 2".into(),
            ));
        }
        if self.max_generators == 0 {
            return Err(Error::BadParams("max_generators must be positive".into()));
        }
        if !(0.0..=1.0).contains(&self.threshold_probability) {
            return Err(Error::BadParams(
                "threshold_probability must lie in [0, 1]".into(),
            ));
        }
        Ok(())
    }
}

/// Deterministic stream of `count` generator specs for a seed.
///
/// Extra generators are drawn from `(m, 3m]`. Without a threshold a
/// generator coprime to the running gcd is appended when needed; with
/// one, `r` is drawn from `[2m, 15m]`.
pub fn random_specs(params: &FuzzParams) -> Result<impl Iterator<Item = GeneratorSpec>> {
    params.validate()?;
    let params = params.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    Ok((0..params.count).map(move |_| {
        let m = rng.gen_range(2..=params.max_multiplicity);
        let extra = rng.gen_range(1..=params.max_generators);
        let mut gens = vec![m];
        gens.extend((0..extra).map(|_| rng.gen_range(m + 1..=3 * m)));
        if rng.gen_bool(params.threshold_probability) {
            let r = rng.gen_range(2 * m..=15 * m);
            return GeneratorSpec::with_threshold(gens, r);
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            let candidate = rng.gen_range(m + 1..=3 * m);
            let coprime = (candidate..)
                .find(|&x| gcd(g, x) == 1)
                .expect("some integer is coprime to g");
            gens.push(coprime);
        }
        GeneratorSpec::generators(gens)
    }))
}

pub fn random_semigroup(params: &FuzzParams) -> Result<impl Iterator<Item = NumericalSemigroup>> {
    Ok(random_specs(params)?.map(|spec| spec.build().expect("fuzz specs are valid")))
}
