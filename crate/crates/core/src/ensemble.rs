//! Seeded random ovals for property sweeps and benchmarks.
//!
//! Trial `i` of a batch draws from its own ChaCha stream (`seed`, stream `i`),
//! so a batch is reproducible and identical under every [`Execution`] policy.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::par::Execution;
use crate::support_fourier::{FourierSupport, Harmonic};

/// Which harmonics a random oval may carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HarmonicParity {
    Any,
    /// Only odd `n`: the oval has constant width.
    OddOnly,
    /// At least one even `n ≥ 2` guaranteed.
    WithEven,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OvalDistribution {
    /// Number of harmonics is drawn from `1..=max_harmonics`.
    pub max_harmonics: usize,
    /// Harmonic indices are drawn from `1..=max_index`.
    pub max_index: u32,
    /// Guaranteed lower bound on `ρ / a0`.
    pub min_rho_fraction: f64,
    pub parity: HarmonicParity,
}

impl Default for OvalDistribution {
    fn default() -> Self {
        OvalDistribution {
            max_harmonics: 8,
            max_index: 12,
            min_rho_fraction: 0.1,
            parity: HarmonicParity::Any,
        }
    }
}

impl OvalDistribution {
    pub fn with_parity(self, parity: HarmonicParity) -> Self {
        OvalDistribution { parity, ..self }
    }

    /// Draws one oval.
    ///
    /// Since `|ρ − a0| ≤ Σ (n²−1)√(a_n² + b_n²)`, rescaling the harmonics so
    /// that this sum is at most `(1 − min_rho_fraction)·a0` certifies
    /// `ρ ≥ min_rho_fraction·a0` without a grid search.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> FourierSupport {
        let a0 = rng.random_range(1.0..10.0);
        let indices = self.draw_indices(rng);
        let mut terms: Vec<Harmonic> = indices
            .into_iter()
            .map(|n| {
                let amp = rng.random_range(0.05..1.0) / f64::from(n * n).max(1.0);
                let phase = rng.random_range(0.0..std::f64::consts::TAU);
                Harmonic::new(n, amp * a0 * phase.cos(), amp * a0 * phase.sin())
            })
            .collect();

        let budget = (1.0 - self.min_rho_fraction) * a0;
        let load: f64 = terms
            .iter()
            .map(|h| (f64::from(h.n * h.n) - 1.0) * h.amplitude())
            .sum();
        // random fill of the budget keeps the ensemble away from a single shell
        let target = budget * rng.random_range(0.2..1.0);
        if load > 0.0 {
            let s = target / load;
            for h in &mut terms {
                if h.n > 1 {
                    h.a *= s;
                    h.b *= s;
                }
            }
        }
        FourierSupport::new(a0, terms).expect("rho bound certifies convexity")
    }

    fn draw_indices<R: Rng>(&self, rng: &mut R) -> Vec<u32> {
        let pool: Vec<u32> = (1..=self.max_index)
            .filter(|n| match self.parity {
                HarmonicParity::OddOnly => n % 2 == 1,
                _ => true,
            })
            .collect();
        let count = rng.random_range(1..=self.max_harmonics.min(pool.len()));
        let mut picked: Vec<u32> = sample(rng, pool.len(), count)
            .into_iter()
            .map(|i| pool[i])
            .collect();
        if self.parity == HarmonicParity::WithEven && !picked.iter().any(|n| n % 2 == 0 && *n >= 2)
        {
            let evens: Vec<u32> = (2..=self.max_index).step_by(2).collect();
            let e = evens[rng.random_range(0..evens.len())];
            if picked.len() == self.max_harmonics {
                picked.pop();
            }
            if !picked.contains(&e) {
                picked.push(e);
            }
        }
        picked.sort_unstable();
        picked
    }
}

/// RNG for trial `index` of the batch identified by `seed`.
pub fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// `count` random ovals, reproducible from `seed`.
pub fn random_ovals(
    dist: &OvalDistribution,
    seed: u64,
    count: usize,
    exec: Execution,
) -> Vec<FourierSupport> {
    exec.map_coarse(count, |i| dist.sample(&mut trial_rng(seed, i)))
}
