//! Seeded sampling of torus points.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::elliptic::Lattice;

/// Deterministic sampler; equal seeds yield equal point sequences.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    pub fn normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    pub fn complex_normal(&mut self) -> Complex64 {
        Complex64::new(self.normal(), self.normal())
    }

    /// A point `u + vτ` with `u, v ∈ [−½, ½)`.
    pub fn centered(&mut self, tau: Complex64) -> Complex64 {
        let u = self.uniform(-0.5, 0.5);
        let v = self.uniform(-0.5, 0.5);
        u + tau * v
    }

    /// A point of the centred unit parallelogram at distance at least
    /// `radius` from every translate of `punctures` by `lattice`.
    pub fn avoiding(&mut self, tau: Complex64, lattice: &Lattice, punctures: &[Complex64], radius: f64) -> Complex64 {
        loop {
            let z = self.centered(tau);
            if punctures.iter().all(|&p| lattice.distance(z - p) >= radius) {
                return z;
            }
        }
    }
}
