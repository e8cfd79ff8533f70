use num_complex::Complex64;

use crate::error::{Error, Result};

/// The lattice `scale·(ℤ + ℤτ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Lattice {
    tau: Complex64,
    scale: Complex64,
}

impl Lattice {
    pub fn new(tau: Complex64, scale: Complex64) -> Result<Self> {
        if !(tau.im > 0.0) {
            return Err(Error::Precondition(format!("lattice modulus {tau} not in the upper half-plane")));
        }
        if scale.norm() == 0.0 || !scale.is_finite() {
            return Err(Error::Precondition("lattice scale must be nonzero".into()));
        }
        Ok(Lattice { tau, scale })
    }

    /// `ℤ + ℤτ`.
    pub fn unit(tau: Complex64) -> Result<Self> {
        Self::new(tau, Complex64::new(1.0, 0.0))
    }

    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    pub fn scale(&self) -> Complex64 {
        self.scale
    }

    /// `½Λ`.
    pub fn half(&self) -> Self {
        Lattice { tau: self.tau, scale: self.scale / 2.0 }
    }

    pub fn periods(&self) -> (Complex64, Complex64) {
        (self.scale, self.scale * self.tau)
    }

    /// Real coordinates `(x, y)` with `z = scale·(x + yτ)`.
    pub fn coords(&self, z: Complex64) -> (f64, f64) {
        let w = z / self.scale;
        let y = w.im / self.tau.im;
        (w.re - y * self.tau.re, y)
    }

    fn at_coords(&self, x: f64, y: f64) -> Complex64 {
        self.scale * (self.tau * y + x)
    }

    /// Representative in the parallelogram with coordinates in `[0, 1)`.
    pub fn reduce(&self, z: Complex64) -> Complex64 {
        let (x, y) = self.coords(z);
        let (mut fx, mut fy) = (x - x.floor(), y - y.floor());
        if fx >= 1.0 {
            fx = 0.0;
        }
        if fy >= 1.0 {
            fy = 0.0;
        }
        self.at_coords(fx, fy)
    }

    /// Representative with coordinates in `[−½, ½)`.
    pub fn reduce_centered(&self, z: Complex64) -> Complex64 {
        let (x, y) = self.coords(z);
        let (mut fx, mut fy) = (x - (x + 0.5).floor(), y - (y + 0.5).floor());
        if fx >= 0.5 {
            fx -= 1.0;
        }
        if fy >= 0.5 {
            fy -= 1.0;
        }
        self.at_coords(fx, fy)
    }

    /// Euclidean distance from `z` to the nearest lattice point.
    pub fn distance(&self, z: Complex64) -> f64 {
        let w = self.reduce_centered(z);
        let (p1, p2) = self.periods();
        let mut best = f64::INFINITY;
        for m in -1..=1 {
            for n in -1..=1 {
                best = best.min((w - p1 * m as f64 - p2 * n as f64).norm());
            }
        }
        best
    }

    /// Whether `z1 ≡ z2` modulo the lattice within `tol`.
    pub fn equivalent(&self, z1: Complex64, z2: Complex64, tol: f64) -> bool {
        self.distance(z1 - z2) < tol
    }
}

/// A point of the torus `ℂ/Λ`.
#[derive(Clone, Copy, Debug)]
pub struct TorusPoint {
    pub z: Complex64,
    pub lattice: Lattice,
}

/// Tolerance for equality of torus points.
pub const TORUS_EQ_TOL: f64 = 1e-12;

impl TorusPoint {
    pub fn new(z: Complex64, lattice: Lattice) -> Self {
        TorusPoint { z, lattice }
    }

    /// The representative in the fundamental parallelogram.
    pub fn reduced(&self) -> Self {
        TorusPoint { z: self.lattice.reduce(self.z), lattice: self.lattice }
    }

    pub fn neg(&self) -> Self {
        TorusPoint { z: -self.z, lattice: self.lattice }
    }

    pub fn same_as(&self, other: &TorusPoint, tol: f64) -> bool {
        self.lattice.equivalent(self.z, other.z, tol)
    }
}

impl PartialEq for TorusPoint {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice && self.same_as(other, TORUS_EQ_TOL)
    }
}
