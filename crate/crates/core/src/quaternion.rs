//! Hamilton quaternions `q1 + q2·i + q3·j + q4·k`.
//!
//! Used on its own and as the half-type of the Cayley–Dickson octonion
//! product.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A quaternion with coefficients on the basis `(1, i, j, k)`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
    pub q4: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(q1: f64, q2: f64, q3: f64, q4: f64) -> Self {
        Self { q1, q2, q3, q4 }
    }

    pub const fn from_array(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.q1, self.q2, self.q3, self.q4]
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    pub fn conj(self) -> Self {
        Self::new(self.q1, -self.q2, -self.q3, -self.q4)
    }

    pub fn norm_sqr(self) -> f64 {
        self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3 + self.q4 * self.q4
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `conj(q) / |q|²`.
    pub fn inv(self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.conj().scale(1.0 / n2))
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.q1 * s, self.q2 * s, self.q3 * s, self.q4 * s)
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.q1 + o.q1, self.q2 + o.q2, self.q3 + o.q3, self.q4 + o.q4)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.q1 - o.q1, self.q2 - o.q2, self.q3 - o.q3, self.q4 - o.q4)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.q1, -self.q2, -self.q3, -self.q4)
    }
}

/// Hamilton product: `ij = k = −ji`, `jk = i = −kj`, `ki = j = −ik`.
impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, q: Self) -> Self {
        let p = self;
        Self::new(
            p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3 - p.q4 * q.q4,
            p.q1 * q.q2 + p.q2 * q.q1 + p.q3 * q.q4 - p.q4 * q.q3,
            p.q1 * q.q3 - p.q2 * q.q4 + p.q3 * q.q1 + p.q4 * q.q2,
            p.q1 * q.q4 + p.q2 * q.q3 - p.q3 * q.q2 + p.q4 * q.q1,
        )
    }
}
