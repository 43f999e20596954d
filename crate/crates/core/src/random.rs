//! Random instance generators for sweeps, tests and benchmarks.
//!
//! Coefficients are uniform in `[−COEFF_RANGE, COEFF_RANGE]` per component.

use rand::Rng;

use crate::octonion::Octonion;
use crate::quadratic::CaseTag;
use crate::spectrum::OctMatrix2;

pub const COEFF_RANGE: f64 = 2.0;

pub fn real<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.random_range(-COEFF_RANGE..=COEFF_RANGE)
}

pub fn octonion<R: Rng + ?Sized>(rng: &mut R) -> Octonion {
    Octonion::new(std::array::from_fn(|_| real(rng)))
}

/// Random element of the quaternion subspace (`l`-half zero).
pub fn quaternionic<R: Rng + ?Sized>(rng: &mut R) -> Octonion {
    Octonion::new(std::array::from_fn(|k| if k < 4 { real(rng) } else { 0.0 }))
}

/// Random octonion with norm at least `min_norm`.
pub fn nonzero<R: Rng + ?Sized>(rng: &mut R, min_norm: f64) -> Octonion {
    loop {
        let x = octonion(rng);
        if x.norm() >= min_norm {
            return x;
        }
    }
}

/// Random `(b, c)` falling in `case`.
pub fn instance<R: Rng + ?Sized>(rng: &mut R, case: CaseTag) -> (Octonion, Octonion) {
    match case {
        CaseTag::Case1 => {
            let b = real(rng);
            let c = rng.random_range(-COEFF_RANGE..=b * b / 4.0);
            (Octonion::real(b), Octonion::real(c))
        }
        CaseTag::Case2 => {
            let b = real(rng);
            let c = b * b / 4.0 + rng.random_range(1e-3..=COEFF_RANGE);
            (Octonion::real(b), Octonion::real(c))
        }
        CaseTag::Case3 => (Octonion::real(real(rng)), nonzero(rng, 1e-3).im() + real(rng)),
        CaseTag::Case4 => (nonzero(rng, 1e-3).im() + real(rng), octonion(rng)),
    }
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R) -> OctMatrix2 {
    OctMatrix2::new(octonion(rng), octonion(rng), octonion(rng), octonion(rng))
}

pub fn quaternionic_matrix<R: Rng + ?Sized>(rng: &mut R) -> OctMatrix2 {
    OctMatrix2::new(
        quaternionic(rng),
        quaternionic(rng),
        quaternionic(rng),
        quaternionic(rng),
    )
}

/// Upper (`c = 0`) or lower (`b = 0`) triangular matrix with generic entries.
pub fn triangular<R: Rng + ?Sized>(rng: &mut R, upper: bool) -> OctMatrix2 {
    let (a, off, d) = (octonion(rng), octonion(rng), octonion(rng));
    if upper {
        OctMatrix2::new(a, off, Octonion::ZERO, d)
    } else {
        OctMatrix2::new(a, Octonion::ZERO, off, d)
    }
}
