//! Real auxiliary solvers behind the non-real-`b` quadratic case.
//!
//! Given real parameters `(B, E, D)` with `E ≥ 0` and `B < 0 ⇒ B² < 4E`,
//! find every pair `(T, N)` with `N ≥ 0` solving
//!
//! ```text
//! N² − (B + T²)·N + E = 0
//! T³ + (B − 2N)·T + D = 0
//! ```
//!
//! When `D ≠ 0` this goes through the unique positive root `z` of
//! `z³ + 2B·z² + (B² − 4E)·z − D²`, with `T = ±√z`.

use crate::error::{Error, Result};

/// `|D| ≤ D_ZERO_TOL·(1 + |B| + E)` dispatches to the `D = 0` branches.
pub const D_ZERO_TOL: f64 = 1e-13;
/// Smallest `N` accepted (then clamped to 0).
pub const N_FLOOR: f64 = -1e-12;
/// Final bracket width of the bisection stage.
pub const BISECT_WIDTH: f64 = 1e-13;
const NEWTON_STEPS: usize = 3;
/// Relative band on `B² − 4E` for the domain check and the repeated-`N` test.
const DISC_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicParams {
    pub b: f64,
    pub e: f64,
    pub d: f64,
}

impl CubicParams {
    pub const fn new(b: f64, e: f64, d: f64) -> Self {
        Self { b, e, d }
    }

    /// `B² − 4E`.
    pub fn discriminant(&self) -> f64 {
        self.b * self.b - 4.0 * self.e
    }

    /// `f(z) = z³ + 2B·z² + (B² − 4E)·z − D²`, Horner form.
    pub fn cubic(&self, z: f64) -> f64 {
        ((z + 2.0 * self.b) * z + self.discriminant()) * z - self.d * self.d
    }

    fn cubic_deriv(&self, z: f64) -> f64 {
        (3.0 * z + 4.0 * self.b) * z + self.discriminant()
    }

    /// Cauchy bound on the roots of the cubic.
    pub fn root_bound(&self) -> f64 {
        1.0 + (2.0 * self.b)
            .abs()
            .max(self.discriminant().abs())
            .max(self.d * self.d)
    }

    pub fn d_is_zero(&self) -> bool {
        self.d.abs() <= D_ZERO_TOL * (1.0 + self.b.abs() + self.e)
    }

    fn disc_band(&self) -> f64 {
        DISC_TOL * (self.b * self.b).max(4.0 * self.e).max(1.0)
    }

    pub fn check_domain(&self) -> Result<()> {
        let ok = self.b.is_finite()
            && self.d.is_finite()
            && self.e.is_finite()
            && self.e >= 0.0
            && !(self.b < 0.0 && self.discriminant() > self.disc_band());
        if ok {
            Ok(())
        } else {
            Err(Error::CubicDomain {
                b: self.b,
                e: self.e,
            })
        }
    }

    /// Residuals of the two trace/norm equations at `pair`.
    pub fn tn_residuals(&self, pair: TnPair) -> (f64, f64) {
        let TnPair { t, n } = pair;
        let r1 = n * n - (self.b + t * t) * n + self.e;
        let r2 = t * t * t + (self.b - 2.0 * n) * t + self.d;
        (r1.abs(), r2.abs())
    }
}

/// Candidate trace `T = y + conj(y)` and norm `N = conj(y)·y` of a root.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TnPair {
    pub t: f64,
    pub n: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TnBranch {
    /// `D = 0`, `B² ≥ 4E`: `T = 0`, `N = (B ± √(B² − 4E))/2`.
    ZeroTrace,
    /// `D = 0`, `B² < 4E`: `T = ±√(2√E − B)`, `N = √E`.
    BalancedNorm,
    /// `D ≠ 0`: `T = ±√z`, `N = (T³ + BT + D)/2T`.
    Cubic,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TnSolutions {
    pub branch: TnBranch,
    pub pairs: Vec<TnPair>,
    /// `ZeroTrace` with `B² = 4E`: the two `N` values coincide and a single
    /// pair is returned.
    pub repeated: bool,
}

/// The unique `z > 0` with `z³ + 2B·z² + (B² − 4E)·z − D² = 0`.
///
/// Bisection on `[0, root_bound]` (`f(0) = −D² < 0`), then a few Newton
/// steps that are kept only while they reduce `|f|`.
pub fn positive_cubic_root(p: &CubicParams) -> Result<f64> {
    p.check_domain()?;
    if p.d == 0.0 {
        return Err(Error::ZeroCubicConstant);
    }

    let (mut lo, mut hi) = (0.0f64, p.root_bound());
    while hi - lo > BISECT_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if p.cubic(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let mut z = 0.5 * (lo + hi);
    let mut fz = p.cubic(z);
    for _ in 0..NEWTON_STEPS {
        let slope = p.cubic_deriv(z);
        if slope == 0.0 || fz == 0.0 {
            break;
        }
        let next = z - fz / slope;
        let f_next = p.cubic(next);
        if next > 0.0 && f_next.abs() < fz.abs() {
            z = next;
            fz = f_next;
        } else {
            break;
        }
    }
    Ok(z)
}

/// All admissible `(T, N)` pairs, at most two.
pub fn solve_tn(p: &CubicParams) -> Result<TnSolutions> {
    p.check_domain()?;
    let CubicParams { b, e, d } = *p;

    if !p.d_is_zero() {
        let z = positive_cubic_root(p)?;
        let root = z.sqrt();
        let pairs = [root, -root]
            .into_iter()
            .filter_map(|t| admissible(t, (t * t * t + b * t + d) / (2.0 * t)))
            .collect();
        return Ok(TnSolutions {
            branch: TnBranch::Cubic,
            pairs,
            repeated: false,
        });
    }

    let disc = p.discriminant();
    if disc >= -p.disc_band() {
        if disc <= p.disc_band() {
            return Ok(TnSolutions {
                branch: TnBranch::ZeroTrace,
                pairs: admissible(0.0, 0.5 * b).into_iter().collect(),
                repeated: true,
            });
        }
        let s = disc.sqrt();
        // Both N are nonnegative whenever the domain check passes; the
        // filter only matters for inputs right at the band edge.
        let pairs = [0.5 * (b + s), 0.5 * (b - s)]
            .into_iter()
            .filter_map(|n| admissible(0.0, n))
            .collect();
        Ok(TnSolutions {
            branch: TnBranch::ZeroTrace,
            pairs,
            repeated: false,
        })
    } else {
        let n = e.sqrt();
        let t = (2.0 * n - b).max(0.0).sqrt();
        Ok(TnSolutions {
            branch: TnBranch::BalancedNorm,
            pairs: vec![TnPair { t, n }, TnPair { t: -t, n }],
            repeated: false,
        })
    }
}

fn admissible(t: f64, n: f64) -> Option<TnPair> {
    (n >= N_FLOOR).then(|| TnPair { t, n: n.max(0.0) })
}
