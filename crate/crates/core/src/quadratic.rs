//! All solutions of the left monic quadratic `x² + b·x + c = 0` over 𝕆.
//!
//! The coefficient pair falls in exactly one of four cases:
//!
//! | case | condition                   | solution set                          |
//! |------|-----------------------------|---------------------------------------|
//! | 1    | `b, c` real, `b² ≥ 4c`      | one or two real roots                 |
//! | 2    | `b, c` real, `b² < 4c`      | sphere `−b/2 + v`, `v` imaginary      |
//! | 3    | `b` real, `c` non-real      | two roots via `ρ`                     |
//! | 4    | `b` non-real                | up to two roots via a `(T, N)` pair   |
//!
//! Case 4 first removes the real part of `b` (`y = x + Re(b)/2`), then every
//! admissible trace/norm pair yields `y = −(b′ + T)⁻¹·(c′ − N)`. The product
//! is unambiguous since `b′ + T` and `c′ − N` live in the subalgebra
//! generated by `b′` and `c′`, which is associative.

use std::fmt;

use crate::error::{Error, Result};
use crate::octonion::Octonion;
use crate::real_solvers::{solve_tn, CubicParams, TnSolutions};

/// Relative band on `b² − 4c` for the repeated-root test in case 1.
pub const DISC_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Case1,
    Case2,
    Case3,
    Case4,
}

impl CaseTag {
    pub fn number(self) -> u8 {
        match self {
            CaseTag::Case1 => 1,
            CaseTag::Case2 => 2,
            CaseTag::Case3 => 3,
            CaseTag::Case4 => 4,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.number())
    }
}

/// `{ real_part + v : v imaginary, |v| = im_radius }`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sphere {
    pub real_part: f64,
    pub im_radius: f64,
}

impl Sphere {
    /// The member in the imaginary direction of `dir`.
    pub fn sample(&self, dir: Octonion) -> Result<Octonion> {
        let v = dir.im();
        let len = v.norm();
        if len == 0.0 {
            return Err(Error::RealDirection);
        }
        Ok(v * (self.im_radius / len) + self.real_part)
    }

    pub fn contains(&self, x: Octonion, tol: f64) -> bool {
        (x.re() - self.real_part).abs() <= tol && (x.im().norm() - self.im_radius).abs() <= tol
    }

    /// Every member has this norm (`√c` for the generating equation).
    pub fn member_norm(&self) -> f64 {
        self.real_part.hypot(self.im_radius)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum RootSet {
    Isolated {
        roots: Vec<Octonion>,
        multiplicity2: bool,
    },
    Sphere(Sphere),
}

/// Why an isolated root set came back empty.
#[derive(Clone, Debug, PartialEq)]
pub enum Diagnostic {
    /// Every `(T, N)` candidate had `N < 0`.
    NoAdmissiblePair,
    /// The derived cubic parameters failed the domain check.
    ParameterDomain(Error),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub case: CaseTag,
    pub roots: RootSet,
    /// Case 4 only.
    pub trace_norm: Option<TnSolutions>,
    pub diagnostic: Option<Diagnostic>,
}

impl Solution {
    /// Isolated roots; empty for a sphere.
    pub fn isolated(&self) -> &[Octonion] {
        match &self.roots {
            RootSet::Isolated { roots, .. } => roots,
            RootSet::Sphere(_) => &[],
        }
    }

    pub fn sphere(&self) -> Option<Sphere> {
        match self.roots {
            RootSet::Sphere(s) => Some(s),
            RootSet::Isolated { .. } => None,
        }
    }

    pub fn multiplicity2(&self) -> bool {
        matches!(
            self.roots,
            RootSet::Isolated {
                multiplicity2: true,
                ..
            }
        )
    }
}

fn disc_band(b: f64, c: f64) -> f64 {
    DISC_TOL * (1.0 + b * b + 4.0 * c.abs())
}

pub fn classify(b: Octonion, c: Octonion) -> CaseTag {
    match (b.is_real(), c.is_real()) {
        (false, _) => CaseTag::Case4,
        (true, false) => CaseTag::Case3,
        (true, true) => {
            let (b0, c0) = (b.re(), c.re());
            if b0 * b0 - 4.0 * c0 >= -disc_band(b0, c0) {
                CaseTag::Case1
            } else {
                CaseTag::Case2
            }
        }
    }
}

/// Shift `x = y − Re(b)/2`; returns `(b′, c′)` of `y² + b′·y + c′ = 0`.
pub fn depress(b: Octonion, c: Octonion) -> (Octonion, Octonion) {
    let half = 0.5 * b.re();
    (b.im(), c - (b - half) * half)
}

/// `B = |b′|² + 2Re(c′)`, `E = |c′|²`, `D = 2Re(conj(b′)·c′)`.
pub fn cubic_params(b_dep: Octonion, c_dep: Octonion) -> CubicParams {
    CubicParams::new(
        b_dep.norm_sqr() + 2.0 * c_dep.re(),
        c_dep.norm_sqr(),
        2.0 * (b_dep.conj() * c_dep).re(),
    )
}

/// `|x·x + b·x + c|`.
pub fn residual(x: Octonion, b: Octonion, c: Octonion) -> f64 {
    (x * x + b * x + c).norm()
}

pub fn sample_sphere(s: &Sphere, dir: Octonion) -> Result<Octonion> {
    s.sample(dir)
}

pub fn solve_quadratic(b: Octonion, c: Octonion) -> Solution {
    let case = classify(b, c);
    match case {
        CaseTag::Case1 => real_distinct(b.re(), c.re()),
        CaseTag::Case2 => {
            let (b0, c0) = (b.re(), c.re());
            Solution {
                case,
                roots: RootSet::Sphere(Sphere {
                    real_part: -0.5 * b0,
                    im_radius: 0.5 * (4.0 * c0 - b0 * b0).sqrt(),
                }),
                trace_norm: None,
                diagnostic: None,
            }
        }
        CaseTag::Case3 => real_b_imaginary_c(b.re(), c),
        CaseTag::Case4 => non_real_b(b, c),
    }
}

fn real_distinct(b: f64, c: f64) -> Solution {
    let disc = b * b - 4.0 * c;
    let roots = if disc.abs() <= disc_band(b, c) {
        vec![Octonion::real(-0.5 * b)]
    } else {
        // q = −(b + sign(b)·√disc)/2 avoids cancellation; the roots are q and c/q.
        let s = disc.sqrt();
        let q = -0.5 * (b + s.copysign(b));
        let (r1, r2) = (q, c / q);
        vec![Octonion::real(r1.min(r2)), Octonion::real(r1.max(r2))]
    };
    let multiplicity2 = roots.len() == 1;
    Solution {
        case: CaseTag::Case1,
        roots: RootSet::Isolated {
            roots,
            multiplicity2,
        },
        trace_norm: None,
        diagnostic: None,
    }
}

fn real_b_imaginary_c(b: f64, c: Octonion) -> Solution {
    let v = c.im();
    let s = b * b - 4.0 * c.re();
    let w = 16.0 * v.norm_sqr();
    let root = (s * s + w).sqrt();
    let rho_sq = if s >= 0.0 {
        0.5 * (s + root)
    } else {
        w / (2.0 * (root - s))
    };
    debug_assert!(rho_sq >= 0.0);
    let rho = rho_sq.sqrt();
    let shift = v / rho;
    let roots = vec![
        Octonion::real(0.5 * (-b + rho)) - shift,
        Octonion::real(0.5 * (-b - rho)) + shift,
    ];
    Solution {
        case: CaseTag::Case3,
        roots: RootSet::Isolated {
            roots,
            multiplicity2: false,
        },
        trace_norm: None,
        diagnostic: None,
    }
}

fn non_real_b(b: Octonion, c: Octonion) -> Solution {
    let (b_dep, c_dep) = depress(b, c);
    let half_re_b = 0.5 * b.re();
    let params = cubic_params(b_dep, c_dep);

    let tn = match solve_tn(&params) {
        Ok(tn) => tn,
        Err(e) => {
            return Solution {
                case: CaseTag::Case4,
                roots: RootSet::Isolated {
                    roots: Vec::new(),
                    multiplicity2: false,
                },
                trace_norm: None,
                diagnostic: Some(Diagnostic::ParameterDomain(e)),
            }
        }
    };

    let roots: Vec<Octonion> = tn
        .pairs
        .iter()
        .filter_map(|pair| {
            // b′ is non-real, so b′ + T never vanishes.
            let pivot = (b_dep + pair.t).inv().ok()?;
            let y = -(pivot * (c_dep - pair.n));
            Some(y - half_re_b)
        })
        .collect();

    let diagnostic = roots.is_empty().then_some(Diagnostic::NoAdmissiblePair);
    Solution {
        case: CaseTag::Case4,
        roots: RootSet::Isolated {
            roots,
            multiplicity2: tn.repeated,
        },
        trace_norm: Some(tn),
        diagnostic,
    }
}
