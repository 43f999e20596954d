//! Left eigenvalues of 2×2 octonionic matrices.
//!
//! For `A = [[a, b], [c, d]]` with `b·c ≠ 0` the candidate eigenvalues are
//! `λ = a + b·t` where `t` solves
//!
//! ```text
//! t² + (b⁻¹·(a − d))·t − b⁻¹·c = 0
//! ```
//!
//! with eigenvector `(1, t)`. The first row of `A·v = λ·v` holds by
//! construction. The second row, `c + d·t = λ·t`, follows from the
//! reduction only when the entries associate (for instance when they all
//! lie in ℍ), so it is measured and reported as `residual_row2` instead of
//! being assumed.

use crate::error::{Error, Result};
use crate::octonion::{Octonion, REAL_TOL};
use crate::quadratic::{solve_quadratic, Solution, Sphere};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OctMatrix2 {
    pub a: Octonion,
    pub b: Octonion,
    pub c: Octonion,
    pub d: Octonion,
}

impl OctMatrix2 {
    pub const fn new(a: Octonion, b: Octonion, c: Octonion, d: Octonion) -> Self {
        Self { a, b, c, d }
    }

    pub fn entries(&self) -> [Octonion; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|e| e.is_finite())
    }

    pub fn is_quaternionic(&self) -> bool {
        self.entries().iter().all(|e| e.is_quaternionic())
    }

    /// Largest entry norm.
    pub fn max_entry_norm(&self) -> f64 {
        self.entries().iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    /// `A·v`, each row `m_r1·v1 + m_r2·v2`.
    pub fn apply(&self, v: [Octonion; 2]) -> [Octonion; 2] {
        [self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1]]
    }

    /// `|b|·|c| ≤ REAL_TOL·(1 + ‖A‖)`.
    pub fn is_triangular(&self) -> bool {
        self.b.norm() * self.c.norm() <= REAL_TOL * (1.0 + self.max_entry_norm())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumKind {
    Triangular,
    Reduced,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eigenpair {
    /// Root of the reduced quadratic; `None` on the triangular path.
    pub t: Option<Octonion>,
    pub lambda: Octonion,
    pub vector: [Octonion; 2],
    pub residual_row1: f64,
    pub residual_row2: f64,
}

impl Eigenpair {
    fn new(m: &OctMatrix2, t: Option<Octonion>, lambda: Octonion, vector: [Octonion; 2]) -> Self {
        let (residual_row1, residual_row2) = row_residuals(m, lambda, vector);
        Self {
            t,
            lambda,
            vector,
            residual_row1,
            residual_row2,
        }
    }

    fn from_root(m: &OctMatrix2, t: Octonion) -> Self {
        Self::new(m, Some(t), m.a + m.b * t, [Octonion::ONE, t])
    }
}

/// Image of a sphere of reduced roots under `t ↦ a + b·t`.
///
/// Members are `center + b·v` with `v` imaginary of norm `t_sphere.im_radius`:
/// a 6-sphere of radius `radius` orthogonal to `normal` (= `b`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenSphere {
    pub t_sphere: Sphere,
    pub center: Octonion,
    pub radius: f64,
    pub normal: Octonion,
}

/// Reduced equation `t² + beta·t + gamma = 0` and its solution.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction {
    pub beta: Octonion,
    pub gamma: Octonion,
    pub solution: Solution,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumResult {
    pub matrix: OctMatrix2,
    pub kind: SpectrumKind,
    pub eigenpairs: Vec<Eigenpair>,
    pub reduction: Option<Reduction>,
    pub sphere_family: Option<EigenSphere>,
}

impl SpectrumResult {
    pub fn eigenvalues(&self) -> Vec<Octonion> {
        self.eigenpairs.iter().map(|p| p.lambda).collect()
    }

    /// Eigenpair for the member of the sphere family in direction `dir`.
    pub fn sample_sphere(&self, dir: Octonion) -> Option<Result<Eigenpair>> {
        let family = self.sphere_family?;
        Some(
            family
                .t_sphere
                .sample(dir)
                .map(|t| Eigenpair::from_root(&self.matrix, t)),
        )
    }
}

/// `{p + q·t : t ∈ spec}`.
pub fn shift_spectrum(p: Octonion, q: Octonion, spec: &[Octonion]) -> Vec<Octonion> {
    spec.iter().map(|t| p + q * *t).collect()
}

/// `(beta, gamma) = (b⁻¹·(a − d), −(b⁻¹·c))`.
pub fn reduce(m: &OctMatrix2) -> Result<(Octonion, Octonion)> {
    if m.b.norm() == 0.0 || m.c.norm() == 0.0 {
        return Err(Error::Triangular);
    }
    let b_inv = m.b.inv()?;
    Ok((b_inv * (m.a - m.d), -(b_inv * m.c)))
}

/// Row defects `(|a·v1 + b·v2 − λ·v1|, |c·v1 + d·v2 − λ·v2|)`.
pub fn row_residuals(m: &OctMatrix2, lambda: Octonion, v: [Octonion; 2]) -> (f64, f64) {
    let [r1, r2] = m.apply(v);
    ((r1 - lambda * v[0]).norm(), (r2 - lambda * v[1]).norm())
}

/// Row defects for `λ = a + b·t`, `v = (1, t)`.
pub fn eigen_residual(m: &OctMatrix2, t: Octonion) -> (f64, f64) {
    row_residuals(m, m.a + m.b * t, [Octonion::ONE, t])
}

pub fn left_spectrum_2x2(m: &OctMatrix2) -> SpectrumResult {
    if m.is_triangular() {
        return SpectrumResult {
            matrix: *m,
            kind: SpectrumKind::Triangular,
            eigenpairs: triangular_pairs(m),
            reduction: None,
            sphere_family: None,
        };
    }

    let (beta, gamma) = reduce(m).expect("non-triangular matrix has invertible b and c");
    let solution = solve_quadratic(beta, gamma);
    let eigenpairs = solution
        .isolated()
        .iter()
        .map(|t| Eigenpair::from_root(m, *t))
        .collect();
    let sphere_family = solution.sphere().map(|s| EigenSphere {
        t_sphere: s,
        center: m.a + m.b * s.real_part,
        radius: m.b.norm() * s.im_radius,
        normal: m.b,
    });
    SpectrumResult {
        matrix: *m,
        kind: SpectrumKind::Reduced,
        eigenpairs,
        reduction: Some(Reduction {
            beta,
            gamma,
            solution,
        }),
        sphere_family,
    }
}

/// Eigenpairs for `a` and `d` when `b·c = 0`.
///
/// With `c ≈ 0` the vector for `a` is `(1, 0)` and the one for `d` is
/// `(−(a − d)⁻¹·b, 1)`; the lower-triangular case mirrors this. Vectors are
/// rescaled by a real factor so that no component exceeds unit norm.
fn triangular_pairs(m: &OctMatrix2) -> Vec<Eigenpair> {
    let gap = m.a - m.d;
    let separated = gap.norm() > REAL_TOL * (1.0 + m.max_entry_norm());
    let (e1, e2) = ([Octonion::ONE, Octonion::ZERO], [Octonion::ZERO, Octonion::ONE]);

    let (va, vd) = if m.c.norm() <= m.b.norm() {
        let vd = if m.b.norm() == 0.0 {
            e2
        } else if separated {
            let x = -(gap.inv().expect("separated diagonal") * m.b);
            unit_scale([x, Octonion::ONE])
        } else {
            e1
        };
        (e1, vd)
    } else {
        let va = if separated {
            let y = gap.inv().expect("separated diagonal") * m.c;
            unit_scale([Octonion::ONE, y])
        } else {
            e2
        };
        (va, e2)
    };

    vec![
        Eigenpair::new(m, None, m.a, va),
        Eigenpair::new(m, None, m.d, vd),
    ]
}

fn unit_scale(v: [Octonion; 2]) -> [Octonion; 2] {
    let s = v[0].norm().max(v[1].norm()).max(1.0);
    [v[0] / s, v[1] / s]
}
