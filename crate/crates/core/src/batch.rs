//! Batch evaluation over many independent instances.
//!
//! Every instance is solved independently, so the batch functions are plain
//! maps. With the `parallel` feature (on by default) they run on the rayon
//! global pool; without it, or through the `*_seq` variants, they run on
//! the calling thread. Both paths return results in input order and are
//! bitwise identical.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::octonion::Octonion;
use crate::quadratic::{residual, solve_quadratic, Solution};
use crate::spectrum::{left_spectrum_2x2, OctMatrix2, SpectrumResult};

/// `(b, c)` of `x² + b·x + c = 0`.
pub type Coefficients = (Octonion, Octonion);

macro_rules! batch_map {
    ($items:expr, $f:expr) => {{
        #[cfg(feature = "parallel")]
        {
            $items.par_iter().map($f).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            $items.iter().map($f).collect()
        }
    }};
}

pub fn solve_all(eqs: &[Coefficients]) -> Vec<Solution> {
    batch_map!(eqs, |(b, c)| solve_quadratic(*b, *c))
}

pub fn solve_all_seq(eqs: &[Coefficients]) -> Vec<Solution> {
    eqs.iter().map(|(b, c)| solve_quadratic(*b, *c)).collect()
}

pub fn spectra(ms: &[OctMatrix2]) -> Vec<SpectrumResult> {
    batch_map!(ms, left_spectrum_2x2)
}

pub fn spectra_seq(ms: &[OctMatrix2]) -> Vec<SpectrumResult> {
    ms.iter().map(left_spectrum_2x2).collect()
}

/// Worst isolated-root residual of one equation, scaled by `1 + |b| + |c|`.
/// Sphere solutions contribute nothing here; sample them separately.
pub fn scaled_residual(b: Octonion, c: Octonion, sol: &Solution) -> f64 {
    let scale = 1.0 + b.norm() + c.norm();
    sol.isolated()
        .iter()
        .map(|x| residual(*x, b, c) / scale)
        .fold(0.0, f64::max)
}

/// Summary of a residual sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Sweep {
    pub equations: usize,
    pub roots: usize,
    pub max_scaled_residual: f64,
    /// Equations whose scaled residual exceeds the sweep tolerance.
    pub failures: usize,
    /// Equations with no isolated root and no sphere.
    pub empty: usize,
}

impl Sweep {
    fn one(b: Octonion, c: Octonion, tol: f64) -> Self {
        let sol = solve_quadratic(b, c);
        let worst = scaled_residual(b, c, &sol);
        Sweep {
            equations: 1,
            roots: sol.isolated().len(),
            max_scaled_residual: worst,
            failures: usize::from(worst > tol),
            empty: usize::from(sol.isolated().is_empty() && sol.sphere().is_none()),
        }
    }

    fn merge(self, o: Self) -> Self {
        Sweep {
            equations: self.equations + o.equations,
            roots: self.roots + o.roots,
            max_scaled_residual: self.max_scaled_residual.max(o.max_scaled_residual),
            failures: self.failures + o.failures,
            empty: self.empty + o.empty,
        }
    }
}

/// Solve every equation and fold the residuals.
pub fn residual_sweep(eqs: &[Coefficients], tol: f64) -> Sweep {
    #[cfg(feature = "parallel")]
    {
        eqs.par_iter()
            .map(|(b, c)| Sweep::one(*b, *c, tol))
            .reduce(Sweep::default, Sweep::merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        residual_sweep_seq(eqs, tol)
    }
}

pub fn residual_sweep_seq(eqs: &[Coefficients], tol: f64) -> Sweep {
    eqs.iter()
        .map(|(b, c)| Sweep::one(*b, *c, tol))
        .fold(Sweep::default(), Sweep::merge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::CaseTag;
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn eqs(n: usize) -> Vec<Coefficients> {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cases = [CaseTag::Case1, CaseTag::Case2, CaseTag::Case3, CaseTag::Case4];
        (0..n)
            .map(|k| random::instance(&mut rng, cases[k % 4]))
            .collect()
    }

    #[test]
    fn parallel_matches_sequential() {
        let e = eqs(400);
        assert_eq!(solve_all(&e), solve_all_seq(&e));
        assert_eq!(residual_sweep(&e, 1e-9), residual_sweep_seq(&e, 1e-9));

        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let ms: Vec<_> = (0..100).map(|_| random::matrix(&mut rng)).collect();
        assert_eq!(spectra(&ms), spectra_seq(&ms));
    }

    #[test]
    fn sweep_counts() {
        let e = eqs(400);
        let s = residual_sweep(&e, 1e-9);
        assert_eq!(s.equations, 400);
        assert_eq!(s.failures, 0);
        assert_eq!(s.empty, 0);
        assert!(s.roots >= 300);
    }

    #[test]
    fn empty_batch() {
        assert!(solve_all(&[]).is_empty());
        assert_eq!(residual_sweep(&[], 1e-9), Sweep::default());
    }
}
