//! Seeded random sweeps over the algebra, the quadratic solver and the
//! spectrum reduction.

use num_complex::Complex64;
use octoquad::quadratic::CaseTag;
use octoquad::random;
use octoquad::{
    depress, left_spectrum_2x2, residual, solve_quadratic, Octonion, OctMatrix2, SpectrumKind,
    Unit,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn scale(b: Octonion, c: Octonion) -> f64 {
    1.0 + b.norm() + c.norm()
}

const CASES: [CaseTag; 4] = [CaseTag::Case1, CaseTag::Case2, CaseTag::Case3, CaseTag::Case4];

#[test]
fn backends_agree_on_random_pairs() {
    let mut g = rng(1);
    for _ in 0..10_000 {
        let (x, y) = (random::octonion(&mut g), random::octonion(&mut g));
        let (t, cd) = (x.mul_table(y), x.mul_cd(y));
        let rel = (t - cd).norm() / (x.norm() * y.norm());
        assert!(rel <= 1e-14, "{rel}");
    }
}

#[test]
fn norm_is_multiplicative() {
    let mut g = rng(2);
    for _ in 0..10_000 {
        let (x, y) = (random::octonion(&mut g), random::octonion(&mut g));
        let want = x.norm() * y.norm();
        assert!(((x * y).norm() - want).abs() <= 1e-12 * want);
    }
}

#[test]
fn conjugation_reverses_basis_products_exactly() {
    for a in Unit::ALL {
        for b in Unit::ALL {
            let (x, y) = (Octonion::unit(a), Octonion::unit(b));
            assert_eq!((x * y).conj(), y.conj() * x.conj());
        }
    }
}

#[test]
fn non_associativity_witness() {
    let (i, j, l) = (Octonion::unit(Unit::I), Octonion::unit(Unit::J), Octonion::unit(Unit::L));
    let kl = Octonion::unit(Unit::KL);
    assert_eq!((i * j) * l, kl);
    assert_eq!(i * (j * l), -kl);
}

#[test]
fn residual_soundness_per_case() {
    let mut g = rng(3);
    for case in CASES {
        for _ in 0..1000 {
            let (b, c) = random::instance(&mut g, case);
            let sol = solve_quadratic(b, c);
            assert_eq!(sol.case, case);
            let tol = 1e-9 * scale(b, c);
            match sol.sphere() {
                Some(s) => {
                    for _ in 0..4 {
                        let x = s.sample(random::octonion(&mut g)).unwrap();
                        assert!(residual(x, b, c) <= tol);
                    }
                }
                None => {
                    assert!(!sol.isolated().is_empty(), "{b:?} {c:?}");
                    for x in sol.isolated() {
                        assert!(residual(*x, b, c) <= tol, "{case:?} {b:?} {c:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn case2_members_have_norm_sqrt_c() {
    let mut g = rng(4);
    for _ in 0..1000 {
        let (b, c) = random::instance(&mut g, CaseTag::Case2);
        let s = solve_quadratic(b, c).sphere().unwrap();
        let x = s.sample(random::octonion(&mut g)).unwrap();
        assert!((x.norm() - c.re().sqrt()).abs() <= 1e-12);
        assert!((s.member_norm() - c.re().sqrt()).abs() <= 1e-12);
    }
}

#[test]
fn case4_trace_and_norm_match_pairs() {
    let mut g = rng(5);
    for _ in 0..1000 {
        let (b, c) = random::instance(&mut g, CaseTag::Case4);
        let sol = solve_quadratic(b, c);
        let tn = sol.trace_norm.as_ref().unwrap();
        assert_eq!(tn.pairs.len(), sol.isolated().len());
        for (x, pair) in sol.isolated().iter().zip(&tn.pairs) {
            let y = *x + 0.5 * b.re();
            assert!((y + y.conj()).re().sub_abs(pair.t) <= 1e-9);
            assert!((y.conj() * y).re().sub_abs(pair.n) <= 1e-9);
            assert!((y.conj() * y).im().norm() <= 1e-9);
            // the depressed equation holds for y as well
            let (bd, cd) = depress(b, c);
            assert!(residual(y, bd, cd) <= 1e-9 * scale(b, c));
        }
    }
}

trait SubAbs {
    fn sub_abs(self, o: f64) -> f64;
}

impl SubAbs for f64 {
    fn sub_abs(self, o: f64) -> f64 {
        (self - o).abs()
    }
}

#[test]
fn quaternionic_coefficients_give_quaternionic_roots() {
    let mut g = rng(6);
    for _ in 0..1000 {
        let (b, c) = (random::quaternionic(&mut g), random::quaternionic(&mut g));
        let sol = solve_quadratic(b, c);
        for x in sol.isolated() {
            assert!(x.is_quaternionic(), "{x:?}");
        }
    }
}

fn complex_roots(b: Complex64, c: Complex64) -> [Complex64; 2] {
    let s = (b * b - 4.0 * c).sqrt();
    [(-b + s) / 2.0, (-b - s) / 2.0]
}

fn as_complex(x: Octonion) -> Complex64 {
    Complex64::new(x[0], x[1])
}

fn complex_octonion(z: Complex64) -> Octonion {
    Octonion::new([z.re, z.im, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])
}

#[test]
fn complex_coefficients_match_complex_formula() {
    let mut g = rng(7);
    let mut checked = 0;
    for _ in 0..3000 {
        let bz = Complex64::new(random::real(&mut g), random::real(&mut g));
        let cz = Complex64::new(random::real(&mut g), random::real(&mut g));
        let want = complex_roots(bz, cz);
        // well-separated roots only; near-double roots are ill-conditioned
        if (want[0] - want[1]).norm() < 1e-2 {
            continue;
        }
        let sol = solve_quadratic(complex_octonion(bz), complex_octonion(cz));
        assert!(matches!(sol.case, CaseTag::Case3 | CaseTag::Case4));
        assert_eq!(sol.isolated().len(), 2);
        for x in sol.isolated() {
            for k in 2..8 {
                assert!(x[k].abs() <= 1e-12);
            }
            let z = as_complex(*x);
            let dist = want.iter().map(|w| (z - w).norm()).fold(f64::MAX, f64::min);
            assert!(dist <= 1e-12, "{bz} {cz} {z} {want:?}");
        }
        checked += 1;
    }
    assert!(checked > 2500);
}

#[test]
fn complex_case1_matches_real_formula() {
    let mut g = rng(8);
    for _ in 0..1000 {
        let (b, c) = random::instance(&mut g, CaseTag::Case1);
        let want = complex_roots(Complex64::from(b.re()), Complex64::from(c.re()));
        if (want[0] - want[1]).norm() < 1e-2 {
            continue;
        }
        for x in solve_quadratic(b, c).isolated() {
            let dist = want
                .iter()
                .map(|w| (as_complex(*x) - w).norm())
                .fold(f64::MAX, f64::min);
            assert!(dist <= 1e-12);
        }
    }
}

#[test]
fn conjugation_orbit_of_real_equation_roots() {
    let mut g = rng(9);
    for case in [CaseTag::Case1, CaseTag::Case2] {
        for _ in 0..500 {
            let (b, c) = random::instance(&mut g, case);
            let sol = solve_quadratic(b, c);
            let x = match sol.sphere() {
                Some(s) => s.sample(random::octonion(&mut g)).unwrap(),
                None => sol.isolated()[0],
            };
            let q = random::nonzero(&mut g, 0.1);
            let moved = q.inv().unwrap() * (x * q);
            assert!(residual(moved, b, c) <= 1e-8);
        }
    }
}

#[test]
fn triangular_spectrum_is_diagonal() {
    let mut g = rng(10);
    for k in 0..100 {
        let m = random::triangular(&mut g, k % 2 == 0);
        let s = left_spectrum_2x2(&m);
        assert_eq!(s.kind, SpectrumKind::Triangular);
        assert_eq!(s.eigenvalues(), vec![m.a, m.d]);
        for p in &s.eigenpairs {
            assert!(p.residual_row1 <= 1e-12 && p.residual_row2 <= 1e-12);
        }
    }
}

#[test]
fn quaternionic_spectrum_rows_hold() {
    let mut g = rng(11);
    let mut pairs = 0;
    for _ in 0..1000 {
        let m = random::quaternionic_matrix(&mut g);
        let s = left_spectrum_2x2(&m);
        assert_eq!(s.kind, SpectrumKind::Reduced);
        let red = s.reduction.as_ref().unwrap();
        for p in &s.eigenpairs {
            let t = p.t.unwrap();
            assert!(residual(t, red.beta, red.gamma) <= 1e-9 * scale(red.beta, red.gamma));
            assert!(p.residual_row1 <= 1e-12);
            assert!(p.residual_row2 <= 1e-9, "{m:?} {}", p.residual_row2);
            pairs += 1;
        }
    }
    assert!(pairs >= 1000);
}

#[test]
fn generic_spectrum_reduced_roots_are_sound() {
    let mut g = rng(12);
    for _ in 0..1000 {
        let m = random::matrix(&mut g);
        let s = left_spectrum_2x2(&m);
        let red = s.reduction.as_ref().unwrap();
        for p in &s.eigenpairs {
            assert!(residual(p.t.unwrap(), red.beta, red.gamma) <= 1e-9 * scale(red.beta, red.gamma));
            assert!(p.residual_row1 <= 1e-12);
            assert!(p.residual_row2.is_finite());
        }
    }
}

#[test]
fn shift_map_structure() {
    let mut g = rng(13);
    for _ in 0..100 {
        let (p, q) = (random::octonion(&mut g), random::octonion(&mut g));
        let n = g.random_range(0..5);
        let xs: Vec<_> = (0..n).map(|_| random::octonion(&mut g)).collect();
        let ys: Vec<_> = (0..3).map(|_| random::octonion(&mut g)).collect();
        let joined: Vec<_> = xs.iter().chain(&ys).copied().collect();
        let mut split = octoquad::shift_spectrum(p, q, &xs);
        split.extend(octoquad::shift_spectrum(p, q, &ys));
        assert_eq!(octoquad::shift_spectrum(p, q, &joined), split);
        assert_eq!(octoquad::shift_spectrum(p, q, &xs[..n.min(1)]).len(), n.min(1));
    }
}

#[test]
fn rotation_matrix_sampled_eigenvalues() {
    let m = OctMatrix2::new(
        Octonion::ZERO,
        Octonion::ONE,
        Octonion::real(-1.0),
        Octonion::ZERO,
    );
    let s = left_spectrum_2x2(&m);
    let mut g = rng(14);
    for _ in 0..100 {
        let p = s.sample_sphere(random::octonion(&mut g)).unwrap().unwrap();
        assert!(p.residual_row1 <= 1e-12 && p.residual_row2 <= 1e-12);
    }
}
