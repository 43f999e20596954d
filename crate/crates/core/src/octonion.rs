//! Octonions as flat 8-vectors on the basis `(1, i, j, k, l, il, jl, kl)`.
//!
//! Two products are provided. [`Octonion::mul_table`] (also `*`) sums the
//! 64 signed basis products of [`crate::fano::TABLE`];
//! [`Octonion::mul_cd`] writes `x = a + b·l` with quaternion halves and
//! applies the doubling rule
//!
//! ```text
//! (a + b·l)(c + d·l) = (ac − conj(d)·b) + (d·a + b·conj(c))·l
//! ```
//!
//! The two agree exactly on basis elements and to rounding elsewhere.

use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub};

use crate::error::{Error, Result};
pub use crate::fano::Unit;
use crate::fano::TABLE;
use crate::quaternion::Quaternion;

/// Band used to decide that an octonion is real: `|Im x| ≤ REAL_TOL·(1 + |x|)`.
pub const REAL_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Octonion([f64; 8]);

impl Octonion {
    pub const ZERO: Self = Self([0.0; 8]);
    pub const ONE: Self = Self::unit(Unit::One);

    pub const fn new(coeffs: [f64; 8]) -> Self {
        Self(coeffs)
    }

    /// Like [`Octonion::new`] but rejects NaN and infinities.
    pub fn try_new(coeffs: [f64; 8]) -> Result<Self> {
        match coeffs.iter().position(|c| !c.is_finite()) {
            Some(index) => Err(Error::NonFinite {
                index,
                value: coeffs[index],
            }),
            None => Ok(Self(coeffs)),
        }
    }

    pub const fn real(r: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = r;
        Self(c)
    }

    pub const fn unit(u: Unit) -> Self {
        let mut c = [0.0; 8];
        c[u.index()] = 1.0;
        Self(c)
    }

    /// `a + b·l`.
    pub fn from_halves(a: Quaternion, b: Quaternion) -> Self {
        let [a1, a2, a3, a4] = a.to_array();
        let [b1, b2, b3, b4] = b.to_array();
        Self([a1, a2, a3, a4, b1, b2, b3, b4])
    }

    pub fn halves(self) -> (Quaternion, Quaternion) {
        let c = self.0;
        (
            Quaternion::new(c[0], c[1], c[2], c[3]),
            Quaternion::new(c[4], c[5], c[6], c[7]),
        )
    }

    pub const fn coeffs(&self) -> [f64; 8] {
        self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    /// Product from the Fano-plane table.
    pub fn mul_table(self, y: Self) -> Self {
        let mut out = [0.0; 8];
        for (a, row) in TABLE.iter().enumerate() {
            let xa = self.0[a];
            for (b, e) in row.iter().enumerate() {
                out[e.unit.index()] += e.sign() * (xa * y.0[b]);
            }
        }
        Self(out)
    }

    /// Product by Cayley–Dickson doubling over quaternions.
    pub fn mul_cd(self, y: Self) -> Self {
        let (a, b) = self.halves();
        let (c, d) = y.halves();
        Self::from_halves(a * c - d.conj() * b, d * a + b * c.conj())
    }

    pub fn conj(self) -> Self {
        let mut c = self.0;
        for v in &mut c[1..] {
            *v = -*v;
        }
        Self(c)
    }

    pub fn norm_sqr(self) -> f64 {
        self.0.iter().map(|c| c * c).sum()
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `conj(x) / |x|²`.
    pub fn inv(self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.conj() / n2)
    }

    /// Real part `(x + conj x)/2` as a scalar.
    pub fn re(self) -> f64 {
        self.0[0]
    }

    /// Imaginary part `(x − conj x)/2`.
    pub fn im(self) -> Self {
        let mut c = self.0;
        c[0] = 0.0;
        Self(c)
    }

    pub fn is_real(self) -> bool {
        self.im().norm() <= REAL_TOL * (1.0 + self.norm())
    }

    /// True when every `l`-half coefficient is zero (𝕆 ⊇ ℍ).
    pub fn is_quaternionic(self) -> bool {
        self.0[4..].iter().all(|c| *c == 0.0)
    }

    pub fn max_abs_diff(self, other: Self) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Componentwise comparison at absolute tolerance `tol`.
    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }
}

impl From<f64> for Octonion {
    fn from(r: f64) -> Self {
        Self::real(r)
    }
}

impl From<Unit> for Octonion {
    fn from(u: Unit) -> Self {
        Self::unit(u)
    }
}

impl Index<usize> for Octonion {
    type Output = f64;
    fn index(&self, idx: usize) -> &f64 {
        &self.0[idx]
    }
}

impl Index<Unit> for Octonion {
    type Output = f64;
    fn index(&self, u: Unit) -> &f64 {
        &self.0[u.index()]
    }
}

impl Add for Octonion {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self += o;
        self
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, o: Self) {
        for (a, b) in self.0.iter_mut().zip(o.0) {
            *a += b;
        }
    }
}

impl Add<f64> for Octonion {
    type Output = Self;
    fn add(mut self, r: f64) -> Self {
        self.0[0] += r;
        self
    }
}

impl Sub for Octonion {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        for (a, b) in self.0.iter_mut().zip(o.0) {
            *a -= b;
        }
        self
    }
}

impl Sub<f64> for Octonion {
    type Output = Self;
    fn sub(mut self, r: f64) -> Self {
        self.0[0] -= r;
        self
    }
}

impl Neg for Octonion {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|c| -c))
    }
}

impl Mul<f64> for Octonion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self(self.0.map(|c| c * s))
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;
    fn mul(self, x: Octonion) -> Octonion {
        x * self
    }
}

impl Div<f64> for Octonion {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        Self(self.0.map(|c| c / s))
    }
}

/// Table product. Not associative: group explicitly.
impl Mul for Octonion {
    type Output = Self;
    fn mul(self, y: Self) -> Self {
        self.mul_table(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const I: Octonion = Octonion::unit(Unit::I);
    const J: Octonion = Octonion::unit(Unit::J);
    const K: Octonion = Octonion::unit(Unit::K);
    const L: Octonion = Octonion::unit(Unit::L);
    const KL: Octonion = Octonion::unit(Unit::KL);

    fn oct() -> impl Strategy<Value = Octonion> {
        prop::array::uniform8(-2.0f64..2.0).prop_map(Octonion::new)
    }

    #[test]
    fn worked_products_both_backends() {
        for mul in [Octonion::mul_table, Octonion::mul_cd] {
            assert_eq!(mul(I, J), K);
            assert_eq!(mul(mul(I, J), L), KL);
            assert_eq!(mul(I, mul(J, L)), -KL);
            assert_eq!(mul(L, L), Octonion::real(-1.0));
        }
    }

    #[test]
    fn backends_agree_on_basis() {
        for a in Unit::ALL {
            for b in Unit::ALL {
                let (x, y) = (Octonion::unit(a), Octonion::unit(b));
                for sx in [1.0, -1.0] {
                    for sy in [1.0, -1.0] {
                        assert_eq!((x * sx).mul_table(y * sy), (x * sx).mul_cd(y * sy), "{a}·{b}");
                    }
                }
            }
        }
    }

    #[test]
    fn conj_examples() {
        let x = Octonion::new([1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]);
        assert_eq!(
            x.conj(),
            Octonion::new([1.0, -1.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0])
        );
        assert_eq!(Octonion::real(5.0).conj(), Octonion::real(5.0));
    }

    #[test]
    fn norm_examples() {
        assert_eq!((I + J).norm(), 2f64.sqrt());
        assert_eq!(Octonion::ZERO.norm(), 0.0);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(L.inv().unwrap(), -L);
        assert_eq!(Octonion::real(2.0).inv().unwrap(), Octonion::real(0.5));
        let one_plus_i = Octonion::ONE + I;
        let inv = one_plus_i.inv().unwrap();
        assert_eq!(inv, (Octonion::ONE - I) * 0.5);
        assert_eq!(one_plus_i * inv, Octonion::ONE);
        assert_eq!(Octonion::ZERO.inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn re_im() {
        let x = Octonion::real(3.0) + I * 2.0;
        assert_eq!(x.re(), 3.0);
        assert_eq!(x.im(), I * 2.0);
    }

    #[test]
    fn non_finite_rejected() {
        let mut c = [0.0; 8];
        c[3] = f64::NAN;
        assert!(matches!(
            Octonion::try_new(c),
            Err(Error::NonFinite { index: 3, .. })
        ));
    }

    #[test]
    fn realness_band() {
        assert!(Octonion::real(1e6).is_real());
        assert!((Octonion::real(1.0) + I * 1e-13).is_real());
        assert!(!(Octonion::real(1.0) + I * 1e-9).is_real());
    }

    proptest! {
        #[test]
        fn re_plus_im(x in oct()) {
            prop_assert_eq!(Octonion::real(x.re()) + x.im(), x);
            prop_assert_eq!(x.conj().im(), -x.im());
        }

        #[test]
        fn x_times_conj_is_norm(x in oct()) {
            let p = x * x.conj();
            prop_assert!((p.re() - x.norm_sqr()).abs() <= 1e-13 * (1.0 + x.norm_sqr()));
            prop_assert!(p.im().norm() <= 1e-13);
        }

        #[test]
        fn conj_anti_automorphism(x in oct(), y in oct()) {
            prop_assert!(((x * y).conj() - y.conj() * x.conj()).norm() <= 1e-13);
        }

        #[test]
        fn alternative_laws(x in oct(), y in oct()) {
            prop_assert!((x * (x * y) - (x * x) * y).norm() <= 1e-12);
            prop_assert!(((y * x) * x - y * (x * x)).norm() <= 1e-12);
        }

        #[test]
        fn left_inverse_cancels(x in oct(), y in oct()) {
            prop_assume!(x.norm() > 1e-2);
            let xi = x.inv().unwrap();
            prop_assert!((xi * (x * y) - y).norm() <= 1e-11);
            prop_assert!((x * xi - Octonion::ONE).norm() <= 1e-12);
            prop_assert!((xi * x - Octonion::ONE).norm() <= 1e-12);
        }
    }
}
