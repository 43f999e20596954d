//! Octonion arithmetic and closed-form solvers.
//!
//! The crate is organised bottom-up:
//!
//! * [`quaternion`], [`fano`] and [`octonion`]: double-precision arithmetic
//!   on ℍ and 𝕆, with two independent octonion products (a Fano-plane
//!   table and Cayley–Dickson doubling over quaternions).
//! * [`real_solvers`]: the positive root of the auxiliary cubic and the
//!   trace/norm system it feeds.
//! * [`quadratic`]: every solution of the left monic equation
//!   `x² + b·x + c = 0`, split into the four coefficient cases.
//! * [`spectrum`]: left eigenvalues of 2×2 octonionic matrices via
//!   reduction to a quadratic, with row residual diagnostics.
//! * [`batch`]: data-parallel evaluation over many instances (rayon behind
//!   the `parallel` feature, sequential otherwise).

pub mod batch;
pub mod error;
pub mod fano;
pub mod octonion;
pub mod quadratic;
pub mod quaternion;
pub mod random;
pub mod real_solvers;
pub mod spectrum;

pub use error::{Error, Result};
pub use octonion::{Octonion, Unit};
pub use quadratic::{
    classify, cubic_params, depress, residual, sample_sphere, solve_quadratic, CaseTag, RootSet,
    Solution, Sphere,
};
pub use quaternion::Quaternion;
pub use real_solvers::{positive_cubic_root, solve_tn, CubicParams, TnBranch, TnPair, TnSolutions};
pub use spectrum::{
    eigen_residual, left_spectrum_2x2, reduce, shift_spectrum, EigenSphere, Eigenpair, OctMatrix2,
    SpectrumKind, SpectrumResult,
};
