use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-invertible zero octonion")]
    ZeroInverse,

    #[error("non-finite coefficient {value} at basis position {index}")]
    NonFinite { index: usize, value: f64 },

    /// The positive-root cubic was requested with `D = 0`; the trace/norm
    /// system has closed-form branches for that case.
    #[error("cubic requires D != 0; use the closed-form D = 0 branches (T = 0 or N = sqrt(E))")]
    ZeroCubicConstant,

    #[error("cubic parameters out of domain (B = {b}, E = {e}): need E >= 0 and B^2 < 4E whenever B < 0")]
    CubicDomain { b: f64, e: f64 },

    #[error("sphere sample direction has no imaginary part")]
    RealDirection,

    #[error("off-diagonal entry is zero; the triangular path applies")]
    Triangular,
}
