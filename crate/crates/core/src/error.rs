use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),

    #[error("matrix is not an involution: ||J^2 - I|| = {residual:e}")]
    NotInvolution { residual: f64 },

    #[error("matrix is not PT-symmetric: residual {residual:e}")]
    NotPtSymmetric { residual: f64 },

    #[error("involution is trivial (+-I)")]
    TrivialInvolution,

    #[error("matrix is not Krein self-adjoint with respect to the given involution: residual {residual:e}")]
    NotKreinSelfAdjoint { residual: f64 },

    #[error("vector is not a unit vector: |alpha| = {norm}")]
    NotUnitVector { norm: f64 },

    #[error("reduction undefined: alpha_1 = alpha_3 = 0")]
    ReductionUndefined,

    #[error("matrix is not of the form b0*I + b1*C: fit residual {residual:e}")]
    NotExtensionForm { residual: f64 },

    #[error("product is not Hermitian: residual {residual:e}")]
    NotHermitian { residual: f64 },

    #[error("spectral point {z} lies in the upper half-plane")]
    UpperHalfPlane { z: Complex64 },

    #[error("spectral point {z} must lie strictly below the real axis")]
    OnRealAxis { z: Complex64 },

    #[error("condition (c) requires Re z != 0, got {z}")]
    ZeroRealPart { z: Complex64 },

    #[error("singular denominator at z = {z}: condition number {condition:e}")]
    Singular { z: Complex64, condition: f64 },
}

impl Error {
    /// The numeric residual carried by tolerance failures.
    pub fn residual(&self) -> Option<f64> {
        match self {
            Error::NotInvolution { residual }
            | Error::NotPtSymmetric { residual }
            | Error::NotKreinSelfAdjoint { residual }
            | Error::NotExtensionForm { residual }
            | Error::NotHermitian { residual } => Some(*residual),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::BadTolerance(tol))
    }
}
