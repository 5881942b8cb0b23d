//! The Clifford algebra Cl2(P, R) in its Pauli representation.
//!
//! On C^2 the generators are identified with `P = sigma_3`, `R = sigma_1`,
//! so that `iRP = sigma_2` and the algebra spans all 2x2 matrices. All
//! exponentials are of involutions and are evaluated in closed form through
//! `exp(theta J) = cosh(theta) I + sinh(theta) J`.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{c, re, ComplexMatrix2, C64, I, ONE, ZERO};
use crate::DEFAULT_TOL;

pub fn sigma0() -> ComplexMatrix2 {
    ComplexMatrix2::identity()
}

pub fn sigma1() -> ComplexMatrix2 {
    ComplexMatrix2::from_entries(ZERO, ONE, ONE, ZERO)
}

pub fn sigma2() -> ComplexMatrix2 {
    ComplexMatrix2::from_entries(ZERO, -I, I, ZERO)
}

pub fn sigma3() -> ComplexMatrix2 {
    ComplexMatrix2::from_entries(ONE, ZERO, ZERO, -ONE)
}

/// Coefficients of `a0 I + a1 P + a2 R + a3 iRP`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PauliCoefficients {
    pub a0: C64,
    pub a1: C64,
    pub a2: C64,
    pub a3: C64,
}

impl PauliCoefficients {
    pub fn new(a0: C64, a1: C64, a2: C64, a3: C64) -> Self {
        Self { a0, a1, a2, a3 }
    }

    pub fn as_array(&self) -> [C64; 4] {
        [self.a0, self.a1, self.a2, self.a3]
    }

    pub fn is_finite(&self) -> bool {
        self.as_array()
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

pub fn pauli_compose(coeffs: &PauliCoefficients) -> ComplexMatrix2 {
    let PauliCoefficients { a0, a1, a2, a3 } = *coeffs;
    // a0 I + a1 s3 + a2 s1 + a3 s2
    ComplexMatrix2::from_entries(a0 + a1, a2 - I * a3, a2 + I * a3, a0 - a1)
}

pub fn pauli_decompose(m: &ComplexMatrix2) -> PauliCoefficients {
    let (m11, m12, m21, m22) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    PauliCoefficients {
        a0: (m11 + m22) * 0.5,
        a1: (m11 - m22) * 0.5,
        a2: (m12 + m21) * 0.5,
        a3: I * (m12 - m21) * 0.5,
    }
}

/// Reduces an angle to `[0, 2pi)`.
pub fn canonical_angle(xi: f64) -> f64 {
    let r = xi.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Selects the involution `P_xi` and the hyperbolic parameter `chi` of the
/// C-operator `C = exp(chi iRP_xi) P_xi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KreinMetricParams {
    xi: f64,
    chi: f64,
}

impl KreinMetricParams {
    pub fn new(xi: f64, chi: f64) -> Result<Self> {
        if !xi.is_finite() {
            return Err(Error::NonFinite("xi"));
        }
        if !chi.is_finite() {
            return Err(Error::NonFinite("chi"));
        }
        Ok(Self {
            xi: canonical_angle(xi),
            chi,
        })
    }

    /// `xi = chi = 0`, i.e. `C = P`.
    pub fn trivial() -> Self {
        Self { xi: 0.0, chi: 0.0 }
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn chi(&self) -> f64 {
        self.chi
    }
}

impl Default for KreinMetricParams {
    fn default() -> Self {
        Self::trivial()
    }
}

/// `P_xi = exp(i xi R) P = [[cos xi, -i sin xi], [i sin xi, -cos xi]]`.
pub fn p_xi(xi: f64) -> ComplexMatrix2 {
    let (s, co) = xi.sin_cos();
    ComplexMatrix2::from_entries(re(co), c(0.0, -s), c(0.0, s), re(-co))
}

/// `iRP_xi = cos(xi) sigma_2 - sin(xi) sigma_3`, a Hermitian involution.
pub fn i_r_p_xi(xi: f64) -> ComplexMatrix2 {
    let (s, co) = xi.sin_cos();
    ComplexMatrix2::from_entries(re(-s), c(0.0, -co), c(0.0, co), re(s))
}

/// `C = exp(chi iRP_xi) P_xi = cosh(chi) P_xi + i sinh(chi) R`.
pub fn c_operator(p: &KreinMetricParams) -> ComplexMatrix2 {
    p_xi(p.xi).scale_re(p.chi.cosh()) + sigma1().scale(c(0.0, p.chi.sinh()))
}

/// The metric operator `exp(-chi iRP_xi) = cosh(chi) I - sinh(chi) iRP_xi`
/// defining the positive inner product `(C., .)` relative to `P_xi`.
pub fn metric(p: &KreinMetricParams) -> ComplexMatrix2 {
    ComplexMatrix2::identity().scale_re(p.chi.cosh()) - i_r_p_xi(p.xi).scale_re(p.chi.sinh())
}

/// `||J^2 - I||` in operator norm.
pub fn involution_defect(j: &ComplexMatrix2) -> f64 {
    (*j * *j).dist(&ComplexMatrix2::identity())
}

/// `exp(theta J)` for an involution `J`.
pub fn exp_involution(theta: C64, j: &ComplexMatrix2) -> Result<ComplexMatrix2> {
    let residual = involution_defect(j);
    if residual.is_nan() || residual > DEFAULT_TOL {
        return Err(Error::NotInvolution { residual });
    }
    Ok(ComplexMatrix2::scalar(theta.cosh()) + j.scale(theta.sinh()))
}

pub fn is_unitary_involution(m: &ComplexMatrix2, tol: f64) -> bool {
    let id = ComplexMatrix2::identity();
    involution_defect(m) <= tol && (*m * m.adjoint()).dist(&id) <= tol
}

/// The nontrivial unitary involution `alpha_1 P + alpha_2 R + alpha_3 iRP`
/// for a real unit vector `alpha`.
pub fn involution_from_unit_vector(alpha: [f64; 3]) -> ComplexMatrix2 {
    pauli_compose(&PauliCoefficients::new(
        ZERO,
        re(alpha[0]),
        re(alpha[1]),
        re(alpha[2]),
    ))
}

/// Coefficients in the rotated frame `{I, P_xi, R, iRP_xi}`:
/// `m = b0 I + b1 P_xi + b2 R + b3 iRP_xi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameCoefficients {
    pub b0: C64,
    pub b1: C64,
    pub b2: C64,
    pub b3: C64,
}

/// The four frame elements are Hermitian and trace-orthogonal with
/// `tr(E_j E_k) = 2 delta_jk`, so each coefficient is `tr(E_k m) / 2`.
pub fn frame_decompose(m: &ComplexMatrix2, xi: f64) -> FrameCoefficients {
    let half_trace = |e: ComplexMatrix2| (e * *m).trace() * 0.5;
    FrameCoefficients {
        b0: m.trace() * 0.5,
        b1: half_trace(p_xi(xi)),
        b2: half_trace(sigma1()),
        b3: half_trace(i_r_p_xi(xi)),
    }
}

pub fn frame_compose(b: &FrameCoefficients, xi: f64) -> ComplexMatrix2 {
    ComplexMatrix2::scalar(b.b0)
        + p_xi(xi).scale(b.b1)
        + sigma1().scale(b.b2)
        + i_r_p_xi(xi).scale(b.b3)
}
