//! Zero-range Schrodinger model on the line with a point interaction at 0.
//!
//! Extensions are parametrized by a 2x2 matrix `T` through the boundary
//! condition `T Gamma_1 f = Gamma_0 f`. The PT-symmetric, C-symmetric ones
//! are exactly `T = beta0 I + beta1 C` with real `beta0, beta1`.

use serde::{Deserialize, Serialize};

use crate::clifford::{c_operator, frame_decompose, metric, KreinMetricParams};
use crate::error::{check_tol, Error, Result};
use crate::matrix::{is_finite_scalar, vector_norm, ComplexMatrix2, ComplexVector2, C64};
use crate::pt_krein::c_params_from_matrix;

/// Slack used by both routes of the nonnegativity classification.
pub const CLASSIFY_TOL: f64 = 1e-12;

/// One-sided limits `f(+0), f(-0), f'(+0), f'(-0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryData {
    pub f_plus: C64,
    pub f_minus: C64,
    pub fp_plus: C64,
    pub fp_minus: C64,
}

impl BoundaryData {
    pub fn new(f_plus: C64, f_minus: C64, fp_plus: C64, fp_minus: C64) -> Result<Self> {
        let b = Self {
            f_plus,
            f_minus,
            fp_plus,
            fp_minus,
        };
        if [f_plus, f_minus, fp_plus, fp_minus]
            .iter()
            .all(|z| is_finite_scalar(*z))
        {
            Ok(b)
        } else {
            Err(Error::NonFinite("boundary data"))
        }
    }

    pub fn real(f_plus: f64, f_minus: f64, fp_plus: f64, fp_minus: f64) -> Result<Self> {
        Self::new(
            f_plus.into(),
            f_minus.into(),
            fp_plus.into(),
            fp_minus.into(),
        )
    }

    /// Complex linear combination `a * self + b * other`.
    pub fn combine(&self, a: C64, other: &Self, b: C64) -> Self {
        Self {
            f_plus: a * self.f_plus + b * other.f_plus,
            f_minus: a * self.f_minus + b * other.f_minus,
            fp_plus: a * self.fp_plus + b * other.fp_plus,
            fp_minus: a * self.fp_minus + b * other.fp_minus,
        }
    }
}

pub fn gamma0(b: &BoundaryData) -> ComplexVector2 {
    [(b.f_plus + b.f_minus) * 0.5, (b.f_plus - b.f_minus) * 0.5]
}

pub fn gamma1(b: &BoundaryData) -> ComplexVector2 {
    let g0 = gamma0(b);
    [
        g0[0] * 2.0 + (b.fp_plus - b.fp_minus),
        g0[1] * 2.0 + (b.fp_plus + b.fp_minus),
    ]
}

pub fn domain_residual(t: &ComplexMatrix2, b: &BoundaryData) -> f64 {
    let lhs = t.apply(&gamma1(b));
    let g0 = gamma0(b);
    vector_norm(&[lhs[0] - g0[0], lhs[1] - g0[1]])
}

/// Whether `f` satisfies the boundary condition `T Gamma_1 f = Gamma_0 f`.
pub fn in_domain(t: &ComplexMatrix2, b: &BoundaryData, tol: f64) -> bool {
    domain_residual(t, b) <= tol
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtensionParams {
    pub beta0: f64,
    pub beta1: f64,
    #[serde(flatten)]
    pub metric: KreinMetricParams,
}

impl ExtensionParams {
    pub fn new(beta0: f64, beta1: f64, chi: f64, xi: f64) -> Result<Self> {
        if !beta0.is_finite() {
            return Err(Error::NonFinite("beta0"));
        }
        if !beta1.is_finite() {
            return Err(Error::NonFinite("beta1"));
        }
        Ok(Self {
            beta0,
            beta1,
            metric: KreinMetricParams::new(xi, chi)?,
        })
    }

    pub fn chi(&self) -> f64 {
        self.metric.chi()
    }

    pub fn xi(&self) -> f64 {
        self.metric.xi()
    }
}

/// `T = beta0 I + beta1 C`.
pub fn t_from_betas(e: &ExtensionParams) -> ComplexMatrix2 {
    ComplexMatrix2::identity().scale_re(e.beta0) + c_operator(&e.metric).scale_re(e.beta1)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BetaFit {
    pub params: ExtensionParams,
    /// False when `beta1 = 0`: `T` is then a multiple of `I` and says
    /// nothing about `(chi, xi)`, which are reported as `(0, 0)`.
    pub metric_identifiable: bool,
}

/// Inverts [`t_from_betas`] using `beta0 = tr(T)/2` and
/// `beta0^2 - beta1^2 = det(T)`, with the convention `beta1 >= 0`.
pub fn betas_from_t(t: &ComplexMatrix2, tol: f64) -> Result<BetaFit> {
    check_tol(tol)?;
    if !t.is_finite() {
        return Err(Error::NonFinite("matrix entry"));
    }
    let beta0 = 0.5 * t.trace().re;
    let shifted = *t - ComplexMatrix2::identity().scale_re(beta0);
    let beta1 = (beta0 * beta0 - t.det().re).max(0.0).sqrt();

    if beta1 <= tol {
        let params = ExtensionParams::new(beta0, 0.0, 0.0, 0.0)?;
        let residual = t_from_betas(&params).dist(t);
        if residual > tol {
            return Err(Error::NotExtensionForm { residual });
        }
        return Ok(BetaFit {
            params,
            metric_identifiable: false,
        });
    }

    // (T - beta0 I) / beta1 must be a C-operator; a negative beta1 shows up
    // as (chi, xi) -> (-chi, xi + pi).
    let candidate = shifted.scale_re(1.0 / beta1);
    let metric = c_params_from_matrix(&candidate, tol.max(tol / beta1)).map_err(|err| {
        Error::NotExtensionForm {
            residual: err.residual().unwrap_or(f64::INFINITY) * beta1,
        }
    })?;
    let params = ExtensionParams {
        beta0,
        beta1,
        metric,
    };
    let residual = t_from_betas(&params).dist(t);
    if residual > tol {
        return Err(Error::NotExtensionForm { residual });
    }
    Ok(BetaFit {
        params,
        metric_identifiable: true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectraClassification {
    pub nonnegative: bool,
    pub closed_form_verdict: bool,
    pub oracle_verdict: bool,
    /// Spectrum of `beta0 G + beta1 P_xi` with `G = exp(-chi iRP_xi)`.
    pub eigenvalues_lower: (f64, f64),
    /// Spectrum of `(1/2 - beta0) G - beta1 P_xi`.
    pub eigenvalues_upper: (f64, f64),
}

impl SpectraClassification {
    pub fn consistent(&self) -> bool {
        self.closed_form_verdict == self.oracle_verdict
    }
}

/// `0 <= beta0 <= 1/2` and `|beta1| <= min(1/2 - beta0, beta0)`.
pub fn closed_form_nonnegative(beta0: f64, beta1: f64, slack: f64) -> bool {
    let bound = (0.5 - beta0).min(beta0);
    beta0 >= -slack && beta0 <= 0.5 + slack && beta1.abs() <= bound + slack
}

/// Decides nonnegativity of the spectrum of the extension both by the
/// closed-form region and by checking `0 <= G T <= G / 2` through the
/// eigenvalues of the two Hermitian matrices `G T` and `G (I/2 - T)`.
pub fn classify_nonnegative(e: &ExtensionParams) -> SpectraClassification {
    let closed = closed_form_nonnegative(e.beta0, e.beta1, CLASSIFY_TOL);
    let g = metric(&e.metric);
    let p = crate::clifford::p_xi(e.xi());
    // G C = P_xi
    let lower = g.scale_re(e.beta0) + p.scale_re(e.beta1);
    let upper = g.scale_re(0.5 - e.beta0) - p.scale_re(e.beta1);
    let eigenvalues_lower = lower.hermitian_eigenvalues();
    let eigenvalues_upper = upper.hermitian_eigenvalues();
    let oracle = eigenvalues_lower.0 >= -CLASSIFY_TOL && eigenvalues_upper.0 >= -CLASSIFY_TOL;
    SpectraClassification {
        nonnegative: closed,
        closed_form_verdict: closed,
        oracle_verdict: oracle,
        eigenvalues_lower,
        eigenvalues_upper,
    }
}

/// Checks `0 <= G T <= G / 2` in the standard inner product.
pub fn check_metric_inequality(
    t: &ComplexMatrix2,
    p: &KreinMetricParams,
    tol: f64,
) -> Result<bool> {
    check_tol(tol)?;
    let g = metric(p);
    let lower = g * *t;
    let residual = lower.hermiticity_defect();
    if residual > tol {
        return Err(Error::NotHermitian { residual });
    }
    let upper = g * (ComplexMatrix2::identity().scale_re(0.5) - *t);
    Ok(lower.hermitian_eigenvalues().0 >= -tol && upper.hermitian_eigenvalues().0 >= -tol)
}

/// `|b2 - i b1 tanh(chi)|` for `T = b0 I + b1 P_xi + b2 R + b3 iRP_xi`.
///
/// For `T` that is PT-symmetric and Krein self-adjoint with respect to
/// `P_xi`, this vanishes exactly when `T` commutes with `C`.
pub fn beta2_condition_defect(t: &ComplexMatrix2, p: &KreinMetricParams) -> f64 {
    let b = frame_decompose(t, p.xi());
    (b.b2 - C64::new(0.0, p.chi().tanh()) * b.b1).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::sigma3;
    use crate::matrix::{c, re};
    use approx::assert_abs_diff_eq;

    fn v(a: f64, b: f64) -> ComplexVector2 {
        [re(a), re(b)]
    }

    #[test]
    fn gamma0_examples() {
        assert_eq!(
            gamma0(&BoundaryData::real(1.0, 1.0, 0.0, 0.0).unwrap()),
            v(1.0, 0.0)
        );
        assert_eq!(
            gamma0(&BoundaryData::real(1.0, -1.0, 0.0, 0.0).unwrap()),
            v(0.0, 1.0)
        );
        assert_eq!(
            gamma0(&BoundaryData::real(0.0, 0.0, 5.0, 5.0).unwrap()),
            v(0.0, 0.0)
        );
    }

    #[test]
    fn gamma1_examples() {
        assert_eq!(
            gamma1(&BoundaryData::real(1.0, 1.0, 0.0, 0.0).unwrap()),
            v(2.0, 0.0)
        );
        // h1 = exp(-|x|): h1(+-0) = 1, h1'(+0) = -1, h1'(-0) = 1
        assert_eq!(
            gamma1(&BoundaryData::real(1.0, 1.0, -1.0, 1.0).unwrap()),
            v(0.0, 0.0)
        );
        assert_eq!(
            gamma1(&BoundaryData::real(0.0, 0.0, 1.0, 1.0).unwrap()),
            v(0.0, 2.0)
        );
    }

    #[test]
    fn domain_examples() {
        let zero = ComplexMatrix2::zero();
        assert!(!in_domain(
            &zero,
            &BoundaryData::real(1.0, 1.0, 0.0, 0.0).unwrap(),
            1e-12
        ));
        assert!(in_domain(
            &zero,
            &BoundaryData::real(0.0, 0.0, 3.0, 1.0).unwrap(),
            1e-12
        ));
        let half = ComplexMatrix2::identity().scale_re(0.5);
        assert!(!in_domain(
            &half,
            &BoundaryData::real(1.0, 1.0, -1.0, -1.0).unwrap(),
            1e-12
        ));
    }

    #[test]
    fn boundary_data_rejects_nan() {
        assert!(BoundaryData::real(f64::NAN, 0.0, 0.0, 0.0).is_err());
        assert!(BoundaryData::new(c(0.0, f64::INFINITY), re(0.0), re(0.0), re(0.0)).is_err());
    }

    #[test]
    fn t_from_betas_examples() {
        let e = ExtensionParams::new(0.0, 0.0, 0.7, 1.0).unwrap();
        assert_eq!(t_from_betas(&e), ComplexMatrix2::zero());
        let e = ExtensionParams::new(0.5, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(t_from_betas(&e), ComplexMatrix2::identity().scale_re(0.5));
        let e = ExtensionParams::new(0.25, 0.25, 0.0, 0.0).unwrap();
        assert_eq!(
            t_from_betas(&e),
            ComplexMatrix2::from_real(0.5, 0.0, 0.0, 0.0)
        );
    }

    #[test]
    fn betas_from_t_examples() {
        let fit = betas_from_t(&ComplexMatrix2::identity().scale_re(0.5), 1e-10).unwrap();
        assert!(!fit.metric_identifiable);
        assert_eq!((fit.params.beta0, fit.params.beta1), (0.5, 0.0));
        assert_eq!((fit.params.chi(), fit.params.xi()), (0.0, 0.0));

        let fit = betas_from_t(&ComplexMatrix2::from_real(0.5, 0.0, 0.0, 0.0), 1e-10).unwrap();
        assert!(fit.metric_identifiable);
        assert_abs_diff_eq!(fit.params.beta0, 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(fit.params.beta1, 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(fit.params.chi(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(fit.params.xi(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn betas_from_t_absorbs_negative_beta1() {
        let e = ExtensionParams::new(0.2, -0.15, 0.8, 1.0).unwrap();
        let fit = betas_from_t(&t_from_betas(&e), 1e-10).unwrap();
        assert_abs_diff_eq!(fit.params.beta1, 0.15, epsilon = 1e-12);
        assert_abs_diff_eq!(fit.params.chi(), -0.8, epsilon = 1e-12);
        assert_abs_diff_eq!(fit.params.xi(), 1.0 + std::f64::consts::PI, epsilon = 1e-12);
        assert!(t_from_betas(&fit.params).dist(&t_from_betas(&e)) < 1e-12);
    }

    #[test]
    fn betas_from_t_rejects_other_matrices() {
        let m = ComplexMatrix2::from_real(0.0, 1.0, 1.0, 0.0);
        assert!(matches!(
            betas_from_t(&m, 1e-10),
            Err(Error::NotExtensionForm { .. })
        ));
        let m = ComplexMatrix2::from_real(0.0, 1.0, 0.0, 0.0);
        assert!(betas_from_t(&m, 1e-10).is_err());
    }

    #[test]
    fn classify_examples() {
        for (chi, xi) in [(0.0, 0.0), (1.0, 0.0), (-2.0, 2.5)] {
            let c = classify_nonnegative(&ExtensionParams::new(0.25, 0.2, chi, xi).unwrap());
            assert!(c.nonnegative && c.oracle_verdict);
        }
        let c = classify_nonnegative(&ExtensionParams::new(0.25, 0.3, 1.0, 0.0).unwrap());
        assert!(!c.nonnegative && !c.oracle_verdict);
        // Both oracle matrices have trace beta0' * 2 cosh(chi) and
        // determinant beta0'^2 - beta1^2 = 0.0625 - 0.09 < 0.
        assert!(c.eigenvalues_lower.0 < 0.0 && c.eigenvalues_upper.0 < 0.0);
        let c = classify_nonnegative(&ExtensionParams::new(0.6, 0.0, 0.0, 0.0).unwrap());
        assert!(!c.nonnegative && !c.oracle_verdict);
    }

    #[test]
    fn metric_inequality_examples() {
        let p = KreinMetricParams::new(0.0, 1.0).unwrap();
        assert!(check_metric_inequality(&ComplexMatrix2::zero(), &p, 1e-10).unwrap());
        let half = ComplexMatrix2::identity().scale_re(0.5);
        assert!(check_metric_inequality(&half, &p, 1e-10).unwrap());
        let e = ExtensionParams::new(0.25, 0.3, 1.0, 0.0).unwrap();
        assert!(!check_metric_inequality(&t_from_betas(&e), &e.metric, 1e-10).unwrap());
        assert!(matches!(
            check_metric_inequality(&crate::clifford::sigma1(), &p, 1e-10),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn beta2_condition_on_c_operator() {
        let p = KreinMetricParams::new(0.9, 1.4).unwrap();
        assert!(beta2_condition_defect(&c_operator(&p), &p) < 1e-14);
        assert!(beta2_condition_defect(&sigma3(), &p) > 0.1);
    }
}
