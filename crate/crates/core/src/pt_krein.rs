//! PT-symmetry, Krein self-adjointness and C-symmetry of 2x2 operators.
//!
//! PT acts on C^2 as `v -> sigma_3 conj(v)`: the deficiency basis consists of
//! real functions, so time reversal is entrywise conjugation and parity
//! restricts to `sigma_3`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::clifford::{
    c_operator, canonical_angle, involution_defect, involution_from_unit_vector, p_xi,
    pauli_decompose, sigma3, KreinMetricParams,
};
use crate::error::{check_tol, Error, Result};
use crate::matrix::{ComplexMatrix2, ComplexVector2};
use crate::DEFAULT_TOL;

/// The antilinear map `PT = sigma_3 o conj` on C^2.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AntilinearPT;

impl AntilinearPT {
    pub fn apply(&self, v: &ComplexVector2) -> ComplexVector2 {
        [v[0].conj(), -v[1].conj()]
    }

    /// The matrix `M'` with `PT o M = M' o PT`.
    pub fn conjugate(&self, m: &ComplexMatrix2) -> ComplexMatrix2 {
        let s3 = sigma3();
        s3 * m.conj() * s3
    }
}

pub fn pt_conjugate(m: &ComplexMatrix2) -> ComplexMatrix2 {
    AntilinearPT.conjugate(m)
}

pub fn pt_residual(m: &ComplexMatrix2) -> f64 {
    pt_conjugate(m).dist(m)
}

pub fn is_pt_symmetric(m: &ComplexMatrix2, tol: f64) -> bool {
    pt_residual(m) <= tol
}

/// Largest offending part among `Im a0, Im a1, Re a2, Im a3`.
pub fn pt_coefficient_defect(m: &ComplexMatrix2) -> f64 {
    let a = pauli_decompose(m);
    [a.a0.im, a.a1.im, a.a2.re, a.a3.im]
        .iter()
        .map(|x| x.abs())
        .fold(0.0, f64::max)
}

/// Coefficient route: `a0, a1, a3` real and `a2` purely imaginary.
pub fn is_pt_symmetric_by_coefficients(m: &ComplexMatrix2, tol: f64) -> bool {
    pt_coefficient_defect(m) <= tol
}

/// `||J m - m* J||`: self-adjointness in the Krein space with fundamental
/// symmetry `J`.
pub fn krein_residual_wrt(m: &ComplexMatrix2, j: &ComplexMatrix2) -> f64 {
    (*j * *m).dist(&(m.adjoint() * *j))
}

pub fn krein_residual(m: &ComplexMatrix2, xi: f64) -> f64 {
    krein_residual_wrt(m, &p_xi(xi))
}

pub fn is_krein_selfadjoint(m: &ComplexMatrix2, xi: f64, tol: f64) -> bool {
    krein_residual(m, xi) <= tol
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XiSolution {
    pub xi: f64,
    /// Every angle works (`a1 = a3 = 0`); `xi` is then reported as 0.
    pub degenerate: bool,
}

/// Solves `a1 sin(xi) = a3 cos(xi)` for a PT-symmetric `m`.
pub fn solve_xi(m: &ComplexMatrix2) -> Result<XiSolution> {
    solve_xi_with_tol(m, DEFAULT_TOL)
}

pub fn solve_xi_with_tol(m: &ComplexMatrix2, tol: f64) -> Result<XiSolution> {
    check_tol(tol)?;
    let residual = pt_residual(m);
    if residual > tol {
        return Err(Error::NotPtSymmetric { residual });
    }
    let a = pauli_decompose(m);
    let (a1, a3) = (a.a1.re, a.a3.re);
    if a1.abs() <= tol && a3.abs() <= tol {
        return Ok(XiSolution {
            xi: 0.0,
            degenerate: true,
        });
    }
    Ok(XiSolution {
        xi: canonical_angle(a3.atan2(a1)),
        degenerate: false,
    })
}

pub fn c_commutator_residual(m: &ComplexMatrix2, p: &KreinMetricParams) -> f64 {
    c_operator(p).commutator(m).op_norm()
}

pub fn is_c_symmetric(m: &ComplexMatrix2, p: &KreinMetricParams, tol: f64) -> bool {
    c_commutator_residual(m, p) <= tol
}

/// Recovers `(xi, chi)` from a C-operator `m = exp(chi iRP_xi) P_xi`.
pub fn c_params_from_matrix(m: &ComplexMatrix2, tol: f64) -> Result<KreinMetricParams> {
    check_tol(tol)?;
    let residual = involution_defect(m);
    if residual > tol {
        return Err(Error::NotInvolution { residual });
    }
    let residual = pt_residual(m);
    if residual > tol {
        return Err(Error::NotPtSymmetric { residual });
    }
    let id = ComplexMatrix2::identity();
    if m.dist(&id) <= tol || m.dist(&(-id)) <= tol {
        return Err(Error::TrivialInvolution);
    }
    let a = pauli_decompose(m);
    let params = KreinMetricParams::new(a.a3.re.atan2(a.a1.re), a.a2.im.asinh())?;
    let residual = c_operator(&params).dist(m);
    if residual > tol {
        return Err(Error::NotExtensionForm { residual });
    }
    Ok(params)
}

/// Given `m` self-adjoint in the Krein space of `J = a1 P + a2 R + a3 iRP`,
/// returns the angle of the PT-symmetric involution `P_xi` for which `m` is
/// also Krein self-adjoint.
pub fn krein_selfadjoint_reduction(m: &ComplexMatrix2, alpha: [f64; 3], tol: f64) -> Result<f64> {
    check_tol(tol)?;
    if alpha.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("alpha"));
    }
    let norm = alpha.iter().map(|x| x * x).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > tol {
        return Err(Error::NotUnitVector { norm });
    }
    let residual = pt_residual(m);
    if residual > tol {
        return Err(Error::NotPtSymmetric { residual });
    }
    let j = involution_from_unit_vector(alpha);
    let residual = krein_residual_wrt(m, &j);
    if residual > tol {
        return Err(Error::NotKreinSelfAdjoint { residual });
    }
    let planar = alpha[0].hypot(alpha[2]);
    if planar <= tol {
        return Err(Error::ReductionUndefined);
    }
    // cos xi = a1 / sqrt(1 - a2^2), sin xi = a3 / sqrt(1 - a2^2)
    let xi = canonical_angle((alpha[2] / planar).atan2(alpha[0] / planar));
    let residual = krein_residual(m, xi);
    if residual > tol {
        return Err(Error::NotKreinSelfAdjoint { residual });
    }
    Ok(xi)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub pt_symmetric: bool,
    pub krein_xi: Option<f64>,
    pub xi_degenerate: bool,
    pub c_params: Option<KreinMetricParams>,
    pub residuals: BTreeMap<String, f64>,
}

pub fn symmetry_report(m: &ComplexMatrix2, tol: f64) -> Result<SymmetryReport> {
    check_tol(tol)?;
    let mut residuals = BTreeMap::new();
    let pt = pt_residual(m);
    residuals.insert("pt".to_string(), pt);
    residuals.insert("pt_coefficients".to_string(), pt_coefficient_defect(m));
    residuals.insert("involution".to_string(), involution_defect(m));
    let pt_symmetric = pt <= tol;

    let (mut krein_xi, mut xi_degenerate) = (None, false);
    if pt_symmetric {
        let sol = solve_xi_with_tol(m, tol)?;
        residuals.insert("krein".to_string(), krein_residual(m, sol.xi));
        krein_xi = Some(sol.xi);
        xi_degenerate = sol.degenerate;
    }
    let c_params = c_params_from_matrix(m, tol).ok();
    if let Some(p) = &c_params {
        residuals.insert("c_reconstruction".to_string(), c_operator(p).dist(m));
    }
    Ok(SymmetryReport {
        pt_symmetric,
        krein_xi,
        xi_degenerate,
        c_params,
        residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{sigma1, sigma2};
    use crate::matrix::{c, re, I, ONE, ZERO};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, LN_2};

    const TOL: f64 = 1e-10;

    #[test]
    fn pt_conjugate_examples() {
        assert_eq!(pt_conjugate(&sigma3()), sigma3());
        let is1 = sigma1().scale(I);
        assert!(pt_conjugate(&is1).dist(&is1) == 0.0);
        assert!(pt_conjugate(&sigma1()).dist(&(-sigma1())) == 0.0);
    }

    #[test]
    fn pt_symmetry_examples() {
        assert!(is_pt_symmetric(&sigma3(), TOL));
        assert!(is_pt_symmetric(&sigma1().scale(I), TOL));
        assert!(!is_pt_symmetric(&sigma1(), TOL));
        assert!(is_pt_symmetric(&sigma2(), TOL));
    }

    #[test]
    fn krein_examples() {
        assert!(is_krein_selfadjoint(&sigma3(), 0.0, TOL));
        assert!(!is_krein_selfadjoint(&sigma2(), 0.0, TOL));
        assert_abs_diff_eq!(krein_residual(&sigma2(), 0.0), 2.0, epsilon = 1e-15);
        assert!(is_krein_selfadjoint(&sigma2(), FRAC_PI_2, TOL));
    }

    #[test]
    fn solve_xi_examples() {
        let s = solve_xi(&sigma3()).unwrap();
        assert_eq!((s.xi, s.degenerate), (0.0, false));
        let s = solve_xi(&sigma2()).unwrap();
        assert_abs_diff_eq!(s.xi, FRAC_PI_2, epsilon = 1e-15);
        assert!(!s.degenerate);
        let s = solve_xi(&ComplexMatrix2::identity()).unwrap();
        assert_eq!((s.xi, s.degenerate), (0.0, true));
        assert!(matches!(
            solve_xi(&sigma1()),
            Err(Error::NotPtSymmetric { .. })
        ));
    }

    #[test]
    fn c_symmetry_examples() {
        let p = KreinMetricParams::new(0.7, 1.2).unwrap();
        assert!(is_c_symmetric(&ComplexMatrix2::identity(), &p, TOL));
        assert!(is_c_symmetric(&c_operator(&p), &p, TOL));
        assert!(!is_c_symmetric(
            &sigma1(),
            &KreinMetricParams::trivial(),
            TOL
        ));
    }

    #[test]
    fn c_params_examples() {
        let p = c_params_from_matrix(&sigma3(), TOL).unwrap();
        assert_eq!((p.xi(), p.chi()), (0.0, 0.0));
        let m = ComplexMatrix2::from_entries(re(1.25), c(0.0, 0.75), c(0.0, 0.75), re(-1.25));
        let p = c_params_from_matrix(&m, TOL).unwrap();
        assert_abs_diff_eq!(p.xi(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.chi(), LN_2, epsilon = 1e-15);
        let p = c_params_from_matrix(&p_xi(1.0), TOL).unwrap();
        assert_abs_diff_eq!(p.xi(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.chi(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn c_params_errors() {
        assert!(matches!(
            c_params_from_matrix(&sigma3().scale_re(2.0), TOL),
            Err(Error::NotInvolution { .. })
        ));
        assert!(matches!(
            c_params_from_matrix(&sigma1(), TOL),
            Err(Error::NotPtSymmetric { .. })
        ));
        assert!(matches!(
            c_params_from_matrix(&ComplexMatrix2::identity(), TOL),
            Err(Error::TrivialInvolution)
        ));
        assert!(matches!(
            c_params_from_matrix(&(-ComplexMatrix2::identity()), TOL),
            Err(Error::TrivialInvolution)
        ));
        assert!(c_params_from_matrix(&sigma3(), 0.0).is_err());
    }

    #[test]
    fn reduction_examples() {
        let xi = krein_selfadjoint_reduction(&sigma3(), [1.0, 0.0, 0.0], TOL).unwrap();
        assert_eq!(xi, 0.0);
        // With alpha_2 != 0 only multiples of the identity are admissible.
        let m = ComplexMatrix2::scalar(re(0.37));
        let xi = krein_selfadjoint_reduction(&m, [0.6, 0.8, 0.0], TOL).unwrap();
        assert_eq!(xi, 0.0);
    }

    #[test]
    fn reduction_errors() {
        assert!(matches!(
            krein_selfadjoint_reduction(&sigma3(), [0.0, 1.0, 0.0], TOL),
            Err(Error::NotKreinSelfAdjoint { .. })
        ));
        let m = ComplexMatrix2::identity();
        assert!(matches!(
            krein_selfadjoint_reduction(&m, [0.0, 1.0, 0.0], TOL),
            Err(Error::ReductionUndefined)
        ));
        assert!(matches!(
            krein_selfadjoint_reduction(&m, [0.5, 0.5, 0.0], TOL),
            Err(Error::NotUnitVector { .. })
        ));
        assert!(matches!(
            krein_selfadjoint_reduction(&sigma1(), [1.0, 0.0, 0.0], TOL),
            Err(Error::NotPtSymmetric { .. })
        ));
    }

    #[test]
    fn antilinear_examples() {
        let v = [c(1.0, 2.0), c(-0.5, 0.25)];
        let pt = AntilinearPT;
        assert_eq!(pt.apply(&pt.apply(&v)), v);
        let alpha = c(0.3, -1.7);
        let lhs = pt.apply(&[alpha * v[0], alpha * v[1]]);
        let w = pt.apply(&v);
        assert_eq!(lhs, [alpha.conj() * w[0], alpha.conj() * w[1]]);
        // M' o PT = PT o M on vectors.
        let m = ComplexMatrix2::from_entries(c(1.0, 1.0), c(0.0, 2.0), ONE, ZERO);
        let lhs = pt.apply(&m.apply(&v));
        let rhs = pt_conjugate(&m).apply(&pt.apply(&v));
        assert!((lhs[0] - rhs[0]).norm() + (lhs[1] - rhs[1]).norm() < 1e-15);
    }

    #[test]
    fn report_for_c_operator() {
        let p = KreinMetricParams::new(0.4, -0.9).unwrap();
        let r = symmetry_report(&c_operator(&p), TOL).unwrap();
        assert!(r.pt_symmetric);
        assert!(!r.xi_degenerate);
        assert_abs_diff_eq!(r.krein_xi.unwrap(), 0.4, epsilon = 1e-12);
        let cp = r.c_params.unwrap();
        assert_abs_diff_eq!(cp.chi(), -0.9, epsilon = 1e-12);
        assert!(r.residuals.values().all(|x| *x >= 0.0));

        let r = symmetry_report(&sigma1(), TOL).unwrap();
        assert!(!r.pt_symmetric);
        assert!(r.krein_xi.is_none() && r.c_params.is_none());
    }
}
