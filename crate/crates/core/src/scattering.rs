//! The Lax-Phillips scattering matrix of a 0-perturbed extension,
//!
//! ```text
//! S(z) = (I - 2(1 + iz) T) (I - 2(1 - iz) T)^{-1},   Im z <= 0,
//! ```
//!
//! its inversion back to `T`, and the checks that characterize scattering
//! matrices of C-symmetric extensions with nonnegative spectrum.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::{exp_involution, i_r_p_xi, metric, p_xi, sigma3, KreinMetricParams};
use crate::error::{Error, Result};
use crate::extension::ExtensionParams;
use crate::matrix::{c, re, ComplexMatrix2, C64, I, ONE};

/// Denominators with a larger condition number are treated as singular.
pub const MAX_CONDITION: f64 = 1e12;

/// The fixed point used for the "at least one z" conditions.
pub const WITNESS_Z: Complex64 = Complex64::new(1.0, -1.0);

/// A point of the closed lower half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralPoint {
    z: C64,
}

impl SpectralPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        Self::from_complex(c(re, im))
    }

    pub fn from_complex(z: C64) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite("spectral point"));
        }
        if z.im > 0.0 {
            return Err(Error::UpperHalfPlane { z });
        }
        Ok(Self { z })
    }

    /// A point `delta` on the real axis.
    pub fn real(delta: f64) -> Result<Self> {
        Self::new(delta, 0.0)
    }

    pub fn z(&self) -> C64 {
        self.z
    }

    pub fn is_interior(&self) -> bool {
        self.z.im < 0.0
    }

    /// The reflected point `-conj(z)`, again in the lower half-plane.
    pub fn reflected(&self) -> Self {
        Self { z: -self.z.conj() }
    }

    fn require_interior(&self) -> Result<()> {
        if self.is_interior() {
            Ok(())
        } else {
            Err(Error::OnRealAxis { z: self.z })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScatteringEvaluation {
    pub z: SpectralPoint,
    pub s: ComplexMatrix2,
    /// Condition number of the denominator `I - 2(1 - iz) T`.
    pub condition_number: f64,
}

fn invert_checked(den: &ComplexMatrix2, z: C64) -> Result<(ComplexMatrix2, f64)> {
    let condition = den.condition_number();
    if condition.is_nan() || condition > MAX_CONDITION {
        return Err(Error::Singular { z, condition });
    }
    let inv = den.inverse().ok_or(Error::Singular { z, condition })?;
    Ok((inv, condition))
}

pub fn s_matrix(t: &ComplexMatrix2, z: SpectralPoint) -> Result<ScatteringEvaluation> {
    let id = ComplexMatrix2::identity();
    let plus = ONE + I * z.z;
    let minus = ONE - I * z.z;
    let num = id - t.scale(plus * 2.0);
    let den = id - t.scale(minus * 2.0);
    let (inv, condition_number) = invert_checked(&den, z.z)?;
    Ok(ScatteringEvaluation {
        z,
        s: num * inv,
        condition_number,
    })
}

/// Same quotient with the factors in the other order, `D^{-1} N`.
pub fn s_matrix_left(t: &ComplexMatrix2, z: SpectralPoint) -> Result<ComplexMatrix2> {
    let id = ComplexMatrix2::identity();
    let num = id - t.scale((ONE + I * z.z) * 2.0);
    let den = id - t.scale((ONE - I * z.z) * 2.0);
    let (inv, _) = invert_checked(&den, z.z)?;
    Ok(inv * num)
}

/// `S(z)` for `T = beta0 I + beta1 exp(chi iRP_xi) P_xi`, written through
/// `P_xi` and `E = exp(chi i sigma_1 P_xi)`:
///
/// ```text
/// S(z) = ([1 - 2(1+iz) b0] P_xi - 2(1+iz) b1 E) ([1 - 2(1-iz) b0] P_xi - 2(1-iz) b1 E)^{-1}
/// ```
pub fn s_matrix_zero_range(e: &ExtensionParams, z: SpectralPoint) -> Result<ScatteringEvaluation> {
    let p = p_xi(e.xi());
    let exp = exp_involution(re(e.chi()), &i_r_p_xi(e.xi()))?;
    let plus = ONE + I * z.z;
    let minus = ONE - I * z.z;
    let factor = |w: C64| p.scale(ONE - w * (2.0 * e.beta0)) - exp.scale(w * (2.0 * e.beta1));
    let (inv, condition_number) = invert_checked(&factor(minus), z.z)?;
    Ok(ScatteringEvaluation {
        z,
        s: factor(plus) * inv,
        condition_number,
    })
}

/// `theta(z) = (1 + iz) / (1 - iz)`.
pub fn theta(z: C64) -> C64 {
    (ONE + I * z) / (ONE - I * z)
}

/// Recovers `T` from a single value `S(z)`, `Im z < 0`:
/// `T = (I - S)(S - theta(z) I)^{-1} / (2(iz - 1))`.
///
/// Evaluated with the denominator `1 - iz` cleared,
/// `T = (I - S)((1 + iz) I - (1 - iz) S)^{-1} / 2`, which stays finite at
/// `z = -i` where `theta` has its pole.
pub fn t_from_s(s: &ComplexMatrix2, z: SpectralPoint) -> Result<ComplexMatrix2> {
    z.require_interior()?;
    let shifted = ComplexMatrix2::scalar(ONE + I * z.z) - s.scale(ONE - I * z.z);
    let (inv, _) = invert_checked(&shifted, z.z)?;
    Ok(((ComplexMatrix2::identity() - *s) * inv).scale_re(0.5))
}

/// Outcome of one characteristic check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PropertyEntry {
    pub pass: bool,
    pub residual: f64,
    /// Point where the residual is attained.
    pub witness_z: C64,
}

impl PropertyEntry {
    fn from_residual(residual: f64, witness_z: C64, tol: f64) -> Self {
        Self {
            pass: residual <= tol,
            residual,
            witness_z,
        }
    }
}

/// Tracks the maximum of a residual over a set of points.
struct WorstCase(Option<(f64, C64)>);

impl WorstCase {
    fn new() -> Self {
        Self(None)
    }

    fn update(&mut self, residual: f64, z: C64) {
        if self.0.is_none_or(|(r, _)| residual > r) {
            self.0 = Some((residual, z));
        }
    }

    fn finish(self, tol: f64) -> PropertyEntry {
        let (residual, witness) = self.0.unwrap_or((0.0, c(0.0, 0.0)));
        PropertyEntry::from_residual(residual, witness, tol)
    }
}

/// Smallest eigenvalue of `G - S* G S`; negative values violate the
/// contraction property in the metric `G`.
pub fn metric_defect(s: &ComplexMatrix2, g: &ComplexMatrix2) -> f64 {
    (*g - s.adjoint() * *g * *s).hermitian_eigenvalues().0
}

/// `S*(z) G S(z) <= G` with `G = exp(-chi iRP_xi)`, for every `z` (all
/// strictly inside the lower half-plane).
pub fn check_condition_a(
    t: &ComplexMatrix2,
    p: &KreinMetricParams,
    zs: &[SpectralPoint],
    tol: f64,
) -> Result<PropertyEntry> {
    let g = metric(p);
    let mut worst: Option<(f64, C64)> = None;
    for z in zs {
        z.require_interior()?;
        let s = s_matrix(t, *z)?.s;
        let defect = metric_defect(&s, &g);
        if worst.is_none_or(|(d, _)| defect < d) {
            worst = Some((defect, z.z));
        }
    }
    let (defect, witness) = worst.unwrap_or((0.0, c(0.0, 0.0)));
    Ok(PropertyEntry::from_residual(
        (-defect).max(0.0),
        witness,
        tol,
    ))
}

/// `G S(z) = S*(-conj z) G` for every `z`.
pub fn check_condition_b(
    t: &ComplexMatrix2,
    p: &KreinMetricParams,
    zs: &[SpectralPoint],
    tol: f64,
) -> Result<PropertyEntry> {
    let g = metric(p);
    let mut worst = WorstCase::new();
    for z in zs {
        let s = s_matrix(t, *z)?.s;
        let s_reflected = s_matrix(t, z.reflected())?.s;
        worst.update((g * s).dist(&(s_reflected.adjoint() * g)), z.z);
    }
    Ok(worst.finish(tol))
}

fn condition_c_residual(t: &ComplexMatrix2, g: &ComplexMatrix2, z: SpectralPoint) -> Result<f64> {
    let s = s_matrix(t, z)?.s;
    let s_adj = s.adjoint();
    let lhs = (*g - s_adj * *g * s).scale_re(z.z.re);
    let rhs = (s_adj * *g - *g * s).scale(c(0.0, z.z.im));
    Ok(lhs.dist(&rhs))
}

/// `Re z [G - S* G S] = i Im z [S* G - G S]` at a single point with
/// `Re z != 0`, `Im z < 0`.
pub fn check_condition_c(
    t: &ComplexMatrix2,
    p: &KreinMetricParams,
    z: SpectralPoint,
    tol: f64,
) -> Result<PropertyEntry> {
    z.require_interior()?;
    if z.z.re == 0.0 {
        return Err(Error::ZeroRealPart { z: z.z });
    }
    let residual = condition_c_residual(t, &metric(p), z)?;
    Ok(PropertyEntry::from_residual(residual, z.z, tol))
}

/// Condition (c) over every grid point with `Re z != 0`.
pub fn check_condition_c_sweep(
    t: &ComplexMatrix2,
    p: &KreinMetricParams,
    zs: &[SpectralPoint],
    tol: f64,
) -> Result<PropertyEntry> {
    let g = metric(p);
    let mut worst = WorstCase::new();
    for z in zs.iter().filter(|z| z.z.re != 0.0) {
        z.require_interior()?;
        worst.update(condition_c_residual(t, &g, *z)?, z.z);
    }
    Ok(worst.finish(tol))
}

fn condition_d_residual(t: &ComplexMatrix2, p: &ComplexMatrix2, z: SpectralPoint) -> Result<f64> {
    let s = s_matrix(t, z)?.s;
    let s_reflected = s_matrix(t, z.reflected())?.s;
    Ok((*p * s).dist(&(s_reflected.adjoint() * *p)))
}

/// `P_xi S(z) = S*(-conj z) P_xi` at a single point.
pub fn check_condition_d(
    t: &ComplexMatrix2,
    xi: f64,
    z: SpectralPoint,
    tol: f64,
) -> Result<PropertyEntry> {
    let residual = condition_d_residual(t, &p_xi(xi), z)?;
    Ok(PropertyEntry::from_residual(residual, z.z, tol))
}

pub fn check_condition_d_sweep(
    t: &ComplexMatrix2,
    xi: f64,
    zs: &[SpectralPoint],
    tol: f64,
) -> Result<PropertyEntry> {
    let p = p_xi(xi);
    let mut worst = WorstCase::new();
    for z in zs {
        worst.update(condition_d_residual(t, &p, *z)?, z.z);
    }
    Ok(worst.finish(tol))
}

/// `PT S(z) = S(-conj z) PT` on every point, i.e.
/// `sigma_3 conj(S(z)) sigma_3 = S(-conj z)`.
pub fn check_pt_criterion(
    t: &ComplexMatrix2,
    zs: &[SpectralPoint],
    tol: f64,
) -> Result<PropertyEntry> {
    let s3 = sigma3();
    let mut worst = WorstCase::new();
    for z in zs {
        let s = s_matrix(t, *z)?.s;
        let s_reflected = s_matrix(t, z.reflected())?.s;
        worst.update((s3 * s.conj() * s3).dist(&s_reflected), z.z);
    }
    Ok(worst.finish(tol))
}

/// Largest operator norm of `S(z)` in the standard inner product of C^2,
/// together with the point where it is attained.
pub fn max_standard_norm(t: &ComplexMatrix2, zs: &[SpectralPoint]) -> Result<(f64, C64)> {
    let mut best = (0.0, c(0.0, 0.0));
    for (k, z) in zs.iter().enumerate() {
        let norm = s_matrix(t, *z)?.s.op_norm();
        if k == 0 || norm > best.0 {
            best = (norm, z.z);
        }
    }
    Ok(best)
}

pub fn standard_contraction_norm(t: &ComplexMatrix2, zs: &[SpectralPoint]) -> Result<f64> {
    Ok(max_standard_norm(t, zs)?.0)
}

fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    if steps <= 1 {
        return vec![lo];
    }
    let h = (hi - lo) / (steps - 1) as f64;
    (0..steps)
        .map(|k| {
            if k == steps - 1 {
                hi
            } else {
                lo + h * k as f64
            }
        })
        .collect()
}

/// Rectangular grid, row-major: imaginary part in the outer loop (ascending),
/// real part in the inner loop (ascending).
pub fn grid(
    re_min: f64,
    re_max: f64,
    im_min: f64,
    im_max: f64,
    steps: usize,
) -> Result<Vec<SpectralPoint>> {
    let res = linspace(re_min, re_max, steps);
    linspace(im_min, im_max, steps)
        .into_iter()
        .flat_map(|y| res.iter().map(move |&x| SpectralPoint::new(x, y)))
        .collect()
}

/// The 7x7 grid `Re z in [-3, 3]`, `Im z in [-3, -0.1]`.
pub fn standard_grid() -> Vec<SpectralPoint> {
    grid(-3.0, 3.0, -3.0, -0.1, 7).expect("standard grid lies in the lower half-plane")
}

/// Boundary points `delta` used alongside the interior grid. `delta = 0` is
/// left out: the Krein-von Neumann endpoint has a pole there.
pub fn real_axis_samples() -> Vec<SpectralPoint> {
    [-3.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0]
        .iter()
        .map(|&d| SpectralPoint::real(d).expect("real point"))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub cond_a: PropertyEntry,
    pub cond_b: PropertyEntry,
    /// Condition (c) at the fixed witness `z = 1 - i`.
    pub cond_c: PropertyEntry,
    /// Condition (d) at the fixed witness `z = 1 - i`.
    pub cond_d: PropertyEntry,
    pub pt_criterion: PropertyEntry,
    pub cond_c_sweep: PropertyEntry,
    pub cond_d_sweep: PropertyEntry,
}

impl PropertyReport {
    /// Conditions (a)-(d), witnesses and sweeps.
    pub fn characteristic_pass(&self) -> bool {
        self.cond_a.pass
            && self.cond_b.pass
            && self.cond_c.pass
            && self.cond_d.pass
            && self.cond_c_sweep.pass
            && self.cond_d_sweep.pass
    }
}

/// Runs every check on the given interior grid; (b) and (d) additionally
/// use `boundary` points on the real axis.
pub fn property_report_on(
    t: &ComplexMatrix2,
    p: &KreinMetricParams,
    interior: &[SpectralPoint],
    boundary: &[SpectralPoint],
    tol: f64,
) -> Result<PropertyReport> {
    let extended: Vec<SpectralPoint> = interior.iter().chain(boundary).copied().collect();
    let witness = SpectralPoint::from_complex(WITNESS_Z)?;
    Ok(PropertyReport {
        cond_a: check_condition_a(t, p, interior, tol)?,
        cond_b: check_condition_b(t, p, &extended, tol)?,
        cond_c: check_condition_c(t, p, witness, tol)?,
        cond_d: check_condition_d(t, p.xi(), witness, tol)?,
        pt_criterion: check_pt_criterion(t, interior, tol)?,
        cond_c_sweep: check_condition_c_sweep(t, p, interior, tol)?,
        cond_d_sweep: check_condition_d_sweep(t, p.xi(), &extended, tol)?,
    })
}

/// [`property_report_on`] with the standard grid and real-axis samples.
pub fn property_report(
    t: &ComplexMatrix2,
    p: &KreinMetricParams,
    tol: f64,
) -> Result<PropertyReport> {
    property_report_on(t, p, &standard_grid(), &real_axis_samples(), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{sigma1, sigma2};
    use crate::extension::t_from_betas;

    fn pt(re: f64, im: f64) -> SpectralPoint {
        SpectralPoint::new(re, im).unwrap()
    }

    #[test]
    fn spectral_point_validation() {
        assert!(matches!(
            SpectralPoint::new(0.0, 0.5),
            Err(Error::UpperHalfPlane { .. })
        ));
        assert!(SpectralPoint::new(f64::NAN, -1.0).is_err());
        assert!(SpectralPoint::real(2.0).unwrap().z().im == 0.0);
        assert_eq!(pt(1.0, -2.0).reflected().z(), c(-1.0, -2.0));
    }

    #[test]
    fn friedrichs_endpoint_is_identity() {
        for z in standard_grid() {
            let s = s_matrix(&ComplexMatrix2::zero(), z).unwrap();
            assert_eq!(s.s, ComplexMatrix2::identity());
            assert_eq!(s.condition_number, 1.0);
        }
    }

    #[test]
    fn krein_endpoint_is_minus_identity() {
        let t = ComplexMatrix2::identity().scale_re(0.5);
        for z in standard_grid() {
            let s = s_matrix(&t, z).unwrap().s;
            assert!(s.dist(&(-ComplexMatrix2::identity())) < 1e-14);
        }
    }

    #[test]
    fn quarter_identity_vanishes_at_minus_i() {
        let t = ComplexMatrix2::identity().scale_re(0.25);
        let s = s_matrix(&t, pt(0.0, -1.0)).unwrap();
        assert_eq!(s.s, ComplexMatrix2::zero());
        assert_eq!(s.condition_number, 1.0);
    }

    #[test]
    fn singular_denominator_is_reported() {
        // T = I: denominator I - 2(1 - iz) vanishes at z = -i/2.
        let err = s_matrix(&ComplexMatrix2::identity(), pt(0.0, -0.5)).unwrap_err();
        assert!(matches!(err, Error::Singular { .. }));
        // Krein endpoint at z = 0.
        let t = ComplexMatrix2::identity().scale_re(0.5);
        assert!(s_matrix(&t, SpectralPoint::real(0.0).unwrap()).is_err());
    }

    #[test]
    fn zero_range_endpoints() {
        for z in standard_grid() {
            let e = ExtensionParams::new(0.0, 0.0, 1.3, 0.4).unwrap();
            let s = s_matrix_zero_range(&e, z).unwrap().s;
            assert!(s.dist(&ComplexMatrix2::identity()) < 1e-14);
            let e = ExtensionParams::new(0.5, 0.0, -0.3, 2.0).unwrap();
            let s = s_matrix_zero_range(&e, z).unwrap().s;
            assert!(s.dist(&(-ComplexMatrix2::identity())) < 1e-14);
        }
    }

    #[test]
    fn zero_range_matches_generic() {
        let e = ExtensionParams::new(0.21, -0.13, 1.7, 4.1).unwrap();
        let t = t_from_betas(&e);
        for z in standard_grid().into_iter().chain(real_axis_samples()) {
            let a = s_matrix(&t, z).unwrap().s;
            let b = s_matrix_zero_range(&e, z).unwrap().s;
            assert!(a.dist(&b) < 1e-12, "{z:?}");
        }
    }

    #[test]
    fn t_from_s_examples() {
        let z = pt(0.0, -2.0);
        let t = t_from_s(&ComplexMatrix2::identity(), z).unwrap();
        assert_eq!(t, ComplexMatrix2::zero());
        assert!(matches!(
            t_from_s(
                &ComplexMatrix2::identity(),
                SpectralPoint::real(1.0).unwrap()
            ),
            Err(Error::OnRealAxis { .. })
        ));
        // S = theta(z) I makes the shifted matrix vanish.
        let s = ComplexMatrix2::scalar(theta(z.z()));
        assert!(matches!(t_from_s(&s, z), Err(Error::Singular { .. })));
    }

    #[test]
    fn t_from_s_round_trip_and_independence() {
        let e = ExtensionParams::new(0.3, 0.12, -1.1, 0.7).unwrap();
        let t = t_from_betas(&e);
        let zs = [pt(0.0, -1.0), pt(0.0, -2.0), pt(1.0, -1.0), pt(-0.5, -0.3)];
        let recovered: Vec<_> = zs
            .iter()
            .map(|z| t_from_s(&s_matrix(&t, *z).unwrap().s, *z).unwrap())
            .collect();
        for r in &recovered {
            assert!(r.dist(&t) < 1e-12);
            assert!(r.dist(&recovered[0]) < 1e-12);
        }
    }

    #[test]
    fn left_and_right_quotients_agree() {
        let e = ExtensionParams::new(0.1, 0.05, 2.0, 5.5).unwrap();
        let t = t_from_betas(&e);
        for z in standard_grid() {
            let right = s_matrix(&t, z).unwrap().s;
            let left = s_matrix_left(&t, z).unwrap();
            assert!(right.dist(&left) < 1e-12);
        }
    }

    #[test]
    fn condition_a_examples() {
        let grid = grid(-2.0, 2.0, -2.0, -0.2, 5).unwrap();
        let p = KreinMetricParams::new(0.0, 1.0).unwrap();
        let r = check_condition_a(&ComplexMatrix2::zero(), &p, &grid, 1e-10).unwrap();
        assert!(r.pass && r.residual == 0.0);

        let e = ExtensionParams::new(0.25, 0.2, 1.0, 0.0).unwrap();
        let r = check_condition_a(&t_from_betas(&e), &e.metric, &grid, 1e-10).unwrap();
        assert!(r.pass, "{r:?}");

        let e = ExtensionParams::new(0.25, 0.3, 1.0, 0.0).unwrap();
        let r = check_condition_a(&t_from_betas(&e), &e.metric, &grid, 1e-10).unwrap();
        assert!(!r.pass && r.residual > 1e-6);
        assert!(grid.iter().any(|z| z.z() == r.witness_z));

        let on_axis = [SpectralPoint::real(1.0).unwrap()];
        assert!(check_condition_a(&ComplexMatrix2::zero(), &p, &on_axis, 1e-10).is_err());
    }

    #[test]
    fn condition_b_examples() {
        let p = KreinMetricParams::new(0.8, -0.6).unwrap();
        let zs = standard_grid();
        let r = check_condition_b(&ComplexMatrix2::zero(), &p, &zs, 1e-10).unwrap();
        assert_eq!(r.residual, 0.0);

        // On the imaginary axis -conj z = z, so (b) says G S(z) is Hermitian.
        let e = ExtensionParams::new(0.2, 0.1, -0.6, 0.8).unwrap();
        let t = t_from_betas(&e);
        let g = metric(&p);
        for s in [0.3, 1.0, 2.5] {
            let z = pt(0.0, -s);
            let gs = g * s_matrix(&t, z).unwrap().s;
            assert!(gs.hermiticity_defect() < 1e-12);
        }
        let r = check_condition_b(&t, &p, &zs, 1e-10).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn condition_c_examples() {
        let p = KreinMetricParams::new(0.0, 1.0).unwrap();
        let z = pt(1.0, -1.0);
        assert!(
            check_condition_c(&ComplexMatrix2::zero(), &p, z, 1e-10)
                .unwrap()
                .pass
        );
        let e = ExtensionParams::new(0.25, 0.2, 1.0, 0.0).unwrap();
        assert!(
            check_condition_c(&t_from_betas(&e), &e.metric, z, 1e-10)
                .unwrap()
                .pass
        );
        let generic =
            ComplexMatrix2::from_entries(c(0.3, 0.1), c(-0.2, 0.4), c(0.05, 0.0), c(0.1, -0.2));
        assert!(!check_condition_c(&generic, &p, z, 1e-10).unwrap().pass);
        assert!(matches!(
            check_condition_c(&generic, &p, pt(0.0, -1.0), 1e-10),
            Err(Error::ZeroRealPart { .. })
        ));
    }

    #[test]
    fn condition_d_examples() {
        let z = pt(1.0, -1.0);
        assert!(
            check_condition_d(&ComplexMatrix2::zero(), 0.3, z, 1e-10)
                .unwrap()
                .pass
        );
        let e = ExtensionParams::new(0.1, 0.3, 0.5, 2.2).unwrap();
        let zs: Vec<_> = standard_grid()
            .into_iter()
            .chain(real_axis_samples())
            .collect();
        assert!(
            check_condition_d_sweep(&t_from_betas(&e), 2.2, &zs, 1e-10)
                .unwrap()
                .pass
        );
        let r = check_condition_d(&sigma2(), 0.0, z, 1e-10).unwrap();
        assert!(!r.pass);
    }

    #[test]
    fn pt_criterion_examples() {
        let zs = standard_grid();
        assert!(
            check_pt_criterion(&ComplexMatrix2::zero(), &zs, 1e-10)
                .unwrap()
                .pass
        );
        let t = ComplexMatrix2::from_entries(c(0.2, 0.0), c(0.0, 0.1), c(0.0, 0.3), c(-0.1, 0.0));
        assert!(crate::pt_krein::is_pt_symmetric(&t, 1e-12));
        assert!(check_pt_criterion(&t, &zs, 1e-10).unwrap().pass);
        assert!(!check_pt_criterion(&sigma1(), &zs, 1e-10).unwrap().pass);
    }

    #[test]
    fn contraction_examples() {
        let zs: Vec<_> = standard_grid()
            .into_iter()
            .chain(real_axis_samples())
            .collect();
        assert_eq!(
            standard_contraction_norm(&ComplexMatrix2::zero(), &zs).unwrap(),
            1.0
        );
        for b0 in [0.0, 0.1, 0.25, 0.4, 0.5] {
            let t = ComplexMatrix2::identity().scale_re(b0);
            let n = standard_contraction_norm(&t, &zs).unwrap();
            assert!(n <= 1.0 + 1e-10, "{b0} {n}");
        }
        let e = ExtensionParams::new(0.25, 0.2, 1.0, 0.0).unwrap();
        assert!(standard_contraction_norm(&t_from_betas(&e), &zs).unwrap() > 1.0);
    }

    #[test]
    fn grid_layout_is_row_major() {
        let g = grid(-1.0, 1.0, -2.0, 0.0, 3).unwrap();
        let zs: Vec<_> = g.iter().map(|p| (p.z().re, p.z().im)).collect();
        assert_eq!(zs[0], (-1.0, -2.0));
        assert_eq!(zs[1], (0.0, -2.0));
        assert_eq!(zs[3], (-1.0, -1.0));
        assert_eq!(zs[8], (1.0, 0.0));
        assert_eq!(standard_grid().len(), 49);
        assert!(grid(0.0, 1.0, -1.0, 1.0, 2).is_err());
    }
}
