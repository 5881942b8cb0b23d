//! Dense 2x2 complex matrices.
//!
//! Everything on the deficiency space is a 2x2 complex matrix, so this type
//! carries the whole crate. All spectral quantities (operator norm, singular
//! values, Hermitian eigenvalues) are computed in closed form.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Column vector in C^2.
pub type ComplexVector2 = [C64; 2];

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

pub fn is_finite_scalar(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Euclidean norm on C^2.
pub fn vector_norm(v: &ComplexVector2) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
}

#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexMatrix2 {
    rows: [[C64; 2]; 2],
}

impl ComplexMatrix2 {
    /// Builds a matrix without validating its entries.
    pub const fn new(rows: [[C64; 2]; 2]) -> Self {
        Self { rows }
    }

    /// Builds a matrix, rejecting NaN and infinite entries.
    pub fn try_new(rows: [[C64; 2]; 2]) -> Result<Self> {
        let m = Self { rows };
        if m.is_finite() {
            Ok(m)
        } else {
            Err(Error::NonFinite("matrix entry"))
        }
    }

    pub const fn from_entries(a: C64, b: C64, c: C64, d: C64) -> Self {
        Self::new([[a, b], [c, d]])
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self::from_entries(re(a), re(b), re(c), re(d))
    }

    pub const fn zero() -> Self {
        Self::new([[ZERO, ZERO], [ZERO, ZERO]])
    }

    pub const fn identity() -> Self {
        Self::new([[ONE, ZERO], [ZERO, ONE]])
    }

    pub fn scalar(z: C64) -> Self {
        Self::from_entries(z, ZERO, ZERO, z)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.rows[row][col]
    }

    pub fn rows(&self) -> [[C64; 2]; 2] {
        self.rows
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|z| is_finite_scalar(*z))
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> [C64; 4] {
        [
            self.rows[0][0],
            self.rows[0][1],
            self.rows[1][0],
            self.rows[1][1],
        ]
    }

    fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        let r = &self.rows;
        Self::from_entries(f(r[0][0]), f(r[0][1]), f(r[1][0]), f(r[1][1]))
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> Self {
        let r = &self.rows;
        Self::from_entries(r[0][0], r[1][0], r[0][1], r[1][1])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn trace(&self) -> C64 {
        self.rows[0][0] + self.rows[1][1]
    }

    pub fn det(&self) -> C64 {
        self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]
    }

    pub fn scale(&self, z: C64) -> Self {
        self.map(|x| x * z)
    }

    pub fn scale_re(&self, x: f64) -> Self {
        self.map(|y| y * x)
    }

    /// Inverse via the adjugate. Returns `None` when the determinant vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det == ZERO || !is_finite_scalar(det) {
            return None;
        }
        let r = &self.rows;
        let inv_det = det.inv();
        Some(Self::from_entries(r[1][1], -r[0][1], -r[1][0], r[0][0]).scale(inv_det))
    }

    pub fn apply(&self, v: &ComplexVector2) -> ComplexVector2 {
        let r = &self.rows;
        [
            r[0][0] * v[0] + r[0][1] * v[1],
            r[1][0] * v[0] + r[1][1] * v[1],
        ]
    }

    pub fn frobenius_norm_sqr(&self) -> f64 {
        self.entries().iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_norm_sqr().sqrt()
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Singular values `(largest, smallest)`.
    ///
    /// The squared singular values are the roots of
    /// `s^2 - |M|_F^2 s + |det M|^2`; the smaller one is recovered from the
    /// product `s_max * s_min = |det M|` to avoid cancellation.
    pub fn singular_values(&self) -> (f64, f64) {
        // Eigenvalues of M*M = [[p, r], [r*, q]]; the gap is formed without
        // cancellation so near-scalar inputs stay accurate.
        let [[a, b], [cc, dd]] = self.rows;
        let p = a.norm_sqr() + cc.norm_sqr();
        let q = b.norm_sqr() + dd.norm_sqr();
        let r = a.conj() * b + cc.conj() * dd;
        let gap = (p - q).hypot(2.0 * r.norm());
        let d = self.det().norm();
        let s_max = ((p + q + gap) / 2.0).sqrt();
        let s_min = if s_max > 0.0 { d / s_max } else { 0.0 };
        (s_max, s_min)
    }

    /// Operator (spectral) norm.
    pub fn op_norm(&self) -> f64 {
        self.singular_values().0
    }

    /// Condition number in the operator norm; infinite for singular input.
    pub fn condition_number(&self) -> f64 {
        let (s_max, s_min) = self.singular_values();
        if s_max == 0.0 {
            return f64::INFINITY;
        }
        if s_min == 0.0 {
            f64::INFINITY
        } else {
            s_max / s_min
        }
    }

    /// `||M - M*||`.
    pub fn hermiticity_defect(&self) -> f64 {
        (*self - self.adjoint()).op_norm()
    }

    /// Eigenvalues `(lower, upper)` of the Hermitian part `(M + M*)/2`.
    pub fn hermitian_eigenvalues(&self) -> (f64, f64) {
        let a = self.rows[0][0].re;
        let d = self.rows[1][1].re;
        let b = (self.rows[0][1] + self.rows[1][0].conj()) * 0.5;
        let mean = 0.5 * (a + d);
        let half_gap = 0.5 * (a - d);
        let radius = half_gap.hypot(b.norm());
        (mean - radius, mean + radius)
    }

    /// Distance to another matrix in operator norm.
    pub fn dist(&self, other: &Self) -> f64 {
        (*self - *other).op_norm()
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }
}

impl Default for ComplexMatrix2 {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for ComplexMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ComplexMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.rows;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            r[0][0], r[0][1], r[1][0], r[1][1]
        )
    }
}

impl Add for ComplexMatrix2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (a, b) = (&self.rows, &rhs.rows);
        Self::from_entries(
            a[0][0] + b[0][0],
            a[0][1] + b[0][1],
            a[1][0] + b[1][0],
            a[1][1] + b[1][1],
        )
    }
}

impl AddAssign for ComplexMatrix2 {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for ComplexMatrix2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ComplexMatrix2 {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|z| -z)
    }
}

impl Mul for ComplexMatrix2 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (&self.rows, &rhs.rows);
        Self::from_entries(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

impl Mul<C64> for ComplexMatrix2 {
    type Output = Self;
    fn mul(self, rhs: C64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<ComplexMatrix2> for C64 {
    type Output = ComplexMatrix2;
    fn mul(self, rhs: ComplexMatrix2) -> ComplexMatrix2 {
        rhs.scale(self)
    }
}

impl Mul<f64> for ComplexMatrix2 {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale_re(rhs)
    }
}

impl Mul<ComplexMatrix2> for f64 {
    type Output = ComplexMatrix2;
    fn mul(self, rhs: ComplexMatrix2) -> ComplexMatrix2 {
        rhs.scale_re(self)
    }
}
