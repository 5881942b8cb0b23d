//! Per-point scattering records and their CSV/JSON rendering.

use serde::Serialize;

use crate::clifford::{metric, KreinMetricParams};
use crate::extension::ExtensionParams;
use crate::matrix::{ComplexMatrix2, C64};
use crate::scattering::{metric_defect, s_matrix, s_matrix_zero_range, SpectralPoint};

pub const CSV_HEADER: &str =
    "z_re,z_im,s11_re,s11_im,s12_re,s12_im,s21_re,s21_im,s22_re,s22_im,std_norm,metric_defect";

/// What the scattering matrix is computed from.
#[derive(Debug, Clone, Copy)]
pub enum Source {
    Params(ExtensionParams),
    Matrix {
        t: ComplexMatrix2,
        metric: KreinMetricParams,
    },
}

impl Source {
    pub fn metric_params(&self) -> KreinMetricParams {
        match self {
            Source::Params(e) => e.metric,
            Source::Matrix { metric, .. } => *metric,
        }
    }
}

/// One grid point. Entries are `None` on rows flagged as singular.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRecord {
    pub z_re: f64,
    pub z_im: f64,
    pub s11: Option<C64>,
    pub s12: Option<C64>,
    pub s21: Option<C64>,
    pub s22: Option<C64>,
    pub std_norm: Option<f64>,
    pub metric_defect: Option<f64>,
    pub singular: bool,
}

pub fn evaluate(source: &Source, zs: &[SpectralPoint]) -> Vec<SweepRecord> {
    let g = metric(&source.metric_params());
    zs.iter()
        .map(|&z| {
            let s = match source {
                Source::Params(e) => s_matrix_zero_range(e, z),
                Source::Matrix { t, .. } => s_matrix(t, z),
            }
            .ok()
            .map(|ev| ev.s)
            .filter(|s| s.is_finite());
            let entry = |i, j| s.map(|s| s.get(i, j));
            SweepRecord {
                z_re: z.z().re,
                z_im: z.z().im,
                s11: entry(0, 0),
                s12: entry(0, 1),
                s21: entry(1, 0),
                s22: entry(1, 1),
                std_norm: s.map(|s| s.op_norm()),
                metric_defect: s.map(|s| metric_defect(&s, &g)),
                singular: s.is_none(),
            }
        })
        .collect()
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn to_csv(records: &[SweepRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let mut fields = vec![num(r.z_re), num(r.z_im)];
        for x in [r.s11, r.s12, r.s21, r.s22] {
            let x = x.unwrap_or(C64::new(f64::NAN, f64::NAN));
            fields.push(num(x.re));
            fields.push(num(x.im));
        }
        fields.push(num(r.std_norm.unwrap_or(f64::NAN)));
        fields.push(num(r.metric_defect.unwrap_or(f64::NAN)));
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    let singular = records.iter().filter(|r| r.singular).count();
    out.push_str(&format!(
        "# points={} singular={}\n",
        records.len(),
        singular
    ));
    out
}
