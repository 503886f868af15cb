//! Synthetic focus traces for exercising the tracking baseline.
//!
//! No measured trace data ships with this crate, so fixtures come from a
//! simple rational lens model. With `s = zoom / zoom_max` in `[0, 1]` and
//! `u = 1 / distance` (metres, `u = 0` at infinity):
//!
//! ```text
//! focus(s, u) = base + linear * u + quadratic * s^2 * u^2
//! ```
//!
//! At the wide end (`s = 0`) traces are affine in `u`, so the start ratio
//! picks the right object distance exactly; toward the tele end the `u^2`
//! term bends traces apart and interpolating between stored traces drifts.

use super::tracking::{FocusTraceTable, Trace, TrackingError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticLens {
    pub base: f64,
    pub linear: f64,
    pub quadratic: f64,
    /// Zoom positions run `0, 1, ..., zoom_steps`.
    pub zoom_steps: usize,
}

impl Default for QuadraticLens {
    fn default() -> Self {
        QuadraticLens {
            base: 40.0,
            linear: 100.0,
            quadratic: 300.0,
            zoom_steps: 20,
        }
    }
}

impl QuadraticLens {
    pub fn zoom_positions(&self) -> Vec<f64> {
        (0..=self.zoom_steps).map(|z| z as f64).collect()
    }

    pub fn focus(&self, zoom_pos: f64, inv_distance: f64) -> f64 {
        let s = zoom_pos / self.zoom_steps as f64;
        self.base + self.linear * inv_distance + self.quadratic * s * s * inv_distance * inv_distance
    }

    pub fn trace(&self, inv_distance: f64) -> Vec<f64> {
        self.zoom_positions()
            .into_iter()
            .map(|z| self.focus(z, inv_distance))
            .collect()
    }

    /// Table with one trace per inverse distance, which must be ascending
    /// and non-negative.
    pub fn table(&self, inv_distances: &[f64]) -> Result<FocusTraceTable, TrackingError> {
        let traces = inv_distances
            .iter()
            .map(|&u| Trace {
                label: distance_label(u),
                focus: self.trace(u),
            })
            .collect();
        FocusTraceTable::new(self.zoom_positions(), traces)
    }
}

fn distance_label(inv_distance: f64) -> String {
    if inv_distance == 0.0 {
        "inf".to_string()
    } else {
        let d = (1.0 / inv_distance * 1e4).round() / 1e4;
        format!("{d}m")
    }
}

/// `u = k / 8` for `k = 0..=8`: infinity down to 1 m.
pub fn dense_inv_distances() -> Vec<f64> {
    (0..=8).map(|k| k as f64 / 8.0).collect()
}

/// Infinity, 2 m and 1 m.
pub fn sparse_inv_distances() -> Vec<f64> {
    vec![0.0, 0.5, 1.0]
}

/// Object distance (1/0.3 m) that falls between stored traces in both tables.
pub const PROBE_INV_DISTANCE: f64 = 0.3;
