//! The auto-zoom reference controller and the conventional zoom-tracking
//! baseline that interpolates between stored focus traces.

pub mod lens;
pub mod tracking;

use std::sync::OnceLock;

use crate::dsl::{parse_system, SystemSource};
use crate::engine::{infer, EngineError, FuzzySystem, InferOptions};
use crate::fuzzy::Method;

/// Text of the bundled reference system.
pub const AUTO_ZOOM_FZS: &str = include_str!("../../fixtures/auto_zoom.fzs");

pub const DISTANCE: &str = "distance";
pub const ZOOM: &str = "zoom";

/// The bundled auto-zoom controller, parsed once.
pub fn reference_system() -> &'static FuzzySystem {
    static SYSTEM: OnceLock<FuzzySystem> = OnceLock::new();
    SYSTEM.get_or_init(|| {
        parse_system(&SystemSource::new("auto_zoom.fzs", AUTO_ZOOM_FZS))
            .unwrap_or_else(|d| panic!("bundled auto_zoom.fzs is invalid: {d:?}"))
    })
}

/// Zoom factor for an object at `distance_cm`; negative zooms out.
pub fn auto_zoom(distance_cm: f64, method: Method, resolution: usize) -> Result<f64, EngineError> {
    let trace = infer(
        reference_system(),
        &[(DISTANCE, distance_cm)],
        InferOptions::new(method, resolution),
    )?;
    Ok(trace.outputs[0].value)
}
