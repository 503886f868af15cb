//! Mamdani fuzzy inference with a small rule language.
//!
//! - [`fuzzy`]: membership functions, clipping, aggregation, defuzzification.
//! - [`engine`]: validated systems and the inference pipeline.
//! - [`dsl`]: the `.fzs` text format (parser, diagnostics, formatter).
//! - [`zoom`]: the auto-zoom reference controller and the look-up-table
//!   zoom-tracking baseline.

pub mod dsl;
pub mod engine;
pub mod fuzzy;
pub mod zoom;
