//! Membership functions, clipped and aggregated fuzzy sets, and defuzzification.
//!
//! Implication is `min` (clipping) and aggregation is `max`. Every type here is
//! immutable once constructed.

mod defuzz;
mod membership;
mod set;

pub use defuzz::{
    defuzz_cog, defuzz_discrete_cog, defuzz_fom, defuzz_mom, defuzzify, fom_of_samples,
    mom_of_samples, Method, DEFAULT_RESOLUTION, MAX_TOLERANCE,
};
pub use membership::{eval_trapezoidal, eval_triangular, MembershipFunction};
pub use set::{aggregate, clip, sample, AggregatedSet, ClippedSet, SampledSet};

use std::fmt;

use thiserror::Error;

/// Errors raised by fuzzy-set construction and defuzzification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("degree {0} is outside [0, 1]")]
    InvalidDegree(f64),
    #[error("invalid universe [{lo}, {hi}]: bounds must be finite with lo < hi")]
    InvalidUniverse { lo: f64, hi: f64 },
    #[error("invalid membership parameters {0:?}: expected non-decreasing finite values with a non-empty support")]
    InvalidParameters(Vec<f64>),
    #[error("cannot aggregate sets over different universes ({expected} vs {found})")]
    MixedUniverse { expected: Universe, found: Universe },
    #[error("resolution must be at least 2, got {0}")]
    InvalidResolution(usize),
    #[error("sample coordinates must be finite and strictly increasing (index {0})")]
    UnorderedSamples(usize),
    #[error("output set is empty: no membership to defuzzify")]
    EmptyOutput,
}

/// A membership degree in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Degree(f64);

impl Degree {
    pub const ZERO: Degree = Degree(0.0);
    pub const ONE: Degree = Degree(1.0);

    pub fn new(value: f64) -> Result<Self, FuzzyError> {
        if (0.0..=1.0).contains(&value) {
            Ok(Degree(value))
        } else {
            Err(FuzzyError::InvalidDegree(value))
        }
    }

    /// Clamps into `[0, 1]`; NaN maps to zero.
    pub fn saturating(value: f64) -> Self {
        if value.is_nan() {
            Degree(0.0)
        } else {
            Degree(value.clamp(0.0, 1.0))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn min(self, other: Degree) -> Degree {
        if other.0 < self.0 {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Degree) -> Degree {
        if other.0 > self.0 {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// A bounded universe of discourse `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Universe {
    lo: f64,
    hi: f64,
}

impl Universe {
    pub fn new(lo: f64, hi: f64) -> Result<Self, FuzzyError> {
        if lo.is_finite() && hi.is_finite() && lo < hi {
            Ok(Universe { lo, hi })
        } else {
            Err(FuzzyError::InvalidUniverse { lo, hi })
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    /// `n` evenly spaced points from `lo` to `hi`, both included exactly.
    pub fn grid(&self, n: usize) -> Result<Vec<f64>, FuzzyError> {
        if n < 2 {
            return Err(FuzzyError::InvalidResolution(n));
        }
        let last = (n - 1) as f64;
        let span = self.hi - self.lo;
        Ok((0..n)
            .map(|i| {
                if i == n - 1 {
                    self.hi
                } else {
                    self.lo + span * (i as f64 / last)
                }
            })
            .collect())
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
