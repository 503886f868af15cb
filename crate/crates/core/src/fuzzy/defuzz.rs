use std::fmt;
use std::str::FromStr;

use super::{sample, AggregatedSet, FuzzyError, SampledSet};

/// Grid size used for continuous defuzzification unless overridden.
pub const DEFAULT_RESOLUTION: usize = 2001;

/// Absolute tolerance when comparing a sample to the maximum membership.
pub const MAX_TOLERANCE: f64 = 1e-9;

/// Defuzzification method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    /// Centroid by trapezoidal quadrature.
    #[default]
    Cog,
    /// Mean of the argmax set.
    Mom,
    /// Lowest coordinate of the argmax set.
    Fom,
    /// `Σ z·μ / Σ μ` over the sample points, no quadrature weights.
    DiscreteCog,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Cog, Method::Mom, Method::Fom, Method::DiscreteCog];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Cog => "cog",
            Method::Mom => "mom",
            Method::Fom => "fom",
            Method::DiscreteCog => "discrete-cog",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cog" | "centroid" => Ok(Method::Cog),
            "mom" => Ok(Method::Mom),
            "fom" => Ok(Method::Fom),
            "discrete-cog" | "discrete_cog" => Ok(Method::DiscreteCog),
            other => Err(format!(
                "unknown defuzzification method `{other}` (expected cog, mom, fom or discrete-cog)"
            )),
        }
    }
}

/// Centroid of the sampled curve using the trapezoidal rule.
fn trapezoid_centroid(samples: &SampledSet) -> Result<f64, FuzzyError> {
    let mut area = 0.0;
    let mut moment = 0.0;
    for w in samples.points().windows(2) {
        let (z0, m0) = (w[0].0, w[0].1.value());
        let (z1, m1) = (w[1].0, w[1].1.value());
        let h = 0.5 * (z1 - z0);
        area += h * (m0 + m1);
        moment += h * (z0 * m0 + z1 * m1);
    }
    if area <= 0.0 {
        return Err(FuzzyError::EmptyOutput);
    }
    Ok(moment / area)
}

/// Clamps `z` into the universe and rounds it to `1e-12` of the universe
/// width. Quadrature error is far larger than that step; the rounding only
/// removes summation noise, so a symmetric set lands exactly on its axis.
/// Rounding is monotone, so monotone control surfaces stay monotone.
fn settle(set: &AggregatedSet, z: f64) -> f64 {
    let (lo, hi) = (set.universe().lo(), set.universe().hi());
    let step = (hi - lo) * 1e-12;
    // `+ 0.0` turns a rounded -0 into +0.
    ((z / step).round() * step + 0.0).clamp(lo, hi)
}

/// Centroid `∫μz dz / ∫μ dz` at the given quadrature resolution.
pub fn defuzz_cog(set: &AggregatedSet, resolution: usize) -> Result<f64, FuzzyError> {
    let samples = sample(set, resolution)?;
    trapezoid_centroid(&samples).map(|z| settle(set, z))
}

/// Tabular centroid `Σ zᵢμᵢ / Σ μᵢ`.
pub fn defuzz_discrete_cog(samples: &SampledSet) -> Result<f64, FuzzyError> {
    let (num, den) = samples
        .points()
        .iter()
        .fold((0.0, 0.0), |(n, d), (z, mu)| (n + z * mu.value(), d + mu.value()));
    if den <= 0.0 {
        return Err(FuzzyError::EmptyOutput);
    }
    Ok(num / den)
}

fn argmax(samples: &SampledSet) -> Result<impl Iterator<Item = f64> + '_, FuzzyError> {
    let max = samples
        .points()
        .iter()
        .map(|(_, mu)| mu.value())
        .fold(0.0_f64, f64::max);
    if max <= 0.0 {
        return Err(FuzzyError::EmptyOutput);
    }
    Ok(samples
        .points()
        .iter()
        .filter(move |(_, mu)| (mu.value() - max).abs() <= MAX_TOLERANCE)
        .map(|(z, _)| *z))
}

/// Mean of the sample coordinates whose membership equals the maximum.
pub fn mom_of_samples(samples: &SampledSet) -> Result<f64, FuzzyError> {
    let (sum, n) = argmax(samples)?.fold((0.0, 0usize), |(s, n), z| (s + z, n + 1));
    Ok(sum / n as f64)
}

/// Smallest sample coordinate whose membership equals the maximum.
pub fn fom_of_samples(samples: &SampledSet) -> Result<f64, FuzzyError> {
    argmax(samples)?.next().ok_or(FuzzyError::EmptyOutput)
}

pub fn defuzz_mom(set: &AggregatedSet, resolution: usize) -> Result<f64, FuzzyError> {
    mom_of_samples(&sample(set, resolution)?).map(|z| settle(set, z))
}

pub fn defuzz_fom(set: &AggregatedSet, resolution: usize) -> Result<f64, FuzzyError> {
    fom_of_samples(&sample(set, resolution)?)
}

/// Dispatches to the selected method. `DiscreteCog` uses the same uniform
/// grid that the continuous methods sample and is settled like COG.
pub fn defuzzify(set: &AggregatedSet, method: Method, resolution: usize) -> Result<f64, FuzzyError> {
    match method {
        Method::Cog => defuzz_cog(set, resolution),
        Method::Mom => defuzz_mom(set, resolution),
        Method::Fom => defuzz_fom(set, resolution),
        Method::DiscreteCog => defuzz_discrete_cog(&sample(set, resolution)?).map(|z| settle(set, z)),
    }
}
