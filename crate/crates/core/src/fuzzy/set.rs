use super::{Degree, FuzzyError, MembershipFunction, Universe};

/// A consequent set after min-implication: `min(base(x), cap)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClippedSet {
    base: MembershipFunction,
    cap: Degree,
    universe: Universe,
}

impl ClippedSet {
    pub fn base(&self) -> &MembershipFunction {
        &self.base
    }

    pub fn cap(&self) -> Degree {
        self.cap
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn membership(&self, x: f64) -> Degree {
        self.base.eval(x).min(self.cap)
    }
}

pub fn clip(mf: MembershipFunction, strength: Degree, universe: Universe) -> ClippedSet {
    ClippedSet {
        base: mf,
        cap: strength,
        universe,
    }
}

/// Pointwise maximum of clipped sets sharing one universe.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregatedSet {
    universe: Universe,
    parts: Vec<ClippedSet>,
}

impl AggregatedSet {
    pub fn empty(universe: Universe) -> Self {
        AggregatedSet {
            universe,
            parts: Vec::new(),
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn parts(&self) -> &[ClippedSet] {
        &self.parts
    }

    pub fn membership(&self, x: f64) -> Degree {
        self.parts
            .iter()
            .fold(Degree::ZERO, |acc, p| acc.max(p.membership(x)))
    }

    /// Closed interval covering the support of every part with positive cap,
    /// intersected with the universe. `None` when no part can be nonzero.
    pub fn support(&self) -> Option<(f64, f64)> {
        self.parts
            .iter()
            .filter(|p| p.cap.value() > 0.0)
            .map(|p| p.base.support())
            .fold(None, |acc: Option<(f64, f64)>, (lo, hi)| match acc {
                None => Some((lo, hi)),
                Some((l, h)) => Some((l.min(lo), h.max(hi))),
            })
            .map(|(lo, hi)| (lo.max(self.universe.lo()), hi.min(self.universe.hi())))
    }
}

/// Combines clipped consequents by pointwise max. Every part must live on
/// `universe`.
pub fn aggregate(universe: Universe, parts: Vec<ClippedSet>) -> Result<AggregatedSet, FuzzyError> {
    if let Some(p) = parts.iter().find(|p| p.universe != universe) {
        return Err(FuzzyError::MixedUniverse {
            expected: universe,
            found: p.universe,
        });
    }
    Ok(AggregatedSet { universe, parts })
}

/// A discretized fuzzy set: `(z, mu)` pairs with strictly increasing `z`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSet {
    points: Vec<(f64, Degree)>,
}

impl SampledSet {
    pub fn new(points: Vec<(f64, Degree)>) -> Result<Self, FuzzyError> {
        if let Some(i) = points.iter().position(|(z, _)| !z.is_finite()) {
            return Err(FuzzyError::UnorderedSamples(i));
        }
        if let Some(i) = points.windows(2).position(|w| w[0].0 >= w[1].0) {
            return Err(FuzzyError::UnorderedSamples(i + 1));
        }
        Ok(SampledSet { points })
    }

    /// Builds from raw pairs, rejecting memberships outside `[0, 1]`.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self, FuzzyError> {
        let points = pairs
            .iter()
            .map(|&(z, mu)| Ok((z, Degree::new(mu)?)))
            .collect::<Result<Vec<_>, FuzzyError>>()?;
        SampledSet::new(points)
    }

    pub fn points(&self) -> &[(f64, Degree)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Samples `set` at `resolution` evenly spaced points over its universe.
pub fn sample(set: &AggregatedSet, resolution: usize) -> Result<SampledSet, FuzzyError> {
    let points = set
        .universe
        .grid(resolution)?
        .into_iter()
        .map(|z| (z, set.membership(z)))
        .collect();
    Ok(SampledSet { points })
}
