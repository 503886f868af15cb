use thiserror::Error;

use super::{Clause, FuzzySystem, LinguisticVariable, Role};
use crate::fuzzy::{
    aggregate, clip, defuzzify, sample, AggregatedSet, Degree, FuzzyError, Method, SampledSet,
    DEFAULT_RESOLUTION,
};

/// Sample count for the aggregate snapshot kept in a trace.
pub const DEFAULT_REPORT_RESOLUTION: usize = 201;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("{variable} = {value} is outside the universe [{lo}, {hi}]")]
    OutOfUniverse {
        variable: String,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("input variable `{0}` is not bound")]
    MissingInput(String),
    #[error("`{0}` is not an input variable of this system")]
    UnknownInput(String),
    #[error("input `{0}` is bound more than once")]
    DuplicateInput(String),
    #[error("no rule fires for output `{0}`")]
    EmptyOutput(String),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
}

/// Degrees of every set of one variable at one crisp value.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzifiedInput {
    pub variable: String,
    pub value: f64,
    pub degrees: Vec<(String, Degree)>,
}

impl FuzzifiedInput {
    pub fn degree(&self, set: &str) -> Option<Degree> {
        self.degrees.iter().find(|(n, _)| n == set).map(|(_, d)| *d)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FiredRule {
    pub rule_id: String,
    pub strength: Degree,
    pub consequent: Clause,
}

impl FiredRule {
    pub fn fired(&self) -> bool {
        self.strength.value() > 0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InferOptions {
    pub method: Method,
    pub resolution: usize,
    pub report_resolution: usize,
}

impl Default for InferOptions {
    fn default() -> Self {
        InferOptions {
            method: Method::Cog,
            resolution: DEFAULT_RESOLUTION,
            report_resolution: DEFAULT_REPORT_RESOLUTION,
        }
    }
}

impl InferOptions {
    pub fn new(method: Method, resolution: usize) -> Self {
        InferOptions {
            method,
            resolution,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputTrace {
    pub variable: String,
    pub aggregate: AggregatedSet,
    /// Aggregate sampled at the reporting resolution.
    pub samples: SampledSet,
    pub value: f64,
}

impl OutputTrace {
    /// Re-runs defuzzification on the stored aggregate.
    pub fn recompute(&self, method: Method, resolution: usize) -> Result<f64, FuzzyError> {
        defuzzify(&self.aggregate, method, resolution)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InferenceTrace {
    pub method: Method,
    pub resolution: usize,
    pub fuzzified: Vec<FuzzifiedInput>,
    pub fired: Vec<FiredRule>,
    pub outputs: Vec<OutputTrace>,
}

impl InferenceTrace {
    pub fn output(&self, variable: &str) -> Option<f64> {
        self.outputs
            .iter()
            .find(|o| o.variable == variable)
            .map(|o| o.value)
    }
}

pub fn fuzzify(var: &LinguisticVariable, x: f64) -> Result<FuzzifiedInput, EngineError> {
    if !var.universe.contains(x) {
        return Err(EngineError::OutOfUniverse {
            variable: var.name.clone(),
            value: x,
            lo: var.universe.lo(),
            hi: var.universe.hi(),
        });
    }
    Ok(FuzzifiedInput {
        variable: var.name.clone(),
        value: x,
        degrees: var
            .sets
            .iter()
            .map(|s| (s.name.clone(), s.mf.eval(x)))
            .collect(),
    })
}

/// Evaluates every rule in declaration order. Rules with zero strength are
/// kept so callers can see which did not fire.
pub fn fire_rules(
    sys: &FuzzySystem,
    fuzzified: &[FuzzifiedInput],
) -> Result<Vec<FiredRule>, EngineError> {
    sys.rules()
        .iter()
        .map(|rule| {
            let input = fuzzified
                .iter()
                .find(|f| f.variable == rule.antecedent.variable)
                .ok_or_else(|| EngineError::MissingInput(rule.antecedent.variable.clone()))?;
            // The validated system guarantees the set exists on the variable.
            let strength = input.degree(&rule.antecedent.set).unwrap_or(Degree::ZERO);
            Ok(FiredRule {
                rule_id: rule.id.clone(),
                strength,
                consequent: rule.consequent.clone(),
            })
        })
        .collect()
}

/// Runs the full fuzzify, fire, clip, aggregate, defuzzify pipeline.
pub fn infer(
    sys: &FuzzySystem,
    inputs: &[(&str, f64)],
    options: InferOptions,
) -> Result<InferenceTrace, EngineError> {
    if options.resolution < 2 {
        return Err(FuzzyError::InvalidResolution(options.resolution).into());
    }
    for (i, (name, _)) in inputs.iter().enumerate() {
        match sys.variable(name) {
            Some(v) if v.role == Role::Input => {}
            _ => return Err(EngineError::UnknownInput(name.to_string())),
        }
        if inputs[..i].iter().any(|(n, _)| n == name) {
            return Err(EngineError::DuplicateInput(name.to_string()));
        }
    }
    let fuzzified = sys
        .inputs()
        .map(|var| {
            let x = inputs
                .iter()
                .find(|(n, _)| *n == var.name)
                .map(|(_, x)| *x)
                .ok_or_else(|| EngineError::MissingInput(var.name.clone()))?;
            fuzzify(var, x)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let fired = fire_rules(sys, &fuzzified)?;

    let outputs = sys
        .outputs()
        .map(|var| {
            let parts = fired
                .iter()
                .filter(|f| f.fired() && f.consequent.variable == var.name)
                .filter_map(|f| {
                    var.set(&f.consequent.set)
                        .map(|set| clip(set.mf, f.strength, var.universe))
                })
                .collect::<Vec<_>>();
            if parts.is_empty() {
                return Err(EngineError::EmptyOutput(var.name.clone()));
            }
            let aggregate = aggregate(var.universe, parts)?;
            let value = defuzzify(&aggregate, options.method, options.resolution).map_err(
                |e| match e {
                    FuzzyError::EmptyOutput => EngineError::EmptyOutput(var.name.clone()),
                    other => other.into(),
                },
            )?;
            let samples = sample(&aggregate, options.report_resolution)?;
            Ok(OutputTrace {
                variable: var.name.clone(),
                aggregate,
                samples,
                value,
            })
        })
        .collect::<Result<Vec<_>, EngineError>>()?;

    Ok(InferenceTrace {
        method: options.method,
        resolution: options.resolution,
        fuzzified,
        fired,
        outputs,
    })
}
