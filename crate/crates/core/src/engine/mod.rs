//! Mamdani inference: fuzzification, rule firing, min-clipping, max-aggregation
//! and defuzzification, with a trace of every intermediate result.

mod infer;
mod system;

pub use infer::{
    fire_rules, fuzzify, infer, EngineError, FiredRule, FuzzifiedInput, InferOptions,
    InferenceTrace, OutputTrace, DEFAULT_REPORT_RESOLUTION,
};
pub use system::{
    build_system, is_identifier, Clause, FuzzySet, FuzzySystem, LinguisticVariable, Role, Rule,
    RulePart, Subject, Violation, ViolationCode, KEYWORDS,
};
