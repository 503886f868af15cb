//! The `.fzs` system description format.
//!
//! ```text
//! system auto_zoom
//!
//! input distance "cm" range 0 50 {
//!   set near tri(4, 10, 12)
//! }
//!
//! output zoom "x" range -10 10 {
//!   set default tri(-2, 0, 2)
//! }
//!
//! rule R1: IF distance IS near THEN zoom IS default
//! ```

mod diagnostic;
mod format;
mod lexer;
mod parser;

pub use diagnostic::{Code, Diagnostic, Pos, Severity};
pub use format::format_system;
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse_tokens, FileAst, RuleAst, SetDecl, ShapeKind, Spanned, VarDecl};

use std::collections::HashSet;

use crate::engine::{
    build_system, Clause, FuzzySet, FuzzySystem, LinguisticVariable, Rule, RulePart, Subject,
    ViolationCode,
};
use crate::fuzzy::{MembershipFunction, Universe};

/// Source text plus the name used when reporting diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemSource {
    pub name: String,
    pub text: String,
}

impl SystemSource {
    pub fn new(name: impl Into<String>, text: impl Into<String>) -> Self {
        SystemSource {
            name: name.into(),
            text: text.into(),
        }
    }
}

/// Outcome of checking a source: the system when there were no errors, and
/// every diagnostic (errors and warnings) ordered by position.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub system: Option<FuzzySystem>,
    pub diagnostics: Vec<Diagnostic>,
}

impl CheckReport {
    pub fn errors(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics.iter().filter(|d| d.is_error())
    }
}

/// Parses and validates a system, returning only the errors on failure.
pub fn parse_system(src: &SystemSource) -> Result<FuzzySystem, Vec<Diagnostic>> {
    let report = check_source(src);
    match report.system {
        Some(sys) => Ok(sys),
        None => Err(report.diagnostics.into_iter().filter(|d| d.is_error()).collect()),
    }
}

pub fn parse_str(text: &str) -> Result<FuzzySystem, Vec<Diagnostic>> {
    parse_system(&SystemSource::new("<input>", text))
}

/// Full pipeline: lex, parse, lower, validate. Semantic checks only run on
/// syntactically clean input so that recovery gaps do not cascade into
/// spurious unknown-name errors.
pub fn check_source(src: &SystemSource) -> CheckReport {
    let (tokens, mut diagnostics) = tokenize(&src.text);
    let (ast, syntax) = parse_tokens(&tokens);
    diagnostics.extend(syntax);

    let mut system = None;
    if diagnostics.is_empty() {
        match lower(&ast) {
            Ok(sys) => {
                diagnostics.extend(unused_set_warnings(&ast));
                system = Some(sys);
            }
            Err(errs) => diagnostics.extend(errs),
        }
    }
    diagnostics.sort_by_key(|d| (d.pos, d.severity));
    CheckReport {
        system,
        diagnostics,
    }
}

fn lower(ast: &FileAst) -> Result<FuzzySystem, Vec<Diagnostic>> {
    let mut errs = Vec::new();
    let mut variables = Vec::new();
    for decl in &ast.variables {
        let (lo, hi) = decl.range.value;
        let universe = Universe::new(lo, hi).map_err(|e| {
            errs.push(Diagnostic::error(
                decl.range.pos,
                Code::Semantic(ViolationCode::InvalidUniverse),
                e.to_string(),
            ))
        });
        let mut sets = Vec::new();
        for set in &decl.sets {
            let p = &set.params;
            let mf = match set.shape.value {
                ShapeKind::Tri => MembershipFunction::triangular(p[0], p[1], p[2]),
                ShapeKind::Trap => MembershipFunction::trapezoidal(p[0], p[1], p[2], p[3]),
            };
            match mf {
                Ok(mf) => sets.push(FuzzySet::new(set.name.value.clone(), mf)),
                Err(_) => errs.push(Diagnostic::error(
                    set.shape.pos,
                    Code::Semantic(ViolationCode::MfParamsOutOfOrder),
                    format!(
                        "parameters of `{}` must be non-decreasing with first < last, got {:?}",
                        set.name.value, p
                    ),
                )),
            }
        }
        if let Ok(universe) = universe {
            variables.push(LinguisticVariable::new(
                decl.name.value.clone(),
                decl.role,
                decl.unit.value.clone(),
                universe,
                sets,
            ));
        }
    }
    if !errs.is_empty() {
        return Err(errs);
    }

    let rules = ast
        .rules
        .iter()
        .map(|r| {
            Rule::new(
                r.id.value.clone(),
                Clause::new(r.antecedent.0.value.clone(), r.antecedent.1.value.clone()),
                Clause::new(r.consequent.0.value.clone(), r.consequent.1.value.clone()),
            )
        })
        .collect();
    let name = ast
        .system
        .as_ref()
        .map(|s| s.value.clone())
        .unwrap_or_default();

    build_system(name, variables, rules).map_err(|violations| {
        violations
            .into_iter()
            .map(|v| Diagnostic::error(subject_pos(ast, v.subject), Code::Semantic(v.code), v.message))
            .collect()
    })
}

fn subject_pos(ast: &FileAst, subject: Subject) -> Pos {
    match subject {
        Subject::System => ast.system.as_ref().map(|s| s.pos).unwrap_or(Pos::START),
        Subject::Variable(i) => ast.variables[i].name.pos,
        Subject::Unit(i) => ast.variables[i].unit.pos,
        Subject::Set { variable, set } => ast.variables[variable].sets[set].name.pos,
        Subject::Rule { rule, part } => {
            let r = &ast.rules[rule];
            match part {
                RulePart::Id => r.id.pos,
                RulePart::AntecedentVariable => r.antecedent.0.pos,
                RulePart::AntecedentSet => r.antecedent.1.pos,
                RulePart::ConsequentVariable => r.consequent.0.pos,
                RulePart::ConsequentSet => r.consequent.1.pos,
            }
        }
    }
}

fn unused_set_warnings(ast: &FileAst) -> Vec<Diagnostic> {
    let used: HashSet<(&str, &str)> = ast
        .rules
        .iter()
        .flat_map(|r| [&r.antecedent, &r.consequent])
        .map(|(v, s)| (v.value.as_str(), s.value.as_str()))
        .collect();
    ast.variables
        .iter()
        .flat_map(|v| v.sets.iter().map(move |s| (v, s)))
        .filter(|(v, s)| !used.contains(&(v.name.value.as_str(), s.name.value.as_str())))
        .map(|(v, s)| {
            Diagnostic::warning(
                s.name.pos,
                Code::UnusedSet,
                format!("set `{}` of `{}` is not used by any rule", s.name.value, v.name.value),
            )
        })
        .collect()
}
