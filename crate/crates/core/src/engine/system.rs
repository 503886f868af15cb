use std::collections::HashSet;
use std::fmt;

use crate::fuzzy::{MembershipFunction, Universe};

/// Whether a variable is fuzzified (input) or defuzzified (output).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Input,
    Output,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Role::Input => "input",
            Role::Output => "output",
        }
    }
}

/// A named membership function belonging to one variable.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySet {
    pub name: String,
    pub mf: MembershipFunction,
}

impl FuzzySet {
    pub fn new(name: impl Into<String>, mf: MembershipFunction) -> Self {
        FuzzySet {
            name: name.into(),
            mf,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticVariable {
    pub name: String,
    pub role: Role,
    pub unit: String,
    pub universe: Universe,
    pub sets: Vec<FuzzySet>,
}

impl LinguisticVariable {
    pub fn new(
        name: impl Into<String>,
        role: Role,
        unit: impl Into<String>,
        universe: Universe,
        sets: Vec<FuzzySet>,
    ) -> Self {
        LinguisticVariable {
            name: name.into(),
            role,
            unit: unit.into(),
            universe,
            sets,
        }
    }

    pub fn set(&self, name: &str) -> Option<&FuzzySet> {
        self.sets.iter().find(|s| s.name == name)
    }
}

/// `<variable> IS <set>`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause {
    pub variable: String,
    pub set: String,
}

impl Clause {
    pub fn new(variable: impl Into<String>, set: impl Into<String>) -> Self {
        Clause {
            variable: variable.into(),
            set: set.into(),
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} IS {}", self.variable, self.set)
    }
}

/// `IF <antecedent> THEN <consequent>`, single clause on each side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub id: String,
    pub antecedent: Clause,
    pub consequent: Clause,
}

impl Rule {
    pub fn new(id: impl Into<String>, antecedent: Clause, consequent: Clause) -> Self {
        Rule {
            id: id.into(),
            antecedent,
            consequent,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationCode {
    DuplicateName,
    UnknownVariable,
    UnknownSet,
    MfParamsOutOfOrder,
    MfSupportOutsideUniverse,
    RuleReferencesOutputInAntecedent,
    RuleReferencesInputInConsequent,
    EmptyVariable,
    InvalidUniverse,
    InvalidName,
}

impl ViolationCode {
    pub fn as_str(&self) -> &'static str {
        match self {
            ViolationCode::DuplicateName => "duplicate-name",
            ViolationCode::UnknownVariable => "unknown-variable",
            ViolationCode::UnknownSet => "unknown-set",
            ViolationCode::MfParamsOutOfOrder => "mf-params-out-of-order",
            ViolationCode::MfSupportOutsideUniverse => "mf-support-outside-universe",
            ViolationCode::RuleReferencesOutputInAntecedent => "rule-references-output-in-antecedent",
            ViolationCode::RuleReferencesInputInConsequent => "rule-references-input-in-consequent",
            ViolationCode::EmptyVariable => "empty-variable",
            ViolationCode::InvalidUniverse => "invalid-universe",
            ViolationCode::InvalidName => "invalid-name",
        }
    }
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which side of a rule a violation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RulePart {
    Id,
    AntecedentVariable,
    AntecedentSet,
    ConsequentVariable,
    ConsequentSet,
}

/// Location of a violation inside the system, by declaration index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subject {
    System,
    Variable(usize),
    Unit(usize),
    Set { variable: usize, set: usize },
    Rule { rule: usize, part: RulePart },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub code: ViolationCode,
    pub subject: Subject,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

/// Words the rule language reserves; they cannot name anything.
pub const KEYWORDS: &[&str] = &[
    "system", "input", "output", "range", "set", "tri", "trap", "rule", "if", "is", "then", "and",
    "or",
];

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    let head_ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_');
    head_ok
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !KEYWORDS.contains(&s.to_ascii_lowercase().as_str())
}

/// A validated fuzzy system. Variables are held in declaration order, inputs
/// and outputs interleaved as declared.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySystem {
    name: String,
    variables: Vec<LinguisticVariable>,
    rules: Vec<Rule>,
}

impl FuzzySystem {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn variables(&self) -> &[LinguisticVariable] {
        &self.variables
    }

    pub fn inputs(&self) -> impl Iterator<Item = &LinguisticVariable> {
        self.variables.iter().filter(|v| v.role == Role::Input)
    }

    pub fn outputs(&self) -> impl Iterator<Item = &LinguisticVariable> {
        self.variables.iter().filter(|v| v.role == Role::Output)
    }

    pub fn variable(&self, name: &str) -> Option<&LinguisticVariable> {
        self.variables.iter().find(|v| v.name == name)
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }
}

/// Validates and assembles a system. On failure every violation found is
/// returned, in declaration order.
pub fn build_system(
    name: impl Into<String>,
    variables: Vec<LinguisticVariable>,
    rules: Vec<Rule>,
) -> Result<FuzzySystem, Vec<Violation>> {
    let name = name.into();
    let violations = validate(&name, &variables, &rules);
    if violations.is_empty() {
        Ok(FuzzySystem {
            name,
            variables,
            rules,
        })
    } else {
        Err(violations)
    }
}

fn validate(name: &str, variables: &[LinguisticVariable], rules: &[Rule]) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut push = |code, subject, message: String| {
        out.push(Violation {
            code,
            subject,
            message,
        })
    };

    if !is_identifier(name) {
        push(
            ViolationCode::InvalidName,
            Subject::System,
            format!("`{name}` is not a valid system name"),
        );
    }

    let mut seen_vars = HashSet::new();
    for (vi, var) in variables.iter().enumerate() {
        if !is_identifier(&var.name) {
            push(
                ViolationCode::InvalidName,
                Subject::Variable(vi),
                format!("`{}` is not a valid variable name", var.name),
            );
        }
        if !seen_vars.insert(var.name.as_str()) {
            push(
                ViolationCode::DuplicateName,
                Subject::Variable(vi),
                format!("variable `{}` is declared more than once", var.name),
            );
        }
        if var.unit.contains(['"', '\n', '\r']) {
            push(
                ViolationCode::InvalidName,
                Subject::Unit(vi),
                format!("unit label of `{}` may not contain quotes or line breaks", var.name),
            );
        }
        if var.sets.is_empty() {
            push(
                ViolationCode::EmptyVariable,
                Subject::Variable(vi),
                format!("variable `{}` declares no fuzzy sets", var.name),
            );
        }
        let mut seen_sets = HashSet::new();
        for (si, set) in var.sets.iter().enumerate() {
            let subject = Subject::Set {
                variable: vi,
                set: si,
            };
            if !is_identifier(&set.name) {
                push(
                    ViolationCode::InvalidName,
                    subject,
                    format!("`{}` is not a valid set name", set.name),
                );
            }
            if !seen_sets.insert(set.name.as_str()) {
                push(
                    ViolationCode::DuplicateName,
                    subject,
                    format!("set `{}` is declared more than once in `{}`", set.name, var.name),
                );
            }
            let (lo, hi) = set.mf.support();
            if lo < var.universe.lo() || hi > var.universe.hi() {
                push(
                    ViolationCode::MfSupportOutsideUniverse,
                    subject,
                    format!(
                        "support [{lo}, {hi}] of `{}` exceeds the universe {} of `{}`",
                        set.name, var.universe, var.name
                    ),
                );
            }
        }
    }

    let mut seen_rules = HashSet::new();
    for (ri, rule) in rules.iter().enumerate() {
        let at = |part| Subject::Rule { rule: ri, part };
        if !is_identifier(&rule.id) {
            push(
                ViolationCode::InvalidName,
                at(RulePart::Id),
                format!("`{}` is not a valid rule id", rule.id),
            );
        }
        if !seen_rules.insert(rule.id.as_str()) {
            push(
                ViolationCode::DuplicateName,
                at(RulePart::Id),
                format!("rule `{}` is declared more than once", rule.id),
            );
        }
        let sides = [
            (&rule.antecedent, Role::Input, RulePart::AntecedentVariable, RulePart::AntecedentSet),
            (&rule.consequent, Role::Output, RulePart::ConsequentVariable, RulePart::ConsequentSet),
        ];
        for (clause, expected, var_part, set_part) in sides {
            let Some(var) = variables.iter().find(|v| v.name == clause.variable) else {
                push(
                    ViolationCode::UnknownVariable,
                    at(var_part),
                    format!("rule `{}` references unknown variable `{}`", rule.id, clause.variable),
                );
                continue;
            };
            if var.role != expected {
                let code = match expected {
                    Role::Input => ViolationCode::RuleReferencesOutputInAntecedent,
                    Role::Output => ViolationCode::RuleReferencesInputInConsequent,
                };
                push(
                    code,
                    at(var_part),
                    format!(
                        "rule `{}` uses {} variable `{}` in its {}",
                        rule.id,
                        var.role.as_str(),
                        var.name,
                        if expected == Role::Input { "antecedent" } else { "consequent" }
                    ),
                );
            }
            if var.set(&clause.set).is_none() {
                push(
                    ViolationCode::UnknownSet,
                    at(set_part),
                    format!(
                        "rule `{}` references unknown set `{}` of variable `{}`",
                        rule.id, clause.set, var.name
                    ),
                );
            }
        }
    }
    out
}
