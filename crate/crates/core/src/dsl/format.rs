use std::fmt::Write;

use crate::engine::{FuzzySystem, Role};
use crate::fuzzy::MembershipFunction;

/// Canonical text for `sys`. Numbers use the shortest representation that
/// parses back to the same `f64`, so `parse(format(sys)) == sys`.
pub fn format_system(sys: &FuzzySystem) -> String {
    let mut out = String::new();
    // Writing to a String cannot fail.
    let _ = writeln!(out, "system {}", sys.name());
    for var in sys.variables() {
        let kw = match var.role {
            Role::Input => "input",
            Role::Output => "output",
        };
        let _ = writeln!(
            out,
            "\n{kw} {} \"{}\" range {} {} {{",
            var.name,
            var.unit,
            var.universe.lo(),
            var.universe.hi()
        );
        for set in &var.sets {
            let (shape, params) = match set.mf {
                MembershipFunction::Triangular { .. } => ("tri", set.mf.params()),
                MembershipFunction::Trapezoidal { .. } => ("trap", set.mf.params()),
            };
            let params: Vec<String> = params.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(out, "  set {} {shape}({})", set.name, params.join(", "));
        }
        out.push_str("}\n");
    }
    out.push_str("\n# rules\n");
    for rule in sys.rules() {
        let _ = writeln!(
            out,
            "rule {}: IF {} IS {} THEN {} IS {}",
            rule.id,
            rule.antecedent.variable,
            rule.antecedent.set,
            rule.consequent.variable,
            rule.consequent.set
        );
    }
    out
}
