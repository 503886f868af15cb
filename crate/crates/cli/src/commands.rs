use std::fs;
use std::io::{self, Write};
use std::path::Path;

use fuzzyzoom::dsl::{check_source, SystemSource};
use fuzzyzoom::engine::{infer, FuzzySystem, InferOptions, InferenceTrace};
use fuzzyzoom::fuzzy::Method;
use fuzzyzoom::zoom::tracking::{
    estimate_trace, read_trace_csv, tracking_error, FocusTraceTable, TrackingError,
};

use crate::numfmt::fmt6;

/// Exit status plus the text for standard error.
#[derive(Debug)]
pub struct CliError {
    pub status: u8,
    pub message: String,
}

impl CliError {
    fn domain(message: impl Into<String>) -> Self {
        CliError {
            status: 1,
            message: message.into(),
        }
    }

    fn io(path: &Path, err: io::Error) -> Self {
        CliError {
            status: 2,
            message: format!("{}: {err}", path.display()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        CliError {
            status: 2,
            message: format!("write failed: {err}"),
        }
    }
}

type CliResult = Result<(), CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Reads and validates a system file. Diagnostics are rendered into the
/// error message; warnings alone do not fail.
fn load_system(path: &Path) -> Result<(FuzzySystem, Vec<String>), CliError> {
    let name = path.display().to_string();
    let report = check_source(&SystemSource::new(name.clone(), read(path)?));
    let lines: Vec<String> = report.diagnostics.iter().map(|d| d.render(&name)).collect();
    match report.system {
        Some(sys) => Ok((sys, lines)),
        None => Err(CliError::domain(lines.join("\n"))),
    }
}

pub fn check(path: &Path) -> CliResult {
    let (_, warnings) = load_system(path)?;
    for w in warnings {
        eprintln!("{w}");
    }
    Ok(())
}

fn parse_bindings(raw: &[String]) -> Result<Vec<(String, f64)>, CliError> {
    raw.iter()
        .map(|b| {
            let (var, value) = b
                .split_once('=')
                .ok_or_else(|| CliError::domain(format!("binding `{b}` must look like var=value")))?;
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| CliError::domain(format!("`{value}` is not a number in `{b}`")))?;
            Ok((var.trim().to_string(), value))
        })
        .collect()
}

fn run(
    sys: &FuzzySystem,
    bindings: &[(String, f64)],
    method: Method,
    resolution: usize,
) -> Result<InferenceTrace, CliError> {
    let inputs: Vec<(&str, f64)> = bindings.iter().map(|(n, v)| (n.as_str(), *v)).collect();
    infer(sys, &inputs, InferOptions::new(method, resolution))
        .map_err(|e| CliError::domain(e.to_string()))
}

fn write_trace(out: &mut impl Write, trace: &InferenceTrace) -> io::Result<()> {
    writeln!(out, "# fuzzification")?;
    writeln!(out, "variable,value,set,degree")?;
    for f in &trace.fuzzified {
        for (set, d) in &f.degrees {
            writeln!(out, "{},{},{set},{}", f.variable, fmt6(f.value), fmt6(d.value()))?;
        }
    }
    writeln!(out, "# rules")?;
    writeln!(out, "rule,strength,fired,output,set")?;
    for r in &trace.fired {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.rule_id,
            fmt6(r.strength.value()),
            if r.fired() { "yes" } else { "no" },
            r.consequent.variable,
            r.consequent.set
        )?;
    }
    for o in &trace.outputs {
        writeln!(out, "# aggregate {}", o.variable)?;
        writeln!(out, "{},mu", o.variable)?;
        for (z, mu) in o.samples.points() {
            writeln!(out, "{},{}", fmt6(*z), fmt6(mu.value()))?;
        }
    }
    Ok(())
}

pub fn eval(
    path: &Path,
    raw_inputs: &[String],
    method: Method,
    resolution: usize,
    with_trace: bool,
    out: &mut impl Write,
) -> CliResult {
    let (sys, _) = load_system(path)?;
    let bindings = parse_bindings(raw_inputs)?;
    let trace = run(&sys, &bindings, method, resolution)?;
    if with_trace {
        write_trace(out, &trace)?;
    }
    for o in &trace.outputs {
        writeln!(out, "{} = {}", o.variable, fmt6(o.value))?;
    }
    Ok(())
}

pub struct SweepArgs {
    pub var: Option<String>,
    pub from: Option<f64>,
    pub to: Option<f64>,
    pub step: f64,
    pub method: Method,
    pub resolution: usize,
}

pub fn sweep(path: &Path, args: &SweepArgs, dest: Option<&Path>, stdout: &mut impl Write) -> CliResult {
    let (sys, _) = load_system(path)?;
    let inputs: Vec<_> = sys.inputs().collect();
    if inputs.len() != 1 {
        return Err(CliError::domain(format!(
            "sweep needs a single-input system, `{}` has {}",
            sys.name(),
            inputs.len()
        )));
    }
    let input = inputs[0];
    if let Some(v) = &args.var {
        if *v != input.name {
            return Err(CliError::domain(format!(
                "`{v}` is not the input of `{}` (expected `{}`)",
                sys.name(),
                input.name
            )));
        }
    }
    let from = args.from.unwrap_or(input.universe.lo());
    let to = args.to.unwrap_or(input.universe.hi());
    if from.partial_cmp(&to) != Some(std::cmp::Ordering::Less) {
        return Err(CliError::domain(format!("--from {from} must be below --to {to}")));
    }
    if !(args.step > 0.0 && args.step.is_finite()) {
        return Err(CliError::domain(format!("--step {} must be positive", args.step)));
    }

    let mut csv = String::new();
    csv.push_str(&input.name);
    for o in sys.outputs() {
        csv.push(',');
        csv.push_str(&o.name);
    }
    csv.push('\n');
    let slack = args.step * 1e-9;
    for i in 0.. {
        let x = from + args.step * i as f64;
        if x > to + slack {
            break;
        }
        if !input.universe.contains(x) {
            continue;
        }
        let trace = run(&sys, &[(input.name.clone(), x)], args.method, args.resolution)
            .map_err(|e| CliError::domain(format!("at {} = {}: {}", input.name, fmt6(x), e.message)))?;
        csv.push_str(&fmt6(x));
        for o in &trace.outputs {
            csv.push(',');
            csv.push_str(&fmt6(o.value));
        }
        csv.push('\n');
    }
    match dest {
        Some(p) => fs::write(p, csv).map_err(|e| CliError::io(p, e)),
        None => Ok(stdout.write_all(csv.as_bytes())?),
    }
}

pub fn mfdump(path: &Path, var: &str, samples: usize, out: &mut impl Write) -> CliResult {
    let (sys, _) = load_system(path)?;
    let v = sys
        .variable(var)
        .ok_or_else(|| CliError::domain(format!("unknown-variable: `{var}` is not declared in `{}`", sys.name())))?;
    let grid = v
        .universe
        .grid(samples)
        .map_err(|e| CliError::domain(e.to_string()))?;
    write!(out, "x")?;
    for s in &v.sets {
        write!(out, ",{}", s.name)?;
    }
    writeln!(out)?;
    for x in grid {
        write!(out, "{}", fmt6(x))?;
        for s in &v.sets {
            write!(out, ",{}", fmt6(s.mf.eval(x).value()))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn tracking(err: TrackingError) -> CliError {
    let kind = match err {
        TrackingError::OutOfBracket { .. } => "out-of-bracket",
        TrackingError::DegenerateBracket { .. } => "degenerate-bracket",
        TrackingError::GridMismatch(_) => "grid-mismatch",
        TrackingError::ZoomIndexOutOfRange { .. } => "zoom-index",
        TrackingError::InvalidTable(_) | TrackingError::Csv(_) => "invalid-table",
    };
    CliError::domain(format!("{kind}: {err}"))
}

pub fn track(
    table_path: &Path,
    start_zoom: usize,
    start_focus: f64,
    true_path: Option<&Path>,
    out: &mut impl Write,
) -> CliResult {
    let text = read(table_path)?;
    let table = FocusTraceTable::read_csv(text.as_bytes()).map_err(tracking)?;
    let estimate = estimate_trace(&table, start_zoom, start_focus).map_err(tracking)?;

    let report = match true_path {
        None => None,
        Some(p) => {
            let (zoom, focus) = read_trace_csv(read(p)?.as_bytes()).map_err(tracking)?;
            if zoom != table.zoom_positions() {
                return Err(tracking(TrackingError::GridMismatch(format!(
                    "`{}` does not use the zoom positions of `{}`",
                    p.display(),
                    table_path.display()
                ))));
            }
            Some((focus.clone(), tracking_error(&table, &focus, &estimate).map_err(tracking)?))
        }
    };

    match &report {
        None => writeln!(out, "zoom_pos,estimate")?,
        Some(_) => writeln!(out, "zoom_pos,estimate,true,abs_err")?,
    }
    for (i, z) in table.zoom_positions().iter().enumerate() {
        write!(out, "{},{}", fmt6(*z), fmt6(estimate.focus[i]))?;
        if let Some((truth, r)) = &report {
            write!(out, ",{},{}", fmt6(truth[i]), fmt6(r.abs_error[i]))?;
        }
        writeln!(out)?;
    }
    if let Some((_, r)) = report {
        eprintln!("max_err = {} at zoom index {}", fmt6(r.max_error), r.max_index);
    }
    Ok(())
}
