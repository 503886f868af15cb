//! Look-up-table zoom tracking.
//!
//! A table stores in-focus focus-lens positions ("traces") for a few object
//! distances over a shared grid of zoom positions. For an object between two
//! stored distances the focus position is estimated by keeping the start
//! point's relative position between the bracketing traces:
//!
//! ```text
//! d_c = D_c * d_s / D_s
//! ```
//!
//! where `D_s`, `D_c` are the upper-minus-lower trace gaps at the start and
//! current zoom positions, `d_s` is the start focus minus the lower trace, and
//! `d_c` the estimate minus the lower trace at the current position.

use std::io::{Read, Write};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TrackingError {
    #[error("invalid trace table: {0}")]
    InvalidTable(String),
    #[error("zoom index {index} is out of range (table has {len} zoom positions)")]
    ZoomIndexOutOfRange { index: usize, len: usize },
    #[error("start focus {focus} lies outside the stored traces [{lo}, {hi}] at zoom index {index}")]
    OutOfBracket {
        focus: f64,
        lo: f64,
        hi: f64,
        index: usize,
    },
    #[error("bracketing traces `{lower}` and `{upper}` coincide at zoom index {index}")]
    DegenerateBracket {
        lower: String,
        upper: String,
        index: usize,
    },
    #[error("zoom grids differ: {0}")]
    GridMismatch(String),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

/// Focus positions of one object distance at every zoom position.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub label: String,
    pub focus: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FocusTraceTable {
    zoom_positions: Vec<f64>,
    traces: Vec<Trace>,
}

impl FocusTraceTable {
    /// Validates the grid and that traces are ordered and never cross.
    pub fn new(zoom_positions: Vec<f64>, traces: Vec<Trace>) -> Result<Self, TrackingError> {
        let bad = |m: String| Err(TrackingError::InvalidTable(m));
        if zoom_positions.is_empty() {
            return bad("no zoom positions".into());
        }
        if zoom_positions.iter().any(|z| !z.is_finite())
            || zoom_positions.windows(2).any(|w| w[0] >= w[1])
        {
            return bad("zoom positions must be finite and strictly increasing".into());
        }
        if traces.is_empty() {
            return bad("no traces".into());
        }
        for t in &traces {
            if t.focus.len() != zoom_positions.len() {
                return bad(format!(
                    "trace `{}` has {} values for {} zoom positions",
                    t.label,
                    t.focus.len(),
                    zoom_positions.len()
                ));
            }
            if t.focus.iter().any(|f| !f.is_finite()) {
                return bad(format!("trace `{}` has a non-finite value", t.label));
            }
        }
        for pair in traces.windows(2) {
            let (lo, hi) = (&pair[0], &pair[1]);
            if let Some(i) = (0..zoom_positions.len()).find(|&i| hi.focus[i] < lo.focus[i]) {
                return bad(format!(
                    "trace `{}` drops below `{}` at zoom index {i}",
                    hi.label, lo.label
                ));
            }
        }
        Ok(FocusTraceTable {
            zoom_positions,
            traces,
        })
    }

    pub fn zoom_positions(&self) -> &[f64] {
        &self.zoom_positions
    }

    pub fn traces(&self) -> &[Trace] {
        &self.traces
    }

    /// Reads `zoom_pos,trace_<label>,...` CSV.
    pub fn read_csv<R: Read>(reader: R) -> Result<Self, TrackingError> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers()?.clone();
        if headers.get(0) != Some("zoom_pos") {
            return Err(TrackingError::InvalidTable(
                "first column must be `zoom_pos`".into(),
            ));
        }
        let mut labels = Vec::new();
        for h in headers.iter().skip(1) {
            match h.strip_prefix("trace_") {
                Some(label) if !label.is_empty() => labels.push(label.to_string()),
                _ => {
                    return Err(TrackingError::InvalidTable(format!(
                        "column `{h}` must be named `trace_<label>`"
                    )))
                }
            }
        }
        let mut zoom = Vec::new();
        let mut columns = vec![Vec::new(); labels.len()];
        for (row, record) in rdr.records().enumerate() {
            let record = record?;
            let values = record
                .iter()
                .map(|cell| {
                    cell.parse::<f64>().map_err(|_| {
                        TrackingError::InvalidTable(format!(
                            "row {}: `{cell}` is not a number",
                            row + 2
                        ))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            zoom.push(values[0]);
            for (col, v) in columns.iter_mut().zip(&values[1..]) {
                col.push(*v);
            }
        }
        let traces = labels
            .into_iter()
            .zip(columns)
            .map(|(label, focus)| Trace { label, focus })
            .collect();
        FocusTraceTable::new(zoom, traces)
    }

    /// Writes the table in the format `read_csv` accepts, with full
    /// round-trip precision.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        write!(out, "zoom_pos")?;
        for t in &self.traces {
            write!(out, ",trace_{}", t.label)?;
        }
        writeln!(out)?;
        for (i, z) in self.zoom_positions.iter().enumerate() {
            write!(out, "{z}")?;
            for t in &self.traces {
                write!(out, ",{}", t.focus[i])?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}

/// Reads a single trace as `zoom_pos,<anything>` CSV: zoom positions and one
/// focus column.
pub fn read_trace_csv<R: Read>(reader: R) -> Result<(Vec<f64>, Vec<f64>), TrackingError> {
    let table = {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers()?.clone();
        if headers.len() != 2 || headers.get(0) != Some("zoom_pos") {
            return Err(TrackingError::InvalidTable(
                "a single trace needs exactly the columns `zoom_pos,<focus>`".into(),
            ));
        }
        rdr.records()
            .map(|r| {
                let r = r?;
                let parse = |s: &str| {
                    s.parse::<f64>()
                        .map_err(|_| TrackingError::InvalidTable(format!("`{s}` is not a number")))
                };
                Ok((parse(&r[0])?, parse(&r[1])?))
            })
            .collect::<Result<Vec<_>, TrackingError>>()?
    };
    Ok(table.into_iter().unzip())
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceEstimate {
    pub focus: Vec<f64>,
    pub lower: usize,
    pub upper: usize,
    /// `d_s / D_s` at the start zoom position.
    pub ratio: f64,
}

/// Estimates the focus trace through `start_focus` at `start_zoom_index`.
///
/// When `start_focus` equals a stored trace, that trace is the lower bracket
/// and the next one up the upper; on the topmost trace the pair below is used
/// with `d_s = D_s`.
pub fn estimate_trace(
    table: &FocusTraceTable,
    start_zoom_index: usize,
    start_focus: f64,
) -> Result<TraceEstimate, TrackingError> {
    let n = table.zoom_positions.len();
    if start_zoom_index >= n {
        return Err(TrackingError::ZoomIndexOutOfRange {
            index: start_zoom_index,
            len: n,
        });
    }
    let at_start = |t: &Trace| t.focus[start_zoom_index];
    let traces = &table.traces;
    let lo = at_start(&traces[0]);
    let hi = at_start(&traces[traces.len() - 1]);
    if !(start_focus >= lo && start_focus <= hi) {
        return Err(TrackingError::OutOfBracket {
            focus: start_focus,
            lo,
            hi,
            index: start_zoom_index,
        });
    }
    // Highest trace at or below the start focus.
    let below = traces
        .iter()
        .rposition(|t| at_start(t) <= start_focus)
        .unwrap_or(0);
    let (lower, upper) = if below + 1 < traces.len() {
        (below, below + 1)
    } else if below > 0 {
        (below - 1, below)
    } else {
        return Err(TrackingError::DegenerateBracket {
            lower: traces[0].label.clone(),
            upper: traces[0].label.clone(),
            index: start_zoom_index,
        });
    };
    let (lt, ut) = (&traces[lower], &traces[upper]);
    let gap_start = at_start(ut) - at_start(lt);
    if gap_start <= 0.0 {
        return Err(TrackingError::DegenerateBracket {
            lower: lt.label.clone(),
            upper: ut.label.clone(),
            index: start_zoom_index,
        });
    }
    let offset_start = start_focus - at_start(lt);
    let ratio = offset_start / gap_start;
    let focus = lt
        .focus
        .iter()
        .zip(&ut.focus)
        .map(|(&l, &u)| {
            if offset_start == gap_start {
                u
            } else {
                l + (u - l) * ratio
            }
        })
        .collect();
    Ok(TraceEstimate {
        focus,
        lower,
        upper,
        ratio,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrackingReport {
    pub abs_error: Vec<f64>,
    pub max_error: f64,
    /// Zoom index of the first occurrence of `max_error`.
    pub max_index: usize,
}

/// Pointwise `|true - estimate|` over the table's zoom grid.
pub fn tracking_error(
    table: &FocusTraceTable,
    true_trace: &[f64],
    estimate: &TraceEstimate,
) -> Result<TrackingReport, TrackingError> {
    let n = table.zoom_positions.len();
    if true_trace.len() != n || estimate.focus.len() != n {
        return Err(TrackingError::GridMismatch(format!(
            "table has {n} zoom positions, true trace {}, estimate {}",
            true_trace.len(),
            estimate.focus.len()
        )));
    }
    let abs_error: Vec<f64> = true_trace
        .iter()
        .zip(&estimate.focus)
        .map(|(t, e)| (t - e).abs())
        .collect();
    let (max_index, max_error) = abs_error
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (i, e)| if e > best.1 { (i, e) } else { best });
    Ok(TrackingReport {
        abs_error,
        max_error,
        max_index,
    })
}
