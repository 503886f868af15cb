//! Test-only oracles, independent of the crate's sampling and quadrature.
#![allow(dead_code)]

use std::path::PathBuf;

use fuzzyzoom::fuzzy::{aggregate, clip, AggregatedSet, Degree, MembershipFunction, Universe};

/// A clipped piecewise-linear shape described by its corner points.
#[derive(Debug, Clone, Copy)]
pub struct OraclePart {
    /// `(a, b, c, d)`; a triangle has `b == c`.
    pub corners: [f64; 4],
    pub cap: f64,
}

impl OraclePart {
    pub fn tri(a: f64, b: f64, c: f64, cap: f64) -> Self {
        OraclePart { corners: [a, b, b, c], cap }
    }

    pub fn trap(a: f64, b: f64, c: f64, d: f64, cap: f64) -> Self {
        OraclePart { corners: [a, b, c, d], cap }
    }

    /// Membership from first principles: interpolate between corner points.
    pub fn mu(&self, x: f64) -> f64 {
        let [a, b, c, d] = self.corners;
        let raw = if x < a || x > d {
            0.0
        } else if x >= b && x <= c {
            1.0
        } else if x < b {
            (x - a) / (b - a)
        } else {
            (d - x) / (d - c)
        };
        raw.min(self.cap)
    }

    fn cap_crossings(&self) -> Vec<f64> {
        let [a, b, c, d] = self.corners;
        let mut v = Vec::new();
        if b > a {
            v.push(a + self.cap * (b - a));
        }
        if d > c {
            v.push(d - self.cap * (d - c));
        }
        v
    }

    pub fn to_clipped(self, universe: Universe) -> fuzzyzoom::fuzzy::ClippedSet {
        let [a, b, c, d] = self.corners;
        let mf = if b == c {
            MembershipFunction::triangular(a, b, d).unwrap()
        } else {
            MembershipFunction::trapezoidal(a, b, c, d).unwrap()
        };
        clip(mf, Degree::new(self.cap).unwrap(), universe)
    }
}

pub fn to_aggregate(universe: Universe, parts: &[OraclePart]) -> AggregatedSet {
    aggregate(universe, parts.iter().map(|p| p.to_clipped(universe)).collect()).unwrap()
}

fn agg_mu(parts: &[OraclePart], x: f64) -> f64 {
    parts.iter().map(|p| p.mu(x)).fold(0.0, f64::max)
}

/// Exact `(area, first moment)` of the pointwise max of `parts` on
/// `[lo, hi]`. Every kink of the aggregate (corners, cap crossings, and
/// crossings between parts) is a breakpoint, so each piece is linear and
/// integrates in closed form.
pub fn exact_moments(parts: &[OraclePart], lo: f64, hi: f64) -> (f64, f64) {
    let mut xs: Vec<f64> = vec![lo, hi];
    for p in parts {
        xs.extend(p.corners);
        xs.extend(p.cap_crossings());
    }
    xs.retain(|x| *x >= lo && *x <= hi);
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.dedup();

    // Crossings between parts inside each linear interval.
    let mut extra = Vec::new();
    for w in xs.windows(2) {
        let (x0, x1) = (w[0], w[1]);
        if x1 - x0 <= 0.0 {
            continue;
        }
        // Evaluate just inside the interval so jumps at corners do not matter
        // (all shapes here are continuous anyway).
        let lines: Vec<(f64, f64)> = parts.iter().map(|p| (p.mu(x0), p.mu(x1))).collect();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let (a0, a1) = lines[i];
                let (b0, b1) = lines[j];
                let (d0, d1) = (a0 - b0, a1 - b1);
                if d0 * d1 < 0.0 {
                    extra.push(x0 + (x1 - x0) * d0 / (d0 - d1));
                }
            }
        }
    }
    xs.extend(extra);
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.dedup();

    let mut area = 0.0;
    let mut moment = 0.0;
    for w in xs.windows(2) {
        let (x0, x1) = (w[0], w[1]);
        let (f0, f1) = (agg_mu(parts, x0), agg_mu(parts, x1));
        let h = x1 - x0;
        area += h * (f0 + f1) / 2.0;
        moment += h / 6.0 * (x0 * (2.0 * f0 + f1) + x1 * (f0 + 2.0 * f1));
    }
    (area, moment)
}

pub fn exact_centroid(parts: &[OraclePart], lo: f64, hi: f64) -> f64 {
    let (a, m) = exact_moments(parts, lo, hi);
    m / a
}

/// The two clipped consequents fired at distance 22 cm.
pub fn reference_22_parts() -> Vec<OraclePart> {
    vec![
        OraclePart::tri(-2.0, 0.0, 2.0, 2.2 / 9.2),
        OraclePart::tri(0.0, 2.0, 6.0, 0.2),
    ]
}

/// Table of `(z, mu)` as printed for the two-rule composition at 22 cm.
pub const COMPOSITION_TABLE: [(f64, f64); 13] = [
    (-2.0, 0.0),
    (-1.5, 0.24),
    (-1.0, 0.24),
    (0.0, 0.24),
    (1.0, 0.24),
    (1.5, 0.24),
    (1.6, 0.24),
    (2.0, 0.2),
    (3.0, 0.2),
    (4.0, 0.2),
    (5.0, 0.2),
    (5.2, 0.2),
    (6.0, 0.0),
];

/// The core crate's fixtures, also when this module is compiled into
/// another crate's tests.
pub fn fixtures_dir() -> PathBuf {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    crate_dir.parent().unwrap().join("core").join("fixtures")
}

/// One row of `corpus/expected.tsv`.
#[derive(Debug, Clone)]
pub struct CorpusCase {
    pub file: String,
    pub exit: i32,
    /// `code@line:col`, warnings included, in source order.
    pub diagnostics: Vec<String>,
}

pub fn corpus_dir() -> PathBuf {
    fixtures_dir().join("corpus")
}

pub fn corpus_manifest() -> Vec<CorpusCase> {
    let text = std::fs::read_to_string(corpus_dir().join("expected.tsv")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let cols: Vec<&str> = l.split('\t').collect();
            CorpusCase {
                file: cols[0].to_string(),
                exit: cols[1].parse().unwrap(),
                diagnostics: cols
                    .get(2)
                    .map(|d| d.split(',').filter(|s| !s.is_empty()).map(str::to_string).collect())
                    .unwrap_or_default(),
            }
        })
        .collect()
}

/// A cell of the membership tables: `Y*`, `Y` or `N`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Cell {
    Peak,
    Present,
    Absent,
}
use Cell::{Absent as N, Peak as S, Present as Y};

pub const DISTANCE_SETS: [&str; 5] = ["too_near", "near", "medium", "far", "too_far"];
pub const DISTANCE_ROWS: [(f64, [Cell; 5]); 13] = [
    (0.0, [S, N, N, N, N]),
    (4.0, [Y, N, N, N, N]),
    (5.0, [N, Y, N, N, N]),
    (10.0, [N, S, N, N, N]),
    (12.0, [N, N, S, N, N]),
    (15.0, [N, N, Y, N, N]),
    (20.0, [N, N, Y, N, N]),
    (25.0, [N, N, N, Y, N]),
    (30.0, [N, N, N, S, N]),
    (35.0, [N, N, N, Y, N]),
    (40.0, [N, N, N, Y, N]),
    (45.0, [N, N, N, N, Y]),
    (50.0, [N, N, N, N, S]),
];

pub const ZOOM_SETS: [&str; 5] = ["max_zoom_out", "min_zoom_out", "default", "min_zoom_in", "max_zoom_in"];
pub const ZOOM_ROWS: [(f64, [Cell; 5]); 11] = [
    (-10.0, [Y, N, N, N, N]),
    (-8.0, [S, N, N, N, N]),
    (-6.0, [N, Y, N, N, N]),
    (-4.0, [N, Y, N, N, N]),
    (-2.0, [N, S, N, N, N]),
    (0.0, [N, N, S, N, N]),
    (2.0, [N, N, Y, S, N]),
    (4.0, [N, N, N, N, N]),
    (6.0, [N, N, N, N, N]),
    (8.0, [N, N, N, N, S]),
    (10.0, [N, N, N, N, Y]),
];

/// Cells where the calibration follows the worked example's composition
/// table instead: `(row value, set, degree)`.
pub const ZOOM_EXCEPTIONS: [(f64, &str, f64); 2] = [(2.0, "default", 0.0), (4.0, "min_zoom_in", 0.5)];

pub fn conforms(cell: Cell, mu: f64) -> bool {
    match cell {
        Cell::Peak => mu == 1.0,
        Cell::Present => mu > 0.0,
        Cell::Absent => mu == 0.0,
    }
}

/// Every mismatching cell as `(row, set, degree)`.
pub fn mismatches(var: &str, sets: &[&str; 5], rows: &[(f64, [Cell; 5])]) -> Vec<(f64, String, f64)> {
    let v = fuzzyzoom::zoom::reference_system().variable(var).unwrap();
    let mut out = Vec::new();
    for (x, cells) in rows {
        for (set, cell) in sets.iter().zip(cells) {
            let mu = v.set(set).unwrap().mf.eval(*x).value();
            if !conforms(*cell, mu) {
                out.push((*x, set.to_string(), mu));
            }
        }
    }
    out
}
