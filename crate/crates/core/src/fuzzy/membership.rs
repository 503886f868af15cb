use super::{Degree, FuzzyError};

/// Triangular or trapezoidal membership function.
///
/// Degenerate edges (`a == b`, `c == d`, ...) are shoulders: the function
/// takes the value 1 on the collapsed edge instead of dividing by zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MembershipFunction {
    Triangular { a: f64, b: f64, c: f64 },
    Trapezoidal { a: f64, b: f64, c: f64, d: f64 },
}

fn check_params(params: &[f64]) -> Result<(), FuzzyError> {
    let ordered = params.windows(2).all(|w| w[0] <= w[1]);
    let finite = params.iter().all(|p| p.is_finite());
    let nonempty = params[0] < params[params.len() - 1];
    if ordered && finite && nonempty {
        Ok(())
    } else {
        Err(FuzzyError::InvalidParameters(params.to_vec()))
    }
}

impl MembershipFunction {
    pub fn triangular(a: f64, b: f64, c: f64) -> Result<Self, FuzzyError> {
        check_params(&[a, b, c])?;
        Ok(MembershipFunction::Triangular { a, b, c })
    }

    pub fn trapezoidal(a: f64, b: f64, c: f64, d: f64) -> Result<Self, FuzzyError> {
        check_params(&[a, b, c, d])?;
        Ok(MembershipFunction::Trapezoidal { a, b, c, d })
    }

    pub fn eval(&self, x: f64) -> Degree {
        match *self {
            MembershipFunction::Triangular { a, b, c } => triangular_unchecked(x, a, b, c),
            MembershipFunction::Trapezoidal { a, b, c, d } => trapezoidal_unchecked(x, a, b, c, d),
        }
    }

    /// Closed interval outside of which the membership is zero.
    pub fn support(&self) -> (f64, f64) {
        match *self {
            MembershipFunction::Triangular { a, c, .. } => (a, c),
            MembershipFunction::Trapezoidal { a, d, .. } => (a, d),
        }
    }

    pub fn params(&self) -> Vec<f64> {
        match *self {
            MembershipFunction::Triangular { a, b, c } => vec![a, b, c],
            MembershipFunction::Trapezoidal { a, b, c, d } => vec![a, b, c, d],
        }
    }

    /// Points where the function's slope may change.
    pub fn breakpoints(&self) -> Vec<f64> {
        self.params()
    }
}

fn triangular_unchecked(x: f64, a: f64, b: f64, c: f64) -> Degree {
    if x.is_nan() || x < a || x > c {
        return Degree::ZERO;
    }
    let mu = if x == b {
        1.0
    } else if x < b {
        (x - a) / (b - a)
    } else {
        (c - x) / (c - b)
    };
    Degree::saturating(mu)
}

fn trapezoidal_unchecked(x: f64, a: f64, b: f64, c: f64, d: f64) -> Degree {
    if x.is_nan() || x < a || x > d {
        return Degree::ZERO;
    }
    let mu = if x >= b && x <= c {
        1.0
    } else if x < b {
        (x - a) / (b - a)
    } else {
        (d - x) / (d - c)
    };
    Degree::saturating(mu)
}

/// Triangular membership of `x` for the triangle `(a, b, c)`.
pub fn eval_triangular(x: f64, a: f64, b: f64, c: f64) -> Result<Degree, FuzzyError> {
    Ok(MembershipFunction::triangular(a, b, c)?.eval(x))
}

/// Trapezoidal membership of `x` for the trapezoid `(a, b, c, d)`.
pub fn eval_trapezoidal(x: f64, a: f64, b: f64, c: f64, d: f64) -> Result<Degree, FuzzyError> {
    Ok(MembershipFunction::trapezoidal(a, b, c, d)?.eval(x))
}
