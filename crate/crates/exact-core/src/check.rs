/// Result of a single identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub passed: bool,
    /// Worst absolute deviation; exactly zero for passing exact checks.
    pub deviation: f64,
    pub detail: String,
}

impl CheckOutcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        Self { passed: true, deviation: 0.0, detail: detail.into() }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Self { passed: false, deviation: f64::INFINITY, detail: detail.into() }
    }

    /// Numeric check against a tolerance.
    pub fn within(deviation: f64, tolerance: f64, detail: impl Into<String>) -> Self {
        Self { passed: deviation.is_finite() && deviation <= tolerance, deviation, detail: detail.into() }
    }

    /// Exact check: passes iff `mismatch` is `None`.
    pub fn exact<M: std::fmt::Display>(mismatch: Option<M>, detail: impl Into<String>) -> Self {
        match mismatch {
            None => Self::pass(detail),
            Some(m) => Self::fail(format!("{}: {}", detail.into(), m)),
        }
    }

    /// Conjunction of several outcomes; keeps the first failing detail.
    pub fn all(outcomes: impl IntoIterator<Item = CheckOutcome>, detail: impl Into<String>) -> Self {
        let mut worst = 0.0f64;
        let mut count = 0usize;
        for o in outcomes {
            count += 1;
            if !o.passed {
                return o;
            }
            worst = worst.max(o.deviation);
        }
        Self { passed: true, deviation: worst, detail: format!("{} ({count} sub-checks)", detail.into()) }
    }
}
