use std::fmt;
use std::str::FromStr;

use exact_core::Scalar;

use crate::SuiteError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Rll,
    Pieri,
    HallPieri,
    Cauchy,
    DualCauchy,
    GammaCommute,
    GammaEigen,
    Tq,
    LambdaQ,
    ArProject,
    Bethe,
    Gaudin,
    Lascoux,
    Adjoint,
    Gauge,
    PaperMatrices,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::Rll,
        Suite::Pieri,
        Suite::HallPieri,
        Suite::Cauchy,
        Suite::DualCauchy,
        Suite::GammaCommute,
        Suite::GammaEigen,
        Suite::Tq,
        Suite::LambdaQ,
        Suite::ArProject,
        Suite::Bethe,
        Suite::Gaudin,
        Suite::Lascoux,
        Suite::Adjoint,
        Suite::Gauge,
        Suite::PaperMatrices,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rll => "rll",
            Suite::Pieri => "pieri",
            Suite::HallPieri => "hall-pieri",
            Suite::Cauchy => "cauchy",
            Suite::DualCauchy => "dual-cauchy",
            Suite::GammaCommute => "gamma-commute",
            Suite::GammaEigen => "gamma-eigen",
            Suite::Tq => "tq",
            Suite::LambdaQ => "lambda-q",
            Suite::ArProject => "ar-project",
            Suite::Bethe => "bethe",
            Suite::Gaudin => "gaudin",
            Suite::Lascoux => "lascoux",
            Suite::Adjoint => "adjoint",
            Suite::Gauge => "gauge",
            Suite::PaperMatrices => "paper-matrices",
        }
    }

    /// Default number of random parameter draws.
    pub fn default_draws(self) -> usize {
        match self {
            Suite::Rll | Suite::PaperMatrices => 5,
            _ => 3,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

/// What to run. `None` fields fall back to the suite's default ranges.
///
/// `sites` fixes `N` (lattice sites, or alphabet length for symmetric function suites);
/// `particles` fixes `n` (particles, Bethe `M`, or Gaudin size).
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteSpec {
    pub suite: Suite,
    pub seed: u64,
    pub draws: Option<usize>,
    pub sites: Option<usize>,
    pub particles: Option<usize>,
    pub cap: Option<usize>,
    pub degree: Option<usize>,
    pub t: Option<Scalar>,
    pub x: Option<Scalar>,
    pub tolerance: Option<f64>,
}

impl SuiteSpec {
    pub fn new(suite: Suite, seed: u64) -> Self {
        Self {
            suite,
            seed,
            draws: None,
            sites: None,
            particles: None,
            cap: None,
            degree: None,
            t: None,
            x: None,
            tolerance: None,
        }
    }

    pub fn draws(&self) -> usize {
        self.draws.unwrap_or_else(|| self.suite.default_draws())
    }

    /// The fixed value if given, otherwise the default range.
    pub fn sites_or(&self, range: std::ops::RangeInclusive<usize>) -> Vec<usize> {
        self.sites.map(|n| vec![n]).unwrap_or_else(|| range.collect())
    }

    pub fn particles_or(&self, range: std::ops::RangeInclusive<usize>) -> Vec<usize> {
        self.particles.map(|n| vec![n]).unwrap_or_else(|| range.collect())
    }
}
