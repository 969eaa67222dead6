//! Closed-form values and identities for `𝔡_t` and `dim_k^t`, and checks that
//! compare them with the solvers.

mod checks;
mod predict;
mod suite;

use std::fmt;

use serde::Serialize;

use crate::solver::SolverConfig;

pub use checks::{
    check_common_generator, check_corona_theorem, check_lexicographic_theorem,
    check_reduction_identity, GadgetSource, ReductionCertificate,
};
pub use predict::{
    clause_predictions, is_isolated_plus_path, is_n_minus_one_dimensional_shape, is_path,
    predict_dimension, predict_dimensional, predict_gadget, GadgetPrediction, Shape,
};
pub use suite::run_suite;

/// What a closed form claims.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Payload {
    Exact(usize),
    /// `lo <= value <= hi`.
    Interval {
        lo: usize,
        hi: usize,
    },
    /// No generator exists.
    Infeasible,
    /// Two solver queries must agree; checked constructively.
    Identity(String),
    /// No closed form applies.
    Unknown,
}

impl fmt::Display for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Payload::Exact(v) => write!(f, "{v}"),
            Payload::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
            Payload::Infeasible => f.write_str("none"),
            Payload::Identity(s) => f.write_str(s),
            Payload::Unknown => f.write_str("unknown"),
        }
    }
}

/// A closed-form claim, tagged with a short slug and the formula it encodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub tag: &'static str,
    pub statement: &'static str,
    pub payload: Payload,
}

impl Prediction {
    pub(crate) fn new(tag: &'static str, statement: &'static str, payload: Payload) -> Self {
        Self {
            tag,
            statement,
            payload,
        }
    }

    pub(crate) fn unknown() -> Self {
        Self::new("no-closed-form", "no closed form applies", Payload::Unknown)
    }

    /// Whether an observed value (`None` = no generator) is consistent with
    /// the payload; `None` for payloads that are not numeric claims.
    pub fn admits(&self, observed: Option<usize>) -> Option<bool> {
        match (&self.payload, observed) {
            (Payload::Exact(v), Some(o)) => Some(*v == o),
            (Payload::Interval { lo, hi }, Some(o)) => Some(*lo <= o && o <= *hi),
            (Payload::Infeasible, o) => Some(o.is_none()),
            (Payload::Exact(_) | Payload::Interval { .. }, None) => Some(false),
            (Payload::Identity(_) | Payload::Unknown, _) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Pass,
    Fail,
    /// Not decidable within the configured budget.
    Skip,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skip => "SKIP",
        })
    }
}

/// One check: `tag | instance | expected | got | PASS`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub tag: String,
    pub instance: String,
    pub expected: String,
    pub got: String,
    pub outcome: Outcome,
}

impl CheckLine {
    pub fn new(
        tag: impl Into<String>,
        instance: impl Into<String>,
        expected: impl fmt::Display,
        got: impl fmt::Display,
        pass: bool,
    ) -> Self {
        Self {
            tag: tag.into(),
            instance: instance.into(),
            expected: expected.to_string(),
            got: got.to_string(),
            outcome: if pass { Outcome::Pass } else { Outcome::Fail },
        }
    }

    pub fn skipped(
        tag: impl Into<String>,
        instance: impl Into<String>,
        expected: impl fmt::Display,
        got: impl fmt::Display,
    ) -> Self {
        Self {
            outcome: Outcome::Skip,
            ..Self::new(tag, instance, expected, got, true)
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome != Outcome::Fail
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} | {} | {} | {}",
            self.tag, self.instance, self.expected, self.got, self.outcome
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Report {
    pub fn push(&mut self, line: CheckLine) {
        self.lines.push(line);
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn all_passed(&self) -> bool {
        self.lines.iter().all(CheckLine::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| l.outcome == Outcome::Fail)
    }

    pub fn summary(&self) -> ReportSummary {
        let count = |o| self.lines.iter().filter(|l| l.outcome == o).count();
        ReportSummary {
            total: self.lines.len(),
            passed: count(Outcome::Pass),
            failed: count(Outcome::Fail),
            skipped: count(Outcome::Skip),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Knobs shared by the constructive checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub solver: SolverConfig,
    /// Random vertex subsets or family members per check.
    pub samples: usize,
    pub seed: u64,
    /// Node budget for exact searches on reduction graphs.
    pub reduction_budget: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            solver: SolverConfig::default(),
            samples: 64,
            seed: 0x6b74_6d64,
            reduction_budget: 200_000,
        }
    }
}

/// Shorthand for printing an optional dimension.
pub(crate) fn show(value: Option<usize>) -> String {
    value.map_or_else(|| "none".to_string(), |v| v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admits() {
        let p = Prediction::new("x", "x", Payload::Interval { lo: 3, hi: 5 });
        assert_eq!(p.admits(Some(4)), Some(true));
        assert_eq!(p.admits(Some(6)), Some(false));
        assert_eq!(p.admits(None), Some(false));
        let inf = Prediction::new("x", "x", Payload::Infeasible);
        assert_eq!(inf.admits(None), Some(true));
        assert_eq!(Prediction::unknown().admits(Some(1)), None);
    }

    #[test]
    fn line_format() {
        let l = CheckLine::new("path-adjacency", "P_5 k=1 t=2", 2, 2, true);
        assert_eq!(l.to_string(), "path-adjacency | P_5 k=1 t=2 | 2 | 2 | PASS");
        let s = CheckLine::skipped("x", "y", "= 3", "<= 4");
        assert!(s.passed());
        assert_eq!(s.to_string(), "x | y | = 3 | <= 4 | SKIP");
    }
}
