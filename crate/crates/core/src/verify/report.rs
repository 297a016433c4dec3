//! Structured pass/fail records for identity suites.

use serde::{Deserialize, Serialize};

use crate::algebra::{Poly, Rational};
use crate::serde_exact;

/// The exact difference of the two sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Residual {
    Poly(#[serde(with = "serde_exact::poly")] Poly),
    Scalar(#[serde(with = "serde_exact::rational")] Rational),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Poly(p) => p.is_zero(),
            Residual::Scalar(r) => num_traits::Zero::is_zero(r),
        }
    }
}

impl From<Poly> for Residual {
    fn from(p: Poly) -> Self {
        Residual::Poly(p)
    }
}

impl From<Rational> for Residual {
    fn from(r: Rational) -> Self {
        Residual::Scalar(r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub label: String,
    pub params: String,
    /// Index `n` or probe degree; absent for scalar identities.
    pub n: Option<usize>,
    pub residual: Option<Residual>,
    pub pass: bool,
    /// Violated precondition, for cases that were not evaluated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl Case {
    pub fn checked(
        label: impl Into<String>,
        params: impl Into<String>,
        n: Option<usize>,
        residual: impl Into<Residual>,
    ) -> Self {
        let residual = residual.into();
        Case {
            label: label.into(),
            params: params.into(),
            n,
            pass: residual.is_zero(),
            residual: Some(residual),
            skipped: None,
        }
    }

    /// A boolean property with no natural residual (e.g. monotonicity).
    pub fn predicate(
        label: impl Into<String>,
        params: impl Into<String>,
        n: Option<usize>,
        holds: bool,
    ) -> Self {
        Case {
            label: label.into(),
            params: params.into(),
            n,
            residual: None,
            pass: holds,
            skipped: None,
        }
    }

    pub fn skipped(
        label: impl Into<String>,
        params: impl Into<String>,
        n: Option<usize>,
        reason: impl Into<String>,
    ) -> Self {
        Case {
            label: label.into(),
            params: params.into(),
            n,
            residual: None,
            pass: false,
            skipped: Some(reason.into()),
        }
    }

    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }

    pub fn status(&self) -> &'static str {
        match (self.pass, self.is_skipped()) {
            (_, true) => "skipped",
            (true, false) => "pass",
            (false, false) => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub grid: String,
    pub seed: Option<u64>,
    pub cases: Vec<Case>,
    pub all_pass: bool,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>, grid: impl Into<String>) -> Self {
        VerifyReport {
            suite: suite.into(),
            grid: grid.into(),
            seed: None,
            cases: Vec::new(),
            all_pass: true,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn push(&mut self, case: Case) {
        self.all_pass &= case.pass || case.is_skipped();
        self.cases.push(case);
    }

    pub fn extend(&mut self, cases: impl IntoIterator<Item = Case>) {
        for c in cases {
            self.push(c);
        }
    }

    /// Folds another report's cases into this one, prefixing their labels.
    pub fn absorb(&mut self, other: VerifyReport) {
        let prefix = other.suite;
        self.extend(other.cases.into_iter().map(|mut c| {
            c.label = format!("{prefix}/{}", c.label);
            c
        }));
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass && !c.is_skipped())
    }

    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }

    pub fn skipped(&self) -> usize {
        self.cases.iter().filter(|c| c.is_skipped()).count()
    }
}
