use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Duration;

use serde::Serialize;
use tate_mirror::exactnum::QSeries;
use tate_mirror::graded::{BasisRule, Homogeneous};
use tate_mirror::weierstrass::WeierstrassCoeffs;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified claim. `expected` and `actual` are coefficient lists
/// written as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub expected: Vec<String>,
    pub actual: Vec<String>,
}

impl Check {
    /// A check that passes exactly when the two lists are equal.
    pub fn compare(id: impl Into<String>, anchor: &str, expected: Vec<String>, actual: Vec<String>) -> Check {
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        Check { id: id.into(), anchor: anchor.to_string(), status, expected, actual }
    }

    /// A check of a single value.
    pub fn value<T: Display + PartialEq>(id: impl Into<String>, anchor: &str, expected: T, actual: T) -> Check {
        Check::compare(id, anchor, vec![expected.to_string()], vec![actual.to_string()])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    /// Computed data that is not itself a check, such as series coefficients.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, Vec<String>>,
    /// Milliseconds; only set when timing is requested, so that reports for
    /// fixed inputs are byte-identical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u128>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> VerificationReport {
        VerificationReport {
            suite: suite.to_string(),
            parameters: BTreeMap::new(),
            checks: Vec::new(),
            data: BTreeMap::new(),
            duration_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Display) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    /// Appends another suite's checks and data under its name.
    pub fn absorb(&mut self, other: VerificationReport) {
        for mut c in other.checks {
            c.id = format!("{}/{}", other.suite, c.id);
            self.checks.push(c);
        }
        for (k, v) in other.data {
            self.data.insert(format!("{}/{k}", other.suite), v);
        }
    }

    pub fn set_duration(&mut self, d: Duration) {
        self.duration_ms = Some(d.as_millis());
    }
}

pub fn series(s: &QSeries) -> Vec<String> {
    s.coeffs().iter().map(ToString::to_string).collect()
}

/// Coefficients of each basis element in turn.
pub fn element<R: BasisRule>(e: &Homogeneous<R>) -> Vec<String> {
    e.coeffs().iter().flat_map(series).collect()
}

pub fn curve(w: &WeierstrassCoeffs<QSeries>) -> Vec<String> {
    w.iter().flat_map(series).collect()
}
