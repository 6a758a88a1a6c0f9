use serde::{Deserialize, Serialize};

use crate::catalogue::ParamAssignment;
use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedPoint {
    pub params: ParamAssignment,
    pub reason: String,
}

/// A point where both sides were computed and differ, or where evaluation
/// hit a pole despite every guard holding. In the latter case the missing
/// side is `None` and `error` says why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailedPoint {
    pub params: ParamAssignment,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub anchor: String,
    pub checked: u64,
    pub passed: u64,
    pub skipped: Vec<SkippedPoint>,
    pub failed: Vec<FailedPoint>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.failed.is_empty()
    }

    /// First failure in grid order.
    pub fn first_counterexample(&self) -> Option<&FailedPoint> {
        self.failed.first()
    }

    /// Equality ignoring wall-clock time.
    pub fn same_outcome(&self, other: &Self) -> bool {
        VerificationReport { elapsed_ms: 0, ..self.clone() } == VerificationReport { elapsed_ms: 0, ..other.clone() }
    }
}

/// Outcome of replaying one theorem's derivation at one point.
///
/// `lhs_coeffs` and `rhs_coeffs` are the hyper-dual components
/// `(value, d/dx, d/dy, d2/dxdy)` of the substituted seed sum and of its
/// closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationReport {
    pub theorem: String,
    pub params: ParamAssignment,
    pub lhs_coeffs: [Rational; 4],
    pub rhs_coeffs: [Rational; 4],
    pub reconstruction: Rational,
    pub catalogue_lhs: Rational,
    pub catalogue_rhs: Rational,
    pub matched: bool,
}

impl DerivationReport {
    pub fn ensure_match(&self) -> Result<()> {
        if self.matched {
            return Ok(());
        }
        let catalogue = if self.reconstruction != self.catalogue_rhs {
            self.catalogue_rhs.clone()
        } else {
            self.catalogue_lhs.clone()
        };
        Err(Error::Mismatch {
            id: self.theorem.clone(),
            reconstruction: Box::new(self.reconstruction.clone()),
            catalogue: Box::new(catalogue),
        })
    }
}
