use std::ops::RangeInclusive;

use serde::Serialize;

use crate::catalogue::{catalogue, IdentityRecord, ParamAssignment};

/// A disagreement between a record and a parent at the substituted point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyIssue {
    pub id: String,
    pub parent: String,
    pub params: ParamAssignment,
    /// `Some(k)` for a summand mismatch at term `k`; `None` for the closed form.
    pub term: Option<i64>,
    pub detail: String,
}

/// Compares `record` against each parent for every admissible `n` in
/// `n_range`: summands term by term always, closed forms wherever the parent
/// is admissible too. Records with rational or integer parameters besides
/// `n` are checked at `base` with `n` overwritten.
pub fn specialization_consistency(
    record: &IdentityRecord,
    base: &ParamAssignment,
    n_range: RangeInclusive<u32>,
) -> Vec<ConsistencyIssue> {
    let mut issues = Vec::new();
    for link in &record.parents {
        let Ok(parent) = catalogue().get(link.parent) else {
            issues.push(ConsistencyIssue {
                id: record.id.into(),
                parent: link.parent.into(),
                params: base.clone(),
                term: None,
                detail: "parent missing from registry".into(),
            });
            continue;
        };
        for n in n_range.clone() {
            let a = ParamAssignment { n, ..base.clone() };
            if !record.admissible(&a).is_admissible() {
                continue;
            }
            let pa = (link.map)(&a);
            let issue = |term, detail: String| ConsistencyIssue {
                id: record.id.into(),
                parent: link.parent.into(),
                params: a.clone(),
                term,
                detail,
            };
            for k in 1..=a.n() {
                match ((record.summand)(&a, k), (parent.summand)(&pa, k)) {
                    (Ok(x), Ok(y)) if x == y => {}
                    (x, y) => issues.push(issue(Some(k), format!("{x:?} vs {y:?}"))),
                }
            }
            if parent.admissible(&pa).is_admissible() {
                match (record.eval_rhs(&a), parent.eval_rhs(&pa)) {
                    (Ok(x), Ok(y)) if x == y => {}
                    (x, y) => issues.push(issue(None, format!("{x:?} vs {y:?}"))),
                }
            }
        }
    }
    issues
}
