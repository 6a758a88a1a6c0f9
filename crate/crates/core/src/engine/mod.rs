//! Exhaustive grid verification of catalogue records and mechanical replay
//! of the theorem derivations.
//!
//! Every admissible grid point is checked by exact equality. Points that fail
//! a guard are recorded as skipped with the guard's name; a pole reached
//! after all guards passed is a failure, since it means a guard is missing.

mod consistency;
mod derive;
mod grid;
mod report;

use std::time::Instant;

pub use consistency::{specialization_consistency, ConsistencyIssue};
pub use derive::{derive, derive_first_order, derive_second_order, DERIVABLE};
pub use grid::ParamGrid;
pub use report::{DerivationReport, FailedPoint, SkippedPoint, VerificationReport};

use crate::catalogue::{catalogue, Admissibility, IdentityRecord, ParamAssignment};
use crate::error::Result;

/// Environment variable overriding the worker count.
pub const WORKERS_ENV: &str = "HARMONIC_ID_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Global rayon pool. Without the `parallel` feature this and
    /// `Workers` run sequentially.
    #[default]
    Parallel,
    Workers(usize),
}

impl Execution {
    /// `HARMONIC_ID_WORKERS` if set and positive, else the default pool.
    pub fn from_env() -> Self {
        std::env::var(WORKERS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map_or(Execution::Parallel, Execution::with_workers)
    }

    pub fn with_workers(w: usize) -> Self {
        match w {
            0 => Execution::Parallel,
            1 => Execution::Sequential,
            w => Execution::Workers(w),
        }
    }

    /// Applies `f` to every item, returning results in input order.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            #[cfg(feature = "parallel")]
            Execution::Workers(w) => {
                use rayon::prelude::*;
                match rayon::ThreadPoolBuilder::new().num_threads(w).build() {
                    Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
                    Err(_) => items.iter().map(f).collect(),
                }
            }
            #[cfg(not(feature = "parallel"))]
            Execution::Parallel | Execution::Workers(_) => items.iter().map(f).collect(),
        }
    }
}

enum Outcome {
    Skipped(String),
    Passed,
    Failed(Box<FailedPoint>),
}

fn check_point(record: &IdentityRecord, a: &ParamAssignment) -> Outcome {
    if let Admissibility::Skipped(reason) = record.admissible(a) {
        return Outcome::Skipped(reason);
    }
    let lhs = record.eval_lhs(a);
    let rhs = record.eval_rhs(a);
    match (lhs, rhs) {
        (Ok(l), Ok(r)) if l == r => Outcome::Passed,
        (l, r) => {
            let error = [l.as_ref().err(), r.as_ref().err()]
                .into_iter()
                .flatten()
                .map(|e| e.to_string())
                .collect::<Vec<_>>();
            Outcome::Failed(Box::new(FailedPoint {
                params: a.clone(),
                lhs: l.ok(),
                rhs: r.ok(),
                error: (!error.is_empty()).then(|| error.join("; ")),
            }))
        }
    }
}

/// Sweeps `record` over `grid`. Accepts records outside the registry, which
/// is how mutants are checked.
pub fn verify_record(record: &IdentityRecord, grid: &ParamGrid, exec: Execution) -> VerificationReport {
    let start = Instant::now();
    let points = grid.points(record);
    let outcomes = exec.map(&points, |a| check_point(record, a));
    let mut report = VerificationReport {
        id: record.id.to_string(),
        anchor: record.anchor.to_string(),
        checked: 0,
        passed: 0,
        skipped: Vec::new(),
        failed: Vec::new(),
        elapsed_ms: 0,
    };
    for (a, outcome) in points.into_iter().zip(outcomes) {
        match outcome {
            Outcome::Skipped(reason) => report.skipped.push(SkippedPoint { params: a, reason }),
            Outcome::Passed => {
                report.checked += 1;
                report.passed += 1;
            }
            Outcome::Failed(f) => {
                report.checked += 1;
                report.failed.push(*f);
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

pub fn verify(id: &str, grid: &ParamGrid) -> Result<VerificationReport> {
    verify_with(id, grid, Execution::from_env())
}

pub fn verify_with(id: &str, grid: &ParamGrid, exec: Execution) -> Result<VerificationReport> {
    Ok(verify_record(catalogue().get(id)?, grid, exec))
}

/// One report per registry record, in registry order.
pub fn verify_all(grid: &ParamGrid) -> Vec<VerificationReport> {
    verify_all_with(grid, Execution::from_env())
}

pub fn verify_all_with(grid: &ParamGrid, exec: Execution) -> Vec<VerificationReport> {
    catalogue().records().iter().map(|r| verify_record(r, grid, exec)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    #[test]
    fn seed_small_grid() {
        let grid = ParamGrid {
            n_range: 0..=3,
            p_range: 0..=0,
            q_range: 0..=0,
            x_samples: vec![Rational::from(1), Rational::from(0)],
        };
        let rep = verify_with("seed", &grid, Execution::Sequential).unwrap();
        assert!(rep.passed >= 1);
        assert!(rep.failed.is_empty());
        assert_eq!(rep.checked, rep.passed);
    }

    #[test]
    fn spe_chu_skips_small_n() {
        let grid = ParamGrid { n_range: 1..=3, ..ParamGrid::new(0, 0, 0) };
        let rep = verify_with("spe-chu", &grid, Execution::Sequential).unwrap();
        assert_eq!(rep.skipped.len(), 2);
        assert!(rep.skipped.iter().all(|s| s.reason == "requires n>2"));
        assert_eq!(rep.checked, 1);
        assert_eq!(rep.passed, 1);
    }

    #[test]
    fn thm_a_pole_is_skipped() {
        let grid = ParamGrid { n_range: 2..=2, p_range: 2..=2, q_range: 0..=0, x_samples: vec![Rational::from(1)] };
        let rep = verify_with("thm-a", &grid, Execution::Sequential).unwrap();
        assert_eq!(rep.checked, 0);
        assert_eq!(rep.skipped[0].reason, "pole x-p+1=0");
    }

    #[test]
    fn unknown_id() {
        assert!(verify_with("thm-q", &ParamGrid::default(), Execution::Sequential).is_err());
    }

    #[test]
    fn empty_grid_checks_nothing() {
        for rep in verify_all_with(&ParamGrid::empty(), Execution::Sequential) {
            assert_eq!(rep.checked, 0);
            assert!(rep.skipped.is_empty());
        }
    }

    #[test]
    fn execution_modes_agree() {
        let grid = ParamGrid::new(6, 2, 2);
        let a = verify_with("thm-c", &grid, Execution::Sequential).unwrap();
        let b = verify_with("thm-c", &grid, Execution::Workers(3)).unwrap();
        assert!(a.same_outcome(&b));
    }

    #[test]
    fn workers_from_count() {
        assert_eq!(Execution::with_workers(1), Execution::Sequential);
        assert_eq!(Execution::with_workers(0), Execution::Parallel);
        assert_eq!(Execution::with_workers(4), Execution::Workers(4));
    }
}
