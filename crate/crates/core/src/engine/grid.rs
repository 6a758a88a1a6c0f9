use std::ops::RangeInclusive;

use crate::catalogue::{IdentityRecord, ParamAssignment};
use crate::exact::Rational;

/// Finite sweep domain. Points are enumerated in the record's declared
/// parameter order with `n` innermost, so iteration is deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamGrid {
    pub n_range: RangeInclusive<u32>,
    pub p_range: RangeInclusive<u32>,
    pub q_range: RangeInclusive<u32>,
    /// Used for every rational parameter, `x` and `y` alike.
    pub x_samples: Vec<Rational>,
}

impl ParamGrid {
    pub fn default_x_samples() -> Vec<Rational> {
        [(7, 1), (5, 2), (-9, 4), (1, 3), (-1, 3), (11, 1), (-7, 2), (4, 5)]
            .into_iter()
            .map(|(n, d)| Rational::frac(n, d))
            .collect()
    }

    pub fn new(n_max: u32, p_max: u32, q_max: u32) -> Self {
        ParamGrid {
            n_range: 0..=n_max,
            p_range: 0..=p_max,
            q_range: 0..=q_max,
            x_samples: Self::default_x_samples(),
        }
    }

    #[allow(clippy::reversed_empty_ranges)]
    pub fn empty() -> Self {
        ParamGrid { n_range: 1..=0, p_range: 1..=0, q_range: 1..=0, x_samples: Vec::new() }
    }

    pub fn with_x_samples(mut self, samples: Vec<Rational>) -> Self {
        self.x_samples = samples;
        self
    }

    pub fn push_x_sample(&mut self, x: Rational) {
        if !self.x_samples.contains(&x) {
            self.x_samples.push(x);
        }
    }

    pub fn points(&self, record: &IdentityRecord) -> Vec<ParamAssignment> {
        let mut outer = vec![ParamAssignment::default()];
        for param in record.params.iter().filter(|p| p.name != "n") {
            let mut next = Vec::new();
            for base in &outer {
                match param.name {
                    "p" => next.extend(self.p_range.clone().map(|p| base.clone().with_p(p))),
                    "q" => next.extend(self.q_range.clone().map(|q| base.clone().with_q(q))),
                    "x" => next.extend(self.x_samples.iter().map(|x| base.clone().with_x(x.clone()))),
                    "y" => next.extend(self.x_samples.iter().map(|y| base.clone().with_y(y.clone()))),
                    other => unreachable!("unknown parameter {other}"),
                }
            }
            outer = next;
        }
        let mut out = Vec::with_capacity(outer.len() * self.n_range.clone().count());
        for base in outer {
            for n in self.n_range.clone() {
                let mut a = base.clone();
                a.n = n;
                out.push(a);
            }
        }
        out
    }
}

impl Default for ParamGrid {
    /// n in 0..=25, p and q in 0..=8, eight rational samples.
    fn default() -> Self {
        ParamGrid::new(25, 8, 8)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::catalogue;

    #[test]
    fn order_is_declared_with_n_innermost() {
        let grid = ParamGrid::new(2, 1, 1);
        let pts = grid.points(catalogue().get("thm-c").unwrap());
        assert_eq!(pts.len(), 2 * 2 * 3);
        assert_eq!((pts[0].p, pts[0].q, pts[0].n), (Some(0), Some(0), 0));
        assert_eq!((pts[1].p, pts[1].q, pts[1].n), (Some(0), Some(0), 1));
        assert_eq!((pts[3].p, pts[3].q, pts[3].n), (Some(0), Some(1), 0));
    }

    #[test]
    fn seed_uses_samples_for_both_axes() {
        let pts = ParamGrid::default().points(catalogue().get("seed").unwrap());
        assert_eq!(pts.len(), 8 * 8 * 26);
    }

    #[test]
    fn empty_grid_has_no_points() {
        for r in catalogue().records() {
            assert!(ParamGrid::empty().points(r).is_empty());
        }
    }
}
