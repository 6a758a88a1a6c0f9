//! Replays each theorem's derivation: substitute into the seed identity,
//! seed the differentiation variables as hyper-duals, check both sides agree
//! componentwise, then rebuild the harmonic sum from the extracted
//! coefficients.
//!
//! Write `[a, b, c, d]` for the components (value, d/dx, d/dy, d2/dxdy) of
//! the seed sum and `w_k` for its summand at the base point. The product rule
//! on `C(s+e,k)` and `1/C(u+e,k)` yields the reconstruction maps below; each
//! was validated against brute-force summation before being fixed here.
//!
//! | theorem | x slot | y slot | reconstruction | rescale |
//! |---|---|---|---|---|
//! | thm-a | x | p + ey | `-c + H_p a` | 1 |
//! | thm-b | p + ey | x | `c + H_p a` | 1 |
//! | thm-c | p + ex | q + ey | `-d - H_p c + H_q b + H_p H_q a` | `p!/q!` |
//! | thm-d | -(p+n+1) - ex | q + ey | `d - H_s c - H_q b + H_s H_q a` | `C(p+q+n,q)` |
//! | thm-e | q + ex | -(p+n+1) - ey | `d + H_s b + H_q c + H_s H_q a` | `1/C(p+q+n,q)` |
//!
//! with `H_s = H_{p+n}`.

use crate::catalogue::{catalogue, ParamAssignment};
use crate::error::{Error, Result};
use crate::exact::{Axis, HyperDual, Rational};
use crate::special::{choose, factorial_ratio, harmonic};
use crate::telescope::{seed_lhs, seed_rhs, SeedParams};

use super::report::DerivationReport;

/// Theorems with a mechanical derivation.
pub const DERIVABLE: [&str; 5] = ["thm-a", "thm-b", "thm-c", "thm-d", "thm-e"];

fn constant(v: impl Into<Rational>) -> HyperDual {
    HyperDual::constant(v.into())
}

fn rising(base: i64, axis: Axis) -> HyperDual {
    HyperDual::seed(Rational::from(base), axis)
}

/// `-(p+n+1) - e` along `axis`.
fn falling(p: i64, n: i64, axis: Axis) -> HyperDual {
    constant(-(p + n + 1)) - rising(0, axis)
}

struct Substituted {
    lhs: HyperDual,
    rhs: HyperDual,
}

fn substitute(id: &str, x: HyperDual, y: HyperDual, n: i64) -> Result<Substituted> {
    let sp = SeedParams::new(x, y, n);
    let lhs = seed_lhs(&sp)?;
    let rhs = seed_rhs(&sp)?;
    if lhs != rhs {
        let i = (0..4).find(|&i| lhs.components()[i] != rhs.components()[i]).unwrap_or(0);
        return Err(Error::Mismatch {
            id: format!("{id} seed component {i}"),
            reconstruction: Box::new(lhs.components()[i].clone()),
            catalogue: Box::new(rhs.components()[i].clone()),
        });
    }
    Ok(Substituted { lhs, rhs })
}

fn finish(id: &str, params: ParamAssignment, s: Substituted, reconstruction: Rational) -> Result<DerivationReport> {
    let record = catalogue().get(id)?;
    let catalogue_lhs = record.eval_lhs(&params)?;
    let catalogue_rhs = record.eval_rhs(&params)?;
    let matched = reconstruction == catalogue_lhs && reconstruction == catalogue_rhs;
    Ok(DerivationReport {
        theorem: id.to_string(),
        params,
        lhs_coeffs: s.lhs.components(),
        rhs_coeffs: s.rhs.components(),
        reconstruction,
        catalogue_lhs,
        catalogue_rhs,
        matched,
    })
}

/// thm-a or thm-b at `(x, p, n)`: one derivative along `y`.
pub fn derive_first_order(id: &str, x: &Rational, p: u32, n: u32) -> Result<DerivationReport> {
    let params = ParamAssignment::new(n).with_p(p).with_x(x.clone());
    catalogue().get(id)?.eval_rhs(&params)?;
    let (pi, ni) = (i64::from(p), i64::from(n));
    let hp = harmonic(pi)?;
    let (s, sign) = match id {
        "thm-a" => (substitute(id, constant(x.clone()), rising(pi, Axis::Y), ni)?, -1),
        "thm-b" => (substitute(id, rising(pi, Axis::Y), constant(x.clone()), ni)?, 1),
        _ => return Err(Error::Precondition(format!("{id} is not a first-order theorem"))),
    };
    let recon = sign * &s.lhs.c + hp * &s.lhs.a;
    finish(id, params, s, recon)
}

/// thm-c, thm-d or thm-e at `(p, q, n)`: the mixed derivative.
pub fn derive_second_order(id: &str, p: u32, q: u32, n: u32) -> Result<DerivationReport> {
    let params = ParamAssignment::new(n).with_p(p).with_q(q);
    catalogue().get(id)?.eval_rhs(&params)?;
    let (p, q, n) = (i64::from(p), i64::from(q), i64::from(n));
    let hq = harmonic(q)?;
    let (s, reconstruction) = match id {
        "thm-c" => {
            let s = substitute(id, rising(p, Axis::X), rising(q, Axis::Y), n)?;
            let hp = harmonic(p)?;
            let [a, b, c, d] = s.lhs.components();
            let sum = -d - &hp * c + &hq * b + hp * hq * a;
            (s, sum * factorial_ratio(p, q))
        }
        "thm-d" => {
            let s = substitute(id, falling(p, n, Axis::X), rising(q, Axis::Y), n)?;
            let hs = harmonic(p + n)?;
            let [a, b, c, d] = s.lhs.components();
            let sum = d - &hs * c - &hq * b + hs * hq * a;
            (s, sum * choose(p + q + n, q))
        }
        "thm-e" => {
            let s = substitute(id, rising(q, Axis::X), falling(p, n, Axis::Y), n)?;
            let hs = harmonic(p + n)?;
            let [a, b, c, d] = s.lhs.components();
            let sum = d + &hs * b + &hq * c + hs * hq * a;
            let inv = choose(p + q + n, q).recip()?;
            (s, sum * inv)
        }
        _ => return Err(Error::Precondition(format!("{id} is not a second-order theorem"))),
    };
    finish(id, params, s, reconstruction)
}

/// Dispatches on `id`, reading `x` (first order) or `q` (second order) from `a`.
pub fn derive(id: &str, a: &ParamAssignment) -> Result<DerivationReport> {
    let record = catalogue().get(id)?;
    record.conforms(a)?;
    match id {
        "thm-a" | "thm-b" => derive_first_order(id, a.x(), a.p.unwrap_or(0), a.n),
        "thm-c" | "thm-d" | "thm-e" => derive_second_order(id, a.p.unwrap_or(0), a.q.unwrap_or(0), a.n),
        _ => Err(Error::Precondition(format!("{id} has no mechanical derivation; choose one of {}", DERIVABLE.join(", ")))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: i64) -> Rational {
        harmonic(n).unwrap()
    }

    #[test]
    fn thm_a_example() {
        let rep = derive_first_order("thm-a", &Rational::from(2), 1, 3).unwrap();
        assert!(rep.matched);
        assert_eq!(rep.lhs_coeffs, rep.rhs_coeffs);
    }

    #[test]
    fn thm_a_one_term() {
        let rep = derive_first_order("thm-a", &Rational::from(0), 0, 1).unwrap();
        assert_eq!(rep.reconstruction, Rational::one());
        assert!(rep.matched);
    }

    #[test]
    fn empty_sum_has_zero_coefficients() {
        let rep = derive_first_order("thm-a", &Rational::frac(5, 2), 3, 0).unwrap();
        assert!(rep.lhs_coeffs.iter().all(Rational::is_zero));
        assert!(rep.matched);
    }

    #[test]
    fn thm_c_square_example() {
        let rep = derive_second_order("thm-c", 1, 1, 2).unwrap();
        assert_eq!(rep.reconstruction, h(2).square() + h(3).square());
        assert!(rep.matched);
    }

    #[test]
    fn thm_d_and_thm_e_examples() {
        assert!(derive_second_order("thm-d", 1, 0, 1).unwrap().matched);
        assert!(derive_second_order("thm-e", 0, 0, 1).unwrap().matched);
    }

    #[test]
    fn guards_are_honoured() {
        assert!(matches!(
            derive_first_order("thm-a", &Rational::from(1), 2, 3),
            Err(Error::GuardViolation { .. })
        ));
        assert!(matches!(derive_second_order("thm-d", 0, 1, 1), Err(Error::GuardViolation { .. })));
        assert!(derive_second_order("thm-a", 0, 1, 1).is_err());
    }
}
