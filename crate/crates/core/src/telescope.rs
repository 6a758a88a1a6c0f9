//! The backward difference, the certificate `tau_k = C(x+k+1,k)/C(y+k,k)`
//! and the binomial sum it telescopes to. Everything is generic over
//! [`Scalar`], so seeding `x` or `y` with a [`HyperDual`](crate::exact::HyperDual)
//! differentiates the whole identity.

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::special::binom_shifted;

#[derive(Debug, Clone, PartialEq)]
pub struct SeedParams<S> {
    pub x: S,
    pub y: S,
    pub n: i64,
}

impl<S: Scalar> SeedParams<S> {
    pub fn new(x: S, y: S, n: i64) -> Self {
        SeedParams { x, y, n }
    }
}

/// `tau(k) - tau(k-1)`.
pub fn nabla<S, F>(term: F, k: i64) -> Result<S>
where
    S: Scalar,
    F: Fn(i64) -> Result<S>,
{
    Ok(term(k)? - term(k - 1)?)
}

fn invert(value: &impl Scalar, what: impl FnOnce() -> String) -> Result<()> {
    if value.value().is_zero() {
        Err(Error::Pole(what()))
    } else {
        Ok(())
    }
}

/// `C(x+k+1, k) / C(y+k, k)`.
pub fn certificate<S: Scalar>(x: &S, y: &S, k: i64) -> Result<S> {
    let den = binom_shifted(y, k)?;
    invert(&den, || format!("C(y+k,k)=0 at k={k}"))?;
    binom_shifted(&(x.clone() + S::one()), k)?.div(&den)
}

/// `nabla tau_k - C(x+k,k)/C(y+k,k) * (x-y+1)/(x+1)`; zero by the
/// certificate relation.
pub fn certificate_residual<S: Scalar>(x: &S, y: &S, k: i64) -> Result<S> {
    if k < 1 {
        return Err(Error::Precondition(format!("certificate_residual needs k >= 1, got {k}")));
    }
    let x1 = x.clone() + S::one();
    invert(&x1, || "x+1=0".to_string())?;
    let lhs = nabla(|j| certificate(x, y, j), k)?;
    let ratio = certificate_summand(x, y, k)?;
    let factor = (x.clone() - y.clone() + S::one()).div(&x1)?;
    Ok(lhs - ratio * factor)
}

/// `C(x+k,k) / C(y+k,k)`.
pub fn certificate_summand<S: Scalar>(x: &S, y: &S, k: i64) -> Result<S> {
    let den = binom_shifted(y, k)?;
    invert(&den, || format!("C(y+k,k)=0 at k={k}"))?;
    binom_shifted(x, k)?.div(&den)
}

/// `sum_{k=1..n} C(x+k,k) / C(y+k,k)`, summed left to right so the first
/// offending `k` is the one reported. Consecutive summands differ by the
/// factor `(x+k)/(y+k)`, and `C(y+k,k)` first vanishes where `y+k` does.
pub fn seed_lhs<S: Scalar>(p: &SeedParams<S>) -> Result<S> {
    let mut acc = S::zero();
    let mut term = S::one();
    for k in 1..=p.n {
        let yk = p.y.clone() + S::from(k);
        invert(&yk, || format!("C(y+k,k)=0 at k={k}"))?;
        term = term * (p.x.clone() + S::from(k)).div(&yk)?;
        acc = acc + term.clone();
    }
    Ok(acc)
}

/// `C(x+n+1,n)/C(y+n,n) * (x+1)/(x-y+1) - (x+1)/(x-y+1)`.
pub fn seed_rhs<S: Scalar>(p: &SeedParams<S>) -> Result<S> {
    let gap = p.x.clone() - p.y.clone() + S::one();
    invert(&gap, || "x-y+1=0".to_string())?;
    let den = binom_shifted(&p.y, p.n)?;
    invert(&den, || format!("C(y+n,n)=0 at n={}", p.n))?;
    let lead = (p.x.clone() + S::one()).div(&gap)?;
    let top = binom_shifted(&(p.x.clone() + S::one()), p.n)?;
    Ok(top.div(&den)? * lead.clone() - lead)
}
