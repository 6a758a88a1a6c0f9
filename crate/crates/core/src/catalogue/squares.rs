//! Mixed derivative of the seed sum with both binomials shifted upward:
//! sums of `(p+k)!/(q+k)! H_{p+k} H_{q+k}` and the squared-harmonic
//! moments that follow from it.

use super::{h, over, rec, Family, IdentityRecord, ParamAssignment, N, P, Q};
use crate::error::Result;
use crate::exact::Rational;
use crate::special::factorial_ratio;

use Family::{Corollary, Specialization, Theorem};

fn thm_c(p: i64, q: i64, n: i64) -> Result<Rational> {
    let g = p - q + 1;
    let two_over = over(2, g)?;
    let upper = g * h(p + n + 1)? * h(q + n)? - h(p + n + 1)? - h(q + n)? + &two_over;
    let lower = g * h(p + 1)? * h(q)? - h(p + 1)? - h(q)? + two_over;
    Ok(upper * over(factorial_ratio(p + n + 1, q + n), g * g)? - over(factorial_ratio(p + 1, q), g * g)? * lower)
}

fn corl_j(p: i64, n: i64) -> Result<Rational> {
    let hs = h(p + n)?;
    let hp = h(p)?;
    Ok((p + n + 1) * hs.square() - (2 * p + 2 * n + 1) * hs - (p + 1) * hp.square() + (2 * p + 1) * hp + 2 * n)
}

fn corl_k(p: i64, n: i64) -> Result<Rational> {
    let hs = h(p + n)?;
    let hp = h(p)?;
    Ok(over((n - p) * (n + p + 1), 2)? * hs.square() - over(n * n - n - 1 - p * (2 * n + 3 * p + 3), 2)? * hs
        + over(p * (p + 1), 2)? * hp.square()
        - over(3 * p * p + 3 * p + 1, 2)? * hp
        + over(n * (n - 6 * p - 3), 4)?)
}

fn corl_l(p: i64, n: i64) -> Result<Rational> {
    let hs = h(p + n)?;
    let hp = h(p)?;
    let lin = 4 * n.pow(3) - 3 * n * n - 6 * p * n * n - n + 12 * p * n + 12 * p * p * n + 3 + 17 * p + 33 * p * p
        + 22 * p.pow(3);
    Ok(over((p + n + 1) * (2 * n * n + n - 2 * p * n + p + 2 * p * p), 6)? * hs.square()
        - over(p * (p + 1) * (2 * p + 1), 6)? * hp.square()
        - over(lin, 18)? * hs
        + over((2 * p + 1) * (11 * p * p + 11 * p + 3), 18)? * hp
        + over(n * (8 * n * n - 15 * n - 30 * p * n + 25 + 132 * p + 132 * p * p), 108)?)
}

fn with_p(n: u32, p: u32) -> ParamAssignment {
    ParamAssignment::new(n).with_p(p)
}

pub(super) fn register(out: &mut Vec<IdentityRecord>) {
    out.push(
        rec("thm-c", Theorem, &[P, Q, N], r"Performing the replacements $x\to x+p$")
            .guard("pole p-q+1=0", |a| a.q() != a.p() + 1)
            .lhs("(p+k)!/(q+k)! H_{p+k} H_{q+k}", |a, k| {
                let (p, q) = (a.p(), a.q());
                Ok(factorial_ratio(p + k, q + k) * h(p + k)? * h(q + k)?)
            })
            .rhs(|a| thm_c(a.p(), a.q(), a.n()))
            .build(),
    );

    out.push(
        rec("corl-j", Corollary, &[P, N], r"Making $q=p$ in Theorem")
            .lhs("H_{p+k}^2", |a, k| Ok(h(a.p() + k)?.square()))
            .rhs(|a| corl_j(a.p(), a.n()))
            .parent("thm-c", "q=p", |a| with_p(a.n, a.p.unwrap()).with_q(a.p.unwrap()))
            .build(),
    );
    out.push(
        rec("corl-j:p=0", Specialization, &[N], "Equation (2.8)")
            .lhs("H_k^2", |_, k| Ok(h(k)?.square()))
            .rhs(|a| {
                let n = a.n();
                let hn = h(n)?;
                Ok((n + 1) * hn.square() - (2 * n + 1) * hn + 2 * n)
            })
            .parent("corl-j", "p=0", |a| with_p(a.n, 0))
            .build(),
    );
    out.push(
        rec("corl-j:p=n", Specialization, &[N], r"Taking $p=n$ and $p=2n$ in Corollary")
            .lhs("H_{n+k}^2", |a, k| Ok(h(a.n() + k)?.square()))
            .rhs(|a| {
                let n = a.n();
                let (h2, h1) = (h(2 * n)?, h(n)?);
                Ok((2 * n + 1) * h2.square() - (4 * n + 1) * h2 - (n + 1) * h1.square() + (2 * n + 1) * h1 + 2 * n)
            })
            .parent("corl-j", "p=n", |a| with_p(a.n, a.n))
            .build(),
    );
    out.push(
        rec("corl-j:p=2n", Specialization, &[N], r"Taking $p=n$ and $p=2n$ in Corollary")
            .lhs("H_{2n+k}^2", |a, k| Ok(h(2 * a.n() + k)?.square()))
            .rhs(|a| {
                let n = a.n();
                let (h3, h2) = (h(3 * n)?, h(2 * n)?);
                Ok((3 * n + 1) * h3.square() - (6 * n + 1) * h3 - (2 * n + 1) * h2.square() + (4 * n + 1) * h2
                    + 2 * n)
            })
            .parent("corl-j", "p=2n", |a| with_p(a.n, 2 * a.n))
            .build(),
    );

    out.push(
        rec("corl-k", Corollary, &[P, N], r"Letting $q=p-1$ in Theorem")
            .lhs("k H_{p+k}^2", |a, k| Ok(k * h(a.p() + k)?.square()))
            .rhs(|a| corl_k(a.p(), a.n()))
            .note("derived through q=p-1 but stated for all p >= 0; p=0 is swept and checked by brute force")
            .build(),
    );
    out.push(
        rec("corl-k:p=0", Specialization, &[N], r"When $p=0$, Corollary")
            .lhs("k H_k^2", |_, k| Ok(k * h(k)?.square()))
            .rhs(|a| {
                let n = a.n();
                let hn = h(n)?;
                Ok(over(n * (n + 1), 2)? * hn.square() - over(n * n - n - 1, 2)? * hn + over(n * (n - 3), 4)?)
            })
            .parent("corl-k", "p=0", |a| with_p(a.n, 0))
            .build(),
    );
    out.push(
        rec("corl-k:p=n", Specialization, &[N], r"Setting $p=n$ and $p=2n$ in Corollary")
            .lhs("k H_{n+k}^2", |a, k| Ok(k * h(a.n() + k)?.square()))
            .rhs(|a| {
                let n = a.n();
                let (h2, h1) = (h(2 * n)?, h(n)?);
                Ok(over((2 * n + 1) * (2 * n + 1), 2)? * h2 + over(n * (n + 1), 2)? * h1.square()
                    - over(3 * n * n + 3 * n + 1, 2)? * h1
                    - over(n * (5 * n + 3), 4)?)
            })
            .parent("corl-k", "p=n", |a| with_p(a.n, a.n))
            .build(),
    );
    out.push(
        rec("corl-k:p=2n", Specialization, &[N], r"Setting $p=n$ and $p=2n$ in Corollary")
            .lhs("k H_{2n+k}^2", |a, k| Ok(k * h(2 * a.n() + k)?.square()))
            .rhs(|a| {
                let n = a.n();
                let (h3, h2) = (h(3 * n)?, h(2 * n)?);
                Ok(-over(n * (3 * n + 1), 2)? * h3.square() + over(15 * n * n + 7 * n + 1, 2)? * h3
                    + n * (2 * n + 1) * h2.square()
                    - over(12 * n * n + 6 * n + 1, 2)? * h2
                    - over(n * (11 * n + 3), 4)?)
            })
            .parent("corl-k", "p=2n", |a| with_p(a.n, 2 * a.n))
            .build(),
    );

    out.push(
        rec("corl-l", Corollary, &[P, N], r"Making $q=p-2$ in Theorem")
            .lhs("k^2 H_{p+k}^2", |a, k| Ok(k * k * h(a.p() + k)?.square()))
            .rhs(|a| corl_l(a.p(), a.n()))
            .build(),
    );
    out.push(
        rec("corl-l:p=0", Specialization, &[N], r"When $p=0$, Corollary")
            .lhs("k^2 H_k^2", |_, k| Ok(k * k * h(k)?.square()))
            .rhs(|a| {
                let n = a.n();
                let hn = h(n)?;
                Ok(over(n * (n + 1) * (2 * n + 1), 6)? * hn.square() - over(4 * n.pow(3) - 3 * n * n - n + 3, 18)? * hn
                    + over(n * (8 * n * n - 15 * n + 25), 108)?)
            })
            .parent("corl-l", "p=0", |a| with_p(a.n, 0))
            .build(),
    );
    out.push(
        rec("corl-l:p=n", Specialization, &[N], r"Taking $p=n$ and $p=2n$ in Corollary")
            .lhs("k^2 H_{n+k}^2", |a, k| Ok(k * k * h(a.n() + k)?.square()))
            .rhs(|a| {
                let n = a.n();
                let (h2, h1) = (h(2 * n)?, h(n)?);
                Ok(over(n * (n + 1) * (2 * n + 1), 3)? * h2.square()
                    - over(32 * n.pow(3) + 42 * n * n + 16 * n + 3, 18)? * h2
                    - over(n * (n + 1) * (2 * n + 1), 6)? * h1.square()
                    + over((2 * n + 1) * (11 * n * n + 11 * n + 3), 18)? * h1
                    + over(n * (110 * n * n + 117 * n + 25), 108)?)
            })
            .parent("corl-l", "p=n", |a| with_p(a.n, a.n))
            .build(),
    );
    out.push(
        rec("corl-l:p=2n", Specialization, &[N], r"Taking $p=n$ and $p=2n$ in Corollary")
            .lhs("k^2 H_{2n+k}^2", |a, k| Ok(k * k * h(2 * a.n() + k)?.square()))
            .rhs(|a| {
                let n = a.n();
                let (h3, h2) = (h(3 * n)?, h(2 * n)?);
                Ok(over(n * (2 * n + 1) * (3 * n + 1), 2)? * h3.square()
                    - over(72 * n.pow(3) + 51 * n * n + 11 * n + 1, 6)? * h3
                    - over(n * (2 * n + 1) * (4 * n + 1), 3)? * h2.square()
                    + over((4 * n + 1) * (44 * n * n + 22 * n + 3), 18)? * h2
                    + over(n * (476 * n * n + 249 * n + 25), 108)?)
            })
            .parent("corl-l", "p=2n", |a| with_p(a.n, 2 * a.n))
            .build(),
    );
}
