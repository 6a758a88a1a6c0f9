//! Mixed derivative with the lower binomial reflected: alternating sums
//! `(-1)^k k^e H_k H_{p+n-k} / C(p+n,k)`.

use super::{c, h, over, rec, sgn, Family, IdentityRecord, ParamAssignment, N, P, Q};
use crate::error::Result;
use crate::exact::Rational;

use Family::{Corollary, Specialization, Theorem};

/// `H_a H_b - H_a/s - H_b/s + 2/s^2`.
fn bracket(ha: &Rational, hb: &Rational, s: i64) -> Result<Rational> {
    Ok(ha * hb - over(ha + hb, s)? + over(2, s * s)?)
}

fn thm_e(p: i64, q: i64, n: i64) -> Result<Rational> {
    let s = p + q + n + 2;
    let first = bracket(&h(p)?, &h(q + n + 1)?, s)? * over(sgn(n), c(p + q + n, p))? * over(q + n + 1, s)?;
    let second = over(1, c(p + q + n, q))? * over(q + 1, s)? * bracket(&h(p + n)?, &h(q + 1)?, s)?;
    Ok(first - second)
}

fn corl_p(p: i64, n: i64) -> Result<Rational> {
    let s = p + n + 2;
    Ok(bracket(&h(p)?, &h(n + 1)?, s)? * over(sgn(n), c(p + n, p))? * over(n + 1, s)?
        - over(p + n + 1, s * s)? * (h(p + n)? - over(p + n, (p + n + 1) * s)?))
}

fn corl_q(p: i64, n: i64) -> Result<Rational> {
    let (t2, t3) = (p + n + 2, p + n + 3);
    let u = p + n + 1;
    let a = over(n * n + 3 * n + p * n + p + 1, t2 * t3)?;
    let b = over(1, t2 * t2)? - over(n + 2, t3 * t3)?;
    let cc = over(u, t2 * t2)? - over(p + 1, t3 * t3)?;
    let d = over(p + n, t2.pow(3))? - over(p - n - 1, t3.pow(3))?;
    let e = over(u * u, t2 * t2)? - over(u * t2, t3 * t3)?;
    let f = over((p + n) * u, t2.pow(3))? - over(u * u, t3.pow(3))?;
    let (h1, hp) = (h(n + 1)?, h(p)?);
    let brace = a * &h1 * &hp + b * h1 - cc * hp + d;
    Ok(sgn(n) * over(n + 1, c(p + n, n))? * brace - e * h(u)? + f)
}

fn corl_r(p: i64, n: i64) -> Result<Rational> {
    let (t2, t3, t4) = (p + n + 2, p + n + 3, p + n + 4);
    let u = p + n + 1;
    let rr = over(1, t2)? - over(3 * n + 6, t3)? + over((n + 2) * (n + 3), t4)?;
    let s = over(1, t2 * t2)? - over(3 * n + 6, t3 * t3)? + over((n + 2) * (n + 3), t4 * t4)?;
    let t = over(u * u, t2 * t2)? - over((p + 1) * (2 * p + 2 * n + 3), t3 * t3)? + over((p + 1) * (p + 2), t4 * t4)?;
    let uu = over(2 * u, t2.pow(3))? - over(2 * n * n + 7 * n + 2 * p * n + 7 * p + 9, t3.pow(3))?
        + over(3 * n + 2 * p * n + 5 * p + 8, t4.pow(3))?;
    let v = (over(2 * u + 1, t2 * t2)? - over(5 * p + 5 * n + 12, t3 * t3)? + over(3 * p + 3 * n + 10, t4 * t4)?) * u;
    let w = (over(2 * u, t2.pow(3))? - over(5 * p + 5 * n + 9, t3.pow(3))? + over(3 * p + 3 * n + 8, t4.pow(3))?) * u;
    let (h1, hp) = (h(n + 1)?, h(p)?);
    let brace = rr * &h1 * &hp - s * h1 - t * hp - uu;
    Ok(sgn(n) * over(n + 1, c(p + n, n))? * brace + v * h(u)? - w)
}

/// `(-1)^k k^e H_k H_{top-k} / C(top,k)`.
fn term(top: i64, k: i64, e: u32) -> Result<Rational> {
    over(sgn(k) * Rational::from(k).pow(e) * h(k)? * h(top - k)?, c(top, k))
}

fn with_p(n: u32, p: u32) -> ParamAssignment {
    ParamAssignment::new(n).with_p(p)
}

pub(super) fn register(out: &mut Vec<IdentityRecord>) {
    out.push(
        rec("thm-e", Theorem, &[P, Q, N], r"Performing the replacements $x\to x+q$")
            .lhs("(-1)^k H_{p+n-k} H_{q+k} / C(p+q+n,q+k)", |a, k| {
                let (p, q, n) = (a.p(), a.q(), a.n());
                over(sgn(k) * h(p + n - k)? * h(q + k)?, c(p + q + n, q + k))
            })
            .rhs(|a| thm_e(a.p(), a.q(), a.n()))
            .build(),
    );

    out.push(
        rec("corl-p", Corollary, &[P, N], r"Making $q=0$ in Theorem")
            .lhs("(-1)^k H_k H_{p+n-k} / C(p+n,k)", |a, k| term(a.p() + a.n(), k, 0))
            .rhs(|a| corl_p(a.p(), a.n()))
            .parent("thm-e", "q=0", |a| with_p(a.n, a.p.unwrap()).with_q(0))
            .build(),
    );
    out.push(
        rec("corl-p:p=0", Specialization, &[N], r"When $p=0$, Corollary")
            .lhs("(-1)^k H_k H_{n-k} / C(n,k)", |a, k| term(a.n(), k, 0))
            .rhs(|a| {
                let n = a.n();
                Ok(over(n + 1, (n + 2) * (n + 2))? * (over(2, n + 2)? - h(n + 1)?) * (sgn(n) + 1))
            })
            .parent("corl-p", "p=0", |a| with_p(a.n, 0))
            .build(),
    );
    out.push(
        rec("corl-p:p=n", Specialization, &[N], r"Taking $p=n$ in Corollary")
            .lhs("(-1)^k H_k H_{2n-k} / C(2n,k)", |a, k| term(2 * a.n(), k, 0))
            .rhs(|a| {
                let n = a.n();
                Ok(over(sgn(n) * h(n)?.square(), 2 * c(2 * n, n))?
                    - over(2 * n + 1, (2 * n + 2) * (2 * n + 2))? * (h(2 * n)? - over(n, (n + 1) * (2 * n + 1))?))
            })
            .parent("corl-p", "p=n", |a| with_p(a.n, a.n))
            .build(),
    );

    out.push(
        rec("corl-q", Corollary, &[P, N], r"Letting $p\to p+1$ for Corollary")
            .lhs("(-1)^k k H_k H_{p+n-k} / C(p+n,k)", |a, k| term(a.p() + a.n(), k, 1))
            .rhs(|a| corl_q(a.p(), a.n()))
            .build(),
    );
    out.push(
        rec("corl-q:p=0", Specialization, &[N], r"When $p=0$, Corollary")
            .lhs("(-1)^k k H_k H_{n-k} / C(n,k)", |a, k| term(a.n(), k, 1))
            .rhs(|a| {
                let n = a.n();
                let lead = over(3 * n + 5, (n + 3).pow(3))? - over(2 * n + 2, (n + 2).pow(3))?;
                let lead_ratio = over(
                    (n * n + 5 * n + 7) * (n.pow(3) + 3 * n * n + 2 * n + 2),
                    n.pow(4) + 3 * n.pow(3) - 6 * n * n - 24 * n - 14,
                )?;
                let m = n * n + 3 * n + 1;
                let tail = over((n + 1) * m, (n + 2) * (n + 2) * (n + 3) * (n + 3))?;
                let tail_ratio = over(n.pow(3) + 5 * n * n + 6 * n - 1, m)?;
                Ok(lead * (sgn(n) * lead_ratio + 1) - tail * (sgn(n) * tail_ratio + 1) * h(n)?)
            })
            .parent("corl-q", "p=0", |a| with_p(a.n, 0))
            .build(),
    );
    out.push(
        rec("corl-q:p=n", Specialization, &[N], r"Setting $p=n$ in Corollary")
            .lhs("(-1)^k k H_k H_{2n-k} / C(2n,k)", |a, k| term(2 * a.n(), k, 1))
            .rhs(|a| {
                let n = a.n();
                let hn = h(n)?;
                let m = 2 * n + 3;
                let brace = over(2 * n * n + 4 * n + 1, 4 * n + 6)? * hn.square() + over(hn, 2 * m * m)?
                    + over(4 * n * n + 10 * n + 7, 4 * (n + 1) * m.pow(3))?;
                let q = 2 * n * n + 5 * n + 3;
                Ok(over(sgn(n), c(2 * n, n))? * brace - over((2 * n + 1) * (4 * n * n + 6 * n + 1), 4 * q * q)? * h(2 * n)?
                    - over(2 * n + 1, 4 * (n + 1).pow(3))?
                    + over(6 * n + 5, m.pow(3))?)
            })
            .parent("corl-q", "p=n", |a| with_p(a.n, a.n))
            .build(),
    );

    out.push(
        rec("corl-r", Corollary, &[P, N], r"Making $p\to p+1$ for Corollary")
            .lhs("(-1)^k k^2 H_k H_{p+n-k} / C(p+n,k)", |a, k| term(a.p() + a.n(), k, 2))
            .rhs(|a| corl_r(a.p(), a.n()))
            .build(),
    );
    out.push(
        rec("corl-r:p=0", Specialization, &[N], r"When $p=0$, Corollary")
            .lhs("(-1)^k k^2 H_k H_{n-k} / C(n,k)", |a, k| term(a.n(), k, 2))
            .rhs(|a| {
                let n = a.n();
                let (t2, t3, t4) = (n + 2, n + 3, n + 4);
                let v = over(2 * n + 3, t2 * t2)? - over(5 * n + 12, t3 * t3)? + over(3 * n + 10, t4 * t4)?;
                let s = over(1, t2 * t2)? - over(3 * n + 6, t3 * t3)? + over(n * n + 5 * n + 6, t4 * t4)?;
                let w = over(2 * n + 2, t2.pow(3))? - over(5 * n + 9, t3.pow(3))? + over(3 * n + 8, t4.pow(3))?;
                let u = over(2 * n + 2, t2.pow(3))? - over(2 * n * n + 7 * n + 9, t3.pow(3))? + over(3 * n + 8, t4.pow(3))?;
                Ok((n + 1) * h(n + 1)? * (v - sgn(n) * s) - (w + sgn(n) * u) * (n + 1))
            })
            .parent("corl-r", "p=0", |a| with_p(a.n, 0))
            .build(),
    );
    out.push(
        rec("corl-r:p=n", Specialization, &[N], r"Taking $p=n$ in Corollary")
            .lhs("(-1)^k k^2 H_k H_{2n-k} / C(2n,k)", |a, k| term(2 * a.n(), k, 2))
            .rhs(|a| {
                let n = a.n();
                let hn = h(n)?;
                let m = 2 * n + 3;
                let brace = over(2 * n * n + 5 * n + 2, 4 * n + 6)? * hn.square() + over(hn, m * m)?
                    + over(4 * n * n + 10 * n + 7, (2 * n + 2) * m.pow(3))?;
                let hcoef = over(
                    (2 * n + 1) * (4 * n.pow(4) + 10 * n.pow(3) - n * n - 14 * n - 6),
                    (n + 1) * (n + 1) * m * m * (2 * n + 4) * (2 * n + 4),
                )?;
                let tail = over(
                    n * (8 * n.pow(6) + 12 * n.pow(5) - 132 * n.pow(4) - 512 * n.pow(3) - 731 * n * n - 459 * n - 103),
                    4 * (n + 1).pow(3) * (n + 2).pow(3) * m.pow(3),
                )?;
                Ok(over(sgn(n) * n, c(2 * n, n))? * brace - hcoef * h(2 * n)? + tail)
            })
            .parent("corl-r", "p=n", |a| with_p(a.n, a.n))
            .build(),
    );
}
