//! Mixed derivative with one binomial reflected to a negative top:
//! alternating sums `(-1)^k C(p+n,k) k^e H_k H_{p+n-k}`.

use super::{c, h, over, rec, sgn, Family, IdentityRecord, ParamAssignment, N, P, Q};
use crate::error::Result;
use crate::exact::Rational;

use Family::{Corollary, Specialization, Theorem};

fn thm_d(p: i64, q: i64, n: i64) -> Result<Rational> {
    let s = p + q + n;
    let left = h(p)? * h(q + n)? + over(h(p)?, s)? - over((q + n) * h(q + n)?, p * s)? + over(p - q - n, p * s * s)?;
    let right = h(p + n)? * h(q)? + over(h(p + n)?, s)? - over(q * h(q)?, (p + n) * s)?
        + over(p - q + n, (p + n) * s * s)?;
    Ok(left * c(s, p) * over(sgn(n) * p, s)? - c(s, q) * over(p + n, s)? * right)
}

fn corl_m(p: i64, n: i64) -> Result<Rational> {
    let s = p + n;
    let brace = h(p)? * h(n)? + over(h(p)?, s)? - over(n * h(n)?, p * s)? + over(p - n, p * s * s)?;
    Ok(sgn(n) * c(s - 1, n) * brace - over(h(s)? + over(1, s)?, s)?)
}

fn corl_n(p: i64, n: i64) -> Result<Rational> {
    let s = p + n;
    let brace = h(p)? * h(n)? + over(n * n + (p - 1) * (n - 1), n * s * (s - 1))? * h(p)?
        - over(n - 1, p * (s - 1))? * h(n)?
        - over(s - 1, p * s * s)?
        - over(n - 2 * p * n + p - 1, p * n * (s - 1) * (s - 1))?;
    Ok(over(h(s)? + over(1, s - 1)?, s - 1)? + over(sgn(n) * p * n, s - 1)? * c(s, n) * brace)
}

struct CorlO {
    theta: Rational,
    lambda: Rational,
    mu: Rational,
    nu: Rational,
    epsilon: Rational,
    eta: Rational,
}

impl CorlO {
    fn new(p: i64, n: i64) -> Result<Self> {
        let (s1, s2) = (p + n - 1, p + n - 2);
        let w = n * n + p * n - n - 1;
        Ok(CorlO {
            theta: over(p * n * w, s1 * s2)?,
            lambda: over(n * (n - 1), s1 * s1)? + over(n * (n - 1) * (n - 2), s2 * s2)?,
            mu: over(p * (n * n + 2 * n - 1), s1 * s2)? - over(p * n * (2 * p + 2 * n - 3) * w, s1 * s1 * s2 * s2)?,
            nu: over(2 * n * n - 4 * n + 1, s1 * s1)? + over(2 * n * (n - 1), s1.pow(3))?
                - over(3 * n * n - 6 * n + 2, s2 * s2)?
                + over(2 * n * (n - 1) * (n - 2), s2.pow(3))?,
            epsilon: over(p + n, s1 * s2)?,
            eta: over((p + n) * (p + n) - 2, s1 * s1 * s2 * s2)?,
        })
    }
}

fn corl_o(p: i64, n: i64) -> Result<Rational> {
    let k = CorlO::new(p, n)?;
    let (hn, hp) = (h(n)?, h(p)?);
    let brace = k.theta * &hn * &hp - k.lambda * hn - k.mu * hp - k.nu;
    Ok(sgn(n) * c(p + n, n) * brace - k.epsilon * h(p + n)? - k.eta)
}

/// `(-1)^k C(top,k) k^e H_k H_{top-k}`.
fn term(top: i64, k: i64, e: u32) -> Result<Rational> {
    Ok(sgn(k) * c(top, k) * Rational::from(k).pow(e) * h(k)? * h(top - k)?)
}

fn with_p(n: u32, p: u32) -> ParamAssignment {
    ParamAssignment::new(n).with_p(p)
}

pub(super) fn register(out: &mut Vec<IdentityRecord>) {
    out.push(
        rec("thm-d", Theorem, &[P, Q, N], r"Employing the substitutions $x\to -x-p-n-1$")
            .guard("pole p=0", |a| a.p() >= 1)
            .lhs("(-1)^k C(p+q+n,q+k) H_{p+n-k} H_{q+k}", |a, k| {
                let (p, q, n) = (a.p(), a.q(), a.n());
                Ok(sgn(k) * c(p + q + n, q + k) * h(p + n - k)? * h(q + k)?)
            })
            .rhs(|a| thm_d(a.p(), a.q(), a.n()))
            .build(),
    );

    out.push(
        rec("corl-m", Corollary, &[P, N], r"Letting $q=0$ in Theorem")
            .guard("pole p=0", |a| a.p() >= 1)
            .lhs("(-1)^k C(p+n,k) H_k H_{p+n-k}", |a, k| term(a.p() + a.n(), k, 0))
            .rhs(|a| corl_m(a.p(), a.n()))
            .parent("thm-d", "q=0", |a| with_p(a.n, a.p.unwrap()).with_q(0))
            .build(),
    );
    out.push(
        rec("corl-m:p=0", Specialization, &[N], r"When $p=0$, Corollary")
            .guard("requires n>0", |a| a.n > 0)
            .lhs("(-1)^k C(n,k) H_k H_{n-k}", |a, k| term(a.n(), k, 0))
            .rhs(|a| {
                let n = a.n();
                Ok(over(-sgn(n) - 1, n)? * (h(n)? + over(1, n)?))
            })
            .parent("corl-m", "p=0", |a| with_p(a.n, 0))
            .build(),
    );
    out.push(
        rec("corl-m:p=n", Specialization, &[N], r"Setting $p=n$ in Corollary")
            .guard("requires n>0", |a| a.n > 0)
            .lhs("(-1)^k C(2n,k) H_k H_{2n-k}", |a, k| term(2 * a.n(), k, 0))
            .rhs(|a| {
                let n = a.n();
                Ok(sgn(n) * c(2 * n - 1, n) * h(n)?.square() - over(h(2 * n)? + over(1, 2 * n)?, 2 * n)?)
            })
            .parent("corl-m", "p=n", |a| with_p(a.n, a.n))
            .build(),
    );

    out.push(
        rec("corl-n", Corollary, &[P, N], r"Making $p\to p-1$ for Corollary")
            .guard("pole p=0", |a| a.p() >= 1)
            .guard("pole n=0", |a| a.n >= 1)
            .guard("pole p+n-1=0", |a| a.p() + a.n() != 1)
            .lhs("(-1)^k C(p+n,k) k H_k H_{p+n-k}", |a, k| term(a.p() + a.n(), k, 1))
            .rhs(|a| corl_n(a.p(), a.n()))
            .build(),
    );
    out.push(
        rec("corl-n:p=0", Specialization, &[N], r"When $p=0$, Corollary")
            .guard("requires n>1", |a| a.n > 1)
            .lhs("(-1)^k C(n,k) k H_k H_{n-k}", |a, k| term(a.n(), k, 1))
            .rhs(|a| {
                let n = a.n();
                Ok(over(h(n)? + over(1, n - 1)?, n - 1)?
                    + sgn(n) * over(n, 1 - n)? * (h(n)? + over(n * n - n + 1, n * n * (n - 1))?))
            })
            .parent("corl-n", "p=0", |a| with_p(a.n, 0))
            .build(),
    );
    out.push(
        rec("corl-n:p=n", Specialization, &[N], r"Taking $p=n$ in Corollary")
            .guard("requires n>0", |a| a.n > 0)
            .lhs("(-1)^k C(2n,k) k H_k H_{2n-k}", |a, k| term(2 * a.n(), k, 1))
            .rhs(|a| {
                let n = a.n();
                let hn = h(n)?;
                let brace = hn.square() + over(hn, 2 * n * n * (2 * n - 1))?
                    + over(4 * n * n - 2 * n + 1, 4 * n.pow(3) * (2 * n - 1) * (2 * n - 1))?;
                Ok(over(h(2 * n)? + over(1, 2 * n - 1)?, 2 * n - 1)? + over(sgn(n) * n * n, 2 * n - 1)? * c(2 * n, n) * brace)
            })
            .parent("corl-n", "p=n", |a| with_p(a.n, a.n))
            .build(),
    );

    out.push(
        rec("corl-o", Corollary, &[P, N], r"Letting $p\to p-1$ for Corollary")
            .guard("requires p+n>2", |a| a.p() + a.n() > 2)
            .lhs("(-1)^k C(p+n,k) k^2 H_k H_{p+n-k}", |a, k| term(a.p() + a.n(), k, 2))
            .rhs(|a| corl_o(a.p(), a.n()))
            .build(),
    );
    out.push(
        rec("corl-o:p=0", Specialization, &[N], r"When $p=0$, Corollary")
            .guard("requires n>2", |a| a.n > 2)
            .lhs("(-1)^k C(n,k) k^2 H_k H_{n-k}", |a, k| term(a.n(), k, 2))
            .rhs(|a| {
                let n = a.n();
                let (d1, d2) = (n - 1, n - 2);
                let alt = over(n + n * n - n.pow(3), d1 * d2)? * h(n)?
                    - over(n.pow(4) - 4 * n.pow(3) + 6 * n * n - 4 * n + 2, d1 * d1 * d2 * d2)?;
                Ok(sgn(n) * alt - over(n, d1 * d2)? * (h(n)? + over(n * n - 2, n * d1 * d2)?))
            })
            .parent("corl-o", "p=0", |a| with_p(a.n, 0))
            .build(),
    );
    out.push(
        rec("corl-o:p=n", Specialization, &[N], r"Setting $p=n$ in Corollary")
            .guard("requires n>1", |a| a.n > 1)
            .lhs("(-1)^k C(2n,k) k^2 H_k H_{2n-k}", |a, k| term(2 * a.n(), k, 2))
            .rhs(|a| {
                let n = a.n();
                let hn = h(n)?;
                let m = 2 * n - 1;
                let brace = over(2 * n.pow(3) + n * n, 4 * n - 2)? * hn.square() + over(n, m * m)? * hn
                    + over(4 * n * n - 2 * n + 1, 2 * m.pow(3))?;
                Ok(sgn(n) * c(2 * n, n) * brace
                    - over(n, (n - 1) * m)? * (h(2 * n)? + over(2 * n * n - 1, n * m * (2 * n - 2))?))
            })
            .parent("corl-o", "p=n", |a| with_p(a.n, a.n))
            .build(),
    );
}
