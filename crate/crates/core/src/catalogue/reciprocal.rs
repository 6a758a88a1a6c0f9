//! Differentiating the seed sum in its upper parameter: sums of
//! `C(p+k,k)/C(x+k,k) H_{p+k}` and the reciprocal-binomial alternating sums
//! `(-1)^k k^e H_k / C(x+n,k)`.

use super::{bs, c, cr, h, half_below, over, pow4, r, rec, sgn, Family, IdentityRecord, ParamAssignment, N, P, X};
use crate::error::Result;
use crate::exact::Rational;

use Family::{Corollary, Specialization, Theorem};

/// `x` a negative integer in `-n..=-1`, where `C(x+k,k)` vanishes for some `k <= n`.
fn shifted_vanishes(x: &Rational, n: i64) -> bool {
    matches!(x.to_i64(), Some(v) if (-n..=-1).contains(&v))
}

fn thm_b(x: &Rational, p: i64, n: i64) -> Result<Rational> {
    let gap = p - x + 1;
    let lead = over(p + 1, gap.clone())?;
    let ratio = over(bs(&r(p + 1), n)?, bs(x, n)?)?;
    Ok(&lead * ratio * (h(p + n + 1)? - over(1, gap.clone())?) - lead * h(p)? + over(x.clone(), gap.square())?)
}

fn corl_g(x: &Rational, n: i64) -> Result<Rational> {
    let t = x + n + 2;
    Ok(over(n + 1, t.clone())? * over(sgn(n), cr(&(x + n), n))? * (h(n + 1)? - over(1, t.clone())?)
        - over(x + n + 1, t.square())?)
}

fn corl_h(x: &Rational, n: i64) -> Result<Rational> {
    let t2 = x + n + 2;
    let t3 = x + n + 3;
    let x1 = x + n + 1;
    let brace = over(1 + x + n * (x + n + 3), &t2 * &t3)? * h(n + 1)? - over(x1.clone(), t2.square())?
        + over(x + 1, t3.square())?;
    let tail = over(x1.clone(), t2.square())? - over(t2.clone(), t3.square())?;
    Ok(brace * over(sgn(n), cr(&(x + n), n))? * (n + 1) - tail * x1)
}

fn corl_i(x: &Rational, n: i64) -> Result<Rational> {
    let t2 = x + n + 2;
    let t3 = x + n + 3;
    let t4 = x + n + 4;
    let alpha = over(1, t2.clone())? - over(3 * n + 6, t3.clone())? + over(n * n + 5 * n + 6, t4.clone())?;
    let beta = over(2 * x + 2 * n + 3, t2.square())? - over(7 * x + 15 + 2 * n * (x + n + 5), t3.square())?
        + over(5 * x + 14 + n * (2 * x + n + 8), t4.square())?;
    let gamma = (over(2 * x + 2 * n + 3, t2.square())? - over(5 * x + 5 * n + 12, t3.square())?
        + over(3 * x + 3 * n + 10, t4.square())?)
        * (x + n + 1);
    Ok((n + 1) * over(sgn(n), cr(&(x + n), n))? * (alpha * h(n + 1)? + beta) + gamma)
}

/// `(-1)^k k^e H_k / C(x+n,k)`.
fn reciprocal_term(top: &Rational, k: i64, e: u32) -> Result<Rational> {
    over(sgn(k) * r(k).pow(e) * h(k)?, cr(top, k))
}

fn int_term(top: i64, k: i64, e: u32) -> Result<Rational> {
    over(sgn(k) * r(k).pow(e) * h(k)?, c(top, k))
}

fn central_inv(k: i64) -> Result<Rational> {
    over(pow4(k), c(2 * k, k))
}

pub(super) fn register(out: &mut Vec<IdentityRecord>) {
    out.push(
        rec("thm-b", Theorem, &[X, P, N], "Employing the substitutions")
            .guard("pole p-x+1=0", |a| !(a.p() - a.x() + 1).is_zero())
            .guard("pole C(x+k,k)=0", |a| !shifted_vanishes(a.x(), a.n()))
            .lhs("C(p+k,k)/C(x+k,k) H_{p+k}", |a, k| {
                Ok(over(bs(&r(a.p()), k)?, bs(a.x(), k)?)? * h(a.p() + k)?)
            })
            .rhs(|a| thm_b(a.x(), a.p(), a.n()))
            .note("stated for y in C although the displayed identity is in x; x is used")
            .build(),
    );

    let x_guard = |a: &ParamAssignment| !shifted_vanishes(a.x(), a.n());

    out.push(
        rec("corl-g", Corollary, &[X, N], r"Letting $x\to-x-n-1$, $p\to0$")
            .guard("pole C(x+n,k)=0", x_guard)
            .guard("pole x+n+2=0", |a| !(a.x() + a.n() + 2).is_zero())
            .lhs("(-1)^k H_k / C(x+n,k)", |a, k| reciprocal_term(&(a.x() + a.n()), k, 0))
            .rhs(|a| corl_g(a.x(), a.n()))
            .parent("thm-b", "x->-x-n-1, p=0", |a| {
                ParamAssignment::new(a.n).with_p(0).with_x(-a.x() - a.n() - 1)
            })
            .build(),
    );
    out.push(
        rec("corl-g:x=0", Specialization, &[N], r"When $x=0$, Corollary")
            .lhs("(-1)^k H_k / C(n,k)", |a, k| int_term(a.n(), k, 0))
            .rhs(|a| {
                let n = a.n();
                Ok(sgn(n) * Rational::frac(n + 1, n + 2) * (h(n + 1)? - Rational::frac(1, n + 2))
                    - Rational::frac(n + 1, (n + 2) * (n + 2)))
            })
            .parent("corl-g", "x=0", |a| ParamAssignment::new(a.n).with_x(r(0)))
            .build(),
    );
    out.push(
        rec("corl-g:x=n", Specialization, &[N], r"Setting $x=n$ and $x=-\frac{1}{2}-n$ in Corollary")
            .lhs("(-1)^k H_k / C(2n,k)", |a, k| int_term(2 * a.n(), k, 0))
            .rhs(|a| {
                let n = a.n();
                Ok(over(sgn(n), 4 * c(2 * n, n))? * (2 * h(n + 1)? - Rational::frac(1, n + 1))
                    - Rational::frac(2 * n + 1, 4 * (n + 1) * (n + 1)))
            })
            .parent("corl-g", "x=n", |a| ParamAssignment::new(a.n).with_x(r(a.n())))
            .build(),
    );
    out.push(
        rec("corl-g:x=-1/2-n", Specialization, &[N], r"Setting $x=n$ and $x=-\frac{1}{2}-n$ in Corollary")
            .lhs("4^k H_k / C(2k,k)", |_, k| Ok(central_inv(k)? * h(k)?))
            .rhs(|a| {
                let n = a.n();
                Ok(Rational::frac(2 * (n + 1), 3) * central_inv(n)? * (h(n + 1)? - Rational::frac(2, 3))
                    - Rational::frac(2, 9))
            })
            .parent("corl-g", "x=-1/2-n", |a| ParamAssignment::new(a.n).with_x(half_below(a.n())))
            .build(),
    );

    out.push(
        rec("corl-h", Corollary, &[X, N], r"Making $x\to x+1$ for Corollary")
            .guard("pole C(x+n,k)=0", x_guard)
            .guard("pole x+n+2=0", |a| !(a.x() + a.n() + 2).is_zero())
            .guard("pole x+n+3=0", |a| !(a.x() + a.n() + 3).is_zero())
            .lhs("(-1)^k k H_k / C(x+n,k)", |a, k| reciprocal_term(&(a.x() + a.n()), k, 1))
            .rhs(|a| corl_h(a.x(), a.n()))
            .build(),
    );
    out.push(
        rec("corl-h:x=0", Specialization, &[N], r"When $x=0$, Corollary")
            .lhs("(-1)^k k H_k / C(n,k)", |a, k| int_term(a.n(), k, 1))
            .rhs(|a| {
                let n = a.n();
                let q2 = n * n + 3 * n + 1;
                let alt = if n % 2 == 0 { 1 } else { -1 };
                let brace = h(n + 1)? + Rational::frac(n, q2) - Rational::frac(2 * n + 5 + alt, (n + 2) * (n + 3));
                Ok(brace * Rational::frac((n + 1) * q2, (n + 2) * (n + 3)) * sgn(n))
            })
            .parent("corl-h", "x=0", |a| ParamAssignment::new(a.n).with_x(r(0)))
            .build(),
    );
    out.push(
        rec("corl-h:x=n", Specialization, &[N], r"Taking $x=n$ and $x=-\frac{1}{2}-n$ in Corollary")
            .lhs("(-1)^k k H_k / C(2n,k)", |a, k| int_term(2 * a.n(), k, 1))
            .rhs(|a| {
                let n = a.n();
                let q2 = 2 * n * n + 4 * n + 1;
                let brace = h(n + 1)? + Rational::frac(n, q2) - Rational::frac(4 * n + 5, (2 * n + 2) * (2 * n + 3));
                Ok(brace * over(sgn(n), c(2 * n, n))? * Rational::frac(q2, 4 * n + 6)
                    - Rational::frac(
                        (2 * n + 1) * (4 * n * n + 6 * n + 1),
                        (2 * n + 2) * (2 * n + 2) * (2 * n + 3) * (2 * n + 3),
                    ))
            })
            .parent("corl-h", "x=n", |a| ParamAssignment::new(a.n).with_x(r(a.n())))
            .build(),
    );
    out.push(
        rec("corl-h:x=-1/2-n", Specialization, &[N], r"Taking $x=n$ and $x=-\frac{1}{2}-n$ in Corollary")
            .lhs("4^k k H_k / C(2k,k)", |_, k| Ok(central_inv(k)? * k * h(k)?))
            .rhs(|a| {
                let n = a.n();
                let paren = h(n + 1)? - Rational::frac(2, 9 * n + 3) - Rational::frac(2, 5);
                Ok(Rational::frac(2 * (n + 1) * (3 * n + 1), 15) * central_inv(n)? * paren + Rational::frac(2, 225))
            })
            .parent("corl-h", "x=-1/2-n", |a| ParamAssignment::new(a.n).with_x(half_below(a.n())))
            .build(),
    );

    out.push(
        rec("corl-i", Corollary, &[X, N], r"Letting $x\to x+1$ for Corollary")
            .guard("pole C(x+n,k)=0", x_guard)
            .guard("pole x+n+2=0", |a| !(a.x() + a.n() + 2).is_zero())
            .guard("pole x+n+3=0", |a| !(a.x() + a.n() + 3).is_zero())
            .guard("pole x+n+4=0", |a| !(a.x() + a.n() + 4).is_zero())
            .lhs("(-1)^k k^2 H_k / C(x+n,k)", |a, k| reciprocal_term(&(a.x() + a.n()), k, 2))
            .rhs(|a| corl_i(a.x(), a.n()))
            .note("stated for y in C although the displayed identity is in x; x is used")
            .build(),
    );
    out.push(
        rec("corl-i:x=0", Specialization, &[N], r"When $x=0$, Corollary")
            .lhs("(-1)^k k^2 H_k / C(n,k)", |a, k| int_term(a.n(), k, 2))
            .rhs(|a| {
                let n = a.n();
                let d = (n + 2) * (n + 2) * (n + 3) * (n + 3) * (n + 4) * (n + 4);
                let lead = Rational::frac(n * (n * n * n + 7 * n * n + 14 * n + 7), (n + 2) * (n + 3) * (n + 4));
                let poly6 = n.pow(6) + 14 * n.pow(5) + 77 * n.pow(4) + 208 * n.pow(3) + 279 * n * n + 160 * n + 24;
                Ok((lead * h(n + 1)? - Rational::frac(poly6, d)) * (n + 1) * sgn(n)
                    - Rational::frac((n + 1) * (n.pow(4) + 5 * n.pow(3) - n * n - 28 * n - 24), d))
            })
            .parent("corl-i", "x=0", |a| ParamAssignment::new(a.n).with_x(r(0)))
            .note("the surrounding text attributes this reduction to corl-h; the formula is the x=0 case of corl-i")
            .build(),
    );
    out.push(
        rec("corl-i:x=n", Specialization, &[N], r"Setting $x=n$ and $x=-\frac{1}{2}-n$ in Corollary")
            .lhs("(-1)^k k^2 H_k / C(2n,k)", |a, k| int_term(2 * a.n(), k, 2))
            .rhs(|a| {
                let n = a.n();
                let lead = Rational::frac(n * (n + 2) * (2 * n + 1), 2 * (n + 1) * (2 * n + 3));
                let poly5 = 4 * n.pow(5) + 28 * n.pow(4) + 69 * n.pow(3) + 71 * n * n + 28 * n + 3;
                let brace = lead * h(n + 1)?
                    - Rational::frac(poly5, 4 * (n + 1) * (n + 1) * (n + 2) * (2 * n + 3) * (2 * n + 3));
                Ok(brace * over(sgn(n), c(2 * n, n))? * (n + 1)
                    - Rational::frac(
                        n * (n + 2) * (8 * n.pow(3) + 8 * n * n - 8 * n - 13) - 6,
                        4 * (n + 1) * (n + 1) * (n + 2) * (n + 2) * (2 * n + 3) * (2 * n + 3),
                    ))
            })
            .parent("corl-i", "x=n", |a| ParamAssignment::new(a.n).with_x(r(a.n())))
            .note("the surrounding text attributes this case to corl-h; the formula is the x=n case of corl-i")
            .build(),
    );
    out.push(
        rec("corl-i:x=-1/2-n", Specialization, &[N], r"Setting $x=n$ and $x=-\frac{1}{2}-n$ in Corollary")
            .lhs("4^k k^2 H_k / C(2k,k)", |_, k| Ok(central_inv(k)? * k * k * h(k)?))
            .rhs(|a| {
                let n = a.n();
                let paren = Rational::frac(15 * n * n + 12 * n - 1, 210) * h(n + 1)?
                    - Rational::frac(225 * n * n + 432 * n + 34, 11025);
                Ok(paren * over(pow4(n + 1), c(2 * n, n))? * (n + 1) + Rational::frac(346, 11025))
            })
            .parent("corl-i", "x=-1/2-n", |a| ParamAssignment::new(a.n).with_x(half_below(a.n())))
            .note("the surrounding text attributes this case to corl-h; the formula is the central case of corl-i")
            .build(),
    );
}
