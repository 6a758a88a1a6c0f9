//! The seed sum and the family obtained by differentiating it in the lower
//! binomial parameter: sums of `C(x+k,k)/C(p+k,k) H_{p+k}` and their
//! alternating and central-binomial instances.

use super::{bs, c, cr, h, half_below, over, pow4, r, rec, sgn, Family, IdentityRecord, ParamAssignment, N, P, X, Y};
use crate::error::Result;
use crate::exact::Rational;

use Family::{Corollary, Seed, Specialization, Theorem};

fn y_is_pole(y: &Rational, n: i64) -> bool {
    matches!(y.to_i64(), Some(v) if (-n..=-1).contains(&v))
}

fn corl_a(p: i64, n: i64) -> Result<Rational> {
    Ok((p + n + 1) * h(p + n)? - (p + 1) * h(p)? - n)
}

fn corl_b(p: i64, n: i64) -> Result<Rational> {
    Ok(over((n - p) * (p + n + 1), 2)? * h(p + n)? + over(p * (p + 1), 2)? * h(p)? - over(n * (n - 2 * p - 1), 4)?)
}

fn corl_c(p: i64, n: i64) -> Result<Rational> {
    Ok(over((p + n + 1) * (2 * n * n + n - 2 * p * n + p + 2 * p * p), 6)? * h(p + n)?
        - over(p * (p + 1) * (2 * p + 1), 6)? * h(p)?
        - over(n * (4 * n * n - 3 * n - 6 * p * n + 12 * p + 12 * p * p - 1), 36)?)
}

fn corl_d(x: &Rational, n: i64) -> Result<Rational> {
    let xn = x + n;
    Ok(sgn(n) * cr(&(&xn - 1), n) * (h(n)? + over(1, xn.clone())?) - over(1, xn)?)
}

fn corl_e(x: &Rational, n: i64) -> Result<Rational> {
    let xn = x + n;
    let xn1 = &xn - 1;
    let inner = over(n * n + (n - 1) * (x - 1), n * &xn * &xn1)?;
    Ok(over(sgn(n) * n * x, xn1.clone())? * cr(&xn, n) * (h(n)? + inner) + over(1, xn1)?)
}

fn corl_f(x: &Rational, n: i64) -> Result<Rational> {
    let xn = x + n;
    let d12 = (&xn - 1) * (&xn - 2);
    let m = n * n - n + n * x - 1;
    let brace = n * h(n)? + over(n * (2 * x + 2 * n - 3), d12.clone())? - over(n * n + 2 * n - 1, m.clone())?;
    Ok(sgn(n) * over(x * &m, d12.clone())? * cr(&xn, n) * brace - over(xn, d12)?)
}

fn thm_a(x: &Rational, p: i64, n: i64) -> Result<Rational> {
    let gap = x - p + 1;
    let inv_gap = over(1, gap.clone())?;
    let ratio = over(bs(&(x + 1), n)?, bs(&r(p), n)?)?;
    Ok(over(x + 1, gap)? * (ratio * (h(p + n)? - &inv_gap) - h(p)? + inv_gap))
}

fn sofo_a(p: i64, n: i64) -> Result<Rational> {
    Ok(over(-n, p + n)? * (h(p)? + over(1, p + n)?))
}

fn sofo_b(p: i64, n: i64) -> Result<Rational> {
    let s = p + n;
    Ok(over(n * (n * n - n - p * p), s * s * (s - 1) * (s - 1))? - over(p * n * h(p)?, s * (s - 1))?)
}

fn chu(p: i64, n: i64) -> Result<Rational> {
    let s = p + n;
    Ok(over(p * n * (n - p) * h(p)?, s * (s - 1) * (s - 2))? - over(n * n * n, s * s)?
        + over(n * (n - 1) * (2 * n - 1), (s - 1) * (s - 1))?
        - over(n * (n - 1) * (n - 2), (s - 2) * (s - 2))?)
}

/// `(-1)^k C(n,k) k^e H_{p+k} / C(p+k,k)`.
fn sofo_term(p: i64, n: i64, k: i64, e: u32) -> Result<Rational> {
    over(sgn(k) * c(n, k) * r(k).pow(e) * h(p + k)?, c(p + k, k))
}

fn central(k: i64) -> Result<Rational> {
    over(c(2 * k, k), pow4(k))
}

pub(super) fn register(out: &mut Vec<IdentityRecord>) {
    out.push(
        rec("seed", Seed, &[X, Y, N], "we obtain the simple binomial sum")
            .guard("pole x-y+1=0", |a| !(a.x() - a.y() + 1).is_zero())
            .guard("pole C(y+k,k)=0", |a| !y_is_pole(a.y(), a.n()))
            .lhs("C(x+k,k)/C(y+k,k)", |a, k| over(bs(a.x(), k)?, bs(a.y(), k)?))
            .rhs(|a| {
                let (x, y, n) = (a.x(), a.y(), a.n());
                let lead = over(x + 1, x - y + 1)?;
                Ok(over(bs(&(x + 1), n)?, bs(y, n)?)? * &lead - lead)
            })
            .build(),
    );

    out.push(
        rec("thm-a", Theorem, &[X, P, N], "Performing the replacement")
            .guard("pole x-p+1=0", |a| !(a.x() - a.p() + 1).is_zero())
            .lhs("C(x+k,k)/C(p+k,k) H_{p+k}", |a, k| {
                Ok(over(bs(a.x(), k)?, bs(&r(a.p()), k)?)? * h(a.p() + k)?)
            })
            .rhs(|a| thm_a(a.x(), a.p(), a.n()))
            .build(),
    );

    // -- polynomial weights k^0, k^1, k^2 -----------------------------------
    out.push(
        rec("corl-a", Corollary, &[P, N], r"Letting $x=p$ in Theorem")
            .lhs("H_{p+k}", |a, k| h(a.p() + k))
            .rhs(|a| corl_a(a.p(), a.n()))
            .parent("thm-a", "x=p", |a| ParamAssignment::new(a.n).with_p(a.p.unwrap()).with_x(r(a.p())))
            .build(),
    );
    out.push(
        rec("corl-a:p=0", Specialization, &[N], "reduces to the known result")
            .lhs("H_k", |_, k| h(k))
            .rhs(|a| {
                let n = a.n();
                Ok((n + 1) * h(n)? - n)
            })
            .parent("corl-a", "p=0", |a| ParamAssignment::new(a.n).with_p(0))
            .build(),
    );
    out.push(
        rec("corl-a:p=n", Specialization, &[N], "attain the two identities")
            .lhs("H_{n+k}", |a, k| h(a.n() + k))
            .rhs(|a| {
                let n = a.n();
                Ok((2 * n + 1) * h(2 * n)? - (n + 1) * h(n)? - n)
            })
            .parent("corl-a", "p=n", |a| ParamAssignment::new(a.n).with_p(a.n))
            .build(),
    );
    out.push(
        rec("corl-a:p=2n", Specialization, &[N], "attain the two identities")
            .lhs("H_{2n+k}", |a, k| h(2 * a.n() + k))
            .rhs(|a| {
                let n = a.n();
                Ok((3 * n + 1) * h(3 * n)? - (2 * n + 1) * h(2 * n)? - n)
            })
            .parent("corl-a", "p=2n", |a| ParamAssignment::new(a.n).with_p(2 * a.n))
            .build(),
    );

    out.push(
        rec("corl-b", Corollary, &[P, N], r"Making $x=p+1$ in Theorem")
            .lhs("k H_{p+k}", |a, k| Ok(k * h(a.p() + k)?))
            .rhs(|a| corl_b(a.p(), a.n()))
            .build(),
    );
    out.push(
        rec("corl-b:p=0", Specialization, &[N], "due to Chen et al.")
            .lhs("k H_k", |_, k| Ok(k * h(k)?))
            .rhs(|a| {
                let n = a.n();
                Ok(over(n * (n + 1), 2)? * h(n)? - over((n - 1) * n, 4)?)
            })
            .parent("corl-b", "p=0", |a| ParamAssignment::new(a.n).with_p(0))
            .build(),
    );
    out.push(
        rec("corl-b:p=n", Specialization, &[N], "gain the two identities")
            .lhs("k H_{n+k}", |a, k| Ok(k * h(a.n() + k)?))
            .rhs(|a| {
                let n = a.n();
                Ok(over(n * (n + 1), 2)? * (h(n)? + Rational::frac(1, 2)))
            })
            .parent("corl-b", "p=n", |a| ParamAssignment::new(a.n).with_p(a.n))
            .build(),
    );
    out.push(
        rec("corl-b:p=2n", Specialization, &[N], "gain the two identities")
            .lhs("k H_{2n+k}", |a, k| Ok(k * h(2 * a.n() + k)?))
            .rhs(|a| {
                let n = a.n();
                Ok(over(n * (3 * n + 1), 4)? * (1 - 2 * h(3 * n)?) + n * (2 * n + 1) * h(2 * n)?)
            })
            .parent("corl-b", "p=2n", |a| ParamAssignment::new(a.n).with_p(2 * a.n))
            .build(),
    );

    out.push(
        rec("corl-c", Corollary, &[P, N], r"Letting $x=p+2$ in Theorem")
            .lhs("k^2 H_{p+k}", |a, k| Ok(k * k * h(a.p() + k)?))
            .rhs(|a| corl_c(a.p(), a.n()))
            .build(),
    );
    out.push(
        rec("corl-c:p=0", Specialization, &[N], "Equation (2.3)")
            .lhs("k^2 H_k", |_, k| Ok(k * k * h(k)?))
            .rhs(|a| {
                let n = a.n();
                Ok(over(n * (n + 1) * (2 * n + 1), 6)? * h(n)? - over((n - 1) * n * (4 * n + 1), 36)?)
            })
            .parent("corl-c", "p=0", |a| ParamAssignment::new(a.n).with_p(0))
            .build(),
    );
    out.push(
        rec("corl-c:p=n", Specialization, &[N], "Equation (2.7)")
            .lhs("k^2 H_{n+k}", |a, k| Ok(k * k * h(a.n() + k)?))
            .rhs(|a| {
                let n = a.n();
                Ok(over(n * (n + 1) * (2 * n + 1), 6)? * (2 * h(2 * n)? - h(n)?)
                    - over(n * (n + 1) * (10 * n - 1), 36)?)
            })
            .parent("corl-c", "p=n", |a| ParamAssignment::new(a.n).with_p(a.n))
            .note("also proved by an extension of Zeilberger's algorithm and by Karr's algorithm")
            .build(),
    );
    out.push(
        rec("corl-c:p=2n", Specialization, &[N], r"Setting $p=2n$ in Corollary")
            .lhs("k^2 H_{2n+k}", |a, k| Ok(k * k * h(2 * a.n() + k)?))
            .rhs(|a| {
                let n = a.n();
                Ok(over(n * (2 * n + 1) * (3 * n + 1), 2)? * h(3 * n)?
                    - over(n * (2 * n + 1) * (4 * n + 1), 3)? * h(2 * n)?
                    - over(n * (40 * n * n + 21 * n - 1), 36)?)
            })
            .parent("corl-c", "p=2n", |a| ParamAssignment::new(a.n).with_p(2 * a.n))
            .build(),
    );

    // -- alternating sums against C(n,k) ------------------------------------
    out.push(
        rec("eq-sofo-a", Corollary, &[P, N], r"Choosing $x=-n-1$ in Theorem")
            .guard("pole p+n=0", |a| a.p() + a.n() != 0)
            .lhs("(-1)^k C(n,k) H_{p+k}/C(p+k,k)", |a, k| sofo_term(a.p(), a.n(), k, 0))
            .rhs(|a| sofo_a(a.p(), a.n()))
            .parent("thm-a", "x=-n-1", |a| {
                ParamAssignment::new(a.n).with_p(a.p.unwrap()).with_x(r(-a.n() - 1))
            })
            .build(),
    );
    out.push(
        rec("eq-sofo-b", Corollary, &[P, N], r"Choosing $x=-n$ in Theorem")
            .guard("pole p+n-1=0", |a| a.p() + a.n() > 1)
            .lhs("(-1)^k C(n,k) k H_{p+k}/C(p+k,k)", |a, k| sofo_term(a.p(), a.n(), k, 1))
            .rhs(|a| sofo_b(a.p(), a.n()))
            .build(),
    );
    out.push(
        rec("eq-chu", Corollary, &[P, N], "the result due to Chu")
            .guard("pole p+n-2=0", |a| a.p() + a.n() > 2)
            .lhs("(-1)^k C(n,k) k^2 H_{p+k}/C(p+k,k)", |a, k| sofo_term(a.p(), a.n(), k, 2))
            .rhs(|a| chu(a.p(), a.n()))
            .build(),
    );
    out.push(
        rec("spe-sofo-a", Specialization, &[N], r"The case $p=0$ of")
            .guard("requires n>0", |a| a.n() > 0)
            .lhs("(-1)^k C(n,k) H_k", |a, k| Ok(sgn(k) * c(a.n(), k) * h(k)?))
            .rhs(|a| over(-1, a.n()))
            .parent("eq-sofo-a", "p=0", |a| ParamAssignment::new(a.n).with_p(0))
            .parent("corl-d", "x=0", |a| ParamAssignment::new(a.n).with_x(r(0)))
            .build(),
    );
    out.push(
        rec("spe-sofo-b", Specialization, &[N], r"The case $p=0$ of")
            .guard("requires n>1", |a| a.n() > 1)
            .lhs("(-1)^k C(n,k) k H_k", |a, k| Ok(sgn(k) * c(a.n(), k) * k * h(k)?))
            .rhs(|a| over(1, a.n() - 1))
            .parent("eq-sofo-b", "p=0", |a| ParamAssignment::new(a.n).with_p(0))
            .parent("corl-e", "x=0", |a| ParamAssignment::new(a.n).with_x(r(0)))
            .build(),
    );
    out.push(
        rec("spe-chu", Specialization, &[N], r"The case $p=0$ of")
            .guard("requires n>2", |a| a.n() > 2)
            .lhs("(-1)^k C(n,k) k^2 H_k", |a, k| Ok(sgn(k) * c(a.n(), k) * k * k * h(k)?))
            .rhs(|a| {
                let n = a.n();
                over(-n, (n - 1) * (n - 2))
            })
            .parent("eq-chu", "p=0", |a| ParamAssignment::new(a.n).with_p(0))
            .parent("corl-f", "x=0", |a| ParamAssignment::new(a.n).with_x(r(0)))
            .build(),
    );

    // -- alternating sums against C(x+n,k) ----------------------------------
    out.push(
        rec("corl-d", Corollary, &[X, N], r"Making $x\to-x-n-1$, $p\to0$")
            .guard("pole x+n=0", |a| !(a.x() + a.n()).is_zero())
            .lhs("(-1)^k C(x+n,k) H_k", |a, k| Ok(sgn(k) * cr(&(a.x() + a.n()), k) * h(k)?))
            .rhs(|a| corl_d(a.x(), a.n()))
            .parent("thm-a", "x->-x-n-1, p=0", |a| {
                ParamAssignment::new(a.n).with_p(0).with_x(-a.x() - a.n() - 1)
            })
            .build(),
    );
    out.push(
        rec("corl-d:x=n", Specialization, &[N], r"Taking $x=n$ in Corollary")
            .guard("requires n>0", |a| a.n() > 0)
            .lhs("(-1)^k C(2n,k) H_k", |a, k| Ok(sgn(k) * c(2 * a.n(), k) * h(k)?))
            .rhs(|a| {
                let n = a.n();
                Ok(sgn(n) * c(2 * n - 1, n) * (h(n)? + over(1, 2 * n)?) - over(1, 2 * n)?)
            })
            .parent("corl-d", "x=n", |a| ParamAssignment::new(a.n).with_x(r(a.n())))
            .build(),
    );
    out.push(
        rec("corl-d:x=-1/2-n", Specialization, &[N], "Example 2.3")
            .lhs("C(2k,k) H_k / 4^k", |_, k| Ok(central(k)? * h(k)?))
            .rhs(|a| {
                let n = a.n();
                Ok(2 - over(n + 1, pow4(n))? * c(2 * n + 2, n + 1) + over(2 * n + 1, pow4(n))? * c(2 * n, n) * h(n)?)
            })
            .parent("corl-d", "x=-1/2-n", |a| ParamAssignment::new(a.n).with_x(half_below(a.n())))
            .build(),
    );

    out.push(
        rec("corl-e", Corollary, &[X, N], r"Letting $x\to x-1$ for Corollary")
            .guard("pole n=0", |a| a.n() != 0)
            .guard("pole x+n=0", |a| !(a.x() + a.n()).is_zero())
            .guard("pole x+n-1=0", |a| !(a.x() + a.n() - 1).is_zero())
            .lhs("(-1)^k C(x+n,k) k H_k", |a, k| Ok(sgn(k) * cr(&(a.x() + a.n()), k) * k * h(k)?))
            .rhs(|a| corl_e(a.x(), a.n()))
            .build(),
    );
    out.push(
        rec("corl-e:x=n", Specialization, &[N], r"Setting $x=n$ and $x=-\frac{1}{2}-n$ in Corollary")
            .guard("pole n=0", |a| a.n() != 0)
            .lhs("(-1)^k C(2n,k) k H_k", |a, k| Ok(sgn(k) * c(2 * a.n(), k) * k * h(k)?))
            .rhs(|a| {
                let n = a.n();
                let brace = h(n)? + over(2 * n * n - 2 * n + 1, 2 * n * n * (2 * n - 1))?;
                Ok(over(sgn(n) * n * n, 2 * n - 1)? * c(2 * n, n) * brace + over(1, 2 * n - 1)?)
            })
            .parent("corl-e", "x=n", |a| ParamAssignment::new(a.n).with_x(r(a.n())))
            .build(),
    );
    out.push(
        rec("corl-e:x=-1/2-n", Specialization, &[N], r"Setting $x=n$ and $x=-\frac{1}{2}-n$ in Corollary")
            .lhs("C(2k,k) k H_k / 4^k", |_, k| Ok(central(k)? * k * h(k)?))
            .rhs(|a| {
                let n = a.n();
                Ok(Rational::frac(2 * n + 1, 9) * over(c(2 * n, n), pow4(n))? * (3 * n * h(n)? - 2 * n + 6)
                    - Rational::frac(2, 3))
            })
            .parent("corl-e", "x=-1/2-n", |a| ParamAssignment::new(a.n).with_x(half_below(a.n())))
            .build(),
    );

    out.push(
        rec("corl-f", Corollary, &[X, N], r"Making $x\to x-1$ for Corollary")
            .guard("pole x+n-1=0", |a| !(a.x() + a.n() - 1).is_zero())
            .guard("pole x+n-2=0", |a| !(a.x() + a.n() - 2).is_zero())
            .guard("pole n^2-n+nx-1=0", |a| {
                let n = a.n();
                !(n * n - n + n * a.x() - 1).is_zero()
            })
            .lhs("(-1)^k C(x+n,k) k^2 H_k", |a, k| Ok(sgn(k) * cr(&(a.x() + a.n()), k) * k * k * h(k)?))
            .rhs(|a| corl_f(a.x(), a.n()))
            .build(),
    );
    out.push(
        rec("corl-f:x=n", Specialization, &[N], r"Taking $x=n$ and $x=-\frac{1}{2}-n$ in Corollary")
            .guard("requires n>1", |a| a.n() > 1)
            .lhs("(-1)^k C(2n,k) k^2 H_k", |a, k| Ok(sgn(k) * c(2 * a.n(), k) * k * k * h(k)?))
            .rhs(|a| {
                let n = a.n();
                let brace = h(n)? + over(4 * n * n * n - 8 * n * n + 5 * n - 2, 2 * n * (n - 1) * (4 * n * n - 1))?;
                Ok(sgn(n) * over(n * n * (2 * n + 1), 2 * (2 * n - 1))? * c(2 * n, n) * brace
                    - over(n, (n - 1) * (2 * n - 1))?)
            })
            .parent("corl-f", "x=n", |a| ParamAssignment::new(a.n).with_x(r(a.n())))
            .build(),
    );
    out.push(
        rec("corl-f:x=-1/2-n", Specialization, &[N], r"Taking $x=n$ and $x=-\frac{1}{2}-n$ in Corollary")
            .lhs("C(2k,k) k^2 H_k / 4^k", |_, k| Ok(central(k)? * k * k * h(k)?))
            .rhs(|a| {
                let n = a.n();
                let paren = n * h(n)? + over(8 * n - 6, 9 * n + 6)? - Rational::frac(2 * n, 5);
                Ok(Rational::frac((2 * n + 1) * (3 * n + 2), 15) * over(c(2 * n, n), pow4(n))? * paren
                    + Rational::frac(2, 15))
            })
            .parent("corl-f", "x=-1/2-n", |a| ParamAssignment::new(a.n).with_x(half_below(a.n())))
            .build(),
    );
}
