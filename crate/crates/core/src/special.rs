//! Harmonic numbers and generalized binomial coefficients.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};

/// Prefix sums `H_0, H_1, ...`, grown on demand and safe to read from many
/// threads at once.
#[derive(Debug)]
pub struct HarmonicTable {
    prefix: RwLock<Vec<Rational>>,
}

impl Default for HarmonicTable {
    fn default() -> Self {
        Self::new()
    }
}

impl HarmonicTable {
    pub fn new() -> Self {
        HarmonicTable {
            prefix: RwLock::new(vec![Rational::zero()]),
        }
    }

    /// Largest index currently cached.
    pub fn len(&self) -> usize {
        self.prefix.read().expect("harmonic table poisoned").len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Makes sure `H_0..=H_n` are cached. Sweeps call this up front so the
    /// hot path only takes the read lock.
    pub fn reserve(&self, n: usize) {
        if self.len() >= n {
            return;
        }
        let mut prefix = self.prefix.write().expect("harmonic table poisoned");
        while prefix.len() <= n {
            let k = prefix.len() as i64;
            let next = prefix.last().expect("H_0 present") + Rational::frac(1, k);
            prefix.push(next);
        }
    }

    pub fn get(&self, n: usize) -> Rational {
        {
            let prefix = self.prefix.read().expect("harmonic table poisoned");
            if let Some(h) = prefix.get(n) {
                return h.clone();
            }
        }
        self.reserve(n);
        self.prefix.read().expect("harmonic table poisoned")[n].clone()
    }
}

static HARMONIC: LazyLock<HarmonicTable> = LazyLock::new(HarmonicTable::new);

/// The process-wide table behind [`harmonic`].
pub fn harmonic_table() -> &'static HarmonicTable {
    &HARMONIC
}

/// `H_n = 1 + 1/2 + ... + 1/n`, `H_0 = 0`.
pub fn harmonic(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    Ok(HARMONIC.get(n as usize))
}

fn factorial(k: i64) -> BigInt {
    (1..=k).fold(BigInt::from(1), |acc, j| acc * j)
}

/// `C(x+k, k) = prod_{j=1..k} (x+j)/j` for any scalar `x`.
pub fn binom_shifted<S: Scalar>(x: &S, k: i64) -> Result<S> {
    if k < 0 {
        return Err(Error::Precondition(format!("binom_shifted with k = {k} < 0")));
    }
    let mut acc = S::one();
    for j in 1..=k {
        acc = acc * (x.clone() + S::from(j));
    }
    let inv_fact = Rational::from_bigints(BigInt::from(1), factorial(k))?;
    Ok(acc * S::from(inv_fact))
}

/// `C(top, k)` for a scalar upper index; zero for `k < 0`.
pub fn binom_upper<S: Scalar>(top: &S, k: i64) -> S {
    if k < 0 {
        return S::zero();
    }
    binom_shifted(&(top.clone() - S::from(k)), k).expect("k >= 0")
}

/// `C(a, k)` for a rational upper index; zero for `k < 0`.
pub fn binom_general(a: &Rational, k: i64) -> Rational {
    binom_upper(a, k)
}

/// Ordinary `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binom_int(n: u64, k: i64) -> Rational {
    if k < 0 || k as u64 > n {
        return Rational::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::from(1);
    for j in 1..=k {
        // exact at every step: acc = C(n-k+j, j)
        acc = acc * BigInt::from(n - k + j) / BigInt::from(j);
    }
    Rational::from_integer(acc)
}

/// `C(top, k)` for an integer upper index, which may be negative.
pub fn choose(top: i64, k: i64) -> Rational {
    if top >= 0 {
        binom_int(top as u64, k)
    } else {
        binom_general(&Rational::from(top), k)
    }
}

/// `a! / b!` for `a, b >= 0`, as an exact product over the gap.
pub fn factorial_ratio(a: i64, b: i64) -> Rational {
    let (lo, hi) = if a >= b { (b, a) } else { (a, b) };
    let prod = (lo + 1..=hi).fold(Rational::one(), |acc, j| acc * j);
    if a >= b {
        prod
    } else {
        prod.recip().expect("product of positive integers")
    }
}

/// Closed form of `d/dx C(s+x, t)` at `x = 0`: `C(s,t) (H_s - H_{s-t})`.
pub fn dx_binom_closed(s: i64, t: i64) -> Result<Rational> {
    if t < 0 || s < 0 || t > s {
        return Err(Error::Precondition(format!("need 0 <= t <= s, got s={s}, t={t}")));
    }
    Ok(choose(s, t) * (harmonic(s)? - harmonic(s - t)?))
}

/// Closed form of `d2/dxdy C(s+x,t) / C(u+y,v)` at `x = y = 0`:
/// `C(s,t)/C(u,v) (H_s - H_{s-t}) (H_{u-v} - H_u)`.
pub fn dxy_ratio_closed(s: i64, t: i64, u: i64, v: i64) -> Result<Rational> {
    if t < 0 || s < 0 || t > s || v < 0 || u < 0 || v > u {
        return Err(Error::Precondition(format!(
            "need 0 <= t <= s and 0 <= v <= u, got s={s}, t={t}, u={u}, v={v}"
        )));
    }
    let ratio = choose(s, t).checked_div(&choose(u, v))?;
    Ok(ratio * (harmonic(s)? - harmonic(s - t)?) * (harmonic(u - v)? - harmonic(u)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Axis, HyperDual};

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0).unwrap(), Rational::zero());
        assert_eq!(harmonic(1).unwrap(), Rational::one());
        assert_eq!(harmonic(4).unwrap(), q(25, 12));
        assert_eq!(harmonic(-1), Err(Error::NegativeIndex(-1)));
    }

    #[test]
    fn harmonic_increments() {
        for n in 1..200 {
            let step = harmonic(n).unwrap() - harmonic(n - 1).unwrap();
            assert_eq!(step, q(1, n));
            assert!(step > Rational::zero());
        }
    }

    #[test]
    fn private_table_grows_on_demand() {
        let t = HarmonicTable::new();
        assert_eq!(t.len(), 0);
        assert_eq!(t.get(3), q(11, 6));
        assert!(t.len() >= 3);
        t.reserve(10);
        assert_eq!(t.len(), 10);
    }

    #[test]
    fn shifted_binomials() {
        assert_eq!(binom_shifted(&Rational::zero(), 5).unwrap(), Rational::one());
        assert_eq!(binom_shifted(&Rational::from(3), 2).unwrap(), Rational::from(10));
        // x = -1/2 - 1, k = 1: (-1)^1 C(2,1)/4
        assert_eq!(binom_shifted(&q(-3, 2), 1).unwrap(), q(-1, 2));
        assert!(binom_shifted(&Rational::zero(), -1).is_err());
        // negative integer arguments vanish for long enough products
        assert_eq!(binom_shifted(&Rational::from(-3), 4).unwrap(), Rational::zero());
    }

    #[test]
    fn integer_binomials() {
        assert_eq!(binom_int(6, 3), Rational::from(20));
        assert_eq!(binom_int(5, 0), Rational::one());
        assert_eq!(binom_int(3, 5), Rational::zero());
        assert_eq!(binom_int(3, -1), Rational::zero());
        assert_eq!(choose(-1, 3), Rational::from(-1));
        assert_eq!(choose(-2, 2), Rational::from(3));
    }

    #[test]
    fn shifted_agrees_with_integer() {
        for m in 0..=50 {
            for k in 0..=50 {
                assert_eq!(
                    binom_shifted(&Rational::from(m), k).unwrap(),
                    binom_int((m + k) as u64, k),
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn central_binomial_form() {
        // C(-1/2, k) = (-1)^k C(2k,k) / 4^k
        for k in 0..30 {
            let lhs = binom_general(&q(-1, 2), k);
            let rhs = Rational::sign_power(k) * binom_int(2 * k as u64, k)
                * Rational::one().checked_div(&Rational::from(4).pow(k as u32)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn derivative_display_values() {
        assert_eq!(dx_binom_closed(3, 2).unwrap(), q(5, 2));
        assert_eq!(dx_binom_closed(7, 0).unwrap(), Rational::zero());
        assert_eq!(dx_binom_closed(1, 1).unwrap(), Rational::one());
        assert!(dx_binom_closed(2, 3).is_err());

        // 3/2 * 5/6 * (-1/2)
        assert_eq!(dxy_ratio_closed(3, 2, 2, 1).unwrap(), q(-5, 8));
        assert_eq!(dxy_ratio_closed(4, 0, 3, 2).unwrap(), Rational::zero());
        assert_eq!(dxy_ratio_closed(2, 1, 2, 1).unwrap(), q(-1, 4));
        assert!(dxy_ratio_closed(2, 1, 1, 2).is_err());
    }

    #[test]
    fn hyperdual_matches_first_display() {
        for s in 0..=30 {
            for t in 0..=s {
                let arg = HyperDual::from(s - t) + HyperDual::seed(Rational::zero(), Axis::X);
                let val = binom_shifted(&arg, t).unwrap();
                assert_eq!(val.b, dx_binom_closed(s, t).unwrap(), "s={s} t={t}");
                assert_eq!(val.a, choose(s, t));
            }
        }
    }
}
