use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Differentiation variable a hyper-dual is seeded along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

/// Truncated bivariate Taylor value `a + b*ex + c*ey + d*ex*ey` with
/// `ex^2 = ey^2 = 0`: value, d/dx, d/dy and the mixed partial d2/dxdy.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct HyperDual {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl HyperDual {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        HyperDual { a, b, c, d }
    }

    pub fn constant(r: Rational) -> Self {
        HyperDual {
            a: r,
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::zero(),
        }
    }

    /// The independent variable along `axis`, placed at `base`.
    pub fn seed(base: Rational, axis: Axis) -> Self {
        let mut h = Self::constant(base);
        match axis {
            Axis::X => h.b = Rational::one(),
            Axis::Y => h.c = Rational::one(),
        }
        h
    }

    pub fn components(&self) -> [Rational; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    /// `(1/a, -b/a^2, -c/a^2, 2bc/a^3 - d/a^2)`.
    pub fn inv(&self) -> Result<Self> {
        if self.a.is_zero() {
            return Err(Error::ZeroValuePart);
        }
        let ia = self.a.recip()?;
        let ia2 = ia.square();
        let ia3 = &ia2 * &ia;
        Ok(HyperDual {
            b: -(&self.b * &ia2),
            c: -(&self.c * &ia2),
            d: Rational::from(2) * &self.b * &self.c * &ia3 - &self.d * &ia2,
            a: ia,
        })
    }

    pub fn scale(&self, k: &Rational) -> Self {
        HyperDual {
            a: &self.a * k,
            b: &self.b * k,
            c: &self.c * k,
            d: &self.d * k,
        }
    }
}

impl From<Rational> for HyperDual {
    fn from(r: Rational) -> Self {
        HyperDual::constant(r)
    }
}

impl From<i64> for HyperDual {
    fn from(v: i64) -> Self {
        HyperDual::constant(Rational::from(v))
    }
}

impl fmt::Debug for HyperDual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for HyperDual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn mul_ref(u: &HyperDual, v: &HyperDual) -> HyperDual {
    HyperDual {
        a: &u.a * &v.a,
        b: &u.a * &v.b + &u.b * &v.a,
        c: &u.a * &v.c + &u.c * &v.a,
        d: &u.a * &v.d + &u.b * &v.c + &u.c * &v.b + &u.d * &v.a,
    }
}

impl Mul for HyperDual {
    type Output = HyperDual;
    fn mul(self, rhs: HyperDual) -> HyperDual {
        mul_ref(&self, &rhs)
    }
}

impl Mul<&HyperDual> for &HyperDual {
    type Output = HyperDual;
    fn mul(self, rhs: &HyperDual) -> HyperDual {
        mul_ref(self, rhs)
    }
}

impl Add for HyperDual {
    type Output = HyperDual;
    fn add(self, rhs: HyperDual) -> HyperDual {
        HyperDual {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            c: self.c + rhs.c,
            d: self.d + rhs.d,
        }
    }
}

impl Add<&HyperDual> for &HyperDual {
    type Output = HyperDual;
    fn add(self, rhs: &HyperDual) -> HyperDual {
        HyperDual {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }
}

impl Sub for HyperDual {
    type Output = HyperDual;
    fn sub(self, rhs: HyperDual) -> HyperDual {
        HyperDual {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
            c: self.c - rhs.c,
            d: self.d - rhs.d,
        }
    }
}

impl Sub<&HyperDual> for &HyperDual {
    type Output = HyperDual;
    fn sub(self, rhs: &HyperDual) -> HyperDual {
        HyperDual {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            c: &self.c - &rhs.c,
            d: &self.d - &rhs.d,
        }
    }
}

impl Neg for HyperDual {
    type Output = HyperDual;
    fn neg(self) -> HyperDual {
        HyperDual {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn hd(a: i64, b: i64, c: i64, d: i64) -> HyperDual {
        HyperDual::new(a.into(), b.into(), c.into(), d.into())
    }

    #[test]
    fn seeding() {
        assert_eq!(HyperDual::seed(Rational::zero(), Axis::X), hd(0, 1, 0, 0));
        assert_eq!(HyperDual::seed(3.into(), Axis::Y), hd(3, 0, 1, 0));
        assert_eq!(
            HyperDual::seed(q(-1, 2), Axis::X),
            HyperDual::new(q(-1, 2), 1.into(), 0.into(), 0.into())
        );
    }

    #[test]
    fn products() {
        assert_eq!(hd(0, 1, 0, 0) * hd(0, 0, 1, 0), hd(0, 0, 0, 1));
        assert_eq!(hd(0, 1, 0, 0) * hd(0, 1, 0, 0), hd(0, 0, 0, 0));
        assert_eq!(hd(2, 1, 0, 0) * hd(3, 0, 1, 0), hd(6, 3, 2, 1));
    }

    #[test]
    fn inverses() {
        assert_eq!(hd(1, 0, 0, 0).inv().unwrap(), hd(1, 0, 0, 0));
        assert_eq!(
            hd(2, 1, 0, 0).inv().unwrap(),
            HyperDual::new(q(1, 2), q(-1, 4), 0.into(), 0.into())
        );
        assert_eq!(hd(1, 1, 1, 0).inv().unwrap(), hd(1, -1, -1, 2));
        assert_eq!(hd(0, 5, 1, 1).inv(), Err(Error::ZeroValuePart));
        // zero derivative part, nonzero value: invertible
        assert!(hd(4, 0, 0, 0).inv().is_ok());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::frac(n, d))
    }

    fn hyperdual() -> impl Strategy<Value = HyperDual> {
        (small_rational(), small_rational(), small_rational(), small_rational())
            .prop_map(|(a, b, c, d)| HyperDual::new(a, b, c, d))
    }

    proptest! {
        #[test]
        fn inverse_is_exact(u in hyperdual()) {
            prop_assume!(!u.a.is_zero());
            prop_assert_eq!(&u * &u.inv().unwrap(), HyperDual::from(1));
        }

        #[test]
        fn ring_laws(u in hyperdual(), v in hyperdual(), w in hyperdual()) {
            prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
            prop_assert_eq!(&u * &v, &v * &u);
            prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
            prop_assert_eq!(&(&u + &v) + &w, &u + &(&v + &w));
            prop_assert_eq!(&u - &u, HyperDual::from(0));
        }

        #[test]
        fn constants_commute(u in hyperdual(), r in small_rational()) {
            let k = HyperDual::constant(r.clone());
            prop_assert_eq!(&k * &u, &u * &k);
            prop_assert_eq!(&k * &u, u.scale(&r));
        }
    }
}
