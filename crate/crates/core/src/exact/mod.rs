//! Exact scalars: reduced big rationals and the hyper-dual algebra
//! `Q[ex, ey] / (ex^2, ey^2)` used to take first and mixed partial
//! derivatives exactly.

mod hyperdual;
mod rational;

pub use hyperdual::{Axis, HyperDual};
pub use rational::Rational;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;

/// Common surface of [`Rational`] and [`HyperDual`], so the telescoping
/// machinery can be evaluated either for values or for derivatives.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + From<Rational>
    + From<i64>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// The value part (the scalar itself for rationals).
    fn value(&self) -> &Rational;

    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.inv()?)
    }

    fn zero() -> Self {
        Self::from(0)
    }

    fn one() -> Self {
        Self::from(1)
    }
}

impl Scalar for Rational {
    fn value(&self) -> &Rational {
        self
    }

    fn inv(&self) -> Result<Self> {
        self.recip()
    }
}

impl Scalar for HyperDual {
    fn value(&self) -> &Rational {
        &self.a
    }

    fn inv(&self) -> Result<Self> {
        HyperDual::inv(self)
    }
}
