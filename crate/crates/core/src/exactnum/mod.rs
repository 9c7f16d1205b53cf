//! Exact arithmetic: rationals and truncated Laurent series in one infinitesimal.

mod laurent;
mod rational;

pub use laurent::LaurentSeries;
pub use rational::Rational;

use crate::error::Result;

/// The ring operations every formula in this crate is written against.
///
/// Both [`Rational`] (plain evaluation) and [`LaurentSeries`] (limits and
/// residues) implement it, so the same code path serves values and series.
pub trait Scalar: Clone + std::fmt::Debug + std::fmt::Display + Send + Sync {
    /// Embeds a rational constant into the same ring as `self`.
    fn constant(&self, value: &Rational) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    /// Ranking used for pivot selection; `None` marks an entry that cannot
    /// serve as a pivot (zero, or no known nonzero coefficient).
    fn pivot_rank(&self) -> Option<i64>;

    /// True only when the value is known to be exactly zero.
    fn is_exact_zero(&self) -> bool;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn zero_like(&self) -> Self {
        self.constant(&Rational::zero())
    }

    fn one_like(&self) -> Self {
        self.constant(&Rational::one())
    }

    fn scale(&self, c: &Rational) -> Self {
        self.mul(&self.constant(c))
    }

    /// Integer power; negative exponents invert.
    fn powi(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.one_like();
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

impl Scalar for Rational {
    fn constant(&self, value: &Rational) -> Self {
        value.clone()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        self.recip()
    }
    fn pivot_rank(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(0)
        }
    }
    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for LaurentSeries {
    fn constant(&self, value: &Rational) -> Self {
        LaurentSeries::constant(value.clone(), self.window())
    }
    fn add(&self, rhs: &Self) -> Self {
        LaurentSeries::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        LaurentSeries::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        LaurentSeries::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        LaurentSeries::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        self.invert()
    }
    fn pivot_rank(&self) -> Option<i64> {
        self.valuation()
    }
    fn is_exact_zero(&self) -> bool {
        self.is_exact() && self.valuation().is_none()
    }
}

/// Sum of an iterator of fallible terms, starting from `zero`.
pub(crate) fn try_sum<S: Scalar>(zero: S, terms: impl IntoIterator<Item = Result<S>>) -> Result<S> {
    terms.into_iter().try_fold(zero, |acc, t| Ok(acc.add(&t?)))
}
