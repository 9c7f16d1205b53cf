use std::fmt;

use super::Rational;
use crate::error::{Error, Result};

/// Truncated Laurent series in a single infinitesimal `e`.
///
/// Stores the coefficients of `e^start ..= e^(start + len - 1)`. A series is
/// either *exact* (every higher coefficient is zero, e.g. `z + e`) or carries
/// an `O(e^(start + len))` truncation. Relative precision never exceeds
/// `window` coefficients; products and inverses keep relative precision,
/// sums lose it only through cancellation.
///
/// Normal form: `coeffs[0] != 0` whenever `coeffs` is non-empty. An empty
/// exact series is zero; an empty inexact series is `O(e^start)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    start: i64,
    coeffs: Vec<Rational>,
    exact: bool,
    window: usize,
}

impl LaurentSeries {
    fn build(start: i64, mut coeffs: Vec<Rational>, exact: bool, window: usize) -> Self {
        let window = window.max(1);
        let lead = coeffs.iter().position(|c| !c.is_zero());
        let Some(lead) = lead else {
            return if exact {
                LaurentSeries { start: 0, coeffs: Vec::new(), exact, window }
            } else {
                LaurentSeries { start: start + coeffs.len() as i64, coeffs: Vec::new(), exact, window }
            };
        };
        coeffs.drain(..lead);
        let start = start + lead as i64;
        let mut exact = exact;
        if exact {
            while coeffs.last().is_some_and(Rational::is_zero) {
                coeffs.pop();
            }
        }
        if coeffs.len() > window {
            coeffs.truncate(window);
            exact = false;
        }
        LaurentSeries { start, coeffs, exact, window }
    }

    /// `c * e^0`, exact.
    pub fn constant(c: Rational, window: usize) -> Self {
        Self::build(0, vec![c], true, window)
    }

    /// `c * e^order`, exact.
    pub fn monomial(c: Rational, order: i64, window: usize) -> Self {
        Self::build(order, vec![c], true, window)
    }

    /// The Laurent polynomial `sum coeffs[i] e^(start+i)`, exact.
    pub fn polynomial(start: i64, coeffs: Vec<Rational>, window: usize) -> Self {
        Self::build(start, coeffs, true, window)
    }

    /// `sum coeffs[i] e^(start+i) + O(e^(start+len))`.
    pub fn truncated(start: i64, coeffs: Vec<Rational>, window: usize) -> Self {
        Self::build(start, coeffs, false, window)
    }

    /// `base + direction * e`, the perturbed value of a colliding parameter.
    pub fn perturbed(base: Rational, direction: Rational, window: usize) -> Self {
        Self::polynomial(0, vec![base, direction], window)
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Order of the lowest known nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.start)
    }

    /// Absolute precision: every order `>= precision` is unknown.
    /// `None` for exact series.
    pub fn precision(&self) -> Option<i64> {
        (!self.exact).then_some(self.start + self.coeffs.len() as i64)
    }

    /// Lowest order that is certainly zero-or-known below; all orders under
    /// it vanish.
    fn floor(&self) -> i64 {
        self.start
    }

    fn end(&self) -> i64 {
        self.start + self.coeffs.len() as i64
    }

    fn raw(&self, k: i64) -> Rational {
        if k >= self.start && k < self.end() {
            self.coeffs[(k - self.start) as usize].clone()
        } else {
            Rational::zero()
        }
    }

    /// Coefficient of `e^k` inside the retained window
    /// `[start, start + W)` (exact) or `[start, precision)` (truncated).
    pub fn coeff(&self, k: i64) -> Result<Rational> {
        let lo = self.floor();
        let hi = match self.precision() {
            Some(p) => p,
            None => lo + self.window as i64,
        };
        if k < lo || k >= hi {
            return Err(Error::OrderNotRetained { order: k, lo, hi });
        }
        Ok(self.raw(k))
    }

    /// Coefficient of `e^k`, treating every order below the valuation as
    /// zero. Fails only above the truncation.
    pub fn term(&self, k: i64) -> Result<Rational> {
        match self.precision() {
            Some(p) if k >= p => Err(Error::OrderNotRetained { order: k, lo: self.start, hi: p }),
            _ => Ok(self.raw(k)),
        }
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            start: self.start,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            exact: self.exact,
            window: self.window,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let window = self.window.max(rhs.window);
        let precision = match (self.precision(), rhs.precision()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let starts = [self, rhs].into_iter().filter(|s| !s.coeffs.is_empty()).map(|s| s.start);
        let Some(lo) = starts.min() else {
            return match precision {
                None => Self::build(0, Vec::new(), true, window),
                Some(p) => Self::build(p, Vec::new(), false, window),
            };
        };
        let hi = precision.unwrap_or_else(|| self.end().max(rhs.end()));
        if hi <= lo {
            return Self::build(hi, Vec::new(), false, window);
        }
        let coeffs = (lo..hi).map(|k| &self.raw(k) + &rhs.raw(k)).collect();
        Self::build(lo, coeffs, precision.is_none(), window)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let window = self.window.max(rhs.window);
        let is_exact_zero = |s: &Self| s.exact && s.coeffs.is_empty();
        if is_exact_zero(self) || is_exact_zero(rhs) {
            return Self::build(0, Vec::new(), true, window);
        }
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::build(self.start + rhs.start, Vec::new(), false, window);
        }
        let start = self.start + rhs.start;
        let (a, b) = (&self.coeffs, &rhs.coeffs);
        let len = match (self.exact, rhs.exact) {
            (true, true) => a.len() + b.len() - 1,
            (true, false) => b.len(),
            (false, true) => a.len(),
            (false, false) => a.len().min(b.len()),
        };
        let coeffs = (0..len)
            .map(|k| {
                let lo = k.saturating_sub(b.len() - 1);
                let hi = k.min(a.len() - 1);
                (lo..=hi).fold(Rational::zero(), |acc, i| &acc + &(&a[i] * &b[k - i]))
            })
            .collect();
        Self::build(start, coeffs, self.exact && rhs.exact, window)
    }

    /// Multiplicative inverse. Needs a known nonzero leading coefficient.
    pub fn invert(&self) -> Result<Self> {
        let Some(lead) = self.coeffs.first() else {
            return Err(Error::NotInvertible);
        };
        let lead_inv = lead.recip()?;
        if self.exact && self.coeffs.len() == 1 {
            return Ok(Self::monomial(lead_inv, -self.start, self.window));
        }
        let len = if self.exact { self.window } else { self.coeffs.len() };
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        out.push(lead_inv.clone());
        for k in 1..len {
            let top = k.min(self.coeffs.len() - 1);
            let acc = (1..=top).fold(Rational::zero(), |acc, i| &acc + &(&self.coeffs[i] * &out[k - i]));
            out.push(-(&acc * &lead_inv));
        }
        Ok(Self::build(-self.start, out, false, self.window))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.mul(&Self::constant(c.clone(), self.window))
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.start + i as i64;
            parts.push(match k {
                0 => c.to_string(),
                1 => format!("{c}*e"),
                _ => format!("{c}*e^{k}"),
            });
        }
        if let Some(p) = self.precision() {
            parts.push(format!("O(e^{p})"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
