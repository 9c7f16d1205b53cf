//! Kernel functions `f`, `g`, bar-set products and Izergin determinants.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{try_sum, LaurentSeries, Rational, Scalar};
use crate::params::validate_q;
use crate::partitions::split2;

/// Which of the left/right variants is evaluated. Formulas written with
/// `±`/`∓` take the upper sign for `L` and the lower sign for `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "l")]
    L,
    #[serde(rename = "r")]
    R,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::L => Side::R,
            Side::R => Side::L,
        }
    }

    /// `+1` for `L`, `-1` for `R`.
    pub fn sign(self) -> i64 {
        match self {
            Side::L => 1,
            Side::R => -1,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::L => "l",
            Side::R => "r",
        })
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "l" | "left" => Ok(Side::L),
            "r" | "right" => Ok(Side::R),
            _ => Err(Error::Unknown { kind: "side", name: s.to_string() }),
        }
    }
}

/// The deformation parameter together with the scalar ring in use.
///
/// `unit` is the ring's `1`; for Laurent evaluation it fixes the window.
#[derive(Clone, Debug)]
pub struct Kernel<S> {
    q: Rational,
    qi: Rational,
    unit: S,
}

impl Kernel<Rational> {
    pub fn new(q: &Rational) -> Result<Self> {
        Kernel::with_unit(q, Rational::one())
    }
}

impl Kernel<LaurentSeries> {
    pub fn laurent(q: &Rational, window: usize) -> Result<Self> {
        Kernel::with_unit(q, LaurentSeries::constant(Rational::one(), window))
    }
}

impl<S: Scalar> Kernel<S> {
    pub fn with_unit(q: &Rational, unit: S) -> Result<Self> {
        validate_q(q)?;
        Ok(Kernel { q: q.clone(), qi: q.recip()?, unit })
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// The same ring with `q` replaced by `q^-1`.
    pub fn inverted(&self) -> Self {
        Kernel { q: self.qi.clone(), qi: self.q.clone(), unit: self.unit.clone() }
    }

    pub fn one(&self) -> S {
        self.unit.clone()
    }

    pub fn constant(&self, c: &Rational) -> S {
        self.unit.constant(c)
    }

    pub fn lift(&self, values: &[Rational]) -> Vec<S> {
        values.iter().map(|v| self.constant(v)).collect()
    }

    /// `(-q)^k`.
    pub fn neg_q_pow(&self, k: i64) -> Rational {
        let p = self.q.pow(k as i32).expect("q is nonzero");
        if k % 2 == 0 {
            p
        } else {
            -p
        }
    }

    /// Every element times `q^k`.
    pub fn shift(&self, set: &[S], k: i32) -> Vec<S> {
        let factor = self.q.pow(k).expect("q is nonzero");
        set.iter().map(|v| v.scale(&factor)).collect()
    }

    fn recip(&self, d: &S, what: impl FnOnce() -> String) -> Result<S> {
        d.inv().map_err(|e| match e {
            Error::DivisionByZero => Error::Pole(what()),
            other => other,
        })
    }

    /// `q u - q^-1 v`.
    fn h(&self, u: &S, v: &S) -> S {
        u.scale(&self.q).sub(&v.scale(&self.qi))
    }

    /// `f(u, v) = (q u - q^-1 v) / (u - v)`.
    pub fn f(&self, u: &S, v: &S) -> Result<S> {
        let d = self.recip(&u.sub(v), || format!("f({u}, {v})"))?;
        Ok(self.h(u, v).mul(&d))
    }

    /// `g(u, v) = (q - q^-1) / (u - v)`.
    pub fn g(&self, u: &S, v: &S) -> Result<S> {
        let d = self.recip(&u.sub(v), || format!("g({u}, {v})"))?;
        Ok(d.scale(&(&self.q - &self.qi)))
    }

    /// `prod_{u in us} prod_{v in vs} f(u, v)`.
    pub fn f_prod(&self, us: &[S], vs: &[S]) -> Result<S> {
        let mut acc = self.one();
        for u in us {
            for v in vs {
                acc = acc.mul(&self.f(u, v)?);
            }
        }
        Ok(acc)
    }

    /// `1 / f_prod(us, vs)`.
    pub fn f_prod_inv(&self, us: &[S], vs: &[S]) -> Result<S> {
        let p = self.f_prod(us, vs)?;
        self.recip(&p, || "zero of f product".to_string())
    }

    pub fn product(&self, values: &[S]) -> S {
        values.iter().fold(self.one(), |acc, v| acc.mul(v))
    }

    /// Izergin determinant `K_n(xs | ys)`.
    ///
    /// Row `i` of the defining matrix is multiplied by `prod_l (q x_i - q^-1 y_l)`,
    /// which absorbs the prefactor and leaves entries
    /// `g(x_i, y_j) prod_{l != j} (q x_i - q^-1 y_l)`. The result is regular
    /// wherever `q x_i = q^-1 y_j`.
    pub fn izergin(&self, xs: &[S], ys: &[S]) -> Result<S> {
        let n = xs.len();
        if ys.len() != n {
            return Err(Error::Cardinality(format!("K needs equal sizes, got {} and {}", n, ys.len())));
        }
        let mut matrix = Vec::with_capacity(n);
        for x in xs {
            let mut row = Vec::with_capacity(n);
            for (j, y) in ys.iter().enumerate() {
                let mut entry = self.g(x, y)?;
                for (l, yl) in ys.iter().enumerate() {
                    if l != j {
                        entry = entry.mul(&self.h(x, yl));
                    }
                }
                row.push(entry);
            }
            matrix.push(row);
        }
        let det = determinant(matrix, &self.unit)?;
        let mut vandermonde = self.one();
        for i in 0..n {
            for j in i + 1..n {
                vandermonde = vandermonde.mul(&xs[i].sub(&xs[j])).mul(&ys[j].sub(&ys[i]));
            }
        }
        Ok(det.mul(&self.recip(&vandermonde, || "repeated argument in K".to_string())?))
    }

    /// `K^(l) = prod x * K`, `K^(r) = prod y * K`.
    pub fn izergin_side(&self, side: Side, xs: &[S], ys: &[S]) -> Result<S> {
        let k = self.izergin(xs, ys)?;
        let pref = match side {
            Side::L => self.product(xs),
            Side::R => self.product(ys),
        };
        Ok(pref.mul(&k))
    }

    pub fn izergin_left(&self, xs: &[S], ys: &[S]) -> Result<S> {
        self.izergin_side(Side::L, xs, ys)
    }

    pub fn izergin_right(&self, xs: &[S], ys: &[S]) -> Result<S> {
        self.izergin_side(Side::R, xs, ys)
    }

    /// `sum K^{side}(gamma_I | alpha) K^{flip}(beta | gamma_II) f(gamma_II, gamma_I)`
    /// over `gamma => {gamma_I, gamma_II}` with `#gamma_I = #alpha`.
    pub fn lemma_partition_sum(&self, gamma: &[S], alpha: &[S], beta: &[S], side: Side) -> Result<S> {
        if gamma.len() != alpha.len() + beta.len() {
            return Err(Error::Cardinality("#gamma must equal #alpha + #beta".into()));
        }
        try_sum(
            self.unit.zero_like(),
            split2(gamma, alpha.len())?.map(|(g1, g2)| {
                Ok(self
                    .izergin_side(side, &g1, alpha)?
                    .mul(&self.izergin_side(side.flip(), beta, &g2)?)
                    .mul(&self.f_prod(&g2, &g1)?))
            }),
        )
    }

    /// Closed form `(-q)^{∓m1} f(gamma, alpha) K^{flip}({alpha q^-2, beta} | gamma)`.
    pub fn lemma_closed_form(&self, gamma: &[S], alpha: &[S], beta: &[S], side: Side) -> Result<S> {
        let mut args = self.shift(alpha, -2);
        args.extend_from_slice(beta);
        let k = self.izergin_side(side.flip(), &args, gamma)?;
        let sign = self.neg_q_pow(-side.sign() * alpha.len() as i64);
        Ok(self.f_prod(gamma, alpha)?.mul(&k).scale(&sign))
    }

    /// Equivalent closed form `(-q)^{±m2} f(beta, gamma) K^{side}(gamma | {alpha, beta q^2})`.
    pub fn lemma_closed_form_alt(&self, gamma: &[S], alpha: &[S], beta: &[S], side: Side) -> Result<S> {
        let mut args = alpha.to_vec();
        args.extend(self.shift(beta, 2));
        let k = self.izergin_side(side, gamma, &args)?;
        let sign = self.neg_q_pow(side.sign() * beta.len() as i64);
        Ok(self.f_prod(beta, gamma)?.mul(&k).scale(&sign))
    }
}

/// Determinant by Gaussian elimination. The pivot in each column is the
/// entry of smallest `pivot_rank` (first nonzero for rationals, lowest
/// valuation for series).
pub fn determinant<S: Scalar>(mut m: Vec<Vec<S>>, unit: &S) -> Result<S> {
    let n = m.len();
    let mut det = unit.clone();
    for c in 0..n {
        let pivot = (c..n).filter_map(|r| m[r][c].pivot_rank().map(|rank| (rank, r))).min();
        let Some((_, p)) = pivot else {
            if (c..n).all(|r| m[r][c].is_exact_zero()) {
                return Ok(unit.zero_like());
            }
            return Err(Error::NotInvertible);
        };
        if p != c {
            m.swap(p, c);
            det = det.neg();
        }
        let inv = m[c][c].inv()?;
        det = det.mul(&m[c][c]);
        let (upper, lower) = m.split_at_mut(c + 1);
        let pivot_row = &upper[c];
        for row in lower.iter_mut() {
            if row[c].is_exact_zero() {
                continue;
            }
            let factor = row[c].mul(&inv);
            for (entry, p) in row[c + 1..].iter_mut().zip(&pivot_row[c + 1..]) {
                *entry = entry.sub(&factor.mul(p));
            }
        }
    }
    Ok(det)
}

/// Value at `e = 0` of a series that must be regular there.
pub fn finite_limit(s: &LaurentSeries) -> Result<Rational> {
    if let Some(v) = s.valuation() {
        if v < 0 {
            return Err(Error::Singular(format!("order {v} term survives in {s}")));
        }
    }
    s.term(0)
}

/// Coefficient of `e^-1` of a series with at most a simple pole.
pub fn simple_residue(s: &LaurentSeries) -> Result<Rational> {
    if let Some(v) = s.valuation() {
        if v < -1 {
            return Err(Error::Singular(format!("pole of order {} in {s}", -v)));
        }
    }
    s.term(-1)
}

/// Leading coefficient among orders below `threshold`, or zero if the series
/// is `O(e^threshold)`. A nonzero value means the valuation bound fails.
pub fn coefficient_below(s: &LaurentSeries, threshold: i64) -> Result<Rational> {
    match s.valuation() {
        Some(v) if v < threshold => s.term(v),
        _ => {
            if let Some(p) = s.precision() {
                if p < threshold {
                    return Err(Error::OrderNotRetained { order: threshold - 1, lo: s.valuation().unwrap_or(p), hi: p });
                }
            }
            Ok(Rational::zero())
        }
    }
}

/// `z'_j = z_j + (j + 1) e`: approach all colliding points along one ray.
pub fn ray(zs: &[Rational], window: usize) -> Vec<LaurentSeries> {
    zs.iter()
        .enumerate()
        .map(|(j, z)| LaurentSeries::perturbed(z.clone(), Rational::from_integer(j as i64 + 1), window))
        .collect()
}

impl Kernel<LaurentSeries> {
    /// `lim_{z' -> z} f^-1(z, z') K_{n+m}({x, z} | {y, z'})`.
    pub fn mult_pole_limit(&self, xs: &[Rational], ys: &[Rational], zs: &[Rational], side: Side) -> Result<Rational> {
        let window = self.one().window();
        let z = self.lift(zs);
        let zp = ray(zs, window);
        let mut left = self.lift(xs);
        left.extend(z.iter().cloned());
        let mut right = self.lift(ys);
        right.extend(zp.iter().cloned());
        let k = self.izergin_side(side, &left, &right)?;
        finite_limit(&self.f_prod_inv(&z, &zp)?.mul(&k))
    }
}
