//! Left/right highest coefficients `Z_{a,b}(t; x | s; y)`.
//!
//! [`z`] evaluates any of the six partition-sum representations over any
//! scalar ring. The submodules evaluate both sides of the identities these
//! coefficients satisfy.

mod identities;
mod limits;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use identities::{
    hc_difference_11, hc_closed_form_11, hc_prop51_pair, hc_reduction_pair, hc_symmetry_check, hc_twin_sum_pair,
    ReductionVariant, SymmetryVariant, TwinVariant,
};
pub use limits::{
    hc_infinity_check, hc_multiple_limit_pair, hc_residue_pair, hc_zero_value, LimitVariant, ResidueVariant, Slot,
};

use crate::error::{Error, Result};
use crate::exactnum::{try_sum, Rational, Scalar};
use crate::izergin::{Kernel, Side};
use crate::params::ParameterSet;
use crate::partitions::split2;

/// The six equivalent partition-sum representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rep {
    /// Partitions of `{s, x}`.
    #[serde(rename = "ws")]
    Ws,
    /// Twin form of `Ws`.
    #[serde(rename = "ws-twin")]
    WsTwin,
    /// Partitions of `{y, t q^-2}`.
    #[serde(rename = "ty")]
    Ty,
    /// Twin form of `Ty`.
    #[serde(rename = "ty-twin")]
    TyTwin,
    /// Partitions of `t` and `x`, summed over the part size.
    #[serde(rename = "tx")]
    Tx,
    /// Partitions of `s` and `y`, summed over the part size.
    #[serde(rename = "sy")]
    Sy,
}

impl Rep {
    pub const ALL: [Rep; 6] = [Rep::Ws, Rep::WsTwin, Rep::Ty, Rep::TyTwin, Rep::Tx, Rep::Sy];

    pub fn name(self) -> &'static str {
        match self {
            Rep::Ws => "ws",
            Rep::WsTwin => "ws-twin",
            Rep::Ty => "ty",
            Rep::TyTwin => "ty-twin",
            Rep::Tx => "tx",
            Rep::Sy => "sy",
        }
    }
}

impl fmt::Display for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rep {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Rep::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "representation", name: s.to_string() })
    }
}

/// A fully specified evaluation request over rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HcQuery {
    pub side: Side,
    pub rep: Rep,
    pub t: ParameterSet,
    pub x: ParameterSet,
    pub s: ParameterSet,
    pub y: ParameterSet,
    pub q: Rational,
}

impl HcQuery {
    pub fn new(side: Side, t: ParameterSet, x: ParameterSet, s: ParameterSet, y: ParameterSet, q: Rational) -> Self {
        HcQuery { side, rep: Rep::Ws, t, x, s, y, q }
    }

    pub fn with_rep(mut self, rep: Rep) -> Self {
        self.rep = rep;
        self
    }

    pub fn a(&self) -> usize {
        self.t.len()
    }

    pub fn b(&self) -> usize {
        self.s.len()
    }
}

/// Evaluates `Z^{side}_{a,b}` for the query.
pub fn hc(query: &HcQuery) -> Result<Rational> {
    let k = Kernel::new(&query.q)?;
    z(&k, query.side, query.rep, &query.t, &query.x, &query.s, &query.y)
}

/// Evaluates the query with every representation, in [`Rep::ALL`] order.
pub fn hc_all(query: &HcQuery) -> Result<Vec<(Rep, Rational)>> {
    let k = Kernel::new(&query.q)?;
    Rep::ALL
        .into_iter()
        .map(|rep| Ok((rep, z(&k, query.side, rep, &query.t, &query.x, &query.s, &query.y)?)))
        .collect()
}

pub(crate) fn cat<S: Clone>(a: &[S], b: &[S]) -> Vec<S> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

fn check_shape<S>(t: &[S], x: &[S], s: &[S], y: &[S]) -> Result<()> {
    if t.len() != x.len() || s.len() != y.len() {
        return Err(Error::Cardinality(format!(
            "Z needs #t = #x and #s = #y, got {}, {}, {}, {}",
            t.len(),
            x.len(),
            s.len(),
            y.len()
        )));
    }
    Ok(())
}

/// `Z^{side}_{a,b}(t; x | s; y)` through representation `rep`.
pub fn z<S: Scalar>(k: &Kernel<S>, side: Side, rep: Rep, t: &[S], x: &[S], s: &[S], y: &[S]) -> Result<S> {
    check_shape(t, x, s, y)?;
    match rep {
        Rep::Ws | Rep::WsTwin => z_ws(k, side, rep == Rep::WsTwin, t, x, s, y),
        Rep::Ty | Rep::TyTwin => z_ty(k, side, rep == Rep::TyTwin, t, x, s, y),
        Rep::Tx => z_tx(k, side, t, x, s, y),
        Rep::Sy => z_sy(k, side, t, x, s, y),
    }
}

fn z_ws<S: Scalar>(k: &Kernel<S>, side: Side, twin: bool, t: &[S], x: &[S], s: &[S], y: &[S]) -> Result<S> {
    let (a, b) = (t.len(), s.len());
    let w = cat(s, x);
    let xq2 = k.shift(x, 2);
    let sum = try_sum(
        k.one().zero_like(),
        split2(&w, b)?.map(|(w1, w2)| {
            let first = if twin {
                k.izergin_side(side.flip(), &w2, &xq2)?
            } else {
                k.izergin_side(side.flip(), s, &k.shift(&w1, 2))?
            };
            Ok(first
                .mul(&k.izergin_side(side, &w2, t)?)
                .mul(&k.izergin_side(side, y, &w1)?)
                .mul(&k.f_prod(&w1, &w2)?))
        }),
    )?;
    let exponent = if twin { a } else { b } as i64;
    Ok(sum.scale(&k.neg_q_pow(-side.sign() * exponent)))
}

fn z_ty<S: Scalar>(k: &Kernel<S>, side: Side, twin: bool, t: &[S], x: &[S], s: &[S], y: &[S]) -> Result<S> {
    let (a, b) = (t.len(), s.len());
    let tq = k.shift(t, -2);
    let xq = k.shift(x, -2);
    let yq2 = k.shift(y, 2);
    let eta = cat(y, &tq);
    let sum = try_sum(
        k.one().zero_like(),
        split2(&eta, a)?.map(|(e1, e2)| {
            let first = if twin {
                k.izergin_side(side.flip(), &e2, &yq2)?
            } else {
                k.izergin_side(side.flip(), &tq, &k.shift(&e1, 2))?
            };
            Ok(first
                .mul(&k.izergin_side(side, &xq, &e1)?)
                .mul(&k.izergin_side(side, &e2, s)?)
                .mul(&k.f_prod(&e1, &e2)?))
        }),
    )?;
    let exponent = if twin { b } else { a } as i64;
    let pref = k.f_prod(y, x)?.mul(&k.f_prod(s, t)?);
    Ok(sum.mul(&pref).scale(&k.neg_q_pow(-side.sign() * exponent)))
}

fn z_tx<S: Scalar>(k: &Kernel<S>, side: Side, t: &[S], x: &[S], s: &[S], y: &[S]) -> Result<S> {
    let a = t.len();
    let mut total = k.one().zero_like();
    for n in 0..=a {
        let sign = k.neg_q_pow(side.sign() * n as i64);
        for (t1, t2) in split2(t, n)? {
            let t1q = k.shift(&t1, -2);
            let t2q = k.shift(&t2, -2);
            let t_part = k.f_prod(s, &t1)?.mul(&k.f_prod(&t1, &t2)?);
            for (x1, x2) in split2(x, n)? {
                let term = t_part
                    .mul(&k.f_prod(y, &x2)?)
                    .mul(&k.f_prod(&x2, &x1)?)
                    .mul(&k.izergin_side(side, &x1, &t1)?)
                    .mul(&k.izergin_side(side, &x2, &t2q)?)
                    .mul(&k.izergin_side(side, &cat(y, &t1q), &cat(s, &x1))?);
                total = total.add(&term.scale(&sign));
            }
        }
    }
    Ok(total)
}

fn z_sy<S: Scalar>(k: &Kernel<S>, side: Side, t: &[S], x: &[S], s: &[S], y: &[S]) -> Result<S> {
    let b = s.len();
    let mut total = k.one().zero_like();
    for n in 0..=b {
        let sign = k.neg_q_pow(side.sign() * n as i64);
        for (s1, s2) in split2(s, n)? {
            let s2q = k.shift(&s2, -2);
            let s_part = k.f_prod(&s2, t)?.mul(&k.f_prod(&s1, &s2)?);
            for (y1, y2) in split2(y, n)? {
                let term = s_part
                    .mul(&k.f_prod(&y1, x)?)
                    .mul(&k.f_prod(&y2, &y1)?)
                    .mul(&k.izergin_side(side, &y1, &s1)?)
                    .mul(&k.izergin_side(side, &y2, &s2q)?)
                    .mul(&k.izergin_side(side, &cat(&s1, x), &cat(&k.shift(&y1, 2), t))?);
                total = total.add(&term.scale(&sign));
            }
        }
    }
    Ok(total)
}
