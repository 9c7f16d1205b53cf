//! Both sides of the exact (limit-free) identities for `Z`.

use super::{cat, hc, z, HcQuery, Rep};
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::izergin::{Kernel, Side};
use crate::params::ParameterSet;
use crate::partitions::split2;

macro_rules! named_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum $name { $($variant),+ }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];
            pub fn name(self) -> &'static str {
                match self { $($name::$variant => $text),+ }
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str(self.name())
            }
        }

        impl std::str::FromStr for $name {
            type Err = $crate::error::Error;
            fn from_str(s: &str) -> $crate::error::Result<Self> {
                $name::ALL.iter().copied().find(|v| v.name() == s)
                    .ok_or_else(|| $crate::error::Error::Unknown { kind: stringify!($name), name: s.to_string() })
            }
        }
    };
}
pub(crate) use named_enum;

named_enum!(SymmetryVariant { Scal => "Z_SCAL", Invers => "Z_INVERS", Invers1 => "Z_INVERS1" });
named_enum!(ReductionVariant { Dec1 => "DEC1", Dec2 => "DEC2", Dec1Pc => "DEC1_PC", Dec2Pc => "DEC2_PC" });
named_enum!(TwinVariant { One => "TWIN_1", Two => "TWIN_2", Three => "TWIN_3", Four => "TWIN_4" });

fn ws(k: &Kernel<Rational>, side: Side, t: &[Rational], x: &[Rational], s: &[Rational], y: &[Rational]) -> Result<Rational> {
    z(k, side, Rep::Ws, t, x, s, y)
}

fn need(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Cardinality(what.to_string()))
    }
}

/// The displayed closed form of `Z^{side}_{1,1}(t; x | s; y)`.
pub fn hc_closed_form_11(side: Side, t: &Rational, x: &Rational, s: &Rational, y: &Rational, q: &Rational) -> Result<Rational> {
    let k = Kernel::new(q)?;
    let first = &(&k.g(x, t)? * &k.g(y, s)?) * &k.f(s, x)?;
    let second = &(&k.g(x, s)? * &k.g(s, t)?) * &k.g(y, x)?;
    Ok(match side {
        Side::L => &(&(x * y) * &first) + &(&(&(x * y) * s) * &second),
        Side::R => &(&(t * s) * &first) + &(&(&(t * s) * x) * &second),
    })
}

/// `((ts)^-1 Z^(r)_{1,1} - (xy)^-1 Z^(l)_{1,1}, (q - q^-1) g(s,t) g(y,x))`.
pub fn hc_difference_11(t: &Rational, x: &Rational, s: &Rational, y: &Rational, q: &Rational) -> Result<(Rational, Rational)> {
    let k = Kernel::new(q)?;
    let (tv, xv, sv, yv) = ([t.clone()], [x.clone()], [s.clone()], [y.clone()]);
    let zl = ws(&k, Side::L, &tv, &xv, &sv, &yv)?;
    let zr = ws(&k, Side::R, &tv, &xv, &sv, &yv)?;
    let lhs = &zr.checked_div(&(t * s))? - &zl.checked_div(&(x * y))?;
    let rhs = &(&(q - &q.recip()?) * &k.g(s, t)?) * &k.g(y, x)?;
    Ok((lhs, rhs))
}

/// Both sides of a scaling or argument-reordering symmetry of `Z`.
pub fn hc_symmetry_check(variant: SymmetryVariant, query: &HcQuery, alpha: &Rational) -> Result<(Rational, Rational)> {
    let k = Kernel::new(&query.q)?;
    let HcQuery { side, rep, t, x, s, y, .. } = query;
    let (side, rep) = (*side, *rep);
    match variant {
        SymmetryVariant::Scal => {
            if alpha.is_zero() {
                return Err(Error::Config("scaling factor must be nonzero".into()));
            }
            let lhs = z(&k, side, rep, &t.scale(alpha), &x.scale(alpha), &s.scale(alpha), &y.scale(alpha))?;
            Ok((lhs, hc(query)?))
        }
        SymmetryVariant::Invers => {
            let lhs = z(&k, side, rep, s, y, &k.shift(t, -2), &k.shift(x, -2))?;
            let rhs = &(&k.f_prod_inv(y, x)? * &k.f_prod_inv(s, t)?) * &hc(query)?;
            Ok((lhs, rhs))
        }
        SymmetryVariant::Invers1 => {
            let lhs = z(&k.inverted(), side, rep, t, x, s, y)?;
            let rhs = z(&k, side.flip(), rep, y, s, x, t)?;
            Ok((lhs, rhs))
        }
    }
}

/// Both sides of a reduction at deliberately q-shifted coincident
/// arguments. Expected sizes with `n = #z`:
///
/// * `Dec2`: `#t = a - n`, `#x = a`, `#s = b - n`, `#y = b`.
/// * `Dec1`: `#t = a`, `#x = a - n`, `#s = b`, `#y = b - n`.
/// * `Dec2Pc`: `#t = a - n`, `#x = a`, `#y = n`; `s` is ignored.
/// * `Dec1Pc`: `#t = n`, `#s = b`, `#y = b - n`; `x` is ignored.
#[allow(clippy::too_many_arguments)]
pub fn hc_reduction_pair(
    variant: ReductionVariant,
    side: Side,
    t: &ParameterSet,
    x: &ParameterSet,
    s: &ParameterSet,
    y: &ParameterSet,
    zs: &ParameterSet,
    q: &Rational,
) -> Result<(Rational, Rational)> {
    let k = Kernel::new(q)?;
    let n = zs.len();
    let zq2 = k.shift(zs, 2);
    let zqm2 = k.shift(zs, -2);
    match variant {
        ReductionVariant::Dec2 => {
            need(t.len() + n == x.len() && s.len() + n == y.len(), "DEC2 sizes")?;
            let lhs = ws(&k, side, &cat(t, &zq2), x, &cat(s, zs), y)?;
            let mut rhs = Rational::zero();
            for (y1, y2) in split2(y, n)? {
                let term = &(&(&k.izergin_side(side, &y1, zs)? * &ws(&k, side, &cat(t, &k.shift(&y1, 2)), x, s, &y2)?)
                    * &k.f_prod(&y2, &y1)?)
                    * &(&k.f_prod(&y1, x)? * &k.f_prod(&y1, s)?);
                rhs = &rhs + &term;
            }
            Ok((lhs, rhs))
        }
        ReductionVariant::Dec1 => {
            need(x.len() + n == t.len() && y.len() + n == s.len(), "DEC1 sizes")?;
            let lhs = ws(&k, side, t, &cat(x, zs), s, &cat(y, &zqm2))?;
            let mut rhs = Rational::zero();
            for (t1, t2) in split2(t, n)? {
                let term = &(&(&k.izergin_side(side, zs, &t1)? * &ws(&k, side, &t2, x, s, &cat(y, &k.shift(&t1, -2)))?)
                    * &k.f_prod(&t1, &t2)?)
                    * &(&k.f_prod(x, &t1)? * &k.f_prod(s, &t1)?);
                rhs = &rhs + &term;
            }
            Ok((lhs, rhs))
        }
        ReductionVariant::Dec2Pc => {
            need(t.len() + n == x.len() && y.len() == n, "DEC2_PC sizes (b <= a)")?;
            let lhs = ws(&k, side, &cat(t, &zq2), x, zs, y)?;
            let rhs = &(&k.f_prod(y, x)? * &k.izergin_side(side, y, zs)?)
                * &k.izergin_side(side, x, &cat(t, &k.shift(y, 2)))?;
            Ok((lhs, rhs))
        }
        ReductionVariant::Dec1Pc => {
            need(t.len() == n && y.len() + n == s.len(), "DEC1_PC sizes (a <= b)")?;
            let lhs = ws(&k, side, t, zs, s, &cat(y, &zqm2))?;
            let rhs = &(&k.f_prod(s, t)? * &k.izergin_side(side, zs, t)?)
                * &k.izergin_side(side, &cat(y, &k.shift(t, -2)), s)?;
            Ok((lhs, rhs))
        }
    }
}

/// Both sides of a three-determinant partition sum that reduces to `Z`.
///
/// Variants 1 and 2 use `t` (size `a`), `s`, `y` (size `b <= a`) and `xi`
/// (size `a - b`); `x` is ignored. Variants 3 and 4 use `t`, `x` (size
/// `a`), `y` (size `b >= a`) and `xi` (size `b - a`); `s` is ignored.
#[allow(clippy::too_many_arguments)]
pub fn hc_twin_sum_pair(
    variant: TwinVariant,
    side: Side,
    t: &ParameterSet,
    x: &ParameterSet,
    s: &ParameterSet,
    y: &ParameterSet,
    xi: &ParameterSet,
    q: &Rational,
) -> Result<(Rational, Rational)> {
    let k = Kernel::new(q)?;
    match variant {
        TwinVariant::One | TwinVariant::Two => {
            let (a, b) = (t.len(), y.len());
            need(s.len() == b && b <= a && xi.len() == a - b, "TWIN_1/2 sizes (a >= b)")?;
            let (yq2, sq2) = (k.shift(y, 2), k.shift(s, 2));
            let (side_y, side_s) = if variant == TwinVariant::One { (side.flip(), side) } else { (side, side.flip()) };
            let mut lhs = Rational::zero();
            for (t1, t2) in split2(t, b)? {
                let term = &(&k.izergin_side(side_y, &t1, &yq2)? * &k.izergin_side(side_s, &t1, &sq2)?)
                    * &(&k.izergin_side(side, xi, &t2)? * &k.f_prod(&t2, &t1)?);
                lhs = &lhs + &term;
            }
            let zval = if variant == TwinVariant::One {
                ws(&k, side, t, &cat(xi, y), s, &k.shift(y, -2))?
            } else {
                ws(&k, side, t, &cat(xi, s), y, &k.shift(s, -2))?
            };
            let denom = &k.f_prod(y, t)? * &k.f_prod(s, t)?;
            let rhs = &zval.checked_div(&denom)? * &k.neg_q_pow(side.sign() * b as i64);
            Ok((lhs, rhs))
        }
        TwinVariant::Three | TwinVariant::Four => {
            let (a, b) = (t.len(), y.len());
            need(x.len() == a && a <= b && xi.len() == b - a, "TWIN_3/4 sizes (a <= b)")?;
            let (tq, xq) = (k.shift(t, -2), k.shift(x, -2));
            let (side_t, side_x) = if variant == TwinVariant::Three { (side.flip(), side) } else { (side, side.flip()) };
            let mut lhs = Rational::zero();
            for (y1, y2) in split2(y, a)? {
                let term = &(&k.izergin_side(side_t, &tq, &y1)? * &k.izergin_side(side_x, &xq, &y1)?)
                    * &(&k.izergin_side(side, &y2, xi)? * &k.f_prod(&y1, &y2)?);
                lhs = &lhs + &term;
            }
            let zval = if variant == TwinVariant::Three {
                ws(&k, side, &k.shift(t, 2), x, &cat(xi, t), y)?
            } else {
                ws(&k, side, &k.shift(x, 2), t, &cat(xi, x), y)?
            };
            let denom = &k.f_prod(y, t)? * &k.f_prod(y, x)?;
            let rhs = &zval.checked_div(&denom)? * &k.neg_q_pow(side.sign() * a as i64);
            Ok((lhs, rhs))
        }
    }
}

/// Both sides of the two-set summation identity with
/// `xi = {x q^-2, z q^-2}`, `#t = #x = a`, `#s = b`, `#y = p <= b`,
/// `#w = b - p`.
#[allow(clippy::too_many_arguments)]
pub fn hc_prop51_pair(
    side: Side,
    t: &ParameterSet,
    x: &ParameterSet,
    s: &ParameterSet,
    y: &ParameterSet,
    w: &ParameterSet,
    zs: &ParameterSet,
    q: &Rational,
) -> Result<(Rational, Rational)> {
    let k = Kernel::new(q)?;
    let (b, p) = (s.len(), y.len());
    need(t.len() == x.len() && p <= b && w.len() + p == b, "summation identity sizes")?;
    let xi = cat(&k.shift(x, -2), &k.shift(zs, -2));
    let lhs = &k.f_prod(&xi, y)? * &ws(&k, side, t, x, s, &cat(y, w))?;
    let mut rhs = Rational::zero();
    for kk in 0..=p {
        if p - kk > xi.len() || kk > b {
            continue;
        }
        let sign = k.neg_q_pow(-side.sign() * kk as i64);
        for (s1, s2) in split2(s, kk)? {
            let s_part = &(&(&k.f_prod(&s1, &s2)? * &k.f_prod(y, &s1)?) * &k.f_prod(w, &s1)?) * &k.f_prod_inv(&s1, zs)?;
            for (xi1, xi2) in split2(&xi, p - kk)? {
                let det = k.izergin_side(side.flip(), &cat(&k.shift(&s1, -2), &xi1), y)?;
                let zval = ws(&k, side, t, x, &s2, &cat(w, &xi1))?;
                let term = &(&(&det * &zval) * &k.f_prod(&xi2, &xi1)?) * &s_part;
                rhs = &rhs + &(&term * &sign);
            }
        }
    }
    Ok((lhs, rhs))
}
