//! Identities for `Z` that involve poles, limits or asymptotics. All of
//! them are evaluated in the truncated Laurent ring.

use super::identities::named_enum;
use super::{cat, z, HcQuery};
use crate::error::{Error, Result};
use crate::exactnum::{try_sum, LaurentSeries, Rational, Scalar};
use crate::izergin::{coefficient_below, finite_limit, ray, simple_residue, Kernel, Side};
use crate::params::ParameterSet;
use crate::partitions::split2;

named_enum!(ResidueVariant {
    SToY => "REC_Z_TRIV1",
    TToX => "REC_Z_TRIV2",
    SToT => "REC_Z_NONTRIV",
    YToX => "REC_Z_NONTRIV_D",
});

named_enum!(LimitVariant { Red1 => "RED1", Red2 => "RED2", Nontriv2 => "NONTRIV2", Nontriv22 => "NONTRIV22" });

named_enum!(Slot { T => "t", X => "x", S => "s", Y => "y" });

type Series = LaurentSeries;

fn without(v: &[Series], i: usize) -> Vec<Series> {
    v.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, e)| e.clone()).collect()
}

fn nonempty(len: usize, name: &str) -> Result<usize> {
    len.checked_sub(1).ok_or_else(|| Error::Cardinality(format!("{name} must be nonempty")))
}

/// The `e^-1` coefficients of both sides of a simple-pole residue formula.
///
/// The colliding variable (the last `s`, `t` or `y`) is replaced by its
/// partner plus `e`; its value in the query is ignored.
pub fn hc_residue_pair(variant: ResidueVariant, query: &HcQuery, window: usize) -> Result<(Rational, Rational)> {
    let k = Kernel::laurent(&query.q, window)?;
    let (side, rep) = (query.side, query.rep);
    let (mut t, x, mut s, mut y) = (k.lift(&query.t), k.lift(&query.x), k.lift(&query.s), k.lift(&query.y));
    let near = |base: &Series| base.add(&LaurentSeries::monomial(Rational::one(), 1, window));
    let rhs = match variant {
        ResidueVariant::SToY => {
            let j = nonempty(s.len(), "s")?;
            s[j] = near(&y[j]);
            let (sb, yb) = (without(&s, j), without(&y, j));
            let pref = k
                .f(&y[j], &s[j])?
                .mul(&k.f_prod(&y[j..=j], &sb)?)
                .mul(&k.f_prod(&yb, &y[j..=j])?)
                .mul(&k.f_prod(&y[j..=j], &x)?);
            pref.mul(&z(&k, side, rep, &t, &x, &sb, &yb)?)
        }
        ResidueVariant::TToX => {
            let i = nonempty(t.len(), "t")?;
            t[i] = near(&x[i]);
            let (tb, xb) = (without(&t, i), without(&x, i));
            let pref = k
                .f(&x[i], &t[i])?
                .mul(&k.f_prod(&x[i..=i], &tb)?)
                .mul(&k.f_prod(&xb, &x[i..=i])?)
                .mul(&k.f_prod(&s, &x[i..=i])?);
            pref.mul(&z(&k, side, rep, &tb, &xb, &s, &y)?)
        }
        ResidueVariant::SToT => {
            let (i, j) = (nonempty(t.len(), "t")?, nonempty(s.len(), "s")?);
            s[j] = near(&t[i]);
            let (tb, sb) = (without(&t, i), without(&s, j));
            let pref = k.f(&s[j], &t[i])?.mul(&k.f_prod(&sb, &s[j..=j])?).mul(&k.f_prod(&t[i..=i], &tb)?);
            let sum = try_sum(
                k.one().zero_like(),
                (0..x.len()).map(|p| {
                    let xb = without(&x, p);
                    Ok(k.izergin_side(side, &x[p..=p], &t[i..=i])?
                        .mul(&k.f_prod(&xb, &x[p..=p])?)
                        .mul(&z(&k, side, rep, &tb, &xb, &cat(&sb, &x[p..=p]), &y)?))
                }),
            )?;
            pref.mul(&sum)
        }
        ResidueVariant::YToX => {
            let (i, j) = (nonempty(x.len(), "x")?, nonempty(y.len(), "y")?);
            y[j] = near(&x[i]);
            let (xb, yb) = (without(&x, i), without(&y, j));
            let pref = k.f(&y[j], &x[i])?.mul(&k.f_prod(&yb, &y[j..=j])?).mul(&k.f_prod(&x[i..=i], &xb)?);
            let sum = try_sum(
                k.one().zero_like(),
                (0..s.len()).map(|p| {
                    let sp = without(&s, p);
                    Ok(k.izergin_side(side, &x[i..=i], &s[p..=p])?
                        .mul(&k.f_prod(&s[p..=p], &sp)?)
                        .mul(&z(&k, side, rep, &t, &cat(&xb, &s[p..=p]), &sp, &yb)?))
                }),
            )?;
            pref.mul(&sum)
        }
    };
    let lhs = z(&k, side, rep, &t, &x, &s, &y)?;
    Ok((simple_residue(&lhs)?, simple_residue(&rhs)?))
}

/// Both sides of a multiple-pole limit identity with `z' -> z`.
///
/// The primed points approach along the single ray `z'_j = z_j + (j+1) e`,
/// so the whole limit is one univariate expansion. The query supplies the
/// remaining sets: for `Red1`/`Red2` they are the arguments of the reduced
/// `Z`; for `Nontriv2` `#x = #t + n`, `#y = #s + n`; for `Nontriv22`
/// `#t = #x + n`, `#s = #y + n`.
pub fn hc_multiple_limit_pair(
    variant: LimitVariant,
    query: &HcQuery,
    zs: &ParameterSet,
    window: usize,
) -> Result<(Rational, Rational)> {
    let k = Kernel::laurent(&query.q, window)?;
    let plain = Kernel::new(&query.q)?;
    let (side, rep) = (query.side, query.rep);
    let (t, x, s, y) = (k.lift(&query.t), k.lift(&query.x), k.lift(&query.s), k.lift(&query.y));
    let zl = k.lift(zs);
    let zp = ray(zs, window);
    let n = zs.len();
    let (tr, xr, sr, yr) = (&query.t[..], &query.x[..], &query.s[..], &query.y[..]);
    let zr = &zs[..];
    match variant {
        LimitVariant::Red2 => {
            let lhs = k.f_prod_inv(&zp, &zl)?.mul(&z(&k, side, rep, &t, &x, &cat(&s, &zl), &cat(&y, &zp))?);
            let rhs = &(&(&plain.f_prod(zr, xr)? * &plain.f_prod(zr, sr)?) * &plain.f_prod(yr, zr)?)
                * &z(&plain, side, rep, tr, xr, sr, yr)?;
            Ok((finite_limit(&lhs)?, rhs))
        }
        LimitVariant::Red1 => {
            let lhs = k.f_prod_inv(&zp, &zl)?.mul(&z(&k, side, rep, &cat(&t, &zl), &cat(&x, &zp), &s, &y)?);
            let rhs = &(&(&plain.f_prod(zr, tr)? * &plain.f_prod(xr, zr)?) * &plain.f_prod(sr, zr)?)
                * &z(&plain, side, rep, tr, xr, sr, yr)?;
            Ok((finite_limit(&lhs)?, rhs))
        }
        LimitVariant::Nontriv2 => {
            if t.len() + n != x.len() || s.len() + n != y.len() {
                return Err(Error::Cardinality("NONTRIV2 needs #x = #t + #z and #y = #s + #z".into()));
            }
            let lhs = k.f_prod_inv(&zl, &zp)?.mul(&z(&k, side, rep, &cat(&t, &zp), &x, &cat(&s, &zl), &y)?);
            let mut sum = Rational::zero();
            for (x1, x2) in split2(xr, n)? {
                let term = &(&plain.izergin_side(side, &x1, zr)? * &plain.f_prod(&x2, &x1)?)
                    * &z(&plain, side, rep, tr, &x2, &cat(sr, &x1), yr)?;
                sum = &sum + &term;
            }
            let rhs = &(&plain.f_prod(sr, zr)? * &plain.f_prod(zr, tr)?) * &sum;
            Ok((finite_limit(&lhs)?, rhs))
        }
        LimitVariant::Nontriv22 => {
            if x.len() + n != t.len() || y.len() + n != s.len() {
                return Err(Error::Cardinality("NONTRIV22 needs #t = #x + #z and #s = #y + #z".into()));
            }
            let lhs = k.f_prod_inv(&zl, &zp)?.mul(&z(&k, side, rep, &t, &cat(&x, &zp), &s, &cat(&y, &zl))?);
            let mut sum = Rational::zero();
            for (s1, s2) in split2(sr, n)? {
                let term = &(&plain.izergin_side(side, zr, &s1)? * &plain.f_prod(&s1, &s2)?)
                    * &z(&plain, side, rep, tr, &cat(xr, &s1), &s2, yr)?;
                sum = &sum + &term;
            }
            let rhs = &(&plain.f_prod(yr, zr)? * &plain.f_prod(zr, xr)?) * &sum;
            Ok((finite_limit(&lhs)?, rhs))
        }
    }
}

/// Required decay order of `Z^{side}` as one argument in `slot` goes to
/// infinity: `1` where `Z` vanishes there, `0` where it stays bounded.
pub fn infinity_order(side: Side, slot: Slot) -> i64 {
    match (side, slot) {
        (Side::L, Slot::T | Slot::S) | (Side::R, Slot::X | Slot::Y) => 1,
        _ => 0,
    }
}

/// Substitutes `1/d` for element `index` of `slot` and returns the lowest
/// coefficient of the `d`-expansion below the required order (zero when the
/// bound holds), together with that order.
pub fn hc_infinity_check(query: &HcQuery, slot: Slot, index: usize, window: usize) -> Result<(Rational, i64)> {
    let k = Kernel::laurent(&query.q, window)?;
    let mut sets = [k.lift(&query.t), k.lift(&query.x), k.lift(&query.s), k.lift(&query.y)];
    let target = &mut sets[slot as usize];
    if index >= target.len() {
        return Err(Error::IndexOutOfRange { index, len: target.len() });
    }
    target[index] = LaurentSeries::monomial(Rational::one(), -1, window);
    let [t, x, s, y] = &sets;
    let value = z(&k, query.side, query.rep, t, x, s, y)?;
    let order = infinity_order(query.side, slot);
    Ok((coefficient_below(&value, order)?, order))
}

/// `Z^(l)` at `y[index] = 0`, or `Z^(r)` at `t[index] = 0`. Both vanish.
///
/// Zero coincides with its own q-shifts, so the value is taken as the limit
/// along `e -> 0` of the substitution `e` for the element.
pub fn hc_zero_value(query: &HcQuery, index: usize, window: usize) -> Result<Rational> {
    let k = Kernel::laurent(&query.q, window)?;
    let mut sets = [k.lift(&query.t), k.lift(&query.x), k.lift(&query.s), k.lift(&query.y)];
    let target = match query.side {
        Side::L => &mut sets[3],
        Side::R => &mut sets[0],
    };
    if index >= target.len() {
        return Err(Error::IndexOutOfRange { index, len: target.len() });
    }
    target[index] = LaurentSeries::monomial(Rational::one(), 1, window);
    let [t, x, s, y] = &sets;
    finite_limit(&z(&k, query.side, query.rep, t, x, s, y)?)
}
