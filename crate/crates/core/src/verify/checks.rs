use super::{Case, Comparison, Descriptor, Suite};
use crate::error::{Error, Result};
use crate::exactnum::{LaurentSeries, Rational};
use crate::highest::{
    hc, hc_closed_form_11, hc_difference_11, hc_infinity_check, hc_multiple_limit_pair, hc_prop51_pair,
    hc_reduction_pair, hc_residue_pair, hc_symmetry_check, hc_twin_sum_pair, hc_zero_value, HcQuery, LimitVariant,
    ReductionVariant, Rep, ResidueVariant, Slot, SymmetryVariant, TwinVariant,
};
use crate::izergin::{coefficient_below, simple_residue, Kernel, Side};
use crate::params::ParameterSet;
use crate::scalar::{extract_coefficient, scalar_product_symbolic, w_part, Monomial, Split};

type Checks = Result<Vec<Comparison>>;

const SIDES: [Side; 2] = [Side::L, Side::R];

/// Representations other than the one `w_part` and the reductions use.
const ALT_REPS: [Rep; 5] = [Rep::WsTwin, Rep::Ty, Rep::TyTwin, Rep::Tx, Rep::Sy];

/// Window for expansions at infinity, where cancellations eat precision.
const INFINITY_WINDOW: usize = 8;

fn cmp(label: impl Into<String>, lhs: Rational, rhs: Rational) -> Comparison {
    Comparison::new(label, lhs, rhs)
}

fn query(side: Side, rep: Rep, sets: &[ParameterSet], q: &Rational) -> HcQuery {
    HcQuery::new(side, sets[0].clone(), sets[1].clone(), sets[2].clone(), sets[3].clone(), q.clone()).with_rep(rep)
}

fn bad_shape(case: &Case<'_>) -> Error {
    Error::Cardinality(format!("unsupported shape {:?}", case.shape))
}

fn dims<const N: usize>(case: &Case<'_>) -> Result<[usize; N]> {
    case.shape.try_into().map_err(|_| bad_shape(case))
}

// Shape generators. The first axis is bounded by `a_max`, the second by `b_max`.

fn line(a_max: usize, _: usize) -> Vec<Vec<usize>> {
    (0..=a_max).map(|k| vec![k]).collect()
}

fn line_from1(a_max: usize, _: usize) -> Vec<Vec<usize>> {
    (1..=a_max).map(|k| vec![k]).collect()
}

fn line_grow(a_max: usize, _: usize) -> Vec<Vec<usize>> {
    (0..a_max).map(|k| vec![k]).collect()
}

fn init_shapes(a_max: usize, _: usize) -> Vec<Vec<usize>> {
    (0..=a_max.max(1)).map(|k| vec![k]).collect()
}

fn grid_where(a_max: usize, b_max: usize, keep: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..=a_max {
        for b in 0..=b_max {
            if keep(a, b) {
                out.push(vec![a, b]);
            }
        }
    }
    out
}

fn grid(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    grid_where(a_max, b_max, |_, _| true)
}

fn grid_nonempty(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    grid_where(a_max, b_max, |a, b| a + b > 0)
}

fn grid_permutable(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    grid_where(a_max, b_max, |a, b| a >= 2 || b >= 2)
}

fn grid_b1(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    grid_where(a_max, b_max, |_, b| b >= 1)
}

fn grid_a1(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    grid_where(a_max, b_max, |a, _| a >= 1)
}

fn grid_ab1(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    grid_where(a_max, b_max, |a, b| a >= 1 && b >= 1)
}

fn grid_b_le_a(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    grid_where(a_max, b_max, |a, b| b <= a)
}

fn grid_a_le_b(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    grid_where(a_max, b_max, |a, b| a <= b)
}

fn grid_pc_b(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    grid_where(a_max, b_max, |a, b| 1 <= b && b <= a)
}

fn grid_pc_a(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    grid_where(a_max, b_max, |a, b| 1 <= a && a <= b)
}

fn one_one(_: usize, _: usize) -> Vec<Vec<usize>> {
    vec![vec![1, 1]]
}

fn boundary(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    grid_where(a_max, b_max, |a, b| a == 0 || b == 0)
}

/// `[a, b, n]` with `1 <= n <= min(a, b, 2)`: full sizes `a`, `b`, `n` merged points.
fn merged(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 1..=a_max {
        for b in 1..=b_max {
            for n in 1..=a.min(b).min(2) {
                out.push(vec![a, b, n]);
            }
        }
    }
    out
}

/// `[a, b, n]` for reduced sizes `a`, `b` with `a + n <= a_max`.
fn grow_a(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for n in 1..=2 {
        for a in 0..=a_max.saturating_sub(n) {
            if a + n > a_max {
                continue;
            }
            for b in 0..=b_max {
                out.push(vec![a, b, n]);
            }
        }
    }
    out
}

/// `[a, b, n]` for reduced sizes `a`, `b` with `b + n <= b_max`.
fn grow_b(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for n in 1..=2 {
        for b in 0..=b_max.saturating_sub(n) {
            if b + n > b_max {
                continue;
            }
            for a in 0..=a_max {
                out.push(vec![a, b, n]);
            }
        }
    }
    out
}

/// `[a, b, p, n]` with `p <= b`, `n <= 2`.
fn prop_shapes(a_max: usize, b_max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..=a_max {
        for b in 0..=b_max {
            for p in 0..=b {
                for n in 0..=2 {
                    out.push(vec![a, b, p, n]);
                }
            }
        }
    }
    out
}

// Izergin determinant properties.

fn k_init(case: &mut Case<'_>) -> Checks {
    let [k] = dims(case)?;
    let (sets, q) = case.sample(&[("x", k), ("y", k)])?;
    let (x, y) = (&sets[0], &sets[1]);
    let kern = Kernel::new(&q)?;
    let kl = kern.izergin_left(x, y)?;
    let kr = kern.izergin_right(x, y)?;
    let px = x.iter().fold(Rational::one(), |acc, v| &acc * v);
    let py = y.iter().fold(Rational::one(), |acc, v| &acc * v);
    let mut out = vec![cmp("x^-1 K^(l) = y^-1 K^(r)", kl.checked_div(&px)?, kr.checked_div(&py)?)];
    match k {
        0 => {
            out.push(cmp("K_0 = 1", kern.izergin(x, y)?, Rational::one()));
            out.push(cmp("K^(l)_0 = 1", kl, Rational::one()));
        }
        1 => {
            let g = kern.g(&x[0], &y[0])?;
            out.push(cmp("K_1 = g", kern.izergin(x, y)?, g.clone()));
            out.push(cmp("K^(l)_1 = x g", kl, &x[0] * &g));
            out.push(cmp("K^(r)_1 = y g", kr, &y[0] * &g));
        }
        _ => {}
    }
    Ok(out)
}

fn k_scal(case: &mut Case<'_>) -> Checks {
    let [k] = dims(case)?;
    let (sets, q) = case.sample(&[("x", k), ("y", k), ("alpha", 1)])?;
    let (x, y, alpha) = (&sets[0], &sets[1], &sets[2][0]);
    let kern = Kernel::new(&q)?;
    SIDES
        .iter()
        .map(|&side| {
            let scaled = kern.izergin_side(side, &x.scale(alpha), &y.scale(alpha))?;
            Ok(cmp(format!("{side}"), scaled, kern.izergin_side(side, x, y)?))
        })
        .collect()
}

fn k_red(case: &mut Case<'_>) -> Checks {
    let [n] = dims(case)?;
    let (sets, q) = case.sample(&[("x", n), ("y", n), ("z", 1)])?;
    let (x, y, z) = (&sets[0], &sets[1], &sets[2]);
    let kern = Kernel::new(&q)?;
    let mut out = Vec::new();
    for side in SIDES {
        let factor = -q.pow(-side.sign() as i32)?;
        let reduced = &factor * &kern.izergin_side(side, x, y)?;
        let lower = kern.izergin_side(side, &x.union(&z.qshift(-2, &q)?), &y.union(z))?;
        let upper = kern.izergin_side(side, &x.union(z), &y.union(&z.qshift(2, &q)?))?;
        out.push(cmp(format!("{side} q^-2 z"), lower, reduced.clone()));
        out.push(cmp(format!("{side} q^2 z"), upper, reduced));
    }
    Ok(out)
}

fn k_invers(case: &mut Case<'_>) -> Checks {
    let [n] = dims(case)?;
    let (sets, q) = case.sample(&[("x", n), ("y", n)])?;
    let (x, y) = (&sets[0], &sets[1]);
    let kern = Kernel::new(&q)?;
    SIDES
        .iter()
        .map(|&side| {
            let lhs = kern.izergin_side(side, &x.qshift(-2, &q)?, y)?;
            let sign = kern.neg_q_pow(-side.sign() * n as i64);
            let rhs = &(&sign * &kern.izergin_side(side.flip(), y, x)?) * &kern.f_prod(y, x)?.recip()?;
            Ok(cmp(format!("{side}"), lhs, rhs))
        })
        .collect()
}

fn k_invers1(case: &mut Case<'_>) -> Checks {
    let [n] = dims(case)?;
    let (sets, q) = case.sample(&[("x", n), ("y", n)])?;
    let (x, y) = (&sets[0], &sets[1]);
    let kern = Kernel::new(&q)?;
    let inv = kern.inverted();
    SIDES
        .iter()
        .map(|&side| Ok(cmp(format!("{side}"), inv.izergin_side(side, x, y)?, kern.izergin_side(side.flip(), y, x)?)))
        .collect()
}

fn k_res(case: &mut Case<'_>) -> Checks {
    let [n] = dims(case)?;
    let (sets, q) = case.sample(&[("x", n), ("y", n), ("z", 1)])?;
    let w = case.cfg.laurent_window;
    let kern = Kernel::laurent(&q, w)?;
    let (x, y, z) = (kern.lift(&sets[0]), kern.lift(&sets[1]), kern.lift(&sets[2]));
    let zp = [z[0].add(&LaurentSeries::monomial(Rational::one(), 1, w))];
    let mut out = Vec::new();
    for side in SIDES {
        let mut xz = x.clone();
        xz.extend(z.iter().cloned());
        let mut yz = y.clone();
        yz.extend(zp.iter().cloned());
        let lhs = kern.izergin_side(side, &xz, &yz)?;
        let rhs = kern
            .f(&z[0], &zp[0])?
            .mul(&kern.f_prod(&z, &y)?)
            .mul(&kern.f_prod(&x, &z)?)
            .mul(&kern.izergin_side(side, &x, &y)?);
        out.push(cmp(format!("{side} e^-1"), simple_residue(&lhs)?, simple_residue(&rhs)?));
    }
    Ok(out)
}

fn k_inf(case: &mut Case<'_>) -> Checks {
    let [k] = dims(case)?;
    let (sets, q) = case.sample(&[("x", k), ("y", k)])?;
    let i = (case.seed % k as u64) as usize;
    let kern = Kernel::laurent(&q, case.cfg.laurent_window.max(INFINITY_WINDOW))?;
    let mut out = Vec::new();
    for side in SIDES {
        for (slot, name) in [(0, "x"), (1, "y")] {
            let mut args = [kern.lift(&sets[0]), kern.lift(&sets[1])];
            args[slot][i] = LaurentSeries::monomial(Rational::one(), -1, kern.one().window());
            let value = kern.izergin_side(side, &args[0], &args[1])?;
            // K^(l) decays in y, K^(r) in x; the other argument only keeps it bounded.
            let order = match (side, slot) {
                (Side::L, 1) | (Side::R, 0) => 1,
                _ => 0,
            };
            out.push(cmp(format!("{side} {name}_{i} -> inf, order {order}"), coefficient_below(&value, order)?, Rational::zero()));
        }
    }
    Ok(out)
}

fn lemma_sum(case: &mut Case<'_>) -> Checks {
    let [m1, m2] = dims(case)?;
    let (sets, q) = case.sample(&[("gamma", m1 + m2), ("alpha", m1), ("beta", m2)])?;
    let (g, a, b) = (&sets[0], &sets[1], &sets[2]);
    let kern = Kernel::new(&q)?;
    let mut out = Vec::new();
    for side in SIDES {
        let sum = kern.lemma_partition_sum(g, a, b, side)?;
        out.push(cmp(format!("{side} sum = first closed form"), sum.clone(), kern.lemma_closed_form(g, a, b, side)?));
        out.push(cmp(format!("{side} sum = second closed form"), sum, kern.lemma_closed_form_alt(g, a, b, side)?));
    }
    Ok(out)
}

fn mult_pole(case: &mut Case<'_>) -> Checks {
    let [n, m] = dims(case)?;
    let (sets, q) = case.sample(&[("x", n), ("y", n), ("z", m)])?;
    let (x, y, z) = (&sets[0], &sets[1], &sets[2]);
    let lk = Kernel::laurent(&q, case.cfg.laurent_window + 2 * m)?;
    let kern = Kernel::new(&q)?;
    SIDES
        .iter()
        .map(|&side| {
            let lhs = lk.mult_pole_limit(x, y, z, side)?;
            let rhs = &(&kern.f_prod(x, z)? * &kern.f_prod(z, y)?) * &kern.izergin_side(side, x, y)?;
            Ok(cmp(format!("{side}"), lhs, rhs))
        })
        .collect()
}

// Highest coefficients.

fn hc_sets(case: &mut Case<'_>) -> Result<(Vec<ParameterSet>, Rational)> {
    let [a, b] = dims(case)?;
    case.sample(&[("t", a), ("x", a), ("s", b), ("y", b)])
}

fn hc_rep_agree(case: &mut Case<'_>) -> Checks {
    let (sets, q) = hc_sets(case)?;
    let mut out = Vec::new();
    for side in SIDES {
        let base = hc(&query(side, Rep::Ws, &sets, &q))?;
        for rep in ALT_REPS {
            out.push(cmp(format!("{side} ws = {rep}"), base.clone(), hc(&query(side, rep, &sets, &q))?));
        }
        if case.shape == [1, 1] {
            let closed = hc_closed_form_11(side, &sets[0][0], &sets[1][0], &sets[2][0], &sets[3][0], &q)?;
            out.push(cmp(format!("{side} ws = closed form"), base, closed));
        }
    }
    Ok(out)
}

fn diff_11(case: &mut Case<'_>) -> Checks {
    let (sets, q) = hc_sets(case)?;
    let (lhs, rhs) = hc_difference_11(&sets[0][0], &sets[1][0], &sets[2][0], &sets[3][0], &q)?;
    Ok(vec![cmp("difference", lhs, rhs)])
}

fn rotate(set: &ParameterSet) -> ParameterSet {
    let mut v = set.to_vec();
    if !v.is_empty() {
        v.rotate_left(1);
    }
    ParameterSet::new(v)
}

fn hc_sym_perm(case: &mut Case<'_>) -> Checks {
    let (sets, q) = hc_sets(case)?;
    let rep = case.pick_rep(&Rep::ALL);
    let mut out = Vec::new();
    for side in SIDES {
        let base = hc(&query(side, rep, &sets, &q))?;
        for (i, name) in ["t", "x", "s", "y"].iter().enumerate() {
            if sets[i].len() < 2 {
                continue;
            }
            let mut moved = sets.clone();
            moved[i] = rotate(&sets[i]);
            out.push(cmp(format!("{side} rotate {name}"), hc(&query(side, rep, &moved, &q))?, base.clone()));
        }
    }
    Ok(out)
}

fn z_triv(case: &mut Case<'_>) -> Checks {
    let [a, b] = dims(case)?;
    let (sets, q) = hc_sets(case)?;
    let kern = Kernel::new(&q)?;
    let mut out = Vec::new();
    for side in SIDES {
        let expected = match (a, b) {
            (_, 0) => kern.izergin_side(side, &sets[1], &sets[0])?,
            (0, _) => kern.izergin_side(side, &sets[3], &sets[2])?,
            _ => return Err(bad_shape(case)),
        };
        for rep in Rep::ALL {
            out.push(cmp(format!("{side} {rep}"), hc(&query(side, rep, &sets, &q))?, expected.clone()));
        }
    }
    Ok(out)
}

fn symmetry(case: &mut Case<'_>, variant: SymmetryVariant) -> Checks {
    let [a, b] = dims(case)?;
    let (sets, q) = case.sample(&[("t", a), ("x", a), ("s", b), ("y", b), ("alpha", 1)])?;
    let rep = case.pick_rep(&Rep::ALL);
    SIDES
        .iter()
        .map(|&side| {
            let (lhs, rhs) = hc_symmetry_check(variant, &query(side, rep, &sets, &q), &sets[4][0])?;
            Ok(cmp(format!("{side}"), lhs, rhs))
        })
        .collect()
}

fn z_scal(case: &mut Case<'_>) -> Checks {
    symmetry(case, SymmetryVariant::Scal)
}

fn z_invers(case: &mut Case<'_>) -> Checks {
    symmetry(case, SymmetryVariant::Invers)
}

fn z_invers1(case: &mut Case<'_>) -> Checks {
    symmetry(case, SymmetryVariant::Invers1)
}

fn z_inf(case: &mut Case<'_>) -> Checks {
    let (sets, q) = hc_sets(case)?;
    let rep = case.pick_rep(&Rep::ALL);
    let window = case.cfg.laurent_window.max(INFINITY_WINDOW);
    let mut out = Vec::new();
    for side in SIDES {
        for slot in Slot::ALL {
            let len = sets[*slot as usize].len();
            if len == 0 {
                continue;
            }
            let i = (case.seed % len as u64) as usize;
            let (coeff, order) = hc_infinity_check(&query(side, rep, &sets, &q), *slot, i, window)?;
            out.push(cmp(format!("{side} {slot}_{i} -> inf, order {order}"), coeff, Rational::zero()));
        }
    }
    Ok(out)
}

fn z_zero_vanish(case: &mut Case<'_>) -> Checks {
    let [a, b] = dims(case)?;
    let (sets, q) = hc_sets(case)?;
    let rep = case.pick_rep(&Rep::ALL);
    let mut out = Vec::new();
    if b > 0 {
        let i = (case.seed % b as u64) as usize;
        out.push(cmp(format!("l y_{i} = 0"), hc_zero_value(&query(Side::L, rep, &sets, &q), i, case.cfg.laurent_window)?, Rational::zero()));
    }
    if a > 0 {
        let i = (case.seed % a as u64) as usize;
        out.push(cmp(format!("r t_{i} = 0"), hc_zero_value(&query(Side::R, rep, &sets, &q), i, case.cfg.laurent_window)?, Rational::zero()));
    }
    Ok(out)
}

// Residues and limits.

fn residue(case: &mut Case<'_>, variant: ResidueVariant) -> Checks {
    let (sets, q) = hc_sets(case)?;
    let rep = case.pick_rep(&Rep::ALL);
    let window = case.cfg.laurent_window;
    SIDES
        .iter()
        .map(|&side| {
            let (lhs, rhs) = hc_residue_pair(variant, &query(side, rep, &sets, &q), window)?;
            Ok(cmp(format!("{side} e^-1"), lhs, rhs))
        })
        .collect()
}

fn rec_z_triv1(case: &mut Case<'_>) -> Checks {
    residue(case, ResidueVariant::SToY)
}

fn rec_z_triv2(case: &mut Case<'_>) -> Checks {
    residue(case, ResidueVariant::TToX)
}

fn rec_z_nontriv(case: &mut Case<'_>) -> Checks {
    residue(case, ResidueVariant::SToT)
}

fn rec_z_nontriv_d(case: &mut Case<'_>) -> Checks {
    residue(case, ResidueVariant::YToX)
}

fn limit(case: &mut Case<'_>, variant: LimitVariant) -> Checks {
    let [a, b, n] = dims(case)?;
    let layout = match variant {
        LimitVariant::Red1 | LimitVariant::Red2 => [("t", a), ("x", a), ("s", b), ("y", b), ("z", n)],
        LimitVariant::Nontriv2 => [("t", a - n), ("x", a), ("s", b - n), ("y", b), ("z", n)],
        LimitVariant::Nontriv22 => [("t", a), ("x", a - n), ("s", b), ("y", b - n), ("z", n)],
    };
    let (sets, q) = case.sample(&layout)?;
    let rep = case.pick_rep(&Rep::ALL);
    let window = case.cfg.laurent_window + 2 * n;
    SIDES
        .iter()
        .map(|&side| {
            let (lhs, rhs) = hc_multiple_limit_pair(variant, &query(side, rep, &sets, &q), &sets[4], window)?;
            Ok(cmp(format!("{side} limit"), lhs, rhs))
        })
        .collect()
}

fn red1(case: &mut Case<'_>) -> Checks {
    limit(case, LimitVariant::Red1)
}

fn red2(case: &mut Case<'_>) -> Checks {
    limit(case, LimitVariant::Red2)
}

fn nontriv2(case: &mut Case<'_>) -> Checks {
    limit(case, LimitVariant::Nontriv2)
}

fn nontriv22(case: &mut Case<'_>) -> Checks {
    limit(case, LimitVariant::Nontriv22)
}

// Reductions at q-shifted coincidences.

fn reduction(case: &mut Case<'_>, variant: ReductionVariant) -> Checks {
    let layout = match variant {
        ReductionVariant::Dec2 => {
            let [a, b, n] = dims(case)?;
            [("t", a - n), ("x", a), ("s", b - n), ("y", b), ("z", n)]
        }
        ReductionVariant::Dec1 => {
            let [a, b, n] = dims(case)?;
            [("t", a), ("x", a - n), ("s", b), ("y", b - n), ("z", n)]
        }
        ReductionVariant::Dec2Pc => {
            let [a, b] = dims(case)?;
            [("t", a - b), ("x", a), ("s", 0), ("y", b), ("z", b)]
        }
        ReductionVariant::Dec1Pc => {
            let [a, b] = dims(case)?;
            [("t", a), ("x", 0), ("s", b), ("y", b - a), ("z", a)]
        }
    };
    let (sets, q) = case.sample(&layout)?;
    SIDES
        .iter()
        .map(|&side| {
            let (lhs, rhs) = hc_reduction_pair(variant, side, &sets[0], &sets[1], &sets[2], &sets[3], &sets[4], &q)?;
            Ok(cmp(format!("{side}"), lhs, rhs))
        })
        .collect()
}

fn dec1(case: &mut Case<'_>) -> Checks {
    reduction(case, ReductionVariant::Dec1)
}

fn dec2(case: &mut Case<'_>) -> Checks {
    reduction(case, ReductionVariant::Dec2)
}

fn dec1_pc(case: &mut Case<'_>) -> Checks {
    reduction(case, ReductionVariant::Dec1Pc)
}

fn dec2_pc(case: &mut Case<'_>) -> Checks {
    reduction(case, ReductionVariant::Dec2Pc)
}

// Twin sums.

fn twin(case: &mut Case<'_>, variant: TwinVariant) -> Checks {
    let [a, b] = dims(case)?;
    let layout = match variant {
        TwinVariant::One | TwinVariant::Two => [("t", a), ("x", 0), ("s", b), ("y", b), ("xi", a - b)],
        TwinVariant::Three | TwinVariant::Four => [("t", a), ("x", a), ("s", 0), ("y", b), ("xi", b - a)],
    };
    let (sets, q) = case.sample(&layout)?;
    SIDES
        .iter()
        .map(|&side| {
            let (lhs, rhs) = hc_twin_sum_pair(variant, side, &sets[0], &sets[1], &sets[2], &sets[3], &sets[4], &q)?;
            Ok(cmp(format!("{side}"), lhs, rhs))
        })
        .collect()
}

fn twin_1(case: &mut Case<'_>) -> Checks {
    twin(case, TwinVariant::One)
}

fn twin_2(case: &mut Case<'_>) -> Checks {
    twin(case, TwinVariant::Two)
}

fn twin_3(case: &mut Case<'_>) -> Checks {
    twin(case, TwinVariant::Three)
}

fn twin_4(case: &mut Case<'_>) -> Checks {
    twin(case, TwinVariant::Four)
}

fn prop_5_1(case: &mut Case<'_>) -> Checks {
    let [a, b, p, n] = dims(case)?;
    let (sets, q) = case.sample(&[("t", a), ("x", a), ("s", b), ("y", p), ("w", b - p), ("z", n)])?;
    SIDES
        .iter()
        .map(|&side| {
            let (lhs, rhs) = hc_prop51_pair(side, &sets[0], &sets[1], &sets[2], &sets[3], &sets[4], &sets[5], &q)?;
            Ok(cmp(format!("{side}"), lhs, rhs))
        })
        .collect()
}

// Scalar product assembly.

fn scalar_sets(case: &mut Case<'_>) -> Result<(Vec<ParameterSet>, Rational)> {
    let [a, b] = dims(case)?;
    case.sample(&[("uC", a), ("vC", b), ("uB", a), ("vB", b)])
}

fn z_right(rep: Rep, s: &[ParameterSet], q: &Rational) -> Result<Rational> {
    hc(&HcQuery::new(Side::R, s[2].clone(), s[0].clone(), s[3].clone(), s[1].clone(), q.clone()).with_rep(rep))
}

fn z_left(rep: Rep, s: &[ParameterSet], q: &Rational) -> Result<Rational> {
    hc(&HcQuery::new(Side::L, s[0].clone(), s[2].clone(), s[1].clone(), s[3].clone(), q.clone()).with_rep(rep))
}

fn norm(s: &[ParameterSet], q: &Rational) -> Result<Rational> {
    let k = Kernel::new(q)?;
    Ok(&k.f_prod(&s[1], &s[0])? * &k.f_prod(&s[3], &s[2])?)
}

fn w_corner_l(case: &mut Case<'_>) -> Checks {
    let (s, q) = scalar_sets(case)?;
    let rep = case.pick_rep(&ALT_REPS);
    let e = Vec::new;
    let split = Split {
        uc: (e(), s[0].to_vec()),
        ub: (e(), s[2].to_vec()),
        vc: (s[1].to_vec(), e()),
        vb: (s[3].to_vec(), e()),
    };
    Ok(vec![cmp("k = 0, n = b", w_part(&split, &q)?, z_left(rep, &s, &q)?)])
}

fn w_corner_r(case: &mut Case<'_>) -> Checks {
    let (s, q) = scalar_sets(case)?;
    let rep = case.pick_rep(&ALT_REPS);
    let e = Vec::new;
    let split = Split {
        uc: (s[0].to_vec(), e()),
        ub: (s[2].to_vec(), e()),
        vc: (e(), s[1].to_vec()),
        vb: (e(), s[3].to_vec()),
    };
    Ok(vec![cmp("k = a, n = 0", w_part(&split, &q)?, z_right(rep, &s, &q)?)])
}

fn scal_res(case: &mut Case<'_>, right: bool) -> Checks {
    let [a, b] = dims(case)?;
    let (s, q) = scalar_sets(case)?;
    let rep = case.pick_rep(&ALT_REPS);
    let poly = scalar_product_symbolic(&s[0], &s[1], &s[2], &s[3], &q)?;
    let (monomial, z) = if right {
        (Monomial::right_corner(a, b), z_right(rep, &s, &q)?)
    } else {
        (Monomial::left_corner(a, b), z_left(rep, &s, &q)?)
    };
    Ok(vec![cmp(format!("coefficient of {monomial}"), extract_coefficient(&poly, &monomial), z.checked_div(&norm(&s, &q)?)?)])
}

fn scal_res1(case: &mut Case<'_>) -> Checks {
    scal_res(case, true)
}

fn scal_res2(case: &mut Case<'_>) -> Checks {
    scal_res(case, false)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn scal_multilinear(case: &mut Case<'_>) -> Checks {
    use crate::scalar::SymbolKind;
    let [a, b] = dims(case)?;
    let (s, q) = scalar_sets(case)?;
    let poly = scalar_product_symbolic(&s[0], &s[1], &s[2], &s[3], &q)?;
    let count = |n: usize| Rational::from_integer(n as i64);
    let balanced = poly
        .terms
        .keys()
        .filter(|m| {
            let r1 = m.symbols().iter().filter(|x| x.kind == SymbolKind::R1).count();
            r1 == a && m.symbols().len() == a + b
        })
        .count();
    Ok(vec![
        cmp("monomial count", count(poly.len()), count(binomial(2 * a, a) * binomial(2 * b, b))),
        cmp("multilinear", count(usize::from(poly.is_multilinear())), Rational::one()),
        cmp("monomials of degree (a, b)", count(balanced), count(poly.len())),
    ])
}

macro_rules! entry {
    ($id:literal, $suite:ident, $shapes:ident, $check:ident, $desc:literal) => {
        Descriptor { id: $id, suite: Suite::$suite, description: $desc, shapes: $shapes, check: $check }
    };
}

/// The fixed list of registered identities.
pub fn registry() -> Vec<Descriptor> {
    vec![
        entry!("K_INIT", Izergin, init_shapes, k_init, "initial values and the left/right ratio"),
        entry!("K_SCAL", Izergin, line_from1, k_scal, "invariance under common scaling"),
        entry!("K_RED", Izergin, line_grow, k_red, "reduction at q-shifted coincidence"),
        entry!("K_INVERS", Izergin, line, k_invers, "reversed arguments with q^-2 shift"),
        entry!("K_INVERS1", Izergin, line, k_invers1, "q -> 1/q swaps left and right"),
        entry!("K_RES", Izergin, line_grow, k_res, "simple pole at y = x"),
        entry!("K_INF", Izergin, line_from1, k_inf, "decay and boundedness at infinity"),
        entry!("LEMMA_SUM", Izergin, grid, lemma_sum, "partition sum of two determinants"),
        entry!("MULT_POLE", Izergin, grid, mult_pole, "limit through coinciding pole pairs"),
        entry!("HC_REP_AGREE", HcReps, grid, hc_rep_agree, "all six representations agree"),
        entry!("DIFF_11", HcReps, one_one, diff_11, "difference of left and right at a = b = 1"),
        entry!("HC_SYM_PERM", Symmetries, grid_permutable, hc_sym_perm, "symmetry in each set"),
        entry!("Z_TRIV", Symmetries, boundary, z_triv, "boundary values are Izergin determinants"),
        entry!("Z_SCAL", Symmetries, grid, z_scal, "invariance under common scaling"),
        entry!("Z_INVERS", Symmetries, grid, z_invers, "exchange of the two set pairs"),
        entry!("Z_INVERS1", Symmetries, grid, z_invers1, "q -> 1/q with left/right swap"),
        entry!("Z_INF", Symmetries, grid_nonempty, z_inf, "decay and boundedness at infinity"),
        entry!("Z_ZERO_VANISH", Symmetries, grid_nonempty, z_zero_vanish, "zero at y_j = 0 (left), t_i = 0 (right)"),
        entry!("REC_Z_TRIV1", Residues, grid_b1, rec_z_triv1, "simple pole at s = y"),
        entry!("REC_Z_TRIV2", Residues, grid_a1, rec_z_triv2, "simple pole at t = x"),
        entry!("REC_Z_NONTRIV", Residues, grid_ab1, rec_z_nontriv, "simple pole at s = t"),
        entry!("REC_Z_NONTRIV_D", Residues, grid_ab1, rec_z_nontriv_d, "simple pole at y = x"),
        entry!("RED1", Residues, grow_a, red1, "limit through t = x pole pairs"),
        entry!("RED2", Residues, grow_b, red2, "limit through s = y pole pairs"),
        entry!("NONTRIV2", Residues, merged, nontriv2, "limit through s = t pole pairs"),
        entry!("NONTRIV22", Residues, merged, nontriv22, "limit through y = x pole pairs"),
        entry!("DEC1", Reductions, merged, dec1, "reduction with y containing x q^-2"),
        entry!("DEC2", Reductions, merged, dec2, "reduction with t containing s q^2"),
        entry!("DEC1_PC", Reductions, grid_pc_a, dec1_pc, "reduction to a product, a <= b"),
        entry!("DEC2_PC", Reductions, grid_pc_b, dec2_pc, "reduction to a product, b <= a"),
        entry!("TWIN_1", Twins, grid_b_le_a, twin_1, "three-determinant sum over t, b <= a"),
        entry!("TWIN_2", Twins, grid_b_le_a, twin_2, "three-determinant sum over t, roles of s, y swapped"),
        entry!("TWIN_3", Twins, grid_a_le_b, twin_3, "three-determinant sum over y, a <= b"),
        entry!("TWIN_4", Twins, grid_a_le_b, twin_4, "three-determinant sum over y, roles of t, x swapped"),
        entry!("PROP_5_1", Prop51, prop_shapes, prop_5_1, "two-set summation over partitions of s and xi"),
        entry!("W_CORNER_L", Scalar, grid, w_corner_l, "corner k = 0, n = b is the left coefficient"),
        entry!("W_CORNER_R", Scalar, grid, w_corner_r, "corner k = a, n = 0 is the right coefficient"),
        entry!("SCAL_RES1", Scalar, grid, scal_res1, "coefficient of R1(uB) R3(vC)"),
        entry!("SCAL_RES2", Scalar, grid, scal_res2, "coefficient of R1(uC) R3(vB)"),
        entry!("SCAL_MULTILINEAR", Scalar, grid, scal_multilinear, "monomial structure of the assembled sum"),
    ]
}
