use gl3_hc::highest::{hc, hc_all, HcQuery, Rep};
use gl3_hc::izergin::{Kernel, Side};
use gl3_hc::scalar::{
    extract_coefficient, scalar_product_numeric, scalar_product_symbolic, Monomial, RationalFunctionSpec, WeightPolynomial,
};
use gl3_hc::verify::{descriptor, registry, replay, run_suite, Report, Suite};
use gl3_hc::{sample_generic, Config, ParameterSet, Rational};
use proptest::prelude::*;

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn sample(shape: &[usize], seed: u64) -> (Vec<ParameterSet>, Rational) {
    sample_generic(shape, &Config { seed, ..Config::default() }).unwrap()
}

#[test]
fn kernel_values_by_hand() {
    let k = Kernel::new(&r("2")).unwrap();
    assert_eq!(k.f(&r("3"), &r("1")).unwrap(), r("11/4"));
    assert_eq!(k.g(&r("3"), &r("1")).unwrap(), r("3/4"));
    assert_eq!(k.f(&r("5"), &r("0")).unwrap(), r("2"));
}

#[test]
fn izergin_two_by_two_by_hand() {
    // K_2 from the unscaled defining formula, expanded by hand:
    // prod(q x_i - y_j / q) / ((x1 - x2)(y2 - y1)) * det[g(x_i, y_j) / (q x_i - y_j / q)].
    let q = r("2");
    let (xs, ys) = ([r("1"), r("2")], [r("3"), r("5")]);
    let h = |x: &Rational, y: &Rational| &(&q * x) - &y.checked_div(&q).unwrap();
    let gg = |x: &Rational, y: &Rational| (&q - &q.recip().unwrap()).checked_div(&(x - y)).unwrap();
    let e = |i: usize, j: usize| gg(&xs[i], &ys[j]).checked_div(&h(&xs[i], &ys[j])).unwrap();
    let det = &(&e(0, 0) * &e(1, 1)) - &(&e(0, 1) * &e(1, 0));
    let prod = xs.iter().flat_map(|x| ys.iter().map(move |y| (x, y))).fold(r("1"), |acc, (x, y)| &acc * &h(x, y));
    let vandermonde = &(&xs[0] - &xs[1]) * &(&ys[1] - &ys[0]);
    let expected = (&prod * &det).checked_div(&vandermonde).unwrap();
    let k = Kernel::new(&q).unwrap();
    assert_eq!(k.izergin(&xs, &ys).unwrap(), expected);
}

#[test]
fn registry_covers_every_suite() {
    let reg = registry();
    assert_eq!(reg.len(), 40);
    for suite in Suite::ALL {
        assert!(reg.iter().any(|d| d.suite == suite));
    }
    assert!(descriptor("NOPE").is_err());
}

#[test]
fn every_suite_passes_on_small_shapes() {
    for suite in Suite::ALL {
        let report = run_suite(suite.name(), 1, 1, 2, 99, &Config::default()).unwrap();
        assert!(report.passed(), "{suite}: {:?}", report.summary);
        assert_eq!(Report::tally(&report.cases), report.summary);
    }
}

#[test]
fn fixed_q_is_honoured() {
    let cfg = Config { q: Some(r("-7/3")), ..Config::default() };
    let report = run_suite("hc-reps", 1, 1, 1, 0, &cfg).unwrap();
    assert!(report.passed());
    assert!(report.cases.iter().all(|c| c.params.q == Some(r("-7/3"))));
}

#[test]
fn failing_cases_replay_identically() {
    let report = run_suite("residues", 1, 1, 1, 4, &Config::default()).unwrap();
    for case in &report.cases {
        let again = replay(case, &Config::default()).unwrap();
        assert_eq!(again.lhs, case.lhs);
        assert_eq!(again.rhs, case.rhs);
    }
}

#[test]
fn numeric_scalar_product_at_a0_b0_is_one() {
    let e = ParameterSet::empty();
    let rf: RationalFunctionSpec = "num:2,1;den:1".parse().unwrap();
    assert_eq!(scalar_product_numeric(&e, &e, &e, &e, &rf, &rf, &r("3")).unwrap(), r("1"));
}

#[test]
fn absent_monomial_has_zero_coefficient() {
    let p = WeightPolynomial::default();
    assert_eq!(extract_coefficient(&p, &Monomial::right_corner(1, 1)), r("0"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn corner_coefficients(seed in any::<u64>(), a in 0usize..3, b in 0usize..3) {
        let (s, q) = sample(&[a, b, a, b], seed);
        let poly = scalar_product_symbolic(&s[0], &s[1], &s[2], &s[3], &q).unwrap();
        let k = Kernel::new(&q).unwrap();
        let norm = &k.f_prod(&s[1], &s[0]).unwrap() * &k.f_prod(&s[3], &s[2]).unwrap();
        let zr = hc(&HcQuery::new(Side::R, s[2].clone(), s[0].clone(), s[3].clone(), s[1].clone(), q.clone()).with_rep(Rep::Ty)).unwrap();
        let zl = hc(&HcQuery::new(Side::L, s[0].clone(), s[2].clone(), s[1].clone(), s[3].clone(), q.clone()).with_rep(Rep::TyTwin)).unwrap();
        prop_assert_eq!(extract_coefficient(&poly, &Monomial::right_corner(a, b)), zr.checked_div(&norm).unwrap());
        prop_assert_eq!(extract_coefficient(&poly, &Monomial::left_corner(a, b)), zl.checked_div(&norm).unwrap());
        prop_assert!(poly.is_multilinear());
    }

    #[test]
    fn merge_is_commutative(seed1 in any::<u64>(), seed2 in any::<u64>()) {
        let build = |seed| {
            let (s, q) = sample(&[1, 1, 1, 1], seed);
            scalar_product_symbolic(&s[0], &s[1], &s[2], &s[3], &q).unwrap()
        };
        let (p1, p2) = (build(seed1), build(seed2));
        let mut a = p1.clone();
        a.merge(p2.clone());
        let mut b = p2;
        b.merge(p1);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn left_right_agree_with_inverted_q(seed in any::<u64>(), a in 0usize..3, b in 0usize..3) {
        // Z^(l) at 1/q equals Z^(r) at q with the set pairs exchanged.
        let (s, q) = sample(&[a, a, b, b], seed);
        let qi = q.recip().unwrap();
        let left = hc_all(&HcQuery::new(Side::L, s[0].clone(), s[1].clone(), s[2].clone(), s[3].clone(), qi)).unwrap();
        let right = hc(&HcQuery::new(Side::R, s[3].clone(), s[2].clone(), s[1].clone(), s[0].clone(), q)).unwrap();
        for (_, v) in left {
            prop_assert_eq!(&v, &right);
        }
    }
}
