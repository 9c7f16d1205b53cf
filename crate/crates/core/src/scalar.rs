//! Scalar product as a multilinear polynomial in formal symbols
//! `R1(u)`, `R3(v)`, with coefficients built from `Z^(l)` and `Z^(r)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::highest::{z, Rep};
use crate::izergin::{Kernel, Side};
use crate::params::ParameterSet;
use crate::partitions::split2;

/// `sum num_i u^i / sum den_i u^i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunctionSpec {
    pub numerator: Vec<Rational>,
    pub denominator: Vec<Rational>,
}

impl RationalFunctionSpec {
    pub fn new(numerator: Vec<Rational>, denominator: Vec<Rational>) -> Result<Self> {
        if denominator.iter().all(Rational::is_zero) {
            return Err(Error::Config("denominator is identically zero".into()));
        }
        Ok(RationalFunctionSpec { numerator, denominator })
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunctionSpec { numerator: vec![c], denominator: vec![Rational::one()] }
    }

    pub fn eval(&self, u: &Rational) -> Result<Rational> {
        let horner = |cs: &[Rational]| cs.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * u) + c);
        let den = horner(&self.denominator);
        if den.is_zero() {
            return Err(Error::Pole(format!("denominator of r vanishes at {u}")));
        }
        horner(&self.numerator).checked_div(&den)
    }
}

/// `num:a0,a1,...;den:b0,b1,...` (coefficients in increasing degree).
impl FromStr for RationalFunctionSpec {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse(text.to_string());
        let (num, den) = text.split_once(';').ok_or_else(bad)?;
        let num = num.trim().strip_prefix("num:").ok_or_else(bad)?;
        let den = den.trim().strip_prefix("den:").ok_or_else(bad)?;
        let parse = |s: &str| s.parse::<ParameterSet>().map(ParameterSet::into_vec);
        RationalFunctionSpec::new(parse(num)?, parse(den)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SymbolKind {
    R1,
    R3,
}

/// Which vector a parameter belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Origin {
    C,
    B,
}

/// `R1(u^C_i)`, `R1(u^B_i)`, `R3(v^C_i)` or `R3(v^B_i)`; `index` is zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Symbol {
    pub kind: SymbolKind,
    pub origin: Origin,
    pub index: usize,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kind, var) = match self.kind {
            SymbolKind::R1 => ("R1", "u"),
            SymbolKind::R3 => ("R3", "v"),
        };
        let origin = match self.origin {
            Origin::C => "C",
            Origin::B => "B",
        };
        write!(f, "{kind}({var}{origin}{})", self.index + 1)
    }
}

/// A product of distinct symbols, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial(Vec<Symbol>);

impl Monomial {
    pub fn new(mut symbols: Vec<Symbol>) -> Self {
        symbols.sort();
        symbols.dedup();
        Monomial(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    fn all(kind: SymbolKind, origin: Origin, count: usize) -> impl Iterator<Item = Symbol> {
        (0..count).map(move |index| Symbol { kind, origin, index })
    }

    /// `R1(u^B) R3(v^C)`, whose coefficient involves `Z^(r)`.
    pub fn right_corner(a: usize, b: usize) -> Self {
        Monomial::new(Self::all(SymbolKind::R1, Origin::B, a).chain(Self::all(SymbolKind::R3, Origin::C, b)).collect())
    }

    /// `R1(u^C) R3(v^B)`, whose coefficient involves `Z^(l)`.
    pub fn left_corner(a: usize, b: usize) -> Self {
        Monomial::new(Self::all(SymbolKind::R1, Origin::C, a).chain(Self::all(SymbolKind::R3, Origin::B, b)).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(Symbol::to_string).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Multilinear polynomial in the formal symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightPolynomial {
    pub terms: BTreeMap<Monomial, Rational>,
}

impl WeightPolynomial {
    pub fn add_term(&mut self, monomial: Monomial, coeff: Rational) {
        let entry = self.terms.entry(monomial).or_insert_with(Rational::zero);
        *entry = &*entry + &coeff;
    }

    pub fn merge(&mut self, other: WeightPolynomial) {
        for (m, c) in other.terms {
            self.add_term(m, c);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// No symbol appears twice in any monomial.
    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(|m| m.0.windows(2).all(|w| w[0] != w[1]))
    }
}

/// Coefficient of `monomial`, zero when absent.
pub fn extract_coefficient(p: &WeightPolynomial, monomial: &Monomial) -> Rational {
    p.terms.get(monomial).cloned().unwrap_or_else(Rational::zero)
}

/// One partition of the four parameter sets: `(I, II)` for each of
/// `u^C`, `u^B`, `v^C`, `v^B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub uc: (Vec<Rational>, Vec<Rational>),
    pub ub: (Vec<Rational>, Vec<Rational>),
    pub vc: (Vec<Rational>, Vec<Rational>),
    pub vb: (Vec<Rational>, Vec<Rational>),
}

/// The coefficient of a fixed partition with `#u^C_I = #u^B_I = k` and
/// `#v^C_I = #v^B_I = n`, as a product of six `f`-factors and
/// `Z^(l)_{a-k,n} Z^(r)_{k,b-n}`.
pub fn w_part(split: &Split, q: &Rational) -> Result<Rational> {
    let k = Kernel::new(q)?;
    let Split { uc: (uc1, uc2), ub: (ub1, ub2), vc: (vc1, vc2), vb: (vb1, vb2) } = split;
    if uc1.len() != ub1.len() || vc1.len() != vb1.len() || uc2.len() != ub2.len() || vc2.len() != vb2.len() {
        return Err(Error::Cardinality("C and B parts must have matching sizes".into()));
    }
    let factors = [
        k.f_prod(ub2, ub1)?,
        k.f_prod(uc1, uc2)?,
        k.f_prod(vb1, vb2)?,
        k.f_prod(vc2, vc1)?,
        k.f_prod(vc1, uc1)?,
        k.f_prod(vb2, ub2)?,
    ];
    let zl = z(&k, Side::L, Rep::Ws, uc2, ub2, vc1, vb1)?;
    let zr = z(&k, Side::R, Rep::Ws, ub1, uc1, vb2, vc2)?;
    Ok(factors.iter().fold(&zl * &zr, |acc, f| &acc * f))
}

fn index_split(len: usize, k: usize) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let idx: Vec<usize> = (0..len).collect();
    let parts = split2(&idx, k)?.collect();
    Ok(parts)
}

fn pick(values: &[Rational], idx: &[usize]) -> Vec<Rational> {
    idx.iter().map(|&i| values[i].clone()).collect()
}

fn symbols(kind: SymbolKind, origin: Origin, idx: &[usize]) -> impl Iterator<Item = Symbol> + '_ {
    idx.iter().map(move |&index| Symbol { kind, origin, index })
}

/// The full bilinear partition sum, collected by monomial
/// `R1(u^C_II) R1(u^B_I) R3(v^C_II) R3(v^B_I)`.
pub fn scalar_product_symbolic(
    uc: &ParameterSet,
    vc: &ParameterSet,
    ub: &ParameterSet,
    vb: &ParameterSet,
    q: &Rational,
) -> Result<WeightPolynomial> {
    let (a, b) = (uc.len(), vc.len());
    if ub.len() != a || vb.len() != b {
        return Err(Error::Cardinality("need #u^C = #u^B and #v^C = #v^B".into()));
    }
    let kernel = Kernel::new(q)?;
    let norm = (&kernel.f_prod(vc, uc)? * &kernel.f_prod(vb, ub)?).recip()?;
    let mut poly = WeightPolynomial::default();
    for k in 0..=a {
        let (ucs, ubs) = (index_split(a, k)?, index_split(a, k)?);
        for n in 0..=b {
            let (vcs, vbs) = (index_split(b, n)?, index_split(b, n)?);
            for (uc1, uc2) in &ucs {
                for (ub1, ub2) in &ubs {
                    for (vc1, vc2) in &vcs {
                        for (vb1, vb2) in &vbs {
                            let split = Split {
                                uc: (pick(uc, uc1), pick(uc, uc2)),
                                ub: (pick(ub, ub1), pick(ub, ub2)),
                                vc: (pick(vc, vc1), pick(vc, vc2)),
                                vb: (pick(vb, vb1), pick(vb, vb2)),
                            };
                            let monomial = Monomial::new(
                                symbols(SymbolKind::R1, Origin::C, uc2)
                                    .chain(symbols(SymbolKind::R1, Origin::B, ub1))
                                    .chain(symbols(SymbolKind::R3, Origin::C, vc2))
                                    .chain(symbols(SymbolKind::R3, Origin::B, vb1))
                                    .collect(),
                            );
                            poly.add_term(monomial, &w_part(&split, q)? * &norm);
                        }
                    }
                }
            }
        }
    }
    Ok(poly)
}

/// Substitutes `R1(u) = r1(u)`, `R3(v) = r3(v)` into the symbolic sum.
pub fn scalar_product_numeric(
    uc: &ParameterSet,
    vc: &ParameterSet,
    ub: &ParameterSet,
    vb: &ParameterSet,
    r1: &RationalFunctionSpec,
    r3: &RationalFunctionSpec,
    q: &Rational,
) -> Result<Rational> {
    let poly = scalar_product_symbolic(uc, vc, ub, vb, q)?;
    let value = |s: &Symbol| -> Result<Rational> {
        match (s.kind, s.origin) {
            (SymbolKind::R1, Origin::C) => r1.eval(&uc[s.index]),
            (SymbolKind::R1, Origin::B) => r1.eval(&ub[s.index]),
            (SymbolKind::R3, Origin::C) => r3.eval(&vc[s.index]),
            (SymbolKind::R3, Origin::B) => r3.eval(&vb[s.index]),
        }
    };
    let mut total = Rational::zero();
    for (m, c) in &poly.terms {
        let mut term = c.clone();
        for s in m.symbols() {
            term = &term * &value(s)?;
        }
        total = &total + &term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::highest::hc;
    use crate::highest::HcQuery;
    use crate::params::{sample_generic, Config};

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn sample(a: usize, b: usize, seed: u64) -> (Vec<ParameterSet>, Rational) {
        sample_generic(&[a, b, a, b], &Config { seed, ..Config::default() }).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn rational_function_parsing_and_eval() {
        let f: RationalFunctionSpec = "num:1,2;den:3".parse().unwrap();
        assert_eq!(f.eval(&r("2")).unwrap(), r("5/3"));
        assert!("num:1;den:0".parse::<RationalFunctionSpec>().is_err());
        assert!("1,2".parse::<RationalFunctionSpec>().is_err());
        let pole: RationalFunctionSpec = "num:1;den:-2,1".parse().unwrap();
        assert!(matches!(pole.eval(&r("2")), Err(Error::Pole(_))));
    }

    #[test]
    fn empty_case_is_one() {
        let e = ParameterSet::empty();
        let p = scalar_product_symbolic(&e, &e, &e, &e, &r("2")).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(extract_coefficient(&p, &Monomial::default()), Rational::one());
    }

    #[test]
    fn a1_b0_has_two_monomials() {
        let (sets, q) = sample(1, 0, 4);
        let (uc, vc, ub, vb) = (&sets[0], &sets[1], &sets[2], &sets[3]);
        let p = scalar_product_symbolic(uc, vc, ub, vb, &q).unwrap();
        assert_eq!(p.len(), 2);
        let k = Kernel::new(&q).unwrap();
        // k = 1: Z^(r)_{1,0}(u^B; u^C) = K^(r)_1(u^C | u^B); k = 0: K^(l)_1(u^B | u^C).
        assert_eq!(extract_coefficient(&p, &Monomial::right_corner(1, 0)), k.izergin_right(uc, ub).unwrap());
        assert_eq!(extract_coefficient(&p, &Monomial::left_corner(1, 0)), k.izergin_left(ub, uc).unwrap());
    }

    #[test]
    fn corner_coefficients_match_highest_coefficients() {
        for (a, b) in [(1, 1), (2, 1), (1, 2)] {
            let (sets, q) = sample(a, b, 21);
            let (uc, vc, ub, vb) = (&sets[0], &sets[1], &sets[2], &sets[3]);
            let p = scalar_product_symbolic(uc, vc, ub, vb, &q).unwrap();
            let k = Kernel::new(&q).unwrap();
            let norm = &k.f_prod(vc, uc).unwrap() * &k.f_prod(vb, ub).unwrap();
            let zr = hc(&HcQuery::new(Side::R, ub.clone(), uc.clone(), vb.clone(), vc.clone(), q.clone()).with_rep(Rep::Tx)).unwrap();
            let zl = hc(&HcQuery::new(Side::L, uc.clone(), ub.clone(), vc.clone(), vb.clone(), q.clone()).with_rep(Rep::Sy)).unwrap();
            assert_eq!(extract_coefficient(&p, &Monomial::right_corner(a, b)), zr.checked_div(&norm).unwrap());
            assert_eq!(extract_coefficient(&p, &Monomial::left_corner(a, b)), zl.checked_div(&norm).unwrap());
            assert_eq!(p.len(), binom(2 * a, a) * binom(2 * b, b));
            assert!(p.is_multilinear());
        }
    }

    #[test]
    fn numeric_substitution() {
        let (sets, q) = sample(1, 1, 8);
        let (uc, vc, ub, vb) = (&sets[0], &sets[1], &sets[2], &sets[3]);
        let p = scalar_product_symbolic(uc, vc, ub, vb, &q).unwrap();
        let zero = RationalFunctionSpec::constant(Rational::zero());
        let one = RationalFunctionSpec::constant(Rational::one());
        let v0 = scalar_product_numeric(uc, vc, ub, vb, &zero, &zero, &q).unwrap();
        assert_eq!(v0, extract_coefficient(&p, &Monomial::default()));
        let v1 = scalar_product_numeric(uc, vc, ub, vb, &one, &one, &q).unwrap();
        let sum = p.terms.values().fold(Rational::zero(), |acc, c| &acc + c);
        assert_eq!(v1, sum);
    }

    #[test]
    fn numeric_matches_hand_assembled_sum() {
        // a = b = 1: four partitions, each a single W_part.
        let (sets, q) = sample(1, 1, 13);
        let (uc, vc, ub, vb) = (&sets[0][0], &sets[1][0], &sets[2][0], &sets[3][0]);
        let r1: RationalFunctionSpec = "num:1,1;den:2".parse().unwrap();
        let r3: RationalFunctionSpec = "num:3;den:1,1".parse().unwrap();
        let k = Kernel::new(&q).unwrap();
        let e: Vec<Rational> = Vec::new();
        let one = |v: &Rational| vec![v.clone()];
        let mut total = Rational::zero();
        for kk in 0..2 {
            for n in 0..2 {
                let (uc1, uc2) = if kk == 1 { (one(uc), e.clone()) } else { (e.clone(), one(uc)) };
                let (ub1, ub2) = if kk == 1 { (one(ub), e.clone()) } else { (e.clone(), one(ub)) };
                let (vc1, vc2) = if n == 1 { (one(vc), e.clone()) } else { (e.clone(), one(vc)) };
                let (vb1, vb2) = if n == 1 { (one(vb), e.clone()) } else { (e.clone(), one(vb)) };
                let mut weight = Rational::one();
                for u in &uc2 {
                    weight = &weight * &r1.eval(u).unwrap();
                }
                for u in &ub1 {
                    weight = &weight * &r1.eval(u).unwrap();
                }
                for v in &vc2 {
                    weight = &weight * &r3.eval(v).unwrap();
                }
                for v in &vb1 {
                    weight = &weight * &r3.eval(v).unwrap();
                }
                let w = w_part(&Split { uc: (uc1, uc2), ub: (ub1, ub2), vc: (vc1, vc2), vb: (vb1, vb2) }, &q).unwrap();
                total = &total + &(&weight * &w);
            }
        }
        let norm = &k.f(vc, uc).unwrap() * &k.f(vb, ub).unwrap();
        let expected = total.checked_div(&norm).unwrap();
        let got = scalar_product_numeric(&sets[0], &sets[1], &sets[2], &sets[3], &r1, &r3, &q).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn interior_w_part_is_product_formula() {
        let (sets, q) = sample(1, 1, 2);
        let k = Kernel::new(&q).unwrap();
        let (uc, vc, ub, vb) = (&sets[0], &sets[1], &sets[2], &sets[3]);
        let e: Vec<Rational> = Vec::new();
        let split = Split {
            uc: (uc.to_vec(), e.clone()),
            ub: (ub.to_vec(), e.clone()),
            vc: (vc.to_vec(), e.clone()),
            vb: (vb.to_vec(), e.clone()),
        };
        // k = n = 1: f(v^C, u^C) Z^(l)_{0,1}(.|v^C; v^B) Z^(r)_{1,0}(u^B; u^C|.)
        let expected = &(&k.f_prod(vc, uc).unwrap() * &k.izergin_left(vb, vc).unwrap()) * &k.izergin_right(uc, ub).unwrap();
        assert_eq!(w_part(&split, &q).unwrap(), expected);
    }
}
