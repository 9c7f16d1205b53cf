//! Parameter sets, q-shifts, index complements and the genericity sampler.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// An ordered finite sequence of rationals (a bar-set such as `t`, `x`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ParameterSet(Vec<Rational>);

impl ParameterSet {
    pub fn new(elements: Vec<Rational>) -> Self {
        ParameterSet(elements)
    }

    /// Like [`ParameterSet::new`] but rejects repeated values.
    pub fn checked(elements: Vec<Rational>) -> Result<Self> {
        for (i, a) in elements.iter().enumerate() {
            if elements[..i].contains(a) {
                return Err(Error::Config(format!("repeated element {a}")));
            }
        }
        Ok(ParameterSet(elements))
    }

    pub fn empty() -> Self {
        ParameterSet(Vec::new())
    }

    pub fn from_integers(values: &[i64]) -> Self {
        ParameterSet(values.iter().map(|&v| Rational::from_integer(v)).collect())
    }

    pub fn elements(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.0
    }

    /// Every element multiplied by `q^k`.
    pub fn qshift(&self, k: i32, q: &Rational) -> Result<Self> {
        let factor = q.pow(k)?;
        Ok(self.scale(&factor))
    }

    pub fn scale(&self, alpha: &Rational) -> Self {
        ParameterSet(self.0.iter().map(|v| v * alpha).collect())
    }

    /// Splits into (elements at `indices`, the rest), both in original order.
    /// `indices` are zero-based.
    pub fn complement(&self, indices: &[usize]) -> Result<(Self, Self)> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.0.len()) {
            return Err(Error::IndexOutOfRange { index: bad, len: self.0.len() });
        }
        let (mut chosen, mut rest) = (Vec::new(), Vec::new());
        for (i, v) in self.0.iter().enumerate() {
            if indices.contains(&i) {
                chosen.push(v.clone());
            } else {
                rest.push(v.clone());
            }
        }
        Ok((ParameterSet(chosen), ParameterSet(rest)))
    }

    /// Concatenation `{self, other}`.
    pub fn union(&self, other: &ParameterSet) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        ParameterSet(v)
    }
}

impl Deref for ParameterSet {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl From<Vec<Rational>> for ParameterSet {
    fn from(v: Vec<Rational>) -> Self {
        ParameterSet(v)
    }
}

impl fmt::Display for ParameterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Rational::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Comma-separated rationals; the empty string is the empty set.
impl FromStr for ParameterSet {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Ok(ParameterSet::empty());
        }
        text.split(',').map(str::parse).collect::<Result<Vec<_>>>().map(ParameterSet)
    }
}

impl Serialize for ParameterSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ParameterSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<Rational>::deserialize(deserializer).map(ParameterSet)
    }
}

/// Evaluation settings shared by the sampler and the verification driver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// Fixed deformation parameter; sampled per case when absent.
    pub q: Option<Rational>,
    pub laurent_window: usize,
    pub seed: u64,
    /// Bound on sampled numerators and denominators.
    pub max_abs: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { q: None, laurent_window: 4, seed: 0, max_abs: 12 }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if let Some(q) = &self.q {
            validate_q(q)?;
        }
        if self.laurent_window == 0 {
            return Err(Error::Config("laurent_window must be at least 1".into()));
        }
        if self.max_abs == 0 {
            return Err(Error::Config("max_abs must be at least 1".into()));
        }
        Ok(())
    }
}

pub fn validate_q(q: &Rational) -> Result<()> {
    if q.is_zero() || q.abs().is_one() {
        return Err(Error::Config(format!("q must not be 0 or ±1, got {q}")));
    }
    Ok(())
}

const ATTEMPTS_PER_VALUE: usize = 2000;

/// Largest |k| such that two sampled values must not differ by a factor q^k.
const SHIFT_REACH: i32 = 8;

/// Forbidden ratios between distinct sampled values: `q^k`, even `k` in
/// `[-8, 8]`. Equivalent to pairwise distinctness of `q^{-4..4} P`.
fn forbidden_ratios(q: &Rational) -> Vec<Rational> {
    (-SHIFT_REACH / 2..=SHIFT_REACH / 2)
        .map(|k| q.pow(2 * k).expect("q is nonzero"))
        .collect()
}

fn draw(rng: &mut ChaCha8Rng, max_abs: u64) -> Rational {
    let n = rng.gen_range(1..=max_abs) as i64;
    let d = rng.gen_range(1..=max_abs) as i64;
    Rational::new(n, d).expect("positive denominator")
}

/// True when every pair of distinct positions in `values` is separated by
/// more than an even power of `q` up to `q^8`.
pub fn is_generic(values: &[Rational], q: &Rational) -> bool {
    let ratios = forbidden_ratios(q);
    values.iter().enumerate().all(|(i, u)| {
        !u.is_zero() && values[..i].iter().all(|v| !v.is_zero() && !ratios.contains(&u.checked_div(v).expect("nonzero")))
    })
}

/// Draws sets with the requested cardinalities, plus `q`, such that all
/// sampled values are positive and pairwise far apart in the q-shift sense.
pub fn sample_generic(shape: &[usize], cfg: &Config) -> Result<(Vec<ParameterSet>, Rational)> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let q = match &cfg.q {
        Some(q) => q.clone(),
        None => {
            let mut found = None;
            for _ in 0..ATTEMPTS_PER_VALUE {
                let c = draw(&mut rng, cfg.max_abs);
                if !c.is_one() {
                    found = Some(c);
                    break;
                }
            }
            found.ok_or(Error::SamplerExhausted(ATTEMPTS_PER_VALUE))?
        }
    };
    let ratios = forbidden_ratios(&q);
    let mut all: Vec<Rational> = Vec::new();
    let mut sets = Vec::with_capacity(shape.len());
    for &card in shape {
        let mut set = Vec::with_capacity(card);
        for _ in 0..card {
            let mut accepted = None;
            for _ in 0..ATTEMPTS_PER_VALUE {
                let c = draw(&mut rng, cfg.max_abs);
                if all.iter().all(|v| !ratios.contains(&c.checked_div(v).expect("positive"))) {
                    accepted = Some(c);
                    break;
                }
            }
            let c = accepted.ok_or(Error::SamplerExhausted(ATTEMPTS_PER_VALUE))?;
            all.push(c.clone());
            set.push(c);
        }
        sets.push(ParameterSet(set));
    }
    Ok((sets, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn qshift_examples() {
        let s = ParameterSet::from_integers(&[1, 2]);
        assert_eq!(s.qshift(2, &r("2")).unwrap(), ParameterSet::from_integers(&[4, 8]));
        assert_eq!(ParameterSet::empty().qshift(-2, &r("3")).unwrap(), ParameterSet::empty());
        let back = s.qshift(2, &r("5/3")).unwrap().qshift(-2, &r("5/3")).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn complement_examples() {
        let s = ParameterSet::from_integers(&[5, 7, 9]);
        let (a, b) = s.complement(&[1]).unwrap();
        assert_eq!(a, ParameterSet::from_integers(&[7]));
        assert_eq!(b, ParameterSet::from_integers(&[5, 9]));
        let (a, b) = ParameterSet::from_integers(&[5]).complement(&[]).unwrap();
        assert!(a.is_empty());
        assert_eq!(b, ParameterSet::from_integers(&[5]));
        assert_eq!(
            ParameterSet::from_integers(&[5, 7]).complement(&[2]),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        );
    }

    #[test]
    fn set_syntax() {
        assert_eq!("".parse::<ParameterSet>().unwrap(), ParameterSet::empty());
        let s: ParameterSet = "1/2,3,7/5".parse().unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_string(), "1/2,3,7/5");
        assert!("1,,2".parse::<ParameterSet>().is_err());
        assert!(ParameterSet::checked(vec![r("1"), r("2/2")]).is_err());
    }

    #[test]
    fn sampler_examples() {
        let cfg = Config { seed: 7, ..Config::default() };
        let (sets, q) = sample_generic(&[1, 1, 1, 1], &cfg).unwrap();
        assert_eq!(sets.len(), 4);
        let all: Vec<Rational> = sets.iter().flat_map(|s| s.iter().cloned()).collect();
        assert!(is_generic(&all, &q));
        assert!(!q.is_one());

        let (sets, _) = sample_generic(&[0, 0, 0, 0], &cfg).unwrap();
        assert!(sets.iter().all(|s| s.is_empty()));

        let tiny = Config { max_abs: 1, q: Some(r("2")), ..Config::default() };
        assert!(matches!(sample_generic(&[9, 9, 9, 9], &tiny), Err(Error::SamplerExhausted(_))));

        let bad_q = Config { q: Some(r("-1")), ..Config::default() };
        assert!(matches!(sample_generic(&[1], &bad_q), Err(Error::Config(_))));
    }

    proptest! {
        #[test]
        fn sampler_is_reproducible_and_generic(seed in any::<u64>(), a in 0usize..4, b in 0usize..4) {
            let cfg = Config { seed, ..Config::default() };
            let first = sample_generic(&[a, a, b, b], &cfg).unwrap();
            let second = sample_generic(&[a, a, b, b], &cfg).unwrap();
            prop_assert_eq!(&first, &second);
            let (sets, q) = first;
            let all: Vec<Rational> = sets.iter().flat_map(|s| s.iter().cloned()).collect();
            prop_assert!(is_generic(&all, &q));
            prop_assert!(all.iter().all(|v| !v.is_negative() && !v.is_zero()));
        }
    }
}
