//! Identity registry, seeded sweeps and machine-readable reports.
//!
//! Every case is a pure function of `(identity_id, shape, seed, config)`,
//! so a failing case can be replayed from its report entry alone.

mod checks;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::highest::Rep;
use crate::params::{sample_generic, Config, ParameterSet};

/// Groups of related identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Izergin,
    HcReps,
    Symmetries,
    Residues,
    Reductions,
    Twins,
    Prop51,
    Scalar,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Izergin,
        Suite::HcReps,
        Suite::Symmetries,
        Suite::Residues,
        Suite::Reductions,
        Suite::Twins,
        Suite::Prop51,
        Suite::Scalar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Izergin => "izergin",
            Suite::HcReps => "hc-reps",
            Suite::Symmetries => "symmetries",
            Suite::Residues => "residues",
            Suite::Reductions => "reductions",
            Suite::Twins => "twins",
            Suite::Prop51 => "prop51",
            Suite::Scalar => "scalar",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "suite", name: s.to_string() })
    }
}

/// Suite selection on the command line: one suite or `all`.
pub fn parse_suites(name: &str) -> Result<Vec<Suite>> {
    if name == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        Ok(vec![name.parse()?])
    }
}

/// Sampled data of one case.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseParams {
    pub q: Option<Rational>,
    pub sets: BTreeMap<String, ParameterSet>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rep: Option<Rep>,
}

/// One exact equality checked inside a case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub label: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

impl Comparison {
    pub fn new(label: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        let equal = lhs == rhs;
        Comparison { label: label.into(), lhs, rhs, equal }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCase {
    pub identity_id: String,
    pub shape: Vec<usize>,
    pub seed: u64,
    pub params: CaseParams,
    /// First failing comparison, or the first comparison when all pass.
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub equal: bool,
    pub error: Option<String>,
    pub elapsed_ms: u64,
    pub comparisons: Vec<Comparison>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub a_max: usize,
    pub b_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub sampler: Config,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub config: RunConfig,
    pub cases: Vec<IdentityCase>,
    pub summary: Summary,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }

    /// Recounts the summary from the cases.
    pub fn tally(cases: &[IdentityCase]) -> Summary {
        let mut s = Summary::default();
        for c in cases {
            match (&c.error, c.equal) {
                (Some(_), _) => s.error += 1,
                (None, true) => s.pass += 1,
                (None, false) => s.fail += 1,
            }
        }
        s
    }
}

/// Execution context handed to a check.
pub struct Case<'a> {
    pub shape: &'a [usize],
    pub seed: u64,
    pub cfg: &'a Config,
    pub params: CaseParams,
}

impl Case<'_> {
    /// Draws named generic sets of the given sizes and records them.
    pub fn sample(&mut self, layout: &[(&str, usize)]) -> Result<(Vec<ParameterSet>, Rational)> {
        let sizes: Vec<usize> = layout.iter().map(|&(_, n)| n).collect();
        let cfg = Config { seed: self.seed, ..self.cfg.clone() };
        let (sets, q) = sample_generic(&sizes, &cfg)?;
        for ((name, _), set) in layout.iter().zip(&sets) {
            self.params.sets.insert(name.to_string(), set.clone());
        }
        self.params.q = Some(q.clone());
        Ok((sets, q))
    }

    /// A representation chosen deterministically from the seed.
    pub fn pick_rep(&mut self, pool: &[Rep]) -> Rep {
        let rep = pool[(self.seed % pool.len() as u64) as usize];
        self.params.rep = Some(rep);
        rep
    }
}

pub type Check = fn(&mut Case<'_>) -> Result<Vec<Comparison>>;

/// A registered identity.
#[derive(Clone, Copy)]
pub struct Descriptor {
    pub id: &'static str,
    pub suite: Suite,
    pub description: &'static str,
    /// Shapes exercised within `(a_max, b_max)`.
    pub shapes: fn(usize, usize) -> Vec<Vec<usize>>,
    pub check: Check,
}

impl Descriptor {
    /// Whether `shape` is one this identity is registered for.
    pub fn accepts(&self, shape: &[usize]) -> bool {
        let bound = shape.iter().sum::<usize>() + 1;
        (self.shapes)(bound, bound).iter().any(|s| s == shape)
    }
}

impl fmt::Debug for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Descriptor").field("id", &self.id).field("suite", &self.suite).finish()
    }
}

pub use checks::registry;

pub fn descriptor(id: &str) -> Result<Descriptor> {
    registry()
        .into_iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::Unknown { kind: "identity", name: id.to_string() })
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `trial` of `(id, shape)` under base seed `base`.
pub fn case_seed(base: u64, id: &str, shape: &[usize], trial: usize) -> u64 {
    let mut h = splitmix(base);
    for b in id.bytes() {
        h = splitmix(h ^ u64::from(b));
    }
    for &n in shape {
        h = splitmix(h ^ (n as u64).wrapping_add(0x100));
    }
    splitmix(h ^ (trial as u64).wrapping_add(0x1_0000))
}

/// Evaluates one case without timing it. Errors inside the check are
/// recorded on the case.
pub fn evaluate_case(d: &Descriptor, shape: &[usize], seed: u64, cfg: &Config) -> IdentityCase {
    let mut out = IdentityCase {
        identity_id: d.id.to_string(),
        shape: shape.to_vec(),
        seed,
        params: CaseParams::default(),
        lhs: None,
        rhs: None,
        equal: false,
        error: None,
        elapsed_ms: 0,
        comparisons: Vec::new(),
    };
    if !d.accepts(shape) {
        out.error = Some(format!("shape {shape:?} is not registered for {}", d.id));
        return out;
    }
    let mut case = Case { shape, seed, cfg, params: CaseParams::default() };
    let outcome = (d.check)(&mut case);
    out.params = case.params;
    match outcome {
        Ok(comparisons) if comparisons.is_empty() => out.error = Some("check produced no comparisons".into()),
        Ok(comparisons) => {
            let shown = comparisons.iter().find(|c| !c.equal).unwrap_or(&comparisons[0]);
            out.lhs = Some(shown.lhs.clone());
            out.rhs = Some(shown.rhs.clone());
            out.equal = comparisons.iter().all(|c| c.equal);
            out.comparisons = comparisons;
        }
        Err(e) => out.error = Some(e.to_string()),
    }
    out
}

/// [`evaluate_case`] with wall-clock timing.
pub fn run_case(d: &Descriptor, shape: &[usize], seed: u64, cfg: &Config) -> IdentityCase {
    let start = Instant::now();
    let mut out = evaluate_case(d, shape, seed, cfg);
    out.elapsed_ms = start.elapsed().as_millis() as u64;
    out
}

/// Re-runs a case from its report entry.
pub fn replay(case: &IdentityCase, cfg: &Config) -> Result<IdentityCase> {
    let d = descriptor(&case.identity_id)?;
    Ok(run_case(&d, &case.shape, case.seed, cfg))
}

/// Runs every selected descriptor on every shape within `(a_max, b_max)`
/// accepted by `keep`, `trials` times each.
pub fn run_filtered(
    suite: &str,
    a_max: usize,
    b_max: usize,
    trials: usize,
    seed: u64,
    cfg: &Config,
    keep: impl Fn(&str, &[usize]) -> bool + Sync,
) -> Result<Report> {
    cfg.validate()?;
    let suites = parse_suites(suite)?;
    let mut plan = Vec::new();
    for d in registry().into_iter().filter(|d| suites.contains(&d.suite)) {
        for shape in (d.shapes)(a_max, b_max) {
            if !keep(d.id, &shape) {
                continue;
            }
            for trial in 0..trials {
                plan.push((d, shape.clone(), case_seed(seed, d.id, &shape, trial)));
            }
        }
    }
    let cases: Vec<IdentityCase> = plan.par_iter().map(|(d, shape, s)| run_case(d, shape, *s, cfg)).collect();
    let summary = Report::tally(&cases);
    Ok(Report {
        suite: suite.to_string(),
        config: RunConfig { a_max, b_max, trials, seed, sampler: cfg.clone() },
        cases,
        summary,
    })
}

pub fn run_suite(suite: &str, a_max: usize, b_max: usize, trials: usize, seed: u64, cfg: &Config) -> Result<Report> {
    run_filtered(suite, a_max, b_max, trials, seed, cfg, |_, _| true)
}
