//! End-to-end acceptance run. Prints one line per criterion and exits
//! nonzero if any criterion fails or overruns its time budget.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use gl3_hc::highest::{hc, hc_closed_form_11, hc_difference_11, HcQuery, Rep};
use gl3_hc::izergin::Side;
use gl3_hc::params::{sample_generic, Config};
use gl3_hc::verify::{run_filtered, Report};

const SEED: u64 = 20_240_601;
const POINTS: u64 = 25;

type Outcome = Result<String, String>;

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn points() -> impl Iterator<Item = (Vec<gl3_hc::ParameterSet>, gl3_hc::Rational)> {
    (0..POINTS).map(|i| sample_generic(&[1, 1, 1, 1], &Config { seed: SEED + i, ..Config::default() }).unwrap())
}

fn closed_form() -> Outcome {
    let mut n = 0;
    for (sets, q) in points() {
        let [t, x, s, y] = [&sets[0][0], &sets[1][0], &sets[2][0], &sets[3][0]];
        for side in [Side::L, Side::R] {
            let closed = hc_closed_form_11(side, t, x, s, y, &q).map_err(|e| e.to_string())?;
            for rep in Rep::ALL {
                let query = HcQuery::new(side, sets[0].clone(), sets[1].clone(), sets[2].clone(), sets[3].clone(), q.clone());
                let v = hc(&query.with_rep(rep)).map_err(|e| e.to_string())?;
                if v != closed {
                    return Err(format!("{side} {rep} at t={t} x={x} s={s} y={y} q={q}: {v} != {closed}"));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{POINTS} points, {n} comparisons"))
}

fn difference() -> Outcome {
    for (sets, q) in points() {
        let (lhs, rhs) = hc_difference_11(&sets[0][0], &sets[1][0], &sets[2][0], &sets[3][0], &q).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("{lhs} != {rhs} at {sets:?}, q={q}"));
        }
    }
    Ok(format!("{POINTS} points"))
}

fn summarize(report: Report) -> Outcome {
    let s = report.summary;
    if report.passed() && !report.cases.is_empty() {
        return Ok(format!("{} cases", s.pass));
    }
    let first = report.cases.iter().find(|c| c.error.is_some() || !c.equal);
    Err(format!(
        "{} pass, {} fail, {} error; first: {}",
        s.pass,
        s.fail,
        s.error,
        first.map(|c| format!("{} {:?} seed {} {:?}", c.identity_id, c.shape, c.seed, c.error)).unwrap_or_default()
    ))
}

fn suite(name: &str, a_max: usize, b_max: usize, trials: usize, keep: impl Fn(&str, &[usize]) -> bool + Sync) -> Outcome {
    let report = run_filtered(name, a_max, b_max, trials, SEED, &Config::default(), keep).map_err(|e| e.to_string())?;
    summarize(report)
}

fn rep_equivalence() -> Outcome {
    suite("hc-reps", 5, 5, POINTS as usize, |id, shape| id == "HC_REP_AGREE" && shape[0] + shape[1] <= 5)
}

fn izergin() -> Outcome {
    suite("izergin", 4, 2, 10, |_, _| true)
}

fn symmetries() -> Outcome {
    suite("symmetries", 3, 3, 10, |id, _| !matches!(id, "Z_INF" | "Z_ZERO_VANISH"))
}

fn residues() -> Outcome {
    suite("residues", 2, 2, 10, |_, _| true)
}

fn reductions() -> Outcome {
    suite("reductions", 3, 3, 10, |_, _| true)
}

fn twins() -> Outcome {
    suite("twins", 3, 3, 10, |_, _| true)
}

fn prop51() -> Outcome {
    suite("prop51", 2, 2, 10, |_, _| true)
}

fn scalar() -> Outcome {
    suite("scalar", 2, 2, 10, |_, _| true)
}

fn asymptotics() -> Outcome {
    suite("symmetries", 2, 2, 10, |id, _| matches!(id, "Z_INF" | "Z_ZERO_VANISH"))
}

fn is_rational_text(v: &serde_json::Value) -> bool {
    let Some(s) = v.as_str() else { return false };
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    digits(num.strip_prefix('-').unwrap_or(num)) && digits(den)
}

fn check_schema(v: &serde_json::Value) -> Result<(), String> {
    for key in ["suite", "config", "cases", "summary"] {
        v.get(key).ok_or(format!("missing {key}"))?;
    }
    let cases = v["cases"].as_array().ok_or("cases is not an array")?;
    for c in cases {
        for key in ["identity_id", "shape", "seed", "params", "lhs", "rhs", "equal", "error", "elapsed_ms"] {
            c.get(key).ok_or(format!("case missing {key}"))?;
        }
        if !c["identity_id"].is_string() || !c["shape"].is_array() || !c["seed"].is_u64() || !c["equal"].is_boolean() {
            return Err(format!("bad field types in {c}"));
        }
        for key in ["lhs", "rhs"] {
            if !c[key].is_null() && !is_rational_text(&c[key]) {
                return Err(format!("{key} is not p/q text: {}", c[key]));
            }
        }
    }
    let report: Report = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
    if Report::tally(&report.cases) != report.summary {
        return Err("summary disagrees with case tallies".into());
    }
    Ok(())
}

fn end_to_end() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().join("report.json");
    let status = Command::new(env!("CARGO_BIN_EXE_gl3hc"))
        .args(["verify", "--suite", "all", "--a-max", "2", "--b-max", "2", "--trials", "10", "--seed", "42", "--out"])
        .arg(&out)
        .status()
        .map_err(|e| e.to_string())?;
    if !status.success() {
        return Err(format!("exit status {status}"));
    }
    let text = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    check_schema(&v)?;
    Ok(format!("exit 0, {} cases, schema valid", v["cases"].as_array().map_or(0, Vec::len)))
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { name: "closed form at a = b = 1, every representation", budget: secs(1), run: closed_form },
        Criterion { name: "left/right difference at a = b = 1", budget: secs(1), run: difference },
        Criterion { name: "six representations agree, a + b <= 5", budget: secs(60), run: rep_equivalence },
        Criterion { name: "Izergin determinant properties, k <= 4, m <= 2", budget: secs(30), run: izergin },
        Criterion { name: "symmetries and boundary values, a, b <= 3", budget: secs(30), run: symmetries },
        Criterion { name: "residues and multiple-pole limits, a, b <= 2", budget: secs(60), run: residues },
        Criterion { name: "reductions at shifted coincidences, a, b <= 3", budget: secs(30), run: reductions },
        Criterion { name: "three-determinant twin sums, a, b <= 3", budget: secs(30), run: twins },
        Criterion { name: "two-set summation identity, a, b <= 2", budget: secs(60), run: prop51 },
        Criterion { name: "scalar product corners and coefficients, a, b <= 2", budget: secs(30), run: scalar },
        Criterion { name: "behaviour at infinity and at zero, a, b <= 2", budget: secs(10), run: asymptotics },
        Criterion { name: "verify --suite all end to end", budget: secs(300), run: end_to_end },
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.budget => (true, d),
            Ok(d) => (false, format!("{d}; over time budget")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} {:>2}. {} | tolerance: exact | {:.2} s of {} s | {}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            c.name,
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            detail
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
