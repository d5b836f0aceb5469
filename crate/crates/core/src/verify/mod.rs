//! Batch verification: every check runs exactly and lands in a versioned report.
//!
//! Randomized checks draw from a ChaCha8 stream keyed by the seed and the check id,
//! so a failing check can be rerun alone with the same samples.

mod random;
mod suites;

pub use random::{length_oracle, random_hecke, random_vector, sample_perms, short_perms};

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::check::Check;
use crate::error::{catch, Error, Result};

/// Largest rank accepted by the verifier.
pub const MAX_RANK: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Hecke,
    Polyrep,
    Springer,
    Theta,
    MainTheorem,
    Orbits,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Hecke, Suite::Polyrep, Suite::Springer, Suite::Theta, Suite::MainTheorem, Suite::Orbits];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hecke => "hecke",
            Suite::Polyrep => "polyrep",
            Suite::Springer => "springer",
            Suite::Theta => "theta",
            Suite::MainTheorem => "main-theorem",
            Suite::Orbits => "orbits",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "convention-A")]
    ConventionA,
    #[serde(rename = "convention-B")]
    ConventionB,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ConventionA => "convention-A",
            Status::ConventionB => "convention-B",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub label: String,
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub m_range: [usize; 2],
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub m_range: (usize, usize),
    pub seed: u64,
    /// Record wall-clock time per check; reports then differ between runs.
    pub timings: bool,
    /// Orbits only: fixed `n` instead of every `n ≤ m`.
    pub n: Option<usize>,
    /// Orbits only: fixed `(N, r)` instead of every pair in `[0, 3]²`.
    pub bounds: Option<(i32, i32)>,
}

impl VerifyConfig {
    pub fn new(suite: Suite, m_range: (usize, usize)) -> Self {
        VerifyConfig { suite, m_range, seed: 0, timings: false, n: None, bounds: None }
    }

    fn validate(&self) -> Result<()> {
        let (a, b) = self.m_range;
        if a == 0 || a > b {
            return Err(Error::Invalid(format!("empty or invalid m range {a}..{b}")));
        }
        if b > MAX_RANK {
            return Err(Error::Invalid(format!("m = {b} exceeds the limit {MAX_RANK}")));
        }
        if let Some(n) = self.n {
            if n == 0 || n > a {
                return Err(Error::Invalid(format!("n = {n} must satisfy 1 ≤ n ≤ m for every m in {a}..{b}")));
            }
        }
        if let Some((big_n, r)) = self.bounds {
            if big_n < 0 || r < 0 || big_n + r == 0 {
                return Err(Error::Invalid(format!("bounds ({big_n}, {r}) must be nonnegative with N + r > 0")));
            }
        }
        if self.suite != Suite::Orbits && (self.n.is_some() || self.bounds.is_some()) {
            return Err(Error::Invalid("--n and --bounds apply to the orbits suite only".into()));
        }
        Ok(())
    }
}

/// Outcome of a single check before bookkeeping.
#[derive(Clone, Debug)]
pub(crate) struct Outcome {
    status: Status,
    value: Option<String>,
    counterexample: Option<String>,
}

impl Outcome {
    pub(crate) fn holds(ok: bool) -> Self {
        Outcome { status: if ok { Status::Pass } else { Status::Fail }, value: None, counterexample: None }
    }

    pub(crate) fn status(status: Status) -> Self {
        Outcome { status, value: None, counterexample: None }
    }

    pub(crate) fn value(mut self, v: impl ToString) -> Self {
        self.value = Some(v.to_string());
        self
    }

    /// Attach a witness, kept only when the check failed.
    pub(crate) fn witness(mut self, w: impl FnOnce() -> String) -> Self {
        if self.status == Status::Fail {
            self.counterexample = Some(w());
        }
        self
    }

    /// All checks must hold; failing labels become the counterexample.
    pub(crate) fn all(checks: &[Check]) -> Self {
        let failing: Vec<&str> = checks.iter().filter(|c| !c.holds).map(|c| c.label.as_str()).collect();
        let mut out = Outcome::holds(failing.is_empty()).value(format!("{} identities", checks.len()));
        if !failing.is_empty() {
            out.counterexample = Some(failing.join("; "));
        }
        out
    }

    /// Equality of two printable values, with both sides as the witness.
    pub(crate) fn equal<T: PartialEq + std::fmt::Display>(got: &T, expected: &T) -> Self {
        Outcome::holds(got == expected).witness(|| format!("got {got}, expected {expected}"))
    }
}

pub(crate) struct Runner {
    seed: u64,
    timings: bool,
    checks: Vec<CheckResult>,
}

impl Runner {
    /// Run one check; errors from the computation become a failing status.
    pub(crate) fn run(
        &mut self,
        id: String,
        label: impl Into<String>,
        anchor: &str,
        f: impl FnOnce(&mut ChaCha8Rng) -> Result<Outcome>,
    ) {
        let mut rng = rng_for(self.seed, &id);
        let start = Instant::now();
        let outcome = catch(|| f(&mut rng)).unwrap_or_else(|e| Outcome {
            status: Status::Fail,
            value: None,
            counterexample: Some(format!("error: {e}")),
        });
        let elapsed_ms = self.timings.then(|| start.elapsed().as_millis() as u64);
        self.checks.push(CheckResult {
            id,
            label: label.into(),
            anchor: anchor.to_string(),
            status: outcome.status,
            value: outcome.value,
            counterexample: outcome.counterexample,
            elapsed_ms,
        });
    }
}

/// 64-bit FNV-1a, used to key random streams by check id.
pub fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// The random stream for one check.
pub fn rng_for(seed: u64, id: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(fnv1a(id));
    rng
}

pub fn run_suite(cfg: &VerifyConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let mut runner = Runner { seed: cfg.seed, timings: cfg.timings, checks: Vec::new() };
    for m in cfg.m_range.0..=cfg.m_range.1 {
        match cfg.suite {
            Suite::Hecke => suites::hecke(&mut runner, m),
            Suite::Polyrep => suites::polyrep(&mut runner, m),
            Suite::Springer => suites::springer(&mut runner, m)?,
            Suite::Theta => suites::theta(&mut runner, m)?,
            Suite::MainTheorem => suites::main_theorem(&mut runner, m)?,
            Suite::Orbits => suites::orbits(&mut runner, m, cfg.n, cfg.bounds),
        }
    }
    let passed = runner.checks.iter().all(|c| c.status != Status::Fail);
    Ok(VerificationReport {
        schema: 1,
        suite: cfg.suite.name().to_string(),
        m_range: [cfg.m_range.0, cfg.m_range.1],
        seed: cfg.seed,
        passed,
        checks: runner.checks,
    })
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Text projection of the JSON report.
    pub fn render_text(&self) -> String {
        let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        let mut out = format!(
            "suite {} m={}..{} seed={}: {} ({} checks, {} failed)\n",
            self.suite,
            self.m_range[0],
            self.m_range[1],
            self.seed,
            if self.passed { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed
        );
        for c in &self.checks {
            let _ = write!(out, "{:<12} {}  {}", c.status.name(), c.id, c.label);
            if let Some(v) = &c.value {
                let _ = write!(out, " = {v}");
            }
            if let Some(ms) = c.elapsed_ms {
                let _ = write!(out, " [{ms} ms]");
            }
            out.push('\n');
            if let Some(w) = &c.counterexample {
                let _ = writeln!(out, "    {w}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests;
