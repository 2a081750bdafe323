use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::{RunConfig, Session};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    /// The statement being checked, in words.
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    /// `None` for exact comparisons and for non-finite values.
    pub residual: Option<f64>,
    pub pass: bool,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, expected: impl ToString, computed: impl ToString, residual: Option<f64>, pass: bool) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            residual: residual.filter(|r| r.is_finite()),
            pass,
        }
    }

    /// Exact comparison; passes iff the two render identically.
    pub fn exact(id: impl Into<String>, anchor: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Self {
        let (e, c) = (expected.to_string(), computed.to_string());
        let pass = e == c;
        Check::new(id, anchor, e, c, None, pass)
    }

    /// `|computed - expected| < tolerance`.
    pub fn close(id: impl Into<String>, anchor: impl Into<String>, expected: f64, computed: f64, tolerance: f64) -> Self {
        let r = (computed - expected).abs();
        Check::new(id, anchor, num(expected), num(computed), Some(r), r < tolerance)
    }
}

/// Shortest round-trip rendering of a double.
pub(crate) fn num(x: f64) -> String {
    format!("{x:e}")
}

#[derive(Clone, Debug, Serialize)]
pub struct Environment {
    pub precision_bits: usize,
    pub cutoffs: Vec<usize>,
    pub double_cutoffs: Vec<usize>,
    pub tolerance: Option<f64>,
    pub seed: u64,
    pub version: String,
}

impl Environment {
    pub fn from_config(c: &RunConfig) -> Self {
        Environment {
            precision_bits: c.precision_bits,
            cutoffs: c.cutoffs.clone(),
            double_cutoffs: zetaseries::Ladder::default_for(2).ks().to_vec(),
            tolerance: c.tolerance,
            seed: c.seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub environment: Environment,
    /// Left out of the JSON unless asked for, so reports are byte-identical across runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
    /// Command-specific payload.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, Value>,
}

impl SuiteReport {
    pub fn new(suite: &str, session: &Session) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: vec![],
            environment: Environment::from_config(&session.config),
            wall_time_s: None,
            data: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn put<T: Serialize>(&mut self, key: &str, value: T) {
        let v = serde_json::to_value(value).expect("report data serializes");
        self.data.insert(key.to_string(), v);
    }

    /// Sorts checks by id; ids must be unique.
    pub fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        debug_assert!(self.checks.windows(2).all(|w| w[0].id != w[1].id), "duplicate check id");
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Checks whose id satisfies `pred`.
    pub fn select<'a>(&'a self, pred: impl Fn(&str) -> bool + 'a) -> impl Iterator<Item = &'a Check> {
        self.checks.iter().filter(move |c| pred(&c.id))
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn summary(&self) -> String {
        let failed = self.failures().count();
        format!("{}: {} checks, {} failed", self.suite, self.checks.len(), failed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let w = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.summary());
        if let Some(t) = self.wall_time_s {
            let _ = writeln!(s, "wall time {t:.2} s");
        }
        let _ = writeln!(s, "{:<4}  {:<w$}  {:>10}  {:<24}  computed", "", "id", "residual", "expected");
        for c in &self.checks {
            let r = c.residual.map_or("-".to_string(), |r| format!("{r:.3e}"));
            let _ = writeln!(s, "{:<4}  {:<w$}  {:>10}  {:<24}  {}", if c.pass { "PASS" } else { "FAIL" }, c.id, r, c.expected, c.computed);
            if !c.pass {
                let _ = writeln!(s, "      {:<w$}  ({})", "", c.anchor);
            }
        }
        s
    }
}
