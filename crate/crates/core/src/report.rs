//! Verification reports shared by the suites and the CLI.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of one check. `Info` marks comparisons that are reported but
/// never decide success.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Info => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs: Value,
    pub expected: Value,
    pub got: Value,
}

impl Failure {
    pub fn new(inputs: impl Serialize, expected: impl Serialize, got: impl Serialize) -> Self {
        Failure {
            inputs: to_value(inputs),
            expected: to_value(expected),
            got: to_value(got),
        }
    }
}

pub(crate) fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub name: String,
    pub kind: String,
    pub seed: u64,
    pub trials: u64,
    pub verdict: Verdict,
    pub failures: Vec<Failure>,
    /// Counterexamples whose existence is the expected outcome.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<crate::theorems::Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl TheoremReport {
    pub fn new(name: impl Into<String>, kind: impl fmt::Display, seed: u64, trials: u64) -> Self {
        TheoremReport {
            name: name.into(),
            kind: kind.to_string(),
            seed,
            trials,
            verdict: Verdict::Pass,
            failures: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    /// Records a failure and flips the verdict.
    pub fn fail(&mut self, f: Failure) {
        self.failures.push(f);
        self.verdict = Verdict::Fail;
    }

    /// Records a failure with only a message.
    pub fn fail_msg(&mut self, msg: impl Into<String>) {
        let msg = msg.into();
        self.fail(Failure::new(Value::Null, Value::Null, msg));
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    /// Keeps the JSON small when a check fails on many trials.
    pub fn cap_failures(&mut self, max: usize) {
        if self.failures.len() > max {
            let dropped = self.failures.len() - max;
            self.failures.truncate(max);
            self.note(format!("{dropped} further failures omitted"));
        }
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} ({}, seed {}, {} trials): {} failure(s)",
            self.verdict,
            self.name,
            self.kind,
            self.seed,
            self.trials,
            self.failures.len()
        )?;
        if !self.witnesses.is_empty() {
            write!(f, ", {} witness(es)", self.witnesses.len())?;
        }
        for n in &self.notes {
            write!(f, "\n    note: {n}")?;
        }
        for w in &self.witnesses {
            write!(f, "\n    witness: {w}")?;
        }
        for fl in self.failures.iter().take(3) {
            write!(
                f,
                "\n    failure: inputs {} expected {} got {}",
                fl.inputs, fl.expected, fl.got
            )?;
        }
        Ok(())
    }
}
