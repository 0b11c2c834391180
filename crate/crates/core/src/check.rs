//! Pass/fail records shared by every verification routine.

use serde::Serialize;

/// Outcome of one verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Witnesses kept per failing check; further failures are only counted.
pub const MAX_WITNESSES: usize = 8;

/// One named verification with its outcome.
///
/// `anchor` names the mathematical statement being checked; `examined` counts
/// the cases looked at and `failures` how many of them failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub examined: usize,
    pub failures: usize,
    pub witnesses: Vec<String>,
}

impl Check {
    pub fn new(id: &str, anchor: &str) -> Self {
        Check {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: Status::Pass,
            examined: 0,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn skipped(id: &str, anchor: &str, reason: &str) -> Self {
        Check {
            status: Status::Skipped,
            witnesses: vec![reason.to_string()],
            ..Self::new(id, anchor)
        }
    }

    /// Records one examined case; `witness` is only built when `ok` is false.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.examined += 1;
        if !ok {
            self.fail(witness());
        }
    }

    pub fn fail(&mut self, witness: String) {
        self.status = Status::Fail;
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// True iff no check failed (skipped checks do not count as failures).
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}

/// Appends `new` to `into`, folding records that share an id.
pub fn merge_by_id(into: &mut Vec<Check>, new: Vec<Check>) {
    for c in new {
        match into.iter_mut().find(|x| x.id == c.id) {
            None => into.push(c),
            Some(x) => {
                x.examined += c.examined;
                x.failures += c.failures;
                if c.status == Status::Fail {
                    x.status = Status::Fail;
                } else if x.status == Status::Skipped && c.status == Status::Pass {
                    x.status = Status::Pass;
                }
                let room = MAX_WITNESSES.saturating_sub(x.witnesses.len());
                x.witnesses.extend(c.witnesses.into_iter().take(room));
            }
        }
    }
}
