//! Located validation results.
//!
//! Every validator enumerates axiom instances and records each one here. A
//! check id that never failed renders as a single `PASS` line carrying the
//! number of instances examined; every failing instance renders as its own
//! `FAIL` line with its witness indices.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

/// One rendered line of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub check: String,
    pub status: Status,
    pub witness: Vec<String>,
    pub equation: String,
}

#[derive(Debug, Clone, Default)]
struct Tally {
    equation: String,
    instances: usize,
    failures: Vec<Vec<String>>,
    notes: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    checks: BTreeMap<String, Tally>,
}

/// Builds a witness list from `key=value` pairs.
#[macro_export]
macro_rules! witness {
    ($($k:ident = $v:expr),* $(,)?) => {
        vec![$(format!("{}={}", stringify!($k), $v)),*]
    };
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one instance of `check`. Failing instances keep their witness.
    pub fn record(&mut self, check: &str, equation: &str, ok: bool, witness: Vec<String>) {
        let t = self.tally(check, equation);
        t.instances += 1;
        if !ok {
            t.failures.push(witness);
        }
    }

    /// Records an equation instance; an evaluation error counts as a failure.
    pub fn record_eq<T: PartialEq, E>(
        &mut self,
        check: &str,
        equation: &str,
        lhs: Result<T, E>,
        rhs: Result<T, E>,
        witness: Vec<String>,
    ) {
        let ok = matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b);
        self.record(check, equation, ok, witness);
    }

    /// Records an informational note that does not affect the pass flag.
    pub fn note(&mut self, check: &str, equation: &str, note: impl Into<String>) {
        self.tally(check, equation).notes.push(note.into());
    }

    fn tally(&mut self, check: &str, equation: &str) -> &mut Tally {
        let t = self.checks.entry(check.to_string()).or_default();
        if t.equation.is_empty() {
            t.equation = equation.to_string();
        }
        t
    }

    /// Merges `other` with every check id prefixed by `section.`.
    pub fn absorb(&mut self, section: &str, other: ValidationReport) {
        for (id, t) in other.checks {
            let key = if section.is_empty() { id } else { format!("{section}.{id}") };
            let dst = self.checks.entry(key).or_default();
            if dst.equation.is_empty() {
                dst.equation = t.equation;
            }
            dst.instances += t.instances;
            dst.failures.extend(t.failures);
            dst.notes.extend(t.notes);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.values().all(|t| t.failures.is_empty())
    }

    /// Failing entries only; empty exactly when [`passed`](Self::passed).
    pub fn failures(&self) -> Vec<Entry> {
        self.entries().into_iter().filter(|e| e.status == Status::Fail).collect()
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, t)| !t.failures.is_empty())
            .map(|(k, _)| k.as_str())
            .collect()
    }

    pub fn has_check(&self, check: &str) -> bool {
        self.checks.contains_key(check)
    }

    pub fn instances(&self, check: &str) -> usize {
        self.checks.get(check).map_or(0, |t| t.instances)
    }

    pub fn notes(&self, check: &str) -> Vec<String> {
        self.checks.get(check).map(|t| t.notes.clone()).unwrap_or_default()
    }

    /// Entries in canonical order: by check id, then status, then witness.
    pub fn entries(&self) -> Vec<Entry> {
        let mut out = Vec::new();
        for (id, t) in &self.checks {
            if t.failures.is_empty() && t.instances > 0 {
                out.push(Entry {
                    check: id.clone(),
                    status: Status::Pass,
                    witness: vec![format!("instances={}", t.instances)],
                    equation: t.equation.clone(),
                });
            }
            let mut fails = t.failures.clone();
            fails.sort();
            fails.dedup();
            out.extend(fails.into_iter().map(|w| Entry {
                check: id.clone(),
                status: Status::Fail,
                witness: w,
                equation: t.equation.clone(),
            }));
            let mut notes = t.notes.clone();
            notes.sort();
            notes.dedup();
            out.extend(notes.into_iter().map(|n| Entry {
                check: id.clone(),
                status: Status::Info,
                witness: vec![n],
                equation: t.equation.clone(),
            }));
        }
        out
    }

    /// Text form, one `CHECK <id> PASS|FAIL|INFO [witness ...]` line per entry.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for e in self.entries() {
            s.push_str(&format!("CHECK {} {}", e.check, e.status));
            for w in &e.witness {
                s.push(' ');
                s.push_str(w);
            }
            if e.status == Status::Fail {
                s.push_str(&format!(" # {}", e.equation));
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_and_fail_lines_are_canonical() {
        let mut r = ValidationReport::new();
        r.record("b.assoc", "(fg)h = f(gh)", false, witness!(a = 2, b = 0));
        r.record("a.unit", "1f = f", true, vec![]);
        r.record("b.assoc", "(fg)h = f(gh)", false, witness!(a = 1, b = 0));
        r.record("b.assoc", "(fg)h = f(gh)", true, vec![]);
        assert!(!r.passed());
        let text = r.render();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "CHECK a.unit PASS instances=1");
        assert!(lines[1].starts_with("CHECK b.assoc FAIL a=1 b=0"));
        assert!(lines[2].starts_with("CHECK b.assoc FAIL a=2 b=0"));
        assert_eq!(r.failed_checks(), vec!["b.assoc"]);
    }

    #[test]
    fn notes_do_not_fail() {
        let mut r = ValidationReport::new();
        r.note("orientation", "which side holds", "mirror");
        assert!(r.passed());
        assert!(r.render().contains("CHECK orientation INFO mirror"));
    }

    #[test]
    fn absorb_prefixes_sections() {
        let mut inner = ValidationReport::new();
        inner.record("x", "eq", true, vec![]);
        let mut outer = ValidationReport::new();
        outer.absorb("base", inner);
        assert!(outer.has_check("base.x"));
    }
}
