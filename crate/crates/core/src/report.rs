//! Check outcomes and the key/value report printed by the command line.

use std::fmt::Write as _;

/// Outcome of a check on well-formed input. Failures carry a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Pass,
    Fail(W),
}

impl<W> Verdict<W> {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Pass => Verdict::Pass,
            Verdict::Fail(w) => Verdict::Fail(f(w)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Machine,
}

/// Ordered key/value lines. Plain output is `key: value`, machine output is
/// `key=value`. Order of insertion is the order of output.
#[derive(Clone, Debug, Default)]
pub struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.lines.push((key.into(), value.to_string()));
    }

    pub fn verdict<W>(&mut self, key: &str, v: &Verdict<W>, describe: impl Fn(&W) -> String) {
        match v {
            Verdict::Pass => self.push(key, "pass"),
            Verdict::Fail(w) => self.push(key, format!("fail {}", describe(w))),
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for (k, v) in &self.lines {
            match format {
                Format::Plain => writeln!(out, "{k}: {v}"),
                Format::Machine => writeln!(out, "{k}={v}"),
            }
            .expect("writing to a String");
        }
        out
    }
}
