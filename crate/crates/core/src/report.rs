//! Structured pass/fail records shared by every verification routine.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

/// A loosely typed value recorded in a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Big(BigInt),
    Text(String),
    List(Vec<Value>),
    Map(Vec<(String, Value)>),
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Int(x as i64)
    }
}

impl From<i64> for Value {
    fn from(x: i64) -> Self {
        Value::Int(x)
    }
}

impl From<BigUint> for Value {
    fn from(x: BigUint) -> Self {
        Value::from(BigInt::from(x))
    }
}

/// Integers that fit in `i64` are always stored as [`Value::Int`], so equal
/// integers compare equal regardless of how they were computed.
impl From<BigInt> for Value {
    fn from(x: BigInt) -> Self {
        match x.to_i64() {
            Some(v) => Value::Int(v),
            None => Value::Big(x),
        }
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Self {
        Value::List(v.into_iter().map(Into::into).collect())
    }
}

/// One sub-check: an expected and an actual value that must agree exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    /// Extra named quantities shown alongside the comparison.
    pub details: Vec<(String, Value)>,
    /// Counterexample or witness data, typically attached on failure.
    pub payload: Option<Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl Into<Value>, actual: impl Into<Value>) -> Self {
        Check { name: name.into(), expected: expected.into(), actual: actual.into(), details: Vec::new(), payload: None }
    }

    pub fn detail(mut self, key: impl Into<String>, value: impl Into<Value>) -> Self {
        self.details.push((key.into(), value.into()));
        self
    }

    pub fn with_payload(mut self, payload: impl Into<Value>) -> Self {
        self.payload = Some(payload.into());
        self
    }

    /// Exact agreement, no tolerance.
    pub fn pass(&self) -> bool {
        self.expected == self.actual
    }
}

/// Overall outcome of a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Every executed check passed but part of the criterion is not checked.
    Partial,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Partial => "PARTIAL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub params: Vec<(String, Value)>,
    pub items: Vec<Check>,
    /// Marks a report whose checks cover only part of the criterion.
    pub partial: bool,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>) -> Self {
        VerificationReport { check: check.into(), params: Vec::new(), items: Vec::new(), partial: false }
    }

    pub fn param(mut self, key: impl Into<String>, value: impl Into<Value>) -> Self {
        self.params.push((key.into(), value.into()));
        self
    }

    pub fn push(&mut self, item: Check) {
        self.items.push(item);
    }

    pub fn item(&self, name: &str) -> Option<&Check> {
        self.items.iter().find(|c| c.name == name)
    }

    /// `true` iff every item passes.
    pub fn pass(&self) -> bool {
        self.items.iter().all(Check::pass)
    }

    pub fn verdict(&self) -> Verdict {
        if !self.pass() {
            Verdict::Fail
        } else if self.partial {
            Verdict::Partial
        } else {
            Verdict::Pass
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.items.iter().filter(|c| !c.pass())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_is_exact_equality() {
        let mut r = VerificationReport::new("demo").param("n", 4usize);
        r.push(Check::new("a", 36usize, 36usize));
        assert_eq!(r.verdict(), Verdict::Pass);
        r.push(Check::new("b", 24usize, 23usize));
        assert_eq!(r.verdict(), Verdict::Fail);
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn partial_only_when_passing() {
        let mut r = VerificationReport::new("demo");
        r.partial = true;
        r.push(Check::new("a", true, true));
        assert_eq!(r.verdict(), Verdict::Partial);
        r.push(Check::new("b", true, false));
        assert_eq!(r.verdict(), Verdict::Fail);
    }
}
