use std::fmt;

/// A single recorded value in a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fact {
    Int(i64),
    Ints(Vec<i64>),
    Bool(bool),
    Text(String),
    Texts(Vec<String>),
}

impl From<usize> for Fact {
    fn from(x: usize) -> Self {
        Fact::Int(x as i64)
    }
}

impl From<Vec<usize>> for Fact {
    fn from(x: Vec<usize>) -> Self {
        Fact::Ints(x.into_iter().map(|v| v as i64).collect())
    }
}

impl From<bool> for Fact {
    fn from(x: bool) -> Self {
        Fact::Bool(x)
    }
}

impl From<String> for Fact {
    fn from(x: String) -> Self {
        Fact::Text(x)
    }
}

impl From<&str> for Fact {
    fn from(x: &str) -> Self {
        Fact::Text(x.to_string())
    }
}

impl From<Vec<String>> for Fact {
    fn from(x: Vec<String>) -> Self {
        Fact::Texts(x)
    }
}

/// Ordered key/value data attached to a check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Facts(pub Vec<(String, Fact)>);

impl Facts {
    pub fn new() -> Self {
        Facts(Vec::new())
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Fact>) {
        self.0.push((key.into(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Fact> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn int(&self, key: &str) -> Option<i64> {
        match self.get(key) {
            Some(Fact::Int(x)) => Some(*x),
            _ => None,
        }
    }

    pub fn extend(&mut self, other: Facts) {
        self.0.extend(other.0);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    HypothesisUnsatisfied,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::HypothesisUnsatisfied => "hypothesis-unsatisfied",
            Status::Skipped => "skipped",
        })
    }
}
