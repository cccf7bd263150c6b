use std::fmt;

/// A concrete counterexample: the indices involved plus a human-readable note.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub values: Vec<usize>,
    pub detail: String,
}

impl Witness {
    pub fn new(values: Vec<usize>, detail: impl Into<String>) -> Self {
        Witness { values, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Outcome of a verification suite, one entry per law.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn record(&mut self, name: impl Into<String>, witness: Option<Witness>) {
        self.checks.push(Check { name: name.into(), witness });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// True if the named check exists and failed.
    pub fn failed(&self, name: &str) -> bool {
        self.check(name).map(|c| !c.passed()).unwrap_or(false)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: PASS", self.name),
            Some(w) => write!(f, "{}: FAIL witness {:?} {}", self.name, w.values, w.detail),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{}", c)?;
        }
        Ok(())
    }
}
