use std::fmt;
use std::time::Duration;

/// One named check in a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of a verification command. `Display` prints only the
/// deterministic part; the elapsed time is reported separately.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub parameters: Vec<(String, String)>,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl RunReport {
    pub fn new(command: &str, parameters: Vec<(String, String)>) -> Self {
        RunReport {
            command: command.to_string(),
            parameters,
            checks: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn record(&mut self, name: &str, result: Result<String, String>) {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn elapsed_ms(&self) -> u128 {
        self.elapsed.as_millis()
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.command)?;
        for (k, v) in &self.parameters {
            write!(f, " {k}={v}")?;
        }
        writeln!(f)?;
        for c in &self.checks {
            writeln!(
                f,
                "{} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{ok}/{} checks passed", self.checks.len())
    }
}
