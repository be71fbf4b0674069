use std::fmt::Write as _;
use std::time::Duration;

/// One failing instance, already minimised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Trial index, or position in the enumeration for exhaustive suites.
    pub trial: u64,
    pub property: String,
    /// Printed terms making up the instance.
    pub terms: Vec<String>,
    pub detail: String,
}

/// What one trial of a suite concluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Counterexample),
    /// The instance did not meet the property's precondition.
    Skip,
    /// The generator gave up.
    Stuck,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub suite: String,
    pub fragment: String,
    pub seed: u64,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub stuck: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Extra suite-specific figures, in insertion order.
    pub stats: Vec<(String, String)>,
    pub wall: Duration,
}

/// Counterexamples kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 5;

impl Report {
    pub fn new(suite: &str, fragment: &str, seed: u64) -> Report {
        Report { suite: suite.to_string(), fragment: fragment.to_string(), seed, ..Report::default() }
    }

    pub fn record(&mut self, outcome: Outcome) {
        self.trials += 1;
        match outcome {
            Outcome::Pass => self.passed += 1,
            Outcome::Skip => self.skipped += 1,
            Outcome::Stuck => self.stuck += 1,
            Outcome::Fail(cx) => {
                self.failed += 1;
                if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                    self.counterexamples.push(cx);
                }
            }
        }
    }

    pub fn stat(&mut self, key: &str, value: impl ToString) {
        self.stats.push((key.to_string(), value.to_string()));
    }

    pub fn get_stat(&self, key: &str) -> Option<&str> {
        self.stats.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// Folds another report into this one, keeping this one's name.
    pub fn absorb(&mut self, other: Report) {
        self.trials += other.trials;
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        self.stuck += other.stuck;
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples.extend(other.counterexamples.into_iter().take(room));
        self.stats.push((format!("{}.passed", other.suite), other.passed.to_string()));
        self.stats.push((format!("{}.skipped", other.suite), other.skipped.to_string()));
        for (k, v) in other.stats {
            self.stats.push((format!("{}.{k}", other.suite), v));
        }
        self.wall += other.wall;
    }

    /// The plain-text summary. Wall time is left out so that equal runs
    /// print equal reports.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let verdict = if self.ok() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{verdict} {} [{}] seed={} trials={} passed={} failed={} skipped={} stuck={}",
            self.suite, self.fragment, self.seed, self.trials, self.passed, self.failed, self.skipped, self.stuck
        );
        for (k, v) in &self.stats {
            let _ = writeln!(out, "  {k}: {v}");
        }
        for cx in &self.counterexamples {
            let _ = writeln!(out, "  counterexample (trial {}): {}", cx.trial, cx.property);
            for t in &cx.terms {
                let _ = writeln!(out, "    {t}");
            }
            if !cx.detail.is_empty() {
                let _ = writeln!(out, "    {}", cx.detail);
            }
        }
        out
    }

    /// Summary plus wall time.
    pub fn render_timed(&self) -> String {
        format!("{}  wall: {:.3}s\n", self.render().trim_end(), self.wall.as_secs_f64())
    }

    /// `key = value` lines, one fact per line, for machine consumption.
    pub fn detail(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: &dyn std::fmt::Display| {
            let _ = writeln!(out, "{k} = {v}");
        };
        kv("suite", &self.suite);
        kv("fragment", &self.fragment);
        kv("seed", &self.seed);
        kv("trials", &self.trials);
        kv("passed", &self.passed);
        kv("failed", &self.failed);
        kv("skipped", &self.skipped);
        kv("stuck", &self.stuck);
        for (k, v) in &self.stats {
            kv(&format!("stat.{k}"), v);
        }
        for (i, cx) in self.counterexamples.iter().enumerate() {
            kv(&format!("cx.{i}.trial"), &cx.trial);
            kv(&format!("cx.{i}.property"), &cx.property);
            for (j, t) in cx.terms.iter().enumerate() {
                kv(&format!("cx.{i}.term.{j}"), t);
            }
            kv(&format!("cx.{i}.detail"), &cx.detail);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_omits_wall_time() {
        let mut a = Report::new("x", "sdc", 1);
        a.record(Outcome::Pass);
        let mut b = a.clone();
        b.wall = Duration::from_secs(3);
        assert_eq!(a.render(), b.render());
        assert!(a.render().starts_with("PASS x [sdc]"));
        assert!(a.detail().contains("passed = 1\n"));
    }
}
