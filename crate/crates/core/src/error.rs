//! Type errors shared by every checker.

use std::fmt;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    VarGradeTooHigh,
    TypeMismatch,
    NotInFragment,
    UnsealClearance,
    LevelAboveC,
    NotAType,
    ConversionFailed,
    FuelExhausted,
    NoAxiom,
    NoRule,
    UnboundIndex,
}

/// A failed premise: the rule it belongs to, where in the term it failed,
/// and what was expected and found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeError {
    pub kind: ErrorKind,
    pub rule: &'static str,
    /// Child positions from the root of the checked term to the subterm.
    pub location: Vec<u8>,
    pub expected: Option<String>,
    pub found: Option<String>,
    pub message: String,
}

impl TypeError {
    pub fn new(kind: ErrorKind, rule: &'static str, message: impl Into<String>) -> TypeError {
        TypeError { kind, rule, location: Vec::new(), expected: None, found: None, message: message.into() }
    }

    pub fn expected(mut self, e: impl Into<String>) -> TypeError {
        self.expected = Some(e.into());
        self
    }

    pub fn found(mut self, f: impl Into<String>) -> TypeError {
        self.found = Some(f.into());
        self
    }

    pub fn at(mut self, path: &[u8]) -> TypeError {
        if self.location.is_empty() {
            self.location = path.to_vec();
        }
        self
    }

    pub fn location_string(&self) -> String {
        if self.location.is_empty() {
            "root".to_string()
        } else {
            self.location.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
        }
    }
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in {} at {}: {}", self.kind, self.rule, self.location_string(), self.message)?;
        if let Some(e) = &self.expected {
            write!(f, "\n  expected: {e}")?;
        }
        if let Some(x) = &self.found {
            write!(f, "\n  found:    {x}")?;
        }
        Ok(())
    }
}

impl std::error::Error for TypeError {}
