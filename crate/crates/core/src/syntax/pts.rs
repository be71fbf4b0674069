use std::sync::Arc;

use thiserror::Error;

use super::term::Sort;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PtsError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("signature declares no sorts")]
    NoSorts,
    #[error("unknown sort `{0}`")]
    UnknownSort(String),
    #[error("sort `{0}` has no axiom")]
    NotTotal(String),
}

/// Sorts, axioms `s1 : s2` and rules `(s1, s2, s3)` of a pure type system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtsSignature {
    sorts: Vec<Sort>,
    axioms: Vec<(Sort, Sort)>,
    rules: Vec<(Sort, Sort, Sort)>,
}

impl PtsSignature {
    pub fn new(sorts: &[&str], axioms: &[(&str, &str)], rules: &[(&str, &str, &str)]) -> Result<PtsSignature, PtsError> {
        let sorts: Vec<Sort> = sorts.iter().map(|s| Arc::from(*s)).collect();
        let find = |s: &str| -> Result<Sort, PtsError> {
            sorts.iter().find(|x| &***x == s).cloned().ok_or_else(|| PtsError::UnknownSort(s.to_string()))
        };
        let axioms = axioms.iter().map(|(a, b)| Ok((find(a)?, find(b)?))).collect::<Result<Vec<_>, PtsError>>()?;
        let rules =
            rules.iter().map(|(a, b, c)| Ok((find(a)?, find(b)?, find(c)?))).collect::<Result<Vec<_>, PtsError>>()?;
        let sig = PtsSignature { sorts, axioms, rules };
        sig.validate()?;
        Ok(sig)
    }

    fn validate(&self) -> Result<(), PtsError> {
        if self.sorts.is_empty() {
            return Err(PtsError::NoSorts);
        }
        for s in &self.sorts {
            if self.axiom(s).is_none() {
                return Err(PtsError::NotTotal(s.to_string()));
            }
        }
        Ok(())
    }

    /// One sort with `Type : Type` and the single rule over it.
    pub fn type_in_type() -> PtsSignature {
        PtsSignature::new(&["Type"], &[("Type", "Type")], &[("Type", "Type", "Type")]).unwrap()
    }

    /// The calculus of constructions, `Type : Kind`, made axiom-total by a
    /// third sort `Univ` that no rule mentions.
    pub fn coc() -> PtsSignature {
        PtsSignature::new(
            &["Type", "Kind", "Univ"],
            &[("Type", "Kind"), ("Kind", "Univ"), ("Univ", "Univ")],
            &[
                ("Type", "Type", "Type"),
                ("Kind", "Type", "Type"),
                ("Type", "Kind", "Kind"),
                ("Kind", "Kind", "Kind"),
            ],
        )
        .unwrap()
    }

    pub fn sorts(&self) -> &[Sort] {
        &self.sorts
    }

    pub fn is_sort(&self, s: &str) -> bool {
        self.sorts.iter().any(|x| &**x == s)
    }

    /// The sort of the unit type: the first declared sort.
    pub fn base(&self) -> &Sort {
        &self.sorts[0]
    }

    /// The first `s2` with `s1 : s2`.
    pub fn axiom(&self, s1: &str) -> Option<&Sort> {
        self.axioms.iter().find(|(a, _)| &**a == s1).map(|(_, b)| b)
    }

    /// The first `s3` with `(s1, s2, s3)`.
    pub fn rule(&self, s1: &str, s2: &str) -> Option<&Sort> {
        self.rules.iter().find(|(a, b, _)| &**a == s1 && &**b == s2).map(|(_, _, c)| c)
    }

    pub fn sort_names(&self) -> Vec<String> {
        self.sorts.iter().map(|s| s.to_string()).collect()
    }
}

/// Parses a signature:
///
/// ```text
/// sorts: Type, Kind
/// axioms: Type : Kind, Kind : Kind
/// rules: (Type, Type, Type), (Kind, Type, Type)
/// ```
///
/// `builtin: type-in-type` or `builtin: coc` selects a built-in signature.
pub fn load_pts(config: &str) -> Result<PtsSignature, PtsError> {
    let mut sorts: Vec<String> = Vec::new();
    let mut axioms: Vec<(String, String)> = Vec::new();
    let mut rules: Vec<(String, String, String)> = Vec::new();
    for (i, raw) in config.lines().enumerate() {
        let line = raw.split("--").next().unwrap_or("").split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |m: &str| PtsError::Syntax { line: i + 1, message: m.to_string() };
        let (key, rest) = line.split_once(':').ok_or_else(|| err("expected `key: value`"))?;
        match key.trim() {
            "builtin" => {
                return match rest.trim() {
                    "type-in-type" => Ok(PtsSignature::type_in_type()),
                    "coc" => Ok(PtsSignature::coc()),
                    other => Err(err(&format!("unknown builtin `{other}`"))),
                }
            }
            "sorts" => sorts.extend(rest.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty())),
            "axioms" => {
                for ax in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let (a, b) = ax.split_once(':').ok_or_else(|| err("expected `s1 : s2`"))?;
                    axioms.push((a.trim().to_string(), b.trim().to_string()));
                }
            }
            "rules" => {
                let cleaned: String = rest.chars().filter(|c| !c.is_whitespace()).collect();
                for group in cleaned.split(')').map(|g| g.trim_start_matches(',')).filter(|g| !g.is_empty()) {
                    let inner = group.strip_prefix('(').ok_or_else(|| err("expected `(s1, s2, s3)`"))?;
                    let parts: Vec<&str> = inner.split(',').collect();
                    if parts.len() != 3 {
                        return Err(err("a rule names three sorts"));
                    }
                    rules.push((parts[0].to_string(), parts[1].to_string(), parts[2].to_string()));
                }
            }
            other => return Err(err(&format!("unknown key `{other}`"))),
        }
    }
    let s: Vec<&str> = sorts.iter().map(String::as_str).collect();
    let a: Vec<(&str, &str)> = axioms.iter().map(|(x, y)| (x.as_str(), y.as_str())).collect();
    let r: Vec<(&str, &str, &str)> = rules.iter().map(|(x, y, z)| (x.as_str(), y.as_str(), z.as_str())).collect();
    PtsSignature::new(&s, &a, &r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_signature() {
        let sig = load_pts("sorts: Type, Kind\naxioms: Type : Kind, Kind : Kind\nrules: (Type,Type,Type), (Kind, Type, Type)")
            .unwrap();
        assert_eq!(sig.axiom("Type").map(|s| &**s), Some("Kind"));
        assert_eq!(sig.rule("Kind", "Type").map(|s| &**s), Some("Type"));
        assert_eq!(sig.rule("Type", "Kind"), None);
    }

    #[test]
    fn totality_is_required() {
        let err = load_pts("sorts: Type, Kind\naxioms: Type : Kind").unwrap_err();
        assert_eq!(err, PtsError::NotTotal("Kind".into()));
    }

    #[test]
    fn builtins() {
        assert_eq!(load_pts("builtin: coc").unwrap(), PtsSignature::coc());
        assert_eq!(PtsSignature::type_in_type().axiom("Type").map(|s| &**s), Some("Type"));
    }
}
