//! Finite label lattices.
//!
//! A lattice is loaded from a tiny line-oriented config, closed under
//! reflexivity and transitivity, and then checked exhaustively: every pair
//! must have a unique least upper bound and greatest lower bound.

use std::fmt;

use thiserror::Error;

/// An element of a [`Lattice`], identified by its index in the element table.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Grade(u8);

impl Grade {
    pub const fn from_id(id: u8) -> Grade {
        Grade(id)
    }

    pub const fn id(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("lattice has no elements")]
    Empty,
    #[error("too many elements ({0}); at most 64 are supported")]
    TooLarge(usize),
    #[error("duplicate element `{0}`")]
    Duplicate(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("`{0}` and `{1}` are ordered both ways but are distinct")]
    NotAntisymmetric(String, String),
    #[error("`{a}` and `{b}` have no unique {kind}")]
    MissingBound { a: String, b: String, kind: &'static str },
}

/// A finite lattice with a designated compile-time grade `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    names: Vec<String>,
    leq: Vec<bool>,
    join: Vec<Grade>,
    meet: Vec<Grade>,
    bot: Grade,
    top: Grade,
    c: Grade,
}

impl Lattice {
    /// Builds a lattice from element names and generating `lo <= hi` pairs.
    ///
    /// `c` names the compile-time grade; it defaults to the top element.
    pub fn new(names: &[&str], order: &[(&str, &str)], c: Option<&str>) -> Result<Lattice, LatticeError> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let order: Vec<(String, String)> =
            order.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        Self::build(names, order, c.map(str::to_string))
    }

    fn build(names: Vec<String>, order: Vec<(String, String)>, c: Option<String>) -> Result<Lattice, LatticeError> {
        let n = names.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > 64 {
            return Err(LatticeError::TooLarge(n));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(LatticeError::Duplicate(a.clone()));
            }
        }
        let index = |s: &str| -> Result<usize, LatticeError> {
            names.iter().position(|x| x == s).ok_or_else(|| LatticeError::UnknownElement(s.to_string()))
        };

        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in &order {
            let (i, j) = (index(a)?, index(b)?);
            leq[i * n + j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(LatticeError::NotAntisymmetric(names[j].clone(), names[i].clone()));
                }
            }
        }

        let mut join = vec![Grade(0); n * n];
        let mut meet = vec![Grade(0); n * n];
        for i in 0..n {
            for j in 0..n {
                let upper: Vec<usize> = (0..n).filter(|&k| leq[i * n + k] && leq[j * n + k]).collect();
                let least = upper.iter().copied().find(|&u| upper.iter().all(|&v| leq[u * n + v]));
                let lower: Vec<usize> = (0..n).filter(|&k| leq[k * n + i] && leq[k * n + j]).collect();
                let greatest = lower.iter().copied().find(|&u| lower.iter().all(|&v| leq[v * n + u]));
                match (least, greatest) {
                    (Some(l), Some(g)) => {
                        join[i * n + j] = Grade(l as u8);
                        meet[i * n + j] = Grade(g as u8);
                    }
                    (None, _) => {
                        return Err(LatticeError::MissingBound {
                            a: names[i].clone(),
                            b: names[j].clone(),
                            kind: "join",
                        })
                    }
                    (_, None) => {
                        return Err(LatticeError::MissingBound {
                            a: names[i].clone(),
                            b: names[j].clone(),
                            kind: "meet",
                        })
                    }
                }
            }
        }

        let bot = (0..n).find(|&b| (0..n).all(|x| leq[b * n + x])).expect("joins exist, so meets of all exist");
        let top = (0..n).find(|&t| (0..n).all(|x| leq[x * n + t])).expect("finite lattice has a top");
        let mut lat = Lattice {
            names,
            leq,
            join,
            meet,
            bot: Grade(bot as u8),
            top: Grade(top as u8),
            c: Grade(top as u8),
        };
        if let Some(c) = c {
            lat.c = lat.grade(&c).ok_or(LatticeError::UnknownElement(c))?;
        }
        Ok(lat)
    }

    /// Two points `bot <= top` with `C = top`.
    pub fn two_point() -> Lattice {
        Lattice::new(&["bot", "top"], &[("bot", "top")], None).unwrap()
    }

    /// The irrelevance lattice `bot <= C <= top` with `C` designated.
    pub fn irrelevance() -> Lattice {
        Lattice::new(&["bot", "C", "top"], &[("bot", "C"), ("C", "top")], Some("C")).unwrap()
    }

    /// A total order on the given names, lowest first; `C` is the top.
    pub fn chain(names: &[&str]) -> Lattice {
        let order: Vec<(&str, &str)> = names.windows(2).map(|w| (w[0], w[1])).collect();
        Lattice::new(names, &order, None).unwrap()
    }

    /// The three-level security chain `L <= M <= H`.
    pub fn low_medium_high() -> Lattice {
        Lattice::chain(&["L", "M", "H"])
    }

    /// The same lattice with a different designated grade.
    pub fn with_c(&self, c: Grade) -> Lattice {
        Lattice { c, ..self.clone() }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn grades(&self) -> impl Iterator<Item = Grade> + '_ {
        (0..self.size()).map(|i| Grade(i as u8))
    }

    pub fn bot(&self) -> Grade {
        self.bot
    }

    pub fn top(&self) -> Grade {
        self.top
    }

    pub fn c(&self) -> Grade {
        self.c
    }

    pub fn name(&self, g: Grade) -> &str {
        &self.names[g.id()]
    }

    /// Resolves an element name; `bot` and `top` also name the extremes.
    pub fn grade(&self, name: &str) -> Option<Grade> {
        if let Some(i) = self.names.iter().position(|x| x == name) {
            return Some(Grade(i as u8));
        }
        match name {
            "bot" => Some(self.bot),
            "top" => Some(self.top),
            _ => None,
        }
    }

    pub fn leq(&self, k: Grade, l: Grade) -> bool {
        self.leq[k.id() * self.size() + l.id()]
    }

    pub fn join(&self, k: Grade, l: Grade) -> Grade {
        self.join[k.id() * self.size() + l.id()]
    }

    pub fn meet(&self, k: Grade, l: Grade) -> Grade {
        self.meet[k.id() * self.size() + l.id()]
    }

    /// Checks the lattice laws exhaustively.
    pub fn laws_hold(&self) -> bool {
        let gs: Vec<Grade> = self.grades().collect();
        for &x in &gs {
            if !self.leq(self.bot, x) || !self.leq(x, self.top) {
                return false;
            }
            if self.join(x, x) != x || self.meet(x, x) != x {
                return false;
            }
            for &y in &gs {
                let ord = self.leq(x, y);
                if ord != (self.join(x, y) == y) || ord != (self.meet(x, y) == x) {
                    return false;
                }
                if self.join(x, y) != self.join(y, x) || self.meet(x, y) != self.meet(y, x) {
                    return false;
                }
                if self.join(x, self.meet(x, y)) != x || self.meet(x, self.join(x, y)) != x {
                    return false;
                }
                for &z in &gs {
                    if self.join(x, self.join(y, z)) != self.join(self.join(x, y), z)
                        || self.meet(x, self.meet(y, z)) != self.meet(self.meet(x, y), z)
                    {
                        return false;
                    }
                    if self.leq(x, y) && self.leq(y, z) && !self.leq(x, z) {
                        return false;
                    }
                }
            }
        }
        self.leq(self.bot, self.c) && self.leq(self.c, self.top)
    }
}

/// Parses the lattice config format:
///
/// ```text
/// elements: bot, C, top
/// order: bot <= C, C <= top
/// c: C
/// ```
pub fn load_lattice(config: &str) -> Result<Lattice, LatticeError> {
    let mut names = None;
    let mut order = Vec::new();
    let mut c = None;
    for (i, raw) in config.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: &str| LatticeError::Syntax { line: i + 1, message: message.to_string() };
        let (key, rest) = line.split_once(':').ok_or_else(|| syntax("expected `key: value`"))?;
        match key.trim() {
            "elements" => {
                let list: Vec<String> =
                    rest.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                if list.iter().any(|s| !is_name(s)) {
                    return Err(syntax("element names must be identifiers"));
                }
                names = Some(list);
            }
            "order" => {
                for pair in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let (a, b) = pair.split_once("<=").ok_or_else(|| syntax("expected `a <= b`"))?;
                    order.push((a.trim().to_string(), b.trim().to_string()));
                }
            }
            "c" | "C" => c = Some(rest.trim().to_string()),
            other => return Err(syntax(&format!("unknown key `{other}`"))),
        }
    }
    let names = names.ok_or(LatticeError::Empty)?;
    Lattice::build(names, order, c)
}

fn strip_comment(line: &str) -> &str {
    let cut = [line.find('#'), line.find("--")].into_iter().flatten().min();
    match cut {
        Some(i) => &line[..i],
        None => line,
    }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Renders a grade by its element name.
pub struct DisplayGrade<'a>(pub &'a Lattice, pub Grade);

impl fmt::Display for DisplayGrade<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0.name(self.1))
    }
}
