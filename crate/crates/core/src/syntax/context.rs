use super::subst::shift;
use super::term::{Name, Term};
use crate::lattice::{Grade, Lattice};

/// One graded assumption `x :^g A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Binding {
    pub name: Name,
    pub grade: Grade,
    /// Scoped over the bindings before this one.
    pub ty: Term,
}

/// A graded typing context Ω, innermost binding last.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Context {
    bindings: Vec<Binding>,
}

impl Context {
    pub fn new() -> Context {
        Context::default()
    }

    pub fn from_bindings(bindings: Vec<Binding>) -> Context {
        Context { bindings }
    }

    pub fn push(&mut self, name: Name, grade: Grade, ty: Term) {
        self.bindings.push(Binding { name, grade, ty });
    }

    pub fn with(mut self, name: &str, grade: Grade, ty: Term) -> Context {
        self.push(Name::new(name), grade, ty);
        self
    }

    pub fn pop(&mut self) -> Option<Binding> {
        self.bindings.pop()
    }

    pub fn truncate(&mut self, len: usize) {
        self.bindings.truncate(len);
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn bindings(&self) -> &[Binding] {
        &self.bindings
    }

    pub fn bindings_mut(&mut self) -> &mut [Binding] {
        &mut self.bindings
    }

    /// The binding for index `i`, counted from the innermost.
    pub fn get(&self, i: usize) -> Option<&Binding> {
        self.bindings.len().checked_sub(i + 1).map(|p| &self.bindings[p])
    }

    /// The grade and type of index `i`, with the type shifted into the
    /// scope of the whole context.
    pub fn lookup(&self, i: usize) -> Option<(Grade, Term)> {
        self.get(i).map(|b| (b.grade, shift(&b.ty, i as isize + 1)))
    }

    /// The grade-only projection |Ω|.
    pub fn grades(&self) -> GradeContext {
        GradeContext { grades: self.bindings.iter().map(|b| b.grade).collect() }
    }

    /// Pointwise meet of every grade with `c`.
    pub fn truncated(&self, lat: &Lattice, c: Grade) -> Context {
        Context {
            bindings: self
                .bindings
                .iter()
                .map(|b| Binding { grade: lat.meet(b.grade, c), ..b.clone() })
                .collect(),
        }
    }

    /// Every binding regraded at `g`.
    pub fn regraded(&self, g: Grade) -> Context {
        Context { bindings: self.bindings.iter().map(|b| Binding { grade: g, ..b.clone() }).collect() }
    }

    pub fn names(&self) -> Vec<Name> {
        self.bindings.iter().map(|b| b.name.clone()).collect()
    }
}

/// A grade-only context Φ, innermost last.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradeContext {
    grades: Vec<Grade>,
}

impl GradeContext {
    pub fn new() -> GradeContext {
        GradeContext::default()
    }

    pub fn from_grades(grades: Vec<Grade>) -> GradeContext {
        GradeContext { grades }
    }

    pub fn push(&mut self, g: Grade) {
        self.grades.push(g);
    }

    pub fn pop(&mut self) {
        self.grades.pop();
    }

    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    /// The grade of index `i`, counted from the innermost.
    pub fn get(&self, i: usize) -> Option<Grade> {
        self.grades.len().checked_sub(i + 1).map(|p| self.grades[p])
    }

    pub fn as_slice(&self) -> &[Grade] {
        &self.grades
    }

    pub fn truncated(&self, lat: &Lattice, c: Grade) -> GradeContext {
        GradeContext { grades: self.grades.iter().map(|&g| lat.meet(g, c)).collect() }
    }
}
