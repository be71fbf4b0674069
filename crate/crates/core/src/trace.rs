//! Derivation traces: one line per rule application, indented by depth.

#[derive(Clone, Debug, Default)]
pub struct Trace {
    lines: Vec<(usize, &'static str, String)>,
    depth: usize,
}

impl Trace {
    pub fn new() -> Trace {
        Trace::default()
    }

    pub fn enter(&mut self, rule: &'static str, detail: String) {
        self.lines.push((self.depth, rule, detail));
        self.depth += 1;
    }

    pub fn exit(&mut self) {
        self.depth = self.depth.saturating_sub(1);
    }

    pub fn note(&mut self, rule: &'static str, detail: String) {
        self.lines.push((self.depth, rule, detail));
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (d, rule, detail) in &self.lines {
            out.push_str(&"  ".repeat(*d));
            out.push_str(rule);
            if !detail.is_empty() {
                out.push_str("  ");
                out.push_str(detail);
            }
            out.push('\n');
        }
        out
    }
}
