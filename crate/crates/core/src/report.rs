//! Small helpers for machine-readable reports: deterministic JSON printing
//! and pass/fail check lines.

use serde_json::Value;

/// Render JSON with sorted keys and stable formatting (serde_json maps are
/// insertion-ordered; report builders in this crate insert in sorted order,
/// and this function is the single choke point for formatting).
pub fn render_json(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("report values serialize")
    } else {
        serde_json::to_string(v).expect("report values serialize")
    }
}

/// One check line of a verification report.
#[derive(Clone, Debug)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckLine {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckLine { name: name.into(), passed: true, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckLine { name: name.into(), passed: false, detail: detail.into() }
    }

    pub fn render(&self) -> String {
        let tag = if self.passed { "ok" } else { "FAIL" };
        if self.detail.is_empty() {
            format!("{tag:4} {}", self.name)
        } else {
            format!("{tag:4} {} ({})", self.name, self.detail)
        }
    }
}

/// Render a block of check lines plus a summary; returns the text and
/// whether everything passed.
pub fn render_checks(lines: &[CheckLine]) -> (String, bool) {
    let mut out = String::new();
    let mut ok = true;
    for line in lines {
        out.push_str(&line.render());
        out.push('\n');
        ok &= line.passed;
    }
    let total = lines.len();
    let passed = lines.iter().filter(|l| l.passed).count();
    out.push_str(&format!("{passed}/{total} checks passed\n"));
    (out, ok)
}
