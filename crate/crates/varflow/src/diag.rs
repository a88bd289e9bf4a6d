//! Line-oriented diagnostics collected throughout the pipeline.
//!
//! Almost nothing in this crate hard-fails: the frontend tolerates
//! statements it cannot parse, the graph builder skips statements it
//! cannot compile, and symbol resolution records what it could not
//! find. Every such event lands here as a `SEVERITY module:line message`
//! entry so that batch runs stay inspectable.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Severity::Info => write!(f, "INFO"),
            Severity::Warning => write!(f, "WARN"),
            Severity::Error => write!(f, "ERROR"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    /// Module the event belongs to; empty when there is no module context.
    pub module: String,
    /// 1-based source line, 0 when the event has no line.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let module = if self.module.is_empty() { "-" } else { &self.module };
        write!(f, "{} {}:{} {}", self.severity, module, self.line, self.message)
    }
}

/// Ordered sink for diagnostics. Order of emission is preserved so the
/// rendered stream is deterministic for a fixed input.
#[derive(Debug, Clone, Default)]
pub struct Diagnostics {
    entries: Vec<Diagnostic>,
}

impl Diagnostics {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn emit(&mut self, severity: Severity, module: &str, line: usize, message: impl Into<String>) {
        self.entries.push(Diagnostic {
            severity,
            module: module.to_string(),
            line,
            message: message.into(),
        });
    }

    pub fn info(&mut self, module: &str, line: usize, message: impl Into<String>) {
        self.emit(Severity::Info, module, line, message);
    }

    pub fn warn(&mut self, module: &str, line: usize, message: impl Into<String>) {
        self.emit(Severity::Warning, module, line, message);
    }

    pub fn error(&mut self, module: &str, line: usize, message: impl Into<String>) {
        self.emit(Severity::Error, module, line, message);
    }

    pub fn extend(&mut self, other: Diagnostics) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[Diagnostic] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn count_of(&self, severity: Severity) -> usize {
        self.entries.iter().filter(|d| d.severity == severity).count()
    }

    /// Render the whole stream, one diagnostic per line.
    pub fn to_stream(&self) -> String {
        let mut out = String::new();
        for entry in &self.entries {
            out.push_str(&entry.to_string());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_format_is_line_oriented() {
        let mut diags = Diagnostics::new();
        diags.warn("phys", 12, "unknown callable 'mystery' treated as array");
        diags.error("", 0, "corpus directory is empty");
        let stream = diags.to_stream();
        assert_eq!(
            stream,
            "WARN phys:12 unknown callable 'mystery' treated as array\nERROR -:0 corpus directory is empty\n"
        );
    }
}
