//! Report rendering: human-readable text or a structured block format.
//!
//! The structured format is line-oriented and round-trippable: a report is
//! a sequence of sections, each opened by `[name]` and followed by
//! `key = value` lines. Values are written verbatim (no quoting layer);
//! keys may repeat within a section to express lists.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

/// One report section: a name and ordered key/value pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub entries: Vec<(String, String)>,
}

impl Section {
    pub fn new(name: impl Into<String>) -> Self {
        Section {
            name: name.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }
}

/// A full report: sections plus free-form text lines used only by the
/// text format.
#[derive(Debug, Default)]
pub struct Report {
    pub sections: Vec<Section>,
    text_lines: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn section(&mut self, section: Section) {
        self.text_lines.push(String::new());
        for (key, value) in &section.entries {
            self.text_lines.push(format!("{key}: {value}"));
        }
        self.sections.push(section);
    }

    /// A line shown in text mode only (headings, banners).
    pub fn text(&mut self, line: impl Into<String>) {
        self.text_lines.push(line.into());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = self.text_lines.join("\n");
                out.push('\n');
                // drop a leading blank line from the first section
                out.trim_start_matches('\n').to_string()
            }
            Format::Structured => render_structured(&self.sections),
        }
    }
}

pub fn render_structured(sections: &[Section]) -> String {
    let mut out = String::new();
    for section in sections {
        let _ = writeln!(out, "[{}]", section.name);
        for (key, value) in &section.entries {
            let _ = writeln!(out, "{key} = {value}");
        }
        let _ = writeln!(out);
    }
    out
}

/// Parse the structured format back into sections. Inverse of
/// `render_structured` for reports produced by this tool.
pub fn parse_structured(text: &str) -> Result<Vec<Section>, String> {
    let mut sections: Vec<Section> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            sections.push(Section::new(name));
            continue;
        }
        let (key, value) = line
            .split_once(" = ")
            .ok_or_else(|| format!("line {}: expected `key = value`", idx + 1))?;
        let section = sections
            .last_mut()
            .ok_or_else(|| format!("line {}: entry before any [section]", idx + 1))?;
        section.push(key, value);
    }
    Ok(sections)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structured_round_trip() {
        let mut report = Report::new();
        let mut s = Section::new("entropy");
        s.push("system", "systems/three-dot.sys");
        s.push("direction", "(1, 1)");
        s.push("value", "1 · log 2 = 0.693147 nats");
        report.section(s);
        let mut t = Section::new("series");
        t.push("window", "(4, 4)");
        t.push("window", "(6, 6)");
        report.section(t);
        let rendered = report.render(Format::Structured);
        let parsed = parse_structured(&rendered).unwrap();
        assert_eq!(parsed, report.sections);
        let again = render_structured(&parsed);
        assert_eq!(again, rendered);
    }
}
