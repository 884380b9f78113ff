use std::fmt::Write as _;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned text followed by a key=value block.
    Text,
    Kv,
    Csv,
}

/// Ordered key/value pairs rendered in the requested format.
#[derive(Debug, Default)]
pub struct Report {
    title: String,
    fields: Vec<(String, String)>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), fields: Vec::new() }
    }

    pub fn push(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Text => {
                let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                let _ = writeln!(out, "{}", self.title);
                for (k, v) in &self.fields {
                    let _ = writeln!(out, "  {k:<width$}  {v}");
                }
                out.push('\n');
                out.push_str(&self.render(Format::Kv));
            }
            Format::Kv => {
                for (k, v) in &self.fields {
                    let _ = writeln!(out, "{k}={v}");
                }
            }
            Format::Csv => {
                let quote = |s: &str| {
                    if s.contains([',', '"', '\n']) {
                        format!("\"{}\"", s.replace('"', "\"\""))
                    } else {
                        s.to_string()
                    }
                };
                let keys: Vec<String> = self.fields.iter().map(|(k, _)| quote(k)).collect();
                let vals: Vec<String> = self.fields.iter().map(|(_, v)| quote(v)).collect();
                let _ = writeln!(out, "{}", keys.join(","));
                let _ = writeln!(out, "{}", vals.join(","));
            }
        }
        out
    }
}
