//! Format-independent result rows and their text, JSON and CSV renderings.

use std::fmt::Write as _;

use betatau_core::HighPrecReal;

use crate::args::Format;

/// Significant digits for every printed real.
pub const SIG_DIGITS: usize = 15;

#[derive(Clone, Debug)]
pub enum Cell {
    /// Decimal text, emitted unquoted in JSON.
    Real(String),
    Int(u128),
    Bool(bool),
    Text(String),
    List(Vec<String>),
    Null,
}

impl Cell {
    pub fn real(x: &HighPrecReal) -> Self {
        Cell::Real(x.to_decimal(SIG_DIGITS))
    }

    pub fn float(x: f64) -> Self {
        Cell::Real(
            format!("{:.*e}", SIG_DIGITS - 1, x)
                .parse::<f64>()
                .map_or_else(|_| x.to_string(), |v| format!("{v}")),
        )
    }

    pub fn text(s: impl ToString) -> Self {
        Cell::Text(s.to_string())
    }

    pub fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> Self {
        Cell::List(items.into_iter().map(|x| x.to_string()).collect())
    }

    fn json(&self, out: &mut String) {
        let quote = |s: &str| serde_json::to_string(s).expect("strings serialize");
        match self {
            Cell::Real(s) => out.push_str(s),
            Cell::Int(n) => write!(out, "{n}").unwrap(),
            Cell::Bool(b) => write!(out, "{b}").unwrap(),
            Cell::Text(s) => out.push_str(&quote(s)),
            Cell::List(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&quote(item));
                }
                out.push(']');
            }
            Cell::Null => out.push_str("null"),
        }
    }

    fn plain(&self) -> String {
        match self {
            Cell::Real(s) | Cell::Text(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::List(items) => items.join(" "),
            Cell::Null => String::new(),
        }
    }

    fn csv(&self) -> String {
        let s = match self {
            Cell::List(items) => items.join(";"),
            other => other.plain(),
        };
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s
        }
    }
}

pub type Record = Vec<(&'static str, Cell)>;

/// The result of one command before rendering.
#[derive(Debug)]
pub struct Report {
    pub records: Vec<Record>,
    /// Replaces the generic text rendering.
    pub text: Option<String>,
    pub default_format: Format,
    /// Rows whose regime is unresolved.
    pub unresolved: usize,
}

impl Report {
    pub fn new(default_format: Format, records: Vec<Record>) -> Self {
        Self {
            records,
            text: None,
            default_format,
            unresolved: 0,
        }
    }

    pub fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }

    pub fn with_unresolved(mut self, count: usize) -> Self {
        self.unresolved = count;
        self
    }

    pub fn render(&self, format: Option<Format>) -> String {
        match format.unwrap_or(self.default_format) {
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    /// One object per line.
    fn render_json(&self) -> String {
        let mut out = String::new();
        for record in &self.records {
            out.push('{');
            for (i, (key, cell)) in record.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write!(out, "\"{key}\":").unwrap();
                cell.json(&mut out);
            }
            out.push_str("}\n");
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        let Some(first) = self.records.first() else {
            return out;
        };
        let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for record in &self.records {
            let row: Vec<String> = record.iter().map(|(_, c)| c.csv()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    fn render_text(&self) -> String {
        if let Some(text) = &self.text {
            return format!("{text}\n");
        }
        match self.records.as_slice() {
            [] => String::new(),
            [single] => {
                let width = single.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                single
                    .iter()
                    .map(|(k, c)| format!("{k:<width$}  {}\n", c.plain()))
                    .collect()
            }
            many => {
                let header: Vec<String> = many[0].iter().map(|(k, _)| k.to_string()).collect();
                let rows: Vec<Vec<String>> = many
                    .iter()
                    .map(|r| r.iter().map(|(_, c)| c.plain()).collect())
                    .collect();
                let widths: Vec<usize> = (0..header.len())
                    .map(|i| {
                        rows.iter()
                            .map(|r| r[i].len())
                            .chain([header[i].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: &[String]| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect();
                    format!("{}\n", padded.join("  ").trim_end())
                };
                std::iter::once(line(&header))
                    .chain(rows.iter().map(|r| line(r)))
                    .collect()
            }
        }
    }
}
