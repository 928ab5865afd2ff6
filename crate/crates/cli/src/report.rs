//! Reports: an ordered list of keyed values with a human rendering and a
//! machine rendering that parses back losslessly.
//!
//! Machine format, one entry per line after the `xmlift-report 1` header:
//!
//! ```text
//! key = text
//! key[] = 0,1,2
//! key{} = e,a,b          labels for the indices entry just above
//! key[][] =
//! 0,1,-
//! 1,0,2
//! end
//! ```
//!
//! Text and labels escape `\`, `,` and newlines with a backslash. Table
//! cells are indices or `-` for an undefined entry.

use std::fmt::Write as _;

use crate::error::{CliError, Result};

const HEADER: &str = "xmlift-report 1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Text(String),
    Indices {
        values: Vec<usize>,
        labels: Option<Vec<String>>,
    },
    Table(Vec<Vec<Option<usize>>>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn text(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries
            .push((key.into(), Value::Text(value.to_string())));
    }

    pub fn indices(&mut self, key: impl Into<String>, values: Vec<usize>) {
        self.entries.push((
            key.into(),
            Value::Indices {
                values,
                labels: None,
            },
        ));
    }

    pub fn labelled(&mut self, key: impl Into<String>, values: Vec<usize>, labels: Vec<String>) {
        self.entries.push((
            key.into(),
            Value::Indices {
                values,
                labels: Some(labels),
            },
        ));
    }

    pub fn table(&mut self, key: impl Into<String>, rows: Vec<Vec<Option<usize>>>) {
        self.entries.push((key.into(), Value::Table(rows)));
    }

    pub fn full_table(&mut self, key: impl Into<String>, rows: Vec<Vec<usize>>) {
        self.table(
            key,
            rows.into_iter()
                .map(|r| r.into_iter().map(Some).collect())
                .collect(),
        );
    }

    pub fn to_machine(&self) -> String {
        let mut out = format!("{HEADER}\n");
        for (key, value) in &self.entries {
            match value {
                Value::Text(t) => {
                    let _ = writeln!(out, "{key} = {}", escape(t));
                }
                Value::Indices { values, labels } => {
                    let _ = writeln!(out, "{key}[] = {}", join(values.iter()));
                    if let Some(labels) = labels {
                        let labels: Vec<String> = labels.iter().map(|l| escape(l)).collect();
                        let _ = writeln!(out, "{key}{{}} = {}", labels.join(","));
                    }
                }
                Value::Table(rows) => {
                    let _ = writeln!(out, "{key}[][] =");
                    for row in rows {
                        let cells: Vec<String> = row.iter().map(cell).collect();
                        let _ = writeln!(out, "{}", cells.join(","));
                    }
                    out.push_str("end\n");
                }
            }
        }
        out
    }

    pub fn from_machine(text: &str) -> Result<Report> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let bad = |line: usize, message: &str| CliError::ReportFormat {
            line,
            message: message.into(),
        };
        match lines.next() {
            Some((_, HEADER)) => {}
            _ => return Err(bad(1, "missing header")),
        }
        let mut report = Report::new();
        while let Some((n, line)) = lines.next() {
            let (lhs, rhs) = line
                .split_once(" =")
                .ok_or_else(|| bad(n, "expected `key = value`"))?;
            let rhs = rhs.strip_prefix(' ').unwrap_or(rhs);
            if let Some(key) = lhs.strip_suffix("[][]") {
                let mut rows = Vec::new();
                loop {
                    let (m, row) = lines.next().ok_or_else(|| bad(n, "unterminated table"))?;
                    if row == "end" {
                        break;
                    }
                    let cells = if row.is_empty() {
                        Vec::new()
                    } else {
                        row.split(',')
                            .map(|c| match c {
                                "-" => Ok(None),
                                _ => c.parse().map(Some).map_err(|_| bad(m, "bad table cell")),
                            })
                            .collect::<Result<Vec<_>>>()?
                    };
                    rows.push(cells);
                }
                report.table(key, rows);
            } else if let Some(key) = lhs.strip_suffix("[]") {
                let values = if rhs.is_empty() {
                    Vec::new()
                } else {
                    rhs.split(',')
                        .map(|v| v.parse().map_err(|_| bad(n, "bad index")))
                        .collect::<Result<Vec<_>>>()?
                };
                report.indices(key, values);
            } else if let Some(key) = lhs.strip_suffix("{}") {
                match report.entries.last_mut() {
                    Some((k, Value::Indices { values, labels })) if k == key => {
                        let parsed = split_escaped(rhs);
                        let parsed = if values.is_empty() {
                            Vec::new()
                        } else {
                            parsed
                        };
                        if parsed.len() != values.len() {
                            return Err(bad(n, "label count differs from index count"));
                        }
                        *labels = Some(parsed);
                    }
                    _ => return Err(bad(n, "labels without matching indices")),
                }
            } else {
                report.text(lhs, unescape(rhs));
            }
        }
        Ok(report)
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.entries {
            match value {
                Value::Text(t) => {
                    let _ = writeln!(out, "{key}: {t}");
                }
                Value::Indices { values, labels } => {
                    let items: Vec<String> = match labels {
                        Some(labels) => values
                            .iter()
                            .zip(labels)
                            .map(|(v, l)| {
                                if *l == v.to_string() {
                                    l.clone()
                                } else {
                                    format!("{v}:{l}")
                                }
                            })
                            .collect(),
                        None => values.iter().map(usize::to_string).collect(),
                    };
                    let _ = writeln!(out, "{key}: [{}]", items.join(", "));
                }
                Value::Table(rows) => {
                    let _ = writeln!(out, "{key}:");
                    let width = rows
                        .iter()
                        .flatten()
                        .map(|c| cell(c).len())
                        .max()
                        .unwrap_or(1);
                    for row in rows {
                        let cells: Vec<String> =
                            row.iter().map(|c| format!("{:>width$}", cell(c))).collect();
                        let _ = writeln!(out, "    {}", cells.join(" ").trim_end());
                    }
                }
            }
        }
        out
    }
}

fn cell(c: &Option<usize>) -> String {
    c.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn join<'a>(values: impl Iterator<Item = &'a usize>) -> String {
    values.map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '\\' => out.push_str("\\\\"),
            ',' => out.push_str("\\,"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out
}

fn unescape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(ch) = chars.next() {
        if ch == '\\' {
            match chars.next() {
                Some('n') => out.push('\n'),
                Some(c) => out.push(c),
                None => out.push('\\'),
            }
        } else {
            out.push(ch);
        }
    }
    out
}

fn split_escaped(s: &str) -> Vec<String> {
    let mut parts = vec![String::new()];
    let mut chars = s.chars();
    while let Some(ch) = chars.next() {
        match ch {
            '\\' => {
                parts.last_mut().expect("nonempty").push('\\');
                if let Some(c) = chars.next() {
                    parts.last_mut().expect("nonempty").push(c);
                }
            }
            ',' => parts.push(String::new()),
            c => parts.last_mut().expect("nonempty").push(c),
        }
    }
    parts.iter().map(|p| unescape(p)).collect()
}
