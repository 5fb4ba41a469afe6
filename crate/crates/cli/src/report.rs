use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;
use serde_json::Value;

/// One line of machine-readable output. Integers are always decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRecord {
    pub command: &'static str,
    pub record: &'static str,
    pub params: BTreeMap<&'static str, String>,
    pub values: BTreeMap<&'static str, Value>,
    pub method: &'static str,
    pub elapsed_ms: String,
}

impl ReportRecord {
    pub fn new(command: &'static str, record: &'static str, method: &'static str) -> Self {
        ReportRecord {
            command,
            record,
            params: BTreeMap::new(),
            values: BTreeMap::new(),
            method,
            elapsed_ms: "0".into(),
        }
    }

    pub fn param(mut self, key: &'static str, v: impl Display) -> Self {
        self.params.insert(key, v.to_string());
        self
    }

    pub fn value(mut self, key: &'static str, v: impl Display) -> Self {
        self.values.insert(key, Value::String(v.to_string()));
        self
    }

    pub fn list<T: Display>(
        mut self,
        key: &'static str,
        items: impl IntoIterator<Item = T>,
    ) -> Self {
        let items = items
            .into_iter()
            .map(|x| Value::String(x.to_string()))
            .collect();
        self.values.insert(key, Value::Array(items));
        self
    }

    pub fn flag(mut self, key: &'static str, v: bool) -> Self {
        self.values.insert(key, Value::Bool(v));
        self
    }

    pub fn get(&self, key: &str) -> String {
        match self.values.get(key) {
            Some(Value::String(s)) => s.clone(),
            Some(Value::Array(a)) => a
                .iter()
                .map(|v| v.as_str().unwrap_or_default().to_string())
                .collect::<Vec<_>>()
                .join(","),
            Some(v) => v.to_string(),
            None => String::new(),
        }
    }
}

/// Renders rows as a left-aligned plain-text table.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = vec![line(headers.iter().map(|s| s.to_string()).collect())];
    out.extend(rows.iter().map(|r| line(r.clone())));
    out.join("\n")
}
