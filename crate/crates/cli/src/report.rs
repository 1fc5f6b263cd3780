//! Report model and its two renderings.

use fusioncat::{encode_value, format_approx, Check, Cyclotomic, Status};
use serde_json::{json, Map, Value};

#[derive(Clone, Debug)]
pub enum Cell {
    Text(String),
    Value(Cyclotomic),
    /// Coefficient vector in the `χ` or `E` basis.
    Vector { basis: &'static str, values: Vec<Cyclotomic> },
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<Cyclotomic> for Cell {
    fn from(v: Cyclotomic) -> Self {
        Cell::Value(v)
    }
}

impl From<&Cyclotomic> for Cell {
    fn from(v: &Cyclotomic) -> Self {
        Cell::Value(v.clone())
    }
}

#[derive(Clone, Debug)]
pub struct Section {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Section {
    pub fn new(title: &str, columns: &[&str]) -> Self {
        Section {
            title: title.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    /// Two-column `key | value` table.
    pub fn entry(&mut self, key: &str, value: impl Into<Cell>) {
        self.row(vec![key.into(), value.into()]);
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    /// `(name, conductor)`; absent for catalog listings.
    pub category: Option<(String, u32)>,
    pub sections: Vec<Section>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, category: Option<(String, u32)>) -> Self {
        Report {
            command: command.to_string(),
            category,
            sections: Vec::new(),
            checks: Vec::new(),
        }
    }

    fn conductor(&self) -> u32 {
        self.category.as_ref().map_or(1, |c| c.1)
    }

    pub fn render_json(&self) -> String {
        let n = self.conductor();
        let mut obj = Map::new();
        obj.insert("command".into(), json!(self.command));
        obj.insert(
            "category".into(),
            match &self.category {
                Some((name, conductor)) => json!({ "name": name, "conductor": conductor }),
                None => Value::Null,
            },
        );
        let sections = self
            .sections
            .iter()
            .map(|s| {
                json!({
                    "title": s.title,
                    "columns": s.columns,
                    "rows": s.rows.iter().map(|r| r.iter().map(|c| cell_json(c, n)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>();
        obj.insert("sections".into(), Value::Array(sections));
        let checks = self
            .checks
            .iter()
            .map(|c| json!({ "id": c.id, "status": c.status.as_str(), "detail": c.detail }))
            .collect::<Vec<_>>();
        obj.insert("checks".into(), Value::Array(checks));
        let mut out = serde_json::to_string_pretty(&Value::Object(obj)).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if let Some((name, n)) = &self.category {
            out.push_str(&format!("category: {name} (conductor {n})\n"));
        }
        for s in &self.sections {
            out.push_str(&format!("\n== {} ==\n", s.title));
            let rows: Vec<Vec<String>> = s.rows.iter().map(|r| r.iter().map(cell_text).collect()).collect();
            out.push_str(&table(&s.columns, &rows));
        }
        if !self.checks.is_empty() {
            out.push_str("\n== checks ==\n");
            let rows: Vec<Vec<String>> = self
                .checks
                .iter()
                .map(|c| vec![c.status.as_str().to_string(), c.id.clone(), c.detail.clone()])
                .collect();
            out.push_str(&table(&["status".into(), "id".into(), "detail".into()], &rows));
            let count = |s: Status| self.checks.iter().filter(|c| c.status == s).count();
            out.push_str(&format!(
                "\n{} passed, {} failed, {} skipped\n",
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Skip)
            ));
        }
        out
    }
}

fn width(s: &str) -> usize {
    s.chars().count()
}

fn table(columns: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = columns.iter().map(|c| width(c)).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(width(c));
        }
    }
    let line = |cells: &[String]| {
        let last = cells.len().saturating_sub(1);
        let mut s = String::new();
        for (k, (c, w)) in cells.iter().zip(&widths).enumerate() {
            s.push_str(c);
            if k < last {
                s.push_str(&" ".repeat(w - width(c) + 2));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(columns);
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

/// Integers print once; anything else is followed by its complex embedding.
fn value_text(v: &Cyclotomic) -> String {
    if v.to_integer().is_some() {
        v.to_string()
    } else {
        format!("{v} ≈ {}", format_approx(v.embed()))
    }
}

fn cell_text(c: &Cell) -> String {
    match c {
        Cell::Text(s) => s.clone(),
        Cell::Value(v) => value_text(v),
        Cell::Vector { basis, values } => {
            let exact: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            let mut s = format!("{basis}: [{}]", exact.join(", "));
            if values.iter().any(|v| v.to_integer().is_none()) {
                let approx: Vec<String> = values.iter().map(|v| format_approx(v.embed())).collect();
                s.push_str(&format!(" ≈ [{}]", approx.join(", ")));
            }
            s
        }
    }
}

fn value_json(v: &Cyclotomic, n: u32) -> Value {
    json!({ "exact": encode_value(v, n), "approx": format_approx(v.embed()) })
}

fn cell_json(c: &Cell, n: u32) -> Value {
    match c {
        Cell::Text(s) => json!(s),
        Cell::Value(v) => value_json(v, n),
        Cell::Vector { basis, values } => json!({
            "basis": basis,
            "exact": values.iter().map(|v| encode_value(v, n)).collect::<Vec<_>>(),
            "approx": values.iter().map(|v| format_approx(v.embed())).collect::<Vec<_>>(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_renders_both_ways() {
        let g = -(Cyclotomic::zeta_pow(5, 2) + Cyclotomic::zeta_pow(5, 3));
        assert_eq!(value_text(&g), "−ζ5^2−ζ5^3 ≈ 1.61803");
        let v = cell_json(&Cell::Value(g), 5);
        assert_eq!(v["exact"], json!(["0", "0", "-1", "-1"]));
        assert_eq!(v["approx"], json!("1.61803"));
    }

    #[test]
    fn tables_align_on_characters() {
        let rows = vec![vec!["−1".to_string(), "x".to_string()], vec!["10".into(), "y".into()]];
        let t = table(&["a".into(), "b".into()], &rows);
        assert_eq!(t, "a   b\n−1  x\n10  y\n");
    }
}
