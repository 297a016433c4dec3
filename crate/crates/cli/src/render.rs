//! Table rendering in plain text, CSV, LaTeX and JSON. Rationals are always
//! printed exactly.

use std::fmt::Write as _;

use genjacobi::{Poly, Rational};
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Empty,
    Int(usize),
    Text(String),
    Rat(Rational),
    Poly(Poly),
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Empty => String::new(),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Rat(r) => r.to_string(),
            Cell::Poly(p) => p.to_string(),
        }
    }

    fn latex(&self) -> String {
        match self {
            Cell::Empty => String::new(),
            Cell::Int(i) => format!("${i}$"),
            Cell::Text(s) => latex_escape(s),
            Cell::Rat(r) => format!("${}$", latex_rational(r)),
            Cell::Poly(p) => format!("${}$", latex_poly(p)),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Empty => s.serialize_none(),
            Cell::Int(i) => s.serialize_u64(*i as u64),
            Cell::Text(t) => s.serialize_str(t),
            Cell::Rat(r) => s.serialize_str(&r.to_string()),
            Cell::Poly(p) => {
                let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("text", &p.to_string())?;
                m.serialize_entry("coeffs", &coeffs)?;
                m.end()
            }
        }
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Table {
    pub title: String,
    pub meta: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Table {
            title: title.into(),
            meta: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.push((key.into(), value.to_string()));
        self
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        self.rows.push(cells);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Plain => self.plain(),
            OutputFormat::Json => self.json(),
            OutputFormat::Csv => csv_text(&self.columns, self.rows.iter().map(|r| r.iter().map(Cell::plain).collect())),
            OutputFormat::Latex => self.latex(),
        }
    }

    fn plain(&self) -> String {
        let mut out = format!("{}\n", self.title);
        for (k, v) in &self.meta {
            let _ = writeln!(out, "{k}: {v}");
        }
        let body: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::plain).collect()).collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for r in &body {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string()
        };
        let _ = writeln!(out, "{}", line(&self.columns));
        for r in &body {
            let _ = writeln!(out, "{}", line(r));
        }
        out
    }

    fn json(&self) -> String {
        let meta: serde_json::Map<String, serde_json::Value> =
            self.meta.iter().map(|(k, v)| (k.clone(), v.clone().into())).collect();
        let doc = serde_json::json!({
            "title": self.title,
            "meta": meta,
            "columns": self.columns,
            "rows": self.rows,
        });
        serde_json::to_string_pretty(&doc).expect("table serializes") + "\n"
    }

    fn latex(&self) -> String {
        let mut out = format!("% {}\n", self.title);
        for (k, v) in &self.meta {
            let _ = writeln!(out, "% {k}: {v}");
        }
        let _ = writeln!(out, "\\begin{{tabular}}{{{}}}", "l".repeat(self.columns.len()));
        out.push_str("\\hline\n");
        let head: Vec<String> = self.columns.iter().map(|c| latex_escape(c)).collect();
        let _ = writeln!(out, "{} \\\\", head.join(" & "));
        out.push_str("\\hline\n");
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(Cell::latex).collect();
            let _ = writeln!(out, "{} \\\\", cells.join(" & "));
        }
        out.push_str("\\hline\n\\end{tabular}\n");
        out
    }
}

pub fn csv_text(header: &[String], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(&r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf8")
}

pub fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '_' | '&' | '%' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '\\' => out.push_str("\\textbackslash{}"),
            '<' => out.push_str("$<$"),
            '>' => out.push_str("$>$"),
            _ => out.push(ch),
        }
    }
    out
}

pub fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
}

/// Descending powers, e.g. `\frac{3}{2}x^{2}-\frac{1}{2}`.
pub fn latex_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if k == 0 || !mag.is_one() {
            out.push_str(&latex_rational(&mag));
        }
        match k {
            0 => {}
            1 => out.push('x'),
            _ => {
                let _ = write!(out, "x^{{{k}}}");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use genjacobi::frac;

    #[test]
    fn latex_fractions() {
        assert_eq!(latex_rational(&frac(-3, 4)), "-\\frac{3}{4}");
        assert_eq!(latex_rational(&frac(6, 3)), "2");
        let p = Poly::new(vec![frac(-1, 2), Rational::zero(), frac(3, 2)]);
        assert_eq!(latex_poly(&p), "\\frac{3}{2}x^{2}-\\frac{1}{2}");
        assert_eq!(latex_poly(&Poly::from_ints(&[0, -1])), "-x");
        assert_eq!(latex_poly(&Poly::from_ints(&[1, 12])), "12x+1");
    }

    #[test]
    fn plain_alignment() {
        let mut t = Table::new("t", &["a", "bb"]);
        t.row(vec![Cell::Int(10), Cell::Rat(frac(1, 3))]);
        assert_eq!(t.render(OutputFormat::Plain), "t\na   bb\n10  1/3\n");
    }
}
