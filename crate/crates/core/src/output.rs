//! Rendering of tables, expansions and verification reports as JSON, CSV
//! or LaTeX. JSON uses the canonical coefficient-list encoding of `QRat`
//! and `XPoly`; the other formats are for reading.

use std::fmt::Write as _;

use serde::Serialize;

use crate::families::PolyFamily;
use crate::identities::IdentityReport;
use crate::qscalar::{format_bigrat, BigRat, QRat};
use crate::xpoly::XPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub number: QRat,
    pub number_text: String,
    pub polynomial: XPoly,
    pub polynomial_text: String,
}

impl TableRow {
    pub fn new(n: usize, number: QRat, polynomial: XPoly) -> Self {
        Self {
            n,
            number_text: number.to_string(),
            polynomial_text: polynomial.to_string(),
            number,
            polynomial,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub family: String,
    pub order: usize,
    pub at_q: Option<String>,
    pub rows: Vec<TableRow>,
    #[serde(skip)]
    pub symbols: Vec<String>,
}

impl Table {
    /// Rows of a family, optionally specialized at `q = at_q`.
    ///
    /// On a pole the offending index is returned with the error.
    pub fn build(
        family: &PolyFamily,
        at_q: Option<&BigRat>,
    ) -> Result<Self, (usize, crate::Error)> {
        let mut rows = Vec::with_capacity(family.len());
        for n in 0..family.len() {
            let (number, poly) = (family.number(n), family.member(n));
            let row = match at_q {
                None => TableRow::new(n, number.clone(), poly.clone()),
                Some(q0) => {
                    let number = number.eval_to_qrat(q0).map_err(|e| (n, e))?;
                    let poly = poly.eval_q(q0).map_err(|e| (n, e))?;
                    TableRow::new(n, number, poly)
                }
            };
            rows.push(row);
        }
        Ok(Self {
            family: format!("{:?}", family.kind()).to_lowercase(),
            order: family.order_r(),
            at_q: at_q.map(format_bigrat),
            symbols: (0..family.len()).map(|n| family.latex_symbol(n)).collect(),
            rows,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => {
                let mut out = String::from("n,number,polynomial\n");
                for row in &self.rows {
                    let _ = writeln!(
                        out,
                        "{},{},{}",
                        row.n,
                        csv_field(&row.number_text),
                        csv_field(&row.polynomial_text)
                    );
                }
                out
            }
            Format::Latex => {
                let symbol = self.symbols.first().map_or("S", |s| &s[..1]);
                let mut out = format!(
                    "% {symbol}_n(x) = \\sum_{{l=0}}^{{n}} \\binom{{n}}{{l}}_q {symbol}_l x^{{n-l}}\n"
                );
                if let Some(q0) = &self.at_q {
                    let _ = writeln!(out, "% q = {q0}");
                }
                out.push_str("\\begin{align*}\n");
                for (row, sym) in self.rows.iter().zip(&self.symbols) {
                    let _ = writeln!(out, "{sym} &= {} \\\\", row.number.to_latex());
                    let _ = writeln!(out, "{sym}(x) &= {} \\\\", row.polynomial.to_latex());
                }
                out.push_str("\\end{align*}\n");
                out
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Expansion {
    pub input: String,
    pub basis: String,
    pub r: usize,
    pub coefficients: Vec<QRat>,
    pub coefficients_text: Vec<String>,
    pub reconstructed: bool,
}

impl Expansion {
    pub fn new(
        input: &str,
        basis: &str,
        r: usize,
        coefficients: Vec<QRat>,
        reconstructed: bool,
    ) -> Self {
        Self {
            input: input.to_string(),
            basis: basis.to_string(),
            r,
            coefficients_text: coefficients.iter().map(ToString::to_string).collect(),
            coefficients,
            reconstructed,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => {
                let mut out = String::from("k,coefficient\n");
                for (k, c) in self.coefficients_text.iter().enumerate() {
                    let _ = writeln!(out, "{k},{}", csv_field(c));
                }
                out
            }
            Format::Latex => {
                let basis = if self.basis == "euler" {
                    "E_{k,q}(x)".to_string()
                } else {
                    format!("E^{{({})}}_{{k,q}}(x)", self.r)
                };
                let mut out = format!("% p(x) = \\sum_k b_k {basis}\n\\begin{{align*}}\n");
                for (k, c) in self.coefficients.iter().enumerate() {
                    let _ = writeln!(out, "b_{{{k}}} &= {} \\\\", c.to_latex());
                }
                out.push_str("\\end{align*}\n");
                out
            }
        }
    }
}

/// Render verification reports. `elapsed_ms` is only filled in when
/// `timings` is set, so that repeated runs are byte-identical.
pub fn render_reports(reports: &[IdentityReport], format: Format, timings: bool) -> String {
    match format {
        Format::Json => {
            let views: Vec<_> = reports.iter().map(|r| r.json_view(timings)).collect();
            json(&views)
        }
        Format::Csv => {
            let mut out = String::from("id,n_max,r_max,status,witnesses,elapsed_ms\n");
            for r in reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.id,
                    r.n_max,
                    r.r_max.map(|v| v.to_string()).unwrap_or_default(),
                    status_text(r),
                    r.witnesses.len(),
                    if timings {
                        r.elapsed.as_millis().to_string()
                    } else {
                        String::new()
                    },
                );
            }
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{lrrlr}\nid & $n_{\\max}$ & $r_{\\max}$ & status & witnesses \\\\\n\\hline\n");
            for r in reports {
                let _ = writeln!(
                    out,
                    "\\texttt{{{}}} & {} & {} & {} & {} \\\\",
                    r.id,
                    r.n_max,
                    r.r_max
                        .map(|v| v.to_string())
                        .unwrap_or_else(|| "--".into()),
                    status_text(r),
                    r.witnesses.len(),
                );
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evaluation {
    pub input: String,
    pub x: String,
    pub q: Option<String>,
    pub value: QRat,
    pub value_text: String,
}

impl Evaluation {
    pub fn new(input: &str, x: &BigRat, q: Option<&BigRat>, value: QRat) -> Self {
        Self {
            input: input.to_string(),
            x: format_bigrat(x),
            q: q.map(format_bigrat),
            value_text: value.to_string(),
            value,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => format!(
                "input,x,q,value\n{},{},{},{}\n",
                csv_field(&self.input),
                self.x,
                self.q.as_deref().unwrap_or(""),
                csv_field(&self.value_text)
            ),
            Format::Latex => format!("{}\n", self.value.to_latex()),
        }
    }
}

fn status_text(r: &IdentityReport) -> &'static str {
    if r.passed() {
        "pass"
    } else {
        "fail"
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
