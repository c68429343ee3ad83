//! Text renderings of compositions, triangles and series rows.

use std::io::{self, Write};
use std::str::FromStr;

use arndt::series::TruncatedSeries;
use arndt::{Composition, CountTriangle};
use clap::ValueEnum;
use num_bigint::BigUint;
use serde_json::{json, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    JsonLines,
}

fn number(v: &impl ToString) -> Value {
    // arbitrary precision keeps every digit of large counts
    Value::Number(Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

pub fn composition(out: &mut impl Write, c: &Composition, format: Format) -> io::Result<()> {
    match format {
        Format::Plain => writeln!(out, "{c}"),
        Format::Csv => {
            let parts: Vec<String> = c.parts().iter().map(u64::to_string).collect();
            writeln!(out, "{},\"{}\"", c.weight(), parts.join(","))
        }
        Format::JsonLines => {
            let line = json!({ "n": c.weight(), "parts": c.parts() });
            writeln!(out, "{line}")
        }
    }
}

/// Cells `0..=m_max` of row `n`, where `m_max` is the last nonzero column.
fn dense_row(tri: &CountTriangle, n: usize) -> Vec<BigUint> {
    let last = tri
        .row(n)
        .and_then(|r| r.iter().rev().find(|(_, v)| **v != BigUint::default()).map(|(m, _)| *m))
        .unwrap_or(0);
    (0..=last).map(|m| tri.get(n, m)).collect()
}

pub fn triangle(out: &mut impl Write, tri: &CountTriangle, max_n: usize, format: Format) -> io::Result<()> {
    if format == Format::Csv {
        writeln!(out, "n,m,count")?;
    }
    for n in 0..=max_n {
        let cells = dense_row(tri, n);
        match format {
            Format::Plain => {
                let s: Vec<String> = cells.iter().map(BigUint::to_string).collect();
                writeln!(out, "{n}: {}", s.join(" "))?;
            }
            Format::Csv => {
                for (m, v) in cells.iter().enumerate() {
                    writeln!(out, "{n},{m},{v}")?;
                }
            }
            Format::JsonLines => {
                let row: Vec<Value> = cells.iter().map(number).collect();
                writeln!(out, "{}", json!({ "n": n, "row": row }))?;
            }
        }
    }
    Ok(())
}

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// `y^4 + 4*y^3 + 2*y^2 + y`, highest power first.
fn y_polynomial(terms: &[(usize, String)]) -> String {
    let mut s = String::new();
    for (i, (m, c)) in terms.iter().rev().enumerate() {
        let (neg, mag) = match c.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, c.as_str()),
        };
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let y = power("y", *m);
        s.push_str(&match (mag, y.is_empty()) {
            (_, true) => mag.to_string(),
            ("1", false) => y,
            (_, false) => format!("{mag}*{y}"),
        });
    }
    s
}

fn series_terms(s: &TruncatedSeries, n: usize) -> Vec<(usize, String)> {
    s.row(n)
        .map(|r| {
            r.iter()
                .filter(|(_, c)| **c != Default::default())
                .map(|(m, c)| (*m, c.to_string()))
                .collect()
        })
        .unwrap_or_default()
}

/// One line per nonzero row, in the style `x^6*(y^4 + 4*y^3 + 2*y^2 + y)`.
pub fn series(out: &mut impl Write, s: &TruncatedSeries, format: Format) -> io::Result<()> {
    if format == Format::Csv {
        writeln!(out, "n,m,coefficient")?;
    }
    for n in 0..=s.order() {
        let terms = series_terms(s, n);
        if terms.is_empty() {
            continue;
        }
        match format {
            Format::Plain => {
                let x = power("x", n);
                let poly = y_polynomial(&terms);
                let line = if x.is_empty() {
                    poly
                } else if terms.len() == 1 && terms[0].0 == 0 {
                    match terms[0].1.as_str() {
                        "1" => x,
                        c => format!("{c}*{x}"),
                    }
                } else {
                    format!("{x}*({poly})")
                };
                writeln!(out, "{line}")?;
            }
            Format::Csv => {
                for (m, c) in &terms {
                    writeln!(out, "{n},{m},{c}")?;
                }
            }
            Format::JsonLines => {
                for (m, c) in &terms {
                    let v = Number::from_str(c).map(Value::Number).unwrap_or_else(|_| json!(c));
                    writeln!(out, "{}", json!({ "n": n, "m": m, "coefficient": v }))?;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y_polynomials() {
        let t = |v: &[(usize, &str)]| -> Vec<(usize, String)> {
            v.iter().map(|(m, c)| (*m, c.to_string())).collect()
        };
        assert_eq!(y_polynomial(&t(&[(1, "1"), (2, "2"), (3, "4"), (4, "1")])), "y^4 + 4*y^3 + 2*y^2 + y");
        assert_eq!(y_polynomial(&t(&[(0, "3")])), "3");
        assert_eq!(y_polynomial(&t(&[(0, "1"), (2, "-2")])), "-2*y^2 + 1");
    }
}
