//! OEIS b-file output and comparison against the bundled reference prefixes.
//!
//! A b-file is ASCII text, one `index value` pair per line. Lines starting
//! with `#` and blank lines are ignored when reading.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::catalog::{gf_arndt, gf_arndt_total, gf_total_last, Statistic};
use crate::closed_forms::{dn_closed, fib};
use crate::composition::Family;
use crate::enumerate::BruteForce;
use crate::error::{Error, Result};
use crate::tables::{count_triangle, Method};

pub type Entries = BTreeMap<u64, BigUint>;

/// The sequences that can be exported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sequence {
    /// `a(n) = F_n`, `n ≥ 1`.
    ArndtTotal,
    /// `a(n, m)` read by rows `n ≥ 1`, `m = 1..=⌊(2n+1)/3⌋`.
    PartsTriangleFlat,
    /// `d(n)`, `n ≥ 1`.
    LastSum,
}

impl Sequence {
    pub const ALL: [Sequence; 3] = [Sequence::ArndtTotal, Sequence::PartsTriangleFlat, Sequence::LastSum];

    pub fn name(&self) -> &'static str {
        match self {
            Sequence::ArndtTotal => "arndt-total",
            Sequence::PartsTriangleFlat => "parts-triangle-flat",
            Sequence::LastSum => "last-sum",
        }
    }

    pub fn oeis_id(&self) -> &'static str {
        match self {
            Sequence::ArndtTotal => "A000045",
            Sequence::PartsTriangleFlat => "A354787",
            Sequence::LastSum => "A014217",
        }
    }

    /// Bundled reference prefix in b-file format.
    pub fn reference_text(&self) -> &'static str {
        match self {
            Sequence::ArndtTotal => include_str!("../data/A000045.txt"),
            Sequence::PartsTriangleFlat => include_str!("../data/A354787.txt"),
            Sequence::LastSum => include_str!("../data/A014217.txt"),
        }
    }

    pub fn reference(&self) -> Entries {
        parse(self.reference_text()).expect("bundled reference is well formed")
    }

    /// Computes the sequence for weights `1..=max_n`.
    pub fn generate(&self, max_n: usize, method: Method, brute: BruteForce) -> Result<Entries> {
        let mut out = Entries::new();
        match self {
            Sequence::ArndtTotal => {
                let values = match method {
                    Method::Brute => (1..=max_n)
                        .map(|n| brute.count(n, Family::Arndt))
                        .collect::<Result<Vec<_>>>()?,
                    Method::Gf => gf_arndt_total().expand(max_n).univariate_counts()?[1..].to_vec(),
                    Method::Formula => (1..=max_n).map(fib).collect(),
                };
                out.extend(values.into_iter().enumerate().map(|(i, v)| (i as u64 + 1, v)));
            }
            Sequence::LastSum => {
                let values = match method {
                    Method::Brute => (1..=max_n)
                        .map(|n| brute.total_last(n))
                        .collect::<Result<Vec<_>>>()?,
                    Method::Gf => gf_total_last().expand(max_n).univariate_counts()?[1..].to_vec(),
                    Method::Formula => (1..=max_n).map(dn_closed).collect(),
                };
                out.extend(values.into_iter().enumerate().map(|(i, v)| (i as u64 + 1, v)));
            }
            Sequence::PartsTriangleFlat => {
                let tri = match method {
                    // the gf route goes through the bivariate series directly
                    Method::Gf => gf_arndt().expand(max_n).to_count_triangle()?,
                    _ => count_triangle(Family::Arndt, Statistic::Parts, max_n, method, brute)?,
                };
                let mut index = 1u64;
                for n in 1..=max_n {
                    for m in 1..=(2 * n + 1) / 3 {
                        out.insert(index, tri.get(n, m));
                        index += 1;
                    }
                }
            }
        }
        Ok(out)
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Sequence::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown sequence '{s}'")))
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn parse(text: &str) -> Result<Entries> {
    let mut out = Entries::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: &str| Error::BFileParse {
            line: lineno + 1,
            message: message.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (Some(i), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err("expected 'index value'"));
        };
        let i: u64 = i.parse().map_err(|_| err("bad index"))?;
        let v: BigUint = v.parse().map_err(|_| err("bad value"))?;
        if out.insert(i, v).is_some() {
            return Err(err("duplicate index"));
        }
    }
    Ok(out)
}

pub fn format(entries: &Entries) -> String {
    let mut s = String::new();
    for (i, v) in entries {
        s.push_str(&format!("{i} {v}\n"));
    }
    s
}

/// First disagreement between computed values and a reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: u64,
    pub got: BigUint,
    pub expected: BigUint,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "index {}: computed {}, reference {}", self.index, self.got, self.expected)
    }
}

/// Compares every index present in both maps; returns how many were
/// compared.
pub fn compare(ours: &Entries, reference: &Entries) -> std::result::Result<usize, Mismatch> {
    let mut compared = 0;
    for (i, v) in ours {
        if let Some(r) = reference.get(i) {
            if r != v {
                return Err(Mismatch {
                    index: *i,
                    got: v.clone(),
                    expected: r.clone(),
                });
            }
            compared += 1;
        }
    }
    Ok(compared)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_skips_comments() {
        let e = parse("# header\n\n1 1\n2 1\n3 2\n").unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(format(&e), "1 1\n2 1\n3 2\n");
        assert!(parse("1 x\n").is_err());
        assert!(parse("1\n").is_err());
        assert!(parse("1 2 3\n").is_err());
        assert!(parse("1 2\n1 3\n").is_err());
    }

    #[test]
    fn references_load() {
        for s in Sequence::ALL {
            assert!(!s.reference().is_empty(), "{s}");
        }
        assert_eq!(Sequence::LastSum.reference()[&7], BigUint::from(29u32));
    }

    #[test]
    fn mismatch_reported() {
        let ours: Entries = [(1, 1u32), (2, 5)].into_iter().map(|(i, v)| (i, v.into())).collect();
        let reference = Sequence::ArndtTotal.reference();
        let err = compare(&ours, &reference).unwrap_err();
        assert_eq!(err.index, 2);
    }

    #[test]
    fn zero_rows_is_empty() {
        for s in Sequence::ALL {
            for m in [Method::Brute, Method::Gf, Method::Formula] {
                assert!(s.generate(0, m, BruteForce::default()).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn short_prefixes_check() {
        for s in Sequence::ALL {
            for m in [Method::Brute, Method::Gf, Method::Formula] {
                let ours = s.generate(10, m, BruteForce::default()).unwrap();
                assert!(compare(&ours, &s.reference()).unwrap() > 0, "{s} {m}");
            }
        }
    }
}
