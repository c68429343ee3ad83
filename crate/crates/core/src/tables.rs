//! Count triangles produced by any of the three independent routes.

use std::fmt;
use std::str::FromStr;

use crate::catalog::{CatalogGf, Statistic};
use crate::closed_forms::{a_formula_triangle, b_closed_triangle};
use crate::composition::Family;
use crate::enumerate::{BruteForce, CountTriangle};
use crate::error::{Error, Result};

/// How a count is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Exhaustive enumeration.
    Brute,
    /// Series expansion of the catalog generating function.
    #[default]
    Gf,
    /// Explicit sums and closed forms.
    Formula,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "gf" => Ok(Method::Gf),
            "formula" => Ok(Method::Formula),
            other => Err(Error::OutOfRange(format!("unknown method '{other}'"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Gf => "gf",
            Method::Formula => "formula",
        })
    }
}

/// Rows `0..=max_n` of the triangle counting `family` by `stat`.
pub fn count_triangle(
    family: Family,
    stat: Statistic,
    max_n: usize,
    method: Method,
    brute: BruteForce,
) -> Result<CountTriangle> {
    match method {
        Method::Brute => match stat {
            Statistic::Parts => brute.parts_triangle(max_n, family),
            Statistic::LastPart => brute.last_triangle(max_n, family),
            Statistic::None => Err(Error::OutOfRange("no statistic selected".into())),
        },
        Method::Gf => {
            let entry = CatalogGf::for_family(family, stat).ok_or_else(|| {
                Error::OutOfRange(format!("no generating function for {family} by this statistic"))
            })?;
            entry.build().expand(max_n).to_count_triangle()
        }
        Method::Formula => match (family, stat) {
            (Family::Arndt | Family::ReducedApRepresentative, Statistic::Parts) => {
                a_formula_triangle(max_n)
            }
            (Family::Arndt, Statistic::LastPart) => Ok(b_closed_triangle(max_n)),
            _ => Err(Error::OutOfRange(format!(
                "no closed form for {family} by this statistic"
            ))),
        },
    }
}
