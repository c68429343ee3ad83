//! Enumeration and exact counting of Arndt compositions and their
//! generalizations.
//!
//! An Arndt composition has a descent inside every consecutive pair of parts:
//! `σ_1 > σ_2`, `σ_3 > σ_4`, and so on. Every count in this crate is reachable
//! by three independent routes:
//!
//! - [`enumerate`]: exhaustive generation (the ground truth),
//! - [`series`] + [`catalog`]: exact expansion of rational generating functions,
//! - [`closed_forms`]: explicit sums, recurrences and Fibonacci/Lucas formulas.
//!
//! [`verify`] cross-checks the routes against each other.
//!
//! ```
//! use arndt::catalog::gf_arndt;
//! use arndt::enumerate::count_by_parts;
//! use arndt::composition::Family;
//!
//! let series = gf_arndt().expand(6).to_count_triangle().unwrap();
//! let brute = count_by_parts(6, Family::Arndt).unwrap();
//! assert_eq!(series.row(6).unwrap(), &brute);
//! ```

pub mod asymptotics;
pub mod bfile;
pub mod bijection;
pub mod catalog;
pub mod closed_forms;
pub mod composition;
pub mod enumerate;
mod error;
pub mod series;
pub mod tables;
pub mod verify;

pub use composition::{Composition, Family};
pub use enumerate::{CountTriangle, Row};
pub use error::{Error, Result};
pub use series::{BivariatePolynomial, RationalGF, TruncatedSeries};

// the guide's snippets run as doctests
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/compositions.md")]
    mod compositions {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/closed_forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/bijection.md")]
    mod bijection {}
    #[doc = include_str!("../../../book/src/asymptotics.md")]
    mod asymptotics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
