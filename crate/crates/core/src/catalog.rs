//! The generating functions of every counting result, one constructor each.
//!
//! Constructors return the stated numerator/denominator pairs verbatim; the
//! only assembled one is [`gf_k_block`], built from the `J_j` factors.

use std::fmt;
use std::num::NonZeroUsize;

use crate::composition::Family;
use crate::error::{Error, Result};
use crate::series::{BivariatePolynomial as P, RationalGF};

fn gf(num: P, den: P) -> RationalGF {
    RationalGF::new(num, den).expect("catalog denominators have constant term 1")
}

/// `1 - x - x^2`
fn fib_den() -> P {
    P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0)])
}

/// Arndt compositions by weight and number of parts, `A(x, y)`.
pub fn gf_arndt() -> RationalGF {
    gf(
        P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (1, 3, 0), (1, 1, 1), (-1, 3, 1)]),
        P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (1, 3, 0), (-1, 3, 2)]),
    )
}

/// Anti-palindromic compositions by weight and number of parts, `Ap(x, y)`.
pub fn gf_antipalindromic() -> RationalGF {
    gf(
        P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (1, 3, 0), (1, 1, 1), (-1, 3, 1)]),
        P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (1, 3, 0), (-2, 3, 2)]),
    )
}

/// Reduced anti-palindromic compositions, `Bp(x, y)`. Identical to
/// [`gf_arndt`] term for term.
pub fn gf_reduced_ap() -> RationalGF {
    gf(
        P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (1, 3, 0), (1, 1, 1), (-1, 3, 1)]),
        P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (1, 3, 0), (-1, 3, 2)]),
    )
}

/// Arndt compositions by weight and last part, `B(x, y)`; the denominator
/// `(1 - x - x^2)(1 - xy)(1 - x^2 y)` is stored expanded.
pub fn gf_last_part() -> RationalGF {
    let num = P::from_terms(&[
        (1, 0, 0),
        (-1, 1, 0),
        (-1, 2, 0),
        (-1, 2, 1),
        (2, 3, 1),
        (2, 4, 1),
        (-1, 5, 1),
        (-1, 4, 2),
    ]);
    let den = fib_den()
        * P::from_terms(&[(1, 0, 0), (-1, 1, 1)])
        * P::from_terms(&[(1, 0, 0), (-1, 2, 1)]);
    gf(num, den)
}

/// `P(x) = Σ p(n) x^n`, total number of parts.
pub fn gf_total_parts() -> RationalGF {
    gf(
        P::from_terms(&[(1, 1, 0), (-1, 2, 0), (1, 4, 0), (-1, 5, 0)]),
        fib_den().pow(2),
    )
}

/// `D(x) = Σ d(n) x^n`, total of the last parts.
pub fn gf_total_last() -> RationalGF {
    gf(
        P::from_terms(&[(1, 1, 0), (1, 2, 0), (-1, 4, 0)]),
        P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-2, 2, 0), (1, 3, 0), (1, 4, 0)]),
    )
}

/// `A(x, 1) = (1 - x^2)/(1 - x - x^2)`.
pub fn gf_arndt_total() -> RationalGF {
    gf(P::from_terms(&[(1, 0, 0), (-1, 2, 0)]), fib_den())
}

/// `x/(1 - x - x^2)`, the Fibonacci numbers.
pub fn gf_fibonacci() -> RationalGF {
    gf(P::x(), fib_den())
}

/// All compositions by weight and parts, `(1 - x)/(1 - x - xy)`.
pub fn gf_unrestricted() -> RationalGF {
    gf(
        P::from_terms(&[(1, 0, 0), (-1, 1, 0)]),
        P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 1, 1)]),
    )
}

/// `k`-Arndt compositions by weight and parts, `A_k(x, y)`. The two sign
/// cases of `k` have different denominators.
pub fn gf_k_arndt(k: i64) -> RationalGF {
    // (1 - x^2)(1 - x(1 - y))
    let num = P::from_terms(&[(1, 0, 0), (-1, 2, 0)]) * P::from_terms(&[(1, 0, 0), (-1, 1, 0), (1, 1, 1)]);
    let den = if k >= 0 {
        let e = u32::try_from(k + 3).expect("k fits in u32");
        P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (1, 3, 0), (-1, e, 2)])
    } else {
        let e = u32::try_from(2 - k).expect("k fits in u32");
        // 1 - x - x^2(1 + y^2) + x^3(1 - y^2) + y^2 x^{2-k}
        P::from_terms(&[
            (1, 0, 0),
            (-1, 1, 0),
            (-1, 2, 0),
            (-1, 2, 2),
            (1, 3, 0),
            (-1, 3, 2),
            (1, e, 2),
        ])
    };
    gf(num, den)
}

/// `A_k(x, 1)` as displayed for each sign of `k`.
pub fn gf_k_arndt_total(k: i64) -> RationalGF {
    let num = P::from_terms(&[(1, 0, 0), (-1, 2, 0)]);
    let den = if k >= 0 {
        let e = u32::try_from(k + 3).expect("k fits in u32");
        P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (1, 3, 0), (-1, e, 0)])
    } else {
        let e = u32::try_from(2 - k).expect("k fits in u32");
        P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-2, 2, 0), (1, e, 0)])
    };
    gf(num, den)
}

/// `J_j(x, y) = x^{j(j+1)/2} y^j / Π_{l=1..j} (1 - x^l)`: partitions into
/// exactly `j` distinct parts, `y` marking the number of parts.
pub fn gf_j(j: usize) -> RationalGF {
    let j32 = u32::try_from(j).expect("j fits in u32");
    let num = P::from_terms(&[(1, j32 * (j32 + 1) / 2, j32)]);
    let den = (1..=j32).fold(P::one(), |acc, l| acc * P::from_terms(&[(1, 0, 0), (-1, l, 0)]));
    gf(num, den)
}

/// `k`-block Arndt compositions, `A^{(k)} = (Σ_{j<k} J_j) / (1 - J_k)`.
pub fn gf_k_block(k: NonZeroUsize) -> RationalGF {
    let k = k.get();
    let head = (0..k).fold(RationalGF::zero(), |acc, j| acc.add(&gf_j(j)));
    let tail = RationalGF::one().sub(&gf_j(k));
    head.div(&tail)
        .expect("1 - J_k has constant term 1 for k >= 1")
}

/// The expanded closed forms displayed for `k = 3` and `k = 4`.
pub fn gf_k_block_displayed(k: usize) -> Option<RationalGF> {
    match k {
        3 => {
            let num = P::from_terms(&[(1, 0, 0), (-1, 3, 0)])
                * P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (1, 3, 0), (1, 1, 1), (-1, 3, 1), (1, 3, 2)]);
            let den = P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (1, 4, 0), (1, 5, 0), (-1, 6, 0), (-1, 6, 3)]);
            Some(gf(num, den))
        }
        4 => {
            let num = P::from_terms(&[(1, 0, 0), (-1, 4, 0)])
                * P::from_terms(&[
                    (1, 0, 0),
                    (-1, 1, 0),
                    (-1, 2, 0),
                    (1, 4, 0),
                    (1, 5, 0),
                    (-1, 6, 0),
                    (1, 1, 1),
                    (-1, 3, 1),
                    (-1, 4, 1),
                    (1, 6, 1),
                    (1, 3, 2),
                    (-1, 6, 2),
                    (1, 6, 3),
                ]);
            let den = P::from_terms(&[
                (1, 0, 0),
                (-1, 1, 0),
                (-1, 2, 0),
                (2, 5, 0),
                (-1, 8, 0),
                (-1, 9, 0),
                (1, 10, 0),
                (-1, 10, 4),
            ]);
            Some(gf(num, den))
        }
        _ => None,
    }
}

/// The displayed `A^{(3)}(x, 1)` and `A^{(4)}(x, 1)`.
pub fn gf_k_block_total_displayed(k: usize) -> Option<RationalGF> {
    match k {
        3 => Some(gf(
            P::from_terms(&[(1, 0, 0), (-1, 2, 0), (1, 5, 0), (-1, 6, 0)]),
            P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (1, 4, 0), (1, 5, 0), (-2, 6, 0)]),
        )),
        4 => Some(gf(
            P::from_terms(&[(1, 0, 0), (-1, 1, 0)])
                * P::from_terms(&[(1, 0, 0), (1, 1, 0)])
                * P::from_terms(&[(1, 0, 0), (1, 2, 0)])
                * P::from_terms(&[(1, 0, 0), (-1, 2, 0), (1, 5, 0)]),
            P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (2, 5, 0), (-1, 8, 0), (-1, 9, 0)]),
        )),
        _ => None,
    }
}

/// Which statistic `y` marks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Parts,
    LastPart,
    /// Univariate series; `y` does not occur.
    None,
}

/// A named entry of the catalog, used by the CLI and the verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogGf {
    Arndt,
    AntiPalindromic,
    ReducedAp,
    LastPart,
    TotalParts,
    TotalLast,
    ArndtTotal,
    Unrestricted,
    KArndt(i64),
    KBlock(NonZeroUsize),
    DistinctParts(usize),
}

impl CatalogGf {
    pub const NAMES: &'static [&'static str] = &[
        "arndt",
        "antipalindromic",
        "reduced-ap",
        "last-part",
        "total-parts",
        "total-last",
        "arndt-total",
        "all",
        "k-arndt",
        "block-arndt",
        "distinct-parts",
    ];

    /// Resolves a catalog name; `k` is required by `k-arndt`, `block-arndt`
    /// and `distinct-parts`.
    pub fn parse(name: &str, k: Option<i64>) -> Result<Self> {
        let need_k = || {
            k.ok_or_else(|| Error::OutOfRange(format!("generating function '{name}' requires --k")))
        };
        Ok(match name {
            "arndt" => CatalogGf::Arndt,
            "antipalindromic" => CatalogGf::AntiPalindromic,
            "reduced-ap" => CatalogGf::ReducedAp,
            "last-part" => CatalogGf::LastPart,
            "total-parts" => CatalogGf::TotalParts,
            "total-last" => CatalogGf::TotalLast,
            "arndt-total" => CatalogGf::ArndtTotal,
            "all" => CatalogGf::Unrestricted,
            "k-arndt" => CatalogGf::KArndt(need_k()?),
            "block-arndt" => match Family::k_block(need_k()?)? {
                Family::KBlockArndt(k) => CatalogGf::KBlock(k),
                _ => unreachable!(),
            },
            "distinct-parts" => {
                let j = need_k()?;
                CatalogGf::DistinctParts(usize::try_from(j).map_err(|_| Error::InvalidFamilyParameter {
                    k: j,
                    reason: "number of distinct parts must be nonnegative",
                })?)
            }
            other => return Err(Error::OutOfRange(format!("unknown generating function '{other}'"))),
        })
    }

    pub fn build(&self) -> RationalGF {
        match *self {
            CatalogGf::Arndt => gf_arndt(),
            CatalogGf::AntiPalindromic => gf_antipalindromic(),
            CatalogGf::ReducedAp => gf_reduced_ap(),
            CatalogGf::LastPart => gf_last_part(),
            CatalogGf::TotalParts => gf_total_parts(),
            CatalogGf::TotalLast => gf_total_last(),
            CatalogGf::ArndtTotal => gf_arndt_total(),
            CatalogGf::Unrestricted => gf_unrestricted(),
            CatalogGf::KArndt(k) => gf_k_arndt(k),
            CatalogGf::KBlock(k) => gf_k_block(k),
            CatalogGf::DistinctParts(j) => gf_j(j),
        }
    }

    /// The family and statistic whose brute-force counts this series
    /// reproduces, when it is a bivariate counting series.
    pub fn counts(&self) -> Option<(Family, Statistic)> {
        match *self {
            CatalogGf::Arndt => Some((Family::Arndt, Statistic::Parts)),
            CatalogGf::AntiPalindromic => Some((Family::AntiPalindromic, Statistic::Parts)),
            CatalogGf::ReducedAp => Some((Family::ReducedApRepresentative, Statistic::Parts)),
            CatalogGf::LastPart => Some((Family::Arndt, Statistic::LastPart)),
            CatalogGf::Unrestricted => Some((Family::Unrestricted, Statistic::Parts)),
            CatalogGf::KArndt(k) => Some((Family::KArndt(k), Statistic::Parts)),
            CatalogGf::KBlock(k) => Some((Family::KBlockArndt(k), Statistic::Parts)),
            _ => None,
        }
    }

    /// Catalog series for a family and statistic, if one exists.
    pub fn for_family(family: Family, stat: Statistic) -> Option<Self> {
        match (family, stat) {
            (Family::Arndt, Statistic::Parts) => Some(CatalogGf::Arndt),
            (Family::Arndt, Statistic::LastPart) => Some(CatalogGf::LastPart),
            (Family::AntiPalindromic, Statistic::Parts) => Some(CatalogGf::AntiPalindromic),
            (Family::ReducedApRepresentative, Statistic::Parts) => Some(CatalogGf::ReducedAp),
            (Family::Unrestricted, Statistic::Parts) => Some(CatalogGf::Unrestricted),
            (Family::KArndt(k), Statistic::Parts) => Some(CatalogGf::KArndt(k)),
            (Family::KBlockArndt(k), Statistic::Parts) => Some(CatalogGf::KBlock(k)),
            _ => None,
        }
    }

    /// The fixed set of entries swept by the verifier.
    pub fn standard_entries() -> Vec<CatalogGf> {
        let mut out = vec![
            CatalogGf::Arndt,
            CatalogGf::AntiPalindromic,
            CatalogGf::ReducedAp,
            CatalogGf::LastPart,
            CatalogGf::TotalParts,
            CatalogGf::TotalLast,
            CatalogGf::ArndtTotal,
            CatalogGf::Unrestricted,
        ];
        out.extend((-5..=5).map(CatalogGf::KArndt));
        out.extend((1..=4).map(|k| CatalogGf::KBlock(NonZeroUsize::new(k).unwrap())));
        out.extend((0..=4).map(CatalogGf::DistinctParts));
        out
    }
}

impl fmt::Display for CatalogGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogGf::Arndt => f.write_str("arndt"),
            CatalogGf::AntiPalindromic => f.write_str("antipalindromic"),
            CatalogGf::ReducedAp => f.write_str("reduced-ap"),
            CatalogGf::LastPart => f.write_str("last-part"),
            CatalogGf::TotalParts => f.write_str("total-parts"),
            CatalogGf::TotalLast => f.write_str("total-last"),
            CatalogGf::ArndtTotal => f.write_str("arndt-total"),
            CatalogGf::Unrestricted => f.write_str("all"),
            CatalogGf::KArndt(k) => write!(f, "k-arndt(k={k})"),
            CatalogGf::KBlock(k) => write!(f, "block-arndt(k={k})"),
            CatalogGf::DistinctParts(j) => write!(f, "distinct-parts(j={j})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn row(f: &RationalGF, order: usize, n: usize) -> Vec<(usize, i64)> {
        f.expand(order)
            .row(n)
            .unwrap()
            .iter()
            .map(|(&m, c)| (m, c.to_integer().try_into().unwrap()))
            .collect()
    }

    fn totals(f: &RationalGF, order: usize) -> Vec<i64> {
        let s = f.expand(order);
        (0..=order)
            .map(|n| s.row_sum(n).to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn arndt_rows() {
        let a = gf_arndt();
        assert_eq!(row(&a, 6, 5), vec![(1, 1), (2, 2), (3, 2)]);
        assert_eq!(row(&a, 6, 6), vec![(1, 1), (2, 2), (3, 4), (4, 1)]);
        assert_eq!(row(&a, 0, 0), vec![(0, 1)]);
        assert_eq!(totals(&a.eval_y1().unwrap(), 7), vec![1, 1, 1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn last_part_rows() {
        let b = gf_last_part();
        assert_eq!(row(&b, 6, 6), vec![(1, 4), (2, 2), (3, 1), (6, 1)]);
        assert_eq!(row(&b, 5, 5), vec![(1, 2), (2, 2), (5, 1)]);
        assert_eq!(row(&b, 2, 2), vec![(2, 1)]);
    }

    #[test]
    fn totals_series() {
        assert_eq!(totals(&gf_total_parts(), 7), vec![0, 1, 1, 3, 6, 11, 21, 38]);
        assert_eq!(totals(&gf_total_last(), 7), vec![0, 1, 2, 4, 6, 11, 17, 29]);
    }

    #[test]
    fn derivative_forms_match_displayed() {
        assert!(gf_arndt().diff_y_at_1().unwrap().equivalent(&gf_total_parts()));
        assert!(gf_last_part().diff_y_at_1().unwrap().equivalent(&gf_total_last()));
    }

    #[test]
    fn k_arndt_examples() {
        let k3 = gf_k_arndt(3).eval_y1().unwrap().expand(10);
        assert_eq!(k3.row_sum(10), BigRational::from_integer(BigInt::from(10)));
        assert_eq!(row(&gf_k_arndt(-3), 4, 4), vec![(1, 1), (2, 3), (3, 3), (4, 1)]);
        assert_eq!(row(&gf_k_arndt(3), 7, 7), vec![(1, 1), (2, 1), (3, 1)]);
        assert_eq!(row(&gf_k_arndt(-3), 6, 6), vec![(1, 1), (2, 4), (3, 9), (4, 10), (5, 5), (6, 1)]);
        assert_eq!(gf_k_arndt(0).expand(30), gf_arndt().expand(30));
    }

    #[test]
    fn j_factors() {
        assert!(gf_j(0).equivalent(&RationalGF::one()));
        assert_eq!(row(&gf_j(1), 3, 3), vec![(1, 1)]);
        assert_eq!(row(&gf_j(2), 5, 5), vec![(2, 2)]);
    }

    #[test]
    fn block_totals_match_displayed() {
        let k3 = gf_k_block(NonZeroUsize::new(3).unwrap()).eval_y1().unwrap();
        assert_eq!(totals(&k3, 9), vec![1, 1, 1, 2, 2, 3, 4, 6, 8, 13]);
        let k4 = gf_k_block(NonZeroUsize::new(4).unwrap()).eval_y1().unwrap();
        assert_eq!(totals(&k4, 10), vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]);
        for k in [3, 4] {
            let built = gf_k_block(NonZeroUsize::new(k).unwrap());
            assert!(built.equivalent(&gf_k_block_displayed(k).unwrap()), "k={k}");
            assert!(gf_k_block_displayed(k)
                .unwrap()
                .eval_y1()
                .unwrap()
                .equivalent(&gf_k_block_total_displayed(k).unwrap()));
        }
        assert!(gf_k_block_displayed(5).is_none());
    }

    #[test]
    fn displayed_block3_total_is_exact_substitution() {
        assert_eq!(
            gf_k_block_displayed(3).unwrap().eval_y1().unwrap(),
            gf_k_block_total_displayed(3).unwrap()
        );
    }

    #[test]
    fn reduced_equals_arndt() {
        assert_eq!(gf_reduced_ap(), gf_arndt());
    }

    #[test]
    fn parse_names() {
        assert_eq!(CatalogGf::parse("arndt", None).unwrap(), CatalogGf::Arndt);
        assert_eq!(CatalogGf::parse("k-arndt", Some(-3)).unwrap(), CatalogGf::KArndt(-3));
        assert!(CatalogGf::parse("k-arndt", None).is_err());
        assert!(CatalogGf::parse("block-arndt", Some(0)).is_err());
        assert!(CatalogGf::parse("nope", None).is_err());
    }
}
