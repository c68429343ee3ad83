//! Exact bivariate polynomials, rational generating functions, and their
//! truncated series expansions.
//!
//! `x` marks weight and `y` marks the statistic. Coefficients are exact
//! rationals; integrality of a final expansion is checked, never assumed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::enumerate::{CountTriangle, Row};
use crate::error::{Error, Result};

/// Default x-order for expansions.
pub const DEFAULT_ORDER: usize = 64;

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Polynomial in `x` and `y` with exact rational coefficients. Keys are
/// `(deg_x, deg_y)`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(rat(c), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(rat(1), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(rat(1), 0, 1)
    }

    /// `c · x^i y^j`
    pub fn monomial(c: BigRational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    /// From integer terms `(coefficient, deg_x, deg_y)`; repeated monomials
    /// accumulate.
    pub fn from_terms(terms: &[(i64, u32, u32)]) -> Self {
        let mut p = Self::zero();
        for &(c, i, j) in terms {
            p.add_term(i, j, rat(c));
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigRational)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// True when no term involves `y`.
    pub fn is_univariate(&self) -> bool {
        self.terms.keys().all(|k| k.1 == 0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivariatePolynomial {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Multiply by `x^i y^j`.
    pub fn shift(&self, i: u32, j: u32) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a + i, b + j), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Drops every term with `deg_x > max_x` or `deg_y > max_y`.
    pub fn truncate(&self, max_x: u32, max_y: u32) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.0 <= max_x && k.1 <= max_y)
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }

    /// Substitute `y = 1`.
    pub fn eval_y1(&self) -> Self {
        let mut p = Self::zero();
        for (&(i, _), c) in &self.terms {
            p.add_term(i, 0, c.clone());
        }
        p
    }

    /// Partial derivative with respect to `y`.
    pub fn diff_y(&self) -> Self {
        let mut p = Self::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                p.add_term(i, j - 1, c * rat(i64::from(j)));
            }
        }
        p
    }

    /// Partial derivative with respect to `x`.
    pub fn diff_x(&self) -> Self {
        let mut p = Self::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                p.add_term(i - 1, j, c * rat(i64::from(i)));
            }
        }
        p
    }

    /// Evaluates at `(x, y)` in double precision.
    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                c.to_f64().unwrap_or(f64::NAN) * x.powi(i as i32) * y.powi(j as i32)
            })
            .sum()
    }

    /// Largest `x^a y^b` dividing every term; `(0, 0)` for the zero polynomial.
    fn monomial_content(&self) -> (u32, u32) {
        let a = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let b = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (a, b)
    }

    fn unshift(&self, a: u32, b: u32) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), v)| ((i - a, j - b), v.clone()))
                .collect(),
        }
    }

    /// Coefficients grouped by `x`-degree: `out[i]` is the `y`-polynomial
    /// multiplying `x^i`.
    fn rows_by_x(&self) -> Vec<BTreeMap<usize, BigRational>> {
        let len = self.degree_x().map_or(0, |d| d as usize + 1);
        let mut out = vec![BTreeMap::new(); len];
        for (&(i, j), c) in &self.terms {
            out[i as usize].insert(j as usize, c.clone());
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (&(i, j), c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            match i {
                0 => {}
                1 => factors.push("x".into()),
                _ => factors.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("y".into()),
                _ => factors.push(format!("y^{j}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $m(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BivariatePolynomial> for BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $m(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        -&self
    }
}

pub fn poly_add(p: &BivariatePolynomial, q: &BivariatePolynomial) -> BivariatePolynomial {
    p + q
}

pub fn poly_mul(p: &BivariatePolynomial, q: &BivariatePolynomial) -> BivariatePolynomial {
    p * q
}

pub fn poly_scale(p: &BivariatePolynomial, c: &BigRational) -> BivariatePolynomial {
    p.scale(c)
}

/// A formal power series given as `numerator / denominator`, with the
/// denominator's constant term nonzero.
///
/// No gcd normalization is ever performed, so two equal series can have
/// different representations; compare with [`RationalGF::equivalent`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: BivariatePolynomial,
    denominator: BivariatePolynomial,
}

impl RationalGF {
    /// Fails if the quotient is not a power series. A common monomial factor
    /// `x^a y^b` is cancelled first, so `x / x` is accepted.
    pub fn new(numerator: BivariatePolynomial, denominator: BivariatePolynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::NotAPowerSeries("zero denominator"));
        }
        if !denominator.constant_term().is_zero() {
            return Ok(RationalGF {
                numerator,
                denominator,
            });
        }
        let (da, db) = denominator.monomial_content();
        let (na, nb) = if numerator.is_zero() {
            (da, db)
        } else {
            numerator.monomial_content()
        };
        let (a, b) = (da.min(na), db.min(nb));
        let denominator = denominator.unshift(a, b);
        if denominator.constant_term().is_zero() {
            return Err(Error::NotAPowerSeries(
                "denominator has zero constant term",
            ));
        }
        let numerator = if numerator.is_zero() {
            numerator
        } else {
            numerator.unshift(a, b)
        };
        Ok(RationalGF {
            numerator,
            denominator,
        })
    }

    pub fn from_polynomial(p: BivariatePolynomial) -> Self {
        RationalGF {
            numerator: p,
            denominator: BivariatePolynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_polynomial(BivariatePolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(BivariatePolynomial::one())
    }

    pub fn numerator(&self) -> &BivariatePolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &BivariatePolynomial {
        &self.denominator
    }

    pub fn into_parts(self) -> (BivariatePolynomial, BivariatePolynomial) {
        (self.numerator, self.denominator)
    }

    pub fn is_univariate(&self) -> bool {
        self.numerator.is_univariate() && self.denominator.is_univariate()
    }

    pub fn add(&self, other: &RationalGF) -> RationalGF {
        if self.denominator == other.denominator {
            return RationalGF {
                numerator: &self.numerator + &other.numerator,
                denominator: self.denominator.clone(),
            };
        }
        RationalGF {
            numerator: &(&self.numerator * &other.denominator)
                + &(&other.numerator * &self.denominator),
            denominator: &self.denominator * &other.denominator,
        }
    }

    pub fn sub(&self, other: &RationalGF) -> RationalGF {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RationalGF {
        RationalGF {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    pub fn mul(&self, other: &RationalGF) -> RationalGF {
        RationalGF {
            numerator: &self.numerator * &other.numerator,
            denominator: &self.denominator * &other.denominator,
        }
    }

    /// Errors when the quotient has no power-series expansion.
    pub fn div(&self, other: &RationalGF) -> Result<RationalGF> {
        if other.numerator.is_zero() {
            return Err(Error::NotAPowerSeries("division by zero series"));
        }
        RationalGF::new(
            &self.numerator * &other.denominator,
            &self.denominator * &other.numerator,
        )
    }

    /// Decides equality of the two series by cross-multiplication.
    pub fn equivalent(&self, other: &RationalGF) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    /// Substitute `y = 1` in numerator and denominator.
    pub fn eval_y1(&self) -> Result<RationalGF> {
        RationalGF::new(self.numerator.eval_y1(), self.denominator.eval_y1())
    }

    /// `∂/∂y` by the quotient rule, then `y = 1`.
    pub fn diff_y_at_1(&self) -> Result<RationalGF> {
        let n = &self.numerator;
        let d = &self.denominator;
        let top = &(&n.diff_y() * d) - &(n * &d.diff_y());
        RationalGF::new(top.eval_y1(), (d * d).eval_y1())
    }

    /// Expansion to `x`-order `order`, with `y`-order equal to `order`.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        self.expand_with_y_order(order, order)
    }

    /// Coefficients `c(n, m)` for `n ≤ x_order`, `m ≤ y_order`, obtained from
    /// the row recurrence `Σ_i D_i(y) c_{n-i}(y) = N_n(y)`.
    pub fn expand_with_y_order(&self, x_order: usize, y_order: usize) -> TruncatedSeries {
        let num = self.numerator.rows_by_x();
        let den = self.denominator.rows_by_x();
        let d0 = &den[0];
        let d00 = d0.get(&0).cloned().expect("denominator constant term");
        let mut rows: Vec<BTreeMap<usize, BigRational>> = Vec::with_capacity(x_order + 1);
        for n in 0..=x_order {
            let mut rhs: Vec<BigRational> = vec![BigRational::zero(); y_order + 1];
            if let Some(nr) = num.get(n) {
                for (&j, c) in nr {
                    if j <= y_order {
                        rhs[j] += c;
                    }
                }
            }
            for (i, di) in den.iter().enumerate().skip(1).take(n) {
                let prev = &rows[n - i];
                for (&j1, c1) in di {
                    for (&j2, c2) in prev {
                        if j1 + j2 <= y_order {
                            rhs[j1 + j2] -= c1 * c2;
                        }
                    }
                }
            }
            // divide by D_0(y) as a power series in y
            let mut row = vec![BigRational::zero(); y_order + 1];
            for j in 0..=y_order {
                let mut acc = std::mem::take(&mut rhs[j]);
                if j > 0 {
                    for (&t, c) in d0.range(1..=j) {
                        acc -= c * &row[j - t];
                    }
                }
                row[j] = acc / &d00;
            }
            rows.push(
                row.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            );
        }
        TruncatedSeries {
            x_order,
            y_order,
            rows,
        }
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

pub fn rational_add(f: &RationalGF, g: &RationalGF) -> RationalGF {
    f.add(g)
}

pub fn rational_mul(f: &RationalGF, g: &RationalGF) -> RationalGF {
    f.mul(g)
}

pub fn rational_div(f: &RationalGF, g: &RationalGF) -> Result<RationalGF> {
    f.div(g)
}

pub fn expand(f: &RationalGF, order: usize) -> TruncatedSeries {
    f.expand(order)
}

pub fn diff_y_at_1(f: &RationalGF) -> Result<RationalGF> {
    f.diff_y_at_1()
}

pub fn eval_y1(f: &RationalGF) -> Result<RationalGF> {
    f.eval_y1()
}

/// Coefficients `[x^n y^m]` for `n ≤ x_order`, `m ≤ y_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    x_order: usize,
    y_order: usize,
    rows: Vec<BTreeMap<usize, BigRational>>,
}

impl TruncatedSeries {
    pub fn order(&self) -> usize {
        self.x_order
    }

    pub fn y_order(&self) -> usize {
        self.y_order
    }

    pub fn coeff(&self, n: usize, m: usize) -> BigRational {
        self.rows
            .get(n)
            .and_then(|r| r.get(&m))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn row(&self, n: usize) -> Option<&BTreeMap<usize, BigRational>> {
        self.rows.get(n)
    }

    /// `Σ_m c(n, m)`, the row at `y = 1`.
    pub fn row_sum(&self, n: usize) -> BigRational {
        self.rows
            .get(n)
            .map(|r| r.values().sum())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn to_polynomial(&self) -> BivariatePolynomial {
        let mut terms = BTreeMap::new();
        for (n, row) in self.rows.iter().enumerate() {
            for (&m, c) in row {
                terms.insert((n as u32, m as u32), c.clone());
            }
        }
        BivariatePolynomial { terms }
    }

    pub fn is_nonnegative_integral(&self) -> bool {
        self.rows
            .iter()
            .flat_map(|r| r.values())
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Every nonzero coefficient sits at `m ≤ n`.
    pub fn is_lower_triangular(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(n, r)| r.keys().all(|&m| m <= n))
    }

    /// Converts to exact counts, failing on any coefficient that is not a
    /// nonnegative integer.
    pub fn to_count_triangle(&self) -> Result<CountTriangle> {
        let mut tri = CountTriangle::new();
        for (n, r) in self.rows.iter().enumerate() {
            let mut row = Row::new();
            for (&m, c) in r {
                row.insert(m, rational_to_count(c, n, m)?);
            }
            tri.push_row(row);
        }
        Ok(tri)
    }

    /// Coefficients of a series in `x` alone (`m = 0`), as counts.
    pub fn univariate_counts(&self) -> Result<Vec<BigUint>> {
        (0..=self.x_order)
            .map(|n| rational_to_count(&self.coeff(n, 0), n, 0))
            .collect()
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let x_order = self.x_order.min(other.x_order);
        let y_order = self.y_order.min(other.y_order);
        let rows = (0..=x_order)
            .map(|n| {
                let mut row: BTreeMap<usize, BigRational> = BTreeMap::new();
                for r in [&self.rows[n], &other.rows[n]] {
                    for (&m, c) in r.range(..=y_order) {
                        *row.entry(m).or_insert_with(BigRational::zero) += c;
                    }
                }
                row.retain(|_, c| !c.is_zero());
                row
            })
            .collect();
        TruncatedSeries {
            x_order,
            y_order,
            rows,
        }
    }
}

fn rational_to_count(c: &BigRational, n: usize, m: usize) -> Result<BigUint> {
    if !c.is_integer() || c.is_negative() {
        return Err(Error::NonIntegerCoefficient {
            n,
            m,
            value: c.to_string(),
        });
    }
    Ok(c.to_integer().magnitude().clone())
}

/// `denominator · series ≡ numerator` after truncation to the series order.
pub fn round_trip_holds(f: &RationalGF, series: &TruncatedSeries) -> bool {
    let xo = series.order() as u32;
    let yo = series.y_order() as u32;
    let lhs = (f.denominator() * &series.to_polynomial()).truncate(xo, yo);
    lhs == f.numerator().truncate(xo, yo)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = BivariatePolynomial;

    fn ints(row: &BTreeMap<usize, BigRational>) -> Vec<(usize, i64)> {
        row.iter().map(|(&m, c)| (m, c.to_integer().try_into().unwrap())).collect()
    }

    #[test]
    fn ring_arithmetic() {
        let one_minus_x = P::from_terms(&[(1, 0, 0), (-1, 1, 0)]);
        let one_plus_x = P::from_terms(&[(1, 0, 0), (1, 1, 0)]);
        assert_eq!(&one_minus_x * &one_plus_x, P::from_terms(&[(1, 0, 0), (-1, 2, 0)]));
        assert_eq!(
            &one_minus_x.pow(2) * &one_plus_x,
            P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (1, 3, 0)])
        );
        assert!((&one_minus_x - &one_minus_x).is_zero());
        assert_eq!(poly_scale(&one_plus_x, &rat(0)), P::zero());
        assert_eq!(poly_add(&one_minus_x, &one_plus_x), P::constant(2));
    }

    #[test]
    fn display() {
        let p = P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-2, 3, 2), (1, 1, 1)]);
        assert_eq!(p.to_string(), "1 - x + x*y - 2*x^3*y^2");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::constant(-3).to_string(), "-3");
    }

    #[test]
    fn derivatives() {
        let p = P::from_terms(&[(3, 2, 3), (1, 1, 0)]);
        assert_eq!(p.diff_y(), P::from_terms(&[(9, 2, 2)]));
        assert_eq!(p.diff_x(), P::from_terms(&[(6, 1, 3), (1, 0, 0)]));
        assert_eq!(p.eval_y1(), P::from_terms(&[(3, 2, 0), (1, 1, 0)]));
    }

    #[test]
    fn zero_constant_denominator_rejected() {
        let x = P::x();
        assert!(RationalGF::new(P::one(), x.clone()).is_err());
        // common monomial cancels
        let f = RationalGF::new(x.clone(), x.clone()).unwrap();
        assert!(f.equivalent(&RationalGF::one()));
        assert!(RationalGF::one().div(&RationalGF::from_polynomial(x)).is_err());
        assert!(RationalGF::one().div(&RationalGF::zero()).is_err());
    }

    #[test]
    fn geometric_series() {
        let f = RationalGF::new(P::one(), P::from_terms(&[(1, 0, 0), (-1, 1, 0)])).unwrap();
        let s = f.expand(5);
        for n in 0..=5 {
            assert_eq!(s.coeff(n, 0), rat(1));
        }
        assert!(round_trip_holds(&f, &s));
    }

    #[test]
    fn rational_sum_with_j1() {
        // J_0 + J_1 = 1 + xy/(1-x) = (1 - x + xy)/(1 - x)
        let one_minus_x = P::from_terms(&[(1, 0, 0), (-1, 1, 0)]);
        let j1 = RationalGF::new(P::from_terms(&[(1, 1, 1)]), one_minus_x.clone()).unwrap();
        let sum = RationalGF::one().add(&j1);
        let expected =
            RationalGF::new(P::from_terms(&[(1, 0, 0), (-1, 1, 0), (1, 1, 1)]), one_minus_x).unwrap();
        assert!(sum.equivalent(&expected));
        assert_eq!(sum.expand(12), expected.expand(12));
        assert!(RationalGF::zero().add(&sum).equivalent(&sum));
    }

    #[test]
    fn y_dependent_constant_denominator() {
        // 1/(1 - y) = Σ y^m in every row 0 only
        let f = RationalGF::new(P::one(), P::from_terms(&[(1, 0, 0), (-1, 0, 1)])).unwrap();
        let s = f.expand_with_y_order(2, 4);
        assert_eq!(ints(s.row(0).unwrap()), vec![(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]);
        assert!(s.row(1).unwrap().is_empty());
        assert!(round_trip_holds(&f, &s));
    }

    #[test]
    fn non_integral_detected() {
        let f = RationalGF::new(P::one(), P::constant(2)).unwrap();
        let s = f.expand(1);
        assert!(!s.is_nonnegative_integral());
        assert!(s.to_count_triangle().is_err());
    }

    #[test]
    fn diff_of_y_free_is_zero() {
        let f = RationalGF::new(P::x(), P::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0)])).unwrap();
        assert!(f.diff_y_at_1().unwrap().numerator().is_zero());
        assert_eq!(f.eval_y1().unwrap(), f);
    }
}
