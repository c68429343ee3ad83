//! Explicit sums, recurrences and Fibonacci/Lucas evaluations, all in exact
//! integer arithmetic.

use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::enumerate::{CountTriangle, Row};
use crate::error::{Error, Result};

/// Growable table of Fibonacci (`F_0 = 0, F_1 = 1`) and Lucas
/// (`L_0 = 2, L_1 = 1`) numbers. Readers always see a consistent prefix.
#[derive(Debug)]
pub struct FibCache {
    table: RwLock<(Vec<BigUint>, Vec<BigUint>)>,
}

impl Default for FibCache {
    fn default() -> Self {
        FibCache {
            table: RwLock::new((
                vec![BigUint::zero(), BigUint::one()],
                vec![BigUint::from(2u32), BigUint::one()],
            )),
        }
    }
}

impl FibCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn ensure(&self, n: usize) {
        if self.table.read().expect("fib cache poisoned").0.len() > n {
            return;
        }
        let mut guard = self.table.write().expect("fib cache poisoned");
        let (fib, lucas) = &mut *guard;
        while fib.len() <= n {
            let k = fib.len();
            let f = &fib[k - 1] + &fib[k - 2];
            let l = &lucas[k - 1] + &lucas[k - 2];
            fib.push(f);
            lucas.push(l);
        }
    }

    pub fn fib(&self, n: usize) -> BigUint {
        self.ensure(n);
        self.table.read().expect("fib cache poisoned").0[n].clone()
    }

    pub fn lucas(&self, n: usize) -> BigUint {
        self.ensure(n);
        self.table.read().expect("fib cache poisoned").1[n].clone()
    }

    /// Number of cached entries.
    pub fn len(&self) -> usize {
        self.table.read().expect("fib cache poisoned").0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

static FIB: LazyLock<FibCache> = LazyLock::new(FibCache::new);

/// `F_n` from the shared cache.
pub fn fib(n: usize) -> BigUint {
    FIB.fib(n)
}

/// `L_n` from the shared cache.
pub fn lucas(n: usize) -> BigUint {
    FIB.lucas(n)
}

fn fib_i(n: i64) -> BigInt {
    debug_assert!(n >= 0, "negative Fibonacci index {n}");
    BigInt::from(fib(n as usize))
}

/// Generalized binomial coefficient.
///
/// For `q ≥ 0` this is the falling factorial `p(p-1)⋯(p-q+1)/q!`, valid for
/// negative `p` (so `C(-1, 0) = 1`, `C(-1, 1) = -1`) and zero when
/// `0 ≤ p < q`. For `q < 0` it is zero except when `q ≤ p < 0`, where the
/// reflection `(-1)^{p-q} C(-q-1, p-q)` applies; this gives `C(-1, -1) = 1`,
/// which the positive sum for `a(0, 0)` relies on.
pub fn gen_binomial(p: i64, q: i64) -> BigInt {
    if q < 0 {
        if p < 0 && q <= p {
            let v = gen_binomial(-q - 1, p - q);
            return if (p - q) % 2 == 0 { v } else { -v };
        }
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..q {
        acc = acc * BigInt::from(p - i) / BigInt::from(i + 1);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

fn floor_half(v: i64) -> i64 {
    v.div_euclid(2)
}

/// `a(n, m)` by the alternating single sum.
pub fn a_sum_alternating(n: usize, m: usize) -> BigInt {
    let (n, m) = (n as i64, m as i64);
    let upper = n - m - floor_half(m);
    if upper < 0 {
        return BigInt::zero();
    }
    (0..=upper)
        .map(|l| {
            let term = gen_binomial(m + l - 1, l) * gen_binomial(n - m - l - 1, upper - l);
            if (upper - l) % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `a(n, m)` by the sum with nonnegative terms.
pub fn a_sum_positive(n: usize, m: usize) -> BigInt {
    let (n, m) = (n as i64, m as i64);
    let half = floor_half(m);
    let span = n - m - half;
    if span < 0 {
        return BigInt::zero();
    }
    let bottom = floor_half(m - 1);
    (0..=floor_half(span))
        .map(|l| gen_binomial(half + l - 1, l) * gen_binomial(n - 2 * half - 2 * l - 1, bottom))
        .sum()
}

fn to_count(v: BigInt, n: usize, m: usize) -> Result<BigUint> {
    v.to_biguint().ok_or_else(|| Error::NegativeCount {
        n,
        m,
        value: v.to_string(),
    })
}

/// Triangle of `a(n, m)`, `n ≤ max_n`, from [`a_sum_alternating`].
pub fn a_formula_triangle(max_n: usize) -> Result<CountTriangle> {
    let mut tri = CountTriangle::new();
    for n in 0..=max_n {
        let mut row = Row::new();
        for m in 0..=n {
            row.insert(m, to_count(a_sum_alternating(n, m), n, m)?);
        }
        tri.push_row(row);
    }
    Ok(tri)
}

/// `a(n, m)` for all `n ≤ max_n` by the four-term recurrence
/// `a(n,m) = a(n-1,m) + a(n-2,m) - a(n-3,m) + a(n-3,m-2)`, seeded with
/// `a(n,0) = [n = 0]`, `a(n,1) = 1` for `n ≥ 1`, and rows `n ≤ 2`.
pub fn a_recurrence_triangle(max_n: usize) -> CountTriangle {
    a_recurrence_columns(max_n, max_n)
}

/// As [`a_recurrence_triangle`], keeping only columns `m ≤ max_m`. Column
/// `m` depends only on columns `m` and `m - 2`, so truncation is exact.
pub fn a_recurrence_columns(max_n: usize, max_m: usize) -> CountTriangle {
    let width = max_m + 1;
    let mut grid: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); width]; max_n + 1];
    grid[0][0] = BigInt::one();
    for row in grid.iter_mut().skip(1) {
        if width > 1 {
            row[1] = BigInt::one();
        }
    }
    for n in 3..=max_n {
        for m in 2..width.min(n + 1) {
            let v = &grid[n - 1][m] + &grid[n - 2][m] - &grid[n - 3][m] + &grid[n - 3][m - 2];
            grid[n][m] = v;
        }
    }
    CountTriangle::from_rows(
        grid.into_iter()
            .map(|r| {
                r.into_iter()
                    .enumerate()
                    .map(|(m, v)| (m, v.to_biguint().expect("recurrence stays nonnegative")))
                    .collect()
            })
            .collect(),
    )
}

/// Left-hand side of the three-term relation
/// `(m-n-2+⌊m/2⌋) a(n+2,m) + (m-⌊m/2⌋) a(n+1,m) + n a(n,m)`, which vanishes
/// identically. `tri` must hold rows through `n + 2`.
pub fn wz_residual(n: usize, m: usize, tri: &CountTriangle) -> Result<BigInt> {
    let available = tri.max_n().unwrap_or(0);
    if tri.is_empty() || n + 2 > available {
        return Err(Error::InsufficientTable {
            needed: n + 2,
            available,
        });
    }
    let (ni, mi) = (n as i64, m as i64);
    let c2 = BigInt::from(mi - ni - 2 + mi / 2);
    let c1 = BigInt::from(mi - mi / 2);
    let c0 = BigInt::from(ni);
    Ok(c2 * BigInt::from(tri.get(n + 2, m))
        + c1 * BigInt::from(tri.get(n + 1, m))
        + c0 * BigInt::from(tri.get(n, m)))
}

/// `Σ_{m=0}^{n} a(n, m)` with the alternating summand.
pub fn fib_double_sum_1(n: usize) -> BigInt {
    (0..=n).map(|m| a_sum_alternating(n, m)).sum()
}

/// `Σ_{m=0}^{n} a(n, m)` with the positive summand.
pub fn fib_double_sum_2(n: usize) -> BigInt {
    (0..=n).map(|m| a_sum_positive(n, m)).sum()
}

fn t1(k: usize) -> BigUint {
    match k {
        0 => BigUint::one(),
        1 => BigUint::zero(),
        _ => fib(k - 2),
    }
}

fn t2(k: usize) -> BigUint {
    match k {
        0 => BigUint::zero(),
        1 => BigUint::one(),
        _ => fib(k - 1),
    }
}

/// `b(n, m)`: Arndt compositions of `n` with last part `m`.
///
/// `t_1(n-m)` when `m ≤ n < 2m`, `t_1(n-m) + t_2(n-2m)` when `n ≥ 2m`, else 0.
/// Column 0 holds only the empty composition, `b(0, 0) = 1`.
pub fn b_closed(n: usize, m: usize) -> BigUint {
    if m == 0 {
        return if n == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if n < m {
        BigUint::zero()
    } else if n < 2 * m {
        t1(n - m)
    } else {
        t1(n - m) + t2(n - 2 * m)
    }
}

pub fn b_closed_triangle(max_n: usize) -> CountTriangle {
    CountTriangle::from_rows(
        (0..=max_n)
            .map(|n| (0..=n).map(|m| (m, b_closed(n, m))).collect())
            .collect(),
    )
}

/// Arndt compositions of `n` whose last part is at most `k`.
///
/// For `k ≥ 1`, `n ≥ 2k + 2` this is `F_n - F_{n-k-1} - F_{n-2k-2}`;
/// elsewhere the columns of [`b_closed`] are summed.
pub fn b_at_most(n: usize, k: usize) -> BigUint {
    if k >= 1 && n >= 2 * k + 2 {
        let (ni, ki) = (n as i64, k as i64);
        let v = fib_i(ni) - fib_i(ni - ki - 1) - fib_i(ni - 2 * ki - 2);
        return v.to_biguint().expect("cumulative count is nonnegative");
    }
    (1..=k.min(n)).map(|j| b_closed(n, j)).sum::<BigUint>()
        + if n == 0 { BigUint::one() } else { BigUint::zero() }
}

/// Arndt compositions of `n` whose last part is at least `k`.
///
/// For `k ≥ 1`, `n ≥ 2k + 2` this is `F_{n-k} + F_{n-2k}`; elsewhere the
/// columns of [`b_closed`] are summed.
pub fn b_at_least(n: usize, k: usize) -> BigUint {
    if k >= 1 && n >= 2 * k + 2 {
        return fib(n - k) + fib(n - 2 * k);
    }
    (k..=n).map(|j| b_closed(n, j)).sum()
}

/// `p(n)` from the recurrence of `(1 - x - x^2)^2 P(x) = x - x^2 + x^4 - x^5`:
/// `p(n) = 2p(n-1) + p(n-2) - 2p(n-3) - p(n-4) + [x^n](x - x^2 + x^4 - x^5)`.
pub fn pn_closed(n: usize) -> BigUint {
    let forcing = |i: usize| -> i64 {
        match i {
            1 | 4 => 1,
            2 | 5 => -1,
            _ => 0,
        }
    };
    let mut p: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let at = |back: usize| -> BigInt {
            if i >= back {
                p[i - back].clone()
            } else {
                BigInt::zero()
            }
        };
        let v = BigInt::from(2) * at(1) + at(2) - BigInt::from(2) * at(3) - at(4)
            + BigInt::from(forcing(i));
        p.push(v);
    }
    p[n].to_biguint().expect("p(n) is nonnegative")
}

/// `d(n) = ⌊φ^n⌋` for `n ≥ 1`, `d(0) = 0`, evaluated exactly as `L_n - 1`
/// for even `n` and `L_n` for odd `n`.
pub fn dn_closed(n: usize) -> BigUint {
    match n {
        0 => BigUint::zero(),
        _ if n % 2 == 0 => lucas(n) - BigUint::one(),
        _ => lucas(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bu(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(gen_binomial(5, 2), bi(10));
        assert_eq!(gen_binomial(-1, 0), bi(1));
        assert_eq!(gen_binomial(-1, 1), bi(-1));
        assert_eq!(gen_binomial(3, 5), bi(0));
        assert_eq!(gen_binomial(-3, 2), bi(6));
        assert_eq!(gen_binomial(4, -1), bi(0));
        assert_eq!(gen_binomial(-1, -1), bi(1));
        assert_eq!(gen_binomial(-1, -2), bi(-1));
        assert_eq!(gen_binomial(-3, -1), bi(0));
        // reflection: C(-2, -3) = (-1)^1 C(2, 1)
        assert_eq!(gen_binomial(-2, -3), bi(-2));
    }

    #[test]
    fn sums_on_table_cells() {
        assert_eq!(a_sum_alternating(6, 3), bi(4));
        assert_eq!(a_sum_alternating(0, 0), bi(1));
        assert_eq!(a_sum_alternating(10, 5), bi(16));
        assert_eq!(a_sum_positive(9, 5), bi(8));
        assert_eq!(a_sum_positive(4, 3), bi(1));
        assert_eq!(a_sum_positive(0, 0), bi(1));
    }

    #[test]
    fn column_one_is_one() {
        // regression for the binomial convention: C(-1, 0) = 1 carries the
        // whole alternating sum for m = 1
        for n in 1..=40 {
            assert_eq!(a_sum_alternating(n, 1), bi(1), "n={n}");
            assert_eq!(a_sum_positive(n, 1), bi(1), "n={n}");
        }
    }

    #[test]
    fn recurrence_rows() {
        let t = a_recurrence_triangle(10);
        let expected: Row = [(1, 1), (2, 4), (3, 16), (4, 14), (5, 16), (6, 3), (7, 1)]
            .into_iter()
            .map(|(m, v)| (m, bu(v)))
            .collect();
        assert_eq!(t.row(10).unwrap(), &expected);
        assert_eq!(t.row(0).unwrap(), &[(0, bu(1))].into_iter().collect::<Row>());
        let narrow = a_recurrence_columns(30, 4);
        let full = a_recurrence_triangle(30);
        for n in 0..=30 {
            for m in 0..=4 {
                assert_eq!(narrow.get(n, m), full.get(n, m));
            }
        }
    }

    #[test]
    fn wz_examples() {
        let t = a_recurrence_triangle(12);
        assert_eq!(wz_residual(5, 2, &t).unwrap(), bi(0));
        assert_eq!(wz_residual(0, 1, &t).unwrap(), bi(0));
        assert_eq!(
            wz_residual(11, 2, &t),
            Err(Error::InsufficientTable { needed: 13, available: 12 })
        );
        assert!(wz_residual(0, 0, &CountTriangle::new()).is_err());
    }

    #[test]
    fn double_sums() {
        assert_eq!(fib_double_sum_1(6), bi(8));
        assert_eq!(fib_double_sum_2(6), bi(8));
        assert_eq!(fib_double_sum_1(1), bi(1));
        assert_eq!(fib_double_sum_2(30), bi(832040));
    }

    #[test]
    fn last_part_closed_form() {
        assert_eq!(b_closed(10, 1), bu(26));
        assert_eq!(b_closed(8, 2), bu(5));
        assert_eq!(b_closed(0, 0), bu(1));
        assert_eq!(b_closed(5, 0), bu(0));
        assert_eq!(b_closed(7, 4), bu(1));
        assert_eq!(b_closed(3, 7), bu(0));
    }

    #[test]
    fn cumulative() {
        assert_eq!(b_at_most(10, 1), bu(26));
        for n in 1..=30 {
            assert_eq!(b_at_most(n, n), fib(n), "n={n}");
        }
        for n in 6..=30 {
            assert_eq!(b_at_least(n, 2), fib(n - 2) + fib(n - 4), "n={n}");
        }
    }

    #[test]
    fn at_least_uses_a_sum_not_a_difference() {
        // (6), (4,2), (3,1,2), (2,1,3)
        let direct: BigUint = (2..=6).map(|j| b_closed(6, j)).sum();
        assert_eq!(direct, bu(4));
        assert_eq!(b_at_least(6, 2), fib(4) + fib(2));
        assert_ne!(BigInt::from(direct), BigInt::from(fib(4)) - BigInt::from(fib(2)));
    }

    #[test]
    fn statistics() {
        assert_eq!(pn_closed(6), bu(21));
        assert_eq!(pn_closed(7), bu(38));
        assert_eq!(pn_closed(0), bu(0));
        assert_eq!(dn_closed(6), bu(17));
        assert_eq!(dn_closed(7), bu(29));
        assert_eq!(dn_closed(1), bu(1));
        assert_eq!(dn_closed(0), bu(0));
    }

    #[test]
    fn fib_and_lucas() {
        let cache = FibCache::new();
        assert_eq!(cache.fib(30), bu(832040));
        assert_eq!(cache.lucas(10), bu(123));
        assert!(cache.len() >= 31);
        assert_eq!(fib(0), bu(0));
        assert_eq!(lucas(0), bu(2));
    }

    #[test]
    fn fib_cache_is_consistent_across_threads() {
        let cache = FibCache::new();
        std::thread::scope(|s| {
            for t in 0..8 {
                let cache = &cache;
                s.spawn(move || {
                    for n in (0..200).rev().step_by(t + 1) {
                        let f = cache.fib(n);
                        if n >= 2 {
                            assert_eq!(f, cache.fib(n - 1) + cache.fib(n - 2));
                        }
                    }
                });
            }
        });
    }
}
