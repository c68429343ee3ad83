//! Exhaustive generation of compositions and brute-force statistics.
//!
//! Everything here is deliberately naive: it is the ground truth the
//! generating-function and closed-form paths are checked against.
//!
//! Streams come out in lexicographically decreasing order of the part
//! sequence, e.g. for `n = 4`:
//! `(4) (3,1) (2,2) (2,1,1) (1,3) (1,2,1) (1,1,2) (1,1,1,1)`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::composition::{Composition, Family};
use crate::error::{Error, Result};

/// Default ceiling on `n` for exhaustive enumeration (`2^27` compositions
/// when unrestricted).
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 28;

/// One row of a count triangle: column `m` → count. Zero entries are absent.
pub type Row = BTreeMap<usize, BigUint>;

/// Exact counts indexed by weight `n` and a statistic `m`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CountTriangle {
    rows: Vec<Row>,
}

impl CountTriangle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Rows are indexed from 0; `rows[n]` is the row for weight `n`.
    pub fn from_rows(mut rows: Vec<Row>) -> Self {
        for row in &mut rows {
            row.retain(|_, v| !v.is_zero());
        }
        CountTriangle { rows }
    }

    pub fn push_row(&mut self, mut row: Row) {
        row.retain(|_, v| !v.is_zero());
        self.rows.push(row);
    }

    /// Number of rows held (`max_n + 1`).
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn max_n(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn row(&self, n: usize) -> Option<&Row> {
        self.rows.get(n)
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// Absent entries read as zero, including rows beyond `max_n`.
    pub fn get(&self, n: usize, m: usize) -> BigUint {
        self.rows
            .get(n)
            .and_then(|r| r.get(&m))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row_sum(&self, n: usize) -> BigUint {
        self.rows
            .get(n)
            .map(|r| r.values().sum())
            .unwrap_or_default()
    }

    /// Keeps rows `0..=n`.
    pub fn truncated(&self, n: usize) -> Self {
        CountTriangle {
            rows: self.rows.iter().take(n + 1).cloned().collect(),
        }
    }
}

/// Per-weight scalar statistic, e.g. `p(n)` or `d(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StatVector {
    values: BTreeMap<usize, BigUint>,
}

impl StatVector {
    pub fn insert(&mut self, n: usize, v: BigUint) {
        self.values.insert(n, v);
    }

    pub fn get(&self, n: usize) -> BigUint {
        self.values.get(&n).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.values.iter().map(|(&n, v)| (n, v))
    }
}

/// Stream over the members of `family` with weight `n`, in lexicographically
/// decreasing order. Prefix-closed families are pruned during the search.
#[derive(Debug, Clone)]
pub struct FamilyCompositions {
    n: u64,
    family: Family,
    parts: Vec<u64>,
    // next candidate value at each depth; always parts.len() + 1 entries
    // while the search is live
    candidates: Vec<u64>,
    sum: u64,
    done: bool,
}

impl FamilyCompositions {
    fn new(n: usize, family: Family) -> Self {
        let n = n as u64;
        FamilyCompositions {
            n,
            family,
            parts: Vec::new(),
            candidates: if n == 0 { Vec::new() } else { vec![n] },
            sum: 0,
            done: false,
        }
    }
}

impl Iterator for FamilyCompositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(Composition::empty());
        }
        let prune = self.family.is_prefix_closed();
        loop {
            let top = self.candidates.last_mut()?;
            if *top == 0 {
                self.candidates.pop();
                match self.parts.pop() {
                    Some(p) => self.sum -= p,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
                continue;
            }
            let v = *top;
            *top -= 1;
            self.parts.push(v);
            if prune && !self.family.last_step_ok(&self.parts) {
                self.parts.pop();
                continue;
            }
            self.sum += v;
            let rest = self.n - self.sum;
            if rest == 0 {
                let hit = prune || self.family.contains(&self.parts);
                let out = hit.then(|| Composition::from_parts_unchecked(self.parts.clone()));
                self.parts.pop();
                self.sum -= v;
                if out.is_some() {
                    return out;
                }
            } else {
                self.candidates.push(rest);
            }
        }
    }
}

/// Every composition of `n` exactly once; `2^{n-1}` of them for `n ≥ 1`.
pub fn compositions_of(n: usize) -> FamilyCompositions {
    FamilyCompositions::new(n, Family::Unrestricted)
}

pub fn family_members(n: usize, family: Family) -> FamilyCompositions {
    FamilyCompositions::new(n, family)
}

/// Representatives `σ_i > σ_{ℓ-i+1}` of the flip classes of anti-palindromic
/// compositions of `n`, one per class.
pub fn enumerate_reduced_ap(n: usize) -> FamilyCompositions {
    FamilyCompositions::new(n, Family::ReducedApRepresentative)
}

/// Depth-first visit of members of `family` whose parts start with `prefix`
/// and sum to `n`. The callback sees each member as a slice.
fn visit<F: FnMut(&[u64])>(n: u64, family: Family, prefix: &mut Vec<u64>, sum: u64, f: &mut F) {
    let prune = family.is_prefix_closed();
    let rest = n - sum;
    if rest == 0 {
        if prune || family.contains(prefix) {
            f(prefix);
        }
        return;
    }
    for v in (1..=rest).rev() {
        prefix.push(v);
        if !prune || family.last_step_ok(prefix) {
            visit(n, family, prefix, sum + v, f);
        }
        prefix.pop();
    }
}

/// Brute-force counter with a configurable ceiling on `n`.
#[derive(Debug, Clone, Copy)]
pub struct BruteForce {
    pub cap: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            cap: DEFAULT_BRUTE_FORCE_CAP,
        }
    }
}

impl BruteForce {
    pub fn with_cap(cap: usize) -> Self {
        BruteForce { cap }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::BruteForceCap { n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Streams members of a family after checking the cap.
    pub fn members(&self, n: usize, family: Family) -> Result<FamilyCompositions> {
        self.check(n)?;
        Ok(family_members(n, family))
    }

    /// Tallies `stat(σ)` over all members, splitting the search over the
    /// first part in parallel.
    fn tally<S>(&self, n: usize, family: Family, stat: S) -> Result<Row>
    where
        S: Fn(&[u64]) -> usize + Sync,
    {
        self.check(n)?;
        if n == 0 {
            let mut row = Row::new();
            if family.contains(&[]) {
                row.insert(stat(&[]), BigUint::one());
            }
            return Ok(row);
        }
        let n = n as u64;
        let merged = (1..=n)
            .into_par_iter()
            .map(|first| {
                let mut local: BTreeMap<usize, u64> = BTreeMap::new();
                let mut prefix = vec![first];
                visit(n, family, &mut prefix, first, &mut |parts| {
                    *local.entry(stat(parts)).or_default() += 1;
                });
                local
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                a
            });
        Ok(merged
            .into_iter()
            .map(|(k, v)| (k, BigUint::from(v)))
            .collect())
    }

    /// Row `n` of the (weight, number of parts) triangle.
    pub fn count_by_parts(&self, n: usize, family: Family) -> Result<Row> {
        self.tally(n, family, |p| p.len())
    }

    /// Row `n` of the (weight, last part) triangle. The empty composition
    /// lands in column 0.
    pub fn count_by_last(&self, n: usize, family: Family) -> Result<Row> {
        self.tally(n, family, |p| p.last().map_or(0, |&l| l as usize))
    }

    pub fn count(&self, n: usize, family: Family) -> Result<BigUint> {
        Ok(self.count_by_parts(n, family)?.values().sum())
    }

    pub fn parts_triangle(&self, max_n: usize, family: Family) -> Result<CountTriangle> {
        self.check(max_n)?;
        (0..=max_n)
            .map(|n| self.count_by_parts(n, family))
            .collect::<Result<Vec<_>>>()
            .map(CountTriangle::from_rows)
    }

    pub fn last_triangle(&self, max_n: usize, family: Family) -> Result<CountTriangle> {
        self.check(max_n)?;
        (0..=max_n)
            .map(|n| self.count_by_last(n, family))
            .collect::<Result<Vec<_>>>()
            .map(CountTriangle::from_rows)
    }

    /// `p(n)`: total number of parts over the Arndt compositions of `n`.
    pub fn total_parts(&self, n: usize) -> Result<BigUint> {
        let row = self.count_by_parts(n, Family::Arndt)?;
        Ok(row.iter().map(|(&m, c)| c * BigUint::from(m)).sum())
    }

    /// `d(n)`: sum of the last parts over the Arndt compositions of `n`.
    pub fn total_last(&self, n: usize) -> Result<BigUint> {
        let row = self.count_by_last(n, Family::Arndt)?;
        Ok(row.iter().map(|(&m, c)| c * BigUint::from(m)).sum())
    }
}

/// Brute-force row with the default cap.
pub fn count_by_parts(n: usize, family: Family) -> Result<Row> {
    BruteForce::default().count_by_parts(n, family)
}

pub fn count_by_last(n: usize, family: Family) -> Result<Row> {
    BruteForce::default().count_by_last(n, family)
}

pub fn total_parts(n: usize) -> Result<BigUint> {
    BruteForce::default().total_parts(n)
}

pub fn total_last(n: usize) -> Result<BigUint> {
    BruteForce::default().total_last(n)
}

/// Builds a row from `(column, count)` pairs.
pub fn row_of(entries: &[(usize, u64)]) -> Row {
    entries
        .iter()
        .filter(|(_, v)| *v != 0)
        .map(|&(m, v)| (m, BigUint::from(v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(it: FamilyCompositions) -> Vec<Vec<u64>> {
        it.map(Composition::into_parts).collect()
    }

    #[test]
    fn compositions_of_four_in_order() {
        assert_eq!(
            lists(compositions_of(4)),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 3],
                vec![1, 2, 1],
                vec![1, 1, 2],
                vec![1, 1, 1, 1],
            ]
        );
    }

    #[test]
    fn compositions_of_zero_and_twelve() {
        assert_eq!(lists(compositions_of(0)), vec![Vec::<u64>::new()]);
        assert_eq!(compositions_of(12).count(), 2048);
    }

    #[test]
    fn arndt_six_in_display_order() {
        let got: Vec<String> = family_members(6, Family::Arndt)
            .map(|c| c.to_string())
            .collect();
        assert_eq!(
            got,
            ["(6)", "(5,1)", "(4,2)", "(4,1,1)", "(3,2,1)", "(3,1,2)", "(2,1,3)", "(2,1,2,1)"]
        );
    }

    #[test]
    fn count_rows() {
        assert_eq!(
            count_by_parts(6, Family::Arndt).unwrap(),
            row_of(&[(1, 1), (2, 2), (3, 4), (4, 1)])
        );
        assert_eq!(count_by_parts(0, Family::Arndt).unwrap(), row_of(&[(0, 1)]));
        let k3: BigUint = count_by_parts(10, Family::KArndt(3)).unwrap().values().sum();
        assert_eq!(k3, BigUint::from(10u32));
        assert_eq!(
            count_by_last(6, Family::Arndt).unwrap(),
            row_of(&[(1, 4), (2, 2), (3, 1), (6, 1)])
        );
        assert_eq!(
            count_by_last(10, Family::Arndt).unwrap(),
            row_of(&[(1, 26), (2, 13), (3, 7), (4, 4), (5, 2), (6, 1), (7, 1), (10, 1)])
        );
        assert_eq!(count_by_last(1, Family::Arndt).unwrap(), row_of(&[(1, 1)]));
        assert_eq!(count_by_last(0, Family::Arndt).unwrap(), row_of(&[(0, 1)]));
    }

    #[test]
    fn totals() {
        assert_eq!(total_parts(6).unwrap(), BigUint::from(21u32));
        assert_eq!(total_parts(7).unwrap(), BigUint::from(38u32));
        assert_eq!(total_parts(0).unwrap(), BigUint::zero());
        assert_eq!(total_last(6).unwrap(), BigUint::from(17u32));
        assert_eq!(total_last(7).unwrap(), BigUint::from(29u32));
        assert_eq!(total_last(1).unwrap(), BigUint::one());
    }

    #[test]
    fn reduced_ap_small() {
        assert_eq!(lists(enumerate_reduced_ap(0)), vec![Vec::<u64>::new()]);
        let two_parts: Vec<_> = enumerate_reduced_ap(5)
            .filter(|c| c.num_parts() == 2)
            .map(Composition::into_parts)
            .collect();
        assert_eq!(two_parts, vec![vec![4, 1], vec![3, 2]]);
    }

    #[test]
    fn pruned_stream_equals_filtered_stream() {
        for family in [Family::Arndt, Family::KArndt(-2), Family::KArndt(1), Family::k_block(3).unwrap()] {
            for n in 0..=11 {
                let pruned = lists(family_members(n, family));
                let filtered: Vec<_> = compositions_of(n)
                    .filter(|c| family.contains(c.parts()))
                    .map(Composition::into_parts)
                    .collect();
                assert_eq!(pruned, filtered, "{family} n={n}");
            }
        }
    }

    #[test]
    fn cap_enforced() {
        let bf = BruteForce::with_cap(5);
        assert_eq!(
            bf.count_by_parts(6, Family::Arndt),
            Err(Error::BruteForceCap { n: 6, cap: 5 })
        );
        assert!(bf.members(6, Family::Arndt).is_err());
        assert!(bf.members(5, Family::Arndt).is_ok());
    }

    #[test]
    fn triangle_accessors() {
        let t = BruteForce::default().parts_triangle(6, Family::Arndt).unwrap();
        assert_eq!(t.max_n(), Some(6));
        assert_eq!(t.get(6, 3), BigUint::from(4u32));
        assert_eq!(t.get(6, 9), BigUint::zero());
        assert_eq!(t.get(60, 1), BigUint::zero());
        assert_eq!(t.row_sum(6), BigUint::from(8u32));
        assert_eq!(t.truncated(3).len(), 4);
    }
}
