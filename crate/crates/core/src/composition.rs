//! Compositions and the membership predicates for every family studied here.
//!
//! A composition is stored as its sequence of parts. All predicates are also
//! exposed over plain slices (`&[u64]`) so the enumerators can test candidate
//! prefixes without allocating.

use std::collections::BTreeSet;
use std::fmt;
use std::num::NonZeroUsize;

use crate::error::{Error, Result};

/// A finite sequence of positive parts. The empty composition has weight 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition(Vec<u64>);

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ZeroPart { index });
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// Caller guarantees every part is positive.
    pub(crate) fn from_parts_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.0
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    /// `None` for the empty composition.
    pub fn last(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn is_arndt(&self) -> bool {
        is_arndt(&self.0)
    }

    pub fn is_k_arndt(&self, k: i64) -> bool {
        is_k_arndt(&self.0, k)
    }

    pub fn is_k_block_arndt(&self, k: usize) -> Result<bool> {
        is_k_block_arndt(&self.0, k)
    }

    pub fn is_antipalindromic(&self) -> bool {
        is_antipalindromic(&self.0)
    }

    pub fn is_reduced_ap_representative(&self) -> bool {
        is_reduced_ap_representative(&self.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl TryFrom<Vec<u64>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl AsRef<[u64]> for Composition {
    fn as_ref(&self) -> &[u64] {
        &self.0
    }
}

/// `σ_{2i-1} > σ_{2i}` for every complete pair; a trailing odd part is free.
pub fn is_arndt(parts: &[u64]) -> bool {
    parts.chunks_exact(2).all(|pair| pair[0] > pair[1])
}

/// `σ_{2i-1} > σ_{2i} + k` for every complete pair. `k` may be negative.
pub fn is_k_arndt(parts: &[u64], k: i64) -> bool {
    parts
        .chunks_exact(2)
        .all(|pair| i128::from(pair[0]) > i128::from(pair[1]) + i128::from(k))
}

/// Every block of `k` consecutive parts, including a trailing short block,
/// is strictly decreasing.
pub fn is_k_block_arndt(parts: &[u64], k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidFamilyParameter {
            k: 0,
            reason: "block length must be at least 1",
        });
    }
    Ok(parts
        .chunks(k)
        .all(|block| block.windows(2).all(|w| w[0] > w[1])))
}

/// Mirrored positions never hold equal parts; the middle of an odd-length
/// composition is exempt.
pub fn is_antipalindromic(parts: &[u64]) -> bool {
    mirrored_pairs(parts).all(|(a, b)| a != b)
}

/// The canonical member of a flip class: each outer part beats its mirror.
pub fn is_reduced_ap_representative(parts: &[u64]) -> bool {
    mirrored_pairs(parts).all(|(a, b)| a > b)
}

fn mirrored_pairs(parts: &[u64]) -> impl Iterator<Item = (u64, u64)> + '_ {
    let len = parts.len();
    (0..len / 2).map(move |i| (parts[i], parts[len - 1 - i]))
}

/// All compositions reachable by swapping any subset of mirrored pairs.
///
/// The result has exactly `2^{⌊ℓ/2⌋}` members, one of which is the reduced
/// representative.
pub fn flip_class(sigma: &Composition) -> Result<BTreeSet<Composition>> {
    if !sigma.is_antipalindromic() {
        return Err(Error::NotAntiPalindromic(sigma.parts().to_vec()));
    }
    let parts = sigma.parts();
    let len = parts.len();
    let pairs = len / 2;
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << pairs) {
        let mut member = parts.to_vec();
        for i in 0..pairs {
            if mask >> i & 1 == 1 {
                member.swap(i, len - 1 - i);
            }
        }
        out.insert(Composition::from_parts_unchecked(member));
    }
    Ok(out)
}

/// Selects one of the composition families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Arndt,
    /// `σ_{2i-1} > σ_{2i} + k`, any integer `k`.
    KArndt(i64),
    /// Strictly decreasing blocks of length `k`.
    KBlockArndt(NonZeroUsize),
    AntiPalindromic,
    ReducedApRepresentative,
    Unrestricted,
}

impl Family {
    pub fn k_block(k: i64) -> Result<Self> {
        usize::try_from(k)
            .ok()
            .and_then(NonZeroUsize::new)
            .map(Family::KBlockArndt)
            .ok_or(Error::InvalidFamilyParameter {
                k,
                reason: "block length must be at least 1",
            })
    }

    pub fn contains(&self, parts: &[u64]) -> bool {
        match *self {
            Family::Arndt => is_arndt(parts),
            Family::KArndt(k) => is_k_arndt(parts, k),
            Family::KBlockArndt(k) => parts
                .chunks(k.get())
                .all(|block| block.windows(2).all(|w| w[0] > w[1])),
            Family::AntiPalindromic => is_antipalindromic(parts),
            Family::ReducedApRepresentative => is_reduced_ap_representative(parts),
            Family::Unrestricted => true,
        }
    }

    /// True when membership is decided by checking each part against its
    /// predecessor as the composition grows. For such families every prefix
    /// of a member is a member, which lets enumeration prune early.
    pub fn is_prefix_closed(&self) -> bool {
        !matches!(
            self,
            Family::AntiPalindromic | Family::ReducedApRepresentative
        )
    }

    /// Checks only the constraint introduced by the final part of `parts`.
    pub(crate) fn last_step_ok(&self, parts: &[u64]) -> bool {
        let len = parts.len();
        if len < 2 {
            return true;
        }
        let (prev, cur) = (parts[len - 2], parts[len - 1]);
        match *self {
            Family::Arndt => len % 2 == 1 || prev > cur,
            Family::KArndt(k) => {
                len % 2 == 1 || i128::from(prev) > i128::from(cur) + i128::from(k)
            }
            Family::KBlockArndt(k) => (len - 1) % k.get() == 0 || prev > cur,
            _ => true,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Arndt => f.write_str("arndt"),
            Family::KArndt(k) => write!(f, "k-arndt(k={k})"),
            Family::KBlockArndt(k) => write!(f, "block-arndt(k={k})"),
            Family::AntiPalindromic => f.write_str("antipalindromic"),
            Family::ReducedApRepresentative => f.write_str("reduced-ap"),
            Family::Unrestricted => f.write_str("all"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn accessors() {
        let s = c(&[2, 1, 3]);
        assert_eq!(s.weight(), 6);
        assert_eq!(s.num_parts(), 3);
        assert_eq!(s.last(), Some(3));
        let e = Composition::empty();
        assert_eq!((e.weight(), e.num_parts(), e.last()), (0, 0, None));
        assert_eq!(e.to_string(), "()");
        assert_eq!(s.to_string(), "(2,1,3)");
    }

    #[test]
    fn zero_part_rejected() {
        assert_eq!(
            Composition::new(vec![1, 0, 2]),
            Err(Error::ZeroPart { index: 1 })
        );
    }

    #[test]
    fn arndt_examples() {
        assert!(c(&[2, 1, 2, 1]).is_arndt());
        assert!(Composition::empty().is_arndt());
        assert!(!c(&[1, 1, 2]).is_arndt());
        assert!(c(&[3, 1, 7]).is_arndt());
    }

    #[test]
    fn k_arndt_examples() {
        assert!(c(&[5, 1, 4]).is_k_arndt(3));
        assert!(!c(&[5, 2, 4]).is_k_arndt(3));
        assert!(c(&[1, 2]).is_k_arndt(-3));
        assert!(!c(&[1, 4]).is_k_arndt(-3));
    }

    #[test]
    fn block_examples() {
        assert!(c(&[4, 2, 1, 2, 1]).is_k_block_arndt(3).unwrap());
        assert!(c(&[5, 3, 1, 1]).is_k_block_arndt(3).unwrap());
        assert!(c(&[3, 2, 1, 3, 1]).is_k_block_arndt(3).unwrap());
        // trailing short block must decrease too
        assert!(!c(&[3, 2, 1, 1, 3]).is_k_block_arndt(3).unwrap());
        assert!(c(&[1, 1, 5, 9]).is_k_block_arndt(1).unwrap());
        assert!(c(&[1]).is_k_block_arndt(0).is_err());
        assert!(Family::k_block(0).is_err());
        assert!(Family::k_block(-2).is_err());
    }

    #[test]
    fn antipalindromic_examples() {
        assert!(c(&[1, 2, 6, 3, 2]).is_antipalindromic());
        assert!(Composition::empty().is_antipalindromic());
        assert!(!c(&[1, 2, 1]).is_antipalindromic());
        assert!(c(&[2, 3, 6, 2, 1]).is_reduced_ap_representative());
        assert!(!c(&[1, 2, 6, 3, 2]).is_reduced_ap_representative());
        assert!(c(&[5]).is_reduced_ap_representative());
    }

    #[test]
    fn flip_class_examples() {
        let class = flip_class(&c(&[1, 2, 6, 3, 2])).unwrap();
        let expected: BTreeSet<_> = [
            c(&[1, 2, 6, 3, 2]),
            c(&[2, 2, 6, 3, 1]),
            c(&[1, 3, 6, 2, 2]),
            c(&[2, 3, 6, 2, 1]),
        ]
        .into_iter()
        .collect();
        assert_eq!(class, expected);
        assert_eq!(flip_class(&c(&[7])).unwrap().len(), 1);
        let pair: Vec<_> = flip_class(&c(&[3, 1])).unwrap().into_iter().collect();
        assert_eq!(pair, vec![c(&[1, 3]), c(&[3, 1])]);
        assert!(flip_class(&c(&[1, 2, 1])).is_err());
    }

    #[test]
    fn last_step_matches_full_predicate_on_prefixes() {
        let fams = [
            Family::Arndt,
            Family::KArndt(-2),
            Family::KArndt(2),
            Family::k_block(3).unwrap(),
        ];
        let samples: [&[u64]; 5] = [&[4, 2, 1, 2, 1], &[3, 1, 1, 4], &[5, 1, 6, 2], &[1, 2, 3], &[9, 3, 2, 8, 1, 1]];
        for f in fams {
            for s in samples {
                let stepwise = (1..=s.len()).all(|l| f.last_step_ok(&s[..l]));
                assert_eq!(stepwise, f.contains(s), "{f} {s:?}");
            }
        }
    }
}
