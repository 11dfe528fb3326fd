//! Input validation, normal-form reduction, and exact iterated sumsets.
//!
//! A set `A = {a_1 < ... < a_n}` of non-negative integers is reduced to its
//! normal form `A' = {0, (a_2-a_1)/d, ..., (a_n-a_1)/d}` with
//! `d = gcd(a_2-a_1, ..., a_n-a_1)`; the reduction changes no sumset
//! cardinality `|sA|`. Iterated sumsets are computed on the normal form as
//! bitmaps over `[0, s*a_n]`, advancing one fold at a time: since `0` is an
//! element, `sA` is contained in `(s+1)A` and the next image is the union of
//! `n` shifted copies of the current one.

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::limits::{self, MAX_NORMALIZED_ELEMENT};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// A validated raw input set: strictly increasing non-negative integers,
/// at least two of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawSet {
    elements: Vec<u64>,
}

impl RawSet {
    /// Sorts the input and rejects duplicates and sets with fewer than two
    /// elements.
    pub fn new(mut elements: Vec<u64>) -> Result<Self> {
        elements.sort_unstable();
        if elements.len() < 2 {
            return Err(Error::TooFewElements(elements.len()));
        }
        for pair in elements.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateElement(pair[0]));
            }
        }
        Ok(RawSet { elements })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// Translate to start at 0 and divide out the gcd of the nonzero
    /// elements. Idempotent on already-normal inputs.
    pub fn normalize(&self) -> Result<NormalForm> {
        let shift = self.elements[0];
        let mut diffs: Vec<u64> = self.elements.iter().map(|&e| e - shift).collect();
        let scale = diffs[1..].iter().fold(0, |g, &d| gcd(g, d));
        debug_assert!(scale >= 1);
        for d in &mut diffs {
            *d /= scale;
        }
        let max = *diffs.last().expect("nonempty");
        if max > MAX_NORMALIZED_ELEMENT {
            return Err(Error::ElementTooLarge {
                value: max,
                limit: MAX_NORMALIZED_ELEMENT,
            });
        }
        Ok(NormalForm {
            a: diffs,
            shift,
            scale,
        })
    }
}

/// Normal form of a set: `a_1 = 0`, `gcd(a_2, ..., a_n) = 1`, together with
/// the affine map (`shift`, `scale`) recovering the raw input as
/// `raw_i = shift + scale * a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    a: Vec<u64>,
    shift: u64,
    scale: u64,
}

impl NormalForm {
    pub fn elements(&self) -> &[u64] {
        &self.a
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a_n(&self) -> u64 {
        *self.a.last().expect("n >= 2")
    }

    pub fn shift(&self) -> u64 {
        self.shift
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// Consecutive differences `a_i - a_{i-1}`, `i = 2..=n`.
    pub fn gaps(&self) -> Vec<u64> {
        self.a.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// True when the set is `{0, 1, ..., n-1}`.
    pub fn is_initial_segment(&self) -> bool {
        self.a.iter().enumerate().all(|(i, &v)| v == i as u64)
    }

    /// Exact `s`-fold sumset. `0A = {0}` and `1A = A`.
    pub fn sumset(&self, s: u64) -> Result<SumsetImage> {
        let seq = self.image_sequence(s)?;
        Ok(seq.into_iter().last().expect("at least 0A"))
    }

    /// Cardinalities `|0A|, |1A|, ..., |s_max A|`.
    pub fn growth_table(&self, s_max: u64) -> Result<GrowthTable> {
        let max = self
            .a_n()
            .checked_mul(s_max)
            .ok_or(Error::Overflow("s * a_n"))?;
        limits::check_bitmap_budget("sumset bitmap", max + 1, 2)?;
        let width = (max + 1) as usize;
        let mut cur = BitSet::new(width);
        cur.set(0);
        let mut values = Vec::with_capacity(s_max as usize + 1);
        values.push(1u64);
        let mut next = BitSet::new(width);
        for _ in 0..s_max {
            next.clear_all();
            for &ai in &self.a {
                next.or_shifted(&cur, ai as usize);
            }
            std::mem::swap(&mut cur, &mut next);
            values.push(cur.count_ones() as u64);
        }
        Ok(GrowthTable { values })
    }

    /// All images `0A, 1A, ..., s_max A` at once. Shared by the checks that
    /// need to walk consecutive folds.
    pub(crate) fn image_sequence(&self, s_max: u64) -> Result<Vec<SumsetImage>> {
        let max = self
            .a_n()
            .checked_mul(s_max)
            .ok_or(Error::Overflow("s * a_n"))?;
        // every retained image is at most the final width
        limits::check_bitmap_budget("sumset bitmaps", max + 1, s_max + 2)?;
        let mut images = Vec::with_capacity(s_max as usize + 1);
        let mut cur = BitSet::new(1);
        cur.set(0);
        images.push(SumsetImage {
            s: 0,
            max: 0,
            card: 1,
            bits: cur.clone(),
        });
        for s in 1..=s_max {
            let width = (self.a_n() * s + 1) as usize;
            let mut next = BitSet::new(width);
            for &ai in &self.a {
                next.or_shifted(&cur, ai as usize);
            }
            images.push(SumsetImage {
                s,
                max: self.a_n() * s,
                card: next.count_ones() as u64,
                bits: next.clone(),
            });
            cur = next;
        }
        Ok(images)
    }
}

/// The set `sA`, stored as a bitmap over `[0, s*a_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumsetImage {
    s: u64,
    max: u64,
    card: u64,
    bits: BitSet,
}

impl SumsetImage {
    pub fn s(&self) -> u64 {
        self.s
    }

    /// Largest possible element, `s * a_n`.
    pub fn max(&self) -> u64 {
        self.max
    }

    pub fn card(&self) -> u64 {
        self.card
    }

    pub fn contains(&self, x: u64) -> bool {
        usize::try_from(x)
            .map(|i| self.bits.get(i))
            .unwrap_or(false)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.iter_ones().map(|i| i as u64)
    }

    pub fn elements(&self) -> Vec<u64> {
        self.iter().collect()
    }

    pub(crate) fn bits(&self) -> &BitSet {
        &self.bits
    }
}

/// Cardinality table `values[s] = |sA|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthTable {
    pub values: Vec<u64>,
}

impl GrowthTable {
    pub fn value(&self, s: u64) -> u64 {
        self.values[s as usize]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nf(v: &[u64]) -> NormalForm {
        RawSet::new(v.to_vec()).unwrap().normalize().unwrap()
    }

    #[test]
    fn normalize_shifts_and_scales() {
        let f = nf(&[3, 5, 9]);
        assert_eq!(f.elements(), &[0, 1, 3]);
        assert_eq!(f.shift(), 3);
        assert_eq!(f.scale(), 2);
        // |2A| = |2A'| = 6 by enumeration
        let raw_2a = test_oracle::sumset_by_enumeration(&[3, 5, 9], 2);
        assert_eq!(raw_2a.len(), 6);
        assert_eq!(f.sumset(2).unwrap().card(), 6);
    }

    #[test]
    fn normalize_is_idempotent_on_normal_inputs() {
        let f = nf(&[0, 1, 2]);
        assert_eq!(f.elements(), &[0, 1, 2]);
        assert_eq!((f.shift(), f.scale()), (0, 1));

        let g = nf(&[0, 2, 4, 5, 7]);
        assert_eq!(g.elements(), &[0, 2, 4, 5, 7]);
        assert_eq!((g.shift(), g.scale()), (0, 1));
    }

    #[test]
    fn normalize_rejects_bad_input() {
        assert_eq!(RawSet::new(vec![5]).unwrap_err(), Error::TooFewElements(1));
        assert_eq!(
            RawSet::new(vec![2, 5, 2]).unwrap_err(),
            Error::DuplicateElement(2)
        );
        let too_big = RawSet::new(vec![0, 1, (1 << 20) + 1]).unwrap();
        assert!(matches!(
            too_big.normalize().unwrap_err(),
            Error::ElementTooLarge { .. }
        ));
        // huge raw values are fine when the normal form is small
        let f = RawSet::new(vec![1 << 40, 3 << 40])
            .unwrap()
            .normalize()
            .unwrap();
        assert_eq!(f.elements(), &[0, 1]);
    }

    #[test]
    fn sumset_two_fold_example() {
        let f = nf(&[0, 2, 4, 5, 7]);
        let img = f.sumset(2).unwrap();
        assert_eq!(img.elements(), vec![0, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14]);
        assert_eq!(img.card(), 12);
    }

    #[test]
    fn sumset_zero_fold_is_origin() {
        for set in [&[0u64, 2, 4, 5, 7][..], &[0, 1, 3, 4], &[0, 1]] {
            let img = nf(set).sumset(0).unwrap();
            assert_eq!(img.elements(), vec![0]);
            assert_eq!(img.card(), 1);
        }
    }

    #[test]
    fn sumset_fills_interval() {
        let img = nf(&[0, 1, 3, 4]).sumset(2).unwrap();
        assert_eq!(img.elements(), (0..=8).collect::<Vec<_>>());
        assert_eq!(img.card(), 9);
    }

    #[test]
    fn growth_tables_match_known_values() {
        assert_eq!(
            nf(&[0, 2, 4, 5, 7]).growth_table(5).unwrap().values,
            vec![1, 5, 12, 19, 26, 33]
        );
        assert_eq!(
            nf(&[0, 1, 3, 4]).growth_table(5).unwrap().values,
            vec![1, 4, 9, 13, 17, 21]
        );
        assert_eq!(
            nf(&[0, 7, 8, 9, 10]).growth_table(4).unwrap().values,
            vec![1, 5, 12, 22, 32]
        );
    }

    #[test]
    fn normalization_preserves_growth() {
        // growth of the raw set by brute force equals growth of the normal form
        let raw = [3u64, 5, 9];
        let f = nf(&raw);
        let table = f.growth_table(4).unwrap();
        for s in 0..=4u64 {
            let brute = test_oracle::sumset_by_enumeration(&raw, s);
            assert_eq!(brute.len() as u64, table.value(s), "s = {s}");
        }
    }

    #[test]
    fn overflow_is_reported() {
        let f = nf(&[0, 1, 1 << 20]);
        assert!(matches!(
            f.growth_table(u64::MAX / 4).unwrap_err(),
            Error::Overflow(_) | Error::ResourceLimit { .. }
        ));
    }

    proptest! {
        // bitmap path against multiset enumeration, plus the structural
        // invariants that hold for every normalized set
        #[test]
        fn bitmap_matches_enumeration(
            mut nonzero in proptest::collection::btree_set(1u64..30, 1..5),
            s in 0u64..5,
        ) {
            nonzero.insert(0);
            let elements: Vec<u64> = nonzero.into_iter().collect();
            let f = nf(&elements);
            let img = f.sumset(s).unwrap();
            let brute = test_oracle::sumset_by_enumeration(f.elements(), s);
            prop_assert_eq!(img.elements(), brute.into_iter().collect::<Vec<_>>());
            if s >= 1 {
                prop_assert!(img.contains(0));
                prop_assert!(img.contains(s * f.a_n()));
                let next = f.sumset(s + 1).unwrap();
                prop_assert!(img.bits().is_subset_of(next.bits()));
                // each fold gains at least n - 1 elements
                prop_assert!(next.card() >= img.card() + f.n() as u64 - 1);
            }
        }
    }
}
