//! Packed bitmaps over `[0, len)` used for sumset images and semigroup
//! membership tables.
//!
//! The one operation that matters for performance is [`BitSet::or_shifted`]:
//! a whole sumset step `(s+1)A = union of (sA + a_i)` reduces to `n` shifted
//! ORs over the word array, so one step costs `O(n * s * a_n / 64)`.

/// Fixed-width bitmap. Bits above `len` are kept zero so that popcounts and
/// word-wise comparisons are exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    /// Create a bitmap of `len` bits, all clear.
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0u64; len.div_ceil(64)],
            len,
        }
    }

    /// Number of addressable bits.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Read bit `i`. Out-of-range indices read as clear, which gives
    /// membership queries the natural "not in the set" answer.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        if i >= self.len {
            return false;
        }
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    /// Set every bit in `lo..=hi` (clamped to the bitmap).
    pub fn set_range(&mut self, lo: usize, hi: usize) {
        if self.len == 0 || lo > hi || lo >= self.len {
            return;
        }
        let hi = hi.min(self.len - 1);
        let (wl, wh) = (lo / 64, hi / 64);
        let lo_mask = u64::MAX << (lo % 64);
        let hi_mask = u64::MAX >> (63 - hi % 64);
        if wl == wh {
            self.words[wl] |= lo_mask & hi_mask;
        } else {
            self.words[wl] |= lo_mask;
            for w in &mut self.words[wl + 1..wh] {
                *w = u64::MAX;
            }
            self.words[wh] |= hi_mask;
        }
    }

    pub fn clear_all(&mut self) {
        self.words.fill(0);
    }

    /// `self |= src << shift`, truncating anything shifted past `len`.
    pub fn or_shifted(&mut self, src: &BitSet, shift: usize) {
        let word_shift = shift / 64;
        let bit_shift = shift % 64;
        let dst_words = self.words.len();
        for (i, &w) in src.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let d = i + word_shift;
            if d >= dst_words {
                break;
            }
            self.words[d] |= w << bit_shift;
            if bit_shift > 0 && d + 1 < dst_words {
                self.words[d + 1] |= w >> (64 - bit_shift);
            }
        }
        self.mask_tail();
    }

    /// Popcount over the whole bitmap.
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when every set bit of `self` is also set in `other`.
    pub fn is_subset_of(&self, other: &BitSet) -> bool {
        for (i, &w) in self.words.iter().enumerate() {
            let o = other.words.get(i).copied().unwrap_or(0);
            if w & !o != 0 {
                return false;
            }
        }
        true
    }

    /// Indices of set bits in ascending order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let base = wi * 64;
            WordBits { word, base }
        })
    }

    fn mask_tail(&mut self) {
        let extra = self.words.len() * 64 - self.len;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }
}

struct WordBits {
    word: u64,
    base: usize,
}

impl Iterator for WordBits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}
