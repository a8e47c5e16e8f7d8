//! Packed binary words.
//!
//! A [`Word`] stores letters `0`/`1` packed 64 to a block, letter `i` at bit
//! `i % 64` of block `i / 64`. Bits past `len` are always zero, so derived
//! equality and hashing are exact.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const BITS: usize = 64;

#[inline]
fn low_mask(count: usize) -> u64 {
    if count >= BITS {
        u64::MAX
    } else {
        (1u64 << count) - 1
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    blocks: Vec<u64>,
    len: usize,
}

impl Word {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(letters: usize) -> Self {
        Word {
            blocks: Vec::with_capacity(letters.div_ceil(BITS)),
            len: 0,
        }
    }

    /// Builds a word from letters given as `0`/`1` values.
    ///
    /// # Panics
    ///
    /// Panics if any value is not 0 or 1.
    pub fn from_letters<I: IntoIterator<Item = u8>>(letters: I) -> Self {
        let mut w = Word::new();
        for a in letters {
            w.push(a);
        }
        w
    }

    /// `letter^count`.
    pub fn letter_power(letter: u8, count: usize) -> Self {
        assert!(letter <= 1, "letter must be 0 or 1");
        let full = count / BITS;
        let fill = if letter == 1 { u64::MAX } else { 0 };
        let mut blocks = vec![fill; full];
        let rest = count % BITS;
        if rest > 0 {
            blocks.push(fill & low_mask(rest));
        }
        Word { blocks, len: count }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at position `i` (0-based).
    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        assert!(
            i < self.len,
            "index {i} out of bounds for word of length {}",
            self.len
        );
        ((self.blocks[i / BITS] >> (i % BITS)) & 1) as u8
    }

    pub fn first(&self) -> Option<u8> {
        (!self.is_empty()).then(|| self.get(0))
    }

    pub fn last(&self) -> Option<u8> {
        (!self.is_empty()).then(|| self.get(self.len - 1))
    }

    pub fn push(&mut self, letter: u8) {
        assert!(letter <= 1, "letter must be 0 or 1");
        if self.len % BITS == 0 {
            self.blocks.push(0);
        }
        if letter == 1 {
            self.blocks[self.len / BITS] |= 1 << (self.len % BITS);
        }
        self.len += 1;
    }

    /// Appends the low `count` bits of `bits`, least significant first.
    fn push_bits(&mut self, bits: u64, count: usize) {
        debug_assert!(count <= BITS);
        if count == 0 {
            return;
        }
        let bits = bits & low_mask(count);
        let offset = self.len % BITS;
        if offset == 0 {
            self.blocks.push(bits);
        } else {
            let last = self.blocks.len() - 1;
            self.blocks[last] |= bits << offset;
            if offset + count > BITS {
                self.blocks.push(bits >> (BITS - offset));
            }
        }
        self.len += count;
    }

    pub fn extend_from(&mut self, other: &Word) {
        let mut remaining = other.len;
        for &block in &other.blocks {
            let take = remaining.min(BITS);
            self.push_bits(block, take);
            remaining -= take;
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = Word::with_capacity(self.len + other.len);
        w.extend_from(self);
        w.extend_from(other);
        w
    }

    /// `self^count`; the zero power is the empty word.
    pub fn pow(&self, count: usize) -> Word {
        let mut w = Word::with_capacity(self.len * count);
        for _ in 0..count {
            w.extend_from(self);
        }
        w
    }

    /// The `count` letters starting at `start`, packed into the low bits.
    ///
    /// # Panics
    ///
    /// Panics if `count > 64` or the window runs past the end.
    #[inline]
    pub fn window_bits(&self, start: usize, count: usize) -> u64 {
        assert!(count <= BITS);
        assert!(start + count <= self.len, "window past end of word");
        if count == 0 {
            return 0;
        }
        let block = start / BITS;
        let offset = start % BITS;
        let mut bits = self.blocks[block] >> offset;
        if offset + count > BITS {
            bits |= self.blocks[block + 1] << (BITS - offset);
        }
        bits & low_mask(count)
    }

    /// The factor of length `count` starting at `start`.
    pub fn slice(&self, start: usize, count: usize) -> Word {
        assert!(start + count <= self.len, "slice past end of word");
        let mut w = Word::with_capacity(count);
        let mut pos = start;
        let end = start + count;
        while pos < end {
            let take = (end - pos).min(BITS);
            w.push_bits(self.window_bits(pos, take), take);
            pos += take;
        }
        w
    }

    pub fn prefix(&self, count: usize) -> Word {
        self.slice(0, count)
    }

    pub fn suffix(&self, count: usize) -> Word {
        self.slice(self.len - count, count)
    }

    /// The shift `T^k`: the word deprived of its first `k` letters.
    pub fn shift(&self, k: usize) -> Word {
        assert!(k <= self.len, "shift past end of word");
        self.slice(k, self.len - k)
    }

    /// `w^-`, the word deprived of its last letter; empty stays empty.
    pub fn drop_last(&self) -> Word {
        self.prefix(self.len.saturating_sub(1))
    }

    /// `w^{--}`, the word deprived of its last two letters.
    pub fn drop_last_two(&self) -> Word {
        self.prefix(self.len.saturating_sub(2))
    }

    pub fn truncate(&mut self, len: usize) {
        if len >= self.len {
            return;
        }
        self.len = len;
        self.blocks.truncate(len.div_ceil(BITS));
        let rest = len % BITS;
        if rest > 0 {
            let last = self.blocks.len() - 1;
            self.blocks[last] &= low_mask(rest);
        }
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.count_ones()
    }

    pub fn reversed(&self) -> Word {
        let mut w = Word::with_capacity(self.len);
        for i in (0..self.len).rev() {
            w.push(self.get(i));
        }
        w
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.len;
        (0..n / 2).all(|i| self.get(i) == self.get(n - 1 - i))
    }

    /// Letterwise exchange `0 <-> 1`.
    pub fn complement(&self) -> Word {
        let mut blocks: Vec<u64> = self.blocks.iter().map(|b| !b).collect();
        let rest = self.len % BITS;
        if rest > 0 {
            let last = blocks.len() - 1;
            blocks[last] &= low_mask(rest);
        }
        Word {
            blocks,
            len: self.len,
        }
    }

    /// Length of the longest common prefix of `self[i..]` and `other[j..]`.
    pub fn common_prefix_at(&self, i: usize, other: &Word, j: usize) -> usize {
        let max = (self.len - i.min(self.len)).min(other.len - j.min(other.len));
        let mut done = 0;
        while done < max {
            let take = (max - done).min(BITS);
            let diff = self.window_bits(i + done, take) ^ other.window_bits(j + done, take);
            if diff != 0 {
                return done + diff.trailing_zeros() as usize;
            }
            done += take;
        }
        max
    }

    pub fn common_prefix_len(&self, other: &Word) -> usize {
        self.common_prefix_at(0, other, 0)
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        self.len <= other.len && self.common_prefix_len(other) == self.len
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

impl Ord for Word {
    /// Lexicographic on letters with `0 < 1`; a proper prefix sorts first.
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.common_prefix_len(other);
        if common < self.len && common < other.len {
            self.get(common).cmp(&other.get(common))
        } else {
            self.len.cmp(&other.len)
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<u8> for Word {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        Word::from_letters(iter)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .iter()
            .map(|a| if a == 1 { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a string of `0`/`1` characters. A single trailing newline is
    /// accepted so word files can be read verbatim.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.strip_suffix('\n').unwrap_or(s);
        let s = s.strip_suffix('\r').unwrap_or(s);
        let mut w = Word::with_capacity(s.len());
        for (pos, c) in s.chars().enumerate() {
            match c {
                '0' => w.push(0),
                '1' => w.push(1),
                other => {
                    return Err(Error::InvalidWord(format!(
                        "unexpected character {other:?} at position {pos}"
                    )))
                }
            }
        }
        Ok(w)
    }
}
