//! Factor-level diagnostics on finite words: complexity, balance, special
//! factors, and the slope interval given by the speed relation.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result, Side};
use crate::word::Word;

/// Distinct factors of one fixed length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    length: usize,
    factors: BTreeSet<Word>,
}

impl FactorSet {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.factors.contains(w)
    }

    /// Factors in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.factors.iter()
    }

    /// True if the reversal of every member is a member.
    pub fn is_closed_under_reversal(&self) -> bool {
        self.factors
            .iter()
            .all(|f| self.factors.contains(&f.reversed()))
    }
}

impl IntoIterator for FactorSet {
    type Item = Word;
    type IntoIter = std::collections::btree_set::IntoIter<Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.factors.into_iter()
    }
}

/// Calls `f(start)` for the first occurrence of each distinct length-`m`
/// window, in order of first occurrence. Windows of at most 64 letters are
/// keyed by their packed bits, longer ones by the packed word.
fn for_each_distinct_window(w: &Word, m: usize, mut f: impl FnMut(usize)) {
    if m > w.len() {
        return;
    }
    let starts = w.len() - m + 1;
    if m <= 64 {
        let mut seen = HashSet::with_capacity(starts.min(1 << 16));
        for i in 0..starts {
            if seen.insert(w.window_bits(i, m)) {
                f(i);
            }
        }
    } else {
        let mut seen = HashSet::new();
        for i in 0..starts {
            if seen.insert(w.slice(i, m)) {
                f(i);
            }
        }
    }
}

/// All distinct factors of `w` of length `m`; empty when `m > |w|`.
///
/// # Panics
///
/// Panics if `m == 0`.
pub fn factors(w: &Word, m: usize) -> FactorSet {
    assert!(m >= 1, "factor length must be positive");
    let mut set = BTreeSet::new();
    for_each_distinct_window(w, m, |i| {
        set.insert(w.slice(i, m));
    });
    FactorSet {
        length: m,
        factors: set,
    }
}

/// Number of distinct factors of length `m`.
///
/// # Panics
///
/// Panics if `m == 0`.
pub fn complexity(w: &Word, m: usize) -> usize {
    assert!(m >= 1, "factor length must be positive");
    let mut count = 0;
    for_each_distinct_window(w, m, |_| count += 1);
    count
}

/// Minimum and maximum number of ones over the length-`m` windows, with a
/// start position for each.
fn ones_range(w: &Word, m: usize) -> ((usize, usize), (usize, usize)) {
    let mut ones = (0..m).filter(|&i| w.get(i) == 1).count();
    let mut min = (ones, 0);
    let mut max = (ones, 0);
    for start in 1..=w.len() - m {
        ones = ones + w.get(start + m - 1) as usize - w.get(start - 1) as usize;
        if ones < min.0 {
            min = (ones, start);
        }
        if ones > max.0 {
            max = (ones, start);
        }
    }
    (min, max)
}

/// Two equal-length factors whose counts of ones differ by at least 2, the
/// one with fewer ones first; `None` when `w` is balanced.
///
/// Scans lengths in increasing order, so the witness is as short as
/// possible.
pub fn unbalanced_pair(w: &Word) -> Option<(Word, Word)> {
    for m in 1..=w.len() {
        let ((lo, lo_at), (hi, hi_at)) = ones_range(w, m);
        if hi - lo >= 2 {
            return Some((w.slice(lo_at, m), w.slice(hi_at, m)));
        }
    }
    None
}

/// True iff any two factors of equal length have counts of ones differing
/// by at most one. The empty word is balanced.
pub fn is_balanced(w: &Word) -> bool {
    unbalanced_pair(w).is_none()
}

/// A palindrome `p` such that both `0p0` and `1p1` are factors of `w`.
///
/// Such a `p` exists iff `w` is unbalanced. The shortest one is returned,
/// ties broken lexicographically.
pub fn balance_palindrome_witness(w: &Word) -> Option<Word> {
    let n = w.len();
    // inner palindrome (start, len) -> mask of outer letters seen
    let mut outer: HashMap<Word, u8> = HashMap::new();
    let mut record = |start: usize, len: usize, letter: u8| {
        *outer.entry(w.slice(start, len)).or_insert(0) |= 1 << letter;
    };
    for center in 0..n {
        // odd palindromes centred on `center`
        let mut r = 1;
        while r <= center && center + r < n && w.get(center - r) == w.get(center + r) {
            record(center - r + 1, 2 * r - 1, w.get(center - r));
            r += 1;
        }
        // even palindromes centred between `center - 1` and `center`
        let mut r = 1;
        while r <= center && center + r <= n && w.get(center - r) == w.get(center + r - 1) {
            record(center - r + 1, 2 * r - 2, w.get(center - r));
            r += 1;
        }
    }
    outer
        .into_iter()
        .filter(|(_, mask)| *mask == 0b11)
        .map(|(p, _)| p)
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
}

fn special_factor(w: &Word, m: usize, side: Side) -> Result<Option<Word>> {
    assert!(m >= 1, "factor length must be positive");
    let mut extensions: HashMap<Word, u8> = HashMap::new();
    for f in factors(w, m + 1) {
        let (core, letter) = match side {
            Side::Left => (f.shift(1), f.get(0)),
            Side::Right => (f.prefix(m), f.get(m)),
        };
        *extensions.entry(core).or_insert(0) |= 1 << letter;
    }
    let mut special: Vec<Word> = extensions
        .into_iter()
        .filter(|(_, mask)| *mask == 0b11)
        .map(|(u, _)| u)
        .collect();
    match special.len() {
        0 => Ok(None),
        1 => Ok(special.pop()),
        _ => Err(Error::MultipleSpecialFactors { side, m }),
    }
}

/// The unique length-`m` factor `L` with both `0L` and `1L` occurring in `w`.
pub fn left_special(w: &Word, m: usize) -> Result<Option<Word>> {
    special_factor(w, m, Side::Left)
}

/// The unique length-`m` factor `R` with both `R0` and `R1` occurring in `w`.
pub fn right_special(w: &Word, m: usize) -> Result<Option<Word>> {
    special_factor(w, m, Side::Right)
}

/// Checks that the finite word `w` exhibits the full Sturmian factor
/// structure at length `m`: `m + 1` factors of length `m`, `m + 2` of
/// length `m + 1`, and both special factors present.
///
/// Operations that reason about all factors of an infinite word through a
/// finite prefix call this first.
pub fn verify_window(w: &Word, m: usize) -> Result<()> {
    let p = complexity(w, m);
    if p != m + 1 {
        return Err(Error::insufficient(format!(
            "{p} factors of length {m} in a prefix of length {}, expected {}",
            w.len(),
            m + 1
        )));
    }
    let p1 = complexity(w, m + 1);
    if p1 != m + 2 {
        return Err(Error::insufficient(format!(
            "{p1} factors of length {} in a prefix of length {}, expected {}",
            m + 1,
            w.len(),
            m + 2
        )));
    }
    if left_special(w, m)?.is_none() || right_special(w, m)?.is_none() {
        return Err(Error::insufficient(format!(
            "special factors of length {m} not both witnessed"
        )));
    }
    Ok(())
}

/// Closed rational interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// `[|w|_1/|w| - 1/|w|, |w|_1/|w| + 1/|w|]`: every balanced word of slope
/// `α` having `w` as a factor has `α` in this interval.
///
/// # Panics
///
/// Panics on the empty word.
pub fn slope_estimate(w: &Word) -> RationalInterval {
    assert!(!w.is_empty(), "slope estimate needs a nonempty word");
    let n = BigInt::from(w.len());
    let ones = BigInt::from(w.count_ones());
    RationalInterval {
        lo: BigRational::new(&ones - 1, n.clone()),
        hi: BigRational::new(ones + 1, n),
    }
}
