//! Standard pairs, standard words and central words.
//!
//! Standard pairs are generated from `(0, 1)` by the two rules
//! `(u, v) -> (vu, v)` and `(u, v) -> (u, uv)`; a standard word is a
//! component of a standard pair. A word is central when it is a power of a
//! letter, or a palindrome `p01q` with `p` and `q` palindromes. Such a
//! decomposition is unique.

use std::collections::VecDeque;

use crate::characteristic::standard_words;
use crate::continued_fraction::Slope;
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// `(u, v) -> (vu, v)`
    Left,
    /// `(u, v) -> (u, uv)`
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardPair {
    pub u: Word,
    pub v: Word,
    /// Moves applied to `(0, 1)`, first move first.
    pub derivation: Vec<Move>,
}

impl StandardPair {
    pub fn root() -> Self {
        StandardPair {
            u: Word::from_letters([0]),
            v: Word::from_letters([1]),
            derivation: Vec::new(),
        }
    }

    pub fn apply(&self, mv: Move) -> Self {
        let (u, v) = match mv {
            Move::Left => (self.v.concat(&self.u), self.v.clone()),
            Move::Right => (self.u.clone(), self.u.concat(&self.v)),
        };
        let mut derivation = self.derivation.clone();
        derivation.push(mv);
        StandardPair { u, v, derivation }
    }

    /// Replays a derivation from `(0, 1)`.
    pub fn replay(derivation: &[Move]) -> Self {
        derivation
            .iter()
            .fold(Self::root(), |pair, &mv| pair.apply(mv))
    }

    /// `|u| |v|_1 - |u|_1 |v|`, which is 1 for every standard pair.
    pub fn determinant(&self) -> i128 {
        let (u, v) = (&self.u, &self.v);
        u.len() as i128 * v.count_ones() as i128 - u.count_ones() as i128 * v.len() as i128
    }
}

/// Every standard pair with `max(|u|, |v|) <= max_len`, in breadth-first
/// order from `(0, 1)`.
pub fn enumerate_standard_pairs(max_len: usize) -> Vec<StandardPair> {
    assert!(max_len >= 1, "max_len must be positive");
    let mut out = Vec::new();
    let mut queue = VecDeque::from([StandardPair::root()]);
    while let Some(pair) = queue.pop_front() {
        for mv in [Move::Left, Move::Right] {
            let next = pair.apply(mv);
            if next.u.len().max(next.v.len()) <= max_len {
                queue.push_back(next);
            }
        }
        out.push(pair);
    }
    out
}

fn is_letter_power(w: &Word) -> bool {
    let ones = w.count_ones();
    ones == 0 || ones == w.len()
}

/// Split positions `i` with `w = p 01 q`, `|p| = i`, `p` and `q` palindromes.
fn central_splits(w: &Word) -> impl Iterator<Item = usize> + '_ {
    let n = w.len();
    (0..n.saturating_sub(1)).filter(move |&i| {
        w.get(i) == 0
            && w.get(i + 1) == 1
            && w.prefix(i).is_palindrome()
            && w.slice(i + 2, n - i - 2).is_palindrome()
    })
}

/// Central: a power of a letter (the empty word included), or a palindrome
/// `p01q` with `p`, `q` palindromes.
pub fn is_central(w: &Word) -> bool {
    is_letter_power(w) || (w.is_palindrome() && central_splits(w).next().is_some())
}

/// The unique `(p, q)` with `w = p01q` and `p`, `q` palindromes.
pub fn central_decompose(w: &Word) -> Result<(Word, Word)> {
    if is_letter_power(w) {
        return Err(Error::LetterPower);
    }
    if !w.is_palindrome() {
        return Err(Error::NotCentral);
    }
    let mut splits = central_splits(w);
    let i = splits.next().ok_or(Error::NotCentral)?;
    debug_assert!(
        splits.next().is_none(),
        "central decomposition of {w} is not unique"
    );
    Ok((w.prefix(i), w.shift(i + 2)))
}

/// Standard words are the two letters and the words `c01`, `c10` with `c`
/// central.
///
/// These are exactly the components of standard pairs.
pub fn is_standard(w: &Word) -> bool {
    match w.len() {
        0 => false,
        1 => true,
        n => w.get(n - 2) != w.get(n - 1) && is_central(&w.drop_last_two()),
    }
}

/// Nonempty palindromic prefixes of `c_α` of length at most
/// `q_n + q_{n-1} - 2`, shortest first.
///
/// Their lengths are `l q_k + q_{k-1} - 2` for `1 <= l <= a_{k+1}`; the list
/// contains `s_k^{--}` for `k <= n` and `s_k^{--} t_k s_{k+1}^{--}` for
/// `k < n`. Uses depth `n`.
pub fn central_prefixes(s: &Slope, n: usize) -> Result<Vec<Word>> {
    assert!(n >= 1, "central prefixes need n >= 1");
    let seq = standard_words(s, n as isize)?;
    let ni = n as isize;
    // s_n s_{n-1}^{--} is a prefix of c_α
    let source = seq.get(ni).concat(&seq.get(ni - 1).drop_last_two());
    let mut lengths = Vec::new();
    for k in 0..n {
        let qk = s.q(k as isize)?;
        let qp = s.q(k as isize - 1)?;
        for l in 1..=s.a(k + 1)? as usize {
            lengths.push((l * qk + qp).saturating_sub(2));
        }
    }
    lengths.push(source.len());
    lengths.retain(|&len| len >= 1);
    lengths.sort_unstable();
    lengths.dedup();
    Ok(lengths
        .into_iter()
        .map(|len| {
            let w = source.prefix(len);
            debug_assert!(w.is_palindrome(), "{w} is not a palindrome");
            w
        })
        .collect())
}
