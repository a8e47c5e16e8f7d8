//! Brute-force reference implementations used to cross-check the library.
//!
//! Everything here is slow on purpose: each function follows a definition
//! directly instead of the shortcut the library takes.

use std::collections::{BTreeSet, HashSet};

use crate::central::enumerate_standard_pairs;
use crate::characteristic::{certified_len, char_prefix};
use crate::continued_fraction::Slope;
use crate::word::Word;

/// `w^{--}` for every standard word `w` with `2 <= |w| <= max_len + 2`,
/// together with the letter powers of length at most `max_len`.
pub fn central_from_standard(max_len: usize) -> BTreeSet<Word> {
    let mut out = letter_powers(max_len);
    for pair in enumerate_standard_pairs(max_len + 2) {
        for u in [pair.u, pair.v] {
            if u.len() >= 2 && u.len() <= max_len + 2 {
                out.insert(u.drop_last_two());
            }
        }
    }
    out
}

fn letter_powers(max_len: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for len in 0..=max_len {
        out.insert(Word::letter_power(0, len));
        out.insert(Word::letter_power(1, len));
    }
    out
}

/// Closure of the letter powers under `p, q -> p01q` when `p01q` is a
/// palindrome.
pub fn central_by_induction(max_len: usize) -> BTreeSet<Word> {
    let mut set = letter_powers(max_len);
    let sep = Word::from_letters([0, 1]);
    loop {
        let current: Vec<Word> = set.iter().cloned().collect();
        let mut added = false;
        for p in &current {
            for q in &current {
                if p.len() + q.len() + 2 > max_len {
                    continue;
                }
                let w = p.concat(&sep).concat(q);
                if w.is_palindrome() && set.insert(w) {
                    added = true;
                }
            }
        }
        if !added {
            return set;
        }
    }
}

/// Palindromic prefixes of length at most `max_len` of every characteristic
/// word, found by searching partial quotients up to `max_len + 2`.
pub fn central_from_prefixes(max_len: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    out.insert(Word::new());
    let bound = max_len as u64 + 2;
    let mut stack: Vec<Vec<u64>> = (1..=bound).map(|a| vec![a]).collect();
    while let Some(quotients) = stack.pop() {
        let s = Slope::new(quotients.clone()).expect("positive quotients");
        if certified_len(&s) >= max_len && s.depth() >= 2 {
            let c = char_prefix(&s, max_len).expect("length certified");
            for len in 1..=max_len {
                let p = c.prefix(len);
                if p.is_palindrome() {
                    out.insert(p);
                }
            }
        } else {
            for a in 1..=bound {
                let mut next = quotients.clone();
                next.push(a);
                stack.push(next);
            }
        }
    }
    out
}

/// Every split `i` with `w = p01q`, `|p| = i`, `p` and `q` palindromes.
pub fn palindromic_splits(w: &Word) -> Vec<usize> {
    let n = w.len();
    (0..n.saturating_sub(1))
        .filter(|&i| {
            w.get(i) == 0
                && w.get(i + 1) == 1
                && w.prefix(i).is_palindrome()
                && w.slice(i + 2, n - i - 2).is_palindrome()
        })
        .collect()
}

/// Balance straight from the definition: all pairs of equal-length factors.
pub fn is_balanced_by_definition(w: &Word) -> bool {
    let n = w.len();
    for len in 1..=n {
        let counts: Vec<usize> = (0..=n - len)
            .map(|i| w.slice(i, len).count_ones())
            .collect();
        let lo = counts.iter().min().unwrap();
        let hi = counts.iter().max().unwrap();
        if hi - lo > 1 {
            return false;
        }
    }
    true
}

/// `r(x, m)` by comparing each new window against all earlier ones.
pub fn repetition_by_definition(x: &Word, m: usize) -> Option<usize> {
    let mut k = 0;
    while k + m <= x.len() {
        let cur = x.slice(k, m);
        if (0..k).any(|j| x.slice(j, m) == cur) {
            return Some(k);
        }
        k += 1;
    }
    None
}

/// `ρ_k = min{j : x and T^j(c) agree on q_k - 1 letters}` for `k <= n`,
/// scanning every `j` below `|c|`.
pub fn rho_by_min_scan(s: &Slope, x: &Word, n: usize, c: &Word) -> Option<Vec<usize>> {
    let mut rho = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let len = s.q(k as isize).ok()? - 1;
        let j = (0..c.len().saturating_sub(len).saturating_add(1))
            .find(|&j| (0..len).all(|i| c.get(j + i) == x.get(i)))?;
        rho.push(j);
    }
    Some(rho)
}

/// Length of the longest common prefix, letter by letter.
pub fn common_prefix_by_letters(a: &Word, b: &Word) -> usize {
    a.iter().zip(b.iter()).take_while(|(x, y)| x == y).count()
}

/// Distinct windows of length `m`, collected as strings.
pub fn factors_by_strings(x: &Word, m: usize) -> HashSet<String> {
    let s = x.to_string();
    if m > s.len() {
        return HashSet::new();
    }
    (0..=s.len() - m).map(|i| s[i..i + m].to_string()).collect()
}
