//! Characteristic words via the standard sequence
//! `s_{-1} = 1`, `s_0 = 0`, `s_1 = s_0^{a_1 - 1} s_{-1}`,
//! `s_{n+1} = s_n^{a_{n+1}} s_{n-1}`, and the morphisms `E`, `G`,
//! `θ_m = G^{m-1} ∘ E ∘ G` and `h_n = θ_{a_1} ∘ ... ∘ θ_{a_n}`.
//!
//! The recursion is the production path; the morphisms are kept as an
//! independent construction and the two are cross-checked in tests.

use crate::continued_fraction::Slope;
use crate::error::{Error, Result};
use crate::word::Word;

/// `s_{-1}, s_0, ..., s_n` for one slope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardSequence {
    words: Vec<Word>,
}

impl StandardSequence {
    /// Highest index available.
    pub fn top(&self) -> isize {
        self.words.len() as isize - 2
    }

    /// `s_k` for `-1 <= k <= top()`.
    pub fn get(&self, k: isize) -> &Word {
        assert!(k >= -1 && k <= self.top(), "s_{k} not in sequence");
        &self.words[(k + 1) as usize]
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }
}

/// `prev^0 = ε` is allowed, which is what makes `s_1 = 1` when `a_1 = 1`.
fn next_standard(cur: &Word, prev: &Word, a: u64, cap: usize) -> Word {
    let mut w = Word::with_capacity(cap.min(cur.len() * a as usize + prev.len()));
    for _ in 0..a {
        if w.len() >= cap {
            break;
        }
        w.extend_from(cur);
    }
    if w.len() < cap {
        w.extend_from(prev);
    }
    w.truncate(cap);
    w
}

/// The standard words `s_{-1}, ..., s_n`.
pub fn standard_words(s: &Slope, n: isize) -> Result<StandardSequence> {
    assert!(n >= -1, "standard words start at s_-1");
    if n > 0 {
        // checks depth and that q_n is addressable
        s.q(n)?;
    }
    let mut words = vec![Word::from_letters([1]), Word::from_letters([0])];
    for k in 0..n.max(0) as usize {
        // s_1 = s_0^{a_1 - 1} s_{-1}
        let a = if k == 0 { s.a(1)? - 1 } else { s.a(k + 1)? };
        let next = next_standard(&words[k + 1], &words[k], a, usize::MAX);
        words.push(next);
    }
    words.truncate((n + 2) as usize);
    Ok(StandardSequence { words })
}

/// Smallest `n >= 1` with `q_n >= len`.
pub(crate) fn level_for_length(s: &Slope, len: usize) -> Result<usize> {
    s.lengths()
        .iter()
        .skip(1)
        .position(|&q| q >= len)
        .map(|i| i + 1)
        .ok_or(Error::DepthExceeded {
            needed: s.depth() + 1,
            available: s.depth(),
        })
}

/// Longest prefix of `c_α` the slope's quotients determine: `q_d + q_{d-1}`
/// for depth `d >= 2`, since every later `s_{d+1}` starts with `s_d s_{d-1}`.
pub fn certified_len(s: &Slope) -> usize {
    let d = s.max_level().min(s.depth());
    let q = s.lengths();
    if d >= 2 {
        q[d].saturating_add(q[d - 1])
    } else {
        q[d]
    }
}

/// The length-`len` prefix of `c_α`: the prefix of `s_n` for the first
/// `n >= 1` with `q_n >= len`, or of `s_d s_{d-1}` past `q_d`.
pub fn char_prefix(s: &Slope, len: usize) -> Result<Word> {
    let n = match level_for_length(s, len) {
        Ok(n) => n,
        Err(e) => {
            if len > certified_len(s) {
                return Err(e);
            }
            let d = s.max_level().min(s.depth());
            let seq = standard_words(s, d as isize)?;
            let d = d as isize;
            return Ok(seq.get(d).concat(seq.get(d - 1)).prefix(len));
        }
    };
    let mut prev = Word::from_letters([1]);
    let mut cur = Word::from_letters([0]);
    for k in 0..n {
        let a = if k == 0 { s.a(1)? - 1 } else { s.a(k + 1)? };
        let cap = if k + 1 == n { len } else { usize::MAX };
        let next = next_standard(&cur, &prev, a, cap);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The exchange morphism `0 -> 1`, `1 -> 0`.
pub fn morphism_e(w: &Word) -> Word {
    w.complement()
}

/// `0 -> 0`, `1 -> 01`.
pub fn morphism_g(w: &Word) -> Word {
    let mut out = Word::with_capacity(w.len() + w.count_ones());
    for a in w.iter() {
        if a == 1 {
            out.push(0);
        }
        out.push(a);
    }
    out
}

/// `θ_m = G^{m-1} ∘ E ∘ G`, so `θ_m(0) = 0^{m-1}1` and `θ_m(1) = 0^{m-1}10`.
pub fn theta(m: u64, w: &Word) -> Word {
    assert!(m >= 1, "theta is defined for m >= 1");
    let mut out = morphism_e(&morphism_g(w));
    for _ in 1..m {
        out = morphism_g(&out);
    }
    out
}

/// `h_n(w) = θ_{a_1}(θ_{a_2}(... θ_{a_n}(w)))`.
pub fn h(s: &Slope, n: usize, w: &Word) -> Result<Word> {
    assert!(n >= 1, "h_n is defined for n >= 1");
    if n > s.depth() {
        return Err(Error::DepthExceeded {
            needed: n,
            available: s.depth(),
        });
    }
    let mut out = w.clone();
    for i in (1..=n).rev() {
        out = theta(s.a(i)?, &out);
    }
    Ok(out)
}
