//! The repetition function `r(x, m)` and its closed form on characteristic
//! words.
//!
//! For a slope with continuants `q_n` the positive integers split into the
//! intervals `I_n = [q_n - 1, q_{n+1} - 2]`, and each `I_n` into
//! `I_n^0 = [q_n - 1, q_n + q_{n-1} - 2]` and
//! `I_n^l = [l q_n + q_{n-1} - 1, (l + 1) q_n + q_{n-1} - 2]` for
//! `1 <= l <= a_{n+1} - 1`. Some of these are empty for small `a_1, a_2`;
//! classification simply never lands in an empty one.

use std::collections::HashSet;

use crate::continued_fraction::Slope;
use crate::error::{Error, Result};
use crate::word::Word;

/// The pair `(n, l)` with `m ∈ I_n^l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalIndex {
    pub n: usize,
    pub l: u64,
}

/// Largest `k` such that the length-`m` prefixes of `x, T(x), ..., T^{k-1}(x)`
/// are pairwise distinct.
///
/// Fails with `InsufficientPrefix` when `x` ends before a repeated window
/// shows up.
pub fn repetition(x: &Word, m: usize) -> Result<usize> {
    assert!(m >= 1, "repetition is defined for m >= 1");
    let exhausted = || {
        Error::insufficient(format!(
            "no repeated length-{m} window in a word of length {}",
            x.len()
        ))
    };
    if m > x.len() {
        return Err(exhausted());
    }
    let starts = x.len() - m + 1;
    if m <= 64 {
        let mut seen = HashSet::new();
        for k in 0..starts {
            if !seen.insert(x.window_bits(k, m)) {
                return Ok(k);
            }
        }
    } else {
        let mut seen = HashSet::new();
        for k in 0..starts {
            if !seen.insert(x.slice(k, m)) {
                return Ok(k);
            }
        }
    }
    Err(exhausted())
}

/// Bugeaud and Kim's repetition function, `m + r(x, m)`.
pub fn bugeaud_kim_r0(x: &Word, m: usize) -> Result<usize> {
    Ok(m + repetition(x, m)?)
}

/// The unique `(n, l)` with `m ∈ I_n^l`. Needs `q_{n+1}`, hence depth `n + 1`.
pub fn classify_interval(s: &Slope, m: usize) -> Result<IntervalIndex> {
    assert!(m >= 1, "intervals are classified for m >= 1");
    let top = s.depth().min(s.max_level());
    for n in 0..top {
        let qn = s.q(n as isize)?;
        let qn1 = s.q(n as isize + 1)?;
        if m + 1 < qn || m + 2 > qn1 {
            continue;
        }
        let qprev = s.q(n as isize - 1)?;
        let l = if m + 2 <= qn + qprev {
            0
        } else {
            ((m + 1 - qprev) / qn) as u64
        };
        debug_assert!(l < s.a(n + 1)?, "l out of range for m = {m}");
        return Ok(IntervalIndex { n, l });
    }
    if s.max_level() < s.depth() {
        Err(Error::Overflow(format!("q_{}", s.max_level() + 1)))
    } else {
        Err(Error::DepthExceeded {
            needed: s.depth() + 1,
            available: s.depth(),
        })
    }
}

/// `r(c_α, m) = q_n` for `m ∈ I_n`.
pub fn repetition_closed_form(s: &Slope, m: usize) -> Result<usize> {
    let idx = classify_interval(s, m)?;
    s.q(idx.n as isize)
}

/// Length of a prefix of `c_α` guaranteed to contain every factor of length
/// `m + 1`: `q_{n+1} + m + 1` for `m ∈ I_n`.
///
/// The path of `c_α` in the Rauzy graph of degree `m` has covered both cycles
/// after `q_{n+1}` arrows.
pub fn window_prefix_len(s: &Slope, m: usize) -> Result<usize> {
    let idx = classify_interval(s, m)?;
    Ok(s.q(idx.n as isize + 1)? + m + 1)
}
