//! Slopes given by finitely many partial quotients, with exact continuants
//! and convergents.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The slope `[0; a_1, a_2, ..., a_K]` known through depth `K`.
///
/// Only the listed partial quotients are known; anything that needs
/// `a_{K+1}` or later fails with [`Error::DepthExceeded`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    quotients: Vec<u64>,
    /// `q_0, ..., q_j` for the longest prefix of the table that fits in a
    /// `usize`; these are the lengths of the standard words.
    lengths: Vec<usize>,
}

impl Slope {
    pub fn new(quotients: Vec<u64>) -> Result<Self> {
        if quotients.is_empty() {
            return Err(Error::InvalidSlope("no partial quotients".into()));
        }
        if let Some(i) = quotients.iter().position(|&a| a == 0) {
            return Err(Error::InvalidSlope(format!(
                "partial quotient a_{} is zero",
                i + 1
            )));
        }
        let mut lengths = vec![1usize];
        let mut prev = 0usize;
        for &a in &quotients {
            let cur = *lengths.last().unwrap();
            let next = usize::try_from(a)
                .ok()
                .and_then(|a| a.checked_mul(cur))
                .and_then(|x| x.checked_add(prev));
            match next {
                Some(next) => {
                    lengths.push(next);
                    prev = cur;
                }
                None => break,
            }
        }
        Ok(Slope { quotients, lengths })
    }

    /// Number of known partial quotients.
    pub fn depth(&self) -> usize {
        self.quotients.len()
    }

    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    /// `a_i`, 1-based.
    pub fn a(&self, i: usize) -> Result<u64> {
        if i == 0 {
            return Err(Error::InvalidSlope(
                "partial quotients are indexed from 1".into(),
            ));
        }
        self.quotients
            .get(i - 1)
            .copied()
            .ok_or(Error::DepthExceeded {
                needed: i,
                available: self.depth(),
            })
    }

    /// `q_n` as a machine integer, for `n >= -1`.
    ///
    /// Fails with `DepthExceeded` past the known quotients and with
    /// `Overflow` when `q_n` does not fit in a `usize`.
    pub fn q(&self, n: isize) -> Result<usize> {
        if n < 0 {
            return Ok(0);
        }
        let n = n as usize;
        if n > self.depth() {
            return Err(Error::DepthExceeded {
                needed: n,
                available: self.depth(),
            });
        }
        self.lengths
            .get(n)
            .copied()
            .ok_or_else(|| Error::Overflow(format!("q_{n}")))
    }

    /// Largest `n` with `q_n` known and representable.
    pub fn max_level(&self) -> usize {
        self.lengths.len() - 1
    }

    /// Machine-integer continuants `q_0, q_1, ...` as far as they fit.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.quotients.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Comma-separated positive integers, e.g. `2,1,1,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let quotients = s
            .trim()
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidSlope(format!("{part:?} is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Slope::new(quotients)
    }
}

/// Continuants `q_{-1}, ..., q_n` and numerators `p_{-1}, ..., p_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuantTable {
    q: Vec<BigUint>,
    p: Vec<BigUint>,
}

impl ContinuantTable {
    /// Highest index `n` in the table.
    pub fn top(&self) -> usize {
        self.q.len() - 2
    }

    /// `q_n` for `-1 <= n <= top()`.
    pub fn q(&self, n: isize) -> &BigUint {
        &self.q[(n + 1) as usize]
    }

    /// `p_n` for `-1 <= n <= top()`.
    pub fn p(&self, n: isize) -> &BigUint {
        &self.p[(n + 1) as usize]
    }

    /// The full `q` column, starting with `q_{-1}`.
    pub fn q_column(&self) -> &[BigUint] {
        &self.q
    }

    pub fn p_column(&self) -> &[BigUint] {
        &self.p
    }
}

/// Exact table up to index `n`: `q_{-1} = 0`, `q_0 = 1`,
/// `q_{k+1} = a_{k+1} q_k + q_{k-1}`, and likewise for `p` from
/// `p_{-1} = 1`, `p_0 = 0`.
pub fn continuants(s: &Slope, n: usize) -> Result<ContinuantTable> {
    if n > s.depth() {
        return Err(Error::DepthExceeded {
            needed: n,
            available: s.depth(),
        });
    }
    let mut q = vec![BigUint::zero(), BigUint::one()];
    let mut p = vec![BigUint::one(), BigUint::zero()];
    for &a in &s.quotients()[..n] {
        let a = BigUint::from(a);
        let k = q.len();
        q.push(&a * &q[k - 1] + &q[k - 2]);
        p.push(&a * &p[k - 1] + &p[k - 2]);
    }
    Ok(ContinuantTable { q, p })
}

/// `p_n / q_n = [0; a_1, ..., a_n]` in lowest terms, `n >= 1`.
pub fn convergent(s: &Slope, n: usize) -> Result<BigRational> {
    assert!(n >= 1, "convergents are indexed from 1");
    let t = continuants(s, n)?;
    let n = n as isize;
    Ok(BigRational::new(
        BigInt::from(t.p(n).clone()),
        BigInt::from(t.q(n).clone()),
    ))
}

/// `q_n` as a `u64` if it fits; convenience for tables and CLI output.
pub fn q_u64(t: &ContinuantTable, n: isize) -> Option<u64> {
    t.q(n).to_u64()
}
