//! Formal intercepts.
//!
//! A formal intercept of a slope is a sequence `ρ_n ∈ [0, q_n)` with
//! `ρ_{n+1} ≡ ρ_n (mod q_n)`, or equivalently an Ostrowski digit stream with
//! `ρ_n = Σ_{i<n} b_{i+1} q_i`. The Sturmian word `T^ρ(c_α)` shares its
//! prefix of length `q_n - 1` with `T^{ρ_n}(c_α)` for every `n >= 1`, and
//! every Sturmian word of the slope arises this way from exactly one
//! intercept.
//!
//! Only finitely many digits are ever known. A [`Tail`] records what is
//! assumed past them: either all zeros, which describes exactly the suffixes
//! `T^k(c_α)`, or nothing, in which case deeper queries fail with
//! `DepthExceeded`.

use crate::characteristic::{certified_len, char_prefix};
use crate::continued_fraction::Slope;
use crate::error::{DigitViolation, Error, Result};
use crate::ostrowski::{check_digits, OstrowskiDigits};
use crate::word::Word;

/// What is known about the digits past the stored ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tail {
    /// Every later digit is 0.
    Zeros,
    /// Later digits are not known.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalIntercept {
    slope: Slope,
    digits: Vec<u64>,
    tail: Tail,
    /// `ρ_0, ..., ρ_d` for the stored digits.
    rho: Vec<usize>,
}

fn overflow(what: &str) -> Error {
    Error::Overflow(what.to_string())
}

impl FormalIntercept {
    /// The intercept of `c_α` itself: every `ρ_n = 0`.
    pub fn zero(slope: Slope) -> Self {
        FormalIntercept {
            slope,
            digits: Vec::new(),
            tail: Tail::Zeros,
            rho: vec![0],
        }
    }

    /// Digits `b_1, ..., b_depth` from a generator; the tail is unknown.
    pub fn from_generator(
        slope: Slope,
        depth: usize,
        digit: impl Fn(usize) -> u64,
    ) -> Result<Self> {
        let digits = (1..=depth).map(digit).collect();
        make_intercept(slope, digits, Tail::Unknown)
    }

    /// The intercept of `0 c_α`: `b_i = a_i` for even `i`, 0 otherwise, to the
    /// full depth of the slope.
    pub fn zero_prefixed(slope: Slope) -> Result<Self> {
        let a = slope.quotients().to_vec();
        Self::from_generator(slope, a.len(), |i| if i % 2 == 0 { a[i - 1] } else { 0 })
    }

    /// The intercept of `1 c_α`: `b_1 = a_1 - 1`, `b_i = a_i` for odd
    /// `i >= 3`, 0 otherwise, to the full depth of the slope.
    pub fn one_prefixed(slope: Slope) -> Result<Self> {
        let a = slope.quotients().to_vec();
        Self::from_generator(slope, a.len(), |i| match i {
            1 => a[0] - 1,
            _ if i % 2 == 1 => a[i - 1],
            _ => 0,
        })
    }

    /// Builds an intercept from `ρ_1, ρ_2, ...` (`ρ_0 = 0` is implied),
    /// checking range and coherence at every level.
    pub fn from_rho(slope: Slope, rho: &[usize], tail: Tail) -> Result<Self> {
        let mut digits = Vec::with_capacity(rho.len());
        let mut prev = 0usize;
        for (i, &r) in rho.iter().enumerate() {
            let level = i + 1;
            let q_prev = slope.q(i as isize)?;
            let q_level = slope.q(level as isize)?;
            if r >= q_level {
                return Err(Error::InvalidDigits(DigitViolation::PartialSum { level }));
            }
            if r % q_prev != prev || r < prev {
                return Err(Error::InvalidDigits(DigitViolation::Coherence { level: i }));
            }
            digits.push(((r - prev) / q_prev) as u64);
            prev = r;
        }
        make_intercept(slope, digits, tail)
    }

    pub fn slope(&self) -> &Slope {
        &self.slope
    }

    /// The stored digits `b_1, ..., b_d`.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    /// `b_i` (1-based) if known.
    pub fn digit(&self, i: usize) -> Option<u64> {
        assert!(i >= 1, "digits are indexed from 1");
        match self.digits.get(i - 1) {
            Some(&b) => Some(b),
            None if self.tail == Tail::Zeros => Some(0),
            None => None,
        }
    }

    /// `ρ_n = Σ_{i<n} b_{i+1} q_i`.
    pub fn rho(&self, n: usize) -> Result<usize> {
        match self.rho.get(n) {
            Some(&r) => Ok(r),
            None if self.tail == Tail::Zeros => Ok(*self.rho.last().unwrap()),
            None => Err(Error::DepthExceeded {
                needed: n,
                available: self.digits.len(),
            }),
        }
    }

    /// The stored `ρ_0, ..., ρ_d`.
    pub fn rho_sequence(&self) -> &[usize] {
        &self.rho
    }

    /// Deepest level whose `ρ` and `q` are both known.
    pub fn known_depth(&self) -> usize {
        match self.tail {
            Tail::Zeros => self.slope.max_level().min(self.slope.depth()),
            Tail::Unknown => self.digits.len(),
        }
    }

    pub fn to_digits(&self) -> OstrowskiDigits {
        OstrowskiDigits::new(self.slope.clone(), self.digits.clone())
    }
}

/// Validates `digits` against the Ostrowski conditions and derives the
/// `ρ` sequence.
pub fn make_intercept(slope: Slope, digits: Vec<u64>, tail: Tail) -> Result<FormalIntercept> {
    let d = OstrowskiDigits::new(slope, digits);
    check_digits(&d).map_err(Error::InvalidDigits)?;
    let slope = d.slope().clone();
    let digits = d.digits().to_vec();
    let mut rho = Vec::with_capacity(digits.len() + 1);
    rho.push(0usize);
    for (i, &b) in digits.iter().enumerate() {
        let q = slope.q(i as isize)?;
        let step = usize::try_from(b)
            .ok()
            .and_then(|b| b.checked_mul(q))
            .ok_or_else(|| overflow("rho"))?;
        let next = rho[i].checked_add(step).ok_or_else(|| overflow("rho"))?;
        rho.push(next);
    }
    Ok(FormalIntercept {
        slope,
        digits,
        tail,
        rho,
    })
}

/// `λ_n = q_{n+1} + q_n - ρ_{n+1} - 2`, the guaranteed common-prefix length
/// of `T^{ρ_n}(c_α)` and `T^{ρ_{n+1}}(c_α)`; exact when `b_{n+1} != 0`.
pub fn lambda_n(iota: &FormalIntercept, n: usize) -> Result<usize> {
    assert!(n >= 1, "lambda_n is defined for n >= 1");
    let s = iota.slope();
    let q_next = s.q(n as isize + 1)?;
    let q = s.q(n as isize)?;
    let rho_next = iota.rho(n + 1)?;
    // ρ_{n+1} < q_{n+1} and q_n >= 1, so this never underflows
    Ok(q_next + q - rho_next - 2)
}

/// The length-`len` prefix of `T^ρ(c_α)`: the prefix of `T^{ρ_n}(c_α)` for
/// the first `n >= 1` with `q_n - 1 >= len`.
pub fn word_from_intercept(iota: &FormalIntercept, len: usize) -> Result<Word> {
    if len == 0 {
        return Ok(Word::new());
    }
    let s = iota.slope();
    let n = (1..=iota.known_depth())
        .find(|&n| s.q(n as isize).is_ok_and(|q| q > len))
        .ok_or(Error::DepthExceeded {
            needed: iota.known_depth() + 1,
            available: iota.known_depth(),
        })?;
    let start = iota.rho(n)?;
    let c = char_prefix(s, start + len)?;
    Ok(c.slice(start, len))
}

/// Recovers `ρ_0, ..., ρ_n` for a Sturmian word `x` of slope `s`:
/// `ρ_k` is the least `j` such that `x` and `T^j(c_α)` share their prefix of
/// length `q_k - 1`.
///
/// Level `k` only tries `j ∈ {ρ_{k-1} + t q_{k-1}} ∩ [0, q_k)`, which is
/// where coherence puts the answer. Needs `|x| >= q_n - 1` and `c_α` to
/// length `2 q_n - 2`.
pub fn intercept_from_word(s: &Slope, x: &Word, n: usize) -> Result<FormalIntercept> {
    let qn = s.q(n as isize)?;
    let need = qn - 1;
    if x.len() < need {
        return Err(Error::insufficient(format!(
            "recovering depth {n} needs {need} letters, word has {}",
            x.len()
        )));
    }
    let c = char_prefix(s, 2 * qn - 2)?;
    let mut rho = vec![0usize];
    for k in 1..=n {
        let prefix_len = s.q(k as isize)? - 1;
        let step = s.q(k as isize - 1)?;
        let bound = s.q(k as isize)?;
        let prev = rho[k - 1];
        let found = (0..)
            .map(|t| prev + t * step)
            .take_while(|&j| j < bound)
            .find(|&j| c.common_prefix_at(j, x, 0) >= prefix_len)
            .ok_or(Error::NotThisSlope { level: k })?;
        rho.push(found);
    }
    let digits = rho
        .windows(2)
        .enumerate()
        .map(|(i, pair)| {
            let q = s.q(i as isize).expect("level checked above");
            let diff = pair[1] - pair[0];
            assert_eq!(
                diff % q,
                0,
                "rho_{} - rho_{i} not divisible by q_{i}",
                i + 1
            );
            (diff / q) as u64
        })
        .collect();
    make_intercept(s.clone(), digits, Tail::Unknown)
}

/// Result of comparing `T^ρ(c_α)` with `T^{ρ_n}(c_α)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommonPrefix {
    /// Longest common prefix length `λ_N`.
    Length(usize),
    /// All later digits are zero, so the two words coincide; `certified` is
    /// how many letters of `T^{ρ_n}(c_α)` the slope's depth can produce.
    Equal { certified: usize },
}

/// Longest common prefix of `T^ρ(c_α)` and `T^{ρ_n}(c_α)`: `λ_N` for the
/// least `N >= n` with `b_{N+1} != 0`.
pub fn common_prefix_vs_rho_n(iota: &FormalIntercept, n: usize) -> Result<CommonPrefix> {
    assert!(n >= 1, "defined for n >= 1");
    let stored = iota.digits().len();
    let mut big_n = n;
    loop {
        if big_n + 1 > stored && iota.tail() == Tail::Zeros {
            let certified = certified_len(iota.slope()).saturating_sub(iota.rho(n)?);
            return Ok(CommonPrefix::Equal { certified });
        }
        match iota.digit(big_n + 1) {
            Some(0) => big_n += 1,
            Some(_) => return Ok(CommonPrefix::Length(lambda_n(iota, big_n)?)),
            None => {
                return Err(Error::DepthExceeded {
                    needed: big_n + 1,
                    available: stored,
                });
            }
        }
    }
}
