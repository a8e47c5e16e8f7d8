//! Ostrowski numeration: every `N ∈ [0, q_n)` is uniquely
//! `N = Σ_{i=0}^{n-1} b_{i+1} q_i` with digits obeying
//!
//! * `0 <= b_1 <= a_1 - 1`,
//! * `0 <= b_i <= a_i` for `i >= 2`,
//! * `b_{i+1} = a_{i+1}` implies `b_i = 0`.
//!
//! Equivalently, every partial sum `Σ_{i<l} b_{i+1} q_i` is below `q_l`.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::continued_fraction::{continuants, Slope};
use crate::error::{DigitViolation, Error, Result};

/// A digit vector `b_1, ..., b_n` for a slope. Not validated on
/// construction; see [`check_digits`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OstrowskiDigits {
    slope: Slope,
    digits: Vec<u64>,
}

impl OstrowskiDigits {
    pub fn new(slope: Slope, digits: Vec<u64>) -> Self {
        OstrowskiDigits { slope, digits }
    }

    pub fn slope(&self) -> &Slope {
        &self.slope
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

fn too_many(d: &OstrowskiDigits) -> Option<DigitViolation> {
    (d.len() > d.slope.depth()).then(|| DigitViolation::TooManyDigits {
        digits: d.len(),
        depth: d.slope.depth(),
    })
}

/// Digit bounds and the carry rule, reporting the first violation.
pub fn digit_conditions(d: &OstrowskiDigits) -> Result<(), DigitViolation> {
    if let Some(v) = too_many(d) {
        return Err(v);
    }
    let a = d.slope.quotients();
    for (i, &b) in d.digits.iter().enumerate() {
        let index = i + 1;
        if index == 1 {
            if b > a[0] - 1 {
                return Err(DigitViolation::FirstDigit {
                    digit: b,
                    max: a[0] - 1,
                });
            }
        } else {
            if b > a[i] {
                return Err(DigitViolation::DigitBound {
                    index,
                    digit: b,
                    max: a[i],
                });
            }
            if b == a[i] && d.digits[i - 1] != 0 {
                return Err(DigitViolation::Carry { index });
            }
        }
    }
    Ok(())
}

/// `Σ_{i=0}^{l-1} b_{i+1} q_i < q_l` for every `l <= n`.
pub fn partial_sum_conditions(d: &OstrowskiDigits) -> Result<(), DigitViolation> {
    if let Some(v) = too_many(d) {
        return Err(v);
    }
    let table = continuants(&d.slope, d.len()).expect("depth checked above");
    let mut sum = BigUint::zero();
    for (i, &b) in d.digits.iter().enumerate() {
        sum += BigUint::from(b) * table.q(i as isize);
        let level = i + 1;
        if &sum >= table.q(level as isize) {
            return Err(DigitViolation::PartialSum { level });
        }
    }
    Ok(())
}

/// Checks both equivalent condition sets and returns the first violated
/// digit condition.
///
/// # Panics
///
/// Panics if the two condition sets disagree, which would mean a bug in
/// one of them.
pub fn check_digits(d: &OstrowskiDigits) -> Result<(), DigitViolation> {
    let by_digits = digit_conditions(d);
    let by_sums = partial_sum_conditions(d);
    assert_eq!(
        by_digits.is_ok(),
        by_sums.is_ok(),
        "Ostrowski condition sets disagree on {:?}",
        d.digits
    );
    by_digits
}

/// The Ostrowski digits `b_1, ..., b_n` of `value < q_n`, greedily from the
/// top digit down.
pub fn encode(value: &BigUint, s: &Slope, n: usize) -> Result<OstrowskiDigits> {
    let table = continuants(s, n)?;
    let bound = table.q(n as isize);
    if value >= bound {
        return Err(Error::OutOfRange {
            value: value.to_string(),
            bound: bound.to_string(),
        });
    }
    let mut rest = value.clone();
    let mut digits = vec![0u64; n];
    for i in (1..=n).rev() {
        let q = table.q(i as isize - 1);
        let b = &rest / q;
        rest -= &b * q;
        digits[i - 1] = b.to_u64().expect("digit bounded by a partial quotient");
    }
    debug_assert!(rest.is_zero());
    let d = OstrowskiDigits::new(s.clone(), digits);
    debug_assert!(check_digits(&d).is_ok());
    Ok(d)
}

/// `Σ b_{i+1} q_i` for a valid digit vector.
pub fn decode(d: &OstrowskiDigits) -> Result<BigUint> {
    check_digits(d).map_err(Error::InvalidDigits)?;
    let table = continuants(&d.slope, d.len())?;
    Ok(d.digits
        .iter()
        .enumerate()
        .map(|(i, &b)| BigUint::from(b) * table.q(i as isize))
        .sum())
}
