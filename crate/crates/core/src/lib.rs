//! Exact combinatorics of Sturmian words.
//!
//! Characteristic words are generated from the partial quotients of their
//! slope. On top of them the crate provides factor diagnostics, the
//! repetition function and its closed form, Rauzy graphs with their two-cycle
//! decomposition, central and standard words, Ostrowski numeration, and
//! formal intercepts: the correspondence between Ostrowski digit streams
//! and the Sturmian words of a given slope.
//!
//! Everything works on finite prefixes. A [`Slope`] knows finitely many
//! partial quotients and every operation states how much depth it needs,
//! failing with [`Error::DepthExceeded`] instead of extrapolating. No
//! floating point is used anywhere.

pub mod central;
pub mod characteristic;
pub mod continued_fraction;
pub mod error;
pub mod factors;
pub mod intercept;
#[cfg(any(test, feature = "oracles"))]
pub mod oracles;
pub mod ostrowski;
pub mod rauzy;
pub mod repetition;
pub mod word;

pub use central::{
    central_decompose, central_prefixes, enumerate_standard_pairs, is_central, is_standard, Move,
    StandardPair,
};
pub use characteristic::{
    certified_len, char_prefix, h, morphism_e, morphism_g, standard_words, theta, StandardSequence,
};
pub use continued_fraction::{continuants, convergent, ContinuantTable, Slope};
pub use error::{DigitViolation, Error, Result, Side};
pub use factors::{
    balance_palindrome_witness, complexity, factors, is_balanced, left_special, right_special,
    slope_estimate, unbalanced_pair, verify_window, FactorSet, RationalInterval,
};
pub use intercept::{
    common_prefix_vs_rho_n, intercept_from_word, lambda_n, make_intercept, word_from_intercept,
    CommonPrefix, FormalIntercept, Tail,
};
pub use ostrowski::{
    check_digits, decode, digit_conditions, encode, partial_sum_conditions, OstrowskiDigits,
};
pub use rauzy::{
    build_graph, decompose_cycles, export_dot, longest_run_on, t_first_letter, turns_around,
    turns_around_cycle, turns_by_repetition, turns_prefix_len, Cycle, CycleDecomposition,
    RauzyGraph, Turns,
};
pub use repetition::{
    bugeaud_kim_r0, classify_interval, repetition, repetition_closed_form, window_prefix_len,
    IntervalIndex,
};
pub use word::Word;
