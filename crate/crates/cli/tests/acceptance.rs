//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! All comparisons are exact. Slopes are drawn from a fixed seed so every
//! run checks the same inputs.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigUint;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sturmian::oracles::{
    central_by_induction, central_from_prefixes, central_from_standard, common_prefix_by_letters,
    is_balanced_by_definition, palindromic_splits, repetition_by_definition, rho_by_min_scan,
};
use sturmian::{
    balance_palindrome_witness, build_graph, central_decompose, central_prefixes, certified_len,
    char_prefix, classify_interval, common_prefix_vs_rho_n, complexity, decode, decompose_cycles,
    digit_conditions, encode, intercept_from_word, is_balanced, is_central, lambda_n,
    longest_run_on, make_intercept, partial_sum_conditions, repetition, repetition_closed_form,
    t_first_letter, turns_around, turns_prefix_len, verify_window, window_prefix_len,
    word_from_intercept, CommonPrefix, FormalIntercept, OstrowskiDigits, Slope, Tail, Word,
};

const SEED: u64 = 0x5eed_57a1;
const SLOPES: usize = 50;
const DEPTH: usize = 10;
const MAX_M: usize = 200;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn random_slopes() -> Vec<Slope> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..SLOPES)
        .map(|_| Slope::new((0..DEPTH).map(|_| rng.gen_range(1..=4)).collect()).unwrap())
        .collect()
}

/// Small `a_1, a_2` make the leading intervals empty or short.
fn edge_slopes() -> Vec<Slope> {
    let tail = [1, 2, 1, 3, 1, 2, 2, 1];
    let mut out = Vec::new();
    for a1 in 1..=3u64 {
        for a2 in 1..=3u64 {
            let mut q = vec![a1, a2];
            q.extend_from_slice(&tail);
            out.push(Slope::new(q).unwrap());
        }
    }
    out
}

/// Degrees `m <= 200` for which every check below has enough certified
/// letters of `c_α`.
fn covered(s: &Slope) -> Vec<usize> {
    let avail = certified_len(s);
    (1..=MAX_M)
        .take_while(|&m| turns_prefix_len(s, m).is_ok_and(|len| len <= avail))
        .collect()
}

/// Digits `b_1..b_depth` drawn uniformly from the values the Ostrowski
/// conditions allow given the previous digit.
fn random_digits(s: &Slope, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let a = s.quotients();
    let mut digits: Vec<u64> = Vec::with_capacity(a.len());
    for i in 0..a.len() {
        // b_1 < a_1, and b_i = a_i only after a zero digit
        let top = if i == 0 || digits[i - 1] != 0 {
            a[i] - 1
        } else {
            a[i]
        };
        digits.push(rng.gen_range(0..=top));
    }
    digits
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_words(len: usize) -> impl Iterator<Item = Word> {
    (0u32..1 << len).map(move |bits| (0..len).map(|i| ((bits >> i) & 1) as u8).collect())
}

fn criterion_1(slopes: &[Slope]) -> Outcome {
    let mut checks = 0;
    for s in slopes {
        for m in covered(s) {
            let x = char_prefix(s, window_prefix_len(s, m).unwrap()).unwrap();
            let p = complexity(&x, m);
            ensure(p == m + 1, || format!("slope {s} m={m}: complexity {p}"))?;
            verify_window(&x, m).map_err(|e| format!("slope {s} m={m}: {e}"))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} (slope, m) pairs"))
}

fn criterion_2(slopes: &[Slope]) -> Outcome {
    let mut words = 0;
    for len in 0..=14 {
        for w in all_words(len) {
            let balanced = is_balanced(&w);
            ensure(balanced == balance_palindrome_witness(&w).is_none(), || {
                format!("{w}: balance and palindrome witness disagree")
            })?;
            if len <= 12 {
                ensure(balanced == is_balanced_by_definition(&w), || {
                    format!("{w}: definition disagrees")
                })?;
            }
            words += 1;
        }
    }
    for s in slopes {
        let x = char_prefix(s, certified_len(s).min(20_000)).unwrap();
        ensure(is_balanced(&x), || {
            format!("prefix of c_α for {s} is unbalanced")
        })?;
    }
    Ok(format!(
        "{words} words, {} characteristic prefixes",
        slopes.len()
    ))
}

fn criterion_3(slopes: &[Slope]) -> Outcome {
    let mut all: Vec<Slope> = slopes.to_vec();
    all.extend(edge_slopes());
    let mut checks = 0;
    let mut jumps = 0;
    for s in &all {
        let c = char_prefix(s, certified_len(s).min(20_000)).unwrap();
        for m in covered(s) {
            let r = repetition(&c, m).map_err(|e| format!("{s} m={m}: {e}"))?;
            let closed = repetition_closed_form(s, m).unwrap();
            ensure(r == closed, || {
                format!("{s} m={m}: r={r}, closed form {closed}")
            })?;
            if m <= 24 {
                let oracle =
                    repetition_by_definition(&c.prefix(window_prefix_len(s, m).unwrap()), m);
                ensure(oracle == Some(r), || {
                    format!("{s} m={m}: definition gives {oracle:?}")
                })?;
            }
            checks += 1;
            if m >= 2 {
                for shift in 0..6 {
                    let x = c.shift(shift);
                    let (Ok(rm), Ok(rp)) = (repetition(&x, m), repetition(&x, m - 1)) else {
                        return Err(format!("{s} m={m} shift {shift}: prefix too short"));
                    };
                    ensure((rm == m + 1) == (rm != rp), || {
                        format!("{s} m={m} shift {shift}: r(m)={rm}, r(m-1)={rp}")
                    })?;
                    jumps += 1;
                }
            }
        }
    }
    Ok(format!(
        "{checks} closed-form checks over {} slopes, {jumps} r(m)=m+1 equivalences",
        all.len()
    ))
}

fn criterion_4(slopes: &[Slope]) -> Outcome {
    let mut checked = BTreeSet::new();
    for s in slopes {
        let n = (1..=s.depth())
            .take_while(|&n| {
                let (q, p) = (s.q(n as isize).unwrap(), s.q(n as isize - 1).unwrap());
                q + p - 2 <= 5000
            })
            .last()
            .unwrap();
        for z in central_prefixes(s, n).unwrap() {
            let Ok((p, q)) = central_decompose(&z) else {
                continue;
            };
            if p.len() > q.len() || !checked.insert(z.clone()) {
                continue;
            }
            let r = repetition(&z, p.len() + 1).map_err(|e| format!("{z}: {e}"))?;
            ensure(r == p.len() + 2, || {
                format!("z={z}: r(z, |p|+1) = {r}, |p| = {}", p.len())
            })?;
        }
    }
    Ok(format!("{} central words", checked.len()))
}

fn criterion_5(slopes: &[Slope]) -> Outcome {
    let mut checks = 0;
    for s in slopes {
        for m in covered(s) {
            let x = char_prefix(s, window_prefix_len(s, m).unwrap()).unwrap();
            let g = build_graph(&x, m).map_err(|e| format!("{s} m={m}: {e}"))?;
            g.check_degrees().map_err(|e| format!("{s} m={m}: {e}"))?;
            ensure(
                g.vertices().len() == m + 1 && g.arrow_indices().len() == m + 2,
                || format!("{s} m={m}: counts"),
            )?;
            ensure(g.is_reversal_symmetric(), || {
                format!("{s} m={m}: not closed under reversal")
            })?;
            let d = decompose_cycles(&g, s).map_err(|e| format!("{s} m={m}: {e}"))?;
            let idx = classify_interval(s, m).unwrap();
            let qn = s.q(idx.n as isize).unwrap();
            let qp = s.q(idx.n as isize - 1).unwrap();
            let (rl, ol) = (d.referent.len(), d.other.len());
            ensure(rl == qn && ol == idx.l as usize * qn + qp, || {
                format!("{s} m={m}: cycle lengths {rl}, {ol} for {idx:?}")
            })?;
            ensure(rl.gcd(&ol) == 1, || {
                format!("{s} m={m}: lengths {rl}, {ol} not coprime")
            })?;
            ensure(rl + ol - d.common_path_len == m + 2, || {
                format!("{s} m={m}: shared path")
            })?;
            let n = idx.n as isize;
            ensure(
                d.referent_exit(&g) == t_first_letter(n - 1)
                    && d.other_exit(&g) == t_first_letter(n),
                || format!("{s} m={m}: arrow placement"),
            )?;
            checks += 1;
        }
    }
    Ok(format!("{checks} graphs"))
}

fn criterion_6(slopes: &[Slope]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let mut turns = 0;
    let mut words = 0;
    for s in slopes {
        let c = char_prefix(s, certified_len(s)).unwrap();
        let ms = covered(s);
        for &m in &ms {
            let idx = classify_interval(s, m).unwrap();
            let x = c.prefix(turns_prefix_len(s, m).unwrap());
            let t = turns_around(&x, m, s).map_err(|e| format!("{s} m={m}: {e}"))?;
            let want = s.a(idx.n + 1).unwrap() - idx.l;
            ensure(t.referent_turns as u64 == want, || {
                format!(
                    "{s} m={m} {idx:?}: {} turns, expected {want}",
                    t.referent_turns
                )
            })?;
            ensure(t.entered_other, || {
                format!("{s} m={m}: did not go around the other cycle")
            })?;
            turns += 1;
        }
        // the path of any Sturmian word of the slope lives in the same graph
        for &m in ms.iter().filter(|&&m| m <= 60) {
            let g = build_graph(&c.prefix(window_prefix_len(s, m).unwrap()), m).unwrap();
            let d = decompose_cycles(&g, s).unwrap();
            let limit = 2 * d.other.len();
            let mut samples: Vec<Word> = (0..8).map(|j| c.shift(j * 7 + 1)).collect();
            for _ in 0..8 {
                let iota =
                    make_intercept(s.clone(), random_digits(s, &mut rng), Tail::Unknown).unwrap();
                let len = (s.q(DEPTH as isize - 1).unwrap() - 1).min(4000);
                samples.push(word_from_intercept(&iota, len).unwrap());
            }
            for x in &samples {
                let run = longest_run_on(&g, &d.other, x).map_err(|e| format!("{s} m={m}: {e}"))?;
                ensure(run < limit, || {
                    format!("{s} m={m}: twice around the other cycle")
                })?;
                words += 1;
            }
        }
    }
    Ok(format!(
        "{turns} turn counts, {words} words scanned for repeated other-cycle rounds"
    ))
}

fn criterion_7(slopes: &[Slope]) -> Outcome {
    let mut values = 0u64;
    for s in slopes {
        for n in 1..=s.depth() {
            let q = s.q(n as isize).unwrap();
            if q > 10_000 {
                break;
            }
            for v in 0..q as u64 {
                let d =
                    encode(&BigUint::from(v), s, n).map_err(|e| format!("{s} n={n} {v}: {e}"))?;
                let back = decode(&d).map_err(|e| format!("{s} n={n} {v}: {e}"))?;
                ensure(back == BigUint::from(v), || {
                    format!("{s} n={n}: {v} decodes to {back}")
                })?;
                values += 1;
            }
        }
    }
    // condition sets: every quotient vector in [1,4]^n for n <= 4, and the
    // random slopes up to n = 8, over digit boxes b_i <= a_i + 1
    let mut vectors = 0u64;
    let mut slope_sets: Vec<Slope> = Vec::new();
    for n in 1..=4u32 {
        for code in 0..4u64.pow(n) {
            let q: Vec<u64> = (0..n).map(|i| (code / 4u64.pow(i)) % 4 + 1).collect();
            slope_sets.push(Slope::new(q).unwrap());
        }
    }
    for s in slopes {
        for n in 5..=8 {
            slope_sets.push(Slope::new(s.quotients()[..n].to_vec()).unwrap());
        }
    }
    for s in &slope_sets {
        let a = s.quotients();
        let n = a.len();
        let mut b = vec![0u64; n];
        loop {
            let d = OstrowskiDigits::new(s.clone(), b.clone());
            let (x, y) = (
                digit_conditions(&d).is_ok(),
                partial_sum_conditions(&d).is_ok(),
            );
            ensure(x == y, || {
                format!("{s} digits {b:?}: condition sets disagree")
            })?;
            vectors += 1;
            let mut i = 0;
            while i < n && b[i] == a[i] + 1 {
                b[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            b[i] += 1;
        }
    }
    Ok(format!("{values} round trips, {vectors} digit vectors"))
}

fn criterion_8(slopes: &[Slope]) -> Outcome {
    let mut values = 0;
    for s in slopes {
        let c = char_prefix(s, certified_len(s)).unwrap();
        for n in 1..=s.depth() {
            let q = s.q(n as isize).unwrap();
            if q > 500 || 2 * q > c.len() {
                break;
            }
            for j in 0..q {
                let x = c.slice(j, q - 1);
                let iota =
                    intercept_from_word(s, &x, n).map_err(|e| format!("{s} n={n} j={j}: {e}"))?;
                ensure(iota.rho(n).unwrap() == j, || {
                    format!("{s} n={n} j={j}: rho_n = {:?}", iota.rho(n))
                })?;
                if q <= 60 {
                    let oracle = rho_by_min_scan(s, &x, n, &c.prefix(2 * q - 2));
                    ensure(oracle.as_deref() == Some(iota.rho_sequence()), || {
                        format!("{s} n={n} j={j}: min scan gives {oracle:?}")
                    })?;
                }
                let w = word_from_intercept(&iota, q - 1)
                    .map_err(|e| format!("{s} n={n} j={j}: {e}"))?;
                ensure(w == x, || format!("{s} n={n} j={j}: word round trip"))?;
                values += 1;
            }
        }
    }
    Ok(format!("{values} shifts recovered"))
}

fn criterion_9(slopes: &[Slope]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let mut exact = 0;
    let mut bounds = 0;
    let mut prefix_checks = 0;
    for s in slopes {
        let c = char_prefix(s, certified_len(s)).unwrap();
        for _ in 0..200 {
            let iota =
                make_intercept(s.clone(), random_digits(s, &mut rng), Tail::Unknown).unwrap();
            let mut prev: Option<usize> = None;
            for n in 1..=8 {
                let lam = lambda_n(&iota, n).unwrap();
                let (rn, rn1) = (iota.rho(n).unwrap(), iota.rho(n + 1).unwrap());
                let qn = s.q(n as isize).unwrap();
                ensure(lam + 1 >= qn, || {
                    format!("{s}: lambda_{n} = {lam} < q_{n} - 1")
                })?;
                let span = lam + 1;
                let agree = common_prefix_by_letters(&c.slice(rn, span), &c.slice(rn1, span));
                if iota.digit(n + 1).unwrap() != 0 {
                    ensure(agree == lam, || {
                        format!("{s} n={n}: agree {agree}, lambda {lam}")
                    })?;
                    exact += 1;
                } else {
                    ensure(agree >= lam, || {
                        format!("{s} n={n}: agree {agree} < lambda {lam}")
                    })?;
                    bounds += 1;
                }
                if let Some(p) = prev {
                    let a = s.a(n + 1).unwrap();
                    let b = iota.digit(n + 1).unwrap();
                    let q = s.q(n as isize).unwrap();
                    ensure(lam >= p && lam - p == (a - b) as usize * q, || {
                        format!("{s} n={n}: lambda step {p} -> {lam}")
                    })?;
                }
                prev = Some(lam);
            }
            // common prefix of T^ρ(c_α) and T^{ρ_n}(c_α)
            for n in 1..=6 {
                match common_prefix_vs_rho_n(&iota, n) {
                    Ok(CommonPrefix::Length(len)) => {
                        let Ok(x) = word_from_intercept(&iota, len + 1) else {
                            continue;
                        };
                        let rn = iota.rho(n).unwrap();
                        let agree = common_prefix_by_letters(&x, &c.slice(rn, len + 1));
                        ensure(agree == len, || {
                            format!("{s} n={n}: common prefix {agree}, expected {len}")
                        })?;
                        prefix_checks += 1;
                    }
                    Ok(CommonPrefix::Equal { .. }) => {
                        return Err("Equal reported for an unknown tail".into())
                    }
                    Err(_) => {}
                }
            }
        }
    }
    Ok(format!(
        "{exact} exact, {bounds} lower-bound lambda checks, {prefix_checks} common-prefix checks"
    ))
}

fn criterion_10(slopes: &[Slope]) -> Outcome {
    for s in &slopes[..10] {
        let a = s.quotients();
        let c = char_prefix(s, certified_len(s)).unwrap();
        let zero = Word::from_letters([0]).concat(&c);
        let one = Word::from_letters([1]).concat(&c);
        let depth = 8;
        // Σ a_{2i+2} q_{2i+1} and (a_1 - 1) + Σ a_{2i+1} q_{2i}, truncated to q_k
        let closed = |k: usize, first_one: bool| -> usize {
            (0..k)
                .map(|i| {
                    let q = s.q(i as isize).unwrap();
                    let b = match (first_one, i) {
                        (true, 0) => a[0] - 1,
                        (true, _) if i % 2 == 0 => a[i],
                        (false, _) if i % 2 == 1 => a[i],
                        _ => 0,
                    };
                    b as usize * q
                })
                .sum()
        };
        for (x, first_one, family) in [
            (
                &zero,
                false,
                FormalIntercept::zero_prefixed(s.clone()).unwrap(),
            ),
            (
                &one,
                true,
                FormalIntercept::one_prefixed(s.clone()).unwrap(),
            ),
        ] {
            let iota = intercept_from_word(s, x, depth).map_err(|e| format!("{s}: {e}"))?;
            for k in 0..=depth {
                let want = closed(k, first_one);
                ensure(iota.rho(k).unwrap() == want, || {
                    format!(
                        "{s} {}c: rho_{k} = {}, closed form {want}",
                        u8::from(first_one),
                        iota.rho(k).unwrap()
                    )
                })?;
                ensure(family.rho(k).unwrap() == want, || {
                    format!("{s}: family rho_{k}")
                })?;
            }
        }
    }
    Ok("10 slopes, both families to depth 8".into())
}

fn criterion_11() -> Outcome {
    let max = 16;
    let by_standard = central_from_standard(max);
    let by_induction = central_by_induction(max);
    let by_prefixes = central_from_prefixes(max);
    let mut words = 0;
    let mut central = 0;
    for len in 0..=max {
        for w in all_words(len) {
            let c = is_central(&w);
            let others = [
                by_standard.contains(&w),
                by_induction.contains(&w),
                by_prefixes.contains(&w),
            ];
            ensure(others.iter().all(|&o| o == c), || {
                format!(
                    "{w}: palindrome test says {c}, standard/induction/prefix sets say {others:?}"
                )
            })?;
            if c {
                central += 1;
                let power = w.count_ones() == 0 || w.count_ones() == w.len();
                let splits = palindromic_splits(&w);
                if !power {
                    ensure(splits.len() == 1, || {
                        format!("{w}: {} decompositions", splits.len())
                    })?;
                    let (p, _) = central_decompose(&w).unwrap();
                    ensure(p.len() == splits[0], || {
                        format!("{w}: decomposition mismatch")
                    })?;
                }
            }
            words += 1;
        }
    }
    Ok(format!("{words} words, {central} central"))
}

fn criterion_12() -> Outcome {
    common::check_goldens().map(|n| format!("{n} golden transcripts, each run twice"))
}

fn main() {
    let slopes = random_slopes();
    let criteria: Vec<Criterion<'_>> = vec![
        ("Sturmian complexity", Box::new(|| criterion_1(&slopes))),
        ("balance equivalence", Box::new(|| criterion_2(&slopes))),
        ("repetition closed form", Box::new(|| criterion_3(&slopes))),
        ("central word repetition", Box::new(|| criterion_4(&slopes))),
        ("Rauzy structure", Box::new(|| criterion_5(&slopes))),
        ("turn counts", Box::new(|| criterion_6(&slopes))),
        ("Ostrowski bijection", Box::new(|| criterion_7(&slopes))),
        ("intercept bijection", Box::new(|| criterion_8(&slopes))),
        ("lambda law", Box::new(|| criterion_9(&slopes))),
        ("closed-form intercepts", Box::new(|| criterion_10(&slopes))),
        ("central word equivalence", Box::new(criterion_11)),
        ("CLI determinism", Box::new(criterion_12)),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>())));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
