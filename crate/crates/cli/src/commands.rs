use std::fmt::Write as _;
use std::fs;

use num_bigint::BigUint;
use serde::Serialize;
use sturmian::{
    balance_palindrome_witness, bugeaud_kim_r0, build_graph, central_decompose, char_prefix,
    classify_interval, common_prefix_vs_rho_n, complexity, decode, decompose_cycles, encode,
    export_dot, intercept_from_word, is_central, lambda_n, make_intercept, repetition,
    repetition_closed_form, turns_around, turns_prefix_len, unbalanced_pair, window_prefix_len,
    CommonPrefix, Error, FormalIntercept, OstrowskiDigits, Slope, Tail, Word,
};

use crate::args::{
    CentralAction, Command, Family, Format, InterceptAction, InterceptInput, OstrowskiAction,
    WordInput,
};
use crate::CliError;

/// Longest word accepted through `--word`.
pub const MAX_INLINE_WORD: usize = 4096;

/// Output of one command in every format it supports.
pub struct Rendered {
    pub text: String,
    pub json: String,
    pub dot: Option<String>,
}

impl Rendered {
    pub fn select(self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => Ok(self.text),
            Format::Json => Ok(self.json),
            Format::Dot => self
                .dot
                .ok_or_else(|| CliError::usage("--format dot is only available for rauzy")),
        }
    }
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema: u32,
    #[serde(flatten)]
    body: T,
}

fn json<T: Serialize>(body: T) -> String {
    let mut s =
        serde_json::to_string_pretty(&Envelope { schema: 1, body }).expect("plain data serializes");
    s.push('\n');
    s
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn require_slope(slope: Option<&Slope>) -> Result<&Slope, CliError> {
    slope.ok_or_else(|| CliError::usage("this command needs --slope"))
}

fn parse_word(text: &str, origin: &str) -> Result<Word, CliError> {
    text.parse::<Word>()
        .map_err(|e| CliError::usage_code(e.code(), format!("{origin}: {e}")))
}

fn read_word(input: &WordInput, slope: Option<&Slope>) -> Result<Word, CliError> {
    if let Some(w) = &input.word {
        if w.len() > MAX_INLINE_WORD {
            return Err(CliError::usage(format!(
                "--word takes at most {MAX_INLINE_WORD} letters, use --word-file"
            )));
        }
        return parse_word(w, "--word");
    }
    if let Some(path) = &input.word_file {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::usage_code("IO", format!("{}: {e}", path.display())))?;
        return parse_word(text.trim(), &path.display().to_string());
    }
    match (input.length, slope) {
        (Some(len), Some(s)) => Ok(char_prefix(s, len)?),
        (Some(_), None) => Err(CliError::usage("--length needs --slope")),
        _ => Err(CliError::usage(
            "give --word, --word-file, or --slope with --length",
        )),
    }
}

fn parse_digits(text: &str) -> Result<Vec<u64>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|d| {
            d.trim()
                .parse::<u64>()
                .map_err(|_| CliError::usage(format!("digit {d:?} is not a nonnegative integer")))
        })
        .collect()
}

pub fn execute(command: &Command, slope: Option<&Slope>) -> Result<Rendered, CliError> {
    match command {
        Command::Cword { length } => cword(require_slope(slope)?, *length),
        Command::Complexity { input, m } => complexity_table(&read_word(input, slope)?, *m),
        Command::Balance { input } => balance(&read_word(input, slope)?),
        Command::Repetition { input, m } => repetition_cmd(input, slope, *m),
        Command::Rauzy { m, dot, json: _ } => {
            let rendered = rauzy(require_slope(slope)?, *m)?;
            if let Some(path) = dot {
                let text = rendered.dot.as_deref().expect("rauzy renders DOT");
                fs::write(path, text)
                    .map_err(|e| CliError::usage_code("IO", format!("{}: {e}", path.display())))?;
            }
            Ok(rendered)
        }
        Command::Central { action } => match action {
            CentralAction::Check { word } => central(&parse_word(word, "word")?, false),
            CentralAction::Decompose { word } => central(&parse_word(word, "word")?, true),
        },
        Command::Ostrowski { action } => match action {
            OstrowskiAction::Encode { value, depth } => {
                ostrowski_encode(require_slope(slope)?, value, *depth)
            }
            OstrowskiAction::Decode { digits } => ostrowski_decode(require_slope(slope)?, digits),
        },
        Command::Intercept { action } => match action {
            InterceptAction::Recover { input, depth } => {
                let s = require_slope(slope)?;
                intercept_recover(s, &read_word(input, slope)?, *depth)
            }
            InterceptAction::Word { intercept, length } => {
                let iota = read_intercept(require_slope(slope)?, intercept)?;
                intercept_word(&iota, *length)
            }
            InterceptAction::Lambda { intercept, n } => {
                let iota = read_intercept(require_slope(slope)?, intercept)?;
                intercept_lambda(&iota, *n)
            }
        },
    }
}

#[derive(Serialize)]
struct CwordOut {
    slope: String,
    length: usize,
    word: String,
}

fn cword(s: &Slope, length: usize) -> Result<Rendered, CliError> {
    let w = char_prefix(s, length)?.to_string();
    Ok(Rendered {
        text: format!("{w}\n"),
        json: json(CwordOut {
            slope: s.to_string(),
            length,
            word: w,
        }),
        dot: None,
    })
}

#[derive(Serialize)]
struct ComplexityRow {
    m: usize,
    p: usize,
}

#[derive(Serialize)]
struct ComplexityOut {
    length: usize,
    complexity: Vec<ComplexityRow>,
}

fn complexity_table(x: &Word, max_m: usize) -> Result<Rendered, CliError> {
    if max_m == 0 {
        return Err(CliError::usage("--m must be positive"));
    }
    let rows: Vec<ComplexityRow> = (1..=max_m)
        .map(|m| ComplexityRow {
            m,
            p: complexity(x, m),
        })
        .collect();
    let mut text = String::from("m\tp(m)\n");
    for r in &rows {
        let _ = writeln!(text, "{}\t{}", r.m, r.p);
    }
    Ok(Rendered {
        text,
        json: json(ComplexityOut {
            length: x.len(),
            complexity: rows,
        }),
        dot: None,
    })
}

#[derive(Serialize)]
struct BalanceOut {
    length: usize,
    balanced: bool,
    pair: Option<[String; 2]>,
    palindrome: Option<String>,
}

fn balance(x: &Word) -> Result<Rendered, CliError> {
    let pair = unbalanced_pair(x).map(|(u, v)| [u.to_string(), v.to_string()]);
    let palindrome = balance_palindrome_witness(x).map(|p| p.to_string());
    let text = match (&pair, &palindrome) {
        (Some([u, v]), Some(p)) => {
            format!("unbalanced\npair {u} {v}\npalindrome \"{p}\" (0{p}0 and 1{p}1 are factors)\n")
        }
        _ => "balanced\n".to_string(),
    };
    Ok(Rendered {
        text,
        json: json(BalanceOut {
            length: x.len(),
            balanced: pair.is_none(),
            pair,
            palindrome,
        }),
        dot: None,
    })
}

#[derive(Serialize)]
struct Interval {
    n: usize,
    l: u64,
}

#[derive(Serialize)]
struct RepetitionOut {
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    interval: Option<Interval>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<usize>,
    r: usize,
    r0: usize,
}

fn repetition_cmd(
    input: &WordInput,
    slope: Option<&Slope>,
    m: usize,
) -> Result<Rendered, CliError> {
    if m == 0 {
        return Err(CliError::usage("--m must be positive"));
    }
    let given = input.word.is_some() || input.word_file.is_some() || input.length.is_some();
    let (x, closed) = match (given, slope) {
        (true, _) => (read_word(input, slope)?, None),
        (false, Some(s)) => {
            let idx = classify_interval(s, m)?;
            let q = repetition_closed_form(s, m)?;
            (char_prefix(s, window_prefix_len(s, m)?)?, Some((idx, q)))
        }
        (false, None) => return Err(CliError::usage("give a word or --slope")),
    };
    let r = repetition(&x, m)?;
    let r0 = bugeaud_kim_r0(&x, m)?;
    let mut text = format!("m {m}\n");
    if let Some((idx, q)) = closed {
        let _ = writeln!(text, "interval n={} l={}", idx.n, idx.l);
        let _ = writeln!(text, "closed form q_{} = {q}", idx.n);
    }
    let _ = writeln!(text, "r {r}\nr0 {r0}");
    let out = RepetitionOut {
        m,
        interval: closed.map(|(idx, _)| Interval { n: idx.n, l: idx.l }),
        closed_form: closed.map(|(_, q)| q),
        r,
        r0,
    };
    Ok(Rendered {
        text,
        json: json(out),
        dot: None,
    })
}

#[derive(Serialize)]
struct RauzyOut {
    m: usize,
    interval: Interval,
    vertices: Vec<String>,
    arrows: Vec<[String; 2]>,
    left_special: String,
    right_special: String,
    referent_cycle: Vec<String>,
    other_cycle: Vec<String>,
    cycle_lengths: [usize; 2],
    common_path_len: usize,
    turns: usize,
    entered_other: bool,
}

fn rauzy(s: &Slope, m: usize) -> Result<Rendered, CliError> {
    if m == 0 {
        return Err(CliError::usage("--m must be positive"));
    }
    let x = char_prefix(s, turns_prefix_len(s, m)?)?;
    let g = build_graph(&x, m)?;
    let d = decompose_cycles(&g, s)?;
    let turns = turns_around(&x, m, s)?;
    let name = |i: &usize| g.vertices()[*i].to_string();
    let out = RauzyOut {
        m,
        interval: Interval {
            n: d.interval.n,
            l: d.interval.l,
        },
        vertices: g.vertices().iter().map(Word::to_string).collect(),
        arrows: g
            .arrows()
            .map(|(a, b)| [a.to_string(), b.to_string()])
            .collect(),
        left_special: g.left_special().to_string(),
        right_special: g.right_special().to_string(),
        referent_cycle: d.referent.vertex_indices().iter().map(name).collect(),
        other_cycle: d.other.vertex_indices().iter().map(name).collect(),
        cycle_lengths: [d.referent.len(), d.other.len()],
        common_path_len: d.common_path_len,
        turns: turns.referent_turns,
        entered_other: turns.entered_other,
    };
    let mut text = String::new();
    let _ = writeln!(text, "m {m}");
    let _ = writeln!(text, "interval n={} l={}", d.interval.n, d.interval.l);
    let _ = writeln!(
        text,
        "vertices {}: {}",
        out.vertices.len(),
        out.vertices.join(" ")
    );
    let arrows: Vec<String> = out
        .arrows
        .iter()
        .map(|[a, b]| format!("{a}->{b}"))
        .collect();
    let _ = writeln!(text, "arrows {}: {}", arrows.len(), arrows.join(" "));
    let _ = writeln!(text, "left special {}", out.left_special);
    let _ = writeln!(text, "right special {}", out.right_special);
    let _ = writeln!(
        text,
        "referent cycle {}: {}",
        d.referent.len(),
        out.referent_cycle.join(" ")
    );
    let _ = writeln!(
        text,
        "other cycle {}: {}",
        d.other.len(),
        out.other_cycle.join(" ")
    );
    let _ = writeln!(text, "common path {}", d.common_path_len);
    let _ = writeln!(text, "turns {}", turns.referent_turns);
    let _ = writeln!(text, "entered other {}", turns.entered_other);
    let dot = export_dot(&g, &d);
    Ok(Rendered {
        text,
        json: json(out),
        dot: Some(dot),
    })
}

#[derive(Serialize)]
struct CentralOut {
    word: String,
    central: bool,
    p: Option<String>,
    q: Option<String>,
}

fn central(w: &Word, decompose: bool) -> Result<Rendered, CliError> {
    let central = is_central(w);
    let split = central_decompose(w);
    if decompose {
        split.clone()?;
    }
    let (p, q) = match split {
        Ok((p, q)) => (Some(p.to_string()), Some(q.to_string())),
        Err(_) => (None, None),
    };
    let text = match (&p, &q) {
        (Some(p), Some(q)) if decompose => format!("p \"{p}\"\nq \"{q}\"\n"),
        _ if central => "central\n".to_string(),
        _ => "not central\n".to_string(),
    };
    Ok(Rendered {
        text,
        json: json(CentralOut {
            word: w.to_string(),
            central,
            p,
            q,
        }),
        dot: None,
    })
}

#[derive(Serialize)]
struct OstrowskiOut {
    value: String,
    digits: Vec<u64>,
}

fn ostrowski_encode(s: &Slope, value: &str, depth: usize) -> Result<Rendered, CliError> {
    let n: BigUint = value
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("{value:?} is not a nonnegative integer")))?;
    let d = encode(&n, s, depth)?;
    let digits = d.digits().to_vec();
    Ok(Rendered {
        text: format!("{}\n", join(&digits)),
        json: json(OstrowskiOut {
            value: n.to_string(),
            digits,
        }),
        dot: None,
    })
}

fn ostrowski_decode(s: &Slope, text: &str) -> Result<Rendered, CliError> {
    let digits = parse_digits(text)?;
    let n = decode(&OstrowskiDigits::new(s.clone(), digits.clone()))?;
    Ok(Rendered {
        text: format!("{n}\n"),
        json: json(OstrowskiOut {
            value: n.to_string(),
            digits,
        }),
        dot: None,
    })
}

fn read_intercept(s: &Slope, input: &InterceptInput) -> Result<FormalIntercept, CliError> {
    let iota = match (&input.digits, input.family) {
        (Some(d), _) => make_intercept(s.clone(), parse_digits(d)?, Tail::Zeros)?,
        (None, Some(Family::Zero)) => FormalIntercept::zero_prefixed(s.clone())?,
        (None, Some(Family::One)) => FormalIntercept::one_prefixed(s.clone())?,
        (None, None) => return Err(CliError::usage("give --digits or --family")),
    };
    Ok(iota)
}

/// `λ_n` for every `n >= 1` whose inputs are known.
fn lambdas(iota: &FormalIntercept) -> Vec<usize> {
    (1..).map_while(|n| lambda_n(iota, n).ok()).collect()
}

#[derive(Serialize)]
struct InterceptOut {
    rho: Vec<usize>,
    digits: Vec<u64>,
    lambda: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    common_prefix: Option<CommonPrefixOut>,
}

#[derive(Serialize)]
struct CommonPrefixOut {
    n: usize,
    equal: bool,
    length: usize,
}

fn intercept_text(out: &InterceptOut) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "rho {}", join(&out.rho));
    let _ = writeln!(text, "digits {}", join(&out.digits));
    let _ = writeln!(text, "lambda {}", join(&out.lambda));
    text
}

fn intercept_out(iota: &FormalIntercept) -> InterceptOut {
    InterceptOut {
        rho: iota.rho_sequence().to_vec(),
        digits: iota.digits().to_vec(),
        lambda: lambdas(iota),
        word: None,
        common_prefix: None,
    }
}

fn intercept_recover(s: &Slope, x: &Word, depth: usize) -> Result<Rendered, CliError> {
    let iota = intercept_from_word(s, x, depth)?;
    let out = intercept_out(&iota);
    Ok(Rendered {
        text: intercept_text(&out),
        json: json(out),
        dot: None,
    })
}

fn intercept_word(iota: &FormalIntercept, length: usize) -> Result<Rendered, CliError> {
    let w = sturmian::word_from_intercept(iota, length)?.to_string();
    let mut out = intercept_out(iota);
    out.word = Some(w.clone());
    Ok(Rendered {
        text: format!("{w}\n"),
        json: json(out),
        dot: None,
    })
}

fn intercept_lambda(iota: &FormalIntercept, n: Option<usize>) -> Result<Rendered, CliError> {
    let mut out = intercept_out(iota);
    let mut text = intercept_text(&out);
    if let Some(n) = n {
        if n == 0 {
            return Err(CliError::usage("--n must be positive"));
        }
        let cp = match common_prefix_vs_rho_n(iota, n)? {
            CommonPrefix::Length(length) => {
                let _ = writeln!(text, "common prefix with T^rho_{n} {length}");
                CommonPrefixOut {
                    n,
                    equal: false,
                    length,
                }
            }
            CommonPrefix::Equal { certified } => {
                let _ = writeln!(
                    text,
                    "common prefix with T^rho_{n} equal (certified {certified})"
                );
                CommonPrefixOut {
                    n,
                    equal: true,
                    length: certified,
                }
            }
        };
        out.common_prefix = Some(cp);
    }
    Ok(Rendered {
        text,
        json: json(out),
        dot: None,
    })
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let usage = matches!(e, Error::InvalidSlope(_) | Error::InvalidWord(_));
        CliError {
            code: e.code(),
            message: e.to_string(),
            usage,
        }
    }
}
