//! Rauzy graphs of Sturmian windows.
//!
//! The Rauzy graph of degree `m` has the length-`m` factors as vertices and
//! an arrow `s -> t` whenever some length-`(m + 1)` factor has prefix `s` and
//! suffix `t`. For a Sturmian word it has `m + 1` vertices and `m + 2`
//! arrows: the left special factor `L_m` is the only vertex with two
//! in-arrows, the right special factor `R_m` the only one with two
//! out-arrows, and the graph is the union of two cycles through `R_m` that
//! share the path `L_m -> ... -> R_m`.
//!
//! For `m ∈ I_n^l` one cycle, the referent cycle, has length `q_n` and the
//! other has length `l q_n + q_{n-1}`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::continued_fraction::Slope;
use crate::error::{Error, Result};
use crate::factors::{factors, left_special, right_special, verify_window};
use crate::repetition::{classify_interval, repetition, IntervalIndex};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RauzyGraph {
    degree: usize,
    /// Sorted lexicographically.
    vertices: Vec<Word>,
    /// Index pairs into `vertices`, sorted.
    arrows: Vec<(usize, usize)>,
    left_special: usize,
    right_special: usize,
}

impl RauzyGraph {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn arrow_indices(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn arrows(&self) -> impl Iterator<Item = (&Word, &Word)> + '_ {
        self.arrows
            .iter()
            .map(|&(s, t)| (&self.vertices[s], &self.vertices[t]))
    }

    pub fn left_special(&self) -> &Word {
        &self.vertices[self.left_special]
    }

    pub fn right_special(&self) -> &Word {
        &self.vertices[self.right_special]
    }

    pub fn index_of(&self, v: &Word) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn has_arrow(&self, s: &Word, t: &Word) -> bool {
        match (self.index_of(s), self.index_of(t)) {
            (Some(s), Some(t)) => self.arrows.binary_search(&(s, t)).is_ok(),
            _ => false,
        }
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.1 == v).count()
    }

    fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.arrows.partition_point(|a| a.0 < v);
        self.arrows[start..]
            .iter()
            .take_while(move |a| a.0 == v)
            .map(|a| a.1)
    }

    /// `s -> t` is an arrow iff `reversal(t) -> reversal(s)` is.
    pub fn is_reversal_symmetric(&self) -> bool {
        self.arrows()
            .all(|(s, t)| self.has_arrow(&t.reversed(), &s.reversed()))
    }

    /// Checks the vertex count, arrow count and degrees of a Sturmian window.
    pub fn check_degrees(&self) -> Result<()> {
        let m = self.degree;
        let bad = |what: String| Err(Error::MalformedGraph(what));
        if self.vertices.len() != m + 1 {
            return bad(format!(
                "{} vertices, expected {}",
                self.vertices.len(),
                m + 1
            ));
        }
        if self.arrows.len() != m + 2 {
            return bad(format!("{} arrows, expected {}", self.arrows.len(), m + 2));
        }
        for v in 0..self.vertices.len() {
            let want_in = if v == self.left_special { 2 } else { 1 };
            let want_out = if v == self.right_special { 2 } else { 1 };
            if self.in_degree(v) != want_in || self.out_degree(v) != want_out {
                return bad(format!("vertex {} has wrong degree", self.vertices[v]));
            }
        }
        Ok(())
    }

    /// Vertex indices visited by `x`: the `i`-th entry is the index of
    /// `x[i..i+m]`.
    pub fn path_of(&self, x: &Word) -> Result<Vec<usize>> {
        let m = self.degree;
        if x.len() < m {
            return Ok(Vec::new());
        }
        let lookup: HashMap<&Word, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        (0..=x.len() - m)
            .map(|i| {
                let w = x.slice(i, m);
                lookup.get(&w).copied().ok_or_else(|| {
                    Error::MalformedGraph(format!("{w} at position {i} is not a vertex"))
                })
            })
            .collect()
    }
}

/// The Rauzy graph of degree `m` of a verified Sturmian window of `x`.
pub fn build_graph(x: &Word, m: usize) -> Result<RauzyGraph> {
    assert!(m >= 1, "Rauzy graphs are built for m >= 1");
    verify_window(x, m)?;
    let vertices: Vec<Word> = factors(x, m).into_iter().collect();
    let index = |w: &Word| {
        vertices
            .binary_search(w)
            .expect("factor of a factor is a factor")
    };
    let mut arrows: Vec<(usize, usize)> = factors(x, m + 1)
        .iter()
        .map(|f| (index(&f.prefix(m)), index(&f.shift(1))))
        .collect();
    arrows.sort_unstable();
    let left = left_special(x, m)?.ok_or_else(|| Error::insufficient("no left special factor"))?;
    let right =
        right_special(x, m)?.ok_or_else(|| Error::insufficient("no right special factor"))?;
    Ok(RauzyGraph {
        degree: m,
        left_special: index(&left),
        right_special: index(&right),
        vertices,
        arrows,
    })
}

/// A cycle through `R_m` as vertex indices, starting at `R_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    vertices: Vec<usize>,
    /// `next[v]` is the successor of `v` on the cycle.
    next: HashMap<usize, usize>,
}

impl Cycle {
    fn new(vertices: Vec<usize>) -> Self {
        let k = vertices.len();
        let next = (0..k)
            .map(|i| (vertices[i], vertices[(i + 1) % k]))
            .collect();
        Cycle { vertices, next }
    }

    /// Number of arrows, which is also the number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains_arrow(&self, s: usize, t: usize) -> bool {
        self.next.get(&s) == Some(&t)
    }

    /// Whether `path[start..=start + len()]` goes once around the cycle.
    fn traversed_at(&self, path: &[usize], start: usize) -> bool {
        (start..start + self.len()).all(|i| self.contains_arrow(path[i], path[i + 1]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub referent: Cycle,
    pub other: Cycle,
    pub interval: IntervalIndex,
    /// Arrows on the shared path `L_m -> ... -> R_m`.
    pub common_path_len: usize,
}

impl CycleDecomposition {
    /// The letter appended by the arrow leaving `R_m` along `cycle`.
    fn exit_letter(g: &RauzyGraph, cycle: &Cycle) -> u8 {
        let next = cycle.vertices[1 % cycle.len()];
        g.vertices[next].last().expect("vertices are nonempty")
    }

    /// Letter added by the arrow out of `R_m` on the referent cycle.
    pub fn referent_exit(&self, g: &RauzyGraph) -> u8 {
        Self::exit_letter(g, &self.referent)
    }

    /// Letter added by the arrow out of `R_m` on the other cycle.
    pub fn other_exit(&self, g: &RauzyGraph) -> u8 {
        Self::exit_letter(g, &self.other)
    }
}

/// First letter of the suffix `t_k ∈ {01, 10}` that ends `s_k`: `1` for even
/// `k`, `0` for odd `k`.
pub fn t_first_letter(k: isize) -> u8 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        0
    }
}

/// Splits a verified Sturmian graph into its two cycles through `R_m` and
/// identifies the referent one by its length `q_n`.
pub fn decompose_cycles(g: &RauzyGraph, s: &Slope) -> Result<CycleDecomposition> {
    g.check_degrees()?;
    let interval = classify_interval(s, g.degree)?;
    let qn = s.q(interval.n as isize)?;
    let qp = s.q(interval.n as isize - 1)?;
    let other_len = interval.l as usize * qn + qp;

    let r = g.right_special;
    let mut cycles = g.successors(r).map(|first| {
        let mut vs = vec![r];
        let mut v = first;
        while v != r {
            vs.push(v);
            v = g.successors(v).next().expect("out-degree checked");
        }
        Cycle::new(vs)
    });
    let (c1, c2) = (cycles.next().unwrap(), cycles.next().unwrap());
    let (referent, other) = match (c1.len() == qn, c2.len() == qn) {
        (true, false) => (c1, c2),
        (false, true) => (c2, c1),
        _ => {
            return Err(Error::MalformedGraph(format!(
                "cycle lengths {} and {}, expected one of length q_{} = {qn}",
                c1.len(),
                c2.len(),
                interval.n
            )))
        }
    };
    if other.len() != other_len {
        return Err(Error::MalformedGraph(format!(
            "other cycle has length {}, expected {other_len}",
            other.len()
        )));
    }

    let mut common_path_len = 0;
    let mut v = g.left_special;
    while v != r {
        v = g.successors(v).next().expect("out-degree checked");
        common_path_len += 1;
    }

    Ok(CycleDecomposition {
        referent,
        other,
        interval,
        common_path_len,
    })
}

/// Number of consecutive full traversals of `cycle` made by the path from
/// position `start`, and whether the path was long enough to see the
/// traversal that fails.
fn count_traversals(path: &[usize], cycle: &Cycle, start: usize) -> (usize, bool) {
    let k = cycle.len();
    let mut d = 0;
    loop {
        let from = start + d * k;
        if from + k >= path.len() {
            return (d, false);
        }
        if !cycle.traversed_at(path, from) {
            return (d, true);
        }
        d += 1;
    }
}

/// How many times in a row `x` goes around `cycle` starting from its first
/// vertex: the path of `x` follows the cycle's arrows for `d · |cycle|`
/// steps and no further full round.
pub fn turns_around_cycle(g: &RauzyGraph, cycle: &Cycle, x: &Word) -> Result<usize> {
    let path = g.path_of(x)?;
    match count_traversals(&path, cycle, 0) {
        (d, true) => Ok(d),
        (d, false) => Err(Error::insufficient(format!(
            "word ends during round {} of a cycle of length {}",
            d + 1,
            cycle.len()
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Turns {
    pub referent_turns: usize,
    /// Whether, after those turns, the word goes once around the other cycle.
    pub entered_other: bool,
}

/// Turns of `x` around a cycle of length `k` at degree `m`, read off the
/// repetition function: the largest `d` with `r(T^{i·k}(x), m) = k` for every
/// `i < d`.
pub fn turns_by_repetition(x: &Word, m: usize, k: usize) -> Result<usize> {
    let mut d = 0;
    while d * k < x.len() && repetition(&x.shift(d * k), m)? == k {
        d += 1;
    }
    Ok(d)
}

/// Turns of `x` around the referent cycle of its degree-`m` Rauzy graph.
/// The count comes from the repetition function; the path along the arrows
/// must agree with it and then go once around the other cycle.
pub fn turns_around(x: &Word, m: usize, s: &Slope) -> Result<Turns> {
    let g = build_graph(x, m)?;
    let d = decompose_cycles(&g, s)?;
    let referent_turns = turns_by_repetition(x, m, d.referent.len())?;
    let path = g.path_of(x)?;
    let (traced, seen) = count_traversals(&path, &d.referent, 0);
    if !seen {
        return Err(Error::insufficient(format!(
            "word ends during round {} around the referent cycle",
            traced + 1
        )));
    }
    if traced != referent_turns {
        return Err(Error::MalformedGraph(format!(
            "path makes {traced} rounds of the referent cycle but the repetition function gives {referent_turns}"
        )));
    }
    let after = referent_turns * d.referent.len();
    if after + d.other.len() >= path.len() {
        return Err(Error::insufficient(
            "word ends before leaving the referent cycle",
        ));
    }
    let entered_other = d.other.traversed_at(&path, after);
    Ok(Turns {
        referent_turns,
        entered_other,
    })
}

/// Length of a prefix of `c_α` long enough for [`turns_around`] at degree
/// `m`: every factor of length `m + 1` has appeared and the failed round
/// after the last turn, as well as the round on the other cycle, fits.
pub fn turns_prefix_len(s: &Slope, m: usize) -> Result<usize> {
    let IntervalIndex { n, l } = classify_interval(s, m)?;
    let qn = s.q(n as isize)?;
    let rounds = (s.a(n + 1)? - l + 1) as usize;
    let next = s.q(n as isize + 1)?;
    Ok(next.max(rounds * qn) + m + 1)
}

/// Longest run of consecutive steps of the path of `x` that stay on the
/// arrows of `cycle`.
pub fn longest_run_on(g: &RauzyGraph, cycle: &Cycle, x: &Word) -> Result<usize> {
    let path = g.path_of(x)?;
    let mut best = 0;
    let mut cur = 0;
    for pair in path.windows(2) {
        if cycle.contains_arrow(pair[0], pair[1]) {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 0;
        }
    }
    Ok(best)
}

/// DOT text for the graph. Vertices and arrows appear in lexicographic
/// order; arrows of the referent cycle carry `referent=true`.
pub fn export_dot(g: &RauzyGraph, d: &CycleDecomposition) -> String {
    let mut out = String::new();
    let IntervalIndex { n, l } = d.interval;
    let _ = writeln!(out, "digraph rauzy {{");
    let _ = writeln!(
        out,
        "  graph [label=\"m={} n={n} l={l} referent={} other={}\"];",
        g.degree,
        d.referent.len(),
        d.other.len()
    );
    let _ = writeln!(out, "  node [shape=box];");
    for (i, v) in g.vertices.iter().enumerate() {
        let mut attrs = Vec::new();
        if i == g.left_special {
            attrs.push("left_special=true");
        }
        if i == g.right_special {
            attrs.push("right_special=true");
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  \"{v}\";");
        } else {
            let _ = writeln!(out, "  \"{v}\" [{}];", attrs.join(", "));
        }
    }
    for &(s, t) in &g.arrows {
        let attrs = if d.referent.contains_arrow(s, t) {
            "referent=true, color=red"
        } else {
            "referent=false, color=black"
        };
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [{attrs}];",
            g.vertices[s], g.vertices[t]
        );
    }
    out.push_str("}\n");
    out
}
