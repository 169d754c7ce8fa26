//! Braid words and Jaeger's circuit-partition state sum for the HOMFLY
//! polynomial of their closures.
//!
//! Each letter of a word is either kept or replaced by two parallel strands.
//! Tracing the closure of the resulting partial braid meets every letter
//! twice; a choice is admissible when each removed positive letter is first
//! met at the lower position and each removed negative letter at the higher
//! one. With `b` the number of cycles of the kept permutation,
//!
//! ```text
//! P = a^w  sum_{admissible}  (-1)^{#removed negative} z^{#removed} a^(n-b) U^b,
//! U = (a^-1 - a) / z,
//! ```
//!
//! which satisfies `a^-1 P(+) - a P(-) = z P(0)`.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly1, LaurentPoly2};

/// Default cap on the number of letters for exhaustive enumeration.
pub const DEFAULT_BUDGET: usize = 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    /// Generator index `i` in `1..n`; swaps positions `i` and `i + 1`.
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Self {
            index,
            positive: true,
        }
    }

    pub fn neg(index: usize) -> Self {
        Self {
            index,
            positive: false,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            index: self.index,
            positive: !self.positive,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.index)
        } else {
            write!(f, "-{}", self.index)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("a braid needs at least one strand".into()));
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::GeneratorOutOfRange {
                index: l.index,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// `(s_1 s_2 ... s_{p-1})^q` on `p` strands, closing to the torus link `T(p, q)`.
    pub fn torus(p: usize, q: usize) -> Result<Self> {
        let cycle: Vec<Letter> = (1..p).map(Letter::pos).collect();
        Self::new(p, cycle.repeat(q))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| if l.positive { 1 } else { -1 })
            .sum()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.positive)
    }

    /// Conjugation: the word read from letter `k` onwards, cyclically.
    pub fn rotated(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Inserts `s_i s_i^-1` before position `at`.
    pub fn with_cancelling_pair(&self, index: usize, at: usize) -> Result<Self> {
        let mut letters = self.letters.clone();
        let at = at.min(letters.len());
        letters.splice(at..at, [Letter::pos(index), Letter::neg(index)]);
        Self::new(self.strands, letters)
    }

    /// Markov stabilization: one more strand and a trailing `s_n^{+-1}`.
    pub fn stabilized(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        letters.push(Letter {
            index: self.strands,
            positive,
        });
        Self {
            strands: self.strands + 1,
            letters,
        }
    }

    /// `prefix` followed by this word.
    pub fn prepended(&self, prefix: Letter) -> Result<Self> {
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.push(prefix);
        letters.extend_from_slice(&self.letters);
        Self::new(self.strands, letters)
    }

    /// Permutation of positions induced by the whole word: `perm[start] = end`.
    pub fn permutation(&self) -> Vec<usize> {
        let kept = vec![true; self.letters.len()];
        kept_permutation(self, &kept)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

fn kept_permutation(w: &BraidWord, kept: &[bool]) -> Vec<usize> {
    // where each starting position ends up after one pass
    let mut at: Vec<usize> = (0..w.strands).collect();
    let mut owner: Vec<usize> = (0..w.strands).collect();
    for (l, &k) in w.letters.iter().zip(kept) {
        if k {
            owner.swap(l.index - 1, l.index);
        }
    }
    for (pos, &start) in owner.iter().enumerate() {
        at[start] = pos;
    }
    at
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for s in 0..perm.len() {
        if !seen[s] {
            cycles += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
    }
    cycles
}

/// Number of components of the closure.
pub fn closure_components(w: &BraidWord) -> usize {
    cycle_count(&w.permutation())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    strands: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn uint(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an unsigned integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer too large".into(),
            })
    }

    fn word(&mut self, nested: bool) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None => {
                    if nested {
                        return Err(self.err("unclosed group"));
                    }
                    return Ok(out);
                }
                Some(b')') => {
                    if !nested {
                        return Err(self.err("unmatched `)`"));
                    }
                    return Ok(out);
                }
                Some(_) => out.extend(self.term()?),
            }
        }
    }

    fn term(&mut self) -> Result<Vec<Letter>> {
        match self.peek() {
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                let inner = self.word(true)?;
                self.pos += 1;
                if inner.is_empty() {
                    return Err(Error::Parse {
                        pos: open,
                        msg: "empty group".into(),
                    });
                }
                self.skip_ws();
                if self.peek() != Some(b'^') {
                    return Err(self.err("group must be followed by `^count`"));
                }
                self.pos += 1;
                self.skip_ws();
                let reps = self.uint()?;
                Ok(inner.repeat(reps))
            }
            Some(b'-') => {
                self.pos += 1;
                let l = self.generator()?;
                Ok(vec![Letter::neg(l)])
            }
            Some(c) if c.is_ascii_digit() => Ok(vec![Letter::pos(self.generator()?)]),
            Some(c) => Err(self.err(format!("unexpected character `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn generator(&mut self) -> Result<usize> {
        let start = self.pos;
        let i = self.uint()?;
        if i == 0 || i >= self.strands {
            return Err(Error::Parse {
                pos: start,
                msg: Error::GeneratorOutOfRange {
                    index: i,
                    strands: self.strands,
                }
                .to_string(),
            });
        }
        Ok(i)
    }
}

/// Parses `WORD := TERM (WS TERM)*`, `TERM := ['-'] UINT | '(' WORD ')' '^' UINT`.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        strands,
    };
    let letters = p.word(false)?;
    BraidWord::new(strands, letters)
}

/// A braid word with each letter marked kept or removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitPartition<'a> {
    word: &'a BraidWord,
    kept: Vec<bool>,
}

impl<'a> CircuitPartition<'a> {
    pub fn new(word: &'a BraidWord, kept: Vec<bool>) -> Result<Self> {
        if kept.len() != word.len() {
            return Err(Error::Invalid(format!(
                "{} flags for a word of {} letters",
                kept.len(),
                word.len()
            )));
        }
        Ok(Self { word, kept })
    }

    pub fn from_mask(word: &'a BraidWord, mask: u64) -> Self {
        let kept = (0..word.len()).map(|j| mask >> j & 1 == 1).collect();
        Self { word, kept }
    }

    pub fn kept(&self) -> &[bool] {
        &self.kept
    }

    pub fn removed_count(&self) -> usize {
        self.kept.iter().filter(|k| !**k).count()
    }

    /// Cycle count of the permutation of the kept letters.
    pub fn components(&self) -> usize {
        cycle_count(&kept_permutation(self.word, &self.kept))
    }
}

impl fmt::Display for CircuitPartition<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .word
            .letters
            .iter()
            .zip(&self.kept)
            .map(|(l, k)| if *k { l.to_string() } else { format!("~{l}") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Runs the closure trace. `visit(letter, position)` sees every encounter
/// in order (positions 0-based) and may stop the trace by returning false.
/// Returns the number of closed components traced, or `None` if stopped.
fn trace<F>(w: &BraidWord, kept: &[bool], mut visit: F) -> Option<usize>
where
    F: FnMut(usize, usize) -> bool,
{
    let n = w.strands;
    let mut visited = vec![false; n];
    let mut components = 0;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        components += 1;
        let mut pos = start;
        loop {
            visited[pos] = true;
            for (j, l) in w.letters.iter().enumerate() {
                let lo = l.index - 1;
                if pos == lo || pos == lo + 1 {
                    if !visit(j, pos) {
                        return None;
                    }
                    if kept[j] {
                        pos = if pos == lo { lo + 1 } else { lo };
                    }
                }
            }
            if pos == start {
                break;
            }
        }
    }
    Some(components)
}

/// Strand numbers (1-based) at the first and second encounter of each letter.
pub fn trace_encounters(p: &CircuitPartition<'_>) -> Vec<(usize, usize)> {
    let mut first: Vec<Option<usize>> = vec![None; p.word.len()];
    let mut pairs = vec![(0, 0); p.word.len()];
    trace(p.word, &p.kept, |j, pos| {
        match first[j] {
            None => first[j] = Some(pos + 1),
            Some(a) => pairs[j] = (a, pos + 1),
        }
        true
    });
    pairs
}

/// Admissibility check; returns the component count when admissible.
fn admissible_components(w: &BraidWord, kept: &[bool], first: &mut [u32]) -> Option<usize> {
    first.iter_mut().for_each(|f| *f = u32::MAX);
    trace(w, kept, |j, pos| {
        if kept[j] {
            return true;
        }
        let pos = pos as u32;
        if first[j] == u32::MAX {
            first[j] = pos;
            true
        } else if w.letters[j].positive {
            first[j] < pos
        } else {
            first[j] > pos
        }
    })
}

pub fn is_admissible(p: &CircuitPartition<'_>) -> bool {
    let mut scratch = vec![0u32; p.word.len()];
    admissible_components(p.word, &p.kept, &mut scratch).is_some()
}

fn check_budget(w: &BraidWord, budget: usize) -> Result<()> {
    if w.len() > budget || w.len() > 63 {
        return Err(Error::BudgetExceeded {
            letters: w.len(),
            budget: budget.min(63),
        });
    }
    Ok(())
}

fn mask_bits(mask: u64, len: usize, out: &mut [bool]) {
    for (j, slot) in out.iter_mut().enumerate().take(len) {
        *slot = mask >> j & 1 == 1;
    }
}

/// Every admissible circuit partition, in increasing mask order
/// (bit `j` set means letter `j` is kept).
pub fn admissible_masks(w: &BraidWord, budget: usize) -> Result<Vec<u64>> {
    check_budget(w, budget)?;
    let len = w.len();
    let mut kept = vec![false; len];
    let mut scratch = vec![0u32; len];
    Ok((0..1u64 << len)
        .filter(|&m| {
            mask_bits(m, len, &mut kept);
            admissible_components(w, &kept, &mut scratch).is_some()
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomflyValue {
    /// `P(closure)` with the unknot valued `(a^-1 - a)/z`.
    pub unnormalized: LaurentPoly2,
    /// `P(closure) / P(unknot)`, when that division is exact.
    pub normalized: Option<LaurentPoly2>,
}

/// Tallies of admissible partitions keyed by (#removed, #removed negative
/// mod 2, components), flattened.
struct Tally {
    len: usize,
    strands: usize,
    counts: Vec<u64>,
}

impl Tally {
    fn new(len: usize, strands: usize) -> Self {
        Self {
            len,
            strands,
            counts: vec![0; (len + 1) * 2 * (strands + 1)],
        }
    }

    fn slot(&self, removed: usize, neg_odd: usize, b: usize) -> usize {
        (removed * 2 + neg_odd) * (self.strands + 1) + b
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }
}

fn tally_range(w: &BraidWord, masks: std::ops::Range<u64>) -> Tally {
    let len = w.len();
    let mut t = Tally::new(len, w.strands);
    let mut kept = vec![false; len];
    let mut scratch = vec![0u32; len];
    for m in masks {
        mask_bits(m, len, &mut kept);
        if let Some(b) = admissible_components(w, &kept, &mut scratch) {
            let removed = len - m.count_ones() as usize;
            let neg = w
                .letters
                .iter()
                .zip(&kept)
                .filter(|(l, k)| !l.positive && !**k)
                .count();
            let s = t.slot(removed, neg % 2, b);
            t.counts[s] += 1;
        }
    }
    t
}

/// The full state sum over all `2^N` circuit partitions.
pub fn jaeger_homfly(w: &BraidWord, budget: usize) -> Result<HomflyValue> {
    check_budget(w, budget)?;
    let len = w.len();
    let total = 1u64 << len;
    let chunk = 1u64 << len.min(12);
    let tally = (0..total / chunk)
        .into_par_iter()
        .map(|c| tally_range(w, c * chunk..(c + 1) * chunk))
        .reduce(|| Tally::new(len, w.strands), Tally::merge);

    let n = w.strands as i64;
    let unknot = LaurentPoly2::unknot();
    let unknot_pows: Vec<LaurentPoly2> = (0..=w.strands as u32).map(|k| unknot.pow(k)).collect();
    let mut sum = LaurentPoly2::zero();
    for removed in 0..=tally.len {
        for neg_odd in 0..2 {
            for b in 1..=tally.strands {
                let count = tally.counts[tally.slot(removed, neg_odd, b)];
                if count == 0 {
                    continue;
                }
                let sign: i64 = if neg_odd == 1 { -1 } else { 1 };
                let coeff = BigInt::from(count) * sign;
                let mono = LaurentPoly2::monomial((n - b as i64, removed as i64), coeff);
                sum = &sum + &(&mono * &unknot_pows[b]);
            }
        }
    }
    let unnormalized = sum.shift((w.writhe(), 0));
    let normalized = unnormalized.div_unknot().ok();
    Ok(HomflyValue {
        unnormalized,
        normalized,
    })
}

/// Lowest a-degree part of the HOMFLY polynomial, with the counts behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pinf {
    /// `counts[r]` is the number of admissible partitions keeping `2r`
    /// letters whose kept permutation is the identity.
    pub counts: Vec<u128>,
    pub poly: LaurentPoly1,
}

struct PinfSearch<'a> {
    word: &'a BraidWord,
    counts: Vec<u128>,
    kept: Vec<bool>,
    scratch: Vec<u32>,
}

impl PinfSearch<'_> {
    /// Extends `kept[..j]`; `perm` maps positions to strand labels.
    fn descend(&mut self, j: usize, perm: &mut Vec<usize>, kept_count: usize) {
        let len = self.word.len();
        let n = self.word.strands;
        let deficit = n - cycle_count(perm);
        if deficit > len - j {
            return;
        }
        if j == len {
            if deficit == 0
                && admissible_components(self.word, &self.kept, &mut self.scratch).is_some()
            {
                self.counts[kept_count / 2] += 1;
            }
            return;
        }
        let i = self.word.letters[j].index - 1;
        self.kept[j] = false;
        self.descend(j + 1, perm, kept_count);
        self.kept[j] = true;
        perm.swap(i, i + 1);
        self.descend(j + 1, perm, kept_count + 1);
        perm.swap(i, i + 1);
        self.kept[j] = false;
    }
}

/// `P_inf` of a positive braid: `sum_r #A_{n,r} z^(w - n - 2r)`.
///
/// Only partitions whose kept letters multiply to the identity contribute
/// to the lowest power of `a`, so the search prunes any branch that can no
/// longer return to the identity.
pub fn pinf_positive(w: &BraidWord, budget: usize) -> Result<Pinf> {
    if !w.is_positive() {
        return Err(Error::NotPositive);
    }
    check_budget(w, budget)?;
    let len = w.len();
    let split = len.min(10);
    let n = w.strands;

    // prefixes of length `split`, searched in parallel
    let prefixes: Vec<(Vec<bool>, Vec<usize>)> = (0..1u64 << split)
        .filter_map(|m| {
            let mut perm: Vec<usize> = (0..n).collect();
            let mut kept = vec![false; len];
            for j in 0..split {
                if m >> j & 1 == 1 {
                    kept[j] = true;
                    let i = w.letters[j].index - 1;
                    perm.swap(i, i + 1);
                }
            }
            (n - cycle_count(&perm) <= len - split).then_some((kept, perm))
        })
        .collect();

    let counts = prefixes
        .into_par_iter()
        .map(|(kept, mut perm)| {
            let kept_count = kept.iter().filter(|k| **k).count();
            let mut s = PinfSearch {
                word: w,
                counts: vec![0; len / 2 + 1],
                kept,
                scratch: vec![0; len],
            };
            s.descend(split, &mut perm, kept_count);
            s.counts
        })
        .reduce(
            || vec![0; len / 2 + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let base = w.writhe() - n as i64;
    let poly = LaurentPoly1::from_terms(
        counts
            .iter()
            .enumerate()
            .map(|(r, c)| (base - 2 * r as i64, BigInt::from(*c))),
    );
    let last = counts.iter().rposition(|c| *c != 0).map_or(0, |i| i + 1);
    Ok(Pinf {
        counts: counts[..last].to_vec(),
        poly,
    })
}

/// Lowest a-degree part of an arbitrary word's HOMFLY polynomial.
pub fn pinf_general(w: &BraidWord, budget: usize) -> Result<(i64, LaurentPoly1)> {
    jaeger_homfly(w, budget)?.unnormalized.lowest_a_part()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovReport {
    pub rotation: bool,
    /// `None` on one strand, where there is no generator to cancel.
    pub cancelling_pair: Option<bool>,
    pub stabilization: bool,
    /// For positive words: `w - n` and the `P_inf` counts survive stabilization.
    pub pinf_stabilization: Option<bool>,
}

impl MarkovReport {
    pub fn ok(&self) -> bool {
        self.rotation
            && self.cancelling_pair.unwrap_or(true)
            && self.stabilization
            && self.pinf_stabilization.unwrap_or(true)
    }
}

/// Compares the state sum of `w` with its images under the Markov moves.
pub fn markov_checks(w: &BraidWord, budget: usize) -> Result<MarkovReport> {
    let base = jaeger_homfly(w, budget)?.unnormalized;
    let same =
        |v: &BraidWord| -> Result<bool> { Ok(jaeger_homfly(v, budget)?.unnormalized == base) };

    let mut rotation = true;
    for k in 1..w.len() {
        rotation &= same(&w.rotated(k))?;
    }
    let cancelling_pair = if w.strands() > 1 {
        let index = w.letters().first().map_or(1, |l| l.index);
        Some(same(&w.with_cancelling_pair(index, w.len())?)?)
    } else {
        None
    };
    let stabilization = same(&w.stabilized(true))? && same(&w.stabilized(false))?;
    let pinf_stabilization = if w.is_positive() {
        let s = w.stabilized(true);
        let before = pinf_positive(w, budget)?;
        let after = pinf_positive(&s, budget)?;
        let shift_same = w.writhe() - w.strands() as i64 == s.writhe() - s.strands() as i64;
        Some(shift_same && before == after)
    } else {
        None
    };
    Ok(MarkovReport {
        rotation,
        cancelling_pair,
        stabilization,
        pinf_stabilization,
    })
}

/// `mu = w - n + 1` for a positive braid presenting a singularity link.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MilnorData {
    pub mu: i64,
    pub writhe: i64,
    pub strands: usize,
}

impl MilnorData {
    /// `delta` from `2 delta = w - n + b`, if that is a nonnegative integer.
    pub fn delta(&self, branches: usize) -> Option<i64> {
        let twice = self.writhe - self.strands as i64 + branches as i64;
        (twice >= 0 && twice % 2 == 0).then_some(twice / 2)
    }

    /// A germ with `mu <= 0` is smooth at best; the word is no singular link.
    pub fn is_singular(&self) -> bool {
        self.mu > 0
    }
}

pub fn milnor_from_braid(w: &BraidWord) -> Result<MilnorData> {
    if !w.is_positive() {
        return Err(Error::NotPositive);
    }
    Ok(MilnorData {
        mu: w.writhe() - w.strands() as i64 + 1,
        writhe: w.writhe(),
        strands: w.strands(),
    })
}

pub fn homfly_json(w: &BraidWord, h: &HomflyValue, pinf: Option<&Pinf>) -> Value {
    let (pinf_poly, counts) = match pinf {
        Some(p) => (
            serde_json::to_value(&p.poly).expect("serializable"),
            json!(p
                .counts
                .iter()
                .enumerate()
                .map(|(r, c)| json!([r, c]))
                .collect::<Vec<_>>()),
        ),
        None => {
            let low = h
                .unnormalized
                .lowest_a_part()
                .map(|(_, p)| p)
                .unwrap_or_else(|_| LaurentPoly1::zero());
            (
                serde_json::to_value(&low).expect("serializable"),
                Value::Null,
            )
        }
    };
    json!({
        "strands": w.strands(),
        "writhe": w.writhe(),
        "homfly": h.unnormalized,
        "normalized": h.normalized,
        "pinf": pinf_poly,
        "counts": counts,
    })
}
