//! Words over positive integers and the u-representation relation.
//!
//! A labeled graph is u-represented by a word `w` when, for every pair of
//! labels `x != y`, the two are adjacent exactly when the restriction of `w`
//! to `{x, y}` has no factor whose reduced form equals `u`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// A finite sequence of positive integer letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The alphabet `A(w)`.
    pub fn alphabet(&self) -> BTreeSet<u32> {
        self.0.iter().copied().collect()
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    /// Concatenated-digit form (`464365235121`). Display only: ambiguous once
    /// a letter has more than one digit.
    pub fn compact(&self) -> String {
        self.0.iter().map(|l| l.to_string()).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses space-separated decimal letters.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|e| Error::Parse { line: 1, msg: format!("bad letter {tok:?}: {e}") })
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}

/// A reduced word over `{1, 2}`, i.e. one that contains the letter 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternWord(Vec<u32>);

impl PatternWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.is_empty() || letters.iter().any(|&l| l != 1 && l != 2) || !letters.contains(&1) {
            return Err(Error::BadPatternWord);
        }
        Ok(PatternWord(letters))
    }

    pub fn twelve() -> Self {
        PatternWord(vec![1, 2])
    }

    pub fn twenty_one() -> Self {
        PatternWord(vec![2, 1])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn reversed(&self) -> Self {
        PatternWord(self.0.iter().rev().copied().collect())
    }
}

impl FromStr for PatternWord {
    type Err = Error;

    /// Accepts `12`, `211`, or `1 2`.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| c.to_digit(10).ok_or(Error::BadPatternWord))
            .collect::<Result<Vec<_>>>()?;
        PatternWord::new(letters)
    }
}

impl fmt::Display for PatternWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn reduce_slice(letters: &[u32]) -> Vec<u32> {
    let mut distinct: Vec<u32> = letters.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    letters.iter().map(|l| distinct.binary_search(l).unwrap() as u32 + 1).collect()
}

/// `red(w)`: replaces every occurrence of the i-th smallest letter by i.
pub fn reduce(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(Word(reduce_slice(&w.0)))
}

/// `w_B`: keeps exactly the occurrences of letters in `keep`, in order.
pub fn restrict(w: &Word, keep: &BTreeSet<u32>) -> Result<Word> {
    let alphabet = w.alphabet();
    if let Some(&missing) = keep.iter().find(|l| !alphabet.contains(l)) {
        return Err(Error::LetterNotInWord(missing));
    }
    Ok(Word(w.0.iter().copied().filter(|l| keep.contains(l)).collect()))
}

pub fn reverse(w: &Word) -> Word {
    Word(w.0.iter().rev().copied().collect())
}

/// Index of the first factor of `letters` whose reduced form is `u`.
fn first_match(letters: &[u32], u: &[u32]) -> Option<usize> {
    let k = u.len();
    if letters.len() < k {
        return None;
    }
    // `u` is over {1,2}, so a matching window has exactly the distinct-value
    // count of `u`; comparing relative order position-by-position suffices.
    let distinct_in_u = if u.contains(&2) { 2 } else { 1 };
    letters.windows(k).position(|win| {
        let lo = *win.iter().min().unwrap();
        let hi = *win.iter().max().unwrap();
        let distinct = if lo == hi { 1 } else { 2 };
        if distinct != distinct_in_u {
            return false;
        }
        if win.iter().any(|&l| l != lo && l != hi) {
            return false;
        }
        win.iter().zip(u).all(|(&l, &p)| (l == lo) == (p == 1))
    })
}

/// Whether some factor of `w` reduces to `u`.
pub fn has_u_match(w: &Word, u: &PatternWord) -> bool {
    first_match(&w.0, &u.0).is_some()
}

/// Start index (0-based) of the first u-match, if any.
pub fn find_u_match(w: &Word, u: &PatternWord) -> Option<usize> {
    first_match(&w.0, &u.0)
}

/// Outcome of checking a word against a labeled graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Represents,
    /// Labels `x < y` on which the word disagrees with the graph;
    /// `adjacent` is the graph's answer.
    Violation {
        x: u32,
        y: u32,
        adjacent: bool,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Represents)
    }
}

/// Checks whether `w` u-represents `g` under its labeling.
///
/// Every one of the `n(n-1)/2` label pairs is restricted and scanned; the
/// restriction is built by merging per-letter position lists, so the cost
/// per pair is the number of occurrences of the two letters.
pub fn u_represents(w: &Word, g: &LabeledGraph, u: &PatternWord) -> Result<Verdict> {
    let n = g.graph().n();
    let mut positions: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, &l) in w.0.iter().enumerate() {
        let l = l as usize;
        if l == 0 || l > n {
            return Err(Error::AlphabetMismatch { n });
        }
        positions[l].push(i);
    }
    if positions[1..].iter().any(Vec::is_empty) {
        return Err(Error::AlphabetMismatch { n });
    }

    let mut buf = Vec::new();
    for x in 1..=n {
        let vx = g.vertex_of(x as u32);
        for y in x + 1..=n {
            let vy = g.vertex_of(y as u32);
            merge_restriction(&positions[x], x as u32, &positions[y], y as u32, &mut buf);
            let matched = first_match(&buf, &u.0).is_some();
            let adjacent = g.graph().has_edge(vx, vy);
            if adjacent == matched {
                return Ok(Verdict::Violation { x: x as u32, y: y as u32, adjacent });
            }
        }
    }
    Ok(Verdict::Represents)
}

fn merge_restriction(px: &[usize], x: u32, py: &[usize], y: u32, out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < px.len() || j < py.len() {
        if j == py.len() || (i < px.len() && px[i] < py[j]) {
            out.push(x);
            i += 1;
        } else {
            out.push(y);
            j += 1;
        }
    }
}
