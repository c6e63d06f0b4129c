//! Permutations in one-line notation.
//!
//! Values are stored 1-based (the one-line notation `π(1)…π(n)`), while
//! positions are ordinary 0-based slice indices.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

use crate::graphs::SimpleGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("not a permutation of 1..={len}: {values:?}")]
    NotAPermutation { len: usize, values: Vec<usize> },
    #[error("cannot parse permutation entry {0:?}")]
    Parse(String),
    #[error("inflation block for entry {entry} has length 0")]
    ZeroLengthBlock { entry: usize },
    #[error("expected {expected} inflation blocks, got {got}")]
    BlockCount { expected: usize, got: usize },
}

/// A permutation of `{1,…,n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotAPermutation { len: n, values });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { values: (1..=n).collect() }
    }

    pub fn decreasing(n: usize) -> Self {
        Permutation { values: (1..=n).rev().collect() }
    }

    /// The order-isomorphic standardization of a sequence of distinct values.
    pub fn standardize<T: Ord>(seq: &[T]) -> Self {
        let mut order: Vec<usize> = (0..seq.len()).collect();
        order.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
        let mut values = vec![0; seq.len()];
        for (rank, &pos) in order.iter().enumerate() {
            values[pos] = rank + 1;
        }
        Permutation { values }
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n)
            .permutations(n)
            .map(|values| Permutation { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The 1-based value at 0-based position `i`.
    pub fn value(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    /// The pattern formed by the entries at the given positions.
    pub fn pattern_at(&self, positions: &[usize]) -> Self {
        let seq: Vec<usize> = positions.iter().map(|&i| self.values[i]).collect();
        Permutation::standardize(&seq)
    }

    pub fn contains(&self, pattern: &Permutation) -> bool {
        self.embedding(pattern).is_some()
    }

    /// The lexicographically least list of positions whose entries are
    /// order isomorphic to `pattern`.
    pub fn embedding(&self, pattern: &Permutation) -> Option<Vec<usize>> {
        let k = pattern.len();
        if k > self.len() {
            return None;
        }
        // For each pattern position, the earlier pattern positions holding the
        // next smaller and next larger values bound the admissible text values.
        let bounds: Vec<(Option<usize>, Option<usize>)> = (0..k)
            .map(|j| {
                let pj = pattern.values[j];
                let lower = (0..j)
                    .filter(|&p| pattern.values[p] < pj)
                    .max_by_key(|&p| pattern.values[p]);
                let upper = (0..j)
                    .filter(|&p| pattern.values[p] > pj)
                    .min_by_key(|&p| pattern.values[p]);
                (lower, upper)
            })
            .collect();
        let mut chosen = Vec::with_capacity(k);
        if self.embed_from(pattern, &bounds, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    fn embed_from(
        &self,
        pattern: &Permutation,
        bounds: &[(Option<usize>, Option<usize>)],
        chosen: &mut Vec<usize>,
    ) -> bool {
        let j = chosen.len();
        let k = pattern.len();
        if j == k {
            return true;
        }
        let start = chosen.last().map_or(0, |&i| i + 1);
        let last_start = self.len() - (k - j);
        let (lower, upper) = bounds[j];
        let lo = lower.map_or(0, |p| self.values[chosen[p]]);
        let hi = upper.map_or(usize::MAX, |p| self.values[chosen[p]]);
        for i in start..=last_start {
            let v = self.values[i];
            if v <= lo || v >= hi {
                continue;
            }
            chosen.push(i);
            if self.embed_from(pattern, bounds, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// The inversion graph: vertex `i` is position `i`, with `i ~ j` whenever
    /// the two entries form an inversion.
    pub fn inversion_graph(&self) -> SimpleGraph {
        let n = self.len();
        let mut g = SimpleGraph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if self.values[i] > self.values[j] {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Whether some third entry lies between entries `i` and `j` either
    /// horizontally or vertically, but not both.
    pub fn is_separated(&self, i: usize, j: usize) -> bool {
        self.separator(i, j).is_some()
    }

    pub fn separator(&self, i: usize, j: usize) -> Option<usize> {
        let (a, b) = (i.min(j), i.max(j));
        let (vlo, vhi) = (
            self.values[i].min(self.values[j]),
            self.values[i].max(self.values[j]),
        );
        (0..self.len()).filter(|&x| x != i && x != j).find(|&x| {
            let horiz = a < x && x < b;
            let vert = vlo < self.values[x] && self.values[x] < vhi;
            horiz != vert
        })
    }

    /// All maximal nontrivial monotone intervals in position order.
    pub fn monotone_intervals(&self) -> Vec<MonotoneInterval> {
        let n = self.len();
        let mut out = Vec::new();
        let mut i = 0;
        while i + 1 < n {
            let step = self.values[i + 1] as isize - self.values[i] as isize;
            if step == 1 || step == -1 {
                let mut j = i + 1;
                while j + 1 < n && self.values[j + 1] as isize - self.values[j] as isize == step {
                    j += 1;
                }
                out.push(MonotoneInterval {
                    start: i,
                    length: j - i + 1,
                    direction: if step == 1 {
                        Direction::Increasing
                    } else {
                        Direction::Decreasing
                    },
                });
                i = j;
            } else {
                i += 1;
            }
        }
        out
    }

    pub fn has_only_trivial_intervals(&self) -> bool {
        self.monotone_intervals().is_empty()
    }

    /// Contracts every maximal nontrivial monotone interval once, or returns
    /// `None` if there are none. The map sends each entry of the result to
    /// the range of positions of `self` it replaced.
    pub fn contract_step(&self) -> Option<(Permutation, Vec<Range<usize>>)> {
        let intervals = self.monotone_intervals();
        if intervals.is_empty() {
            return None;
        }
        let mut blocks: Vec<Range<usize>> = Vec::new();
        let mut next = intervals.iter().peekable();
        let mut i = 0;
        while i < self.len() {
            match next.peek() {
                Some(iv) if iv.start == i => {
                    blocks.push(i..i + iv.length);
                    i += iv.length;
                    next.next();
                }
                _ => {
                    blocks.push(i..i + 1);
                    i += 1;
                }
            }
        }
        let mins: Vec<usize> = blocks
            .iter()
            .map(|b| b.clone().map(|p| self.values[p]).min().unwrap())
            .collect();
        Some((Permutation::standardize(&mins), blocks))
    }

    /// Contracts monotone intervals repeatedly until none remain.
    ///
    /// The returned map sends each entry of the result to the range of source
    /// positions it absorbed.
    pub fn contract(&self) -> (Permutation, Vec<Range<usize>>) {
        let mut current = self.clone();
        let mut map: Vec<Range<usize>> = (0..self.len()).map(|i| i..i + 1).collect();
        while let Some((next, blocks)) = current.contract_step() {
            map = blocks
                .iter()
                .map(|b| map[b.start].start..map[b.end - 1].end)
                .collect();
            current = next;
        }
        (current, map)
    }

    /// Replaces entry `i` by a monotone interval described by `blocks[i]`.
    pub fn inflate(&self, blocks: &[Block]) -> Result<Permutation, PermError> {
        if blocks.len() != self.len() {
            return Err(PermError::BlockCount {
                expected: self.len(),
                got: blocks.len(),
            });
        }
        if let Some(entry) = blocks.iter().position(|b| b.length == 0) {
            return Err(PermError::ZeroLengthBlock { entry });
        }
        // offset[v] = total length of the blocks of entries with value < v
        let mut by_value = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            by_value[v - 1] = blocks[i].length;
        }
        let mut offset = vec![0; self.len() + 1];
        for v in 0..self.len() {
            offset[v + 1] = offset[v] + by_value[v];
        }
        let mut values = Vec::with_capacity(offset[self.len()]);
        for (i, &v) in self.values.iter().enumerate() {
            let base = offset[v - 1];
            let len = blocks[i].length;
            match blocks[i].direction {
                Direction::Increasing => values.extend(base + 1..=base + len),
                Direction::Decreasing => values.extend((base + 1..=base + len).rev()),
            }
        }
        Ok(Permutation { values })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.values.iter().join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Parses whitespace- or comma-separated one-line notation. A single token
/// of two or more digits is read digit by digit (`3142`).
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let values: Vec<usize> = if tokens.len() == 1 && tokens[0].len() > 1 {
            tokens[0]
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| PermError::Parse(tokens[0].to_string()))?
        } else {
            tokens
                .iter()
                .map(|t| t.parse().map_err(|_| PermError::Parse(t.to_string())))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(values)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonotoneInterval {
    pub start: usize,
    pub length: usize,
    pub direction: Direction,
}

impl MonotoneInterval {
    pub fn positions(&self) -> Range<usize> {
        self.start..self.start + self.length
    }
}

/// Length and direction of the interval that replaces one entry on inflation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub length: usize,
    pub direction: Direction,
}

impl Block {
    pub fn single() -> Self {
        Block { length: 1, direction: Direction::Increasing }
    }
}

/// Every interleaving of `u` and `v` that keeps each word's internal order.
pub fn shuffle<T: Clone + Ord>(u: &[T], v: &[T]) -> BTreeSet<Vec<T>> {
    fn go<T: Clone + Ord>(u: &[T], v: &[T], prefix: &mut Vec<T>, out: &mut BTreeSet<Vec<T>>) {
        if u.is_empty() || v.is_empty() {
            let mut word = prefix.clone();
            word.extend_from_slice(u);
            word.extend_from_slice(v);
            out.insert(word);
            return;
        }
        prefix.push(u[0].clone());
        go(&u[1..], v, prefix, out);
        prefix.pop();
        prefix.push(v[0].clone());
        go(u, &v[1..], prefix, out);
        prefix.pop();
    }
    let mut out = BTreeSet::new();
    go(u, v, &mut Vec::new(), &mut out);
    out
}

/// `2143…(2m)(2m−1)`, whose inversion graph is the matching `mK2`.
pub fn matching_pattern(m: usize) -> Permutation {
    Permutation {
        values: (0..m).flat_map(|i| [2 * i + 2, 2 * i + 1]).collect(),
    }
}

/// `(2m−1)(2m)…3412`, whose inversion graph is the complement of `mK2`.
pub fn co_matching_pattern(m: usize) -> Permutation {
    Permutation {
        values: (0..m).rev().flat_map(|i| [2 * i + 1, 2 * i + 2]).collect(),
    }
}
