//! Letter graphs and exact lettericity.
//!
//! A decoder `D ⊆ Σ²` and a word `w` determine the graph on the positions of
//! `w` in which `i < j` are adjacent exactly when `(w(i), w(j)) ∈ D`.

use std::fmt::Write as _;

use itertools::Itertools;
use thiserror::Error;

use crate::graphs::SimpleGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LetterError {
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(String),
    #[error("letter index {letter} outside an alphabet of size {size}")]
    LetterOutOfRange { letter: usize, size: usize },
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),
    #[error("line {line}: expected an ordered pair \"a b\", got {text:?}")]
    BadPair { line: usize, text: String },
}

/// An ordered finite set of named letters; letters are referred to by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self, LetterError> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if let Some(dup) = symbols.iter().duplicates().next() {
            return Err(LetterError::DuplicateSymbol(dup.clone()));
        }
        Ok(Alphabet { symbols })
    }

    /// `a`, `b`, `c`, … (then `l26`, `l27`, … past `z`).
    pub fn standard(size: usize) -> Self {
        let symbols = (0..size)
            .map(|i| {
                if i < 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("l{i}")
                }
            })
            .collect();
        Alphabet { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, letter: usize) -> &str {
        &self.symbols[letter]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, symbol: &str) -> Result<usize, LetterError> {
        self.symbols
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| LetterError::UnknownSymbol(symbol.to_string()))
    }

    /// Parses a whitespace-separated word.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>, LetterError> {
        text.split_whitespace().map(|s| self.index_of(s)).collect()
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        word.iter().map(|&l| self.symbol(l)).join(" ")
    }
}

/// A set of ordered letter pairs over an alphabet of `size` letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decoder {
    size: usize,
    pairs: Vec<bool>,
}

impl Decoder {
    pub fn empty(size: usize) -> Self {
        Decoder { size, pairs: vec![false; size * size] }
    }

    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self, LetterError> {
        let mut d = Decoder::empty(size);
        for &(a, b) in pairs {
            for letter in [a, b] {
                if letter >= size {
                    return Err(LetterError::LetterOutOfRange { letter, size });
                }
            }
            d.insert(a, b);
        }
        Ok(d)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs[a * self.size + b]
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.pairs[a * self.size + b] = true;
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size)
            .cartesian_product(0..self.size)
            .filter(|&(a, b)| self.contains(a, b))
    }

    /// `Σ² ∖ D`; decoding any word with it yields the complement graph.
    pub fn complement(&self) -> Decoder {
        Decoder {
            size: self.size,
            pairs: self.pairs.iter().map(|&p| !p).collect(),
        }
    }

    /// Panics if a letter is outside the alphabet; see [`decode_letter_graph`]
    /// for the checked form.
    pub fn decode(&self, word: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(word.len());
        for (i, j) in (0..word.len()).tuple_combinations() {
            if self.contains(word[i], word[j]) {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// One `a b` pair per line.
    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let mut s = String::new();
        for (a, b) in self.pairs() {
            let _ = writeln!(s, "{} {}", alphabet.symbol(a), alphabet.symbol(b));
        }
        s
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Decoder, LetterError> {
        let mut d = Decoder::empty(alphabet.len());
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(LetterError::BadPair { line: i + 1, text: line.to_string() });
            }
            d.insert(alphabet.index_of(parts[0])?, alphabet.index_of(parts[1])?);
        }
        Ok(d)
    }
}

pub fn decode_letter_graph(
    alphabet: &Alphabet,
    decoder: &Decoder,
    word: &[usize],
) -> Result<SimpleGraph, LetterError> {
    let size = alphabet.len().min(decoder.size());
    if let Some(&letter) = word.iter().find(|&&l| l >= size) {
        return Err(LetterError::LetterOutOfRange { letter, size });
    }
    Ok(decoder.decode(word))
}

/// A lettering of a graph together with the isomorphism `ψ` from graph
/// vertices to word positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letterization {
    pub alphabet: Alphabet,
    pub decoder: Decoder,
    pub word: Vec<usize>,
    /// `iso[v]` is the word position encoding vertex `v`.
    pub iso: Vec<usize>,
}

impl Letterization {
    pub fn letter_graph(&self) -> SimpleGraph {
        self.decoder.decode(&self.word)
    }

    /// The letter encoding vertex `v`.
    pub fn letter_of(&self, v: usize) -> usize {
        self.word[self.iso[v]]
    }

    /// Checks that `iso` is an isomorphism from `g` onto the decoded graph.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        let n = g.order();
        if self.word.len() != n || self.iso.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &p in &self.iso {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return false;
            }
        }
        let h = self.letter_graph();
        (0..n)
            .tuple_combinations()
            .all(|(u, v)| g.has_edge(u, v) == h.has_edge(self.iso[u], self.iso[v]))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("alphabet: {}\n", self.alphabet.symbols().join(" "));
        s.push_str("decoder:\n");
        s.push_str(&self.decoder.to_text(&self.alphabet));
        let _ = writeln!(s, "word: {}", self.alphabet.format_word(&self.word));
        let _ = writeln!(s, "iso: {}", self.iso.iter().map(|p| p + 1).join(" "));
        s
    }
}

/// Backtracking state for the lettering search. The word is built left to
/// right; each position receives a letter and an unplaced vertex, and decoder
/// entries are fixed lazily by the adjacencies they must reproduce.
struct Search<'a> {
    g: &'a SimpleGraph,
    k: usize,
    /// `decoder[a * k + b]`: `None` while undetermined.
    decoder: Vec<Option<bool>>,
    word: Vec<usize>,
    vertex_at: Vec<usize>,
    placed: Vec<bool>,
    /// Twins of `v` with smaller index; they must be placed before `v`.
    earlier_twins: Vec<Vec<usize>>,
    letters_used: usize,
}

impl<'a> Search<'a> {
    fn new(g: &'a SimpleGraph, k: usize) -> Self {
        let n = g.order();
        let twins = |u: usize, v: usize| {
            (0..n)
                .filter(|&x| x != u && x != v)
                .all(|x| g.has_edge(x, u) == g.has_edge(x, v))
        };
        let earlier_twins = (0..n).map(|v| (0..v).filter(|&u| twins(u, v)).collect()).collect();
        Search {
            g,
            k,
            decoder: vec![None; k * k],
            word: Vec::with_capacity(n),
            vertex_at: Vec::with_capacity(n),
            placed: vec![false; n],
            earlier_twins,
            letters_used: 0,
        }
    }

    fn run(&mut self) -> bool {
        let n = self.g.order();
        if self.word.len() == n {
            return true;
        }
        // restricted growth: a new letter is always the next unused one
        let max_letter = (self.letters_used + 1).min(self.k);
        for a in 0..max_letter {
            for v in 0..n {
                if self.placed[v] || self.earlier_twins[v].iter().any(|&u| !self.placed[u]) {
                    continue;
                }
                let mut log = Vec::new();
                if self.place(a, v, &mut log) {
                    let used_before = self.letters_used;
                    self.letters_used = self.letters_used.max(a + 1);
                    if self.forward_ok() && self.run() {
                        return true;
                    }
                    self.letters_used = used_before;
                    self.word.pop();
                    self.vertex_at.pop();
                    self.placed[v] = false;
                }
                for idx in log {
                    self.decoder[idx] = None;
                }
            }
        }
        false
    }

    /// Tries to append letter `a` encoding vertex `v`; decoder entries fixed
    /// along the way are recorded in `log` for undo.
    fn place(&mut self, a: usize, v: usize, log: &mut Vec<usize>) -> bool {
        for (q, &b) in self.word.iter().enumerate() {
            let want = self.g.has_edge(self.vertex_at[q], v);
            let idx = b * self.k + a;
            match self.decoder[idx] {
                Some(have) if have != want => return false,
                Some(_) => {}
                None => {
                    self.decoder[idx] = Some(want);
                    log.push(idx);
                }
            }
        }
        self.word.push(a);
        self.vertex_at.push(v);
        self.placed[v] = true;
        true
    }

    /// Every unplaced vertex must still admit some letter.
    fn forward_ok(&self) -> bool {
        if self.letters_used < self.k {
            return true;
        }
        (0..self.g.order()).filter(|&u| !self.placed[u]).all(|u| {
            (0..self.k).any(|b| {
                self.word.iter().enumerate().all(|(q, &c)| {
                    self.decoder[c * self.k + b]
                        .is_none_or(|d| d == self.g.has_edge(self.vertex_at[q], u))
                })
            })
        })
    }

    fn into_lettering(self) -> Letterization {
        let size = self.letters_used;
        let mut decoder = Decoder::empty(size);
        for a in 0..size {
            for b in 0..size {
                if self.decoder[a * self.k + b] == Some(true) {
                    decoder.insert(a, b);
                }
            }
        }
        let mut iso = vec![0; self.g.order()];
        for (p, &v) in self.vertex_at.iter().enumerate() {
            iso[v] = p;
        }
        Letterization {
            alphabet: Alphabet::standard(size),
            decoder,
            word: self.word,
            iso,
        }
    }
}

/// A lettering of `g` using at most `k` letters, if one exists.
///
/// Letters are introduced in order of first occurrence, and the result is the
/// lexicographically least such word together with its least decoder
/// (undetermined pairs are left out of `D`).
pub fn find_lettering(g: &SimpleGraph, k: usize) -> Option<Letterization> {
    if g.order() == 0 {
        return Some(Letterization {
            alphabet: Alphabet::standard(0),
            decoder: Decoder::empty(0),
            word: Vec::new(),
            iso: Vec::new(),
        });
    }
    if k == 0 {
        return None;
    }
    let mut search = Search::new(g, k);
    if search.run() {
        Some(search.into_lettering())
    } else {
        None
    }
}

/// A lettering with the fewest letters.
pub fn minimal_lettering(g: &SimpleGraph) -> Letterization {
    (0..=g.order())
        .find_map(|k| find_lettering(g, k))
        .expect("every graph on n vertices is an n-letter graph")
}

pub fn lettericity(g: &SimpleGraph) -> usize {
    minimal_lettering(g).alphabet.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Family;

    fn threshold_alphabet() -> (Alphabet, Decoder) {
        let alphabet = Alphabet::new(["i", "d"]).unwrap();
        let decoder = Decoder::parse("i d\nd d\n", &alphabet).unwrap();
        (alphabet, decoder)
    }

    #[test]
    fn decodes_ididid() {
        let (alphabet, decoder) = threshold_alphabet();
        let word = alphabet.parse_word("i d i d i d").unwrap();
        let g = decode_letter_graph(&alphabet, &decoder, &word).unwrap();
        let expected: Vec<(usize, usize)> = [(1, 2), (1, 4), (1, 6), (2, 4), (2, 6), (3, 4), (3, 6), (4, 6), (5, 6)]
            .iter()
            .map(|&(u, v)| (u - 1, v - 1))
            .collect();
        assert_eq!(g.edges().collect::<Vec<_>>(), expected);
        assert!(g.is_threshold());
    }

    #[test]
    fn decode_edge_cases() {
        let (alphabet, decoder) = threshold_alphabet();
        assert_eq!(decode_letter_graph(&alphabet, &decoder, &[]).unwrap().order(), 0);
        let a = Alphabet::new(["a"]).unwrap();
        let clique = Decoder::from_pairs(1, &[(0, 0)]).unwrap();
        let k3 = decode_letter_graph(&a, &clique, &[0, 0, 0]).unwrap();
        assert_eq!(k3, SimpleGraph::family(Family::Complete, 3).unwrap());
        assert_eq!(
            decode_letter_graph(&a, &clique, &[0, 1]),
            Err(LetterError::LetterOutOfRange { letter: 1, size: 1 })
        );
        assert_eq!(a.parse_word("a z"), Err(LetterError::UnknownSymbol("z".into())));
    }

    #[test]
    fn complement_decoders() {
        assert_eq!(Decoder::empty(1).complement(), Decoder::from_pairs(1, &[(0, 0)]).unwrap());
        let (alphabet, decoder) = threshold_alphabet();
        let comp = decoder.complement();
        assert_eq!(comp.pairs().collect::<Vec<_>>(), vec![(0, 0), (1, 0)]);
        assert_eq!(comp.complement(), decoder);
        let word = alphabet.parse_word("i d d i d i").unwrap();
        assert_eq!(comp.decode(&word), decoder.decode(&word).complement());
    }

    #[test]
    fn p4_has_a_two_lettering() {
        let p4 = SimpleGraph::path(4);
        assert!(find_lettering(&p4, 1).is_none());
        let lz = find_lettering(&p4, 2).unwrap();
        assert!(lz.verify(&p4));
        assert_eq!(lz.alphabet.len(), 2);
        // the worked example: abab under {(a,b)}
        let abab = Decoder::from_pairs(2, &[(0, 1)]).unwrap().decode(&[0, 1, 0, 1]);
        assert!(abab.is_isomorphic(&p4).is_some());
    }

    #[test]
    fn three_k2_needs_three_letters() {
        let g = SimpleGraph::family(Family::Matching, 3).unwrap();
        assert!(find_lettering(&g, 2).is_none());
        assert!(find_lettering(&g, 3).unwrap().verify(&g));
    }

    #[test]
    fn single_vertex_and_cliques() {
        let k1 = SimpleGraph::new(1);
        let lz = find_lettering(&k1, 1).unwrap();
        assert!(lz.verify(&k1));
        assert_eq!(lettericity(&SimpleGraph::family(Family::Complete, 5).unwrap()), 1);
        assert_eq!(lettericity(&SimpleGraph::new(5)), 1);
        assert_eq!(lettericity(&SimpleGraph::new(0)), 0);
    }

    #[test]
    fn matchings_have_lettericity_m() {
        for m in 1..=3 {
            let g = SimpleGraph::family(Family::Matching, m).unwrap();
            assert_eq!(lettericity(&g), m, "{m}K2");
        }
    }

    #[test]
    fn verify_rejects_bad_iso() {
        let p4 = SimpleGraph::path(4);
        let mut lz = find_lettering(&p4, 2).unwrap();
        lz.iso.swap(0, 1);
        assert!(!lz.verify(&p4));
        lz.iso = vec![0, 0, 1, 2];
        assert!(!lz.verify(&p4));
    }

    #[test]
    fn lettering_text_round_trips_decoder() {
        let g = SimpleGraph::family(Family::Cycle, 5).unwrap();
        let lz = minimal_lettering(&g);
        assert!(lz.verify(&g));
        let text = lz.decoder.to_text(&lz.alphabet);
        assert_eq!(Decoder::parse(&text, &lz.alphabet).unwrap(), lz.decoder);
        assert!(lz.to_text().contains("word: "));
    }
}
