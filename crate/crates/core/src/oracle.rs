//! Brute-force reference implementations for tests and acceptance runs.
//!
//! Nothing here calls the searches it is used to check: enumeration is
//! exhaustive and written independently of `letters`, `gridding` and
//! `geometry`.

use itertools::Itertools;

use crate::graphs::SimpleGraph;
use crate::gridding::{GridMatrix, GriddedPermutation, SignedMatrix};
use crate::perm::Permutation;

pub const LETTERICITY_MAX_ORDER: usize = 8;
pub const GEOM_MAX_LEN: usize = 7;
pub const CONTAINMENT_MAX_LEN: usize = 9;

/// Smallest `k` such that some word over `k` letters and some decoder
/// realize `g`.
///
/// Every placement of the vertices along a word (all `n!` orders) is paired
/// with every word in first-occurrence normal form; the pair succeeds when
/// the letter pairs it sees never demand both an edge and a non-edge.
/// Enumerating decoders and checking isomorphism is the same search seen
/// from the other side.
pub fn lettericity_oracle(g: &SimpleGraph) -> usize {
    let n = g.order();
    assert!(n <= LETTERICITY_MAX_ORDER, "oracle capped at {LETTERICITY_MAX_ORDER} vertices");
    if n == 0 {
        return 0;
    }
    let orders: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    for k in 1..=n {
        let words = normal_words(n, k);
        for order in &orders {
            for w in &words {
                if realizes(g, order, w, k) {
                    return k;
                }
            }
        }
    }
    unreachable!("n distinct letters realize any graph on n vertices")
}

/// Words of length `n` over `0..k` in which each letter first appears after
/// all smaller letters.
fn normal_words(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    fn go(n: usize, k: usize, used: usize, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if word.len() == n {
            out.push(word.clone());
            return;
        }
        for a in 0..(used + 1).min(k) {
            word.push(a);
            go(n, k, used.max(a + 1), word, out);
            word.pop();
        }
    }
    go(n, k, 0, &mut word, &mut out);
    out
}

/// Whether placing `order[p]` at word position `p` admits a decoder.
fn realizes(g: &SimpleGraph, order: &[usize], w: &[usize], k: usize) -> bool {
    let mut forced: Vec<Option<bool>> = vec![None; k * k];
    for p in 0..order.len() {
        for q in p + 1..order.len() {
            let edge = g.has_edge(order[p], order[q]);
            let slot = &mut forced[w[p] * k + w[q]];
            match *slot {
                None => *slot = Some(edge),
                Some(e) if e != edge => return false,
                Some(_) => {}
            }
        }
    }
    true
}

/// Whether `pi` can be drawn on the standard figure of `m`, by trying every
/// gridding against every choice of signs.
pub fn geom_member_oracle(pi: &Permutation, m: &GridMatrix) -> bool {
    assert!(pi.len() <= GEOM_MAX_LEN, "oracle capped at length {GEOM_MAX_LEN}");
    let mut signs = sign_vectors(m);
    let matrix = if signs.is_empty() {
        let d = m.double();
        signs = sign_vectors(&d);
        d
    } else {
        m.clone()
    };
    let values: Vec<usize> = pi.values().to_vec();
    let n = values.len();
    let mut found = false;
    for cols in division_tuples(n, matrix.cols()) {
        each_row_tuple(&values, &matrix, &cols, &mut |rows| {
            found = signs.iter().any(|(c, r)| acyclic(&values, &cols, rows, c, r));
            !found
        });
        if found {
            return true;
        }
    }
    false
}

/// Every `(col_signs, row_signs)` with `m(k, l) = c_k r_l` on nonzero cells.
fn sign_vectors(m: &GridMatrix) -> Vec<(Vec<i8>, Vec<i8>)> {
    let (t, u) = (m.cols(), m.rows());
    let mut out = Vec::new();
    for mask in 0u64..1 << (t + u) {
        let s = |b: usize| if mask >> b & 1 == 1 { -1i8 } else { 1 };
        let c: Vec<i8> = (0..t).map(s).collect();
        let r: Vec<i8> = (0..u).map(|l| s(t + l)).collect();
        let ok = (0..t).all(|k| (0..u).all(|l| m.get(k, l) == 0 || m.get(k, l) == c[k] * r[l]));
        if ok {
            out.push((c, r));
        }
    }
    out
}

/// All `0 = d_0 <= d_1 <= ... <= d_parts = n`.
fn division_tuples(n: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0];
    fn go(n: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == parts {
            let mut t = cur.clone();
            t.push(n);
            out.push(t);
            return;
        }
        for d in *cur.last().unwrap()..=n {
            cur.push(d);
            go(n, parts, cur, out);
            cur.pop();
        }
    }
    if parts == 0 {
        if n == 0 {
            out.push(vec![0]);
        }
        return out;
    }
    go(n, parts, &mut cur, &mut out);
    out
}

/// Calls `visit` with every row division tuple that makes a valid gridding
/// together with `cols`, abandoning a prefix as soon as a completed row has
/// a bad cell. Stops when `visit` returns false.
fn each_row_tuple(
    values: &[usize],
    m: &GridMatrix,
    cols: &[usize],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let n = values.len();
    let mut rows = vec![0];
    fn go(
        values: &[usize],
        m: &GridMatrix,
        cols: &[usize],
        rows: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = values.len();
        let l = rows.len() - 1;
        if l == m.rows() {
            return *rows.last().unwrap() != n || visit(rows);
        }
        let lo = *rows.last().unwrap();
        let choices: Vec<usize> = if l + 1 == m.rows() { vec![n] } else { (lo..=n).collect() };
        for hi in choices {
            if hi < lo {
                continue;
            }
            let row_ok = (0..m.cols()).all(|k| cell_fits(values, cols[k]..cols[k + 1], lo..hi, m.get(k, l)));
            if !row_ok {
                continue;
            }
            rows.push(hi);
            let go_on = go(values, m, cols, rows, visit);
            rows.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    if m.rows() == 0 {
        return n != 0 || visit(&rows);
    }
    go(values, m, cols, &mut rows, visit)
}

fn cell_fits(values: &[usize], pos: std::ops::Range<usize>, vals: std::ops::Range<usize>, entry: i8) -> bool {
    let inside: Vec<usize> = pos.filter_map(|i| Some(values[i] - 1).filter(|v| vals.contains(v))).collect();
    match entry {
        0 => inside.is_empty(),
        1 => inside.windows(2).all(|w| w[0] < w[1]),
        _ => inside.windows(2).all(|w| w[0] > w[1]),
    }
}

/// Whether the local orders of `gp` under `signs` are consistent, decided by
/// transitive closure rather than topological sorting.
pub fn consistent_oracle(gp: &GriddedPermutation, signs: &SignedMatrix) -> bool {
    acyclic(gp.perm().values(), gp.col_divs(), gp.row_divs(), signs.col_signs(), signs.row_signs())
}

/// Whether the union of the column and row orders is acyclic, by transitive
/// closure of the full relation.
fn acyclic(values: &[usize], cols: &[usize], rows: &[usize], c: &[i8], r: &[i8]) -> bool {
    let n = values.len();
    let band = |divs: &[usize], x: usize| (0..divs.len() - 1).find(|&b| divs[b] <= x && x < divs[b + 1]).unwrap();
    let col: Vec<usize> = (0..n).map(|i| band(cols, i)).collect();
    let row: Vec<usize> = (0..n).map(|i| band(rows, values[i] - 1)).collect();
    let mut before = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if col[i] == col[j] && (c[col[i]] == 1) == (i < j) {
                before[i][j] = true;
            }
            if row[i] == row[j] && (r[row[i]] == 1) == (values[i] < values[j]) {
                before[i][j] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if before[i][k] {
                for j in 0..n {
                    if before[k][j] {
                        before[i][j] = true;
                    }
                }
            }
        }
    }
    (0..n).all(|i| !before[i][i])
}

/// Whether some `|sigma|` entries of `pi` are order isomorphic to `sigma`,
/// checking every subset of positions.
pub fn containment_oracle(pi: &Permutation, sigma: &Permutation) -> bool {
    assert!(pi.len() <= CONTAINMENT_MAX_LEN, "oracle capped at length {CONTAINMENT_MAX_LEN}");
    let (p, s) = (pi.values(), sigma.values());
    (0..p.len()).combinations(s.len()).any(|idx| {
        (0..s.len()).all(|a| (0..s.len()).all(|b| (p[idx[a]] < p[idx[b]]) == (s[a] < s[b])))
    })
}
