//! Geometric grid classes: standard figures, local orders, realizations and
//! the encoding of gridded permutations by words over the cell alphabet.

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::gridding::{GridMatrix, GriddedPermutation, SignedMatrix};
use crate::letters::Decoder;
use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("gridding and signs refer to different matrices")]
    MatrixMismatch,
    #[error("cell ({col}, {row}) is outside the matrix or has a zero entry")]
    ZeroCell { col: usize, row: usize },
    #[error("local orders are inconsistent")]
    Inconsistent,
    #[error("cannot parse cell token {0:?}; expected k.l with 1-based indices")]
    Parse(String),
    #[error("distances must increase strictly within (0, 1) and match the word length")]
    BadDistances,
}

/// One open unit diagonal of a standard figure, in lattice coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub cell: (usize, usize),
    pub from: (i64, i64),
    pub to: (i64, i64),
}

/// The diagonals of the nonzero cells, increasing for 1 and decreasing for −1.
pub fn standard_figure(m: &GridMatrix) -> Vec<Segment> {
    m.nonzero_cells()
        .into_iter()
        .map(|(c, r)| {
            let (x, y) = (c as i64, r as i64);
            let (from, to) = if m.get(c, r) == 1 {
                ((x, y), (x + 1, y + 1))
            } else {
                ((x, y + 1), (x + 1, y))
            };
            Segment { cell: (c, r), from, to }
        })
        .collect()
}

/// The corner of a cell from which distances along its diagonal are measured.
pub fn base_point(signs: &SignedMatrix, col: usize, row: usize) -> (i64, i64) {
    let x = if signs.col_sign(col) == 1 { col } else { col + 1 };
    let y = if signs.row_sign(row) == 1 { row } else { row + 1 };
    (x as i64, y as i64)
}

/// Column and row chains of a gridded permutation, each listed from least to
/// greatest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalOrders {
    len: usize,
    columns: Vec<Vec<usize>>,
    rows: Vec<Vec<usize>>,
}

impl LocalOrders {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn column(&self, col: usize) -> &[usize] {
        &self.columns[col]
    }

    pub fn row(&self, row: usize) -> &[usize] {
        &self.rows[row]
    }

    pub fn chains(&self) -> impl Iterator<Item = &[usize]> {
        self.columns.iter().chain(&self.rows).map(Vec::as_slice)
    }

    /// Covering pairs of the union of all chains, as edges of a DAG.
    fn arcs(&self) -> Vec<(usize, usize)> {
        self.chains()
            .flat_map(|c| c.windows(2).map(|w| (w[0], w[1])))
            .collect()
    }

    /// Whether `order` (a sequence of all indices) respects every chain.
    pub fn is_extension(&self, order: &[usize]) -> bool {
        let mut rank = vec![usize::MAX; self.len];
        for (r, &i) in order.iter().enumerate() {
            if i >= self.len || rank[i] != usize::MAX {
                return false;
            }
            rank[i] = r;
        }
        order.len() == self.len && self.arcs().iter().all(|&(a, b)| rank[a] < rank[b])
    }

    /// The cover relation of the poset generated by the chains, or `None`
    /// when the chains are inconsistent.
    pub fn hasse_edges(&self) -> Option<Vec<(usize, usize)>> {
        let order = self.consistency()?.order;
        let n = self.len;
        let mut rank = vec![0; n];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let mut succ = vec![vec![false; n]; n];
        for (a, b) in self.arcs() {
            succ[a][b] = true;
        }
        // closure in reverse topological order
        let mut below = vec![vec![false; n]; n];
        for &a in order.iter().rev() {
            for b in 0..n {
                if succ[a][b] {
                    below[a][b] = true;
                    let row = below[b].clone();
                    for (c, &x) in row.iter().enumerate() {
                        below[a][c] |= x;
                    }
                }
            }
        }
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if below[a][b] && !(0..n).any(|c| below[a][c] && below[c][b]) {
                    edges.push((a, b));
                }
            }
        }
        edges.sort_by_key(|&(a, b)| (rank[a], rank[b]));
        Some(edges)
    }

    /// A linear extension of the union of the chains, taking the smallest
    /// available index first, or `None` if the union has a cycle.
    pub fn consistency(&self) -> Option<Extension> {
        let n = self.len;
        let mut indeg = vec![0usize; n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (a, b) in self.arcs() {
            out[a].push(b);
            indeg[b] += 1;
        }
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&i| indeg[i] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(i)) = heap.pop() {
            order.push(i);
            for &j in &out[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    heap.push(Reverse(j));
                }
            }
        }
        (order.len() == n).then(|| Extension::from_order(order))
    }
}

/// A linear extension: `order` lists indices from first to last and `rank`
/// is its inverse, so `rank[i]` is the 0-based place of index `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub order: Vec<usize>,
    pub rank: Vec<usize>,
}

impl Extension {
    pub fn from_order(order: Vec<usize>) -> Self {
        let mut rank = vec![0; order.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        Extension { order, rank }
    }

    pub fn from_rank(rank: Vec<usize>) -> Self {
        let mut order = vec![0; rank.len()];
        for (i, &r) in rank.iter().enumerate() {
            order[r] = i;
        }
        Extension { order, rank }
    }
}

fn check_matrix(gp: &GriddedPermutation, signs: &SignedMatrix) -> Result<(), GeometryError> {
    if gp.matrix() == signs.matrix() {
        Ok(())
    } else {
        Err(GeometryError::MatrixMismatch)
    }
}

pub fn local_orders(gp: &GriddedPermutation, signs: &SignedMatrix) -> Result<LocalOrders, GeometryError> {
    check_matrix(gp, signs)?;
    let m = gp.matrix();
    let mut columns = Vec::with_capacity(m.cols());
    for col in 0..m.cols() {
        let mut chain: Vec<usize> = (gp.col_divs()[col]..gp.col_divs()[col + 1]).collect();
        if signs.col_sign(col) == -1 {
            chain.reverse();
        }
        columns.push(chain);
    }
    let inverse = gp.perm().inverse();
    let mut rows = Vec::with_capacity(m.rows());
    for row in 0..m.rows() {
        let mut chain: Vec<usize> = (gp.row_divs()[row]..gp.row_divs()[row + 1])
            .map(|v| inverse.value(v) - 1)
            .collect();
        if signs.row_sign(row) == -1 {
            chain.reverse();
        }
        rows.push(chain);
    }
    Ok(LocalOrders { len: gp.len(), columns, rows })
}

/// A drawing of a gridded permutation on the standard figure.
///
/// Coordinates are exact: point `i` sits at `points[i] / (n + 1)` in lattice
/// units, which places it at distance `(rank[i] + 1)·√2/(n + 1)` from the base
/// point of its cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    denom: i64,
    points: Vec<(i64, i64)>,
    cells: Vec<(usize, usize)>,
    extension: Extension,
}

impl Realization {
    fn place(signs: &SignedMatrix, cells: Vec<(usize, usize)>, extension: Extension) -> Self {
        let denom = cells.len() as i64 + 1;
        let dist: Vec<i64> = extension.rank.iter().map(|&r| r as i64 + 1).collect();
        Self::place_at(signs, cells, &dist, denom, extension)
    }

    fn place_at(
        signs: &SignedMatrix,
        cells: Vec<(usize, usize)>,
        dist: &[i64],
        denom: i64,
        extension: Extension,
    ) -> Self {
        let points = cells
            .iter()
            .zip(dist)
            .map(|(&(col, row), &d)| {
                let (bx, by) = base_point(signs, col, row);
                (
                    bx * denom + signs.col_sign(col) as i64 * d,
                    by * denom + signs.row_sign(row) as i64 * d,
                )
            })
            .collect();
        Realization { denom, points, cells, extension }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Common denominator of all coordinates.
    pub fn denominator(&self) -> i64 {
        self.denom
    }

    /// Numerators of the coordinates of the point for index `i`.
    pub fn exact_point(&self, i: usize) -> (i64, i64) {
        self.points[i]
    }

    pub fn point(&self, i: usize) -> (f64, f64) {
        let (x, y) = self.points[i];
        (x as f64 / self.denom as f64, y as f64 / self.denom as f64)
    }

    pub fn distance(&self, i: usize) -> f64 {
        (self.extension.rank[i] + 1) as f64 * std::f64::consts::SQRT_2 / self.denom as f64
    }

    pub fn cell(&self, i: usize) -> (usize, usize) {
        self.cells[i]
    }

    pub fn extension(&self) -> &Extension {
        &self.extension
    }

    /// Reads the drawing back as a gridded permutation, using only the point
    /// set: positions by x, values by y, and cells by the lattice squares.
    pub fn read_back(&self, matrix: &GridMatrix) -> GriddedPermutation {
        read_points(&self.points, self.denom, matrix)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("# index value x y (denominator {})\n", self.denom);
        let perm = self.read_back_perm();
        for i in 0..self.len() {
            let (x, y) = self.point(i);
            s.push_str(&format!("{} {} {:.6} {:.6}\n", i + 1, perm.value(i), x, y));
        }
        s
    }

    fn read_back_perm(&self) -> Permutation {
        let ys: Vec<i64> = self.points.iter().map(|p| p.1).collect();
        Permutation::standardize(&ys)
    }
}

fn read_points(points: &[(i64, i64)], denom: i64, matrix: &GridMatrix) -> GriddedPermutation {
    let mut by_x: Vec<(i64, i64)> = points.to_vec();
    by_x.sort();
    let ys: Vec<i64> = by_x.iter().map(|p| p.1).collect();
    let perm = Permutation::standardize(&ys);
    let mut col_counts = vec![0; matrix.cols()];
    let mut row_counts = vec![0; matrix.rows()];
    for &(x, y) in points {
        col_counts[(x / denom) as usize] += 1;
        row_counts[(y / denom) as usize] += 1;
    }
    let prefix = |counts: Vec<usize>| {
        let mut divs = vec![0];
        for c in counts {
            divs.push(divs.last().unwrap() + c);
        }
        divs
    };
    GriddedPermutation::new(perm, matrix.clone(), prefix(col_counts), prefix(row_counts))
        .expect("points on the standard figure form a valid gridding")
}

/// Draws `gp` on the standard figure, or returns `None` if its local orders
/// are inconsistent.
pub fn realize(gp: &GriddedPermutation, signs: &SignedMatrix) -> Result<Option<Realization>, GeometryError> {
    let orders = local_orders(gp, signs)?;
    Ok(orders.consistency().map(|ext| {
        let cells = (0..gp.len()).map(|i| gp.cell_of(i)).collect();
        Realization::place(signs, cells, ext)
    }))
}

/// A word over the cell alphabet; letters are 0-based `(col, row)` cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellWord(pub Vec<(usize, usize)>);

impl CellWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every word of length `len` over `cells`, in lexicographic order of
    /// letter indices.
    pub fn all(cells: &[(usize, usize)], len: usize) -> Vec<CellWord> {
        let mut out = vec![CellWord::default()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    cells.iter().map(move |&c| {
                        let mut v = w.0.clone();
                        v.push(c);
                        CellWord(v)
                    })
                })
                .collect();
        }
        out
    }
}

/// Tokens `k.l` with 1-based column and row.
impl fmt::Display for CellWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.0.iter().map(|(c, r)| format!("{}.{}", c + 1, r + 1)).collect();
        f.write_str(&tokens.join(" "))
    }
}

impl FromStr for CellWord {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split_whitespace()
            .map(|t| {
                let bad = || GeometryError::Parse(t.to_string());
                let (k, l) = t.split_once('.').ok_or_else(bad)?;
                let k: usize = k.parse().map_err(|_| bad())?;
                let l: usize = l.parse().map_err(|_| bad())?;
                if k == 0 || l == 0 {
                    return Err(bad());
                }
                Ok((k - 1, l - 1))
            })
            .collect::<Result<_, _>>()
            .map(CellWord)
    }
}

/// The gridded permutation obtained by placing the `p`-th letter's point at
/// distance `d_p` from the base point of its cell.
pub fn decode_word(word: &CellWord, signs: &SignedMatrix) -> Result<GriddedPermutation, GeometryError> {
    decode_word_indexed(word, signs).map(|(gp, _)| gp)
}

/// As [`decode_word`], with letter `p` placed at distance
/// `distances[p]·√2/denom`. Distances must be strictly increasing and lie
/// strictly between 0 and `denom`.
pub fn decode_word_at(
    word: &CellWord,
    signs: &SignedMatrix,
    distances: &[i64],
    denom: i64,
) -> Result<GriddedPermutation, GeometryError> {
    check_word(word, signs)?;
    let ok = distances.len() == word.len()
        && distances.windows(2).all(|w| w[0] < w[1])
        && distances.first().is_none_or(|&d| d > 0)
        && distances.last().is_none_or(|&d| d < denom);
    if !ok {
        return Err(GeometryError::BadDistances);
    }
    let ext = Extension::from_order((0..word.len()).collect());
    let r = Realization::place_at(signs, word.0.clone(), distances, denom, ext);
    Ok(r.read_back(signs.matrix()))
}

fn check_word(word: &CellWord, signs: &SignedMatrix) -> Result<(), GeometryError> {
    let m = signs.matrix();
    for &(col, row) in &word.0 {
        if col >= m.cols() || row >= m.rows() || m.get(col, row) == 0 {
            return Err(GeometryError::ZeroCell { col, row });
        }
    }
    Ok(())
}

/// As [`decode_word`], also returning the position in the permutation of the
/// entry produced by each letter.
pub fn decode_word_indexed(
    word: &CellWord,
    signs: &SignedMatrix,
) -> Result<(GriddedPermutation, Vec<usize>), GeometryError> {
    check_word(word, signs)?;
    let m = signs.matrix();
    let ext = Extension::from_order((0..word.len()).collect());
    let r = Realization::place(signs, word.0.clone(), ext);
    let mut by_x: Vec<usize> = (0..word.len()).collect();
    by_x.sort_by_key(|&p| r.points[p].0);
    let mut position = vec![0; word.len()];
    for (i, &p) in by_x.iter().enumerate() {
        position[p] = i;
    }
    Ok((r.read_back(m), position))
}

/// A word `w` with `decode_word(w) == gp`, read off the least linear extension
/// of the local orders.
pub fn encode_gridded(gp: &GriddedPermutation, signs: &SignedMatrix) -> Result<CellWord, GeometryError> {
    let ext = local_orders(gp, signs)?.consistency().ok_or(GeometryError::Inconsistent)?;
    Ok(CellWord(ext.order.iter().map(|&i| gp.cell_of(i)).collect()))
}

/// A geometric gridding of `pi` found by searching monotone griddings of the
/// PMM form of `m` under every admissible choice of signs.
#[derive(Clone, Debug)]
pub struct GeometricWitness {
    pub signs: SignedMatrix,
    pub gridding: GriddedPermutation,
    pub realization: Realization,
}

pub fn geom_witness(pi: &Permutation, m: &GridMatrix) -> Option<GeometricWitness> {
    let pmm = if m.is_pmm() { m.clone() } else { m.double() };
    let sign_choices = pmm.all_pmm_signs();
    let mut found = None;
    pmm.for_each_gridding(pi, &mut |gp| {
        for signs in &sign_choices {
            if let Some(realization) = realize(&gp, signs).expect("same matrix") {
                found = Some(GeometricWitness { signs: signs.clone(), gridding: gp, realization });
                return false;
            }
        }
        true
    });
    found
}

pub fn geom_member(pi: &Permutation, m: &GridMatrix) -> bool {
    geom_witness(pi, m).is_some()
}

/// The letters `a_{kℓ}` of a PMM, one per nonzero cell, with the decoder
/// whose letter graphs are the inversion graphs of decoded words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDecoder {
    pub cells: Vec<(usize, usize)>,
    pub decoder: Decoder,
}

impl CellDecoder {
    pub fn letter(&self, cell: (usize, usize)) -> Option<usize> {
        self.cells.iter().position(|&c| c == cell)
    }

    pub fn letters(&self, word: &CellWord) -> Option<Vec<usize>> {
        word.0.iter().map(|&c| self.letter(c)).collect()
    }
}

pub fn derive_decoder(signs: &SignedMatrix) -> CellDecoder {
    let m = signs.matrix();
    let cells = m.nonzero_cells();
    let mut decoder = Decoder::empty(cells.len());
    for (a, &(k, l)) in cells.iter().enumerate() {
        for (b, &(k2, l2)) in cells.iter().enumerate() {
            // (a, b): an earlier point in cell a, a later point in cell b
            let edge = if (k, l) == (k2, l2) {
                m.get(k, l) == -1
            } else if k == k2 {
                // the later point sits further along the column direction
                (l2 < l) == (signs.col_sign(k) == 1)
            } else if l == l2 {
                (k2 < k) == (signs.row_sign(l) == 1)
            } else {
                (k < k2) != (l < l2)
            };
            if edge {
                decoder.insert(a, b);
            }
        }
    }
    CellDecoder { cells, decoder }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn staircase() -> SignedMatrix {
        let m = GridMatrix::from_display(&[vec![-1, 1, 1], vec![0, -1, -1]]).unwrap();
        SignedMatrix::new(m, vec![1, -1, -1], vec![1, -1]).unwrap()
    }

    fn staircase_gridding() -> GriddedPermutation {
        GriddedPermutation::new(p("6437251"), staircase().matrix().clone(), vec![0, 2, 4, 7], vec![0, 3, 7])
            .unwrap()
    }

    fn one_based(chain: &[usize]) -> Vec<usize> {
        chain.iter().map(|i| i + 1).collect()
    }

    #[test]
    fn staircase_local_orders() {
        let lo = local_orders(&staircase_gridding(), &staircase()).unwrap();
        assert_eq!(one_based(lo.column(0)), vec![1, 2]);
        assert_eq!(one_based(lo.column(1)), vec![4, 3]);
        assert_eq!(one_based(lo.column(2)), vec![7, 6, 5]);
        assert_eq!(one_based(lo.row(0)), vec![7, 5, 3]);
        assert_eq!(one_based(lo.row(1)), vec![4, 1, 6, 2]);
        let ext = lo.consistency().unwrap();
        assert_eq!(one_based(&ext.order), vec![4, 1, 7, 6, 2, 5, 3]);
        assert!(lo.is_extension(&[3, 0, 6, 5, 4, 1, 2]));
        assert!(!lo.is_extension(&[0, 3, 6, 5, 4, 1, 2]));
    }

    #[test]
    fn staircase_hasse_diagram() {
        let edges = local_orders(&staircase_gridding(), &staircase()).unwrap().hasse_edges().unwrap();
        let mut edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect();
        edges.sort();
        // 1<2 and 4<3 are implied by the row chains through 6 and 7
        assert_eq!(edges, vec![(1, 6), (4, 1), (5, 3), (6, 2), (6, 5), (7, 6)]);
    }

    #[test]
    fn trivial_local_orders() {
        let m = GridMatrix::from_display(&[vec![1]]).unwrap();
        let signs = m.pmm_signs().unwrap();
        let gp = m.find_gridding(&Permutation::identity(3)).unwrap();
        let lo = local_orders(&gp, &signs).unwrap();
        assert_eq!(lo.column(0), lo.row(0));
        assert_eq!(lo.column(0), &[0, 1, 2]);
        let empty = m.find_gridding(&Permutation::default()).unwrap();
        let lo = local_orders(&empty, &signs).unwrap();
        assert!(lo.chains().all(|c| c.is_empty()));
        assert_eq!(lo.consistency().unwrap().order, Vec::<usize>::new());
    }

    #[test]
    fn mismatched_matrices_are_rejected() {
        let gp = staircase_gridding();
        let x = GridMatrix::x().pmm_signs().unwrap();
        assert_eq!(local_orders(&gp, &x), Err(GeometryError::MatrixMismatch));
    }

    #[test]
    fn no_gridding_of_3142_on_x_is_consistent() {
        let x = GridMatrix::x();
        let griddings = x.all_griddings(&p("3142"));
        assert!(!griddings.is_empty());
        for signs in x.all_pmm_signs() {
            for gp in &griddings {
                assert!(local_orders(gp, &signs).unwrap().consistency().is_none());
                assert_eq!(realize(gp, &signs).unwrap(), None);
            }
        }
        assert!(!geom_member(&p("3142"), &x));
    }

    #[test]
    fn staircase_realization_reads_back() {
        let r = realize(&staircase_gridding(), &staircase()).unwrap().unwrap();
        assert_eq!(r.read_back(staircase().matrix()), staircase_gridding());
        assert_eq!(r.denominator(), 8);
        // index 4 (value 7) is first in the extension, in cell (2,2) based at (2,2)
        assert_eq!(r.exact_point(3), (2 * 8 - 1, 2 * 8 - 1));
        assert!((r.distance(3) - std::f64::consts::SQRT_2 / 8.0).abs() < 1e-12);
    }

    #[test]
    fn single_point_sits_midway() {
        let m = GridMatrix::from_display(&[vec![1]]).unwrap();
        let gp = m.find_gridding(&p("1")).unwrap();
        let r = realize(&gp, &m.pmm_signs().unwrap()).unwrap().unwrap();
        assert_eq!(r.point(0), (0.5, 0.5));
        assert!((r.distance(0) - std::f64::consts::SQRT_2 / 2.0).abs() < 1e-12);
    }

    #[test]
    fn single_cell_words() {
        let inc = GridMatrix::from_display(&[vec![1]]).unwrap().pmm_signs().unwrap();
        let dec = GridMatrix::from_display(&[vec![-1]]).unwrap().pmm_signs().unwrap();
        let aaa: CellWord = "1.1 1.1 1.1".parse().unwrap();
        assert_eq!(decode_word(&aaa, &inc).unwrap().perm(), &p("123"));
        assert_eq!(decode_word(&aaa, &dec).unwrap().perm(), &p("321"));
        let gp = decode_word(&aaa, &inc).unwrap();
        assert_eq!(encode_gridded(&gp, &inc).unwrap(), aaa);
        assert_eq!(
            decode_word(&"2.1".parse().unwrap(), &inc),
            Err(GeometryError::ZeroCell { col: 1, row: 0 })
        );
    }

    #[test]
    fn staircase_word_decodes_to_its_gridding() {
        // cells of indices 4,1,7,6,5,2,3 in turn
        let w: CellWord = "2.2 1.2 3.1 3.2 3.1 1.2 2.1".parse().unwrap();
        assert_eq!(w.to_string(), "2.2 1.2 3.1 3.2 3.1 1.2 2.1");
        let gp = decode_word(&w, &staircase()).unwrap();
        assert_eq!(gp, staircase_gridding());
        let again = encode_gridded(&gp, &staircase()).unwrap();
        assert_eq!(decode_word(&again, &staircase()).unwrap(), gp);
    }

    #[test]
    fn cell_word_parse_errors() {
        assert!("1.1 2".parse::<CellWord>().is_err());
        assert!("0.1".parse::<CellWord>().is_err());
        assert!("a.b".parse::<CellWord>().is_err());
        assert_eq!("".parse::<CellWord>().unwrap(), CellWord::default());
    }

    #[test]
    fn membership_examples() {
        let m = staircase().matrix().clone();
        assert!(geom_member(&p("6437251"), &m));
        assert!(geom_member(&p("524361"), &GridMatrix::x()));
        assert!(geom_member(&Permutation::default(), &GridMatrix::x()));
        // not a PMM, so the search runs on the doubled matrix
        let not_pmm = GridMatrix::from_display(&[vec![1, -1], vec![1, 1]]).unwrap();
        let w = geom_witness(&p("2413"), &not_pmm);
        if let Some(w) = w {
            assert_eq!(w.signs.matrix(), &not_pmm.double());
        }
    }

    #[test]
    fn single_cell_decoders() {
        let dec = derive_decoder(&GridMatrix::from_display(&[vec![-1]]).unwrap().pmm_signs().unwrap());
        assert_eq!(dec.decoder.pairs().collect::<Vec<_>>(), vec![(0, 0)]);
        let inc = derive_decoder(&GridMatrix::from_display(&[vec![1]]).unwrap().pmm_signs().unwrap());
        assert_eq!(inc.decoder.pairs().count(), 0);
    }

    #[test]
    fn staircase_decoder_matches_inversions() {
        let signs = staircase();
        let cd = derive_decoder(&signs);
        for w in CellWord::all(&cd.cells, 4) {
            let (gp, position) = decode_word_indexed(&w, &signs).unwrap();
            let g = cd.decoder.decode(&cd.letters(&w).unwrap());
            let inv = gp.perm().inversion_graph();
            for a in 0..w.len() {
                for b in a + 1..w.len() {
                    assert_eq!(g.has_edge(a, b), inv.has_edge(position[a], position[b]), "{w}");
                }
            }
        }
    }

    #[test]
    fn standard_figure_segments() {
        let segs = standard_figure(staircase().matrix());
        assert_eq!(segs.len(), 5);
        let first = segs[0];
        assert_eq!(first.cell, (0, 1));
        assert_eq!((first.from, first.to), ((0, 2), (1, 1)));
        assert!(standard_figure(&GridMatrix::zeros(2, 2)).is_empty());
    }

    #[test]
    fn explicit_distances() {
        let signs = staircase();
        let w: CellWord = "2.2 1.2 3.1 3.2 3.1 1.2 2.1".parse().unwrap();
        let even = decode_word(&w, &signs).unwrap();
        assert_eq!(decode_word_at(&w, &signs, &[1, 2, 5, 6, 9, 30, 31], 40).unwrap(), even);
        assert_eq!(decode_word_at(&w, &signs, &[1, 2, 3], 40), Err(GeometryError::BadDistances));
        let ws = CellWord(w.0[..2].to_vec());
        assert_eq!(decode_word_at(&ws, &signs, &[2, 2], 40), Err(GeometryError::BadDistances));
        assert_eq!(decode_word_at(&ws, &signs, &[1, 40], 40), Err(GeometryError::BadDistances));
        assert_eq!(decode_word_at(&ws, &signs, &[0, 3], 40), Err(GeometryError::BadDistances));
    }
}
