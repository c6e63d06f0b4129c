//! 0/±1 matrices, monotone griddings, and partial multiplication matrices.
//!
//! Matrices are indexed in cartesian coordinates: `get(col, row)` with
//! column 0 on the left and row 0 at the bottom. The text format lists rows
//! top first, as matrices are usually displayed.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

use crate::perm::{co_matching_pattern, matching_pattern, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GriddingError {
    #[error("matrix entry {0} is not -1, 0 or 1")]
    BadEntry(i64),
    #[error("matrix rows have different lengths")]
    Ragged,
    #[error("line {line}: cannot parse matrix entry {text:?}")]
    Parse { line: usize, text: String },
    #[error("signs do not factor the matrix at cell ({col}, {row})")]
    SignMismatch { col: usize, row: usize },
    #[error("expected {expected} divisions, got {got}")]
    DivisionCount { expected: usize, got: usize },
    #[error("divisions must run from 0 to {n} without decreasing: {divs:?}")]
    BadDivisions { n: usize, divs: Vec<usize> },
    #[error("cell ({col}, {row}) does not match its matrix entry")]
    CellNotMonotone { col: usize, row: usize },
}

/// A `cols × rows` matrix with entries in {−1, 0, 1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GridMatrix {
    cols: usize,
    rows: usize,
    /// `entries[row * cols + col]`
    entries: Vec<i8>,
}

impl GridMatrix {
    pub fn zeros(cols: usize, rows: usize) -> Self {
        GridMatrix { cols, rows, entries: vec![0; cols * rows] }
    }

    pub fn from_fn(cols: usize, rows: usize, mut f: impl FnMut(usize, usize) -> i8) -> Self {
        let mut m = GridMatrix::zeros(cols, rows);
        for row in 0..rows {
            for col in 0..cols {
                m.set(col, row, f(col, row));
            }
        }
        m
    }

    /// Builds a matrix from rows listed top first.
    pub fn from_display(display: &[Vec<i8>]) -> Result<Self, GriddingError> {
        let rows = display.len();
        let cols = display.first().map_or(0, Vec::len);
        if display.iter().any(|r| r.len() != cols) {
            return Err(GriddingError::Ragged);
        }
        if let Some(&e) = display.iter().flatten().find(|e| !(-1..=1).contains(*e)) {
            return Err(GriddingError::BadEntry(e as i64));
        }
        Ok(GridMatrix::from_fn(cols, rows, |c, r| display[rows - 1 - r][c]))
    }

    /// The matrix `[-1 1; 1 -1]`, whose cells draw an X.
    pub fn x() -> Self {
        GridMatrix::from_display(&[vec![-1, 1], vec![1, -1]]).unwrap()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn get(&self, col: usize, row: usize) -> i8 {
        self.entries[row * self.cols + col]
    }

    /// Panics unless `value` is −1, 0 or 1.
    pub fn set(&mut self, col: usize, row: usize, value: i8) {
        assert!((-1..=1).contains(&value));
        self.entries[row * self.cols + col] = value;
    }

    /// Nonzero cells, ordered by column and then row.
    pub fn nonzero_cells(&self) -> Vec<(usize, usize)> {
        (0..self.cols)
            .cartesian_product(0..self.rows)
            .filter(|&(c, r)| self.get(c, r) != 0)
            .collect()
    }

    pub fn display_rows(&self) -> Vec<Vec<i8>> {
        (0..self.rows)
            .rev()
            .map(|r| (0..self.cols).map(|c| self.get(c, r)).collect())
            .collect()
    }

    pub fn to_text(&self) -> String {
        self.display_rows()
            .iter()
            .map(|r| r.iter().join(" ") + "\n")
            .collect()
    }

    /// Column and row signs factoring every nonzero entry, if any exist.
    /// Unconstrained signs are +1.
    pub fn pmm_signs(&self) -> Option<SignedMatrix> {
        let mut col_signs: Vec<Option<i8>> = vec![None; self.cols];
        let mut row_signs: Vec<Option<i8>> = vec![None; self.rows];
        // 2-colour each connected component of the bipartite column/row graph
        for start in 0..self.cols {
            if col_signs[start].is_some() {
                continue;
            }
            col_signs[start] = Some(1);
            let mut stack = vec![(true, start)];
            while let Some((is_col, idx)) = stack.pop() {
                if is_col {
                    let c = col_signs[idx].unwrap();
                    for row in 0..self.rows {
                        let e = self.get(idx, row);
                        if e == 0 {
                            continue;
                        }
                        match row_signs[row] {
                            None => {
                                row_signs[row] = Some(e * c);
                                stack.push((false, row));
                            }
                            Some(r) if r * c != e => return None,
                            Some(_) => {}
                        }
                    }
                } else {
                    let r = row_signs[idx].unwrap();
                    for col in 0..self.cols {
                        let e = self.get(col, idx);
                        if e == 0 {
                            continue;
                        }
                        match col_signs[col] {
                            None => {
                                col_signs[col] = Some(e * r);
                                stack.push((true, col));
                            }
                            Some(c) if r * c != e => return None,
                            Some(_) => {}
                        }
                    }
                }
            }
        }
        Some(SignedMatrix {
            matrix: self.clone(),
            col_signs: col_signs.into_iter().map(|s| s.unwrap_or(1)).collect(),
            row_signs: row_signs.into_iter().map(|s| s.unwrap_or(1)).collect(),
        })
    }

    pub fn is_pmm(&self) -> bool {
        self.pmm_signs().is_some()
    }

    /// Every sign vector that factors the matrix, by exhaustive enumeration.
    pub fn all_pmm_signs(&self) -> Vec<SignedMatrix> {
        let bits = self.cols + self.rows;
        assert!(bits < 24, "exhaustive sign enumeration capped at 23 lines");
        (0u32..1 << bits)
            .filter_map(|mask| {
                let sign = |i: usize| if mask >> i & 1 == 1 { -1 } else { 1 };
                let col_signs = (0..self.cols).map(sign).collect();
                let row_signs = (0..self.rows).map(|r| sign(self.cols + r)).collect();
                SignedMatrix::new(self.clone(), col_signs, row_signs).ok()
            })
            .collect()
    }

    /// The `2t × 2u` matrix obtained by substituting `2 × 2` blocks: zero for
    /// 0, the increasing diagonal for 1, the decreasing diagonal for −1.
    pub fn double(&self) -> GridMatrix {
        let mut m = GridMatrix::zeros(2 * self.cols, 2 * self.rows);
        for (c, r) in self.nonzero_cells() {
            match self.get(c, r) {
                1 => {
                    m.set(2 * c, 2 * r, 1);
                    m.set(2 * c + 1, 2 * r + 1, 1);
                }
                _ => {
                    m.set(2 * c, 2 * r + 1, -1);
                    m.set(2 * c + 1, 2 * r, -1);
                }
            }
        }
        m
    }

    /// A PMM form of this matrix with the same geometric grid class: the
    /// matrix itself when it has signs, otherwise its double.
    pub fn pmm_form(&self) -> SignedMatrix {
        self.pmm_signs()
            .unwrap_or_else(|| self.double().pmm_signs().expect("doubled matrices are PMMs"))
    }

    /// Whether `pi` has an `M`-gridding whose entries satisfy `allowed`.
    pub fn find_gridding(&self, pi: &Permutation) -> Option<GriddedPermutation> {
        let mut found = None;
        self.for_each_gridding(pi, &mut |gp| {
            found = Some(gp);
            false
        });
        found
    }

    pub fn all_griddings(&self, pi: &Permutation) -> Vec<GriddedPermutation> {
        let mut out = Vec::new();
        self.for_each_gridding(pi, &mut |gp| {
            out.push(gp);
            true
        });
        out
    }

    /// Visits valid griddings in lexicographic order of (column divisions,
    /// row divisions) until `visit` returns false.
    pub fn for_each_gridding(
        &self,
        pi: &Permutation,
        visit: &mut dyn FnMut(GriddedPermutation) -> bool,
    ) {
        let mut search = GridSearch {
            matrix: self,
            perm: pi,
            col_divs: vec![0],
            row_divs: vec![0],
            visit,
        };
        search.cols();
    }
}

struct GridSearch<'a> {
    matrix: &'a GridMatrix,
    perm: &'a Permutation,
    col_divs: Vec<usize>,
    row_divs: Vec<usize>,
    visit: &'a mut dyn FnMut(GriddedPermutation) -> bool,
}

impl GridSearch<'_> {
    fn zero_col(&self, c: usize) -> bool {
        (0..self.matrix.rows).all(|r| self.matrix.get(c, r) == 0)
    }

    fn zero_row(&self, r: usize) -> bool {
        (0..self.matrix.cols).all(|c| self.matrix.get(c, r) == 0)
    }

    /// Returns false once the visitor asks to stop.
    fn cols(&mut self) -> bool {
        let n = self.perm.len();
        let k = self.col_divs.len() - 1;
        let prev = self.col_divs[k];
        if k == self.matrix.cols {
            return prev != n || self.rows();
        }
        let hi = if k + 1 == self.matrix.cols { n } else if self.zero_col(k) { prev } else { n };
        let lo = if k + 1 == self.matrix.cols { n } else { prev };
        if lo > hi || (self.zero_col(k) && lo != prev) {
            return true;
        }
        for next in lo..=hi {
            self.col_divs.push(next);
            let go_on = self.cols();
            self.col_divs.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    fn rows(&mut self) -> bool {
        let n = self.perm.len();
        let l = self.row_divs.len() - 1;
        let prev = self.row_divs[l];
        if l == self.matrix.rows {
            if prev != n {
                return true;
            }
            let gp = GriddedPermutation {
                perm: self.perm.clone(),
                matrix: self.matrix.clone(),
                col_divs: self.col_divs.clone(),
                row_divs: self.row_divs.clone(),
            };
            return (self.visit)(gp);
        }
        let last = l + 1 == self.matrix.rows;
        let lo = if last { n } else { prev };
        let hi = if last { n } else if self.zero_row(l) { prev } else { n };
        if lo > hi || (self.zero_row(l) && lo != prev) {
            return true;
        }
        for next in lo..=hi {
            let ok = (0..self.matrix.cols).all(|c| {
                cell_ok(
                    self.perm,
                    self.col_divs[c]..self.col_divs[c + 1],
                    prev..next,
                    self.matrix.get(c, l),
                )
            });
            if !ok {
                continue;
            }
            self.row_divs.push(next);
            let go_on = self.rows();
            self.row_divs.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Whether the entries at `positions` with 0-based values in `values` form a
/// sequence matching `entry` (increasing, decreasing, or empty).
fn cell_ok(
    pi: &Permutation,
    positions: std::ops::Range<usize>,
    values: std::ops::Range<usize>,
    entry: i8,
) -> bool {
    let mut last: Option<usize> = None;
    for i in positions {
        let v = pi.value(i) - 1;
        if !values.contains(&v) {
            continue;
        }
        match (entry, last) {
            (0, _) => return false,
            (1, Some(prev)) if v < prev => return false,
            (-1, Some(prev)) if v > prev => return false,
            _ => {}
        }
        last = Some(v);
    }
    true
}

impl fmt::Debug for GridMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GridMatrix{:?}", self.display_rows())
    }
}

/// Text form: one line per row, top row first, entries from {−1, 0, 1}.
impl FromStr for GridMatrix {
    type Err = GriddingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut display = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<i8>()
                        .map_err(|_| GriddingError::Parse { line: i + 1, text: t.to_string() })
                })
                .collect::<Result<Vec<i8>, _>>()?;
            display.push(row);
        }
        GridMatrix::from_display(&display)
    }
}

/// A partial multiplication matrix with explicit column and row signs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedMatrix {
    matrix: GridMatrix,
    col_signs: Vec<i8>,
    row_signs: Vec<i8>,
}

impl SignedMatrix {
    pub fn new(matrix: GridMatrix, col_signs: Vec<i8>, row_signs: Vec<i8>) -> Result<Self, GriddingError> {
        if col_signs.len() != matrix.cols || row_signs.len() != matrix.rows {
            return Err(GriddingError::DivisionCount {
                expected: matrix.cols + matrix.rows,
                got: col_signs.len() + row_signs.len(),
            });
        }
        if let Some(&s) = col_signs.iter().chain(&row_signs).find(|&&s| s != 1 && s != -1) {
            return Err(GriddingError::BadEntry(s as i64));
        }
        for (col, row) in matrix.nonzero_cells() {
            if matrix.get(col, row) != col_signs[col] * row_signs[row] {
                return Err(GriddingError::SignMismatch { col, row });
            }
        }
        Ok(SignedMatrix { matrix, col_signs, row_signs })
    }

    pub fn matrix(&self) -> &GridMatrix {
        &self.matrix
    }

    pub fn col_sign(&self, col: usize) -> i8 {
        self.col_signs[col]
    }

    pub fn row_sign(&self, row: usize) -> i8 {
        self.row_signs[row]
    }

    pub fn col_signs(&self) -> &[i8] {
        &self.col_signs
    }

    pub fn row_signs(&self) -> &[i8] {
        &self.row_signs
    }
}

/// The `2t × 2u` matrix with entry `(-1)^(k+ℓ-1)` at 1-based cell `(k, ℓ)`.
pub fn universal_matrix(t: usize, u: usize) -> GridMatrix {
    GridMatrix::from_fn(2 * t, 2 * u, |c, r| {
        // 1-based k + ℓ - 1 = c + r + 1
        if (c + r + 1) % 2 == 0 { 1 } else { -1 }
    })
}

/// A permutation together with column and row divisions against a matrix.
///
/// Divisions are 0-based boundaries: column `k` holds the positions
/// `col_divs[k]..col_divs[k+1]` and row `ℓ` holds the entries with values
/// `row_divs[ℓ]+1..=row_divs[ℓ+1]`. The conventional 1-based divisions
/// `x_1 = 1 ≤ … ≤ x_{t+1} = n+1` are these plus one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GriddedPermutation {
    perm: Permutation,
    matrix: GridMatrix,
    col_divs: Vec<usize>,
    row_divs: Vec<usize>,
}

impl GriddedPermutation {
    pub fn new(
        perm: Permutation,
        matrix: GridMatrix,
        col_divs: Vec<usize>,
        row_divs: Vec<usize>,
    ) -> Result<Self, GriddingError> {
        let n = perm.len();
        for (divs, count) in [(&col_divs, matrix.cols), (&row_divs, matrix.rows)] {
            if divs.len() != count + 1 {
                return Err(GriddingError::DivisionCount { expected: count + 1, got: divs.len() });
            }
            let ok = divs[0] == 0 && divs[count] == n && divs.windows(2).all(|w| w[0] <= w[1]);
            if !ok {
                return Err(GriddingError::BadDivisions { n, divs: divs.clone() });
            }
        }
        let gp = GriddedPermutation { perm, matrix, col_divs, row_divs };
        gp.check_cells()?;
        Ok(gp)
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn matrix(&self) -> &GridMatrix {
        &self.matrix
    }

    pub fn col_divs(&self) -> &[usize] {
        &self.col_divs
    }

    pub fn row_divs(&self) -> &[usize] {
        &self.row_divs
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn col_of(&self, i: usize) -> usize {
        self.col_divs.partition_point(|&d| d <= i) - 1
    }

    pub fn row_of(&self, i: usize) -> usize {
        let v = self.perm.value(i) - 1;
        self.row_divs.partition_point(|&d| d <= v) - 1
    }

    /// The `(col, row)` cell holding position `i`.
    pub fn cell_of(&self, i: usize) -> (usize, usize) {
        (self.col_of(i), self.row_of(i))
    }

    pub fn entries_in_cell(&self, col: usize, row: usize) -> Vec<usize> {
        (self.col_divs[col]..self.col_divs[col + 1])
            .filter(|&i| self.row_of(i) == row)
            .collect()
    }

    /// Verifies that every cell is increasing, decreasing or empty as its
    /// matrix entry requires.
    pub fn check_cells(&self) -> Result<(), GriddingError> {
        for col in 0..self.matrix.cols {
            for row in 0..self.matrix.rows {
                let ok = cell_ok(
                    &self.perm,
                    self.col_divs[col]..self.col_divs[col + 1],
                    self.row_divs[row]..self.row_divs[row + 1],
                    self.matrix.get(col, row),
                );
                if !ok {
                    return Err(GriddingError::CellNotMonotone { col, row });
                }
            }
        }
        Ok(())
    }

    /// The same divisions against another matrix of equal size.
    pub fn with_matrix(&self, matrix: GridMatrix) -> Result<Self, GriddingError> {
        GriddedPermutation::new(self.perm.clone(), matrix, self.col_divs.clone(), self.row_divs.clone())
    }
}

/// Whether `pi` avoids both 2143 and 3412.
pub fn is_skew_merged(pi: &Permutation) -> bool {
    !pi.contains(&matching_pattern(2)) && !pi.contains(&co_matching_pattern(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatchingWitness {
    /// Largest `m` with `2143…(2m)(2m−1)` contained.
    pub matching: usize,
    /// Largest `m` with `(2m−1)(2m)…3412` contained.
    pub co_matching: usize,
}

pub fn matching_pattern_witness(pi: &Permutation) -> MatchingWitness {
    let largest = |pattern: fn(usize) -> Permutation| {
        (1..).take_while(|&m| pi.contains(&pattern(m))).last().unwrap_or(0)
    };
    MatchingWitness {
        matching: largest(matching_pattern),
        co_matching: largest(co_matching_pattern),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn x_matrix_is_cartesian() {
        let x = GridMatrix::x();
        assert_eq!((x.get(0, 0), x.get(1, 0), x.get(0, 1), x.get(1, 1)), (1, -1, -1, 1));
        assert_eq!(x.to_text(), "-1 1\n1 -1\n");
        assert_eq!(x.to_text().parse::<GridMatrix>().unwrap(), x);
    }

    #[test]
    fn matrix_parse_errors() {
        assert_eq!("1 2".parse::<GridMatrix>(), Err(GriddingError::BadEntry(2)));
        assert_eq!("1 0\n1".parse::<GridMatrix>(), Err(GriddingError::Ragged));
        assert!(matches!("1 x".parse::<GridMatrix>(), Err(GriddingError::Parse { .. })));
    }

    #[test]
    fn skew_merged_gridding_is_found() {
        let pi = p("524361");
        // 1-based x = (1,4,7), y = (1,5,7)
        let expected = GriddedPermutation::new(pi.clone(), GridMatrix::x(), vec![0, 3, 6], vec![0, 4, 6]).unwrap();
        let all = GridMatrix::x().all_griddings(&pi);
        assert!(all.contains(&expected));
        let first = GridMatrix::x().find_gridding(&pi).unwrap();
        assert_eq!(first, all[0]);
        assert_eq!(first.col_divs(), &[0, 2, 6]);
        first.check_cells().unwrap();
    }

    #[test]
    fn single_cell_griddings() {
        let inc = GridMatrix::from_display(&[vec![1]]).unwrap();
        assert!(inc.find_gridding(&p("21")).is_none());
        assert!(inc.all_griddings(&p("21")).is_empty());
        let all = inc.all_griddings(&p("1"));
        assert_eq!(all.len(), 1);
        assert_eq!((all[0].col_divs(), all[0].row_divs()), (&[0, 1][..], &[0, 1][..]));
        assert!(GridMatrix::x().find_gridding(&p("3142")).is_some());
    }

    #[test]
    fn stacked_increasing_cells() {
        // column of two increasing cells: 12 may be split at any row boundary
        let m = GridMatrix::from_display(&[vec![1], vec![1]]).unwrap();
        let rows: Vec<Vec<usize>> = m.all_griddings(&p("12")).iter().map(|g| g.row_divs().to_vec()).collect();
        assert_eq!(rows, vec![vec![0, 0, 2], vec![0, 1, 2], vec![0, 2, 2]]);
    }

    #[test]
    fn empty_permutation_is_gridded_by_anything() {
        let gp = GridMatrix::x().find_gridding(&Permutation::default()).unwrap();
        assert_eq!(gp.col_divs(), &[0, 0, 0]);
        assert_eq!(gp.row_divs(), &[0, 0, 0]);
    }

    #[test]
    fn gridding_constructor_validates() {
        let x = GridMatrix::x();
        assert!(GriddedPermutation::new(p("21"), x.clone(), vec![0, 1, 2], vec![0, 1, 2]).is_ok());
        assert!(matches!(
            GriddedPermutation::new(p("21"), x.clone(), vec![0, 2], vec![0, 1, 2]),
            Err(GriddingError::DivisionCount { .. })
        ));
        assert!(matches!(
            GriddedPermutation::new(p("21"), x.clone(), vec![0, 2, 1], vec![0, 1, 2]),
            Err(GriddingError::BadDivisions { .. })
        ));
        // both entries in the bottom-left increasing cell
        assert_eq!(
            GriddedPermutation::new(p("21"), x, vec![0, 2, 2], vec![0, 2, 2]),
            Err(GriddingError::CellNotMonotone { col: 0, row: 0 })
        );
    }

    #[test]
    fn skew_merged_examples() {
        assert!(is_skew_merged(&p("524361")));
        assert!(!is_skew_merged(&p("2143")));
        assert!(!is_skew_merged(&p("3412")));
    }

    #[test]
    fn matching_witnesses() {
        assert_eq!(matching_pattern_witness(&p("2143")), MatchingWitness { matching: 2, co_matching: 1 });
        assert_eq!(matching_pattern_witness(&p("21")), MatchingWitness { matching: 1, co_matching: 0 });
        assert_eq!(
            matching_pattern_witness(&Permutation::identity(6)),
            MatchingWitness { matching: 0, co_matching: 1 }
        );
        assert_eq!(matching_pattern_witness(&p("1")), MatchingWitness { matching: 0, co_matching: 0 });
    }

    #[test]
    fn pmm_sign_examples() {
        let not_pmm = GridMatrix::from_display(&[vec![1, -1], vec![1, 1]]).unwrap();
        assert!(not_pmm.pmm_signs().is_none());
        assert!(not_pmm.all_pmm_signs().is_empty());
        let x = GridMatrix::x().pmm_signs().unwrap();
        assert_eq!((x.col_signs(), x.row_signs()), (&[1, -1][..], &[1, -1][..]));
        assert_eq!(GridMatrix::x().all_pmm_signs().len(), 2);
        let z = GridMatrix::zeros(2, 3).pmm_signs().unwrap();
        assert!(z.col_signs().iter().chain(z.row_signs()).all(|&s| s == 1));
    }

    #[test]
    fn doubling_an_l_matrix() {
        let m = GridMatrix::from_display(&[vec![1, -1], vec![1, 1]]).unwrap();
        let expected = GridMatrix::from_display(&[
            vec![0, 1, -1, 0],
            vec![1, 0, 0, -1],
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
        ])
        .unwrap();
        let d = m.double();
        assert_eq!(d, expected);
        let signs: Vec<i8> = (1..=4).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect();
        assert!(SignedMatrix::new(d, signs.clone(), signs).is_ok());
        assert_eq!(GridMatrix::zeros(1, 1).double(), GridMatrix::zeros(2, 2));
    }

    #[test]
    fn universal_matrix_entries() {
        let s = universal_matrix(1, 1);
        assert_eq!((s.get(0, 0), s.get(1, 0), s.get(0, 1), s.get(1, 1)), (-1, 1, 1, -1));
        let s = universal_matrix(3, 2);
        for c in 0..6 {
            for r in 0..4 {
                let (k, l) = (c + 1, r + 1);
                assert_eq!(s.get(c, r) == 1, (k + l) % 2 == 1);
            }
        }
        assert!(s.is_pmm());
    }
}
