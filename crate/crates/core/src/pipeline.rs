//! From a monotone gridding and a lettering of the inversion graph to a
//! geometric gridding by a partial multiplication matrix.
//!
//! The steps are: contract monotone intervals inside cells, letter the
//! inversion graph, refine letters by cell, read off each letter's reading
//! order, cut the gridding around each letter's hull, orient columns and rows
//! by the reading orders, and inflate the intervals back.

use std::fmt::Write as _;
use std::ops::{Range, RangeInclusive};

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::geometry::{self, Realization};
use crate::gridding::{universal_matrix, GridMatrix, GriddedPermutation, SignedMatrix};
use crate::letters::{find_lettering, Decoder, Letterization};
use crate::oracle;
use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("the permutation is not in the monotone grid class of the matrix")]
    NotGriddable,
    #[error("no lettering of the inversion graph with at most {0} letters")]
    NoLettering(usize),
    #[error("the lettering's isomorphism does not match the inversion graph")]
    BadIsomorphism,
    #[error("entries of refined letter {0} are not read monotonically")]
    NonMonotoneLetter(usize),
    #[error("letters disagree on the reading order of {axis} {index}")]
    SignConflict { axis: &'static str, index: usize },
    #[error("local orders of the regridded permutation are inconsistent")]
    Inconsistent,
}

/// Merges adjacent entries that lie in one cell and have consecutive values,
/// until no such pair remains. Returns the contracted gridding and, for each
/// of its entries, the positions of `gp` it absorbed.
pub fn contract_in_cells(gp: &GriddedPermutation) -> (GriddedPermutation, Vec<Range<usize>>) {
    let mut values = gp.perm().values().to_vec();
    let mut cols = gp.col_divs().to_vec();
    let mut rows = gp.row_divs().to_vec();
    let mut blocks: Vec<Range<usize>> = (0..values.len()).map(|i| i..i + 1).collect();
    let same_cell = |cols: &[usize], rows: &[usize], values: &[usize], i: usize| {
        let band = |divs: &[usize], x: usize| divs.partition_point(|&d| d <= x);
        band(cols, i) == band(cols, i + 1) && band(rows, values[i] - 1) == band(rows, values[i + 1] - 1)
    };
    while let Some(i) = (0..values.len().saturating_sub(1))
        .find(|&i| values[i].abs_diff(values[i + 1]) == 1 && same_cell(&cols, &rows, &values, i))
    {
        let high = values[i].max(values[i + 1]);
        values[i] = values[i].min(values[i + 1]);
        values.remove(i + 1);
        for v in values.iter_mut() {
            if *v > high {
                *v -= 1;
            }
        }
        blocks[i] = blocks[i].start..blocks[i + 1].end;
        blocks.remove(i + 1);
        for d in cols.iter_mut() {
            if *d > i + 1 {
                *d -= 1;
            }
        }
        // 0-based value `high - 1` disappears
        for d in rows.iter_mut() {
            if *d >= high {
                *d -= 1;
            }
        }
    }
    let perm = Permutation::new(values).expect("contraction keeps a permutation");
    let gp = GriddedPermutation::new(perm, gp.matrix().clone(), cols, rows)
        .expect("contracting inside a cell keeps the gridding valid");
    (gp, blocks)
}

/// A letter refined by the cell of the entries it encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RefinedLetter {
    pub letter: usize,
    pub cell: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedLetterization {
    pub letters: Vec<RefinedLetter>,
    pub decoder: Decoder,
    pub word: Vec<usize>,
    /// Unchanged from the original lettering.
    pub iso: Vec<usize>,
}

impl RefinedLetterization {
    /// Indices encoded by refined letter `a`, in increasing order.
    pub fn entries(&self, a: usize) -> Vec<usize> {
        (0..self.iso.len()).filter(|&i| self.word[self.iso[i]] == a).collect()
    }

    pub fn letter_of(&self, i: usize) -> usize {
        self.word[self.iso[i]]
    }
}

/// Attaches to each letter the cell of each entry it encodes.
pub fn reletter(lz: &Letterization, gp: &GriddedPermutation) -> Result<RefinedLetterization, PipelineError> {
    if !lz.verify(&gp.perm().inversion_graph()) {
        return Err(PipelineError::BadIsomorphism);
    }
    let n = gp.len();
    let refined_of = |i: usize| RefinedLetter { letter: lz.letter_of(i), cell: gp.cell_of(i) };
    let letters: Vec<RefinedLetter> = (0..n).map(refined_of).sorted().dedup().collect();
    let index = |r: RefinedLetter| letters.binary_search(&r).unwrap();
    let mut word = vec![0; n];
    for i in 0..n {
        word[lz.iso[i]] = index(refined_of(i));
    }
    let mut decoder = Decoder::empty(letters.len());
    for (a, ra) in letters.iter().enumerate() {
        for (b, rb) in letters.iter().enumerate() {
            if lz.decoder.contains(ra.letter, rb.letter) {
                decoder.insert(a, b);
            }
        }
    }
    Ok(RefinedLetterization { letters, decoder, word, iso: lz.iso.clone() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Horizontal {
    LeftToRight,
    RightToLeft,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vertical {
    BottomToTop,
    TopToBottom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ReadingOrder {
    pub horizontal: Horizontal,
    pub vertical: Vertical,
}

/// For each refined letter, the direction in which its entries appear along
/// the word. Single-entry letters read left to right.
pub fn reading_orders(
    rlz: &RefinedLetterization,
    gp: &GriddedPermutation,
) -> Result<Vec<ReadingOrder>, PipelineError> {
    (0..rlz.letters.len())
        .map(|a| {
            let at: Vec<usize> = rlz.entries(a).iter().map(|&i| rlz.iso[i]).collect();
            let horizontal = if at.windows(2).all(|w| w[0] < w[1]) {
                Horizontal::LeftToRight
            } else if at.windows(2).all(|w| w[0] > w[1]) {
                Horizontal::RightToLeft
            } else {
                return Err(PipelineError::NonMonotoneLetter(a));
            };
            let (col, row) = rlz.letters[a].cell;
            let increasing = gp.matrix().get(col, row) == 1;
            let vertical = if (horizontal == Horizontal::LeftToRight) == increasing {
                Vertical::BottomToTop
            } else {
                Vertical::TopToBottom
            };
            Ok(ReadingOrder { horizontal, vertical })
        })
        .collect()
}

/// Smallest rectangle holding a letter's entries: positions and 0-based
/// values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullRectangle {
    pub letter: usize,
    pub positions: RangeInclusive<usize>,
    pub values: RangeInclusive<usize>,
}

pub fn hulls(rlz: &RefinedLetterization, gp: &GriddedPermutation) -> Vec<HullRectangle> {
    (0..rlz.letters.len())
        .map(|a| {
            let e = rlz.entries(a);
            let (pmin, pmax) = e.iter().copied().minmax().into_option().unwrap();
            let (vmin, vmax) = e.iter().map(|&i| gp.perm().value(i) - 1).minmax().into_option().unwrap();
            HullRectangle { letter: a, positions: pmin..=pmax, values: vmin..=vmax }
        })
        .collect()
}

/// Adds division lines just outside every hull and drops empty columns and
/// rows. Each new cell inherits the entry of the cell it came from when it
/// holds entries, and is zero otherwise.
pub fn regrid(gp: &GriddedPermutation, rlz: &RefinedLetterization) -> GriddedPermutation {
    let mut cols = gp.col_divs().to_vec();
    let mut rows = gp.row_divs().to_vec();
    for h in hulls(rlz, gp) {
        cols.extend([*h.positions.start(), h.positions.end() + 1]);
        rows.extend([*h.values.start(), h.values.end() + 1]);
    }
    cols.sort_unstable();
    cols.dedup();
    rows.sort_unstable();
    rows.dedup();
    let old_col = |k: usize| gp.col_of(cols[k]);
    let old_row = |l: usize| gp.row_divs().partition_point(|&d| d <= rows[l]) - 1;
    let occupied: Vec<(usize, usize)> = (0..gp.len())
        .map(|i| {
            let v = gp.perm().value(i) - 1;
            (cols.partition_point(|&d| d <= i) - 1, rows.partition_point(|&d| d <= v) - 1)
        })
        .collect();
    let matrix = GridMatrix::from_fn(cols.len() - 1, rows.len() - 1, |k, l| {
        if occupied.contains(&(k, l)) {
            gp.matrix().get(old_col(k), old_row(l))
        } else {
            0
        }
    });
    GriddedPermutation::new(gp.perm().clone(), matrix, cols, rows).expect("refining a gridding keeps it valid")
}

/// Column signs from horizontal reading orders and row signs from vertical
/// ones; the resulting matrix has `c_k r_l` in every cell.
pub fn assign_signs(
    regridded: &GriddedPermutation,
    rlz: &RefinedLetterization,
    orders: &[ReadingOrder],
) -> Result<SignedMatrix, PipelineError> {
    let (t, u) = (regridded.matrix().cols(), regridded.matrix().rows());
    let mut col_signs: Vec<Option<i8>> = vec![None; t];
    let mut row_signs: Vec<Option<i8>> = vec![None; u];
    for i in 0..regridded.len() {
        let o = orders[rlz.letter_of(i)];
        let (k, l) = regridded.cell_of(i);
        let c = if o.horizontal == Horizontal::LeftToRight { 1 } else { -1 };
        let r = if o.vertical == Vertical::BottomToTop { 1 } else { -1 };
        if *col_signs[k].get_or_insert(c) != c {
            return Err(PipelineError::SignConflict { axis: "column", index: k });
        }
        if *row_signs[l].get_or_insert(r) != r {
            return Err(PipelineError::SignConflict { axis: "row", index: l });
        }
    }
    let col_signs: Vec<i8> = col_signs.into_iter().map(|s| s.unwrap_or(1)).collect();
    let row_signs: Vec<i8> = row_signs.into_iter().map(|s| s.unwrap_or(1)).collect();
    let matrix = GridMatrix::from_fn(t, u, |k, l| col_signs[k] * row_signs[l]);
    Ok(SignedMatrix::new(matrix, col_signs, row_signs).expect("products factor by construction"))
}

/// Largest size of the final matrix for a `t × u` matrix and `r` letters.
pub fn size_bound(t: usize, u: usize, r: usize) -> (usize, usize) {
    (t * (1 + 2 * u * r), u * (1 + 2 * t * r))
}

/// Every intermediate object of one run of the construction.
#[derive(Clone, Debug)]
pub struct Geometrized {
    pub original: GriddedPermutation,
    pub contracted: GriddedPermutation,
    /// Positions of the original permutation absorbed by each contracted entry.
    pub blocks: Vec<Range<usize>>,
    pub lettering: Letterization,
    pub refined: RefinedLetterization,
    pub reading: Vec<ReadingOrder>,
    /// The contracted permutation gridded by the final matrix.
    pub regridded: GriddedPermutation,
    pub signs: SignedMatrix,
    /// The original permutation gridded by the final matrix.
    pub gridding: GriddedPermutation,
    pub realization: Realization,
}

impl Geometrized {
    pub fn was_contracted(&self) -> bool {
        self.contracted.len() != self.original.len()
    }

    pub fn letters_used(&self) -> usize {
        self.lettering.alphabet.len()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.signs.matrix().cols(), self.signs.matrix().rows())
    }
}

/// Runs the whole construction on `pi` against `m`, letting the lettering
/// use at most `k_max` letters.
pub fn geometrize(pi: &Permutation, m: &GridMatrix, k_max: usize) -> Result<Geometrized, PipelineError> {
    let original = m.find_gridding(pi).ok_or(PipelineError::NotGriddable)?;
    let (contracted, blocks) = contract_in_cells(&original);
    let graph = contracted.perm().inversion_graph();
    let lettering = (0..=k_max)
        .find_map(|k| find_lettering(&graph, k))
        .ok_or(PipelineError::NoLettering(k_max))?;
    let refined = reletter(&lettering, &contracted)?;
    let reading = reading_orders(&refined, &contracted)?;
    let cut = regrid(&contracted, &refined);
    let signs = assign_signs(&cut, &refined, &reading)?;
    let regridded = cut.with_matrix(signs.matrix().clone()).expect("signs agree with every occupied cell");
    let orders = geometry::local_orders(&regridded, &signs).expect("same matrix");
    // the word order itself is a common linear extension
    let word_order = (0..regridded.len())
        .sorted_by_key(|&i| lettering.iso[i])
        .collect_vec();
    if !orders.is_extension(&word_order) {
        return Err(PipelineError::Inconsistent);
    }
    let gridding = inflate_gridding(pi, &regridded, &blocks);
    let realization = geometry::realize(&gridding, &signs)
        .expect("same matrix")
        .ok_or(PipelineError::Inconsistent)?;
    Ok(Geometrized {
        original,
        contracted,
        blocks,
        lettering,
        refined,
        reading,
        regridded,
        signs,
        gridding,
        realization,
    })
}

/// Grids `pi` by the matrix of `small`, where each entry of `small` stands
/// for the run of positions `blocks[j]` of `pi`.
fn inflate_gridding(pi: &Permutation, small: &GriddedPermutation, blocks: &[Range<usize>]) -> GriddedPermutation {
    let n = pi.len();
    let mut value_start = vec![0; small.len()];
    for (j, b) in blocks.iter().enumerate() {
        let low = b.clone().map(|p| pi.value(p) - 1).min().unwrap();
        value_start[small.perm().value(j) - 1] = low;
    }
    let cols = small.col_divs().iter().map(|&d| if d == small.len() { n } else { blocks[d].start }).collect();
    let rows = small.row_divs().iter().map(|&d| if d == small.len() { n } else { value_start[d] }).collect();
    GriddedPermutation::new(pi.clone(), small.matrix().clone(), cols, rows)
        .expect("blocks run along their cell's diagonal")
}

/// Re-grids a geometric gridding by a universal matrix: column `k` goes to
/// column `2k+1` or `2k` (0-based) of `S_{T,U}` as `c_k` is 1 or −1, and
/// rows likewise, which keeps every cell entry and local order.
pub fn embed_in_universal(
    gp: &GriddedPermutation,
    signs: &SignedMatrix,
    big_t: usize,
    big_u: usize,
) -> Option<(SignedMatrix, GriddedPermutation)> {
    let (t, u) = (signs.matrix().cols(), signs.matrix().rows());
    if t > big_t || u > big_u {
        return None;
    }
    let s = universal_matrix(big_t, big_u);
    let col_signs: Vec<i8> = (0..2 * big_t).map(|c| if c % 2 == 1 { 1 } else { -1 }).collect();
    let row_signs: Vec<i8> = (0..2 * big_u).map(|r| if r % 2 == 0 { 1 } else { -1 }).collect();
    let signed = SignedMatrix::new(s.clone(), col_signs, row_signs).ok()?;
    let target_col = |k: usize| if signs.col_sign(k) == 1 { 2 * k + 1 } else { 2 * k };
    let target_row = |l: usize| if signs.row_sign(l) == 1 { 2 * l } else { 2 * l + 1 };
    let n = gp.len();
    let spread = |divs: &[usize], count: usize, target: &dyn Fn(usize) -> usize, total: usize| {
        // boundary j of the big matrix = start of the first small band mapped at or after j
        (0..=total)
            .map(|j| (0..count).find(|&k| target(k) >= j).map_or(n, |k| divs[k]))
            .collect::<Vec<usize>>()
    };
    let cols = spread(gp.col_divs(), t, &target_col, 2 * big_t);
    let rows = spread(gp.row_divs(), u, &target_row, 2 * big_u);
    let big = GriddedPermutation::new(gp.perm().clone(), s, cols, rows).ok()?;
    Some((signed, big))
}

/// One line of a class experiment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentRow {
    pub perm: Permutation,
    pub outcome: Result<RowChecks, PipelineError>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowChecks {
    pub letters: usize,
    pub contracted_len: usize,
    pub dims: (usize, usize),
    pub bound: (usize, usize),
    pub within_bound: bool,
    /// The final gridding is realizable and reads back to the permutation.
    pub realized: bool,
    /// Membership in the final matrix's class, by the geometry search.
    pub member: bool,
    /// Membership in the universal matrix, via an explicit embedding.
    pub universal: bool,
    /// Membership by the brute-force oracle, when requested.
    pub oracle: Option<bool>,
}

impl RowChecks {
    pub fn passed(&self) -> bool {
        self.within_bound && self.realized && self.member && self.universal && self.oracle != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentReport {
    pub matrix: GridMatrix,
    pub n_max: usize,
    pub letters: usize,
    pub rows: Vec<ExperimentRow>,
}

impl ExperimentReport {
    pub fn failures(&self) -> impl Iterator<Item = &ExperimentRow> {
        self.rows.iter().filter(|r| !r.outcome.as_ref().is_ok_and(RowChecks::passed))
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// Tab-separated table, one permutation per line, then a `#` summary.
    pub fn to_tsv(&self) -> String {
        let flag = |b: bool| if b { "ok" } else { "FAIL" };
        let mut s = String::from("perm\tletters\tcontracted\tcols\trows\tbound\tin_bound\trealized\tmember\tuniversal\toracle\n");
        for row in &self.rows {
            match &row.outcome {
                Ok(c) => {
                    let _ = writeln!(
                        s,
                        "{}\t{}\t{}\t{}\t{}\t{}x{}\t{}\t{}\t{}\t{}\t{}",
                        row.perm,
                        c.letters,
                        c.contracted_len,
                        c.dims.0,
                        c.dims.1,
                        c.bound.0,
                        c.bound.1,
                        flag(c.within_bound),
                        flag(c.realized),
                        flag(c.member),
                        flag(c.universal),
                        c.oracle.map_or("-", flag),
                    );
                }
                Err(e) => {
                    let _ = writeln!(s, "{}\tERROR: {e}", row.perm);
                }
            }
        }
        s.push_str(&self.summary());
        s
    }

    pub fn summary(&self) -> String {
        let total = self.rows.len();
        let failed = self.failures().count();
        let contracted = self
            .rows
            .iter()
            .filter(|r| r.outcome.as_ref().is_ok_and(|c| c.contracted_len < r.perm.len()))
            .count();
        let (max_c, max_r) = self
            .rows
            .iter()
            .filter_map(|r| r.outcome.as_ref().ok())
            .fold((0, 0), |(a, b), c| (a.max(c.dims.0), b.max(c.dims.1)));
        format!(
            "# {} permutations of length <= {} processed, {} failed, {} contracted; largest matrix {}x{}, bound {}x{}\n",
            total,
            self.n_max,
            failed,
            contracted,
            max_c,
            max_r,
            size_bound(self.matrix.cols(), self.matrix.rows(), self.letters).0,
            size_bound(self.matrix.cols(), self.matrix.rows(), self.letters).1,
        )
    }
}

/// Runs [`geometrize`] on every permutation of length `1..=n_max` in
/// `Grid(m)` whose inversion graph has lettericity at most `r`, and checks
/// each result.
pub fn class_experiment(n_max: usize, m: &GridMatrix, r: usize, verify: bool) -> ExperimentReport {
    let candidates: Vec<Permutation> = (1..=n_max).flat_map(Permutation::all).collect();
    let mut rows: Vec<ExperimentRow> = candidates
        .into_par_iter()
        .filter(|pi| m.find_gridding(pi).is_some() && find_lettering(&pi.inversion_graph(), r).is_some())
        .map(|pi| {
            let outcome = geometrize(&pi, m, r).map(|g| check_run(&pi, m, r, &g, verify));
            ExperimentRow { perm: pi, outcome }
        })
        .collect();
    rows.sort_by(|a, b| (a.perm.len(), &a.perm).cmp(&(b.perm.len(), &b.perm)));
    ExperimentReport { matrix: m.clone(), n_max, letters: r, rows }
}

fn check_run(pi: &Permutation, m: &GridMatrix, r: usize, g: &Geometrized, verify: bool) -> RowChecks {
    let bound = size_bound(m.cols(), m.rows(), r);
    let dims = g.dims();
    let within_bound = dims.0 <= bound.0 && dims.1 <= bound.1;
    let realized = g.realization.read_back(g.signs.matrix()) == g.gridding;
    let member = geometry::geom_member(pi, g.signs.matrix());
    let universal = embed_in_universal(&g.gridding, &g.signs, bound.0, bound.1)
        .and_then(|(s, big)| geometry::realize(&big, &s).ok().flatten())
        .is_some();
    let oracle = verify.then(|| oracle::geom_member_oracle(pi, g.signs.matrix()));
    RowChecks {
        letters: g.letters_used(),
        contracted_len: g.contracted.len(),
        dims,
        bound,
        within_bound,
        realized,
        member,
        universal,
        oracle,
    }
}
