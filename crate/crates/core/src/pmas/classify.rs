//! Structural classification of surplus matrices into PMAS-admissible blocks.

use alloc::vec::Vec;
use core::fmt;

use crate::assignment::SurplusMatrix;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    /// All positive entries lie in one row (includes 1x1 blocks).
    RowVector,
    /// All positive entries lie in one column.
    ColVector,
    /// Positive entries lie in the row and column of `corner`, and the corner
    /// entry dominates every pair of other entries in its row and column.
    GammaDominant { corner: (usize, usize) },
}

/// A connected component of the support of the matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    /// Matrix row indices, ascending.
    pub rows: Vec<usize>,
    /// Matrix column indices, ascending.
    pub cols: Vec<usize>,
    pub kind: BlockKind,
}

/// Why a matrix admits no PMAS. Indices are matrix rows and columns from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    /// A 2x2 submatrix with four positive entries.
    TwoByTwo {
        rows: (usize, usize),
        cols: (usize, usize),
    },
    /// `a[corner] < a[corner.0][col] + a[row][corner.1]`.
    GammaViolation {
        corner: (usize, usize),
        row: usize,
        col: usize,
        corner_value: Rational,
        row_value: Rational,
        col_value: Rational,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::TwoByTwo { rows, cols } => write!(
                f,
                "positive 2x2 submatrix on rows {},{} and columns {},{}",
                rows.0 + 1,
                rows.1 + 1,
                cols.0 + 1,
                cols.1 + 1
            ),
            Witness::GammaViolation {
                corner,
                row,
                col,
                corner_value,
                row_value,
                col_value,
            } => write!(
                f,
                "corner ({},{}) is not dominant: {} < {} + {} (entries ({},{}) and ({},{}))",
                corner.0 + 1,
                corner.1 + 1,
                corner_value,
                row_value,
                col_value,
                corner.0 + 1,
                col + 1,
                row + 1,
                corner.1 + 1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Admissible(Vec<Block>),
    NotAdmissible(Witness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Rows without a positive entry.
    pub null_rows: Vec<usize>,
    /// Columns without a positive entry.
    pub null_cols: Vec<usize>,
    pub verdict: Verdict,
}

impl BlockDecomposition {
    pub fn is_admissible(&self) -> bool {
        matches!(self.verdict, Verdict::Admissible(_))
    }

    pub fn blocks(&self) -> Option<&[Block]> {
        match &self.verdict {
            Verdict::Admissible(b) => Some(b),
            Verdict::NotAdmissible(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Verdict::Admissible(_) => None,
            Verdict::NotAdmissible(w) => Some(w),
        }
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Splits the support of `m` into connected components, ordered by their first row.
fn components(m: &SurplusMatrix) -> Vec<(Vec<usize>, Vec<usize>)> {
    let (r, c) = (m.rows(), m.cols());
    let mut dsu = Dsu((0..r + c).collect());
    for (i, j) in m.positive_entries() {
        dsu.union(i, r + j);
    }
    let live_row = |i: usize| (0..c).any(|j| m.get(i, j).is_positive());
    let live_col = |j: usize| (0..r).any(|i| m.get(i, j).is_positive());
    let mut out: Vec<(usize, Vec<usize>, Vec<usize>)> = Vec::new();
    for i in (0..r).filter(|&i| live_row(i)) {
        let root = dsu.find(i);
        match out.iter_mut().find(|e| e.0 == root) {
            Some(e) => e.1.push(i),
            None => out.push((root, alloc::vec![i], Vec::new())),
        }
    }
    for j in (0..c).filter(|&j| live_col(j)) {
        let root = dsu.find(r + j);
        let e = out
            .iter_mut()
            .find(|e| e.0 == root)
            .expect("a live column has a live row");
        e.2.push(j);
    }
    out.into_iter()
        .map(|(_, rows, cols)| (rows, cols))
        .collect()
}

fn max_entry<I: Iterator<Item = (usize, Rational)>>(it: I) -> Option<(usize, Rational)> {
    let mut best: Option<(usize, Rational)> = None;
    for (k, a) in it {
        if best.as_ref().is_none_or(|(_, b)| a > *b) {
            best = Some((k, a));
        }
    }
    best
}

fn classify_component(
    m: &SurplusMatrix,
    rows: &[usize],
    cols: &[usize],
    flip_dominance: bool,
) -> Result<BlockKind, Witness> {
    if rows.len() == 1 {
        return Ok(BlockKind::RowVector);
    }
    if cols.len() == 1 {
        return Ok(BlockKind::ColVector);
    }
    let pos = |i: usize, j: usize| m.get(i, j).is_positive();

    let corner = rows.iter().find_map(|&i| {
        cols.iter()
            .copied()
            .find(|&j| {
                pos(i, j)
                    && rows
                        .iter()
                        .all(|&k| k == i || cols.iter().all(|&l| l == j || !pos(k, l)))
            })
            .map(|j| (i, j))
    });
    if let Some((i1, j1)) = corner {
        let (l, row_value) = max_entry(
            cols.iter()
                .filter(|&&l| l != j1)
                .map(|&l| (l, m.get(i1, l).clone())),
        )
        .expect("corner row has another entry");
        let (k, col_value) = max_entry(
            rows.iter()
                .filter(|&&k| k != i1)
                .map(|&k| (k, m.get(k, j1).clone())),
        )
        .expect("corner column has another entry");
        let corner_value = m.get(i1, j1).clone();
        let dominant = corner_value >= &row_value + &col_value;
        if dominant != flip_dominance {
            return Ok(BlockKind::GammaDominant { corner: (i1, j1) });
        }
        return Err(Witness::GammaViolation {
            corner: (i1, j1),
            row: k,
            col: l,
            corner_value,
            row_value,
            col_value,
        });
    }

    // Without a covering corner the support either contains a positive 2x2
    // submatrix or two Γ-shaped 2x2 windows whose corners cannot both dominate.
    let mut gamma = None;
    for (a, &i) in rows.iter().enumerate() {
        for &k in &rows[a + 1..] {
            for (b, &j) in cols.iter().enumerate() {
                for &l in &cols[b + 1..] {
                    let cells = [(i, j), (i, l), (k, j), (k, l)];
                    let positives = cells.iter().filter(|&&(x, y)| pos(x, y)).count();
                    if positives == 4 {
                        return Err(Witness::TwoByTwo {
                            rows: (i, k),
                            cols: (j, l),
                        });
                    }
                    if positives == 3 && gamma.is_none() {
                        // the corner sits opposite the zero cell
                        let zero = cells.iter().position(|&(x, y)| !pos(x, y)).unwrap();
                        let (corner, other) = (cells[3 - zero], cells[zero]);
                        let (row, col) = (other.0, other.1);
                        let corner_value = m.get(corner.0, corner.1).clone();
                        let row_value = m.get(corner.0, col).clone();
                        let col_value = m.get(row, corner.1).clone();
                        if corner_value < &row_value + &col_value {
                            gamma = Some(Witness::GammaViolation {
                                corner,
                                row,
                                col,
                                corner_value,
                                row_value,
                                col_value,
                            });
                        }
                    }
                }
            }
        }
    }
    Err(gamma.expect("a support without covering corner has a witness window"))
}

/// Classifies the support of `m` block by block.
pub fn classify_blocks(m: &SurplusMatrix) -> BlockDecomposition {
    classify(m, false)
}

/// [`classify_blocks`] with the corner dominance test inverted, for mutation testing.
#[doc(hidden)]
pub fn classify_blocks_mutant(m: &SurplusMatrix) -> BlockDecomposition {
    classify(m, true)
}

fn classify(m: &SurplusMatrix, flip_dominance: bool) -> BlockDecomposition {
    let live_row = |i: usize| (0..m.cols()).any(|j| m.get(i, j).is_positive());
    let live_col = |j: usize| (0..m.rows()).any(|i| m.get(i, j).is_positive());
    let null_rows = (0..m.rows()).filter(|&i| !live_row(i)).collect();
    let null_cols = (0..m.cols()).filter(|&j| !live_col(j)).collect();
    let mut blocks = Vec::new();
    for (rows, cols) in components(m) {
        match classify_component(m, &rows, &cols, flip_dominance) {
            Ok(kind) => blocks.push(Block { rows, cols, kind }),
            Err(witness) => {
                return BlockDecomposition {
                    null_rows,
                    null_cols,
                    verdict: Verdict::NotAdmissible(witness),
                }
            }
        }
    }
    BlockDecomposition {
        null_rows,
        null_cols,
        verdict: Verdict::Admissible(blocks),
    }
}
