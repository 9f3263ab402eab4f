//! Assignment games induced by a nonnegative surplus matrix.

mod geometry;
mod matching;

use alloc::borrow::Cow;
use alloc::boxed::Box;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

pub use geometry::{
    core_contains, core_system, sample_core_point, side_optimal_vertices, CoreConstraint,
    CoreMembership, CoreSystem, SideOptimal,
};
pub use matching::{max_weight_matching, max_weight_value, Matching};

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{check_size, sort_size_lex, Game, MAX_PLAYERS};
use crate::rational::Rational;

/// A dense `rows x cols` matrix of nonnegative surpluses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurplusMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl SurplusMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::RaggedMatrix);
        }
        let rows_n = if cols == 0 { 0 } else { rows.len() };
        let mut entries = Vec::with_capacity(rows_n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, a) in row.into_iter().enumerate() {
                if a.is_negative() {
                    return Err(Error::NegativeEntry { row: i, col: j });
                }
                entries.push(a);
            }
        }
        Ok(SurplusMatrix {
            rows: rows_n,
            cols,
            entries,
        })
    }

    /// Convenience constructor for integer matrices; panics on bad input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&a| Rational::from_integer(a)).collect())
                .collect(),
        )
        .expect("a rectangular nonnegative matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SurplusMatrix {
            rows,
            cols,
            entries: alloc::vec![Rational::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn players(&self) -> usize {
        self.rows + self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) -> Result<()> {
        if value.is_negative() {
            return Err(Error::NegativeEntry { row, col });
        }
        self.entries[row * self.cols + col] = value;
        Ok(())
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    /// Player index of matrix row `row`.
    pub fn row_player(&self, row: usize) -> usize {
        row
    }

    /// Player index of matrix column `col`.
    pub fn col_player(&self, col: usize) -> usize {
        self.rows + col
    }

    /// Row indices present in `s`.
    pub fn rows_of(&self, s: Coalition) -> Coalition {
        s.intersection(Coalition::full(self.rows))
    }

    /// Column indices present in `s`.
    pub fn cols_of(&self, s: Coalition) -> Coalition {
        Coalition(s.bits() >> self.rows).intersection(Coalition::full(self.cols))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// The submatrix on the given row and column index lists, in that order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        SurplusMatrix {
            rows: if cols.is_empty() { 0 } else { rows.len() },
            cols: if rows.is_empty() { 0 } else { cols.len() },
            entries,
        }
    }

    /// Positions of the positive entries in row-major order.
    pub fn positive_entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows)
            .flat_map(move |i| (0..self.cols).map(move |j| (i, j)))
            .filter(move |&(i, j)| self.get(i, j).is_positive())
    }
}

/// True iff no row and no column holds two positive entries.
pub fn is_convex_assignment(m: &SurplusMatrix) -> bool {
    let rows_ok =
        (0..m.rows()).all(|i| (0..m.cols()).filter(|&j| m.get(i, j).is_positive()).count() <= 1);
    let cols_ok =
        (0..m.cols()).all(|j| (0..m.rows()).filter(|&i| m.get(i, j).is_positive()).count() <= 1);
    rows_ok && cols_ok
}

/// The assignment game of a surplus matrix. Rows are players `0..rows`,
/// columns are players `rows..rows + cols`.
pub struct AssignmentGame {
    matrix: SurplusMatrix,
    table: OnceBox<Vec<Rational>>,
}

impl Clone for AssignmentGame {
    fn clone(&self) -> Self {
        AssignmentGame {
            matrix: self.matrix.clone(),
            table: OnceBox::new(),
        }
    }
}

impl core::fmt::Debug for AssignmentGame {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("AssignmentGame")
            .field("matrix", &self.matrix)
            .finish()
    }
}

impl PartialEq for AssignmentGame {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for AssignmentGame {}

impl AssignmentGame {
    pub fn new(matrix: SurplusMatrix) -> Result<Self> {
        check_size(matrix.players(), MAX_PLAYERS)?;
        Ok(AssignmentGame {
            matrix,
            table: OnceBox::new(),
        })
    }

    pub fn matrix(&self) -> &SurplusMatrix {
        &self.matrix
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols
    }

    /// The optimal matching of the grand coalition used to build the core system.
    pub fn optimal_matching(&self) -> Matching {
        max_weight_matching(
            &self.matrix,
            Coalition::full(self.rows()),
            Coalition::full(self.cols()),
        )
        .1
    }

    fn table(&self) -> &[Rational] {
        self.table
            .get_or_init(|| Box::new(worth_table_dp(&self.matrix)))
    }
}

/// `w(S)` for every `S` by recursion on the lowest row player in `S`.
fn worth_table_dp(m: &SurplusMatrix) -> Vec<Rational> {
    let n = m.players();
    let mut table: Vec<Rational> = Vec::with_capacity(1 << n);
    for bits in 0..1u32 << n {
        let s = Coalition(bits);
        let rows = m.rows_of(s);
        let value = match rows.first() {
            None => Rational::zero(),
            Some(r) => {
                let rest = s.without(r);
                let mut best = table[rest.index()].clone();
                for j in m.cols_of(s).members() {
                    let a = m.get(r, j);
                    if a.is_positive() {
                        let candidate = a + &table[rest.without(m.col_player(j)).index()];
                        if candidate > best {
                            best = candidate;
                        }
                    }
                }
                best
            }
        };
        table.push(value);
    }
    table
}

impl Game for AssignmentGame {
    fn players(&self) -> usize {
        self.matrix.players()
    }

    fn worth(&self, s: Coalition) -> Rational {
        if let Some(t) = self.table.get() {
            return t[s.index()].clone();
        }
        let rows = self.matrix.rows_of(s);
        let cols = self.matrix.cols_of(s);
        match (rows.len(), cols.len()) {
            (0, _) | (_, 0) => Rational::zero(),
            (1, 1) => self
                .matrix
                .get(rows.first().unwrap(), cols.first().unwrap())
                .clone(),
            _ => max_weight_value(&self.matrix, rows, cols),
        }
    }

    fn worth_table(&self) -> Cow<'_, [Rational]> {
        Cow::Borrowed(self.table())
    }

    fn essential_coalitions(&self) -> Vec<Coalition> {
        let m = &self.matrix;
        let mut out: Vec<Coalition> = (0..m.players()).map(Coalition::singleton).collect();
        for (i, j) in m.positive_entries() {
            out.push(Coalition::singleton(i).with(m.col_player(j)));
        }
        sort_size_lex(&mut out);
        out
    }
}
