//! Maximum-weight bipartite matching in exact arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use super::SurplusMatrix;
use crate::coalition::Coalition;
use crate::rational::Rational;

/// A set of `(row, column)` matrix positions, no row or column used twice,
/// kept sorted in row-major order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        debug_assert!({
            let mut rows: Vec<_> = pairs.iter().map(|p| p.0).collect();
            let mut cols: Vec<_> = pairs.iter().map(|p| p.1).collect();
            rows.dedup();
            cols.sort_unstable();
            cols.dedup();
            rows.len() == pairs.len() && cols.len() == pairs.len()
        });
        Matching { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn partner_of_row(&self, row: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.0 == row).map(|p| p.1)
    }

    pub fn partner_of_col(&self, col: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.1 == col).map(|p| p.0)
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.pairs.binary_search(&(row, col)).is_ok()
    }

    pub fn value(&self, m: &SurplusMatrix) -> Rational {
        self.pairs.iter().map(|&(i, j)| m.get(i, j)).sum()
    }
}

/// Hungarian method on the `rows x cols` submatrix, short side fully matched.
///
/// Returns the maximum total and one optimal assignment.
fn hungarian(m: &SurplusMatrix, rows: &[usize], cols: &[usize]) -> (Rational, Vec<(usize, usize)>) {
    if rows.is_empty() || cols.is_empty() {
        return (Rational::zero(), Vec::new());
    }
    let transpose = rows.len() > cols.len();
    let (k, w) = if transpose {
        (cols.len(), rows.len())
    } else {
        (rows.len(), cols.len())
    };
    // cost[a][b] = -surplus, 1-based with a in 1..=k (short side), b in 1..=w
    let cost = |a: usize, b: usize| -> Rational {
        if transpose {
            -m.get(rows[b - 1], cols[a - 1])
        } else {
            -m.get(rows[a - 1], cols[b - 1])
        }
    };
    let mut u = vec![Rational::zero(); k + 1];
    let mut v = vec![Rational::zero(); w + 1];
    let mut p = vec![0usize; w + 1];
    let mut way = vec![0usize; w + 1];
    for a in 1..=k {
        p[0] = a;
        let mut b0 = 0usize;
        let mut minv: Vec<Option<Rational>> = vec![None; w + 1];
        let mut used = vec![false; w + 1];
        loop {
            used[b0] = true;
            let a0 = p[b0];
            let mut delta: Option<Rational> = None;
            let mut b1 = 0usize;
            for b in 1..=w {
                if used[b] {
                    continue;
                }
                let cur = cost(a0, b) - &u[a0] - &v[b];
                if minv[b].as_ref().is_none_or(|mv| cur < *mv) {
                    minv[b] = Some(cur);
                    way[b] = b0;
                }
                let mb = minv[b].as_ref().unwrap();
                if delta.as_ref().is_none_or(|d| mb < d) {
                    delta = Some(mb.clone());
                    b1 = b;
                }
            }
            let delta = delta.expect("wide side has an unused column");
            for b in 0..=w {
                if used[b] {
                    u[p[b]] += &delta;
                    v[b] -= &delta;
                } else if let Some(mv) = minv[b].as_mut() {
                    *mv -= &delta;
                }
            }
            b0 = b1;
            if p[b0] == 0 {
                break;
            }
        }
        loop {
            let b1 = way[b0];
            p[b0] = p[b1];
            b0 = b1;
            if b0 == 0 {
                break;
            }
        }
    }
    let mut pairs = Vec::with_capacity(k);
    let mut total = Rational::zero();
    for b in 1..=w {
        if p[b] == 0 {
            continue;
        }
        let (i, j) = if transpose {
            (rows[b - 1], cols[p[b] - 1])
        } else {
            (rows[p[b] - 1], cols[b - 1])
        };
        total += m.get(i, j);
        pairs.push((i, j));
    }
    (total, pairs)
}

/// Maximum total surplus over the rows and columns in the given index sets.
pub fn max_weight_value(m: &SurplusMatrix, rows: Coalition, cols: Coalition) -> Rational {
    let rows: Vec<usize> = rows.members().collect();
    let cols: Vec<usize> = cols.members().collect();
    hungarian(m, &rows, &cols).0
}

/// Optimal matching between the row indices `rows` and column indices `cols`.
///
/// The matching is complete on the short side and, among all optimal ones,
/// the lexicographically smallest list of pairs in row-major order.
pub fn max_weight_matching(
    m: &SurplusMatrix,
    rows: Coalition,
    cols: Coalition,
) -> (Rational, Matching) {
    let rows: Vec<usize> = rows.members().filter(|&i| i < m.rows()).collect();
    let cols: Vec<usize> = cols.members().filter(|&j| j < m.cols()).collect();
    let (opt, _) = hungarian(m, &rows, &cols);
    let size = rows.len().min(cols.len());

    let mut chosen = Vec::with_capacity(size);
    let mut fixed = Rational::zero();
    let mut row_pool: Vec<usize> = rows.clone();
    let mut col_pool: Vec<usize> = cols.clone();
    for step in 0..size {
        let need = size - step - 1;
        let mut picked = None;
        'search: for (ri, &i) in row_pool.iter().enumerate() {
            let rest_rows: Vec<usize> = row_pool[ri + 1..].to_vec();
            for &j in &col_pool {
                let rest_cols: Vec<usize> = col_pool.iter().copied().filter(|&c| c != j).collect();
                if rest_rows.len().min(rest_cols.len()) != need {
                    continue;
                }
                let tail = hungarian(m, &rest_rows, &rest_cols).0;
                if &fixed + m.get(i, j) + tail == opt {
                    picked = Some((ri, i, j));
                    break 'search;
                }
            }
        }
        let (ri, i, j) = picked.expect("an optimal completion always exists");
        fixed += m.get(i, j);
        chosen.push((i, j));
        row_pool.drain(..=ri);
        col_pool.retain(|&c| c != j);
    }
    (opt, Matching::new(chosen))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    /// Every matching (any size) of the submatrix, by recursion over rows.
    fn all_matchings(rows: &[usize], cols: &[usize]) -> Vec<Vec<(usize, usize)>> {
        let Some((&i, rest)) = rows.split_first() else {
            return vec![Vec::new()];
        };
        let mut out = all_matchings(rest, cols);
        for &j in cols {
            let remaining: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
            for mut m in all_matchings(rest, &remaining) {
                m.insert(0, (i, j));
                out.push(m);
            }
        }
        out
    }

    #[test]
    fn example_matrix() {
        let m = SurplusMatrix::from_ints(&[&[6, 3], &[5, 0]]);
        let (v, mu) = max_weight_matching(&m, Coalition::full(2), Coalition::full(2));
        assert_eq!(v, int(8));
        assert_eq!(mu.pairs(), &[(0, 1), (1, 0)]);
        let (v, mu) = max_weight_matching(&m, Coalition::EMPTY, Coalition::full(2));
        assert_eq!(v, int(0));
        assert!(mu.is_empty());
    }

    #[test]
    fn ties_pick_lexicographically_smallest() {
        let m = SurplusMatrix::from_ints(&[&[1, 1], &[1, 1]]);
        let (_, mu) = max_weight_matching(&m, Coalition::full(2), Coalition::full(2));
        assert_eq!(mu.pairs(), &[(0, 0), (1, 1)]);
        // three rows, one column: the first row that can be matched optimally
        let m = SurplusMatrix::from_ints(&[&[2], &[3], &[3]]);
        let (v, mu) = max_weight_matching(&m, Coalition::full(3), Coalition::full(1));
        assert_eq!(v, int(3));
        assert_eq!(mu.pairs(), &[(1, 0)]);
        // zero rows still get matched on the short side
        let m = SurplusMatrix::from_ints(&[&[0, 0], &[0, 4]]);
        let (_, mu) = max_weight_matching(&m, Coalition::full(2), Coalition::full(2));
        assert_eq!(mu.pairs(), &[(0, 0), (1, 1)]);
    }

    fn matrix(max_dim: usize) -> impl Strategy<Value = SurplusMatrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            proptest::collection::vec((0i64..7, 1i64..4), r * c).prop_map(move |vals| {
                let rows = (0..r)
                    .map(|i| {
                        (0..c)
                            .map(|j| {
                                let (n, d) = vals[i * c + j];
                                Rational::new(n, d)
                            })
                            .collect()
                    })
                    .collect();
                SurplusMatrix::new(rows).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn agrees_with_enumeration(m in matrix(4), rmask in 0u32..16, cmask in 0u32..16) {
            let rows = Coalition(rmask).intersection(Coalition::full(m.rows()));
            let cols = Coalition(cmask).intersection(Coalition::full(m.cols()));
            let rv: Vec<usize> = rows.members().collect();
            let cv: Vec<usize> = cols.members().collect();
            let all = all_matchings(&rv, &cv);
            let best = all.iter().map(|mu| mu.iter().map(|&(i, j)| m.get(i, j)).sum::<Rational>()).max().unwrap();
            let (v, mu) = max_weight_matching(&m, rows, cols);
            prop_assert_eq!(&v, &best);
            prop_assert_eq!(mu.value(&m), best.clone());
            prop_assert_eq!(mu.len(), rv.len().min(cv.len()));
            let smallest = all
                .iter()
                .filter(|mu| mu.len() == rv.len().min(cv.len()))
                .filter(|mu| mu.iter().map(|&(i, j)| m.get(i, j)).sum::<Rational>() == best)
                .min()
                .unwrap();
            prop_assert_eq!(mu.pairs(), smallest.as_slice());
            prop_assert_eq!(max_weight_value(&m, rows, cols), best);
        }
    }
}
