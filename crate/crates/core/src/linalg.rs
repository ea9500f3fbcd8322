//! Exact rational matrices and column rank by fraction-free elimination.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A matrix of exact rationals, stored by column.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    columns: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    /// Builds a matrix from its columns. All columns must have the same length.
    pub fn from_columns(columns: Vec<Vec<BigRational>>) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::RaggedColumns {
                    column: j,
                    expected: rows,
                    found: c.len(),
                });
            }
        }
        Ok(Self { rows, columns })
    }

    pub fn from_integer_columns<C: AsRef<[i64]>>(columns: &[C]) -> Result<Self> {
        Self::from_columns(
            columns
                .iter()
                .map(|c| {
                    c.as_ref()
                        .iter()
                        .map(|&v| BigRational::from_integer(BigInt::from(v)))
                        .collect()
                })
                .collect(),
        )
    }

    /// Parses columns written as rational literals (`3`, `-2/5`).
    pub fn parse_columns<C, S>(columns: &[C]) -> Result<Self>
    where
        C: AsRef<[S]>,
        S: AsRef<str>,
    {
        let mut parsed = Vec::with_capacity(columns.len());
        for c in columns {
            let mut col = Vec::new();
            for s in c.as_ref() {
                col.push(parse_rational(s.as_ref())?);
            }
            parsed.push(col);
        }
        Self::from_columns(parsed)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[BigRational] {
        &self.columns[j]
    }

    /// Rank of the selected columns.
    ///
    /// Each column is first scaled to integers (a nonzero scaling, so the
    /// rank is unchanged) and the result is reduced with Bareiss
    /// elimination, where every division is exact.
    ///
    /// Panics if a column index is out of range.
    pub fn column_rank<I: IntoIterator<Item = usize>>(&self, cols: I) -> usize {
        let selected: Vec<Vec<BigInt>> = cols
            .into_iter()
            .map(|j| integer_column(&self.columns[j]))
            .collect();
        if selected.is_empty() || self.rows == 0 {
            return 0;
        }
        // Row-major working copy: rows x selected columns.
        let ncols = selected.len();
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| selected.iter().map(|c| c[i].clone()).collect())
            .collect();
        bareiss_rank(&mut a, ncols)
    }

    pub fn is_linearly_independent<I: IntoIterator<Item = usize>>(&self, cols: I) -> bool {
        let cols: Vec<usize> = cols.into_iter().collect();
        self.column_rank(cols.iter().copied()) == cols.len()
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<Vec<String>> = self
            .columns
            .iter()
            .map(|c| c.iter().map(ToString::to_string).collect())
            .collect();
        f.debug_struct("RationalMatrix")
            .field("rows", &self.rows)
            .field("columns", &cols)
            .finish()
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Precondition(format!("`{s}` is not a rational number"));
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Precondition(format!("`{s}` has a zero denominator")));
        }
        Ok(BigRational::new(n, d))
    } else {
        Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        ))
    }
}

fn integer_column(col: &[BigRational]) -> Vec<BigInt> {
    let lcm = col.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    col.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

fn bareiss_rank(a: &mut [Vec<BigInt>], ncols: usize) -> usize {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let (pivot_rows, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &pivot_rows[rank];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..ncols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn example4() -> RationalMatrix {
        RationalMatrix::from_integer_columns(&[
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 0],
            [0, 1, 1],
            [0, 1, 1],
            [0, 0, 0],
        ])
        .unwrap()
    }

    /// Independent route: plain Gauss-Jordan over the rationals.
    fn rational_rank(m: &RationalMatrix, cols: &[usize]) -> usize {
        let mut a: Vec<Vec<BigRational>> = (0..m.rows())
            .map(|i| cols.iter().map(|&j| m.column(j)[i].clone()).collect())
            .collect();
        let mut rank = 0;
        for c in 0..cols.len() {
            let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, rank);
            let pivot_row = a[rank].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i != rank && !row[c].is_zero() {
                    let f = &row[c] / &pivot_row[c];
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x -= &f * p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn example_ranks() {
        let m = example4();
        assert_eq!(m.column_rank([0, 1, 2]), 3);
        assert_eq!(m.column_rank([6]), 0);
        assert_eq!(m.column_rank([4, 5]), 1);
        assert_eq!(m.column_rank(0..7), 3);
        assert!(!m.is_linearly_independent([0, 1, 3]));
        assert!(m.is_linearly_independent([]));
        assert!(m.is_linearly_independent([0, 2, 3]));
    }

    #[test]
    fn ragged_columns_rejected() {
        let err = RationalMatrix::from_integer_columns(&[vec![1, 0], vec![1]]).unwrap_err();
        assert_eq!(
            err,
            Error::RaggedColumns {
                column: 1,
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn parses_fractions() {
        let m = RationalMatrix::parse_columns(&[["1/2", "-3"], ["1", "-6"]]).unwrap();
        assert_eq!(m.column_rank([0, 1]), 1);
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn small_matrix() -> impl Strategy<Value = (usize, Vec<Vec<(i64, i64)>>)> {
        (1usize..=4, 1usize..=6).prop_flat_map(|(rows, cols)| {
            (
                Just(rows),
                prop::collection::vec(prop::collection::vec((-3i64..=3, 1i64..=4), rows), cols),
            )
        })
    }

    fn build(cols: &[Vec<(i64, i64)>]) -> RationalMatrix {
        RationalMatrix::from_columns(
            cols.iter()
                .map(|c| {
                    c.iter()
                        .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                        .collect()
                })
                .collect(),
        )
        .unwrap()
    }

    proptest! {
        #[test]
        fn bareiss_matches_rational_elimination((_rows, cols) in small_matrix(), pick in any::<u8>()) {
            let m = build(&cols);
            let chosen: Vec<usize> = (0..m.cols()).filter(|j| pick & (1 << j) != 0).collect();
            prop_assert_eq!(m.column_rank(chosen.iter().copied()), rational_rank(&m, &chosen));
        }

        #[test]
        fn rank_invariant_under_permutation_and_scaling(
            (_rows, cols) in small_matrix(),
            scale in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 5]),
        ) {
            let m = build(&cols);
            let all: Vec<usize> = (0..m.cols()).collect();
            let r = m.column_rank(all.iter().copied());
            let rev: Vec<usize> = all.iter().rev().copied().collect();
            prop_assert_eq!(m.column_rank(rev), r);
            let mut scaled = cols.clone();
            for e in scaled[0].iter_mut() {
                e.0 *= scale;
            }
            prop_assert_eq!(build(&scaled).column_rank(all.iter().copied()), r);
            prop_assert!(r <= m.cols().min(m.rows()));
        }

        #[test]
        fn rank_grows_by_at_most_one((_rows, cols) in small_matrix()) {
            let m = build(&cols);
            let mut prev = 0;
            for k in 1..=m.cols() {
                let r = m.column_rank(0..k);
                prop_assert!(r == prev || r == prev + 1);
                prev = r;
            }
        }
    }
}
