//! The associated matrix of H-subscripts for a skew pair, and the structural
//! checks on its sign pattern.
//!
//! Indices are 0-based internally. Anything rendered for people is 1-based.

use std::fmt;

use crate::compositions::{Composition, WeakComposition};
use crate::error::{Error, Result};

/// Square matrix of H-subscripts. Entry `(i, j)` stands for `H_{entries[i][j]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubscriptMatrix {
    dim: usize,
    entries: Vec<i64>,
    provenance: Option<(Composition, WeakComposition)>,
}

/// `entries[i][j] = hat(alpha)_i - hat(beta)_j`.
pub fn build_matrix(alpha: &Composition, beta: &WeakComposition) -> Result<SubscriptMatrix> {
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch { alpha: alpha.len(), beta: beta.len() });
    }
    let a = alpha.hat();
    let b = beta.hat();
    let dim = alpha.len();
    let mut entries = Vec::with_capacity(dim * dim);
    for &ai in a.entries() {
        entries.extend(b.entries().iter().map(|&bj| ai - bj));
    }
    Ok(SubscriptMatrix { dim, entries, provenance: Some((alpha.clone(), beta.clone())) })
}

/// Matrix of the unskewed function: entry `(i, j)` is `mu_i - i + j`.
pub fn immaculate_matrix(mu: &Composition) -> SubscriptMatrix {
    build_matrix(mu, &WeakComposition::zeros(mu.len())).expect("lengths agree by construction")
}

impl SubscriptMatrix {
    /// A bare matrix with no composition pair behind it.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<SubscriptMatrix> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::RaggedMatrix { expected: 1, found: 0 });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::RaggedMatrix { expected: dim, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(SubscriptMatrix { dim, entries, provenance: None })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim + col]
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.dim)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows().map(<[i64]>::to_vec).collect()
    }

    pub fn provenance(&self) -> Option<&(Composition, WeakComposition)> {
        self.provenance.as_ref()
    }

    pub fn sign_pattern(&self) -> SignPattern {
        SignPattern {
            rows: self.dim,
            cols: self.dim,
            nonneg: self.entries.iter().map(|&e| e >= 0).collect(),
        }
    }

    /// `counts[i]` = number of non-negative subscripts in row `i`.
    pub fn row_nonneg_counts(&self) -> Vec<usize> {
        self.rows().map(|r| r.iter().filter(|&&e| e >= 0).count()).collect()
    }

    /// Columns holding a negative subscript in `row`, ascending.
    pub fn negative_columns(&self, row: usize) -> Vec<usize> {
        self.row(row).iter().enumerate().filter(|(_, &e)| e < 0).map(|(j, _)| j).collect()
    }

    /// Every row strictly increases left to right.
    pub fn check_partition_row_monotonicity(&self) -> bool {
        self.rows().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    /// Render one row per line with space-separated subscripts.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SubscriptMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// Which cells hold a non-negative subscript. May be rectangular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignPattern {
    rows: usize,
    cols: usize,
    nonneg: Vec<bool>,
}

impl SignPattern {
    pub fn from_rows(rows: Vec<Vec<bool>>) -> Result<SignPattern> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut nonneg = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::RaggedMatrix { expected: cols, found: row.len() });
            }
            nonneg.extend(row);
        }
        Ok(SignPattern { rows: n, cols, nonneg })
    }

    pub fn is_nonneg(&self, row: usize, col: usize) -> bool {
        self.nonneg[row * self.cols + col]
    }

    /// First 2x2 submatrix (rows r < s, cols m < n) in one of the forbidden
    /// configurations `(<, >=) / (>=, <)` or `(>=, <) / (<, >=)`.
    /// Positions are returned 0-based as `(r, s, m, n)`.
    pub fn negative_crossing_violation(&self) -> Option<(usize, usize, usize, usize)> {
        for r in 0..self.rows {
            for s in r + 1..self.rows {
                for m in 0..self.cols {
                    for n in m + 1..self.cols {
                        let a = self.is_nonneg(r, m);
                        let b = self.is_nonneg(r, n);
                        let c = self.is_nonneg(s, m);
                        let d = self.is_nonneg(s, n);
                        if (!a && b && c && !d) || (a && !b && !c && d) {
                            return Some((r, s, m, n));
                        }
                    }
                }
            }
        }
        None
    }
}

pub fn has_negative_crossing_violation(p: &SignPattern) -> bool {
    p.negative_crossing_violation().is_some()
}

pub fn row_nonneg_counts(m: &SubscriptMatrix) -> Vec<usize> {
    m.row_nonneg_counts()
}

pub fn check_partition_row_monotonicity(m: &SubscriptMatrix) -> bool {
    m.check_partition_row_monotonicity()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn weak(s: &str) -> WeakComposition {
        s.parse().unwrap()
    }

    fn matrix(a: &str, b: &str) -> SubscriptMatrix {
        build_matrix(&comp(a), &weak(b)).unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(
            matrix("6,4,3", "2,4,1").to_rows(),
            vec![vec![4, 3, 7], vec![1, 0, 4], vec![-1, -2, 2]]
        );
        assert_eq!(
            matrix("10,7,9", "9,8,5").to_rows(),
            vec![vec![1, 3, 7], vec![-3, -1, 3], vec![-2, 0, 4]]
        );
        assert_eq!(
            matrix("2,2,5,5", "3,3,3,3").to_rows(),
            vec![vec![-1, 0, 1, 2], vec![-2, -1, 0, 1], vec![0, 1, 2, 3], vec![-1, 0, 1, 2]]
        );
        assert_eq!(
            matrix("5,7,1,3", "5,5,5,1").to_rows(),
            vec![vec![0, 1, 2, 7], vec![1, 2, 3, 8], vec![-6, -5, -4, 1], vec![-5, -4, -3, 2]]
        );
        assert_eq!(
            matrix("4,1,6,5", "2,1,3,2").to_rows(),
            vec![vec![2, 4, 3, 5], vec![-2, 0, -1, 1], vec![2, 4, 3, 5], vec![0, 2, 1, 3]]
        );
        assert_eq!(
            matrix("9,5,5", "2,5,6").to_rows(),
            vec![vec![7, 5, 5], vec![2, 0, 0], vec![1, -1, -1]]
        );
    }

    #[test]
    fn build_rejects_length_mismatch() {
        assert_eq!(
            build_matrix(&comp("6,4,3"), &weak("2,4")),
            Err(Error::LengthMismatch { alpha: 3, beta: 2 })
        );
    }

    #[test]
    fn immaculate_matrix_subscripts() {
        // mu_i - i + j, 1-based
        assert_eq!(immaculate_matrix(&comp("2,1")).to_rows(), vec![vec![2, 3], vec![0, 1]]);
    }

    #[test]
    fn crossing_figure_pattern_is_violation() {
        let t = true;
        let f = false;
        let p = SignPattern::from_rows(vec![vec![t, f, f, f, t], vec![f, f, f, t, t]]).unwrap();
        assert!(has_negative_crossing_violation(&p));
        // columns 1 and 4 (1-based)
        assert_eq!(p.negative_crossing_violation(), Some((0, 1, 0, 3)));
    }

    #[test]
    fn crossing_on_associated_and_trivial_patterns() {
        assert!(!has_negative_crossing_violation(&matrix("6,4,3", "2,4,1").sign_pattern()));
        let all = SignPattern::from_rows(vec![vec![true; 3]; 3]).unwrap();
        assert!(!has_negative_crossing_violation(&all));
        let other = SignPattern::from_rows(vec![vec![false, true], vec![true, false]]).unwrap();
        assert!(has_negative_crossing_violation(&other));
    }

    #[test]
    fn counts() {
        assert_eq!(row_nonneg_counts(&matrix("10,7,9", "9,8,5")), vec![3, 1, 2]);
        assert_eq!(row_nonneg_counts(&matrix("6,4,3", "2,4,1")), vec![3, 3, 1]);
        let m = SubscriptMatrix::from_rows(vec![vec![1, 2], vec![-1, -4]]).unwrap();
        assert_eq!(row_nonneg_counts(&m), vec![2, 0]);
        assert_eq!(m.negative_columns(1), vec![0, 1]);
    }

    #[test]
    fn monotonicity() {
        assert!(check_partition_row_monotonicity(&matrix("2,2,5,5", "3,3,3,3")));
        assert!(!check_partition_row_monotonicity(&matrix("6,4,3", "2,4,1")));
        assert!(check_partition_row_monotonicity(&SubscriptMatrix::from_rows(vec![vec![-7]]).unwrap()));
    }

    #[test]
    fn render_rows() {
        assert_eq!(matrix("6,4,3", "2,4,1").render(), "4 3 7\n1 0 4\n-1 -2 2");
    }

    #[test]
    fn from_rows_rejects_ragged() {
        assert!(SubscriptMatrix::from_rows(vec![vec![1, 2], vec![3]]).is_err());
        assert!(SubscriptMatrix::from_rows(vec![]).is_err());
    }
}
