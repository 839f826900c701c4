//! Noncommutative determinant of a subscript matrix.
//!
//! Factors are multiplied in row order, top row first, and each term carries
//! the parity of its permutation. Two independent routes compute it:
//! [`ndet_permutation_sum`] walks all `l!` permutations with no pruning and is
//! the reference; [`ndet_laplace`] recurses along the top row and skips any
//! pivot whose subscript is negative, since `H_a = 0` kills that whole cofactor.

use itertools::Itertools;

use crate::compositions::{Composition, WeakComposition};
use crate::error::{Error, Result};
use crate::hword::{normalize_word, HExpansion, HWord, Sign};
use crate::par::{self, Execution};
use crate::skew_matrix::{build_matrix, immaculate_matrix, SubscriptMatrix};

/// Largest dimension expanded exactly unless a caller raises it explicitly.
pub const DEFAULT_DIM_CAP: usize = 10;

/// One column per row, plus the parity sign of that permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedSelection {
    column_of_row: Vec<usize>,
    sign: Sign,
}

impl SignedSelection {
    /// `column_of_row` is 0-based and must be a permutation of `0..len`.
    pub fn new(column_of_row: Vec<usize>) -> Result<SignedSelection> {
        let n = column_of_row.len();
        let mut seen = vec![false; n];
        for &c in &column_of_row {
            if c >= n || std::mem::replace(&mut seen[c], true) {
                return Err(Error::BadSelection(n));
            }
        }
        let sign = Sign::from_parity(inversions(&column_of_row) % 2 == 1);
        Ok(SignedSelection { column_of_row, sign })
    }

    /// From 1-based one-line notation, e.g. `[2, 4, 1, 3]`.
    pub fn from_one_line(one_based: &[usize]) -> Result<SignedSelection> {
        let n = one_based.len();
        let zero_based = one_based
            .iter()
            .map(|&c| c.checked_sub(1).ok_or(Error::BadSelection(n)))
            .collect::<Result<Vec<_>>>()?;
        SignedSelection::new(zero_based)
    }

    pub fn columns(&self) -> &[usize] {
        &self.column_of_row
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn len(&self) -> usize {
        self.column_of_row.len()
    }

    pub fn is_empty(&self) -> bool {
        self.column_of_row.is_empty()
    }

    /// `1->c1,2->c2,...` with 1-based labels.
    pub fn render(&self) -> String {
        render_assignment(&self.column_of_row)
    }
}

pub(crate) fn render_assignment(column_of_row: &[usize]) -> String {
    column_of_row
        .iter()
        .enumerate()
        .map(|(r, c)| format!("{}->{}", r + 1, c + 1))
        .join(",")
}

fn inversions(p: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

/// The signed normalized word selected by `s`, or `None` if a selected subscript is negative.
pub fn term_of_selection(m: &SubscriptMatrix, s: &SignedSelection) -> Result<Option<(Sign, HWord)>> {
    if s.len() != m.dim() {
        return Err(Error::BadSelection(m.dim()));
    }
    let raw: Vec<i64> = s.columns().iter().enumerate().map(|(r, &c)| m.get(r, c)).collect();
    Ok(normalize_word(&raw).map(|w| (s.sign(), w)))
}

fn check_cap(m: &SubscriptMatrix, cap: usize) -> Result<()> {
    if m.dim() > cap {
        return Err(Error::DimensionCap { dim: m.dim(), cap });
    }
    Ok(())
}

/// Brute-force sum over all permutations.
pub fn ndet_permutation_sum(m: &SubscriptMatrix) -> Result<HExpansion> {
    ndet_permutation_sum_with(m, Execution::default())
}

/// [`ndet_permutation_sum`] with an explicit execution mode. Work is split by
/// the column chosen in the first row.
pub fn ndet_permutation_sum_with(m: &SubscriptMatrix, exec: Execution) -> Result<HExpansion> {
    check_cap(m, DEFAULT_DIM_CAP)?;
    let n = m.dim();
    let first_cols: Vec<usize> = (0..n).collect();
    par::map_reduce(
        exec,
        &first_cols,
        |&first| {
            let rest: Vec<usize> = (0..n).filter(|&c| c != first).collect();
            let mut acc = HExpansion::zero();
            let mut raw = vec![0i64; n];
            for tail in rest.iter().copied().permutations(n - 1) {
                let mut perm = Vec::with_capacity(n);
                perm.push(first);
                perm.extend(tail);
                let sign = Sign::from_parity(inversions(&perm) % 2 == 1);
                for (r, &c) in perm.iter().enumerate() {
                    raw[r] = m.get(r, c);
                }
                acc.add_term(sign, &raw)?;
            }
            Ok(acc)
        },
        || Ok(HExpansion::zero()),
        |a: Result<HExpansion>, b: Result<HExpansion>| {
            let mut a = a?;
            a.merge(b?)?;
            Ok(a)
        },
    )
}

/// Top-row Laplace recursion with the default dimension cap.
pub fn ndet_laplace(m: &SubscriptMatrix) -> Result<HExpansion> {
    ndet_laplace_with_cap(m, DEFAULT_DIM_CAP)
}

pub fn ndet_laplace_with_cap(m: &SubscriptMatrix, cap: usize) -> Result<HExpansion> {
    check_cap(m, cap)?;
    let mut out = HExpansion::zero();
    let mut cols: Vec<usize> = (0..m.dim()).collect();
    let mut prefix = Vec::with_capacity(m.dim());
    laplace_rec(m, 0, &mut cols, &mut prefix, Sign::Plus, &mut out)?;
    Ok(out)
}

fn laplace_rec(
    m: &SubscriptMatrix,
    row: usize,
    cols: &mut Vec<usize>,
    prefix: &mut Vec<u32>,
    sign: Sign,
    out: &mut HExpansion,
) -> Result<()> {
    if row == m.dim() {
        let word = HWord::new(prefix.clone()).expect("only positive subscripts are pushed");
        return out.add_word(word, sign.value());
    }
    for pos in 0..cols.len() {
        let col = cols[pos];
        let e = m.get(row, col);
        if e < 0 {
            continue;
        }
        let cofactor_sign = if pos % 2 == 0 { sign } else { sign.flip() };
        cols.remove(pos);
        if e > 0 {
            prefix.push(e as u32);
        }
        laplace_rec(m, row + 1, cols, prefix, cofactor_sign, out)?;
        if e > 0 {
            prefix.pop();
        }
        cols.insert(pos, col);
    }
    Ok(())
}

/// H-expansion of the skew immaculate function indexed by `alpha / beta`.
pub fn skew_immaculate(alpha: &Composition, beta: &WeakComposition) -> Result<HExpansion> {
    ndet_laplace(&build_matrix(alpha, beta)?)
}

/// H-expansion of the immaculate function indexed by `mu`.
pub fn immaculate(mu: &Composition) -> Result<HExpansion> {
    ndet_laplace(&immaculate_matrix(mu))
}
