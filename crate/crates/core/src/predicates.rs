//! Deciding when a skew immaculate function vanishes.
//!
//! Three tests live here, from weakest to strongest conclusion:
//!
//! * [`necessary_condition_holds`] counts, for each row, how many entries of
//!   `hat(beta)` exceed `hat(alpha)_i`. If for some `k` at least `k` rows each
//!   have `l - k + 1` or more such entries, every term of the expansion dies.
//! * [`find_matching_certificate`] looks for a row-to-column assignment over
//!   non-negative subscripts. One exists exactly when the counting condition
//!   holds, and it names a term that survives before cancellation.
//! * [`nocancel_conditions_hold`] together with [`greedy_h0_term`] covers
//!   pairs skewed by a partition: the greedy term picks up every `H_0` in the
//!   matrix and no other term can cancel it.
//!
//! [`classify`] combines them with the exact expansion as a last resort.

use std::fmt;

use crate::compositions::{Composition, WeakComposition};
use crate::error::{Error, Result};
use crate::hword::{HExpansion, HWord, Sign};
use crate::ndet::{self, render_assignment, term_of_selection, SignedSelection};
use crate::skew_matrix::{build_matrix, SubscriptMatrix};

fn check_lengths(alpha: &Composition, beta: &WeakComposition) -> Result<()> {
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch { alpha: alpha.len(), beta: beta.len() });
    }
    Ok(())
}

/// For every row `i`, the number of `j` with `hat(beta)_j > hat(alpha)_i`.
pub fn row_negative_counts(alpha: &Composition, beta: &WeakComposition) -> Result<Vec<usize>> {
    check_lengths(alpha, beta)?;
    let b = beta.hat();
    Ok(alpha
        .hat()
        .entries()
        .iter()
        .map(|&a| b.entries().iter().filter(|&&bj| bj > a).count())
        .collect())
}

/// For every `k` in `1..=l`, at most `k - 1` rows have `l - k + 1` or more
/// negative subscripts.
pub fn necessary_condition_holds(alpha: &Composition, beta: &WeakComposition) -> Result<bool> {
    let neg = row_negative_counts(alpha, beta)?;
    let l = neg.len();
    Ok((1..=l).all(|k| neg.iter().filter(|&&c| c > l - k).count() < k))
}

/// Every entry of `hat(alpha)` is at least some entry of `hat(beta)`.
/// This is the `k = 1` case of [`necessary_condition_holds`].
pub fn lemma_onebigger_holds(alpha: &Composition, beta: &WeakComposition) -> Result<bool> {
    check_lengths(alpha, beta)?;
    let min_b = beta.hat().entries().iter().copied().min().unwrap_or(i64::MIN);
    Ok(alpha.hat().entries().iter().all(|&a| a >= min_b))
}

/// A complete matching of rows to columns using only non-negative subscripts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatchingCertificate {
    column_of_row: Vec<usize>,
}

impl MatchingCertificate {
    /// 0-based column for each row.
    pub fn columns(&self) -> &[usize] {
        &self.column_of_row
    }

    /// Every selected subscript is non-negative and the columns are a permutation.
    pub fn verify(&self, m: &SubscriptMatrix) -> bool {
        self.column_of_row.len() == m.dim()
            && SignedSelection::new(self.column_of_row.clone()).is_ok()
            && self.column_of_row.iter().enumerate().all(|(r, &c)| m.get(r, c) >= 0)
    }

    pub fn to_selection(&self) -> SignedSelection {
        SignedSelection::new(self.column_of_row.clone()).expect("certificate is a permutation")
    }
}

impl fmt::Display for MatchingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_assignment(&self.column_of_row))
    }
}

/// Rows are placed in increasing order. A row first takes its lowest free
/// admissible column; failing that, it augments along the first alternating
/// path found trying columns in increasing order.
pub fn find_matching_certificate(m: &SubscriptMatrix) -> Option<MatchingCertificate> {
    let n = m.dim();
    let adj: Vec<Vec<usize>> =
        m.rows().map(|r| (0..n).filter(|&j| r[j] >= 0).collect()).collect();
    let mut row_of_col: Vec<Option<usize>> = vec![None; n];
    let mut col_of_row: Vec<Option<usize>> = vec![None; n];

    fn augment(
        row: usize,
        adj: &[Vec<usize>],
        visited: &mut [bool],
        row_of_col: &mut [Option<usize>],
        col_of_row: &mut [Option<usize>],
    ) -> bool {
        for &c in &adj[row] {
            if visited[c] {
                continue;
            }
            visited[c] = true;
            let free = match row_of_col[c] {
                None => true,
                Some(other) => augment(other, adj, visited, row_of_col, col_of_row),
            };
            if free {
                row_of_col[c] = Some(row);
                col_of_row[row] = Some(c);
                return true;
            }
        }
        false
    }

    for row in 0..n {
        if let Some(&c) = adj[row].iter().find(|&&c| row_of_col[c].is_none()) {
            row_of_col[c] = Some(row);
            col_of_row[row] = Some(c);
            continue;
        }
        let mut visited = vec![false; n];
        if !augment(row, &adj, &mut visited, &mut row_of_col, &mut col_of_row) {
            return None;
        }
    }
    let column_of_row = col_of_row.into_iter().collect::<Option<Vec<_>>>()?;
    Some(MatchingCertificate { column_of_row })
}

/// Self-check: a certificate exists exactly when the counting condition holds.
pub fn certificate_agrees_with_condition(
    alpha: &Composition,
    beta: &WeakComposition,
) -> Result<bool> {
    let m = build_matrix(alpha, beta)?;
    Ok(find_matching_certificate(&m).is_some() == necessary_condition_holds(alpha, beta)?)
}

/// Condition (1) via sorted row counts: the `k`-th smallest count is at least `k`.
///
/// The worst `k`-subset of rows is the one with the `k` smallest counts, so
/// this matches "every set of `k` rows has a row with `k` non-negative entries".
pub fn sorted_counts_condition(counts: &[usize]) -> bool {
    let mut c = counts.to_vec();
    c.sort_unstable();
    c.iter().enumerate().all(|(i, &ci)| ci > i)
}

/// Condition (2): two identical rows never contain a zero subscript.
pub fn identical_rows_avoid_zero(m: &SubscriptMatrix) -> bool {
    let rows: Vec<&[i64]> = m.rows().collect();
    for i in 0..rows.len() {
        if !rows[i].contains(&0) {
            continue;
        }
        if rows[i + 1..].iter().any(|r| *r == rows[i]) {
            return false;
        }
    }
    true
}

/// Both no-cancellation conditions on a bare matrix.
pub fn nocancel_conditions_hold_for_matrix(m: &SubscriptMatrix) -> bool {
    sorted_counts_condition(&m.row_nonneg_counts()) && identical_rows_avoid_zero(m)
}

/// `lambda` must be a partition, possibly padded with trailing zeros.
pub fn nocancel_conditions_hold(alpha: &Composition, lambda: &WeakComposition) -> Result<bool> {
    check_lengths(alpha, lambda)?;
    if !lambda.is_padded_partition() {
        return Err(Error::NotAPartition(lambda.to_string()));
    }
    Ok(nocancel_conditions_hold_for_matrix(&build_matrix(alpha, lambda)?))
}

/// A term built by the greedy `H_0`-capturing procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTerm {
    pub sign: Sign,
    pub word: HWord,
    pub selection: SignedSelection,
}

/// Repeatedly take a row whose remaining entries are all non-negative
/// (preferring one holding a zero, then the topmost), select its entry in the
/// leftmost remaining column, and delete that row and column.
///
/// Condition (1) is rechecked on every intermediate submatrix, and the final
/// selection must cover every zero of `m`; either failure is reported as an
/// [`Error::InvariantViolation`].
pub fn greedy_h0_term(m: &SubscriptMatrix) -> Result<GreedyTerm> {
    let n = m.dim();
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<usize> = (0..n).collect();
    let mut column_of_row = vec![usize::MAX; n];

    while !rows.is_empty() {
        let counts: Vec<usize> = rows
            .iter()
            .map(|&r| cols.iter().filter(|&&c| m.get(r, c) >= 0).count())
            .collect();
        if !sorted_counts_condition(&counts) {
            return Err(Error::InvariantViolation(format!(
                "row-count condition fails after deleting {} columns",
                n - cols.len()
            )));
        }
        let full = |r: &usize| cols.iter().all(|&c| m.get(*r, c) >= 0);
        let has_zero = |r: &usize| cols.iter().any(|&c| m.get(*r, c) == 0);
        let pick = rows
            .iter()
            .position(|r| full(r) && has_zero(r))
            .or_else(|| rows.iter().position(full))
            .ok_or_else(|| {
                Error::InvariantViolation("no row with full non-negative support".into())
            })?;
        let row = rows.remove(pick);
        column_of_row[row] = cols.remove(0);
    }

    for (r, &chosen) in column_of_row.iter().enumerate() {
        for c in 0..n {
            if m.get(r, c) == 0 && chosen != c {
                return Err(Error::InvariantViolation(format!(
                    "zero subscript at ({}, {}) not selected",
                    r + 1,
                    c + 1
                )));
            }
        }
    }

    let selection = SignedSelection::new(column_of_row)?;
    let (sign, word) = term_of_selection(m, &selection)?
        .ok_or_else(|| Error::InvariantViolation("greedy term selected a negative subscript".into()))?;
    Ok(GreedyTerm { sign, word, selection })
}

/// Outcome of [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKind {
    /// Every term vanishes before any cancellation.
    AllZeroPreCancellation,
    /// Some term survives before cancellation; nothing stronger was shown.
    NonzeroTermExists,
    /// The no-cancellation conditions hold, so the function is nonzero.
    ProvablyNonzero,
    /// Terms survive, but the exact expansion is zero.
    ZeroAfterCancellation,
}

impl ClassKind {
    pub const ALL: [ClassKind; 4] = [
        ClassKind::AllZeroPreCancellation,
        ClassKind::NonzeroTermExists,
        ClassKind::ProvablyNonzero,
        ClassKind::ZeroAfterCancellation,
    ];

    pub fn token(self) -> &'static str {
        match self {
            ClassKind::AllZeroPreCancellation => "ALL_ZERO_PRE_CANCELLATION",
            ClassKind::NonzeroTermExists => "NONZERO_TERM_EXISTS",
            ClassKind::ProvablyNonzero => "PROVABLY_NONZERO",
            ClassKind::ZeroAfterCancellation => "ZERO_AFTER_CANCELLATION",
        }
    }

    pub fn from_token(token: &str) -> Option<ClassKind> {
        ClassKind::ALL.into_iter().find(|k| k.token() == token)
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: ClassKind,
    /// Present whenever a term survives before cancellation.
    pub certificate: Option<MatchingCertificate>,
    /// Greedy term, present for [`ClassKind::ProvablyNonzero`].
    pub witness: Option<GreedyTerm>,
    /// The exact expansion, when it was computed.
    pub expansion: Option<HExpansion>,
    /// Set when the dimension exceeded the cap and no exact expansion was tried.
    pub cancellation_undecided: bool,
}

impl Classification {
    /// `TOKEN` or `TOKEN 1->c1,2->c2,...` when the class carries a certificate.
    pub fn render(&self) -> String {
        match (&self.kind, &self.certificate) {
            (ClassKind::NonzeroTermExists | ClassKind::ProvablyNonzero, Some(cert)) => {
                format!("{} {}", self.kind, cert)
            }
            _ => self.kind.token().to_string(),
        }
    }
}

pub fn classify(alpha: &Composition, beta: &WeakComposition) -> Result<Classification> {
    classify_with_cap(alpha, beta, ndet::DEFAULT_DIM_CAP)
}

/// As [`classify`], expanding exactly only when `l <= cap`.
pub fn classify_with_cap(
    alpha: &Composition,
    beta: &WeakComposition,
    cap: usize,
) -> Result<Classification> {
    let m = build_matrix(alpha, beta)?;
    if !necessary_condition_holds(alpha, beta)? {
        return Ok(Classification {
            kind: ClassKind::AllZeroPreCancellation,
            certificate: None,
            witness: None,
            expansion: None,
            cancellation_undecided: false,
        });
    }
    let certificate = find_matching_certificate(&m).ok_or_else(|| {
        Error::InvariantViolation(format!(
            "counting condition holds for {alpha}/{beta} but no complete matching exists"
        ))
    })?;

    if beta.is_padded_partition() && nocancel_conditions_hold_for_matrix(&m) {
        let witness = greedy_h0_term(&m)?;
        return Ok(Classification {
            kind: ClassKind::ProvablyNonzero,
            certificate: Some(certificate),
            witness: Some(witness),
            expansion: None,
            cancellation_undecided: false,
        });
    }

    if m.dim() > cap {
        return Ok(Classification {
            kind: ClassKind::NonzeroTermExists,
            certificate: Some(certificate),
            witness: None,
            expansion: None,
            cancellation_undecided: true,
        });
    }
    let expansion = ndet::ndet_laplace_with_cap(&m, cap)?;
    let kind = if expansion.is_zero() {
        ClassKind::ZeroAfterCancellation
    } else {
        ClassKind::NonzeroTermExists
    };
    Ok(Classification {
        kind,
        certificate: Some(certificate),
        witness: None,
        expansion: Some(expansion),
        cancellation_undecided: false,
    })
}
