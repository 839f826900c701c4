//! Commutative shadow of the noncommutative computations.
//!
//! Symmetric polynomials in finitely many variables: complete homogeneous and
//! monomial polynomials, Schur polynomials from tableaux and from the
//! Jacobi–Trudi determinant, the forgetful image of an H-expansion, and
//! decomposition of a symmetric polynomial into Schur polynomials. None of
//! this shares code with the NSym side, which is what makes it useful as a
//! cross-check.

mod poly;
mod tableau;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;

pub use poly::SparsePolynomial;
pub use tableau::{generate_ssyt, Tableau};

use crate::compositions::is_partition;
use crate::error::{Error, Result};
use crate::hword::HExpansion;

/// `h_k(x_1..x_n)`: sum over weakly increasing index sequences `i_1 <= ... <= i_k`.
/// `h_0 = 1` and `h_k = 0` for negative `k`.
pub fn h_poly(k: i64, n: usize) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero(n);
    if k < 0 || n == 0 {
        return p;
    }
    fn walk(left: i64, from: usize, exps: &mut Vec<u32>, p: &mut SparsePolynomial) {
        if left == 0 {
            p.add_term(exps.clone(), 1);
            return;
        }
        for i in from..exps.len() {
            exps[i] += 1;
            walk(left - 1, i, exps, p);
            exps[i] -= 1;
        }
    }
    walk(k, 0, &mut vec![0; n], &mut p);
    p
}

/// Monomial symmetric polynomial: every distinct rearrangement of `lambda`
/// (padded with zeros) as an exponent vector. Zero when `n < len(lambda)`.
pub fn m_poly(lambda: &[u32], n: usize) -> Result<SparsePolynomial> {
    let parts: Vec<u32> = lambda.iter().copied().filter(|&p| p > 0).collect();
    if !parts.is_empty() && !is_partition(&parts) {
        return Err(Error::NotAPartition(lambda.iter().join(",")));
    }
    let mut p = SparsePolynomial::zero(n);
    if n < parts.len() {
        return Ok(p);
    }
    let mut base = parts;
    base.resize(n, 0);
    let distinct: BTreeSet<Vec<u32>> = base.iter().copied().permutations(n).collect();
    for e in distinct {
        p.add_term(e, 1);
    }
    Ok(p)
}

/// Sum of `x^T` over semistandard tableaux of shape `outer / inner`.
pub fn schur_via_tableaux(outer: &[u32], inner: &[u32], n: usize) -> Result<SparsePolynomial> {
    let mut p = SparsePolynomial::zero(n);
    for t in generate_ssyt(outer, inner, n as u32)? {
        p.add_term(t.weight(n), 1);
    }
    Ok(p)
}

/// Subscripts `outer_i - i - (inner_j - j)` of the Jacobi–Trudi matrix.
pub fn jacobi_trudi_indices(outer: &[u32], inner: &[u32]) -> Result<Vec<Vec<i64>>> {
    let inner = tableau::validate_shape(outer, inner)?;
    let l = outer.len();
    Ok((0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    (i64::from(outer[i]) - i as i64) - (i64::from(inner[j]) - j as i64)
                })
                .collect()
        })
        .collect())
}

/// Commutative determinant of `(h_{outer_i - i - inner_j + j})`.
pub fn schur_via_jacobi_trudi(outer: &[u32], inner: &[u32], n: usize) -> Result<SparsePolynomial> {
    let idx = jacobi_trudi_indices(outer, inner)?;
    let mut cache: HashMap<i64, SparsePolynomial> = HashMap::new();
    for &k in idx.iter().flatten() {
        cache.entry(k).or_insert_with(|| h_poly(k, n));
    }
    let entries: Vec<Vec<&SparsePolynomial>> =
        idx.iter().map(|row| row.iter().map(|k| &cache[k]).collect()).collect();
    let mut cols: Vec<usize> = (0..entries.len()).collect();
    Ok(det_rec(&entries, 0, &mut cols, n))
}

fn det_rec(m: &[Vec<&SparsePolynomial>], row: usize, cols: &mut Vec<usize>, n: usize) -> SparsePolynomial {
    if row == m.len() {
        return SparsePolynomial::one(n);
    }
    let mut acc = SparsePolynomial::zero(n);
    for pos in 0..cols.len() {
        let col = cols[pos];
        let pivot = m[row][col];
        if pivot.is_zero() {
            continue;
        }
        cols.remove(pos);
        let minor = det_rec(m, row + 1, cols, n);
        cols.insert(pos, col);
        let term = pivot * &minor;
        acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Image under `H_a -> h_a`: each word becomes a product of complete
/// homogeneous polynomials in `n` variables.
pub fn forgetful(e: &HExpansion, n: usize) -> SparsePolynomial {
    let mut out = SparsePolynomial::zero(n);
    for (word, c) in e.iter() {
        let product = word
            .subscripts()
            .iter()
            .fold(SparsePolynomial::one(n), |acc, &a| &acc * &h_poly(i64::from(a), n));
        out = &out + &product.scale(i128::from(c));
    }
    out
}

/// Write a symmetric polynomial as an integer combination of Schur polynomials
/// in the same variables, keyed by partition.
///
/// Repeatedly strips the lexicographically leading monomial `c * x^mu`
/// by subtracting `c * s_mu`; `s_mu` has leading monomial `x^mu` with
/// coefficient one, so the coefficients are exact.
pub fn schur_decompose(p: &SparsePolynomial) -> Result<BTreeMap<Vec<u32>, i128>> {
    let n = p.nvars();
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = rest.leading_term() {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric(lead.iter().join(",")));
        }
        let mu: Vec<u32> = lead.iter().copied().filter(|&x| x > 0).collect();
        let s = if mu.is_empty() {
            SparsePolynomial::one(n)
        } else {
            schur_via_tableaux(&mu, &[], n)?
        };
        rest = &rest - &s.scale(c);
        out.insert(mu, c);
    }
    Ok(out)
}
