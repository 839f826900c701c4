use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer polynomial in a fixed number of commuting variables, stored as a
/// map from exponent vectors to nonzero coefficients.
///
/// Arithmetic is checked; an overflowing coefficient panics rather than wraps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i128>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 1)
    }

    pub fn monomial(exponents: Vec<u32>, coeff: i128) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i128 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i128)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    /// Lexicographically largest exponent vector with a nonzero coefficient.
    pub fn leading_term(&self) -> Option<(&[u32], i128)> {
        self.terms.iter().next_back().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: i128) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(coeff).expect("polynomial coefficient overflow");
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, k: i128) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, &c) in &self.terms {
            out.add_term(e.clone(), c.checked_mul(k).expect("polynomial coefficient overflow"));
        }
        out
    }

    /// Exchange variables `i` and `j` (0-based).
    pub fn swap_variables(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, &c) in &self.terms {
            let mut e = e.clone();
            e.swap(i, j);
            out.add_term(e, c);
        }
        out
    }

    pub fn total_degree(exponents: &[u32]) -> u64 {
        exponents.iter().map(|&e| u64::from(e)).sum()
    }

    /// Terms in graded-lex order: higher total degree first, then lexicographically larger.
    pub fn graded_lex_terms(&self) -> Vec<(&[u32], i128)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|(a, _), (b, _)| graded_lex_desc(a, b));
        v
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn graded_lex_desc(a: &[u32], b: &[u32]) -> Ordering {
    SparsePolynomial::total_degree(b)
        .cmp(&SparsePolynomial::total_degree(a))
        .then_with(|| b.cmp(a))
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.graded_lex_terms().into_iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            let sign = if c < 0 { '\u{2212}' } else { '+' };
            write!(f, "{sign}{}\u{b7}", c.unsigned_abs())?;
            if e.iter().all(|&x| x == 0) {
                f.write_str("1")?;
                continue;
            }
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "x{}", i + 1)?,
                    _ => write!(f, "x{}^{x}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn neg(self) -> SparsePolynomial {
        self.scale(-1)
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = SparsePolynomial::zero(self.nvars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.checked_mul(cb).expect("polynomial coefficient overflow"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_render() {
        let x1 = SparsePolynomial::monomial(vec![1, 0], 1);
        let x2 = SparsePolynomial::monomial(vec![0, 1], 1);
        let s = &x1 + &x2;
        let sq = &s * &s;
        assert_eq!(sq.to_string(), "+1·x1^2 +2·x1x2 +1·x2^2");
        assert_eq!((&sq - &sq).to_string(), "0");
        assert!((&sq - &sq).is_zero());
        assert_eq!(SparsePolynomial::one(2).to_string(), "+1·1");
        assert_eq!((&x1 - &x2).to_string(), "+1·x1 −1·x2");
        assert_eq!(sq.swap_variables(0, 1), sq);
        assert_eq!(sq.leading_term(), Some((&[2u32, 0][..], 1)));
    }

    #[test]
    fn graded_order_puts_higher_degree_first() {
        let mut p = SparsePolynomial::zero(2);
        p.add_term(vec![0, 1], 3);
        p.add_term(vec![1, 1], -1);
        p.add_term(vec![0, 0], 2);
        assert_eq!(p.to_string(), "−1·x1x2 +3·x2 +2·1");
    }
}
