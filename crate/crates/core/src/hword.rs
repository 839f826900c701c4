//! The complete homogeneous basis of NSym as a free monoid on positive
//! subscripts, and signed integer combinations of its words.
//!
//! `H_0 = 1` and `H_a = 0` for `a < 0`, so a raw subscript sequence either
//! vanishes or normalizes to a word of positive subscripts.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// A basis word `H_{a1} H_{a2} ... H_{ak}` with every `ai >= 1`.
///
/// The empty word is the unit. Words order by length first, then
/// lexicographically, which is the canonical term order for rendering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HWord(Vec<u32>);

impl HWord {
    pub fn unit() -> HWord {
        HWord(Vec::new())
    }

    /// Build from subscripts that are already positive.
    pub fn new(subscripts: Vec<u32>) -> Option<HWord> {
        subscripts.iter().all(|&a| a >= 1).then_some(HWord(subscripts))
    }

    pub fn subscripts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Noncommutative product: subscripts of `self` then subscripts of `other`.
    pub fn concat(&self, other: &HWord) -> HWord {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        HWord(v)
    }
}

impl Ord for HWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for HWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("H[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// Drop zero subscripts; any negative subscript kills the whole product.
pub fn normalize_word(raw: &[i64]) -> Option<HWord> {
    let mut out = Vec::with_capacity(raw.len());
    for &a in raw {
        match a.cmp(&0) {
            Ordering::Less => return None,
            Ordering::Equal => {}
            Ordering::Greater => out.push(u32::try_from(a).ok()?),
        }
    }
    Some(HWord(out))
}

/// Finite integer combination of [`HWord`]s. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HExpansion {
    terms: BTreeMap<HWord, i64>,
}

impl HExpansion {
    pub fn zero() -> HExpansion {
        HExpansion::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of words with a nonzero coefficient.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, word: &HWord) -> i64 {
        self.terms.get(word).copied().unwrap_or(0)
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&HWord, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// Add `coeff * word`, removing the entry if it cancels.
    pub fn add_word(&mut self, word: HWord, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(coeff).ok_or(Error::CoefficientOverflow)?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// Normalize `raw` and add it with `sign`; a vanishing word leaves `self` unchanged.
    pub fn add_term(&mut self, sign: Sign, raw: &[i64]) -> Result<()> {
        match normalize_word(raw) {
            Some(word) => self.add_word(word, sign.value()),
            None => Ok(()),
        }
    }

    /// In-place sum, used to combine partial expansions.
    pub fn merge(&mut self, other: HExpansion) -> Result<()> {
        for (w, c) in other.terms {
            self.add_word(w, c)?;
        }
        Ok(())
    }

    pub fn from_terms<I>(terms: I) -> Result<HExpansion>
    where
        I: IntoIterator<Item = (HWord, i64)>,
    {
        let mut e = HExpansion::zero();
        for (w, c) in terms {
            e.add_word(w, c)?;
        }
        Ok(e)
    }

    /// Canonical text: `+c·H[a,b] −c·H[...]`, or `0` for the empty expansion.
    pub fn canonical_render(&self) -> String {
        self.to_string()
    }
}

/// Identical term maps.
pub fn expansion_equal(a: &HExpansion, b: &HExpansion) -> bool {
    a == b
}

impl fmt::Display for HExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let sign = if *c < 0 { '\u{2212}' } else { '+' };
            write!(f, "{sign}{}\u{b7}{w}", c.unsigned_abs())?;
        }
        Ok(())
    }
}
