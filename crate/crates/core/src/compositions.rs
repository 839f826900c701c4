//! Compositions, weak compositions and hat sequences.
//!
//! A [`Composition`] has positive parts and indexes immaculate functions. A
//! [`WeakComposition`] also allows zero parts; it is used for the skewing
//! sequence so that an unskewed function is the special case of skewing by
//! all zeros. The hat of a sequence subtracts the (1-based) position from
//! each part and is what every sign argument in this crate inspects.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Ordered sequence of positive integers, at least one part long.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

/// Ordered sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakComposition(Vec<u32>);

/// `entries[i] = parts[i] - (i + 1)`; entries may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HatSequence(Vec<i64>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if let Some((index, &value)) = parts.iter().enumerate().find(|(_, &p)| p == 0) {
            return Err(Error::NonPositivePart { index: index + 1, value });
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn hat(&self) -> HatSequence {
        hat(self.0.as_slice())
    }

    pub fn is_partition(&self) -> bool {
        is_partition(&self.0)
    }

    pub fn as_weak(&self) -> WeakComposition {
        WeakComposition(self.0.clone())
    }

    /// Append trailing zeros up to `length`.
    pub fn pad_to_length(&self, length: usize) -> Result<WeakComposition> {
        if length < self.len() {
            return Err(Error::PadTooShort { have: self.len(), want: length });
        }
        let mut parts = self.0.clone();
        parts.resize(length, 0);
        Ok(WeakComposition(parts))
    }
}

impl WeakComposition {
    pub fn new(parts: Vec<u32>) -> Self {
        WeakComposition(parts)
    }

    pub fn zeros(length: usize) -> Self {
        WeakComposition(vec![0; length])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn hat(&self) -> HatSequence {
        hat(&self.0)
    }

    /// Weakly decreasing with every part positive.
    pub fn is_partition(&self) -> bool {
        is_partition(&self.0)
    }

    /// A partition followed by zero or more zeros.
    pub fn is_padded_partition(&self) -> bool {
        let nonzero = self.0.iter().take_while(|&&p| p > 0).count();
        self.0[nonzero..].iter().all(|&p| p == 0)
            && (nonzero == 0 || is_partition(&self.0[..nonzero]))
    }

    /// Drops trailing zeros. `None` if nothing is left or an interior zero remains.
    pub fn strip_trailing_zeros(&self) -> Option<Composition> {
        let end = self.0.iter().rposition(|&p| p > 0)? + 1;
        Composition::new(self.0[..end].to_vec()).ok()
    }
}

impl From<Composition> for WeakComposition {
    fn from(c: Composition) -> Self {
        WeakComposition(c.0)
    }
}

impl From<&Composition> for WeakComposition {
    fn from(c: &Composition) -> Self {
        WeakComposition(c.0.clone())
    }
}

impl HatSequence {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Inverse of [`hat`]; `None` if some recovered part would be negative.
    pub fn unhat(&self) -> Option<WeakComposition> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| u32::try_from(e + i as i64 + 1).ok())
            .collect::<Option<Vec<_>>>()
            .map(WeakComposition)
    }
}

/// Subtract the 1-based position from every part.
pub fn hat(parts: &[u32]) -> HatSequence {
    HatSequence(
        parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i64::from(p) - (i as i64 + 1))
            .collect(),
    )
}

/// Weakly decreasing, all parts positive, non-empty.
pub fn is_partition(parts: &[u32]) -> bool {
    !parts.is_empty() && parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1])
}

/// Every composition of `n` with exactly `length` parts, in lexicographic order.
pub fn enumerate_compositions(n: u32, length: usize) -> Compositions {
    let state = if length == 0 || (n as usize) < length {
        None
    } else {
        let mut parts = vec![1; length];
        parts[length - 1] = n - (length as u32 - 1);
        Some(parts)
    };
    Compositions { state }
}

/// Iterator returned by [`enumerate_compositions`].
#[derive(Debug, Clone)]
pub struct Compositions {
    state: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.state.take()?;
        let k = current.len();
        let mut next = current.clone();
        let mut tail: u32 = next[k - 1];
        for i in (0..k - 1).rev() {
            // tail = sum of next[i+1..]
            let slots = (k - 1 - i) as u32;
            if tail > slots {
                next[i] += 1;
                for p in next.iter_mut().take(k - 1).skip(i + 1) {
                    *p = 1;
                }
                next[k - 1] = tail - 1 - (slots - 1);
                self.state = Some(next);
                break;
            }
            tail += next[i];
        }
        Some(Composition(current))
    }
}

fn parse_parts(text: &str) -> Result<Vec<u32>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty composition".into()));
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u32>()
                .map_err(|_| Error::Parse(format!("`{tok}` is not a non-negative integer")))
        })
        .collect()
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

impl FromStr for WeakComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(WeakComposition(parse_parts(s)?))
    }
}

fn write_parts<T: fmt::Display>(f: &mut fmt::Formatter<'_>, parts: &[T]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Display for HatSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hat_examples() {
        assert_eq!(c(&[3, 2, 3, 5, 1]).hat().entries(), &[2, 0, 0, 1, -4]);
        assert_eq!(c(&[5, 7, 1, 3]).hat().entries(), &[4, 5, -2, -1]);
        assert_eq!(c(&[1]).hat().entries(), &[0]);
        assert_eq!(WeakComposition::zeros(3).hat().entries(), &[-1, -2, -3]);
    }

    #[test]
    fn partition_examples() {
        assert!(c(&[5, 3, 3, 2]).is_partition());
        assert!(!c(&[2, 5, 6]).is_partition());
        assert!(c(&[1]).is_partition());
        assert!(WeakComposition::new(vec![3, 1, 0, 0]).is_padded_partition());
        assert!(!WeakComposition::new(vec![3, 1, 0, 0]).is_partition());
        assert!(!WeakComposition::new(vec![3, 0, 1]).is_padded_partition());
        assert!(WeakComposition::zeros(2).is_padded_partition());
    }

    #[test]
    fn composition_rejects_zero_and_empty() {
        assert_eq!(Composition::new(vec![]), Err(Error::EmptyComposition));
        assert_eq!(
            Composition::new(vec![2, 0]),
            Err(Error::NonPositivePart { index: 2, value: 0 })
        );
    }

    #[test]
    fn enumerate_small() {
        let got: Vec<_> = enumerate_compositions(3, 2).collect();
        assert_eq!(got, vec![c(&[1, 2]), c(&[2, 1])]);
        assert_eq!(enumerate_compositions(4, 1).collect::<Vec<_>>(), vec![c(&[4])]);
        assert_eq!(enumerate_compositions(2, 3).count(), 0);
        assert_eq!(enumerate_compositions(5, 0).count(), 0);
    }

    #[test]
    fn enumerate_count_matches_listing() {
        // Stars and bars: an independent listing by brute force over the cube.
        let mut brute = Vec::new();
        for a in 1..=6u32 {
            for b in 1..=6u32 {
                for d in 1..=6u32 {
                    if a + b + d == 6 {
                        brute.push(c(&[a, b, d]));
                    }
                }
            }
        }
        let listed: Vec<_> = enumerate_compositions(6, 3).collect();
        assert_eq!(listed.len(), 10);
        assert_eq!(listed, brute);
    }

    #[test]
    fn padding() {
        assert_eq!(c(&[2, 1]).pad_to_length(4).unwrap().parts(), &[2, 1, 0, 0]);
        assert_eq!(c(&[3]).pad_to_length(1).unwrap().parts(), &[3]);
        assert_eq!(c(&[6, 4, 3]).pad_to_length(3).unwrap().parts(), &[6, 4, 3]);
        assert_eq!(
            c(&[6, 4, 3]).pad_to_length(2),
            Err(Error::PadTooShort { have: 3, want: 2 })
        );
    }

    #[test]
    fn parse_and_display() {
        let x: Composition = "6,4,3".parse().unwrap();
        assert_eq!(x.to_string(), "6,4,3");
        assert!("6,,3".parse::<Composition>().is_err());
        assert!("6,-1".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
        assert!("2,0".parse::<Composition>().is_err());
        assert_eq!("2,0".parse::<WeakComposition>().unwrap().parts(), &[2, 0]);
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    proptest! {
        #[test]
        fn hat_is_injective(parts in prop::collection::vec(0u32..20, 1..8)) {
            let w = WeakComposition::new(parts);
            prop_assert_eq!(w.hat().unhat().unwrap(), w);
        }

        #[test]
        fn partition_hat_strictly_decreases(mut parts in prop::collection::vec(1u32..15, 1..8)) {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let h = hat(&parts);
            prop_assert!(h.entries().windows(2).all(|w| w[0] > w[1]));
        }

        #[test]
        fn enumeration_is_complete(n in 1u32..13, len in 1usize..7) {
            let all: Vec<_> = enumerate_compositions(n, len).collect();
            let expected = if (n as usize) < len { 0 } else { binomial(n as u64 - 1, len as u64 - 1) };
            prop_assert_eq!(all.len() as u64, expected);
            prop_assert!(all.iter().all(|x| x.size() == n as u64 && x.len() == len));
            prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
