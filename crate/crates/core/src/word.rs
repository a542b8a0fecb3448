//! Indexed generators and words over them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A generator `r_ij` (or `R_ij`, `r*_ij`, `a_ij` depending on context),
/// indexed by an ordered pair of distinct strands.
///
/// The derived order is the numerical order on `(i, j)`, which is the
/// generator order used by every canonical form in this crate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub i: u8,
    pub j: u8,
}

impl Generator {
    pub const fn new(i: u8, j: u8) -> Self {
        Generator { i, j }
    }

    /// Builds `r_ij` after checking `i ≠ j` and `1 ≤ i, j ≤ n`.
    pub fn checked(i: usize, j: usize, n: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > n || j > n || n > u8::MAX as usize {
            return Err(Error::InvalidGenerator { i, j, n });
        }
        Ok(Generator::new(i as u8, j as u8))
    }

    pub fn reversed(self) -> Self {
        Generator::new(self.j, self.i)
    }

    pub fn is_valid_for(self, n: usize) -> bool {
        self.i != self.j && self.i >= 1 && self.j >= 1 && (self.i as usize) <= n && (self.j as usize) <= n
    }

    pub fn touches(self, v: u8) -> bool {
        self.i == v || self.j == v
    }

    /// Serialization token `r{i}_{j}`.
    pub fn token(self) -> String {
        format!("r{}_{}", self.i, self.j)
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}_{}", self.i, self.j)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}_{}", self.i, self.j)
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("bad generator token {s:?}"));
        let body = s
            .strip_prefix('r')
            .or_else(|| s.strip_prefix('R'))
            .or_else(|| s.strip_prefix('a'))
            .ok_or_else(bad)?;
        let (i, j) = body.split_once('_').ok_or_else(bad)?;
        let i: u8 = i.parse().map_err(|_| bad())?;
        let j: u8 = j.parse().map_err(|_| bad())?;
        if i == j || i == 0 || j == 0 {
            return Err(bad());
        }
        Ok(Generator::new(i, j))
    }
}

/// All generators of `pvb_n`: every ordered pair of distinct strands, in
/// generator order.
pub fn all_ordered_generators(n: usize) -> Vec<Generator> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1));
    for i in 1..=n as u8 {
        for j in 1..=n as u8 {
            if i != j {
                out.push(Generator::new(i, j));
            }
        }
    }
    out
}

/// Generators `r_ij` with `i < j`.
pub fn increasing_generators(n: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in 1..=n as u8 {
        for j in i + 1..=n as u8 {
            out.push(Generator::new(i, j));
        }
    }
    out
}

/// A word in the generators. The empty word is the unit.
///
/// Words compare by length first, then lexicographically by generator.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: Generator) -> Self {
        Word(alloc::vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn tokens(&self) -> Vec<String> {
        self.0.iter().map(|g| g.token()).collect()
    }
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Self {
        Word(v)
    }
}

impl From<&[Generator]> for Word {
    fn from(v: &[Generator]) -> Self {
        Word(v.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("·")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Position of `w` in the row-major enumeration of `basis^{⊗len}`, where
/// `index_of` gives each letter's position in `basis`.
pub(crate) fn tensor_index(w: &[Generator], dim: usize, index_of: impl Fn(Generator) -> Option<usize>) -> Option<usize> {
    let mut idx = 0usize;
    for &g in w {
        idx = idx * dim + index_of(g)?;
    }
    Some(idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_order_is_length_then_lex() {
        let a = Word(alloc::vec![Generator::new(2, 1)]);
        let b = Word(alloc::vec![Generator::new(1, 2), Generator::new(1, 2)]);
        let c = Word(alloc::vec![Generator::new(1, 3), Generator::new(1, 2)]);
        assert!(a < b);
        assert!(b < c);
        assert!(Word::empty() < a);
    }

    #[test]
    fn generator_tokens_round_trip() {
        let g = Generator::new(3, 12);
        assert_eq!(g.token(), "r3_12");
        assert_eq!("r3_12".parse::<Generator>().unwrap(), g);
        assert!("r3_3".parse::<Generator>().is_err());
        assert!("x1_2".parse::<Generator>().is_err());
    }

    #[test]
    fn checked_rejects_out_of_range() {
        assert!(Generator::checked(1, 2, 2).is_ok());
        assert!(Generator::checked(1, 3, 2).is_err());
        assert!(Generator::checked(2, 2, 4).is_err());
        assert!(Generator::checked(0, 1, 4).is_err());
    }

    #[test]
    fn generator_counts() {
        assert_eq!(all_ordered_generators(4).len(), 12);
        assert_eq!(increasing_generators(4).len(), 6);
        assert!(all_ordered_generators(1).is_empty());
    }
}
