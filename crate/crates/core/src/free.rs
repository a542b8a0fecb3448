//! The free associative algebra on indexed generators, with rational
//! coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::word::{Generator, Word};
use crate::Rational;

/// A finite rational linear combination of words over `n` strands.
///
/// Zero coefficients are never stored; iteration follows the canonical word
/// order (length, then lexicographic).
#[derive(Clone, PartialEq, Eq)]
pub struct FreeElement {
    n: usize,
    terms: BTreeMap<Word, Rational>,
}

impl FreeElement {
    pub fn zero(n: usize) -> Self {
        FreeElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, Word::empty(), Rational::one())
    }

    pub fn generator(n: usize, g: Generator) -> Self {
        Self::monomial(n, Word::letter(g), Rational::one())
    }

    pub fn monomial(n: usize, w: Word, c: Rational) -> Self {
        let mut out = Self::zero(n);
        out.add_term(w, c);
        out
    }

    /// Product of generators, coefficient 1.
    pub fn word(n: usize, letters: &[Generator]) -> Self {
        Self::monomial(n, Word::from(letters), Rational::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut out = Self::zero(n);
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    /// The commutator `ab - ba`.
    pub fn commutator(a: &FreeElement, b: &FreeElement) -> Result<Self> {
        Ok(&a.mul(b)? - &b.mul(a)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn into_terms(self) -> BTreeMap<Word, Rational> {
        self.terms
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Largest word length present, `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).min()
    }

    /// `Some(d)` when every term has word length `d`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Word::len);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Every generator is valid for the ambient `n`.
    pub fn check_generators(&self) -> Result<()> {
        for w in self.terms.keys() {
            for &g in w.letters() {
                if !g.is_valid_for(self.n) {
                    return Err(Error::InvalidGenerator { i: g.i as usize, j: g.j as usize, n: self.n });
                }
            }
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        FreeElement { n: self.n, terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// Bilinear concatenation product.
    pub fn mul(&self, other: &FreeElement) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch { left: self.n, right: other.n });
        }
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &FreeElement) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    /// Drops every word longer than `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        FreeElement {
            n: self.n,
            terms: self.terms.iter().filter(|(w, _)| w.len() <= max_degree).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// The homogeneous component of word length `d`.
    pub fn part(&self, d: usize) -> Self {
        FreeElement {
            n: self.n,
            terms: self.terms.iter().filter(|(w, _)| w.len() == d).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// Substitutes `g ↦ ḡ + 1` for every generator and discards words longer
    /// than `max_degree`.
    ///
    /// Expanding a word of length `L` gives one term per subsequence of its
    /// letters, so only subsequences of length at most `max_degree` are
    /// generated.
    pub fn shift_expand(&self, max_degree: usize) -> Self {
        let mut out = Self::zero(self.n);
        let mut buf = Vec::new();
        for (w, c) in &self.terms {
            subsequences(w.letters(), 0, max_degree, &mut buf, &mut |sub| {
                out.add_term(Word::from(sub), c.clone());
            });
        }
        out
    }

    /// Applies the algebra homomorphism determined by `image` on generators.
    pub fn substitute(&self, target_n: usize, image: impl Fn(Generator) -> FreeElement) -> Result<Self> {
        let mut out = Self::zero(target_n);
        for (w, c) in &self.terms {
            let mut acc = Self::one(target_n);
            for &g in w.letters() {
                acc = acc.mul(&image(g))?;
            }
            out = out.checked_add(&acc.scale(c))?;
        }
        Ok(out)
    }

    /// Coordinates of a homogeneous element against a word index.
    pub fn coordinates(&self, index_of: impl Fn(&Word) -> Option<usize>) -> Option<Vec<(usize, Rational)>> {
        let mut v: Vec<(usize, Rational)> = Vec::with_capacity(self.terms.len());
        for (w, c) in &self.terms {
            v.push((index_of(w)?, c.clone()));
        }
        v.sort_by_key(|e| e.0);
        Some(v)
    }
}

fn subsequences(
    letters: &[Generator],
    start: usize,
    budget: usize,
    buf: &mut Vec<Generator>,
    emit: &mut impl FnMut(&[Generator]),
) {
    emit(buf);
    if buf.len() == budget {
        return;
    }
    for k in start..letters.len() {
        buf.push(letters[k]);
        subsequences(letters, k + 1, budget, buf, emit);
        buf.pop();
    }
}

impl Add for &FreeElement {
    type Output = FreeElement;

    fn add(self, rhs: &FreeElement) -> FreeElement {
        self.checked_add(rhs).expect("adding elements over different n")
    }
}

impl Sub for &FreeElement {
    type Output = FreeElement;

    fn sub(self, rhs: &FreeElement) -> FreeElement {
        self.checked_add(&-rhs).expect("subtracting elements over different n")
    }
}

impl Neg for &FreeElement {
    type Output = FreeElement;

    fn neg(self) -> FreeElement {
        FreeElement { n: self.n, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})·{w:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_bigint::BigInt;

    fn g(i: u8, j: u8) -> Generator {
        Generator::new(i, j)
    }

    fn q(a: i64) -> Rational {
        Rational::from_integer(BigInt::from(a))
    }

    #[test]
    fn monomial_concatenation() {
        let a = FreeElement::generator(4, g(1, 2));
        let b = FreeElement::generator(4, g(3, 4));
        let p = a.mul(&b).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&Word(vec![g(1, 2), g(3, 4)])), q(1));
    }

    #[test]
    fn unit_is_identity() {
        let x = &FreeElement::word(3, &[g(1, 2), g(2, 3)]) - &FreeElement::generator(3, g(3, 1)).scale(&q(5));
        assert_eq!(FreeElement::one(3).mul(&x).unwrap(), x);
        assert_eq!(x.mul(&FreeElement::one(3)).unwrap(), x);
    }

    #[test]
    fn distributivity_example() {
        let r12 = FreeElement::generator(2, g(1, 2));
        let r21 = FreeElement::generator(2, g(2, 1));
        let p = (&r12 - &r21).mul(&(&r12 + &r21)).unwrap();
        let expected = FreeElement::from_terms(
            2,
            [
                (Word(vec![g(1, 2), g(1, 2)]), q(1)),
                (Word(vec![g(1, 2), g(2, 1)]), q(1)),
                (Word(vec![g(2, 1), g(1, 2)]), q(-1)),
                (Word(vec![g(2, 1), g(2, 1)]), q(-1)),
            ],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = FreeElement::generator(3, g(1, 2));
        let b = FreeElement::generator(4, g(1, 2));
        assert_eq!(a.mul(&b), Err(Error::AmbientMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn commutator_shift_gives_bracket() {
        let r12_34 = FreeElement::word(4, &[g(1, 2), g(3, 4)]);
        let r34_12 = FreeElement::word(4, &[g(3, 4), g(1, 2)]);
        let c = &r12_34 - &r34_12;
        let expanded = c.shift_expand(2);
        let bracket = FreeElement::commutator(&FreeElement::generator(4, g(1, 2)), &FreeElement::generator(4, g(3, 4))).unwrap();
        assert_eq!(expanded, bracket);
    }

    #[test]
    fn shift_expand_unit_is_fixed() {
        for d in 0..4 {
            assert_eq!(FreeElement::one(3).shift_expand(d), FreeElement::one(3));
        }
    }

    #[test]
    fn shift_expand_single_letter() {
        let x = FreeElement::generator(3, g(2, 3));
        let e = x.shift_expand(5);
        assert_eq!(e, &FreeElement::one(3) + &x);
        assert_eq!(x.shift_expand(0), FreeElement::one(3));
    }

    #[test]
    fn homogeneity() {
        let x = FreeElement::word(3, &[g(1, 2), g(2, 3)]);
        assert_eq!(x.homogeneous_degree(), Some(2));
        assert_eq!((&x + &FreeElement::one(3)).homogeneous_degree(), None);
        assert_eq!(FreeElement::zero(3).homogeneous_degree(), None);
    }
}
