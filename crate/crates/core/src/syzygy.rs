//! Relator modules, global syzygies and infinitesimal syzygies.
//!
//! A [`SyzygyElement`] is an element of the free two-sided module on the
//! relator symbols: a combination of triples `left · S · right`. The map
//! `δ_K` evaluates symbols to their group relators; an element is a global
//! syzygy when its image vanishes in the free algebra.
//!
//! Substituting `R ↦ R̄ + 1` in the cofactor words and keeping the lowest
//! degree part turns a global syzygy into an [`InfinitesimalSyzygy`]: an
//! element of `Y⊗V ⊕ V⊗Y` killed by the quadratic relator map `δ_A`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::{pvb_symbols, AlgebraFamily, RelatorSymbol};
use crate::free::FreeElement;
use crate::linalg::{Basis, SparseMatrix, SparseVec, SpanSolver};
use crate::prune::prune_element;
use crate::quad::{dual_vector, QuadraticPresentation};
use crate::wedge::WedgeElement;
use crate::word::{all_ordered_generators, Generator, Word};
use crate::Rational;

fn q(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// A finite combination of `left · symbol · right` with rational
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SyzygyElement {
    n: usize,
    terms: BTreeMap<(Word, RelatorSymbol, Word), Rational>,
}

impl SyzygyElement {
    pub fn zero(n: usize) -> Self {
        SyzygyElement { n, terms: BTreeMap::new() }
    }

    /// The bare symbol.
    pub fn symbol(n: usize, s: RelatorSymbol) -> Self {
        let mut e = Self::zero(n);
        e.add_term(Word::empty(), s, Word::empty(), Rational::one());
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, left: Word, s: RelatorSymbol, right: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (left, s, right);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, RelatorSymbol, Word), &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        for (l, s, r) in self.terms.keys() {
            s.validate(self.n)?;
            for g in l.letters().iter().chain(r.letters()) {
                if !g.is_valid_for(self.n) {
                    return Err(Error::InvalidGenerator { i: g.i as usize, j: g.j as usize, n: self.n });
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &SyzygyElement) -> Result<SyzygyElement> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for ((l, s, r), c) in &other.terms {
            out.add_term(l.clone(), *s, r.clone(), c.clone());
        }
        Ok(out)
    }
}

impl fmt::Debug for SyzygyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, ((l, s, r), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})·{l:?}·{s}·{r:?}")?;
        }
        Ok(())
    }
}

/// `Σ c · left · δ_K(S) · right` in the free algebra.
#[allow(non_snake_case)]
pub fn delta_K(s: &SyzygyElement) -> Result<FreeElement> {
    s.validate()?;
    let n = s.n;
    let mut out = FreeElement::zero(n);
    for ((l, sym, r), c) in &s.terms {
        let left = FreeElement::monomial(n, l.clone(), c.clone());
        let right = FreeElement::monomial(n, r.clone(), Rational::one());
        out = &out + &left.mul(&sym.group(n))?.mul(&right)?;
    }
    Ok(out)
}

/// The tetrahedron syzygy on the strands `i, j, k, l` (14 terms).
pub fn zamolodchikov(n: usize, i: u8, j: u8, k: u8, l: u8) -> Result<SyzygyElement> {
    let idx = [i, j, k, l];
    for (a, x) in idx.iter().enumerate() {
        if *x == 0 || *x as usize > n || idx[a + 1..].contains(x) {
            return Err(Error::InvalidSymbol(format!("strands {idx:?} must be distinct and within 1..={n}")));
        }
    }
    let r = Generator::new;
    let w = |v: &[Generator]| Word::from(v);
    let mut z = SyzygyElement::zero(n);
    let mut y = |sign: i64, left: &[Generator], sym: RelatorSymbol, right: &[Generator]| {
        z.add_term(w(left), sym, w(right), q(sign));
    };
    let cy = |a: u8, b: u8, c: u8, d: u8| RelatorSymbol::c(a, b, c, d);
    let (cijkl, s1) = cy(i, j, k, l);
    let (cikjl, s2) = cy(i, k, j, l);
    let (ciljk, s3) = cy(i, l, j, k);
    let yjkl = RelatorSymbol::y(j, k, l);
    let yikl = RelatorSymbol::y(i, k, l);
    let yijl = RelatorSymbol::y(i, j, l);
    let yijk = RelatorSymbol::y(i, j, k);

    y(1, &[], yjkl, &[r(i, l), r(i, k), r(i, j)]);
    y(1, &[r(j, k), r(j, l)], yikl, &[r(i, j)]);
    y(s1, &[r(j, k), r(j, l), r(i, k), r(i, l)], cijkl, &[]);
    y(s2, &[r(j, k)], cikjl, &[r(i, l), r(i, j), r(k, l)]);
    y(1, &[r(j, k), r(i, k)], yijl, &[r(k, l)]);
    y(1, &[], yijk, &[r(i, l), r(j, l), r(k, l)]);
    y(s3, &[r(i, j), r(i, k)], ciljk, &[r(j, l), r(k, l)]);

    y(-1, &[r(i, j), r(i, k), r(i, l)], yjkl, &[]);
    y(-1, &[r(i, j)], yikl, &[r(j, l), r(j, k)]);
    y(-s1, &[], cijkl, &[r(i, l), r(i, k), r(j, l), r(j, k)]);
    y(-s2, &[r(k, l), r(i, j), r(i, l)], cikjl, &[r(j, k)]);
    y(-1, &[r(k, l)], yijl, &[r(i, k), r(j, k)]);
    y(-1, &[r(k, l), r(j, l), r(i, l)], yijk, &[]);
    y(-s3, &[r(k, l), r(j, l)], ciljk, &[r(i, k), r(i, j)]);
    Ok(z)
}

/// The global form of "`S` commutes with `R_g`" for a symbol and a
/// generator on disjoint strands:
///
/// `S·R_g − R_g·S − Σ_t c_t Σ_p t_{<p} · C(t_p, g) · t_{>p}`
///
/// where `δ_K(S) = Σ_t c_t t`. The correction telescopes
/// `t R_g − R_g t` into commutators of single letters, so `δ_K` of the whole
/// element vanishes.
pub fn trivial_syzygy(n: usize, s: RelatorSymbol, g: Generator) -> Result<SyzygyElement> {
    s.validate(n)?;
    if !g.is_valid_for(n) {
        return Err(Error::InvalidGenerator { i: g.i as usize, j: g.j as usize, n });
    }
    if s.strands().iter().any(|&v| g.touches(v)) {
        return Err(Error::InvalidSymbol(format!("{s} and {g} share a strand")));
    }
    let mut out = SyzygyElement::zero(n);
    out.add_term(Word::empty(), s, Word::letter(g), Rational::one());
    out.add_term(Word::letter(g), s, Word::empty(), -Rational::one());
    for (t, c) in s.group(n).terms() {
        let letters = t.letters();
        for p in 0..letters.len() {
            let x = letters[p];
            let (sym, sign) = RelatorSymbol::c(x.i, x.j, g.i, g.j);
            out.add_term(Word::from(&letters[..p]), sym, Word::from(&letters[p + 1..]), -(c * q(sign)));
        }
    }
    Ok(out)
}

/// All trivial syzygies on `[n]`: one per symbol and generator on disjoint
/// strands.
pub fn trivial_syzygies(n: usize) -> Vec<SyzygyElement> {
    let mut out = Vec::new();
    for s in pvb_symbols(n) {
        let strands = s.strands();
        for g in all_ordered_generators(n) {
            if !strands.iter().any(|&v| g.touches(v)) {
                out.push(trivial_syzygy(n, s, g).expect("disjoint strands"));
            }
        }
    }
    out
}

/// An element of `Y⊗V ⊕ V⊗Y` in degree 3.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct InfinitesimalSyzygy {
    /// Coefficients of `S ⊗ g`.
    pub right: BTreeMap<(RelatorSymbol, Generator), Rational>,
    /// Coefficients of `g ⊗ S`.
    pub left: BTreeMap<(Generator, RelatorSymbol), Rational>,
}

impl InfinitesimalSyzygy {
    pub fn is_zero(&self) -> bool {
        self.right.is_empty() && self.left.is_empty()
    }

    fn add_right(&mut self, s: RelatorSymbol, g: Generator, c: Rational) {
        let e = self.right.entry((s, g)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.right.remove(&(s, g));
        }
    }

    fn add_left(&mut self, g: Generator, s: RelatorSymbol, c: Rational) {
        let e = self.left.entry((g, s)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.left.remove(&(g, s));
        }
    }

    /// `δ_A` of the right part, in `R⊗V`.
    pub fn right_image(&self, n: usize) -> FreeElement {
        let mut out = FreeElement::zero(n);
        for ((s, g), c) in &self.right {
            out = &out + &s.quadratic(n).mul(&FreeElement::generator(n, *g)).expect("same n").scale(c);
        }
        out
    }

    /// `δ_A` of the left part, in `V⊗R`.
    pub fn left_image(&self, n: usize) -> FreeElement {
        let mut out = FreeElement::zero(n);
        for ((g, s), c) in &self.left {
            out = &out + &FreeElement::generator(n, *g).mul(&s.quadratic(n)).expect("same n").scale(c);
        }
        out
    }

    /// Whether `δ_A(right) + δ_A(left) = 0` in `V^{⊗3}`.
    pub fn in_kernel(&self, n: usize) -> bool {
        (&self.right_image(n) + &self.left_image(n)).is_zero()
    }

    /// Restriction to `Y` symbols, dropping all `C` coordinates.
    pub fn y_part(&self) -> InfinitesimalSyzygy {
        InfinitesimalSyzygy {
            right: self.right.iter().filter(|((s, _), _)| matches!(s, RelatorSymbol::Y(..))).map(|(k, v)| (*k, v.clone())).collect(),
            left: self.left.iter().filter(|((_, s), _)| matches!(s, RelatorSymbol::Y(..))).map(|(k, v)| (*k, v.clone())).collect(),
        }
    }
}

impl fmt::Debug for InfinitesimalSyzygy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((s, g), c) in &self.right {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c}){s}⊗{g}")?;
        }
        for ((g, s), c) in &self.left {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c}){g}⊗{s}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Lowest-degree part of a global syzygy after `R ↦ R̄ + 1`.
///
/// The degree-2 part `Σ c · S` must vanish; the degree-3 part collects
/// `(letters of left) ⊗ S` and `S ⊗ (letters of right)`.
pub fn project_to_infinitesimal(s: &SyzygyElement) -> Result<InfinitesimalSyzygy> {
    if !delta_K(s)?.is_zero() {
        return Err(Error::NotASyzygy);
    }
    let mut low: BTreeMap<RelatorSymbol, Rational> = BTreeMap::new();
    for ((_, sym, _), c) in s.terms() {
        *low.entry(*sym).or_insert_with(Rational::zero) += c;
    }
    if low.values().any(|c| !c.is_zero()) {
        return Err(Error::LowDegreeComponent { degree: 2 });
    }
    let mut out = InfinitesimalSyzygy::default();
    for ((l, sym, r), c) in s.terms() {
        for g in l.letters() {
            out.add_left(*g, *sym, c.clone());
        }
        for g in r.letters() {
            out.add_right(*sym, *g, c.clone());
        }
    }
    Ok(out)
}

/// Coordinates of infinitesimal syzygies of `pvb_n`, and the linear algebra
/// that relates them to the dual algebra.
pub struct PvbSyzygies {
    n: usize,
    presentation: QuadraticPresentation,
    symbols: Vec<RelatorSymbol>,
    solver: SpanSolver,
    coords: Basis<Coord>,
}

/// One coordinate of `Y⊗V ⊕ V⊗Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Coord {
    Right(RelatorSymbol, Generator),
    Left(Generator, RelatorSymbol),
}

impl PvbSyzygies {
    pub fn new(n: usize) -> Self {
        let presentation = AlgebraFamily::pvb(n).presentation();
        let symbols = pvb_symbols(n);
        let solver = SpanSolver::new(&presentation.relation_vectors());
        let gens = all_ordered_generators(n);
        let mut coords = Basis::new([]);
        for s in &symbols {
            for g in &gens {
                coords.insert(Coord::Right(*s, *g));
            }
        }
        for g in &gens {
            for s in &symbols {
                coords.insert(Coord::Left(*g, *s));
            }
        }
        PvbSyzygies { n, presentation, symbols, solver, coords }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn presentation(&self) -> &QuadraticPresentation {
        &self.presentation
    }

    pub fn coordinate_count(&self) -> usize {
        self.coords.len()
    }

    /// The syzygy as a coordinate vector.
    pub fn vector(&self, s: &InfinitesimalSyzygy) -> SparseVec {
        let mut v: SparseVec = s
            .right
            .iter()
            .map(|((sym, g), c)| (self.coords.index_of(&Coord::Right(*sym, *g)).expect("pvb coordinate"), c.clone()))
            .chain(
                s.left
                    .iter()
                    .map(|((g, sym), c)| (self.coords.index_of(&Coord::Left(*g, *sym)).expect("pvb coordinate"), c.clone())),
            )
            .collect();
        v.sort_by_key(|e| e.0);
        v
    }

    pub fn from_vector(&self, v: &SparseVec) -> InfinitesimalSyzygy {
        let mut out = InfinitesimalSyzygy::default();
        for (i, c) in v {
            match *self.coords.key(*i) {
                Coord::Right(s, g) => out.add_right(s, g, c.clone()),
                Coord::Left(g, s) => out.add_left(g, s, c.clone()),
            }
        }
        out
    }

    /// Decomposes a relation in `V⊗V` over the relator symbols.
    fn symbol_coordinates(&self, x: &FreeElement) -> Result<Vec<(RelatorSymbol, Rational)>> {
        let v = self.presentation.coordinates(x).ok_or_else(|| Error::NotInRelatorSpan(format!("{x:?}")))?;
        let coeffs = self.solver.solve(&v).ok_or_else(|| Error::NotInRelatorSpan(format!("{x:?}")))?;
        Ok(self.symbols.iter().copied().zip(coeffs).filter(|(_, c)| !c.is_zero()).collect())
    }

    /// The infinitesimal syzygy attached to a degree-3 element of the dual
    /// algebra: its dual tensor `Φ ∈ R⊗V ∩ V⊗R`, written once in `Y⊗V`
    /// (right part) and once in `V⊗Y` with a minus sign (left part).
    pub fn from_dual(&self, w: &WedgeElement) -> Result<InfinitesimalSyzygy> {
        let n = self.n;
        let mut phi = FreeElement::zero(n);
        for (b, c) in prune_element(w).terms() {
            if b.degree() != 3 {
                return Err(Error::InvalidInput(format!("expected a degree-3 element, found {b:?}")));
            }
            phi = &phi + &dual_vector(b, n).scale(c);
        }
        let mut by_last: BTreeMap<Generator, FreeElement> = BTreeMap::new();
        let mut by_first: BTreeMap<Generator, FreeElement> = BTreeMap::new();
        for (word, c) in phi.terms() {
            let l = word.letters();
            by_last
                .entry(l[2])
                .or_insert_with(|| FreeElement::zero(n))
                .add_term(Word::from(&l[..2]), c.clone());
            by_first
                .entry(l[0])
                .or_insert_with(|| FreeElement::zero(n))
                .add_term(Word::from(&l[1..]), c.clone());
        }
        let mut out = InfinitesimalSyzygy::default();
        for (g, x) in &by_last {
            for (s, c) in self.symbol_coordinates(x)? {
                out.add_right(s, *g, c);
            }
        }
        for (g, x) in &by_first {
            for (s, c) in self.symbol_coordinates(x)? {
                out.add_left(*g, s, -c);
            }
        }
        Ok(out)
    }

    /// Basis of `ker δ_A` on `Y⊗V ⊕ V⊗Y` in degree 3.
    pub fn kernel(&self, budget: usize) -> Result<Vec<InfinitesimalSyzygy>> {
        let total = self.presentation.tensor_dim(3, budget)?;
        let columns: Vec<SparseVec> = self
            .coords
            .keys()
            .iter()
            .map(|c| {
                let x = match *c {
                    Coord::Right(s, g) => s.quadratic(self.n).mul(&FreeElement::generator(self.n, g)),
                    Coord::Left(g, s) => FreeElement::generator(self.n, g).mul(&s.quadratic(self.n)),
                }
                .expect("same n");
                self.presentation.coordinates(&x).expect("pvb word")
            })
            .collect();
        let m = SparseMatrix::from_columns(total, &columns);
        Ok(m.nullspace().iter().map(|v| self.from_vector(v)).collect())
    }
}

/// Infinitesimal syzygy of a degree-3 dual element of `pvb_n`.
pub fn infinitesimal_from_dual(w: &WedgeElement, n: usize) -> Result<InfinitesimalSyzygy> {
    PvbSyzygies::new(n).from_dual(w)
}

/// Basis of the degree-3 kernel of `δ_A` for `pvb_n`.
pub fn kernel_deg3(fam: &AlgebraFamily, budget: usize) -> Result<Vec<InfinitesimalSyzygy>> {
    match fam.tag {
        crate::family::FamilyTag::PvB => PvbSyzygies::new(fam.n).kernel(budget),
        _ => Err(Error::Unimplemented("symbol-indexed syzygies are only available for pvb")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BUDGET;

    fn g(i: u8, j: u8) -> Generator {
        Generator::new(i, j)
    }

    #[test]
    fn bare_symbol_image() {
        let s = SyzygyElement::symbol(3, RelatorSymbol::y(1, 2, 3));
        assert_eq!(delta_K(&s).unwrap(), RelatorSymbol::y(1, 2, 3).group(3));
        assert!(delta_K(&SyzygyElement::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn invalid_symbols_rejected() {
        let s = SyzygyElement::symbol(3, RelatorSymbol::y(1, 2, 4));
        assert!(matches!(delta_K(&s), Err(Error::InvalidSymbol(_))));
        assert!(zamolodchikov(4, 1, 2, 2, 3).is_err());
    }

    #[test]
    fn tetrahedron_is_a_syzygy() {
        let z = zamolodchikov(4, 1, 2, 3, 4).unwrap();
        assert_eq!(z.len(), 14);
        assert!(delta_K(&z).unwrap().is_zero());
        let z = zamolodchikov(5, 5, 2, 4, 1).unwrap();
        assert!(delta_K(&z).unwrap().is_zero());
    }

    #[test]
    fn non_syzygy_is_rejected() {
        let s = SyzygyElement::symbol(3, RelatorSymbol::y(1, 2, 3));
        assert_eq!(project_to_infinitesimal(&s), Err(Error::NotASyzygy));
        assert!(project_to_infinitesimal(&SyzygyElement::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn trivial_syzygy_is_exact() {
        let t = trivial_syzygy(5, RelatorSymbol::y(1, 2, 3), g(4, 5)).unwrap();
        assert!(delta_K(&t).unwrap().is_zero());
        let p = project_to_infinitesimal(&t).unwrap();
        assert!(p.in_kernel(5));
        let y = p.y_part();
        assert_eq!(y.right.len(), 1);
        assert_eq!(y.right[&(RelatorSymbol::y(1, 2, 3), g(4, 5))], q(1));
        assert_eq!(y.left.len(), 1);
        assert_eq!(y.left[&(g(4, 5), RelatorSymbol::y(1, 2, 3))], q(-1));
    }

    #[test]
    fn kernel_dimensions_small() {
        assert!(kernel_deg3(&AlgebraFamily::pvb(3), DEFAULT_BUDGET).unwrap().is_empty());
        assert_eq!(kernel_deg3(&AlgebraFamily::pvb(4), DEFAULT_BUDGET).unwrap().len(), 24);
    }

    #[test]
    fn tetrahedron_matches_dual_chain() {
        let ctx = PvbSyzygies::new(4);
        let z = project_to_infinitesimal(&zamolodchikov(4, 1, 2, 3, 4).unwrap()).unwrap();
        let d = ctx.from_dual(&WedgeElement::from_products([(1, &[g(1, 2), g(2, 3), g(3, 4)][..])])).unwrap();
        assert!(d.in_kernel(4));
        assert_eq!(z, d);
    }

    #[test]
    fn commutation_syzygies_match_dual_chain_gangs() {
        let ctx = PvbSyzygies::new(5);
        let d = ctx.from_dual(&WedgeElement::from_products([(1, &[g(1, 2), g(2, 3), g(4, 5)][..])])).unwrap();
        let t = project_to_infinitesimal(&trivial_syzygy(5, RelatorSymbol::y(1, 2, 3), g(4, 5)).unwrap()).unwrap();
        assert_eq!(d, t);

        let ctx = PvbSyzygies::new(6);
        let d = ctx.from_dual(&WedgeElement::from_products([(1, &[g(1, 2), g(3, 4), g(5, 6)][..])])).unwrap();
        let (c, _) = RelatorSymbol::c(1, 2, 3, 4);
        let t = project_to_infinitesimal(&trivial_syzygy(6, c, g(5, 6)).unwrap()).unwrap();
        assert!(d.in_kernel(6));
        assert_eq!(d, t);
        let y = d.y_part();
        assert!(y.is_zero());
        assert_eq!(d.right[&(c, g(5, 6))], q(1));
        assert_eq!(d.left[&(g(5, 6), c)], q(-1));
    }
}
