//! Quadratic presentations `A = T V / ⟨R⟩`, their quadratic duals
//! `A^! = T V* / ⟨R^⊥⟩`, graded dimensions, the degree-3 intersection
//! `R⊗V ∩ V⊗R`, and the duality map from the dual algebra to relations.
//!
//! Tensor powers `V^{⊗m}` are indexed row-major in the order of the
//! presentation's generator list. The dual space `V*` is identified with `V`
//! through the dual basis, so `R^⊥` is the orthogonal complement of `R` under
//! the standard pairing of coordinates.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::free::FreeElement;
use crate::linalg::{Basis, Echelon, SparseMatrix, SparseVec};
use crate::prune::{prune_element, prune_normal_form};
use crate::report::{Check, Value, VerificationReport};
use crate::wedge::{Monomial, WedgeElement, WedgeMonomial};
use crate::word::{tensor_index, Generator, Word};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPresentation {
    n: usize,
    generators: Basis<Generator>,
    relations: Vec<FreeElement>,
}

impl QuadraticPresentation {
    /// Validates and builds a presentation: generators distinct and valid
    /// for `n`; relations homogeneous of degree 2, written in the listed
    /// generators, and linearly independent.
    pub fn new(n: usize, generators: Vec<Generator>, relations: Vec<FreeElement>) -> Result<Self> {
        let mut basis = Basis::new([]);
        for g in generators {
            if !g.is_valid_for(n) {
                return Err(Error::InvalidGenerator { i: g.i as usize, j: g.j as usize, n });
            }
            if basis.index_of(&g).is_some() {
                return Err(Error::InvalidInput(format!("generator {g} listed twice")));
            }
            basis.insert(g);
        }
        let mut p = QuadraticPresentation { n, generators: basis, relations: Vec::new() };
        let mut echelon = Echelon::new();
        for (index, r) in relations.iter().enumerate() {
            if r.n() != n {
                return Err(Error::AmbientMismatch { left: n, right: r.n() });
            }
            if r.homogeneous_degree() != Some(2) {
                return Err(Error::NotQuadratic { index });
            }
            let v = p.coordinates(r).ok_or(Error::UnknownGenerator { index })?;
            if !echelon.insert(&v) {
                return Err(Error::DependentRelation { index });
            }
        }
        p.relations = relations;
        Ok(p)
    }

    /// The free algebra on `generators`.
    pub fn free(n: usize, generators: Vec<Generator>) -> Result<Self> {
        Self::new(n, generators, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Generator] {
        self.generators.keys()
    }

    pub fn relations(&self) -> &[FreeElement] {
        &self.relations
    }

    pub fn dim_v(&self) -> usize {
        self.generators.len()
    }

    /// `(dim V)^m`, or a budget error.
    pub fn tensor_dim(&self, m: usize, budget: usize) -> Result<usize> {
        let d = (self.dim_v() as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
        if d > budget as u128 {
            return Err(Error::BudgetExceeded { dimension: d, budget });
        }
        Ok(d as usize)
    }

    /// Index of a word in `V^{⊗len}`.
    pub fn word_index(&self, w: &[Generator]) -> Option<usize> {
        tensor_index(w, self.dim_v(), |g| self.generators.index_of(&g))
    }

    /// The word at `index` of `V^{⊗m}`.
    pub fn word_at(&self, mut index: usize, m: usize) -> Word {
        let d = self.dim_v();
        let mut letters = alloc::vec![Generator::new(0, 0); m];
        for slot in letters.iter_mut().rev() {
            *slot = *self.generators.key(index % d);
            index /= d;
        }
        Word(letters)
    }

    /// Coordinates of a homogeneous element; `None` if it uses a generator
    /// outside the presentation.
    pub fn coordinates(&self, x: &FreeElement) -> Option<SparseVec> {
        x.coordinates(|w| self.word_index(w.letters()))
    }

    /// The element of `V^{⊗m}` with coordinates `v`.
    pub fn element(&self, v: &SparseVec, m: usize) -> FreeElement {
        FreeElement::from_terms(self.n, v.iter().map(|(i, c)| (self.word_at(*i, m), c.clone())))
    }

    pub fn relation_vectors(&self) -> Vec<SparseVec> {
        self.relations.iter().map(|r| self.coordinates(r).expect("validated relation")).collect()
    }

    /// `V^{⊗i} ⊗ R ⊗ V^{⊗(m−i−2)}`.
    pub fn position_subspace(&self, m: usize, i: usize, budget: usize) -> Result<PositionSubspace> {
        if m < 2 || i > m - 2 {
            return Err(Error::InvalidInput(format!("position {i} out of range for degree {m}")));
        }
        let total = self.tensor_dim(m, budget)?;
        let d = self.dim_v();
        let right = d.pow((m - i - 2) as u32);
        let left = total / (d * d * right);
        let rels = self.relation_vectors();
        let mut basis = Vec::with_capacity(left * rels.len() * right);
        for a in 0..left {
            for r in &rels {
                for b in 0..right {
                    // index(a, x, b) = (a·d² + x)·right + b
                    basis.push(r.iter().map(|(x, c)| ((a * d * d + x) * right + b, c.clone())).collect());
                }
            }
        }
        Ok(PositionSubspace { m, i, basis })
    }

    /// Spanning set of the degree-`m` part of the ideal `⟨R⟩`.
    fn ideal_rows(&self, m: usize, budget: usize) -> Result<Vec<SparseVec>> {
        let mut rows = Vec::new();
        if m >= 2 {
            for i in 0..=m - 2 {
                rows.extend(self.position_subspace(m, i, budget)?.basis);
            }
        }
        Ok(rows)
    }

    /// `dim A^m = dim V^{⊗m} − dim Σ_i V^{⊗i} ⊗ R ⊗ V^{⊗(m−i−2)}`.
    pub fn graded_dim(&self, m: usize, budget: usize) -> Result<usize> {
        let total = self.tensor_dim(m, budget)?;
        let mut e = Echelon::new();
        for r in self.ideal_rows(m, budget)? {
            e.insert(&r);
        }
        Ok(total - e.rank())
    }

    /// Whether `vectors` of `V^{⊗m}` stay linearly independent modulo the
    /// degree-`m` part of the ideal.
    pub fn independent_modulo_ideal(&self, m: usize, vectors: &[SparseVec], budget: usize) -> Result<bool> {
        self.tensor_dim(m, budget)?;
        let mut e = Echelon::new();
        for r in self.ideal_rows(m, budget)? {
            e.insert(&r);
        }
        Ok(vectors.iter().all(|v| e.insert(v)))
    }

    /// The quadratic dual: generators `V*` (identified with `V`) and relations
    /// spanning `R^⊥`, of dimension `(dim V)² − dim R`.
    pub fn annihilator(&self) -> DualPresentation {
        let d = self.dim_v();
        let m = SparseMatrix::from_rows(d * d, self.relation_vectors());
        let relations: Vec<FreeElement> = m.nullspace().iter().map(|v| self.element(v, 2)).collect();
        let presentation = QuadraticPresentation::new(self.n, self.generators().to_vec(), relations)
            .expect("a nullspace basis is independent");
        DualPresentation { presentation }
    }

    /// Basis of `R⊗V ∩ V⊗R` inside `V^{⊗3}`.
    pub fn deg3_intersection(&self, budget: usize) -> Result<Vec<SparseVec>> {
        let total = self.tensor_dim(3, budget)?;
        let left = self.position_subspace(3, 0, budget)?.basis; // R ⊗ V
        let right = self.position_subspace(3, 1, budget)?.basis; // V ⊗ R
        let mut columns = left.clone();
        columns.extend(right);
        let kernel = SparseMatrix::from_columns(total, &columns).nullspace();
        // (a, b) with Σ a·(r⊗v) + Σ b·(v⊗r) = 0 gives the element Σ a·(r⊗v)
        let out = kernel
            .iter()
            .map(|k| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (col, c) in k.iter().filter(|(col, _)| *col < left.len()) {
                    for (row, x) in &left[*col] {
                        *acc.entry(*row).or_insert_with(Rational::zero) += c * x;
                    }
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        Ok(out)
    }

    /// Spaces of the Koszul-type sequence in degree `m`: `R` for `m = 2`,
    /// `R⊗V ∩ V⊗R` for `m = 3`. Higher degrees are not implemented.
    pub fn koszul_term(&self, m: usize, budget: usize) -> Result<Vec<SparseVec>> {
        match m {
            2 => Ok(self.relation_vectors()),
            3 => self.deg3_intersection(budget),
            _ => Err(Error::Unimplemented("the Koszul sequence is only available in degrees 2 and 3")),
        }
    }
}

/// The quadratic dual of a presentation, itself a quadratic presentation on
/// the dual generators with relations `R^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPresentation {
    pub presentation: QuadraticPresentation,
}

impl DualPresentation {
    pub fn graded_dim(&self, k: usize, budget: usize) -> Result<usize> {
        self.presentation.graded_dim(k, budget)
    }

    pub fn relation_count(&self) -> usize {
        self.presentation.relations().len()
    }
}

/// `V^{⊗i} ⊗ R ⊗ V^{⊗(m−i−2)}` as an explicit spanning list (a basis, since
/// `R` is given by independent vectors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionSubspace {
    pub m: usize,
    pub i: usize,
    pub basis: Vec<SparseVec>,
}

/// `Σ_{k=0}^{m} (−1)^k dim A^{!k} dim A^{m−k} = 0` for `1 ≤ m ≤ max_degree`,
/// a necessary condition for Koszulness.
pub fn koszul_euler_check(p: &QuadraticPresentation, max_degree: usize, budget: usize) -> Result<VerificationReport> {
    let dual = p.annihilator();
    let mut a = Vec::with_capacity(max_degree + 1);
    let mut a_dual = Vec::with_capacity(max_degree + 1);
    for m in 0..=max_degree {
        a.push(p.graded_dim(m, budget)? as i64);
        a_dual.push(dual.graded_dim(m, budget)? as i64);
    }
    let mut report = VerificationReport::new("euler").param("n", p.n()).param("max_degree", max_degree);
    for m in 1..=max_degree {
        let residual: i64 = (0..=m).map(|k| if k % 2 == 0 { 1 } else { -1 } * a_dual[k] * a[m - k]).sum();
        report.push(Check::new(format!("m={m}"), 0i64, residual));
    }
    report.params.push(("algebra_dims".into(), Value::List(a.iter().map(|x| Value::Int(*x)).collect())));
    report.params.push(("dual_dims".into(), Value::List(a_dual.iter().map(|x| Value::Int(*x)).collect())));
    Ok(report)
}

/// Strand-local generators: all `r_ij` with both ends in `vertices`.
fn generators_on(vertices: &[u8]) -> Vec<Generator> {
    let mut out = Vec::new();
    for &i in vertices {
        for &j in vertices {
            if i != j {
                out.push(Generator::new(i, j));
            }
        }
    }
    out
}

/// The functional "coefficient of the chain gang `b`" on the dual algebra,
/// written as a tensor: `Σ_u ⟨b*, [u]⟩ u` over words `u` of the same degree.
///
/// Pruning never changes the set of touched strands, so only words on the
/// strands of `b` can contribute.
pub fn dual_vector(b: &Monomial, n: usize) -> FreeElement {
    let letters = generators_on(&b.vertices());
    let d = b.degree();
    let mut cache: BTreeMap<Monomial, Rational> = BTreeMap::new();
    let mut out = FreeElement::zero(n);
    let mut word = Vec::with_capacity(d);
    words_of(&letters, d, &mut word, &mut |w| {
        if let Some(wm) = WedgeMonomial::new(w.iter().copied()) {
            let c = cache
                .entry(wm.monomial.clone())
                .or_insert_with(|| prune_normal_form(&WedgeMonomial::basis(wm.monomial.clone())).coeff(b))
                .clone();
            if !c.is_zero() {
                out.add_term(Word::from(w), c * Rational::from_integer(wm.sign.into()));
            }
        }
    });
    out
}

fn words_of(letters: &[Generator], d: usize, cur: &mut Vec<Generator>, f: &mut impl FnMut(&[Generator])) {
    if cur.len() == d {
        f(cur);
        return;
    }
    for &g in letters {
        if !cur.contains(&g) {
            cur.push(g);
            words_of(letters, d, cur, f);
            cur.pop();
        }
    }
}

/// The map `Δ̃` dual to multiplication in the dual algebra: a degree-2
/// element of the dual algebra goes to the corresponding relation in `V⊗V`.
///
/// The input is first rewritten in the chain-gang basis, so any combination
/// of degree-2 monomials is accepted.
pub fn dual_tilde_delta(w: &WedgeElement, n: usize) -> FreeElement {
    let mut out = FreeElement::zero(n);
    for (b, c) in prune_element(w).terms() {
        out = &out + &dual_vector(b, n).scale(c);
    }
    out
}
