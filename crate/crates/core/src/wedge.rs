//! Wedge monomials in the dual generators and their directed-graph reading.
//!
//! A monomial `r_{i1 j1} ∧ … ∧ r_{ik jk}` is read as the directed graph on
//! `[n]` with edges `(i1, j1), …, (ik, jk)`. Canonical monomials keep their
//! factors strictly increasing in generator order; a [`WedgeMonomial`] adds
//! the sign produced by sorting.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::word::Generator;
use crate::Rational;

/// Canonical (unsigned) wedge monomial: factors strictly increasing.
///
/// Ordered first by degree, then lexicographically on the sorted factors.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<Generator>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    /// Wraps factors that are already strictly increasing.
    pub fn from_sorted(factors: Vec<Generator>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0] < w[1]));
        Monomial(factors)
    }

    pub fn factors(&self) -> &[Generator] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, g: Generator) -> bool {
        self.0.binary_search(&g).is_ok()
    }

    /// Vertices touched by some edge, increasing.
    pub fn vertices(&self) -> Vec<u8> {
        let mut v: Vec<u8> = self.0.iter().flat_map(|g| [g.i, g.j]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn forest(&self) -> Forest {
        Forest::new(self.0.clone())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("∧")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A signed wedge monomial in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WedgeMonomial {
    pub monomial: Monomial,
    pub sign: i8,
}

impl WedgeMonomial {
    /// `f1 ∧ f2 ∧ …` in the given order, sorted into canonical form with the
    /// sign of the sorting permutation; `None` if a factor repeats.
    pub fn new(factors: impl IntoIterator<Item = Generator>) -> Option<Self> {
        let mut v: Vec<Generator> = factors.into_iter().collect();
        let mut sign = 1i8;
        // insertion sort, counting transpositions
        for a in 1..v.len() {
            let mut b = a;
            while b > 0 && v[b - 1] > v[b] {
                v.swap(b - 1, b);
                sign = -sign;
                b -= 1;
            }
            if b > 0 && v[b - 1] == v[b] {
                return None;
            }
        }
        Some(WedgeMonomial { monomial: Monomial(v), sign })
    }

    pub fn unit() -> Self {
        WedgeMonomial { monomial: Monomial::unit(), sign: 1 }
    }

    pub fn basis(monomial: Monomial) -> Self {
        WedgeMonomial { monomial, sign: 1 }
    }

    pub fn degree(&self) -> usize {
        self.monomial.degree()
    }

    /// `self ∧ other`, `None` when a factor is shared.
    pub fn wedge(&self, other: &WedgeMonomial) -> Option<WedgeMonomial> {
        let mut w = WedgeMonomial::new(self.monomial.0.iter().chain(other.monomial.0.iter()).copied())?;
        w.sign *= self.sign * other.sign;
        Some(w)
    }

    pub fn to_element(&self) -> WedgeElement {
        let mut e = WedgeElement::zero();
        e.add_term(self.monomial.clone(), Rational::from_integer(BigInt::from(self.sign)));
        e
    }
}

/// Rational combination of canonical monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WedgeElement {
    terms: BTreeMap<Monomial, Rational>,
}

impl WedgeElement {
    pub fn zero() -> Self {
        WedgeElement { terms: BTreeMap::new() }
    }

    /// Signed sum of ordered products: `Σ c · (f1 ∧ f2 ∧ …)`.
    pub fn from_products<'a>(items: impl IntoIterator<Item = (i64, &'a [Generator])>) -> Self {
        let mut e = WedgeElement::zero();
        for (c, fs) in items {
            if let Some(w) = WedgeMonomial::new(fs.iter().copied()) {
                e.add_term(w.monomial, Rational::from_integer(BigInt::from(c * w.sign as i64)));
            }
        }
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add_scaled(&mut self, other: &WedgeElement, c: &Rational) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn pop_first(&mut self) -> Option<(Monomial, Rational)> {
        self.terms.pop_first()
    }

    pub fn pop_last(&mut self) -> Option<(Monomial, Rational)> {
        self.terms.pop_last()
    }

    pub fn max_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    /// `self ∧ other`, bilinearly.
    pub fn wedge(&self, other: &WedgeElement) -> WedgeElement {
        let mut out = WedgeElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some(w) = WedgeMonomial::basis(a.clone()).wedge(&WedgeMonomial::basis(b.clone())) {
                    out.add_term(w.monomial, x * y * Rational::from_integer(BigInt::from(w.sign)));
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &WedgeElement) -> WedgeElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }
}

/// Human-readable form such as `r1_2∧r2_3 - 2 r1_3∧r3_2`.
impl fmt::Display for WedgeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rational::zero();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = if negative { -c.clone() } else { c.clone() };
            if !abs.is_one() {
                write!(f, "{abs} ")?;
            }
            write!(f, "{m:?}")?;
        }
        Ok(())
    }
}

/// Parses an edge list such as `1>2,2>3,3>1` into generators, in order.
pub fn parse_edges(s: &str) -> crate::Result<Vec<Generator>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let bad = || crate::Error::InvalidInput(alloc::format!("bad edge {part:?}, expected i>j"));
        let (i, j) = part.split_once('>').ok_or_else(bad)?;
        let i: u8 = i.trim().parse().map_err(|_| bad())?;
        let j: u8 = j.trim().parse().map_err(|_| bad())?;
        if i == j || i == 0 || j == 0 {
            return Err(bad());
        }
        out.push(Generator::new(i, j));
    }
    Ok(out)
}

impl fmt::Debug for WedgeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){m:?}")?;
        }
        Ok(())
    }
}

/// Kind of a join: two edges leaving the same vertex (`V`) or entering the
/// same vertex (`A`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum JoinKind {
    V,
    A,
}

/// A V-join `{(i,j), (i,k)}` or an A-join `{(i,k), (j,k)}`.
///
/// `triple` is `(i, j, k)` as in the pruning relations, with the two free
/// ends ordered (`j < k` for V-joins, `i < j` for A-joins).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Join {
    pub kind: JoinKind,
    pub triple: (u8, u8, u8),
}

impl Join {
    /// The two edges of the join, in the order they appear on the left of
    /// the pruning relation.
    pub fn edges(&self) -> (Generator, Generator) {
        let (i, j, k) = self.triple;
        match self.kind {
            JoinKind::V => (Generator::new(i, j), Generator::new(i, k)),
            JoinKind::A => (Generator::new(i, k), Generator::new(j, k)),
        }
    }

    /// Deterministic strategy key: smallest triple first, V before A.
    pub fn key(&self) -> ((u8, u8, u8), JoinKind) {
        (self.triple, self.kind)
    }
}

/// Directed multigraph read off a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forest {
    edges: Vec<Generator>,
}

impl Forest {
    pub fn new(edges: Vec<Generator>) -> Self {
        Forest { edges }
    }

    pub fn edges(&self) -> &[Generator] {
        &self.edges
    }

    fn vertices(&self) -> Vec<u8> {
        let mut v: Vec<u8> = self.edges.iter().flat_map(|g| [g.i, g.j]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `true` when the underlying undirected multigraph has a cycle; a pair
    /// `(i,j), (j,i)` counts as a cycle of length 2.
    pub fn has_loop(&self) -> bool {
        let verts = self.vertices();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nxt = p[y];
                p[y] = r;
                y = nxt;
            }
            r
        }
        let pos = |v: u8| verts.binary_search(&v).unwrap();
        for g in &self.edges {
            let (a, b) = (find(&mut parent, pos(g.i)), find(&mut parent, pos(g.j)));
            if a == b {
                return true;
            }
            parent[a] = b;
        }
        false
    }

    /// Connected components (undirected), each as increasing vertex lists,
    /// ordered by smallest vertex. Isolated vertices are not included.
    pub fn components(&self) -> Vec<Vec<u8>> {
        let verts = self.vertices();
        let mut comp: Vec<Option<usize>> = alloc::vec![None; verts.len()];
        let pos = |v: u8| verts.binary_search(&v).unwrap();
        let mut out: Vec<Vec<u8>> = Vec::new();
        for start in 0..verts.len() {
            if comp[start].is_some() {
                continue;
            }
            let id = out.len();
            let mut stack = alloc::vec![start];
            comp[start] = Some(id);
            let mut members = Vec::new();
            while let Some(x) = stack.pop() {
                members.push(verts[x]);
                for g in &self.edges {
                    let other = if g.i == verts[x] {
                        g.j
                    } else if g.j == verts[x] {
                        g.i
                    } else {
                        continue;
                    };
                    let y = pos(other);
                    if comp[y].is_none() {
                        comp[y] = Some(id);
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Whether a directed path leads from `a` to `b` (`a == b` counts).
    pub fn reaches(&self, a: u8, b: u8) -> bool {
        let mut seen: Vec<u8> = alloc::vec![a];
        let mut stack = alloc::vec![a];
        while let Some(x) = stack.pop() {
            if x == b {
                return true;
            }
            for g in self.edges.iter().filter(|g| g.i == x) {
                if !seen.contains(&g.j) {
                    seen.push(g.j);
                    stack.push(g.j);
                }
            }
        }
        false
    }

    /// Number of vertex pairs, within each component, joined by no directed
    /// path in either direction. Only meaningful for loop-free graphs.
    pub fn defect(&self) -> usize {
        let mut d = 0;
        for comp in self.components() {
            for (x, &a) in comp.iter().enumerate() {
                for &b in &comp[x + 1..] {
                    if !self.reaches(a, b) && !self.reaches(b, a) {
                        d += 1;
                    }
                }
            }
        }
        d
    }

    /// All V- and A-joins, sorted by [`Join::key`].
    pub fn joins(&self) -> Vec<Join> {
        let mut out = Vec::new();
        for (x, e) in self.edges.iter().enumerate() {
            for f in &self.edges[x + 1..] {
                if e.i == f.i && e.j != f.j {
                    let (j, k) = if e.j < f.j { (e.j, f.j) } else { (f.j, e.j) };
                    out.push(Join { kind: JoinKind::V, triple: (e.i, j, k) });
                }
                if e.j == f.j && e.i != f.i {
                    let (i, j) = if e.i < f.i { (e.i, f.i) } else { (f.i, e.i) };
                    out.push(Join { kind: JoinKind::A, triple: (i, j, e.j) });
                }
            }
        }
        out.sort_by_key(Join::key);
        out
    }

    /// Loop-free and without joins: a disjoint union of directed chains.
    pub fn is_chain_gang(&self) -> bool {
        !self.has_loop() && self.joins().is_empty()
    }

    /// A shortest undirected cycle as a closed vertex walk `v0, v1, …, v(m-1)`
    /// (edge `v(m-1)–v0` implied), together with the edges used. Among cycles
    /// of minimal length the one found from the earliest edge is returned.
    pub fn shortest_cycle(&self) -> Option<(Vec<u8>, Vec<Generator>)> {
        let mut best: Option<(Vec<u8>, Vec<Generator>)> = None;
        for (skip, e) in self.edges.iter().enumerate() {
            // BFS from e.j to e.i avoiding edge `skip`
            let mut prev: BTreeMap<u8, (u8, usize)> = BTreeMap::new();
            let mut queue = alloc::collections::VecDeque::new();
            queue.push_back(e.j);
            let mut found = e.j == e.i;
            prev.insert(e.j, (e.j, usize::MAX));
            while let Some(x) = queue.pop_front() {
                if x == e.i {
                    found = true;
                    break;
                }
                for (idx, g) in self.edges.iter().enumerate() {
                    if idx == skip {
                        continue;
                    }
                    let y = if g.i == x {
                        g.j
                    } else if g.j == x {
                        g.i
                    } else {
                        continue;
                    };
                    if let alloc::collections::btree_map::Entry::Vacant(slot) = prev.entry(y) {
                        slot.insert((x, idx));
                        queue.push_back(y);
                    }
                }
            }
            if !found {
                continue;
            }
            // walk back from e.i to e.j
            let mut verts = alloc::vec![e.i];
            let mut used = alloc::vec![*e];
            let mut cur = e.i;
            while cur != e.j {
                let (p, idx) = prev[&cur];
                used.push(self.edges[idx]);
                verts.push(p);
                cur = p;
            }
            if best.as_ref().is_none_or(|b| verts.len() < b.0.len()) {
                best = Some((verts, used));
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: u8, j: u8) -> Generator {
        Generator::new(i, j)
    }

    #[test]
    fn sorting_sign() {
        let w = WedgeMonomial::new([g(2, 3), g(1, 2)]).unwrap();
        assert_eq!(w.sign, -1);
        assert_eq!(w.monomial.factors(), &[g(1, 2), g(2, 3)]);
        let w = WedgeMonomial::new([g(3, 4), g(2, 3), g(1, 2)]).unwrap();
        assert_eq!(w.sign, -1);
        let w = WedgeMonomial::new([g(2, 3), g(3, 4), g(1, 2)]).unwrap();
        assert_eq!(w.sign, 1);
    }

    #[test]
    fn repeated_factor_vanishes() {
        assert!(WedgeMonomial::new([g(1, 2), g(1, 2)]).is_none());
        assert!(WedgeMonomial::new([g(1, 2), g(3, 1), g(1, 2)]).is_none());
    }

    #[test]
    fn defect_examples() {
        assert_eq!(Forest::new(alloc::vec![g(1, 2), g(2, 3)]).defect(), 0);
        assert_eq!(Forest::new(alloc::vec![g(1, 2), g(1, 3)]).defect(), 1);
        assert_eq!(Forest::new(alloc::vec![g(1, 2), g(3, 4)]).defect(), 0);
        assert_eq!(Forest::new(alloc::vec![g(1, 2), g(1, 3), g(1, 4)]).defect(), 3);
    }

    #[test]
    fn loops_and_joins() {
        assert!(Forest::new(alloc::vec![g(1, 2), g(2, 1)]).has_loop());
        assert!(Forest::new(alloc::vec![g(1, 2), g(2, 3), g(3, 1)]).has_loop());
        assert!(Forest::new(alloc::vec![g(1, 2), g(1, 3), g(2, 3)]).has_loop());
        assert!(!Forest::new(alloc::vec![g(1, 2), g(1, 3)]).has_loop());
        let j = Forest::new(alloc::vec![g(1, 2), g(3, 2), g(3, 4)]).joins();
        assert_eq!(
            j,
            alloc::vec![
                Join { kind: JoinKind::A, triple: (1, 3, 2) },
                Join { kind: JoinKind::V, triple: (3, 2, 4) },
            ]
        );
    }

    #[test]
    fn shortest_cycle_found() {
        let f = Forest::new(alloc::vec![g(1, 2), g(2, 3), g(3, 4), g(4, 1), g(1, 5)]);
        let (verts, edges) = f.shortest_cycle().unwrap();
        assert_eq!(verts.len(), 4);
        assert_eq!(edges.len(), 4);
        let f = Forest::new(alloc::vec![g(1, 2), g(2, 1)]);
        assert_eq!(f.shortest_cycle().unwrap().0.len(), 2);
        assert!(Forest::new(alloc::vec![g(1, 2)]).shortest_cycle().is_none());
    }

    #[test]
    fn element_wedge_is_bilinear() {
        let a = WedgeElement::from_products([(1, &[g(1, 2)][..]), (2, &[g(2, 3)][..])]);
        let b = WedgeElement::from_products([(1, &[g(3, 4)][..])]);
        let p = a.wedge(&b);
        let expected = WedgeElement::from_products([(1, &[g(1, 2), g(3, 4)][..]), (2, &[g(2, 3), g(3, 4)][..])]);
        assert_eq!(p, expected);
    }
}
