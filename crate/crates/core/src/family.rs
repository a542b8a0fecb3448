//! The pure virtual braid family and its relatives: relator symbols, their
//! quadratic and group-level images, and the three presentations
//! `pvb_n`, `pfb_n` and `pb_n`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::free::FreeElement;
use crate::linalg::{Echelon, SparseVec, SpanSolver};
use crate::quad::QuadraticPresentation;
use crate::report::{Check, Value, VerificationReport};
use crate::word::{all_ordered_generators, increasing_generators, Generator};
use crate::Rational;

/// Which algebra of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    /// Pure virtual braids: generators `r_ij` for all ordered pairs.
    PvB,
    /// Pure flat braids: `pvb_n` with `r_ji = −r_ij`.
    PfB,
    /// Pure braids: generators `a_ij = a_ji`, relations `[a_ij, a_ik + a_jk]`
    /// and `[a_ij, a_kl]`.
    PB,
}

impl FamilyTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::PvB => "pvb",
            FamilyTag::PfB => "pfb",
            FamilyTag::PB => "pb",
        }
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pvb" => Ok(FamilyTag::PvB),
            "pfb" => Ok(FamilyTag::PfB),
            "pb" => Ok(FamilyTag::PB),
            _ => Err(Error::InvalidInput(format!("unknown family {s:?}, expected pvb, pfb or pb"))),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraFamily {
    pub tag: FamilyTag,
    pub n: usize,
}

impl AlgebraFamily {
    pub fn new(tag: FamilyTag, n: usize) -> Self {
        AlgebraFamily { tag, n }
    }

    pub fn pvb(n: usize) -> Self {
        Self::new(FamilyTag::PvB, n)
    }

    /// Basis of the degree-1 space.
    pub fn generators(&self) -> Vec<Generator> {
        match self.tag {
            FamilyTag::PvB => all_ordered_generators(self.n),
            FamilyTag::PfB | FamilyTag::PB => increasing_generators(self.n),
        }
    }

    /// The quadratic relators, as a linearly independent list.
    ///
    /// For `pvb_n` these are all `y_ijk` (every ordering of every triple) and
    /// all canonical `c_ij^kl`; their number is `L(n, n − 2)`. For `pfb_n`
    /// and `pb_n` the natural spanning families are dependent, and a maximal
    /// independent subfamily is kept, scanning in the natural order.
    pub fn quadratic_relators(&self) -> Vec<FreeElement> {
        match self.tag {
            FamilyTag::PvB => pvb_symbols(self.n).iter().map(|s| s.quadratic(self.n)).collect(),
            FamilyTag::PfB => {
                let n = self.n;
                let fold = |g: Generator| {
                    if g.i < g.j {
                        FreeElement::generator(n, g)
                    } else {
                        FreeElement::generator(n, g.reversed()).scale(&-Rational::one())
                    }
                };
                let candidates = pvb_symbols(n)
                    .iter()
                    .map(|s| s.quadratic(n).substitute(n, fold).expect("same ambient n"))
                    .collect();
                independent_subfamily(&self.generators(), candidates)
            }
            FamilyTag::PB => independent_subfamily(&self.generators(), pb_relator_family(self.n)),
        }
    }

    pub fn presentation(&self) -> QuadraticPresentation {
        QuadraticPresentation::new(self.n, self.generators(), self.quadratic_relators())
            .expect("family relators form a valid presentation")
    }
}

/// Keeps the members of `candidates` that are independent of the ones kept
/// before them.
fn independent_subfamily(gens: &[Generator], candidates: Vec<FreeElement>) -> Vec<FreeElement> {
    let dim = gens.len();
    let index = |g: Generator| gens.iter().position(|x| *x == g);
    let mut echelon = Echelon::new();
    let mut kept = Vec::new();
    for c in candidates {
        let v = c
            .coordinates(|w| crate::word::tensor_index(w.letters(), dim, index))
            .expect("relator uses presentation generators");
        if echelon.insert(&v) {
            kept.push(c);
        }
    }
    kept
}

/// `[a_ij, a_ik + a_jk]` for every triple and every choice of the pair
/// `{i, j}`, then `[a_ij, a_kl]` for disjoint pairs. Generators are written
/// with increasing indices.
fn pb_relator_family(n: usize) -> Vec<FreeElement> {
    let a = |x: u8, y: u8| FreeElement::generator(n, Generator::new(x.min(y), x.max(y)));
    let mut out = Vec::new();
    for i in 1..=n as u8 {
        for j in i + 1..=n as u8 {
            for k in 1..=n as u8 {
                if k == i || k == j {
                    continue;
                }
                let sum = &a(i, k) + &a(j, k);
                out.push(FreeElement::commutator(&a(i, j), &sum).expect("same ambient n"));
            }
        }
    }
    let pairs = increasing_generators(n);
    for (x, p) in pairs.iter().enumerate() {
        for q in &pairs[x + 1..] {
            if !q.touches(p.i) && !q.touches(p.j) {
                out.push(FreeElement::commutator(&a(p.i, p.j), &a(q.i, q.j)).expect("same ambient n"));
            }
        }
    }
    out
}

/// A relator symbol: `Y_ijk` or `C_ij^kl`.
///
/// `C` symbols are stored with the smaller ordered pair first; use
/// [`RelatorSymbol::c`] to build one from arbitrary pairs together with the
/// sign relating it to the canonical symbol.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelatorSymbol {
    Y(u8, u8, u8),
    C((u8, u8), (u8, u8)),
}

impl RelatorSymbol {
    pub fn y(i: u8, j: u8, k: u8) -> Self {
        RelatorSymbol::Y(i, j, k)
    }

    /// `C_ij^kl = sign · canonical`.
    pub fn c(i: u8, j: u8, k: u8, l: u8) -> (Self, i64) {
        if (i, j) <= (k, l) {
            (RelatorSymbol::C((i, j), (k, l)), 1)
        } else {
            (RelatorSymbol::C((k, l), (i, j)), -1)
        }
    }

    /// Distinct indices within `[n]`, and canonical order for `C`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let (idx, canonical): (Vec<u8>, bool) = match *self {
            RelatorSymbol::Y(i, j, k) => (alloc::vec![i, j, k], true),
            RelatorSymbol::C((i, j), (k, l)) => (alloc::vec![i, j, k, l], (i, j) < (k, l)),
        };
        let in_range = idx.iter().all(|&x| x >= 1 && x as usize <= n);
        let mut sorted = idx.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if !in_range || sorted.len() != idx.len() || !canonical {
            return Err(Error::InvalidSymbol(format!("{self:?} on {n} strands")));
        }
        Ok(())
    }

    /// Strands the symbol involves.
    pub fn strands(&self) -> Vec<u8> {
        match *self {
            RelatorSymbol::Y(i, j, k) => alloc::vec![i, j, k],
            RelatorSymbol::C((i, j), (k, l)) => alloc::vec![i, j, k, l],
        }
    }

    /// The quadratic relator: `y_ijk = [r_ij, r_ik] + [r_ij, r_jk] + [r_ik, r_jk]`
    /// or `c_ij^kl = [r_ij, r_kl]`.
    pub fn quadratic(&self, n: usize) -> FreeElement {
        let r = |a: u8, b: u8| FreeElement::generator(n, Generator::new(a, b));
        let br = |x: &FreeElement, y: &FreeElement| FreeElement::commutator(x, y).expect("same ambient n");
        match *self {
            RelatorSymbol::Y(i, j, k) => {
                let (ij, ik, jk) = (r(i, j), r(i, k), r(j, k));
                &(&br(&ij, &ik) + &br(&ij, &jk)) + &br(&ik, &jk)
            }
            RelatorSymbol::C((i, j), (k, l)) => br(&r(i, j), &r(k, l)),
        }
    }

    /// The group relator: `R_ij R_ik R_jk − R_jk R_ik R_ij` or
    /// `R_ij R_kl − R_kl R_ij`.
    pub fn group(&self, n: usize) -> FreeElement {
        let g = Generator::new;
        let w = |letters: &[Generator]| FreeElement::word(n, letters);
        match *self {
            RelatorSymbol::Y(i, j, k) => &w(&[g(i, j), g(i, k), g(j, k)]) - &w(&[g(j, k), g(i, k), g(i, j)]),
            RelatorSymbol::C((i, j), (k, l)) => &w(&[g(i, j), g(k, l)]) - &w(&[g(k, l), g(i, j)]),
        }
    }

    /// Text form such as `Y1_2_3` or `C1_2^3_4`.
    pub fn token(&self) -> String {
        match *self {
            RelatorSymbol::Y(i, j, k) => format!("Y{i}_{j}_{k}"),
            RelatorSymbol::C((i, j), (k, l)) => format!("C{i}_{j}^{k}_{l}"),
        }
    }
}

impl fmt::Debug for RelatorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl fmt::Display for RelatorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// All relator symbols of `pvb_n`: `Y_ijk` for ordered triples of distinct
/// strands, then canonical `C_ij^kl`, each group in increasing order.
pub fn pvb_symbols(n: usize) -> Vec<RelatorSymbol> {
    let mut out = Vec::new();
    let m = n as u8;
    for i in 1..=m {
        for j in 1..=m {
            for k in 1..=m {
                if i != j && j != k && i != k {
                    out.push(RelatorSymbol::Y(i, j, k));
                }
            }
        }
    }
    let gens = all_ordered_generators(n);
    for (x, p) in gens.iter().enumerate() {
        for q in &gens[x + 1..] {
            if !q.touches(p.i) && !q.touches(p.j) {
                out.push(RelatorSymbol::C((p.i, p.j), (q.i, q.j)));
            }
        }
    }
    out
}

/// Group relator images of every `pvb_n` symbol.
pub fn group_relators(n: usize) -> Vec<(RelatorSymbol, FreeElement)> {
    pvb_symbols(n).into_iter().map(|s| (s, s.group(n))).collect()
}

/// The map `a_ij ↦ r_ij + r_ji` from `pb_n` to `pvb_n`, applied to an element
/// written in the `a_ij` (`i < j`).
pub fn psi(x: &FreeElement) -> FreeElement {
    let n = x.n();
    x.substitute(n, |g| &FreeElement::generator(n, g) + &FreeElement::generator(n, g.reversed()))
        .expect("same ambient n")
}

/// Every `pb_n` quadratic relator maps into the span of the `pvb_n`
/// relators under `a_ij ↦ r_ij + r_ji`.
pub fn psi_image_check(n: usize) -> VerificationReport {
    let mut report = VerificationReport::new("psi").param("n", n);
    let pvb = AlgebraFamily::pvb(n).presentation();
    let solver = SpanSolver::new(&pvb.relation_vectors());
    let symbols = pvb_symbols(n);
    let relators = pb_relator_family(n);
    let mut members = 0usize;
    let mut outside = Vec::new();
    for rel in &relators {
        let v: SparseVec = pvb.coordinates(&psi(rel)).expect("image uses pvb generators");
        match solver.solve(&v) {
            Some(_) => members += 1,
            None => outside.push(Value::Text(format!("{rel:?}"))),
        }
    }
    let mut check = Check::new("members", relators.len(), members);
    if n >= 4 {
        // the image of [a12, a34] as a combination of c relators
        let a = |i, j| FreeElement::generator(n, Generator::new(i, j));
        let image = psi(&FreeElement::commutator(&a(1, 2), &a(3, 4)).expect("same ambient n"));
        let v = pvb.coordinates(&image).expect("image uses pvb generators");
        if let Some(coeffs) = solver.solve(&v) {
            let used: Vec<Value> = coeffs
                .iter()
                .zip(&symbols)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, s)| Value::Text(format!("{c}·{s}")))
                .collect();
            check = check.detail("psi([a1_2,a3_4])", Value::List(used));
        }
    }
    if !outside.is_empty() {
        check = check.with_payload(Value::List(outside));
    }
    report.push(check);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::lah;
    use num_bigint::BigUint;

    #[test]
    fn relator_counts() {
        assert_eq!(AlgebraFamily::pvb(3).quadratic_relators().len(), 6);
        assert_eq!(AlgebraFamily::pvb(4).quadratic_relators().len(), 36);
        assert!(AlgebraFamily::pvb(2).quadratic_relators().is_empty());
        for n in 3..=5 {
            assert_eq!(BigUint::from(pvb_symbols(n).len()), lah(n, n - 2));
        }
    }

    #[test]
    fn c_symbols_are_canonical() {
        assert_eq!(RelatorSymbol::c(3, 4, 1, 2), (RelatorSymbol::C((1, 2), (3, 4)), -1));
        assert_eq!(RelatorSymbol::c(1, 2, 3, 4), (RelatorSymbol::C((1, 2), (3, 4)), 1));
        assert!(RelatorSymbol::C((3, 4), (1, 2)).validate(4).is_err());
        assert!(RelatorSymbol::Y(1, 2, 2).validate(4).is_err());
        assert!(RelatorSymbol::Y(1, 2, 5).validate(4).is_err());
    }

    #[test]
    fn group_relator_shapes() {
        let g = Generator::new;
        let y = RelatorSymbol::y(1, 2, 3).group(3);
        let expected = &FreeElement::word(3, &[g(1, 2), g(1, 3), g(2, 3)]) - &FreeElement::word(3, &[g(2, 3), g(1, 3), g(1, 2)]);
        assert_eq!(y, expected);
    }

    #[test]
    fn shift_expansion_recovers_quadratic_relators() {
        for (s, rel) in group_relators(4) {
            let e = rel.shift_expand(2);
            assert_eq!(e, s.quadratic(4), "{s:?}");
            assert_eq!(e.part(0), FreeElement::zero(4));
            assert_eq!(e.part(1), FreeElement::zero(4));
        }
    }

    #[test]
    fn pfb_and_pb_counts() {
        // the relation space is dual to the degree-2 part of the dual
        // algebra, of dimension S(n, n-2) and s(n, n-2) respectively
        use crate::combinatorics::{stirling1, stirling2};
        for n in 3..=5 {
            let pfb = AlgebraFamily::new(FamilyTag::PfB, n).quadratic_relators().len();
            let pb = AlgebraFamily::new(FamilyTag::PB, n).quadratic_relators().len();
            assert_eq!(BigUint::from(pfb), stirling2(n, n - 2), "pfb n={n}");
            assert_eq!(BigUint::from(pb), stirling1(n, n - 2), "pb n={n}");
        }
    }

    #[test]
    fn psi_maps_into_pvb_relators() {
        let g = Generator::new;
        let a12 = FreeElement::generator(4, g(1, 2));
        assert_eq!(psi(&a12), &FreeElement::generator(4, g(1, 2)) + &FreeElement::generator(4, g(2, 1)));
        assert!(psi_image_check(4).pass());
    }
}
