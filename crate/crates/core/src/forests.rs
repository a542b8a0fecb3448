//! Enumeration of the graph-indexed monomial bases of the dual algebra.
//!
//! * Chain gangs: unordered partitions of `[n]` into ordered blocks, each
//!   block read as a directed chain.
//! * Down forests: each block `{m < x < …}` becomes the tuft `x → m`.
//! * Up forests: each cyclically ordered block becomes a recursive tree with
//!   increasing edges.
//! * Up-Down forests: Up trees on a partition into cycles, joined by a Down
//!   forest on the set of cycle minima.
//!
//! Every monomial is returned in canonical form with sign `+1`.

use alloc::vec::Vec;

use num_bigint::BigUint;

use alloc::format;

use crate::combinatorics::{lah, permutations, set_partitions, stirling1, stirling2};
use crate::error::Result;
use crate::family::AlgebraFamily;
use crate::free::FreeElement;
use crate::lex::lex_normal_form;
use crate::linalg::{rank_of, Basis, SparseVec};
use crate::report::{Check, VerificationReport};
use crate::wedge::{Monomial, WedgeMonomial};
use crate::word::Generator;

fn canonical(edges: Vec<Generator>) -> Monomial {
    WedgeMonomial::new(edges).expect("forest edges are distinct").monomial
}

fn sorted_unique(mut v: Vec<Monomial>) -> Vec<Monomial> {
    v.sort();
    v.dedup();
    v
}

fn strands(n: usize) -> Vec<u8> {
    (1..=n as u8).collect()
}

/// Edges of the chain `s0 → s1 → …`.
fn chain_edges(seq: &[u8], out: &mut Vec<Generator>) {
    for w in seq.windows(2) {
        out.push(Generator::new(w[0], w[1]));
    }
}

/// Chain gangs on `[n]` with `k` edges, i.e. `n − k` chains. There are
/// `L(n, n − k)` of them.
pub fn enumerate_chain_gangs(n: usize, k: usize) -> Vec<Monomial> {
    if k >= n.max(1) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for partition in set_partitions(&strands(n), n - k) {
        for chains in arrangements(&partition, permutations) {
            let mut edges = Vec::with_capacity(k);
            for c in &chains {
                chain_edges(c, &mut edges);
            }
            out.push(canonical(edges));
        }
    }
    sorted_unique(out)
}

/// Down tree on a block: every element points to the block minimum.
fn down_edges(block: &[u8], out: &mut Vec<Generator>) {
    let m = *block.iter().min().expect("nonempty block");
    for &x in block {
        if x != m {
            out.push(Generator::new(x, m));
        }
    }
}

/// Up tree of a cyclic order written from its minimum: each element hangs
/// from the nearest earlier element that is smaller than it.
pub fn up_tree_edges(cycle: &[u8], out: &mut Vec<Generator>) {
    for t in 1..cycle.len() {
        let parent = cycle[..t].iter().rev().find(|&&p| p < cycle[t]).expect("cycle starts at its minimum");
        out.push(Generator::new(*parent, cycle[t]));
    }
}

/// All cyclic orders of `block`, each written starting at the minimum.
fn cyclic_orders(block: &[u8]) -> Vec<Vec<u8>> {
    let mut sorted = block.to_vec();
    sorted.sort_unstable();
    let (m, rest) = sorted.split_first().expect("nonempty block");
    permutations(rest)
        .into_iter()
        .map(|p| {
            let mut c = alloc::vec![*m];
            c.extend(p);
            c
        })
        .collect()
}

/// Every way to arrange each block of `partition` by one of `orders(block)`.
fn arrangements(partition: &[Vec<u8>], orders: impl Fn(&[u8]) -> Vec<Vec<u8>>) -> Vec<Vec<Vec<u8>>> {
    let mut acc: Vec<Vec<Vec<u8>>> = alloc::vec![Vec::new()];
    for block in partition {
        let options = orders(block);
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for prefix in &acc {
            for o in &options {
                let mut p = prefix.clone();
                p.push(o.clone());
                next.push(p);
            }
        }
        acc = next;
    }
    acc
}

fn cycle_structures(partition: &[Vec<u8>]) -> Vec<Vec<Vec<u8>>> {
    arrangements(partition, cyclic_orders)
}

/// Down forests on `[n]` with `k` edges; there are `S(n, n − k)`.
pub fn enumerate_down(n: usize, k: usize) -> Vec<Monomial> {
    if k >= n.max(1) {
        return Vec::new();
    }
    let out = set_partitions(&strands(n), n - k)
        .into_iter()
        .map(|p| {
            let mut edges = Vec::new();
            for b in &p {
                down_edges(b, &mut edges);
            }
            canonical(edges)
        })
        .collect();
    sorted_unique(out)
}

/// Up forests on `[n]` with `k` edges; there are `s(n, n − k)`.
pub fn enumerate_up(n: usize, k: usize) -> Vec<Monomial> {
    if k >= n.max(1) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for p in set_partitions(&strands(n), n - k) {
        for cycles in cycle_structures(&p) {
            let mut edges = Vec::new();
            for c in &cycles {
                up_tree_edges(c, &mut edges);
            }
            out.push(canonical(edges));
        }
    }
    sorted_unique(out)
}

/// An ordered two-step partition: `[n]` split into cyclically ordered
/// blocks, and the set of block minima split into unordered groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedTwoStepPartition {
    /// Cyclic orders, each written from its minimum.
    pub cycles: Vec<Vec<u8>>,
    /// A partition of the cycle minima.
    pub groups: Vec<Vec<u8>>,
}

impl OrderedTwoStepPartition {
    /// Up trees on the cycles plus the Down forest on the minima.
    pub fn forest(&self) -> Monomial {
        let mut edges = Vec::new();
        for c in &self.cycles {
            up_tree_edges(c, &mut edges);
        }
        for g in &self.groups {
            down_edges(g, &mut edges);
        }
        canonical(edges)
    }
}

/// All ordered two-step partitions of `[n]` whose forest has `k` edges.
pub fn ordered_two_step_partitions(n: usize, k: usize) -> Vec<OrderedTwoStepPartition> {
    let mut out = Vec::new();
    if k >= n.max(1) {
        return out;
    }
    let groups = n - k;
    for l in groups..=n {
        for p in set_partitions(&strands(n), l) {
            for cycles in cycle_structures(&p) {
                let minima: Vec<u8> = cycles.iter().map(|c| c[0]).collect();
                for g in set_partitions(&minima, groups) {
                    out.push(OrderedTwoStepPartition { cycles: cycles.clone(), groups: g });
                }
            }
        }
    }
    out
}

/// Up-Down forests on `[n]` with `k` edges; there are `L(n, n − k)`.
pub fn enumerate_updown(n: usize, k: usize) -> Vec<Monomial> {
    sorted_unique(ordered_two_step_partitions(n, k).iter().map(OrderedTwoStepPartition::forest).collect())
}

/// Number of partitions of `[n]` into `k` ordered blocks, by enumeration.
pub fn lah_by_enumeration(n: usize, k: usize) -> BigUint {
    let mut total = BigUint::from(0u8);
    for p in set_partitions(&strands(n), k) {
        let mut ways = BigUint::from(1u8);
        for b in &p {
            ways *= BigUint::from(permutations(b).len());
        }
        total += ways;
    }
    total
}

/// `L(n, k) = Σ_l s(n, l) S(l, k)` for all `0 ≤ k ≤ n ≤ max_n`, with the
/// Lah numbers counted by enumeration.
pub fn lah_stirling_check(max_n: usize) -> VerificationReport {
    let mut report = VerificationReport::new("lahstirling").param("max_n", max_n);
    for n in 0..=max_n {
        for k in 0..=n {
            let enumerated = lah_by_enumeration(n, k);
            let sum: BigUint = (k..=n).map(|l| stirling1(n, l) * stirling2(l, k)).sum();
            report.push(
                Check::new(alloc::format!("L({n},{k})"), enumerated, sum).detail("recurrence", lah(n, k)),
            );
        }
    }
    report
}

/// Chain gangs as a basis of the dual algebra, certified by linear algebra:
/// for each `k ≤ max_k`, the chain-gang words are independent modulo the
/// dual relations in degree `k`, and their number equals the graded
/// dimension, both equal to `L(n, n − k)`.
pub fn chain_gang_certificate(n: usize, max_k: usize, budget: usize) -> Result<VerificationReport> {
    let dual = AlgebraFamily::pvb(n).presentation().annihilator();
    let p = &dual.presentation;
    let mut report = VerificationReport::new("basis").param("basis", "chain-gangs").param("n", n).param("max_k", max_k);
    for k in 0..=max_k {
        let expected = if k < n.max(1) { lah(n, n - k) } else { BigUint::from(0u8) };
        let gangs = enumerate_chain_gangs(n, k);
        let vectors: Vec<SparseVec> = gangs
            .iter()
            .map(|m| {
                let w = FreeElement::word(n, m.factors());
                p.coordinates(&w).expect("pvb generators")
            })
            .collect();
        let independent = p.independent_modulo_ideal(k, &vectors, budget)?;
        let dim = p.graded_dim(k, budget)?;
        report.push(Check::new(format!("count_k{k}"), expected.clone(), gangs.len()));
        report.push(Check::new(format!("dim_k{k}"), expected, dim));
        report.push(Check::new(format!("independent_k{k}"), true, independent));
    }
    Ok(report)
}

/// Coordinates of the Gröbner normal forms of the chain gangs against the
/// Up-Down basis in degree `k`; returns `(rank, basis size)`.
pub fn change_of_basis_rank(n: usize, k: usize) -> (usize, usize) {
    let updown = Basis::new(enumerate_updown(n, k));
    let rows: Vec<SparseVec> = enumerate_chain_gangs(n, k)
        .into_iter()
        .map(|m| {
            let mut row: SparseVec = lex_normal_form(&WedgeMonomial::basis(m))
                .terms()
                .map(|(t, c)| (updown.index_of(t).expect("normal forms are Up-Down monomials"), c.clone()))
                .collect();
            row.sort_by_key(|e| e.0);
            row
        })
        .collect();
    (rank_of(&rows), updown.len())
}

/// Up-Down forests: counts `L(n, n − k)` for `n ≤ max_n`, `k ≤ max_k`, and
/// invertibility of the chain-gang → Up-Down change of basis on
/// `cob_n` strands.
pub fn updown_report(max_n: usize, max_k: usize, cob_n: usize) -> VerificationReport {
    let mut report = VerificationReport::new("updown").param("max_n", max_n).param("max_k", max_k);
    for n in 1..=max_n {
        for k in 0..=max_k.min(n - 1) {
            report.push(Check::new(format!("count n={n} k={k}"), lah(n, n - k), enumerate_updown(n, k).len()));
        }
    }
    for k in 0..=max_k.min(cob_n.saturating_sub(1)) {
        let (rank, size) = change_of_basis_rank(cob_n, k);
        report.push(Check::new(format!("change_of_basis n={cob_n} k={k}"), size, rank).detail("size", size));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lex::is_lex_normal;

    fn count(v: Vec<Monomial>) -> BigUint {
        BigUint::from(v.len())
    }

    #[test]
    fn chain_gang_counts() {
        assert_eq!(enumerate_chain_gangs(3, 2).len(), 6);
        assert_eq!(enumerate_chain_gangs(4, 2).len(), 36);
        assert_eq!(enumerate_chain_gangs(5, 0), alloc::vec![Monomial::unit()]);
        assert!(enumerate_chain_gangs(3, 3).is_empty());
        for n in 1..=6 {
            for k in 0..n {
                assert_eq!(count(enumerate_chain_gangs(n, k)), lah(n, n - k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn chain_gangs_have_no_joins_or_loops() {
        for m in enumerate_chain_gangs(5, 3) {
            assert!(m.forest().is_chain_gang());
            assert_eq!(m.forest().defect(), 0);
        }
    }

    #[test]
    fn forest_counts() {
        for n in 1..=6 {
            for k in 0..n {
                assert_eq!(count(enumerate_down(n, k)), stirling2(n, n - k), "down n={n} k={k}");
                assert_eq!(count(enumerate_up(n, k)), stirling1(n, n - k), "up n={n} k={k}");
                assert_eq!(count(enumerate_updown(n, k)), lah(n, n - k), "updown n={n} k={k}");
            }
        }
        assert_eq!(enumerate_updown(4, 1).len(), 12);
    }

    #[test]
    fn updown_equals_gröbner_normal_monomials() {
        use crate::word::all_ordered_generators;
        for n in 3..=4 {
            let gens = all_ordered_generators(n);
            for k in 0..=3 {
                let mut normal = Vec::new();
                subsets(&gens, k, 0, &mut Vec::new(), &mut |s| {
                    let m = canonical(s.to_vec());
                    if is_lex_normal(&m) {
                        normal.push(m);
                    }
                });
                normal.sort();
                assert_eq!(normal, enumerate_updown(n, k), "n={n} k={k}");
            }
        }
    }

    fn subsets(items: &[Generator], k: usize, start: usize, cur: &mut Vec<Generator>, f: &mut impl FnMut(&[Generator])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            subsets(items, k, i + 1, cur, f);
            cur.pop();
        }
    }

    #[test]
    fn certificates_on_three_strands() {
        assert!(chain_gang_certificate(3, 3, crate::DEFAULT_BUDGET).unwrap().pass());
        assert!(updown_report(4, 3, 3).pass());
    }

    #[test]
    fn lah_stirling_small() {
        assert!(lah_stirling_check(6).pass());
    }
}
