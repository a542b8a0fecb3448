//! Pruning: rewriting wedge monomials of the dual algebra into the chain-gang
//! basis.
//!
//! The dual algebra is the exterior algebra on the `r_ij` modulo
//!
//! ```text
//! r_ij ∧ r_ik = r_ij ∧ r_jk − r_ik ∧ r_kj      (V-join at i)
//! r_ik ∧ r_jk = r_ij ∧ r_jk − r_ji ∧ r_ik      (A-join at k)
//! r_ij ∧ r_ji = 0
//! ```
//!
//! On a loop-free graph every rewrite of a join strictly lowers the defect
//! and keeps the graph loop-free, so rewriting ends at chain gangs. A graph
//! with an undirected cycle is first rewritten along its shortest cycle: each
//! step shortens that cycle by one, and a cycle of length two is a wedge of
//! `r_ab` and `r_ba`, which vanishes.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::permutations;
use crate::report::{Check, Value, VerificationReport};
use crate::wedge::{Forest, Join, JoinKind, Monomial, WedgeElement, WedgeMonomial};
use crate::word::Generator;
use crate::Rational;

/// A quadratic rewrite `p ∧ q = Σ c · a ∧ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rewrite {
    pub lhs: (Generator, Generator),
    pub rhs: Vec<(i64, Generator, Generator)>,
}

impl Rewrite {
    /// Applies the rewrite inside a canonical monomial that contains both
    /// left-hand factors.
    pub fn apply(&self, m: &Monomial) -> WedgeElement {
        let (p, q) = self.lhs;
        debug_assert!(m.contains(p) && m.contains(q));
        let rest: Vec<Generator> = m.factors().iter().copied().filter(|g| *g != p && *g != q).collect();
        // m = s · (p ∧ q ∧ rest)
        let s = WedgeMonomial::new([p, q].into_iter().chain(rest.iter().copied()))
            .expect("canonical monomial has distinct factors")
            .sign as i64;
        let mut out = WedgeElement::zero();
        for &(c, a, b) in &self.rhs {
            if let Some(w) = WedgeMonomial::new([a, b].into_iter().chain(rest.iter().copied())) {
                out.add_term(w.monomial, Rational::from_integer(BigInt::from(c * s * w.sign as i64)));
            }
        }
        out
    }
}

fn g(i: u8, j: u8) -> Generator {
    Generator::new(i, j)
}

/// The pruning relation that removes `join`.
pub fn join_rewrite(join: &Join) -> Rewrite {
    let (i, j, k) = join.triple;
    match join.kind {
        JoinKind::V => Rewrite { lhs: (g(i, j), g(i, k)), rhs: vec![(1, g(i, j), g(j, k)), (-1, g(i, k), g(k, j))] },
        JoinKind::A => Rewrite { lhs: (g(i, k), g(j, k)), rhs: vec![(1, g(i, j), g(j, k)), (-1, g(j, i), g(i, k))] },
    }
}

/// The rewrite that shortens the shortest undirected cycle of `m`, or
/// `None` if `m` is loop-free. A cycle of length two yields an empty
/// right-hand side.
pub fn loop_rewrite(m: &Monomial) -> Option<Rewrite> {
    let forest = m.forest();
    let (verts, edges) = forest.shortest_cycle()?;
    if verts.len() == 2 {
        let (a, b) = (verts[0], verts[1]);
        return Some(Rewrite { lhs: (g(a, b), g(b, a)), rhs: Vec::new() });
    }
    let (a, b, c) = (verts[0], verts[1], verts[2]);
    let find = |x: u8, y: u8| *edges.iter().find(|e| (e.i == x && e.j == y) || (e.i == y && e.j == x)).expect("cycle edge");
    let (e1, e2) = (find(a, b), find(b, c));
    let rw = match (e1.i == b, e2.i == b) {
        // b → a, b → c
        (true, true) => join_rewrite(&Join { kind: JoinKind::V, triple: (b, a.min(c), a.max(c)) }),
        // a → b, c → b
        (false, false) => join_rewrite(&Join { kind: JoinKind::A, triple: (a.min(c), a.max(c), b) }),
        // a → b → c: r_ab ∧ r_bc = r_ab ∧ r_ac + r_ac ∧ r_cb
        (false, true) => Rewrite { lhs: (g(a, b), g(b, c)), rhs: vec![(1, g(a, b), g(a, c)), (1, g(a, c), g(c, b))] },
        // c → b → a
        (true, false) => Rewrite { lhs: (g(c, b), g(b, a)), rhs: vec![(1, g(c, b), g(c, a)), (1, g(c, a), g(a, b))] },
    };
    Some(rw)
}

/// Chooses which join of a loop-free, non-chain-gang graph to prune next.
pub trait Strategy {
    /// `joins` is nonempty and sorted by [`Join::key`].
    fn choose(&mut self, joins: &[Join]) -> usize;
}

/// The default strategy: the join with the smallest vertex triple.
#[derive(Clone, Copy, Debug, Default)]
pub struct SmallestJoin;

impl Strategy for SmallestJoin {
    fn choose(&mut self, _joins: &[Join]) -> usize {
        0
    }
}

/// Picks a uniformly random join.
#[derive(Clone, Debug)]
pub struct RandomJoin<R: Rng>(pub R);

impl<R: Rng> Strategy for RandomJoin<R> {
    fn choose(&mut self, joins: &[Join]) -> usize {
        self.0.gen_range(0..joins.len())
    }
}

/// One rewriting step on `m`; `None` when `m` is already a chain gang.
pub fn prune_step(m: &Monomial, strategy: &mut impl Strategy) -> Option<WedgeElement> {
    if let Some(rw) = loop_rewrite(m) {
        return Some(rw.apply(m));
    }
    let joins = m.forest().joins();
    if joins.is_empty() {
        return None;
    }
    let pick = strategy.choose(&joins);
    Some(join_rewrite(&joins[pick]).apply(m))
}

/// Reduces a combination of monomials to the chain-gang basis using the
/// given strategy.
pub fn prune_with(e: &WedgeElement, strategy: &mut impl Strategy) -> WedgeElement {
    let mut pending = e.clone();
    let mut done = WedgeElement::zero();
    // Largest monomials first, so that terms produced several times are
    // merged before they are rewritten.
    while let Some((m, c)) = pending.pop_last() {
        match prune_step(&m, strategy) {
            None => done.add_term(m, c),
            Some(next) => pending.add_scaled(&next, &c),
        }
    }
    done
}

/// The unique expression of `m` in the chain-gang basis.
pub fn prune_normal_form(m: &WedgeMonomial) -> WedgeElement {
    prune_with(&m.to_element(), &mut SmallestJoin)
}

pub fn prune_element(e: &WedgeElement) -> WedgeElement {
    prune_with(e, &mut SmallestJoin)
}

/// Reduces `m` by first removing `first`, then continuing with the default
/// strategy.
pub fn prune_forcing(m: &Monomial, first: &Join) -> WedgeElement {
    prune_element(&join_rewrite(first).apply(m))
}

/// Normal form of the wedge product `f1 ∧ f2 ∧ …` taken in the given order.
pub fn reduce_product(factors: &[Generator]) -> WedgeElement {
    match WedgeMonomial::new(factors.iter().copied()) {
        Some(w) => prune_normal_form(&w),
        None => WedgeElement::zero(),
    }
}

fn chain(items: &[(i64, &[Generator])]) -> WedgeElement {
    WedgeElement::from_products(items.iter().map(|(c, f)| (*c, *f)))
}

/// The three overlap shapes and their common normal form at `(i, j, k, l)`.
///
/// Each entry is `(name, monomial as an ordered product, normal form)`.
pub fn overlap_cases(i: u8, j: u8, k: u8, l: u8) -> Vec<(&'static str, Vec<Generator>, WedgeElement)> {
    let r = g;
    let x = chain(&[
        (-1, &[r(i, j), r(j, l), r(l, k)]),
        (1, &[r(i, j), r(j, k), r(k, l)]),
        (1, &[r(i, l), r(l, j), r(j, k)]),
        (1, &[r(i, k), r(k, l), r(l, j)]),
        (-1, &[r(i, k), r(k, j), r(j, l)]),
        (-1, &[r(i, l), r(l, k), r(k, j)]),
    ]);
    let y = chain(&[
        (1, &[r(i, j), r(j, k), r(k, l)]),
        (-1, &[r(i, k), r(k, j), r(j, l)]),
        (1, &[r(k, i), r(i, j), r(j, l)]),
        (-1, &[r(j, i), r(i, k), r(k, l)]),
        (1, &[r(j, k), r(k, i), r(i, l)]),
        (-1, &[r(k, j), r(j, i), r(i, l)]),
    ]);
    let z = chain(&[
        (1, &[r(i, k), r(k, j), r(j, l)]),
        (-1, &[r(i, k), r(k, l), r(l, j)]),
        (-1, &[r(k, i), r(i, j), r(j, l)]),
        (1, &[r(k, i), r(i, l), r(l, j)]),
        (-1, &[r(k, l), r(l, i), r(i, j)]),
    ]);
    vec![
        ("X", vec![r(i, j), r(i, k), r(i, l)], x),
        ("Y", vec![r(i, l), r(j, l), r(k, l)], y),
        ("Z", vec![r(i, j), r(k, j), r(k, l)], z),
    ]
}

/// A random loop-free monomial on `[n]` with between 2 and `max_edges`
/// edges (fewer if `n` is small).
pub fn random_loop_free(n: usize, max_edges: usize, rng: &mut impl Rng) -> Monomial {
    let limit = max_edges.min(n.saturating_sub(1));
    if limit == 0 {
        return Monomial::unit();
    }
    let target = rng.gen_range(limit.min(2)..=limit);
    let mut comp: Vec<u8> = (0..=n as u8).collect();
    fn root(c: &[u8], mut x: u8) -> u8 {
        while c[x as usize] != x {
            x = c[x as usize];
        }
        x
    }
    let mut edges = Vec::new();
    while edges.len() < target {
        let i = rng.gen_range(1..=n as u8);
        let j = rng.gen_range(1..=n as u8);
        if i == j {
            continue;
        }
        let (a, b) = (root(&comp, i), root(&comp, j));
        if a == b {
            continue;
        }
        comp[a as usize] = b;
        edges.push(g(i, j));
    }
    WedgeMonomial::new(edges).expect("distinct edges").monomial
}

/// Strategy independence of pruning: the three overlap shapes resolved
/// from every possible first step, plus `trials` random loop-free monomials
/// on `[n]` reduced under two independently seeded random strategies.
pub fn confluence_check(n: usize, trials: usize, seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new("confluence").param("n", n).param("trials", trials).param("seed", seed as i64);
    for (name, factors, expected) in overlap_cases(1, 2, 3, 4) {
        let w = WedgeMonomial::new(factors.iter().copied()).expect("distinct factors");
        let expected = {
            let mut e = WedgeElement::zero();
            e.add_scaled(&expected, &Rational::from_integer(BigInt::from(w.sign)));
            e
        };
        let joins = w.monomial.forest().joins();
        let mut agreeing = 0usize;
        let mut mismatches = Vec::new();
        for join in &joins {
            let nf = prune_forcing(&w.monomial, join);
            if nf == expected {
                agreeing += 1;
            } else {
                mismatches.push(Value::Map(vec![
                    ("first_step".into(), Value::Text(alloc::format!("{join:?}"))),
                    ("normal_form".into(), Value::Text(nf.to_string())),
                ]));
            }
        }
        let mut check = Check::new(alloc::format!("case_{name}"), joins.len(), agreeing)
            .detail("monomial", Value::Text(alloc::format!("{:?}", w.monomial)))
            .detail("normal_form", Value::Text(expected.to_string()));
        if !mismatches.is_empty() {
            check = check.with_payload(Value::List(mismatches));
        }
        report.push(check);
    }

    let mut source = ChaCha8Rng::seed_from_u64(seed);
    let mut first = RandomJoin(ChaCha8Rng::seed_from_u64(seed.wrapping_add(1)));
    let mut second = RandomJoin(ChaCha8Rng::seed_from_u64(seed.wrapping_add(2)));
    let mut mismatches = Vec::new();
    for _ in 0..trials {
        let m = random_loop_free(n, 4, &mut source);
        let e = WedgeMonomial::basis(m.clone()).to_element();
        let a = prune_with(&e, &mut first);
        let b = prune_with(&e, &mut second);
        let d = prune_with(&e, &mut SmallestJoin);
        if a != b || a != d {
            mismatches.push(Value::Map(vec![
                ("monomial".into(), Value::Text(alloc::format!("{m:?}"))),
                ("first".into(), Value::Text(a.to_string())),
                ("second".into(), Value::Text(b.to_string())),
            ]));
        }
    }
    let mut check = Check::new("random_mismatches", 0usize, mismatches.len());
    if !mismatches.is_empty() {
        check = check.with_payload(Value::List(mismatches));
    }
    report.push(check);
    report
}

/// Defect of a loop-free monomial.
pub fn defect(m: &Monomial) -> usize {
    m.forest().defect()
}

/// Random multiples of pruning relations: in each, the term containing the
/// join must have strictly larger defect than every other term.
pub fn multiplicativity_check(trials: usize, max_n: usize, seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new("defect").param("trials", trials).param("max_n", max_n).param("seed", seed as i64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    let max_n = max_n.max(3);
    for _ in 0..trials {
        let n = rng.gen_range(3..=max_n) as u8;
        let mut pick = || rng.gen_range(1..=n);
        let i = pick();
        let j = loop {
            let x = pick();
            if x != i {
                break x;
            }
        };
        let k = loop {
            let x = pick();
            if x != i && x != j {
                break x;
            }
        };
        let kind = if rng.gen_bool(0.5) { JoinKind::V } else { JoinKind::A };
        let join = Join { kind, triple: (i, j, k) };
        let rw = join_rewrite(&join);
        // extra edges that keep the join term a forest
        let mut comp: Vec<u8> = (0..=n).collect();
        fn root(c: &[u8], mut x: u8) -> u8 {
            while c[x as usize] != x {
                x = c[x as usize];
            }
            x
        }
        for e in [rw.lhs.0, rw.lhs.1] {
            let (a, b) = (root(&comp, e.i), root(&comp, e.j));
            comp[a as usize] = b;
        }
        let extra_target = rng.gen_range(0..=(n as usize - 2).min(4));
        let mut extra = Vec::new();
        let mut attempts = 0;
        while extra.len() < extra_target && attempts < 100 {
            attempts += 1;
            let (a, b) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
            if a == b {
                continue;
            }
            let (ra, rb) = (root(&comp, a), root(&comp, b));
            if ra == rb {
                continue;
            }
            comp[ra as usize] = rb;
            extra.push(g(a, b));
        }
        let graph = |p: Generator, q: Generator| {
            let mut edges = vec![p, q];
            edges.extend_from_slice(&extra);
            Forest::new(edges)
        };
        let join_defect = graph(rw.lhs.0, rw.lhs.1).defect();
        for &(_, a, b) in &rw.rhs {
            let d = graph(a, b).defect();
            if d >= join_defect {
                violations.push(Value::Map(vec![
                    ("join".into(), Value::Text(alloc::format!("{join:?}"))),
                    ("extra".into(), Value::Text(alloc::format!("{extra:?}"))),
                    ("join_defect".into(), Value::from(join_defect)),
                    ("term_defect".into(), Value::from(d)),
                ]));
            }
        }
    }
    let mut check = Check::new("violations", 0usize, violations.len());
    if !violations.is_empty() {
        check = check.with_payload(Value::List(violations));
    }
    report.push(check);
    report
}

/// One row of the product table `A^!_2 ⊗ V* → A^!_3` on chain-gang bases.
#[derive(Clone, Debug)]
pub struct ProductRow {
    pub name: String,
    pub left: [Generator; 2],
    pub right: Generator,
    pub result: Vec<(i64, [Generator; 3])>,
}

impl ProductRow {
    fn new(name: &str, left: [Generator; 2], right: Generator, result: Vec<(i64, [Generator; 3])>) -> Self {
        ProductRow { name: name.to_string(), left, right, result }
    }

    /// Listed right-hand side as a wedge element.
    pub fn expected(&self) -> WedgeElement {
        WedgeElement::from_products(self.result.iter().map(|(c, f)| (*c, &f[..])))
    }

    /// `left ∧ right`, reduced to the chain-gang basis.
    pub fn computed(&self) -> WedgeElement {
        reduce_product(&[self.left[0], self.left[1], self.right])
    }
}

/// The fourteen product formulas at `(i, j, k, l)`.
pub fn product_table(i: u8, j: u8, k: u8, l: u8) -> Vec<ProductRow> {
    let r = g;
    let ch = [r(i, j), r(j, k)];
    let pr = [r(i, j), r(k, l)];
    vec![
        ProductRow::new(
            "ij.jk*il",
            ch,
            r(i, l),
            vec![(1, [r(i, l), r(l, j), r(j, k)]), (-1, [r(i, j), r(j, l), r(l, k)]), (1, [r(i, j), r(j, k), r(k, l)])],
        ),
        ProductRow::new("ij.jk*jl", ch, r(j, l), vec![(-1, [r(i, j), r(j, l), r(l, k)]), (1, [r(i, j), r(j, k), r(k, l)])]),
        ProductRow::new("ij.jk*kl", ch, r(k, l), vec![(1, [r(i, j), r(j, k), r(k, l)])]),
        ProductRow::new("ij.jk*li", ch, r(l, i), vec![(1, [r(l, i), r(i, j), r(j, k)])]),
        ProductRow::new("ij.jk*lj", ch, r(l, j), vec![(-1, [r(i, l), r(l, j), r(j, k)]), (1, [r(l, i), r(i, j), r(j, k)])]),
        ProductRow::new(
            "ij.jk*lk",
            ch,
            r(l, k),
            vec![(1, [r(i, j), r(j, l), r(l, k)]), (-1, [r(i, l), r(l, j), r(j, k)]), (1, [r(l, i), r(i, j), r(j, k)])],
        ),
        ProductRow::new(
            "ij.kl*ik",
            pr,
            r(i, k),
            vec![(-1, [r(i, j), r(j, k), r(k, l)]), (1, [r(i, k), r(k, j), r(j, l)]), (-1, [r(i, k), r(k, l), r(l, j)])],
        ),
        ProductRow::new(
            "ij.kl*ki",
            pr,
            r(k, i),
            vec![(1, [r(k, l), r(l, i), r(i, j)]), (-1, [r(k, i), r(i, l), r(l, j)]), (1, [r(k, i), r(i, j), r(j, l)])],
        ),
        ProductRow::new(
            "ij.kl*il",
            pr,
            r(i, l),
            vec![
                (-1, [r(i, j), r(j, k), r(k, l)]),
                (1, [r(i, k), r(k, j), r(j, l)]),
                (-1, [r(i, k), r(k, l), r(l, j)]),
                (-1, [r(k, i), r(i, j), r(j, l)]),
                (1, [r(k, i), r(i, l), r(l, j)]),
            ],
        ),
        ProductRow::new("ij.kl*li", pr, r(l, i), vec![(1, [r(k, l), r(l, i), r(i, j)])]),
        ProductRow::new("ij.kl*jk", pr, r(j, k), vec![(-1, [r(i, j), r(j, k), r(k, l)])]),
        ProductRow::new(
            "ij.kl*kj",
            pr,
            r(k, j),
            vec![
                (1, [r(k, l), r(l, i), r(i, j)]),
                (-1, [r(k, i), r(i, l), r(l, j)]),
                (1, [r(k, i), r(i, j), r(j, l)]),
                (1, [r(i, k), r(k, l), r(l, j)]),
                (-1, [r(i, k), r(k, j), r(j, l)]),
            ],
        ),
        ProductRow::new(
            "ij.kl*jl",
            pr,
            r(j, l),
            vec![(-1, [r(i, j), r(j, k), r(k, l)]), (1, [r(i, k), r(k, j), r(j, l)]), (-1, [r(k, i), r(i, j), r(j, l)])],
        ),
        ProductRow::new(
            "ij.kl*lj",
            pr,
            r(l, j),
            vec![(1, [r(k, l), r(l, i), r(i, j)]), (-1, [r(k, i), r(i, l), r(l, j)]), (1, [r(i, k), r(k, l), r(l, j)])],
        ),
    ]
}

/// Checks every product formula under every labelling of `(i, j, k, l)` by
/// distinct strands of `[n]`.
pub fn coproduct_table_check(n: usize) -> VerificationReport {
    let mut report = VerificationReport::new("coproduct").param("n", n);
    let strands: Vec<u8> = (1..=n as u8).collect();
    let mut labellings: Vec<[u8; 4]> = Vec::new();
    if n >= 4 {
        for p in permutations(&strands) {
            let t = [p[0], p[1], p[2], p[3]];
            if !labellings.contains(&t) {
                labellings.push(t);
            }
        }
    }
    let rows_at = |t: &[u8; 4]| product_table(t[0], t[1], t[2], t[3]);
    let names: Vec<String> = product_table(1, 2, 3, 4).into_iter().map(|r| r.name).collect();
    for (idx, name) in names.iter().enumerate() {
        let mut ok = 0usize;
        let mut payload = None;
        for t in &labellings {
            let row = &rows_at(t)[idx];
            let (computed, expected) = (row.computed(), row.expected());
            if computed == expected {
                ok += 1;
            } else if payload.is_none() {
                payload = Some(Value::Map(vec![
                    ("labelling".into(), Value::from(t.iter().map(|x| *x as usize).collect::<Vec<usize>>())),
                    ("expected".into(), Value::Text(expected.to_string())),
                    ("computed".into(), Value::Text(computed.to_string())),
                ]));
            }
        }
        let mut check = Check::new(name.clone(), labellings.len(), ok);
        if let Some(p) = payload {
            check = check.with_payload(p);
        }
        report.push(check);
    }
    report
}
