//! The quadratic Gröbner basis of the dual algebra.
//!
//! For `i < j < k` the defining relations can be solved for six distinct
//! leading monomials:
//!
//! ```text
//! r_ik ∧ r_jk = r_ij ∧ r_jk − r_ji ∧ r_ik
//! r_kj ∧ r_ji = r_ji ∧ r_ik − r_ji ∧ r_jk − r_ji ∧ r_ki
//! r_ki ∧ r_kj = r_ki ∧ r_ij − r_ji ∧ r_ik + r_ji ∧ r_jk + r_ji ∧ r_ki
//! r_ik ∧ r_kj = r_ij ∧ r_jk − r_ij ∧ r_ik
//! r_jk ∧ r_ki = r_ji ∧ r_ik − r_ji ∧ r_jk
//! r_ij ∧ r_kj = r_ij ∧ r_jk − r_ij ∧ r_ik − r_ki ∧ r_ij
//! ```
//!
//! together with `r_ij ∧ r_ji = 0`. Every right-hand side is smaller than its
//! left-hand side in the degree-then-lexicographic monomial order, and that
//! order is compatible with multiplication by disjoint factors, so rewriting
//! terminates. Monomials avoiding all leading terms are the Up-Down
//! monomials.

use alloc::vec;
use alloc::vec::Vec;

use crate::prune::Rewrite;
use crate::wedge::{Monomial, WedgeElement, WedgeMonomial};
use crate::word::Generator;

fn g(i: u8, j: u8) -> Generator {
    Generator::new(i, j)
}

/// The six rules on the strands `i < j < k`.
pub fn rules_on(i: u8, j: u8, k: u8) -> [Rewrite; 6] {
    debug_assert!(i < j && j < k);
    [
        Rewrite { lhs: (g(i, k), g(j, k)), rhs: vec![(1, g(i, j), g(j, k)), (-1, g(j, i), g(i, k))] },
        Rewrite {
            lhs: (g(k, j), g(j, i)),
            rhs: vec![(1, g(j, i), g(i, k)), (-1, g(j, i), g(j, k)), (-1, g(j, i), g(k, i))],
        },
        Rewrite {
            lhs: (g(k, i), g(k, j)),
            rhs: vec![(1, g(k, i), g(i, j)), (-1, g(j, i), g(i, k)), (1, g(j, i), g(j, k)), (1, g(j, i), g(k, i))],
        },
        Rewrite { lhs: (g(i, k), g(k, j)), rhs: vec![(1, g(i, j), g(j, k)), (-1, g(i, j), g(i, k))] },
        Rewrite { lhs: (g(j, k), g(k, i)), rhs: vec![(1, g(j, i), g(i, k)), (-1, g(j, i), g(j, k))] },
        Rewrite {
            lhs: (g(i, j), g(k, j)),
            rhs: vec![(1, g(i, j), g(j, k)), (-1, g(i, j), g(i, k)), (-1, g(k, i), g(i, j))],
        },
    ]
}

/// The rule whose leading monomial is `{a, b}`, if any.
pub fn rule_for(a: Generator, b: Generator) -> Option<Rewrite> {
    if a == b.reversed() {
        return Some(Rewrite { lhs: (a, b), rhs: Vec::new() });
    }
    let mut v = [a.i, a.j, b.i, b.j];
    v.sort_unstable();
    let distinct: Vec<u8> = {
        let mut d = v.to_vec();
        d.dedup();
        d
    };
    if distinct.len() != 3 {
        return None;
    }
    rules_on(distinct[0], distinct[1], distinct[2])
        .into_iter()
        .find(|r| (r.lhs.0 == a && r.lhs.1 == b) || (r.lhs.0 == b && r.lhs.1 == a))
}

/// `true` if `m` contains no leading monomial of the Gröbner basis.
pub fn is_lex_normal(m: &Monomial) -> bool {
    first_rule(m).is_none()
}

fn first_rule(m: &Monomial) -> Option<Rewrite> {
    let f = m.factors();
    for (x, &a) in f.iter().enumerate() {
        for &b in &f[x + 1..] {
            if let Some(r) = rule_for(a, b) {
                return Some(r);
            }
        }
    }
    None
}

/// Rewrites a combination into the Up-Down basis.
///
/// Each step replaces a leading monomial by smaller terms; this is asserted
/// for every step.
pub fn lex_normal_element(e: &WedgeElement) -> WedgeElement {
    let mut pending = e.clone();
    let mut done = WedgeElement::zero();
    while let Some((m, c)) = pending.pop_last() {
        match first_rule(&m) {
            None => done.add_term(m, c),
            Some(rule) => {
                let next = rule.apply(&m);
                assert!(next.terms().all(|(t, _)| *t < m), "Gröbner step must decrease the monomial");
                pending.add_scaled(&next, &c);
            }
        }
    }
    done
}

pub fn lex_normal_form(m: &WedgeMonomial) -> WedgeElement {
    lex_normal_element(&m.to_element())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prune::{prune_element, reduce_product};
    use crate::wedge::parse_edges;
    use crate::word::all_ordered_generators;

    fn lnf(s: &str) -> WedgeElement {
        match WedgeMonomial::new(parse_edges(s).unwrap()) {
            Some(w) => lex_normal_form(&w),
            None => WedgeElement::zero(),
        }
    }

    #[test]
    fn first_rule_example() {
        let expected = WedgeElement::from_products([
            (1, &[g(1, 2), g(2, 3)][..]),
            (-1, &[g(2, 1), g(1, 3)][..]),
        ]);
        assert_eq!(lnf("1>3,2>3"), expected);
    }

    #[test]
    fn square_vanishes() {
        assert!(WedgeMonomial::new([g(1, 2), g(1, 2)]).is_none());
        assert!(lnf("1>2,2>1").is_zero());
    }

    #[test]
    fn rules_hold_in_the_dual_algebra() {
        for r in rules_on(1, 2, 3).iter().chain(rules_on(2, 4, 5).iter()) {
            let lhs = reduce_product(&[r.lhs.0, r.lhs.1]);
            let pairs: Vec<(i64, [Generator; 2])> = r.rhs.iter().map(|(c, a, b)| (*c, [*a, *b])).collect();
            let rhs = WedgeElement::from_products(pairs.iter().map(|(c, v)| (*c, &v[..])));
            assert_eq!(lhs, prune_element(&rhs), "{r:?}");
        }
    }

    #[test]
    fn six_normal_pairs_on_three_strands() {
        // on 3 strands the degree-2 part has dimension 6, so exactly 6 of
        // the 15 pairs of distinct generators are normal
        let gens = all_ordered_generators(3);
        let mut normal = 0;
        for (x, &a) in gens.iter().enumerate() {
            for &b in &gens[x + 1..] {
                if rule_for(a, b).is_none() {
                    normal += 1;
                }
            }
        }
        assert_eq!(normal, 6);
    }
}
