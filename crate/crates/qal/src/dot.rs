//! Graphviz export of forests.

use std::fmt::Write;

use qal_core::Monomial;

/// One `digraph` with a cluster per forest; every strand `1..=n` appears in
/// each cluster so isolated vertices are visible.
pub fn forests_to_dot(name: &str, n: usize, forests: &[(String, Monomial)]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{name}\" {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (idx, (label, m)) in forests.iter().enumerate() {
        writeln!(out, "  subgraph cluster_{idx} {{").unwrap();
        writeln!(out, "    label=\"{label}\";").unwrap();
        for v in 1..=n {
            writeln!(out, "    f{idx}_{v} [label=\"{v}\"];").unwrap();
        }
        for g in m.factors() {
            writeln!(out, "    f{idx}_{} -> f{idx}_{};", g.i, g.j).unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use qal_core::{Generator, WedgeMonomial};

    #[test]
    fn single_edge() {
        let m = WedgeMonomial::new([Generator::new(1, 2)]).unwrap().monomial;
        let dot = forests_to_dot("demo", 2, &[("1>2".into(), m)]);
        assert!(dot.starts_with("digraph \"demo\" {"));
        assert!(dot.contains("f0_1 -> f0_2;"));
        assert!(dot.contains("f0_2 [label=\"2\"];"));
        assert!(dot.trim_end().ends_with('}'));
    }
}
