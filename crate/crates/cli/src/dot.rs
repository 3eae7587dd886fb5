//! Graphviz output: the incidence multigraph of a pair of legs and instance cubes.

use std::collections::BTreeSet;
use std::fmt::Write;

use vankampen::{FinMap, FinSet, InstanceCube};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn set_label(name: &str, set: &FinSet) -> String {
    format!("{name} = {{{}}}", set.elements().join(", "))
}

/// Blocks of `a` and `r` as nodes, one edge per element of `L`; edges on
/// `cycle` are drawn bold red.
pub fn incidence(a: &FinMap, r: &FinMap, cycle: Option<&[usize]>) -> String {
    let on_cycle: BTreeSet<usize> = cycle.into_iter().flatten().copied().collect();
    let mut out = String::from("graph incidence {\n  node [shape=box];\n");
    for x in a.cod().iter() {
        let _ = writeln!(out, "  {} [label={}];", quote(&format!("a:{x}")), quote(x));
    }
    out.push_str("  node [shape=ellipse];\n");
    for x in r.cod().iter() {
        let _ = writeln!(out, "  {} [label={}];", quote(&format!("r:{x}")), quote(x));
    }
    for l in 0..a.dom().len() {
        let style = if on_cycle.contains(&l) {
            ", color=red, penwidth=2"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  {} -- {} [label={}{style}];",
            quote(&format!("a:{}", a.cod().name(a.at(l)))),
            quote(&format!("r:{}", r.cod().name(r.at(l)))),
            quote(a.dom().name(l)),
        );
    }
    out.push_str("}\n");
    out
}

/// The cube as the instance square over the base square, joined by dashed edges.
pub fn cube(c: &InstanceCube, title: &str) -> String {
    let (span, bottom) = (&c.span, &c.bottom);
    let objects = [
        ("I", span.carrier().dom()),
        ("J", span.tau().dom()),
        ("H", span.beta().dom()),
        ("K", c.sigma.dom()),
        ("L", bottom.left().dom()),
        ("A", bottom.left().cod()),
        ("R", bottom.top().cod()),
        ("S", bottom.right().cod()),
    ];
    let mut out = format!("digraph {} {{\n  node [shape=box];\n", quote(title));
    for (cluster, label, names) in [
        ("instance", "instance", &objects[..4]),
        ("base", "base", &objects[4..]),
    ] {
        let _ = writeln!(
            out,
            "  subgraph cluster_{cluster} {{\n    label={};",
            quote(label)
        );
        for (name, set) in names {
            let _ = writeln!(out, "    {name} [label={}];", quote(&set_label(name, set)));
        }
        out.push_str("  }\n");
    }
    let solid = [
        ("I", "J", "a'"),
        ("I", "H", "r'"),
        ("J", "K", "r̄'"),
        ("H", "K", "ā'"),
        ("L", "A", "a"),
        ("L", "R", "r"),
        ("A", "S", "r̄"),
        ("R", "S", "ā"),
    ];
    for (from, to, label) in solid {
        let _ = writeln!(out, "  {from} -> {to} [label={}];", quote(label));
    }
    for (from, to, label) in [
        ("I", "L", "γ"),
        ("J", "A", "τ"),
        ("H", "R", "β"),
        ("K", "S", "σ"),
    ] {
        let _ = writeln!(
            out,
            "  {from} -> {to} [label={}, style=dashed];",
            quote(label)
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use vankampen::samples::intertwined_legs;

    #[test]
    fn cycle_edges_are_highlighted() {
        let (a, r) = intertwined_legs();
        let dot = incidence(&a, &r, Some(&[0, 1]));
        assert_eq!(dot.matches("color=red").count(), 2);
        assert_eq!(dot.matches(" -- ").count(), 4);
    }
}
