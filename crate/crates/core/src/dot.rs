//! Graphviz output. Nodes follow the canonical simplex order, so output is
//! byte-stable for identical inputs.

use std::fmt::Write;

use crate::complex::FacePoset;
use crate::cosheaf::{SetCosheaf, SetCosheafMorphism};
use crate::duality::{ComplexCosheaf, ComplexCosheafMorphism};
use crate::labels::LabelSet;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn simplex_name(p: &FacePoset, i: usize) -> String {
    format!("[{}]", p.element(i).key(p.universe()))
}

fn set_label(set: impl IntoIterator<Item = usize>, labels: &LabelSet) -> String {
    let items: Vec<&str> = set.into_iter().map(|i| labels.label(i)).collect();
    format!("{{{}}}", items.join(","))
}

fn complex_label(k: &crate::complex::SimplicialComplex) -> String {
    if k.is_empty() {
        return "∅".to_owned();
    }
    let parts: Vec<String> = k
        .maximal()
        .iter()
        .map(|s| format!("[{}]", s.key(k.universe())))
        .collect();
    parts.join(" ")
}

/// Nodes are `prefix0, prefix1, ...`; `labels[i]` is the text of node `i`.
/// Edges run from a simplex to each of its cofaces.
fn poset_body(
    out: &mut String,
    p: &FacePoset,
    prefix: &str,
    labels: &[String],
    reversed: bool,
    indent: &str,
) {
    for (i, label) in labels.iter().enumerate() {
        writeln!(out, "{indent}{prefix}{i} [label={}];", quote(label)).unwrap();
    }
    for &(lo, hi) in p.covers() {
        let (a, b) = if reversed { (hi, lo) } else { (lo, hi) };
        writeln!(out, "{indent}{prefix}{a} -> {prefix}{b};").unwrap();
    }
}

/// The Hasse diagram, one node per simplex and one edge per cover.
pub fn poset_dot(p: &FacePoset) -> String {
    let labels: Vec<String> = (0..p.len()).map(|i| simplex_name(p, i)).collect();
    let mut out = String::from("digraph hasse {\n");
    poset_body(&mut out, p, "n", &labels, false, "  ");
    out.push_str("}\n");
    out
}

fn set_cosheaf_labels(c: &SetCosheaf) -> Vec<String> {
    (0..c.base().len())
        .map(|i| {
            format!(
                "{}\n{}",
                simplex_name(c.base(), i),
                set_label(c.costalk(i).iter().copied(), c.fiber())
            )
        })
        .collect()
}

fn complex_cosheaf_labels(c: &ComplexCosheaf) -> Vec<String> {
    (0..c.base().len())
        .map(|i| {
            format!(
                "{}\n{}",
                simplex_name(c.base(), i),
                complex_label(c.costalk(i))
            )
        })
        .collect()
}

/// Extensions point from a simplex to its faces.
pub fn set_cosheaf_dot(c: &SetCosheaf) -> String {
    let mut out = String::from("digraph cosheaf {\n");
    poset_body(&mut out, c.base(), "n", &set_cosheaf_labels(c), true, "  ");
    out.push_str("}\n");
    out
}

pub fn complex_cosheaf_dot(c: &ComplexCosheaf) -> String {
    let mut out = String::from("digraph cosheaf {\n");
    poset_body(
        &mut out,
        c.base(),
        "n",
        &complex_cosheaf_labels(c),
        true,
        "  ",
    );
    out.push_str("}\n");
    out
}

fn morphism_dot(
    name: &str,
    (sp, sl): (&FacePoset, Vec<String>),
    (tp, tl): (&FacePoset, Vec<String>),
    base_map: &[usize],
) -> String {
    let mut out = format!("digraph {name} {{\n");
    out.push_str("  subgraph cluster_source {\n    label=\"source\";\n");
    poset_body(&mut out, sp, "s", &sl, true, "    ");
    out.push_str("  }\n  subgraph cluster_target {\n    label=\"target\";\n");
    poset_body(&mut out, tp, "t", &tl, true, "    ");
    out.push_str("  }\n");
    for (i, j) in base_map.iter().enumerate() {
        writeln!(out, "  s{i} -> t{j} [style=dashed];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Two clusters with solid extensions; dashed edges are the components.
pub fn set_morphism_dot(m: &SetCosheafMorphism) -> String {
    morphism_dot(
        "morphism",
        (m.source().base(), set_cosheaf_labels(m.source())),
        (m.target().base(), set_cosheaf_labels(m.target())),
        m.base_map(),
    )
}

pub fn complex_morphism_dot(m: &ComplexCosheafMorphism) -> String {
    morphism_dot(
        "morphism",
        (m.source().base(), complex_cosheaf_labels(m.source())),
        (m.target().base(), complex_cosheaf_labels(m.target())),
        m.base_map(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{dowker, face_poset};
    use crate::relation::{RelMorphism, Relation};

    fn r2() -> Relation {
        Relation::from_matrix(
            &["a", "b", "c", "d"],
            &["1", "2", "3", "4", "5", "6"],
            &[
                vec![1, 0, 1, 0, 0, 1],
                vec![1, 1, 0, 0, 0, 0],
                vec![0, 1, 1, 1, 0, 1],
                vec![0, 0, 1, 0, 1, 0],
            ],
        )
        .unwrap()
    }

    #[test]
    fn hasse_counts() {
        let dot = poset_dot(&face_poset(&dowker(&r2())));
        assert_eq!(dot.matches("[label=").count(), 10);
        assert_eq!(dot.matches(" -> ").count(), 13);
        assert_eq!(dot, poset_dot(&face_poset(&dowker(&r2()))));
    }

    #[test]
    fn empty_complex_is_empty_digraph() {
        assert_eq!(
            poset_dot(&face_poset(&dowker(&Relation::empty()))),
            "digraph hasse {\n}\n"
        );
    }

    #[test]
    fn morphism_styles() {
        let r = r2();
        let m = crate::cosheaf::induced_cosheaf_morphism0(&RelMorphism::identity(&r));
        let dot = set_morphism_dot(&m);
        assert_eq!(dot.matches("style=dashed").count(), 10);
        assert!(dot.contains("[c]\\n{2,3,4,6}"));
    }

    #[test]
    fn labels_are_escaped() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
