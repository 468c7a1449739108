//! Hasse diagrams in Graphviz DOT.

use crate::lattice::Lattice;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per element, one edge per cover (lower -> upper), drawn bottom
/// to top.
pub fn to_dot(l: &Lattice) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(l.name()));
    for x in l.elements() {
        out.push_str(&format!("  {};\n", quote(l.name_of(x))));
    }
    for (x, y) in l.covers() {
        out.push_str(&format!(
            "  {} -> {};\n",
            quote(l.name_of(x)),
            quote(l.name_of(y))
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn edges_are_exactly_the_covers() {
        let l = fixtures::fig1();
        let dot = to_dot(&l);
        assert!(dot.starts_with("digraph \"fig1\" {\n  rankdir=BT;\n"));
        let edges: Vec<&str> = dot.lines().filter(|s| s.contains("->")).collect();
        assert_eq!(edges.len(), 15);
        assert!(edges.contains(&"  \"c\" -> \"h\";"));
    }
}
