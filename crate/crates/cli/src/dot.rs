//! Graphviz rendering of AR quivers.

use std::fmt::Write;

use tauslice::artheory::ArQuiver;

/// Nodes labelled by dimension vectors in discovery order; solid edges are
/// irreducible maps (labelled when the multiplicity exceeds one) and dashed
/// edges point from `X` to `τX`.
pub fn emit_dot(q: &ArQuiver) -> String {
    let mut s = String::from("digraph ar_quiver {\n  rankdir=LR;\n  node [shape=plaintext];\n");
    for (i, n) in q.nodes.iter().enumerate() {
        let dims: Vec<String> = n.module.dims().iter().map(ToString::to_string).collect();
        let sep = if n.module.dims().iter().all(|&d| d < 10) { "" } else { "," };
        let _ = writeln!(s, "  n{i} [label=\"{}\"];", dims.join(sep));
    }
    for &(a, b, m) in &q.arrows {
        if m > 1 {
            let _ = writeln!(s, "  n{a} -> n{b} [label=\"{m}\"];");
        } else {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
    }
    for (i, t) in q.tau.iter().enumerate() {
        if let Some(t) = t {
            let _ = writeln!(s, "  n{i} -> n{t} [style=dashed, constraint=false];");
        }
    }
    s.push_str("}\n");
    s
}
