//! The worked examples used throughout the test suites, built
//! programmatically. Modules are given by an explicit basis (one vertex per
//! basis vector) and arrow edges between basis vectors, so no stacked
//! composition-series notation is parsed anywhere.

use std::sync::Arc;

use crate::algebra::PresentedAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};
use crate::modrep::Representation;

const Q: Field = Field::Rationals;

/// Module with basis vectors living at `basis[k]` and each edge
/// `(arrow, k, l)` sending basis vector `k` to basis vector `l`.
pub fn tree_module(
    a: &Arc<PresentedAlgebra>,
    basis: &[&str],
    edges: &[(&str, usize, usize)],
) -> Result<Representation> {
    let q = a.quiver();
    let verts: Vec<usize> = basis
        .iter()
        .map(|l| q.vertex_index(l).ok_or_else(|| Error::UnknownLabel(l.to_string())))
        .collect::<Result<_>>()?;
    let mut dims = vec![0; q.num_vertices()];
    let mut pos = vec![0; basis.len()];
    for (k, &v) in verts.iter().enumerate() {
        pos[k] = dims[v];
        dims[v] += 1;
    }
    let mut maps: Vec<Matrix> = q
        .arrows()
        .iter()
        .map(|ar| Matrix::zeros(a.field(), dims[ar.target], dims[ar.source]))
        .collect();
    for &(label, k, l) in edges {
        let ar = q.arrow_index(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        let arrow = q.arrow(ar);
        if arrow.source != verts[k] || arrow.target != verts[l] {
            return Err(Error::Precondition(format!("edge {label} does not match its arrow")));
        }
        maps[ar].set(pos[l], pos[k], a.field().one());
    }
    Representation::new(a.clone(), dims, maps)
}

fn rad_square_zero(arrows: &[(&str, &str, &str)]) -> Vec<String> {
    let mut out = vec![];
    for (x, _, t) in arrows {
        for (y, s, _) in arrows {
            if t == s {
                out.push(format!("{x}*{y}"));
            }
        }
    }
    out
}

fn build(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[String]) -> Arc<PresentedAlgebra> {
    let rels: Vec<&str> = relations.iter().map(String::as_str).collect();
    PresentedAlgebra::from_spec(Q, vertices, arrows, &rels).expect("fixture algebra is admissible")
}

/// 1 ⇄ 2 ⇄ 3 with `I = ⟨α'α − ββ', αα', β'β⟩`.
pub fn ex1_algebra() -> Arc<PresentedAlgebra> {
    build(
        &["1", "2", "3"],
        &[("alpha", "1", "2"), ("alpha'", "2", "1"), ("beta", "2", "3"), ("beta'", "3", "2")],
        &["alpha'*alpha - beta*beta'".into(), "alpha*alpha'".into(), "beta'*beta".into()],
    )
}

/// Summands 1/2/3, 1/2, 1.
pub fn ex1_m(a: &Arc<PresentedAlgebra>) -> Vec<Representation> {
    vec![
        tree_module(a, &["1", "2", "3"], &[("alpha", 0, 1), ("beta", 1, 2)]).unwrap(),
        tree_module(a, &["1", "2"], &[("alpha", 0, 1)]).unwrap(),
        tree_module(a, &["1"], &[]).unwrap(),
    ]
}

/// α:1→3, β:3→2, γ:2→1, δ:4→2 with `I = ⟨αβ, γα⟩`.
pub fn ex2_algebra() -> Arc<PresentedAlgebra> {
    build(
        &["1", "2", "3", "4"],
        &[("alpha", "1", "3"), ("beta", "3", "2"), ("gamma", "2", "1"), ("delta", "4", "2")],
        &["alpha*beta".into(), "gamma*alpha".into()],
    )
}

/// Summands 4/2/1, 4/2, 43/2/1, 4.
pub fn ex2_m(a: &Arc<PresentedAlgebra>) -> Vec<Representation> {
    vec![
        tree_module(a, &["4", "2", "1"], &[("delta", 0, 1), ("gamma", 1, 2)]).unwrap(),
        tree_module(a, &["4", "2"], &[("delta", 0, 1)]).unwrap(),
        tree_module(a, &["4", "3", "2", "1"], &[("delta", 0, 2), ("beta", 1, 2), ("gamma", 2, 3)])
            .unwrap(),
        tree_module(a, &["4"], &[]).unwrap(),
    ]
}

/// β:1→4, α:4→3, δ:5→3, γ:3→1, ε:3→2, ω:2→5; every path of length two
/// except αε is zero.
pub fn fig1_algebra() -> Arc<PresentedAlgebra> {
    let arrows = [
        ("beta", "1", "4"),
        ("alpha", "4", "3"),
        ("delta", "5", "3"),
        ("gamma", "3", "1"),
        ("epsilon", "3", "2"),
        ("omega", "2", "5"),
    ];
    let rels: Vec<String> =
        rad_square_zero(&arrows).into_iter().filter(|r| r != "alpha*epsilon").collect();
    build(&["1", "2", "3", "4", "5"], &arrows, &rels)
}

/// 4/3/2 ⊕ 4/3 ⊕ 54/3 ⊕ 4 ⊕ 1/4.
pub fn fig1_sigma(a: &Arc<PresentedAlgebra>) -> Vec<Representation> {
    vec![
        tree_module(a, &["4", "3", "2"], &[("alpha", 0, 1), ("epsilon", 1, 2)]).unwrap(),
        tree_module(a, &["4", "3"], &[("alpha", 0, 1)]).unwrap(),
        tree_module(a, &["5", "4", "3"], &[("delta", 0, 2), ("alpha", 1, 2)]).unwrap(),
        tree_module(a, &["4"], &[]).unwrap(),
        tree_module(a, &["1", "4"], &[("beta", 0, 1)]).unwrap(),
    ]
}

/// 4/3/2 ⊕ 4/3 ⊕ 3 ⊕ 5/3 ⊕ 3/1.
pub fn fig1_sigma_tilde(a: &Arc<PresentedAlgebra>) -> Vec<Representation> {
    vec![
        tree_module(a, &["4", "3", "2"], &[("alpha", 0, 1), ("epsilon", 1, 2)]).unwrap(),
        tree_module(a, &["4", "3"], &[("alpha", 0, 1)]).unwrap(),
        tree_module(a, &["3"], &[]).unwrap(),
        tree_module(a, &["5", "3"], &[("delta", 0, 1)]).unwrap(),
        tree_module(a, &["3", "1"], &[("gamma", 0, 1)]).unwrap(),
    ]
}

/// Double arrows 1 ⇉ 2 ⇉ 3 ⇉ 1 with radical square zero. The module names
/// 11/2 and 3/11 fix this orientation.
pub fn fig2_algebra() -> Arc<PresentedAlgebra> {
    let arrows = [
        ("a1", "1", "2"),
        ("a2", "1", "2"),
        ("b1", "2", "3"),
        ("b2", "2", "3"),
        ("c1", "3", "1"),
        ("c2", "3", "1"),
    ];
    let rels = rad_square_zero(&arrows);
    build(&["1", "2", "3"], &arrows, &rels)
}

/// 11/2 ⊕ 1 ⊕ 3/11.
pub fn fig2_sigma(a: &Arc<PresentedAlgebra>) -> Vec<Representation> {
    vec![
        tree_module(a, &["1", "1", "2"], &[("a1", 0, 2), ("a2", 1, 2)]).unwrap(),
        tree_module(a, &["1"], &[]).unwrap(),
        tree_module(a, &["3", "1", "1"], &[("c1", 0, 1), ("c2", 0, 2)]).unwrap(),
    ]
}

/// 2→1, 5→2, 5→4, 4→3, 3→1 with radical square zero.
pub fn fig3_algebra() -> Arc<PresentedAlgebra> {
    let arrows = [("a", "2", "1"), ("b", "5", "2"), ("c", "5", "4"), ("d", "4", "3"), ("e", "3", "1")];
    let rels = rad_square_zero(&arrows);
    build(&["1", "2", "3", "4", "5"], &arrows, &rels)
}

/// 2/1 ⊕ 23/1 ⊕ 2 ⊕ 5/42 ⊕ 5/2.
pub fn fig3_sigma(a: &Arc<PresentedAlgebra>) -> Vec<Representation> {
    vec![
        tree_module(a, &["2", "1"], &[("a", 0, 1)]).unwrap(),
        tree_module(a, &["2", "3", "1"], &[("a", 0, 2), ("e", 1, 2)]).unwrap(),
        tree_module(a, &["2"], &[]).unwrap(),
        tree_module(a, &["5", "4", "2"], &[("c", 0, 1), ("b", 0, 2)]).unwrap(),
        tree_module(a, &["5", "2"], &[("b", 0, 1)]).unwrap(),
    ]
}

/// α:1→3, β:3→2, γ:2→1, δ:4→2, ω:1→4 with
/// `I = ⟨αβ − ωδ, βγ, δγ, γω, γα⟩`.
pub fn ex5_tilde() -> Arc<PresentedAlgebra> {
    build(
        &["1", "2", "3", "4"],
        &[
            ("alpha", "1", "3"),
            ("beta", "3", "2"),
            ("gamma", "2", "1"),
            ("delta", "4", "2"),
            ("omega", "1", "4"),
        ],
        &[
            "alpha*beta - omega*delta".into(),
            "beta*gamma".into(),
            "delta*gamma".into(),
            "gamma*omega".into(),
            "gamma*alpha".into(),
        ],
    )
}

/// α:1→3, β:3→2, γ:2→1, δ:4→2 with radical square zero.
pub fn ex5_a() -> Arc<PresentedAlgebra> {
    let arrows = [("alpha", "1", "3"), ("beta", "3", "2"), ("gamma", "2", "1"), ("delta", "4", "2")];
    let rels = rad_square_zero(&arrows);
    build(&["1", "2", "3", "4"], &arrows, &rels)
}

/// α:1→3, β:3→2, γ:2→1 with radical square zero.
pub fn ex5_a_prime() -> Arc<PresentedAlgebra> {
    let arrows = [("alpha", "1", "3"), ("beta", "3", "2"), ("gamma", "2", "1")];
    let rels = rad_square_zero(&arrows);
    build(&["1", "2", "3"], &arrows, &rels)
}

/// β:3→2, γ:2→1, δ:4→2 with radical square zero.
pub fn ex5_c() -> Arc<PresentedAlgebra> {
    let arrows = [("beta", "3", "2"), ("gamma", "2", "1"), ("delta", "4", "2")];
    let rels = rad_square_zero(&arrows);
    build(&["1", "2", "3", "4"], &arrows, &rels)
}

/// 2/1 ⊕ 2 ⊕ 3/2 ⊕ 4/2, over any of the EX5 algebras containing vertex 4.
pub fn ex5_sigma(a: &Arc<PresentedAlgebra>) -> Vec<Representation> {
    let mut out = ex5_sigma1(a);
    out.push(tree_module(a, &["4", "2"], &[("delta", 0, 1)]).unwrap());
    out
}

/// 2/1 ⊕ 2 ⊕ 3/2.
pub fn ex5_sigma1(a: &Arc<PresentedAlgebra>) -> Vec<Representation> {
    vec![
        tree_module(a, &["2", "1"], &[("gamma", 0, 1)]).unwrap(),
        tree_module(a, &["2"], &[]).unwrap(),
        tree_module(a, &["3", "2"], &[("beta", 0, 1)]).unwrap(),
    ]
}

/// 1/3 ⊕ 1 ⊕ 2/1.
pub fn ex5_sigma2(a: &Arc<PresentedAlgebra>) -> Vec<Representation> {
    vec![
        tree_module(a, &["1", "3"], &[("alpha", 0, 1)]).unwrap(),
        tree_module(a, &["1"], &[]).unwrap(),
        tree_module(a, &["2", "1"], &[("gamma", 0, 1)]).unwrap(),
    ]
}

/// Path algebra of the linear quiver 1 → 2 → … → n.
pub fn linear_a(n: usize) -> Arc<PresentedAlgebra> {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let names: Vec<String> = (1..n).map(|i| format!("a{i}")).collect();
    let vs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let arrows: Vec<(&str, &str, &str)> =
        (0..n - 1).map(|i| (names[i].as_str(), vs[i], vs[i + 1])).collect();
    PresentedAlgebra::from_spec(Q, &vs, &arrows, &[]).expect("path algebra of a Dynkin quiver")
}

/// The one-vertex algebra `k`.
pub fn field_algebra() -> Arc<PresentedAlgebra> {
    PresentedAlgebra::from_spec(Q, &["1"], &[], &[]).unwrap()
}
