//! Orbit graphs of AR components, component-level properties and a small
//! classifier for underlying graphs of quivers.

use std::collections::BTreeMap;
use std::fmt;

use super::slices::{component_of, hom_reachability, is_convex_in_mod};
use crate::algebra::PresentedAlgebra;
use crate::artheory::{rad_infinity_into, ArQuiver};
use crate::error::Result;

/// The orbit graph of a component: one vertex per τ-orbit, one edge per
/// class of arrows under `(x→y) ~ (τx→τy)` and `(x→y) ~ (y→τ⁻¹x)`,
/// counted with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitGraph {
    /// Node lists of the τ-orbits, in order of their smallest node.
    pub orbits: Vec<Vec<usize>>,
    /// `(orbit, orbit, multiplicity)` per arrow class.
    pub edges: Vec<(usize, usize, usize)>,
}

impl OrbitGraph {
    pub fn is_tree(&self) -> bool {
        let n = self.orbits.len();
        let total: usize = self.edges.iter().map(|e| e.2).sum();
        if self.edges.iter().any(|e| e.0 == e.1) || total + 1 != n {
            return false;
        }
        let mut uf = UnionFind::new(n);
        for &(a, b, _) in &self.edges {
            uf.union(a, b);
        }
        (0..n).all(|i| uf.find(i) == uf.find(0))
    }

    /// Orbit index of a node.
    pub fn orbit_of(&self, node: usize) -> Option<usize> {
        self.orbits.iter().position(|o| o.contains(&node))
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, i: usize) -> usize {
        let p = self.0[i];
        if p == i {
            return i;
        }
        let r = self.find(p);
        self.0[i] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Orbit graph of the component containing `start`.
pub fn orbit_graph(q: &ArQuiver, start: usize) -> OrbitGraph {
    let comp = component_of(q, start);
    let mut orbits: Vec<Vec<usize>> = vec![];
    for &c in &comp {
        if !orbits.iter().any(|o| o.contains(&c)) {
            orbits.push(q.orbit(c));
        }
    }
    let arrows: Vec<(usize, usize, usize)> =
        q.arrows.iter().copied().filter(|a| comp.contains(&a.0)).collect();
    let index: BTreeMap<(usize, usize), usize> = arrows.iter().enumerate().map(|(i, a)| ((a.0, a.1), i)).collect();
    let mut uf = UnionFind::new(arrows.len());
    for (i, &(x, y, _)) in arrows.iter().enumerate() {
        if let (Some(tx), Some(ty)) = (q.tau[x], q.tau[y]) {
            if let Some(&j) = index.get(&(tx, ty)) {
                uf.union(i, j);
            }
        }
        if let Some(ux) = q.tau_inverse(x) {
            if let Some(&j) = index.get(&(y, ux)) {
                uf.union(i, j);
            }
        }
    }
    let orbit_of = |n: usize| orbits.iter().position(|o| o.contains(&n)).expect("node in component");
    let mut edges = vec![];
    let mut seen = vec![];
    for (i, &(x, y, m)) in arrows.iter().enumerate() {
        let r = uf.find(i);
        if !seen.contains(&r) {
            seen.push(r);
            let (a, b) = (orbit_of(x), orbit_of(y));
            edges.push((a.min(b), a.max(b), m));
        }
    }
    edges.sort();
    OrbitGraph { orbits, edges }
}

/// Simply connected in the sense of the orbit graph being a tree.
pub fn is_simply_connected_component(q: &ArQuiver, start: usize) -> bool {
    orbit_graph(q, start).is_tree()
}

/// No chain of nonzero maps leaves the component and comes back; `q` must
/// list every indecomposable.
pub fn is_convex_component(q: &ArQuiver, start: usize) -> bool {
    let comp = component_of(q, start);
    is_convex_in_mod(&comp, &hom_reachability(&q.modules()))
}

/// `rad^∞(X, Y) = 0` for all `X`, `Y` in the component; `q` must list every
/// indecomposable.
pub fn is_generalized_standard(q: &ArQuiver, start: usize) -> Result<bool> {
    let comp = component_of(q, start);
    let ms = q.modules();
    for &y in &comp {
        let layers = rad_infinity_into(&ms[y], &ms)?;
        if comp.iter().any(|&x| !layers[x].is_empty()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shape of a connected undirected multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphType {
    Dynkin(String),
    Euclidean(String),
    Other { vertices: usize, edges: usize, degrees: Vec<usize> },
    Disconnected,
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphType::Dynkin(s) => write!(f, "{s}"),
            GraphType::Euclidean(s) => write!(f, "~{s}"),
            GraphType::Other { vertices, edges, degrees } => {
                write!(f, "other({vertices} vertices, {edges} edges, degrees {degrees:?})")
            }
            GraphType::Disconnected => write!(f, "disconnected"),
        }
    }
}

/// Classifies the underlying graph on `n` vertices with the given edges.
pub fn classify_graph(n: usize, edges: &[(usize, usize)]) -> GraphType {
    let mut uf = UnionFind::new(n);
    for &(a, b) in edges {
        uf.union(a, b);
    }
    if n == 0 || (0..n).any(|i| uf.find(i) != uf.find(0)) {
        return GraphType::Disconnected;
    }
    let mut adj = vec![vec![]; n];
    for &(a, b) in edges {
        adj[a].push(b);
        if a != b {
            adj[b].push(a);
        }
    }
    let mut degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
    let other = |degrees: &mut Vec<usize>| {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        GraphType::Other { vertices: n, edges: edges.len(), degrees: degrees.clone() }
    };
    let mut simple_pairs: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    simple_pairs.sort();
    simple_pairs.dedup();
    let has_multi = simple_pairs.len() != edges.len();
    if edges.len() == n {
        if n == 1 && edges.len() == 1 {
            return GraphType::Euclidean("A0".into());
        }
        if n == 2 && has_multi {
            return GraphType::Euclidean("A1".into());
        }
        if !has_multi && degrees.iter().all(|&d| d == 2) {
            return GraphType::Euclidean(format!("A{}", n - 1));
        }
        return other(&mut degrees);
    }
    if edges.len() + 1 != n || has_multi {
        return other(&mut degrees);
    }
    // A tree: read off the branch points and arm lengths.
    let branch: Vec<usize> = (0..n).filter(|&v| degrees[v] >= 3).collect();
    let arm = |from: usize, first: usize| {
        let (mut prev, mut cur, mut len) = (from, first, 1);
        while degrees[cur] == 2 {
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
            len += 1;
        }
        (len, degrees[cur] == 1)
    };
    match branch.as_slice() {
        [] => GraphType::Dynkin(format!("A{n}")),
        [b] => {
            let mut arms: Vec<usize> = adj[*b].iter().map(|&c| arm(*b, c).0).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => GraphType::Dynkin(format!("D{}", k + 3)),
                [1, 2, 2] => GraphType::Dynkin("E6".into()),
                [1, 2, 3] => GraphType::Dynkin("E7".into()),
                [1, 2, 4] => GraphType::Dynkin("E8".into()),
                [2, 2, 2] => GraphType::Euclidean("E6".into()),
                [1, 3, 3] => GraphType::Euclidean("E7".into()),
                [1, 2, 5] => GraphType::Euclidean("E8".into()),
                [1, 1, 1, 1] => GraphType::Euclidean("D4".into()),
                _ => other(&mut degrees),
            }
        }
        [b1, b2] if degrees[*b1] == 3 && degrees[*b2] == 3 => {
            let leaves = |b: usize| adj[b].iter().filter(|&&c| arm(b, c) == (1, true)).count();
            if leaves(*b1) == 2 && leaves(*b2) == 2 {
                GraphType::Euclidean(format!("D{}", n - 1))
            } else {
                other(&mut degrees)
            }
        }
        _ => other(&mut degrees),
    }
}

/// Underlying graph type of the quiver of `a`.
pub fn quiver_graph_type(a: &PresentedAlgebra) -> GraphType {
    let q = a.quiver();
    let edges: Vec<(usize, usize)> = q.arrows().iter().map(|ar| (ar.source, ar.target)).collect();
    classify_graph(q.num_vertices(), &edges)
}
