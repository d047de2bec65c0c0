//! Presections, τ-slices, convexity and the classical slice notions.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::rigid::{is_support_tau_tilting, is_tau_rigid, is_tau_tilting};
use crate::algebra::PresentedAlgebra;
use crate::artheory::{
    almost_split_sequence, almost_split_starting, ar_quiver, is_injective, is_projective, rad1, rad_hom, tau, tau_inverse,
    ArCaps, ArQuiver, RadPower,
};
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::modrep::{class_flags, decompose, hom_dim, is_indecomposable, is_isomorphic, Morphism, Representation};

/// A finite set of pairwise non-isomorphic indecomposables.
#[derive(Clone, Debug)]
pub struct SliceCandidate {
    pub algebra: Arc<PresentedAlgebra>,
    pub members: Vec<Representation>,
}

impl SliceCandidate {
    pub fn new(members: Vec<Representation>) -> Result<SliceCandidate> {
        let algebra = members
            .first()
            .map(|m| m.algebra().clone())
            .ok_or_else(|| Error::Precondition("empty slice candidate".into()))?;
        for (i, m) in members.iter().enumerate() {
            if !m.algebra().same_as(&algebra) {
                return Err(Error::AlgebraMismatch("members live over different algebras".into()));
            }
            if !is_indecomposable(m)? {
                return Err(Error::Precondition(format!("member {m} is decomposable")));
            }
            for other in &members[..i] {
                if is_isomorphic(m, other)? {
                    return Err(Error::NotBasic(format!("member {m} is repeated")));
                }
            }
        }
        Ok(SliceCandidate { algebra, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn module(&self) -> Representation {
        Representation::direct_sum(&self.members)
    }

    pub fn position(&self, x: &Representation) -> Option<usize> {
        if x.is_zero() {
            return None;
        }
        self.members
            .iter()
            .position(|m| m.dims() == x.dims() && is_isomorphic(m, x).unwrap_or(false))
    }

    pub fn contains(&self, x: &Representation) -> bool {
        self.position(x).is_some()
    }

    /// Node indices of the members in an AR quiver.
    pub fn nodes_in(&self, q: &ArQuiver) -> Result<Vec<usize>> {
        self.members
            .iter()
            .map(|m| q.find(m).ok_or_else(|| Error::Precondition(format!("{m} is not a node of the AR quiver"))))
            .collect()
    }
}

fn summands(m: &Representation) -> Result<Vec<Representation>> {
    if m.is_zero() {
        return Ok(vec![]);
    }
    Ok(decompose(m)?.into_iter().map(|s| s.module).collect())
}

/// Immediate successors of `x`: summands of the middle of the almost split
/// sequence starting at `x`, or of `x / soc x` when `x` is injective.
pub fn immediate_successors(x: &Representation) -> Result<Vec<Representation>> {
    if is_injective(x) {
        let (_, incl) = x.socle();
        summands(&incl.cokernel(x).0)
    } else {
        Ok(almost_split_starting(x)?.middle_summands)
    }
}

/// Immediate predecessors of `x`: summands of the middle of the almost
/// split sequence ending at `x`, or of `rad x` when `x` is projective.
pub fn immediate_predecessors(x: &Representation) -> Result<Vec<Representation>> {
    if is_projective(x) {
        summands(&x.radical().0)
    } else {
        Ok(almost_split_sequence(x)?.middle_summands)
    }
}

/// Presection test from almost split sequences at the members only.
pub fn is_presection(s: &SliceCandidate) -> Result<bool> {
    let k = s.len();
    let mut adj = vec![BTreeSet::new(); k];
    for (i, x) in s.members.iter().enumerate() {
        for y in immediate_successors(x)? {
            match s.position(&y) {
                Some(j) => {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
                None => {
                    if !s.contains(&tau(&y)) {
                        return Ok(false);
                    }
                }
            }
        }
        for y in immediate_predecessors(x)? {
            match s.position(&y) {
                Some(j) => {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
                None => {
                    if !s.contains(&tau_inverse(&y)) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(connected(k, &adj))
}

fn connected(k: usize, adj: &[BTreeSet<usize>]) -> bool {
    if k == 0 {
        return false;
    }
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

/// τ-rigid presection, which suffices for a τ-slice; the direct
/// definition (support τ-tilting) is cross-checked.
pub fn is_tau_slice(s: &SliceCandidate) -> Result<bool> {
    let m = s.module();
    let rigid = is_tau_rigid(&m);
    let verdict = rigid && is_presection(s)?;
    if verdict && !is_support_tau_tilting(&m)? {
        return Err(Error::Verification("τ-rigid presection that is not support τ-tilting".into()));
    }
    Ok(verdict)
}

pub fn is_complete_tau_slice(s: &SliceCandidate) -> Result<bool> {
    Ok(is_tau_slice(s)? && is_tau_tilting(&s.module())?)
}

/// Nodes of `q` connected (ignoring orientation) to node `start`.
pub fn component_of(q: &ArQuiver, start: usize) -> Vec<usize> {
    let mut seen = vec![false; q.len()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(i) = stack.pop() {
        for &(s, t, _) in &q.arrows {
            for (a, b) in [(s, t), (t, s)] {
                if a == i && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    (0..q.len()).filter(|&i| seen[i]).collect()
}

/// Reachability in the digraph `X → Y` iff `X ≇ Y` and `Hom(X, Y) ≠ 0`.
pub fn hom_reachability(ms: &[Representation]) -> Vec<Vec<bool>> {
    let n = ms.len();
    let mut r: Vec<Vec<bool>> =
        (0..n).map(|i| (0..n).map(|j| i != j && hom_dim(&ms[i], &ms[j]) > 0).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

/// No Hom-path between members passes through a non-member.
pub fn is_convex_in_mod(nodes: &[usize], reach: &[Vec<bool>]) -> bool {
    let inside: BTreeSet<usize> = nodes.iter().copied().collect();
    for &x in nodes {
        for &y in nodes {
            for z in 0..reach.len() {
                if !inside.contains(&z) && reach[x][z] && reach[z][y] {
                    return false;
                }
            }
        }
    }
    true
}

fn span(x: &Representation, y: &Representation, ms: Vec<Morphism>) -> Vec<Morphism> {
    let len: usize = x.dims().iter().zip(y.dims()).map(|(a, b)| a * b).sum();
    if len == 0 || ms.is_empty() {
        return vec![];
    }
    let vs: Vec<_> = ms.iter().map(Morphism::flatten).collect();
    Subspace::span_vectors(x.field(), len, &vs)
        .basis()
        .columns()
        .iter()
        .map(|c| Morphism::unflatten(c, x, y))
        .collect()
}

/// Irreducible maps `X → Y`: a complement of `rad²` in `rad`.
fn irreducible_maps(x: &Representation, y: &Representation, ms: &[Representation]) -> Result<Vec<Morphism>> {
    let r1 = rad1(x, y)?;
    if r1.is_empty() {
        return Ok(r1);
    }
    let r2 = rad_hom(x, y, RadPower::Finite(2), ms)?;
    let field = x.field();
    let len = r1[0].flatten().len();
    let sub2 = Subspace::span_vectors(field, len, &r2.iter().map(Morphism::flatten).collect::<Vec<_>>());
    let sub1 = Subspace::span_vectors(field, len, &r1.iter().map(Morphism::flatten).collect::<Vec<_>>());
    Ok(sub2.complement_in(&sub1).columns().iter().map(|c| Morphism::unflatten(c, x, y)).collect())
}

/// Paths in the AR quiver between members with a nonzero composite of
/// irreducible maps stay inside. Composites are tracked as spans, so a path
/// counts when some choice of irreducible maps along it composes to a
/// nonzero map.
pub fn is_weakly_convex(q: &ArQuiver, nodes: &[usize]) -> Result<bool> {
    let ms = q.modules();
    let n = q.len();
    let inside: BTreeSet<usize> = nodes.iter().copied().collect();
    let mut irr = vec![vec![vec![]; n]; n];
    for &(s, t, _) in &q.arrows {
        irr[s][t] = irreducible_maps(&ms[s], &ms[t], &ms)?;
    }
    for &x in nodes {
        // all[w]: composites along paths x ⇝ w; out[w]: those that visited a
        // non-member strictly between.
        let mut all: Vec<Vec<Morphism>> = vec![vec![]; n];
        let mut out: Vec<Vec<Morphism>> = vec![vec![]; n];
        for &(s, t, _) in &q.arrows {
            if s == x {
                all[t] = irr[x][t].clone();
            }
        }
        loop {
            let mut changed = false;
            for &(v, w, _) in &q.arrows {
                let mut new_all = all[w].clone();
                let mut new_out = out[w].clone();
                for g in &irr[v][w] {
                    for f in &all[v] {
                        let c = g.after(f);
                        new_all.push(c.clone());
                        if !inside.contains(&v) {
                            new_out.push(c);
                        }
                    }
                    for f in &out[v] {
                        new_out.push(g.after(f));
                    }
                }
                let new_all = span(&ms[x], &ms[w], new_all);
                let new_out = span(&ms[x], &ms[w], new_out);
                if new_all.len() != all[w].len() || new_out.len() != out[w].len() {
                    all[w] = new_all;
                    out[w] = new_out;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if nodes.iter().any(|&y| !out[y].is_empty()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sectional paths (`X_i ≠ τ X_{i+2}`) between members stay inside.
pub fn is_sectionally_convex(q: &ArQuiver, nodes: &[usize]) -> bool {
    let inside: BTreeSet<usize> = nodes.iter().copied().collect();
    // State: (previous, current, left the set).
    let mut seen = BTreeSet::new();
    let mut stack = vec![];
    for &x in nodes {
        for (y, _) in q.successors(x) {
            stack.push((x, y, !inside.contains(&y)));
        }
    }
    while let Some((p, c, left)) = stack.pop() {
        if !seen.insert((p, c, left)) {
            continue;
        }
        if left && inside.contains(&c) {
            return false;
        }
        for (d, _) in q.successors(c) {
            if q.tau[d] == Some(p) {
                continue;
            }
            stack.push((c, d, left || !inside.contains(&d)));
        }
    }
    true
}

/// Convexity along AR-quiver paths.
fn is_path_convex(q: &ArQuiver, nodes: &[usize]) -> bool {
    let reach = q.reachability();
    let inside: BTreeSet<usize> = nodes.iter().copied().collect();
    nodes.iter().all(|&x| {
        nodes
            .iter()
            .all(|&y| (0..q.len()).all(|z| inside.contains(&z) || !(reach[x][z] && reach[z][y])))
    })
}

fn internal_adjacency(q: &ArQuiver, nodes: &[usize]) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); nodes.len()];
    for &(s, t, _) in &q.arrows {
        if let (Some(i), Some(j)) = (nodes.iter().position(|&x| x == s), nodes.iter().position(|&x| x == t)) {
            adj[i].insert(j);
            adj[j].insert(i);
        }
    }
    adj
}

fn internally_acyclic(q: &ArQuiver, nodes: &[usize]) -> bool {
    // A cycle inside shows up as a member reaching itself through members.
    let k = nodes.len();
    let mut r = vec![vec![false; k]; k];
    for &(s, t, _) in &q.arrows {
        if let (Some(i), Some(j)) = (nodes.iter().position(|&x| x == s), nodes.iter().position(|&x| x == t)) {
            r[i][j] = true;
        }
    }
    for m in 0..k {
        for i in 0..k {
            if r[i][m] {
                for j in 0..k {
                    if r[m][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    (0..k).all(|i| !r[i][i])
}

/// Connected, acyclic, convex in its component and meeting every τ-orbit
/// of the component exactly once.
pub fn is_section(s: &SliceCandidate, q: &ArQuiver) -> Result<bool> {
    let nodes = s.nodes_in(q)?;
    if !connected(nodes.len(), &internal_adjacency(q, &nodes)) || !internally_acyclic(q, &nodes) {
        return Ok(false);
    }
    if !is_path_convex(q, &nodes) {
        return Ok(false);
    }
    let comp = component_of(q, nodes[0]);
    let mut orbits: Vec<Vec<usize>> = vec![];
    for &c in &comp {
        if !orbits.iter().any(|o| o.contains(&c)) {
            orbits.push(q.orbit(c));
        }
    }
    Ok(orbits.iter().all(|o| o.iter().filter(|x| nodes.contains(x)).count() == 1))
}

/// Ringel's axioms: sincere, convex in `mod A`, no almost split sequence
/// with both ends inside, and every mesh through a member has an end inside.
/// `q` must list every indecomposable.
pub fn is_complete_slice(s: &SliceCandidate, q: &ArQuiver) -> Result<bool> {
    let nodes = s.nodes_in(q)?;
    if !class_flags(&s.module()).sincere {
        return Ok(false);
    }
    let reach = hom_reachability(&q.modules());
    if !is_convex_in_mod(&nodes, &reach) {
        return Ok(false);
    }
    let inside = |i: usize| nodes.contains(&i);
    for n in 0..q.len() {
        let Some(l) = q.tau[n] else { continue };
        if inside(l) && inside(n) {
            return Ok(false);
        }
        let touches = q.predecessors(n).iter().any(|&(m, _)| inside(m));
        if touches && !inside(l) && !inside(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Complete-slice test that avoids enumerating `Γ_A` when it can: a complete
/// slice module is a tilting module, so an unfaithful candidate fails at once.
/// Otherwise the AR quiver is built within `caps`.
pub fn is_complete_slice_bounded(s: &SliceCandidate, caps: ArCaps) -> Result<bool> {
    if !class_flags(&s.module()).faithful {
        return Ok(false);
    }
    is_complete_slice(s, &ar_quiver(&s.algebra, caps)?)
}

/// Presection, sectionally convex, and `|Σ| = |A|`.
pub fn is_local_slice(s: &SliceCandidate, q: &ArQuiver) -> Result<bool> {
    let nodes = s.nodes_in(q)?;
    Ok(s.len() == s.algebra.num_vertices() && is_presection(s)? && is_sectionally_convex(q, &nodes))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConvexityReport {
    pub convex_in_mod: bool,
    pub weakly_convex: bool,
    pub sectionally_convex: bool,
}

/// All three convexity notions; `q` must list every indecomposable.
pub fn convexity_suite(s: &SliceCandidate, q: &ArQuiver) -> Result<ConvexityReport> {
    let nodes = s.nodes_in(q)?;
    let reach = hom_reachability(&q.modules());
    Ok(ConvexityReport {
        convex_in_mod: is_convex_in_mod(&nodes, &reach),
        weakly_convex: is_weakly_convex(q, &nodes)?,
        sectionally_convex: is_sectionally_convex(q, &nodes),
    })
}
