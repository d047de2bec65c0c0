//! The Auslander-Reiten quiver by closure under almost split sequences,
//! and the radical filtration of Hom spaces.

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use super::ass::{almost_split_sequence, almost_split_starting};
use super::presentation::{is_injective, is_projective};
use crate::algebra::PresentedAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::modrep::{decompose, end_basis, end_radical, hom_basis, is_isomorphic, standard_modules, Morphism, Representation};

#[derive(Clone, Copy, Debug)]
pub struct ArCaps {
    pub max_nodes: usize,
    pub max_dim: usize,
}

impl Default for ArCaps {
    fn default() -> Self {
        ArCaps { max_nodes: 512, max_dim: 64 }
    }
}

#[derive(Clone, Debug)]
pub struct ArNode {
    pub module: Representation,
    pub projective: bool,
    pub injective: bool,
}

#[derive(Clone, Debug)]
pub struct ArQuiver {
    pub algebra: Arc<PresentedAlgebra>,
    pub nodes: Vec<ArNode>,
    /// `(source, target, multiplicity)`, sorted.
    pub arrows: Vec<(usize, usize, usize)>,
    /// `tau[i] = Some(j)` when node `i` is not projective and `τ i = j`.
    pub tau: Vec<Option<usize>>,
}

impl ArQuiver {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Index of the node isomorphic to `m`, if any.
    pub fn find(&self, m: &Representation) -> Option<usize> {
        find_node(&self.nodes, m)
    }

    pub fn tau_inverse(&self, i: usize) -> Option<usize> {
        self.tau.iter().position(|t| *t == Some(i))
    }

    pub fn predecessors(&self, i: usize) -> Vec<(usize, usize)> {
        self.arrows.iter().filter(|a| a.1 == i).map(|a| (a.0, a.2)).collect()
    }

    pub fn successors(&self, i: usize) -> Vec<(usize, usize)> {
        self.arrows.iter().filter(|a| a.0 == i).map(|a| (a.1, a.2)).collect()
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().find(|a| a.0 == i && a.1 == j).map_or(0, |a| a.2)
    }

    /// Nodes of the `τ`-orbit of `i`.
    pub fn orbit(&self, i: usize) -> Vec<usize> {
        let mut out = vec![i];
        let mut cur = i;
        while let Some(t) = self.tau[cur] {
            if out.contains(&t) {
                break;
            }
            out.push(t);
            cur = t;
        }
        cur = i;
        while let Some(u) = self.tau_inverse(cur) {
            if out.contains(&u) {
                break;
            }
            out.push(u);
            cur = u;
        }
        out.sort();
        out
    }

    /// `reach[i][j]`: a path of positive length from `i` to `j`.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut r = vec![vec![false; n]; n];
        for &(s, t, _) in &self.arrows {
            r[s][t] = true;
        }
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

    pub fn modules(&self) -> Vec<Representation> {
        self.nodes.iter().map(|n| n.module.clone()).collect()
    }
}

fn find_node(nodes: &[ArNode], m: &Representation) -> Option<usize> {
    nodes
        .iter()
        .position(|n| n.module.dims() == m.dims() && is_isomorphic(&n.module, m).unwrap_or(false))
}

struct Builder {
    caps: ArCaps,
    nodes: Vec<ArNode>,
    queue: VecDeque<usize>,
}

impl Builder {
    fn intern(&mut self, m: &Representation) -> Result<usize> {
        if let Some(i) = find_node(&self.nodes, m) {
            return Ok(i);
        }
        if m.dim() > self.caps.max_dim || self.nodes.len() >= self.caps.max_nodes {
            return Err(Error::CapExceeded(format!(
                "AR quiver exceeds {} nodes or dimension {}; possibly representation-infinite",
                self.caps.max_nodes, self.caps.max_dim
            )));
        }
        self.nodes.push(ArNode {
            module: m.clone(),
            projective: is_projective(m),
            injective: is_injective(m),
        });
        self.queue.push_back(self.nodes.len() - 1);
        Ok(self.nodes.len() - 1)
    }

    fn intern_all(&mut self, ms: &[Representation]) -> Result<BTreeMap<usize, usize>> {
        let mut count = BTreeMap::new();
        for m in ms {
            *count.entry(self.intern(m)?).or_insert(0) += 1;
        }
        Ok(count)
    }
}

/// Closure of projectives, injectives and simples under almost split
/// sequences in both directions.
pub fn ar_quiver(a: &Arc<PresentedAlgebra>, caps: ArCaps) -> Result<ArQuiver> {
    let st = standard_modules(a);
    let mut b = Builder { caps, nodes: vec![], queue: VecDeque::new() };
    for m in st.projectives.iter().chain(&st.injectives).chain(&st.simples) {
        b.intern(m)?;
    }
    let mut arrows: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut tau: BTreeMap<usize, usize> = BTreeMap::new();
    while let Some(i) = b.queue.pop_front() {
        let node = b.nodes[i].clone();
        let m = &node.module;
        if node.projective {
            let parts: Vec<Representation> = decompose(&m.radical().0)?.into_iter().map(|s| s.module).collect();
            for (y, k) in b.intern_all(&parts)? {
                arrows.insert((y, i), k);
            }
        } else {
            let seq = almost_split_sequence(m)?;
            let t = b.intern(&seq.left)?;
            tau.insert(i, t);
            for (y, k) in b.intern_all(&seq.middle_summands)? {
                arrows.insert((y, i), k);
            }
        }
        if node.injective {
            let (soc, incl) = m.socle();
            let _ = soc;
            let (top_part, _) = incl.cokernel(m);
            let parts: Vec<Representation> = decompose(&top_part)?.into_iter().map(|s| s.module).collect();
            for (y, k) in b.intern_all(&parts)? {
                arrows.insert((i, y), k);
            }
        } else {
            let seq = almost_split_starting(m)?;
            let u = b.intern(&seq.right)?;
            tau.insert(u, i);
            for (y, k) in b.intern_all(&seq.middle_summands)? {
                arrows.insert((i, y), k);
            }
        }
    }
    let n = b.nodes.len();
    Ok(ArQuiver {
        algebra: a.clone(),
        nodes: b.nodes,
        arrows: arrows.into_iter().map(|((s, t), k)| (s, t, k)).collect(),
        tau: (0..n).map(|i| tau.get(&i).copied()).collect(),
    })
}

/// Which power of the radical to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadPower {
    Finite(usize),
    Infinite,
}

fn flat_len(x: &Representation, y: &Representation) -> usize {
    x.dims().iter().zip(y.dims()).map(|(a, b)| a * b).sum()
}

fn span_of(x: &Representation, y: &Representation, ms: &[Morphism]) -> Vec<Morphism> {
    let len = flat_len(x, y);
    if len == 0 || ms.is_empty() {
        return vec![];
    }
    let vs: Vec<Vec<Scalar>> = ms.iter().map(Morphism::flatten).collect();
    Subspace::span_vectors(x.field(), len, &vs)
        .basis()
        .columns()
        .iter()
        .map(|c| Morphism::unflatten(c, x, y))
        .collect()
}

/// `rad(X, Y)`: maps `f` with `g ∘ f ∈ rad End(X)` for every `g: Y → X`.
pub fn rad1(x: &Representation, y: &Representation) -> Result<Vec<Morphism>> {
    let homs = hom_basis(x, y);
    let back = hom_basis(y, x);
    if homs.is_empty() || back.is_empty() {
        return Ok(homs);
    }
    let field = x.field();
    let ebasis = end_basis(x);
    let emat = Matrix::from_columns(
        field,
        x.dim() * x.dim(),
        &ebasis.iter().map(flat_total).collect::<Vec<_>>(),
    );
    let rad = end_radical(x, &ebasis)?;
    // Rows annihilating rad End(X) inside End(X) coordinates.
    let kill = if rad.cols() == 0 {
        Matrix::identity(field, ebasis.len())
    } else {
        rad.transpose().kernel_basis().transpose()
    };
    let mut rows: Vec<Vec<Scalar>> = vec![];
    for g in &back {
        let cols: Vec<Vec<Scalar>> = homs
            .iter()
            .map(|f| {
                let gf = flat_total(&g.after(f).total());
                let c = emat.solve(&Matrix::from_columns(field, gf.len(), &[gf])).expect("g∘f is an endomorphism");
                kill.mul_vec(&c.column(0))
            })
            .collect();
        let m = Matrix::from_columns(field, kill.rows(), &cols);
        for r in 0..m.rows() {
            rows.push(m.row(r).to_vec());
        }
    }
    let sol = Matrix::from_rows(field, rows).kernel_basis();
    Ok(sol
        .columns()
        .iter()
        .map(|c| {
            c.iter().zip(&homs).fold(Morphism::zero(x, y), |acc, (s, h)| acc.add(&h.scale(s)))
        })
        .collect())
}

fn flat_total(t: &Matrix) -> Vec<Scalar> {
    (0..t.rows()).flat_map(|i| (0..t.cols()).map(move |j| t.get(i, j).clone())).collect()
}

/// `radⁿ(X, Y)` with `radⁿ⁺¹(X, Y) = Σ_Z radⁿ(Z, Y) ∘ rad(X, Z)` over the
/// supplied indecomposables `Z`. For [`RadPower::Infinite`] the filtration
/// is iterated until it stabilizes, which gives `rad^∞` when `indecs`
/// contains every indecomposable.
pub fn rad_hom(
    x: &Representation,
    y: &Representation,
    power: RadPower,
    indecs: &[Representation],
) -> Result<Vec<Morphism>> {
    let limit = match power {
        RadPower::Finite(0) => return Ok(hom_basis(x, y)),
        RadPower::Finite(n) => n,
        RadPower::Infinite => usize::MAX,
    };
    let mut current = rad1(x, y)?;
    if limit == 1 {
        return Ok(current);
    }
    let from_x: Vec<Vec<Morphism>> = indecs.iter().map(|w| rad1(x, w)).collect::<Result<_>>()?;
    let table: Vec<Vec<Vec<Morphism>>> = indecs
        .iter()
        .map(|z| indecs.iter().map(|w| rad1(z, w)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    // layer[w] = radⁿ(W, Y).
    let mut layer: Vec<Vec<Morphism>> = indecs.iter().map(|w| rad1(w, y)).collect::<Result<_>>()?;
    let compose = |src: &Representation, first: &[Vec<Morphism>], layer: &[Vec<Morphism>]| {
        let mut gens = vec![];
        for (w, fs) in first.iter().enumerate() {
            for g in &layer[w] {
                for f in fs {
                    gens.push(g.after(f));
                }
            }
        }
        span_of(src, y, &gens)
    };
    for _ in 1..limit {
        let next = compose(x, &from_x, &layer);
        let next_layer: Vec<Vec<Morphism>> =
            indecs.iter().zip(&table).map(|(z, row)| compose(z, row, &layer)).collect();
        // The filtration is stable only once every layer stops shrinking.
        let stable = next.len() == current.len()
            && next_layer.iter().zip(&layer).all(|(a, b)| a.len() == b.len());
        current = next;
        layer = next_layer;
        if stable || (current.is_empty() && layer.iter().all(Vec::is_empty)) {
            break;
        }
    }
    Ok(current)
}

/// `dim rad(X, Y) − dim rad²(X, Y)`: the number of arrows `X → Y` in the AR
/// quiver when `End` of both is the base field.
pub fn irreducible_dim(x: &Representation, y: &Representation, indecs: &[Representation]) -> Result<usize> {
    Ok(rad1(x, y)?.len() - rad_hom(x, y, RadPower::Finite(2), indecs)?.len())
}

/// `rad^∞(W, Y)` for every `W` in `indecs` at once, by iterating the
/// filtration until all layers stabilize.
pub fn rad_infinity_into(y: &Representation, indecs: &[Representation]) -> Result<Vec<Vec<Morphism>>> {
    let table: Vec<Vec<Vec<Morphism>>> = indecs
        .iter()
        .map(|z| indecs.iter().map(|w| rad1(z, w)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut layer: Vec<Vec<Morphism>> = indecs.iter().map(|w| rad1(w, y)).collect::<Result<_>>()?;
    loop {
        let next: Vec<Vec<Morphism>> = indecs
            .iter()
            .zip(&table)
            .map(|(z, row)| {
                let mut gens = vec![];
                for (w, fs) in row.iter().enumerate() {
                    for g in &layer[w] {
                        for f in fs {
                            gens.push(g.after(f));
                        }
                    }
                }
                span_of(z, y, &gens)
            })
            .collect();
        let stable = next.iter().zip(&layer).all(|(a, b)| a.len() == b.len());
        layer = next;
        if stable {
            return Ok(layer);
        }
    }
}
