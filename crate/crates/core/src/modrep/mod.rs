//! Right modules over a presented algebra, as quiver representations.
//!
//! For an arrow `α: i → j` the map `M_α` is a `dim M_j × dim M_i` matrix
//! acting on column vectors; a path acts by the composite of its arrows in
//! order, so `M_{αβ} = M_β M_α`.

mod change;
mod decompose;
mod hom;
mod standard;

use std::fmt;
use std::sync::Arc;

pub use change::{inflate, restrict_scalars};
pub use decompose::{decompose, group_isoclasses, is_indecomposable, is_isomorphic, Summand};
pub use hom::{
    annihilator, class_flags, end_basis, end_radical, fac_member, hom_basis, hom_dim, sub_member,
    ClassFlags,
};
pub use standard::{injective, projective, simple, standard_modules, StandardModules};

use crate::algebra::{Path, PathPoly, PresentedAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace};

#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<PresentedAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_as(&other.algebra) && self.dims == other.dims && self.maps == other.maps
    }
}

/// Per-vertex matrices `f_v: M_v → N_v`.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism {
    pub maps: Vec<Matrix>,
}

impl Representation {
    /// Checks shapes and that every relation acts as zero.
    pub fn new(algebra: Arc<PresentedAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.num_vertices() || maps.len() != q.num_arrows() {
            return Err(Error::Precondition("representation shape does not match the quiver".into()));
        }
        for (a, m) in maps.iter().enumerate() {
            let ar = q.arrow(a);
            if m.rows() != dims[ar.target] || m.cols() != dims[ar.source] {
                return Err(Error::Precondition(format!(
                    "map for arrow {} has shape {}x{}, expected {}x{}",
                    ar.label,
                    m.rows(),
                    m.cols(),
                    dims[ar.target],
                    dims[ar.source]
                )));
            }
        }
        let rep = Representation { algebra, dims, maps };
        for r in rep.algebra.relations() {
            if !rep.poly_matrix(r).is_zero() {
                return Err(Error::Precondition(format!(
                    "relation {} does not act as zero",
                    r.display(rep.algebra.quiver())
                )));
            }
        }
        Ok(rep)
    }

    pub(crate) fn new_unchecked(algebra: Arc<PresentedAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        Representation { algebra, dims, maps }
    }

    pub fn zero(algebra: &Arc<PresentedAlgebra>) -> Self {
        let field = algebra.field();
        let n = algebra.num_vertices();
        let maps = (0..algebra.quiver().num_arrows()).map(|_| Matrix::zeros(field, 0, 0)).collect();
        Representation { algebra: algebra.clone(), dims: vec![0; n], maps }
    }

    pub fn algebra(&self) -> &Arc<PresentedAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut out = vec![0];
        for d in &self.dims {
            out.push(out.last().unwrap() + d);
        }
        out
    }

    /// Support vertices.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    pub fn dim_vector_string(&self) -> String {
        self.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Matrix of the action of a path, `M_end × M_start`.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dims[p.start]);
        for &a in &p.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Action of a combination of parallel paths.
    pub fn poly_matrix(&self, r: &PathPoly) -> Matrix {
        let Some((s, t)) = r.endpoints() else {
            return Matrix::zeros(self.field(), 0, 0);
        };
        let mut acc = Matrix::zeros(self.field(), self.dims[t], self.dims[s]);
        for (p, c) in r.terms() {
            acc = acc.add(&self.path_matrix(p).scale(c));
        }
        acc
    }

    /// Action of an algebra element on the whole space: `m ↦ m·x`.
    pub fn action_matrix(&self, x: &[Scalar]) -> Matrix {
        let off = self.offsets();
        let mut t = Matrix::zeros(self.field(), self.dim(), self.dim());
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &self.algebra.basis()[i];
            let block = self.path_matrix(p).scale(c);
            let old = t.block(off[p.end], off[p.start], self.dims[p.end], self.dims[p.start]);
            t.set_block(off[p.end], off[p.start], &old.add(&block));
        }
        t
    }

    /// Direct sum with inclusions of the summands.
    pub fn direct_sum(parts: &[Representation]) -> Representation {
        let algebra = parts[0].algebra.clone();
        let nv = algebra.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let field = algebra.field();
        let maps = (0..algebra.quiver().num_arrows())
            .map(|a| {
                parts.iter().fold(Matrix::zeros(field, 0, 0), |acc, p| acc.direct_sum(&p.maps[a]))
            })
            .collect();
        Representation { algebra, dims, maps }
    }

    /// Inclusion of the `k`-th summand of `direct_sum(parts)`.
    pub fn summand_inclusion(parts: &[Representation], k: usize) -> Morphism {
        let nv = parts[0].dims.len();
        let field = parts[0].field();
        let maps = (0..nv)
            .map(|v| {
                let total: usize = parts.iter().map(|p| p.dims[v]).sum();
                let before: usize = parts[..k].iter().map(|p| p.dims[v]).sum();
                let mut m = Matrix::zeros(field, total, parts[k].dims[v]);
                m.set_block(before, 0, &Matrix::identity(field, parts[k].dims[v]));
                m
            })
            .collect();
        Morphism { maps }
    }

    pub fn summand_projection(parts: &[Representation], k: usize) -> Morphism {
        let inc = Representation::summand_inclusion(parts, k);
        Morphism { maps: inc.maps.iter().map(Matrix::transpose).collect() }
    }

    /// Subrepresentation spanned per vertex by the columns of `bases`
    /// (assumed independent and stable), with its inclusion.
    pub fn subrep(&self, bases: &[Matrix]) -> (Representation, Morphism) {
        let field = self.field();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let q = self.algebra.quiver();
        let maps = (0..q.num_arrows())
            .map(|a| {
                let ar = q.arrow(a);
                let img = self.maps[a].mul(&bases[ar.source]);
                if dims[ar.target] == 0 || dims[ar.source] == 0 {
                    return Matrix::zeros(field, dims[ar.target], dims[ar.source]);
                }
                bases[ar.target].solve(&img).expect("subspace is stable under arrows")
            })
            .collect();
        let sub = Representation { algebra: self.algebra.clone(), dims, maps };
        (sub, Morphism { maps: bases.to_vec() })
    }

    /// Subrepresentation given by per-vertex subspaces.
    pub fn subrep_of(&self, spaces: &[Subspace]) -> (Representation, Morphism) {
        let bases: Vec<Matrix> = spaces.iter().map(|s| s.basis().clone()).collect();
        self.subrep(&bases)
    }

    /// Quotient by a stable family of subspaces, with the projection.
    pub fn quotient(&self, sub: &[Subspace]) -> (Representation, Morphism) {
        let field = self.field();
        let nv = self.dims.len();
        let mut comps = vec![];
        let mut projs = vec![];
        for v in 0..nv {
            let full = Subspace::full(field, self.dims[v]);
            let c = sub[v].complement_in(&full);
            let t = sub[v].basis().hstack(&c);
            let tinv = t.inverse().expect("subspace and complement span");
            let rows: Vec<usize> = (sub[v].dim()..self.dims[v]).collect();
            projs.push(tinv.select_rows(&rows));
            comps.push(c);
        }
        let q = self.algebra.quiver();
        let dims: Vec<usize> = comps.iter().map(Matrix::cols).collect();
        let maps = (0..q.num_arrows())
            .map(|a| {
                let ar = q.arrow(a);
                projs[ar.target].mul(&self.maps[a]).mul(&comps[ar.source])
            })
            .collect();
        let quot = Representation { algebra: self.algebra.clone(), dims, maps };
        (quot, Morphism { maps: projs })
    }

    /// Smallest subrepresentation containing the given vectors at the given
    /// vertices.
    pub fn generated_by(&self, gens: &[(usize, Vec<Scalar>)]) -> Vec<Subspace> {
        let field = self.field();
        let nv = self.dims.len();
        let mut spaces: Vec<Subspace> = (0..nv).map(|v| Subspace::zero(field, self.dims[v])).collect();
        let mut frontier: Vec<(usize, Vec<Scalar>)> = gens.to_vec();
        while let Some((v, x)) = frontier.pop() {
            if x.iter().all(Scalar::is_zero) || spaces[v].contains_vector(&x) {
                continue;
            }
            spaces[v] = spaces[v].sum(&Subspace::span_vectors(field, self.dims[v], std::slice::from_ref(&x)));
            for a in self.algebra.quiver().arrows_from(v) {
                let t = self.algebra.quiver().arrow(a).target;
                frontier.push((t, self.maps[a].mul_vec(&x)));
            }
        }
        spaces
    }

    /// The dual `D M = Hom_k(M, k)` over the opposite algebra.
    pub fn dual(&self) -> Representation {
        Representation {
            algebra: self.algebra.opposite(),
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// The same representation attached to an algebra with the same
    /// presentation.
    pub fn reattach(&self, algebra: &Arc<PresentedAlgebra>) -> Result<Representation> {
        if !self.algebra.same_as(algebra) {
            return Err(Error::AlgebraMismatch("presentations differ".into()));
        }
        Ok(Representation { algebra: algebra.clone(), dims: self.dims.clone(), maps: self.maps.clone() })
    }

    pub(crate) fn reattach_unchecked(self, algebra: Arc<PresentedAlgebra>) -> Representation {
        Representation { algebra, ..self }
    }

    /// Change of basis by invertible per-vertex matrices `g_v`: the result
    /// has maps `g_j M_α g_i^{-1}`.
    pub fn conjugate(&self, g: &[Matrix]) -> Representation {
        let q = self.algebra.quiver();
        let maps = (0..q.num_arrows())
            .map(|a| {
                let ar = q.arrow(a);
                g[ar.target].mul(&self.maps[a]).mul(&g[ar.source].inverse().expect("invertible"))
            })
            .collect();
        Representation { algebra: self.algebra.clone(), dims: self.dims.clone(), maps }
    }

    /// `rad M`: sum of the images of the arrows.
    pub fn radical(&self) -> (Representation, Morphism) {
        self.subrep_of(&self.radical_spaces())
    }

    pub fn radical_spaces(&self) -> Vec<Subspace> {
        let field = self.field();
        let q = self.algebra.quiver();
        (0..self.dims.len())
            .map(|v| {
                let mut s = Subspace::zero(field, self.dims[v]);
                for a in q.arrows_to(v) {
                    s = s.sum(&Subspace::span(&self.maps[a]));
                }
                s
            })
            .collect()
    }

    /// `top M = M / rad M`.
    pub fn top(&self) -> (Representation, Morphism) {
        self.quotient(&self.radical_spaces())
    }

    pub fn socle_spaces(&self) -> Vec<Subspace> {
        let field = self.field();
        let q = self.algebra.quiver();
        (0..self.dims.len())
            .map(|v| {
                let outs: Vec<usize> = q.arrows_from(v).collect();
                if outs.is_empty() {
                    return Subspace::full(field, self.dims[v]);
                }
                let stacked = outs
                    .iter()
                    .map(|&a| self.maps[a].clone())
                    .reduce(|acc, m| acc.vstack(&m))
                    .unwrap();
                Subspace::span(&stacked.kernel_basis())
            })
            .collect()
    }

    /// `soc M`: vectors killed by every arrow.
    pub fn socle(&self) -> (Representation, Morphism) {
        self.subrep_of(&self.socle_spaces())
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_spaces().iter().zip(&self.dims).map(|(s, d)| d - s.dim()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_spaces().iter().map(Subspace::dim).collect()
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.dim_vector_string())
    }
}

impl Morphism {
    pub fn zero(m: &Representation, n: &Representation) -> Morphism {
        let field = m.field();
        Morphism { maps: (0..m.dims.len()).map(|v| Matrix::zeros(field, n.dims[v], m.dims[v])).collect() }
    }

    pub fn identity(m: &Representation) -> Morphism {
        let field = m.field();
        Morphism { maps: m.dims.iter().map(|&d| Matrix::identity(field, d)).collect() }
    }

    /// `self ∘ g` (first `g`, then `self`).
    pub fn after(&self, g: &Morphism) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&g.maps).map(|(f, g)| f.mul(g)).collect() }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&other.maps).map(|(f, g)| f.add(g)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        Morphism { maps: self.maps.iter().map(|f| f.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Matrix::rank).sum()
    }

    /// Checks `f_j M_α = N_α f_i` for every arrow.
    pub fn is_homomorphism(&self, m: &Representation, n: &Representation) -> bool {
        let q = m.algebra.quiver();
        (0..q.num_arrows()).all(|a| {
            let ar = q.arrow(a);
            self.maps[ar.target].mul(&m.maps[a]) == n.maps[a].mul(&self.maps[ar.source])
        })
    }

    /// Block-diagonal matrix on the total spaces.
    pub fn total(&self) -> Matrix {
        let field = self.maps.first().map(Matrix::field).unwrap_or(Field::Rationals);
        self.maps.iter().fold(Matrix::zeros(field, 0, 0), |acc, m| acc.direct_sum(m))
    }

    pub fn from_total(t: &Matrix, m: &Representation, n: &Representation) -> Morphism {
        let (om, on) = (m.offsets(), n.offsets());
        Morphism {
            maps: (0..m.dims.len())
                .map(|v| t.block(on[v], om[v], n.dims[v], m.dims[v]))
                .collect(),
        }
    }

    /// Flattened entries, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.maps
            .iter()
            .flat_map(|m| (0..m.rows()).flat_map(move |i| (0..m.cols()).map(move |j| m.get(i, j).clone())))
            .collect()
    }

    /// Inverse of [`Morphism::flatten`] for maps `m → n`.
    pub fn unflatten(flat: &[Scalar], m: &Representation, n: &Representation) -> Morphism {
        let field = m.field();
        let mut k = 0;
        let maps = (0..m.dims.len())
            .map(|v| {
                let mut f = Matrix::zeros(field, n.dims[v], m.dims[v]);
                for i in 0..n.dims[v] {
                    for j in 0..m.dims[v] {
                        f.set(i, j, flat[k].clone());
                        k += 1;
                    }
                }
                f
            })
            .collect();
        Morphism { maps }
    }

    pub fn kernel_spaces(&self) -> Vec<Subspace> {
        self.maps.iter().map(|f| Subspace::span(&f.kernel_basis())).collect()
    }

    pub fn image_spaces(&self) -> Vec<Subspace> {
        self.maps.iter().map(Subspace::span).collect()
    }

    pub fn kernel(&self, m: &Representation) -> (Representation, Morphism) {
        m.subrep_of(&self.kernel_spaces())
    }

    pub fn image(&self, n: &Representation) -> (Representation, Morphism) {
        n.subrep_of(&self.image_spaces())
    }

    pub fn cokernel(&self, n: &Representation) -> (Representation, Morphism) {
        n.quotient(&self.image_spaces())
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|f| f.rank() == f.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|f| f.rank() == f.rows())
    }

    /// Transposed maps: the dual morphism `D N → D M`.
    pub fn dual(&self) -> Morphism {
        Morphism { maps: self.maps.iter().map(Matrix::transpose).collect() }
    }
}

#[cfg(test)]
mod tests;
