//! Projective covers, presentations, syzygies, `τ`, `τ⁻¹` and `Ext`.

use std::sync::Arc;

use crate::algebra::PresentedAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::modrep::{hom_basis, injective, projective, Morphism, Representation};

/// The morphism `⊕_t P_{v_t} → n` sending the top of the `t`-th summand to
/// `xs[t] ∈ n_{v_t}`.
pub fn from_projectives(
    a: &Arc<PresentedAlgebra>,
    vertices: &[usize],
    xs: &[Vec<Scalar>],
    n: &Representation,
) -> Morphism {
    let field = a.field();
    let nv = a.num_vertices();
    let maps = (0..nv)
        .map(|k| {
            let mut cols = vec![];
            for (t, &j) in vertices.iter().enumerate() {
                for b in a.basis_between(j, k) {
                    let p = &a.basis()[b];
                    cols.push(n.path_matrix(p).mul_vec(&xs[t]));
                }
            }
            if cols.is_empty() {
                Matrix::zeros(field, n.dims()[k], 0)
            } else {
                Matrix::from_columns(field, n.dims()[k], &cols)
            }
        })
        .collect();
    Morphism { maps }
}

/// Position of the top of summand `t` of `⊕_t P_{v_t}` inside vertex `v_t`.
fn top_position(a: &PresentedAlgebra, vertices: &[usize], t: usize) -> usize {
    let j = vertices[t];
    let before: usize = vertices[..t].iter().map(|&i| a.basis_between(i, j).len()).sum();
    let trivial = a.basis_between(j, j);
    let e = a.basis_index(&crate::algebra::Path::trivial(j)).expect("trivial path is reduced");
    before + trivial.iter().position(|&b| b == e).expect("e_j is a path from j to j")
}

fn free_module(a: &Arc<PresentedAlgebra>, vertices: &[usize]) -> Representation {
    let parts: Vec<Representation> = vertices.iter().map(|&v| projective(a, v)).collect();
    if parts.is_empty() {
        Representation::zero(a)
    } else {
        Representation::direct_sum(&parts)
    }
}

/// A projective cover `P → M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    /// Tops of the indecomposable summands of `P`, in order.
    pub vertices: Vec<usize>,
    pub module: Representation,
    pub map: Morphism,
}

pub fn projective_cover(m: &Representation) -> ProjectiveCover {
    let a = m.algebra();
    let field = a.field();
    let rad = m.radical_spaces();
    let mut vertices = vec![];
    let mut xs = vec![];
    for (v, r) in rad.iter().enumerate() {
        let full = Subspace::full(field, m.dims()[v]);
        for c in r.complement_in(&full).columns() {
            vertices.push(v);
            xs.push(c);
        }
    }
    let module = free_module(a, &vertices);
    let map = from_projectives(a, &vertices, &xs, m);
    ProjectiveCover { vertices, module, map }
}

/// `P₁ → P₀ → M → 0` with `Ω M = ker(P₀ → M)` kept explicitly.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p0: ProjectiveCover,
    pub omega: Representation,
    /// `Ω M → P₀`.
    pub omega_incl: Morphism,
    pub p1: ProjectiveCover,
    /// `P₁ → P₀`.
    pub d1: Morphism,
}

pub fn minimal_projective_presentation(m: &Representation) -> Presentation {
    let p0 = projective_cover(m);
    let (omega, omega_incl) = p0.map.kernel(&p0.module);
    let p1 = projective_cover(&omega);
    let d1 = omega_incl.after(&p1.map);
    Presentation { p0, omega, omega_incl, p1, d1 }
}

/// `Ωⁿ M`.
pub fn syzygy(m: &Representation, n: usize) -> Representation {
    let mut cur = m.clone();
    for _ in 0..n {
        let c = projective_cover(&cur);
        cur = c.map.kernel(&c.module).0;
    }
    cur
}

pub fn is_projective(m: &Representation) -> bool {
    projective_cover(m).module.dim() == m.dim()
}

pub fn is_injective(m: &Representation) -> bool {
    is_projective(&m.dual())
}

/// Projective dimension, or `None` beyond `bound`.
pub fn projective_dimension(m: &Representation, bound: usize) -> Option<usize> {
    let mut cur = m.clone();
    for d in 0..=bound {
        if cur.is_zero() {
            return Some(d.saturating_sub(1));
        }
        let c = projective_cover(&cur);
        if c.module.dim() == cur.dim() {
            return Some(d);
        }
        cur = c.map.kernel(&c.module).0;
    }
    None
}

/// `ν` applied to a map `⊕_s P_{i_s} → ⊕_t P_{j_t}`: the corresponding map
/// `⊕_s I_{i_s} → ⊕_t I_{j_t}`.
fn nakayama_map(
    a: &Arc<PresentedAlgebra>,
    src: &[usize],
    tgt: &[usize],
    f: &Morphism,
) -> (Representation, Representation, Morphism) {
    let field = a.field();
    let nv = a.num_vertices();
    let inj = |vs: &[usize]| {
        let parts: Vec<Representation> = vs.iter().map(|&v| injective(a, v)).collect();
        if parts.is_empty() {
            Representation::zero(a)
        } else {
            Representation::direct_sum(&parts)
        }
    };
    let (isrc, itgt) = (inj(src), inj(tgt));
    // u[t][s] = image of the top of P_{i_s} in P_{j_t}, in the basis of
    // paths j_t → i_s.
    let u: Vec<Vec<Vec<Scalar>>> = (0..tgt.len())
        .map(|t| {
            (0..src.len())
                .map(|s| {
                    let i = src[s];
                    let col = top_position(a, src, s);
                    let before: usize = tgt[..t].iter().map(|&j| a.basis_between(j, i).len()).sum();
                    let len = a.basis_between(tgt[t], i).len();
                    (0..len).map(|r| f.maps[i].get(before + r, col).clone()).collect()
                })
                .collect()
        })
        .collect();
    let maps = (0..nv)
        .map(|k| {
            let mut mat = Matrix::zeros(field, itgt.dims()[k], isrc.dims()[k]);
            let mut row0 = 0;
            for (t, &j) in tgt.iter().enumerate() {
                let zs = a.basis_between(k, j);
                let mut col0 = 0;
                for (s, &i) in src.iter().enumerate() {
                    let ys = a.basis_between(k, i);
                    let us = a.basis_between(j, i);
                    for (zi, &z) in zs.iter().enumerate() {
                        for (ui, &up) in us.iter().enumerate() {
                            let c = &u[t][s][ui];
                            if c.is_zero() {
                                continue;
                            }
                            for (idx, coef) in a.basis_product(z, up) {
                                let yi = ys.iter().position(|y| y == idx).expect("product is k → i");
                                let cur = mat.get(row0 + zi, col0 + yi).clone();
                                mat.set(row0 + zi, col0 + yi, cur + c * coef);
                            }
                        }
                    }
                    col0 += ys.len();
                }
                row0 += zs.len();
            }
            mat
        })
        .collect();
    (isrc, itgt, Morphism { maps })
}

/// `τ M = ker(ν P₁ → ν P₀)` for a minimal presentation.
pub fn tau(m: &Representation) -> Representation {
    let pres = minimal_projective_presentation(m);
    let a = m.algebra();
    let (isrc, _, nf) = nakayama_map(a, &pres.p1.vertices, &pres.p0.vertices, &pres.d1);
    nf.kernel(&isrc).0
}

/// `τ⁻¹ M = D τ_{A^op} D M`.
pub fn tau_inverse(m: &Representation) -> Representation {
    let t = tau(&m.dual()).dual();
    t.reattach(m.algebra()).expect("double opposite is the original algebra")
}

/// A subspace of flattened morphisms together with a quotient by a
/// subspace of it.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    /// Coset representatives (columns).
    pub reps: Matrix,
    /// The subspace quotiented out.
    pub zero: Subspace,
    joined: Matrix,
}

impl QuotientSpace {
    pub fn new(total: &Subspace, zero: Subspace) -> QuotientSpace {
        let reps = zero.complement_in(total);
        let joined = reps.hstack(zero.basis());
        QuotientSpace { reps, zero, joined }
    }

    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    /// Coordinates of the class of `v`, which must lie in the total space.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let col = Matrix::from_columns(self.reps.field(), self.reps.rows(), &[v.to_vec()]);
        let sol = self.joined.solve(&col)?;
        Some((0..self.dim()).map(|i| sol.get(i, 0).clone()).collect())
    }

    pub fn rep(&self, i: usize) -> Vec<Scalar> {
        self.reps.column(i)
    }
}

/// `Ext¹(M, N)` as `Hom(Ω M, N)` modulo restrictions of maps `P₀ → N`,
/// with cocycles stored as flattened maps `Ω M → N`.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    pub presentation: Presentation,
    pub target: Representation,
    pub space: QuotientSpace,
}

impl ExtSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn cocycle(&self, i: usize) -> Morphism {
        Morphism::unflatten(&self.space.rep(i), &self.presentation.omega, &self.target)
    }
}

fn flat_span(field: crate::exactlin::Field, len: usize, ms: &[Morphism]) -> Subspace {
    if len == 0 {
        return Subspace::zero(field, 0);
    }
    let vs: Vec<Vec<Scalar>> = ms.iter().map(Morphism::flatten).collect();
    Subspace::span_vectors(field, len, &vs)
}

fn flat_len(m: &Representation, n: &Representation) -> usize {
    m.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum()
}

pub fn ext1(m: &Representation, n: &Representation) -> ExtSpace {
    let pres = minimal_projective_presentation(m);
    let field = m.field();
    let len = flat_len(&pres.omega, n);
    let total = flat_span(field, len, &hom_basis(&pres.omega, n));
    let restricted: Vec<Morphism> =
        hom_basis(&pres.p0.module, n).iter().map(|g| g.after(&pres.omega_incl)).collect();
    let zero = flat_span(field, len, &restricted);
    ExtSpace { presentation: pres, target: n.clone(), space: QuotientSpace::new(&total, zero) }
}

/// `Ext^d(M, N)` for `d ∈ {1, 2}`.
pub fn ext(m: &Representation, n: &Representation, degree: usize) -> Result<ExtSpace> {
    match degree {
        1 => Ok(ext1(m, n)),
        2 => Ok(ext1(&syzygy(m, 1), n)),
        _ => Err(Error::Precondition(format!("Ext in degree {degree} is not supported"))),
    }
}

/// Solves `incl ∘ r = g` for `r`, given a monomorphism `incl`.
pub fn factor_through_mono(incl: &Morphism, g: &Morphism) -> Option<Morphism> {
    let maps = incl
        .maps
        .iter()
        .zip(&g.maps)
        .map(|(i, gv)| {
            if i.cols() == 0 {
                return Some(Matrix::zeros(i.field(), 0, gv.cols()));
            }
            i.solve(gv)
        })
        .collect::<Option<Vec<_>>>()?;
    Some(Morphism { maps })
}

/// Lifts `φ: M → N` along projective covers: `f₀: P₀(M) → P₀(N)` with
/// `π_N f₀ = φ π_M`.
pub fn lift_to_covers(pm: &ProjectiveCover, pn: &ProjectiveCover, phi: &Morphism) -> Result<Morphism> {
    let a = pm.module.algebra();
    let xs = pm
        .vertices
        .iter()
        .enumerate()
        .map(|(t, &v)| {
            let top = top_position(a, &pm.vertices, t);
            let target = phi.maps[v].mul(&pm.map.maps[v]).column(top);
            let rhs = Matrix::from_columns(a.field(), target.len(), &[target]);
            let sol = pn.map.maps[v].solve(&rhs).ok_or_else(|| {
                Error::LiftingFailed("projective cover map is not surjective".into())
            })?;
            Ok(sol.column(0))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(from_projectives(a, &pm.vertices, &xs, &pn.module))
}

/// The map `Ω M → Ω N` induced by `φ: M → N` on minimal presentations.
pub fn lift_to_syzygies(pm: &Presentation, pn: &Presentation, phi: &Morphism) -> Result<Morphism> {
    let f0 = lift_to_covers(&pm.p0, &pn.p0, phi)?;
    factor_through_mono(&pn.omega_incl, &f0.after(&pm.omega_incl))
        .ok_or_else(|| Error::LiftingFailed("lift does not preserve syzygies".into()))
}

/// `\overline{Hom}(M, N)`: maps modulo those factoring through an
/// injective, as a quotient of flattened morphisms.
pub fn hom_mod_injectives(m: &Representation, n: &Representation) -> QuotientSpace {
    let field = m.field();
    let len = flat_len(m, n);
    let total = flat_span(field, len, &hom_basis(m, n));
    // Maps factoring through an injective factor through the injective
    // envelope of M.
    let env = injective_envelope(m);
    let through: Vec<Morphism> =
        hom_basis(&env.module, n).iter().map(|g| g.after(&env.map)).collect();
    QuotientSpace::new(&total, flat_span(field, len, &through))
}

/// `\underline{Hom}(M, N)`: maps modulo those factoring through a
/// projective.
pub fn hom_mod_projectives(m: &Representation, n: &Representation) -> QuotientSpace {
    let field = m.field();
    let len = flat_len(m, n);
    let total = flat_span(field, len, &hom_basis(m, n));
    let cover = projective_cover(n);
    let through: Vec<Morphism> =
        hom_basis(m, &cover.module).iter().map(|g| cover.map.after(g)).collect();
    QuotientSpace::new(&total, flat_span(field, len, &through))
}

/// An injective envelope `M → I`.
#[derive(Clone, Debug)]
pub struct InjectiveEnvelope {
    pub vertices: Vec<usize>,
    pub module: Representation,
    pub map: Morphism,
}

pub fn injective_envelope(m: &Representation) -> InjectiveEnvelope {
    let c = projective_cover(&m.dual());
    let a = m.algebra();
    InjectiveEnvelope {
        vertices: c.vertices,
        module: c.module.dual().reattach(a).expect("double opposite"),
        map: c.map.dual(),
    }
}
