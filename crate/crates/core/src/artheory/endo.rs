//! `B = End_A(M)` with `M` as a `B`-`A`-bimodule, and the functors
//! `Hom_A(M, −)`, `Ext¹_A(M, −)`, `− ⊗_B M` and `Tor₁^B(−, M)`.

use std::sync::Arc;

use super::presentation::{ext1, lift_to_syzygies, projective_cover};
use crate::algebra::{quiverize, IdempotentHint, Path, PresentedAlgebra, StructureAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::modrep::{hom_basis, is_indecomposable, is_isomorphic, Morphism, Representation};

#[derive(Clone, Debug)]
pub struct EndAlgebra {
    /// `B`, with vertex `i` the summand `M_i`.
    pub algebra: Arc<PresentedAlgebra>,
    pub summands: Vec<Representation>,
    /// `M = ⊕ M_i` over `A`.
    pub module: Representation,
    /// `action[b]`: the endomorphism `m ↦ b·m` for each basis path `b` of `B`.
    pub action: Vec<Morphism>,
}

fn flat(t: &Matrix) -> Vec<Scalar> {
    (0..t.rows()).flat_map(|i| (0..t.cols()).map(move |j| t.get(i, j).clone())).collect()
}

/// `End_A(⊕ M_i)` for pairwise non-isomorphic indecomposables `M_i`, with
/// `e_i B e_j = Hom(M_j, M_i)` and multiplication by composition.
pub fn end_algebra(summands: &[Representation], labels: &[String]) -> Result<EndAlgebra> {
    if summands.is_empty() {
        return Err(Error::Precondition("End of the zero module".into()));
    }
    for (i, x) in summands.iter().enumerate() {
        if !is_indecomposable(x)? {
            return Err(Error::Precondition(format!("summand {} is decomposable", i + 1)));
        }
        for y in &summands[..i] {
            if is_isomorphic(x, y)? {
                return Err(Error::NotBasic("module has repeated summands".into()));
            }
        }
    }
    let field = summands[0].field();
    let m = Representation::direct_sum(summands);
    let n = m.dim();
    let incl: Vec<Matrix> =
        (0..summands.len()).map(|i| Representation::summand_inclusion(summands, i).total()).collect();
    let proj: Vec<Matrix> =
        (0..summands.len()).map(|i| Representation::summand_projection(summands, i).total()).collect();
    let mut totals = vec![];
    let mut names = vec![];
    for i in 0..summands.len() {
        for j in 0..summands.len() {
            for (k, h) in hom_basis(&summands[j], &summands[i]).iter().enumerate() {
                totals.push(incl[i].mul(&h.total()).mul(&proj[j]));
                names.push(format!("h{}_{}_{}", i + 1, j + 1, k + 1));
            }
        }
    }
    let big = Matrix::from_columns(field, n * n, &totals.iter().map(flat).collect::<Vec<_>>());
    let coords = |t: &Matrix| -> Vec<Scalar> {
        let f = flat(t);
        big.solve(&Matrix::from_columns(field, n * n, &[f])).expect("closed under composition").column(0)
    };
    let idems: Vec<Vec<Scalar>> = (0..summands.len()).map(|i| coords(&incl[i].mul(&proj[i]))).collect();
    let mut one = vec![field.zero(); totals.len()];
    for e in &idems {
        for (o, x) in one.iter_mut().zip(e) {
            *o += x;
        }
    }
    let sa = StructureAlgebra::from_fn(field, names, one, |i, j| coords(&totals[i].mul(&totals[j])));
    let hint = IdempotentHint {
        idempotents: labels.iter().cloned().zip(idems).collect(),
        arrows: vec![],
    };
    let qz = quiverize(&sa, Some(&hint), crate::algebra::DEFAULT_LENGTH_CAP)?;
    let b = qz.algebra.clone();
    let action = (0..b.dim())
        .map(|p| {
            let mut t = Matrix::zeros(field, n, n);
            for (k, tk) in totals.iter().enumerate() {
                let c = qz.basis_images.get(k, p);
                if !c.is_zero() {
                    t = t.add(&tk.scale(c));
                }
            }
            Morphism::from_total(&t, &m, &m)
        })
        .collect();
    Ok(EndAlgebra { algebra: b, summands: summands.to_vec(), module: m, action })
}

impl EndAlgebra {
    fn vertex_path(&self, v: usize) -> usize {
        self.algebra.basis_index(&Path::trivial(v)).expect("trivial paths are reduced")
    }

    fn arrow_path(&self, a: usize) -> usize {
        self.algebra.basis_index(&Path::arrow(self.algebra.quiver(), a)).expect("arrows are reduced")
    }

    /// Right `B`-module on `k^d` where `ops[b]` is `v ↦ v·b` for basis path `b`.
    fn module_from_operators(&self, d: usize, op: impl Fn(usize) -> Matrix) -> Result<Representation> {
        let b = &self.algebra;
        let field = b.field();
        let nv = b.num_vertices();
        let bases: Vec<Matrix> = (0..nv)
            .map(|v| if d == 0 { Matrix::zeros(field, 0, 0) } else { op(self.vertex_path(v)).column_space() })
            .collect();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let maps = (0..b.quiver().num_arrows())
            .map(|a| {
                let ar = b.quiver().arrow(a);
                if dims[ar.source] == 0 || dims[ar.target] == 0 {
                    return Matrix::zeros(field, dims[ar.target], dims[ar.source]);
                }
                let img = op(self.arrow_path(a)).mul(&bases[ar.source]);
                bases[ar.target].solve(&img).expect("arrows respect idempotents")
            })
            .collect();
        Representation::new(b.clone(), dims, maps)
    }

    /// `Hom_A(M, X)` as a right `B`-module, `f·b = f ∘ b`.
    pub fn hom_functor(&self, x: &Representation) -> Result<Representation> {
        let homs = hom_basis(&self.module, x);
        let d = homs.len();
        let field = x.field();
        if d == 0 {
            return Ok(Representation::zero(&self.algebra));
        }
        let len = homs[0].flatten().len();
        let hmat = Matrix::from_columns(field, len, &homs.iter().map(Morphism::flatten).collect::<Vec<_>>());
        self.module_from_operators(d, |p| {
            let cols: Vec<Vec<Scalar>> = homs
                .iter()
                .map(|h| {
                    let img = h.after(&self.action[p]).flatten();
                    hmat.solve(&Matrix::from_columns(field, len, &[img])).expect("stays in Hom").column(0)
                })
                .collect();
            Matrix::from_columns(field, d, &cols)
        })
    }

    /// `Ext¹_A(M, X)` as a right `B`-module, acting through lifts of the
    /// endomorphisms `b` to `Ω M`.
    pub fn ext1_functor(&self, x: &Representation) -> Result<Representation> {
        let e = ext1(&self.module, x);
        let d = e.dim();
        if d == 0 {
            return Ok(Representation::zero(&self.algebra));
        }
        let field = x.field();
        let lifts: Vec<Morphism> = self
            .action
            .iter()
            .map(|b| lift_to_syzygies(&e.presentation, &e.presentation, b))
            .collect::<Result<_>>()?;
        self.module_from_operators(d, |p| {
            let cols: Vec<Vec<Scalar>> = (0..d)
                .map(|i| e.space.coords(&e.cocycle(i).after(&lifts[p]).flatten()).expect("cocycle"))
                .collect();
            Matrix::from_columns(field, d, &cols)
        })
    }

    /// `Y ⊗_B M` as the quotient of `Y ⊗_k M` by `y·b ⊗ m − y ⊗ b·m`, with
    /// the projection from `Y ⊗_k M` at each vertex of `A`.
    fn tensor_parts(&self, y: &Representation) -> (Representation, Representation, Morphism) {
        let a = self.module.algebra();
        let field = a.field();
        let dy = y.dim();
        let mdims = self.module.dims().to_vec();
        let big_dims: Vec<usize> = mdims.iter().map(|d| d * dy).collect();
        let kron_id = |m: &Matrix| -> Matrix {
            let mut out = Matrix::zeros(field, dy * m.rows(), dy * m.cols());
            for k in 0..dy {
                out.set_block(k * m.rows(), k * m.cols(), m);
            }
            out
        };
        let big_maps: Vec<Matrix> = self.module.maps().iter().map(kron_id).collect();
        let big = Representation::new_unchecked(a.clone(), big_dims.clone(), big_maps);
        let b = &self.algebra;
        let gens: Vec<usize> = (0..b.num_vertices())
            .map(|v| self.vertex_path(v))
            .chain((0..b.quiver().num_arrows()).map(|x| self.arrow_path(x)))
            .collect();
        let ractions: Vec<Matrix> = gens.iter().map(|&g| y.action_matrix(&b.basis_vector(g))).collect();
        let rels: Vec<Subspace> = (0..a.num_vertices())
            .map(|v| {
                let dm = mdims[v];
                let mut vecs = vec![];
                for (gi, &g) in gens.iter().enumerate() {
                    let left = self.action[g].maps[v].clone();
                    for yi in 0..dy {
                        let yb = ractions[gi].column(yi);
                        for mi in 0..dm {
                            let mut vec = vec![field.zero(); dy * dm];
                            for (k, c) in yb.iter().enumerate() {
                                if !c.is_zero() {
                                    vec[k * dm + mi] += c;
                                }
                            }
                            for r in 0..dm {
                                let c = left.get(r, mi);
                                if !c.is_zero() {
                                    vec[yi * dm + r] -= c;
                                }
                            }
                            vecs.push(vec);
                        }
                    }
                }
                Subspace::span_vectors(field, dy * dm, &vecs)
            })
            .collect();
        let (t, proj) = big.quotient(&rels);
        (big, t, proj)
    }

    pub fn tensor(&self, y: &Representation) -> Representation {
        self.tensor_parts(y).1
    }

    /// `g ⊗ 1: Y ⊗_B M → Y' ⊗_B M`.
    pub fn tensor_morphism(&self, y: &Representation, y2: &Representation, g: &Morphism) -> (Representation, Representation, Morphism) {
        let (_, t1, p1) = self.tensor_parts(y);
        let (_, t2, p2) = self.tensor_parts(y2);
        let field = y.field();
        let gt = g.total();
        let maps = (0..t1.dims().len())
            .map(|v| {
                let dm = self.module.dims()[v];
                let mut big = Matrix::zeros(field, y2.dim() * dm, y.dim() * dm);
                for i in 0..y2.dim() {
                    for j in 0..y.dim() {
                        let c = gt.get(i, j);
                        if c.is_zero() {
                            continue;
                        }
                        for r in 0..dm {
                            big.set(i * dm + r, j * dm + r, c.clone());
                        }
                    }
                }
                let p = &p1.maps[v];
                if p.rows() == 0 {
                    return Matrix::zeros(field, t2.dims()[v], 0);
                }
                let sec = p.solve(&Matrix::identity(field, p.rows())).expect("projection is onto");
                p2.maps[v].mul(&big).mul(&sec)
            })
            .collect();
        (t1, t2, Morphism { maps })
    }

    /// `Tor₁^B(Y, M) = ker(K ⊗ M → Q₀ ⊗ M)` for `0 → K → Q₀ → Y → 0`.
    pub fn tor1(&self, y: &Representation) -> Representation {
        let cover = projective_cover(y);
        let (k, incl) = cover.map.kernel(&cover.module);
        let (tk, _, f) = self.tensor_morphism(&k, &cover.module, &incl);
        f.kernel(&tk).0
    }
}

/// `gl.dim A ≤ 1`: the radical of every indecomposable projective is
/// projective.
pub fn is_hereditary(a: &Arc<PresentedAlgebra>) -> bool {
    (0..a.num_vertices()).all(|v| {
        let r = crate::modrep::projective(a, v).radical().0;
        projective_cover(&r).module.dim() == r.dim()
    })
}
