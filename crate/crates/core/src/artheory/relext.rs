//! The `C`-`C`-bimodule `Ext²_C(DC, C)`.

use std::sync::Arc;

use super::presentation::{ext1, injective_envelope, lift_to_syzygies, minimal_projective_presentation, tau_inverse};
use crate::algebra::{Bimodule, PresentedAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::modrep::{injective, is_isomorphic, projective, Morphism, Representation};

/// `C_C = ⊕ P_i`; position of basis path `b: i → k` inside vertex `k`.
fn regular_positions(c: &PresentedAlgebra) -> Vec<usize> {
    let mut pos = vec![0; c.dim()];
    for k in 0..c.num_vertices() {
        let mut off = 0;
        for i in 0..c.num_vertices() {
            for b in c.basis_between(i, k) {
                pos[b] = off;
                off += 1;
            }
        }
    }
    pos
}

/// `DC = ⊕ I_i`; position of the dual of `b: k → i` inside vertex `k`.
fn dual_positions(c: &PresentedAlgebra) -> Vec<usize> {
    let mut pos = vec![0; c.dim()];
    for k in 0..c.num_vertices() {
        let mut off = 0;
        for i in 0..c.num_vertices() {
            for b in c.basis_between(k, i) {
                pos[b] = off;
                off += 1;
            }
        }
    }
    pos
}

/// Left multiplication `b ↦ x·b` on `C_C`.
fn left_mult(c: &PresentedAlgebra, reg: &Representation, x: usize, pos: &[usize]) -> Morphism {
    let field = c.field();
    let mut maps: Vec<Matrix> = reg.dims().iter().map(|&d| Matrix::zeros(field, d, d)).collect();
    for b in 0..c.dim() {
        let k = c.basis()[b].end;
        for (idx, coef) in c.basis_product(x, b) {
            let cur = maps[k].get(pos[*idx], pos[b]).clone();
            maps[k].set(pos[*idx], pos[b], cur + coef.clone());
        }
    }
    Morphism { maps }
}

/// The endomorphism `φ ↦ x·φ`, `(x·φ)(z) = φ(z x)`, of `DC_C`.
fn dual_left_action(c: &PresentedAlgebra, dc: &Representation, x: usize, pos: &[usize]) -> Morphism {
    let field = c.field();
    let mut maps: Vec<Matrix> = dc.dims().iter().map(|&d| Matrix::zeros(field, d, d)).collect();
    for z in 0..c.dim() {
        let k = c.basis()[z].start;
        for (y, coef) in c.basis_product(z, x) {
            let cur = maps[k].get(pos[z], pos[*y]).clone();
            maps[k].set(pos[z], pos[*y], cur + coef.clone());
        }
    }
    Morphism { maps }
}

fn sum_of(parts: Vec<Representation>, c: &Arc<PresentedAlgebra>) -> Representation {
    if parts.is_empty() {
        Representation::zero(c)
    } else {
        Representation::direct_sum(&parts)
    }
}

/// `E = Ext²_C(DC, C)`: the right action comes from `C` acting on `DC`
/// through the first argument, the left action from left multiplication
/// on `C_C`. The right module is checked against `τ⁻¹ Ω⁻¹ C`.
pub fn relation_extension_bimodule(c: &Arc<PresentedAlgebra>) -> Result<Bimodule> {
    let field = c.field();
    let n = c.num_vertices();
    let reg = sum_of((0..n).map(|v| projective(c, v)).collect(), c);
    let dc = sum_of((0..n).map(|v| injective(c, v)).collect(), c);
    let pres = minimal_projective_presentation(&dc);
    let e = ext1(&pres.omega, &reg);
    let d = e.dim();
    let (rpos, dpos) = (regular_positions(c), dual_positions(c));
    let mut left = vec![];
    let mut right = vec![];
    for x in 0..c.dim() {
        let lam = left_mult(c, &reg, x, &rpos);
        let t = dual_left_action(c, &dc, x, &dpos);
        let t1 = lift_to_syzygies(&pres, &pres, &t)?;
        let t2 = lift_to_syzygies(&e.presentation, &e.presentation, &t1)?;
        let op = |f: &dyn Fn(&Morphism) -> Morphism| -> Result<Matrix> {
            let cols = (0..d)
                .map(|i| {
                    e.space
                        .coords(&f(&e.cocycle(i)).flatten())
                        .ok_or_else(|| Error::LiftingFailed("action leaves the cocycle space".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(if d == 0 { Matrix::zeros(field, 0, 0) } else { Matrix::from_columns(field, d, &cols) })
        };
        left.push(op(&|xi| lam.after(xi))?);
        right.push(op(&|xi| xi.after(&t2))?);
    }
    let labels = (1..=d).map(|i| format!("r{i}")).collect();
    let q = Bimodule { algebra: c.clone(), labels, left, right, mu: None };
    if d > 0 {
        let env = injective_envelope(&reg);
        let cosyz = env.map.cokernel(&env.module).0;
        let expected = tau_inverse(&cosyz);
        let got = q.right_module();
        if got.dims() != expected.dims() || !is_isomorphic(&got, &expected)? {
            return Err(Error::Verification("Ext²(DC, C) does not match τ⁻¹Ω⁻¹C as a right module".into()));
        }
    }
    Ok(q)
}
