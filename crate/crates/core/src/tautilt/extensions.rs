//! How τ-slices behave under quotients, one-point extensions and
//! split-by-nilpotent extensions.

use std::sync::Arc;

use super::rigid::is_tau_rigid;
use super::slices::{is_complete_tau_slice, is_tau_slice, SliceCandidate};
use crate::algebra::{one_point_extension, split_extension_map, Bimodule, PresentedAlgebra, QuotientMap};
use crate::artheory::{
    almost_split_sequence, almost_split_starting, is_injective, is_projective, tau, tau_inverse,
};
use crate::error::{Error, Result};
use crate::exactlin::{Scalar, Subspace};
use crate::modrep::{
    annihilator, decompose, fac_member, inflate, is_isomorphic, projective, restrict_scalars, sub_member,
    Representation,
};

fn iso(x: &Representation, y: &Representation) -> Result<bool> {
    Ok(x.dims() == y.dims() && (x.is_zero() || is_isomorphic(x, y)?))
}

/// Moves `m` to an algebra with the same labelled presentation, matching
/// vertices and arrows by label.
pub fn transport(m: &Representation, target: &Arc<PresentedAlgebra>) -> Result<Representation> {
    let (src, dst) = (m.algebra().quiver(), target.quiver());
    if src.num_vertices() != dst.num_vertices() || src.num_arrows() != dst.num_arrows() {
        return Err(Error::AlgebraMismatch("quivers differ in size".into()));
    }
    let vmap: Vec<usize> = src
        .vertices()
        .iter()
        .map(|l| dst.vertex_index(l).ok_or_else(|| Error::UnknownLabel(l.clone())))
        .collect::<Result<_>>()?;
    let mut dims = vec![0; dst.num_vertices()];
    for (v, &w) in vmap.iter().enumerate() {
        dims[w] = m.dims()[v];
    }
    let mut maps = vec![None; dst.num_arrows()];
    for (a, ar) in src.arrows().iter().enumerate() {
        let b = dst.arrow_index(&ar.label).ok_or_else(|| Error::UnknownLabel(ar.label.clone()))?;
        maps[b] = Some(m.map(a).clone());
    }
    Representation::new(target.clone(), dims, maps.into_iter().map(Option::unwrap).collect())
}

fn candidate_over(members: Vec<Representation>) -> Result<SliceCandidate> {
    let algebra = members[0].algebra().clone();
    Ok(SliceCandidate { algebra, members })
}

#[derive(Clone, Debug)]
pub struct QuotientPreservation {
    pub quotient: QuotientMap,
    pub members: Vec<Representation>,
    pub tau_slice: bool,
    pub complete: bool,
    /// `τ_{A/I} X ≅ τ_A X` for every member.
    pub tau_agree: bool,
    pub tau_inverse_agree: bool,
    /// Almost split sequences ending and starting at members have the same
    /// middle terms over `A` and `A/I`.
    pub ass_agree: bool,
}

/// Moves a τ-slice to `A/I` for an ideal `I` inside its annihilator and
/// checks what survives.
pub fn quotient_preservation_check(s: &SliceCandidate, ideal: &[Vec<Scalar>]) -> Result<QuotientPreservation> {
    let map = s.algebra.quotient_map(ideal)?;
    let members: Vec<Representation> = s
        .members
        .iter()
        .map(|m| inflate(m, &map))
        .collect::<Result<_>>()
        .map_err(|e| match e {
            Error::IdealActsNonzero(why) => Error::Precondition(format!("ideal not inside the annihilator: {why}")),
            e => e,
        })?;
    let back = |x: &Representation| restrict_scalars(x, &map);
    let mut tau_agree = true;
    let mut tau_inverse_agree = true;
    let mut ass_agree = true;
    for (x, y) in s.members.iter().zip(&members) {
        tau_agree &= iso(&tau(x), &back(&tau(y))?)?;
        tau_inverse_agree &= iso(&tau_inverse(x), &back(&tau_inverse(y))?)?;
        if is_projective(x) != is_projective(y) || is_injective(x) != is_injective(y) {
            ass_agree = false;
            continue;
        }
        if !is_projective(x) {
            let (e1, e2) = (almost_split_sequence(x)?, almost_split_sequence(y)?);
            ass_agree &= iso(&e1.middle, &back(&e2.middle)?)?;
        }
        if !is_injective(x) {
            let (e1, e2) = (almost_split_starting(x)?, almost_split_starting(y)?);
            ass_agree &= iso(&e1.middle, &back(&e2.middle)?)?;
        }
    }
    let moved = candidate_over(members.clone())?;
    Ok(QuotientPreservation {
        quotient: map,
        members,
        tau_slice: is_tau_slice(&moved)?,
        complete: is_complete_tau_slice(&moved)?,
        tau_agree,
        tau_inverse_agree,
        ass_agree,
    })
}

#[derive(Clone, Debug)]
pub struct OnePointReport {
    pub algebra: Arc<PresentedAlgebra>,
    /// `σ ⊕ P_ω` in the strong form, `σ` in the weak form, over `A[X]`.
    pub slice: SliceCandidate,
    pub p_omega: Representation,
    /// `X ∈ add σ`; otherwise `X ∈ Fac(τ⁻¹σ)`.
    pub strong: bool,
    pub verified: bool,
}

/// `B = A[X]` for `X ∈ add σ` (then `σ ⊕ P_ω` should be a complete τ-slice)
/// or `X ∈ Fac(τ⁻¹σ)` (then `σ` should stay a τ-slice).
pub fn onepoint_slice_extend(
    s: &SliceCandidate,
    x: &Representation,
    vertex: &str,
    arrow_labels: &[&str],
) -> Result<OnePointReport> {
    if x.is_zero() {
        return Err(Error::Precondition("extension by the zero module".into()));
    }
    let a = &s.algebra;
    let parts: Vec<Representation> = decompose(x)?.into_iter().map(|p| p.module).collect();
    let strong = parts.iter().all(|p| s.contains(p));
    let ts = tau_inverse(&s.module());
    if !strong && (ts.is_zero() || !fac_member(x, &ts)) {
        return Err(Error::Precondition("module is neither in add σ nor in Fac(τ⁻¹σ)".into()));
    }
    let b = one_point_extension(a, x, vertex, arrow_labels)?;
    let omega = b
        .quiver()
        .vertex_index(vertex)
        .ok_or_else(|| Error::Verification("extension vertex missing".into()))?;
    let back = b.quotient_map(&[b.idempotent(omega)])?;
    let lift = |m: &Representation| restrict_scalars(&transport(m, &back.target)?, &back);
    let mut members: Vec<Representation> = s.members.iter().map(lift).collect::<Result<_>>()?;
    let p_omega = projective(&b, omega);
    if strong {
        members.push(p_omega.clone());
    }
    let slice = candidate_over(members)?;
    let verified = if strong { is_complete_tau_slice(&slice)? } else { is_tau_slice(&slice)? };
    Ok(OnePointReport { algebra: b, slice, p_omega, strong, verified })
}

#[derive(Clone, Debug)]
pub struct SplitExReport {
    pub extension: QuotientMap,
    /// `Q` as a right `C`-module.
    pub q_right: Representation,
    /// `D(_C Q)` as a right `C`-module.
    pub q_left_dual: Representation,
    pub condition_fac: bool,
    pub condition_sub: bool,
    pub slice_preserved: bool,
    /// `Ann_B σ = Q` inside the extension.
    pub annihilator_is_q: bool,
}

/// Checks `Q_C ∈ Fac(τ⁻¹σ)` and `D(_C Q) ∈ Sub(τσ)` against whether `σ`
/// stays a complete τ-slice over `C ⋉ Q`.
pub fn splitex_check(s: &SliceCandidate, q: &Bimodule) -> Result<SplitExReport> {
    let c = &s.algebra;
    if !q.algebra.same_as(c) {
        return Err(Error::AlgebraMismatch("bimodule lives over another algebra".into()));
    }
    let m = s.module();
    let q_right = q.right_module().reattach(c)?;
    let q_left_dual = transport(&q.left_module_op().dual(), c)?;
    let ti = tau_inverse(&m);
    let t = tau(&m);
    let condition_fac = q_right.is_zero() || (!ti.is_zero() && fac_member(&q_right, &ti));
    let condition_sub = q_left_dual.is_zero() || (!t.is_zero() && sub_member(&q_left_dual, &t));
    let extension = split_extension_map(q)?;
    let lift = |x: &Representation| restrict_scalars(&transport(x, &extension.target)?, &extension);
    let members: Vec<Representation> = s.members.iter().map(lift).collect::<Result<_>>()?;
    let over_b = candidate_over(members)?;
    let bm = over_b.module();
    let slice_preserved = is_tau_rigid(&bm) && is_complete_tau_slice(&over_b)?;
    let b = &extension.source;
    let ann = Subspace::span(&annihilator(&bm));
    let kernel = Subspace::span(&extension.kernel);
    let annihilator_is_q = ann == kernel || (ann.dim() == 0 && kernel.dim() == 0);
    debug_assert_eq!(ann.ambient(), b.dim());
    Ok(SplitExReport {
        extension,
        q_right,
        q_left_dual,
        condition_fac,
        condition_sub,
        slice_preserved,
        annihilator_is_q,
    })
}
