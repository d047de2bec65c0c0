//! Almost split sequences via the socle of `Ext¹(M, τM)`.

use super::presentation::{ext1, is_projective, lift_to_syzygies, tau, tau_inverse};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::modrep::{
    decompose, end_basis, end_radical, is_indecomposable, Morphism, Representation,
};

/// `0 → left → middle → right → 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub left: Representation,
    pub middle: Representation,
    pub right: Representation,
    pub inclusion: Morphism,
    pub surjection: Morphism,
    /// Indecomposable summands of the middle term.
    pub middle_summands: Vec<Representation>,
}

impl ShortExactSequence {
    /// Exactness checked by ranks at every vertex.
    pub fn is_exact(&self) -> bool {
        self.inclusion.is_homomorphism(&self.left, &self.middle)
            && self.surjection.is_homomorphism(&self.middle, &self.right)
            && self.inclusion.is_injective()
            && self.surjection.is_surjective()
            && self.surjection.after(&self.inclusion).is_zero()
            && self.left.dim() + self.right.dim() == self.middle.dim()
    }

    /// Non-split iff no section of the surjection exists.
    pub fn is_split(&self) -> bool {
        let homs = crate::modrep::hom_basis(&self.right, &self.middle);
        let id = Morphism::identity(&self.right).flatten();
        if homs.is_empty() {
            return self.right.is_zero();
        }
        let cols: Vec<_> = homs.iter().map(|h| self.surjection.after(h).flatten()).collect();
        if id.is_empty() {
            return true;
        }
        let m = Matrix::from_columns(self.right.field(), id.len(), &cols);
        Subspace::span(&m).contains_vector(&id)
    }
}

/// Pushout of `0 → Ω M → P₀ → M → 0` along `ξ: Ω M → L`.
fn pushout(
    omega_incl: &Morphism,
    p0: &Representation,
    cover: &Morphism,
    m: &Representation,
    xi: &Morphism,
    l: &Representation,
) -> ShortExactSequence {
    let parts = [l.clone(), p0.clone()];
    let s = Representation::direct_sum(&parts);
    let into = Representation::summand_inclusion(&parts, 0)
        .after(&xi.scale(&-m.field().one()))
        .add(&Representation::summand_inclusion(&parts, 1).after(omega_incl));
    let (middle, proj) = into.cokernel(&s);
    let inclusion = proj.after(&Representation::summand_inclusion(&parts, 0));
    let from_p0 = cover.after(&Representation::summand_projection(&parts, 1));
    let surjection = Morphism {
        maps: proj
            .maps
            .iter()
            .zip(&from_p0.maps)
            .map(|(p, g)| {
                if p.rows() == 0 {
                    return Matrix::zeros(p.field(), g.rows(), 0);
                }
                let right_inv = p.solve(&Matrix::identity(p.field(), p.rows())).expect("projection is onto");
                g.mul(&right_inv)
            })
            .collect(),
    };
    ShortExactSequence {
        left: l.clone(),
        middle,
        right: m.clone(),
        inclusion,
        surjection,
        middle_summands: vec![],
    }
}

/// The almost split sequence ending at an indecomposable non-projective `M`.
pub fn almost_split_sequence(m: &Representation) -> Result<ShortExactSequence> {
    if !is_indecomposable(m)? {
        return Err(Error::Precondition("almost split sequences need an indecomposable end term".into()));
    }
    if is_projective(m) {
        return Err(Error::Precondition("no almost split sequence ends at a projective".into()));
    }
    let l = tau(m);
    let e = ext1(m, &l);
    let field = m.field();
    let ebasis = end_basis(m);
    let rad = end_radical(m, &ebasis)?;
    // ξ ↦ ξ ∘ r_Ω for r in rad End(M), read in Ext coordinates.
    let pres = &e.presentation;
    let mut rows: Vec<Vec<crate::exactlin::Scalar>> = vec![];
    for rc in rad.columns() {
        let mut total = Matrix::zeros(field, m.dim(), m.dim());
        for (c, b) in rc.iter().zip(&ebasis) {
            total = total.add(&b.scale(c));
        }
        let r = Morphism::from_total(&total, m, m);
        let r_omega = lift_to_syzygies(pres, pres, &r)?;
        let images: Vec<Vec<_>> = (0..e.dim())
            .map(|i| {
                let img = e.cocycle(i).after(&r_omega).flatten();
                e.space.coords(&img).expect("image is a cocycle")
            })
            .collect();
        // Row i of the operator in Ext coordinates.
        for i in 0..e.dim() {
            rows.push(images.iter().map(|col| col[i].clone()).collect());
        }
    }
    let socle = if rows.is_empty() {
        Matrix::identity(field, e.dim())
    } else {
        Matrix::from_rows(field, rows).kernel_basis()
    };
    if socle.cols() != 1 {
        return Err(Error::SocleNotOneDimensional(format!(
            "socle of Ext¹(M, τM) has dimension {}",
            socle.cols()
        )));
    }
    let coeffs = socle.column(0);
    let mut xi = Morphism::zero(&pres.omega, &l);
    for (i, c) in coeffs.iter().enumerate() {
        xi = xi.add(&e.cocycle(i).scale(c));
    }
    let mut seq = pushout(&pres.omega_incl, &pres.p0.module, &pres.p0.map, m, &xi, &l);
    seq.middle_summands = decompose(&seq.middle)?.into_iter().map(|s| s.module).collect();
    Ok(seq)
}

/// The almost split sequence starting at an indecomposable non-injective `M`,
/// obtained by duality over the opposite algebra.
pub fn almost_split_starting(m: &Representation) -> Result<ShortExactSequence> {
    let a = m.algebra();
    let d = almost_split_sequence(&m.dual())?;
    let back = |r: &Representation| r.dual().reattach(a);
    let middle = back(&d.middle)?;
    let middle_summands = d.middle_summands.iter().map(back).collect::<Result<Vec<_>>>()?;
    let right = back(&d.left)?;
    debug_assert!(crate::modrep::is_isomorphic(&right, &tau_inverse(m)).unwrap_or(true));
    Ok(ShortExactSequence {
        left: m.clone(),
        middle,
        right,
        inclusion: d.surjection.dual(),
        surjection: d.inclusion.dual(),
        middle_summands,
    })
}
