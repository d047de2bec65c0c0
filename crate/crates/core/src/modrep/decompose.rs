//! Krull–Schmidt decomposition by Fitting splitting, and isomorphism tests.

use super::hom::{end_basis, end_radical, hom_basis};
use super::{Morphism, Representation};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::spectral;

/// An indecomposable summand. `absolutely_indecomposable` is false when
/// `End/rad` is a commutative field extension of dimension > 1.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Representation,
    pub absolutely_indecomposable: bool,
}

fn radical_matrices(basis: &[Matrix], rad: &Matrix) -> Vec<Matrix> {
    rad.columns()
        .iter()
        .map(|c| {
            basis.iter().zip(c).fold(Matrix::zeros(basis[0].field(), basis[0].rows(), basis[0].cols()), |acc, (b, x)| {
                if x.is_zero() {
                    acc
                } else {
                    acc.add(&b.scale(x))
                }
            })
        })
        .collect()
}

fn flat(m: &Matrix) -> Vec<Scalar> {
    (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j))).map(|(i, j)| m.get(i, j).clone()).collect()
}

/// True iff `End(M)` is local with residue field the base field.
pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let basis = end_basis(m);
    let rad = end_radical(m, &basis)?;
    Ok(basis.len() - rad.cols() == 1)
}

/// Splits `M` into indecomposable summands (in a deterministic order).
pub fn decompose(m: &Representation) -> Result<Vec<Summand>> {
    let mut stack = vec![m.clone()];
    let mut out = vec![];
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        if !x.field().trace_form_ok(x.dim()) {
            return Err(Error::FieldTooSmall(format!("decomposition needs characteristic > {}", x.dim())));
        }
        let basis = end_basis(&x);
        let (top, commutative) = spectral::semisimple_quotient_info(&basis);
        if top == 1 {
            out.push(Summand { module: x, absolutely_indecomposable: true });
            continue;
        }
        let mut split = None;
        for phi in spectral::candidate_combinations(&basis, 2000) {
            if let Some(p) = spectral::fitting_projection(&phi) {
                split = Some(p);
                break;
            }
        }
        match split {
            Some(p) => {
                let proj = Morphism::from_total(&p, &x, &x);
                let (im, _) = proj.image(&x);
                let (ker, _) = proj.kernel(&x);
                // Pushed in reverse so the image part is processed first.
                stack.push(ker);
                stack.push(im);
            }
            None if commutative => {
                out.push(Summand { module: x, absolutely_indecomposable: false });
            }
            None => {
                return Err(Error::DecompositionStalled(format!(
                    "no splitting endomorphism found for a module of dimension vector ({})",
                    x.dim_vector_string()
                )))
            }
        }
    }
    Ok(out)
}

fn is_isomorphic_indecomposable(m: &Representation, n: &Representation) -> Result<bool> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    let fs = hom_basis(m, n);
    if fs.is_empty() {
        return Ok(false);
    }
    let gs = hom_basis(n, m);
    let basis = end_basis(m);
    let rad = end_radical(m, &basis)?;
    let rad_space = Subspace::span_vectors(
        m.field(),
        m.dim() * m.dim(),
        &radical_matrices(&basis, &rad).iter().map(flat).collect::<Vec<_>>(),
    );
    for f in &fs {
        for g in &gs {
            let gf = g.after(f).total();
            if !rad_space.contains_vector(&flat(&gf)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Isomorphism test: rad-End pairing for indecomposables, multiset
/// comparison of decompositions otherwise.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    if !m.algebra().same_as(n.algebra()) {
        return Err(Error::AlgebraMismatch("isomorphism test across algebras".into()));
    }
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    if is_indecomposable(m)? && is_indecomposable(n)? {
        return is_isomorphic_indecomposable(m, n);
    }
    let dm: Vec<Representation> = decompose(m)?.into_iter().map(|s| s.module).collect();
    let dn: Vec<Representation> = decompose(n)?.into_iter().map(|s| s.module).collect();
    if dm.len() != dn.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.len()];
    for x in &dm {
        let mut found = false;
        for (k, y) in dn.iter().enumerate() {
            if !used[k] && is_isomorphic_indecomposable(x, y)? {
                used[k] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Groups indecomposable modules into isomorphism classes, keeping the
/// first representative and counting multiplicities.
pub fn group_isoclasses(ms: &[Representation]) -> Result<Vec<(Representation, usize)>> {
    let mut out: Vec<(Representation, usize)> = vec![];
    for m in ms {
        let mut hit = false;
        for (rep, count) in out.iter_mut() {
            if is_isomorphic_indecomposable(rep, m)? {
                *count += 1;
                hit = true;
                break;
            }
        }
        if !hit {
            out.push((m.clone(), 1));
        }
    }
    Ok(out)
}
