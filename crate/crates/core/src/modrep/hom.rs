//! Hom spaces, annihilators and Fac/Sub membership.

use super::{Morphism, Representation};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::spectral;

/// Basis of `Hom_A(M, N)`: solutions of `N_α f_i = f_j M_α`.
pub fn hom_basis(m: &Representation, n: &Representation) -> Vec<Morphism> {
    let field = m.field();
    let nv = m.dims.len();
    let mut var_off = vec![0];
    for v in 0..nv {
        var_off.push(var_off[v] + m.dims[v] * n.dims[v]);
    }
    let nvars = var_off[nv];
    if nvars == 0 {
        return vec![];
    }
    let q = m.algebra.quiver();
    let mut rows: Vec<Vec<Scalar>> = vec![];
    for a in 0..q.num_arrows() {
        let ar = q.arrow(a);
        let (i, j) = (ar.source, ar.target);
        let (ma, na) = (&m.maps[a], &n.maps[a]);
        // (N_a f_i - f_j M_a)[r][c]
        for r in 0..n.dims[j] {
            for c in 0..m.dims[i] {
                let mut row = vec![field.zero(); nvars];
                for k in 0..n.dims[i] {
                    let x = na.get(r, k);
                    if !x.is_zero() {
                        row[var_off[i] + k * m.dims[i] + c] += x;
                    }
                }
                for l in 0..m.dims[j] {
                    let x = ma.get(l, c);
                    if !x.is_zero() {
                        row[var_off[j] + r * m.dims[j] + l] -= x;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::identity(field, nvars)
    } else {
        Matrix::from_rows(field, rows).kernel_basis()
    };
    kernel
        .columns()
        .iter()
        .map(|col| Morphism {
            maps: (0..nv)
                .map(|v| {
                    let mut f = Matrix::zeros(field, n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            f.set(r, c, col[var_off[v] + r * m.dims[v] + c].clone());
                        }
                    }
                    f
                })
                .collect(),
        })
        .collect()
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    hom_basis(m, n).len()
}

/// Basis of `End(M)` as matrices on the total space.
pub fn end_basis(m: &Representation) -> Vec<Matrix> {
    hom_basis(m, m).iter().map(Morphism::total).collect()
}

/// Radical of `End(M)`, as coordinate columns relative to `end_basis(m)`.
pub fn end_radical(m: &Representation, basis: &[Matrix]) -> Result<Matrix> {
    if !m.field().trace_form_ok(m.dim()) {
        return Err(Error::FieldTooSmall(format!(
            "radical of End needs characteristic > {}",
            m.dim()
        )));
    }
    Ok(spectral::trace_radical(basis))
}

/// Basis (columns, in path-basis coordinates) of the annihilator of `M`.
pub fn annihilator(m: &Representation) -> Matrix {
    let a = m.algebra();
    let field = a.field();
    let cols: Vec<Vec<Scalar>> = (0..a.dim())
        .map(|i| {
            let t = m.action_matrix(&a.basis_vector(i));
            (0..t.rows()).flat_map(|r| (0..t.cols()).map(move |c| (r, c))).map(|(r, c)| t.get(r, c).clone()).collect()
        })
        .collect();
    let big = m.dim() * m.dim();
    if big == 0 {
        return Matrix::identity(field, a.dim());
    }
    Matrix::from_columns(field, big, &cols).kernel_basis()
}

/// `X ∈ Fac M`: the trace of `M` in `X` is all of `X`.
pub fn fac_member(x: &Representation, m: &Representation) -> bool {
    let homs = hom_basis(m, x);
    (0..x.dims.len()).all(|v| {
        if x.dims[v] == 0 {
            return true;
        }
        let imgs: Vec<Matrix> = homs.iter().map(|f| f.maps[v].clone()).collect();
        let stacked = imgs.into_iter().reduce(|a, b| a.hstack(&b));
        stacked.map(|s| s.rank() == x.dims[v]).unwrap_or(false)
    })
}

/// `X ∈ Sub M`: the maps `X → M` have no common kernel.
pub fn sub_member(x: &Representation, m: &Representation) -> bool {
    let homs = hom_basis(x, m);
    (0..x.dims.len()).all(|v| {
        if x.dims[v] == 0 {
            return true;
        }
        let stacked = homs.iter().map(|f| f.maps[v].clone()).reduce(|a, b| a.vstack(&b));
        stacked.map(|s| s.rank() == x.dims[v]).unwrap_or(false)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassFlags {
    pub sincere: bool,
    pub faithful: bool,
}

pub fn class_flags(m: &Representation) -> ClassFlags {
    let sincere = m.dims.iter().all(|&d| d > 0);
    let faithful = annihilator(m).cols() == 0;
    debug_assert!(!faithful || sincere);
    ClassFlags { sincere, faithful }
}
