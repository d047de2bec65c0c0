//! Simple, indecomposable projective and indecomposable injective modules.

use std::sync::Arc;

use super::Representation;
use crate::algebra::{Path, PresentedAlgebra};
use crate::exactlin::Matrix;

pub fn simple(a: &Arc<PresentedAlgebra>, i: usize) -> Representation {
    let field = a.field();
    let n = a.num_vertices();
    let mut dims = vec![0; n];
    dims[i] = 1;
    let maps = a
        .quiver()
        .arrows()
        .iter()
        .map(|ar| Matrix::zeros(field, dims[ar.target], dims[ar.source]))
        .collect();
    Representation::new_unchecked(a.clone(), dims, maps)
}

fn arrow_index(a: &PresentedAlgebra, arrow: usize) -> usize {
    a.basis_index(&Path::arrow(a.quiver(), arrow)).expect("arrows are reduced paths")
}

/// `P_i = e_i A`: at vertex `j`, the paths from `i` to `j`.
pub fn projective(a: &Arc<PresentedAlgebra>, i: usize) -> Representation {
    let field = a.field();
    let n = a.num_vertices();
    let at: Vec<Vec<usize>> = (0..n).map(|j| a.basis_between(i, j)).collect();
    let dims: Vec<usize> = at.iter().map(Vec::len).collect();
    let maps = (0..a.quiver().num_arrows())
        .map(|ar| {
            let arrow = a.quiver().arrow(ar);
            let (j, k) = (arrow.source, arrow.target);
            let ai = arrow_index(a, ar);
            let mut m = Matrix::zeros(field, dims[k], dims[j]);
            for (col, &b) in at[j].iter().enumerate() {
                for (idx, c) in a.basis_product(b, ai) {
                    let row = at[k].iter().position(|x| x == idx).expect("product ends at k");
                    m.set(row, col, c.clone());
                }
            }
            m
        })
        .collect();
    Representation::new_unchecked(a.clone(), dims, maps)
}

/// `I_i = D(A e_i)`: at vertex `j`, the dual of the paths from `j` to `i`.
pub fn injective(a: &Arc<PresentedAlgebra>, i: usize) -> Representation {
    let field = a.field();
    let n = a.num_vertices();
    let at: Vec<Vec<usize>> = (0..n).map(|j| a.basis_between(j, i)).collect();
    let dims: Vec<usize> = at.iter().map(Vec::len).collect();
    let maps = (0..a.quiver().num_arrows())
        .map(|ar| {
            let arrow = a.quiver().arrow(ar);
            let (j, k) = (arrow.source, arrow.target);
            let ai = arrow_index(a, ar);
            let mut m = Matrix::zeros(field, dims[k], dims[j]);
            for (row, &x) in at[k].iter().enumerate() {
                for (idx, c) in a.basis_product(ai, x) {
                    let col = at[j].iter().position(|y| y == idx).expect("product starts at j");
                    m.set(row, col, c.clone());
                }
            }
            m
        })
        .collect();
    Representation::new_unchecked(a.clone(), dims, maps)
}

#[derive(Clone, Debug)]
pub struct StandardModules {
    pub simples: Vec<Representation>,
    pub projectives: Vec<Representation>,
    pub injectives: Vec<Representation>,
}

pub fn standard_modules(a: &Arc<PresentedAlgebra>) -> StandardModules {
    let n = a.num_vertices();
    StandardModules {
        simples: (0..n).map(|i| simple(a, i)).collect(),
        projectives: (0..n).map(|i| projective(a, i)).collect(),
        injectives: (0..n).map(|i| injective(a, i)).collect(),
    }
}
