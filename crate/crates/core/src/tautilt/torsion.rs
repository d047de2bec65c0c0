//! The torsion pair `(Fac M, Sub τM)` and the generalized Brenner–Butler
//! correspondence between `mod A` and `mod End_A(M)`.

use std::sync::Arc;

use super::rigid::is_support_tau_tilting;
use crate::algebra::{PresentedAlgebra, QuotientMap};
use crate::artheory::{ar_quiver, end_algebra, is_hereditary, tau, ArCaps, EndAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::modrep::{
    annihilator, decompose, fac_member, hom_dim, inflate, is_isomorphic, restrict_scalars, sub_member, Representation,
};

#[derive(Clone, Debug)]
pub struct TorsionPairReport {
    pub torsion: Vec<Representation>,
    pub torsion_free: Vec<Representation>,
    /// Indecomposables in neither class.
    pub neither: Vec<Representation>,
}

impl TorsionPairReport {
    /// Every indecomposable is torsion or torsion-free.
    pub fn is_splitting(&self) -> bool {
        self.neither.is_empty()
    }
}

/// Sorts `indecs` into `Fac M`, `Sub τM` and the rest, checking
/// `Hom(Fac M, Sub τM) = 0` on the listed pairs.
pub fn torsion_pair_of(m: &Representation, indecs: &[Representation]) -> Result<TorsionPairReport> {
    let tm = tau(m);
    let mut report = TorsionPairReport { torsion: vec![], torsion_free: vec![], neither: vec![] };
    for x in indecs {
        let t = fac_member(x, m);
        let f = !tm.is_zero() && sub_member(x, &tm);
        match (t, f) {
            (true, true) => {
                return Err(Error::Verification(format!("{} lies in both classes", x.dim_vector_string())))
            }
            (true, false) => report.torsion.push(x.clone()),
            (false, true) => report.torsion_free.push(x.clone()),
            (false, false) => report.neither.push(x.clone()),
        }
    }
    for t in &report.torsion {
        for f in &report.torsion_free {
            if hom_dim(t, f) != 0 {
                return Err(Error::Verification("nonzero map from torsion to torsion-free".into()));
            }
        }
    }
    Ok(report)
}

/// One correspondence `X ↦ F(X)` with the round trip `G(F(X)) ≅ X`.
#[derive(Clone, Debug)]
pub struct Correspondence {
    pub source: Representation,
    pub image: Representation,
    pub round_trip: bool,
}

#[derive(Clone, Debug)]
pub struct BBReport {
    pub b: EndAlgebra,
    /// `C = A / Ann M`.
    pub c: QuotientMap,
    pub annihilator: Matrix,
    pub tau_a: Representation,
    /// `τ_C M` viewed as an `A`-module.
    pub tau_c: Representation,
    /// `dim End_B(M)`, to be compared with `dim C`.
    pub end_b_dim: usize,
    /// `A → End_B(M)` has kernel `Ann M` and is onto.
    pub part1: bool,
    pub c_hereditary: bool,
    pub x_class: Vec<Representation>,
    pub y_class: Vec<Representation>,
    pub hom_forward: Vec<Correspondence>,
    pub tensor_backward: Vec<Correspondence>,
    pub ext_forward: Vec<Correspondence>,
    pub tor_backward: Vec<Correspondence>,
    /// `Hom(M, −)` and `− ⊗_B M` are inverse bijections `Fac M ↔ 𝒴`.
    pub hom_equivalence: bool,
    /// `Ext¹(M, −)` and `Tor₁(−, M)` are inverse bijections `Sub τ_A M ↔ 𝒳`.
    pub ext_equivalence: bool,
    pub tau_agree: bool,
    /// An indecomposable in `Sub τ_A M` outside `Sub τ_C M`.
    pub sub_witness: Option<Representation>,
    pub torsion_pair: TorsionPairReport,
}

fn span_rank(field: crate::exactlin::Field, len: usize, vs: &[Vec<Scalar>]) -> usize {
    if vs.is_empty() || len == 0 {
        return 0;
    }
    Matrix::from_columns(field, len, vs).rank()
}

fn flat(t: &Matrix) -> Vec<Scalar> {
    (0..t.rows()).flat_map(|i| (0..t.cols()).map(move |j| t.get(i, j).clone())).collect()
}

/// `dim` of the linear maps on `k^n` commuting with every `ops[i]`.
fn commutant_dim(field: crate::exactlin::Field, n: usize, ops: &[Matrix]) -> usize {
    // T L - L T = 0, unknown T[r][c] at index r*n + c.
    let mut rows = vec![];
    for l in ops {
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![field.zero(); n * n];
                for k in 0..n {
                    let x = l.get(k, c);
                    if !x.is_zero() {
                        row[r * n + k] += x;
                    }
                    let y = l.get(r, k);
                    if !y.is_zero() {
                        row[k * n + c] -= y;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return n * n;
    }
    n * n - Matrix::from_rows(field, rows).rank()
}

fn iso_position(x: &Representation, list: &[Representation]) -> Result<Option<usize>> {
    for (i, y) in list.iter().enumerate() {
        if x.dims() == y.dims() && is_isomorphic(x, y)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

fn iso(x: &Representation, y: &Representation) -> Result<bool> {
    Ok(x.dims() == y.dims() && (x.is_zero() || is_isomorphic(x, y)?))
}

/// Forward images land in `target` and hit each member exactly once.
fn is_bijection(forward: &[Correspondence], target: &[Representation]) -> Result<bool> {
    let mut hit = vec![false; target.len()];
    for c in forward {
        match iso_position(&c.image, target)? {
            Some(i) if !hit[i] => hit[i] = true,
            _ => return Ok(false),
        }
    }
    Ok(hit.into_iter().all(|h| h))
}

/// Checks the Brenner–Butler type statements for a support τ-tilting `m`,
/// extensionally on every indecomposable of `A` and of `B = End_A(m)`.
pub fn bb_verify(m: &Representation) -> Result<BBReport> {
    if !is_support_tau_tilting(m)? {
        return Err(Error::Precondition("module is not support τ-tilting".into()));
    }
    let a = m.algebra().clone();
    let field = a.field();
    let summands: Vec<Representation> = decompose(m)?.into_iter().map(|s| s.module).collect();
    let labels: Vec<String> = (1..=summands.len()).map(|i| i.to_string()).collect();
    let b = end_algebra(&summands, &labels)?;
    let module = b.module.clone();

    let ann = annihilator(&module);
    let c = a.quotient_map(&ann.columns())?;
    let tau_a = tau(&module);
    let tau_c = restrict_scalars(&tau(&inflate(&module, &c)?), &c)?;
    let tau_agree = iso(&tau_a, &tau_c)?;

    let n = module.dim();
    let right: Vec<Vec<Scalar>> = (0..a.dim()).map(|i| flat(&module.action_matrix(&a.basis_vector(i)))).collect();
    let image_dim = span_rank(field, n * n, &right);
    let left: Vec<Matrix> = b.action.iter().map(|f| f.total()).collect();
    let end_b_dim = commutant_dim(field, n, &left);
    let part1 = image_dim == c.target.dim() && image_dim == end_b_dim && a.dim() - ann.cols() == image_dim;

    let a_indecs = ar_quiver(&a, ArCaps::default())?.modules();
    let b_indecs = ar_quiver(&b.algebra, ArCaps::default())?.modules();
    let torsion_pair = torsion_pair_of(&module, &a_indecs)?;

    let mut x_class = vec![];
    let mut y_class = vec![];
    for y in &b_indecs {
        if b.tensor(y).is_zero() {
            x_class.push(y.clone());
        }
        if b.tor1(y).is_zero() {
            y_class.push(y.clone());
        }
    }

    let mut hom_forward = vec![];
    for x in &torsion_pair.torsion {
        let image = b.hom_functor(x)?;
        let round_trip = iso(&b.tensor(&image), x)?;
        hom_forward.push(Correspondence { source: x.clone(), image, round_trip });
    }
    let mut tensor_backward = vec![];
    for y in &y_class {
        let image = b.tensor(y);
        let round_trip = iso(&b.hom_functor(&image)?, y)?;
        tensor_backward.push(Correspondence { source: y.clone(), image, round_trip });
    }
    let hom_equivalence = hom_forward.iter().chain(&tensor_backward).all(|c| c.round_trip)
        && is_bijection(&hom_forward, &y_class)?;

    let sub_a: Vec<Representation> =
        if tau_a.is_zero() { vec![] } else { a_indecs.iter().filter(|x| sub_member(x, &tau_a)).cloned().collect() };
    let mut ext_forward = vec![];
    for x in &sub_a {
        let image = b.ext1_functor(x)?;
        let round_trip = iso(&b.tor1(&image), x)?;
        ext_forward.push(Correspondence { source: x.clone(), image, round_trip });
    }
    let mut tor_backward = vec![];
    for y in &x_class {
        let image = b.tor1(y);
        let round_trip = iso(&b.ext1_functor(&image)?, y)?;
        tor_backward.push(Correspondence { source: y.clone(), image, round_trip });
    }
    let ext_equivalence = ext_forward.iter().chain(&tor_backward).all(|c| c.round_trip)
        && is_bijection(&ext_forward, &x_class)?;

    let sub_witness = sub_a.iter().find(|x| tau_c.is_zero() || !sub_member(x, &tau_c)).cloned();
    let c_hereditary = is_hereditary(&c.target);

    Ok(BBReport {
        b,
        c,
        annihilator: ann,
        tau_a,
        tau_c,
        end_b_dim,
        part1,
        c_hereditary,
        x_class,
        y_class,
        hom_forward,
        tensor_backward,
        ext_forward,
        tor_backward,
        hom_equivalence,
        ext_equivalence,
        tau_agree,
        sub_witness,
        torsion_pair,
    })
}

/// The dual statement for a support τ⁻-tilting `m`, run on `D m` over the
/// opposite algebra.
pub fn bb_verify_dual(m: &Representation) -> Result<BBReport> {
    bb_verify(&m.dual())
}

/// Convenience for reports: the algebra `C`.
pub fn quotient_by_annihilator(m: &Representation) -> Result<Arc<PresentedAlgebra>> {
    Ok(m.algebra().quotient_map(&annihilator(m).columns())?.target)
}
