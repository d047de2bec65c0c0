//! Algebras given by structure constants, their radicals, and
//! re-presentation as a quiver with relations.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{Path, PathPoly, PresentedAlgebra, Quiver, Sparse};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace};
use crate::spectral;

/// Associative unital algebra on a fixed basis, `b_i b_j = Σ_k c_ijk b_k`.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    field: Field,
    labels: Vec<String>,
    table: Vec<Vec<Sparse>>,
    one: Vec<Scalar>,
}

impl StructureAlgebra {
    pub fn new(field: Field, labels: Vec<String>, table: Vec<Vec<Sparse>>, one: Vec<Scalar>) -> Self {
        StructureAlgebra { field, labels, table, one }
    }

    /// Builds the table from a product function on basis indices returning
    /// dense coordinates.
    pub fn from_fn(
        field: Field,
        labels: Vec<String>,
        one: Vec<Scalar>,
        product: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Self {
        let n = labels.len();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        product(i, j)
                            .into_iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        StructureAlgebra { field, labels, table, one }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn one(&self) -> &[Scalar] {
        &self.one
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> =
            (0..self.dim()).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Checks associativity on all basis triples and that `one` is a unit.
    pub fn verify(&self) -> bool {
        let n = self.dim();
        let e: Vec<Vec<Scalar>> = (0..n).map(|i| self.basis_vector(i)).collect();
        for i in 0..n {
            if self.mul(&self.one, &e[i]) != e[i] || self.mul(&e[i], &self.one) != e[i] {
                return false;
            }
            for j in 0..n {
                let ij = self.mul(&e[i], &e[j]);
                for k in 0..n {
                    if self.mul(&ij, &e[k]) != self.mul(&e[i], &self.mul(&e[j], &e[k])) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Quotient by the two-sided ideal with basis `ideal` (columns). The
    /// quotient basis is a subset of the standard basis; the returned
    /// matrix maps coordinates here to coordinates in the quotient; the
    /// indices are the standard basis vectors kept as the quotient basis.
    pub fn quotient(&self, ideal: &Matrix) -> (StructureAlgebra, Matrix, Vec<usize>) {
        let n = self.dim();
        let isub = Subspace::span(ideal);
        let comp = isub.complement_in(&Subspace::full(self.field, n));
        let picked: Vec<usize> =
            comp.columns().iter().map(|c| c.iter().position(|x| !x.is_zero()).unwrap()).collect();
        let t = isub.basis().hstack(&comp);
        let tinv = t.inverse().expect("ideal and complement span the algebra");
        let proj = tinv.select_rows(&(isub.dim()..n).collect::<Vec<_>>());
        let labels = picked.iter().map(|&i| self.labels[i].clone()).collect();
        let one = proj.mul_vec(&self.one);
        let q = StructureAlgebra::from_fn(self.field, labels, one, |i, j| {
            proj.mul_vec(&self.mul(&self.basis_vector(picked[i]), &self.basis_vector(picked[j])))
        });
        (q, proj, picked)
    }
}

/// Jacobson radical (columns) via the trace form `tr L_{xy}`; verified
/// nilpotent.
pub fn algebra_radical_basis(a: &StructureAlgebra) -> Result<Matrix> {
    if !a.field.trace_form_ok(a.dim()) {
        return Err(Error::FieldTooSmall(format!(
            "trace-form radical over {} needs characteristic > {}",
            a.field,
            a.dim()
        )));
    }
    let mats: Vec<Matrix> = (0..a.dim()).map(|i| a.left_mult_matrix(&a.basis_vector(i))).collect();
    let rad = if mats.is_empty() { Matrix::zeros(a.field, 0, 0) } else { spectral::trace_radical(&mats) };
    let rad = Matrix::from_columns(a.field, a.dim(), &rad.columns());
    let mut power = rad.columns();
    for _ in 0..=a.dim() {
        if power.is_empty() {
            return Ok(rad);
        }
        let next: Vec<Vec<Scalar>> = power
            .iter()
            .flat_map(|x| rad.columns().into_iter().map(move |r| (x.clone(), r)))
            .map(|(x, r)| a.mul(&x, &r))
            .collect();
        power = Subspace::span_vectors(a.field, a.dim(), &next).basis().columns();
    }
    Err(Error::Verification("trace-form radical is not nilpotent".into()))
}

/// Known primitive idempotents (with vertex labels) and preferred arrow
/// lifts (with arrow labels), used to keep labels stable.
#[derive(Clone, Debug, Default)]
pub struct IdempotentHint {
    pub idempotents: Vec<(String, Vec<Scalar>)>,
    pub arrows: Vec<(String, Vec<Scalar>)>,
}

/// A presentation together with the isomorphism to the input algebra.
#[derive(Clone, Debug)]
pub struct Quiverized {
    pub algebra: Arc<PresentedAlgebra>,
    pub vertex_elements: Vec<Vec<Scalar>>,
    pub arrow_elements: Vec<Vec<Scalar>>,
    /// Column `i` is the image of the `i`-th basis path.
    pub basis_images: Matrix,
}

fn span_dim(field: Field, n: usize, vs: &[Vec<Scalar>]) -> Subspace {
    Subspace::span_vectors(field, n, vs)
}

/// Primitive orthogonal idempotents summing to one, by repeated Fitting
/// splitting of corner algebras acting on the regular module.
fn split_idempotents(a: &StructureAlgebra, rad: &Subspace) -> Result<Vec<Vec<Scalar>>> {
    let n = a.dim();
    let mut todo = vec![a.one.clone()];
    let mut done = vec![];
    let mut guard = 0;
    while let Some(e) = todo.pop() {
        guard += 1;
        if guard > 4 * n + 4 {
            return Err(Error::DecompositionStalled("idempotent splitting did not terminate".into()));
        }
        let corner: Vec<Vec<Scalar>> =
            (0..n).map(|i| a.mul(&a.mul(&e, &a.basis_vector(i)), &e)).collect();
        let corner_space = span_dim(a.field, n, &corner);
        let corner_rad = corner_space.intersection(rad);
        if corner_space.dim() - corner_rad.dim() <= 1 {
            done.push(e);
            continue;
        }
        // Operators on eA given by left multiplication by corner elements.
        let ea: Vec<Vec<Scalar>> = (0..n).map(|i| a.mul(&e, &a.basis_vector(i))).collect();
        let ea_space = span_dim(a.field, n, &ea);
        let b = ea_space.basis().clone();
        let restrict = |x: &[Scalar]| -> Matrix {
            let imgs: Vec<Vec<Scalar>> = b.columns().iter().map(|c| a.mul(x, c)).collect();
            b.solve(&Matrix::from_columns(a.field, n, &imgs)).expect("eA is stable")
        };
        let ops: Vec<Matrix> = corner_space.basis().columns().iter().map(|x| restrict(x)).collect();
        let mut split = None;
        for phi in spectral::candidate_combinations(&ops, 400) {
            if let Some(p) = spectral::fitting_projection(&phi) {
                let e_coords = ea_space.coordinates(&e).unwrap();
                split = Some(b.mul_vec(&p.mul_vec(&e_coords)));
                break;
            }
        }
        match split {
            Some(u) => {
                let rest: Vec<Scalar> = e.iter().zip(&u).map(|(x, y)| x - y).collect();
                todo.push(rest);
                todo.push(u);
            }
            None => {
                return Err(Error::NotBasic(
                    "semisimple quotient has a block that does not split over the base field".into(),
                ))
            }
        }
    }
    done.reverse();
    Ok(done)
}

fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Presents a basic algebra as `kQ/I`.
pub fn quiverize(
    a: &StructureAlgebra,
    hint: Option<&IdempotentHint>,
    length_cap: usize,
) -> Result<Quiverized> {
    let n = a.dim();
    let field = a.field;
    let rad_m = algebra_radical_basis(a)?;
    let rad = Subspace::span(&rad_m);
    let (labels, idems): (Vec<String>, Vec<Vec<Scalar>>) = match hint {
        Some(h) if !h.idempotents.is_empty() => h.idempotents.iter().cloned().unzip(),
        _ => {
            let es = split_idempotents(a, &rad)?;
            ((1..=es.len()).map(|i| i.to_string()).collect(), es)
        }
    };
    let k = idems.len();
    if n - rad.dim() != k {
        return Err(Error::NotBasic(format!(
            "dim A/rad A = {} but {} primitive idempotents",
            n - rad.dim(),
            k
        )));
    }
    let mut sum = vec![field.zero(); n];
    for (i, e) in idems.iter().enumerate() {
        for (s, x) in sum.iter_mut().zip(e) {
            *s += x;
        }
        for (j, f) in idems.iter().enumerate() {
            let ef = a.mul(e, f);
            let expect = if i == j { e.clone() } else { vec![field.zero(); n] };
            if ef != expect {
                return Err(Error::Verification("idempotents are not orthogonal".into()));
            }
        }
    }
    if sum != a.one {
        return Err(Error::Verification("idempotents do not sum to one".into()));
    }

    let rad_basis = rad.basis().columns();
    let rad2: Vec<Vec<Scalar>> = rad_basis
        .iter()
        .flat_map(|x| rad_basis.iter().map(move |y| (x, y)))
        .map(|(x, y)| a.mul(x, y))
        .collect();
    let rad2 = span_dim(field, n, &rad2);

    let corner = |i: usize, x: &[Scalar], j: usize| a.mul(&a.mul(&idems[i], x), &idems[j]);
    let mut quiver = Quiver::new();
    for l in &labels {
        quiver.add_vertex(l)?;
    }
    let mut arrow_elements = vec![];
    let mut counter = 0;
    for i in 0..k {
        for j in 0..k {
            let eij_r: Vec<Vec<Scalar>> = rad_basis.iter().map(|r| corner(i, r, j)).collect();
            let eij_r = span_dim(field, n, &eij_r);
            let eij_r2: Vec<Vec<Scalar>> =
                rad2.basis().columns().iter().map(|r| corner(i, r, j)).collect();
            let eij_r2 = span_dim(field, n, &eij_r2);
            let want = eij_r.dim() - eij_r2.dim();
            if want == 0 {
                continue;
            }
            let mut chosen = eij_r2.clone();
            let mut candidates: Vec<(Option<String>, Vec<Scalar>)> = vec![];
            if let Some(h) = hint {
                for (l, x) in &h.arrows {
                    if !is_zero_vec(x) && &corner(i, x, j) == x && rad.contains_vector(x) {
                        candidates.push((Some(l.clone()), x.clone()));
                    }
                }
            }
            for b in 0..n {
                let x = corner(i, &a.basis_vector(b), j);
                if !is_zero_vec(&x) && rad.contains_vector(&x) {
                    candidates.push((None, x));
                }
            }
            for r in eij_r.basis().columns() {
                candidates.push((None, r));
            }
            let mut got = 0;
            for (label, x) in candidates {
                if got == want {
                    break;
                }
                if chosen.contains_vector(&x) {
                    continue;
                }
                chosen = chosen.sum(&span_dim(field, n, std::slice::from_ref(&x)));
                let label = match label {
                    Some(l) if quiver.arrow_index(&l).is_none() && quiver.vertex_index(&l).is_none() => l,
                    _ => loop {
                        counter += 1;
                        let l = format!("x{counter}");
                        if quiver.arrow_index(&l).is_none() && quiver.vertex_index(&l).is_none() {
                            break l;
                        }
                    },
                };
                quiver.add_arrow(&label, i, j)?;
                arrow_elements.push(x);
                got += 1;
            }
            if got != want {
                return Err(Error::Verification("could not lift arrows".into()));
            }
        }
    }

    // Loewy length of the input algebra.
    let mut loewy = 1;
    let mut layer = rad_basis.clone();
    while !layer.is_empty() {
        let next: Vec<Vec<Scalar>> = layer
            .iter()
            .flat_map(|x| rad_basis.iter().map(move |r| (x, r)))
            .map(|(x, r)| a.mul(x, r))
            .collect();
        layer = span_dim(field, n, &next).basis().columns();
        loewy += 1;
        if loewy > n + 2 {
            return Err(Error::Verification("radical is not nilpotent".into()));
        }
    }

    let eval = |p: &Path| -> Vec<Scalar> {
        let mut x = idems[p.start].clone();
        for &ar in &p.arrows {
            x = a.mul(&x, &arrow_elements[ar]);
        }
        x
    };

    // Relations, per pair of vertices, from paths of length 2..=loewy.
    let mut relations = vec![];
    let mut paths_by_len: Vec<Vec<Path>> = vec![(0..k).map(Path::trivial).collect()];
    for len in 1..=loewy {
        let next: Vec<Path> = paths_by_len[len - 1]
            .iter()
            .flat_map(|p| quiver.arrows_from(p.end).map(move |ar| (p, ar)).collect::<Vec<_>>())
            .map(|(p, ar)| p.extend(&quiver, ar).unwrap())
            .collect();
        if next.len() > 20_000 {
            return Err(Error::CapExceeded("too many paths while quiverizing".into()));
        }
        paths_by_len.push(next);
    }
    for i in 0..k {
        for j in 0..k {
            let paths: Vec<Path> = paths_by_len[2..]
                .iter()
                .flatten()
                .filter(|p| p.start == i && p.end == j)
                .cloned()
                .rev()
                .collect();
            if paths.is_empty() {
                continue;
            }
            let pos: BTreeMap<Path, usize> =
                paths.iter().cloned().enumerate().map(|(c, p)| (p, c)).collect();
            let cols: Vec<Vec<Scalar>> = paths.iter().map(eval).collect();
            let ev = Matrix::from_columns(field, n, &cols);
            let kernel = ev.kernel_basis();
            if kernel.cols() == 0 {
                continue;
            }
            // Reduced echelon basis of the kernel, longest paths leading.
            let (red, piv) = kernel.transpose().rref();
            let kern_vecs: Vec<Vec<Scalar>> =
                (0..piv.len()).map(|r| red.row(r).to_vec()).collect();
            let to_poly = |v: &[Scalar]| {
                PathPoly::from_terms(
                    field,
                    v.iter().zip(&paths).filter(|(c, _)| !c.is_zero()).map(|(c, p)| (c.clone(), p.clone())).collect(),
                )
            };
            // Consequences J K + K J of all kernels ending/starting here,
            // truncated to length ≤ loewy.
            let mut consequences = vec![];
            let all_kernels = |s: usize, t: usize| -> Vec<PathPoly> {
                let ps: Vec<Path> = paths_by_len[2..]
                    .iter()
                    .flatten()
                    .filter(|p| p.start == s && p.end == t)
                    .cloned()
                    .collect();
                if ps.is_empty() {
                    return vec![];
                }
                let cols: Vec<Vec<Scalar>> = ps.iter().map(eval).collect();
                let kk = Matrix::from_columns(field, n, &cols).kernel_basis();
                kk.columns()
                    .iter()
                    .map(|c| {
                        PathPoly::from_terms(
                            field,
                            c.iter().zip(&ps).filter(|(x, _)| !x.is_zero()).map(|(x, p)| (x.clone(), p.clone())).collect(),
                        )
                    })
                    .collect()
            };
            for ar in quiver.arrows_to(j).collect::<Vec<_>>() {
                let s = quiver.arrow(ar).source;
                for r in all_kernels(i, s) {
                    let prod = r.mul(&PathPoly::from_path(field, Path::arrow(&quiver, ar)));
                    consequences.push(prod);
                }
            }
            for ar in quiver.arrows_from(i).collect::<Vec<_>>() {
                let t = quiver.arrow(ar).target;
                for r in all_kernels(t, j) {
                    let prod = PathPoly::from_path(field, Path::arrow(&quiver, ar)).mul(&r);
                    consequences.push(prod);
                }
            }
            let to_vec = |p: &PathPoly| -> Vec<Scalar> {
                let mut v = vec![field.zero(); paths.len()];
                for (path, c) in p.terms() {
                    if let Some(&ix) = pos.get(path) {
                        v[ix] = c.clone();
                    }
                }
                v
            };
            let cons: Vec<Vec<Scalar>> = consequences.iter().map(to_vec).collect();
            let mut span = span_dim(field, paths.len(), &cons);
            for v in &kern_vecs {
                if span.contains_vector(v) {
                    continue;
                }
                span = span.sum(&span_dim(field, paths.len(), std::slice::from_ref(v)));
                relations.push(to_poly(v));
            }
        }
    }

    let algebra = PresentedAlgebra::build(field, quiver, relations, length_cap)?;
    if algebra.dim() != n {
        return Err(Error::Verification(format!(
            "presentation has dimension {} but the algebra has dimension {n}",
            algebra.dim()
        )));
    }
    let images: Vec<Vec<Scalar>> = algebra.basis().iter().map(eval).collect();
    let basis_images = Matrix::from_columns(field, n, &images);
    if basis_images.rank() != n {
        return Err(Error::Verification("path images are not a basis".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = a.mul(&images[i], &images[j]);
            let mut rhs = vec![field.zero(); n];
            for (kk, c) in algebra.basis_product(i, j) {
                for (r, x) in rhs.iter_mut().zip(&images[*kk]) {
                    *r += &(c * x);
                }
            }
            if lhs != rhs {
                return Err(Error::Verification("structure constants do not match".into()));
            }
        }
    }
    Ok(Quiverized { algebra, vertex_elements: idems, arrow_elements, basis_images })
}
