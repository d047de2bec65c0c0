//! One-point (co)extensions and split-by-nilpotent extensions.

use std::sync::Arc;

use super::structure::{quiverize, IdempotentHint, StructureAlgebra};
use super::{Path, PathPoly, PresentedAlgebra, Quiver, QuotientMap};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::modrep::Representation;

fn fresh_label(q: &Quiver, wanted: Option<&str>, stem: &str, counter: &mut usize) -> String {
    if let Some(w) = wanted {
        if q.vertex_index(w).is_none() && q.arrow_index(w).is_none() {
            return w.to_string();
        }
    }
    loop {
        *counter += 1;
        let l = format!("{stem}{counter}");
        if q.vertex_index(&l).is_none() && q.arrow_index(&l).is_none() {
            return l;
        }
    }
}

/// `A[X]`: a new vertex `ω` whose projective has radical `X`. One arrow
/// `ω → j` per top generator of `X` at `j`; relations at `ω` generate the
/// kernel of `⊕ e_j A → X`.
pub fn one_point_extension(
    a: &Arc<PresentedAlgebra>,
    x: &Representation,
    vertex: &str,
    arrow_labels: &[&str],
) -> Result<Arc<PresentedAlgebra>> {
    if !x.algebra().same_as(a) {
        return Err(Error::AlgebraMismatch("extension module lives over another algebra".into()));
    }
    let field = a.field();
    let nv = a.num_vertices();
    let rad = x.radical_spaces();
    let mut gens: Vec<(usize, Vec<Scalar>)> = vec![];
    for j in 0..nv {
        let full = Subspace::full(field, x.dims()[j]);
        for c in rad[j].complement_in(&full).columns() {
            gens.push((j, c));
        }
    }
    let off = x.offsets();
    // Coordinates of ⊕_β e_{t(β)} A.
    let mut coords: Vec<(usize, usize)> = vec![];
    for (g, (j, _)) in gens.iter().enumerate() {
        for b in a.basis_from(*j) {
            coords.push((g, b));
        }
    }
    let cols: Vec<Vec<Scalar>> = coords
        .iter()
        .map(|&(g, b)| {
            let p = &a.basis()[b];
            let img = x.path_matrix(p).mul_vec(&gens[g].1);
            let mut v = vec![field.zero(); x.dim()];
            for (k, c) in img.into_iter().enumerate() {
                v[off[p.end] + k] = c;
            }
            v
        })
        .collect();
    let kernel = if coords.is_empty() {
        Matrix::zeros(field, 0, 0)
    } else if x.dim() == 0 {
        Matrix::identity(field, coords.len())
    } else {
        Matrix::from_columns(field, x.dim(), &cols).kernel_basis()
    };
    let kvecs: Vec<Vec<Scalar>> = if kernel.cols() == 0 {
        vec![]
    } else {
        let (red, piv) = kernel.transpose().rref();
        (0..piv.len()).map(|r| red.row(r).to_vec()).collect()
    };
    // K·J, spanned by k·a for arrows a.
    let arrow_idx: Vec<usize> = (0..a.quiver().num_arrows())
        .map(|ar| a.basis_index(&Path::arrow(a.quiver(), ar)).unwrap())
        .collect();
    let mut kj = vec![];
    for k in &kvecs {
        for &ai in &arrow_idx {
            let mut v = vec![field.zero(); coords.len()];
            for (pos, c) in k.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (g, b) = coords[pos];
                for (idx, d) in a.basis_product(b, ai) {
                    let target = coords.iter().position(|&(h, e)| h == g && e == *idx).unwrap();
                    v[target] += &(c * d);
                }
            }
            kj.push(v);
        }
    }
    let mut span = Subspace::span_vectors(field, coords.len(), &kj);

    let mut quiver = a.quiver().clone();
    let w = quiver.add_vertex(vertex)?;
    let mut counter = 0;
    let mut new_arrows = vec![];
    for (g, (j, _)) in gens.iter().enumerate() {
        let label = fresh_label(&quiver, arrow_labels.get(g).copied(), &format!("{vertex}_"), &mut counter);
        new_arrows.push(quiver.add_arrow(&label, w, *j)?);
    }
    let mut relations: Vec<PathPoly> = a.relations().to_vec();
    for k in &kvecs {
        if span.contains_vector(k) {
            continue;
        }
        span = span.sum(&Subspace::span_vectors(field, coords.len(), std::slice::from_ref(k)));
        let mut r = PathPoly::zero(field);
        for (pos, c) in k.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (g, b) = coords[pos];
            let p = &a.basis()[b];
            let mut arrows = vec![new_arrows[g]];
            arrows.extend_from_slice(&p.arrows);
            r.add_term(Path { start: w, end: p.end, arrows }, c.clone());
        }
        relations.push(r);
    }
    let b = PresentedAlgebra::build(field, quiver, relations, a.length_cap())?;
    if b.dim() != a.dim() + x.dim() + 1 {
        return Err(Error::Verification(format!(
            "one-point extension has dimension {}, expected {}",
            b.dim(),
            a.dim() + x.dim() + 1
        )));
    }
    Ok(b)
}

/// `[X]A`, computed as the opposite of `A^op[DX]`.
pub fn coextension(
    a: &Arc<PresentedAlgebra>,
    x: &Representation,
    vertex: &str,
    arrow_labels: &[&str],
) -> Result<Arc<PresentedAlgebra>> {
    let op = a.opposite();
    let dx = x.dual().reattach(&op)?;
    let ext = one_point_extension(&op, &dx, vertex, arrow_labels)?;
    let rels = ext.relations().iter().map(PathPoly::reversed).collect();
    PresentedAlgebra::build(a.field(), ext.quiver().opposite(), rels, a.length_cap())
}

/// An `A`-`A`-bimodule with an optional associative multiplication.
/// Actions are stored for every path-basis element of `A`: `left[b]` is
/// `q ↦ b·q` and `right[b]` is `q ↦ q·b`, both on column coordinates.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub algebra: Arc<PresentedAlgebra>,
    pub labels: Vec<String>,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
    /// `mu[i][j]` = coordinates of `q_i q_j`; `None` means zero.
    pub mu: Option<Vec<Vec<Vec<Scalar>>>>,
}

impl Bimodule {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn zero(a: &Arc<PresentedAlgebra>) -> Bimodule {
        let field = a.field();
        Bimodule {
            algebra: a.clone(),
            labels: vec![],
            left: (0..a.dim()).map(|_| Matrix::zeros(field, 0, 0)).collect(),
            right: (0..a.dim()).map(|_| Matrix::zeros(field, 0, 0)).collect(),
            mu: None,
        }
    }

    /// Builds the actions of all basis paths from those of the vertices and
    /// arrows.
    pub fn from_generators(
        a: &Arc<PresentedAlgebra>,
        labels: Vec<String>,
        left_vertex: &[Matrix],
        left_arrow: &[Matrix],
        right_vertex: &[Matrix],
        right_arrow: &[Matrix],
        mu: Option<Vec<Vec<Vec<Scalar>>>>,
    ) -> Bimodule {
        let mut left = vec![];
        let mut right = vec![];
        for p in a.basis() {
            // (a1 a2)·q = a1·(a2·q) and q·(a1 a2) = (q·a1)·a2.
            let mut l = left_vertex[p.start].clone();
            let mut r = right_vertex[p.start].clone();
            for &ar in &p.arrows {
                l = l.mul(&left_arrow[ar]);
                r = right_arrow[ar].mul(&r);
            }
            left.push(l);
            right.push(r);
        }
        Bimodule { algebra: a.clone(), labels, left, right, mu }
    }

    /// An ideal `I` of `b` viewed as a bimodule over `c`, where `c`'s
    /// paths are lifted to `b` by arrow label (a section of `b → c`).
    pub fn ideal_over(
        b: &Arc<PresentedAlgebra>,
        c: &Arc<PresentedAlgebra>,
        ideal_elements: &[Vec<Scalar>],
    ) -> Result<Bimodule> {
        let field = b.field();
        let ideal = Subspace::span(&b.ideal_span(ideal_elements));
        let basis = ideal.basis().columns();
        let lift = |p: &Path| -> Result<Vec<Scalar>> {
            let bq = b.quiver();
            let cq = c.quiver();
            let start = bq
                .vertex_index(cq.vertex_label(p.start))
                .ok_or_else(|| Error::UnknownLabel(cq.vertex_label(p.start).to_string()))?;
            let labels: Vec<&str> = p.arrows.iter().map(|&x| cq.arrow(x).label.as_str()).collect();
            Ok(b.path_element(&bq.path_from_labels(start, &labels)?))
        };
        for r in c.relations() {
            let mut acc = vec![field.zero(); b.dim()];
            for (p, coef) in r.terms() {
                for (x, y) in acc.iter_mut().zip(lift(p)?) {
                    *x += &(coef * &y);
                }
            }
            if acc.iter().any(|x| !x.is_zero()) {
                return Err(Error::Precondition("label section is not an algebra map".into()));
            }
        }
        let coords = |v: &[Scalar]| ideal.coordinates(v).expect("ideal is closed");
        let act = |f: &dyn Fn(&[Scalar]) -> Vec<Scalar>| {
            let cols: Vec<Vec<Scalar>> = basis.iter().map(|q| coords(&f(q))).collect();
            Matrix::from_columns(field, basis.len(), &cols)
        };
        let mut left = vec![];
        let mut right = vec![];
        for p in c.basis() {
            let x = lift(p)?;
            left.push(act(&|q| b.mul(&x, q)));
            right.push(act(&|q| b.mul(q, &x)));
        }
        let mu: Vec<Vec<Vec<Scalar>>> =
            basis.iter().map(|q| basis.iter().map(|r| coords(&b.mul(q, r))).collect()).collect();
        let labels = basis
            .iter()
            .enumerate()
            .map(|(i, q)| {
                let poly = b.to_poly(q);
                let terms: Vec<_> = poly.terms().collect();
                if terms.len() == 1 && terms[0].1.is_one() {
                    b.quiver().format_path(terms[0].0)
                } else {
                    format!("q{}", i + 1)
                }
            })
            .collect();
        let any_mu = mu.iter().flatten().flatten().any(|x| !x.is_zero());
        Ok(Bimodule { algebra: c.clone(), labels, left, right, mu: any_mu.then_some(mu) })
    }

    /// The right module `Q_A` as a representation.
    pub fn right_module(&self) -> Representation {
        let a = &self.algebra;
        self.module_from(|v| &self.right[a.basis_index(&Path::trivial(v)).unwrap()], |ar| {
            &self.right[a.basis_index(&Path::arrow(a.quiver(), ar)).unwrap()]
        }, false)
    }

    /// The left module `_A Q` as a right module over the opposite algebra.
    pub fn left_module_op(&self) -> Representation {
        let a = &self.algebra;
        let rep = self.module_from(|v| &self.left[a.basis_index(&Path::trivial(v)).unwrap()], |ar| {
            &self.left[a.basis_index(&Path::arrow(a.quiver(), ar)).unwrap()]
        }, true);
        rep.reattach_unchecked(a.opposite())
    }

    fn module_from<'s>(
        &'s self,
        vertex: impl Fn(usize) -> &'s Matrix,
        arrow: impl Fn(usize) -> &'s Matrix,
        reversed: bool,
    ) -> Representation {
        let a = &self.algebra;
        let field = a.field();
        let nv = a.num_vertices();
        let bases: Vec<Matrix> = (0..nv).map(|v| vertex(v).column_space()).collect();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let maps = (0..a.quiver().num_arrows())
            .map(|ar| {
                let arr = a.quiver().arrow(ar);
                let (s, t) = if reversed { (arr.target, arr.source) } else { (arr.source, arr.target) };
                if dims[s] == 0 || dims[t] == 0 {
                    return Matrix::zeros(field, dims[t], dims[s]);
                }
                let img = arrow(ar).mul(&bases[s]);
                bases[t].solve(&img).expect("actions respect idempotents")
            })
            .collect();
        Representation::new_unchecked(a.clone(), dims, maps)
    }

    /// Structure constants of `A ⊕ Q` with `(a,q)(a',q') = (aa', aq' + qa' + qq')`.
    pub fn split_structure(&self) -> StructureAlgebra {
        let a = &self.algebra;
        let field = a.field();
        let n = a.dim();
        let m = self.dim();
        let mut labels: Vec<String> = a.basis().iter().map(|p| a.quiver().format_path(p)).collect();
        labels.extend(self.labels.iter().cloned());
        let mut one = a.one();
        one.extend(vec![field.zero(); m]);
        StructureAlgebra::from_fn(field, labels, one, |i, j| {
            let mut v = vec![field.zero(); n + m];
            if i < n && j < n {
                for (k, c) in a.basis_product(i, j) {
                    v[*k] = c.clone();
                }
            } else if i < n {
                for r in 0..m {
                    v[n + r] = self.left[i].get(r, j - n).clone();
                }
            } else if j < n {
                for r in 0..m {
                    v[n + r] = self.right[j].get(r, i - n).clone();
                }
            } else if let Some(mu) = &self.mu {
                for (r, c) in mu[i - n][j - n].iter().enumerate() {
                    v[n + r] = c.clone();
                }
            }
            v
        })
    }
}

/// `A ⋉ Q`, presented by quiver and relations; labels of `A` and of `Q`'s
/// basis are kept where they become arrows.
pub fn split_extension(q: &Bimodule) -> Result<Arc<PresentedAlgebra>> {
    Ok(split_extension_map(q)?.source)
}

/// The split extension together with its projection `A ⋉ Q → A`.
pub fn split_extension_map(q: &Bimodule) -> Result<QuotientMap> {
    let a = &q.algebra;
    let field = a.field();
    let n = a.dim();
    let m = q.dim();
    let s = q.split_structure();
    if !s.verify() {
        return Err(Error::Precondition("bimodule data does not give an associative algebra".into()));
    }
    // Q is nilpotent iff its powers inside A ⋉ Q vanish.
    let qbasis: Vec<Vec<Scalar>> = (n..n + m).map(|i| s.basis_vector(i)).collect();
    let mut power = qbasis.clone();
    let mut steps = 0;
    while !power.is_empty() {
        steps += 1;
        if steps > m + 1 {
            return Err(Error::NotNilpotent("powers of Q do not vanish".into()));
        }
        let prods: Vec<Vec<Scalar>> = power
            .iter()
            .flat_map(|x| qbasis.iter().map(move |y| (x, y)))
            .map(|(x, y)| s.mul(x, y))
            .collect();
        power = Subspace::span_vectors(field, n + m, &prods).basis().columns();
    }
    let pad = |x: Vec<Scalar>| {
        let mut v = x;
        v.extend(vec![field.zero(); m]);
        v
    };
    let hint = IdempotentHint {
        idempotents: (0..a.num_vertices())
            .map(|v| (a.quiver().vertex_label(v).to_string(), pad(a.idempotent(v))))
            .collect(),
        arrows: (0..a.quiver().num_arrows())
            .map(|ar| (a.quiver().arrow(ar).label.clone(), pad(a.path_element(&Path::arrow(a.quiver(), ar)))))
            .chain((0..m).map(|k| (q.labels[k].clone(), s.basis_vector(n + k))))
            .collect(),
    };
    let out = quiverize(&s, Some(&hint), a.length_cap())?;
    let b = out.algebra.clone();
    let to_b = out.basis_images.inverse().expect("quiverize returns an isomorphism");
    let kernel = if m == 0 {
        Matrix::zeros(field, b.dim(), 0)
    } else {
        Matrix::from_columns(field, b.dim(), &(n..n + m).map(|k| to_b.mul_vec(&s.basis_vector(k))).collect::<Vec<_>>())
    };
    let vertex_images =
        (0..b.num_vertices()).map(|v| a.quiver().vertex_index(b.quiver().vertex_label(v))).collect();
    let arrow_images = out.arrow_elements.iter().map(|x| x[..n].to_vec()).collect();
    let vertex_lifts = (0..a.num_vertices())
        .map(|v| b.quiver().vertex_index(a.quiver().vertex_label(v)).expect("vertex labels are kept"))
        .collect();
    let arrow_lifts = (0..a.quiver().num_arrows())
        .map(|ar| to_b.mul_vec(&pad(a.path_element(&Path::arrow(a.quiver(), ar)))))
        .collect();
    Ok(QuotientMap { source: b, target: a.clone(), kernel, vertex_images, arrow_images, vertex_lifts, arrow_lifts })
}
