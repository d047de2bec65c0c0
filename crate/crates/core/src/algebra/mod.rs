//! Basic finite-dimensional algebras presented as `kQ/I`.
//!
//! The ideal is completed to a reduced noncommutative Gröbner basis under
//! the length-then-lexicographic order on paths (arrow order = declaration
//! order); reduced paths form the linear basis.

mod extension;
mod quiver;
mod structure;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

pub use extension::{coextension, one_point_extension, split_extension, split_extension_map, Bimodule};
pub use quiver::{Arrow, Path, PathPoly, Quiver};
pub use structure::{algebra_radical_basis, quiverize, IdempotentHint, Quiverized, StructureAlgebra};

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};

pub const DEFAULT_LENGTH_CAP: usize = 16;

/// Sparse coordinates `(basis index, coefficient)`.
pub type Sparse = Vec<(usize, Scalar)>;

/// The surjection `A → A/I` with the data needed to move modules along it.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub source: Arc<PresentedAlgebra>,
    pub target: Arc<PresentedAlgebra>,
    /// Basis (columns, source coordinates) of the ideal `I`.
    pub kernel: Matrix,
    /// Image vertex of each source vertex (`None` if its idempotent dies).
    pub vertex_images: Vec<Option<usize>>,
    /// Image of each source arrow, in target coordinates.
    pub arrow_images: Vec<Vec<Scalar>>,
    pub vertex_lifts: Vec<usize>,
    /// A preimage of each target arrow, in source coordinates.
    pub arrow_lifts: Vec<Vec<Scalar>>,
}

pub struct PresentedAlgebra {
    field: Field,
    quiver: Quiver,
    relations: Vec<PathPoly>,
    groebner: Vec<PathPoly>,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    table: Vec<Vec<Sparse>>,
    length_cap: usize,
    canonical: String,
    opposite: OnceLock<Arc<PresentedAlgebra>>,
}

impl fmt::Debug for PresentedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PresentedAlgebra")
            .field("canonical", &self.canonical)
            .field("dim", &self.basis.len())
            .finish()
    }
}

impl PartialEq for PresentedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for PresentedAlgebra {}

/// Parses relation strings such as `"a*b - c*d"` against a quiver.
pub fn parse_relation(field: Field, quiver: &Quiver, text: &str) -> Result<PathPoly> {
    let mut poly = PathPoly::zero(field);
    let cleaned = text.replace('-', " - ").replace('+', " + ");
    let mut sign = 1i64;
    let mut coeff: Option<Scalar> = None;
    for tok in cleaned.split_whitespace() {
        match tok {
            "+" => sign = 1,
            "-" => sign = -sign,
            _ if tok.chars().next().is_some_and(|c| c.is_ascii_digit())
                && tok.chars().all(|c| c.is_ascii_digit() || c == '/') =>
            {
                coeff = Some(parse_scalar(field, tok)?);
            }
            _ => {
                let p = quiver.parse_word(tok)?;
                let c = coeff.take().unwrap_or_else(|| field.one());
                let c = if sign < 0 { -c } else { c };
                poly.add_term(p, c);
                sign = 1;
            }
        }
    }
    Ok(poly)
}

/// Parses `n` or `n/d` as a field element.
pub fn parse_scalar(field: Field, tok: &str) -> Result<Scalar> {
    let (neg, body) = match tok.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, tok),
    };
    let bad = || Error::Parse(format!("bad coefficient {tok}"));
    let s = match body.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            field.from_ratio(n, d)?
        }
        None => field.from_i64(body.trim().parse().map_err(|_| bad())?),
    };
    Ok(if neg { -s } else { s })
}

fn reduce(f: &PathPoly, gb: &[PathPoly], quiver: &Quiver) -> PathPoly {
    let field = f.field();
    let mut f = f.clone();
    let mut done = PathPoly::zero(field);
    while let Some((p, c)) = f.tip() {
        let (p, c) = (p.clone(), c.clone());
        let hit = gb.iter().find_map(|g| {
            let t = g.tip().unwrap().0;
            p.find_subword(&t.arrows).map(|pos| (g, pos, t.len()))
        });
        match hit {
            Some((g, pos, len)) => {
                let u = p.subpath(quiver, 0, pos);
                let v = p.subpath(quiver, pos + len, p.len());
                f.add_scaled(&g.sandwich(&u, &v), &-c);
            }
            None => {
                f.add_term(p.clone(), -c.clone());
                done.add_term(p, c);
            }
        }
    }
    done
}

fn interreduce(mut gb: Vec<PathPoly>, quiver: &Quiver) -> Vec<PathPoly> {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < gb.len() {
            let others: Vec<PathPoly> =
                gb.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            let r = reduce(&gb[i], &others, quiver);
            if r.is_zero() {
                gb.remove(i);
                changed = true;
                continue;
            }
            let r = r.make_monic();
            if r != gb[i] {
                gb[i] = r;
                changed = true;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    gb.sort_by(|a, b| a.tip().unwrap().0.cmp(b.tip().unwrap().0));
    gb
}

/// S-polynomials of `f` against `g`: proper overlaps (suffix of tip f =
/// prefix of tip g) and inclusions (tip g inside tip f).
fn s_polys(f: &PathPoly, g: &PathPoly, same: bool, quiver: &Quiver) -> Vec<PathPoly> {
    let tf = f.tip().unwrap().0.clone();
    let tg = g.tip().unwrap().0.clone();
    let (n, m) = (tf.len(), tg.len());
    let mut out = vec![];
    for k in 1..n.min(m) {
        if tf.arrows[n - k..] == tg.arrows[..k] {
            let u = tf.subpath(quiver, 0, n - k);
            let v = tg.subpath(quiver, k, m);
            let mut s = f.sandwich(&Path::trivial(tf.start), &v);
            s.add_scaled(&g.sandwich(&u, &Path::trivial(tg.end)), &f.field().from_i64(-1));
            out.push(s);
        }
    }
    if !same && m <= n {
        if let Some(pos) = tf.find_subword(&tg.arrows) {
            let u = tf.subpath(quiver, 0, pos);
            let v = tf.subpath(quiver, pos + m, n);
            let mut s = f.clone();
            s.add_scaled(&g.sandwich(&u, &v), &f.field().from_i64(-1));
            out.push(s);
        }
    }
    out
}

fn groebner_basis(relations: &[PathPoly], quiver: &Quiver, cap: usize) -> Result<Vec<PathPoly>> {
    let mut gb: Vec<PathPoly> =
        relations.iter().filter(|r| !r.is_zero()).map(PathPoly::make_monic).collect();
    gb = interreduce(gb, quiver);
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..gb.len() {
        for j in 0..gb.len() {
            queue.push_back((i, j));
        }
    }
    // Elements are only appended during completion, so indices stay valid.
    while let Some((i, j)) = queue.pop_front() {
        for s in s_polys(&gb[i], &gb[j], i == j, quiver) {
            let r = reduce(&s, &gb, quiver);
            if r.is_zero() {
                continue;
            }
            let r = r.make_monic();
            if r.tip().unwrap().0.len() > cap || gb.len() > 4096 {
                return Err(Error::CapExceeded(format!(
                    "Gröbner completion exceeded length cap {cap}"
                )));
            }
            gb.push(r);
            let k = gb.len() - 1;
            for l in 0..=k {
                queue.push_back((k, l));
                if l != k {
                    queue.push_back((l, k));
                }
            }
        }
    }
    Ok(interreduce(gb, quiver))
}

fn reduced_paths(quiver: &Quiver, gb: &[PathPoly], cap: usize) -> Result<Vec<Path>> {
    let tips: Vec<Vec<usize>> = gb.iter().map(|g| g.tip().unwrap().0.arrows.clone()).collect();
    let mut out = vec![];
    let mut queue: VecDeque<Path> = (0..quiver.num_vertices()).map(Path::trivial).collect();
    while let Some(p) = queue.pop_front() {
        for a in quiver.arrows_from(p.end) {
            let q = p.extend(quiver, a).unwrap();
            if tips.iter().any(|t| q.arrows.ends_with(t)) {
                continue;
            }
            if q.len() >= cap {
                return Err(Error::CapExceeded(format!(
                    "reduced path of length {cap} found; the quotient may be infinite-dimensional"
                )));
            }
            queue.push_back(q);
        }
        out.push(p);
    }
    out.sort();
    Ok(out)
}

impl PresentedAlgebra {
    /// Builds `kQ/I` from generators of `I`.
    pub fn build(
        field: Field,
        quiver: Quiver,
        relations: Vec<PathPoly>,
        length_cap: usize,
    ) -> Result<Arc<PresentedAlgebra>> {
        for r in &relations {
            if r.is_zero() {
                continue;
            }
            if r.endpoints().is_none() {
                return Err(Error::MalformedRelation(format!(
                    "summands of {} are not parallel",
                    r.display(&quiver)
                )));
            }
            if r.min_len().unwrap() < 2 {
                return Err(Error::NonAdmissible(format!(
                    "{} has a summand of length < 2",
                    r.display(&quiver)
                )));
            }
        }
        let relations: Vec<PathPoly> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        let groebner = groebner_basis(&relations, &quiver, length_cap)?;
        let basis = reduced_paths(&quiver, &groebner, length_cap)?;
        let index: HashMap<Path, usize> =
            basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut table = vec![vec![Vec::new(); basis.len()]; basis.len()];
        for (i, p) in basis.iter().enumerate() {
            for (j, q) in basis.iter().enumerate() {
                if let Some(pq) = p.concat(q) {
                    let nf = reduce(&PathPoly::from_path(field, pq), &groebner, &quiver);
                    table[i][j] = nf.terms().map(|(b, c)| (index[b], c.clone())).collect();
                }
            }
        }
        let canonical = canonical_text(field, &quiver, &groebner);
        Ok(Arc::new(PresentedAlgebra {
            field,
            quiver,
            relations,
            groebner,
            basis,
            index,
            table,
            length_cap,
            canonical,
            opposite: OnceLock::new(),
        }))
    }

    /// Convenience constructor from labels and relation strings.
    pub fn from_spec(
        field: Field,
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
        relations: &[&str],
    ) -> Result<Arc<PresentedAlgebra>> {
        let quiver = Quiver::from_labels(vertices, arrows)?;
        let rels = relations
            .iter()
            .map(|r| parse_relation(field, &quiver, r))
            .collect::<Result<Vec<_>>>()?;
        PresentedAlgebra::build(field, quiver, rels, DEFAULT_LENGTH_CAP)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn relations(&self) -> &[PathPoly] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &[PathPoly] {
        &self.groebner
    }

    pub fn length_cap(&self) -> usize {
        self.length_cap
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Text determined by field, quiver and reduced Gröbner basis. Equal
    /// text means equal presentations.
    pub fn canonical(&self) -> &str {
        &self.canonical
    }

    pub fn same_as(&self, other: &PresentedAlgebra) -> bool {
        std::ptr::eq(self, other) || self.canonical == other.canonical
    }

    /// Indices of basis paths from `i` to `j`.
    pub fn basis_between(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].start == i && self.basis[b].end == j).collect()
    }

    pub fn basis_from(&self, i: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].start == i).collect()
    }

    pub fn basis_to(&self, j: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].end == j).collect()
    }

    pub fn normal_form(&self, f: &PathPoly) -> PathPoly {
        reduce(f, &self.groebner, &self.quiver)
    }

    /// Coordinates of a combination of paths in the path basis.
    pub fn element(&self, f: &PathPoly) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        for (p, c) in self.normal_form(f).terms() {
            v[self.index[p]] = c.clone();
        }
        v
    }

    pub fn path_element(&self, p: &Path) -> Vec<Scalar> {
        self.element(&PathPoly::from_path(self.field, p.clone()))
    }

    pub fn to_poly(&self, x: &[Scalar]) -> PathPoly {
        let mut r = PathPoly::zero(self.field);
        for (i, c) in x.iter().enumerate() {
            r.add_term(self.basis[i].clone(), c.clone());
        }
        r
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn idempotent(&self, v: usize) -> Vec<Scalar> {
        self.basis_vector(self.index[&Path::trivial(v)])
    }

    pub fn one(&self) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        for i in 0..self.num_vertices() {
            v[self.index[&Path::trivial(i)]] = self.field.one();
        }
        v
    }

    /// Product of basis elements `b_i b_j` in sparse coordinates.
    pub fn basis_product(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i][j]
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

    /// Matrix of `y ↦ x y`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> =
            (0..self.dim()).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> =
            (0..self.dim()).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Basis indices of the arrow ideal (the radical).
    pub fn radical_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.basis[i].is_trivial()).collect()
    }

    /// Arrows reversed, relation words reversed. Cached; the opposite of the
    /// opposite has the same presentation as `self`.
    pub fn opposite(self: &Arc<Self>) -> Arc<PresentedAlgebra> {
        self.opposite
            .get_or_init(|| {
                let rels = self.relations.iter().map(PathPoly::reversed).collect();
                PresentedAlgebra::build(self.field, self.quiver.opposite(), rels, self.length_cap)
                    .expect("opposite of a finite-dimensional algebra is finite-dimensional")
            })
            .clone()
    }

    /// Structure constants on the path basis.
    pub fn structure_algebra(&self) -> StructureAlgebra {
        let labels = self.basis.iter().map(|p| self.quiver.format_path(p)).collect();
        StructureAlgebra::new(self.field, labels, self.table.clone(), self.one())
    }

    /// Same algebra over a different field (coefficients reduced).
    pub fn with_field(&self, field: Field) -> Result<Arc<PresentedAlgebra>> {
        let rels = self
            .relations
            .iter()
            .map(|r| {
                let mut out = PathPoly::zero(field);
                for (p, c) in r.terms() {
                    let s = match c {
                        Scalar::Rational(q) => {
                            let n: i64 = q.numer().try_into().map_err(|_| {
                                Error::InvalidField("coefficient too large".into())
                            })?;
                            let d: i64 = q.denom().try_into().map_err(|_| {
                                Error::InvalidField("coefficient too large".into())
                            })?;
                            field.from_ratio(n, d)?
                        }
                        Scalar::Modular { value, .. } => field.from_i64(*value as i64),
                    };
                    out.add_term(p.clone(), s);
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        PresentedAlgebra::build(field, self.quiver.clone(), rels, self.length_cap)
    }

    /// `A / AeA` for `e` the sum of the idempotents at `vertices`: the
    /// vertices and their arrows are deleted.
    pub fn delete_vertices(&self, vertices: &[usize]) -> Result<Arc<PresentedAlgebra>> {
        let keep: Vec<usize> = (0..self.num_vertices()).filter(|v| !vertices.contains(v)).collect();
        let arrows: Vec<usize> = (0..self.quiver.num_arrows())
            .filter(|&a| {
                let ar = self.quiver.arrow(a);
                keep.contains(&ar.source) && keep.contains(&ar.target)
            })
            .collect();
        self.restrict_to(&keep, &arrows)
    }

    /// `A / ⟨arrows⟩`.
    pub fn delete_arrows(&self, arrows: &[usize]) -> Result<Arc<PresentedAlgebra>> {
        let keep_v: Vec<usize> = (0..self.num_vertices()).collect();
        let keep_a: Vec<usize> =
            (0..self.quiver.num_arrows()).filter(|a| !arrows.contains(a)).collect();
        self.restrict_to(&keep_v, &keep_a)
    }

    fn restrict_to(&self, vertices: &[usize], arrows: &[usize]) -> Result<Arc<PresentedAlgebra>> {
        let mut q = Quiver::new();
        let mut vmap = HashMap::new();
        for &v in vertices {
            vmap.insert(v, q.add_vertex(self.quiver.vertex_label(v))?);
        }
        let mut amap = HashMap::new();
        for &a in arrows {
            let ar = self.quiver.arrow(a);
            amap.insert(a, q.add_arrow(&ar.label, vmap[&ar.source], vmap[&ar.target])?);
        }
        let rels = self
            .relations
            .iter()
            .map(|r| {
                let mut out = PathPoly::zero(self.field);
                for (p, c) in r.terms() {
                    if !vmap.contains_key(&p.start) || !p.arrows.iter().all(|a| amap.contains_key(a))
                    {
                        continue;
                    }
                    let path = Path {
                        start: vmap[&p.start],
                        end: vmap[&p.end],
                        arrows: p.arrows.iter().map(|a| amap[a]).collect(),
                    };
                    out.add_term(path, c.clone());
                }
                out
            })
            .filter(|r| !r.is_zero())
            .collect();
        PresentedAlgebra::build(self.field, q, rels, self.length_cap)
    }

    /// `A / ⟨elements⟩`. Trivial paths delete vertices, lone arrows delete
    /// arrows, elements inside the square of the arrow ideal become
    /// relations; anything else goes through [`quiverize`].
    pub fn quotient(self: &Arc<Self>, elements: &[Vec<Scalar>]) -> Result<Arc<PresentedAlgebra>> {
        Ok(self.quotient_map(elements)?.target)
    }

    /// The quotient together with the canonical surjection.
    pub fn quotient_map(self: &Arc<Self>, elements: &[Vec<Scalar>]) -> Result<QuotientMap> {
        let mut vertices = vec![];
        let mut arrows = vec![];
        let mut rels = vec![];
        let mut general = false;
        for x in elements {
            let poly = self.to_poly(x);
            if poly.is_zero() {
                continue;
            }
            let terms: Vec<(&Path, &Scalar)> = poly.terms().collect();
            if terms.len() == 1 && terms[0].0.is_trivial() {
                vertices.push(terms[0].0.start);
            } else if terms.len() == 1 && terms[0].0.len() == 1 {
                arrows.push(terms[0].0.arrows[0]);
            } else if poly.min_len().unwrap() >= 2 && poly.endpoints().is_some() {
                rels.push(poly);
            } else {
                general = true;
            }
        }
        let kernel = self.ideal_span(elements);
        if general {
            return self.quotient_general(kernel);
        }
        let mut q = Quiver::new();
        let mut vmap = HashMap::new();
        for v in (0..self.num_vertices()).filter(|v| !vertices.contains(v)) {
            vmap.insert(v, q.add_vertex(self.quiver.vertex_label(v))?);
        }
        let mut amap = HashMap::new();
        for a in 0..self.quiver.num_arrows() {
            let ar = self.quiver.arrow(a);
            if arrows.contains(&a) || !vmap.contains_key(&ar.source) || !vmap.contains_key(&ar.target)
            {
                continue;
            }
            amap.insert(a, q.add_arrow(&ar.label, vmap[&ar.source], vmap[&ar.target])?);
        }
        let translate = |r: &PathPoly| {
            let mut out = PathPoly::zero(self.field);
            for (p, c) in r.terms() {
                if !vmap.contains_key(&p.start)
                    || !vmap.contains_key(&p.end)
                    || !p.arrows.iter().all(|a| amap.contains_key(a))
                {
                    continue;
                }
                let path = Path {
                    start: vmap[&p.start],
                    end: vmap[&p.end],
                    arrows: p.arrows.iter().map(|a| amap[a]).collect(),
                };
                out.add_term(path, c.clone());
            }
            out
        };
        let all: Vec<PathPoly> = self
            .relations
            .iter()
            .chain(rels.iter())
            .map(translate)
            .filter(|r| !r.is_zero())
            .collect();
        let target = PresentedAlgebra::build(self.field, q, all, self.length_cap)?;
        let vertex_images = (0..self.num_vertices()).map(|v| vmap.get(&v).copied()).collect();
        let arrow_images = (0..self.quiver.num_arrows())
            .map(|a| match amap.get(&a) {
                Some(&b) => target.path_element(&Path::arrow(&target.quiver, b)),
                None => vec![self.field.zero(); target.dim()],
            })
            .collect();
        let mut vertex_lifts = vec![0; target.num_vertices()];
        for (&v, &w) in &vmap {
            vertex_lifts[w] = v;
        }
        let mut arrow_lifts = vec![vec![]; target.quiver.num_arrows()];
        for (&a, &b) in &amap {
            arrow_lifts[b] = self.path_element(&Path::arrow(&self.quiver, a));
        }
        Ok(QuotientMap {
            source: self.clone(),
            target,
            kernel,
            vertex_images,
            arrow_images,
            vertex_lifts,
            arrow_lifts,
        })
    }

    fn quotient_general(self: &Arc<Self>, kernel: Matrix) -> Result<QuotientMap> {
        let sa = self.structure_algebra();
        let (quot, proj, picked) = sa.quotient(&kernel);
        let hint = IdempotentHint {
            idempotents: (0..self.num_vertices())
                .map(|v| (self.quiver.vertex_label(v).to_string(), proj.mul_vec(&self.idempotent(v))))
                .filter(|(_, e)| e.iter().any(|c| !c.is_zero()))
                .collect(),
            arrows: (0..self.quiver.num_arrows())
                .map(|a| {
                    let x = self.path_element(&Path::arrow(&self.quiver, a));
                    (self.quiver.arrow(a).label.clone(), proj.mul_vec(&x))
                })
                .collect(),
        };
        let qz = quiverize(&quot, Some(&hint), self.length_cap)?;
        let target = qz.algebra.clone();
        let tinv = qz.basis_images.inverse().expect("verified basis");
        let lift = |y: &[Scalar]| {
            let mut v = vec![self.field.zero(); self.dim()];
            for (k, c) in y.iter().enumerate() {
                v[picked[k]] = c.clone();
            }
            v
        };
        let vertex_images = (0..self.num_vertices())
            .map(|v| target.quiver.vertex_index(self.quiver.vertex_label(v)))
            .collect();
        let arrow_images = (0..self.quiver.num_arrows())
            .map(|a| tinv.mul_vec(&proj.mul_vec(&self.path_element(&Path::arrow(&self.quiver, a)))))
            .collect();
        let vertex_lifts = (0..target.num_vertices())
            .map(|w| self.quiver.vertex_index(target.quiver.vertex_label(w)).expect("labels kept"))
            .collect();
        let arrow_lifts = qz.arrow_elements.iter().map(|x| lift(x)).collect();
        Ok(QuotientMap {
            source: self.clone(),
            target,
            kernel,
            vertex_images,
            arrow_images,
            vertex_lifts,
            arrow_lifts,
        })
    }

    /// True if both algebras have the same labelled quiver and the same
    /// ideal (each relation set reduces to zero modulo the other's ideal).
    pub fn same_presentation(&self, other: &PresentedAlgebra) -> bool {
        let (q1, q2) = (&self.quiver, &other.quiver);
        if q1.num_vertices() != q2.num_vertices() || q1.num_arrows() != q2.num_arrows() {
            return false;
        }
        let vmap: Option<Vec<usize>> =
            q1.vertices().iter().map(|l| q2.vertex_index(l)).collect();
        let Some(vmap) = vmap else { return false };
        let mut amap = vec![];
        for ar in q1.arrows() {
            match q2.arrow_index(&ar.label) {
                Some(b)
                    if q2.arrow(b).source == vmap[ar.source] && q2.arrow(b).target == vmap[ar.target] =>
                {
                    amap.push(b)
                }
                _ => return false,
            }
        }
        let forward = |r: &PathPoly| {
            let mut out = PathPoly::zero(self.field);
            for (p, c) in r.terms() {
                out.add_term(
                    Path {
                        start: vmap[p.start],
                        end: vmap[p.end],
                        arrows: p.arrows.iter().map(|&a| amap[a]).collect(),
                    },
                    c.clone(),
                );
            }
            out
        };
        let mut inv_v = vec![0; vmap.len()];
        for (i, &j) in vmap.iter().enumerate() {
            inv_v[j] = i;
        }
        let mut inv_a = vec![0; amap.len()];
        for (i, &j) in amap.iter().enumerate() {
            inv_a[j] = i;
        }
        let backward = |r: &PathPoly| {
            let mut out = PathPoly::zero(self.field);
            for (p, c) in r.terms() {
                out.add_term(
                    Path {
                        start: inv_v[p.start],
                        end: inv_v[p.end],
                        arrows: p.arrows.iter().map(|&a| inv_a[a]).collect(),
                    },
                    c.clone(),
                );
            }
            out
        };
        self.dim() == other.dim()
            && self.relations.iter().all(|r| other.normal_form(&forward(r)).is_zero())
            && other.relations.iter().all(|r| self.normal_form(&backward(r)).is_zero())
    }

    /// Basis (columns) of the two-sided ideal generated by `elements`.
    pub fn ideal_span(&self, elements: &[Vec<Scalar>]) -> Matrix {
        let mut vs = vec![];
        for x in elements {
            for i in 0..self.dim() {
                let bx = self.mul(&self.basis_vector(i), x);
                if bx.iter().all(Scalar::is_zero) {
                    continue;
                }
                for j in 0..self.dim() {
                    vs.push(self.mul(&bx, &self.basis_vector(j)));
                }
            }
        }
        crate::exactlin::Subspace::span_vectors(self.field, self.dim(), &vs).basis().clone()
    }

    /// Nilpotency index of the radical: least `L` with `rad^L = 0`.
    pub fn loewy_length(&self) -> usize {
        let arrows: Vec<Vec<Scalar>> = (0..self.quiver.num_arrows())
            .map(|a| self.path_element(&Path::arrow(&self.quiver, a)))
            .collect();
        let mut layer: Vec<Vec<Scalar>> =
            self.radical_indices().into_iter().map(|i| self.basis_vector(i)).collect();
        let mut l = 1;
        while layer.iter().any(|x| x.iter().any(|c| !c.is_zero())) {
            let next: Vec<Vec<Scalar>> =
                layer.iter().flat_map(|x| arrows.iter().map(move |a| (x, a))).map(|(x, a)| self.mul(x, a)).collect();
            let span = crate::exactlin::Subspace::span_vectors(self.field, self.dim(), &next);
            layer = span.basis().columns();
            l += 1;
        }
        l
    }
}

fn canonical_text(field: Field, quiver: &Quiver, gb: &[PathPoly]) -> String {
    let mut s = format!("field {field}\n");
    for v in quiver.vertices() {
        s.push_str(&format!("vertex {v}\n"));
    }
    for a in quiver.arrows() {
        s.push_str(&format!(
            "arrow {}: {} -> {}\n",
            a.label,
            quiver.vertex_label(a.source),
            quiver.vertex_label(a.target)
        ));
    }
    for g in gb {
        s.push_str(&format!("groebner {}\n", g.display(quiver)));
    }
    s
}

#[cfg(test)]
mod tests;
