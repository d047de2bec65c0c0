//! Quivers, paths and linear combinations of paths.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Quiver {
        Quiver::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<usize> {
        if self.vertex_index(label).is_some() || self.arrow_index(label).is_some() {
            return Err(Error::Parse(format!("duplicate label {label}")));
        }
        self.vertices.push(label.to_string());
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, label: &str, source: usize, target: usize) -> Result<usize> {
        if self.vertex_index(label).is_some() || self.arrow_index(label).is_some() {
            return Err(Error::Parse(format!("duplicate label {label}")));
        }
        if source >= self.vertices.len() || target >= self.vertices.len() {
            return Err(Error::Parse(format!("arrow {label} has an undeclared endpoint")));
        }
        self.arrows.push(Arrow { label: label.to_string(), source, target });
        Ok(self.arrows.len() - 1)
    }

    /// Builds a quiver from vertex labels and `(label, source, target)` triples
    /// given by vertex label.
    pub fn from_labels(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        let mut q = Quiver::new();
        for v in vertices {
            q.add_vertex(v)?;
        }
        for (a, s, t) in arrows {
            let s = q.vertex_index(s).ok_or_else(|| Error::UnknownLabel(s.to_string()))?;
            let t = q.vertex_index(t).ok_or_else(|| Error::UnknownLabel(t.to_string()))?;
            q.add_arrow(a, s, t)?;
        }
        Ok(q)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// Same vertices and arrows, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { label: a.label.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// Connected components of the underlying graph, as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = vec![];
            while let Some(v) = stack.pop() {
                members.push(v);
                for a in &self.arrows {
                    for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                        if x == v && comp[y] == usize::MAX {
                            comp[y] = id;
                            stack.push(y);
                        }
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Path from a sequence of arrow labels starting at `start`.
    pub fn path_from_labels(&self, start: usize, labels: &[&str]) -> Result<Path> {
        let mut p = Path::trivial(start);
        for l in labels {
            let a = self.arrow_index(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            p = p
                .extend(self, a)
                .ok_or_else(|| Error::MalformedRelation(format!("arrows do not compose at {l}")))?;
        }
        Ok(p)
    }

    /// Parses a word `a*b*c` (or a vertex label for a trivial path).
    pub fn parse_word(&self, word: &str) -> Result<Path> {
        let word = word.trim();
        if let Some(v) = self.vertex_index(word) {
            return Ok(Path::trivial(v));
        }
        if self.arrow_index(word).is_none() {
            if let Some(v) = word.strip_prefix('e').and_then(|l| self.vertex_index(l)) {
                return Ok(Path::trivial(v));
            }
        }
        let labels: Vec<&str> = word.split('*').map(str::trim).collect();
        let first = self
            .arrow_index(labels[0])
            .ok_or_else(|| Error::UnknownLabel(labels[0].to_string()))?;
        self.path_from_labels(self.arrows[first].source, &labels)
    }

    pub fn format_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e{}", self.vertices[p.start])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    /// Isomorphism of quivers preserving vertex and arrow labels exactly.
    pub fn same_labels(&self, other: &Quiver) -> bool {
        self == other
    }

    /// All bijections of vertices (and arrows) identifying `self` with
    /// `other`. Small quivers only.
    pub fn isomorphisms(&self, other: &Quiver) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        if n != other.num_vertices() || self.num_arrows() != other.num_arrows() {
            return vec![];
        }
        let count = |q: &Quiver| {
            let mut m: HashMap<(usize, usize), usize> = HashMap::new();
            for a in &q.arrows {
                *m.entry((a.source, a.target)).or_default() += 1;
            }
            m
        };
        let (c1, c2) = (count(self), count(other));
        let mut out = vec![];
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn rec(
            i: usize,
            n: usize,
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            c1: &HashMap<(usize, usize), usize>,
            c2: &HashMap<(usize, usize), usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if i == n {
                out.push(perm.clone());
                return;
            }
            for j in 0..n {
                if used[j] {
                    continue;
                }
                perm[i] = j;
                let ok = (0..=i).all(|k| {
                    let f = |x: usize, y: usize, m: &HashMap<(usize, usize), usize>| {
                        m.get(&(x, y)).copied().unwrap_or(0)
                    };
                    f(i, k, c1) == f(perm[i], perm[k], c2) && f(k, i, c1) == f(perm[k], perm[i], c2)
                });
                if ok {
                    used[j] = true;
                    rec(i + 1, n, perm, used, c1, c2, out);
                    used[j] = false;
                }
            }
            perm[i] = usize::MAX;
        }
        rec(0, n, &mut perm, &mut used, &c1, &c2, &mut out);
        out
    }
}

/// A path: start vertex, end vertex and arrow sequence composed left to
/// right. The empty sequence is the trivial path at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { start: v, end: v, arrows: vec![] }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Path {
        let ar = q.arrow(a);
        Path { start: ar.source, end: ar.target, arrows: vec![a] }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn extend(&self, q: &Quiver, a: usize) -> Option<Path> {
        let ar = q.arrow(a);
        if ar.source != self.end {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Some(Path { start: self.start, end: ar.target, arrows })
    }

    /// `self` followed by `other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.end != other.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { start: self.start, end: other.end, arrows })
    }

    /// Reversed path in the opposite quiver.
    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { start: self.end, end: self.start, arrows }
    }

    /// First position where `sub` occurs as a contiguous subword.
    pub fn find_subword(&self, sub: &[usize]) -> Option<usize> {
        if sub.is_empty() || sub.len() > self.arrows.len() {
            return None;
        }
        self.arrows.windows(sub.len()).position(|w| w == sub)
    }

    /// Subpath on arrow positions `from..to`.
    pub fn subpath(&self, q: &Quiver, from: usize, to: usize) -> Path {
        if from == to {
            let v = if from == 0 { self.start } else { q.arrow(self.arrows[from - 1]).target };
            return Path::trivial(v);
        }
        Path {
            start: q.arrow(self.arrows[from]).source,
            end: q.arrow(self.arrows[to - 1]).target,
            arrows: self.arrows[from..to].to_vec(),
        }
    }
}

/// Length first, then lexicographic on arrow indices, then start vertex.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.start.cmp(&other.start))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A linear combination of paths, largest path last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathPoly {
    field: Field,
    terms: BTreeMap<Path, Scalar>,
}

impl PathPoly {
    pub fn zero(field: Field) -> PathPoly {
        PathPoly { field, terms: BTreeMap::new() }
    }

    pub fn from_path(field: Field, p: Path) -> PathPoly {
        let mut r = PathPoly::zero(field);
        r.add_term(p, field.one());
        r
    }

    pub fn from_terms(field: Field, terms: Vec<(Scalar, Path)>) -> PathPoly {
        let mut r = PathPoly::zero(field);
        for (c, p) in terms {
            r.add_term(p, c);
        }
        r
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Path, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &Path) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, p: Path, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p.clone()).or_insert_with(|| self.field.zero());
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add_scaled(&mut self, other: &PathPoly, c: &Scalar) {
        for (p, d) in &other.terms {
            self.add_term(p.clone(), c * d);
        }
    }

    pub fn scale(&self, c: &Scalar) -> PathPoly {
        let mut r = PathPoly::zero(self.field);
        r.add_scaled(self, c);
        r
    }

    pub fn tip(&self) -> Option<(&Path, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn make_monic(&self) -> PathPoly {
        match self.tip() {
            Some((_, c)) => self.scale(&c.inverse()),
            None => self.clone(),
        }
    }

    /// `u * self * v`, dropping non-composable terms.
    pub fn sandwich(&self, u: &Path, v: &Path) -> PathPoly {
        let mut r = PathPoly::zero(self.field);
        for (p, c) in &self.terms {
            if let Some(x) = u.concat(p).and_then(|x| x.concat(v)) {
                r.add_term(x, c.clone());
            }
        }
        r
    }

    pub fn mul(&self, other: &PathPoly) -> PathPoly {
        let mut r = PathPoly::zero(self.field);
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                if let Some(x) = p.concat(q) {
                    r.add_term(x, c * d);
                }
            }
        }
        r
    }

    pub fn reversed(&self) -> PathPoly {
        let mut r = PathPoly::zero(self.field);
        for (p, c) in &self.terms {
            r.add_term(p.reversed(), c.clone());
        }
        r
    }

    pub fn min_len(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).min()
    }

    /// Common `(start, end)` of all terms, or `None` if the terms are not
    /// parallel (or the combination is zero).
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let ends = (first.start, first.end);
        it.all(|p| (p.start, p.end) == ends).then_some(ends)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                s.push_str(&format!("{abs} "));
            }
            s.push_str(&q.format_path(p));
        }
        s
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.start, self.arrows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Quiver {
        Quiver::from_labels(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap()
    }

    #[test]
    fn composition_is_left_to_right() {
        let q = a3();
        let p = q.parse_word("a*b").unwrap();
        assert_eq!((p.start, p.end), (0, 2));
        assert!(q.parse_word("b*a").is_err());
    }

    #[test]
    fn order_is_length_then_lex() {
        let q = a3();
        let e = Path::trivial(2);
        let a = q.parse_word("a").unwrap();
        let b = q.parse_word("b").unwrap();
        let ab = q.parse_word("a*b").unwrap();
        assert!(e < a && a < b && b < ab);
    }

    #[test]
    fn poly_cancellation_and_tip() {
        let q = a3();
        let ab = q.parse_word("a*b").unwrap();
        let mut p = PathPoly::from_path(Field::Rationals, ab.clone());
        assert_eq!(p.tip().unwrap().0, &ab);
        p.add_term(ab, Field::Rationals.from_i64(-1));
        assert!(p.is_zero());
    }

    #[test]
    fn isomorphisms_of_a_square() {
        let q = Quiver::from_labels(
            &["1", "2", "3", "4"],
            &[("a", "4", "2"), ("b", "2", "1"), ("c", "4", "3"), ("d", "3", "1")],
        )
        .unwrap();
        assert_eq!(q.isomorphisms(&q).len(), 2);
    }
}
