use std::collections::BTreeSet;

use super::*;
use crate::exactlin::{Field, Matrix, Scalar};
use crate::fixtures;
use crate::modrep::simple;

/// Independent dimension count: all paths of length at most `l` modulo the
/// span of `u r v` truncated at `l`. Valid once every path of length `l`
/// lies in the ideal.
fn brute_force_dim(a: &PresentedAlgebra, l: usize) -> usize {
    let q = a.quiver();
    let mut paths: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
    let mut frontier = paths.clone();
    for _ in 0..l {
        let mut next = vec![];
        for p in &frontier {
            for ar in q.arrows_from(p.end) {
                next.extend(p.extend(q, ar));
            }
        }
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    let index: std::collections::BTreeMap<Path, usize> =
        paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut gens: Vec<Vec<Scalar>> = vec![];
    for r in a.relations() {
        for u in &paths {
            for v in &paths {
                let mut vec = vec![a.field().zero(); paths.len()];
                let mut any = false;
                for (p, c) in r.terms() {
                    if u.end != p.start || p.end != v.start {
                        continue;
                    }
                    let w = u.concat(p).unwrap().concat(v).unwrap();
                    if let Some(&k) = index.get(&w) {
                        vec[k] += c;
                        any = true;
                    }
                }
                if any {
                    gens.push(vec);
                }
            }
        }
    }
    let span = Matrix::from_columns(a.field(), paths.len(), &gens);
    paths.len() - span.rank()
}

fn poly(a: &PresentedAlgebra, s: &str) -> Vec<Scalar> {
    a.element(&parse_relation(a.field(), a.quiver(), s).unwrap())
}

#[test]
fn field_algebra_has_dimension_one() {
    let k = fixtures::field_algebra();
    assert_eq!(k.dim(), 1);
    assert_eq!(k.loewy_length(), 1);
}

#[test]
fn ex2_is_finite_dimensional() {
    let a = fixtures::ex2_algebra();
    assert_eq!(a.dim(), 10);
    assert_eq!(brute_force_dim(&a, 5), 10);
}

#[test]
fn ex1_dimension_matches_enumeration() {
    let a = fixtures::ex1_algebra();
    assert_eq!(a.dim(), brute_force_dim(&a, 6));
}

#[test]
fn path_algebra_dimension() {
    assert_eq!(fixtures::linear_a(4).dim(), 10);
}

#[test]
fn non_admissible_is_rejected() {
    let r = PresentedAlgebra::from_spec(Field::Rationals, &["1"], &[("x", "1", "1")], &[]);
    assert!(matches!(r, Err(Error::CapExceeded(_))), "{r:?}");
    let r = PresentedAlgebra::from_spec(Field::Rationals, &["1"], &[("x", "1", "1")], &["x"]);
    assert!(r.is_err());
}

#[test]
fn opposite_is_an_involution() {
    for a in [fixtures::ex1_algebra(), fixtures::ex2_algebra(), fixtures::fig1_algebra()] {
        let op = a.opposite();
        assert_eq!(op.dim(), a.dim());
        assert!(op.opposite().same_as(&a));
    }
}

#[test]
fn ex2_opposite_relations() {
    let op = fixtures::ex2_algebra().opposite();
    let rels: BTreeSet<String> = op.relations().iter().map(|r| r.display(op.quiver())).collect();
    assert!(rels.contains("beta*alpha"), "{rels:?}");
    assert!(rels.contains("alpha*gamma"), "{rels:?}");
}

#[test]
fn multiplication_is_associative_with_unit() {
    let a = fixtures::ex1_algebra();
    assert!(a.structure_algebra().verify());
}

#[test]
fn quotient_of_ex5_by_omega() {
    let t = fixtures::ex5_tilde();
    let a = t.quotient(&[poly(&t, "omega")]).unwrap();
    assert!(a.same_presentation(&fixtures::ex5_a()));
    assert_eq!(a.dim(), fixtures::ex5_a().dim());
}

#[test]
fn quotient_of_ex1_is_linear_a3() {
    let a = fixtures::ex1_algebra();
    let c = a.quotient(&[poly(&a, "alpha'"), poly(&a, "beta'")]).unwrap();
    assert_eq!(c.dim(), 6);
    assert_eq!(c.quiver().num_arrows(), 2);
    assert!(c.relations().is_empty());
}

#[test]
fn quotient_by_vertex_deletes_it() {
    let a = fixtures::ex5_a();
    let c = a.quotient(&[poly(&a, "e4")]).unwrap();
    assert!(c.same_presentation(&fixtures::ex5_a_prime()), "{}\n{}", c.canonical(), fixtures::ex5_a_prime().canonical());
}

#[test]
fn quiverize_semisimple() {
    let s = StructureAlgebra::from_fn(
        Field::Rationals,
        vec!["x".into(), "y".into(), "z".into()],
        vec![Field::Rationals.one(); 3],
        |i, j| {
            let mut v = vec![Field::Rationals.zero(); 3];
            if i == j {
                v[i] = Field::Rationals.one();
            }
            v
        },
    );
    let q = quiverize(&s, None, DEFAULT_LENGTH_CAP).unwrap();
    assert_eq!(q.algebra.num_vertices(), 3);
    assert_eq!(q.algebra.quiver().num_arrows(), 0);
}

#[test]
fn quiverize_recovers_presentation() {
    for a in [fixtures::ex1_algebra(), fixtures::ex2_algebra(), fixtures::fig2_algebra()] {
        let q = quiverize(&a.structure_algebra(), None, DEFAULT_LENGTH_CAP).unwrap();
        assert_eq!(q.algebra.dim(), a.dim());
        assert_eq!(q.algebra.num_vertices(), a.num_vertices());
        assert_eq!(q.algebra.quiver().num_arrows(), a.quiver().num_arrows());
    }
}

#[test]
fn one_point_extension_of_a_prime() {
    let ap = fixtures::ex5_a_prime();
    let s2 = simple(&ap, ap.quiver().vertex_index("2").unwrap());
    let b = one_point_extension(&ap, &s2, "4", &["delta"]).unwrap();
    assert_eq!(b.dim(), ap.dim() + s2.dim() + 1);
    assert!(b.same_presentation(&fixtures::ex5_a()));
}

#[test]
fn coextension_dimension() {
    let a = fixtures::linear_a(2);
    let s1 = simple(&a, 0);
    let b = coextension(&a, &s1, "0", &[]).unwrap();
    assert_eq!(b.dim(), a.dim() + 2);
}

#[test]
fn split_extension_by_zero() {
    let a = fixtures::ex2_algebra();
    let b = split_extension(&Bimodule::zero(&a)).unwrap();
    assert!(b.same_presentation(&a));
}

#[test]
fn split_extension_recovers_ex5() {
    let a = fixtures::ex5_a();
    let c = fixtures::ex5_c();
    let q = Bimodule::ideal_over(&a, &c, &[poly(&a, "alpha")]).unwrap();
    assert_eq!(q.dim(), 1);
    let b = split_extension(&q).unwrap();
    assert!(b.same_presentation(&a), "{}", b.canonical());
}

#[test]
fn modular_field_quotient() {
    let a = fixtures::ex1_algebra().with_field(Field::prime(3).unwrap()).unwrap();
    assert_eq!(a.dim(), fixtures::ex1_algebra().dim());
}
