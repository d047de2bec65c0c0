//! Structural properties every τ-slice fixture must satisfy.

use std::sync::Arc;

use tauslice::algebra::PresentedAlgebra;
use tauslice::artheory::{ar_quiver, end_algebra, is_hereditary, is_injective, is_projective, tau, tau_inverse, ArCaps, ArQuiver};
use tauslice::exactlin::Subspace;
use tauslice::fixtures::*;
use tauslice::modrep::{annihilator, fac_member, hom_dim, inflate, is_isomorphic, restrict_scalars, Representation};
use tauslice::tautilt::*;

struct Fixture {
    name: &'static str,
    slice: SliceCandidate,
    /// Full AR quiver when the algebra is representation-finite.
    quiver: Option<ArQuiver>,
}

fn fixture(name: &'static str, a: Arc<PresentedAlgebra>, members: Vec<Representation>, finite: bool) -> Fixture {
    let quiver = finite.then(|| ar_quiver(&a, ArCaps::default()).unwrap());
    Fixture { name, slice: SliceCandidate::new(members).unwrap(), quiver }
}

fn fixtures() -> Vec<Fixture> {
    let t = ex5_tilde();
    let a = ex5_a();
    let ap = ex5_a_prime();
    let c = ex5_c();
    let f1 = fig1_algebra();
    let f2 = fig2_algebra();
    let f3 = fig3_algebra();
    vec![
        fixture("EX5 Σ over Ã", t.clone(), ex5_sigma(&t), true),
        fixture("EX5 Σ over A", a.clone(), ex5_sigma(&a), true),
        fixture("EX5 Σ over C", c.clone(), ex5_sigma(&c), true),
        fixture("EX5 Σ1 over A'", ap.clone(), ex5_sigma1(&ap), true),
        fixture("EX5 Σ2 over A'", ap.clone(), ex5_sigma2(&ap), true),
        fixture("EX5 Σ2 over A", a.clone(), ex5_sigma2(&a), true),
        fixture("FIG1 Σ", f1.clone(), fig1_sigma(&f1), true),
        fixture("FIG1 Σ~", f1.clone(), fig1_sigma_tilde(&f1), true),
        fixture("FIG2 Σ", f2.clone(), fig2_sigma(&f2), false),
        fixture("FIG3 Σ", f3.clone(), fig3_sigma(&f3), true),
    ]
}

#[test]
fn every_fixture_is_a_tau_slice() {
    for f in fixtures() {
        assert!(is_tau_slice(&f.slice).unwrap(), "{}", f.name);
    }
}

#[test]
fn immediate_neighbours_outside_are_not_projective_or_injective() {
    for f in fixtures() {
        for x in &f.slice.members {
            for y in immediate_successors(x).unwrap() {
                assert!(f.slice.contains(&y) || !is_projective(&y), "{}", f.name);
            }
            for y in immediate_predecessors(x).unwrap() {
                assert!(f.slice.contains(&y) || !is_injective(&y), "{}", f.name);
            }
        }
    }
}

#[test]
fn internal_quiver_is_acyclic() {
    for f in fixtures() {
        let s = &f.slice;
        let k = s.len();
        let mut r = vec![vec![false; k]; k];
        for (i, x) in s.members.iter().enumerate() {
            for y in immediate_successors(x).unwrap() {
                if let Some(j) = s.position(&y) {
                    r[i][j] = true;
                }
            }
        }
        for m in 0..k {
            for i in 0..k {
                for j in 0..k {
                    if r[i][m] && r[m][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
        assert!((0..k).all(|i| !r[i][i]), "{}", f.name);
    }
}

#[test]
fn endomorphism_algebras_are_hereditary() {
    for f in fixtures() {
        let labels: Vec<String> = (1..=f.slice.len()).map(|i| i.to_string()).collect();
        let e = end_algebra(&f.slice.members, &labels).unwrap();
        assert!(is_hereditary(&e.algebra), "{}", f.name);
    }
}

#[test]
fn weak_and_sectional_convexity() {
    for f in fixtures() {
        let Some(q) = &f.quiver else { continue };
        let nodes = f.slice.nodes_in(q).unwrap();
        assert!(is_weakly_convex(q, &nodes).unwrap(), "{}", f.name);
        if is_complete_tau_slice(&f.slice).unwrap() {
            assert!(is_sectionally_convex(q, &nodes), "{}", f.name);
        }
    }
}

#[test]
fn no_maps_from_inverse_translate() {
    for f in fixtures() {
        let m = f.slice.module();
        let ti = tau_inverse(&m);
        assert!(ti.is_zero() || hom_dim(&ti, &m) == 0, "{}", f.name);
    }
}

#[test]
fn fac_of_inverse_translate_plus_add_is_fac() {
    for f in fixtures() {
        let Some(q) = &f.quiver else { continue };
        let m = f.slice.module();
        let ti = tau_inverse(&m);
        for x in q.modules() {
            let left = (!ti.is_zero() && fac_member(&x, &ti)) || f.slice.contains(&x);
            assert_eq!(left, fac_member(&x, &m), "{} at {}", f.name, x.dim_vector_string());
        }
    }
}

#[test]
fn translates_agree_under_annihilator_ideals() {
    for f in fixtures() {
        let ann = annihilator(&f.slice.module()).columns();
        let k = ann.len().min(6);
        for mask in 0u32..(1 << k) {
            let gens: Vec<_> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| ann[i].clone()).collect();
            let map = f.slice.algebra.quotient_map(&gens).unwrap();
            for x in &f.slice.members {
                let y = inflate(x, &map).unwrap();
                let (t1, t2) = (tau(x), restrict_scalars(&tau(&y), &map).unwrap());
                assert_eq!(t1.dims(), t2.dims(), "{}", f.name);
                assert!(t1.is_zero() || is_isomorphic(&t1, &t2).unwrap(), "{}", f.name);
            }
        }
    }
}

#[test]
fn complete_tau_slices_are_local_slices() {
    for f in fixtures() {
        let Some(q) = &f.quiver else { continue };
        if is_complete_tau_slice(&f.slice).unwrap() {
            assert!(is_local_slice(&f.slice, q).unwrap(), "{}", f.name);
        }
    }
}

#[test]
fn quotient_by_annihilator_is_tilted_with_complete_slice() {
    for f in fixtures() {
        if f.quiver.is_none() {
            continue;
        }
        let ann = annihilator(&f.slice.module()).columns();
        let r = quotient_preservation_check(&f.slice, &ann).unwrap();
        let c = r.quotient.target.clone();
        let s = SliceCandidate::new(r.members.clone()).unwrap();
        let qc = ar_quiver(&c, ArCaps::default()).unwrap();
        assert!(is_complete_slice(&s, &qc).unwrap(), "{}", f.name);
        assert!(is_tilted(&c, SearchOptions::default()).unwrap().witness().is_some(), "{}", f.name);
    }
}

#[test]
fn on_tilted_fixtures_complete_tau_slices_are_complete_slices() {
    for a in [ex5_c(), linear_a(3)] {
        let q = ar_quiver(&a, ArCaps::default()).unwrap();
        let found = find_complete_tau_slices_in(&q, SearchOptions::default()).unwrap();
        assert!(!found.is_empty());
        for s in &found {
            assert!(is_complete_slice(s, &q).unwrap());
        }
        // And conversely every complete slice among the sincere τ-tilting
        // candidates shows up in the search.
        let n = a.num_vertices();
        let ms = q.modules();
        for mask in 0u32..(1 << ms.len()) {
            if mask.count_ones() as usize != n {
                continue;
            }
            let members: Vec<_> = (0..ms.len()).filter(|i| mask >> i & 1 == 1).map(|i| ms[i].clone()).collect();
            let s = SliceCandidate::new(members).unwrap();
            if is_complete_slice(&s, &q).unwrap() {
                assert!(found.iter().any(|t| s.members.iter().all(|m| t.contains(m))));
            }
        }
    }
}

#[test]
fn simply_connected_components_with_slices_are_tilted() {
    for a in [ex5_c(), linear_a(3), linear_a(2)] {
        let q = ar_quiver(&a, ArCaps::default()).unwrap();
        let found = find_complete_tau_slices_in(&q, SearchOptions::default()).unwrap();
        if is_simply_connected_component(&q, 0)
            && is_convex_component(&q, 0)
            && is_generalized_standard(&q, 0).unwrap()
            && !found.is_empty()
        {
            assert!(is_tilted(&a, SearchOptions::default()).unwrap().witness().is_some());
        }
    }
}

#[test]
fn annihilator_span_matches_kernel_of_quotient() {
    for f in fixtures() {
        let ann = annihilator(&f.slice.module());
        let map = f.slice.algebra.quotient_map(&ann.columns()).unwrap();
        assert_eq!(Subspace::span(&ann), Subspace::span(&map.kernel), "{}", f.name);
    }
}
