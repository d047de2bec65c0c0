//! τ-tilting theory: τ-rigid and support τ-tilting modules, τ-slices and
//! their relatives, torsion pairs and tilted algebras.

mod extensions;
mod orbit;
mod rigid;
mod search;
mod slices;
mod torsion;

#[cfg(test)]
mod tests;

pub use rigid::{
    count_support_tau_tilting, is_support_tau_tilting, is_tau_rigid, is_tau_tilting, is_tilting, summand_count,
    support_algebra,
};
pub use slices::{
    component_of, convexity_suite, hom_reachability, immediate_predecessors, immediate_successors,
    is_complete_slice, is_complete_slice_bounded, is_complete_tau_slice, is_convex_in_mod, is_local_slice, is_presection, is_section,
    is_sectionally_convex, is_tau_slice, is_weakly_convex, ConvexityReport, SliceCandidate,
};
pub use torsion::{
    bb_verify, bb_verify_dual, quotient_by_annihilator, torsion_pair_of, BBReport, Correspondence,
    TorsionPairReport,
};
pub use orbit::{
    classify_graph, is_convex_component, is_generalized_standard, is_simply_connected_component, orbit_graph,
    quiver_graph_type, GraphType, OrbitGraph,
};
pub use search::{
    find_complete_tau_slices, find_complete_tau_slices_in, is_presection_in, is_tilted, SearchOptions, TiltedVerdict,
};
pub use extensions::{
    onepoint_slice_extend, quotient_preservation_check, splitex_check, transport, OnePointReport,
    QuotientPreservation, SplitExReport,
};
