//! Auslander-Reiten theory: translates, almost split sequences, the AR
//! quiver, radical layers of Hom, endomorphism algebras and the functors
//! between `mod A` and `mod End(M)`.

mod arquiver;
mod ass;
mod endo;
mod presentation;
mod relext;

pub use arquiver::{ar_quiver, irreducible_dim, rad1, rad_hom, rad_infinity_into, ArCaps, ArNode, ArQuiver, RadPower};
pub use endo::{end_algebra, is_hereditary, EndAlgebra};
pub use relext::relation_extension_bimodule;
pub use ass::{almost_split_sequence, almost_split_starting, ShortExactSequence};
pub use presentation::{
    ext, ext1, factor_through_mono, from_projectives, hom_mod_injectives, hom_mod_projectives,
    injective_envelope, is_injective, is_projective, lift_to_covers, lift_to_syzygies,
    minimal_projective_presentation, projective_cover, projective_dimension, syzygy, tau,
    tau_inverse, ExtSpace, InjectiveEnvelope, Presentation, ProjectiveCover, QuotientSpace,
};

#[cfg(test)]
mod tests;
