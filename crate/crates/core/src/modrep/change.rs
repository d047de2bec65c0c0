//! Moving modules along a quotient map `A → A/I`.

use super::Representation;
use crate::algebra::QuotientMap;
use crate::error::{Error, Result};
use crate::exactlin::Matrix;

/// An `A/I`-module viewed as an `A`-module.
pub fn restrict_scalars(m: &Representation, map: &QuotientMap) -> Result<Representation> {
    if !m.algebra().same_as(&map.target) {
        return Err(Error::AlgebraMismatch("module does not live over the quotient".into()));
    }
    let a = &map.source;
    let field = a.field();
    let dims: Vec<usize> =
        map.vertex_images.iter().map(|w| w.map(|w| m.dims()[w]).unwrap_or(0)).collect();
    let off = m.offsets();
    let maps = (0..a.quiver().num_arrows())
        .map(|ar| {
            let arrow = a.quiver().arrow(ar);
            match (map.vertex_images[arrow.source], map.vertex_images[arrow.target]) {
                (Some(s), Some(t)) => {
                    let act = m.action_matrix(&map.arrow_images[ar]);
                    act.block(off[t], off[s], m.dims()[t], m.dims()[s])
                }
                _ => Matrix::zeros(field, dims[arrow.target], dims[arrow.source]),
            }
        })
        .collect();
    Ok(Representation::new_unchecked(a.clone(), dims, maps))
}

/// An `A`-module annihilated by `I`, viewed as an `A/I`-module.
pub fn inflate(m: &Representation, map: &QuotientMap) -> Result<Representation> {
    if !m.algebra().same_as(&map.source) {
        return Err(Error::AlgebraMismatch("module does not live over the source".into()));
    }
    for k in map.kernel.columns() {
        if !m.action_matrix(&k).is_zero() {
            return Err(Error::IdealActsNonzero(format!(
                "module ({}) is not annihilated by the ideal",
                m.dim_vector_string()
            )));
        }
    }
    let c = &map.target;
    let dims: Vec<usize> = map.vertex_lifts.iter().map(|&v| m.dims()[v]).collect();
    let off = m.offsets();
    let maps = (0..c.quiver().num_arrows())
        .map(|ar| {
            let arrow = c.quiver().arrow(ar);
            let (s, t) = (map.vertex_lifts[arrow.source], map.vertex_lifts[arrow.target]);
            let act = m.action_matrix(&map.arrow_lifts[ar]);
            act.block(off[t], off[s], m.dims()[t], m.dims()[s])
        })
        .collect();
    Ok(Representation::new_unchecked(c.clone(), dims, maps))
}
