//! Exhaustive searches for complete τ-slices and the tiltedness test.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::slices::SliceCandidate;
use crate::algebra::PresentedAlgebra;
use crate::artheory::{ar_quiver, tau, ArCaps, ArQuiver};
use crate::error::{Error, Result};
use crate::modrep::{class_flags, hom_dim, Representation};

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Stop after this many slices.
    pub limit: usize,
    /// Bound on backtracking nodes.
    pub node_cap: usize,
    pub ar_caps: ArCaps,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { limit: usize::MAX, node_cap: 10_000, ar_caps: ArCaps::default() }
    }
}

/// Presection axioms for a set of nodes of a fully enumerated AR quiver.
pub fn is_presection_in(q: &ArQuiver, nodes: &[usize]) -> bool {
    if nodes.is_empty() {
        return false;
    }
    let inside: BTreeSet<usize> = nodes.iter().copied().collect();
    let arrows_ok = q.arrows.iter().all(|&(x, y, _)| {
        (!inside.contains(&x) || inside.contains(&y) || q.tau[y].is_some_and(|t| inside.contains(&t)))
            && (!inside.contains(&y) || inside.contains(&x) || q.tau_inverse(x).is_some_and(|t| inside.contains(&t)))
    });
    if !arrows_ok {
        return false;
    }
    let mut seen = vec![nodes[0]];
    let mut i = 0;
    while i < seen.len() {
        for &(x, y, _) in &q.arrows {
            for (a, b) in [(x, y), (y, x)] {
                if a == seen[i] && inside.contains(&b) && !seen.contains(&b) {
                    seen.push(b);
                }
            }
        }
        i += 1;
    }
    seen.len() == nodes.len()
}

struct Search<'a> {
    q: &'a ArQuiver,
    rigid: Vec<usize>,
    compat: Vec<Vec<bool>>,
    n: usize,
    opts: SearchOptions,
    visited: usize,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn walk(&mut self, start: usize, stack: &mut Vec<usize>) -> Result<()> {
        self.visited += 1;
        if self.visited > self.opts.node_cap {
            return Err(Error::CapExceeded(format!("slice search exceeded {} nodes", self.opts.node_cap)));
        }
        if stack.len() == self.n {
            let nodes: Vec<usize> = stack.iter().map(|&x| self.rigid[x]).collect();
            if is_presection_in(self.q, &nodes) {
                self.found.push(nodes);
            }
            return Ok(());
        }
        if self.rigid.len() - start < self.n - stack.len() {
            return Ok(());
        }
        for x in start..self.rigid.len() {
            if self.found.len() >= self.opts.limit {
                break;
            }
            if stack.iter().all(|&y| self.compat[x][y]) {
                stack.push(x);
                self.walk(x + 1, stack)?;
                stack.pop();
            }
        }
        Ok(())
    }
}

/// Complete τ-slices of a representation-finite algebra, in AR-quiver
/// discovery order: τ-tilting modules (cliques of compatible τ-rigid
/// indecomposables of size `|A|`) whose summands form a presection.
pub fn find_complete_tau_slices_in(q: &ArQuiver, opts: SearchOptions) -> Result<Vec<SliceCandidate>> {
    let ms = q.modules();
    let taus: Vec<Representation> = ms.iter().map(tau).collect();
    let rigid: Vec<usize> = (0..ms.len()).filter(|&i| hom_dim(&ms[i], &taus[i]) == 0).collect();
    let compat: Vec<Vec<bool>> = rigid
        .iter()
        .map(|&i| rigid.iter().map(|&j| hom_dim(&ms[i], &taus[j]) == 0 && hom_dim(&ms[j], &taus[i]) == 0).collect())
        .collect();
    let mut search =
        Search { q, rigid, compat, n: q.algebra.num_vertices(), opts, visited: 0, found: vec![] };
    search.walk(0, &mut vec![])?;
    Ok(search
        .found
        .into_iter()
        .map(|nodes| SliceCandidate { algebra: q.algebra.clone(), members: nodes.iter().map(|&i| ms[i].clone()).collect() })
        .collect())
}

pub fn find_complete_tau_slices(a: &Arc<PresentedAlgebra>, opts: SearchOptions) -> Result<Vec<SliceCandidate>> {
    let q = ar_quiver(a, opts.ar_caps)?;
    find_complete_tau_slices_in(&q, opts)
}

#[derive(Clone, Debug)]
pub enum TiltedVerdict {
    /// A faithful complete τ-slice.
    Tilted(SliceCandidate),
    /// The search was complete and found no faithful τ-slice.
    NotTilted,
    Inconclusive(String),
}

impl TiltedVerdict {
    pub fn witness(&self) -> Option<&SliceCandidate> {
        match self {
            TiltedVerdict::Tilted(s) => Some(s),
            _ => None,
        }
    }
}

/// An algebra is tilted exactly when it has a faithful τ-slice; faithful
/// modules are sincere, so only complete τ-slices need to be searched.
pub fn is_tilted(a: &Arc<PresentedAlgebra>, opts: SearchOptions) -> Result<TiltedVerdict> {
    let q = match ar_quiver(a, opts.ar_caps) {
        Ok(q) => q,
        Err(Error::CapExceeded(why)) => return Ok(TiltedVerdict::Inconclusive(why)),
        Err(e) => return Err(e),
    };
    let slices = match find_complete_tau_slices_in(&q, SearchOptions { limit: usize::MAX, ..opts }) {
        Ok(s) => s,
        Err(Error::CapExceeded(why)) => return Ok(TiltedVerdict::Inconclusive(why)),
        Err(e) => return Err(e),
    };
    Ok(slices
        .into_iter()
        .find(|s| class_flags(&s.module()).faithful)
        .map_or(TiltedVerdict::NotTilted, TiltedVerdict::Tilted))
}
