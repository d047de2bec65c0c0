//! τ-rigid, τ-tilting, support τ-tilting and tilting modules.

use std::sync::Arc;

use crate::algebra::{PresentedAlgebra, QuotientMap};
use crate::artheory::{ar_quiver, projective_dimension, tau, ArCaps};
use crate::error::{Error, Result};
use crate::modrep::{class_flags, decompose, group_isoclasses, hom_dim, inflate, Representation};

pub fn is_tau_rigid(m: &Representation) -> bool {
    hom_dim(m, &tau(m)) == 0
}

/// Number of pairwise non-isomorphic indecomposable summands.
pub fn summand_count(m: &Representation) -> Result<usize> {
    if m.is_zero() {
        return Ok(0);
    }
    let parts: Vec<Representation> = decompose(m)?.into_iter().map(|s| s.module).collect();
    Ok(group_isoclasses(&parts)?.len())
}

pub fn is_tau_tilting(m: &Representation) -> Result<bool> {
    let ok = is_tau_rigid(m) && summand_count(m)? == m.algebra().num_vertices();
    if ok {
        debug_assert!(class_flags(m).sincere, "τ-tilting modules are sincere");
    }
    Ok(ok)
}

/// `A/AeA` for `e` the sum of the idempotents at vertices where `m`
/// vanishes, with `m` moved to it.
pub fn support_algebra(m: &Representation) -> Result<(QuotientMap, Representation)> {
    let a = m.algebra();
    let dead: Vec<_> = (0..a.num_vertices()).filter(|&v| m.dims()[v] == 0).map(|v| a.idempotent(v)).collect();
    let map = a.quotient_map(&dead)?;
    let moved = inflate(m, &map)?;
    Ok((map, moved))
}

pub fn is_support_tau_tilting(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    let (_, moved) = support_algebra(m)?;
    is_tau_tilting(&moved)
}

pub fn is_tilting(m: &Representation) -> Result<bool> {
    let tilting = is_tau_tilting(m)? && projective_dimension(m, 1).is_some_and(|d| d <= 1);
    if tilting {
        debug_assert!(class_flags(m).faithful, "tilting modules are faithful");
    }
    Ok(tilting)
}

/// Counts support τ-tilting modules, zero included, by enumerating sets of
/// pairwise compatible τ-rigid indecomposables. `cap` bounds the number of
/// search nodes.
pub fn count_support_tau_tilting(a: &Arc<PresentedAlgebra>, cap: usize) -> Result<usize> {
    let q = ar_quiver(a, ArCaps::default())?;
    let ms = q.modules();
    let taus: Vec<Representation> = ms.iter().map(tau).collect();
    let rigid: Vec<usize> = (0..ms.len()).filter(|&i| hom_dim(&ms[i], &taus[i]) == 0).collect();
    let k = rigid.len();
    let mut compat = vec![vec![false; k]; k];
    for x in 0..k {
        for y in 0..k {
            let (i, j) = (rigid[x], rigid[y]);
            compat[x][y] = hom_dim(&ms[i], &taus[j]) == 0 && hom_dim(&ms[j], &taus[i]) == 0;
        }
    }
    let n = a.num_vertices();
    let supports: Vec<Vec<bool>> = ms.iter().map(|m| m.dims().iter().map(|&d| d > 0).collect()).collect();
    let mut count = 0;
    let mut visited = 0;
    let mut stack: Vec<usize> = vec![];
    fn walk(
        start: usize,
        stack: &mut Vec<usize>,
        ctx: &(usize, &[Vec<bool>], &[usize], &[Vec<bool>], usize),
        count: &mut usize,
        visited: &mut usize,
    ) -> Result<()> {
        let (n, compat, rigid, supports, cap) = *ctx;
        *visited += 1;
        if *visited > cap {
            return Err(Error::CapExceeded(format!("support τ-tilting count exceeded {cap} search nodes")));
        }
        let mut support = vec![false; supports.first().map_or(0, Vec::len)];
        for &x in stack.iter() {
            for (s, &b) in support.iter_mut().zip(&supports[rigid[x]]) {
                *s |= b;
            }
        }
        if support.iter().filter(|&&b| b).count() == stack.len() {
            *count += 1;
        }
        if stack.len() == n {
            return Ok(());
        }
        for x in start..rigid.len() {
            if stack.iter().all(|&y| compat[x][y]) {
                stack.push(x);
                walk(x + 1, stack, ctx, count, visited)?;
                stack.pop();
            }
        }
        Ok(())
    }
    walk(0, &mut stack, &(n, &compat, &rigid, &supports, cap), &mut count, &mut visited)?;
    Ok(count)
}
