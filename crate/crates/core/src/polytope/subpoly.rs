//! Reflexive lattice subpolytopes obtained by dropping a few lattice points.
//!
//! Let `S` be the lattice points of `P` and `Q ⊆ P` a reflexive lattice
//! polytope. Every facet of `Q` has a primitive normal `n` with
//! `⟨n, x⟩ ≥ −1` on `Q`, tight on a spanning set of points of `S`. The points
//! of `S` outside `Q` are exactly those cut off by some facet, i.e. the union
//! of the sets `D(n) = {p ∈ S : ⟨n, p⟩ < −1}` over the facets of `Q`.
//!
//! So the search runs in two stages:
//!
//! 1. find every integer `n` with `|D(n)| ≤ k` whose tight set
//!    `{p ∈ S : ⟨n, p⟩ = −1}` spans the space, by branch and bound over a
//!    box of normals (pruning boxes that surely cut more than `k` points or
//!    whose possibly-tight points cannot span);
//! 2. enumerate unions `D` of those cut sets with `|D| ≤ k`, and keep the
//!    ones for which `conv(S \ D)` is reflexive.
//!
//! Stage 2 is exhaustive over the candidates from stage 1, and stage 1 is
//! exhaustive over all facets any such `Q` could have, so no subpolytope
//! within the budget is missed.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::ToPrimitive;

use super::{LatticePolytope, Side};
use crate::error::{Error, Result};
use crate::exact::int::rank;

/// A reflexive subpolytope together with the points of `P` it leaves out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subpolytope {
    pub polytope: LatticePolytope,
    pub dropped: Vec<Vec<i64>>,
    pub points: usize,
}

/// All reflexive lattice subpolytopes `Q = conv(S')` with `S' ⊆ S` and at
/// most `max_drop` points of `S` outside `Q`, largest first.
///
/// Each `Q` is the full hull of the kept points, so it is recorded once.
pub fn reflexive_subpolytopes(p: &LatticePolytope, max_drop: usize) -> Result<Vec<Subpolytope>> {
    if !p.is_lattice() {
        return Err(Error::InvalidInput("subpolytope search needs a lattice polytope".into()));
    }
    if !p.has_interior_origin() {
        return Err(Error::OriginNotInterior);
    }
    let d = p.dim();
    let pts = p.lattice_points()?;
    let normals = candidate_normals(&pts, d, max_drop)?;

    // distinct cut sets; the empty set contributes nothing to unions
    let mut cut_sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (_, cut) in &normals {
        if !cut.is_empty() {
            cut_sets.insert(cut.clone());
        }
    }
    let gens: Vec<BTreeSet<usize>> = cut_sets.into_iter().map(|c| c.into_iter().collect()).collect();

    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    seen.insert(BTreeSet::new());
    let mut frontier = vec![BTreeSet::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            for g in &gens {
                let v: BTreeSet<usize> = u.union(g).copied().collect();
                if v.len() <= max_drop && !seen.contains(&v) {
                    seen.insert(v.clone());
                    next.push(v);
                }
            }
        }
        frontier = next;
    }

    let mut out = Vec::new();
    for drop in &seen {
        // a reflexive Q leaves out exactly the union of the cut sets contained in it
        let closure: BTreeSet<usize> = gens
            .iter()
            .filter(|g| g.is_subset(drop))
            .flat_map(|g| g.iter().copied())
            .collect();
        if &closure != drop {
            continue;
        }
        let kept: Vec<Vec<i64>> = pts
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, x)| x.clone())
            .collect();
        let q = LatticePolytope::from_points(Side::M, d, &kept)?.with_side(p.side());
        if q.is_reflexive() {
            out.push(Subpolytope {
                polytope: q,
                dropped: drop.iter().map(|&i| pts[i].clone()).collect(),
                points: kept.len(),
            });
        }
    }
    out.sort_by(|a, b| {
        b.points
            .cmp(&a.points)
            .then_with(|| a.polytope.vertices().cmp(b.polytope.vertices()))
    });
    Ok(out)
}

/// Whether entry `i` is maximal under inclusion within `list`.
///
/// Both polytopes are hulls of their lattice points, so `Qᵢ ⊆ Qⱼ` exactly
/// when everything `Qⱼ` drops is also dropped by `Qᵢ`.
pub fn is_maximal(list: &[Subpolytope], i: usize) -> bool {
    let qi = &list[i];
    !list.iter().enumerate().any(|(j, other)| {
        j != i
            && other.points > qi.points
            && other.dropped.iter().all(|x| qi.dropped.contains(x))
    })
}

/// Integer normals `n` with at most `k` points strictly below `−1` and a
/// spanning set of points at exactly `−1`, each with its cut set.
fn candidate_normals(pts: &[Vec<i64>], d: usize, k: usize) -> Result<BTreeMap<Vec<i64>, Vec<usize>>> {
    // Cramer + Hadamard: n solves A·n = −1 for d independent points, so each
    // |n_j| ≤ Π_i ‖row_i with one entry replaced by −1‖ ≤ (max‖p‖² + 1)^(d/2).
    let max_sq: i128 = pts
        .iter()
        .map(|p| p.iter().map(|&x| x as i128 * x as i128).sum::<i128>())
        .max()
        .unwrap_or(0);
    let bound: BigInt = Roots::sqrt(&num_traits::pow(BigInt::from(max_sq + 1), d)) + 1;
    let bound = bound.to_i64().filter(|b| *b < 1 << 50).ok_or(Error::Overflow)?;
    let mut out = BTreeMap::new();
    let mut stack = vec![(vec![-bound; d], vec![bound; d])];
    while let Some((lo, hi)) = stack.pop() {
        let mut cut = 0usize;
        let mut maybe_tight: Vec<Vec<i64>> = Vec::new();
        let mut pruned = false;
        for p in pts {
            let (mut mn, mut mx) = (0i128, 0i128);
            for j in 0..d {
                let a = p[j] as i128 * lo[j] as i128;
                let b = p[j] as i128 * hi[j] as i128;
                mn += a.min(b);
                mx += a.max(b);
            }
            if mx < -1 {
                cut += 1;
                if cut > k {
                    pruned = true;
                    break;
                }
            } else if mn <= -1 {
                maybe_tight.push(p.clone());
            }
        }
        if pruned || maybe_tight.len() < d || rank(&maybe_tight)? < d {
            continue;
        }
        let widest = (0..d).max_by_key(|&j| hi[j] - lo[j]).unwrap();
        if hi[widest] == lo[widest] {
            // a single normal: evaluate exactly
            let n = lo;
            let mut cut_set = Vec::new();
            let mut tight = Vec::new();
            for (i, p) in pts.iter().enumerate() {
                let v: i128 = p.iter().zip(&n).map(|(&a, &b)| a as i128 * b as i128).sum();
                if v < -1 {
                    cut_set.push(i);
                } else if v == -1 {
                    tight.push(p.clone());
                }
            }
            if cut_set.len() <= k && rank(&tight)? == d {
                out.insert(n, cut_set);
            }
            continue;
        }
        let mid = lo[widest] + (hi[widest] - lo[widest]).div_euclid(2);
        let mut hi1 = hi.clone();
        hi1[widest] = mid;
        let mut lo2 = lo.clone();
        lo2[widest] = mid + 1;
        stack.push((lo2, hi));
        stack.push((lo, hi1));
    }
    Ok(out)
}
