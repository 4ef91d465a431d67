//! Nef partitions of reflexive polytopes.
//!
//! A partition `E₁ ∪ … ∪ E_r` of the vertices of `Δ*` is nef when the
//! polytopes `∇ᵢ = conv(Eᵢ ∪ {0})` sum to a reflexive `∇` and meet pairwise
//! only in the origin. The matching decomposition on the other side is
//! `Δ = Δ₁ + … + Δ_r` with
//! `Δᵢ = {m : ⟨m, e⟩ ≥ −1 for e ∈ Eᵢ, ⟨m, e⟩ ≥ 0 for the other vertices}`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::int::dot;
use crate::polytope::LatticePolytope;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NefPartition {
    delta: LatticePolytope,
    dual: LatticePolytope,
    parts: Vec<Vec<usize>>,
    nabla_parts: Vec<LatticePolytope>,
    delta_parts: Vec<LatticePolytope>,
    nabla: LatticePolytope,
}

impl NefPartition {
    /// Test a vertex partition of `dual` (given by vertex indices) and derive
    /// all parts. `Ok(None)` when the partition is not nef.
    pub fn from_parts(dual: &LatticePolytope, parts: Vec<Vec<usize>>) -> Result<Option<Self>> {
        let verts = dual
            .lattice_vertices()
            .ok_or(Error::NotReflexive)?;
        let nabla_parts = parts
            .iter()
            .map(|p| hull_with_origin(dual, p.iter().map(|&i| verts[i].clone()).collect()))
            .collect::<Result<Vec<_>>>()?;
        let Some(nabla) = nef_sum(&nabla_parts)? else {
            return Ok(None);
        };
        let delta = dual.dual()?;
        let delta_parts = supporting_parts(dual, &verts, &parts)?;
        let nef = NefPartition {
            delta,
            dual: dual.clone(),
            parts,
            nabla_parts,
            delta_parts,
            nabla,
        };
        nef.check_delta_side()?;
        Ok(Some(nef))
    }

    /// The codimension `r`.
    pub fn codim(&self) -> usize {
        self.parts.len()
    }

    /// The reflexive polytope `Δ`.
    pub fn delta(&self) -> &LatticePolytope {
        &self.delta
    }

    /// `Δ*`, whose vertices are partitioned.
    pub fn dual(&self) -> &LatticePolytope {
        &self.dual
    }

    /// Vertex indices of `Δ*` in each part.
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// The vertices `Eᵢ` of each part.
    pub fn part_vertices(&self) -> Vec<Vec<Vec<i64>>> {
        let verts = self.dual.lattice_vertices().expect("reflexive");
        self.parts
            .iter()
            .map(|p| p.iter().map(|&i| verts[i].clone()).collect())
            .collect()
    }

    /// `∇ᵢ = conv(Eᵢ ∪ {0})`.
    pub fn nabla_parts(&self) -> &[LatticePolytope] {
        &self.nabla_parts
    }

    /// `Δᵢ`, the polytopes whose Minkowski sum is `Δ`.
    pub fn delta_parts(&self) -> &[LatticePolytope] {
        &self.delta_parts
    }

    /// `∇ = ∇₁ + … + ∇_r`.
    pub fn nabla(&self) -> &LatticePolytope {
        &self.nabla
    }

    /// Minkowski decomposition and pairwise intersections on the `Δ` side,
    /// plus the support-function values on the vertices of `Δ*`.
    fn check_delta_side(&self) -> Result<()> {
        for (i, p) in self.delta_parts.iter().enumerate() {
            if !p.is_lattice() {
                return Err(Error::PartInconsistent(format!("Δ_{i} has rational vertices")));
            }
        }
        let mut sum = self.delta_parts[0].clone();
        for p in &self.delta_parts[1..] {
            sum = sum.minkowski_sum(p)?;
        }
        if sum != self.delta {
            return Err(Error::PartInconsistent("Σ Δ_i differs from Δ".into()));
        }
        if !pairwise_origin_only(&self.delta_parts)? {
            return Err(Error::PartInconsistent("Δ_i ∩ Δ_j ≠ {0}".into()));
        }
        let verts = self.dual.lattice_vertices().expect("reflexive");
        for (v, e) in verts.iter().enumerate() {
            for (i, p) in self.delta_parts.iter().enumerate() {
                let lv = p.lattice_vertices().expect("checked above");
                let mut min = i128::MAX;
                for m in &lv {
                    min = min.min(dot(m, e)?);
                }
                let expect = if self.parts[i].contains(&v) { -1 } else { 0 };
                if min != expect {
                    return Err(Error::PartInconsistent(format!(
                        "support value {min} of Δ_{i} on vertex {v}, expected {expect}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Pairing bound `⟨Δᵢ, ∇ⱼ⟩ ≥ −δᵢⱼ` checked on vertices.
    pub fn verify_pairing_box(&self) -> bool {
        self.pairing_box_holds().unwrap_or(false)
    }

    fn pairing_box_holds(&self) -> Result<bool> {
        for (i, dp) in self.delta_parts.iter().enumerate() {
            let Some(dv) = dp.lattice_vertices() else {
                return Ok(false);
            };
            for (j, np) in self.nabla_parts.iter().enumerate() {
                let Some(nv) = np.lattice_vertices() else {
                    return Ok(false);
                };
                let bound = if i == j { -1 } else { 0 };
                for m in &dv {
                    for n in &nv {
                        if dot(m, n)? < bound {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// The dual nef partition: `∇` with `∇* = conv(Δ₁ ∪ … ∪ Δ_r)`, whose
    /// vertices are split according to the `Δᵢ` containing them. The roles of
    /// the `Δᵢ` and `∇ᵢ` swap.
    pub fn dual_nef_partition(&self) -> Result<NefPartition> {
        let mut all = Vec::new();
        for p in &self.delta_parts {
            all.extend(p.lattice_vertices().expect("lattice parts"));
        }
        let nabla_dual = LatticePolytope::from_points(self.delta.side(), self.delta.dim(), &all)?;
        if nabla_dual != self.nabla.dual()? {
            return Err(Error::PartInconsistent("conv(∪ Δ_i) is not dual to ∇".into()));
        }
        let verts = nabla_dual.lattice_vertices().expect("lattice hull");
        let mut parts = vec![Vec::new(); self.codim()];
        for (vi, v) in verts.iter().enumerate() {
            let owners: Vec<usize> = (0..self.codim())
                .filter(|&i| self.delta_parts[i].contains(v).unwrap_or(false))
                .collect();
            match owners[..] {
                [i] => parts[i].push(vi),
                _ => {
                    return Err(Error::PartInconsistent(format!(
                        "vertex {vi} of ∇* lies in {} parts",
                        owners.len()
                    )))
                }
            }
        }
        if supporting_parts(&nabla_dual, &verts, &parts)? != self.nabla_parts {
            return Err(Error::PartInconsistent("dual parts do not reproduce ∇_i".into()));
        }
        let dual = NefPartition {
            delta: self.nabla.clone(),
            dual: nabla_dual,
            parts,
            nabla_parts: self.delta_parts.clone(),
            delta_parts: self.nabla_parts.clone(),
            nabla: self.delta.clone(),
        };
        dual.check_delta_side()?;
        Ok(dual)
    }

    /// Sets of vertices per part, for comparing partitions across duals.
    pub fn part_sets(&self) -> Vec<Vec<Vec<i64>>> {
        let mut v = self.part_vertices();
        for p in &mut v {
            p.sort();
        }
        v
    }
}

fn hull_with_origin(dual: &LatticePolytope, mut pts: Vec<Vec<i64>>) -> Result<LatticePolytope> {
    pts.push(vec![0; dual.dim()]);
    LatticePolytope::from_points(dual.side(), dual.dim(), &pts)
}

/// `Σ ∇ᵢ` when it is reflexive and the parts meet pairwise only in 0.
fn nef_sum(parts: &[LatticePolytope]) -> Result<Option<LatticePolytope>> {
    let mut sum = parts[0].clone();
    for p in &parts[1..] {
        sum = sum.minkowski_sum(p)?;
    }
    if !sum.is_reflexive() {
        return Ok(None);
    }
    if !pairwise_origin_only(parts)? {
        return Ok(None);
    }
    Ok(Some(sum))
}

fn pairwise_origin_only(parts: &[LatticePolytope]) -> Result<bool> {
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let c = parts[i].intersect(&parts[j])?;
            if c.intrinsic_dim() != Some(0) || c.vertices()[0].numerator().iter().any(|&x| x != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn supporting_parts(
    dual: &LatticePolytope,
    verts: &[Vec<i64>],
    parts: &[Vec<usize>],
) -> Result<Vec<LatticePolytope>> {
    parts
        .iter()
        .map(|p| {
            let ineqs: Vec<Vec<i64>> = verts
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    let mut h = Vec::with_capacity(e.len() + 1);
                    h.push(i64::from(p.contains(&i)));
                    h.extend_from_slice(e);
                    h
                })
                .collect();
            LatticePolytope::from_inequalities(dual.side().opposite(), dual.dim(), &ineqs, &[])
        })
        .collect()
}

/// Partitions of `0..n` into exactly `r` nonempty blocks as restricted
/// growth strings, in lexicographic order. Block `i` is the block whose
/// smallest element is the `i`-th to appear.
pub fn set_partitions(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r == 0 || r > n {
        return out;
    }
    let mut a = vec![0usize; n];
    fn rec(a: &mut Vec<usize>, i: usize, used: usize, r: usize, out: &mut Vec<Vec<usize>>) {
        let n = a.len();
        if i == n {
            if used == r {
                out.push(a.clone());
            }
            return;
        }
        // not enough positions left to open the remaining blocks
        if r - used > n - i {
            return;
        }
        for b in 0..=used.min(r - 1) {
            a[i] = b;
            rec(a, i + 1, used.max(b + 1), r, out);
        }
    }
    a[0] = 0;
    rec(&mut a, 1, 1, r, &mut out);
    out
}

fn blocks(labels: &[usize], r: usize) -> Vec<Vec<usize>> {
    let mut parts = vec![Vec::new(); r];
    for (i, &b) in labels.iter().enumerate() {
        parts[b].push(i);
    }
    parts
}

/// All nef partitions of `dual`'s vertices into `r` nonempty unordered parts,
/// parts ordered by their lexicographically least vertex.
pub fn enumerate_nef_partitions(dual: &LatticePolytope, r: usize) -> Result<Vec<NefPartition>> {
    enumerate_with(dual, r, false)
}

/// As [`enumerate_nef_partitions`]; with `ordered` every permutation of the
/// parts is reported separately.
pub fn enumerate_with(dual: &LatticePolytope, r: usize, ordered: bool) -> Result<Vec<NefPartition>> {
    if !dual.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    if r == 0 {
        return Err(Error::InvalidInput("codimension must be positive".into()));
    }
    let n = dual.vertices().len();
    let candidates = set_partitions(n, r);
    let found: Vec<Option<NefPartition>> = candidates
        .par_iter()
        .map(|labels| NefPartition::from_parts(dual, blocks(labels, r)))
        .collect::<Result<_>>()?;
    let unordered: Vec<NefPartition> = found.into_iter().flatten().collect();
    if !ordered {
        return Ok(unordered);
    }
    let mut out = Vec::new();
    for p in unordered {
        for perm in permutations(r) {
            let mut q = p.clone();
            q.parts = perm.iter().map(|&i| p.parts[i].clone()).collect();
            q.nabla_parts = perm.iter().map(|&i| p.nabla_parts[i].clone()).collect();
            q.delta_parts = perm.iter().map(|&i| p.delta_parts[i].clone()).collect();
            out.push(q);
        }
    }
    Ok(out)
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(r - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, r - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}
