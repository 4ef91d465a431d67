//! Gorenstein cones of nef partitions, their face posets and graded
//! lattice-point counts.
//!
//! For parts `P₁, …, P_r ⊂ R^d` the Cayley cone lives in `R^r × R^d` and is
//! spanned by `(ê_i, p)` for `p ∈ P_i`. Its degree-one slice is the Cayley
//! polytope, and a lattice point `(a, p)` lies in the cone exactly when
//! `a ≥ 0` and `p ∈ Σ a_i P_i`.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::int::{dot, rank};
use crate::exact::matrix::{kernel_basis, IntMatrix};
use crate::nefpart::NefPartition;
use crate::polytope::dd::extreme_rays;
use crate::polytope::enumerate::{for_each_point, Constraints};
use crate::polytope::{LatticePolytope, Side};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinCone {
    side: Side,
    dim: usize,
    parts: Vec<LatticePolytope>,
    rays: Vec<Vec<i64>>,
    facets: Vec<Vec<i64>>,
    /// For each ray, the facets containing it.
    ray_facets: Vec<FixedBitSet>,
    grading: Vec<i64>,
}

impl GorensteinCone {
    /// The Cayley cone over `parts`, all on the same side and of equal dimension.
    pub fn cayley(parts: &[LatticePolytope]) -> Result<Self> {
        let r = parts.len();
        if r == 0 {
            return Err(Error::InvalidInput("no parts".into()));
        }
        let side = parts[0].side();
        let d = parts[0].dim();
        let dim = d + r;
        let mut rays = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            if p.dim() != d || p.side() != side {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: p.dim(),
                });
            }
            let verts = p.lattice_vertices().ok_or(Error::DegenerateCone)?;
            for v in verts {
                let mut g = vec![0; r];
                g[i] = 1;
                g.extend(v);
                rays.push(g);
            }
        }
        rays.sort();
        rays.dedup();
        if rank(&rays)? < dim {
            return Err(Error::DegenerateCone);
        }
        let mut facet_rays = extreme_rays(&rays, dim)?;
        facet_rays.sort_by(|a, b| a.v.cmp(&b.v));
        let facets: Vec<Vec<i64>> = facet_rays.iter().map(|f| f.v.clone()).collect();
        let mut ray_facets = vec![FixedBitSet::with_capacity(facets.len()); rays.len()];
        for (j, f) in facet_rays.iter().enumerate() {
            for i in f.tight.ones() {
                ray_facets[i].insert(j);
            }
        }
        let grading = solve_grading(&rays, dim)?;
        let expected: Vec<i64> = (0..dim).map(|k| i64::from(k < r)).collect();
        if grading != expected {
            return Err(Error::DegenerateCone);
        }
        Ok(GorensteinCone {
            side,
            dim,
            parts: parts.to_vec(),
            rays,
            facets,
            ray_facets,
            grading,
        })
    }

    /// Ambient dimension `d + r`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.parts.len()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn parts(&self) -> &[LatticePolytope] {
        &self.parts
    }

    /// Extreme rays `(ê_i, v)` for the vertices `v` of each part, sorted.
    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    /// Primitive inward facet normals, sorted.
    pub fn facets(&self) -> &[Vec<i64>] {
        &self.facets
    }

    /// The point of the opposite lattice pairing to 1 with every generator.
    pub fn grading(&self) -> &[i64] {
        &self.grading
    }

    /// All degree-one lattice points `(ê_i, p)` with `p ∈ P_i`.
    pub fn generators(&self) -> Result<Vec<Vec<i64>>> {
        let r = self.codim();
        let mut out = Vec::new();
        for (i, p) in self.parts.iter().enumerate() {
            for q in p.lattice_points()? {
                let mut g = vec![0; r];
                g[i] = 1;
                g.extend(q);
                out.push(g);
            }
        }
        out.sort();
        Ok(out)
    }

    /// The degree-one slice `K`, as a polytope of dimension `dim − 1` in the
    /// ambient space.
    pub fn support_polytope(&self) -> Result<LatticePolytope> {
        LatticePolytope::from_points(self.side, self.dim, &self.rays)
    }

    pub fn degree(&self, x: &[i64]) -> i64 {
        x[..self.codim()].iter().sum()
    }

    /// Facets containing the point `x` of the cone.
    pub fn tight_facets(&self, x: &[i64]) -> Result<FixedBitSet> {
        let mut t = FixedBitSet::with_capacity(self.facets.len());
        for (j, f) in self.facets.iter().enumerate() {
            if dot(f, x)? == 0 {
                t.insert(j);
            }
        }
        Ok(t)
    }

    /// Visit every lattice point of degree `m`.
    pub fn for_each_point_of_degree(&self, m: usize, mut f: impl FnMut(&[i64])) -> Result<()> {
        for a in compositions(m, self.codim()) {
            self.for_each_point_over(&a, &mut f)?;
        }
        Ok(())
    }

    /// Points `(a, p)` for a fixed `a`, i.e. `p ∈ Σ a_i P_i`.
    fn for_each_point_over(&self, a: &[usize], f: &mut impl FnMut(&[i64])) -> Result<()> {
        let r = self.codim();
        let d = self.dim - r;
        let mut lo = vec![0i64; d];
        let mut hi = vec![0i64; d];
        for (p, &ai) in self.parts.iter().zip(a) {
            let verts = p.lattice_vertices().expect("lattice parts");
            for j in 0..d {
                let mn = verts.iter().map(|v| v[j]).min().unwrap_or(0);
                let mx = verts.iter().map(|v| v[j]).max().unwrap_or(0);
                lo[j] = lo[j]
                    .checked_add(mn.checked_mul(ai as i64).ok_or(Error::Overflow)?)
                    .ok_or(Error::Overflow)?;
                hi[j] = hi[j]
                    .checked_add(mx.checked_mul(ai as i64).ok_or(Error::Overflow)?)
                    .ok_or(Error::Overflow)?;
            }
        }
        let mut cons = Constraints {
            c: Vec::with_capacity(self.facets.len()),
            a: Vec::with_capacity(self.facets.len()),
        };
        for fac in &self.facets {
            let c: i64 = fac[..r].iter().zip(a).map(|(&x, &ai)| x * ai as i64).sum();
            cons.c.push(c);
            cons.a.push(fac[r..].to_vec());
        }
        let mut x: Vec<i64> = a.iter().map(|&ai| ai as i64).collect();
        x.resize(self.dim, 0);
        for_each_point(&cons, &lo, &hi, |p| {
            x[r..].copy_from_slice(p);
            f(&x);
        })
    }
}

/// The unique `n` with `⟨g, n⟩ = 1` for every ray `g`.
fn solve_grading(rays: &[Vec<i64>], dim: usize) -> Result<Vec<i64>> {
    // kernel of [−1 | g] holds (t, n) with ⟨g, n⟩ = t
    let rows: Vec<Vec<i64>> = rays
        .iter()
        .map(|g| {
            let mut row = vec![-1];
            row.extend_from_slice(g);
            row
        })
        .collect();
    let kb = kernel_basis(&IntMatrix::from_rows(&rows));
    if kb.rows() != 1 {
        return Err(Error::DegenerateCone);
    }
    let v = kb.to_i64_rows()?.remove(0);
    let sign = match v[0] {
        1 => 1,
        -1 => -1,
        _ => return Err(Error::DegenerateCone),
    };
    debug_assert_eq!(v.len(), dim + 1);
    Ok(v[1..].iter().map(|x| x * sign).collect())
}

/// Ordered `r`-tuples of nonnegative integers summing to `m`.
pub fn compositions(m: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == 1 {
            cur.push(m);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=m {
            cur.push(k);
            rec(m - k, r - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r > 0 {
        rec(m, r, &mut Vec::with_capacity(r), &mut out);
    }
    out
}

/// `C_Δ`, the Cayley cone over the parts `Δ_i`.
pub fn build_cone(partition: &NefPartition) -> Result<GorensteinCone> {
    GorensteinCone::cayley(partition.delta_parts())
}

/// `C_∇`, the Cayley cone over the parts `∇_i`, checked to be dual to `C_Δ`.
pub fn dual_cone(partition: &NefPartition) -> Result<GorensteinCone> {
    let cone = build_cone(partition)?;
    let dual = GorensteinCone::cayley(partition.nabla_parts())?;
    verify_dual_pair(&cone, &dual)?;
    Ok(dual)
}

/// Facet normals of each cone are the rays of the other, all pairings of
/// rays are nonnegative, and each grading point is interior to the other cone.
pub fn verify_dual_pair(cone: &GorensteinCone, dual: &GorensteinCone) -> Result<()> {
    if cone.dim != dual.dim || cone.side == dual.side {
        return Err(Error::DualityMismatch("cones not in dual lattices".into()));
    }
    for g in &cone.rays {
        for h in &dual.rays {
            if dot(g, h)? < 0 {
                return Err(Error::DualityMismatch(format!("negative pairing of {g:?} and {h:?}")));
            }
        }
        if dot(g, &dual.grading)? <= 0 {
            return Err(Error::DualityMismatch("grading point on the boundary".into()));
        }
    }
    for h in &dual.rays {
        if dot(h, &cone.grading)? <= 0 {
            return Err(Error::DualityMismatch("grading point on the boundary".into()));
        }
    }
    if cone.facets != dual.rays {
        return Err(Error::DualityMismatch("facets of C_Δ differ from rays of C_∇".into()));
    }
    if dual.facets != cone.rays {
        return Err(Error::DualityMismatch("facets of C_∇ differ from rays of C_Δ".into()));
    }
    Ok(())
}

/// Face lattice of a Gorenstein cone.
///
/// Faces are sorted by rank, then by ray set; face 0 is `{0}` and the last
/// face is the whole cone.
#[derive(Debug, Clone)]
pub struct FacePoset {
    dim: usize,
    rank: Vec<usize>,
    rays: Vec<FixedBitSet>,
    facets: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    covers: Vec<Vec<usize>>,
    dual: Vec<usize>,
    by_facets: HashMap<FixedBitSet, usize>,
}

impl FacePoset {
    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    /// Dimension of the cone, the rank of the top face.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    /// Rays of the cone lying in face `x`.
    pub fn rays(&self, x: usize) -> &FixedBitSet {
        &self.rays[x]
    }

    /// Facets of the cone containing face `x`.
    pub fn facets(&self, x: usize) -> &FixedBitSet {
        &self.facets[x]
    }

    /// Faces `y ≥ x`, including `x`.
    pub fn up(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    /// Faces `z ≤ x`, including `x`.
    pub fn down(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// Faces covering `x`.
    pub fn covers(&self, x: usize) -> &[usize] {
        &self.covers[x]
    }

    /// Index of the dual face `x*` in the dual cone's poset.
    pub fn dual_face(&self, x: usize) -> usize {
        self.dual[x]
    }

    /// The face whose facet set is exactly `facets`, if any.
    pub fn face_with_facets(&self, facets: &FixedBitSet) -> Option<usize> {
        self.by_facets.get(facets).copied()
    }

    /// Elements of the interval `[x, y]`.
    pub fn interval(&self, x: usize, y: usize) -> FixedBitSet {
        let mut s = self.up[x].clone();
        s.intersect_with(&self.down[y]);
        s
    }

    /// `Σ_{z ∈ [x,y]} (−1)^ρ(z) = 0` on every interval of positive length.
    pub fn check_eulerian(&self) -> Result<()> {
        let n = self.len();
        let mut even = FixedBitSet::with_capacity(n);
        for x in 0..n {
            even.set(x, self.rank[x] % 2 == 0);
        }
        for x in 0..n {
            for y in self.up[x].ones() {
                if y == x {
                    continue;
                }
                let s = self.interval(x, y);
                let e = s.intersection_count(&even);
                if 2 * e != s.count_ones(..) {
                    return Err(Error::NotEulerian(x, y));
                }
            }
        }
        Ok(())
    }
}

/// Every intersection of facets, as ray sets.
fn face_ray_sets(cone: &GorensteinCone) -> Vec<FixedBitSet> {
    let nr = cone.rays.len();
    let facet_rays: Vec<FixedBitSet> = (0..cone.facets.len())
        .map(|j| {
            let mut s = FixedBitSet::with_capacity(nr);
            for i in 0..nr {
                s.set(i, cone.ray_facets[i].contains(j));
            }
            s
        })
        .collect();
    let mut all = FixedBitSet::with_capacity(nr);
    all.insert_range(..);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(all.clone());
    let mut stack = vec![all];
    while let Some(f) = stack.pop() {
        for fr in &facet_rays {
            let mut g = f.clone();
            g.intersect_with(fr);
            if !seen.contains(&g) {
                seen.insert(g.clone());
                stack.push(g);
            }
        }
    }
    seen.into_iter().collect()
}

/// Face lattice of `cone`, with the dual-face map into the face lattice of
/// `dual` (the poset of `dual` uses the same construction).
pub fn face_poset(cone: &GorensteinCone, dual: &GorensteinCone) -> Result<FacePoset> {
    verify_dual_pair(cone, dual)?;
    let own = faces_of(cone)?;
    let other = faces_of(dual)?;
    let lookup: HashMap<&FixedBitSet, usize> = other
        .iter()
        .enumerate()
        .map(|(i, (_, rays))| (rays, i))
        .collect();
    let n = own.len();
    let nf = cone.facets.len();
    let mut rank = Vec::with_capacity(n);
    let mut rays = Vec::with_capacity(n);
    let mut facets = Vec::with_capacity(n);
    let mut dualmap = Vec::with_capacity(n);
    for (rk, rs) in &own {
        let mut fs = FixedBitSet::with_capacity(nf);
        fs.insert_range(..);
        for i in rs.ones() {
            fs.intersect_with(&cone.ray_facets[i]);
        }
        // facets of C are the rays of the dual cone, in the same order
        let x_star = *lookup
            .get(&fs)
            .ok_or_else(|| Error::DualityMismatch("tight facets do not span a dual face".into()))?;
        if other[x_star].0 + rk != cone.dim {
            return Err(Error::DualityMismatch("dual face dimensions do not add up".into()));
        }
        rank.push(*rk);
        rays.push(rs.clone());
        facets.push(fs);
        dualmap.push(x_star);
    }
    let mut up = vec![FixedBitSet::with_capacity(n); n];
    let mut down = vec![FixedBitSet::with_capacity(n); n];
    let mut covers = vec![Vec::new(); n];
    for x in 0..n {
        for y in 0..n {
            if rays[x].is_subset(&rays[y]) {
                up[x].insert(y);
                down[y].insert(x);
                if rank[y] == rank[x] + 1 {
                    covers[x].push(y);
                }
            }
        }
    }
    let by_facets = facets.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
    let poset = FacePoset {
        dim: cone.dim,
        rank,
        rays,
        facets,
        up,
        down,
        covers,
        dual: dualmap,
        by_facets,
    };
    if poset.rank[0] != 0 || poset.rank[n - 1] != cone.dim || !poset.up[0].is_full() {
        return Err(Error::DegenerateCone);
    }
    // inclusion reversal of the dual map
    for x in 0..n {
        for &y in &poset.covers[x] {
            let (xs, ys) = (&other[poset.dual[x]].1, &other[poset.dual[y]].1);
            if !ys.is_subset(xs) {
                return Err(Error::DualityMismatch("dual map does not reverse inclusion".into()));
            }
        }
    }
    poset.check_eulerian()?;
    Ok(poset)
}

/// Faces as `(rank, ray set)`, sorted.
fn faces_of(cone: &GorensteinCone) -> Result<Vec<(usize, FixedBitSet)>> {
    let mut faces = Vec::new();
    for rs in face_ray_sets(cone) {
        let vecs: Vec<Vec<i64>> = rs.ones().map(|i| cone.rays[i].clone()).collect();
        faces.push((rank(&vecs)?, rs));
    }
    faces.sort_by(|a, b| {
        a.0.cmp(&b.0)
            .then_with(|| a.1.ones().collect::<Vec<_>>().cmp(&b.1.ones().collect::<Vec<_>>()))
    });
    Ok(faces)
}

/// Which lattice points of a face are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Full,
    Interior,
}

/// Lattice-point counts per face and degree `0..=max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCounts {
    interior: Vec<Vec<u64>>,
    full: Vec<Vec<u64>>,
}

impl GradedCounts {
    pub fn max_degree(&self) -> usize {
        self.full[0].len() - 1
    }

    pub fn get(&self, x: usize, m: usize, region: Region) -> u64 {
        match region {
            Region::Full => self.full[x][m],
            Region::Interior => self.interior[x][m],
        }
    }

    pub fn series(&self, x: usize, region: Region) -> &[u64] {
        match region {
            Region::Full => &self.full[x],
            Region::Interior => &self.interior[x],
        }
    }

    /// Total number of interior points counted over all faces.
    pub fn total_interior(&self) -> u64 {
        self.interior.iter().flatten().sum()
    }
}

/// Count the lattice points of every face at degrees `0..=max_degree`.
///
/// Each point is assigned to the unique face whose relative interior
/// contains it, read off from its set of tight facets. Fails with
/// `CapExceeded` once more than `cap` points have been visited.
pub fn graded_counts(
    cone: &GorensteinCone,
    poset: &FacePoset,
    max_degree: usize,
    cap: Option<usize>,
) -> Result<GradedCounts> {
    let n = poset.len();
    let mut interior = vec![vec![0u64; max_degree + 1]; n];
    for m in 0..=max_degree {
        let comps = compositions(m, cone.codim());
        let partial: Vec<Result<HashMap<usize, u64>>> = comps
            .par_iter()
            .map(|a| {
                let mut local: HashMap<usize, u64> = HashMap::new();
                let mut err = None;
                cone.for_each_point_over(a, &mut |x: &[i64]| {
                    if err.is_some() {
                        return;
                    }
                    match cone.tight_facets(x) {
                        Ok(t) => match poset.face_with_facets(&t) {
                            Some(f) => *local.entry(f).or_default() += 1,
                            None => err = Some(Error::DualityMismatch("point with unknown face".into())),
                        },
                        Err(e) => err = Some(e),
                    }
                })?;
                match err {
                    Some(e) => Err(e),
                    None => Ok(local),
                }
            })
            .collect();
        for p in partial {
            for (f, c) in p? {
                interior[f][m] += c;
            }
        }
        if let Some(cap) = cap {
            let seen: u64 = interior.iter().flatten().sum();
            if seen as usize > cap {
                return Err(Error::CapExceeded(cap));
            }
        }
    }
    let full = (0..n)
        .map(|x| {
            (0..=max_degree)
                .map(|m| poset.down(x).ones().map(|z| interior[z][m]).sum())
                .collect()
        })
        .collect();
    Ok(GradedCounts { interior, full })
}

/// Number of lattice points of degree `m` in face `x`.
pub fn graded_count(
    cone: &GorensteinCone,
    poset: &FacePoset,
    x: usize,
    m: usize,
    region: Region,
) -> Result<u64> {
    let mut count = 0u64;
    let target = poset.facets(x);
    let mut err = None;
    cone.for_each_point_of_degree(m, |p| {
        if err.is_some() {
            return;
        }
        match cone.tight_facets(p) {
            Ok(t) => {
                let hit = match region {
                    Region::Interior => &t == target,
                    Region::Full => target.is_subset(&t),
                };
                if hit {
                    count += 1;
                }
            }
            Err(e) => err = Some(e),
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(side: Side, pts: &[&[i64]]) -> LatticePolytope {
        let pts: Vec<Vec<i64>> = pts.iter().map(|p| p.to_vec()).collect();
        LatticePolytope::from_points(side, pts[0].len(), &pts).unwrap()
    }

    fn square(side: Side) -> LatticePolytope {
        poly(side, &[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]])
    }

    #[test]
    fn segment_cone() {
        let seg = poly(Side::M, &[&[-1], &[1]]);
        let c = GorensteinCone::cayley(&[seg.clone()]).unwrap();
        assert_eq!(c.grading(), &[1, 0]);
        assert_eq!(c.generators().unwrap(), vec![vec![1, -1], vec![1, 0], vec![1, 1]]);
        let d = GorensteinCone::cayley(&[seg.with_side(Side::N)]).unwrap();
        let p = face_poset(&c, &d).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!((0..4).map(|x| p.rank(x)).collect::<Vec<_>>(), vec![0, 1, 1, 2]);
    }

    #[test]
    fn square_cone() {
        let c = GorensteinCone::cayley(&[square(Side::M)]).unwrap();
        assert_eq!(c.facets().len(), 4);
        let cross = square(Side::M).dual().unwrap();
        let d = GorensteinCone::cayley(&[cross]).unwrap();
        verify_dual_pair(&c, &d).unwrap();
        let p = face_poset(&c, &d).unwrap();
        let q = face_poset(&d, &c).unwrap();
        assert_eq!(p.len(), 10);
        for x in 0..p.len() {
            assert_eq!(p.rank(x) + q.rank(p.dual_face(x)), 3);
            assert_eq!(q.dual_face(p.dual_face(x)), x);
        }
        let counts = graded_counts(&c, &p, 2, None).unwrap();
        let top = p.len() - 1;
        assert_eq!(counts.series(top, Region::Full), &[1, 9, 25]);
        assert_eq!(counts.series(0, Region::Interior), &[1, 0, 0]);
        for x in 0..p.len() {
            if p.rank(x) == 1 {
                assert_eq!(counts.series(x, Region::Full), &[1, 1, 1]);
                assert_eq!(counts.series(x, Region::Interior), &[0, 1, 1]);
            }
            for m in 0..=2 {
                assert_eq!(graded_count(&c, &p, x, m, Region::Full).unwrap(), counts.get(x, m, Region::Full));
                assert_eq!(
                    graded_count(&c, &p, x, m, Region::Interior).unwrap(),
                    counts.get(x, m, Region::Interior)
                );
            }
        }
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 2).len(), 4);
        assert_eq!(compositions(2, 3).len(), 6);
        assert_eq!(compositions(0, 2), vec![vec![0, 0]]);
    }

    #[test]
    fn degenerate_parts_rejected() {
        let pt = poly(Side::M, &[&[0, 0]]);
        let seg = poly(Side::M, &[&[-1, 0], &[1, 0]]);
        assert_eq!(GorensteinCone::cayley(&[pt, seg]), Err(Error::DegenerateCone));
    }
}
