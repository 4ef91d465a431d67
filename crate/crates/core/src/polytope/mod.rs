//! Exact geometry of lattice polytopes.
//!
//! A [`LatticePolytope`] carries both representations: sorted vertices and
//! sorted facet inequalities, plus the equations of its affine hull when it
//! is not full-dimensional. Both are canonical, so structural equality is
//! equality of sets.
//!
//! All hull computations go through one routine that finds the extreme rays
//! of a pointed cone (double description). Points are homogenized as
//! `(den, num)` and inequalities as `(c, a)` meaning `c + ⟨a, x⟩ ≥ 0`.

pub(crate) mod dd;
pub(crate) mod enumerate;
pub mod io;
pub mod subpoly;

use std::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::int::{content, dot, gcd_i64, make_primitive, narrow, rank};
use crate::exact::matrix::{kernel_basis, row_lattice_basis, IntMatrix};
use dd::extreme_rays;
use enumerate::{for_each_point, Constraints};

pub use subpoly::reflexive_subpolytopes;

/// Which of the two dual lattices a point lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    M,
    N,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::M => Side::N,
            Side::N => Side::M,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub coords: Vec<i64>,
    pub side: Side,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>, side: Side) -> Self {
        LatticePoint { coords, side }
    }

    /// The pairing `⟨m, n⟩`, defined only across opposite lattices.
    pub fn pairing(&self, other: &LatticePoint) -> Result<i64> {
        if self.side == other.side {
            return Err(Error::SameSidePairing);
        }
        if self.coords.len() != other.coords.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coords.len(),
                got: other.coords.len(),
            });
        }
        narrow(dot(&self.coords, &other.coords)?)
    }
}

/// A rational point `num / den` with `den > 0` in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoint {
    num: Vec<i64>,
    den: i64,
}

impl QPoint {
    pub fn integral(coords: Vec<i64>) -> Self {
        QPoint { num: coords, den: 1 }
    }

    /// From a homogeneous vector `(den, num…)` with `den > 0`.
    fn from_homogeneous(h: &[i64]) -> Self {
        debug_assert!(h[0] > 0);
        let g = h.iter().fold(0, |g, &x| gcd_i64(g, x));
        QPoint {
            den: h[0] / g,
            num: h[1..].iter().map(|x| x / g).collect(),
        }
    }

    fn homogeneous(&self) -> Vec<i64> {
        let mut h = Vec::with_capacity(self.num.len() + 1);
        h.push(self.den);
        h.extend_from_slice(&self.num);
        h
    }

    pub fn numerator(&self) -> &[i64] {
        &self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    pub fn to_integral(&self) -> Option<&[i64]> {
        self.is_integral().then_some(&self.num[..])
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .num
            .iter()
            .map(|&x| {
                let g = gcd_i64(x, self.den);
                let (n, d) = (x / g.max(1), self.den / g.max(1));
                if d == 1 {
                    n.to_string()
                } else {
                    format!("{n}/{d}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The inequality `⟨normal, x⟩ ≥ −offset`, stored homogeneously as a
/// primitive integer vector `(c, a)` meaning `c + ⟨a, x⟩ ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    h: Vec<i64>,
}

impl HalfSpace {
    fn from_homogeneous(mut h: Vec<i64>) -> Self {
        make_primitive(&mut h);
        HalfSpace { h }
    }

    /// `⟨normal, x⟩ ≥ −offset` for a primitive normal and integer offset.
    pub fn new(normal: Vec<i64>, offset: i64) -> Self {
        let mut h = Vec::with_capacity(normal.len() + 1);
        h.push(offset);
        h.extend(normal);
        Self::from_homogeneous(h)
    }

    pub fn homogeneous(&self) -> &[i64] {
        &self.h
    }

    /// Primitive normal vector.
    pub fn normal(&self) -> Vec<i64> {
        let mut a = self.h[1..].to_vec();
        make_primitive(&mut a);
        a
    }

    /// Offset relative to the primitive normal, as `(num, den)` in lowest terms.
    pub fn offset(&self) -> (i64, i64) {
        let g = content(&self.h[1..]);
        if g == 0 {
            return (self.h[0], 1);
        }
        let d = gcd_i64(self.h[0], g);
        (self.h[0] / d, g / d)
    }

    /// `c + ⟨a, x⟩` for an integer point.
    pub fn eval(&self, x: &[i64]) -> Result<i128> {
        Ok(dot(&self.h[1..], x)? + self.h[0] as i128)
    }

    fn eval_homogeneous(&self, p: &[i64]) -> Result<i128> {
        dot(&self.h, p)
    }
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.offset();
        let normal: Vec<String> = self.normal().iter().map(i64::to_string).collect();
        if d == 1 {
            write!(f, "<({}), x> >= {}", normal.join(" "), -n)
        } else {
            write!(f, "<({}), x> >= {}/{}", normal.join(" "), -n, d)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    side: Side,
    dim: usize,
    vertices: Vec<QPoint>,
    facets: Vec<HalfSpace>,
    /// Homogeneous equations `(c, a)` of the affine hull, `c + ⟨a, x⟩ = 0`,
    /// as a lattice basis in Hermite normal form.
    equations: Vec<Vec<i64>>,
    /// For each facet, the vertices lying on it.
    incidence: Vec<FixedBitSet>,
}

impl LatticePolytope {
    pub fn empty(side: Side, dim: usize) -> Self {
        LatticePolytope {
            side,
            dim,
            vertices: Vec::new(),
            facets: Vec::new(),
            equations: Vec::new(),
            incidence: Vec::new(),
        }
    }

    /// Convex hull of lattice points.
    pub fn from_points(side: Side, dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        let mut hom = Vec::with_capacity(points.len());
        for p in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            let mut h = Vec::with_capacity(dim + 1);
            h.push(1);
            h.extend_from_slice(p);
            hom.push(h);
        }
        Self::from_homogeneous(side, dim, hom)
    }

    /// Convex hull of rational points.
    pub fn from_qpoints(side: Side, dim: usize, points: &[QPoint]) -> Result<Self> {
        for p in points {
            if p.num.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.num.len(),
                });
            }
        }
        Self::from_homogeneous(side, dim, points.iter().map(QPoint::homogeneous).collect())
    }

    fn from_homogeneous(side: Side, dim: usize, mut pts: Vec<Vec<i64>>) -> Result<Self> {
        for p in &mut pts {
            make_primitive(p);
        }
        pts.sort();
        pts.dedup();
        if pts.is_empty() {
            return Ok(Self::empty(side, dim));
        }
        let g = IntMatrix::from_rows(&pts);
        let equations = kernel_basis(&g).to_i64_rows()?;
        let k = dim + 1 - equations.len();
        // coordinates of candidate normals relative to a basis of the span
        let basis: Option<Vec<Vec<i64>>> = if k == dim + 1 {
            None
        } else {
            Some(row_lattice_basis(&g).to_i64_rows()?)
        };
        let project = |p: &Vec<i64>| -> Result<Vec<i64>> {
            match &basis {
                None => Ok(p.clone()),
                Some(b) => b.iter().map(|r| narrow(dot(p, r)?)).collect(),
            }
        };
        let m: Vec<Vec<i64>> = pts.iter().map(project).collect::<Result<_>>()?;
        let lift = |y: &[i64]| -> Result<Vec<i64>> {
            match &basis {
                None => Ok(y.to_vec()),
                Some(b) => {
                    let mut a = vec![0i128; dim + 1];
                    for (yi, row) in y.iter().zip(b) {
                        for (aj, rj) in a.iter_mut().zip(row) {
                            *aj = aj
                                .checked_add(*yi as i128 * *rj as i128)
                                .ok_or(Error::Overflow)?;
                        }
                    }
                    let mut a: Vec<i64> = a.into_iter().map(narrow).collect::<Result<_>>()?;
                    make_primitive(&mut a);
                    Ok(a)
                }
            }
        };

        let normals = lazy_facets(&m, k)?;
        let mut facets: Vec<HalfSpace> = Vec::new();
        for y in &normals {
            let tight_any = m.iter().any(|p| dot(p, y).map(|v| v == 0).unwrap_or(false));
            if tight_any {
                facets.push(HalfSpace::from_homogeneous(lift(y)?));
            }
        }
        facets.sort();
        facets.dedup();

        // tight facet sets of every point
        let nf = facets.len();
        let mut tight: Vec<FixedBitSet> = Vec::with_capacity(pts.len());
        for p in &pts {
            let mut t = FixedBitSet::with_capacity(nf);
            for (fi, f) in facets.iter().enumerate() {
                let v = f.eval_homogeneous(p)?;
                debug_assert!(v >= 0);
                if v == 0 {
                    t.insert(fi);
                }
            }
            tight.push(t);
        }
        let mut vertices: Vec<QPoint> = Vec::new();
        for (i, p) in pts.iter().enumerate() {
            let is_vertex = (0..pts.len()).all(|j| j == i || !tight[i].is_subset(&tight[j]));
            if is_vertex {
                vertices.push(QPoint::from_homogeneous(p));
            }
        }
        vertices.sort();
        let mut poly = LatticePolytope {
            side,
            dim,
            vertices,
            facets,
            equations,
            incidence: Vec::new(),
        };
        poly.incidence = poly.compute_incidence()?;
        Ok(poly)
    }

    fn compute_incidence(&self) -> Result<Vec<FixedBitSet>> {
        let homs: Vec<Vec<i64>> = self.vertices.iter().map(QPoint::homogeneous).collect();
        self.facets
            .iter()
            .map(|f| {
                let mut b = FixedBitSet::with_capacity(homs.len());
                for (i, h) in homs.iter().enumerate() {
                    if f.eval_homogeneous(h)? == 0 {
                        b.insert(i);
                    }
                }
                Ok(b)
            })
            .collect()
    }

    /// Polytope `{x : c + ⟨a, x⟩ ≥ 0 for each inequality, = 0 for each equation}`,
    /// both given homogeneously as `(c, a)`.
    pub fn from_inequalities(
        side: Side,
        dim: usize,
        inequalities: &[Vec<i64>],
        equations: &[Vec<i64>],
    ) -> Result<Self> {
        for r in inequalities.iter().chain(equations) {
            if r.len() != dim + 1 {
                return Err(Error::DimensionMismatch {
                    expected: dim + 1,
                    got: r.len(),
                });
            }
        }
        let mut rows: Vec<Vec<i64>> = inequalities.to_vec();
        let mut h0 = vec![0; dim + 1];
        h0[0] = 1;
        rows.push(h0);
        // parametrize the solution space of the equations
        let kernel: Option<Vec<Vec<i64>>> = if equations.is_empty() {
            None
        } else {
            Some(kernel_basis(&IntMatrix::from_rows(equations)).to_i64_rows()?)
        };
        let q = kernel.as_ref().map_or(dim + 1, Vec::len);
        if q == 0 {
            return Ok(Self::empty(side, dim));
        }
        let m: Vec<Vec<i64>> = match &kernel {
            None => rows,
            Some(kb) => rows
                .iter()
                .map(|r| kb.iter().map(|b| narrow(dot(r, b)?)).collect())
                .collect::<Result<_>>()?,
        };
        if rank(&m)? < q {
            return Err(Error::Unbounded);
        }
        let rays = extreme_rays(&m, q)?;
        let mut pts = Vec::with_capacity(rays.len());
        for r in rays {
            let y: Vec<i64> = match &kernel {
                None => r.v,
                Some(kb) => {
                    let mut y = vec![0i128; dim + 1];
                    for (t, b) in r.v.iter().zip(kb) {
                        for (yj, bj) in y.iter_mut().zip(b) {
                            *yj = yj.checked_add(*t as i128 * *bj as i128).ok_or(Error::Overflow)?;
                        }
                    }
                    y.into_iter().map(narrow).collect::<Result<_>>()?
                }
            };
            if y[0] == 0 {
                return Err(Error::Unbounded);
            }
            pts.push(y);
        }
        Self::from_homogeneous(side, dim, pts)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the affine hull; `None` for the empty polytope.
    pub fn intrinsic_dim(&self) -> Option<usize> {
        if self.vertices.is_empty() {
            None
        } else {
            Some(self.dim - self.equations.len())
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.intrinsic_dim() == Some(self.dim)
    }

    pub fn vertices(&self) -> &[QPoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    pub fn equations(&self) -> &[Vec<i64>] {
        &self.equations
    }

    /// Vertices lying on facet `i`.
    pub fn facet_vertices(&self, i: usize) -> &FixedBitSet {
        &self.incidence[i]
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(QPoint::is_integral)
    }

    /// Vertices as integer vectors, if the polytope is a lattice polytope.
    pub fn lattice_vertices(&self) -> Option<Vec<Vec<i64>>> {
        self.vertices
            .iter()
            .map(|v| v.to_integral().map(<[i64]>::to_vec))
            .collect()
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool> {
        if self.is_empty() {
            return Ok(false);
        }
        for e in &self.equations {
            if dot(&e[1..], x)? + e[0] as i128 != 0 {
                return Ok(false);
            }
        }
        for f in &self.facets {
            if f.eval(x)? < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when the origin lies strictly inside every facet of a
    /// full-dimensional polytope.
    pub fn has_interior_origin(&self) -> bool {
        self.is_full_dimensional() && self.facets.iter().all(|f| f.h[0] > 0)
    }

    /// `{x : ⟨y, x⟩ ≥ −1 for all y ∈ P}`, living on the opposite lattice.
    pub fn dual(&self) -> Result<Self> {
        if !self.has_interior_origin() {
            return Err(Error::OriginNotInterior);
        }
        let pts: Vec<Vec<i64>> = self.facets.iter().map(|f| f.h.clone()).collect();
        Self::from_homogeneous(self.side.opposite(), self.dim, pts)
    }

    pub fn is_reflexive(&self) -> bool {
        self.is_lattice()
            && self.has_interior_origin()
            && self.facets.iter().all(|f| f.h[0] == 1 && content(&f.h[1..]) == 1)
    }

    /// Integer points in the polytope, lexicographically sorted.
    pub fn lattice_points(&self) -> Result<Vec<Vec<i64>>> {
        let mut out = Vec::new();
        self.for_each_lattice_point(|p| out.push(p.to_vec()))?;
        if !self.equations.is_empty() {
            out.sort();
        }
        Ok(out)
    }

    pub fn count_lattice_points(&self) -> Result<usize> {
        let mut n = 0usize;
        self.for_each_lattice_point(|_| n += 1)?;
        Ok(n)
    }

    /// Visit every integer point; lexicographic order when full-dimensional.
    pub fn for_each_lattice_point(&self, mut f: impl FnMut(&[i64])) -> Result<()> {
        if self.is_empty() {
            return Ok(());
        }
        let Some(param) = AffineLattice::of(self)? else {
            return Ok(());
        };
        let k = param.dirs.len();
        // box from vertex coordinates in the parameter space
        let mut lo = vec![i64::MAX; k];
        let mut hi = vec![i64::MIN; k];
        for v in &self.vertices {
            let t = param.coordinates(v)?;
            for j in 0..k {
                lo[j] = lo[j].min(floor_rat(&t[j])?);
                hi[j] = hi[j].max(ceil_rat(&t[j])?);
            }
        }
        let mut cons = Constraints {
            c: Vec::with_capacity(self.facets.len()),
            a: Vec::with_capacity(self.facets.len()),
        };
        for fct in &self.facets {
            cons.c.push(narrow(fct.eval(&param.origin)?)?);
            cons.a.push(
                param
                    .dirs
                    .iter()
                    .map(|d| narrow(dot(&fct.h[1..], d)?))
                    .collect::<Result<_>>()?,
            );
        }
        let mut x = vec![0i64; self.dim];
        let mut err = None;
        for_each_point(&cons, &lo, &hi, |t| {
            if err.is_some() {
                return;
            }
            match param.point(t, &mut x) {
                Ok(()) => f(&x),
                Err(e) => err = Some(e),
            }
        })?;
        err.map_or(Ok(()), Err)
    }

    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        if self.is_empty() || other.is_empty() {
            return Ok(Self::empty(self.side, self.dim));
        }
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                let mut h = Vec::with_capacity(self.dim + 1);
                h.push(narrow(a.den as i128 * b.den as i128)?);
                for (x, y) in a.num.iter().zip(&b.num) {
                    h.push(narrow(*x as i128 * b.den as i128 + *y as i128 * a.den as i128)?);
                }
                pts.push(h);
            }
        }
        Self::from_homogeneous(self.side, self.dim, pts)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        if self.is_empty() || other.is_empty() {
            return Ok(Self::empty(self.side, self.dim));
        }
        let ineqs: Vec<Vec<i64>> = self
            .facets
            .iter()
            .chain(&other.facets)
            .map(|f| f.h.clone())
            .collect();
        let eqs: Vec<Vec<i64>> = self.equations.iter().chain(&other.equations).cloned().collect();
        Self::from_inequalities(self.side, self.dim, &ineqs, &eqs)
    }

    /// Integer dilation `k·P`.
    pub fn dilate(&self, k: i64) -> Result<Self> {
        let pts: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| {
                let mut h = v.homogeneous();
                for x in &mut h[1..] {
                    *x = x.checked_mul(k).ok_or(Error::Overflow)?;
                }
                Ok(h)
            })
            .collect::<Result<_>>()?;
        Self::from_homogeneous(self.side, self.dim, pts)
    }

    /// Same point set re-tagged onto the other lattice (no geometric change).
    pub fn with_side(mut self, side: Side) -> Self {
        self.side = side;
        self
    }
}

/// Extreme rays of `{y : M·y ≥ 0}` computed lazily: start from a spanning
/// subset of rows, then add the most violated row for each offending ray
/// until every row is satisfied. Rows are generator points, so this keeps
/// the double description close to the vertex count.
fn lazy_facets(m: &[Vec<i64>], k: usize) -> Result<Vec<Vec<i64>>> {
    if k == 1 {
        // a single point: the cone is a ray with no facets
        return Ok(Vec::new());
    }
    let mut chosen: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (i, r) in m.iter().enumerate() {
        rows.push(r.clone());
        if rank(&rows)? == rows.len() {
            chosen.push(i);
        } else {
            rows.pop();
        }
        if chosen.len() == k {
            break;
        }
    }
    // extremes along each coordinate speed convergence
    for j in 0..k {
        let (mut imin, mut imax) = (0, 0);
        for (i, r) in m.iter().enumerate() {
            if r[j] < m[imin][j] {
                imin = i;
            }
            if r[j] > m[imax][j] {
                imax = i;
            }
        }
        chosen.push(imin);
        chosen.push(imax);
    }
    chosen.sort_unstable();
    chosen.dedup();
    loop {
        let sub: Vec<Vec<i64>> = chosen.iter().map(|&i| m[i].clone()).collect();
        // the generators span; extreme rays of the dual cone are facet normals
        let rays = extreme_rays(&sub, k)?;
        let mut add: Vec<usize> = Vec::new();
        for r in &rays {
            let mut worst: Option<(i128, usize)> = None;
            for (i, p) in m.iter().enumerate() {
                let v = dot(p, &r.v)?;
                if v < 0 && worst.is_none_or(|(w, _)| v < w) {
                    worst = Some((v, i));
                }
            }
            if let Some((_, i)) = worst {
                add.push(i);
            }
        }
        if add.is_empty() {
            return Ok(rays.into_iter().map(|r| r.v).collect());
        }
        chosen.extend(add);
        chosen.sort_unstable();
        chosen.dedup();
    }
}

/// The integer points of an affine subspace, `origin + Σ tᵢ·dirᵢ`, with the
/// directions in echelon form.
struct AffineLattice {
    origin: Vec<i64>,
    dirs: Vec<Vec<i64>>,
}

impl AffineLattice {
    fn of(p: &LatticePolytope) -> Result<Option<Self>> {
        let n = p.dim;
        if p.equations.is_empty() {
            let dirs = (0..n)
                .map(|i| {
                    let mut e = vec![0; n];
                    e[i] = 1;
                    e
                })
                .collect();
            return Ok(Some(AffineLattice {
                origin: vec![0; n],
                dirs,
            }));
        }
        let kb = kernel_basis(&IntMatrix::from_rows(&p.equations)).to_i64_rows()?;
        // echelon form: only the first row may have a nonzero homogenizing entry
        let Some(first) = kb.first() else {
            return Ok(None);
        };
        if first[0] != 1 {
            // either no solutions with den = 1, or none at all
            return Ok(None);
        }
        Ok(Some(AffineLattice {
            origin: first[1..].to_vec(),
            dirs: kb[1..].iter().map(|r| r[1..].to_vec()).collect(),
        }))
    }

    fn point(&self, t: &[i64], out: &mut [i64]) -> Result<()> {
        out.copy_from_slice(&self.origin);
        for (ti, d) in t.iter().zip(&self.dirs) {
            if *ti == 0 {
                continue;
            }
            for (o, dj) in out.iter_mut().zip(d) {
                *o = o
                    .checked_add(ti.checked_mul(*dj).ok_or(Error::Overflow)?)
                    .ok_or(Error::Overflow)?;
            }
        }
        Ok(())
    }

    /// Rational parameters of a point of the subspace.
    fn coordinates(&self, v: &QPoint) -> Result<Vec<BigRational>> {
        let den = BigInt::from(v.den);
        let mut rem: Vec<BigRational> = v
            .num
            .iter()
            .zip(&self.origin)
            .map(|(x, o)| BigRational::new(BigInt::from(*x) - BigInt::from(*o) * &den, den.clone()))
            .collect();
        let mut t = Vec::with_capacity(self.dirs.len());
        for d in &self.dirs {
            let pc = d
                .iter()
                .position(|x| *x != 0)
                .ok_or_else(|| Error::InvalidInput("degenerate lattice basis".into()))?;
            let q = &rem[pc] / BigRational::from_integer(BigInt::from(d[pc]));
            for (r, dj) in rem.iter_mut().zip(d) {
                *r -= &q * BigRational::from_integer(BigInt::from(*dj));
            }
            t.push(q);
        }
        debug_assert!(rem.iter().all(Zero::is_zero));
        Ok(t)
    }
}

fn floor_rat(x: &BigRational) -> Result<i64> {
    x.floor().to_integer().to_i64().ok_or(Error::Overflow)
}

fn ceil_rat(x: &BigRational) -> Result<i64> {
    x.ceil().to_integer().to_i64().ok_or(Error::Overflow)
}
