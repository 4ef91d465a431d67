//! String-theoretic E-polynomials and Hodge numbers.
//!
//! The E-polynomial of a nef complete intersection is assembled from three
//! ingredients on the face poset `P` of its Gorenstein cone `C`:
//!
//! * `B([x,y]; u, v)` for every interval, from the recursion on Eulerian posets;
//! * `S(C_x, t)` for every face of `C` and of the dual cone;
//! * the interval sum
//!   `E = Σ_{x≤y} (−1)^ρ(x) u^ρ(y) S(C_x, v/u) S(C_y*, uv) B([x,y]; 1/u, v) / (uv)^r`.
//!
//! Arithmetic runs on dense `i64` grids and is redone over `BigInt` when a
//! coefficient overflows.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::cone::{build_cone, dual_cone, face_poset, graded_count, graded_counts, FacePoset, GorensteinCone, GradedCounts, Region};
use crate::error::{Error, Result};
use crate::exact::grid::{Coeff, Grid};
use crate::exact::{Axis, LaurentBivariate, UnivariatePoly};
use crate::nefpart::NefPartition;

/// B-polynomials keyed by interval endpoints `(x, y)`.
pub type BTable<C> = HashMap<(usize, usize), Grid<C>>;

fn powers<C: Coeff>(g: &Grid<C>, n: usize) -> Result<Vec<Grid<C>>> {
    let mut out = vec![Grid::one()];
    for k in 1..=n {
        out.push(out[k - 1].mul(g)?);
    }
    Ok(out)
}

/// B-polynomials of every interval of `poset`, solved by increasing length.
///
/// Each solution is substituted back into the defining relation, and
/// `RecursionInconsistent` is raised if it fails.
pub fn b_polynomials<C: Coeff>(poset: &FacePoset) -> Result<BTable<C>> {
    let n = poset.len();
    let d = poset.dim();
    let vu = powers(&Grid::from_terms(&[(0, 1, 1), (1, 0, -1)])?, d)?;
    let uv1 = powers(&Grid::from_terms(&[(1, 1, 1), (0, 0, -1)])?, d)?;
    let mut table: BTable<C> = (0..n).map(|x| ((x, x), Grid::one())).collect();
    for len in 1..=d {
        let solved: Vec<Result<Vec<((usize, usize), Grid<C>)>>> = (0..n)
            .into_par_iter()
            .map(|x| {
                let mut out = Vec::new();
                for y in poset.up(x).ones() {
                    if poset.rank(y) == poset.rank(x) + len {
                        out.push(((x, y), solve_interval(poset, &table, x, y, &vu, &uv1)?));
                    }
                }
                Ok(out)
            })
            .collect();
        for s in solved {
            table.extend(s?);
        }
    }
    Ok(table)
}

fn solve_interval<C: Coeff>(
    poset: &FacePoset,
    table: &BTable<C>,
    x: usize,
    y: usize,
    vu: &[Grid<C>],
    uv1: &[Grid<C>],
) -> Result<Grid<C>> {
    let len = poset.rank(y) - poset.rank(x);
    // lower[k] = Σ B([x,z]) and upper[k] = Σ B([z,y]) over z of relative rank k
    let mut lower = vec![Grid::zero(); len];
    let mut upper = vec![Grid::zero(); len + 1];
    for z in poset.interval(x, y).ones() {
        let k = poset.rank(z) - poset.rank(x);
        if z != y {
            lower[k].add_assign(&table[&(x, z)])?;
        }
        if z != x {
            upper[k].add_assign(&table[&(z, y)])?;
        }
    }
    let mut rhs = Grid::zero();
    for (k, g) in lower.iter().enumerate() {
        if !g.is_zero() {
            let t = g.invert(Axis::U).invert(Axis::V).shift(k as i64, k as i64);
            rhs.add_assign(&t.mul(&vu[len - k])?)?;
        }
    }
    for (k, g) in upper.iter().enumerate().skip(1) {
        if !g.is_zero() {
            rhs.sub_assign(&g.mul(&uv1[k])?)?;
        }
    }
    let l = len as i64;
    let b = rhs.filter_v(|j| 2 * j < l);
    let mut check = b.clone();
    check.sub_assign(&b.invert(Axis::U).invert(Axis::V).shift(l, l))?;
    check.sub_assign(&rhs)?;
    if !check.is_zero() || b.terms().any(|(i, j, _)| i < 0 || j < 0) {
        return Err(Error::RecursionInconsistent(len));
    }
    Ok(b)
}

/// `B([x,y]; u, v)` for a single interval.
pub fn b_polynomial(poset: &FacePoset, x: usize, y: usize) -> Result<LaurentBivariate> {
    if !poset.le(x, y) {
        return Err(Error::InvalidInput(format!("{x} is not below {y}")));
    }
    let table = b_polynomials::<BigInt>(poset)?;
    Ok(table[&(x, y)].to_laurent())
}

/// Coefficients of `(1−t)^rank · Σ counts[m] t^m` up to the length of `counts`.
fn scaled_series(counts: &[u64], rank: usize) -> Result<Vec<i128>> {
    let mut binom = vec![1i128; rank + 1];
    for k in 1..=rank {
        binom[k] = binom[k - 1] * (rank - k + 1) as i128 / k as i128;
    }
    (0..counts.len())
        .map(|i| {
            let mut a = 0i128;
            for k in 0..=rank.min(i) {
                let term = binom[k].checked_mul(counts[i - k] as i128).ok_or(Error::Overflow)?;
                a = if k % 2 == 0 { a.checked_add(term) } else { a.checked_sub(term) }.ok_or(Error::Overflow)?;
            }
            Ok(a)
        })
        .collect()
}

/// S and T of a face of the given rank from counts at degrees
/// `0..counts.len()`, which must reach `rank / 2`.
///
/// Coefficients above `rank / 2` come from `a_i = b_{rank−i}`. Every
/// directly computed coefficient is checked against the completed
/// polynomials, including the vanishing beyond `rank` when the counts reach
/// that far.
pub fn serre_complete(full: &[u64], interior: &[u64], rank: usize) -> Result<(UnivariatePoly, UnivariatePoly)> {
    let half = rank / 2;
    if full.len() <= half || interior.len() != full.len() {
        return Err(Error::InvalidInput(format!(
            "counts up to degree {half} needed for a face of rank {rank}"
        )));
    }
    let a = scaled_series(full, rank)?;
    let b = scaled_series(interior, rank)?;
    let s: Vec<i128> = (0..=rank).map(|i| if i <= half { a[i] } else { b[rank - i] }).collect();
    let t: Vec<i128> = (0..=rank).map(|i| if i <= half { b[i] } else { a[rank - i] }).collect();
    let known = a.len();
    let ok = s[0] == 1
        && t[0] == i128::from(rank == 0)
        && (0..known).all(|i| {
            if i <= rank {
                a[i] == s[i] && b[i] == t[i]
            } else {
                a[i] == 0 && b[i] == 0
            }
        })
        && (0..=rank).all(|i| s[i] == t[rank - i]);
    if !ok {
        return Err(Error::NotPolynomial(rank));
    }
    let to_poly = |v: Vec<i128>| UnivariatePoly::from_coeffs(v.into_iter().map(BigInt::from).collect());
    Ok((to_poly(s), to_poly(t)))
}

/// S and T for every face of `poset`.
pub fn face_polynomials(counts: &GradedCounts, poset: &FacePoset) -> Result<(Vec<UnivariatePoly>, Vec<UnivariatePoly>)> {
    let mut ss = Vec::with_capacity(poset.len());
    let mut ts = Vec::with_capacity(poset.len());
    for x in 0..poset.len() {
        let (s, t) = serre_complete(
            counts.series(x, Region::Full),
            counts.series(x, Region::Interior),
            poset.rank(x),
        )?;
        ss.push(s);
        ts.push(t);
    }
    Ok((ss, ts))
}

fn single_face(cone: &GorensteinCone, poset: &FacePoset, x: usize) -> Result<(UnivariatePoly, UnivariatePoly)> {
    let rank = poset.rank(x);
    let mut full = Vec::new();
    let mut interior = Vec::new();
    for m in 0..=rank / 2 {
        full.push(graded_count(cone, poset, x, m, Region::Full)?);
        interior.push(graded_count(cone, poset, x, m, Region::Interior)?);
    }
    serre_complete(&full, &interior, rank)
}

/// `S(C_x, t) = (1−t)^ρ(x) Σ_{m ∈ C_x} t^deg(m)`.
pub fn s_polynomial(cone: &GorensteinCone, poset: &FacePoset, x: usize) -> Result<UnivariatePoly> {
    Ok(single_face(cone, poset, x)?.0)
}

/// `T(C_x, t) = (1−t)^ρ(x) Σ_{m ∈ relint C_x} t^deg(m)`.
pub fn t_polynomial(cone: &GorensteinCone, poset: &FacePoset, x: usize) -> Result<UnivariatePoly> {
    Ok(single_face(cone, poset, x)?.1)
}

/// `p(uᵃvᵇ)` as a grid.
fn substitute<C: Coeff>(p: &UnivariatePoly, a: i64, b: i64) -> Result<Grid<C>> {
    let coeffs = p.coeffs().iter().map(C::from_bigint).collect::<Result<Vec<_>>>()?;
    Grid::from_univariate(&coeffs, a, b)
}

fn interval_sum<C: Coeff>(
    poset: &FacePoset,
    s: &[UnivariatePoly],
    s_dual: &[UnivariatePoly],
) -> Result<LaurentBivariate> {
    let b = b_polynomials::<C>(poset)?;
    let n = poset.len();
    // u^ρ(y) S(C_y*, uv)
    let w: Vec<Grid<C>> = (0..n)
        .map(|y| Ok(substitute(&s_dual[poset.dual_face(y)], 1, 1)?.shift(poset.rank(y) as i64, 0)))
        .collect::<Result<_>>()?;
    let parts: Vec<Result<Grid<C>>> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut inner = Grid::zero();
            for y in poset.up(x).ones() {
                inner.add_assign(&w[y].mul(&b[&(x, y)].invert(Axis::U))?)?;
            }
            let t = substitute::<C>(&s[x], -1, 1)?.mul(&inner)?;
            if poset.rank(x) % 2 == 1 {
                t.neg()
            } else {
                Ok(t)
            }
        })
        .collect();
    let mut total = Grid::zero();
    for p in parts {
        total.add_assign(&p?)?;
    }
    Ok(total.to_laurent())
}

/// Faces of `cone` and `dual` with their S polynomials.
fn s_polynomials(cone: &GorensteinCone, poset: &FacePoset) -> Result<Vec<UnivariatePoly>> {
    let counts = graded_counts(cone, poset, cone.dim() / 2, None)?;
    Ok(face_polynomials(&counts, poset)?.0)
}

/// Divide by `(uv)^r` and check that the result is a polynomial in the
/// Hodge range `[0, n]²`.
fn normalize(sum: LaurentBivariate, r: usize, n: usize) -> Result<LaurentBivariate> {
    let e = sum.divide_exact(&LaurentBivariate::monomial(1, r as i64, r as i64))?;
    for (&(i, j), _) in e.terms() {
        if i < 0 || j < 0 || i > n as i64 || j > n as i64 {
            return Err(Error::ExponentOutOfRange(i, j));
        }
    }
    Ok(e)
}

/// The string-theoretic E-polynomial of the complete intersection of
/// `cone`, by the interval sum over its face poset.
pub fn e_polynomial(cone: &GorensteinCone, dual: &GorensteinCone, poset: &FacePoset) -> Result<LaurentBivariate> {
    let dual_poset = face_poset(dual, cone)?;
    let s = s_polynomials(cone, poset)?;
    let s_dual = s_polynomials(dual, &dual_poset)?;
    let sum = match interval_sum::<i64>(poset, &s, &s_dual) {
        Err(Error::Overflow) => interval_sum::<BigInt>(poset, &s, &s_dual)?,
        other => other?,
    };
    let r = cone.codim();
    normalize(sum, r, cone.dim() - 2 * r)
}

/// T polynomial of a face from interior counts reaching past its rank.
fn truncated_t(interior: &[u64], rank: usize) -> Result<UnivariatePoly> {
    let b = scaled_series(interior, rank)?;
    if b.len() <= rank || b[rank + 1..].iter().any(|&c| c != 0) {
        return Err(Error::NotPolynomial(rank));
    }
    Ok(UnivariatePoly::from_coeffs(b[..=rank].iter().map(|&c| BigInt::from(c)).collect()))
}

/// Default budget of interior lattice points for [`cross_check_a`].
pub const CROSS_CHECK_CAP: usize = 2_000_000;

/// The E-polynomial from the original pairing formula
/// `Σ_{x≤y} (−1)^ρ(y) (v−u)^ρ(x) B([y*,x*]; u, v) (uv−1)^(d̄−ρ(y)) A_(x,y) / (uv)^r`
/// with `A_(x,y) = Σ (u/v)^deg(m) (uv)^−deg(n)` over interior points
/// `m ∈ C_x`, `n ∈ C_y*`.
///
/// The interior points are counted directly up to degree `d̄ + 1` on both
/// cones, so neither the Serre completion nor B-polynomial duality is used.
/// Each factor `(1−s)^ρ Σ_k c_k s^k` is a truncated power series that must
/// terminate at degree `ρ`. Fails with `CapExceeded` beyond `cap` points.
pub fn cross_check_a(
    cone: &GorensteinCone,
    dual: &GorensteinCone,
    poset: &FacePoset,
    cap: usize,
) -> Result<LaurentBivariate> {
    let dual_poset = face_poset(dual, cone)?;
    let dbar = cone.dim();
    let r = cone.codim();
    let counts = graded_counts(cone, poset, dbar + 1, Some(cap))?;
    let dual_counts = graded_counts(dual, &dual_poset, dbar + 1, Some(cap))?;
    let b_dual = b_polynomials::<BigInt>(&dual_poset)?;
    let n = poset.len();
    let t: Vec<UnivariatePoly> = (0..n)
        .map(|x| truncated_t(counts.series(x, Region::Interior), poset.rank(x)))
        .collect::<Result<_>>()?;
    let t_dual: Vec<UnivariatePoly> = (0..n)
        .map(|y| truncated_t(dual_counts.series(y, Region::Interior), dual_poset.rank(y)))
        .collect::<Result<_>>()?;
    let mut total = LaurentBivariate::zero();
    for x in 0..n {
        // (v−u)^ρ(x) Σ_k c_k (u/v)^k = v^ρ(x) T(C_x, u/v)
        let fx = LaurentBivariate::from_univariate(&t[x], 1, -1).shift(0, poset.rank(x) as i64);
        for y in poset.up(x).ones() {
            let (xs, ys) = (poset.dual_face(x), poset.dual_face(y));
            let k = (dbar - poset.rank(y)) as i64;
            // (uv−1)^(d̄−ρ(y)) Σ_l c_l (uv)^−l = (uv)^(d̄−ρ(y)) T(C_y*, 1/uv)
            let fy = LaurentBivariate::from_univariate(&t_dual[ys], -1, -1).shift(k, k);
            let mut term = fx.mul(&fy).mul(&b_dual[&(ys, xs)].to_laurent());
            if poset.rank(y) % 2 == 1 {
                term = term.neg();
            }
            total = total.add(&term);
        }
    }
    normalize(total, r, dbar - 2 * r)
}

/// Hodge numbers `h^{p,q}` for `0 ≤ p, q ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeData {
    pub n: usize,
    pub h: Vec<Vec<i64>>,
    pub chi: i64,
}

impl HodgeData {
    pub fn get(&self, p: usize, q: usize) -> i64 {
        self.h[p][q]
    }

    /// `(h^{1,1}, h^{n−1,1})`, the pair reported for threefolds.
    pub fn pair(&self) -> Option<(i64, i64)> {
        (self.n >= 2).then(|| (self.h[1][1], self.h[self.n - 1][1]))
    }

    /// The E-polynomial these numbers encode.
    pub fn e_polynomial(&self) -> LaurentBivariate {
        let mut e = LaurentBivariate::zero();
        for p in 0..=self.n {
            for q in 0..=self.n {
                let sign = if (p + q) % 2 == 0 { 1 } else { -1 };
                e.add_term((p as i64, q as i64), BigInt::from(sign * self.h[p][q]));
            }
        }
        e
    }
}

/// Read off `h^{p,q} = (−1)^{p+q}` times the coefficient of `u^p v^q`.
///
/// Checks nonnegativity, `h^{p,q} = h^{q,p}` and `h^{p,q} = h^{n−p,n−q}`.
pub fn hodge_numbers(e: &LaurentBivariate, n: usize) -> Result<HodgeData> {
    let mut h = vec![vec![0i64; n + 1]; n + 1];
    let mut chi = BigInt::from(0);
    for (&(i, j), c) in e.terms() {
        if i < 0 || j < 0 || i > n as i64 || j > n as i64 {
            return Err(Error::ExponentOutOfRange(i, j));
        }
        let (p, q) = (i as usize, j as usize);
        let value = if (p + q) % 2 == 0 { c.clone() } else { -c };
        if value < BigInt::from(0) {
            return Err(Error::NegativeHodge {
                p,
                q,
                value: value.to_string(),
            });
        }
        h[p][q] = value.to_i64().ok_or(Error::Overflow)?;
        chi += c;
    }
    for p in 0..=n {
        for q in 0..=n {
            if h[p][q] != h[q][p] {
                return Err(Error::HodgeSymmetry(format!("h[{p}][{q}] = h[{q}][{p}]")));
            }
            if h[p][q] != h[n - p][n - q] {
                return Err(Error::HodgeSymmetry(format!("h[{p}][{q}] = h[{}][{}]", n - p, n - q)));
            }
        }
    }
    Ok(HodgeData {
        n,
        h,
        chi: chi.to_i64().ok_or(Error::Overflow)?,
    })
}

/// `E(V; u, v) = (−u)^(d−r) E(W; 1/u, v)`.
pub fn mirror_check(ev: &LaurentBivariate, ew: &LaurentBivariate, d: usize, r: usize) -> bool {
    let k = (d - r) as i64;
    let sign = if k % 2 == 0 { BigInt::from(1) } else { -BigInt::from(1) };
    let rhs = ew
        .substitute_invert(Axis::U)
        .mul(&LaurentBivariate::monomial(sign, k, 0));
    &rhs == ev
}

/// E-polynomials and Hodge numbers of a nef partition and its mirror.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringHodge {
    pub e: LaurentBivariate,
    pub hodge: HodgeData,
    pub mirror_e: LaurentBivariate,
    pub mirror: HodgeData,
}

/// Compute the string-theoretic Hodge numbers of `partition`, checking the
/// mirror identity against the dual partition.
pub fn string_hodge(partition: &NefPartition) -> Result<StringHodge> {
    let cone = build_cone(partition)?;
    let dual = dual_cone(partition)?;
    let poset = face_poset(&cone, &dual)?;
    let dual_poset = face_poset(&dual, &cone)?;
    let d = partition.delta().dim();
    let r = partition.codim();
    let n = d - r;
    let e = e_polynomial(&cone, &dual, &poset)?;
    let mirror_e = e_polynomial(&dual, &cone, &dual_poset)?;
    let hodge = hodge_numbers(&e, n)?;
    let mirror = hodge_numbers(&mirror_e, n)?;
    if !mirror_check(&e, &mirror_e, d, r) {
        return Err(Error::HodgeSymmetry("the mirror identity".into()));
    }
    Ok(StringHodge {
        e,
        hodge,
        mirror_e,
        mirror,
    })
}
