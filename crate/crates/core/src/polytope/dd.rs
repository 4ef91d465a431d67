//! Double description: extreme rays of a pointed polyhedral cone.

use fixedbitset::FixedBitSet;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::int::{dot, gcd_i128, narrow, rank};
use crate::exact::matrix::{kernel_basis, IntMatrix};

/// An extreme ray together with the set of constraint rows it is tight on.
#[derive(Debug, Clone)]
pub(crate) struct Ray {
    pub v: Vec<i64>,
    pub tight: FixedBitSet,
}

fn primitive_i128(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| gcd_i128(g, x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

/// One-dimensional kernel of `rows` (k−1 independent rows in Z^k), primitive.
fn kernel_line(rows: &[&Vec<i64>], k: usize) -> Result<Vec<i64>> {
    let m = if rows.is_empty() {
        IntMatrix::zeros(0, k)
    } else {
        IntMatrix::from_rows(&rows.iter().map(|r| (*r).clone()).collect::<Vec<_>>())
    };
    let kb = kernel_basis(&m);
    debug_assert_eq!(kb.rows(), 1);
    kb.row(0)
        .iter()
        .map(|x| x.to_i64().ok_or(Error::Overflow))
        .collect()
}

/// Extreme rays of `{y ∈ R^k : M·y ≥ 0}`.
///
/// `M` must have rank `k` (pointed cone). Rays come back primitive and
/// each is tight on the returned row set. The zero cone yields no rays.
pub(crate) fn extreme_rays(m: &[Vec<i64>], k: usize) -> Result<Vec<Ray>> {
    let nrows = m.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    // greedy choice of k independent rows
    let mut basis: Vec<usize> = Vec::with_capacity(k);
    let mut chosen: Vec<Vec<i64>> = Vec::with_capacity(k);
    for (i, row) in m.iter().enumerate() {
        if basis.len() == k {
            break;
        }
        chosen.push(row.clone());
        if rank(&chosen)? == chosen.len() {
            basis.push(i);
        } else {
            chosen.pop();
        }
    }
    if basis.len() < k {
        return Err(Error::InvalidInput("cone is not pointed".into()));
    }

    let mut rays: Vec<Ray> = Vec::with_capacity(k);
    for j in 0..k {
        let others: Vec<&Vec<i64>> = (0..k).filter(|&i| i != j).map(|i| &m[basis[i]]).collect();
        let mut v = kernel_line(&others, k)?;
        let s = dot(&m[basis[j]], &v)?;
        debug_assert!(s != 0);
        if s < 0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        let mut tight = FixedBitSet::with_capacity(nrows);
        for (i, &b) in basis.iter().enumerate() {
            if i != j {
                tight.insert(b);
            }
        }
        rays.push(Ray { v, tight });
    }

    let mut in_basis = FixedBitSet::with_capacity(nrows);
    for &b in &basis {
        in_basis.insert(b);
    }
    let mut processed = in_basis.clone();

    for i in 0..nrows {
        if in_basis.contains(i) {
            continue;
        }
        let row = &m[i];
        let vals: Vec<i128> = rays.iter().map(|r| dot(row, &r.v)).collect::<Result<_>>()?;
        let pos: Vec<usize> = (0..rays.len()).filter(|&r| vals[r] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&r| vals[r] < 0).collect();
        processed.insert(i);
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if *v == 0 {
                    r.tight.insert(i);
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for (r, &v) in vals.iter().enumerate() {
            if v >= 0 {
                let mut ray = rays[r].clone();
                if v == 0 {
                    ray.tight.insert(i);
                }
                next.push(ray);
            }
        }
        for &p in &pos {
            for &n in &neg {
                let mut common = rays[p].tight.clone();
                common.intersect_with(&rays[n].tight);
                if common.count_ones(..) + 2 < k {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .all(|r| r == p || r == n || !common.is_subset(&rays[r].tight));
                if !adjacent {
                    continue;
                }
                let a = vals[p];
                let b = -vals[n];
                let mut w: Vec<i128> = Vec::with_capacity(k);
                for (x, y) in rays[n].v.iter().zip(&rays[p].v) {
                    let t = (*x as i128)
                        .checked_mul(a)
                        .and_then(|s| (*y as i128).checked_mul(b).and_then(|u| s.checked_add(u)))
                        .ok_or(Error::Overflow)?;
                    w.push(t);
                }
                primitive_i128(&mut w);
                let v = w.into_iter().map(narrow).collect::<Result<Vec<_>>>()?;
                common.insert(i);
                next.push(Ray { v, tight: common });
            }
        }
        rays = next;
    }
    rays.sort_by(|a, b| a.v.cmp(&b.v));
    rays.dedup_by(|a, b| a.v == b.v);
    debug_assert!(rays.iter().all(|r| r.v.iter().any(|x| *x != 0)));
    Ok(rays)
}

/// Sanity helper used by tests: every ray satisfies every row.
#[cfg(test)]
pub(crate) fn check_rays(m: &[Vec<i64>], rays: &[Ray]) -> bool {
    rays.iter()
        .all(|r| m.iter().all(|row| dot(row, &r.v).map(|x| x >= 0).unwrap_or(false)))
}
