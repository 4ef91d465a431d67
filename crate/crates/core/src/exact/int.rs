//! Machine-word helpers with overflow detection.
//!
//! Lattice coordinates are small in practice, so geometry runs on `i64`
//! storage with `i128` intermediates. Every operation is checked; an
//! overflow surfaces as [`Error::Overflow`] instead of wrapping.

use crate::error::{Error, Result};

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

pub fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i128
}

/// gcd of all entries; 0 for an all-zero slice.
pub fn content(v: &[i64]) -> i64 {
    v.iter().fold(0, |g, &x| gcd_i64(g, x))
}

/// Divide out the content, leaving a primitive vector (zero stays zero).
pub fn make_primitive(v: &mut [i64]) {
    let g = content(v);
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

pub fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// Exact dot product with an `i128` accumulator.
pub fn dot(a: &[i64], b: &[i64]) -> Result<i128> {
    let mut acc: i128 = 0;
    for (&x, &y) in a.iter().zip(b) {
        acc = acc
            .checked_add(x as i128 * y as i128)
            .ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// Floor division for a positive divisor.
pub fn div_floor(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    let q = a / b;
    if (a % b != 0) && (a < 0) {
        q - 1
    } else {
        q
    }
}

pub fn div_ceil(a: i128, b: i128) -> i128 {
    -div_floor(-a, b)
}

/// Rank of an integer matrix given by rows, via fraction-free elimination.
pub fn rank(rows: &[Vec<i64>]) -> Result<usize> {
    if rows.is_empty() {
        return Ok(0);
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    rank_in_place(&mut m)
}

pub(crate) fn rank_in_place(m: &mut [Vec<i128>]) -> Result<usize> {
    let nrows = m.len();
    if nrows == 0 {
        return Ok(0);
    }
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            if m[i][c] == 0 {
                continue;
            }
            let a = m[r][c];
            let b = m[i][c];
            let g = gcd_i128(a, b);
            let (fa, fb) = (a / g, b / g);
            let mut cont = 0i128;
            for j in c..ncols {
                let v = m[i][j]
                    .checked_mul(fa)
                    .and_then(|x| m[r][j].checked_mul(fb).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow)?;
                m[i][j] = v;
                cont = gcd_i128(cont, v);
            }
            if cont > 1 {
                for j in c..ncols {
                    m[i][j] /= cont;
                }
            }
        }
        r += 1;
    }
    Ok(r)
}
