//! Lattice-point enumeration by coordinate recursion with interval propagation.

use crate::error::{Error, Result};
use crate::exact::int::{div_ceil, div_floor};

/// Half-space constraints `c + a·t ≥ 0` over `t ∈ Z^k`.
pub(crate) struct Constraints {
    pub c: Vec<i64>,
    pub a: Vec<Vec<i64>>,
}

/// Visit every integer `t` in the box `[lo, hi]` satisfying all constraints,
/// in lexicographic order.
///
/// At depth `j` each constraint bounds `t_j` using the exact partial sum over
/// the fixed prefix and the box maximum of the unfixed suffix.
pub(crate) fn for_each_point(
    cons: &Constraints,
    lo: &[i64],
    hi: &[i64],
    mut f: impl FnMut(&[i64]),
) -> Result<()> {
    let k = lo.len();
    let nc = cons.c.len();
    if (0..k).any(|j| lo[j] > hi[j]) {
        return Ok(());
    }
    // rest[i][j] = Σ_{l ≥ j} max over the box of a_il·t_l
    let mut rest = vec![vec![0i128; k + 1]; nc];
    for i in 0..nc {
        for j in (0..k).rev() {
            let a = cons.a[i][j] as i128;
            let m = (a * lo[j] as i128).max(a * hi[j] as i128);
            rest[i][j] = rest[i][j + 1].checked_add(m).ok_or(Error::Overflow)?;
        }
    }
    let mut t = vec![0i64; k];
    let mut partial: Vec<Vec<i128>> = vec![vec![0; nc]; k + 1];
    for i in 0..nc {
        partial[0][i] = cons.c[i] as i128;
    }
    recurse(cons, lo, hi, &rest, 0, &mut t, &mut partial, &mut f)
}

#[allow(clippy::too_many_arguments)]
fn recurse(
    cons: &Constraints,
    lo: &[i64],
    hi: &[i64],
    rest: &[Vec<i128>],
    j: usize,
    t: &mut Vec<i64>,
    partial: &mut Vec<Vec<i128>>,
    f: &mut impl FnMut(&[i64]),
) -> Result<()> {
    let k = lo.len();
    if j == k {
        f(t);
        return Ok(());
    }
    let mut l = lo[j] as i128;
    let mut u = hi[j] as i128;
    for i in 0..cons.c.len() {
        let a = cons.a[i][j] as i128;
        let slack = partial[j][i] + rest[i][j + 1];
        if a > 0 {
            l = l.max(div_ceil(-slack, a));
        } else if a < 0 {
            u = u.min(div_floor(slack, -a));
        } else if slack < 0 {
            return Ok(());
        }
        if l > u {
            return Ok(());
        }
    }
    for x in l..=u {
        t[j] = x as i64;
        for i in 0..cons.c.len() {
            partial[j + 1][i] = partial[j][i] + cons.a[i][j] as i128 * x;
        }
        recurse(cons, lo, hi, rest, j + 1, t, partial, f)?;
    }
    Ok(())
}
