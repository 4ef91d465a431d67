//! Arbitrary-precision integer matrices and the Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged matrix");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_i64().ok_or(Error::Overflow))
                    .collect()
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[dst] = x*row[dst] + y*row[src]`, `row[src] = z*row[dst] + w*row[src]`
    /// using the old values on the right-hand side.
    fn combine_rows(&mut self, dst: usize, src: usize, x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) {
        for j in 0..self.cols {
            let a = self[(dst, j)].clone();
            let b = self[(src, j)].clone();
            self[(dst, j)] = x * &a + y * &b;
            self[(src, j)] = z * &a + w * &b;
        }
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = factor * &self[(src, j)];
            self[(dst, j)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Square matrices only.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let (h, _) = hnf(self);
        (0..h.rows).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).count()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Row Hermite normal form: returns `(H, U)` with `H = U·A`, `U` unimodular,
/// `H` in row echelon form with positive pivots, entries above each pivot
/// reduced into `[0, pivot)`, and zero rows at the bottom.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let m = a.rows;
    let n = a.cols;
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        for i in row + 1..m {
            if h[(i, col)].is_zero() {
                continue;
            }
            let p = h[(row, col)].clone();
            let q = h[(i, col)].clone();
            let eg = p.extended_gcd(&q);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let a_ = &p / &g;
            let b_ = &q / &g;
            // [s t; -b a] has determinant s*a + t*b = 1
            let nb = -&b_;
            h.combine_rows(row, i, &s, &t, &nb, &a_);
            u.combine_rows(row, i, &s, &t, &nb, &a_);
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            h.negate_row(row);
            u.negate_row(row);
        }
        let pivot = h[(row, col)].clone();
        for i in 0..row {
            let q = h[(i, col)].div_floor(&pivot);
            if !q.is_zero() {
                let nq = -q;
                h.add_row_multiple(i, row, &nq);
                u.add_row_multiple(i, row, &nq);
            }
        }
        row += 1;
    }
    (h, u)
}

/// Basis (as rows, in Hermite normal form) of the integer kernel
/// `{x ∈ Z^n : A·x = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let at = a.transpose();
    let (h, u) = hnf(&at);
    let zero_rows: Vec<usize> = (0..h.rows)
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .collect();
    let mut k = IntMatrix::zeros(zero_rows.len(), a.cols);
    for (r, &i) in zero_rows.iter().enumerate() {
        for j in 0..a.cols {
            k[(r, j)] = u[(i, j)].clone();
        }
    }
    hnf(&k).0
}

/// Nonzero rows of the Hermite normal form: a canonical basis of the
/// lattice spanned by the rows of `a`.
pub fn row_lattice_basis(a: &IntMatrix) -> IntMatrix {
    let (h, _) = hnf(a);
    let keep: Vec<usize> = (0..h.rows)
        .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
        .collect();
    let mut out = IntMatrix::zeros(keep.len(), a.cols);
    for (r, &i) in keep.iter().enumerate() {
        for j in 0..a.cols {
            out[(r, j)] = h[(i, j)].clone();
        }
    }
    out
}

/// Coordinates `c` with `c·B = x` for a basis `B` in row echelon form
/// (as returned by [`kernel_basis`] or [`row_lattice_basis`]).
/// Returns `None` when `x` is not in the lattice spanned by `B`.
pub fn echelon_coordinates(basis: &IntMatrix, x: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(basis.cols, x.len());
    let mut rem: Vec<BigInt> = x.to_vec();
    let mut coords = Vec::with_capacity(basis.rows);
    for i in 0..basis.rows {
        let row = basis.row(i);
        let pc = row.iter().position(|v| !v.is_zero())?;
        // entries before the pivot must already be cleared
        if rem[..pc].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let (q, r) = rem[pc].div_rem(&row[pc]);
        if !r.is_zero() {
            return None;
        }
        for j in pc..basis.cols {
            rem[j] -= &q * &row[j];
        }
        coords.push(q);
    }
    if rem.iter().all(Zero::is_zero) {
        Some(coords)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn identity_is_its_own_hnf() {
        let id = IntMatrix::identity(3);
        let (h, u) = hnf(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn two_by_two_determinant_preserved() {
        let a = m(&[&[2, 4], &[1, 3]]);
        let (h, u) = hnf(&a);
        assert_eq!(u.mul(&a), h);
        assert_eq!(h.det().abs(), BigInt::from(2));
        assert_eq!(u.det().abs(), BigInt::one());
        // upper triangular with positive diagonal
        assert!(h[(1, 0)].is_zero());
        assert!(h[(0, 0)].is_positive() && h[(1, 1)].is_positive());
    }

    #[test]
    fn row_vector_reduces_to_gcd() {
        let a = m(&[&[6, 10, 15]]);
        let (h, u) = hnf(&a);
        assert_eq!(u.mul(&a), h);
        // a single row's HNF is the row itself up to sign; its entry gcd is 1
        let g = h.row(0).iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        assert_eq!(g, BigInt::one());
    }

    #[test]
    fn column_vector_reduces_to_gcd() {
        let a = m(&[&[6], &[10], &[15]]);
        let (h, u) = hnf(&a);
        assert_eq!(u.mul(&a), h);
        assert_eq!(h[(0, 0)], BigInt::one());
        assert!(h[(1, 0)].is_zero() && h[(2, 0)].is_zero());
    }

    #[test]
    fn zero_matrix_gives_identity_transform() {
        let a = IntMatrix::zeros(2, 3);
        let (h, u) = hnf(&a);
        assert!(h.is_zero());
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn kernel_of_weight_row() {
        let w = m(&[&[1, 1, 2]]);
        let k = kernel_basis(&w);
        assert_eq!(k.rows(), 2);
        for i in 0..k.rows() {
            let s: BigInt = k.row(i).iter().zip(w.row(0)).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
        // saturated: (1,-1,0) must be expressible
        let x = vec![BigInt::from(1), BigInt::from(-1), BigInt::from(0)];
        assert!(echelon_coordinates(&k, &x).is_some());
        let y = vec![BigInt::from(2), BigInt::from(0), BigInt::from(-1)];
        assert!(echelon_coordinates(&k, &y).is_some());
        let bad = vec![BigInt::from(1), BigInt::from(0), BigInt::from(0)];
        assert!(echelon_coordinates(&k, &bad).is_none());
    }
}
