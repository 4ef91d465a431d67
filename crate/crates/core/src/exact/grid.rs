//! Dense bivariate Laurent polynomials over a pluggable coefficient ring.
//!
//! The Hodge pipeline multiplies many tiny polynomials. Running it over
//! checked `i64` first and redoing the work over `BigInt` only when a
//! coefficient overflows keeps the common case fast and the result exact.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::laurent::{Axis, LaurentBivariate};
use crate::error::{Error, Result};

pub trait Coeff: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Result<Self>;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn neg(&self) -> Result<Self>;
    fn to_bigint(&self) -> BigInt;
    fn from_bigint(x: &BigInt) -> Result<Self>;
}

impl Coeff for i64 {
    fn zero() -> Self {
        0
    }
    fn from_i64(x: i64) -> Self {
        x
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Result<Self> {
        self.checked_add(*other).ok_or(Error::Overflow)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        self.checked_mul(*other).ok_or(Error::Overflow)
    }
    fn neg(&self) -> Result<Self> {
        self.checked_neg().ok_or(Error::Overflow)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_bigint(x: &BigInt) -> Result<Self> {
        x.to_i64().ok_or(Error::Overflow)
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Result<Self> {
        Ok(self + other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }
    fn neg(&self) -> Result<Self> {
        Ok(-self)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn from_bigint(x: &BigInt) -> Result<Self> {
        Ok(x.clone())
    }
}

/// Coefficients of `uⁱvʲ` for `i ∈ [u0, u0+w)`, `j ∈ [v0, v0+h)`.
///
/// Not canonical: the box may be larger than the support. Compare through
/// [`Grid::to_laurent`] or [`Grid::is_zero`].
#[derive(Debug, Clone, PartialEq)]
pub struct Grid<C> {
    u0: i64,
    v0: i64,
    w: usize,
    h: usize,
    data: Vec<C>,
}

impl<C: Coeff> Grid<C> {
    pub fn zero() -> Self {
        Grid {
            u0: 0,
            v0: 0,
            w: 0,
            h: 0,
            data: Vec::new(),
        }
    }

    fn with_box(u0: i64, v0: i64, w: usize, h: usize) -> Self {
        Grid {
            u0,
            v0,
            w,
            h,
            data: vec![C::zero(); w * h],
        }
    }

    pub fn monomial(c: C, i: i64, j: i64) -> Self {
        let mut g = Self::with_box(i, j, 1, 1);
        g.data[0] = c;
        g
    }

    pub fn one() -> Self {
        Self::monomial(C::from_i64(1), 0, 0)
    }

    /// Build from `(i, j, c)` triples (duplicates are summed).
    pub fn from_terms(terms: &[(i64, i64, i64)]) -> Result<Self> {
        let mut g = Self::zero();
        for &(i, j, c) in terms {
            g.add_assign(&Self::monomial(C::from_i64(c), i, j))?;
        }
        Ok(g)
    }

    pub fn from_laurent(p: &LaurentBivariate) -> Result<Self> {
        let Some((a, b, c, d)) = p.bounds() else {
            return Ok(Self::zero());
        };
        let mut g = Self::with_box(a, c, (b - a + 1) as usize, (d - c + 1) as usize);
        for (&(i, j), x) in p.terms() {
            let k = g.index(i, j).unwrap();
            g.data[k] = C::from_bigint(x)?;
        }
        Ok(g)
    }

    pub fn to_laurent(&self) -> LaurentBivariate {
        let mut out = LaurentBivariate::zero();
        for a in 0..self.w {
            for b in 0..self.h {
                let c = &self.data[a * self.h + b];
                if !c.is_zero() {
                    out.add_term((self.u0 + a as i64, self.v0 + b as i64), c.to_bigint());
                }
            }
        }
        out
    }

    fn index(&self, i: i64, j: i64) -> Option<usize> {
        let a = i - self.u0;
        let b = j - self.v0;
        if a < 0 || b < 0 || a as usize >= self.w || b as usize >= self.h {
            None
        } else {
            Some(a as usize * self.h + b as usize)
        }
    }

    pub fn coeff(&self, i: i64, j: i64) -> C {
        self.index(i, j)
            .map_or_else(C::zero, |k| self.data[k].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(C::is_zero)
    }

    /// Iterate over the nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &C)> {
        let h = self.h;
        self.data.iter().enumerate().filter_map(move |(k, c)| {
            if c.is_zero() {
                None
            } else {
                Some((self.u0 + (k / h) as i64, self.v0 + (k % h) as i64, c))
            }
        })
    }

    fn grow_to(&mut self, u0: i64, v0: i64, u1: i64, v1: i64) {
        // u1, v1 exclusive
        if self.w == 0 || self.h == 0 {
            *self = Self::with_box(u0, v0, (u1 - u0) as usize, (v1 - v0) as usize);
            return;
        }
        let nu0 = u0.min(self.u0);
        let nv0 = v0.min(self.v0);
        let nu1 = u1.max(self.u0 + self.w as i64);
        let nv1 = v1.max(self.v0 + self.h as i64);
        if nu0 == self.u0 && nv0 == self.v0 && nu1 == self.u0 + self.w as i64 && nv1 == self.v0 + self.h as i64 {
            return;
        }
        let mut g = Self::with_box(nu0, nv0, (nu1 - nu0) as usize, (nv1 - nv0) as usize);
        for a in 0..self.w {
            for b in 0..self.h {
                let k = g.index(self.u0 + a as i64, self.v0 + b as i64).unwrap();
                g.data[k] = std::mem::replace(&mut self.data[a * self.h + b], C::zero());
            }
        }
        *self = g;
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        if other.w == 0 || other.h == 0 {
            return Ok(());
        }
        self.grow_to(
            other.u0,
            other.v0,
            other.u0 + other.w as i64,
            other.v0 + other.h as i64,
        );
        for a in 0..other.w {
            for b in 0..other.h {
                let c = &other.data[a * other.h + b];
                if c.is_zero() {
                    continue;
                }
                let k = self.index(other.u0 + a as i64, other.v0 + b as i64).unwrap();
                self.data[k] = self.data[k].add(c)?;
            }
        }
        Ok(())
    }

    pub fn neg(&self) -> Result<Self> {
        let mut g = self.clone();
        for c in &mut g.data {
            *c = c.neg()?;
        }
        Ok(g)
    }

    pub fn sub_assign(&mut self, other: &Self) -> Result<()> {
        self.add_assign(&other.neg()?)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.w == 0 || other.w == 0 || self.h == 0 || other.h == 0 {
            return Ok(Self::zero());
        }
        let mut g = Self::with_box(
            self.u0 + other.u0,
            self.v0 + other.v0,
            self.w + other.w - 1,
            self.h + other.h - 1,
        );
        for a in 0..self.w {
            for b in 0..self.h {
                let x = &self.data[a * self.h + b];
                if x.is_zero() {
                    continue;
                }
                for c in 0..other.w {
                    let row = (a + c) * g.h + b;
                    for d in 0..other.h {
                        let y = &other.data[c * other.h + d];
                        if y.is_zero() {
                            continue;
                        }
                        let k = row + d;
                        g.data[k] = g.data[k].add(&x.mul(y)?)?;
                    }
                }
            }
        }
        Ok(g)
    }

    /// Multiply by `uⁱvʲ`.
    pub fn shift(&self, i: i64, j: i64) -> Self {
        let mut g = self.clone();
        g.u0 += i;
        g.v0 += j;
        g
    }

    pub fn scale(&self, c: &C) -> Result<Self> {
        let mut g = self.clone();
        for x in &mut g.data {
            if !x.is_zero() {
                *x = x.mul(c)?;
            }
        }
        Ok(g)
    }

    /// Negate exponents on one axis.
    pub fn invert(&self, axis: Axis) -> Self {
        let mut g = Self::with_box(0, 0, self.w, self.h);
        match axis {
            Axis::U => {
                g.u0 = -(self.u0 + self.w as i64 - 1);
                g.v0 = self.v0;
                for a in 0..self.w {
                    for b in 0..self.h {
                        g.data[(self.w - 1 - a) * self.h + b] = self.data[a * self.h + b].clone();
                    }
                }
            }
            Axis::V => {
                g.u0 = self.u0;
                g.v0 = -(self.v0 + self.h as i64 - 1);
                for a in 0..self.w {
                    for b in 0..self.h {
                        g.data[a * self.h + (self.h - 1 - b)] = self.data[a * self.h + b].clone();
                    }
                }
            }
        }
        g
    }

    /// Keep only the terms whose `v`-exponent satisfies `keep`.
    pub fn filter_v(&self, keep: impl Fn(i64) -> bool) -> Self {
        let mut g = self.clone();
        for a in 0..g.w {
            for b in 0..g.h {
                if !keep(g.v0 + b as i64) {
                    g.data[a * g.h + b] = C::zero();
                }
            }
        }
        g
    }

    /// `p(uᵃvᵇ)` for a univariate `p` given by its coefficients.
    pub fn from_univariate(coeffs: &[C], a: i64, b: i64) -> Result<Self> {
        let mut g = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = k as i64;
            g.add_assign(&Self::monomial(c.clone(), a * k, b * k))?;
        }
        Ok(g)
    }
}
