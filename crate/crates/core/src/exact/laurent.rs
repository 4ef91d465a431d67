//! Sparse bivariate Laurent polynomials in `u`, `v` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::UnivariatePoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    U,
    V,
}

/// Map from exponent pair `(i, j)` of `uⁱvʲ` to a nonzero coefficient.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentBivariate {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentBivariate {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, i: i64, j: i64) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), c.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = ((i64, i64), C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, e: (i64, i64), c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentBivariate {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &other.terms {
                out.add_term((a + x, b + y), c * d);
            }
        }
        out
    }

    /// Multiply by `uⁱvʲ`.
    pub fn shift(&self, i: i64, j: i64) -> Self {
        LaurentBivariate {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + i, b + j), c.clone()))
                .collect(),
        }
    }

    /// Negate every exponent on one axis (`u ↦ u⁻¹` or `v ↦ v⁻¹`).
    pub fn substitute_invert(&self, axis: Axis) -> Self {
        LaurentBivariate {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| {
                    let e = match axis {
                        Axis::U => (-a, b),
                        Axis::V => (a, -b),
                    };
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// `p(uᵃvᵇ)` for a univariate `p`.
    pub fn from_univariate(p: &UnivariatePoly, a: i64, b: i64) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            let k = k as i64;
            out.add_term((a * k, b * k), c.clone());
        }
        out
    }

    pub fn eval(&self, u: &BigInt, v: &BigInt) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * pow_signed(u, a)? * pow_signed(v, b)?;
        }
        Some(acc)
    }

    /// Exponent box `(min_i, max_i, min_j, max_j)`; `None` for zero.
    pub fn bounds(&self) -> Option<(i64, i64, i64, i64)> {
        let mut it = self.terms.keys();
        let &(i0, j0) = it.next()?;
        let mut b = (i0, i0, j0, j0);
        for &(i, j) in it {
            b.0 = b.0.min(i);
            b.1 = b.1.max(i);
            b.2 = b.2.min(j);
            b.3 = b.3.max(j);
        }
        Some(b)
    }

    /// Exact quotient `p / q` in the Laurent ring.
    ///
    /// Long division on the lexicographic leading term. The lowest term of an
    /// exact quotient is `low(p)/low(q)`, so once the remainder's next quotient
    /// term drops below that, division cannot finish and we bail out.
    pub fn divide_exact(&self, q: &Self) -> Result<Self> {
        let (&lq_e, lq_c) = q.terms.iter().next_back().ok_or(Error::NonExactDivision)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let low_q = *q.terms.keys().next().unwrap();
        let low_p = *self.terms.keys().next().unwrap();
        let floor = (low_p.0 - low_q.0, low_p.1 - low_q.1);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&e, c)) = rem.terms.iter().next_back() {
            let t = (e.0 - lq_e.0, e.1 - lq_e.1);
            if t < floor {
                return Err(Error::NonExactDivision);
            }
            let (qc, r) = c.div_rem(lq_c);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            let term = Self::monomial(qc.clone(), t.0, t.1);
            rem = rem.sub(&q.mul(&term));
            quot.add_term(t, qc);
        }
        Ok(quot)
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i >= 0 && j >= 0)
    }
}

fn pow_signed(x: &BigInt, e: i64) -> Option<BigInt> {
    if e >= 0 {
        Some(num_traits::pow(x.clone(), e as usize))
    } else if x == &BigInt::one() {
        Some(BigInt::one())
    } else if x == &-BigInt::one() {
        Some(if e % 2 == 0 { BigInt::one() } else { -BigInt::one() })
    } else {
        None
    }
}

impl fmt::Display for LaurentBivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            match i {
                0 => {}
                1 => write!(f, "*u")?,
                _ => write!(f, "*u^{i}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "*v")?,
                _ => write!(f, "*v^{j}")?,
            }
        }
        Ok(())
    }
}
