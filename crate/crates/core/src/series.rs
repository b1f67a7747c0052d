//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`Series`] of order `N` stores the coefficients of `q^0 ..= q^N`.
//! Binary operations truncate to the smaller order of their inputs, the
//! same way a hand computation carries an `O(q^{N+1})` tail.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A unit `+1` or `-1`.
///
/// Used both as the sign inside a Pochhammer factor `(1 - sign·q^k)` and
/// as the alternation base `s` of a theta sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `self^n` for any integer `n`.
    pub fn pow(self, n: i64) -> Sign {
        if self == Sign::Minus && n.rem_euclid(2) == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// Inversion needs a constant term of `+1` or `-1`; division needs a
    /// nonzero one.
    NonUnitConstantTerm {
        constant: BigInt,
    },
    /// Exact division left a remainder at this coefficient.
    NonIntegralQuotient {
        index: usize,
    },
    IndexBeyondOrder {
        index: usize,
        order: usize,
    },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NonUnitConstantTerm { constant } => {
                write!(f, "constant term {constant} is not invertible over the integers")
            }
            SeriesError::NonIntegralQuotient { index } => {
                write!(f, "division is not exact: coefficient of q^{index} is not an integer")
            }
            SeriesError::IndexBeyondOrder { index, order } => {
                write!(f, "index {index} is beyond the series order {order}")
            }
        }
    }
}

impl core::error::Error for SeriesError {}

/// An element of `Z[[q]] / (q^{N+1})`.
#[derive(Clone, Debug)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Builds a series from its coefficient list. The order is `len - 1`.
    ///
    /// Panics if `coeffs` is empty: a series always has at least `q^0`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant coefficient");
        Series { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(1, order)
    }

    pub fn constant(c: impl Into<BigInt>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c.into();
        s
    }

    /// `c·q^exp`, which is the zero series when `exp > order`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> Result<&BigInt, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::IndexBeyondOrder { index: n, order: self.order() })
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[0]
    }

    /// Drops every coefficient above `order`. Raising the order is not
    /// possible and leaves the series unchanged.
    pub fn truncate(&self, order: usize) -> Series {
        let keep = order.min(self.order());
        Series { coeffs: self.coeffs[..=keep].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Smallest exponent with a nonzero coefficient, if any survives truncation.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Whether every coefficient is zero except possibly the constant one.
    pub fn is_constant(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigInt) -> Series {
        Series { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Series {
        let order = self.order();
        let mut out = Series::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > order {
                break;
            }
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    /// The substitution `q -> q^k` (for `k >= 1`).
    pub fn dilate(&self, k: usize) -> Series {
        assert!(k >= 1, "dilation factor must be positive");
        let order = self.order();
        let mut out = Series::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > order {
                break;
            }
            out.coeffs[i * k] = c.clone();
        }
        out
    }

    /// In place multiplication by the binomial `1 - sign·q^k`.
    pub fn mul_binomial(&mut self, k: usize, sign: Sign) {
        if k == 0 {
            let factor = BigInt::from(1 - sign.as_i64());
            for c in &mut self.coeffs {
                *c *= &factor;
            }
            return;
        }
        // Descending so that each read sees the untouched coefficient.
        for i in (k..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            match sign {
                Sign::Plus => hi[0] -= &lo[i - k],
                Sign::Minus => hi[0] += &lo[i - k],
            }
        }
    }

    /// In place division by the binomial `1 - sign·q^k`, `k >= 1`.
    pub fn div_binomial(&mut self, k: usize, sign: Sign) {
        assert!(k >= 1, "binomial divisor needs a positive exponent");
        for i in k..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            match sign {
                Sign::Plus => hi[0] += &lo[i - k],
                Sign::Minus => hi[0] -= &lo[i - k],
            }
        }
    }

    /// Multiplicative inverse by the coefficient recurrence
    /// `b_0 = 1/a_0`, `b_n = -a_0 · sum_{k=1..n} a_k b_{n-k}`.
    pub fn invert(&self) -> Result<Series, SeriesError> {
        let a0 = self.constant_term();
        if !a0.is_one() && !(-a0).is_one() {
            return Err(SeriesError::NonUnitConstantTerm { constant: a0.clone() });
        }
        let order = self.order();
        let mut out = Series::zero(order);
        out.coeffs[0] = a0.clone();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &out.coeffs[n - k];
                }
            }
            // 1/a0 == a0 for a unit
            out.coeffs[n] = -(acc * a0);
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`.
    ///
    /// The divisor only needs a nonzero constant term; every quotient
    /// coefficient must then come out integral, otherwise this fails with
    /// [`SeriesError::NonIntegralQuotient`]. Constant divisors reduce to
    /// exact coefficientwise division.
    pub fn checked_div(&self, divisor: &Series) -> Result<Series, SeriesError> {
        let order = self.order().min(divisor.order());
        let b0 = divisor.constant_term();
        if b0.is_zero() {
            return Err(SeriesError::NonUnitConstantTerm { constant: b0.clone() });
        }
        let mut out = Series::zero(order);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                let b = &divisor.coeffs[k];
                if !b.is_zero() {
                    acc -= b * &out.coeffs[n - k];
                }
            }
            let (q, r) = acc.div_rem(b0);
            if !r.is_zero() {
                return Err(SeriesError::NonIntegralQuotient { index: n });
            }
            out.coeffs[n] = q;
        }
        Ok(out)
    }

    /// Integer power; negative exponents go through [`Series::invert`].
    pub fn pow(&self, e: i64) -> Result<Series, SeriesError> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Series::one(self.order());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }
}

/// Smallest index up to the common order where the two series differ.
pub fn first_divergence(a: &Series, b: &Series) -> Option<usize> {
    a.coeffs.iter().zip(&b.coeffs).position(|(x, y)| x != y)
}

/// Same as [`first_divergence`] but ignoring indices below `start`.
pub fn first_divergence_from(a: &Series, b: &Series, start: usize) -> Option<usize> {
    a.coeffs.iter().zip(&b.coeffs).enumerate().skip(start).find(|(_, (x, y))| x != y).map(|(i, _)| i)
}

impl PartialEq for Series {
    /// Coefficientwise equality up to the smaller of the two orders.
    fn eq(&self, other: &Self) -> bool {
        first_divergence(self, other).is_none()
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        Series { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        Series { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = Series::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Series> for Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}")?,
            }
            match i {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}
