//! Builders for q-Pochhammer products, bilateral theta sums and the
//! catalog of named generating functions.
//!
//! Every named series is stored as a [`Recipe`], a small composition tree
//! over Pochhammer symbols, theta sums and ring operations, so that the
//! expression language in [`crate::qdsl`] can be checked against it.

mod catalog;

use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Sub};

use num_integer::Integer;

use crate::series::{Series, SeriesError, Sign};

pub use catalog::SeriesName;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactoryError {
    /// An infinite Pochhammer symbol needs offset and step of at least one.
    InvalidPoch {
        offset: i64,
        step: i64,
    },
    InvalidFinitePoch {
        offset: i64,
        step: i64,
    },
    /// `A·n^2 + B·n + c` dips below zero for some integer `n`, or `A < 1`.
    InvalidTheta {
        quad: i64,
        lin: i64,
        shift: i64,
    },
    /// A Jacobi triple product factor would carry a non-positive exponent.
    InvalidSpecialization {
        qscale: i64,
        xexp: i64,
    },
    UnknownName(String),
    NonTerminatingSum {
        terms: usize,
    },
    Series(SeriesError),
}

impl fmt::Display for FactoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactoryError::InvalidPoch { offset, step } => {
                write!(f, "infinite Pochhammer symbol needs offset >= 1 and step >= 1 (got q^{offset}, base q^{step})")
            }
            FactoryError::InvalidFinitePoch { offset, step } => {
                write!(f, "finite Pochhammer symbol needs offset >= 0 and step >= 1 (got q^{offset}, base q^{step})")
            }
            FactoryError::InvalidTheta { quad, lin, shift } => {
                write!(f, "theta sum {quad}n^2 + {lin}n + {shift} is not a power series")
            }
            FactoryError::InvalidSpecialization { qscale, xexp } => {
                write!(f, "triple product with q -> q^{qscale} and x = ±q^{xexp} has a factor of non-positive exponent")
            }
            FactoryError::UnknownName(name) => write!(f, "unknown series name `{name}`"),
            FactoryError::NonTerminatingSum { terms } => {
                write!(f, "infinite sum did not fall below the truncation order after {terms} terms")
            }
            FactoryError::Series(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for FactoryError {}

impl From<SeriesError> for FactoryError {
    fn from(e: SeriesError) -> Self {
        FactoryError::Series(e)
    }
}

/// `prod_{k>=0} (1 - sign·q^{offset + k·step})^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochSpec {
    sign: Sign,
    offset: u64,
    step: u64,
    exponent: i64,
}

impl PochSpec {
    pub fn new(sign: Sign, offset: i64, step: i64, exponent: i64) -> Result<Self, FactoryError> {
        if offset < 1 || step < 1 {
            return Err(FactoryError::InvalidPoch { offset, step });
        }
        Ok(PochSpec { sign, offset: offset as u64, step: step as u64, exponent })
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }
    pub fn offset(&self) -> u64 {
        self.offset
    }
    pub fn step(&self) -> u64 {
        self.step
    }
    pub fn exponent(&self) -> i64 {
        self.exponent
    }
}

/// `prod_{k=0}^{length-1} (1 - sign·q^{offset + k·step})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FinitePochSpec {
    sign: Sign,
    offset: u64,
    step: u64,
    length: u64,
}

impl FinitePochSpec {
    pub fn new(sign: Sign, offset: i64, step: i64, length: u64) -> Result<Self, FactoryError> {
        if offset < 0 || step < 1 {
            return Err(FactoryError::InvalidFinitePoch { offset, step });
        }
        Ok(FinitePochSpec { sign, offset: offset as u64, step: step as u64, length })
    }

    pub fn length(&self) -> u64 {
        self.length
    }
}

/// `sum_{n in Z} alt^n q^{quad·n^2 + lin·n + shift}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaSpec {
    quad: i64,
    lin: i64,
    alt: Sign,
    shift: i64,
}

impl ThetaSpec {
    pub fn new(quad: i64, lin: i64, alt: Sign, shift: i64) -> Result<Self, FactoryError> {
        let bad = FactoryError::InvalidTheta { quad, lin, shift };
        if quad < 1 {
            return Err(bad);
        }
        let spec = ThetaSpec { quad, lin, alt, shift };
        let v = spec.vertex_floor();
        if spec.exponent(v) < 0 || spec.exponent(v + 1) < 0 {
            return Err(bad);
        }
        Ok(spec)
    }

    fn exponent(&self, n: i64) -> i128 {
        let n = n as i128;
        self.quad as i128 * n * n + self.lin as i128 * n + self.shift as i128
    }

    fn vertex_floor(&self) -> i64 {
        Integer::div_floor(&-self.lin, &(2 * self.quad))
    }
}

/// Visits every integer `n` with `exponent(n) <= order` for a convex
/// quadratic `exponent` whose real minimum lies in `[v, v + 1]`.
///
/// Walking outward from the vertex, the exponent is monotone on each side,
/// so the first overshoot ends that side.
fn for_each_convex(order: usize, v: i64, exponent: impl Fn(i64) -> i128, mut visit: impl FnMut(i64, usize)) {
    let limit = order as i128;
    let mut n = v;
    while exponent(n) <= limit {
        visit(n, exponent(n) as usize);
        n -= 1;
    }
    let mut n = v + 1;
    while exponent(n) <= limit {
        visit(n, exponent(n) as usize);
        n += 1;
    }
}

pub fn pochhammer(spec: &PochSpec, order: usize) -> Series {
    let mut out = Series::one(order);
    let times = spec.exponent.unsigned_abs();
    let mut k = spec.offset;
    while k <= order as u64 {
        for _ in 0..times {
            if spec.exponent > 0 {
                out.mul_binomial(k as usize, spec.sign);
            } else {
                out.div_binomial(k as usize, spec.sign);
            }
        }
        k += spec.step;
    }
    out
}

pub fn finite_pochhammer(spec: &FinitePochSpec, order: usize) -> Series {
    let mut out = Series::one(order);
    for j in 0..spec.length {
        let k = spec.offset + j * spec.step;
        if k > order as u64 {
            break;
        }
        out.mul_binomial(k as usize, spec.sign);
    }
    out
}

pub fn theta(spec: &ThetaSpec, order: usize) -> Series {
    let mut coeffs = Series::zero(order).into_coeffs();
    for_each_convex(
        order,
        spec.vertex_floor(),
        |n| spec.exponent(n),
        |n, e| {
            coeffs[e] += spec.alt.pow(n).as_i64();
        },
    );
    Series::from_coeffs(coeffs)
}

/// The specialization `q -> q^qscale`, `x = xsign·q^xexp` of
/// `(q, -xq, -1/x; q)_inf = sum_n x^n q^{n(n+1)/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JtpSpec {
    pub qscale: i64,
    pub xexp: i64,
    pub xsign: Sign,
}

impl JtpSpec {
    pub const fn new(qscale: i64, xexp: i64, xsign: Sign) -> Self {
        JtpSpec { qscale, xexp, xsign }
    }

    /// The three Pochhammer factors of the product side.
    pub fn product_factors(&self) -> Result<[PochSpec; 3], FactoryError> {
        let invalid = FactoryError::InvalidSpecialization { qscale: self.qscale, xexp: self.xexp };
        let q = self.qscale;
        if q < 1 || q + self.xexp < 1 || -self.xexp < 1 {
            return Err(invalid);
        }
        // -x·q^Q = -xsign·q^{xexp+Q}, and -1/x = -xsign·q^{-xexp}
        Ok([
            PochSpec::new(Sign::Plus, q, q, 1)?,
            PochSpec::new(self.xsign.flip(), q + self.xexp, q, 1)?,
            PochSpec::new(self.xsign.flip(), -self.xexp, q, 1)?,
        ])
    }

    pub fn product_side(&self, order: usize) -> Result<Series, FactoryError> {
        let [a, b, c] = self.product_factors()?;
        Ok(&(&pochhammer(&a, order) * &pochhammer(&b, order)) * &pochhammer(&c, order))
    }

    /// Direct summation of `sum_n xsign^n q^{Q·n(n+1)/2 + xexp·n}`.
    pub fn sum_side(&self, order: usize) -> Result<Series, FactoryError> {
        self.product_factors()?;
        let (q, e) = (self.qscale as i128, self.xexp as i128);
        let exponent = |n: i64| {
            let n = n as i128;
            q * n * (n + 1) / 2 + e * n
        };
        let v = Integer::div_floor(&-(self.qscale + 2 * self.xexp), &(2 * self.qscale));
        let mut coeffs = Series::zero(order).into_coeffs();
        for_each_convex(order, v, exponent, |n, exp| {
            coeffs[exp] += self.xsign.pow(n).as_i64();
        });
        Ok(Series::from_coeffs(coeffs))
    }
}

/// Both sides of a triple product specialization, which must agree.
pub fn jacobi_triple_product_sides(
    qscale: i64,
    xexp: i64,
    xsign: Sign,
    order: usize,
) -> Result<(Series, Series), FactoryError> {
    let spec = JtpSpec::new(qscale, xexp, xsign);
    Ok((spec.product_side(order)?, spec.sum_side(order)?))
}

/// A composition tree that evaluates to a truncated series.
#[derive(Clone, Debug)]
pub enum Recipe {
    Int(i64),
    QPow(u64),
    Poch(PochSpec),
    FinitePoch(FinitePochSpec),
    Theta(ThetaSpec),
    Add(Box<Recipe>, Box<Recipe>),
    Sub(Box<Recipe>, Box<Recipe>),
    Mul(Box<Recipe>, Box<Recipe>),
    /// Exact division; see [`Series::checked_div`].
    Div(Box<Recipe>, Box<Recipe>),
    Pow(Box<Recipe>, i64),
    /// `sum_{n >= start} term(n)`, where `term(n)` is divisible by
    /// `q^{lead(n)}` and `lead` is nondecreasing and unbounded.
    Sum {
        start: u64,
        lead: fn(u64) -> u64,
        term: fn(u64) -> Recipe,
    },
}

impl Recipe {
    pub fn pow(self, e: i64) -> Recipe {
        Recipe::Pow(Box::new(self), e)
    }

    pub fn eval(&self, order: usize) -> Result<Series, FactoryError> {
        Ok(match self {
            Recipe::Int(c) => Series::constant(*c, order),
            Recipe::QPow(k) => Series::monomial(1, *k as usize, order),
            Recipe::Poch(spec) => pochhammer(spec, order),
            Recipe::FinitePoch(spec) => finite_pochhammer(spec, order),
            Recipe::Theta(spec) => theta(spec, order),
            Recipe::Add(a, b) => &a.eval(order)? + &b.eval(order)?,
            Recipe::Sub(a, b) => &a.eval(order)? - &b.eval(order)?,
            Recipe::Mul(a, b) => &a.eval(order)? * &b.eval(order)?,
            Recipe::Div(a, b) => a.eval(order)?.checked_div(&b.eval(order)?)?,
            Recipe::Pow(a, e) => a.eval(order)?.pow(*e)?,
            Recipe::Sum { start, lead, term } => {
                let cap = 10 * (order + 2);
                let mut acc = Series::zero(order);
                let mut n = *start;
                while lead(n) <= order as u64 {
                    if (n - start) as usize >= cap {
                        return Err(FactoryError::NonTerminatingSum { terms: cap });
                    }
                    acc = &acc + &term(n).eval(order)?;
                    n += 1;
                }
                acc
            }
        })
    }
}

macro_rules! recipe_op {
    ($tr:ident, $method:ident, $variant:ident) => {
        impl $tr for Recipe {
            type Output = Recipe;
            fn $method(self, rhs: Recipe) -> Recipe {
                Recipe::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

recipe_op!(Add, add, Add);
recipe_op!(Sub, sub, Sub);
recipe_op!(Mul, mul, Mul);
recipe_op!(Div, div, Div);

/// `(sign·q^offset; q^step)_inf` as a recipe. Panics on an invalid spec,
/// which only happens for hard-coded catalog entries.
pub fn poch(sign: Sign, offset: u64, step: u64) -> Recipe {
    Recipe::Poch(PochSpec::new(sign, offset as i64, step as i64, 1).expect("valid Pochhammer spec"))
}

pub fn finite_poch(sign: Sign, offset: u64, step: u64, length: u64) -> Recipe {
    Recipe::FinitePoch(
        FinitePochSpec::new(sign, offset as i64, step as i64, length).expect("valid finite Pochhammer spec"),
    )
}

pub fn theta_sum(quad: i64, lin: i64, alt: Sign, shift: i64) -> Recipe {
    Recipe::Theta(ThetaSpec::new(quad, lin, alt, shift).expect("valid theta spec"))
}

pub fn int(c: i64) -> Recipe {
    Recipe::Int(c)
}

pub fn qpow(k: u64) -> Recipe {
    Recipe::QPow(k)
}

pub fn named_series(name: SeriesName, order: usize) -> Result<Series, FactoryError> {
    name.recipe().eval(order)
}

pub fn named_series_by_key(key: &str, order: usize) -> Result<Series, FactoryError> {
    let name: SeriesName = key.parse()?;
    named_series(name, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn s(c: &[i64]) -> Series {
        Series::from_i64s(c)
    }

    /// Partitions of `n` built from `kinds`, one entry per colored part
    /// kind (a value listed twice has two colors); `distinct` allows each
    /// kind at most once.
    fn count_colored(n: u64, kinds: &[u64], distinct: bool) -> u64 {
        fn go(n: u64, kinds: &[u64], distinct: bool) -> u64 {
            if n == 0 {
                return 1;
            }
            let Some((&v, rest)) = kinds.split_first() else { return 0 };
            let mut total = go(n, rest, distinct);
            let mut used = v;
            while used <= n {
                total += go(n - used, rest, distinct);
                if distinct {
                    break;
                }
                used += v;
            }
            total
        }
        go(n, kinds, distinct)
    }

    #[test]
    fn euler_product_pentagonal() {
        let spec = PochSpec::new(Sign::Plus, 1, 1, 1).unwrap();
        assert_eq!(pochhammer(&spec, 5).coeffs(), s(&[1, -1, -1, 0, 0, 1]).coeffs());
    }

    #[test]
    fn distinct_parts_product() {
        let spec = PochSpec::new(Sign::Minus, 1, 1, 1).unwrap();
        let oracle: Vec<i64> = (0..=5).map(|n| count_colored(n, &[1, 2, 3, 4, 5], true) as i64).collect();
        assert_eq!(oracle, [1, 1, 1, 2, 2, 3]);
        assert_eq!(pochhammer(&spec, 5).coeffs(), s(&oracle).coeffs());
    }

    #[test]
    fn two_color_odd_parts() {
        let spec = PochSpec::new(Sign::Plus, 1, 2, -2).unwrap();
        let oracle: Vec<i64> = (0..=6).map(|n| count_colored(n, &[1, 1, 3, 3, 5, 5], false) as i64).collect();
        assert_eq!(oracle, [1, 2, 3, 6, 9, 14, 22]);
        assert_eq!(pochhammer(&spec, 6).coeffs(), s(&oracle).coeffs());
    }

    #[test]
    fn poch_spec_validation() {
        assert!(PochSpec::new(Sign::Plus, 0, 1, 1).is_err());
        assert!(PochSpec::new(Sign::Plus, 1, 0, 1).is_err());
        assert!(FinitePochSpec::new(Sign::Plus, 0, 1, 3).is_ok());
        assert!(FinitePochSpec::new(Sign::Plus, -1, 1, 3).is_err());
    }

    #[test]
    fn finite_products() {
        let empty = FinitePochSpec::new(Sign::Plus, 1, 1, 0).unwrap();
        assert_eq!(finite_pochhammer(&empty, 4).coeffs(), Series::one(4).coeffs());
        let a = FinitePochSpec::new(Sign::Plus, 2, 2, 2).unwrap();
        assert_eq!(finite_pochhammer(&a, 6).coeffs(), s(&[1, 0, -1, 0, -1, 0, 1]).coeffs());
        let b = FinitePochSpec::new(Sign::Plus, 1, 2, 2).unwrap();
        assert_eq!(finite_pochhammer(&b, 4).coeffs(), s(&[1, -1, 0, -1, 1]).coeffs());
        let zero = FinitePochSpec::new(Sign::Plus, 0, 1, 2).unwrap();
        assert!(finite_pochhammer(&zero, 3).is_zero());
    }

    /// Direct summation over a generous symmetric window.
    fn theta_oracle(quad: i64, lin: i64, alt: i64, shift: i64, order: usize) -> Series {
        let mut c = alloc::vec![0i64; order + 1];
        for n in -200i64..=200 {
            let e = quad * n * n + lin * n + shift;
            if (0..=order as i64).contains(&e) {
                c[e as usize] += if alt < 0 && n.rem_euclid(2) == 1 { -1 } else { 1 };
            }
        }
        s(&c)
    }

    #[test]
    fn theta_examples() {
        let t = theta(&ThetaSpec::new(8, 2, Sign::Plus, 0).unwrap(), 12);
        assert_eq!(t.coeffs(), theta_oracle(8, 2, 1, 0, 12).coeffs());
        let mut expected = alloc::vec![0i64; 13];
        expected[0] = 1;
        expected[6] = 1;
        expected[10] = 1;
        assert_eq!(t.coeffs(), s(&expected).coeffs());

        let t = theta(&ThetaSpec::new(2, 0, Sign::Minus, 0).unwrap(), 9);
        assert_eq!(t.coeffs(), s(&[1, 0, -2, 0, 0, 0, 0, 0, 2, 0]).coeffs());

        let t = theta(&ThetaSpec::new(100, 0, Sign::Plus, 0).unwrap(), 50);
        assert_eq!(t.coeffs(), Series::one(50).coeffs());
    }

    #[test]
    fn theta_far_vertex() {
        // vertex at n = 50; the window must follow it rather than sit at 0
        let spec = ThetaSpec::new(1, -100, Sign::Minus, 2500).unwrap();
        assert_eq!(theta(&spec, 30).coeffs(), theta_oracle(1, -100, -1, 2500, 30).coeffs());
        assert!(ThetaSpec::new(1, -100, Sign::Plus, 2499).is_err());
        assert!(ThetaSpec::new(0, 1, Sign::Plus, 0).is_err());
    }

    #[test]
    fn jtp_examples() {
        let (prod, sum) = jacobi_triple_product_sides(4, -1, Sign::Plus, 10).unwrap();
        assert_eq!(sum.coeffs(), s(&[1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]).coeffs());
        assert_eq!(prod.coeffs(), sum.coeffs());

        let (prod, sum) = jacobi_triple_product_sides(16, -6, Sign::Plus, 12).unwrap();
        assert_eq!(sum.coeffs(), theta_oracle(8, 2, 1, 0, 12).coeffs());
        assert_eq!(prod.coeffs(), sum.coeffs());

        let (prod, sum) = jacobi_triple_product_sides(4, -2, Sign::Minus, 60).unwrap();
        assert_eq!(sum.coeffs(), theta_oracle(2, 0, -1, 0, 60).coeffs());
        assert_eq!(prod.coeffs(), sum.coeffs());
    }

    #[test]
    fn jtp_rejects_invalid_specialization() {
        assert!(matches!(
            jacobi_triple_product_sides(4, 0, Sign::Plus, 5),
            Err(FactoryError::InvalidSpecialization { .. })
        ));
        assert!(jacobi_triple_product_sides(4, -4, Sign::Plus, 5).is_err());
        assert!(jacobi_triple_product_sides(3, -1, Sign::Plus, 5).is_ok());
    }

    #[test]
    fn named_examples() {
        let f = named_series(SeriesName::GenF, 5).unwrap();
        assert_eq!(f.coeffs(), s(&[1, 2, 4, 8, 14, 24]).coeffs());
        let h = named_series(SeriesName::GenH, 5).unwrap();
        assert_eq!(h.coeffs(), s(&[1, 2, 2, 4, 6, 8]).coeffs());
        let d = named_series(SeriesName::GenF0MinusF1, 6).unwrap();
        assert_eq!(d.coeffs(), s(&[1, 0, 2, 0, 4, 0, 8]).coeffs());
        assert!(matches!(named_series_by_key("NOPE", 3), Err(FactoryError::UnknownName(_))));
    }

    #[test]
    fn catalog_relations() {
        let n = 80;
        let get = |name| named_series(name, n).unwrap();
        assert!(get(SeriesName::GenF) == get(SeriesName::F0PlusF1Expanded));
        assert!(get(SeriesName::GenF) == get(SeriesName::GenF0PlusF1));
        let plus = get(SeriesName::GenF0PlusF1);
        let minus = get(SeriesName::GenF0MinusF1);
        let two = num_bigint::BigInt::from(2);
        assert!(&plus + &minus == get(SeriesName::GenF0).scale(&two));
        assert!(&plus - &minus == get(SeriesName::GenF1).scale(&two));
        assert!(get(SeriesName::GenF) == get(SeriesName::Overpartitions));
        assert!(get(SeriesName::GenH) == get(SeriesName::OddOverpartitions));
    }

    #[test]
    fn every_catalog_entry_evaluates() {
        for &name in SeriesName::ALL {
            let series = named_series(name, 40).unwrap_or_else(|e| panic!("{}: {e}", name.key()));
            assert_eq!(series.order(), 40);
        }
    }

    #[test]
    fn truncation_coherence() {
        for &name in SeriesName::ALL {
            let big = named_series(name, 36).unwrap();
            for m in [0, 1, 7, 20, 35] {
                let small = named_series(name, m).unwrap();
                assert_eq!(big.truncate(m).coeffs(), small.coeffs(), "{} at {m}", name.key());
            }
        }
    }

    proptest! {
        #[test]
        fn poch_exponent_negation_cancels(
            minus in any::<bool>(), offset in 1i64..6, step in 1i64..5, e in 1i64..4, order in 0usize..40,
        ) {
            let sign = if minus { Sign::Minus } else { Sign::Plus };
            let up = pochhammer(&PochSpec::new(sign, offset, step, e).unwrap(), order);
            let down = pochhammer(&PochSpec::new(sign, offset, step, -e).unwrap(), order);
            prop_assert!((&up * &down) == Series::one(order));
        }

        #[test]
        fn jtp_sides_agree(qscale in 1i64..7, shift in 1i64..7, minus in any::<bool>(), order in 0usize..60) {
            // any xexp with 1 <= -xexp <= qscale - 1 + qscale is valid; pick within
            let xexp = -(((shift - 1) % (2 * qscale - 1).max(1)) + 1).min(qscale + qscale - 1);
            let sign = if minus { Sign::Minus } else { Sign::Plus };
            match jacobi_triple_product_sides(qscale, xexp, sign, order) {
                Ok((prod, sum)) => prop_assert_eq!(prod.coeffs(), sum.coeffs()),
                Err(FactoryError::InvalidSpecialization { .. }) => {
                    prop_assert!(qscale + xexp < 1);
                }
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }
}
