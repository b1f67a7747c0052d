//! Brute-force enumeration of two-color partitions and their statistics.
//!
//! Nothing here goes through the series machinery: the counts produced by
//! this module are the independent side of every audited identity, so the
//! enumeration stays deliberately naive.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};

use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CombinatError {
    InvalidPart(String),
    InvalidMexSpec { modulus: u32, residue: u32 },
    UnknownFamily(String),
}

impl fmt::Display for CombinatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CombinatError::InvalidPart(s) => write!(f, "invalid colored part `{s}` (expected e.g. 3_b or 1_r)"),
            CombinatError::InvalidMexSpec { modulus, residue } => {
                write!(f, "mex needs an even modulus and 1 <= residue <= modulus (got A={modulus}, a={residue})")
            }
            CombinatError::UnknownFamily(s) => write!(f, "unknown family `{s}`"),
        }
    }
}

impl core::error::Error for CombinatError {}

/// Declared so that `Blue > Red`: at equal value the blue part comes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    fn letter(self) -> char {
        match self {
            Color::Blue => 'b',
            Color::Red => 'r',
        }
    }
}

/// Ordered by value, then blue above red.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPart {
    value: u32,
    color: Color,
}

impl ColoredPart {
    pub fn new(value: u32, color: Color) -> Option<Self> {
        (value >= 1).then_some(ColoredPart { value, color })
    }

    pub fn blue(value: u32) -> Self {
        Self::new(value, Color::Blue).expect("part value must be positive")
    }

    pub fn red(value: u32) -> Self {
        Self::new(value, Color::Red).expect("part value must be positive")
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn color(&self) -> Color {
        self.color
    }
}

impl fmt::Display for ColoredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.color.letter())
    }
}

impl FromStr for ColoredPart {
    type Err = CombinatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CombinatError::InvalidPart(s.to_string());
        let (value, color) = s.trim().split_once('_').ok_or_else(bad)?;
        let value: u32 = value.parse().map_err(|_| bad())?;
        let color = match color {
            "b" => Color::Blue,
            "r" => Color::Red,
            _ => return Err(bad()),
        };
        ColoredPart::new(value, color).ok_or_else(bad)
    }
}

/// A multiset of colored parts, kept sorted with the largest part first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPartition {
    parts: Vec<ColoredPart>,
}

impl ColoredPartition {
    pub fn new(mut parts: Vec<ColoredPart>) -> Self {
        parts.sort_by(|a, b| b.cmp(a));
        ColoredPartition { parts }
    }

    pub fn empty() -> Self {
        ColoredPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|p| p.value).sum()
    }

    pub fn stats(&self) -> FamilyStats {
        stats(&self.parts)
    }

    pub fn is_canonical(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("(empty)");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for ColoredPartition {
    type Err = CombinatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "(empty)" || s.is_empty() {
            return Ok(ColoredPartition::empty());
        }
        let parts = s.split('+').map(str::parse).collect::<Result<Vec<_>, _>>()?;
        Ok(ColoredPartition::new(parts))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FamilyStats {
    pub red_odd_count: u32,
    pub even_part_count: u32,
    pub total_part_count: u32,
}

pub fn stats(parts: &[ColoredPart]) -> FamilyStats {
    let mut s = FamilyStats::default();
    for p in parts {
        s.total_part_count += 1;
        if p.value % 2 == 0 {
            s.even_part_count += 1;
        } else if p.color == Color::Red {
            s.red_odd_count += 1;
        }
    }
    s
}

/// Which parts may appear, and whether a colored part may repeat.
pub struct PartRules<'a> {
    pub blue_allowed: &'a dyn Fn(u32) -> bool,
    pub red_allowed: &'a dyn Fn(u32) -> bool,
    pub distinct: bool,
}

fn always(_: u32) -> bool {
    true
}

fn never(_: u32) -> bool {
    false
}

fn odd(v: u32) -> bool {
    v % 2 == 1
}

impl PartRules<'static> {
    /// Even parts blue only.
    pub const F_SET: PartRules<'static> = PartRules { blue_allowed: &always, red_allowed: &odd, distinct: false };
    /// Even parts blue only, no colored part repeated.
    pub const H_SET: PartRules<'static> = PartRules { blue_allowed: &always, red_allowed: &odd, distinct: true };
    /// Ordinary one-color partitions.
    pub const ORDINARY: PartRules<'static> = PartRules { blue_allowed: &always, red_allowed: &never, distinct: false };
    /// Ordinary partitions into odd parts.
    pub const ODD_ORDINARY: PartRules<'static> = PartRules { blue_allowed: &odd, red_allowed: &never, distinct: false };
}

/// Calls `visit` once for every partition of `n` allowed by `rules`, in
/// descending lexicographic order of the canonical part sequence.
pub fn visit_partitions(rules: &PartRules<'_>, n: u32, visit: &mut dyn FnMut(&[ColoredPart])) {
    let mut stack = Vec::new();
    descend(rules, n, None, &mut stack, visit);
}

fn descend(
    rules: &PartRules<'_>,
    remaining: u32,
    bound: Option<ColoredPart>,
    stack: &mut Vec<ColoredPart>,
    visit: &mut dyn FnMut(&[ColoredPart]),
) {
    if remaining == 0 {
        visit(stack);
        return;
    }
    let top = bound.map_or(remaining, |b| b.value.min(remaining));
    for value in (1..=top).rev() {
        for color in [Color::Blue, Color::Red] {
            let allowed = match color {
                Color::Blue => (rules.blue_allowed)(value),
                Color::Red => (rules.red_allowed)(value),
            };
            if !allowed {
                continue;
            }
            let part = ColoredPart { value, color };
            if let Some(b) = bound {
                match part.cmp(&b) {
                    Ordering::Greater => continue,
                    Ordering::Equal if rules.distinct => continue,
                    _ => {}
                }
            }
            stack.push(part);
            descend(rules, remaining - value, Some(part), stack, visit);
            stack.pop();
        }
    }
}

fn collect(rules: &PartRules<'_>, n: u32) -> Vec<ColoredPartition> {
    let mut out = Vec::new();
    visit_partitions(rules, n, &mut |parts| out.push(ColoredPartition { parts: parts.to_vec() }));
    out
}

fn count_where(rules: &PartRules<'_>, n: u32, mut keep: impl FnMut(&[ColoredPart]) -> bool) -> BigUint {
    let mut count = 0u64;
    visit_partitions(rules, n, &mut |parts| {
        if keep(parts) {
            count += 1;
        }
    });
    BigUint::from(count)
}

/// Every two-color partition of `n` whose even parts are blue.
pub fn enumerate_f_set(n: u32) -> Vec<ColoredPartition> {
    collect(&PartRules::F_SET, n)
}

/// The members of [`enumerate_f_set`] in which no colored part repeats.
pub fn enumerate_h_set(n: u32) -> Vec<ColoredPartition> {
    collect(&PartRules::H_SET, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    F,
    /// Even number of red odd parts.
    F0,
    F1,
    /// Even number of even parts.
    F2,
    F3,
    H,
    /// Even number of even parts.
    H0,
    H1,
    /// Even number of parts.
    H2,
    H3,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::F,
        Family::F0,
        Family::F1,
        Family::F2,
        Family::F3,
        Family::H,
        Family::H0,
        Family::H1,
        Family::H2,
        Family::H3,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Family::F => "F",
            Family::F0 => "F0",
            Family::F1 => "F1",
            Family::F2 => "F2",
            Family::F3 => "F3",
            Family::H => "H",
            Family::H0 => "H0",
            Family::H1 => "H1",
            Family::H2 => "H2",
            Family::H3 => "H3",
        }
    }

    fn rules(self) -> &'static PartRules<'static> {
        match self {
            Family::F | Family::F0 | Family::F1 | Family::F2 | Family::F3 => &PartRules::F_SET,
            _ => &PartRules::H_SET,
        }
    }

    pub fn accepts(self, s: &FamilyStats) -> bool {
        let even = |k: u32| k.is_multiple_of(2);
        match self {
            Family::F | Family::H => true,
            Family::F0 => even(s.red_odd_count),
            Family::F1 => !even(s.red_odd_count),
            Family::F2 | Family::H0 => even(s.even_part_count),
            Family::F3 | Family::H1 => !even(s.even_part_count),
            Family::H2 => even(s.total_part_count),
            Family::H3 => !even(s.total_part_count),
        }
    }
}

impl FromStr for Family {
    type Err = CombinatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL.into_iter().find(|f| f.key() == s).ok_or_else(|| CombinatError::UnknownFamily(s.to_string()))
    }
}

pub fn count_family(family: Family, n: u32) -> BigUint {
    count_where(family.rules(), n, |parts| family.accepts(&stats(parts)))
}

/// Overpartitions of `n`: each ordinary partition contributes one
/// overpartition per subset of its distinct part values.
pub fn enumerate_overpartitions(n: u32) -> BigUint {
    overpartitions_with(&PartRules::ORDINARY, n)
}

/// Overpartitions of `n` into odd parts.
pub fn enumerate_overpartitions_odd(n: u32) -> BigUint {
    overpartitions_with(&PartRules::ODD_ORDINARY, n)
}

fn overpartitions_with(rules: &PartRules<'_>, n: u32) -> BigUint {
    let mut total = BigUint::from(0u32);
    visit_partitions(rules, n, &mut |parts| {
        let distinct = 1 + parts.windows(2).filter(|w| w[0].value != w[1].value).count();
        let distinct = if parts.is_empty() { 0 } else { distinct };
        total += BigUint::from(1u32) << distinct;
    });
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MexSpec {
    modulus: u32,
    residue: u32,
}

impl MexSpec {
    /// The case used throughout: smallest missing part that is `2 (mod 4)`.
    pub const FOUR_TWO: MexSpec = MexSpec { modulus: 4, residue: 2 };

    pub fn new(modulus: u32, residue: u32) -> Result<Self, CombinatError> {
        if modulus == 0 || !modulus.is_multiple_of(2) || residue < 1 || residue > modulus {
            return Err(CombinatError::InvalidMexSpec { modulus, residue });
        }
        Ok(MexSpec { modulus, residue })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn residue(&self) -> u32 {
        self.residue
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MexSide {
    /// `mex ≡ a (mod 2A)`.
    Plain,
    /// `mex ≡ A + a (mod 2A)`.
    Bar,
}

/// Smallest `x ≡ a (mod A)`, `x >= a`, that is not the value of any part.
///
/// A part of either color blocks `x`. For `A = 4, a = 2` every candidate
/// is even and therefore blue, so the color question never arises there.
pub fn mex_blue(parts: &[ColoredPart], spec: MexSpec) -> u32 {
    let mut x = spec.residue;
    while parts.iter().any(|p| p.value == x) {
        x += spec.modulus;
    }
    x
}

pub fn mex_side(mex: u32, spec: MexSpec) -> MexSide {
    let period = 2 * spec.modulus;
    if mex % period == spec.residue % period {
        MexSide::Plain
    } else {
        MexSide::Bar
    }
}

/// `p_{A,a}(n, blue)` for [`MexSide::Plain`], `p̄_{A,a}(n, blue)` for
/// [`MexSide::Bar`], both over the F set.
pub fn count_mex_class(n: u32, spec: MexSpec, side: MexSide) -> BigUint {
    count_where(&PartRules::F_SET, n, |parts| mex_side(mex_blue(parts, spec), spec) == side)
}

/// Two-color partitions of `n` whose red parts satisfy `red_allowed`;
/// blue parts are unrestricted.
pub fn count_restricted_two_color(n: u32, red_allowed: &dyn Fn(u32) -> bool) -> BigUint {
    let rules = PartRules { blue_allowed: &always, red_allowed, distinct: false };
    count_where(&rules, n, |_| true)
}

/// Anything countable by weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Counter {
    Family(Family),
    Overpartitions,
    OddOverpartitions,
    Mex(MexSide),
}

impl Counter {
    pub fn key(self) -> &'static str {
        match self {
            Counter::Family(f) => f.key(),
            Counter::Overpartitions => "pbar",
            Counter::OddOverpartitions => "pbar_odd",
            Counter::Mex(MexSide::Plain) => "mex_plain",
            Counter::Mex(MexSide::Bar) => "mex_bar",
        }
    }

    pub fn count(self, n: u32) -> BigUint {
        match self {
            Counter::Family(f) => count_family(f, n),
            Counter::Overpartitions => enumerate_overpartitions(n),
            Counter::OddOverpartitions => enumerate_overpartitions_odd(n),
            Counter::Mex(side) => count_mex_class(n, MexSpec::FOUR_TWO, side),
        }
    }
}

impl FromStr for Counter {
    type Err = CombinatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "pbar" => Counter::Overpartitions,
            "pbar_odd" => Counter::OddOverpartitions,
            "mex_plain" => Counter::Mex(MexSide::Plain),
            "mex_bar" => Counter::Mex(MexSide::Bar),
            other => Counter::Family(other.parse()?),
        })
    }
}

/// The series `sum_{n <= order} counter(n) q^n`.
pub fn series_from_counts<E>(order: usize, mut counter: impl FnMut(u32) -> Result<BigUint, E>) -> Result<Series, E> {
    let coeffs = (0..=order as u32).map(|n| counter(n).map(BigInt::from)).collect::<Result<Vec<_>, E>>()?;
    Ok(Series::from_coeffs(coeffs))
}
