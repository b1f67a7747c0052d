//! Named generating functions for the two-color partition families.
//!
//! Naming: `GEN_*` are the generating functions themselves, `*_LINE<k>`
//! are intermediate forms of a derivation chain (k counts the displayed
//! lines), `*_PRINTED` keeps a form exactly as it is usually printed even
//! where that form is known to be off, and `*_SIGNED` / `*_CORRECTED` are
//! the repaired counterparts.

use alloc::string::ToString;
use core::str::FromStr;

use super::{finite_poch, int, poch, qpow, theta_sum, FactoryError, PochSpec, Recipe};
use crate::series::Sign;

const P: Sign = Sign::Plus;
const M: Sign = Sign::Minus;

macro_rules! series_names {
    ($($variant:ident => $key:literal, $doc:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum SeriesName {
            $(#[doc = $doc] $variant,)*
        }

        impl SeriesName {
            pub const ALL: &'static [SeriesName] = &[$(SeriesName::$variant,)*];

            pub fn key(self) -> &'static str {
                match self {
                    $(SeriesName::$variant => $key,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(SeriesName::$variant => $doc,)*
                }
            }
        }
    };
}

series_names! {
    GenF => "GEN_F", "F(n): two-color partitions with even parts blue only, 1/((q;q^2)^2 (q^2;q^2)).";
    GenFEulerForm => "GEN_F_EULER_FORM", "(-q;q)/((q;q^2)(q^2;q^2)).";
    Overpartitions => "OVERPARTITIONS", "Overpartitions, (-q;q)/(q;q).";
    EulerDistinct => "EULER_DISTINCT", "Partitions into distinct parts, (-q;q).";
    EulerOdd => "EULER_ODD", "Partitions into odd parts, 1/(q;q^2).";
    GenH => "GEN_H", "H(n): members of F(n) with no repeated colored part, (-q;q^2)^2 (-q^2;q^2).";
    OddOverpartitions => "ODD_OVERPARTITIONS", "Overpartitions into odd parts, (-q;q^2)/(q;q^2).";
    GenF0MinusF1 => "GEN_F0_MINUS_F1", "F0 - F1 as 1/((-q;q^2)(q;q^2)(q^2;q^2)).";
    F0MinusF1Short => "F0_MINUS_F1_SHORT", "F0 - F1 as 1/((-q;q^2)(q;q)).";
    G0G1EulerForm => "G0_G1_EULER_FORM", "(-q;q)/((-q;q^2)(q^2;q^2)).";
    G0G1Dilated => "G0_G1_DILATED", "(-q^2;q^2)/(q^2;q^2), overpartitions in q^2.";
    GenF0PlusF1 => "GEN_F0_PLUS_F1", "F0 + F1 as 1/((q;q^2)(q;q)).";
    F0PlusF1Expanded => "F0_PLUS_F1_EXPANDED", "F0 + F1 as 1/((q;q^2)(q;q^2)(q^2;q^2)).";
    GenF0 => "GEN_F0", "F0 as sum_n q^(8n^2+2n) / ((q;q)(q^2;q^2)).";
    GenF1 => "GEN_F1", "F1 as sum_n q^(8n^2+6n+1) / ((q;q)(q^2;q^2)).";
    GenF0Halves => "GEN_F0_HALVES", "F0 as half the sum of the F0+F1 and F0-F1 products.";
    GenF1Halves => "GEN_F1_HALVES", "F1 as half the difference of the F0+F1 and F0-F1 products.";
    F0Line1 => "F0_LINE1", "(1/(q;q)) (1/(q;q^2) + 1/(-q;q^2)) / 2.";
    F0Line2 => "F0_LINE2", "((-q;q^2) + (q;q^2)) / (2 (q;q)(q^2;q^4)).";
    F0Line3 => "F0_LINE3", "((-q,-q^3,q^4;q^4) + (q,q^3,q^4;q^4)) / (2 (q;q)(q^2;q^2)).";
    F0Bilateral => "F0_BILATERAL", "sum_n q^(2n^2+n) (1 + (-1)^n) / (2 (q;q)(q^2;q^2)).";
    F0Hlp2Printed => "F0_HLP2_PRINTED", "(q^16,q^6,q^10;q^16) / ((q;q)(q^2;q^2)), signs as printed.";
    F0Hlp2Signed => "F0_HLP2_SIGNED", "(q^16,-q^6,-q^10;q^16) / ((q;q)(q^2;q^2)).";
    F0ProductPrinted => "F0_PRODUCT_PRINTED", "(q^16,q^6,q^10;q^16) / ((q;q^2)(q^2;q^2)^2), signs as printed.";
    F0ProductSigned => "F0_PRODUCT_SIGNED", "(q^16,-q^6,-q^10;q^16) / ((q;q^2)(q^2;q^2)^2).";
    F1Line1 => "F1_LINE1", "(1/(q;q)) (1/(q;q^2) - 1/(-q;q^2)) / 2.";
    F1Bilateral => "F1_BILATERAL", "sum_n q^(2n^2+n) (1 - (-1)^n) / (2 (q;q)(q^2;q^2)).";
    F1ProductPrinted => "F1_PRODUCT_PRINTED", "q (q^16,q^2,q^14;q^16) / ((q;q^2)(q^2;q^2)^2), signs as printed.";
    F1ProductSigned => "F1_PRODUCT_SIGNED", "q (q^16,-q^2,-q^14;q^16) / ((q;q^2)(q^2;q^2)^2).";
    H0MinusH1Product => "H0_MINUS_H1_PRODUCT", "H0 - H1 as (q^2;q^2)(-q;q^2)^2.";
    H0MinusH1Theta => "H0_MINUS_H1_THETA", "1 + 2 sum_{n>=1} q^(n^2).";
    H2MinusH3Product => "H2_MINUS_H3_PRODUCT", "H2 - H3 as (q^2;q^2)(q;q^2)^2.";
    H2MinusH3Theta => "H2_MINUS_H3_THETA", "1 + 2 sum_{n>=1} (-1)^n q^(n^2).";
    GenH0 => "GEN_H0", "H0: members of H(n) with an even number of even parts.";
    GenH1 => "GEN_H1", "H1: members of H(n) with an odd number of even parts.";
    GenH2 => "GEN_H2", "H2: members of H(n) with an even number of parts.";
    GenH3 => "GEN_H3", "H3: members of H(n) with an odd number of parts.";
    GenF2MinusF3 => "GEN_F2_MINUS_F3", "F2 - F3 as 1/((-q^2;q^2)(q;q^2)^2).";
    GenF2PlusF3 => "GEN_F2_PLUS_F3", "F2 + F3 as 1/((q^2;q^2)(q;q^2)^2).";
    GenF2 => "GEN_F2", "F2 as half the sum of the F2+F3 and F2-F3 products.";
    GenF3 => "GEN_F3", "F3 as half the difference of the F2+F3 and F2-F3 products.";
    F2Line2 => "F2_LINE2", "(1 + (q^2;q^2)/(-q^2;q^2)) / (2 (q^2;q^2)(q;q^2)^2).";
    F2Line3 => "F2_LINE3", "(1 + (q^2;q^2)(q^2;q^4)) / (2 (q^2;q^2)(q;q^2)^2).";
    F2Line4 => "F2_LINE4", "(1 + (q^4,q^2,q^2;q^4)) / (2 (q^2;q^2)(q;q^2)^2).";
    F2Line5 => "F2_LINE5", "(1 + sum_n (-1)^n q^(2n^2)) / (2 (q^2;q^2)(q;q^2)^2).";
    F2Line6 => "F2_LINE6", "sum_{n>=0} (-1)^n q^(2n^2) / ((q^2;q^2)(q;q^2)^2).";
    F2Line7 => "F2_LINE7", "sum_{n>=0} q^(8n^2) (1 - q^(8n+2)) / ((q^2;q^2)(q;q^2)^2).";
    F2Line8 => "F2_LINE8", "sum_{n>=0} q^(8n^2) (1 - q^(8n+2)) / (q^2;q^4) over (q^4;q^4)(q;q^2)^2.";
    F2SumForm => "F2_SUMFORM", "sum_{n>=0} q^(2+6+...+(8n-2)) / prod_{j!=2n}(1-q^(4j+2)) over (q^4;q^4)(q;q^2)^2.";
    F3Line1 => "F3_LINE1", "(1/((q^2;q^2)(q;q^2)^2) - 1/((-q^2;q^2)(q;q^2)^2)) / 2.";
    F3Line2Printed => "F3_LINE2_PRINTED", "sum_{n>=1} (-1)^n q^(2n^2) / ((q^2;q^2)(q;q^2)^2), sign as printed.";
    F3Line3Printed => "F3_LINE3_PRINTED", "sum_{n>=0} (-1)^(n+1) q^(2(n+1)^2) / ((q^2;q^2)(q;q^2)^2), sign as printed.";
    F3Line4 => "F3_LINE4", "sum_{n>=0} q^(8n^2+8n+2) (1 - q^(8n+6)) / ((q^2;q^2)(q;q^2)^2).";
    F3SumForm => "F3_SUMFORM", "sum_{n>=0} q^(2+6+...+(8n+2)) / prod_{j!=2n+1}(1-q^(4j+2)) over (q^4;q^4)(q;q^2)^2.";
    FGpt => "F_GPT", "F(n) split by the greatest part: even, odd blue, odd red.";
    FSpt => "F_SPT", "F(n) split by the smallest part: even, odd blue, odd red (no empty partition term).";
    GenF2Line1 => "GEN_F2_LINE1", "Greatest-part form of F collected into one sum.";
    GenF2Line2 => "GEN_F2_LINE2", "Smallest-part form of F collected into one sum, plus 1.";
    HGptRhs => "H_GPT_RHS", "1 plus H(n) split by the greatest part: even, odd red, odd blue.";
    HSptRhs => "H_SPT_RHS", "1 plus H(n) split by the smallest part: even, odd red, odd blue.";
    GenH2Line1 => "GEN_H2_LINE1", "Greatest-part form of H - 1 collected into one sum.";
    GenH2Line2Printed => "GEN_H2_LINE2_PRINTED", "Smallest-part form of H - 1 with q/((1+q^(2n+1))(1+q^(2n+1))), as printed.";
    GenH2Line2Corrected => "GEN_H2_LINE2_CORRECTED", "Smallest-part form of H - 1 with q/((1+q^(2n+1))(1+q^(2n+2))).";
    GenH2Line3 => "GEN_H2_LINE3", "H - 1 as (-q^2;q^2)(-q;q^2)^2 - 1.";
}

impl FromStr for SeriesName {
    type Err = FactoryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SeriesName::ALL.iter().copied().find(|n| n.key() == s).ok_or_else(|| FactoryError::UnknownName(s.to_string()))
    }
}

fn poch_pow(sign: Sign, offset: i64, step: i64, e: i64) -> Recipe {
    Recipe::Poch(PochSpec::new(sign, offset, step, e).expect("valid Pochhammer spec"))
}

/// `(q;q)(q^2;q^2)`, the denominator shared by the F0/F1 forms.
fn den_f01() -> Recipe {
    poch(P, 1, 1) * poch(P, 2, 2)
}

/// `(q^2;q^2)(q;q^2)^2`, the F2/F3 denominator.
fn den_f23() -> Recipe {
    poch(P, 2, 2) * poch(P, 1, 2).pow(2)
}

/// `(q^4;q^4)(q;q^2)^2`.
fn den_f23_split() -> Recipe {
    poch(P, 4, 4) * poch(P, 1, 2).pow(2)
}

fn alt(n: u64) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn one_minus_q(k: u64) -> Recipe {
    int(1) - qpow(k)
}

fn one_plus_q(k: u64) -> Recipe {
    int(1) + qpow(k)
}

/// `2 + 6 + 10 + ...` with `terms` summands, added up term by term.
fn progression_4k2(terms: u64) -> u64 {
    (0..terms).map(|k| 4 * k + 2).sum()
}

fn sum(start: u64, lead: fn(u64) -> u64, term: fn(u64) -> Recipe) -> Recipe {
    Recipe::Sum { start, lead, term }
}

impl SeriesName {
    pub fn recipe(self) -> Recipe {
        use SeriesName::*;
        match self {
            GenF => poch_pow(P, 1, 2, -2) * poch_pow(P, 2, 2, -1),
            GenFEulerForm => poch(M, 1, 1) / (poch(P, 1, 2) * poch(P, 2, 2)),
            Overpartitions => poch(M, 1, 1) / poch(P, 1, 1),
            EulerDistinct => poch(M, 1, 1),
            EulerOdd => int(1) / poch(P, 1, 2),
            GenH => poch(M, 1, 2).pow(2) * poch(M, 2, 2),
            OddOverpartitions => poch(M, 1, 2) / poch(P, 1, 2),
            GenF0MinusF1 => int(1) / (poch(M, 1, 2) * poch(P, 1, 2) * poch(P, 2, 2)),
            F0MinusF1Short => int(1) / (poch(M, 1, 2) * poch(P, 1, 1)),
            G0G1EulerForm => poch(M, 1, 1) / (poch(M, 1, 2) * poch(P, 2, 2)),
            G0G1Dilated => poch(M, 2, 2) / poch(P, 2, 2),
            GenF0PlusF1 => int(1) / (poch(P, 1, 2) * poch(P, 1, 1)),
            F0PlusF1Expanded => int(1) / (poch(P, 1, 2) * poch(P, 1, 2) * poch(P, 2, 2)),
            GenF0 => theta_sum(8, 2, P, 0) / den_f01(),
            GenF1 => theta_sum(8, 6, P, 1) / den_f01(),
            GenF0Halves => (GenF0PlusF1.recipe() + F0MinusF1Short.recipe()) / int(2),
            GenF1Halves => (GenF0PlusF1.recipe() - F0MinusF1Short.recipe()) / int(2),
            F0Line1 => (int(1) / poch(P, 1, 1)) * (int(1) / poch(P, 1, 2) + int(1) / poch(M, 1, 2)) / int(2),
            F0Line2 => (poch(M, 1, 2) + poch(P, 1, 2)) / (int(2) * poch(P, 1, 1) * poch(P, 2, 4)),
            F0Line3 => {
                let minus = poch(M, 1, 4) * poch(M, 3, 4) * poch(P, 4, 4);
                let plus = poch(P, 1, 4) * poch(P, 3, 4) * poch(P, 4, 4);
                (minus + plus) / (int(2) * den_f01())
            }
            F0Bilateral => (theta_sum(2, 1, P, 0) + theta_sum(2, 1, M, 0)) / (int(2) * den_f01()),
            F0Hlp2Printed => poch(P, 16, 16) * poch(P, 6, 16) * poch(P, 10, 16) / den_f01(),
            F0Hlp2Signed => poch(P, 16, 16) * poch(M, 6, 16) * poch(M, 10, 16) / den_f01(),
            F0ProductPrinted => {
                poch(P, 16, 16) * poch(P, 6, 16) * poch(P, 10, 16) / (poch(P, 1, 2) * poch(P, 2, 2).pow(2))
            }
            F0ProductSigned => {
                poch(P, 16, 16) * poch(M, 6, 16) * poch(M, 10, 16) / (poch(P, 1, 2) * poch(P, 2, 2).pow(2))
            }
            F1Line1 => (int(1) / poch(P, 1, 1)) * (int(1) / poch(P, 1, 2) - int(1) / poch(M, 1, 2)) / int(2),
            F1Bilateral => (theta_sum(2, 1, P, 0) - theta_sum(2, 1, M, 0)) / (int(2) * den_f01()),
            F1ProductPrinted => {
                qpow(1) * poch(P, 16, 16) * poch(P, 2, 16) * poch(P, 14, 16) / (poch(P, 1, 2) * poch(P, 2, 2).pow(2))
            }
            F1ProductSigned => {
                qpow(1) * poch(P, 16, 16) * poch(M, 2, 16) * poch(M, 14, 16) / (poch(P, 1, 2) * poch(P, 2, 2).pow(2))
            }
            H0MinusH1Product => poch(P, 2, 2) * poch(M, 1, 2).pow(2),
            H0MinusH1Theta => theta_sum(1, 0, P, 0),
            H2MinusH3Product => poch(P, 2, 2) * poch(P, 1, 2).pow(2),
            H2MinusH3Theta => theta_sum(1, 0, M, 0),
            GenH0 => (GenH.recipe() + H0MinusH1Product.recipe()) / int(2),
            GenH1 => (GenH.recipe() - H0MinusH1Product.recipe()) / int(2),
            GenH2 => (GenH.recipe() + H2MinusH3Product.recipe()) / int(2),
            GenH3 => (GenH.recipe() - H2MinusH3Product.recipe()) / int(2),
            GenF2MinusF3 => int(1) / (poch(M, 2, 2) * poch(P, 1, 2).pow(2)),
            GenF2PlusF3 => int(1) / den_f23(),
            GenF2 => (GenF2PlusF3.recipe() + GenF2MinusF3.recipe()) / int(2),
            GenF3 => (GenF2PlusF3.recipe() - GenF2MinusF3.recipe()) / int(2),
            F2Line2 => (int(1) + poch(P, 2, 2) / poch(M, 2, 2)) / (int(2) * den_f23()),
            F2Line3 => (int(1) + poch(P, 2, 2) * poch(P, 2, 4)) / (int(2) * den_f23()),
            F2Line4 => (int(1) + poch(P, 4, 4) * poch(P, 2, 4) * poch(P, 2, 4)) / (int(2) * den_f23()),
            F2Line5 => (int(1) + theta_sum(2, 0, M, 0)) / (int(2) * den_f23()),
            F2Line6 => sum(0, |n| 2 * n * n, |n| int(alt(n)) * qpow(2 * n * n)) / den_f23(),
            F2Line7 => sum(0, |n| 8 * n * n, |n| qpow(8 * n * n) * one_minus_q(8 * n + 2)) / den_f23(),
            F2Line8 => {
                sum(0, |n| 8 * n * n, |n| qpow(8 * n * n) * one_minus_q(8 * n + 2) / poch(P, 2, 4)) / den_f23_split()
            }
            F2SumForm => {
                let term =
                    |n: u64| qpow(progression_4k2(2 * n)) / (finite_poch(P, 2, 4, 2 * n) * poch(P, 8 * n + 6, 4));
                sum(0, |n| progression_4k2(2 * n), term) / den_f23_split()
            }
            F3Line1 => (int(1) / den_f23() - int(1) / (poch(M, 2, 2) * poch(P, 1, 2).pow(2))) / int(2),
            F3Line2Printed => sum(1, |n| 2 * n * n, |n| int(alt(n)) * qpow(2 * n * n)) / den_f23(),
            F3Line3Printed => {
                sum(0, |n| 2 * (n + 1) * (n + 1), |n| int(-alt(n)) * qpow(2 * (n + 1) * (n + 1))) / den_f23()
            }
            F3Line4 => {
                sum(0, |n| 8 * n * n + 8 * n + 2, |n| qpow(8 * n * n + 8 * n + 2) * one_minus_q(8 * n + 6)) / den_f23()
            }
            F3SumForm => {
                let term = |n: u64| {
                    qpow(progression_4k2(2 * n + 1)) / (finite_poch(P, 2, 4, 2 * n + 1) * poch(P, 8 * n + 10, 4))
                };
                sum(0, |n| progression_4k2(2 * n + 1), term) / den_f23_split()
            }
            FGpt => {
                let even = |n: u64| qpow(2 * n) / (finite_poch(P, 2, 2, n) * finite_poch(P, 1, 2, n).pow(2));
                let odd_blue =
                    |n: u64| qpow(2 * n + 1) / (finite_poch(P, 2, 2, n) * finite_poch(P, 1, 2, n + 1).pow(2));
                let odd_red = |n: u64| {
                    qpow(2 * n + 1) / (finite_poch(P, 2, 2, n) * finite_poch(P, 1, 2, n + 1) * finite_poch(P, 1, 2, n))
                };
                sum(0, |n| 2 * n, even) + sum(0, |n| 2 * n + 1, odd_blue) + sum(0, |n| 2 * n + 1, odd_red)
            }
            FSpt => {
                let even =
                    |n: u64| qpow(2 * n + 2) / (poch(P, 2 * n + 2, 2) * poch(P, 2 * n + 3, 2) * poch(P, 2 * n + 3, 2));
                let odd_blue =
                    |n: u64| qpow(2 * n + 1) / (poch(P, 2 * n + 2, 2) * poch(P, 2 * n + 1, 2) * poch(P, 2 * n + 3, 2));
                let odd_red =
                    |n: u64| qpow(2 * n + 1) / (poch(P, 2 * n + 2, 2) * poch(P, 2 * n + 1, 2) * poch(P, 2 * n + 1, 2));
                sum(0, |n| 2 * n + 2, even) + sum(0, |n| 2 * n + 1, odd_blue) + sum(0, |n| 2 * n + 1, odd_red)
            }
            GenF2Line1 => {
                let term = |n: u64| {
                    let tail = int(1) + qpow(1) / one_minus_q(2 * n + 1) + qpow(1) / one_minus_q(2 * n + 1).pow(2);
                    qpow(2 * n) / (finite_poch(P, 2, 2, n) * finite_poch(P, 1, 2, n).pow(2)) * tail
                };
                sum(0, |n| 2 * n, term)
            }
            GenF2Line2 => {
                let term = |n: u64| {
                    let tail = qpow(1) + int(1) / one_minus_q(2 * n + 1) + int(1) / one_minus_q(2 * n + 1).pow(2);
                    qpow(2 * n + 1) / (poch(P, 2 * n + 2, 2) * poch(P, 2 * n + 3, 2).pow(2)) * tail
                };
                int(1) + sum(0, |n| 2 * n + 1, term)
            }
            HGptRhs => {
                let even = |n: u64| qpow(2 * n + 2) * finite_poch(M, 2, 2, n) * finite_poch(M, 1, 2, n + 1).pow(2);
                let odd_red = |n: u64| qpow(2 * n + 1) * finite_poch(M, 2, 2, n) * finite_poch(M, 1, 2, n).pow(2);
                let odd_blue = |n: u64| {
                    qpow(2 * n + 1) * finite_poch(M, 2, 2, n) * finite_poch(M, 1, 2, n + 1) * finite_poch(M, 1, 2, n)
                };
                int(1) + sum(0, |n| 2 * n + 2, even) + sum(0, |n| 2 * n + 1, odd_red) + sum(0, |n| 2 * n + 1, odd_blue)
            }
            HSptRhs => {
                let even =
                    |n: u64| qpow(2 * n + 2) * poch(M, 2 * n + 4, 2) * poch(M, 2 * n + 3, 2) * poch(M, 2 * n + 3, 2);
                let odd_red =
                    |n: u64| qpow(2 * n + 1) * poch(M, 2 * n + 2, 2) * poch(M, 2 * n + 1, 2) * poch(M, 2 * n + 3, 2);
                let odd_blue =
                    |n: u64| qpow(2 * n + 1) * poch(M, 2 * n + 2, 2) * poch(M, 2 * n + 3, 2) * poch(M, 2 * n + 3, 2);
                int(1) + sum(0, |n| 2 * n + 2, even) + sum(0, |n| 2 * n + 1, odd_red) + sum(0, |n| 2 * n + 1, odd_blue)
            }
            GenH2Line1 => {
                let term = |n: u64| {
                    let tail = qpow(1) + int(1) / one_plus_q(2 * n + 1) + int(1) / one_plus_q(2 * n + 1).pow(2);
                    qpow(2 * n + 1) * finite_poch(M, 2, 2, n) * finite_poch(M, 1, 2, n + 1).pow(2) * tail
                };
                sum(0, |n| 2 * n + 1, term)
            }
            GenH2Line2Printed => {
                let term = |n: u64| {
                    let tail = int(1)
                        + int(1) / one_plus_q(2 * n + 1)
                        + qpow(1) / (one_plus_q(2 * n + 1) * one_plus_q(2 * n + 1));
                    qpow(2 * n + 1) * poch(M, 2 * n + 1, 2) * poch(M, 2 * n + 2, 2) * poch(M, 2 * n + 3, 2) * tail
                };
                sum(0, |n| 2 * n + 1, term)
            }
            GenH2Line2Corrected => {
                let term = |n: u64| {
                    let tail = int(1)
                        + int(1) / one_plus_q(2 * n + 1)
                        + qpow(1) / (one_plus_q(2 * n + 1) * one_plus_q(2 * n + 2));
                    qpow(2 * n + 1) * poch(M, 2 * n + 1, 2) * poch(M, 2 * n + 2, 2) * poch(M, 2 * n + 3, 2) * tail
                };
                sum(0, |n| 2 * n + 1, term)
            }
            GenH2Line3 => poch(M, 2, 2) * poch(M, 1, 2).pow(2) - int(1),
        }
    }
}
