use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use super::{Clause, IdentityCheck, RedClass, Side, Variant};
use crate::combinat::{Counter, Family, MexSide};
use crate::qfactory::JtpSpec;
use crate::qfactory::SeriesName::{self, *};
use crate::series::Sign;

fn cat(n: SeriesName) -> Side {
    Side::Catalog(n)
}

fn dsl(n: SeriesName) -> Side {
    Side::Transcribed(n)
}

fn fam(f: Family) -> Side {
    Side::Oracle(Counter::Family(f))
}

fn pbar() -> Side {
    Side::Oracle(Counter::Overpartitions)
}

fn pbar_odd() -> Side {
    Side::Oracle(Counter::OddOverpartitions)
}

fn mex(side: MexSide) -> Side {
    Side::Oracle(Counter::Mex(side))
}

fn lin(terms: Vec<(i64, Side)>) -> Side {
    Side::Linear(terms)
}

fn twice(s: Side) -> Side {
    lin(vec![(2, s)])
}

fn plus_one(s: Side) -> Side {
    lin(vec![(1, Side::Const(1)), (1, s)])
}

fn minus_one(s: Side) -> Side {
    lin(vec![(1, s), (-1, Side::Const(1))])
}

fn dilate2(s: Side) -> Side {
    Side::Dilate(2, Box::new(s))
}

/// `p(n) + sign·p(n/2)` from a source of `p`.
fn with_half(s: Side, sign: i64) -> Side {
    lin(vec![(1, s.clone()), (sign, dilate2(s))])
}

fn squares(s: Side, coeff: i64, alternating: bool) -> Side {
    lin(vec![(1, s), (coeff, Side::Squares { alternating })])
}

fn jtp(qscale: i64, xexp: i64, xsign: Sign) -> [Side; 2] {
    let s = JtpSpec::new(qscale, xexp, xsign);
    [Side::JtpProduct(s), Side::JtpSum(s)]
}

fn clause(label: &'static str, sides: Vec<Side>) -> Clause {
    Clause { label, sides }
}

fn variant(name: &'static str, clauses: Vec<Clause>) -> Variant {
    Variant { name, clauses }
}

fn check(id: &'static str, description: &'static str, clauses: Vec<Clause>) -> IdentityCheck {
    IdentityCheck { id, description, start: 0, clauses, variants: Vec::new() }
}

fn disputed(
    id: &'static str,
    description: &'static str,
    clauses: Vec<Clause>,
    variants: Vec<Variant>,
) -> IdentityCheck {
    IdentityCheck { id, description, start: 0, clauses, variants }
}

/// `2·H_k(n) = p̄_o(n) + coeff·[n = j^2]·(±1)^j`, from `n = 1`.
fn h_weight(
    id: &'static str,
    description: &'static str,
    family: Family,
    series: SeriesName,
    coeff: i64,
    alternating: bool,
) -> IdentityCheck {
    IdentityCheck {
        id,
        description,
        start: 1,
        clauses: h_weight_clauses(family, series, coeff, alternating),
        variants: Vec::new(),
    }
}

fn h_weight_clauses(family: Family, series: SeriesName, coeff: i64, alternating: bool) -> Vec<Clause> {
    vec![
        clause("enumeration", vec![twice(fam(family)), squares(pbar_odd(), coeff, alternating)]),
        clause("series", vec![twice(cat(series)), squares(cat(OddOverpartitions), coeff, alternating)]),
    ]
}

const P: Sign = Sign::Plus;
const M: Sign = Sign::Minus;

pub fn catalog() -> Vec<IdentityCheck> {
    use Family::*;
    vec![
        check(
            "EQ_EULER",
            "Partitions into distinct parts and into odd parts are equinumerous.",
            vec![clause("series", vec![cat(EulerDistinct), cat(EulerOdd), dsl(EulerDistinct), dsl(EulerOdd)])],
        ),
        check(
            "EQ_GEN_F",
            "Generating function of F(n), with its first printed coefficients.",
            vec![
                clause("enumeration", vec![fam(F), cat(GenF), dsl(GenF)]),
                clause("printed", vec![cat(GenF), Side::Printed(&[1, 2, 4, 8, 14, 24])]),
                clause("euler form", vec![cat(GenF), cat(GenFEulerForm)]),
            ],
        ),
        check(
            "EQ_F_ID",
            "F(n) equals the number of overpartitions of n.",
            vec![
                clause("enumeration", vec![fam(F), pbar(), cat(Overpartitions)]),
                clause("series", vec![cat(GenF), cat(GenFEulerForm), cat(Overpartitions), dsl(Overpartitions)]),
            ],
        ),
        check(
            "EQ_GEN_H",
            "Generating function of H(n), with its first printed coefficients.",
            vec![
                clause("enumeration", vec![fam(H), cat(GenH), dsl(GenH)]),
                clause("printed", vec![cat(GenH), Side::Printed(&[1, 2, 2, 4, 6, 8])]),
            ],
        ),
        check(
            "EQ_H_ID",
            "H(n) equals the number of overpartitions of n into odd parts.",
            vec![
                clause("enumeration", vec![fam(H), pbar_odd(), cat(OddOverpartitions)]),
                clause("series", vec![cat(GenH), cat(OddOverpartitions), dsl(OddOverpartitions)]),
            ],
        ),
        check(
            "THM_F01_ID",
            "2 F0(n) = p̄(n) + p̄(n/2) and 2 F1(n) = p̄(n) - p̄(n/2), with p̄ of a non-integer taken as 0.",
            vec![
                clause("F0 enumeration", vec![twice(fam(F0)), with_half(pbar(), 1)]),
                clause("F1 enumeration", vec![twice(fam(F1)), with_half(pbar(), -1)]),
                clause("F0 series", vec![twice(cat(GenF0Halves)), with_half(cat(Overpartitions), 1)]),
                clause("F1 series", vec![twice(cat(GenF1Halves)), with_half(cat(Overpartitions), -1)]),
            ],
        ),
        check(
            "EQ_G0_G1",
            "F0 - F1 is the overpartition series in q^2.",
            vec![
                clause("enumeration", vec![lin(vec![(1, fam(F0)), (-1, fam(F1))]), dilate2(pbar())]),
                clause(
                    "series",
                    vec![
                        cat(GenF0MinusF1),
                        cat(F0MinusF1Short),
                        cat(G0G1EulerForm),
                        cat(G0G1Dilated),
                        dilate2(cat(Overpartitions)),
                        dsl(G0G1Dilated),
                    ],
                ),
            ],
        ),
        check(
            "EQ_F0_MINUS_F1",
            "Product forms of F0 - F1.",
            vec![
                clause(
                    "enumeration",
                    vec![lin(vec![(1, fam(F0)), (-1, fam(F1))]), cat(GenF0MinusF1), cat(F0MinusF1Short)],
                ),
                clause(
                    "series",
                    vec![cat(GenF0MinusF1), cat(F0MinusF1Short), dsl(GenF0MinusF1), dsl(F0MinusF1Short)],
                ),
            ],
        ),
        check(
            "EQ_F0_PLUS_F1",
            "Product forms of F0 + F1.",
            vec![
                clause(
                    "enumeration",
                    vec![lin(vec![(1, fam(F0)), (1, fam(F1))]), cat(GenF0PlusF1), cat(F0PlusF1Expanded)],
                ),
                clause(
                    "series",
                    vec![cat(GenF0PlusF1), cat(F0PlusF1Expanded), cat(GenF), dsl(GenF0PlusF1), dsl(F0PlusF1Expanded)],
                ),
            ],
        ),
        disputed(
            "THM_F0_PRODUCT",
            "F0 as a theta quotient and as an infinite product; the product numerator is tested with and without signs.",
            vec![
                clause("enumeration", vec![fam(F0), cat(GenF0)]),
                clause("series", vec![cat(GenF0), cat(GenF0Halves), dsl(GenF0)]),
            ],
            vec![
                variant(
                    "(q^16,q^6,q^10;q^16) as printed",
                    vec![
                        clause("enumeration", vec![fam(F0), cat(F0ProductPrinted)]),
                        clause("series", vec![cat(GenF0), cat(F0Hlp2Printed), cat(F0ProductPrinted)]),
                    ],
                ),
                variant(
                    "(q^16,-q^6,-q^10;q^16)",
                    vec![
                        clause("enumeration", vec![fam(F0), cat(F0ProductSigned)]),
                        clause("series", vec![cat(GenF0), cat(F0Hlp2Signed), cat(F0ProductSigned)]),
                    ],
                ),
            ],
        ),
        disputed(
            "THM_F1_PRODUCT",
            "F1 as a theta quotient and as an infinite product; the product numerator is tested with and without signs.",
            vec![
                clause("enumeration", vec![fam(F1), cat(GenF1)]),
                clause("series", vec![cat(GenF1), cat(GenF1Halves), dsl(GenF1)]),
            ],
            vec![
                variant(
                    "q(q^16,q^2,q^14;q^16) as printed",
                    vec![
                        clause("enumeration", vec![fam(F1), cat(F1ProductPrinted)]),
                        clause("series", vec![cat(GenF1), cat(F1ProductPrinted)]),
                    ],
                ),
                variant(
                    "q(q^16,-q^2,-q^14;q^16)",
                    vec![
                        clause("enumeration", vec![fam(F1), cat(F1ProductSigned)]),
                        clause("series", vec![cat(GenF1), cat(F1ProductSigned)]),
                    ],
                ),
            ],
        ),
        disputed(
            "COR_F0",
            "F0(n) against two-color partitions of n whose red parts avoid 0, 6, 10 (mod 16).",
            vec![],
            vec![
                variant(
                    "red parts even, not 0, 6, 10 mod 16",
                    vec![clause("enumeration", vec![fam(F0), Side::Restricted(RedClass::EvenAvoiding0610)])],
                ),
                variant(
                    "red parts not 0, 6, 10 mod 16",
                    vec![clause("enumeration", vec![fam(F0), Side::Restricted(RedClass::Avoiding0610)])],
                ),
            ],
        ),
        disputed(
            "COR_F1",
            "F1(n) against two-color partitions of n - 1 whose red parts avoid 0, 2, 14 (mod 16).",
            vec![],
            vec![
                variant(
                    "red parts even, not 0, 2, 14 mod 16",
                    vec![clause(
                        "enumeration",
                        vec![fam(F1), Side::Shift(1, Box::new(Side::Restricted(RedClass::EvenAvoiding0214)))],
                    )],
                ),
                variant(
                    "red parts not 0, 2, 14 mod 16",
                    vec![clause(
                        "enumeration",
                        vec![fam(F1), Side::Shift(1, Box::new(Side::Restricted(RedClass::Avoiding0214)))],
                    )],
                ),
            ],
        ),
        check(
            "JTP_SPOT",
            "Triple product specializations behind the F0, F1, F2 and F3 forms.",
            vec![
                clause("q^4, x=q^-1", jtp(4, -1, P).into()),
                clause("q^16, x=q^-6", jtp(16, -6, P).into()),
                clause("q^16, x=q^-2", jtp(16, -2, P).into()),
                clause("q^4, x=-q^-2", jtp(4, -2, M).into()),
            ],
        ),
        disputed(
            "JTP_H_WT",
            "Triple product with q^2 behind H0 - H1 and H2 - H3; the sign of x for H0 - H1 is tested both ways.",
            vec![clause(
                "H2 - H3, x=-q^-1",
                vec![
                    cat(H2MinusH3Product),
                    Side::JtpProduct(JtpSpec::new(2, -1, M)),
                    Side::JtpSum(JtpSpec::new(2, -1, M)),
                    cat(H2MinusH3Theta),
                ],
            )],
            vec![
                variant(
                    "H0 - H1 with x=-q^-1 as printed",
                    vec![clause("H0 - H1", vec![cat(H0MinusH1Product), Side::JtpProduct(JtpSpec::new(2, -1, M))])],
                ),
                variant(
                    "H0 - H1 with x=q^-1",
                    vec![clause(
                        "H0 - H1",
                        vec![
                            cat(H0MinusH1Product),
                            Side::JtpProduct(JtpSpec::new(2, -1, P)),
                            Side::JtpSum(JtpSpec::new(2, -1, P)),
                            cat(H0MinusH1Theta),
                        ],
                    )],
                ),
            ],
        ),
        check(
            "EQ_H0_MINUS_H1",
            "H0 - H1 as a product and as 1 + 2 sum q^(n^2).",
            vec![
                clause(
                    "enumeration",
                    vec![lin(vec![(1, fam(H0)), (-1, fam(H1))]), cat(H0MinusH1Product), cat(H0MinusH1Theta)],
                ),
                clause(
                    "series",
                    vec![cat(H0MinusH1Product), cat(H0MinusH1Theta), dsl(H0MinusH1Product), dsl(H0MinusH1Theta)],
                ),
            ],
        ),
        check(
            "EQ_H2_MINUS_H3",
            "H2 - H3 as a product and as 1 + 2 sum (-1)^n q^(n^2).",
            vec![
                clause(
                    "enumeration",
                    vec![lin(vec![(1, fam(H2)), (-1, fam(H3))]), cat(H2MinusH3Product), cat(H2MinusH3Theta)],
                ),
                clause(
                    "series",
                    vec![cat(H2MinusH3Product), cat(H2MinusH3Theta), dsl(H2MinusH3Product), dsl(H2MinusH3Theta)],
                ),
            ],
        ),
        h_weight(
            "THM_H_WT_A",
            "H0(n) = p̄_o(n)/2 + 1 when n is a square and p̄_o(n)/2 otherwise, for n >= 1.",
            H0,
            GenH0,
            2,
            false,
        ),
        h_weight(
            "THM_H_WT_B",
            "H1(n) = p̄_o(n)/2 - 1 when n is a square and p̄_o(n)/2 otherwise, for n >= 1.",
            H1,
            GenH1,
            -2,
            false,
        ),
        h_weight(
            "THM_H_WT_C",
            "H2(n) = p̄_o(n)/2 + (-1)^n when n is a square and p̄_o(n)/2 otherwise, for n >= 1.",
            H2,
            GenH2,
            2,
            true,
        ),
        IdentityCheck {
            id: "THM_H_WT_D",
            description: "H3(n) = p̄_o(n)/2 minus a unit when n is a square and p̄_o(n)/2 otherwise, for n >= 1; \
                          the unit is tested as printed, -(1)^n, and as -(-1)^n.",
            start: 1,
            clauses: vec![],
            variants: vec![
                variant("-(1)^n as printed", h_weight_clauses(H3, GenH3, -2, false)),
                variant("-(-1)^n", h_weight_clauses(H3, GenH3, -2, true)),
            ],
        },
        check(
            "EQ_F2_MINUS_F3",
            "Product form of F2 - F3.",
            vec![clause(
                "enumeration",
                vec![lin(vec![(1, fam(F2)), (-1, fam(F3))]), cat(GenF2MinusF3), dsl(GenF2MinusF3)],
            )],
        ),
        check(
            "EQ_F2_PLUS_F3",
            "Product form of F2 + F3.",
            vec![clause(
                "enumeration",
                vec![lin(vec![(1, fam(F2)), (1, fam(F3))]), cat(GenF2PlusF3), dsl(GenF2PlusF3), cat(GenF)],
            )],
        ),
        check(
            "THM_F2_MEX",
            "F2(n) equals the number of partitions in F(n) whose mex over 2 (mod 4) is 2 (mod 8).",
            vec![clause("enumeration", vec![fam(F2), mex(MexSide::Plain), cat(GenF2)])],
        ),
        check(
            "THM_F3_MEX",
            "F3(n) equals the number of partitions in F(n) whose mex over 2 (mod 4) is 6 (mod 8).",
            vec![clause("enumeration", vec![fam(F3), mex(MexSide::Bar), cat(GenF3)])],
        ),
        check(
            "THM_F2_SUMFORM",
            "F2 as a sum over n of q^(2+6+...+(8n-2)) divided by all 1-q^(4j+2) with j != 2n.",
            vec![
                clause("series", vec![cat(GenF2), cat(F2SumForm), dsl(F2SumForm)]),
                clause("enumeration", vec![fam(F2), cat(F2SumForm)]),
            ],
        ),
        check(
            "THM_F3_SUMFORM",
            "F3 as a sum over n of q^(2+6+...+(8n+2)) divided by all 1-q^(4j+2) with j != 2n+1.",
            vec![
                clause("series", vec![cat(GenF3), cat(F3SumForm), dsl(F3SumForm)]),
                clause("enumeration", vec![fam(F3), cat(F3SumForm)]),
            ],
        ),
        check(
            "EQ_F0_DERIVATION",
            "Each step from the half sum of the F0 +- F1 products to the theta quotient for F0.",
            vec![clause(
                "lines",
                vec![cat(GenF0Halves), cat(F0Line1), cat(F0Line2), cat(F0Line3), cat(F0Bilateral), cat(GenF0)],
            )],
        ),
        check(
            "EQ_F1_DERIVATION",
            "Each step from the half difference of the F0 +- F1 products to the theta quotient for F1.",
            vec![clause("lines", vec![cat(GenF1Halves), cat(F1Line1), cat(F1Bilateral), cat(GenF1)])],
        ),
        check(
            "EQ_F2_DERIVATION",
            "Each step from the half sum of the F2 +- F3 products to the F2 sum form.",
            vec![clause(
                "lines",
                vec![
                    cat(GenF2),
                    cat(F2Line2),
                    cat(F2Line3),
                    cat(F2Line4),
                    cat(F2Line5),
                    cat(F2Line6),
                    cat(F2Line7),
                    cat(F2Line8),
                    cat(F2SumForm),
                ],
            )],
        ),
        disputed(
            "EQ_F3_DERIVATION",
            "Each step from the half difference of the F2 +- F3 products to the F3 sum form; \
             the two theta-tail lines are tested with their printed sign and negated.",
            vec![clause("lines", vec![cat(GenF3), cat(F3Line1), cat(F3Line4), cat(F3SumForm)])],
            vec![
                variant("tail lines as printed", vec![clause("tail", vec![cat(GenF3), cat(F3Line2Printed), cat(F3Line3Printed)])]),
                variant(
                    "tail lines negated",
                    vec![clause(
                        "tail",
                        vec![cat(GenF3), lin(vec![(-1, cat(F3Line2Printed))]), lin(vec![(-1, cat(F3Line3Printed))])],
                    )],
                ),
            ],
        ),
        check(
            "EQ_F_GPT",
            "F split by its greatest part: even, odd blue, odd red.",
            vec![
                clause("series", vec![cat(GenF), dsl(FGpt), cat(FGpt)]),
                clause("enumeration", vec![fam(F), cat(FGpt)]),
            ],
        ),
        check(
            "EQ_F_SPT",
            "F split by its smallest part, plus 1 for the empty partition.",
            vec![
                clause("series", vec![cat(GenF), plus_one(dsl(FSpt)), plus_one(cat(FSpt))]),
                clause("enumeration", vec![fam(F), plus_one(cat(FSpt))]),
            ],
        ),
        disputed(
            "EQ_F_SPT_AS_PRINTED",
            "The smallest-part split of F tested with and without a term for the empty partition.",
            vec![],
            vec![
                variant("without the empty partition, as printed", vec![clause("series", vec![cat(GenF), dsl(FSpt)])]),
                variant("with 1 for the empty partition", vec![clause("series", vec![cat(GenF), plus_one(dsl(FSpt))])]),
            ],
        ),
        check(
            "EQ_GEN_F2",
            "Greatest-part sum, smallest-part sum and product form of F agree.",
            vec![
                clause("dsl", vec![dsl(GenF2Line1), dsl(GenF2Line2), dsl(GenF2PlusF3)]),
                clause("catalog", vec![cat(GenF), cat(GenF2Line1), cat(GenF2Line2)]),
            ],
        ),
        check(
            "EQ_H_GPT",
            "H split by its greatest part, summed over all n >= 0.",
            vec![
                clause("series", vec![cat(GenH), dsl(HGptRhs), cat(HGptRhs)]),
                clause("enumeration", vec![fam(H), cat(HGptRhs)]),
            ],
        ),
        disputed(
            "EQ_H_GPT_AS_PRINTED",
            "The greatest-part split of H tested against sums of H(n) from n = 1 and from n = 0.",
            vec![],
            vec![
                variant("sum from n = 1, as printed", vec![clause("series", vec![minus_one(cat(GenH)), dsl(HGptRhs)])]),
                variant("sum from n = 0", vec![clause("series", vec![cat(GenH), dsl(HGptRhs)])]),
            ],
        ),
        check(
            "EQ_H_SPT",
            "H split by its smallest part, summed over all n >= 0.",
            vec![
                clause("series", vec![cat(GenH), dsl(HSptRhs), cat(HSptRhs)]),
                clause("enumeration", vec![fam(H), cat(HSptRhs)]),
            ],
        ),
        disputed(
            "EQ_H_SPT_AS_PRINTED",
            "The smallest-part split of H tested against sums of H(n) from n = 1 and from n = 0.",
            vec![],
            vec![
                variant("sum from n = 1, as printed", vec![clause("series", vec![minus_one(cat(GenH)), dsl(HSptRhs)])]),
                variant("sum from n = 0", vec![clause("series", vec![cat(GenH), dsl(HSptRhs)])]),
            ],
        ),
        check(
            "EQ_GEN_H2",
            "Greatest-part sum, smallest-part sum and product form of H - 1 agree.",
            vec![
                clause("dsl", vec![dsl(GenH2Line1), dsl(GenH2Line2Corrected), dsl(GenH2Line3)]),
                clause("catalog", vec![minus_one(cat(GenH)), cat(GenH2Line1), cat(GenH2Line2Corrected), cat(GenH2Line3)]),
            ],
        ),
        disputed(
            "EQ_GEN_H2_AS_PRINTED",
            "The smallest-part sum for H - 1 with its last denominator (1+q^(2n+1))(1+q^(2n+1)) as printed \
             and (1+q^(2n+1))(1+q^(2n+2)).",
            vec![],
            vec![
                variant(
                    "(1+q^(2n+1))(1+q^(2n+1)) as printed",
                    vec![clause("series", vec![dsl(GenH2Line3), dsl(GenH2Line2Printed)])],
                ),
                variant(
                    "(1+q^(2n+1))(1+q^(2n+2))",
                    vec![clause("series", vec![dsl(GenH2Line3), dsl(GenH2Line2Corrected)])],
                ),
            ],
        ),
    ]
}

pub fn find(id: &str) -> Option<IdentityCheck> {
    catalog().into_iter().find(|c| c.id == id)
}
