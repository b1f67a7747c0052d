//! Every catalog series typed out in the DSL, written as the formula is
//! usually displayed rather than as the catalog builds it.

use crate::qfactory::SeriesName;

pub fn transcription(name: SeriesName) -> &'static str {
    use SeriesName::*;
    match name {
        GenF => "1/((q;q^2)_inf^2*(q^2;q^2)_inf)",
        GenFEulerForm => "(-q;q)_inf/((q;q^2)_inf*(q^2;q^2)_inf)",
        Overpartitions => "(-q;q)_inf/(q;q)_inf",
        EulerDistinct => "(-q;q)_inf",
        EulerOdd => "1/(q;q^2)_inf",
        GenH => "(-q;q^2)_inf^2*(-q^2;q^2)_inf",
        OddOverpartitions => "(-q;q^2)_inf/(q;q^2)_inf",
        GenF0MinusF1 => "1/((-q;q^2)_inf*(q;q^2)_inf*(q^2;q^2)_inf)",
        F0MinusF1Short => "1/((-q;q^2)_inf*(q;q)_inf)",
        G0G1EulerForm => "(-q;q)_inf/((-q;q^2)_inf*(q^2;q^2)_inf)",
        G0G1Dilated => "(-q^2;q^2)_inf/(q^2;q^2)_inf",
        GenF0PlusF1 => "1/((q;q^2)_inf*(q;q)_inf)",
        F0PlusF1Expanded => "1/((q;q^2)_inf*(q;q^2)_inf*(q^2;q^2)_inf)",
        GenF0 => "sum(n=-inf..inf, q^(8*n*n+2*n))/((q;q)_inf*(q^2;q^2)_inf)",
        GenF1 => "sum(n=-inf..inf, q^(8*n*n+6*n+1))/((q;q)_inf*(q^2;q^2)_inf)",
        GenF0Halves => "(1/((q;q^2)_inf*(q;q)_inf) + 1/((-q;q^2)_inf*(q;q)_inf))/2",
        GenF1Halves => "(1/((q;q^2)_inf*(q;q)_inf) - 1/((-q;q^2)_inf*(q;q)_inf))/2",
        F0Line1 => "1/(q;q)_inf*(1/(q;q^2)_inf + 1/(-q;q^2)_inf)/2",
        F0Line2 => "((-q;q^2)_inf + (q;q^2)_inf)/(2*(q;q)_inf*(q^2;q^4)_inf)",
        F0Line3 => "((-q,-q^3,q^4;q^4)_inf + (q,q^3,q^4;q^4)_inf)/(2*(q;q)_inf*(q^2;q^2)_inf)",
        F0Bilateral => "sum(n=-inf..inf, q^(2*n*n+n)*(1 + (-1)^n))/(2*(q;q)_inf*(q^2;q^2)_inf)",
        F0Hlp2Printed => "(q^16,q^6,q^10;q^16)_inf/((q;q)_inf*(q^2;q^2)_inf)",
        F0Hlp2Signed => "(q^16,-q^6,-q^10;q^16)_inf/((q;q)_inf*(q^2;q^2)_inf)",
        F0ProductPrinted => "(q^16,q^6,q^10;q^16)_inf/((q;q^2)_inf*(q^2;q^2)_inf^2)",
        F0ProductSigned => "(q^16,-q^6,-q^10;q^16)_inf/((q;q^2)_inf*(q^2;q^2)_inf^2)",
        F1Line1 => "1/(q;q)_inf*(1/(q;q^2)_inf - 1/(-q;q^2)_inf)/2",
        F1Bilateral => "sum(n=-inf..inf, q^(2*n*n+n)*(1 - (-1)^n))/(2*(q;q)_inf*(q^2;q^2)_inf)",
        F1ProductPrinted => "q*(q^16,q^2,q^14;q^16)_inf/((q;q^2)_inf*(q^2;q^2)_inf^2)",
        F1ProductSigned => "q*(q^16,-q^2,-q^14;q^16)_inf/((q;q^2)_inf*(q^2;q^2)_inf^2)",
        H0MinusH1Product => "(q^2;q^2)_inf*(-q;q^2)_inf^2",
        H0MinusH1Theta => "1 + 2*sum(n=1..inf, q^(n*n))",
        H2MinusH3Product => "(q^2;q^2)_inf*(q;q^2)_inf^2",
        H2MinusH3Theta => "1 + 2*sum(n=1..inf, (-1)^n*q^(n*n))",
        GenH0 => "((-q;q^2)_inf^2*(-q^2;q^2)_inf + (q^2;q^2)_inf*(-q;q^2)_inf^2)/2",
        GenH1 => "((-q;q^2)_inf^2*(-q^2;q^2)_inf - (q^2;q^2)_inf*(-q;q^2)_inf^2)/2",
        GenH2 => "((-q;q^2)_inf^2*(-q^2;q^2)_inf + (q^2;q^2)_inf*(q;q^2)_inf^2)/2",
        GenH3 => "((-q;q^2)_inf^2*(-q^2;q^2)_inf - (q^2;q^2)_inf*(q;q^2)_inf^2)/2",
        GenF2MinusF3 => "1/((-q^2;q^2)_inf*(q;q^2)_inf^2)",
        GenF2PlusF3 => "1/((q^2;q^2)_inf*(q;q^2)_inf^2)",
        GenF2 => "(1/((q^2;q^2)_inf*(q;q^2)_inf^2) + 1/((-q^2;q^2)_inf*(q;q^2)_inf^2))/2",
        GenF3 => "(1/((q^2;q^2)_inf*(q;q^2)_inf^2) - 1/((-q^2;q^2)_inf*(q;q^2)_inf^2))/2",
        F2Line2 => "(1 + (q^2;q^2)_inf/(-q^2;q^2)_inf)/(2*(q^2;q^2)_inf*(q;q^2)_inf^2)",
        F2Line3 => "(1 + (q^2;q^2)_inf*(q^2;q^4)_inf)/(2*(q^2;q^2)_inf*(q;q^2)_inf^2)",
        F2Line4 => "(1 + (q^4,q^2,q^2;q^4)_inf)/(2*(q^2;q^2)_inf*(q;q^2)_inf^2)",
        F2Line5 => "(1 + sum(n=-inf..inf, (-1)^n*q^(2*n*n)))/(2*(q^2;q^2)_inf*(q;q^2)_inf^2)",
        F2Line6 => "sum(n=0..inf, (-1)^n*q^(2*n*n))/((q^2;q^2)_inf*(q;q^2)_inf^2)",
        F2Line7 => "sum(n=0..inf, q^(8*n*n)*(1 - q^(8*n+2)))/((q^2;q^2)_inf*(q;q^2)_inf^2)",
        F2Line8 => "sum(n=0..inf, q^(8*n*n)*(1 - q^(8*n+2))/(q^2;q^4)_inf)/((q^4;q^4)_inf*(q;q^2)_inf^2)",
        F2SumForm => {
            "sum(n=0..inf, prod(k=0..2*n-1, q^(4*k+2))\
             /(prod(j=0..2*n-1, 1 - q^(4*j+2))*prod(j=2*n+1..inf, 1 - q^(4*j+2))))\
             /((q^4;q^4)_inf*(q;q^2)_inf^2)"
        }
        F3Line1 => "(1/((q^2;q^2)_inf*(q;q^2)_inf^2) - 1/((-q^2;q^2)_inf*(q;q^2)_inf^2))/2",
        F3Line2Printed => "sum(n=1..inf, (-1)^n*q^(2*n*n))/((q^2;q^2)_inf*(q;q^2)_inf^2)",
        F3Line3Printed => "sum(n=0..inf, (-1)^(n+1)*q^(2*(n+1)*(n+1)))/((q^2;q^2)_inf*(q;q^2)_inf^2)",
        F3Line4 => "sum(n=0..inf, q^(8*n*n+8*n+2)*(1 - q^(8*n+6)))/((q^2;q^2)_inf*(q;q^2)_inf^2)",
        F3SumForm => {
            "sum(n=0..inf, prod(k=0..2*n, q^(4*k+2))\
             /(prod(j=0..2*n, 1 - q^(4*j+2))*prod(j=2*n+2..inf, 1 - q^(4*j+2))))\
             /((q^4;q^4)_inf*(q;q^2)_inf^2)"
        }
        FGpt => {
            "sum(n=0..inf, q^(2*n)/((q^2;q^2)_n*(q;q^2)_n^2)) \
             + sum(n=0..inf, q^(2*n+1)/((q^2;q^2)_n*(q;q^2)_(n+1)^2)) \
             + sum(n=0..inf, q^(2*n+1)/((q^2;q^2)_n*(q;q^2)_(n+1)*(q;q^2)_n))"
        }
        FSpt => {
            "sum(n=0..inf, q^(2*n+2)/(q^(2*n+2),q^(2*n+3),q^(2*n+3);q^2)_inf) \
             + sum(n=0..inf, q^(2*n+1)/(q^(2*n+2),q^(2*n+1),q^(2*n+3);q^2)_inf) \
             + sum(n=0..inf, q^(2*n+1)/(q^(2*n+2),q^(2*n+1),q^(2*n+1);q^2)_inf)"
        }
        GenF2Line1 => {
            "sum(n=0..inf, q^(2*n)/((q^2;q^2)_n*(q;q^2)_n^2)\
             *(1 + q/(1 - q^(2*n+1)) + q/(1 - q^(2*n+1))^2))"
        }
        GenF2Line2 => {
            "1 + sum(n=0..inf, q^(2*n+1)/((q^(2*n+2);q^2)_inf*(q^(2*n+3);q^2)_inf^2)\
             *(q + 1/(1 - q^(2*n+1)) + 1/(1 - q^(2*n+1))^2))"
        }
        HGptRhs => {
            "1 + sum(n=0..inf, q^(2*n+2)*(-q^2;q^2)_n*(-q;q^2)_(n+1)^2) \
             + sum(n=0..inf, q^(2*n+1)*(-q^2;q^2)_n*(-q;q^2)_n^2) \
             + sum(n=0..inf, q^(2*n+1)*(-q^2;q^2)_n*(-q;q^2)_(n+1)*(-q;q^2)_n)"
        }
        HSptRhs => {
            "1 + sum(n=0..inf, q^(2*n+2)*(-q^(2*n+4),-q^(2*n+3),-q^(2*n+3);q^2)_inf) \
             + sum(n=0..inf, q^(2*n+1)*(-q^(2*n+2),-q^(2*n+1),-q^(2*n+3);q^2)_inf) \
             + sum(n=0..inf, q^(2*n+1)*(-q^(2*n+2),-q^(2*n+3),-q^(2*n+3);q^2)_inf)"
        }
        GenH2Line1 => {
            "sum(n=0..inf, q^(2*n+1)*(-q^2;q^2)_n*(-q;q^2)_(n+1)^2\
             *(q + 1/(1 + q^(2*n+1)) + 1/(1 + q^(2*n+1))^2))"
        }
        GenH2Line2Printed => {
            "sum(n=0..inf, q^(2*n+1)*(-q^(2*n+1),-q^(2*n+2),-q^(2*n+3);q^2)_inf\
             *(1 + 1/(1 + q^(2*n+1)) + q/((1 + q^(2*n+1))*(1 + q^(2*n+1)))))"
        }
        GenH2Line2Corrected => {
            "sum(n=0..inf, q^(2*n+1)*(-q^(2*n+1),-q^(2*n+2),-q^(2*n+3);q^2)_inf\
             *(1 + 1/(1 + q^(2*n+1)) + q/((1 + q^(2*n+1))*(1 + q^(2*n+2)))))"
        }
        GenH2Line3 => "(-q^2;q^2)_inf*(-q;q^2)_inf^2 - 1",
    }
}
