//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use qpart_core::audit::{run_check, AuditConfig, AuditReport, ClauseResult, Status};
use qpart_core::combinat::{count_family, count_mex_class, Counter, Family, MexSide, MexSpec};
use qpart_core::qdsl::{evaluate, expand, parse, transcription};
use qpart_core::qfactory::{named_series, JtpSpec, SeriesName};
use qpart_core::series::{Series, Sign};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

fn coeffs(s: &Series) -> Vec<BigInt> {
    s.coeffs().to_vec()
}

fn series(name: SeriesName, order: usize) -> Result<Series, String> {
    named_series(name, order).map_err(|e| e.to_string())
}

fn check(id: &str, order: usize, enum_bound: usize) -> Result<AuditReport, String> {
    run_check(id, Some(order), &AuditConfig { enum_bound }).map_err(|e| e.to_string())
}

fn require_verified(r: &AuditReport) -> Result<(), String> {
    ensure(r.status == Status::Verified, || format!("{}: {:?}", r.id, r.status))
}

/// A variant report with exactly one verified variant and every other
/// variant diverging at a concrete index.
fn require_resolved(r: &AuditReport) -> Result<String, String> {
    let Status::VariantResolved { verified } = &r.status else {
        return Err(format!("{}: {:?}", r.id, r.status));
    };
    ensure(verified.len() == 1, || format!("{}: verified {verified:?}", r.id))?;
    let mut rest = Vec::new();
    for v in &r.variants {
        match &v.result {
            ClauseResult::Verified => {}
            ClauseResult::Diverges(d) => rest.push(format!("\"{}\" diverges at {}", v.name, d.index)),
            ClauseResult::Failed(m) => return Err(format!("{}: variant {} failed: {m}", r.id, v.name)),
        }
    }
    Ok(format!("{}: \"{}\" verified, {}", r.id, verified[0], rest.join(", ")))
}

/// Ordinary partitions into parts allowed by `allowed`, exactly.
fn restricted_partitions(n: usize, allowed: impl Fn(usize) -> bool) -> Vec<BigInt> {
    let mut t = vec![BigInt::from(0); n + 1];
    t[0] = big(1);
    for part in (1..=n).filter(|&p| allowed(p)) {
        for w in part..=n {
            let add = t[w - part].clone();
            t[w] += add;
        }
    }
    t
}

/// Partitions into distinct parts allowed by `allowed`.
fn distinct_partitions(n: usize, allowed: impl Fn(usize) -> bool) -> Vec<BigInt> {
    let mut t = vec![BigInt::from(0); n + 1];
    t[0] = big(1);
    for part in (1..=n).filter(|&p| allowed(p)) {
        for w in (part..=n).rev() {
            let add = t[w - part].clone();
            t[w] += add;
        }
    }
    t
}

fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    (0..a.len()).map(|n| (0..=n).map(|k| &a[k] * &b[n - k]).sum()).collect()
}

/// Overpartition counts: distinct parts times ordinary parts.
fn overpartitions(n: usize, allowed: impl Fn(usize) -> bool + Copy) -> Vec<BigInt> {
    convolve(&distinct_partitions(n, allowed), &restricted_partitions(n, allowed))
}

fn printed_coefficients() -> Outcome {
    let start = Instant::now();
    let f = [1, 2, 4, 8, 14, 24].map(big).to_vec();
    let h = [1, 2, 2, 4, 6, 8].map(big).to_vec();
    for (name, want) in [(SeriesName::GenF, &f), (SeriesName::GenH, &h)] {
        let cat = coeffs(&series(name, 5)?);
        let dsl = coeffs(&expand(transcription(name), 5).map_err(|e| e.to_string())?);
        ensure(&cat == want && &dsl == want, || format!("{}: {cat:?} / {dsl:?}", name.key()))?;
    }
    within(Duration::from_secs(1), start)?;
    Ok("GEN_F = 1,2,4,8,14,24 and GEN_H = 1,2,2,4,6,8".into())
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let spec = MexSpec::FOUR_TWO;
    let got = [
        ("F(4)", count_family(Family::F, 4), 14u32),
        ("F2(4)", count_family(Family::F2, 4), 10),
        ("F3(4)", count_family(Family::F3, 4), 4),
        ("p42(4)", count_mex_class(4, spec, MexSide::Plain), 10),
        ("pbar42(4)", count_mex_class(4, spec, MexSide::Bar), 4),
        ("H(4)", count_family(Family::H, 4), 6),
        ("pbar_o(4)", Counter::OddOverpartitions.count(4), 6),
    ];
    for (label, have, want) in &got {
        ensure(*have == (*want).into(), || format!("{label} = {have}, expected {want}"))?;
    }
    within(Duration::from_secs(1), start)?;
    Ok(got.iter().map(|(l, h, _)| format!("{l}={h}")).collect::<Vec<_>>().join(" "))
}

fn oracle_vs_series() -> Outcome {
    let start = Instant::now();
    let n_max = 18u32;
    let gen_f = series(SeriesName::GenF, n_max as usize)?;
    let gen_h = series(SeriesName::GenH, n_max as usize)?;
    for n in 0..=n_max {
        let f = BigInt::from(count_family(Family::F, n));
        let h = BigInt::from(count_family(Family::H, n));
        ensure(f == gen_f.coeffs()[n as usize], || format!("F({n}) = {f} vs GEN_F"))?;
        ensure(h == gen_h.coeffs()[n as usize], || format!("H({n}) = {h} vs GEN_H"))?;
        let pbar = BigInt::from(Counter::Overpartitions.count(n));
        let pbar_odd = BigInt::from(Counter::OddOverpartitions.count(n));
        ensure(f == pbar, || format!("F({n}) = {f} but pbar({n}) = {pbar}"))?;
        ensure(h == pbar_odd, || format!("H({n}) = {h} but pbar_o({n}) = {pbar_odd}"))?;
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("n <= {n_max} in {:?}", start.elapsed()))
}

fn f01_identity() -> Outcome {
    let n_max = 200usize;
    let pbar = overpartitions(n_max, |_| true);
    let half = |n: usize| if n.is_multiple_of(2) { pbar[n / 2].clone() } else { big(0) };
    let f0 = series(SeriesName::GenF0, n_max)?;
    let f1 = series(SeriesName::GenF1, n_max)?;
    for (n, p) in pbar.iter().enumerate() {
        ensure(big(2) * &f0.coeffs()[n] == p + half(n), || format!("F0 series at {n}"))?;
        ensure(big(2) * &f1.coeffs()[n] == p - half(n), || format!("F1 series at {n}"))?;
    }
    for n in 0..=18u32 {
        let (f0, f1) = (BigInt::from(count_family(Family::F0, n)), BigInt::from(count_family(Family::F1, n)));
        let (p, h) = (&pbar[n as usize], half(n as usize));
        ensure(big(2) * f0 == p + &h, || format!("F0({n}) by enumeration"))?;
        ensure(big(2) * f1 == p - &h, || format!("F1({n}) by enumeration"))?;
    }
    require_verified(&check("THM_F01_ID", n_max, 18)?)?;
    Ok("series n <= 200, enumeration n <= 18".into())
}

fn main_f0_f1() -> Outcome {
    let f0 = require_resolved(&check("THM_F0_PRODUCT", 100, 18)?)?;
    let f1 = require_resolved(&check("THM_F1_PRODUCT", 100, 18)?)?;
    for id in ["EQ_F0_MINUS_F1", "EQ_F0_PLUS_F1", "EQ_F0_DERIVATION", "EQ_F1_DERIVATION"] {
        require_verified(&check(id, 100, 18)?)?;
    }
    // (F0 + F1) +- (F0 - F1) over 2 against the theta quotients
    let plus = series(SeriesName::GenF0PlusF1, 100)?;
    let minus = series(SeriesName::GenF0MinusF1, 100)?;
    let two = BigInt::from(2);
    for (name, combo) in [(SeriesName::GenF0, &plus + &minus), (SeriesName::GenF1, &plus - &minus)] {
        let target = series(name, 100)?.scale(&two);
        ensure(coeffs(&combo) == coeffs(&target), || format!("{} vs product combination", name.key()))?;
    }
    Ok(format!("{f0}; {f1}"))
}

fn main_f2_f3() -> Outcome {
    for id in ["THM_F2_MEX", "THM_F3_MEX"] {
        require_verified(&check(id, 16, 16)?)?;
    }
    for n in 0..=16 {
        let spec = MexSpec::FOUR_TWO;
        ensure(count_family(Family::F2, n) == count_mex_class(n, spec, MexSide::Plain), || format!("F2({n})"))?;
        ensure(count_family(Family::F3, n) == count_mex_class(n, spec, MexSide::Bar), || format!("F3({n})"))?;
    }
    for id in ["THM_F2_SUMFORM", "THM_F3_SUMFORM"] {
        require_verified(&check(id, 60, 16)?)?;
    }
    Ok("mex classes n <= 16, sum forms N = 60".into())
}

fn h_weight() -> Outcome {
    for id in ["THM_H_WT_A", "THM_H_WT_B", "THM_H_WT_C"] {
        let r = check(id, 100, 20)?;
        require_verified(&r)?;
        ensure(r.order == 100, || format!("{id} ran at {}", r.order))?;
    }
    let d = require_resolved(&check("THM_H_WT_D", 100, 20)?)?;
    let (h1, h4) = (count_family(Family::H3, 1), count_family(Family::H3, 4));
    ensure(h1 == 2u32.into() && h4 == 2u32.into(), || format!("H3(1) = {h1}, H3(4) = {h4}"))?;
    Ok(format!("(a)-(c) to N = 100; {d}"))
}

fn section_five() -> Outcome {
    let start = Instant::now();
    let ids = ["EQ_F_GPT", "EQ_F_SPT", "EQ_GEN_F2", "EQ_H_GPT", "EQ_H_SPT", "EQ_GEN_H2"];
    for id in ids {
        require_verified(&check(id, 60, 20)?)?;
    }
    within(Duration::from_secs(60), start)?;
    let mut printed = Vec::new();
    for id in ["EQ_F_SPT_AS_PRINTED", "EQ_H_GPT_AS_PRINTED", "EQ_H_SPT_AS_PRINTED", "EQ_GEN_H2_AS_PRINTED"] {
        printed.push(require_resolved(&check(id, 60, 20)?)?);
    }
    Ok(format!("{} Verified at N = 60; {}", ids.join(", "), printed.join("; ")))
}

fn triple_product() -> Outcome {
    let specs = [JtpSpec::new(4, -1, Sign::Plus), JtpSpec::new(16, -6, Sign::Plus), JtpSpec::new(4, -2, Sign::Minus)];
    for s in specs {
        let p = s.product_side(200).map_err(|e| e.to_string())?;
        let sum = s.sum_side(200).map_err(|e| e.to_string())?;
        ensure(coeffs(&p) == coeffs(&sum), || format!("{s:?}"))?;
    }
    require_verified(&check("JTP_SPOT", 200, 20)?)?;
    Ok("three specializations to N = 200".into())
}

fn corollaries() -> Outcome {
    let mut out = Vec::new();
    for id in ["COR_F0", "COR_F1"] {
        let r = check(id, 20, 20)?;
        match &r.status {
            Status::Verified => out.push(format!("{id} Verified")),
            Status::Diverges(d) => out.push(format!("{id} Diverges at {} ({} vs {})", d.index, d.left, d.right)),
            other => return Err(format!("{id}: no definitive report: {other:?}")),
        }
    }
    Ok(out.join("; "))
}

fn random_series(rng: &mut StdRng, order: usize) -> Series {
    Series::from_coeffs((0..=order).map(|_| BigInt::from(rng.gen_range(-1000i64..=1000))).collect())
}

fn properties() -> Outcome {
    let spec = MexSpec::FOUR_TWO;
    for n in 0..=18 {
        let f = count_family(Family::F, n);
        let h = count_family(Family::H, n);
        let sum = |a, b| count_family(a, n) + count_family(b, n);
        ensure(sum(Family::F0, Family::F1) == f, || format!("F0+F1 at {n}"))?;
        ensure(sum(Family::F2, Family::F3) == f, || format!("F2+F3 at {n}"))?;
        ensure(sum(Family::H0, Family::H1) == h, || format!("H0+H1 at {n}"))?;
        ensure(sum(Family::H2, Family::H3) == h, || format!("H2+H3 at {n}"))?;
        let mex = count_mex_class(n, spec, MexSide::Plain) + count_mex_class(n, spec, MexSide::Bar);
        ensure(mex == f, || format!("mex split at {n}"))?;
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for case in 0..100 {
        let order = rng.gen_range(0..30);
        let (a, b, c) =
            (random_series(&mut rng, order), random_series(&mut rng, order), random_series(&mut rng, order));
        let ok = &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &b == &b * &a
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &(&a + &b) - &b == a;
        ensure(ok, || format!("ring law, case {case}"))?;
        let mut u = random_series(&mut rng, order).into_coeffs();
        u[0] = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 });
        let u = Series::from_coeffs(u);
        let inv = u.invert().map_err(|e| e.to_string())?;
        ensure(coeffs(&(&u * &inv)) == coeffs(&Series::one(order)), || format!("invert, case {case}"))?;
        ensure(coeffs(&inv.invert().unwrap()) == coeffs(&u), || format!("double invert, case {case}"))?;
    }
    Ok("set splits n <= 18; 100 random ring and inverse cases".into())
}

fn dsl_corpus() -> Outcome {
    for &name in SeriesName::ALL {
        let text = transcription(name);
        let ast = parse(text).map_err(|e| format!("{}: {e}", name.key()))?;
        let got = evaluate(&ast, 40).map_err(|e| format!("{}: {e}", name.key()))?;
        let want = series(name, 40)?;
        ensure(got.order() == 40 && coeffs(&got) == coeffs(&want), || format!("{} differs", name.key()))?;
    }
    Ok(format!("{} transcriptions equal the catalog at N = 40", SeriesName::ALL.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("printed coefficients of GEN_F and GEN_H", printed_coefficients),
        ("worked example at n = 4", worked_example),
        ("oracle counts against generating functions", oracle_vs_series),
        ("F0/F1 through overpartitions", f01_identity),
        ("F0/F1 theta quotients and numerator variants", main_f0_f1),
        ("F2/F3 mex classes and sum forms", main_f2_f3),
        ("H0..H3 near-halves of odd overpartitions", h_weight),
        ("greatest and smallest part decompositions", section_five),
        ("triple product specializations", triple_product),
        ("corollary audits", corollaries),
        ("set splits and series properties", properties),
        ("DSL corpus against the catalog", dsl_corpus),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("PASS {:>2} {label} ({ms} ms): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {label} ({ms} ms): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
