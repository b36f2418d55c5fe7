//! One line per acceptance criterion. Exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use kostka::bench::{run_bench, BenchReport};
use kostka::frobenius::{frobenius_character, frobenius_table};
use kostka::monomial::{monomial_solve, q_determinant, DEFAULT_MONOMIAL_MAX_N};
use kostka::partitions::{class_size, partitions_of};
use kostka::symfunc::{complete_homogeneous, monomial_count, monomial_symmetric, sym_add};
use kostka::triangular::triangular_solve;
use kostka::verification::{
    verify_coset_count_consistency, verify_frobenius_identity, verify_orthonormality,
};
use num_bigint::{BigInt, BigUint};

const FAST_BUDGET: Duration = Duration::from_secs(1);
const MONOMIAL_BUDGET_N5: Duration = Duration::from_secs(10);
const MONOMIAL_BUDGET_N6: Duration = Duration::from_secs(180);
const IDENTITY_BUDGET_N4: Duration = Duration::from_secs(60);
const BENCH_REPS: usize = 5;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, budget: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < budget, format!("{what} took {elapsed:?}, budget {budget:?}"))
}

fn frobenius_tables() -> Outcome {
    let start = Instant::now();
    let t3 = frobenius_table(&ctx(3)).map_err(|e| e.to_string())?;
    let t5 = frobenius_table(&ctx(5)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(t3.to_i64_rows() == rows(&S3_FROBENIUS), "n=3 table differs")?;
    ensure(t5.to_i64_rows() == rows(&S5_FROBENIUS), "n=5 table differs")?;
    let worked = [
        (&[3, 2][..], &[2, 1, 1, 1][..], 4u32),
        (&[2, 2, 1][..], &[1, 1, 1, 1, 1][..], 30),
        (&[3, 2][..], &[4, 1][..], 0),
    ];
    for (lam, l, want) in worked {
        let got = frobenius_character(&p(lam), &p(l).cycle_type()).map_err(|e| e.to_string())?;
        ensure(got == BigUint::from(want), format!("phi^{lam:?}({l:?}) = {got}"))?;
    }
    within(elapsed, FAST_BUDGET, "both tables")?;
    Ok(format!("n=3 and n=5 cell-for-cell, worked values 4/30/0, {elapsed:?}"))
}

fn triangular_tables() -> Outcome {
    let start = Instant::now();
    let c3 = ctx(3);
    let r3 = triangular_solve(&frobenius_table(&c3).unwrap(), &c3).map_err(|e| e.to_string())?;
    let c5 = ctx(5);
    let r5 = triangular_solve(&frobenius_table(&c5).unwrap(), &c5).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(r3.kostka.to_i64_rows() == rows(&S3_KOSTKA), "n=3 kostka")?;
    ensure(r3.inverse_kostka.to_i64_rows() == rows(&S3_INVERSE), "n=3 inverse")?;
    ensure(r3.characters.to_i64_rows() == rows(&S3_CHARACTERS), "n=3 characters")?;
    ensure(r5.kostka.to_i64_rows() == rows(&S5_KOSTKA), "n=5 kostka")?;
    ensure(r5.inverse_kostka.to_i64_rows() == rows(&S5_INVERSE), "n=5 inverse")?;
    ensure(r5.characters.to_i64_rows() == rows(&S5_CHARACTERS), "n=5 characters")?;
    within(elapsed, FAST_BUDGET, "n=3 and n=5 solves")?;
    Ok(format!("n=3 and n=5 kostka, inverse, characters match, {elapsed:?}"))
}

fn monomial_tables() -> Outcome {
    let c3 = ctx(3);
    let m = |parts: &[usize]| monomial_symmetric(3, &p(parts));
    let q111 = q_determinant(&c3, &p(&[1, 1, 1])).map_err(|e| e.to_string())?;
    ensure(q111 == m(&[1, 1, 1]), format!("Q(1^3) = {q111}"))?;
    let q21 = q_determinant(&c3, &p(&[2, 1])).map_err(|e| e.to_string())?;
    let want21 = sym_add(&m(&[2, 1]), &kostka::symfunc::sym_scale(&BigInt::from(2), &m(&[1, 1, 1]))).unwrap();
    ensure(q21 == want21, format!("Q(2,1) = {q21}"))?;
    let q3 = q_determinant(&c3, &p(&[3])).map_err(|e| e.to_string())?;
    ensure(q3 == complete_homogeneous(3, 3), format!("Q(3) = {q3}"))?;

    let r3 = monomial_solve(&c3, DEFAULT_MONOMIAL_MAX_N).map_err(|e| e.to_string())?;
    ensure(r3.kostka.to_i64_rows() == rows(&S3_KOSTKA), "n=3 kostka")?;
    ensure(r3.inverse_kostka.to_i64_rows() == rows(&S3_INVERSE), "n=3 inverse")?;

    let start = Instant::now();
    let r5 = monomial_solve(&ctx(5), DEFAULT_MONOMIAL_MAX_N).map_err(|e| e.to_string())?;
    let t5 = start.elapsed();
    ensure(r5.kostka.to_i64_rows() == rows(&S5_KOSTKA), "n=5 kostka")?;
    ensure(r5.inverse_kostka.to_i64_rows() == rows(&S5_INVERSE), "n=5 inverse")?;
    within(t5, MONOMIAL_BUDGET_N5, "n=5")?;

    let start = Instant::now();
    monomial_solve(&ctx(6), DEFAULT_MONOMIAL_MAX_N).map_err(|e| e.to_string())?;
    let t6 = start.elapsed();
    within(t6, MONOMIAL_BUDGET_N6, "n=6")?;
    Ok(format!("n=3 expansions, n=3/5 tables match; n=5 {t5:?}, n=6 {t6:?}"))
}

fn cross_method() -> Outcome {
    for n in 2..=6 {
        let c = ctx(n);
        let tri = triangular_solve(&frobenius_table(&c).unwrap(), &c).map_err(|e| e.to_string())?;
        let mono = monomial_solve(&c, DEFAULT_MONOMIAL_MAX_N).map_err(|e| e.to_string())?;
        ensure(tri.kostka == mono.kostka, format!("n={n} kostka"))?;
        ensure(tri.inverse_kostka == mono.inverse_kostka, format!("n={n} inverse"))?;
        ensure(tri.characters == mono.characters, format!("n={n} characters"))?;
    }
    Ok("n=2..6 identical".into())
}

fn orthonormality() -> Outcome {
    for n in 2..=8 {
        let c = ctx(n);
        let tri = triangular_solve(&frobenius_table(&c).unwrap(), &c).map_err(|e| e.to_string())?;
        let check = verify_orthonormality(&tri.characters, &c);
        ensure(check.passed, format!("n={n}: {}", check.detail))?;
        if n <= DEFAULT_MONOMIAL_MAX_N {
            let mono = monomial_solve(&c, DEFAULT_MONOMIAL_MAX_N).map_err(|e| e.to_string())?;
            let check = verify_orthonormality(&mono.characters, &c);
            ensure(check.passed, format!("n={n} monomial: {}", check.detail))?;
        }
    }
    Ok("exact delta for n=2..8".into())
}

fn kostka_identities() -> Outcome {
    for n in 2..=8 {
        let c = ctx(n);
        let k = triangular_solve(&frobenius_table(&c).unwrap(), &c).map_err(|e| e.to_string())?.kostka;
        let size = k.size();
        ensure((0..size).all(|i| k.get(i, i) == &BigInt::from(1)), format!("n={n} diagonal"))?;
        ensure((0..size).all(|i| k.get(i, 0) == &BigInt::from(1)), format!("n={n} first column"))?;
        let det = k.triangular_determinant().map_err(|e| e.to_string())?;
        ensure(det == BigInt::from(1), format!("n={n} det {det}"))?;
    }
    Ok("unit diagonal, first column ones, det 1 for n=2..8".into())
}

fn partition_counts() -> Outcome {
    let expected = [(4, 5), (5, 7), (6, 11), (7, 15), (8, 22), (9, 30), (10, 42)];
    for (n, k) in expected {
        let got = partitions_of(n).map_err(|e| e.to_string())?.len();
        ensure(got == k, format!("n={n}: {got} partitions, expected {k}"))?;
    }
    for n in 1..=10usize {
        let total: BigUint = partitions_of(n).unwrap().iter().map(|l| class_size(&l.cycle_type())).sum();
        let fact: BigUint = (1..=n).map(BigUint::from).product();
        ensure(total == fact, format!("n={n} class sizes sum to {total}"))?;
    }
    Ok("(n,k) for n=4..10; class sizes sum to n! for n=1..10".into())
}

fn term_counts() -> Outcome {
    for (n, r, want) in [(3, 3, 10u32), (3, 4, 15), (4, 4, 35), (5, 5, 126), (8, 5, 792)] {
        let got = complete_homogeneous(n, r as i64).raw_term_count();
        ensure(got == BigUint::from(want), format!("h_{r} in {n} variables has {got} terms"))?;
    }
    let big = monomial_count(12, 6);
    ensure(big == BigUint::from(12376u32), format!("monomial_count(12, 6) = {big}"))?;
    Ok("10, 15, 35, 126, 792 and 12376".into())
}

fn frobenius_identity() -> Outcome {
    let mut t4 = Duration::ZERO;
    let mut classes = 0;
    for n in 2..=5 {
        let c = ctx(n);
        let start = Instant::now();
        for l in c.partitions() {
            let check = verify_frobenius_identity(&c, &l.cycle_type(), 5).map_err(|e| e.to_string())?;
            ensure(check.passed, format!("n={n}: {} {}", check.name, check.detail))?;
            classes += 1;
        }
        if n == 4 {
            t4 = start.elapsed();
        }
    }
    within(t4, IDENTITY_BUDGET_N4, "n=4")?;
    Ok(format!("{classes} classes over n=2..5 (n=5 is the deep tier), n=4 in {t4:?}"))
}

fn coset_consistency() -> Outcome {
    for n in 2..=6 {
        let check = verify_coset_count_consistency(&ctx(n));
        ensure(check.passed, format!("n={n}: {}", check.detail))?;
    }
    Ok("all (lambda, l) pairs for n=2..6".into())
}

fn degree_identity() -> Outcome {
    for n in 2..=6 {
        let c = ctx(n);
        let r = triangular_solve(&frobenius_table(&c).unwrap(), &c).map_err(|e| e.to_string())?;
        let last = r.kostka.size() - 1;
        let row = r.kostka.row(last).to_vec();
        let col = r.characters.column(last);
        ensure(row == col, format!("n={n}: last kostka row differs from identity-class column"))?;
        let sum: BigInt = col.iter().map(|d| d * d).sum();
        ensure(sum == BigInt::from(c.group_order().clone()), format!("n={n}: sum of squares {sum}"))?;
        if n == 5 {
            let want: Vec<BigInt> = [1, 4, 5, 6, 5, 4, 1].iter().map(|&v| BigInt::from(v)).collect();
            ensure(row == want, "n=5 degrees")?;
        }
    }
    Ok("n=2..6; n=5 degrees [1,4,5,6,5,4,1]".into())
}

fn bench() -> Outcome {
    let mut parts = Vec::new();
    for n in [5, 6] {
        let report = run_bench(n, BENCH_REPS, DEFAULT_MONOMIAL_MAX_N).map_err(|e| e.to_string())?;
        let back: BenchReport = serde_json::from_str(&report.to_json()).map_err(|e| e.to_string())?;
        ensure(back == report, "JSON round trip")?;
        ensure(
            report.triangular_nanos < report.monomial_nanos,
            format!("n={n}: triangular {}ns, monomial {}ns", report.triangular_nanos, report.monomial_nanos),
        )?;
        parts.push(format!("n={n} ratio {:.1}", report.ratio));
    }
    Ok(parts.join(", "))
}

fn oracle() -> Outcome {
    for n in 1..=5 {
        let got = frobenius_table(&ctx(n)).map_err(|e| e.to_string())?.to_i64_rows();
        ensure(got == brute_force_frobenius(n), format!("n={n} differs from subgroup enumeration"))?;
    }
    Ok("every entry for n=1..5".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("frobenius tables", frobenius_tables),
        ("triangular method", triangular_tables),
        ("monomial method", monomial_tables),
        ("cross-method equality", cross_method),
        ("orthonormality", orthonormality),
        ("kostka identities", kostka_identities),
        ("partition counts", partition_counts),
        ("term counts", term_counts),
        ("frobenius identity", frobenius_identity),
        ("coset-count consistency", coset_consistency),
        ("degree identity", degree_identity),
        ("bench", bench),
        ("oracle equivalence", oracle),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS  {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {:>2} {name}: {detail}", i + 1);
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
