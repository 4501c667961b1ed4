//! Acceptance criteria 1-8. Runs as a plain binary (`harness = false`) so
//! each criterion prints exactly one PASS/FAIL line with its runtime.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use specht_cli::run;
use specht_core::character::{
    gl2_weight_mult, gl3_simple_character, sl2_simple_character, weight_mult_ab2,
};
use specht_core::decompose::{
    decompose_a31b, decompose_a31b_dual, decompose_hook, decompose_staircase,
    decompose_two_power_hook,
};
use specht_core::partition::partitions_of;
use specht_core::special::is_p_special;
use specht_core::verify::{
    a31b_grid, core_identity_grid, run_grid, verify_a31b_consistency, verify_core_identity,
    CoreIdentityVerdict,
};
use specht_core::{Decomposition, Partition, SchurSum, SpecialParams};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("specht").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

fn labels(d: &Decomposition) -> BTreeSet<Partition> {
    d.summands.iter().map(|s| s.young.clone()).collect()
}

fn criterion_1() -> Outcome {
    let want: BTreeSet<Partition> = [p("14,9,2"), p("18,5,2"), p("14,11")].into();
    let (code, text) = cli(&["decompose", "a31b", "--a", "14", "--b", "9"]);
    ensure(code == 0, || format!("exit code {code}"))?;
    let rhs = text
        .trim()
        .strip_prefix("Sp(14,3,1^8) = ")
        .ok_or_else(|| format!("unexpected output {text:?}"))?;
    let printed: BTreeSet<Partition> = rhs
        .split(" + ")
        .map(|y| y.strip_prefix('Y').unwrap_or(y).parse::<Partition>())
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(printed == want, || format!("CLI printed {rhs}"))?;
    ensure(rhs.split(" + ").count() == 3, || {
        format!("CLI printed {rhs}")
    })?;

    let (code, json) = cli(&["decompose", "a31b", "--a", "14", "--b", "9", "--json"]);
    ensure(code == 0, || format!("exit code {code}"))?;
    let d = Decomposition::from_json(json.trim()).map_err(|e| e.to_string())?;
    ensure(
        labels(&d) == want && d.summands.iter().all(|s| s.mult == 1),
        || format!("JSON gave {d}"),
    )?;
    let lib = decompose_a31b(14, 9).map_err(|e| e.to_string())?;
    ensure(lib == d, || format!("library gave {lib}"))?;
    Ok(text.trim().to_string())
}

fn criterion_2() -> Outcome {
    for k in 1..=10u32 {
        let n = 1i64 << k;
        let d = decompose_staircase(2, n + 2, n - 1, 2).map_err(|e| e.to_string())?;
        let closed: BTreeSet<Partition> = (1..=k)
            .map(|j| {
                let (nj, n) = (1u32 << j, 1u32 << k);
                Partition::new(vec![n + nj, n - nj + 1]).unwrap()
            })
            .collect();
        ensure(labels(&d) == closed, || format!("k={k}: got {d}"))?;
        ensure(d.summands.len() == k as usize, || {
            format!("k={k}: {} summands", d.summands.len())
        })?;
        ensure(d.summands.iter().all(|s| s.mult == 1), || {
            format!("k={k}: multiplicity > 1")
        })?;
        let via_hook = decompose_two_power_hook(i64::from(k)).map_err(|e| e.to_string())?;
        ensure(via_hook.summands == d.summands, || {
            format!("k={k}: two-power-hook differs")
        })?;
    }
    Ok("k = 1..10, summand count = k".into())
}

fn criterion_3() -> Outcome {
    let grid = core_identity_grid(2, 5, 12, 11);
    let verdicts = run_grid(&grid, |&(m, a, b)| verify_core_identity(m, a, b));
    let mut counts = [0usize; 3];
    for (&(m, a, b), v) in grid.iter().zip(verdicts) {
        match v.map_err(|e| format!("m={m} a={a} b={b}: {e}"))? {
            CoreIdentityVerdict::Matches(case) => counts[case as usize] += 1,
            CoreIdentityVerdict::Mismatch {
                expected, actual, ..
            } => {
                return Err(format!(
                    "m={m} a={a} b={b}: expected {expected}, got {actual}"
                ))
            }
        }
    }
    Ok(format!(
        "{} cases: {} extended-first-row, {} specht, {} zero",
        grid.len(),
        counts[0],
        counts[1],
        counts[2]
    ))
}

fn criterion_4() -> Outcome {
    let mut checked = 0u64;
    for (l, pp) in [(2, 0), (2, 2), (2, 3), (3, 2)] {
        let params = SpecialParams::new(l, pp).map_err(|e| e.to_string())?;
        for c in 0..=60i64 {
            for d in 0..=c {
                let ch = sl2_simple_character(c - d, params).map_err(|e| e.to_string())?;
                for a in -2..=c + d + 2 {
                    let b = c + d - a;
                    let got = gl2_weight_mult(c, d, a, b, params).map_err(|e| e.to_string())?;
                    let want = ch.mult(&[a - b]);
                    ensure(got == want, || {
                        format!("L({c},{d}) at ({a},{b}), l={l} p={pp}: {got} vs {want}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} weight multiplicities"))
}

/// Every `Σ p^i t_i` with `|t_i| ≤ r_i`, `t_i ≡ r_i (mod 2)`.
fn digit_vector_sums(r: u64, p: u64) -> BTreeSet<i64> {
    let mut digits = Vec::new();
    let mut q = r;
    while q > 0 {
        digits.push((q % p) as i64);
        q /= p;
    }
    let mut sums = BTreeSet::from([0i64]);
    let mut scale = 1i64;
    for r_i in digits {
        let mut next = BTreeSet::new();
        for &s in &sums {
            let mut t = -r_i;
            while t <= r_i {
                next.insert(s + scale * t);
                t += 2;
            }
        }
        sums = next;
        scale *= p as i64;
    }
    sums
}

fn criterion_5() -> Outcome {
    let mut checked = 0u64;
    for pp in [2u64, 3, 5] {
        for r in 0..=500u64 {
            let sums = digit_vector_sums(r, pp);
            for b in -(r as i64)..=r as i64 {
                let got = is_p_special(r as i64, b, pp).map_err(|e| e.to_string())?;
                ensure(got == sums.contains(&b), || {
                    format!("r={r} b={b} p={pp}: {got}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} pairs"))
}

fn criterion_6() -> Outcome {
    let grid = a31b_grid(40, 39);
    let verdicts = run_grid(&grid, |&(a, b)| verify_a31b_consistency(a, b));
    for (&(a, b), v) in grid.iter().zip(verdicts) {
        let v = v.map_err(|e| format!("a={a} b={b}: {e}"))?;
        ensure(v.is_consistent(), || format!("a={a} b={b}: {v:?}"))?;
    }
    Ok(format!("{} valid (a,b)", grid.len()))
}

fn criterion_7() -> Outcome {
    let sigma = Partition::staircase(2, 2);
    let mut checked = 0u64;
    for (a, b) in a31b_grid(30, 29) {
        let total = (a + b - 1) / 2;
        for d in 0..=total / 2 {
            let mu = Partition::new(vec![(total - d) as u32, d as u32]).unwrap();
            let got = weight_mult_ab2(a, b, &mu).map_err(|e| e.to_string())?;
            let label = sigma.add_scaled(2, mu.parts()).map_err(|e| e.to_string())?;
            let ch = gl3_simple_character(&label, 2).map_err(|e| e.to_string())?;
            let want = ch.mult(&[a, b, 2]);
            ensure(got == want, || {
                format!("a={a} b={b} mu={mu}: {got} vs oracle {want}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (a,b,mu) triples"))
}

fn check_decomposition(d: &Decomposition, count: &mut u64) -> Result<(), String> {
    d.check_invariants().map_err(|e| format!("{d}: {e}"))?;
    let n = d.specht.degree();
    for s in &d.summands {
        ensure(s.young.degree() == n, || format!("{d}: degree"))?;
    }
    *count += 1;
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut decompositions = 0u64;
    let e = |e: specht_core::Error| e.to_string();
    for (a, b) in a31b_grid(40, 39) {
        let d = decompose_a31b(a, b).map_err(e)?;
        for s in &d.summands {
            ensure(s.young.core(2) == p("2,1"), || format!("{d}: 2-core"))?;
        }
        check_decomposition(&d, &mut decompositions)?;
        check_decomposition(&decompose_a31b_dual(a, b).map_err(e)?, &mut decompositions)?;
        check_decomposition(
            &decompose_staircase(2, a + 2, b, 2).map_err(e)?,
            &mut decompositions,
        )?;
    }
    for k in 1..=10 {
        check_decomposition(
            &decompose_two_power_hook(k).map_err(e)?,
            &mut decompositions,
        )?;
    }
    for (m, a, b) in core_identity_grid(2, 5, 12, 11) {
        if (a - m) % 2 == 0 && (b - m).rem_euclid(2) == 1 {
            for pp in [0, 2, 3] {
                let d = decompose_staircase(m, a, b, pp).map_err(e)?;
                let core = Partition::staircase(m as u32, 2);
                for s in &d.summands {
                    ensure(s.young.core(2) == core, || format!("{d}: 2-core"))?;
                }
                check_decomposition(&d, &mut decompositions)?;
            }
        }
    }
    for a in 1..=40 {
        for b in 1..=40 {
            if (a + b) % 2 == 1 {
                let d = decompose_hook(a, b, 2).map_err(e)?;
                let core = Partition::staircase(if a % 2 == 0 { 2 } else { 1 }, 2);
                for s in &d.summands {
                    ensure(s.young.core(2) == core, || format!("{d}: 2-core"))?;
                }
                check_decomposition(&d, &mut decompositions)?;
            }
        }
    }

    let mut pieri = 0u64;
    for n in 0..=8u32 {
        for lambda in partitions_of(n) {
            let s = SchurSum::schur(lambda.clone());
            for a in 1..=8 - n {
                let row = SchurSum::schur(Partition::row(a));
                let col = SchurSum::schur(Partition::column(a as usize));
                ensure(s.pieri_row(a) == s.lr_multiply(&row), || {
                    format!("{lambda} row {a}")
                })?;
                ensure(s.pieri_column(a as usize) == s.lr_multiply(&col), || {
                    format!("{lambda} column {a}")
                })?;
                pieri += 2;
            }
        }
    }

    for n in 0..=8u32 {
        let ps = partitions_of(n);
        for x in &ps {
            ensure(x.conjugate().conjugate() == *x, || {
                format!("conjugate of {x}")
            })?;
            ensure(x.dominated_by(x), || format!("{x} not reflexive"))?;
            for y in &ps {
                let xy = x.dominated_by(y);
                ensure(!(xy && y.dominated_by(x)) || x == y, || {
                    format!("{x} {y} antisymmetry")
                })?;
                ensure(xy == y.conjugate().dominated_by(&x.conjugate()), || {
                    format!("{x} {y} conjugation")
                })?;
                if xy {
                    for z in &ps {
                        ensure(!y.dominated_by(z) || x.dominated_by(z), || {
                            format!("{x} {y} {z} transitivity")
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{decompositions} decompositions, {pieri} Pieri products, degree <= 8 order axioms"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            1,
            "a31b(14,9) summands",
            Duration::from_secs(1),
            criterion_1,
        ),
        (
            2,
            "two-power hooks k=1..10",
            Duration::from_secs(1),
            criterion_2,
        ),
        (
            3,
            "core identity grid",
            Duration::from_secs(60),
            criterion_3,
        ),
        (
            4,
            "rank-two multiplicities vs Steinberg characters",
            Duration::from_secs(30),
            criterion_4,
        ),
        (
            5,
            "special pairs vs digit enumeration",
            Duration::from_secs(60),
            criterion_5,
        ),
        (
            6,
            "a31b consistency grid",
            Duration::from_secs(30),
            criterion_6,
        ),
        (
            7,
            "weight multiplicities vs rank-three oracle",
            Duration::from_secs(60),
            criterion_7,
        ),
        (
            8,
            "structural invariants",
            Duration::from_secs(60),
            criterion_8,
        ),
    ];
    let mut failed = 0;
    for (n, name, budget, check) in criteria {
        let start = Instant::now();
        let outcome =
            std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let timing = format!(
            "{:.3} s, limit {} s",
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
        match outcome {
            Ok(detail) if elapsed < budget => {
                println!("criterion {n}: PASS {name}: {detail} [{timing}]");
            }
            Ok(detail) => {
                failed += 1;
                println!("criterion {n}: FAIL {name}: over time budget: {detail} [{timing}]");
            }
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL {name}: {why} [{timing}]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
