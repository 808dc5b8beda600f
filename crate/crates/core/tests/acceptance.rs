//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nilpotra_core::lab::random::{random_automorphism, random_word, rng};
use nilpotra_core::lab::{self, SuiteConfig};
use nilpotra_core::{nu, witt_count, BigInt, GeneratorId, GroupContext, Limits};
use num_traits::Pow;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hall_witt() -> Outcome {
    let mut strata = 0;
    for n in 1..=5usize {
        for c in 1..=4usize {
            let ctx = GroupContext::new(n, c).map_err(|e| e.to_string())?;
            for (i, size) in ctx.basis().stratum_sizes().iter().enumerate() {
                let w = witt_count(n as u64, i as u32 + 1);
                ensure(BigInt::from(*size) == w, || {
                    format!("n={n} c={c} weight {}: {size} vs {w}", i + 1)
                })?;
                strata += 1;
            }
        }
    }
    let two = GroupContext::new(2, 4).unwrap().basis().stratum_sizes();
    ensure(two == [2, 1, 2, 3], || format!("rank 2 sizes {two:?}"))?;
    Ok(format!("{strata} strata agree"))
}

fn normal_form_soundness() -> Outcome {
    let ctx = GroupContext::new(3, 3).unwrap();
    let mut rng = rng(2024);
    for i in 0..500 {
        let u = random_word(&mut rng, 3, 12);
        let v = random_word(&mut rng, 3, 12);
        let lhs = ctx.collect(&u.concat(&v).unwrap()).unwrap();
        let rhs = ctx.collect(&u).unwrap().mul(&ctx.collect(&v).unwrap()).unwrap();
        ensure(lhs == rhs, || {
            format!("pair {i}: collect(uv) != collect(u) collect(v) for u={u} v={v}")
        })?;
        let uu = ctx.collect(&u.concat(&u.inverse()).unwrap()).unwrap();
        ensure(uu.is_identity(), || format!("collect(u u^-1) = {uu} for u={u}"))?;
    }
    for i in 0..100 {
        // Two different words the kit declares equal must agree under a
        // random unitriangular representation.
        let u = random_word(&mut rng, 3, 12);
        let a = ctx.collect(&u).unwrap();
        let v = a.to_word(1 << 20).unwrap();
        ensure(ctx.collect(&v).unwrap() == a, || {
            format!("to_word round trip failed for {u}")
        })?;
        let gens = common::random_gens(&mut rng, 3, 3);
        ensure(common::eval_word(&u, &gens) == common::eval_word(&v, &gens), || {
            format!("evaluation {i}: {u} and {v} differ under a matrix representation")
        })?;
    }
    Ok("500 pairs, 100 matrix evaluations".into())
}

fn multilinearity() -> Outcome {
    let mut cases = 0;
    for c in [2, 3, 4] {
        for k in [2, 3, 5] {
            let r = lab::check_multilinearity(c, k, Limits::default()).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("c={c} k={k}: {:?}", r.failures))?;
            cases += r.cases;
        }
    }
    Ok(format!("{cases} identities"))
}

fn glue_probe() -> Outcome {
    let mut compared = 0;
    for c in 2..=4usize {
        let ctx = GroupContext::new(2, c).unwrap();
        for k in 1..=3i64 {
            let r = lab::probe_glue_identity(c, k, Limits::default()).map_err(|e| e.to_string())?;
            ensure(r.passed(), || {
                format!("c={c} k={k}: measured exponents off: {:?}", r.failures)
            })?;
            for p in ctx.basis().stratum(c) {
                let tree = ctx.basis().tree(p);
                let lhs: BigInt = Pow::pow(BigInt::from(k), nu(&tree, GeneratorId::new(1)))
                    + Pow::pow(BigInt::from(k), nu(&tree, GeneratorId::new(2)));
                let rhs: BigInt = Pow::pow(BigInt::from(k), c);
                let verdict = if lhs == rhs { "equal" } else { "differ" };
                let expected = format!("b={tree}: lhs exponent {lhs}, rhs exponent {rhs}, {verdict}");
                ensure(r.observations.contains(&expected), || {
                    format!("missing observation {expected:?}")
                })?;
                if (c, k) == (2, 2) {
                    ensure(lhs == rhs, || format!("(2,2) should agree for {tree}"))?;
                }
                compared += 1;
            }
        }
    }
    Ok(format!(
        "{compared} commutators match the predicted exponents; (c,k)=(2,2) agrees at 4 = 2^2"
    ))
}

fn shift_claim() -> Outcome {
    let r = lab::check_shift_suite(200, 5);
    ensure(r.passed(), || format!("{:?}", r.failures))?;
    Ok(format!("200 systems, {} cases", r.cases))
}

fn delta_balance() -> Outcome {
    for c in [3, 4] {
        for m in [1, 2] {
            let d = lab::check_delta_balance(c, m, Limits::default()).map_err(|e| e.to_string())?;
            ensure(d.passed(), || format!("delta c={c} m={m}: {:?}", d.failures))?;
            let e = lab::check_epsilon_square(c, m, Limits::default()).map_err(|e| e.to_string())?;
            ensure(e.passed(), || format!("epsilon c={c} m={m}: {:?}", e.failures))?;
        }
    }
    Ok("(c,m) in {3,4}x{1,2}".into())
}

fn centre() -> Outcome {
    for (n, c) in [(2, 2), (3, 3)] {
        let r = lab::check_center_props(n, c, 100, 77, Limits::default()).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("n={n} c={c}: {:?}", r.failures))?;
    }
    Ok("100 trials at (2,2) and (3,3)".into())
}

fn morphism_algebra() -> Outcome {
    let ctx = GroupContext::new(3, 3).unwrap();
    let mut rng = rng(808);
    for i in 0..100 {
        let f = random_automorphism(&ctx, &mut rng).map_err(|e| e.to_string())?;
        let fi = f.invert().map_err(|e| e.to_string())?;
        ensure(f.compose(&fi).unwrap().is_identity(), || {
            format!("automorphism {i}: f f^-1 != id for {f}")
        })?;
    }
    let small = GroupContext::new(3, 2).unwrap();
    for i in 0..100 {
        let g = random_automorphism(&small, &mut rng).map_err(|e| e.to_string())?;
        let back = g.lift(3).and_then(|h| h.project(2)).map_err(|e| e.to_string())?;
        ensure(back == g, || format!("map {i}: project(lift(g)) != g for {g}"))?;
    }
    Ok("100 inversions, 100 lift/project round trips".into())
}

fn lk_congruence() -> Outcome {
    let mut cases = 0;
    for c in 1..=4 {
        for k in 1..=5 {
            let r = lab::check_lk_congruence_basis(c, k, Limits::default()).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("c={c} k={k}: {:?}", r.failures))?;
            cases += r.cases;
        }
    }
    Ok(format!("{cases} commutators"))
}

fn verify_all() -> Outcome {
    let reports = lab::run_suites("all", &SuiteConfig::default()).map_err(|e| e.to_string())?;
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| r.is_blocking_failure())
        .map(|r| r.summary_line())
        .collect();
    ensure(failed.is_empty(), || failed.join("; "))?;
    Ok(format!("{} reports", reports.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 Hall/Witt agreement", hall_witt, Duration::from_secs(5)),
        (
            "2 normal-form soundness",
            normal_form_soundness,
            Duration::from_secs(30),
        ),
        ("3 multilinearity", multilinearity, Duration::from_secs(10)),
        ("4 glue probe", glue_probe, Duration::MAX),
        ("5 shift claim", shift_claim, Duration::from_secs(5)),
        (
            "6 delta balance and epsilon square",
            delta_balance,
            Duration::from_secs(60),
        ),
        ("7 centre properties", centre, Duration::MAX),
        ("8 morphism algebra", morphism_algebra, Duration::from_secs(60)),
        ("9 L_k congruence", lk_congruence, Duration::MAX),
        ("verify all", verify_all, Duration::from_secs(180)),
    ];
    let mut failures = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > budget => Err(format!("{msg}, but took {took:?} (budget {budget:?})")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS {name}: {msg} [{:.2}s]", took.as_secs_f64()),
            Err(msg) => {
                failures += 1;
                println!("FAIL {name}: {msg} [{:.2}s]", took.as_secs_f64());
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
