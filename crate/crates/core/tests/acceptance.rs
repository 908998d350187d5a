//! Acceptance battery. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line together with its runtime budget.
//!
//! All comparisons are exact; the only tolerances are wall-clock limits.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;

use steinberg_lab::borelring::SchubertCalculus;
use steinberg_lab::charring::{kempf_identity_check, weyl_character, weyl_dimension, PrimePower};
use steinberg_lab::cli::{demazure_check, weight_box, DemazureCheck, SystemContext};
use steinberg_lab::cohomology::{
    bott_cohomology, generating_wall_weights, orthogonality_check, CohomologyReport, WallFamily,
};
use steinberg_lab::frobp1::{closed_formula, split_frobenius_pushforward, verify_steinberg_p1, P1Splitting};
use steinberg_lab::rootsys::{Family, RootSystem, RootSystemSpec, Weight};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn system(label: &str) -> RootSystem {
    RootSystem::new(label.parse::<RootSystemSpec>().expect("admissible"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T: std::fmt::Display>(err: T) -> String {
    err.to_string()
}

fn steinberg_dimension() -> Outcome {
    let mut cases = 0;
    for label in ["A1", "A2", "A3", "B2", "G2"] {
        let rs = system(label);
        for q in [2i64, 3, 4, 5, 8, 9] {
            let weight = rs.rho().checked_scale(q - 1).map_err(e)?;
            let dim = weyl_dimension(&rs, &weight).map_err(e)?;
            let expected = BigInt::from(q).pow(rs.num_positive() as u32);
            ensure(dim == expected, || format!("{label} q={q}: {dim} != {expected}"))?;
            cases += 1;
        }
    }
    // second route: count weights of the Demazure character
    for label in ["A1", "A2", "B2"] {
        let rs = system(label);
        for q in [2i64, 3] {
            let weight = rs.rho().checked_scale(q - 1).map_err(e)?;
            let dim = weyl_character(&rs, &weight).map_err(e)?.dimension();
            let expected = BigInt::from(q).pow(rs.num_positive() as u32);
            ensure(dim == expected, || format!("{label} q={q}: character dimension {dim}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn orthogonality_battery() -> Outcome {
    let mut cases = 0;
    for label in ["A1", "A2", "B2", "G2", "A3"] {
        let ctx = SystemContext::new(label.parse().unwrap()).map_err(e)?;
        for i in 0..ctx.rs.rank() {
            for chi in generating_wall_weights(&ctx.rs, i, 5, WallFamily::Corollary).map_err(e)? {
                for p in [2u64, 3, 5] {
                    for n in [1u32, 2] {
                        let pp = PrimePower::new(p, n).map_err(e)?;
                        let r = orthogonality_check(&ctx.rs, &ctx.group, &chi, &pp).map_err(e)?;
                        // mu = -q chi - rho and <mu + rho, alpha_i^vee> = 0, by hand
                        let q = pp.q_i64().map_err(e)?;
                        let expected_mu: Vec<i64> = chi
                            .coords()
                            .iter()
                            .zip(ctx.rs.rho().coords())
                            .map(|(c, r)| -q * c - r)
                            .collect();
                        let on_wall = r.mu[i] + ctx.rs.rho().coords()[i] == 0;
                        ensure(
                            r.acyclic_predicate && r.euler_is_zero && on_wall && r.mu == expected_mu,
                            || format!("{label} wall {} chi {chi} q {q}: {r:?}", i + 1),
                        )?;
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn demazure_identities() -> Outcome {
    let mut cases = 0;
    for label in ["A1", "A2", "B2", "G2"] {
        let ctx = SystemContext::new(label.parse().unwrap()).map_err(e)?;
        for check in DemazureCheck::ALL {
            if let Some(w) = demazure_check(&ctx, check, 3).map_err(e)? {
                return Err(format!("{label} {}: {w}", check.name()));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} system/check pairs"))
}

fn kempf_identity() -> Outcome {
    let mut cases = 0;
    for label in ["A1", "A2", "B2"] {
        let rs = system(label);
        for lambda in weight_box(rs.rank(), 0, 2) {
            for (p, n) in [(2u64, 1u32), (3, 1), (2, 2)] {
                let pp = PrimePower::new(p, n).map_err(e)?;
                ensure(kempf_identity_check(&rs, &lambda, &pp).map_err(e)?, || {
                    format!("{label} lambda {lambda} q {}", pp.q())
                })?;
                // dimensions must multiply as well
                let q = pp.q_i64().map_err(e)?;
                let big = &lambda.checked_scale(q).map_err(e)? + &rs.rho().checked_scale(q - 1).map_err(e)?;
                let lhs = weyl_dimension(&rs, &big).map_err(e)?;
                let rhs = weyl_dimension(&rs, &lambda).map_err(e)? * BigInt::from(q).pow(rs.num_positive() as u32);
                ensure(lhs == rhs, || format!("{label} lambda {lambda} q {q}: {lhs} != {rhs}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn grr_steinberg() -> Outcome {
    let mut cases = 0;
    let grid: &[(&str, u64, u32)] = &[
        ("A1", 2, 1),
        ("A1", 3, 1),
        ("A2", 2, 1),
        ("A2", 3, 1),
        ("B2", 2, 1),
        ("B2", 3, 1),
        ("A1", 2, 2),
        ("A1", 3, 2),
    ];
    for &(label, p, n) in grid {
        let sc = SchubertCalculus::new(&system(label)).map_err(e)?;
        let pp = PrimePower::new(p, n).map_err(e)?;
        ensure(sc.verify_steinberg_grr(&pp).map_err(e)?, || {
            format!("{label} p={p} n={n}")
        })?;
        cases += 1;
    }
    Ok(format!("{cases} cases"))
}

/// `h^0(F^n_* O(d) (x) O(m)) = h^0(O(d + q m))` by the projection formula;
/// checking it for every relevant twist pins down the splitting.
fn twist_oracle(s: &P1Splitting, d: i64, q: i64) -> bool {
    let h0 = |e: i64| (e + 1).max(0);
    (-(d.abs() + 2)..=d.abs() + 2).all(|m| s.degrees().iter().map(|&e| h0(e + m)).sum::<i64>() == h0(d + q * m))
}

fn rank_one() -> Outcome {
    let mut cases = 0;
    for p in [2u64, 3, 5] {
        for n in 1..=3u32 {
            let pp = PrimePower::new(p, n).map_err(e)?;
            let q = pp.q_i64().map_err(e)?;
            for d in -20..=20 {
                let s = split_frobenius_pushforward(d, &pp).map_err(e)?;
                let c = closed_formula(d, q).map_err(e)?;
                ensure(s == c, || format!("p={p} n={n} d={d}: {s} != {c}"))?;
                ensure(twist_oracle(&s, d, q), || {
                    format!("p={p} n={n} d={d}: twist oracle rejects {s}")
                })?;
                cases += 1;
            }
        }
    }
    for p in [2u64, 3, 5, 7] {
        for n in [1u32, 2] {
            let pp = PrimePower::new(p, n).map_err(e)?;
            ensure(verify_steinberg_p1(&pp).map_err(e)?, || {
                format!("steinberg p={p} n={n}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn hrr() -> Outcome {
    let mut cases = 0;
    for label in ["A1", "A2", "B2", "G2"] {
        let rs = system(label);
        let sc = SchubertCalculus::new(&rs).map_err(e)?;
        for lambda in weight_box(rs.rank(), 0, 3) {
            let chi = sc.hrr_euler_characteristic(&lambda).map_err(e)?;
            let dim = BigRational::from_integer(weyl_dimension(&rs, &lambda).map_err(e)?);
            ensure(chi == dim, || format!("{label} {lambda}: {chi} != {dim}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

/// Brute-force Čech count for O(d) on P^1 from Laurent monomials x^a y^(d-a).
fn cech(d: i64) -> (i64, i64) {
    let monomials: Vec<(i64, i64)> = (-40..=40).map(|a| (a, d - a)).collect();
    let h0 = monomials.iter().filter(|&&(a, b)| a >= 0 && b >= 0).count() as i64;
    let h1 = monomials.iter().filter(|&&(a, b)| a < 0 && b < 0).count() as i64;
    (h0, h1)
}

fn bott_sanity() -> Outcome {
    let a1 = RootSystem::of(Family::A, 1).map_err(e)?;
    for d in -10..=10 {
        let (h0, h1) = cech(d);
        let expected = match d {
            d if d >= 0 => (d + 1, 0),
            -1 => (0, 0),
            d => (0, -d - 1),
        };
        ensure((h0, h1) == expected, || format!("Cech oracle at d={d}: {:?}", (h0, h1)))?;
        let bott = match bott_cohomology(&a1, &Weight::from([d])).map_err(e)? {
            CohomologyReport::SingularZero => (0, 0),
            CohomologyReport::Concentrated {
                degree: 0, dimension, ..
            } => (i64::try_from(dimension).unwrap(), 0),
            CohomologyReport::Concentrated {
                degree: 1, dimension, ..
            } => (0, i64::try_from(dimension).unwrap()),
            other => return Err(format!("d={d}: unexpected {other:?}")),
        };
        ensure(bott == (h0, h1), || {
            format!("d={d}: Bott {bott:?} vs Cech {:?}", (h0, h1))
        })?;
    }
    Ok("21 degrees".into())
}

fn cli_golden_run() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_steinberg-lab");
    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .env_remove("STEINBERG_LAB_CONFIG")
            .output()
            .map_err(|err| format!("cannot run {bin}: {err}"))
    };
    let first = run(&["verify-all", "--structured"])?;
    let second = run(&["verify-all", "--structured"])?;
    ensure(first.status.code() == Some(0), || {
        format!("first run exited {:?}", first.status.code())
    })?;
    ensure(second.status.code() == Some(0), || {
        format!("second run exited {:?}", second.status.code())
    })?;
    ensure(first.stdout == second.stdout, || {
        "structured output differs between runs".into()
    })?;
    ensure(!first.stdout.is_empty(), || "empty structured output".into())?;

    let dir = std::env::temp_dir().join(format!("steinberg-lab-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(e)?;
    let cfg = dir.join("tampered.cfg");
    std::fs::write(
        &cfg,
        "systems = A1, A2\nprimes = 2\nexponents = 1\ntamper = steinberg\n",
    )
    .map_err(e)?;
    let tampered = run(&["verify-all", "--config", cfg.to_str().unwrap()])?;
    let _ = std::fs::remove_dir_all(&dir);
    ensure(tampered.status.code() == Some(1), || {
        format!("tampered fixture exited {:?}", tampered.status.code())
    })?;
    Ok(format!(
        "{} bytes of structured output, tampered run exits 1",
        first.stdout.len()
    ))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "Steinberg dimension q^N",
            limit: Duration::from_secs(1),
            run: steinberg_dimension,
        },
        Criterion {
            id: 2,
            name: "wall orthogonality battery",
            limit: Duration::from_secs(60),
            run: orthogonality_battery,
        },
        Criterion {
            id: 3,
            name: "Demazure operator identities",
            limit: Duration::from_secs(30),
            run: demazure_identities,
        },
        Criterion {
            id: 4,
            name: "Kempf character identity",
            limit: Duration::from_secs(30),
            run: kempf_identity,
        },
        Criterion {
            id: 5,
            name: "GRR Steinberg pushforward",
            limit: Duration::from_secs(20),
            run: grr_steinberg,
        },
        Criterion {
            id: 6,
            name: "projective line splitting",
            limit: Duration::from_secs(5),
            run: rank_one,
        },
        Criterion {
            id: 7,
            name: "Hirzebruch-Riemann-Roch",
            limit: Duration::from_secs(20),
            run: hrr,
        },
        Criterion {
            id: 8,
            name: "Bott vs Cech on P^1",
            limit: Duration::from_secs(1),
            run: bott_sanity,
        },
        Criterion {
            id: 9,
            name: "CLI golden run",
            limit: Duration::from_secs(300),
            run: cli_golden_run,
        },
    ];

    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for c in &criteria {
        if !filter.is_empty()
            && !filter
                .iter()
                .any(|f| c.id.to_string() == *f || c.name.contains(f.as_str()))
        {
            continue;
        }
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(d) => (false, d),
        };
        failed += usize::from(!ok);
        println!(
            "[{}] criterion {}: {:<30} {:>8.3}s (limit {}s, exact)  {detail}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
