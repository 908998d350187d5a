//! One function per subcommand. Each returns both renderings so the binary
//! only has to pick one and map `passed` to an exit code.

use std::fmt::Write as _;

use serde_json::{json, Value};

use super::config::SuiteConfig;
use super::suites::{demazure_check, run_verify_all, DemazureCheck, SystemContext};
use crate::borelring::SchubertCalculus;
use crate::charring::{steinberg_weight, weyl_dimension, PrimePower};
use crate::cohomology::{
    bott_cohomology, generating_wall_weights, is_acyclic_over_z, kempf_vanishing_demo, orthogonality_check,
    CohomologyReport, WallFamily,
};
use crate::error::{Error, Result};
use crate::frobp1::{split_frobenius_pushforward, verify_steinberg_p1};
use crate::rootsys::{RootSystem, RootSystemSpec, Weight};
use crate::weyl::{WeylGroup, DEFAULT_SIZE_GUARD};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Rendered result of a subcommand.
#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub text: String,
    pub json: Value,
    /// False when some verification failed.
    pub passed: bool,
}

impl CommandOutput {
    pub fn render(&self, structured: bool) -> String {
        if structured {
            let mut s = serde_json::to_string_pretty(&self.json).expect("json value serializes");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }
}

/// One-line hint printed under a usage error.
pub fn remedy(err: &Error) -> &'static str {
    match err {
        Error::InadmissibleSystem { .. } => "use A1-A8, B2-B6, C2-C6, D4-D6, F4 or G2",
        Error::DimensionMismatch { .. } => "pass exactly rank comma-separated integers, e.g. --weight \"1,-2\"",
        Error::IndexOutOfRange { .. } => "wall and reflection indices run from 1 to the rank",
        Error::GuardExceeded { .. } => "choose a smaller system, prime power or degree",
        Error::Singular(_) => "this weight has vanishing cohomology; see the acyclicity predicate",
        Error::NotDominant(_) => "pass a weight with all coordinates >= 0",
        Error::NotOnWall(_) => "pass a weight with some coordinate equal to 0",
        Error::NotPrime(_) => "pass a prime with --p, e.g. 2, 3, 5 or 7",
        Error::Overflow(_) => "choose smaller weights or prime powers",
        Error::Invalid(_) | Error::Internal(_) => "run with --help for the accepted arguments",
    }
}

fn group_of(rs: &RootSystem) -> Result<WeylGroup> {
    WeylGroup::enumerate(rs, DEFAULT_SIZE_GUARD)
}

fn cohomology_json(report: &CohomologyReport) -> Value {
    match report {
        CohomologyReport::SingularZero => json!({ "kind": "singular_zero" }),
        CohomologyReport::Concentrated {
            degree,
            weyl_element,
            highest_weight,
            dimension,
        } => json!({
            "kind": "concentrated",
            "degree": degree,
            "weyl_element": weyl_element.to_string(),
            "highest_weight": highest_weight.coords(),
            "dimension": dimension.to_string(),
        }),
    }
}

fn cohomology_text(report: &CohomologyReport) -> String {
    match report {
        CohomologyReport::SingularZero => "all cohomology vanishes (chi + rho is singular)".into(),
        CohomologyReport::Concentrated {
            degree,
            weyl_element,
            highest_weight,
            dimension,
        } => format!(
            "concentrated in degree {degree}: H^{degree} = V({highest_weight}), dim {dimension}, w = {weyl_element}"
        ),
    }
}

pub fn cmd_roots(spec: RootSystemSpec) -> Result<CommandOutput> {
    let rs = RootSystem::new(spec);
    let group = group_of(&rs)?;
    let mut text = String::new();
    let _ = writeln!(text, "root system {}", rs.label());
    let _ = writeln!(text, "Cartan matrix:");
    for row in rs.cartan() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        let _ = writeln!(text, "  {}", cells.join(""));
    }
    let _ = writeln!(text, "positive roots ({}):", rs.num_positive());
    for root in rs.positive_roots() {
        let _ = writeln!(
            text,
            "  height {:>2}  simple {:?}  weight {}",
            root.height(),
            root.simple_coords,
            root.weight
        );
    }
    let _ = writeln!(text, "rho = {}", rs.rho());
    let _ = writeln!(text, "highest coroot = {:?}", rs.highest_coroot().expansion());
    let _ = writeln!(text, "|W| = {}", group.order());
    let _ = writeln!(text, "w0 = {}", group.longest());
    let json = json!({
        "system": rs.label(),
        "cartan": rs.cartan(),
        "positive_roots": rs.positive_roots().iter().map(|r| json!({
            "simple_coords": r.simple_coords,
            "weight": r.weight.coords(),
            "coroot": r.coroot.expansion(),
        })).collect::<Vec<_>>(),
        "rho": rs.rho().coords(),
        "highest_coroot": rs.highest_coroot().expansion(),
        "weyl_order": group.order(),
        "longest_element": group.longest().to_string(),
    });
    Ok(CommandOutput {
        text,
        json,
        passed: true,
    })
}

pub fn cmd_bott(spec: RootSystemSpec, weight: &Weight) -> Result<CommandOutput> {
    let rs = RootSystem::new(spec);
    rs.check_weight(weight)?;
    let report = bott_cohomology(&rs, weight)?;
    let acyclic = is_acyclic_over_z(&rs, weight);
    let text = format!(
        "{} chi = {weight}\n{}\nacyclic over Z: {acyclic}\n",
        rs.label(),
        cohomology_text(&report)
    );
    let json = json!({
        "system": rs.label(),
        "weight": weight.coords(),
        "cohomology": cohomology_json(&report),
        "acyclic_over_z": acyclic,
    });
    Ok(CommandOutput {
        text,
        json,
        passed: true,
    })
}

/// `wall` is 1-based; `None` runs every simple wall.
pub fn cmd_orthogonality(
    spec: RootSystemSpec,
    p: u64,
    n: u32,
    wall: Option<usize>,
    radius: i64,
) -> Result<CommandOutput> {
    let rs = RootSystem::new(spec);
    let group = group_of(&rs)?;
    let pp = PrimePower::new(p, n)?;
    let walls: Vec<usize> = match wall {
        Some(0) => {
            return Err(Error::IndexOutOfRange {
                index: 0,
                rank: rs.rank(),
            })
        }
        Some(w) => {
            rs.check_index(w - 1)?;
            vec![w - 1]
        }
        None => (0..rs.rank()).collect(),
    };
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{} q = {}, -q chi - rho acyclic for chi on wall:",
        rs.label(),
        pp.q()
    );
    let mut rows = Vec::new();
    let mut failed = 0usize;
    for &i in &walls {
        for chi in generating_wall_weights(&rs, i, radius, WallFamily::Corollary)? {
            let r = orthogonality_check(&rs, &group, &chi, &pp)?;
            let passed = r.passed && r.mu[i] == -1;
            if !passed {
                failed += 1;
                let _ = writeln!(
                    text,
                    "FAIL wall {} chi {chi} mu {:?} acyclic={} euler_zero={}",
                    i + 1,
                    r.mu,
                    r.acyclic_predicate,
                    r.euler_is_zero
                );
            }
            rows.push(json!({
                "wall": i + 1,
                "chi": r.chi,
                "mu": r.mu,
                "acyclic_predicate": r.acyclic_predicate,
                "euler_is_zero": r.euler_is_zero,
                "passed": passed,
            }));
        }
    }
    let _ = writeln!(
        text,
        "{} cases, {} passed, {failed} failed",
        rows.len(),
        rows.len() - failed
    );
    let json = json!({
        "system": rs.label(),
        "p": p,
        "n": n,
        "q": pp.q().to_string(),
        "radius": radius,
        "cases": rows,
        "failed": failed,
    });
    Ok(CommandOutput {
        text,
        json,
        passed: failed == 0,
    })
}

pub fn cmd_demazure(spec: RootSystemSpec, check: DemazureCheck, radius: i64) -> Result<CommandOutput> {
    if radius < 0 {
        return Err(Error::Invalid("radius must be >= 0".into()));
    }
    let ctx = SystemContext::new(spec)?;
    let witness = demazure_check(&ctx, check, radius)?;
    let text = match &witness {
        None => format!("{} {} holds for |coords| <= {radius}\n", ctx.rs.label(), check.name()),
        Some(w) => format!("FAIL {} {}: {w}\n", ctx.rs.label(), check.name()),
    };
    let json = json!({
        "system": ctx.rs.label(),
        "check": check.name(),
        "radius": radius,
        "passed": witness.is_none(),
        "witness": witness,
    });
    Ok(CommandOutput {
        text,
        json,
        passed: witness.is_none(),
    })
}

pub fn cmd_kempf(spec: RootSystemSpec, weight: &Weight, p: u64, n: u32) -> Result<CommandOutput> {
    let rs = RootSystem::new(spec);
    let pp = PrimePower::new(p, n)?;
    let r = kempf_vanishing_demo(&rs, weight, &pp)?;
    let mut text = String::new();
    let _ = writeln!(text, "{} lambda = {weight}, q = {}", rs.label(), pp.q());
    let _ = writeln!(
        text,
        "q(lambda + rho) - rho = {} (dominant: {})",
        r.shifted_weight, r.shifted_is_dominant
    );
    let _ = writeln!(
        text,
        "chi(q lambda + (q-1) rho) = chi(lambda)^[q] * chi((q-1) rho): {}",
        r.identity_holds
    );
    let _ = writeln!(text, "{}", cohomology_text(&r.cohomology));
    let _ = writeln!(text, "{}", if r.passed { "PASS" } else { "FAIL" });
    let json = json!({
        "system": rs.label(),
        "weight": weight.coords(),
        "p": p,
        "n": n,
        "q": r.q.to_string(),
        "shifted_weight": r.shifted_weight.coords(),
        "shifted_is_dominant": r.shifted_is_dominant,
        "identity_holds": r.identity_holds,
        "cohomology": cohomology_json(&r.cohomology),
        "passed": r.passed,
    });
    Ok(CommandOutput {
        text,
        json,
        passed: r.passed,
    })
}

pub fn cmd_grr(spec: RootSystemSpec, p: u64, n: u32) -> Result<CommandOutput> {
    let rs = RootSystem::new(spec);
    let pp = PrimePower::new(p, n)?;
    let sc = SchubertCalculus::new(&rs)?;
    let passed = sc.verify_steinberg_grr(&pp)?;
    let st = steinberg_weight(&rs, &pp)?;
    let rank = weyl_dimension(&rs, &st)?;
    let text = format!(
        "{} q = {}: ch F_* L_(q-1)rho = {rank} (trivial of rank q^N) and ch F_* L_-rho = q^N ch L_-rho: {}\n",
        rs.label(),
        pp.q(),
        if passed { "PASS" } else { "FAIL" }
    );
    let json = json!({
        "system": rs.label(),
        "p": p,
        "n": n,
        "q": pp.q().to_string(),
        "steinberg_dimension": rank.to_string(),
        "passed": passed,
    });
    Ok(CommandOutput { text, json, passed })
}

/// With `d`, prints the splitting of `F^n_* O(d)`; otherwise checks the
/// Steinberg identities on the projective line.
pub fn cmd_p1(p: u64, n: u32, d: Option<i64>) -> Result<CommandOutput> {
    let pp = PrimePower::new(p, n)?;
    match d {
        Some(d) => {
            let s = split_frobenius_pushforward(d, &pp)?;
            let text = format!("F^{n}_* O({d}) = {s} over P^1, q = {}\n", pp.q());
            let json = json!({
                "p": p,
                "n": n,
                "d": d,
                "degrees": s.degrees(),
                "rank": s.rank(),
                "euler_characteristic": s.euler_characteristic(),
            });
            Ok(CommandOutput {
                text,
                json,
                passed: true,
            })
        }
        None => {
            let q = pp.q_i64()?;
            let passed = verify_steinberg_p1(&pp)?;
            let st = split_frobenius_pushforward(q - 1, &pp)?;
            let mr = split_frobenius_pushforward(-1, &pp)?;
            let text = format!(
                "q = {q}\nF^{n}_* O({}) = {st}\nF^{n}_* O(-1) = {mr}\n{}\n",
                q - 1,
                if passed { "PASS" } else { "FAIL" }
            );
            let json = json!({
                "p": p,
                "n": n,
                "q": q,
                "steinberg": st.degrees(),
                "minus_rho": mr.degrees(),
                "passed": passed,
            });
            Ok(CommandOutput { text, json, passed })
        }
    }
}

pub fn cmd_verify_all(config: &SuiteConfig, jobs: usize) -> Result<CommandOutput> {
    let report = run_verify_all(config, jobs, true)?;
    eprintln!("duration: {:.2}s", report.duration.as_secs_f64());
    Ok(CommandOutput {
        text: report.to_table(),
        json: serde_json::to_value(&report).expect("report serializes"),
        passed: report.all_passed(),
    })
}
