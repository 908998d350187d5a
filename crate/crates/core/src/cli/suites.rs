//! The verification batteries behind `verify-all` and the per-topic commands.

use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Pow};
use rayon::prelude::*;

use super::config::{Suite, SuiteConfig};
use super::report::{CaseRecord, RunReport};
use crate::borelring::SchubertCalculus;
use crate::charring::{
    alternating_sum_character, demazure_operator, demazure_word, euler_character, weyl_character, weyl_dimension,
    Character, PrimePower,
};
use crate::cohomology::{
    bott_cohomology, cech_cohomology_p1, generating_wall_weights, is_acyclic_over_z, kempf_vanishing_demo,
    orthogonality_check, CohomologyReport, WallFamily,
};
use crate::error::{Error, Result};
use crate::frobp1::{closed_formula, iterated_splitting, split_frobenius_pushforward, verify_steinberg_p1};
use crate::rootsys::{RootSystem, RootSystemSpec, Weight};
use crate::weyl::{longest_element, WeylGroup, DEFAULT_SIZE_GUARD};

/// Precomputed data shared by every case of one root system.
pub struct SystemContext {
    pub rs: RootSystem,
    pub group: WeylGroup,
    schubert: OnceLock<std::result::Result<SchubertCalculus, Error>>,
}

impl SystemContext {
    pub fn new(spec: RootSystemSpec) -> Result<Self> {
        let rs = RootSystem::new(spec);
        let group = WeylGroup::enumerate(&rs, DEFAULT_SIZE_GUARD)?;
        Ok(SystemContext {
            rs,
            group,
            schubert: OnceLock::new(),
        })
    }

    pub fn schubert(&self) -> Result<&SchubertCalculus> {
        self.schubert
            .get_or_init(|| SchubertCalculus::new(&self.rs))
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// Demazure identity checks exposed by `demazure --check`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DemazureCheck {
    Braid,
    Idempotent,
    W0,
    WordIndependence,
}

impl DemazureCheck {
    pub const ALL: [DemazureCheck; 4] = [
        DemazureCheck::Braid,
        DemazureCheck::Idempotent,
        DemazureCheck::W0,
        DemazureCheck::WordIndependence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DemazureCheck::Braid => "braid",
            DemazureCheck::Idempotent => "idempotent",
            DemazureCheck::W0 => "w0",
            DemazureCheck::WordIndependence => "word-independence",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        DemazureCheck::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| {
                Error::Invalid(format!(
                    "unknown check '{s}' (expected braid, idempotent, w0 or word-independence)"
                ))
            })
    }
}

/// All weights with every coordinate in `[lo, hi]`, lexicographic.
pub fn weight_box(rank: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let mut out = vec![Vec::with_capacity(rank)];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (lo..=hi).map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Weight::new).collect()
}

/// Order of `s_i s_j` read off the Cartan matrix.
fn braid_order(rs: &RootSystem, i: usize, j: usize) -> usize {
    match rs.cartan()[i][j] * rs.cartan()[j][i] {
        0 => 2,
        1 => 3,
        2 => 4,
        3 => 6,
        other => unreachable!("crystallographic product {other}"),
    }
}

fn alternating_word(i: usize, j: usize, len: usize) -> Vec<usize> {
    (0..len).map(|k| if k % 2 == 0 { i } else { j }).collect()
}

/// Runs one Demazure battery; `Ok(None)` on success, `Ok(Some(witness))` on
/// the first failing weight.
pub fn demazure_check(ctx: &SystemContext, check: DemazureCheck, radius: i64) -> Result<Option<String>> {
    let rs = &ctx.rs;
    let rank = rs.rank();
    match check {
        DemazureCheck::Idempotent => {
            for lambda in weight_box(rank, -radius, radius) {
                let f = Character::monomial(lambda.clone());
                for i in 0..rank {
                    let once = demazure_operator(rs, i, &f)?;
                    if demazure_operator(rs, i, &once)? != once {
                        return Ok(Some(format!("D_{0} D_{0} != D_{0} on e^{lambda}", i + 1)));
                    }
                }
            }
        }
        DemazureCheck::Braid => {
            for i in 0..rank {
                for j in i + 1..rank {
                    let m = braid_order(rs, i, j);
                    let left = alternating_word(i, j, m);
                    let right = alternating_word(j, i, m);
                    for lambda in weight_box(rank, -radius, radius) {
                        let f = Character::monomial(lambda.clone());
                        if demazure_word(rs, &left, &f)? != demazure_word(rs, &right, &f)? {
                            return Ok(Some(format!(
                                "braid relation ({}, {}) fails on e^{lambda}",
                                i + 1,
                                j + 1
                            )));
                        }
                    }
                }
            }
        }
        DemazureCheck::WordIndependence => {
            let canonical = longest_element(rs);
            let words = ctx.group.reduced_words(rs, ctx.group.longest_index());
            for lambda in weight_box(rank, -radius, radius) {
                let f = Character::monomial(lambda.clone());
                let reference = demazure_word(rs, canonical.word(), &f)?;
                for word in &words {
                    if demazure_word(rs, word, &f)? != reference {
                        let word: Vec<usize> = word.iter().map(|i| i + 1).collect();
                        return Ok(Some(format!(
                            "word {word:?} differs from the canonical word on e^{lambda}"
                        )));
                    }
                }
            }
        }
        DemazureCheck::W0 => {
            for lambda in weight_box(rank, 0, radius) {
                let via_demazure = weyl_character(rs, &lambda)?;
                let via_alternating = alternating_sum_character(rs, &ctx.group, &lambda)?;
                if via_demazure != via_alternating {
                    return Ok(Some(format!(
                        "D_w0(e^{lambda}) differs from the alternating-sum formula"
                    )));
                }
                if !via_demazure.is_weyl_invariant(rs) {
                    return Ok(Some(format!("character of {lambda} is not W-invariant")));
                }
                let dim = weyl_dimension(rs, &lambda)?;
                if via_demazure.dimension() != dim {
                    return Ok(Some(format!(
                        "coefficient sum {} of {lambda} differs from product formula {dim}",
                        via_demazure.dimension()
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// Bott consistency for a single weight; returns a witness on failure.
pub fn bott_case(ctx: &SystemContext, chi: &Weight) -> Result<Option<String>> {
    let rs = &ctx.rs;
    let report = bott_cohomology(rs, chi)?;
    let euler = euler_character(rs, chi)?;
    let alternating = alternating_sum_character(rs, &ctx.group, chi)?;
    if euler != alternating {
        return Ok(Some(format!(
            "Euler character {euler} != alternating sum {alternating}"
        )));
    }
    if is_acyclic_over_z(rs, chi) && !(report.is_singular_zero() && euler.is_zero()) {
        return Ok(Some("acyclic over Z but cohomology does not vanish".into()));
    }
    if let CohomologyReport::Concentrated {
        degree,
        weyl_element,
        dimension,
        ..
    } = &report
    {
        if ctx.group.length_of(weyl_element.matrix()) != Some(*degree) {
            return Ok(Some(format!("degree {degree} is not the length of {weyl_element}")));
        }
        let signed = if degree % 2 == 0 { dimension.clone() } else { -dimension };
        if signed != euler.dimension() {
            return Ok(Some(format!(
                "signed dimension {signed} != Euler dimension {}",
                euler.dimension()
            )));
        }
    }
    if rs.rank() == 1 && rs.num_positive() == 1 {
        let d = chi.coords()[0];
        let (h0, h1) = cech_cohomology_p1(d);
        let from_bott = match &report {
            CohomologyReport::SingularZero => (0, 0),
            CohomologyReport::Concentrated {
                degree: 0, dimension, ..
            } => (u64::try_from(dimension).unwrap_or(u64::MAX), 0),
            CohomologyReport::Concentrated { dimension, .. } => (0, u64::try_from(dimension).unwrap_or(u64::MAX)),
        };
        if from_bott != (h0, h1) {
            return Ok(Some(format!(
                "Cech (h0, h1) = ({h0}, {h1}) but Bott gives {from_bott:?}"
            )));
        }
    }
    Ok(None)
}

/// `F^n_* O(d)` grid checks on the projective line for one `(p, n)`.
pub fn p1_grid_case(p: u64, n: u32, degree: i64, tamper: bool) -> Result<Option<String>> {
    let pp = PrimePower::new(p, n)?;
    let q = pp.q_i64()?;
    for d in -degree..=degree {
        let split = split_frobenius_pushforward(d, &pp)?;
        let closed = closed_formula(d, q)?;
        if split != closed {
            return Ok(Some(format!(
                "d={d}: residue classes {split} != closed formula {closed}"
            )));
        }
        if split.rank() as i64 != q {
            return Ok(Some(format!("d={d}: rank {} != q = {q}", split.rank())));
        }
        let expected_euler = if tamper { d + 2 } else { d + 1 };
        if split.euler_characteristic() != expected_euler {
            return Ok(Some(format!(
                "d={d}: Euler characteristic {} != expected {expected_euler}",
                split.euler_characteristic()
            )));
        }
        let iterated = iterated_splitting(d, p, n)?;
        if iterated != split {
            return Ok(Some(format!(
                "d={d}: iterated pushforward {iterated} != direct {split}"
            )));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone)]
enum CaseSpec {
    Bott {
        sys: usize,
        chi: Weight,
    },
    Orthogonality {
        sys: usize,
        wall: usize,
        chi: Weight,
        p: u64,
        n: u32,
    },
    Demazure {
        sys: usize,
        check: DemazureCheck,
    },
    Kempf {
        sys: usize,
        lambda: Weight,
        p: u64,
        n: u32,
    },
    Grr {
        sys: usize,
        p: u64,
        n: u32,
    },
    P1Grid {
        p: u64,
        n: u32,
    },
    P1Steinberg {
        p: u64,
        n: u32,
    },
    Steinberg {
        sys: usize,
        p: u64,
        n: u32,
    },
}

fn prime_powers(config: &SuiteConfig) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for &p in &config.primes {
        for &n in &config.exponents {
            out.push((p, n));
        }
    }
    out
}

fn plan(config: &SuiteConfig, contexts: &[SystemContext], suite: Suite) -> Vec<CaseSpec> {
    let mut specs = Vec::new();
    let pps = prime_powers(config);
    match suite {
        Suite::Bott => {
            for (sys, ctx) in contexts.iter().enumerate() {
                let r = if ctx.rs.rank() == 1 {
                    config.bott_radius.max(10)
                } else {
                    config.bott_radius
                };
                for chi in weight_box(ctx.rs.rank(), -r, r) {
                    specs.push(CaseSpec::Bott { sys, chi });
                }
            }
        }
        Suite::Orthogonality => {
            for (sys, ctx) in contexts.iter().enumerate() {
                for wall in 0..ctx.rs.rank() {
                    let chis = generating_wall_weights(&ctx.rs, wall, config.radius, WallFamily::Corollary)
                        .expect("validated index and radius");
                    for chi in chis {
                        for &(p, n) in &pps {
                            specs.push(CaseSpec::Orthogonality {
                                sys,
                                wall,
                                chi: chi.clone(),
                                p,
                                n,
                            });
                        }
                    }
                }
            }
        }
        Suite::Demazure => {
            for sys in 0..contexts.len() {
                for check in DemazureCheck::ALL {
                    specs.push(CaseSpec::Demazure { sys, check });
                }
            }
        }
        Suite::Kempf => {
            for (sys, ctx) in contexts.iter().enumerate() {
                for lambda in weight_box(ctx.rs.rank(), 0, config.kempf_radius) {
                    for &(p, n) in &pps {
                        let q = BigInt::from(p).pow(n);
                        if q <= BigInt::from(config.kempf_max_q) {
                            specs.push(CaseSpec::Kempf {
                                sys,
                                lambda: lambda.clone(),
                                p,
                                n,
                            });
                        }
                    }
                }
            }
        }
        Suite::Grr => {
            for sys in 0..contexts.len() {
                for &(p, n) in &pps {
                    specs.push(CaseSpec::Grr { sys, p, n });
                }
            }
        }
        Suite::P1 => {
            for &(p, n) in &pps {
                specs.push(CaseSpec::P1Grid { p, n });
                specs.push(CaseSpec::P1Steinberg { p, n });
            }
        }
        Suite::Steinberg => {
            for sys in 0..contexts.len() {
                for &(p, n) in &pps {
                    specs.push(CaseSpec::Steinberg { sys, p, n });
                }
            }
        }
    }
    specs
}

fn verdict(result: Result<Option<String>>) -> (bool, Option<String>) {
    match result {
        Ok(None) => (true, None),
        Ok(Some(w)) => (false, Some(w)),
        Err(e) => (false, Some(format!("error: {e}"))),
    }
}

fn bool_verdict(result: Result<bool>, witness: impl FnOnce() -> String) -> Result<Option<String>> {
    result.map(|ok| if ok { None } else { Some(witness()) })
}

fn run_case(config: &SuiteConfig, contexts: &[SystemContext], spec: &CaseSpec) -> CaseRecord {
    let record = |suite: Suite, sys: Option<usize>| CaseRecord {
        suite,
        family: sys.map(|s| contexts[s].rs.spec().family().letter()),
        rank: sys.map(|s| contexts[s].rs.rank()),
        p: None,
        n: None,
        weight: None,
        case: String::new(),
        passed: false,
        witness: None,
    };
    match spec {
        CaseSpec::Bott { sys, chi } => {
            let (passed, witness) = verdict(bott_case(&contexts[*sys], chi));
            CaseRecord {
                weight: Some(chi.coords().to_vec()),
                passed,
                witness,
                ..record(Suite::Bott, Some(*sys))
            }
        }
        CaseSpec::Orthogonality { sys, wall, chi, p, n } => {
            let ctx = &contexts[*sys];
            let result = PrimePower::new(*p, *n)
                .and_then(|pp| orthogonality_check(&ctx.rs, &ctx.group, chi, &pp))
                .map(|r| {
                    let on_wall = r.mu[*wall] + 1 == 0;
                    if r.passed && on_wall {
                        None
                    } else {
                        Some(format!(
                            "mu={:?} acyclic={} euler_zero={} on_wall={on_wall}",
                            r.mu, r.acyclic_predicate, r.euler_is_zero
                        ))
                    }
                });
            let (passed, witness) = verdict(result);
            CaseRecord {
                p: Some(*p),
                n: Some(*n),
                weight: Some(chi.coords().to_vec()),
                case: format!("wall={}", wall + 1),
                passed,
                witness,
                ..record(Suite::Orthogonality, Some(*sys))
            }
        }
        CaseSpec::Demazure { sys, check } => {
            let (passed, witness) = verdict(demazure_check(&contexts[*sys], *check, config.demazure_radius));
            CaseRecord {
                case: format!("check={}", check.name()),
                passed,
                witness,
                ..record(Suite::Demazure, Some(*sys))
            }
        }
        CaseSpec::Kempf { sys, lambda, p, n } => {
            let rs = &contexts[*sys].rs;
            let result = PrimePower::new(*p, *n)
                .and_then(|pp| kempf_vanishing_demo(rs, lambda, &pp))
                .map(|r| {
                    (!r.passed).then(|| {
                        format!(
                            "shifted={} dominant={} identity={} degree={:?}",
                            r.shifted_weight,
                            r.shifted_is_dominant,
                            r.identity_holds,
                            r.cohomology.degree()
                        )
                    })
                });
            let (passed, witness) = verdict(result);
            CaseRecord {
                p: Some(*p),
                n: Some(*n),
                weight: Some(lambda.coords().to_vec()),
                passed,
                witness,
                ..record(Suite::Kempf, Some(*sys))
            }
        }
        CaseSpec::Grr { sys, p, n } => {
            let result = contexts[*sys].schubert().and_then(|sc| {
                let pp = PrimePower::new(*p, *n)?;
                bool_verdict(sc.verify_steinberg_grr(&pp), || {
                    "Chern characters of the pushforwards differ in the Schubert basis".into()
                })
            });
            let (passed, witness) = verdict(result);
            CaseRecord {
                p: Some(*p),
                n: Some(*n),
                passed,
                witness,
                ..record(Suite::Grr, Some(*sys))
            }
        }
        CaseSpec::P1Grid { p, n } => {
            let tamper = config.tamper.contains(&Suite::P1);
            let (passed, witness) = verdict(p1_grid_case(*p, *n, config.p1_degree, tamper));
            CaseRecord {
                p: Some(*p),
                n: Some(*n),
                case: format!("grid=[-{0},{0}]", config.p1_degree),
                passed,
                witness,
                ..record(Suite::P1, None)
            }
        }
        CaseSpec::P1Steinberg { p, n } => {
            let result = PrimePower::new(*p, *n).and_then(|pp| {
                bool_verdict(verify_steinberg_p1(&pp), || {
                    "F^n_* O(q-1) is not trivial or F^n_* O(-1) is not O(-1)^q".into()
                })
            });
            let (passed, witness) = verdict(result);
            CaseRecord {
                p: Some(*p),
                n: Some(*n),
                case: "steinberg".into(),
                passed,
                witness,
                ..record(Suite::P1, None)
            }
        }
        CaseSpec::Steinberg { sys, p, n } => {
            let rs = &contexts[*sys].rs;
            let tamper = config.tamper.contains(&Suite::Steinberg);
            let result = PrimePower::new(*p, *n).and_then(|pp| {
                let weight = rs.rho().checked_scale(pp.q_i64()? - 1)?;
                let dim = weyl_dimension(rs, &weight)?;
                let mut expected: BigInt = pp.q().clone().pow(rs.num_positive() as u32);
                if tamper {
                    expected += BigInt::one();
                }
                Ok((dim != expected).then(|| format!("dim St_q = {dim}, expected q^N = {expected}")))
            });
            let (passed, witness) = verdict(result);
            CaseRecord {
                p: Some(*p),
                n: Some(*n),
                passed,
                witness,
                ..record(Suite::Steinberg, Some(*sys))
            }
        }
    }
}

/// Runs every configured suite. `jobs > 1` evaluates cases on a thread pool;
/// the report is sorted afterwards, so output does not depend on `jobs`.
/// Progress lines go to stderr when `progress` is set.
pub fn run_verify_all(config: &SuiteConfig, jobs: usize, progress: bool) -> Result<RunReport> {
    config.validate()?;
    let start = Instant::now();
    let contexts = config
        .systems
        .iter()
        .map(|&spec| SystemContext::new(spec))
        .collect::<Result<Vec<_>>>()?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Invalid(format!("cannot start thread pool: {e}")))?;

    let mut cases = Vec::new();
    for suite in Suite::ALL {
        if !config.suites.contains(&suite) {
            continue;
        }
        let specs = plan(config, &contexts, suite);
        if progress {
            eprintln!("[{suite}] {} cases", specs.len());
        }
        let suite_start = Instant::now();
        let records: Vec<CaseRecord> = if jobs > 1 {
            pool.install(|| specs.par_iter().map(|s| run_case(config, &contexts, s)).collect())
        } else {
            specs.iter().map(|s| run_case(config, &contexts, s)).collect()
        };
        if progress {
            let failed = records.iter().filter(|r| !r.passed).count();
            eprintln!(
                "[{suite}] done in {:.2}s, {failed} failed",
                suite_start.elapsed().as_secs_f64()
            );
        }
        cases.extend(records);
    }
    Ok(RunReport::new(config.clone(), cases, start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_box_enumeration() {
        let b = weight_box(2, -1, 1);
        assert_eq!(b.len(), 9);
        assert_eq!(b[0], Weight::from([-1, -1]));
        assert_eq!(b[8], Weight::from([1, 1]));
        assert_eq!(weight_box(3, 0, 2).len(), 27);
    }

    #[test]
    fn braid_orders() {
        let g2 = RootSystem::of(crate::rootsys::Family::G, 2).unwrap();
        assert_eq!(braid_order(&g2, 0, 1), 6);
        let b3 = RootSystem::of(crate::rootsys::Family::B, 3).unwrap();
        assert_eq!(braid_order(&b3, 0, 1), 3);
        assert_eq!(braid_order(&b3, 1, 2), 4);
        assert_eq!(braid_order(&b3, 0, 2), 2);
    }

    #[test]
    fn small_run_passes_and_is_sorted() {
        let config =
            SuiteConfig::parse("systems = A1,A2\nprimes = 2\nexponents = 1\nradius = 2\nbott_radius = 2").unwrap();
        let report = run_verify_all(&config, 1, false).unwrap();
        assert!(report.all_passed(), "{}", report.to_table());
        let parallel = run_verify_all(&config, 4, false).unwrap();
        assert_eq!(report.to_json(), parallel.to_json());
    }

    #[test]
    fn tampered_run_fails() {
        let config =
            SuiteConfig::parse("systems = A1\nprimes = 2\nexponents = 1\nsuites = steinberg,p1\ntamper = steinberg,p1")
                .unwrap();
        let report = run_verify_all(&config, 1, false).unwrap();
        assert_eq!(report.totals.failed, 2);
        assert!(report.failures().all(|c| c.witness.is_some()));
    }
}
