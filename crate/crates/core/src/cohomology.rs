//! Cohomology of line bundles `L_chi` on `G/B`.
//!
//! [`bott_cohomology`] and [`hom_complex_dims`] are characteristic-0
//! computations (Bott's theorem). In positive characteristic the only
//! statements made here are Euler characteristics, which do not depend on the
//! characteristic, and the simple-wall acyclicity of [`is_acyclic_over_z`],
//! which holds over the integers.
//!
//! Two singularity predicates coexist and must not be confused:
//! `RootSystem::is_regular_after_rho_shift` looks at every positive coroot,
//! while [`is_acyclic_over_z`] only looks at simple coroots.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::charring::{alternating_numerator, euler_character, kempf_identity_check, weyl_dimension, PrimePower};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{to_dominant, WeylElement, WeylGroup};

/// `H^*(G/B, L_chi)` in characteristic 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyReport {
    /// `chi + rho` is singular: all cohomology vanishes.
    SingularZero,
    /// Cohomology is the irreducible module of highest weight `w . chi`,
    /// sitting in degree `l(w)`.
    Concentrated {
        degree: usize,
        weyl_element: WeylElement,
        highest_weight: Weight,
        dimension: BigInt,
    },
}

impl CohomologyReport {
    pub fn is_singular_zero(&self) -> bool {
        matches!(self, CohomologyReport::SingularZero)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            CohomologyReport::SingularZero => None,
            CohomologyReport::Concentrated { degree, .. } => Some(*degree),
        }
    }

    pub fn dimension(&self) -> Option<&BigInt> {
        match self {
            CohomologyReport::SingularZero => None,
            CohomologyReport::Concentrated { dimension, .. } => Some(dimension),
        }
    }
}

pub fn bott_cohomology(rs: &RootSystem, chi: &Weight) -> Result<CohomologyReport> {
    rs.check_weight(chi)?;
    if !rs.is_regular_after_rho_shift(chi) {
        return Ok(CohomologyReport::SingularZero);
    }
    let partner = to_dominant(rs, chi)?;
    let dimension = weyl_dimension(rs, &partner.dominant)?;
    Ok(CohomologyReport::Concentrated {
        degree: partner.steps,
        weyl_element: partner.element,
        highest_weight: partner.dominant,
        dimension,
    })
}

/// `<chi + rho, alpha_i^vee> = 0` for some simple coroot.
///
/// Weaker than singularity: `chi + rho` may sit on a non-simple wall only.
pub fn is_acyclic_over_z(rs: &RootSystem, chi: &Weight) -> bool {
    chi.rank() == rs.rank() && chi.coords().contains(&-1)
}

/// Dimensions of `Ext^*(L_chi, L_mu) = H^*(G/B, L_{mu - chi})`, characteristic 0.
///
/// Empty when the complex is acyclic, otherwise a single `degree -> dim` entry.
pub fn hom_complex_dims(rs: &RootSystem, chi: &Weight, mu: &Weight) -> Result<BTreeMap<usize, BigInt>> {
    rs.check_weight(chi)?;
    rs.check_weight(mu)?;
    let mut out = BTreeMap::new();
    if let CohomologyReport::Concentrated { degree, dimension, .. } = bott_cohomology(rs, &(mu - chi))? {
        out.insert(degree, dimension);
    }
    Ok(out)
}

/// Which wall a generating set lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WallFamily {
    /// `<chi + rho, alpha_i^vee> = 0`: generators of the right orthogonal of `O`.
    Lemma,
    /// `<chi, alpha_i^vee> = 0`: generators of the left orthogonal of `L_{-rho}`.
    Corollary,
}

/// All weights in the box `[-radius, radius]^rank` on wall `i` of `family`,
/// in lexicographic order.
pub fn generating_wall_weights(rs: &RootSystem, i: usize, radius: i64, family: WallFamily) -> Result<Vec<Weight>> {
    rs.check_index(i)?;
    if radius < 0 {
        return Err(Error::Invalid(format!("radius must be >= 0, got {radius}")));
    }
    let fixed = match family {
        WallFamily::Lemma => -1,
        WallFamily::Corollary => 0,
    };
    if fixed < -radius {
        return Ok(Vec::new());
    }
    let free = rs.rank() - 1;
    let side = (2 * radius + 1) as usize;
    let total = side.pow(free as u32);
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut coords = vec![0i64; rs.rank()];
        for k in (0..rs.rank()).rev() {
            if k == i {
                coords[k] = fixed;
            } else {
                coords[k] = (code % side) as i64 - radius;
                code /= side;
            }
        }
        out.push(Weight::new(coords));
    }
    Ok(out)
}

/// `chi -> chi - rho`, carrying the corollary family into the lemma family.
pub fn rho_twist(rs: &RootSystem, chi: &Weight) -> Weight {
    chi - rs.rho()
}

/// Outcome of checking `Hom^*(L_chi, F^n_* L_{-rho}) = H^*(L_{-q chi - rho}) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    /// 0-based index of the first simple wall containing `chi`.
    pub wall_index: usize,
    pub chi: Vec<i64>,
    /// `-q chi - rho`
    pub mu: Vec<i64>,
    pub acyclic_predicate: bool,
    pub euler_is_zero: bool,
    pub passed: bool,
}

/// Checks one generator `chi` of the left orthogonal of `L_{-rho}`.
///
/// `euler_is_zero` requires both the Bott route (`euler_character`) and the
/// alternating sum `sum_w sgn(w) e^{w(mu + rho)}` over `group` to vanish.
pub fn orthogonality_check(
    rs: &RootSystem,
    group: &WeylGroup,
    chi: &Weight,
    pp: &PrimePower,
) -> Result<OrthogonalityReport> {
    rs.check_weight(chi)?;
    let wall_index = chi
        .coords()
        .iter()
        .position(|&c| c == 0)
        .ok_or_else(|| Error::NotOnWall(chi.to_string()))?;
    let q = pp.q_i64()?;
    let mu = &chi.checked_scale(-q)? - rs.rho();
    let acyclic_predicate = is_acyclic_over_z(rs, &mu);
    let euler_is_zero =
        euler_character(rs, &mu)?.is_zero() && alternating_numerator(rs, group, &(&mu + rs.rho()))?.is_zero();
    Ok(OrthogonalityReport {
        wall_index,
        chi: chi.coords().to_vec(),
        mu: mu.coords().to_vec(),
        acyclic_predicate,
        euler_is_zero,
        passed: acyclic_predicate && euler_is_zero,
    })
}

/// Character-level walk through the Kempf vanishing argument for dominant `chi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempfReport {
    pub chi: Weight,
    pub q: BigInt,
    /// `q(chi + rho) - rho = q chi + (q-1) rho`
    pub shifted_weight: Weight,
    pub shifted_is_dominant: bool,
    pub identity_holds: bool,
    pub cohomology: CohomologyReport,
    pub passed: bool,
}

pub fn kempf_vanishing_demo(rs: &RootSystem, chi: &Weight, pp: &PrimePower) -> Result<KempfReport> {
    rs.check_weight(chi)?;
    if !rs.is_dominant(chi) {
        return Err(Error::NotDominant(chi.to_string()));
    }
    let q = pp.q_i64()?;
    let shifted_weight = &(chi + rs.rho()).checked_scale(q)? - rs.rho();
    let shifted_is_dominant = rs.is_dominant(&shifted_weight);
    let identity_holds = kempf_identity_check(rs, chi, pp)?;
    let cohomology = bott_cohomology(rs, chi)?;
    let passed = shifted_is_dominant && identity_holds && cohomology.degree() == Some(0);
    Ok(KempfReport {
        chi: chi.clone(),
        q: pp.q().clone(),
        shifted_weight,
        shifted_is_dominant,
        identity_holds,
        cohomology,
        passed,
    })
}

/// `H^*(G/B, O) = k`: the trivial bundle has cohomology `{0: 1}`.
pub fn structure_sheaf_is_exceptional(rs: &RootSystem) -> Result<bool> {
    let dims = hom_complex_dims(rs, &rs.zero_weight(), &rs.zero_weight())?;
    Ok(dims.len() == 1 && dims.get(&0) == Some(&BigInt::one()))
}

/// Čech cohomology `(h^0, h^1)` of `O(d)` on `P^1` for the cover
/// `{x != 0}, {y != 0}`, counted from Laurent monomials `x^a y^b` with
/// `a + b = d`: sections over both opens need `a, b >= 0`, and `H^1` is spanned
/// by the monomials with `a, b < 0`. Independent of Bott's theorem.
pub fn cech_cohomology_p1(d: i64) -> (u64, u64) {
    let mut h0 = 0;
    let mut h1 = 0;
    for a in -d.abs() - 1..=d.abs() + 1 {
        let b = d - a;
        if a >= 0 && b >= 0 {
            h0 += 1;
        }
        if a < 0 && b < 0 {
            h1 += 1;
        }
    }
    (h0, h1)
}
