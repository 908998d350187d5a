use std::collections::BTreeSet;

use num_bigint::BigInt;

use steinberg_lab::charring::{euler_character, PrimePower};
use steinberg_lab::cli::{weight_box, SystemContext};
use steinberg_lab::cohomology::{
    bott_cohomology, generating_wall_weights, hom_complex_dims, is_acyclic_over_z, orthogonality_check, rho_twist,
    structure_sheaf_is_exceptional, CohomologyReport, WallFamily,
};
use steinberg_lab::rootsys::{RootSystem, Weight};

fn rs(label: &str) -> RootSystem {
    RootSystem::new(label.parse().unwrap())
}

#[test]
fn simple_wall_acyclicity_implies_vanishing() {
    for label in ["A1", "A2", "B2", "G2", "A3"] {
        let rs = rs(label);
        let mut acyclic = 0;
        for chi in weight_box(rs.rank(), -4, 4) {
            if is_acyclic_over_z(&rs, &chi) {
                acyclic += 1;
                assert!(bott_cohomology(&rs, &chi).unwrap().is_singular_zero(), "{label} {chi}");
                assert!(euler_character(&rs, &chi).unwrap().is_zero(), "{label} {chi}");
            }
        }
        assert!(acyclic > 0, "{label}");
    }
}

#[test]
fn singular_but_not_acyclic_over_z() {
    let a2 = rs("A2");
    let chi = Weight::from([-3, 1]);
    assert!(bott_cohomology(&a2, &chi).unwrap().is_singular_zero());
    assert!(!is_acyclic_over_z(&a2, &chi));
    assert!(!a2.is_regular_after_rho_shift(&chi));
}

#[test]
fn orthogonality_fixtures() {
    let a2 = SystemContext::new("A2".parse().unwrap()).unwrap();
    let r = orthogonality_check(
        &a2.rs,
        &a2.group,
        &Weight::from([1, 0]),
        &PrimePower::new(2, 1).unwrap(),
    )
    .unwrap();
    assert_eq!(r.mu, vec![-3, -1]);
    assert_eq!(r.wall_index, 1);
    assert!(r.passed);

    let b2 = SystemContext::new("B2".parse().unwrap()).unwrap();
    let r = orthogonality_check(
        &b2.rs,
        &b2.group,
        &Weight::from([0, 3]),
        &PrimePower::new(3, 2).unwrap(),
    )
    .unwrap();
    assert_eq!(r.mu, vec![-1, -28]);
    assert!(r.passed);

    assert!(orthogonality_check(
        &b2.rs,
        &b2.group,
        &Weight::from([1, 1]),
        &PrimePower::new(3, 1).unwrap()
    )
    .is_err());
}

#[test]
fn rho_twist_is_a_bijection_between_wall_families() {
    for label in ["A1", "A2", "B2", "G2", "A3"] {
        let rs = rs(label);
        for i in 0..rs.rank() {
            for radius in 0..=5 {
                let corollary = generating_wall_weights(&rs, i, radius, WallFamily::Corollary).unwrap();
                let image: BTreeSet<Weight> = corollary.iter().map(|chi| rho_twist(&rs, chi)).collect();
                assert_eq!(image.len(), corollary.len(), "{label} injective");
                // the image is exactly the lemma family one size up, restricted to
                // weights whose rho-shift stays in the original box
                let expected: BTreeSet<Weight> = generating_wall_weights(&rs, i, radius + 1, WallFamily::Lemma)
                    .unwrap()
                    .into_iter()
                    .filter(|mu| (mu + rs.rho()).coords().iter().all(|c| c.abs() <= radius))
                    .collect();
                assert_eq!(image, expected, "{label} wall {i} radius {radius}");
                for mu in &image {
                    assert_eq!(mu.coords()[i] + rs.rho().coords()[i], 0);
                    assert!(bott_cohomology(&rs, mu).unwrap().is_singular_zero());
                    let back = mu + rs.rho();
                    assert!(corollary.contains(&back));
                }
            }
        }
    }
}

#[test]
fn exceptional_structure_sheaf() {
    for label in ["A1", "A2", "A3", "B2", "G2", "C3"] {
        assert!(structure_sheaf_is_exceptional(&rs(label)).unwrap(), "{label}");
    }
}

#[test]
fn hom_complex_serre_duality_shape() {
    // Ext^*(L_chi, L_mu) = H^*(L_{mu - chi}); the canonical bundle is L_{-2 rho}
    let b2 = rs("B2");
    let k = Weight::from([-2, -2]);
    let dims = hom_complex_dims(&b2, &b2.zero_weight(), &k).unwrap();
    assert_eq!(dims.len(), 1);
    assert_eq!(dims[&4], BigInt::from(1));
}

#[test]
fn bott_examples_in_rank_two() {
    let g2 = rs("G2");
    match bott_cohomology(&g2, &Weight::from([-2, -2])).unwrap() {
        CohomologyReport::Concentrated { degree, dimension, .. } => {
            assert_eq!(degree, 6);
            assert_eq!(dimension, BigInt::from(1));
        }
        other => panic!("{other:?}"),
    }
    let a2 = rs("A2");
    match bott_cohomology(&a2, &Weight::from([-3, 0])).unwrap() {
        CohomologyReport::Concentrated {
            degree, highest_weight, ..
        } => {
            assert_eq!(degree, 2);
            assert_eq!(highest_weight, Weight::from([0, 0]));
        }
        other => panic!("{other:?}"),
    }
}
