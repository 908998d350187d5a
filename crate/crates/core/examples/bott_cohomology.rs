//! Line-bundle cohomology on G/B via Bott's theorem, and the difference
//! between full singularity and acyclicity over Z.
//!
//! ```bash
//! cargo run --example bott_cohomology
//! ```

use steinberg_lab::cohomology::{
    bott_cohomology, cech_cohomology_p1, hom_complex_dims, is_acyclic_over_z, CohomologyReport,
};
use steinberg_lab::rootsys::{Family, RootSystem, Weight};

fn describe(report: &CohomologyReport) -> String {
    match report {
        CohomologyReport::SingularZero => "0".into(),
        CohomologyReport::Concentrated {
            degree,
            highest_weight,
            dimension,
            ..
        } => format!("H^{degree} = V({highest_weight}) of dim {dimension}"),
    }
}

fn main() -> steinberg_lab::Result<()> {
    let a1 = RootSystem::of(Family::A, 1)?;
    println!("P^1:");
    for d in -4..=3 {
        let report = bott_cohomology(&a1, &Weight::from([d]))?;
        println!(
            "  O({d:>2}): {:<28} Cech (h0, h1) = {:?}",
            describe(&report),
            cech_cohomology_p1(d)
        );
    }

    let a2 = RootSystem::of(Family::A, 2)?;
    println!("\nA2:");
    for chi in [[0, 0], [-2, 1], [-1, 3], [-3, 1], [-2, -2], [-3, -3]] {
        let chi = Weight::from(chi);
        println!(
            "  {:>8}: {:<28} acyclic over Z: {}",
            chi.to_string(),
            describe(&bott_cohomology(&a2, &chi)?),
            is_acyclic_over_z(&a2, &chi)
        );
    }

    let b2 = RootSystem::of(Family::B, 2)?;
    let chi = Weight::from([1, 0]);
    let mu = Weight::from([-1, 2]);
    println!(
        "\nB2 Ext^*(L{chi}, L{mu}) dimensions: {:?}",
        hom_complex_dims(&b2, &chi, &mu)?
    );
    Ok(())
}
