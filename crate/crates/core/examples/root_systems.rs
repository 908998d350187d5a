//! Cartan data, positive roots and rho for every supported family.
//!
//! ```bash
//! cargo run --example root_systems
//! ```

use steinberg_lab::rootsys::{classical_weyl_order, pairing, Family, RootSystem};

fn main() -> steinberg_lab::Result<()> {
    let g2 = RootSystem::of(Family::G, 2)?;
    println!("G2 Cartan matrix: {:?}", g2.cartan());
    for root in g2.positive_roots() {
        println!(
            "  {:?} (height {}) = {} in fundamental weights, coroot {:?}",
            root.simple_coords,
            root.height(),
            root.weight,
            root.coroot.expansion()
        );
    }

    println!();
    println!("{:<4} {:>4} {:>10}  rho", "type", "N", "|W|");
    for (family, rank) in [
        (Family::A, 3),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
        (Family::F, 4),
        (Family::G, 2),
    ] {
        let rs = RootSystem::of(family, rank)?;
        // rho pairs to 1 with every simple coroot
        for i in 0..rank {
            assert_eq!(pairing(rs.rho(), &rs.simple_coroot(i))?, 1);
        }
        println!(
            "{:<4} {:>4} {:>10}  {}",
            rs.label(),
            rs.num_positive(),
            classical_weyl_order(rs.spec()),
            rs.rho()
        );
    }

    // E is out of scope and rejected up front
    println!();
    println!(
        "E6: {}",
        "E6".parse::<steinberg_lab::rootsys::RootSystemSpec>().unwrap_err()
    );
    Ok(())
}
