//! The wall-weight battery: for chi on a simple wall, L_{-q chi - rho} is
//! acyclic, so Hom^*(L_chi, F^n_* L_{-rho}) vanishes.
//!
//! ```bash
//! cargo run --example orthogonality
//! ```

use steinberg_lab::charring::PrimePower;
use steinberg_lab::cohomology::{generating_wall_weights, orthogonality_check, rho_twist, WallFamily};
use steinberg_lab::rootsys::{Family, RootSystem, Weight};
use steinberg_lab::weyl::{WeylGroup, DEFAULT_SIZE_GUARD};

fn main() -> steinberg_lab::Result<()> {
    let a2 = RootSystem::of(Family::A, 2)?;
    let group = WeylGroup::enumerate(&a2, DEFAULT_SIZE_GUARD)?;
    let pp = PrimePower::new(2, 1)?;
    let r = orthogonality_check(&a2, &group, &Weight::from([1, 0]), &pp)?;
    println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));

    let mut total = 0;
    let mut passed = 0;
    for (family, rank) in [
        (Family::A, 1),
        (Family::A, 2),
        (Family::B, 2),
        (Family::G, 2),
        (Family::A, 3),
    ] {
        let rs = RootSystem::of(family, rank)?;
        let group = WeylGroup::enumerate(&rs, DEFAULT_SIZE_GUARD)?;
        for i in 0..rank {
            for chi in generating_wall_weights(&rs, i, 3, WallFamily::Corollary)? {
                for (p, n) in [(2, 1), (3, 1), (2, 2)] {
                    let report = orthogonality_check(&rs, &group, &chi, &PrimePower::new(p, n)?)?;
                    total += 1;
                    passed += usize::from(report.passed);
                }
            }
        }
    }
    println!("{passed}/{total} wall weights with |coords| <= 3 pass");

    let chi = Weight::from([2, 0]);
    println!("rho twist carries {chi} to {}", rho_twist(&a2, &chi));
    Ok(())
}
