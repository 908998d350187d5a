//! The Steinberg module St_q = V((q-1) rho): its dimension q^N and the
//! character identity behind Kempf vanishing.
//!
//! ```bash
//! cargo run --example steinberg_module
//! ```

use num_bigint::BigInt;
use num_traits::Pow;
use steinberg_lab::charring::{kempf_identity_check, steinberg_character, weyl_dimension, PrimePower};
use steinberg_lab::cohomology::kempf_vanishing_demo;
use steinberg_lab::rootsys::{Family, RootSystem, Weight};

fn main() -> steinberg_lab::Result<()> {
    for (family, rank) in [
        (Family::A, 1),
        (Family::A, 2),
        (Family::B, 2),
        (Family::G, 2),
        (Family::A, 3),
    ] {
        let rs = RootSystem::of(family, rank)?;
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)] {
            let pp = PrimePower::new(p, n)?;
            let weight = rs.rho().checked_scale(pp.q_i64()? - 1)?;
            let dim = weyl_dimension(&rs, &weight)?;
            let expected: BigInt = pp.q().clone().pow(rs.num_positive() as u32);
            println!("{} q={:<2} dim St_q = {dim:<12} q^N = {expected}", rs.label(), pp.q());
            assert_eq!(dim, expected);
        }
    }

    let a2 = RootSystem::of(Family::A, 2)?;
    let pp = PrimePower::new(2, 1)?;
    println!("\nch St_2 for A2 = {}", steinberg_character(&a2, &pp)?);

    let lambda = Weight::from([1, 1]);
    println!(
        "chi(2 lambda + rho) = chi(lambda)^[2] * ch St_2 for lambda = {lambda}: {}",
        kempf_identity_check(&a2, &lambda, &pp)?
    );
    let report = kempf_vanishing_demo(&a2, &lambda, &pp)?;
    println!(
        "shifted weight {} dominant: {}",
        report.shifted_weight, report.shifted_is_dominant
    );
    Ok(())
}
