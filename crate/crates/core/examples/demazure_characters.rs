//! Weyl characters from Demazure operators, checked against the
//! alternating-sum formula.
//!
//! ```bash
//! cargo run --example demazure_characters
//! ```

use steinberg_lab::charring::{
    alternating_sum_character, demazure_operator, demazure_word, weyl_character, weyl_dimension, Character,
};
use steinberg_lab::rootsys::{Family, RootSystem, Weight};
use steinberg_lab::weyl::{WeylGroup, DEFAULT_SIZE_GUARD};

fn main() -> steinberg_lab::Result<()> {
    let a2 = RootSystem::of(Family::A, 2)?;
    let e = Character::monomial(Weight::from([2, 0]));
    let d1 = demazure_operator(&a2, 0, &e)?;
    println!("D_1 e^(2,0) = {d1}");
    println!("D_1 D_1 e^(2,0) = {}", demazure_operator(&a2, 0, &d1)?);

    let left = demazure_word(&a2, &[0, 1, 0], &e)?;
    let right = demazure_word(&a2, &[1, 0, 1], &e)?;
    println!("braid relation on e^(2,0): {}", left == right);

    let g2 = RootSystem::of(Family::G, 2)?;
    let group = WeylGroup::enumerate(&g2, DEFAULT_SIZE_GUARD)?;
    for lambda in [[1, 0], [0, 1], [1, 1]] {
        let lambda = Weight::from(lambda);
        let chi = weyl_character(&g2, &lambda)?;
        let oracle = alternating_sum_character(&g2, &group, &lambda)?;
        println!(
            "G2 {lambda}: {} terms, dim {} (product formula {}), matches alternating sum: {}",
            chi.len(),
            chi.dimension(),
            weyl_dimension(&g2, &lambda)?,
            chi == oracle
        );
    }
    println!("G2 (1,0): {}", weyl_character(&g2, &Weight::from([1, 0]))?);
    Ok(())
}
