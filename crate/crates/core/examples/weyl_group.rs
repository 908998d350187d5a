//! Enumerating a Weyl group, reduced words of w0 and the dot action.
//!
//! ```bash
//! cargo run --example weyl_group
//! ```

use steinberg_lab::rootsys::{Family, RootSystem, Weight};
use steinberg_lab::weyl::{dot_action, to_dominant, WeylGroup, DEFAULT_SIZE_GUARD};

fn main() -> steinberg_lab::Result<()> {
    let b2 = RootSystem::of(Family::B, 2)?;
    let group = WeylGroup::enumerate(&b2, DEFAULT_SIZE_GUARD)?;
    println!("|W(B2)| = {}", group.order());
    for w in group.elements() {
        println!("  {:<12} length {} sign {:+}", w.to_string(), w.length(), w.sign());
    }

    let words = group.reduced_words(&b2, group.longest_index());
    println!("reduced words of w0: {words:?}");

    let w0 = group.longest();
    println!("w0(rho) = {}", w0.apply(b2.rho()));

    let lambda = Weight::from([1, 0]);
    for w in group.elements() {
        println!("  {} . {lambda} = {}", w, dot_action(&b2, w, &lambda));
    }

    let partner = to_dominant(&b2, &Weight::from([-4, 1]))?;
    println!(
        "(-4,1) + rho is conjugate to the dominant {} + rho via {} ({} steps)",
        partner.dominant, partner.element, partner.steps
    );
    Ok(())
}
