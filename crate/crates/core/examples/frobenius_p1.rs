//! Splitting F^n_* O(d) on the projective line into line bundles.
//!
//! ```bash
//! cargo run --example frobenius_p1
//! ```

use steinberg_lab::charring::PrimePower;
use steinberg_lab::frobp1::{closed_formula, iterated_splitting, split_frobenius_pushforward, verify_steinberg_p1};

fn main() -> steinberg_lab::Result<()> {
    let pp = PrimePower::new(3, 1)?;
    for d in -4..=5 {
        let s = split_frobenius_pushforward(d, &pp)?;
        assert_eq!(s, closed_formula(d, 3)?);
        println!("F_* O({d:>2}) = {s}");
    }

    let s = iterated_splitting(7, 2, 3)?;
    println!("\nF^3_* O(7) for p = 2, applying F_* three times: {s}");

    for p in [2, 3, 5, 7] {
        for n in [1, 2] {
            let pp = PrimePower::new(p, n)?;
            println!(
                "q = {:<2}: F^n_* O(q-1) trivial and F^n_* O(-1) = O(-1)^q: {}",
                pp.q(),
                verify_steinberg_p1(&pp)?
            );
        }
    }
    Ok(())
}
