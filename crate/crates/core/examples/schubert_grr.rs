//! Schubert calculus on H^*(G/B, Q), Hirzebruch-Riemann-Roch and the
//! Chern-character shadow of F^n_* L_{(q-1) rho} = St_q (x) O.
//!
//! ```bash
//! cargo run --example schubert_grr
//! ```

use steinberg_lab::borelring::{weight_class, PolyClass, SchubertCalculus};
use steinberg_lab::charring::{weyl_dimension, PrimePower};
use steinberg_lab::rootsys::{Family, RootSystem, Weight};

fn main() -> steinberg_lab::Result<()> {
    let a2 = RootSystem::of(Family::A, 2)?;
    let sc = SchubertCalculus::new(&a2)?;
    for (k, w) in sc.group().elements().iter().enumerate() {
        println!("S_{:<10} = {}", w.to_string(), sc.schubert_class(k));
    }
    println!("todd = {}", sc.todd_class());

    let x = weight_class(&Weight::from([1, 0]));
    for (k, c) in &sc.expand(&x)?.0 {
        println!("x_(1,0) has coefficient {c} on S_{}", sc.group().element(*k));
    }

    let b2 = RootSystem::of(Family::B, 2)?;
    let sc = SchubertCalculus::new(&b2)?;
    for lambda in [[0, 0], [1, 0], [0, 1], [2, 3]] {
        let lambda = Weight::from(lambda);
        println!(
            "B2 {lambda}: integral ch td = {}, Weyl dimension = {}",
            sc.hrr_euler_characteristic(&lambda)?,
            weyl_dimension(&b2, &lambda)?
        );
    }
    for (p, n) in [(2, 1), (3, 1), (2, 2)] {
        let pp = PrimePower::new(p, n)?;
        let unit = sc.frobenius_pushforward_ch(&PolyClass::one(2), pp.q())?;
        println!(
            "q={}: ch F_* O has rank {}, Steinberg identity holds: {}",
            pp.q(),
            unit.constant_term(),
            sc.verify_steinberg_grr(&pp)?
        );
    }
    Ok(())
}
