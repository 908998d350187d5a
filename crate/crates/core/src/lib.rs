//! Exact calculus for root systems, Weyl groups, characters and the
//! cohomology of line bundles on flag varieties `G/B`, together with
//! verification batteries for the Frobenius pushforward of the Steinberg
//! line bundle `F^n_* L_{(q-1)rho} = St_q (x) O`.
//!
//! Every computation is exact: lattice coordinates are checked machine
//! integers, while coefficients, dimensions and rational classes use
//! arbitrary-precision arithmetic.
//!
//! | module | contents |
//! |--------|----------|
//! | [`rootsys`] | Cartan data, positive roots and coroots, weights |
//! | [`weyl`] | Weyl group enumeration, reduced words, dot action |
//! | [`charring`] | Laurent characters, Demazure operators, Weyl characters |
//! | [`cohomology`] | Bott's theorem, acyclicity over Z, orthogonality battery |
//! | [`borelring`] | Schubert calculus in `H*(G/B, Q)`, Chern characters, GRR |
//! | [`frobp1`] | splitting of `F^n_* O(d)` on the projective line |
//! | [`cli`] | verification suites and the command-line front end |

pub mod borelring;
pub mod charring;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod frobp1;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
