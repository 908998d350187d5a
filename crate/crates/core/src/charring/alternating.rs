//! Division-based routes to the same characters, kept separate from the
//! string formulas so each can check the other.

use num_bigint::BigInt;

use super::Character;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::WeylGroup;

/// `sum_w sgn(w) e^{w mu}` over the whole group.
pub fn alternating_numerator(rs: &RootSystem, group: &WeylGroup, mu: &Weight) -> Result<Character> {
    rs.check_weight(mu)?;
    let mut out = Character::zero(rs.rank());
    for w in group.elements() {
        out.add_term(w.apply(mu), BigInt::from(w.sign()));
    }
    Ok(out)
}

/// Weyl's formula `A(lambda + rho) / A(rho)` by exact Laurent division.
///
/// For dominant `lambda` this is the irreducible character; for arbitrary
/// `lambda` it is the Euler characteristic of `L_lambda`.
pub fn alternating_sum_character(rs: &RootSystem, group: &WeylGroup, lambda: &Weight) -> Result<Character> {
    let numerator = alternating_numerator(rs, group, &(lambda + rs.rho()))?;
    let denominator = alternating_numerator(rs, group, rs.rho())?;
    numerator.div_exact(&denominator)
}

/// `(f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i})` by literal division.
pub fn demazure_by_division(rs: &RootSystem, i: usize, f: &Character) -> Result<Character> {
    rs.check_index(i)?;
    if f.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            found: f.rank(),
        });
    }
    let minus_alpha = -rs.simple_root(i);
    let numerator = f - &f.reflect(rs, i).shifted(&minus_alpha);
    let denominator = &Character::one(rs.rank()) - &Character::monomial(minus_alpha);
    numerator.div_exact(&denominator)
}
