//! Character calculus on the weight lattice: Demazure operators, Weyl
//! characters and dimensions, Frobenius twists and Steinberg characters.

mod alternating;
mod character;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive};

pub use alternating::{alternating_numerator, alternating_sum_character, demazure_by_division};
pub use character::{Character, PRODUCT_TERM_GUARD};

use crate::error::{Error, Result};
use crate::rootsys::{pairing, RootSystem, Weight};
use crate::weyl::{longest_element, to_dominant};

/// `q = p^n` with `p` prime and `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    n: u32,
    q: BigInt,
}

impl PrimePower {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::Invalid("exponent n must be at least 1".into()));
        }
        Ok(PrimePower {
            p,
            n,
            q: Pow::pow(BigInt::from(p), n),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// `q` as a machine integer, for scaling lattice coordinates.
    pub fn q_i64(&self) -> Result<i64> {
        self.q.to_i64().ok_or(Error::Overflow("q = p^n"))
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}={}", self.p, self.n, self.q)
    }
}

/// Trial division; inputs are desk-scale.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The Demazure operator `D_i f = (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i})`,
/// evaluated term by term with the closed string formula.
pub fn demazure_operator(rs: &RootSystem, i: usize, f: &Character) -> Result<Character> {
    rs.check_index(i)?;
    if f.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            found: f.rank(),
        });
    }
    let alpha = rs.simple_root(i);
    let mut out = Character::zero(rs.rank());
    for (lambda, c) in f.terms() {
        let m = lambda.coords()[i];
        if m >= 0 {
            for k in 0..=m {
                out.add_term(lambda.add_scaled(alpha, -k), c.clone());
            }
        } else {
            // m = -1 contributes nothing.
            for k in 1..=(-m - 1) {
                out.add_term(lambda.add_scaled(alpha, k), -c);
            }
        }
    }
    Ok(out)
}

/// Applies `D_{word[0]}` first, then `D_{word[1]}`, and so on.
pub fn demazure_word(rs: &RootSystem, word: &[usize], f: &Character) -> Result<Character> {
    word.iter()
        .try_fold(f.clone(), |acc, &i| demazure_operator(rs, i, &acc))
}

/// Character of the irreducible module of dominant highest weight `lambda`,
/// computed as `D_{w0}(e^lambda)` along the canonical reduced word of `w0`.
pub fn weyl_character(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    rs.check_weight(lambda)?;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let w0 = longest_element(rs);
    demazure_word(rs, w0.word(), &Character::monomial(lambda.clone()))
}

/// Euler characteristic `sum_i (-1)^i ch H^i(G/B, L_lambda)` in characteristic 0.
pub fn euler_character(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    rs.check_weight(lambda)?;
    if !rs.is_regular_after_rho_shift(lambda) {
        return Ok(Character::zero(rs.rank()));
    }
    let partner = to_dominant(rs, lambda)?;
    let chi = weyl_character(rs, &partner.dominant)?;
    Ok(chi.scaled(&BigInt::from(partner.element.sign())))
}

/// Weyl's product formula over positive coroots.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    rs.check_weight(lambda)?;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let shifted = lambda + rs.rho();
    let mut product = BigRational::one();
    for root in rs.positive_roots() {
        let num = pairing(&shifted, &root.coroot)?;
        let den = pairing(rs.rho(), &root.coroot)?;
        product *= BigRational::new(num.into(), den.into());
    }
    if !product.is_integer() {
        return Err(Error::Internal(format!(
            "Weyl dimension of {lambda} is not an integer: {product}"
        )));
    }
    Ok(product.to_integer())
}

/// Pullback along Frobenius: every exponent is multiplied by `q`.
pub fn frobenius_twist(f: &Character, q: &BigInt) -> Result<Character> {
    if q < &BigInt::one() {
        return Err(Error::Invalid(format!("twist factor must be >= 1, got {q}")));
    }
    let q = q.to_i64().ok_or(Error::Overflow("twist factor"))?;
    f.try_map_weights(|w| w.checked_scale(q))
}

/// `(q - 1) rho` for the given prime power.
pub fn steinberg_weight(rs: &RootSystem, pp: &PrimePower) -> Result<Weight> {
    rs.rho().checked_scale(pp.q_i64()? - 1)
}

/// Character of `St_q`, the irreducible module of highest weight `(q-1) rho`.
pub fn steinberg_character(rs: &RootSystem, pp: &PrimePower) -> Result<Character> {
    weyl_character(rs, &steinberg_weight(rs, pp)?)
}

/// `ch(q lambda + (q-1) rho) == twist_q(ch lambda) * ch St_q`, exactly.
pub fn kempf_identity_check(rs: &RootSystem, lambda: &Weight, pp: &PrimePower) -> Result<bool> {
    rs.check_weight(lambda)?;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let q = pp.q_i64()?;
    let shifted = &lambda.checked_scale(q)? + &steinberg_weight(rs, pp)?;
    let left = weyl_character(rs, &shifted)?;
    let twisted = frobenius_twist(&weyl_character(rs, lambda)?, pp.q())?;
    let right = twisted.try_mul(&steinberg_character(rs, pp)?)?;
    Ok(left == right)
}
