use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Products whose naive term count exceeds this are refused.
pub const PRODUCT_TERM_GUARD: usize = 10_000_000;

/// A virtual character: a finite integer combination of formal exponentials
/// `e^lambda`, i.e. an element of the group ring of the weight lattice.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    rank: usize,
    terms: BTreeMap<Weight, BigInt>,
}

impl Character {
    pub fn zero(rank: usize) -> Self {
        Character {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Character::monomial(Weight::zero(rank))
    }

    /// `e^lambda`
    pub fn monomial(lambda: Weight) -> Self {
        let rank = lambda.rank();
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        Character { rank, terms }
    }

    pub fn from_terms<I, C>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Weight, C)>,
        C: Into<BigInt>,
    {
        let mut out = Character::zero(rank);
        for (w, c) in terms {
            out.add_term(w, c.into());
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct weights with non-zero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Weight) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Sum of coefficients; the (virtual) dimension.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub(crate) fn add_term(&mut self, lambda: Weight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(lambda.rank(), self.rank);
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scaled(&self, k: &BigInt) -> Character {
        if k.is_zero() {
            return Character::zero(self.rank);
        }
        Character {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Multiplies by `e^shift`.
    pub fn shifted(&self, shift: &Weight) -> Character {
        Character {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w + shift, c.clone())).collect(),
        }
    }

    /// Applies `f` to every exponent, merging collisions.
    pub fn map_weights(&self, mut f: impl FnMut(&Weight) -> Weight) -> Character {
        let mut out = Character::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Same as [`map_weights`](Self::map_weights) for fallible maps.
    pub fn try_map_weights(&self, mut f: impl FnMut(&Weight) -> Result<Weight>) -> Result<Character> {
        let mut out = Character::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(f(w)?, c.clone());
        }
        Ok(out)
    }

    /// `s_i` acting on exponents.
    pub fn reflect(&self, rs: &RootSystem, i: usize) -> Character {
        let alpha = rs.simple_root(i);
        self.map_weights(|w| w.add_scaled(alpha, -w.coords()[i]))
    }

    /// Fixed by every simple reflection.
    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        (0..rs.rank()).all(|i| &self.reflect(rs, i) == self)
    }

    /// Sparse convolution product.
    pub fn try_mul(&self, rhs: &Character) -> Result<Character> {
        let naive = self.len().saturating_mul(rhs.len());
        if naive > PRODUCT_TERM_GUARD {
            return Err(Error::GuardExceeded {
                what: "character product term count",
                requested: naive.to_string(),
                limit: PRODUCT_TERM_GUARD.to_string(),
            });
        }
        let mut out = Character::zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        Ok(out)
    }

    fn leading(&self) -> Option<(&Weight, &BigInt)> {
        self.terms.last_key_value()
    }

    /// Exact division in the Laurent ring.
    ///
    /// Uses lexicographic order on exponents, which is compatible with
    /// addition, so leading terms multiply. Every quotient term must lie in
    /// the box `[min(self) - min(divisor), max(self) - max(divisor)]`
    /// coordinate-wise (Newton polytopes add), which bounds the loop; a
    /// candidate outside the box or a non-divisible coefficient means the
    /// division is not exact.
    pub fn div_exact(&self, divisor: &Character) -> Result<Character> {
        let (lead_w, lead_c) = divisor
            .leading()
            .ok_or_else(|| Error::Internal("division by the zero character".into()))?;
        if self.is_zero() {
            return Ok(Character::zero(self.rank));
        }
        let (lo_num, hi_num) = self.bounding_box();
        let (lo_den, hi_den) = divisor.bounding_box();
        let lo: Vec<i64> = lo_num.iter().zip(&lo_den).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = hi_num.iter().zip(&hi_den).map(|(a, b)| a - b).collect();

        let mut remainder = self.clone();
        let mut quotient = Character::zero(self.rank);
        while let Some((rw, rc)) = remainder.leading() {
            let (rw, rc) = (rw.clone(), rc.clone());
            let t = &rw - lead_w;
            let in_box = t
                .coords()
                .iter()
                .zip(lo.iter().zip(&hi))
                .all(|(x, (l, h))| l <= x && x <= h);
            if !in_box || !(&rc % lead_c).is_zero() {
                return Err(Error::Internal(format!(
                    "inexact Laurent division: remainder leading term {rc}*e^{rw}"
                )));
            }
            let c = &rc / lead_c;
            for (dw, dc) in &divisor.terms {
                remainder.add_term(dw + &t, -(&c * dc));
            }
            quotient.add_term(t, c);
        }
        Ok(quotient)
    }

    fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = vec![i64::MAX; self.rank];
        let mut hi = vec![i64::MIN; self.rank];
        for w in self.terms.keys() {
            for (k, &x) in w.coords().iter().enumerate() {
                lo[k] = lo[k].min(x);
                hi[k] = hi[k].max(x);
            }
        }
        (lo, hi)
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        Character {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Character {
    /// Highest weights first, e.g. `e(1) + e(-1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "e{w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(c: &[i64]) -> Character {
        Character::monomial(Weight::new(c.to_vec()))
    }

    #[test]
    fn arithmetic_drops_zero_terms() {
        let f = &e(&[1]) + &e(&[-1]);
        let g = &f - &e(&[1]);
        assert_eq!(g, e(&[-1]));
        assert!((&f - &f).is_zero());
        assert_eq!(f.dimension(), BigInt::from(2));
        assert_eq!(f.to_string(), "e(1) + e(-1)");
        assert_eq!((-&f).to_string(), "-e(1) - e(-1)");
    }

    #[test]
    fn product_and_division_roundtrip() {
        // (e^1 + e^-1)(e^2 - 3 + e^-2) / (e^1 + e^-1)
        let a = &e(&[1]) + &e(&[-1]);
        let b = &(&e(&[2]) - &e(&[0]).scaled(&BigInt::from(3))) + &e(&[-2]);
        let p = a.try_mul(&b).unwrap();
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert_eq!(p.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn inexact_division_is_reported() {
        let num = &e(&[0]) + &e(&[3]);
        let den = &e(&[0]) + &e(&[1]).scaled(&BigInt::from(2));
        assert!(matches!(num.div_exact(&den), Err(Error::Internal(_))));
        let den = &e(&[0, 0]) - &e(&[1, 1]);
        let num = &e(&[0, 0]) - &e(&[1, 0]);
        assert!(matches!(num.div_exact(&den), Err(Error::Internal(_))));
    }

    #[test]
    fn two_variable_division() {
        let x = e(&[1, 0]);
        let y = e(&[0, -1]);
        let one = e(&[0, 0]);
        let f = &(&x + &y) + &one;
        let g = &(&x - &y) + &e(&[2, 3]);
        let p = f.try_mul(&g).unwrap();
        assert_eq!(p.div_exact(&g).unwrap(), f);
    }
}
