//! Rational cohomology of `G/B` in the Borel presentation.
//!
//! `H*(G/B, Q)` is the polynomial ring in the fundamental-weight classes
//! `x_i` modulo positive-degree Weyl invariants. Rather than reducing modulo
//! that ideal, classes are compared through their Schubert expansions, which
//! are read off with divided differences.
//!
//! Conventions: `c_1(L_lambda) = x_lambda = sum lambda_i x_i`, so dominant
//! weights give nef classes, and the tangent bundle has the positive roots as
//! Chern roots.

mod poly;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

pub use poly::{Monomial, PolyClass};

use crate::charring::PrimePower;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{WeylGroup, DEFAULT_SIZE_GUARD};

/// `x_lambda` as a linear form.
pub fn weight_class(lambda: &Weight) -> PolyClass {
    PolyClass::linear(lambda.coords())
}

/// `s_i` acting on a polynomial: `x_i -> x_i - x_{alpha_i}`, other variables fixed.
pub fn reflect(rs: &RootSystem, i: usize, f: &PolyClass) -> PolyClass {
    let mut form: Vec<i64> = rs.simple_root(i).coords().iter().map(|c| -c).collect();
    form[i] += 1;
    f.substitute_linear(i, &form)
}

/// The BGG operator `(f - s_i f) / x_{alpha_i}`.
pub fn divided_difference(rs: &RootSystem, i: usize, f: &PolyClass) -> Result<PolyClass> {
    rs.check_index(i)?;
    if f.nvars() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            found: f.nvars(),
        });
    }
    let diff = f - &reflect(rs, i, f);
    diff.div_linear(rs.simple_root(i).coords())
}

/// `partial_{i_1} ... partial_{i_k} f` for `word = [i_1, ..., i_k]`, so the
/// last index acts first.
pub fn divided_difference_word(rs: &RootSystem, word: &[usize], f: &PolyClass) -> Result<PolyClass> {
    word.iter()
        .rev()
        .try_fold(f.clone(), |acc, &i| divided_difference(rs, i, &acc))
}

/// Coefficients of a class in the Schubert basis, keyed by the index of the
/// Weyl element in its group's enumeration order. Zero coefficients are
/// omitted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchubertExpansion(pub BTreeMap<usize, BigRational>);

impl SchubertExpansion {
    pub fn coefficient(&self, w: usize) -> BigRational {
        self.0.get(&w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// `x / (1 - e^{-x})` up to `x^max_degree`.
fn todd_series(max_degree: u32) -> Vec<BigRational> {
    // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    let n = max_degree as usize;
    let mut factorial = BigInt::one();
    let mut s = Vec::with_capacity(n + 1);
    for k in 0..=n {
        factorial *= BigInt::from(k as u64 + 1);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        s.push(BigRational::new(BigInt::from(sign), factorial.clone()));
    }
    let mut t: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        let mut acc = BigRational::zero();
        for k in 1..=m {
            acc += &s[k] * &t[m - k];
        }
        t.push(-acc);
    }
    t
}

fn exp_series(max_degree: u32) -> Vec<BigRational> {
    let mut out = Vec::new();
    let mut factorial = BigInt::one();
    for k in 0..=max_degree as u64 {
        if k > 0 {
            factorial *= BigInt::from(k);
        }
        out.push(BigRational::new(BigInt::one(), factorial.clone()));
    }
    out
}

/// Schubert calculus for one root system: the enumerated Weyl group, the
/// Schubert basis and the Todd class.
#[derive(Debug, Clone)]
pub struct SchubertCalculus {
    rs: RootSystem,
    group: WeylGroup,
    basis: Vec<PolyClass>,
    todd: PolyClass,
    todd_inverse: PolyClass,
}

impl SchubertCalculus {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        Self::with_guard(rs, DEFAULT_SIZE_GUARD)
    }

    pub fn with_guard(rs: &RootSystem, size_guard: u128) -> Result<Self> {
        let group = WeylGroup::enumerate(rs, size_guard)?;
        let n = rs.rank();
        let top_degree = rs.num_positive() as u32;

        let mut top = PolyClass::one(n);
        for root in rs.positive_roots() {
            top = top.mul(&weight_class(&root.weight));
        }
        let top = top.scaled(&BigRational::new(BigInt::one(), BigInt::from(group.order())));

        let w0 = group.longest().matrix().clone();
        let mut basis = Vec::with_capacity(group.order());
        for k in 0..group.order() {
            // S_w = partial_{w^{-1} w0} S_{w0}
            let inv = group.element(group.inverse(k)).matrix().clone();
            let u = group
                .position(&inv.mul(&w0))
                .ok_or_else(|| Error::Internal("w^-1 w0 not found in the group".into()))?;
            basis.push(divided_difference_word(rs, group.element(u).word(), &top)?);
        }

        let series = todd_series(top_degree);
        let mut todd = PolyClass::one(n);
        for root in rs.positive_roots() {
            let factor = weight_class(&root.weight).compose_series(&series, top_degree);
            todd = todd.mul_truncated(&factor, top_degree);
        }
        // td = 1 + u  =>  td^{-1} = sum_k (-u)^k
        let u = &todd - &PolyClass::one(n);
        let alternating: Vec<BigRational> = (0..=top_degree)
            .map(|k| {
                if k % 2 == 0 {
                    BigRational::one()
                } else {
                    -BigRational::one()
                }
            })
            .collect();
        let todd_inverse = u.compose_series(&alternating, top_degree);

        Ok(SchubertCalculus {
            rs: rs.clone(),
            group,
            basis,
            todd,
            todd_inverse,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    /// `N = dim G/B`
    pub fn top_degree(&self) -> u32 {
        self.rs.num_positive() as u32
    }

    /// Schubert representatives indexed like [`WeylGroup::elements`].
    pub fn schubert_basis(&self) -> &[PolyClass] {
        &self.basis
    }

    pub fn schubert_class(&self, w: usize) -> &PolyClass {
        &self.basis[w]
    }

    /// Coefficient of `S_w` is the constant term of `partial_w f`.
    pub fn expand(&self, f: &PolyClass) -> Result<SchubertExpansion> {
        let mut out = BTreeMap::new();
        let f = f.truncated(self.top_degree());
        for (k, w) in self.group.elements().iter().enumerate() {
            let part = f.homogeneous_part(w.length() as u32);
            if part.is_zero() {
                continue;
            }
            let c = divided_difference_word(&self.rs, w.word(), &part)?.constant_term();
            if !c.is_zero() {
                out.insert(k, c);
            }
        }
        Ok(SchubertExpansion(out))
    }

    /// Equality in `H*(G/B, Q)`.
    pub fn classes_equal(&self, a: &PolyClass, b: &PolyClass) -> Result<bool> {
        Ok(self.expand(&(a - b))?.is_zero())
    }

    /// `ch(L_lambda) = exp(x_lambda)`, truncated at degree `N`.
    pub fn chern_character(&self, lambda: &Weight) -> Result<PolyClass> {
        self.rs.check_weight(lambda)?;
        let n = self.top_degree();
        Ok(weight_class(lambda).compose_series(&exp_series(n), n))
    }

    /// `prod_{alpha > 0} x_alpha / (1 - e^{-x_alpha})`, truncated at degree `N`.
    pub fn todd_class(&self) -> &PolyClass {
        &self.todd
    }

    pub fn todd_inverse(&self) -> &PolyClass {
        &self.todd_inverse
    }

    /// `ch(F_* E) = td^{-1} * F_*(ch(E) td)`, where `F_*` multiplies the
    /// degree-`d` part by `q^{N-d}`.
    pub fn frobenius_pushforward_ch(&self, c: &PolyClass, q: &BigInt) -> Result<PolyClass> {
        if q < &BigInt::one() {
            return Err(Error::Invalid(format!("q must be >= 1, got {q}")));
        }
        let n = self.top_degree();
        let with_todd = c.mul_truncated(&self.todd, n);
        let mut scaled = PolyClass::zero(self.rs.rank());
        for d in 0..=n {
            let factor = BigRational::from_integer(Pow::pow(q.clone(), n - d));
            scaled = &scaled + &with_todd.homogeneous_part(d).scaled(&factor);
        }
        Ok(scaled.mul_truncated(&self.todd_inverse, n))
    }

    /// Pairing with the fundamental class: the coefficient of `S_{w0}`.
    pub fn integrate(&self, c: &PolyClass) -> Result<BigRational> {
        let top = c.homogeneous_part(self.top_degree());
        let w0 = self.group.longest();
        Ok(divided_difference_word(&self.rs, w0.word(), &top)?.constant_term())
    }

    /// Checks both `ch F^n_* L_{(q-1)rho} = q^N` and
    /// `ch F^n_* L_{-rho} = q^N ch L_{-rho}` in the Schubert basis.
    pub fn verify_steinberg_grr(&self, pp: &PrimePower) -> Result<bool> {
        let q = pp.q();
        let q_int = pp.q_i64()?;
        let n = self.top_degree();
        let rank = self.rs.rank();
        let q_to_n = BigRational::from_integer(Pow::pow(q.clone(), n));

        let steinberg = self.chern_character(&self.rs.rho().checked_scale(q_int - 1)?)?;
        let pushed = self.frobenius_pushforward_ch(&steinberg, q)?;
        let trivial = PolyClass::constant(rank, q_to_n.clone());
        if self.expand(&pushed)? != self.expand(&trivial)? {
            return Ok(false);
        }

        let minus_rho = self.chern_character(&-self.rs.rho())?;
        let pushed = self.frobenius_pushforward_ch(&minus_rho, q)?;
        let eigen = minus_rho.scaled(&q_to_n);
        Ok(self.expand(&pushed)? == self.expand(&eigen)?)
    }

    /// Hirzebruch–Riemann–Roch: `integral of ch(L_lambda) td`.
    pub fn hrr_euler_characteristic(&self, lambda: &Weight) -> Result<BigRational> {
        let ch = self.chern_character(lambda)?;
        self.integrate(&ch.mul_truncated(&self.todd, self.top_degree()))
    }
}
