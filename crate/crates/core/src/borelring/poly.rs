use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// A polynomial with rational coefficients in `x_1..x_r`, where `x_i` is the
/// degree-one class of the fundamental weight `omega_i`.
///
/// This is a representative only; two representatives define the same class
/// in `H*(G/B, Q)` exactly when their Schubert expansions agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyClass {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

fn degree_of(m: &Monomial) -> u32 {
    m.iter().sum()
}

impl PolyClass {
    pub fn zero(nvars: usize) -> Self {
        PolyClass {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = PolyClass::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        PolyClass::constant(nvars, BigRational::one())
    }

    pub fn variable(nvars: usize, k: usize) -> Self {
        let mut m = vec![0; nvars];
        m[k] = 1;
        let mut p = PolyClass::zero(nvars);
        p.add_term(m, BigRational::one());
        p
    }

    /// `sum_k coeffs[k] x_k`
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = PolyClass::zero(n);
        for (k, &c) in coeffs.iter().enumerate() {
            let mut m = vec![0; n];
            m[k] = 1;
            p.add_term(m, BigRational::from_integer(c.into()));
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = PolyClass::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(degree_of).max()
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn homogeneous_part(&self, d: u32) -> PolyClass {
        PolyClass {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| degree_of(m) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops all terms of degree above `max_degree`.
    pub fn truncated(&self, max_degree: u32) -> PolyClass {
        PolyClass {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| degree_of(m) <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn scaled(&self, k: &BigRational) -> PolyClass {
        if k.is_zero() {
            return PolyClass::zero(self.nvars);
        }
        PolyClass {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// Product with terms above `max_degree` discarded on the fly.
    pub fn mul_truncated(&self, rhs: &PolyClass, max_degree: u32) -> PolyClass {
        let mut out = PolyClass::zero(self.nvars);
        for (a, ca) in &self.terms {
            let da = degree_of(a);
            if da > max_degree {
                continue;
            }
            for (b, cb) in &rhs.terms {
                if da + degree_of(b) > max_degree {
                    continue;
                }
                let m: Monomial = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &PolyClass) -> PolyClass {
        self.mul_truncated(rhs, u32::MAX)
    }

    /// `sum_k series[k] * self^k`, truncated at `max_degree`.
    pub fn compose_series(&self, series: &[BigRational], max_degree: u32) -> PolyClass {
        let mut out = PolyClass::zero(self.nvars);
        let mut power = PolyClass::one(self.nvars);
        for (k, c) in series.iter().enumerate() {
            if k > 0 {
                power = power.mul_truncated(self, max_degree);
            }
            if power.is_zero() {
                break;
            }
            out = &out + &power.scaled(c);
        }
        out.truncated(max_degree)
    }

    /// Replaces `x_var` by the linear form `form` (coefficients over all variables).
    pub fn substitute_linear(&self, var: usize, form: &[i64]) -> PolyClass {
        let lin = PolyClass::linear(form);
        let max_exp = self.terms.keys().map(|m| m[var]).max().unwrap_or(0) as usize;
        let mut powers = vec![PolyClass::one(self.nvars)];
        for k in 1..=max_exp {
            let next = powers[k - 1].mul(&lin);
            powers.push(next);
        }
        let mut out = PolyClass::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let e = rest[var] as usize;
            rest[var] = 0;
            for (pm, pc) in &powers[e].terms {
                let combined: Monomial = rest.iter().zip(pm).map(|(x, y)| x + y).collect();
                out.add_term(combined, c * pc);
            }
        }
        out
    }

    /// Exact quotient by the linear form `form`, pivoting on a variable with
    /// non-zero coefficient. Fails if the division leaves a remainder.
    pub fn div_linear(&self, form: &[i64]) -> Result<PolyClass> {
        let pivot = form
            .iter()
            .position(|&c| c != 0)
            .ok_or_else(|| Error::Internal("division by the zero linear form".into()))?;
        let a = BigRational::from_integer(BigInt::from(form[pivot]));
        let mut rest_form = form.to_vec();
        rest_form[pivot] = 0;
        let rest = PolyClass::linear(&rest_form);

        // Slice f by the exponent of the pivot variable.
        let mut slices: BTreeMap<u32, PolyClass> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut base = m.clone();
            let e = base[pivot];
            base[pivot] = 0;
            slices
                .entry(e)
                .or_insert_with(|| PolyClass::zero(self.nvars))
                .add_term(base, c.clone());
        }
        let top = match slices.keys().next_back() {
            Some(&t) => t,
            None => return Ok(PolyClass::zero(self.nvars)),
        };
        // f_e = a g_{e-1} + rest * g_e, solved from the top down.
        let mut quotient_slices: Vec<PolyClass> = vec![PolyClass::zero(self.nvars); top as usize + 1];
        let inv_a = a.recip();
        for e in (1..=top).rev() {
            let f_e = slices.get(&e).cloned().unwrap_or_else(|| PolyClass::zero(self.nvars));
            let g_e = &quotient_slices[e as usize];
            let g_prev = (&f_e - &rest.mul(g_e)).scaled(&inv_a);
            quotient_slices[e as usize - 1] = g_prev;
        }
        let f_0 = slices.get(&0).cloned().unwrap_or_else(|| PolyClass::zero(self.nvars));
        if f_0 != rest.mul(&quotient_slices[0]) {
            return Err(Error::Internal(format!("inexact division of {self} by a linear form")));
        }
        let mut out = PolyClass::zero(self.nvars);
        for (e, slice) in quotient_slices.into_iter().enumerate() {
            for (m, c) in slice.terms {
                let mut m = m;
                m[pivot] += e as u32;
                out.add_term(m, c);
            }
        }
        Ok(out)
    }
}

impl Add for &PolyClass {
    type Output = PolyClass;
    fn add(self, rhs: &PolyClass) -> PolyClass {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &PolyClass {
    type Output = PolyClass;
    fn sub(self, rhs: &PolyClass) -> PolyClass {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &PolyClass {
    type Output = PolyClass;
    fn neg(self) -> PolyClass {
        self.scaled(&-BigRational::one())
    }
}

impl fmt::Display for PolyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Graded order: low degree first.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| degree_of(a.0).cmp(&degree_of(b.0)).then_with(|| b.0.cmp(a.0)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let is_const = m.iter().all(|&e| e == 0);
            if !abs.is_one() || is_const {
                write!(f, "{abs}")?;
            }
            let mut first_var = abs.is_one();
            for (v, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                write!(f, "x{}", v + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
