//! Frobenius pushforwards of line bundles on the projective line.
//!
//! Sections of `O(d)` form the degree-`d` part of the Laurent-graded ring in
//! `x, y`; restricting scalars to the subring of `q`-th powers splits it into
//! free rank-one pieces with basis monomials `x^i y^j`, `0 <= i, j < q`. Each
//! piece is one line-bundle summand of `F^n_* O(d)`.

use std::fmt;

use serde::Serialize;

use crate::charring::PrimePower;
use crate::error::{Error, Result};

/// Largest `|d|` accepted.
pub const DEGREE_GUARD: i64 = 1_000_000;
/// Largest `q` accepted; the splitting has `q` summands.
pub const RANK_GUARD: i64 = 10_000_000;

/// Degrees of the line-bundle summands, sorted in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct P1Splitting {
    degrees: Vec<i64>,
}

impl P1Splitting {
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        P1Splitting { degrees }
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// `sum (deg + 1)`, the Euler characteristic of the pushforward.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees.iter().map(|d| d + 1).sum()
    }

    /// Whether every summand has degree `d`.
    pub fn is_uniform(&self, d: i64) -> bool {
        self.degrees.iter().all(|&x| x == d)
    }
}

impl fmt::Display for P1Splitting {
    /// Multiset notation, e.g. `{0 x1, -1 x2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        let mut k = 0;
        while k < self.degrees.len() {
            let d = self.degrees[k];
            let run = self.degrees[k..].iter().take_while(|&&x| x == d).count();
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{d} x{run}")?;
            first = false;
            k += run;
        }
        write!(f, "}}")
    }
}

fn check_inputs(d: i64, q: i64) -> Result<()> {
    if d.abs() > DEGREE_GUARD {
        return Err(Error::GuardExceeded {
            what: "|d|",
            requested: d.abs().to_string(),
            limit: DEGREE_GUARD.to_string(),
        });
    }
    if q < 1 {
        return Err(Error::Invalid(format!("q must be >= 1, got {q}")));
    }
    if q > RANK_GUARD {
        return Err(Error::GuardExceeded {
            what: "q",
            requested: q.to_string(),
            limit: RANK_GUARD.to_string(),
        });
    }
    Ok(())
}

/// Residue-class decomposition of `F^n_* O(d)`.
///
/// For every `(i, j)` with `0 <= i, j < q` and `i + j = d (mod q)` the
/// monomials `x^i y^j * (x^q, y^q)-monomials` span a free summand whose
/// generator sits in degree `(d - i - j) / q` over the `q`-th-power subring.
pub fn split_frobenius_pushforward(d: i64, pp: &PrimePower) -> Result<P1Splitting> {
    let q = pp.q_i64()?;
    split_with_q(d, q)
}

pub(crate) fn split_with_q(d: i64, q: i64) -> Result<P1Splitting> {
    check_inputs(d, q)?;
    let degrees = (0..q)
        .map(|i| {
            let j = (d - i).rem_euclid(q);
            let total = d - i - j;
            debug_assert_eq!(total % q, 0);
            total / q
        })
        .collect();
    Ok(P1Splitting::new(degrees))
}

/// `{ floor((d - i) / q) : 0 <= i < q }`.
pub fn closed_formula(d: i64, q: i64) -> Result<P1Splitting> {
    check_inputs(d, q)?;
    Ok(P1Splitting::new((0..q).map(|i| (d - i).div_euclid(q)).collect()))
}

/// `F^n_*` computed as `n` successive pushforwards along `F`.
pub fn iterated_splitting(d: i64, p: u64, n: u32) -> Result<P1Splitting> {
    let single = PrimePower::new(p, 1)?;
    let mut degrees = vec![d];
    for _ in 0..n {
        let mut next = Vec::with_capacity(degrees.len() * p as usize);
        for &e in &degrees {
            next.extend_from_slice(split_frobenius_pushforward(e, &single)?.degrees());
        }
        degrees = next;
    }
    Ok(P1Splitting::new(degrees))
}

/// `F^n_* O(q-1) = O^q` and `F^n_* O(-1) = O(-1)^q`.
pub fn verify_steinberg_p1(pp: &PrimePower) -> Result<bool> {
    let q = pp.q_i64()?;
    let steinberg = split_frobenius_pushforward(q - 1, pp)?;
    let minus_rho = split_frobenius_pushforward(-1, pp)?;
    Ok(steinberg.rank() as i64 == q
        && steinberg.is_uniform(0)
        && minus_rho.rank() as i64 == q
        && minus_rho.is_uniform(-1))
}
