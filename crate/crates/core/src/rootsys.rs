//! Root systems of the simple types A–D, F4 and G2.
//!
//! Weights are stored in the basis of fundamental weights, so the pairing of a
//! weight with the `i`-th simple coroot is just its `i`-th coordinate. The
//! Cartan matrix follows the convention `C[i][j] = <alpha_j, alpha_i^vee>`,
//! which makes column `j` of `C` the fundamental-weight coordinates of the
//! simple root `alpha_j`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Cartan type letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Result<Family> {
        match c.to_ascii_uppercase() {
            'A' => Ok(Family::A),
            'B' => Ok(Family::B),
            'C' => Ok(Family::C),
            'D' => Ok(Family::D),
            'F' => Ok(Family::F),
            'G' => Ok(Family::G),
            'E' => Err(Error::InadmissibleSystem {
                family: 'E',
                rank: 0,
                constraint: "the E family is not supported".into(),
            }),
            other => Err(Error::Invalid(format!("unknown Cartan type letter '{other}'"))),
        }
    }

    fn admissible_ranks(self) -> (usize, usize) {
        match self {
            Family::A => (1, 8),
            Family::B | Family::C => (2, 6),
            Family::D => (4, 6),
            Family::F => (4, 4),
            Family::G => (2, 2),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A validated (family, rank) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSystemSpec {
    family: Family,
    rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let (lo, hi) = family.admissible_ranks();
        if rank < lo || rank > hi {
            let constraint = if lo == hi {
                format!("type {family} requires rank {lo}")
            } else {
                format!("type {family} requires rank in {lo}..={hi}")
            };
            return Err(Error::InadmissibleSystem {
                family: family.letter(),
                rank,
                constraint,
            });
        }
        Ok(RootSystemSpec { family, rank })
    }

    /// Like [`RootSystemSpec::new`] but starting from the family letter.
    pub fn from_parts(letter: char, rank: usize) -> Result<Self> {
        let family = Family::from_letter(letter).map_err(|e| match e {
            Error::InadmissibleSystem { family, constraint, .. } => Error::InadmissibleSystem {
                family,
                rank,
                constraint,
            },
            other => other,
        })?;
        RootSystemSpec::new(family, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    /// Parses labels such as `A2`, `b3`, `G2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Invalid("empty root system label".into()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Invalid(format!("bad root system label '{s}' (expected e.g. A2)")))?;
        RootSystemSpec::from_parts(letter, rank)
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Coordinate-wise multiplication by `k`, failing on overflow.
    pub fn checked_scale(&self, k: i64) -> Result<Weight> {
        self.0
            .iter()
            .map(|&c| c.checked_mul(k).ok_or(Error::Overflow("weight scaling")))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&c| c * k).collect())
    }

    /// `self + k * other`, used for root strings.
    pub(crate) fn add_scaled(&self, other: &Weight, k: i64) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    pub(crate) fn check_rank(&self, rank: usize) -> Result<()> {
        if self.0.len() == rank {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: rank,
                found: self.0.len(),
            })
        }
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl<const R: usize> From<[i64; R]> for Weight {
    fn from(v: [i64; R]) -> Self {
        Weight(v.to_vec())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated integers, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Err(Error::Invalid("empty weight string".into()));
        }
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Invalid(format!("bad weight coordinate '{}' in '{s}'", t.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// A coroot written in the basis of simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coroot {
    expansion: Vec<i64>,
}

impl Coroot {
    pub fn new(expansion: Vec<i64>) -> Self {
        Coroot { expansion }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut expansion = vec![0; rank];
        expansion[i] = 1;
        Coroot { expansion }
    }

    pub fn expansion(&self) -> &[i64] {
        &self.expansion
    }
}

/// `<lambda, c>` for a weight and a coroot given in simple coroots.
pub fn pairing(lambda: &Weight, c: &Coroot) -> Result<i64> {
    if lambda.rank() != c.expansion.len() {
        return Err(Error::DimensionMismatch {
            expected: c.expansion.len(),
            found: lambda.rank(),
        });
    }
    Ok(lambda.coords().iter().zip(&c.expansion).map(|(l, e)| l * e).sum())
}

/// A positive root with its coroot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coefficients in the basis of simple roots.
    pub simple_coords: Vec<i64>,
    /// The same root in fundamental-weight coordinates.
    pub weight: Weight,
    pub coroot: Coroot,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }
}

/// Immutable Cartan data for one root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Root>,
    rho: Weight,
}

fn cartan_matrix(spec: RootSystemSpec) -> Vec<Vec<i64>> {
    let r = spec.rank;
    let mut c = vec![vec![0i64; r]; r];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match spec.family {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            for i in 0..r - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..r - 2 {
                link(i, i + 1);
            }
            link(r - 3, r - 1);
        }
    }
    // Multiple bonds: the entry <long, short^vee> carries the multiplicity.
    match spec.family {
        Family::B => c[r - 1][r - 2] = -2,
        Family::C => c[r - 2][r - 1] = -2,
        Family::F => c[2][1] = -2,
        Family::G => c[0][1] = -3,
        Family::A | Family::D => {}
    }
    c
}

/// Builds the full root datum for an admissible type.
pub fn build_root_system(spec: RootSystemSpec) -> RootSystem {
    let r = spec.rank;
    let cartan = cartan_matrix(spec);

    let simple_roots: Vec<Weight> = (0..r).map(|j| Weight((0..r).map(|i| cartan[i][j]).collect())).collect();

    // Closure of (root, coroot) pairs under simple reflections, both in
    // simple coordinates. Only positive roots are kept.
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut found: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back((e.clone(), e));
    }
    while let Some((root, coroot)) = queue.pop_front() {
        for i in 0..r {
            let root_pair: i64 = (0..r).map(|j| root[j] * cartan[i][j]).sum();
            let coroot_pair: i64 = (0..r).map(|j| coroot[j] * cartan[j][i]).sum();
            let mut next_root = root.clone();
            next_root[i] -= root_pair;
            let mut next_coroot = coroot.clone();
            next_coroot[i] -= coroot_pair;
            if next_root.iter().all(|&x| x >= 0) && seen.insert(next_root.clone()) {
                queue.push_back((next_root, next_coroot));
            }
        }
        found.push((root, coroot));
    }
    found.sort_by(|a, b| {
        let ha: i64 = a.0.iter().sum();
        let hb: i64 = b.0.iter().sum();
        ha.cmp(&hb).then_with(|| a.0.cmp(&b.0))
    });

    let positive_roots = found
        .into_iter()
        .map(|(simple_coords, coroot)| {
            let weight = Weight(
                (0..r)
                    .map(|k| (0..r).map(|j| simple_coords[j] * cartan[k][j]).sum())
                    .collect(),
            );
            Root {
                simple_coords,
                weight,
                coroot: Coroot::new(coroot),
            }
        })
        .collect();

    RootSystem {
        spec,
        cartan,
        simple_roots,
        positive_roots,
        rho: Weight(vec![1; r]),
    }
}

impl RootSystem {
    pub fn new(spec: RootSystemSpec) -> Self {
        build_root_system(spec)
    }

    /// Shorthand for `RootSystem::new(RootSystemSpec::new(family, rank)?)`.
    pub fn of(family: Family, rank: usize) -> Result<Self> {
        Ok(build_root_system(RootSystemSpec::new(family, rank)?))
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Simple root `alpha_i` in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// N, the number of positive roots (= dimension of G/B).
    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.rank())
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub fn check_weight(&self, lambda: &Weight) -> Result<()> {
        lambda.check_rank(self.rank())
    }

    pub fn simple_coroot(&self, i: usize) -> Coroot {
        Coroot::simple(self.rank(), i)
    }

    /// The positive coroot of greatest height (the highest root of the dual system).
    pub fn highest_coroot(&self) -> &Coroot {
        self.positive_roots
            .iter()
            .map(|root| &root.coroot)
            .max_by_key(|c| (c.expansion.iter().sum::<i64>(), c.expansion.clone()))
            .expect("root systems are non-empty")
    }

    /// All coordinates non-negative.
    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.coords().iter().all(|&c| c >= 0)
    }

    /// `<lambda + rho, beta^vee> != 0` for every positive coroot.
    pub fn is_regular_after_rho_shift(&self, lambda: &Weight) -> bool {
        let shifted = lambda + &self.rho;
        self.positive_roots
            .iter()
            .all(|root| pairing(&shifted, &root.coroot).map(|v| v != 0).unwrap_or(false))
    }

    pub fn label(&self) -> String {
        self.spec.to_string()
    }
}

/// Order of the Weyl group of an admissible type, from the classical formulas.
pub fn classical_weyl_order(spec: RootSystemSpec) -> u128 {
    let r = spec.rank as u128;
    let fact = |n: u128| (1..=n).product::<u128>();
    match spec.family {
        Family::A => fact(r + 1),
        Family::B | Family::C => (1u128 << r) * fact(r),
        Family::D => (1u128 << (r - 1)) * fact(r),
        Family::F => 1152,
        Family::G => 12,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, r: usize) -> RootSystem {
        RootSystem::of(f, r).unwrap()
    }

    #[test]
    fn cartan_fixtures() {
        assert_eq!(rs(Family::A, 1).cartan(), &[vec![2]]);
        assert_eq!(rs(Family::A, 2).cartan(), &[vec![2, -1], vec![-1, 2]]);
        // <alpha_2, alpha_1^vee> = -3 with alpha_1 short.
        assert_eq!(rs(Family::G, 2).cartan(), &[vec![2, -3], vec![-1, 2]]);
        assert_eq!(rs(Family::B, 2).cartan(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(rs(Family::C, 2).cartan(), &[vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn rank_validation() {
        for (f, r) in [
            (Family::A, 0),
            (Family::A, 9),
            (Family::B, 1),
            (Family::D, 3),
            (Family::F, 3),
            (Family::G, 3),
        ] {
            let err = RootSystemSpec::new(f, r).unwrap_err();
            assert!(matches!(err, Error::InadmissibleSystem { .. }), "{err}");
        }
        assert!("E6".parse::<RootSystemSpec>().is_err());
        assert_eq!("b3".parse::<RootSystemSpec>().unwrap().to_string(), "B3");
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            (Family::A, 1, 1),
            (Family::A, 2, 3),
            (Family::A, 8, 36),
            (Family::B, 3, 9),
            (Family::C, 4, 16),
            (Family::D, 4, 12),
            (Family::D, 6, 30),
            (Family::F, 4, 24),
            (Family::G, 2, 6),
        ];
        for (f, r, n) in cases {
            assert_eq!(rs(f, r).num_positive(), n, "{f}{r}");
        }
    }

    #[test]
    fn roots_sorted_by_height() {
        let g2 = rs(Family::G, 2);
        let heights: Vec<i64> = g2.positive_roots().iter().map(Root::height).collect();
        assert_eq!(heights, vec![1, 1, 2, 3, 4, 5]);
        assert_eq!(g2.positive_roots()[5].simple_coords, vec![3, 2]);
        // The highest root is long, so its coroot is not the highest coroot.
        assert_eq!(g2.positive_roots()[5].coroot.expansion(), &[1, 2]);
        assert_eq!(g2.highest_coroot().expansion(), &[2, 3]);
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs(Family::A, 2);
        for i in 0..2 {
            assert_eq!(pairing(a2.rho(), &a2.simple_coroot(i)).unwrap(), 1);
        }
        assert_eq!(pairing(&Weight::from([1, 0]), &a2.simple_coroot(1)).unwrap(), 0);
        assert_eq!(a2.highest_coroot().expansion(), &[1, 1]);
        assert_eq!(pairing(a2.rho(), a2.highest_coroot()).unwrap(), 2);
        assert_eq!(
            pairing(&Weight::from([1, 0, 0]), a2.highest_coroot()),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn dominance_and_regularity() {
        let a2 = rs(Family::A, 2);
        let zero = a2.zero_weight();
        assert!(a2.is_dominant(&zero));
        assert!(a2.is_regular_after_rho_shift(&zero));
        let minus_rho = -a2.rho();
        assert!(!a2.is_regular_after_rho_shift(&minus_rho));
        let w = Weight::from([-2, 1]);
        assert!(!a2.is_dominant(&w));
        assert!(a2.is_regular_after_rho_shift(&w));
        // (-3,1)+rho = (-2,2) pairs to zero with the highest coroot only.
        assert!(!a2.is_regular_after_rho_shift(&Weight::from([-3, 1])));
    }

    #[test]
    fn weight_parsing() {
        assert_eq!("-2".parse::<Weight>().unwrap(), Weight::from([-2]));
        assert_eq!("(1, -3,0)".parse::<Weight>().unwrap(), Weight::from([1, -3, 0]));
        assert!("1,,2".parse::<Weight>().is_err());
        assert!("".parse::<Weight>().is_err());
        assert_eq!(Weight::from([1, -3]).to_string(), "(1,-3)");
    }

    #[test]
    fn deterministic_construction() {
        for spec in ["A3", "B3", "C3", "D5", "F4", "G2"] {
            let spec: RootSystemSpec = spec.parse().unwrap();
            assert_eq!(RootSystem::new(spec), RootSystem::new(spec));
        }
    }
}
