//! Weyl group elements acting on fundamental-weight coordinates.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{classical_weyl_order, RootSystem, Weight};

/// Default cap on the order of an enumerated group.
pub const DEFAULT_SIZE_GUARD: u128 = 50_000;

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![0; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = 1;
        }
        IntMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.dim).map(<[i64]>::to_vec).collect()
    }

    /// Matrix of `s_i`: `lambda -> lambda - lambda_i * alpha_i`.
    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        let mut m = IntMatrix::identity(rs.rank());
        let alpha = rs.simple_root(i).coords();
        for (k, a) in alpha.iter().enumerate() {
            m.data[k * m.dim + i] -= a;
        }
        m
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        let n = self.dim;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        IntMatrix { dim: n, data }
    }

    pub fn apply(&self, lambda: &Weight) -> Weight {
        let n = self.dim;
        let c = lambda.coords();
        Weight::new(
            (0..n)
                .map(|i| (0..n).map(|j| self.data[i * n + j] * c[j]).sum())
                .collect(),
        )
    }
}

/// A Weyl group element together with a reduced word.
///
/// `word = [i_1, ..., i_k]` means `w = s_{i_1} s_{i_2} ... s_{i_k}`, so `s_{i_k}`
/// acts first. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    matrix: IntMatrix,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            matrix: IntMatrix::identity(rank),
            word: Vec::new(),
        }
    }

    /// Multiplies out a word. The word is trusted to be reduced only if the
    /// caller knows it is; `length()` reports the word length.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut matrix = IntMatrix::identity(rs.rank());
        for &i in word {
            rs.check_index(i)?;
            matrix = matrix.mul(&IntMatrix::simple_reflection(rs, i));
        }
        Ok(WeylElement {
            matrix,
            word: word.to_vec(),
        })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `(-1)^{l(w)}`
    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == IntMatrix::identity(self.matrix.dim)
    }

    pub fn apply(&self, lambda: &Weight) -> Weight {
        self.matrix.apply(lambda)
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let word: Vec<usize> = self.word.iter().rev().copied().collect();
        WeylElement::from_word(rs, &word).expect("indices already validated")
    }
}

impl fmt::Display for WeylElement {
    /// Prints the word 1-based, e.g. `s1 s2 s1`; the identity prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for (k, i) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

pub fn simple_reflection_apply(rs: &RootSystem, i: usize, lambda: &Weight) -> Result<Weight> {
    rs.check_index(i)?;
    rs.check_weight(lambda)?;
    let m = lambda.coords()[i];
    Ok(lambda.add_scaled(rs.simple_root(i), -m))
}

/// `w . lambda = w(lambda + rho) - rho`
pub fn dot_action(rs: &RootSystem, w: &WeylElement, lambda: &Weight) -> Weight {
    &w.apply(&(lambda + rs.rho())) - rs.rho()
}

/// The longest element, found by walking `rho` down to `-rho` one simple
/// reflection at a time (lowest index with a positive coordinate first).
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let target = -rs.rho();
    let mut current = rs.rho().clone();
    let mut word = Vec::new();
    while current != target {
        let i = current
            .coords()
            .iter()
            .position(|&c| c > 0)
            .expect("a weight other than -rho in the rho orbit has a positive coordinate");
        current = current.add_scaled(rs.simple_root(i), -current.coords()[i]);
        word.push(i);
    }
    // s_{i_k} ... s_{i_1} rho = -rho; w0 is an involution so the forward word
    // is also reduced for it.
    WeylElement::from_word(rs, &word).expect("valid indices")
}

/// Result of moving a regular weight into the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantPartner {
    pub element: WeylElement,
    /// `w . lambda`
    pub dominant: Weight,
    pub steps: usize,
}

/// Finds `w` with `w(lambda + rho)` strictly dominant.
///
/// Fails with [`Error::Singular`] if `lambda + rho` lies on a wall.
pub fn to_dominant(rs: &RootSystem, lambda: &Weight) -> Result<DominantPartner> {
    rs.check_weight(lambda)?;
    if !rs.is_regular_after_rho_shift(lambda) {
        return Err(Error::Singular(lambda.to_string()));
    }
    let mut shifted = lambda + rs.rho();
    let mut applied = Vec::new();
    while let Some(i) = shifted.coords().iter().position(|&c| c < 0) {
        shifted = shifted.add_scaled(rs.simple_root(i), -shifted.coords()[i]);
        applied.push(i);
    }
    applied.reverse();
    let element = WeylElement::from_word(rs, &applied)?;
    let steps = element.length();
    Ok(DominantPartner {
        dominant: &shifted - rs.rho(),
        element,
        steps,
    })
}

/// A fully enumerated Weyl group.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<IntMatrix, usize>,
    longest: usize,
    rank: usize,
}

impl WeylGroup {
    /// Breadth-first closure from the identity by right multiplication with
    /// simple reflections, lowest index first. The first word found for an
    /// element is kept, so stored words are shortest and canonical.
    pub fn enumerate(rs: &RootSystem, size_guard: u128) -> Result<WeylGroup> {
        let expected = classical_weyl_order(rs.spec());
        if expected > size_guard {
            return Err(Error::GuardExceeded {
                what: "Weyl group order",
                requested: expected.to_string(),
                limit: size_guard.to_string(),
            });
        }
        let generators: Vec<IntMatrix> = (0..rs.rank()).map(|i| IntMatrix::simple_reflection(rs, i)).collect();
        let identity = WeylElement::identity(rs.rank());
        let mut index = HashMap::new();
        index.insert(identity.matrix.clone(), 0);
        let mut elements = vec![identity];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (i, s) in generators.iter().enumerate() {
                let matrix = elements[k].matrix.mul(s);
                if index.contains_key(&matrix) {
                    continue;
                }
                let mut word = elements[k].word.clone();
                word.push(i);
                index.insert(matrix.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(WeylElement { matrix, word });
            }
        }
        if elements.len() as u128 != expected {
            return Err(Error::Internal(format!(
                "enumerated {} elements for {}, expected {expected}",
                elements.len(),
                rs.label()
            )));
        }
        let longest = elements.len() - 1;
        Ok(WeylGroup {
            elements,
            index,
            longest,
            rank: rs.rank(),
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    pub fn longest(&self) -> &WeylElement {
        &self.elements[self.longest]
    }

    pub fn longest_index(&self) -> usize {
        self.longest
    }

    /// Index of the element with this matrix, if any.
    pub fn position(&self, matrix: &IntMatrix) -> Option<usize> {
        self.index.get(matrix).copied()
    }

    /// Index of the product `elements[a] * elements[b]`.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let m = self.elements[a].matrix.mul(&self.elements[b].matrix);
        self.index[&m]
    }

    pub fn inverse(&self, a: usize) -> usize {
        let id = IntMatrix::identity(self.rank);
        (0..self.order())
            .find(|&b| self.elements[a].matrix.mul(&self.elements[b].matrix) == id)
            .expect("groups have inverses")
    }

    /// Length computed by matrix lookup, independent of any stored word.
    pub fn length_of(&self, matrix: &IntMatrix) -> Option<usize> {
        self.position(matrix).map(|k| self.elements[k].length())
    }

    /// Every reduced word of `elements[k]`.
    pub fn reduced_words(&self, rs: &RootSystem, k: usize) -> Vec<Vec<usize>> {
        let target = &self.elements[k];
        if target.length() == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 0..self.rank {
            // Left descent: l(s_i w) < l(w).
            let prefix = IntMatrix::simple_reflection(rs, i).mul(&target.matrix);
            let j = self.index[&prefix];
            if self.elements[j].length() + 1 == target.length() {
                for mut tail in self.reduced_words(rs, j) {
                    tail.insert(0, i);
                    out.push(tail);
                }
            }
        }
        out.sort();
        out
    }
}
