//! The type A root system, with roots stored as index pairs.
//!
//! The pair `(i,j)`, `i ≠ j`, stands for `ε_i − ε_j`; it is positive when
//! `i < j`, in which case it equals `α_i + ... + α_{j-1}` and its root
//! vector is the elementary matrix `E_{ij}`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hessvar::HessenbergFunction;
use crate::symgroup::{ParabolicData, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    i: usize,
    j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i == j {
            return Err(Error::InvalidRoot { i, j, n: i.max(j) });
        }
        Ok(Self { i, j })
    }

    #[inline]
    pub(crate) fn pair(i: usize, j: usize) -> Self {
        debug_assert!(i != j && i > 0 && j > 0);
        Self { i, j }
    }

    #[inline]
    pub fn source(&self) -> usize {
        self.i
    }

    #[inline]
    pub fn target(&self) -> usize {
        self.j
    }

    #[inline]
    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn negate(&self) -> Self {
        Self { i: self.j, j: self.i }
    }

    /// `w · (i,j) = (w(i), w(j))`.
    #[inline]
    pub(crate) fn act(&self, w: &Permutation) -> Self {
        Self {
            i: w.apply(self.i),
            j: w.apply(self.j),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// `w · r`. The sign picked up by the conjugated root vector is dropped;
/// only which root space it lands in matters.
pub fn root_act(w: &Permutation, r: Root) -> Result<Root> {
    let n = w.degree();
    if r.i > n || r.j > n {
        return Err(Error::InvalidRoot { i: r.i, j: r.j, n });
    }
    Ok(r.act(w))
}

/// Strict dominance `g ⪈ h` among positive roots: `g − h` is a nonzero sum
/// of positive roots, which for `g = (i,j)` and `h = (k,l)` means
/// `i ≤ k`, `l ≤ j` and `g ≠ h`.
pub fn root_dominates(g: Root, h: Root) -> Result<bool> {
    for r in [g, h] {
        if !r.is_positive() {
            return Err(Error::NonPositiveRoot { i: r.i, j: r.j });
        }
    }
    Ok(dominates(g, h))
}

#[inline]
pub(crate) fn dominates(g: Root, h: Root) -> bool {
    g.i <= h.i && h.j <= g.j && g != h
}

/// A set of roots of `GL_n`, stored as a dense `n × n` membership grid so
/// that complements are taken relative to a known degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootSet {
    n: usize,
    members: Vec<bool>,
}

impl RootSet {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            members: vec![false; n * n],
        }
    }

    /// `Φ⁺`.
    pub fn positive(n: usize) -> Self {
        let mut set = Self::empty(n);
        for i in 1..=n {
            for j in i + 1..=n {
                set.insert_unchecked(Root::pair(i, j));
            }
        }
        set
    }

    /// `Φ`.
    pub fn all(n: usize) -> Self {
        let mut set = Self::positive(n);
        for i in 1..=n {
            for j in i + 1..=n {
                set.insert_unchecked(Root::pair(j, i));
            }
        }
        set
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut set = Self::empty(n);
        for &(i, j) in pairs {
            set.insert(Root::new(i, j)?)?;
        }
        Ok(set)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    #[inline]
    fn index(&self, r: Root) -> usize {
        (r.i - 1) * self.n + (r.j - 1)
    }

    pub fn insert(&mut self, r: Root) -> Result<bool> {
        if r.i > self.n || r.j > self.n {
            return Err(Error::InvalidRoot { i: r.i, j: r.j, n: self.n });
        }
        Ok(self.insert_unchecked(r))
    }

    #[inline]
    pub(crate) fn insert_unchecked(&mut self, r: Root) -> bool {
        let idx = self.index(r);
        !std::mem::replace(&mut self.members[idx], true)
    }

    #[inline]
    pub fn contains(&self, r: Root) -> bool {
        r.i <= self.n && r.j <= self.n && self.members[self.index(r)]
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.contains(&true)
    }

    /// Members in ascending `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = Root> + '_ {
        let n = self.n;
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(idx, _)| Root::pair(idx / n + 1, idx % n + 1))
    }

    pub fn to_pairs(&self) -> Vec<(usize, usize)> {
        self.iter().map(|r| (r.i, r.j)).collect()
    }

    fn zip_with(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        assert_eq!(self.n, other.n, "root sets of different degree");
        Self {
            n: self.n,
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a && !b)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    /// `Φ⁺ − self`.
    pub fn positive_complement(&self) -> Self {
        Self::positive(self.n).difference(self)
    }

    pub fn positive_part(&self) -> Self {
        self.intersection(&Self::positive(self.n))
    }

    pub fn negative_part(&self) -> Self {
        self.difference(&Self::positive(self.n))
    }

    /// `w(S) = {w · r : r ∈ S}`.
    pub fn image_under(&self, w: &Permutation) -> Result<Self> {
        if w.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: w.degree(),
            });
        }
        let mut out = Self::empty(self.n);
        for r in self.iter() {
            out.insert_unchecked(r.act(w));
        }
        Ok(out)
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sorted list, e.g. `{(1,3),(2,4)}`.
impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, r) in self.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

/// Serialized as `{"n": .., "roots": [[i,j], ...]}`.
#[derive(Serialize, Deserialize)]
struct RootSetRepr {
    n: usize,
    roots: Vec<(usize, usize)>,
}

impl Serialize for RootSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RootSetRepr {
            n: self.n,
            roots: self.to_pairs(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RootSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RootSetRepr::deserialize(deserializer)?;
        Self::from_pairs(repr.n, &repr.roots).map_err(serde::de::Error::custom)
    }
}

/// `Φ_J`: roots `(i,j)` with `i` and `j` in the same block.
pub fn phi_j(parabolic: &ParabolicData) -> RootSet {
    let n = parabolic.degree();
    let mut set = RootSet::empty(n);
    for i in 1..=n {
        for j in 1..=n {
            if i != j && parabolic.same_block(i, j) {
                set.insert_unchecked(Root::pair(i, j));
            }
        }
    }
    set
}

/// `Φ_H = {(i,j) : i ≠ j, i ≤ h(j)}`; column `j` of `H` is free in its
/// first `h(j)` rows.
pub fn phi_h(h: &HessenbergFunction) -> RootSet {
    let n = h.degree();
    let mut set = RootSet::empty(n);
    for j in 1..=n {
        for i in 1..=h.value(j) {
            if i != j {
                set.insert_unchecked(Root::pair(i, j));
            }
        }
    }
    set
}
