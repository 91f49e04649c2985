//! The symmetric group `S_n` as the Weyl group of `GL_n`.
//!
//! Permutations are stored in one-line notation with 1-based values.
//! Composition follows `(u ∘ v)(x) = u(v(x))`, so a word `s_a s_b ...`
//! applies its rightmost letter first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rootsys::{Root, RootSet};

/// Largest supported degree; one-line images are stored as bytes.
pub const MAX_DEGREE: usize = 255;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "degree {n} exceeds {MAX_DEGREE}");
        Self {
            images: (1..=n as u8).collect(),
        }
    }

    /// Validates that `images` is a bijection of `{1, ..., n}`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty one-line notation".into()));
        }
        if n > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        let mut seen = vec![false; n + 1];
        for &x in images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Self {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { index: i, n });
        }
        let mut w = Self::identity(n);
        w.images.swap(i - 1, i);
        Ok(w)
    }

    /// Product `s_{word[0]} s_{word[1]} ...`; the empty word is the identity.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!("degree {n} out of range")));
        }
        let mut w = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::GeneratorOutOfRange { index: i, n });
            }
            // w ∘ s_i swaps positions i and i+1 of the one-line form.
            w.images.swap(i - 1, i);
        }
        Ok(w)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `w(x)` for `x` in `1..=n`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &x)| x as usize == p + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.degree()];
        for (p, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = (p + 1) as u8;
        }
        Self { images }
    }

    /// `self ∘ rhs`, i.e. `rhs` applied first.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        self.check_degree(rhs)?;
        Ok(self.compose_unchecked(rhs))
    }

    pub(crate) fn compose_unchecked(&self, rhs: &Self) -> Self {
        Self {
            images: rhs.images.iter().map(|&x| self.images[x as usize - 1]).collect(),
        }
    }

    pub(crate) fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(())
    }

    /// Number of inversions, which is the Bruhat length.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `{(i,j) : i < j, w(i) > w(j)}`, the positive roots sent negative by `w`.
    pub fn inversion_set(&self) -> RootSet {
        let n = self.degree();
        let mut set = RootSet::empty(n);
        for i in 1..=n {
            for j in i + 1..=n {
                if self.apply(i) > self.apply(j) {
                    set.insert_unchecked(Root::pair(i, j));
                }
            }
        }
        set
    }

    /// Bruhat comparison `self ≤ other` by the rank-matrix dominance
    /// criterion: for every prefix `1..=i` and threshold `k`, `self` has no
    /// more values `≥ k` in the prefix than `other` does.
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool> {
        self.check_degree(other)?;
        Ok(self.bruhat_leq_unchecked(other))
    }

    pub(crate) fn bruhat_leq_unchecked(&self, other: &Self) -> bool {
        let n = self.degree();
        // counts[k] = #{j ≤ i : w(j) ≥ k}, for k in 1..=n.
        let mut mine = [0u16; MAX_DEGREE + 2];
        let mut theirs = [0u16; MAX_DEGREE + 2];
        for i in 0..n {
            for c in &mut mine[1..=self.images[i] as usize] {
                *c += 1;
            }
            for c in &mut theirs[1..=other.images[i] as usize] {
                *c += 1;
            }
            if (1..=n).any(|k| mine[k] > theirs[k]) {
                return false;
            }
        }
        true
    }

    pub fn strings(&self) -> StringDecomposition {
        string_decompose(self)
    }

    /// The canonical reduced word read off the string decomposition.
    pub fn reduced_word(&self) -> Vec<usize> {
        self.strings().word()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Comma-separated one-line notation, e.g. `3,4,1,2`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, x) in self.images.iter().enumerate() {
            if p > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = crate::format::parse_list(s)?;
        Self::from_one_line(&images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Self::from_one_line(&images).map_err(serde::de::Error::custom)
    }
}

/// Lexicographic enumeration of `S_n` in one-line notation.
pub struct SnIter {
    next: Option<Vec<u8>>,
}

pub fn enumerate_sn(n: usize) -> SnIter {
    assert!((1..=MAX_DEGREE).contains(&n), "degree {n} out of range");
    SnIter {
        next: Some((1..=n as u8).collect()),
    }
}

impl Iterator for SnIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn next_lex(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// A subset `J` of the simple reflections, together with the block
/// structure it induces on positions `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParabolicData {
    n: usize,
    j: Vec<usize>,
    /// `block_end[p-1]` is the last position of the block containing `p`.
    block_end: Vec<usize>,
    block_start: Vec<usize>,
}

impl ParabolicData {
    /// Duplicates in `j` are ignored.
    pub fn new(n: usize, j: &[usize]) -> Result<Self> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidParabolic(format!("degree {n} out of range")));
        }
        let mut set = j.to_vec();
        set.sort_unstable();
        set.dedup();
        if let Some(&bad) = set.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::InvalidParabolic(format!(
                "simple root index {bad} not in 1..={}",
                n - 1
            )));
        }
        let mut in_j = vec![false; n + 1];
        for &i in &set {
            in_j[i] = true;
        }
        let mut block_start = vec![0; n];
        let mut block_end = vec![0; n];
        let mut start = 1;
        for p in 1..=n {
            if p == 1 || !in_j[p - 1] {
                start = p;
            }
            block_start[p - 1] = start;
        }
        let mut end = n;
        for p in (1..=n).rev() {
            if p == n || !in_j[p] {
                end = p;
            }
            block_end[p - 1] = end;
        }
        Ok(Self {
            n,
            j: set,
            block_end,
            block_start,
        })
    }

    /// `J` from a bitmask: bit `i-1` set means `i ∈ J`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        let j: Vec<usize> = (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        if n > 0 && mask >> (n - 1) != 0 {
            return Err(Error::InvalidParabolic(format!("mask {mask:#b} too wide for degree {n}")));
        }
        Self::new(n, &j)
    }

    /// All `2^{n-1}` subsets, in ascending bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = ParabolicData> {
        let count = 1u64 << (n.max(1) - 1);
        (0..count).map(move |m| Self::from_mask(n, m).expect("mask in range"))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn simple_roots(&self) -> &[usize] {
        &self.j
    }

    pub fn mask(&self) -> u64 {
        self.j.iter().map(|&i| 1u64 << (i - 1)).sum()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.j.binary_search(&i).is_ok()
    }

    pub fn block_start(&self, p: usize) -> usize {
        self.block_start[p - 1]
    }

    pub fn block_end(&self, p: usize) -> usize {
        self.block_end[p - 1]
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_start(a) == self.block_start(b)
    }

    /// Blocks as inclusive `(first, last)` position pairs, left to right.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut p = 1;
        while p <= self.n {
            let e = self.block_end(p);
            out.push((p, e));
            p = e + 1;
        }
        out
    }

    /// Block sizes `μ`, left to right.
    pub fn composition(&self) -> Vec<usize> {
        self.blocks().iter().map(|(a, b)| b - a + 1).collect()
    }

    fn check(&self, w: &Permutation) -> Result<()> {
        if w.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: w.degree(),
            });
        }
        Ok(())
    }

    /// `w(i) < w(i+1)` for all `i ∈ J`.
    pub fn is_min_coset_rep(&self, w: &Permutation) -> Result<bool> {
        self.check(w)?;
        Ok(self.is_min_coset_rep_unchecked(w))
    }

    pub(crate) fn is_min_coset_rep_unchecked(&self, w: &Permutation) -> bool {
        self.j.iter().all(|&i| w.apply(i) < w.apply(i + 1))
    }

    /// Same predicate read off the string decomposition:
    /// `ℓ(w_i) ≤ ℓ(w_{i-1})` for every `i ∈ J`, with `ℓ(w_0) = 0`.
    pub fn is_min_coset_rep_by_strings(&self, w: &Permutation) -> Result<bool> {
        self.check(w)?;
        let strings = w.strings();
        Ok(self
            .j
            .iter()
            .all(|&i| strings.string_length(i) <= strings.string_length(i - 1)))
    }

    /// Whether `y` permutes positions within blocks, i.e. `y ∈ W_J`.
    pub fn is_in_parabolic_subgroup(&self, y: &Permutation) -> bool {
        y.degree() == self.n && (1..=self.n).all(|p| self.same_block(p, y.apply(p)))
    }

    /// Factors `w = v ∘ y` with `v ∈ W^J` and `y ∈ W_J`.
    ///
    /// Within each block, `y⁻¹` lists the block's positions by ascending
    /// `w`-value, which makes `v = w ∘ y⁻¹` increasing on every block.
    pub fn coset_factor(&self, w: &Permutation) -> Result<(Permutation, Permutation)> {
        self.check(w)?;
        let mut y_inv = vec![0usize; self.n];
        for (a, b) in self.blocks() {
            let mut positions: Vec<usize> = (a..=b).collect();
            positions.sort_by_key(|&p| w.apply(p));
            for (offset, p) in positions.into_iter().enumerate() {
                y_inv[a - 1 + offset] = p;
            }
        }
        let y_inv = Permutation::from_one_line(&y_inv)?;
        let v = w.compose_unchecked(&y_inv);
        Ok((v, y_inv.inverse()))
    }

    /// `w_J`, reversing each block.
    pub fn longest_element(&self) -> Permutation {
        let mut images = vec![0usize; self.n];
        for (a, b) in self.blocks() {
            for p in a..=b {
                images[p - 1] = a + b - p;
            }
        }
        Permutation::from_one_line(&images).expect("block reversal is a bijection")
    }

    /// All elements of `W_J`, in lexicographic one-line order.
    pub fn parabolic_subgroup(&self) -> Vec<Permutation> {
        let mut out: Vec<Vec<usize>> = vec![Vec::with_capacity(self.n)];
        for (a, b) in self.blocks() {
            let local: Vec<Permutation> = enumerate_sn(b - a + 1).collect();
            let mut next = Vec::with_capacity(out.len() * local.len());
            for prefix in &out {
                for y in &local {
                    let mut images = prefix.clone();
                    images.extend(y.one_line().into_iter().map(|x| x + a - 1));
                    next.push(images);
                }
            }
            out = next;
        }
        out.iter()
            .map(|images| Permutation::from_one_line(images).expect("block product"))
            .collect()
    }

    /// `Σ_{y ∈ W_J} t^{ℓ(y)}` by enumerating `W_J`.
    pub fn poincare_by_enumeration(&self) -> Polynomial {
        let mut p = Polynomial::zero();
        for y in self.parabolic_subgroup() {
            p.bump(y.length());
        }
        p
    }

    /// `Π_b [m_b]_t!` over the block sizes.
    pub fn poincare(&self) -> Polynomial {
        self.composition()
            .into_iter()
            .fold(Polynomial::one(), |acc, m| &acc * &Polynomial::t_factorial(m))
    }
}

/// Comma-separated simple root indices; `∅` prints as the empty string.
impl fmt::Display for ParabolicData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::join(&self.j))
    }
}

/// The factorization `w = w_{n-1} w_{n-2} ... w_1` into strings
/// `w_i = s_{k_i} s_{k_i + 1} ... s_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringDecomposition {
    n: usize,
    /// `starts[i-1] = Some(k_i)`, or `None` when `w_i = e`.
    starts: Vec<Option<usize>>,
}

impl StringDecomposition {
    /// Builds strings from their lengths `ℓ(w_1), ..., ℓ(w_{n-1})`, each
    /// string ending at its own index.
    pub fn from_lengths(lengths: &[usize]) -> Result<Self> {
        let n = lengths.len() + 1;
        let mut starts = Vec::with_capacity(lengths.len());
        for (idx, &len) in lengths.iter().enumerate() {
            let i = idx + 1;
            if len > i {
                return Err(Error::InvalidPermutation(format!(
                    "string {i} cannot have length {len}"
                )));
            }
            starts.push((len > 0).then(|| i + 1 - len));
        }
        Ok(Self { n, starts })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// `k_i` for `i` in `1..n`, `None` for an empty string.
    pub fn start(&self, i: usize) -> Option<usize> {
        self.starts[i - 1]
    }

    /// `ℓ(w_i)`, with `ℓ(w_0) = 0`.
    pub fn string_length(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.starts[i - 1].map_or(0, |k| i - k + 1)
    }

    pub fn lengths(&self) -> Vec<usize> {
        (1..self.n).map(|i| self.string_length(i)).collect()
    }

    /// Generator word `w_{n-1} ... w_1`.
    pub fn word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        for i in (1..self.n).rev() {
            if let Some(k) = self.start(i) {
                word.extend(k..=i);
            }
        }
        word
    }

    pub fn product(&self) -> Permutation {
        Permutation::from_word(&self.word(), self.n).expect("string indices in range")
    }
}

/// Renders the word as `s1 s2 s1`, or `e` for the identity.
impl fmt::Display for StringDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.word();
        if word.is_empty() {
            return f.write_str("e");
        }
        for (idx, i) in word.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// Peels strings from the top: `w_{m-1}` is empty when `w(m) = m`, and
/// otherwise starts at `k_{m-1} = w(m)`; then `w ← w_{m-1}⁻¹ ∘ w`.
pub fn string_decompose(w: &Permutation) -> StringDecomposition {
    let n = w.degree();
    let mut starts = vec![None; n.saturating_sub(1)];
    let mut current = w.one_line();
    for m in (2..=n).rev() {
        let k = current[m - 1];
        if k == m {
            continue;
        }
        starts[m - 2] = Some(k);
        // w_{m-1} = s_k ... s_{m-1} is the cycle k → k+1 → ... → m → k on
        // values; its inverse sends k ↦ m and x ↦ x-1 for k < x ≤ m.
        for x in current.iter_mut() {
            if *x == k {
                *x = m;
            } else if *x > k && *x <= m {
                *x -= 1;
            }
        }
    }
    StringDecomposition { n, starts }
}
