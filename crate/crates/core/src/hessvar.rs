//! Nilpotent Hessenberg varieties `𝓑(X, H)` in type A: membership of
//! permutation flags, cell dimensions of the affine paving, and Poincaré
//! polynomials, for general Hessenberg functions and for the parabolic
//! case `H = 𝔭_J`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::format;
use crate::nilpotent::{Nilpotent, Partition};
use crate::poly::Polynomial;
use crate::rootsys::{phi_h, Root, RootSet};
use crate::symgroup::{enumerate_sn, ParabolicData, Permutation, MAX_DEGREE};

/// `h : {1..n} → {1..n}` with `h(i) ≥ i` and `h` weakly increasing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HessenbergFunction {
    h: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(h: Vec<usize>) -> Result<Self> {
        let n = h.len();
        let text = format::join(&h);
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidHessenberg(format!("degree {n} out of range")));
        }
        for (idx, &v) in h.iter().enumerate() {
            let i = idx + 1;
            if v < i || v > n {
                return Err(Error::InvalidHessenberg(format!(
                    "{text}: h({i}) = {v} must lie in {i}..={n}"
                )));
            }
            if idx > 0 && v < h[idx - 1] {
                return Err(Error::InvalidHessenberg(format!(
                    "{text}: h({i}) = {v} is smaller than h({}) = {}",
                    i - 1,
                    h[idx - 1]
                )));
            }
        }
        Ok(Self { h })
    }

    /// `h(i) = i`, whose Hessenberg space is `𝔟`.
    pub fn identity(n: usize) -> Self {
        Self { h: (1..=n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.h.len()
    }

    pub fn value(&self, i: usize) -> usize {
        self.h[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.h
    }

    /// Image equals the set of fixed points.
    pub fn is_parabolic(&self) -> bool {
        self.h.iter().all(|&v| self.value(v) == v)
    }

    /// `J = {i : h(i) ≠ i}` for a parabolic `h`.
    pub fn to_parabolic(&self) -> Result<ParabolicData> {
        if !self.is_parabolic() {
            return Err(Error::NotParabolic(self.to_string()));
        }
        let j: Vec<usize> = (1..=self.degree()).filter(|&i| self.value(i) != i).collect();
        ParabolicData::new(self.degree(), &j)
    }
}

impl fmt::Debug for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h({self})")
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::join(&self.h))
    }
}

impl FromStr for HessenbergFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(format::parse_list(s)?)
    }
}

impl Serialize for HessenbergFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.h.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HessenbergFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Self::new(Vec::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

/// `h(i)` is the last position of the block containing `i`, so `H = 𝔭_J`.
pub fn h_from_j(parabolic: &ParabolicData) -> HessenbergFunction {
    HessenbergFunction {
        h: (1..=parabolic.degree()).map(|i| parabolic.block_end(i)).collect(),
    }
}

pub fn is_parabolic_function(h: &HessenbergFunction) -> bool {
    h.is_parabolic()
}

/// A permutation flag `wB` of `𝓑(X, 𝔭_J)` with its cell dimension and
/// factorization `w = v ∘ y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HessCell {
    pub w: Permutation,
    pub dim: usize,
    pub v: Permutation,
    pub y: Permutation,
}

/// `𝓑(X, H)` for the highest-form `X` of Jordan type `λ`.
#[derive(Debug, Clone)]
pub struct HessenbergVariety {
    nilpotent: Nilpotent,
    h: HessenbergFunction,
    phi_h: RootSet,
}

impl HessenbergVariety {
    pub fn new(partition: &Partition, h: &HessenbergFunction) -> Result<Self> {
        if partition.size() != h.degree() {
            return Err(Error::DegreeMismatch {
                expected: partition.size(),
                found: h.degree(),
            });
        }
        Ok(Self {
            nilpotent: Nilpotent::new(partition),
            h: h.clone(),
            phi_h: phi_h(h),
        })
    }

    pub fn nilpotent(&self) -> &Nilpotent {
        &self.nilpotent
    }

    pub fn hessenberg(&self) -> &HessenbergFunction {
        &self.h
    }

    pub fn degree(&self) -> usize {
        self.h.degree()
    }

    /// `C_w ∩ 𝓑(X,H) ≠ ∅` iff `w⁻¹ · γ ∈ Φ_H` for every `γ ∈ Φ_X`.
    pub fn contains(&self, w: &Permutation) -> Result<bool> {
        self.nilpotent.check(w)?;
        Ok(self.contains_inv(&w.inverse()))
    }

    fn contains_inv(&self, w_inv: &Permutation) -> bool {
        self.nilpotent
            .phi_x
            .iter()
            .all(|g| self.phi_h.contains(g.act(w_inv)))
    }

    /// `d_w = |N(w⁻¹) ∩ Φ(𝒱)^c| + |N(w⁻¹) ∩ Φ(𝒱) ∩ w(Φ_H⁻)|`.
    pub fn cell_dim(&self, w: &Permutation) -> Result<usize> {
        self.nilpotent.check(w)?;
        let w_inv = w.inverse();
        if !self.contains_inv(&w_inv) {
            return Err(Error::EmptyCell(w.to_string()));
        }
        Ok(self.cell_dim_inv(&w_inv))
    }

    fn cell_dim_inv(&self, w_inv: &Permutation) -> usize {
        let n = self.degree();
        let mut dim = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                let (a, b) = (w_inv.apply(i), w_inv.apply(j));
                if a < b {
                    continue;
                }
                let g = Root::pair(i, j);
                // γ ∈ w(Φ_H⁻) iff w⁻¹·γ ∈ Φ_H⁻; w⁻¹·γ = (a,b) is negative here.
                if !self.nilpotent.phi_v.contains(g) || self.phi_h.contains(Root::pair(a, b)) {
                    dim += 1;
                }
            }
        }
        dim
    }

    /// `(w, d_w)` for every permutation flag in the variety, lexicographic.
    pub fn cells(&self) -> Vec<(Permutation, usize)> {
        enumerate_sn(self.degree())
            .filter_map(|w| {
                let w_inv = w.inverse();
                self.contains_inv(&w_inv).then(|| {
                    let d = self.cell_dim_inv(&w_inv);
                    (w, d)
                })
            })
            .collect()
    }

    /// Betti numbers from the paving: one `t^{d_w}` per nonempty cell.
    pub fn poincare(&self) -> Polynomial {
        let mut p = Polynomial::zero();
        for (_, d) in self.cells() {
            p.bump(d);
        }
        p
    }
}

/// `𝓑(X, 𝔭_J)`.
#[derive(Debug, Clone)]
pub struct ParabolicHessenbergVariety {
    variety: HessenbergVariety,
    parabolic: ParabolicData,
}

impl ParabolicHessenbergVariety {
    pub fn new(partition: &Partition, parabolic: &ParabolicData) -> Result<Self> {
        Ok(Self {
            variety: HessenbergVariety::new(partition, &h_from_j(parabolic))?,
            parabolic: parabolic.clone(),
        })
    }

    /// Refuses non-parabolic `h`.
    pub fn from_hessenberg(partition: &Partition, h: &HessenbergFunction) -> Result<Self> {
        Self::new(partition, &h.to_parabolic()?)
    }

    pub fn variety(&self) -> &HessenbergVariety {
        &self.variety
    }

    pub fn nilpotent(&self) -> &Nilpotent {
        &self.variety.nilpotent
    }

    pub fn parabolic(&self) -> &ParabolicData {
        &self.parabolic
    }

    /// `dim(C_v ∩ 𝓑^X) + ℓ(y)` for `w = v ∘ y`.
    pub fn parabolic_cell_dim(&self, w: &Permutation) -> Result<usize> {
        let (v, y) = self.parabolic.coset_factor(w)?;
        if !self.nilpotent().springer_contains_by_roots(&v)? {
            return Err(Error::EmptyCell(w.to_string()));
        }
        Ok(self.nilpotent().springer_cell_dim(&v)? + y.length())
    }

    /// `W(X,J)`: minimal coset representatives whose flag lies in `𝓑^X`,
    /// in lexicographic order.
    pub fn w_x_j(&self) -> Vec<Permutation> {
        enumerate_sn(self.variety.degree())
            .filter(|v| self.parabolic.is_min_coset_rep_unchecked(v))
            .filter(|v| {
                self.nilpotent()
                    .springer_contains(v)
                    .expect("degree checked at construction")
            })
            .collect()
    }

    /// `Σ_{v ∈ W(X,J)} t^{dim(C_v ∩ 𝓑^X)} · Σ_{y ∈ W_J} t^{ℓ(y)}`.
    pub fn poincare_formula(&self) -> Polynomial {
        let springer: Polynomial = self
            .w_x_j()
            .iter()
            .map(|v| {
                let d = self
                    .nilpotent()
                    .springer_cell_dim(v)
                    .expect("v lies in the Springer fiber");
                Polynomial::monomial(d)
            })
            .sum();
        &springer * &self.parabolic.poincare()
    }

    /// Every nonempty cell with its coset factorization, lexicographic in `w`.
    pub fn cells(&self) -> Vec<HessCell> {
        self.variety
            .cells()
            .into_iter()
            .map(|(w, dim)| {
                let (v, y) = self.parabolic.coset_factor(&w).expect("degrees match");
                HessCell { w, dim, v, y }
            })
            .collect()
    }
}

pub fn hess_contains(w: &Permutation, partition: &Partition, h: &HessenbergFunction) -> Result<bool> {
    HessenbergVariety::new(partition, h)?.contains(w)
}

pub fn cell_dim(w: &Permutation, partition: &Partition, h: &HessenbergFunction) -> Result<usize> {
    HessenbergVariety::new(partition, h)?.cell_dim(w)
}

pub fn parabolic_cell_dim(w: &Permutation, partition: &Partition, parabolic: &ParabolicData) -> Result<usize> {
    ParabolicHessenbergVariety::new(partition, parabolic)?.parabolic_cell_dim(w)
}

pub fn w_x_j(partition: &Partition, parabolic: &ParabolicData) -> Result<Vec<Permutation>> {
    Ok(ParabolicHessenbergVariety::new(partition, parabolic)?.w_x_j())
}

pub fn poincare_hessenberg(partition: &Partition, h: &HessenbergFunction) -> Result<Polynomial> {
    Ok(HessenbergVariety::new(partition, h)?.poincare())
}

pub fn poincare_parabolic_formula(partition: &Partition, parabolic: &ParabolicData) -> Result<Polynomial> {
    Ok(ParabolicHessenbergVariety::new(partition, parabolic)?.poincare_formula())
}
