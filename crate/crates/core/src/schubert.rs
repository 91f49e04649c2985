//! Schubert points of Springer-fiber flags, Bruhat lower ideals, and the
//! comparison of parabolic Hessenberg varieties with unions of Schubert
//! varieties.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hessvar::ParabolicHessenbergVariety;
use crate::nilpotent::{Nilpotent, Partition, Tableau};
use crate::poly::Polynomial;
use crate::symgroup::{enumerate_sn, ParabolicData, Permutation, StringDecomposition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertPoint {
    /// The flag `wB ∈ 𝓑^X` the point is attached to.
    pub source: Permutation,
    pub tableau: Tableau,
    /// `w_T = w_{n-1} ... w_1`.
    pub point: Permutation,
    pub strings: StringDecomposition,
}

impl SchubertPoint {
    /// `(ℓ_1, ..., ℓ_{n-1})`.
    pub fn string_lengths(&self) -> Vec<usize> {
        self.strings.lengths()
    }
}

impl Nilpotent {
    /// The `(q-1)`-th string has length `ℓ_{q-1}`, the number of `q`-row
    /// inversions, and ends at `s_{q-1}`.
    pub fn schubert_point(&self, w: &Permutation) -> Result<SchubertPoint> {
        let tableau = self.springer_tableau(w)?;
        if !tableau.is_row_strict() {
            return Err(Error::NotInSpringerFiber(w.to_string()));
        }
        let strings = StringDecomposition::from_lengths(&tableau.row_inversion_counts()?)?;
        Ok(SchubertPoint {
            source: w.clone(),
            point: strings.product(),
            tableau,
            strings,
        })
    }

    /// `(w, w_T)` for every permutation flag of the Springer fiber.
    pub fn schubert_points(&self) -> Vec<SchubertPoint> {
        enumerate_sn(self.degree())
            .filter_map(|w| self.schubert_point(&w).ok())
            .collect()
    }
}

pub fn schubert_point(w: &Permutation, partition: &Partition) -> Result<SchubertPoint> {
    Nilpotent::new(partition).schubert_point(w)
}

fn check_degrees(tops: &[Permutation], n: usize) -> Result<()> {
    if let Some(t) = tops.iter().find(|t| t.degree() != n) {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: t.degree(),
        });
    }
    Ok(())
}

/// Longer tops first, so that membership tests usually exit early.
fn sorted_tops(tops: &[Permutation]) -> Vec<Permutation> {
    let mut tops: Vec<Permutation> = tops.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    tops.sort_by_key(|t| std::cmp::Reverse(t.length()));
    tops
}

/// `{u ∈ S_n : u ≤ t for some top t}`, in lexicographic order.
pub fn bruhat_lower_ideal(tops: &[Permutation], n: usize) -> Result<Vec<Permutation>> {
    check_degrees(tops, n)?;
    let tops = sorted_tops(tops);
    let all: Vec<Permutation> = enumerate_sn(n).collect();
    Ok(all
        .into_par_iter()
        .filter(|u| tops.iter().any(|t| u.bruhat_leq_unchecked(t)))
        .collect())
}

/// Poincaré polynomial of `∪_t C̄_t`: the lower ideal graded by length.
pub fn poincare_schubert_union(tops: &[Permutation], n: usize) -> Result<Polynomial> {
    let mut p = Polynomial::zero();
    for u in bruhat_lower_ideal(tops, n)? {
        p.bump(u.length());
    }
    Ok(p)
}

/// Whether `set` is a lower order ideal of the subposet
/// `{u ∈ S_n : within(u)}`.
pub fn is_lower_ideal_within(set: &[Permutation], n: usize, within: impl Fn(&Permutation) -> bool + Sync) -> Result<bool> {
    check_degrees(set, n)?;
    let members: BTreeSet<&Permutation> = set.iter().collect();
    if set.iter().any(|s| !within(s)) {
        return Ok(false);
    }
    let tops = sorted_tops(set);
    let all: Vec<Permutation> = enumerate_sn(n).collect();
    Ok(all.par_iter().all(|u| {
        !within(u) || members.contains(u) || !tops.iter().any(|t| u.bruhat_leq_unchecked(t))
    }))
}

impl ParabolicHessenbergVariety {
    /// `{v_T ∘ w_J : v ∈ W(X,J)}`, deduplicated and sorted.
    pub fn schubert_union_tops(&self) -> Vec<Permutation> {
        let w_j = self.parabolic().longest_element();
        self.w_x_j()
            .iter()
            .map(|v| {
                let point = self
                    .nilpotent()
                    .schubert_point(v)
                    .expect("v lies in the Springer fiber")
                    .point;
                point.compose_unchecked(&w_j)
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn verify_main_theorem(&self) -> MainTheoremReport {
        let n = self.parabolic().degree();
        let tops = self.schubert_union_tops();
        let hessenberg_poly = self.variety().poincare();
        let schubert_union_poly = poincare_schubert_union(&tops, n).expect("degrees match");
        MainTheoremReport {
            lambda: self.nilpotent().partition.clone(),
            j: self.parabolic().simple_roots().to_vec(),
            equal: hessenberg_poly == schubert_union_poly,
            in_hypothesis: self.nilpotent().partition.in_main_hypothesis(),
            hessenberg_poly,
            schubert_union_poly,
            tops,
        }
    }

    /// For every `w` with `wB ∈ 𝓑^X`: `w ∈ W^J ⇔ w_T ∈ W^J`.
    pub fn schubert_point_coset_check(&self) -> bool {
        self.first_schubert_coset_violation().is_none()
    }

    pub(crate) fn first_schubert_coset_violation(&self) -> Option<Permutation> {
        let p = self.parabolic();
        self.nilpotent()
            .schubert_points()
            .into_iter()
            .find(|sp| p.is_min_coset_rep_unchecked(&sp.source) != p.is_min_coset_rep_unchecked(&sp.point))
            .map(|sp| sp.source)
    }
}

pub fn schubert_union_for(partition: &Partition, parabolic: &ParabolicData) -> Result<Vec<Permutation>> {
    Ok(ParabolicHessenbergVariety::new(partition, parabolic)?.schubert_union_tops())
}

pub fn verify_main_theorem(partition: &Partition, parabolic: &ParabolicData) -> Result<MainTheoremReport> {
    Ok(ParabolicHessenbergVariety::new(partition, parabolic)?.verify_main_theorem())
}

pub fn schubert_point_coset_check(partition: &Partition, parabolic: &ParabolicData) -> Result<bool> {
    Ok(ParabolicHessenbergVariety::new(partition, parabolic)?.schubert_point_coset_check())
}

/// Both sides of the Hessenberg/Schubert-union comparison for one `(λ, J)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainTheoremReport {
    pub lambda: Partition,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub hessenberg_poly: Polynomial,
    pub schubert_union_poly: Polynomial,
    pub equal: bool,
    pub in_hypothesis: bool,
    pub tops: Vec<Permutation>,
}
