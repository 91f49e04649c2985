//! Candidate irreducible components of `𝓑(X, 𝔭_J)`.
//!
//! Every cell `C_{v y} ∩ 𝓑(X,𝔭_J)` lies in the closure of
//! `C_{v w_J} ∩ 𝓑(X,𝔭_J)`, so components are indexed by a subset of
//! `W(X,J)`. Which subset is not known in general; the `heuristic_maximal`
//! flag marks `v` whose `v_T w_J` is Bruhat-maximal among all such
//! products. It is evidence, not a theorem.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hessvar::ParabolicHessenbergVariety;
use crate::nilpotent::Partition;
use crate::symgroup::{ParabolicData, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCandidate {
    pub v: Permutation,
    /// `v ∘ w_J`.
    pub top_cell: Permutation,
    /// `v_T ∘ w_J`.
    pub schubert_top: Permutation,
    /// `dim(C_{v w_J} ∩ 𝓑(X,𝔭_J))`.
    pub cell_dim: usize,
    /// The cell is all of the Schubert cell `C_{v w_J}`.
    pub full_cell: bool,
    pub heuristic_maximal: bool,
}

impl ParabolicHessenbergVariety {
    /// One candidate per `v ∈ W(X,J)`, sorted by descending `cell_dim` and
    /// then by `v` in one-line order.
    pub fn component_candidates(&self) -> Vec<ComponentCandidate> {
        let w_j = self.parabolic().longest_element();
        let top_len = w_j.length();
        let mut out: Vec<ComponentCandidate> = self
            .w_x_j()
            .into_iter()
            .map(|v| {
                let sp = self
                    .nilpotent()
                    .schubert_point(&v)
                    .expect("v lies in the Springer fiber");
                let top_cell = v.compose_unchecked(&w_j);
                let springer_dim = self
                    .nilpotent()
                    .springer_cell_dim(&v)
                    .expect("v lies in the Springer fiber");
                let cell_dim = springer_dim + top_len;
                ComponentCandidate {
                    full_cell: cell_dim == top_cell.length(),
                    schubert_top: sp.point.compose_unchecked(&w_j),
                    top_cell,
                    cell_dim,
                    heuristic_maximal: false,
                    v,
                }
            })
            .collect();
        let tops: Vec<Permutation> = out.iter().map(|c| c.schubert_top.clone()).collect();
        for c in &mut out {
            c.heuristic_maximal = !tops
                .iter()
                .any(|t| *t != c.schubert_top && c.schubert_top.bruhat_leq_unchecked(t));
        }
        out.sort_by(|a, b| b.cell_dim.cmp(&a.cell_dim).then_with(|| a.v.cmp(&b.v)));
        out
    }
}

pub fn component_candidates(partition: &Partition, parabolic: &ParabolicData) -> Result<Vec<ComponentCandidate>> {
    Ok(ParabolicHessenbergVariety::new(partition, parabolic)?.component_candidates())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(w: &[usize], n: usize) -> Permutation {
        Permutation::from_word(w, n).unwrap()
    }

    #[test]
    fn single_point() {
        let c = component_candidates(&"1".parse().unwrap(), &ParabolicData::new(1, &[]).unwrap()).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].v.is_identity() && c[0].heuristic_maximal && c[0].full_cell);
    }

    #[test]
    fn two_one_one_with_j13() {
        let c = component_candidates(&"2,1,1".parse().unwrap(), &ParabolicData::new(4, &[1, 3]).unwrap()).unwrap();
        assert_eq!(c.len(), 4);
        let maximal: Vec<&ComponentCandidate> = c.iter().filter(|c| c.heuristic_maximal).collect();
        let mut vs: Vec<Permutation> = maximal.iter().map(|c| c.v.clone()).collect();
        vs.sort();
        let mut expected = vec![word(&[1, 2], 4), word(&[2, 1, 3, 2], 4)];
        expected.sort();
        assert_eq!(vs, expected);

        let v1 = c.iter().find(|c| c.v == word(&[1, 2], 4)).unwrap();
        assert_eq!(v1.schubert_top, word(&[1, 2, 1, 3], 4));
        assert_eq!(v1.cell_dim, 4);
        assert!(v1.full_cell);
        let v2 = c.iter().find(|c| c.v == word(&[2, 1, 3, 2], 4)).unwrap();
        assert_eq!(v2.schubert_top, word(&[3, 2, 1, 3], 4));
        assert!(!v2.full_cell);

        assert!(c.windows(2).all(|w| w[0].cell_dim >= w[1].cell_dim));
    }
}
