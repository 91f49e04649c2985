//! Cells, dimensions and Poincaré polynomials of type A nilpotent and
//! parabolic Hessenberg varieties, computed from permutations, root sets
//! and tableaux.

pub mod cli;
pub mod components;
pub mod error;
pub mod format;
pub mod harness;
pub mod hessvar;
pub mod nilpotent;
pub mod poly;
pub mod rootsys;
pub mod schubert;
pub mod symgroup;

pub use components::{component_candidates, ComponentCandidate};
pub use error::{Error, Result};
pub use harness::{census, run_checks, Census, CellRow, CheckId, CheckReport, Failure, Granularity};
pub use hessvar::{
    cell_dim, h_from_j, hess_contains, is_parabolic_function, parabolic_cell_dim, poincare_hessenberg,
    poincare_parabolic_formula, w_x_j, HessCell, HessenbergFunction, HessenbergVariety, ParabolicHessenbergVariety,
};
pub use nilpotent::{
    base_filling, highest_form_rootset, is_highest_form, phi_v_closure, phi_v_filling, springer_cell_dim,
    springer_contains, springer_tableau, BaseFilling, Nilpotent, Partition, Tableau,
};
pub use poly::Polynomial;
pub use rootsys::{phi_h, phi_j, root_act, root_dominates, Root, RootSet};
pub use schubert::{
    bruhat_lower_ideal, is_lower_ideal_within, poincare_schubert_union, schubert_point, schubert_point_coset_check,
    schubert_union_for, verify_main_theorem, MainTheoremReport, SchubertPoint,
};
pub use symgroup::{enumerate_sn, string_decompose, ParabolicData, Permutation, StringDecomposition};
