//! Equivariant vector bundle model of the Drinfeld centre of Rep(G): modules
//! graded by G with the conjugation action, and their fibrewise and
//! convolution products. Used only to test the engine in `bilax-core`.
//!
//! Grading convention: a vector `v` of degree `g` crosses `x` as
//! `β_X(x ⊗ v) = v ⊗ g⁻¹·x`, so `β_X = Σ_g (P_g ⊗ ρ_X(g⁻¹)) ∘ flip`. With this
//! choice the convolution grading of `c ⊗_c d` is `(c ⊗_c d)_g = ⊕_{ab=g} c_a ⊗ d_b`.

pub mod bridge;
pub mod error;
pub mod simple;
pub mod yd;

pub use bridge::{
    beta_from_grading, conv_agreement, fibre_dims, from_yd, pair_agreement, round_trip_deviation, sym_agreement,
    to_yd, PairAgreement, SymAgreement,
};
pub use error::{OracleError, Result};
pub use simple::{
    conjugacy_class_count, enumerate_simples, fusion_law, fusion_table, is_elementary_abelian_2,
    simple_count, SimpleYd,
};
pub use yd::{convolution, fibrewise, inclusion_relation_check, Fibrewise, YdModule};
