//! Type C Kashiwara-Nakashima tableaux, Sheats symplectic jeu de taquin and
//! two ways of computing the symplectic right key map: by jeu de taquin and
//! by direct inspection of the tableau.

pub mod cli;
pub mod column;
pub mod enumerate;
pub mod error;
pub mod keys;
pub mod letter;
pub mod sjdt;
pub mod tableau;

pub use column::{Column, OneCcReport, SplitPair};
pub use enumerate::{enumerate_kn, enumerate_kn_skew, KnEnumerator};
pub use error::{Error, Result};
pub use keys::{
    direct_extend, direct_extend_traced, match_columns, right_key, right_key_column_direct,
    right_key_column_direct_traced, right_key_column_jdt, right_key_from_variants,
    right_key_type_a_oracle, ExtendStep, Matching, Method,
};
pub use letter::{compare_letters, Cell, Letter, Partition, WeightVector};
pub use sjdt::{
    last_column, rectify, rectify_traced, rectify_with, reverse_slide, reverse_slide_traced,
    skew_variant, skew_variant_with, slide_from_inner_corner, swap_column_lengths,
    swap_column_lengths_traced, PuncturedTableau, SlideKind, SlideStep, SlideTrace,
};
pub use tableau::{
    is_key, key_from_vector, key_in_orbit, orbit_vectors, KeyTableau, KnTableau, KnViolation,
    SkewTableau,
};
