//! Window-notation calculus for four path-diagram families of
//! permutation-like Coxeter groups: finite symmetric and signed-symmetric
//! groups and their affine (type A-tilde and C-tilde) counterparts.
//!
//! Elements are finite windows of integers extended to all of the integers
//! by a family-specific symmetry. On top of that sit reduced-word
//! machinery, displacement statistics, one-line pattern search,
//! length-generating polynomials, and exact integer root systems.

pub mod element;
pub mod enumeration;
pub mod error;
pub mod family;
pub mod patterns;
pub mod poly;
pub mod roots;
pub mod stats;
pub mod words;

pub use element::Element;
pub use enumeration::{
    avoider_polynomial, bfs_by_length, bfs_full_group, catalan_polynomials,
    degenerate_isomorphism_check, degenerate_isomorphism_image, typeb_polynomials,
    verify_main_theorem, verify_recurrence, AvoiderPolynomial, IsomorphismReport, LengthCensus,
    RecurrenceReport, TheoremReport, DEFAULT_BUDGET,
};
pub use error::{Error, Result};
pub use family::{Family, GroupSpec};
pub use patterns::{avoids_p, classical_contains, contains_global_321, p_patterns, PatternWitness};
pub use poly::QPolynomial;
pub use roots::{
    check_dis_equals_height, check_tight_factor_condition, min_height_cost, positive_roots_up_to_height,
    reflect_root, root_system_for, DisHeightReport, PositiveRoot, TightFactorReport, RootSystemSpec,
    RootVariant, RootVector,
};
pub use stats::{crossing_numbers, disarray, gap, is_tight, Crossing};
pub use words::{
    condition_b, condition_b_prime, coxeter_length, is_fully_commutative, is_reduced,
    neighbor_letter, reduced_words, reduced_words_complete, right_descents, word_to_element,
    ReducedWords, Word,
};
