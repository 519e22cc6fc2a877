//! Graded elements and homogeneous ideals of `A[Γ] ⊆ K[G]`.

mod classes;
mod content;
mod criterion;
mod element;
mod homogeneous;
mod jy;

pub use classes::{decompose_class, phi_map, psi_map, psi_prime, CoeffClass, HomogeneousClass};
pub use content::{
    content, gauss_check, northcott_exponent, pa_inclusion_check, search_northcott_fixture,
    NorthcottFixture, PaReport,
};
pub use criterion::{class_group_criterion, ClassGroupCondition, CriterionReport};
pub use element::{parse_scalar, GradedElement};
pub use homogeneous::{content_of_ideal, HomogeneousIdeal};
pub use jy::{extract_jy, IdealPairJY};
