//! The coefficient ring `A`: ℚ, ℤ and imaginary quadratic orders, with
//! fractional ideals and form class groups.

pub mod domain;
pub mod element;
pub mod forms;
pub mod ideal;
pub mod lattice;

pub use domain::{CoefficientDomain, QuadraticOrder};
pub use element::QuadElement;
pub use forms::{reduced_forms, ClassGroup, QuadForm};
pub use ideal::{class_group, ideal_class_form, CoeffIdeal, CoeffIdealJson};
pub use lattice::Lattice2;
