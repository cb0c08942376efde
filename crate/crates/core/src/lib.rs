//! Positive definite binary quadratic forms under the extended modular group.
//!
//! Everything is exact: coefficients are arbitrary precision integers and points
//! of the upper half plane are quadratic irrationals `(p + √D)/q`. Floating point
//! appears only in [`AlgebraicPoint::to_f64`], for rendering.
//!
//! ```
//! use qforms::{reduce, QuadraticForm};
//!
//! let f = QuadraticForm::new(11, 49, 55);
//! let r = reduce(&f).unwrap();
//! assert_eq!(r.reduced, QuadraticForm::new(1, 1, 5));
//! assert_eq!(r.witness.act_on_form(&f), r.reduced);
//! ```

pub mod classes;
pub mod error;
pub mod field;
pub mod forms;
pub mod geometry;
pub mod group;
pub mod reduction;
pub mod residues;

pub use classes::{
    almost_reduced_count, class_number, enumerate_almost_reduced, enumerate_reduced,
    DiscriminantQuery,
};
pub use error::{Error, Result};
pub use field::{OrbitExplorer, OrbitReport, QuadFieldElement};
pub use forms::{Discriminant, QuadraticForm};
pub use geometry::{act_on_point, base_point, form_from_point, AlgebraicPoint};
pub use group::{generator_element, GeneratorWord, GroupElement, Letter};
pub use reduction::{equivalent, minimum_represented, reduce, EquivalenceMode, ReductionResult};
pub use residues::{
    is_odd_prime, legendre, quadratic_residues, residue_complement_law, scaled_form_criterion,
    scaled_representation_oracle,
};
