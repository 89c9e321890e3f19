//! Tiled orders in central simple algebras: exponent matrices, structural
//! invariants, reflection classes of their polytopes, the norm of their
//! normalizers, and global type numbers.
//!
//! ```
//! use tiled_core::{reflection_class_count, ExponentMatrix};
//!
//! let rows = vec![vec![0, 1, 1, 2], vec![2, 0, 2, 2], vec![2, 1, 0, 1], vec![1, 1, 0, 0]];
//! let order = ExponentMatrix::validate(4, &rows).unwrap();
//! assert_eq!(order.vertex_types().as_slice(), &[1, 3, 3, 1]);
//! assert_eq!(reflection_class_count(&order), 2);
//! ```

pub mod abgroup;
pub mod apartment;
pub mod arith;
pub mod classes;
pub mod error;
pub mod exponent;
pub mod monomial;
pub mod perm;
pub mod random;
mod search;
pub mod typenumber;

pub use abgroup::{smith_normal_form, FinAbGroup, GroupElement};
pub use apartment::{hull_vertices, polytope_vertices, render_svg, ApartmentPoint, ApartmentScene};
pub use classes::{
    are_isomorphic, class_label, norm_exponent, normalizer, oracle_reflection_class_count,
    reflection_class_count, reflection_class_count_prime, reflection_equivalent, NormalizerData,
    ReflectionClassLabel,
};
pub use error::{Error, Result};
pub use exponent::{ExponentMatrix, InvariantTensor, TypeVector};
pub use monomial::MonomialMatrix;
pub use perm::Permutation;
pub use typenumber::{
    prime_degree_type_number, type_number, GlobalProblem, RelationKind, TPrime, TypeNumberReport,
};
