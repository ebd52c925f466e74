//! Exact integer linear algebra and finitely generated abelian groups.

mod group;
mod matrix;
mod snf;

pub use group::{
    cokernel, cokernel_map, exterior_square, hom_kernel, quotient_by_diagonal,
    quotient_by_diagonal_direct, quotient_by_element, AbHom, Cokernel, FgAbelianGroup,
};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};
