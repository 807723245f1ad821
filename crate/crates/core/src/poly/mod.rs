//! Exact-arithmetic multivariate polynomial engine: Gröbner bases
//! under (weighted) orders, elimination, initial ideals, and graded
//! Hilbert functions.

pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod order;
pub mod polynomial;

pub use groebner::{groebner_basis, reduce, s_polynomial};
pub use ideal::{
    eliminate, graded_dimension_by_rank, hilbert_function, initial_ideal, intersect,
    standard_monomials, weighted_basis_sum, Ideal,
};
pub use monomial::{monomials_of_degree, Monomial};
pub use order::MonomialOrder;
pub use polynomial::Polynomial;
