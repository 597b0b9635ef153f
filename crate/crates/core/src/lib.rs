//! Graded local cohomology of monomial quotient rings `S/I`.
//!
//! * [`takayama`] computes `dim H^i_m(S/I)_a` from the reduced cohomology of
//!   the degree complex `Δ_a`.
//! * [`cech`] computes the same numbers independently from the degree-`a`
//!   strand of the Čech complex.
//! * [`polarization`] builds the square-free polarization `I'` and the degree
//!   map `a -> α` under which `H^i_m(S/I)_a ≅ H^{i+ρ-n}_{m'}(S'/I')_α`.
//! * [`verifier`] checks that isomorphism, and the restriction and partial
//!   polarization identities that reduce it to degree zero, over random
//!   ideals.

pub mod cech;
pub mod error;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod polarization;
pub mod simplicial;
pub mod table;
pub mod takayama;
pub mod verifier;

pub use error::{Error, Result};
pub use linalg::{rank, FieldSpec, SparseMatrix};
pub use monomial::{
    divides, minimalize, negative_support, rho, Monomial, MonomialIdeal, MultiDegree, Rho,
};
pub use parse::parse_ideal;
pub use simplicial::SimplicialComplex;
pub use table::{DepthDim, LcTable};
