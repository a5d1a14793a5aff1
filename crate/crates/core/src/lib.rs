//! Exact linear algebra for Gushel-Mukai data, Lagrangian subspaces of `Λ³V₆`,
//! EPW strata and the associated quadric fibrations, over the rationals.

pub mod correspondence;
pub mod epw;
pub mod error;
pub mod lagrangian_quadric;
pub mod exterior;
pub mod fibration;
pub mod fixtures;
pub mod gm;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod random;
pub mod rat;
pub mod selftest;
pub mod subspace;

pub use error::{Error, Result};
pub use matrix::RatMatrix;
pub use rat::Rat;
pub use subspace::Subspace;
