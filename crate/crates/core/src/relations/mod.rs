//! Exact linear algebra over the log-sine monomial basis: coefficient
//! matrices, monomial relations, and relations among MZVs.

mod basis;
mod engine;
mod matrix;

pub use basis::{build_basis, MonomialBasis, Parity};
pub use engine::{rational_to_f64, CrInjection, EngineConfig, MzvRelation, RelationEngine};
pub use matrix::RationalMatrix;
