//! The expression algebra over `pi^m * Ls_k^l(pi/3)`.
//!
//! The evaluation point is fixed at `pi/3`: wherever the reduction formula
//! produces a power `(pi/3)^k`, it is stored as `pi^k` with a `3^-k` factor
//! in the coefficient.

mod expr;
mod monomial;
mod ops;

pub use expr::LsiExpr;
pub use monomial::LsiMonomial;
pub use ops::{
    canonicalize, canonicalize_with, multiply, reduce_at, shuffle, shuffle_term_count,
    ReductionOrder,
};
