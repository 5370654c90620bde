//! Exact expansion of multiple zeta values into iterated log-sine integrals
//! at `pi/3`, and a linear-algebra search for the rational relations among
//! MZVs that the expansion exposes.
//!
//! The pipeline:
//! - [`indices`]: index combinatorics (duality, truncation, enumeration)
//! - [`lsi`]: the `Q(i)`-linear expression algebra with shuffle products
//!   and the canonical reduction
//! - [`polylog`]: multiple polylogarithms at `e^{i pi/3}` and the zeta
//!   expression assembled from them
//! - [`relations`]: exact matrices of real/imaginary parts, relation
//!   substitution and the `l_k` bound
//! - [`numeric`]: an independent floating-point oracle
//! - [`format`]: JSON and LaTeX rendering

pub mod error;
pub mod format;
pub mod indices;
pub mod lsi;
pub mod numeric;
pub mod polylog;
pub mod rational;
pub mod relations;

pub use error::{Error, Result};
pub use indices::Index;
pub use lsi::{LsiExpr, LsiMonomial};
pub use rational::{GaussianRational, Rational};
