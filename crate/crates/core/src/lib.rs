//! Numerical toolkit for fractional Voigt creep models: Mittag-Leffler
//! kernels, linear and multi-delay solvers, and checks of the contraction,
//! continuous-dependence and Ulam-Hyers constants.

pub mod analysis;
pub mod creep;
pub mod error;
pub mod expr;
pub mod format;
pub mod mlf;
mod quad;
pub mod solver;
pub mod special;
pub mod trajectory;

pub use error::{Error, Result};
