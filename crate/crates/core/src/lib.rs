//! Symbolic computation kernel: exact numbers, canonical expression trees,
//! polynomials, truncated series, special functions and matrices.

pub mod error;
pub mod expr;
pub mod func;
pub mod matrix;
pub mod num;
pub mod poly;
pub mod series;

pub use error::{Error, Result};
pub use expr::{diff, evalf, expand, subs, subs_pairs, symbol, Expr};
pub use matrix::Matrix;
pub use num::{Number, Precision};
pub use series::PSeries;
