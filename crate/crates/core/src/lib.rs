//! Dini functions, the cross-product of Bessel and modified Bessel functions,
//! their zeros, Rayleigh sums, and numerical checks of the inequalities they
//! satisfy.

pub mod cli;
pub mod error;
pub mod fmt;
pub mod lab;
pub mod rayleigh;
pub mod report;
pub mod special;
pub mod zeros;

pub use error::{Error, Result};
pub use special::{EvalResult, FunctionId, Order, SeriesConfig};
