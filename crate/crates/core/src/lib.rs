//! Inverse medium scattering on the unit disk.

// Validation uses `!(x > lo)` on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod contrast;
pub mod dataset;
pub mod error;
pub mod farfield;
pub mod forward;
pub mod imaging;
pub mod inverse;
pub mod io;
pub mod pipeline;
pub mod pswf;
pub mod quadrature;
pub mod special;
pub mod tridiag;

pub use error::{Error, ErrorCategory, Result};
