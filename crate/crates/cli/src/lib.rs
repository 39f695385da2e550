//! Command-line front end for leibniz-forge.

pub mod app;
pub mod error;
pub mod formats;
pub mod poly_expr;
pub mod report;
