//! Exact and numerical tools for trace forms over the roots of a monic
//! polynomial, written in the elementary symmetric coordinates σ.

pub mod cli;
pub mod contour;
pub mod error;
pub mod exactpoly;
pub mod linalg;
pub mod polyroots;
pub mod report;
pub mod sampling;
pub mod suites;
pub mod systems;
pub mod traces;
pub mod weyl;

pub use error::{Error, Result};
pub use exactpoly::{GaussianRational, Monomial, SigmaPoly};
pub use polyroots::SigmaPoint;
pub use report::{Report, ReportDocument};
