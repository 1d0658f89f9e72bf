use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mismatched arity: {left} variables vs {right} variables")]
    MismatchedArity { left: usize, right: usize },

    #[error("index {index} outside the admissible range [{lo}, {hi}]")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("root iteration did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("roots are not simple: minimum pairwise distance {min_distance:e} <= {threshold:e}")]
    DegenerateRoots { min_distance: f64, threshold: f64 },

    #[error("quadrature did not converge before reaching {nodes} nodes")]
    QuadratureNoConvergence { nodes: usize },

    #[error("point {modulus} lies outside the integration circle of radius {radius}")]
    OutsideContour { modulus: f64, radius: f64 },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("invalid quadrature settings: {0}")]
    InvalidQuadrature(String),

    #[error("expected a real rational coefficient, found {0}")]
    NotRational(String),

    #[error("expected a polynomial, found {0}")]
    NotPolynomial(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn range(index: usize, lo: usize, hi: usize) -> Self {
        Error::IndexOutOfRange {
            index: index as i64,
            lo: lo as i64,
            hi: hi as i64,
        }
    }
}
