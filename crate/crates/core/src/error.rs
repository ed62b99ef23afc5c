use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series did not converge within {0} terms")]
    Convergence(usize),
    #[error("no sign change found: {0}")]
    Bracket(String),
    #[error("argument {x} lies within the pole guard of a zero")]
    Pole { x: f64 },
    #[error("need {needed} coefficients, got {got}")]
    Length { needed: usize, got: usize },
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("x = {x} is on the singular ring x^2 = 2nu - 1")]
    Singularity { x: f64 },
    #[error("no closed form for {0}")]
    NoClosedForm(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
