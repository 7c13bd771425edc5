pub mod cli;
pub mod cone;
pub mod error;
pub mod halfline;
pub mod matrix;
pub mod poly;
pub mod preserver;
pub mod rational;

pub use error::{Error, Result};
pub use poly::Polynomial;
pub use rational::Rational;
