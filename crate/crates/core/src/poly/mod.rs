//! Exact univariate polynomial arithmetic over the rationals and the
//! root-counting machinery built on it.

mod polynomial;
mod sturm;

pub use polynomial::Polynomial;
pub use sturm::{isolate_roots, sturm_count, Bound, SturmChain};
