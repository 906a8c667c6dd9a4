//! Laurent polynomials in `t` over the tower field, with the series,
//! rational-function and square-root layers built on them.

pub mod algfunc;
pub mod gcd;
pub mod poly;
pub mod ratfunc;
pub mod series;
pub mod text;

pub use algfunc::{AlgFuncElem, SqrtExt};
pub use gcd::{poly_gcd, squarefree_decomposition};
pub use poly::LaurentPoly;
pub use ratfunc::RationalFunc;
pub use series::{series_log_deriv_check, series_ode_check, TruncSeries};
pub use text::parse_laurent;
