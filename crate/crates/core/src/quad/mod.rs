//! Numerical reproduction of the orthogonality of the quartic family.

mod clenshaw;
mod problem;
mod rules;
mod table;

pub use clenshaw::{cheb_t, cheb_u, clenshaw_t, clenshaw_u};
pub use problem::{Kernel, OrthoProblem, MAX_LEVEL};
pub use rules::{gauss_chebyshev_first, gauss_chebyshev_second, tanh_sinh, Method, QuadResult};
pub use table::{elliptic_identity_check, ortho_table, EllipticCheck, Methods, OrthoCell, OrthoTable};
