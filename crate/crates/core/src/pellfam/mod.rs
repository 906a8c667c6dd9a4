//! The families `a_n`, `b_n` and exact checks of their identities and
//! closed forms.

pub mod connection;
pub mod family;
pub mod genfun;
pub mod identities;
pub mod rodrigues;

pub use connection::{
    chebyshev_t_hypergeometric, chebyshev_u_hypergeometric, endpoint_values, gegenbauer_polys, jacobi_polys,
    tridiagonal_det, verify_2f1_route, verify_chebyshev_connection, verify_determinant, verify_hypergeometric_sums,
    verify_jacobi_connection, EndpointValues, JacobiTables,
};
pub use family::{power_oracle, verify_power_oracle, ChebFamily, PellFamily};
pub use genfun::{verify_generating_functions, GenFunReport};
pub use identities::{
    verify_closed_forms, verify_growth, verify_pell, verify_products, verify_summations, verify_turan,
};
pub use rodrigues::{rodrigues_generic, verify_rodrigues, verify_rodrigues_generic, RodriguesData};
