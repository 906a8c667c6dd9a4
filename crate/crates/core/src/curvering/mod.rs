//! The ring of elements `f + g u` with `u^2 = p`, Pell configurations and
//! the unit group of the quartic family.

pub mod config;
pub mod elem;
pub mod units;

pub use config::{chebyshev_config, custom_config, djkm_config, djkm_q, Config, PellConfig};
pub use elem::CurveElem;
pub use units::{djkm_units, unit_exponent_form, unit_relations, DjkmUnits, RelationCheck, UnitExponents};
