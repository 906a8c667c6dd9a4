//! Exact scalars: arbitrary-precision rationals and the biquadratic tower
//! that carries every irrational constant of the Pell families.

pub mod rational;
pub mod tower;

pub use rational::{parse_rational, Rational};
pub use tower::{tower_new, FloatMode, Tower, TowerContext, TowerScalar};
