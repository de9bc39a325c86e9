pub mod arith;
pub mod campaign;
pub mod cli;
pub mod corpus;
pub mod equations;
pub mod geometry;
pub mod error;
pub mod rational;
pub mod unit_fraction;

pub use error::{Error, Result};
pub use rational::Rational;
pub use unit_fraction::{from_unit_fractions, UnitFractionSum};
