pub mod albert;
pub mod clifford;
pub mod eiii;
pub mod error;
pub mod fierz;
pub mod liealg;
pub mod linalg;
pub mod octonion;
pub mod rational;
pub mod rep27;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod suites;

pub use error::{AtlasError, Result};
pub use rational::Rational;
pub use scalar::ExtScalar;
