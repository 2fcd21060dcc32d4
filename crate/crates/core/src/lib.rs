//! Majorization lattice on the probability simplex and the Sharma-Mittal
//! entropy family, with tooling to check lattice inequalities and search for
//! their violations.

pub mod cli;
pub mod entropy;
pub mod format;
pub mod lattice;
pub mod properties;
pub mod search;
pub mod simplex;

pub use entropy::{EntropyError, EntropyParams, EntropyValue, Family, Param};
pub use lattice::{flatten, join, meet, pre_join, PreJoinVector};
pub use simplex::{
    ExactDistribution, LorenzCurve, MajorizationOrder, ProbabilityDistribution, SimplexError,
};
