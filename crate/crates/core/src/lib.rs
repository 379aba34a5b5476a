//! Exact analysis of bipartite nonlocal games.
//!
//! The crate is organised around five pieces:
//!
//! * [`game`]: games as winning relations, deterministic strategies, exact
//!   classical values and the pair-compatibility test for games where one
//!   party has two inputs.
//! * [`quantum`]: dense state-vector simulation of quantum strategies with
//!   projective measurements, the Mermin–Peres square strategy and the
//!   extraction of a classical strategy from a winning quantum one.
//! * [`polytope`]: Collins–Gisin coordinates, exact integer rank and facet
//!   certificates for the local polytope.
//! * [`bell`]: Bell expressions, the three forms of the Magic Square
//!   inequality and resistance to noise.
//! * [`reproduce`]: the reference checks behind the `reproduce-paper` CLI
//!   command.
//!
//! Exact quantities are [`Rational`]s and never pass through floating point;
//! only quantum probabilities are `f64`.

pub mod behavior;
pub mod bell;
pub mod error;
pub mod game;
pub mod polytope;
pub mod quantum;
pub mod rational;
pub mod reproduce;
mod text;

pub use behavior::Behavior;
pub use error::{Error, Result};
pub use game::{DeterministicStrategy, EnumerationBudget, GameRelation, Scenario};
pub use rational::Rational;
