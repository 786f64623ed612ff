//! Hackenbush engine and verification workbench.
//!
//! The pieces:
//! - [`position`]: colored multigraph positions, the text file format,
//!   grounded-edge accounting, move generation and connectivity pruning;
//! - [`solver`]: exact memoized win/loss search under normal and misère
//!   play, the oracle everything else is checked against;
//! - [`classifier`]: the linear-time grounded-count outcome formula for
//!   misère Red-Blue positions;
//! - [`reduction`]: ground merging and the normal-play-to-misère instance
//!   transformation;
//! - [`enumeration`]: exhaustive and seeded-random generators plus the
//!   verification drivers and the green-string explorer.

pub mod classifier;
pub mod enumeration;
pub mod error;
pub mod position;
pub mod reduction;
pub mod solver;

pub use classifier::{classify_misere_rb, proof_strategy_move};
pub use enumeration::{
    enumerate_positions, enumerate_with, explore_green_strings, random_position,
    verify_misere_formula, verify_reduction, ShapeClass, SplitMix64, VerificationReport,
    VerifyParams,
};
pub use error::{Error, Result};
pub use position::{Color, Edge, GroundedCounts, Move, Player, Position, StateKey, MAX_EDGES};
pub use reduction::{merge_ground, to_misere_instance};
pub use solver::{optimal_moves, outcome, winner, OutcomeClass, PlayConvention, SearchSession, SearchStats};
