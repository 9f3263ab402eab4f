//! Exact analysis of assignment games and population monotonic allocation schemes.
//!
//! The crate decides whether the assignment game induced by a nonnegative
//! surplus matrix admits a population monotonic allocation scheme (PMAS),
//! builds and verifies such schemes, and computes core vertices, the
//! tau-value, the nucleolus, the Shapley value and Kohlberg certificates.
//! All arithmetic is exact over [`Rational`].
//!
//! Players are numbered from `0`. In an assignment game with `r` rows and
//! `c` columns, rows are players `0..r` and columns are `r..r + c`.
#![no_std]

extern crate alloc;

pub mod assignment;
pub mod coalition;
pub mod error;
pub mod game;
pub mod lp;
pub mod pmas;
pub mod rational;
pub mod solutions;

pub use assignment::{AssignmentGame, Matching, SurplusMatrix};
pub use coalition::Coalition;
pub use error::{Error, Result};
pub use game::{ExplicitGame, Game};
pub use rational::Rational;
