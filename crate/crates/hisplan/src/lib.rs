//! Planning toolkit for finite-horizon multi-player Dec-POMDPs under
//! hierarchical information sharing (HIS).
//!
//! Under HIS, every player instantly sees the last action and observation of
//! its direct subordinate, so player 0 (bottom of the hierarchy) is public
//! and player n-1 (top) sees everything. This structure lets the one-stage
//! decision problem of a centralized planner be solved as a perfect-information
//! extensive-form game, one player at a time, instead of enumerating
//! double-exponentially many joint decision rules.
//!
//! The crate is organized around that pipeline:
//!
//! - [`model`] — the Dec-POMDP tuple with per-player base observation
//!   alphabets; composite HIS observations are derived structurally, never
//!   materialized.
//! - [`benchgen`] — multi-player benchmark generators (tiger, recycling,
//!   mabc, grid3x3) and a parser/serializer for the common `.dpomdp` text
//!   format.
//! - [`occupancy`] — occupancy states (the planner's common ground), their
//!   transition kernel, expected reward, and lossless history clustering.
//! - [`valuefn`] — linear value elements (alpha/beta vectors) under fixed
//!   continuation policies, with lazy memoized evaluation.
//! - [`subgame`] — one-stage subgame solvers: exact enumeration (the oracle)
//!   and hierarchical backward induction with nested beliefs.
//! - [`pbvi`] — point-based value iteration with improve/expand phases,
//!   greedy policy extraction, and the density-based error bound.
//! - [`baselines`] — tabular independent Q-learning for comparison runs.
//! - [`runner`] — the experiment harness behind the `hisplan` binary
//!   (CSV records, sweeps, anytime curves).
//!
//! Each major capability has a runnable example under `examples/`; start with
//! `solve_tiger` for the end-to-end flow.

pub mod baselines;
pub mod benchgen;
pub mod model;
pub mod occupancy;
pub mod pbvi;
pub mod runner;
pub mod subgame;
pub mod valuefn;

pub use model::{DecPomdp, ModelError, Violation};
pub use occupancy::{HistoryPool, OccupancyState};
pub use pbvi::{PbviConfig, SolveResult};
