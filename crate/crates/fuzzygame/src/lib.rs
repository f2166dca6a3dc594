//! Solver library for two-person zero-sum matrix games with fuzzy goals,
//! fuzzy payoffs, and I-fuzzy (intuitionistic fuzzy) goals.
//!
//! Each game variant is converted into one or two crisp linear programs and
//! solved with the embedded two-phase simplex engine. Solutions are
//! cross-validated against an independent crisp-game oracle.
//!
//! # Modules
//!
//! - [`fuzzy`] - triangular fuzzy numbers, alpha-cuts, ranking matrices,
//!   piecewise-linear goal memberships
//! - [`ifuzzy`] - membership/non-membership pairs, pessimistic and optimistic
//!   statement encodings, score function, I-fuzzy decision operator
//! - [`lp`] - linear-program representation, two-phase simplex with Bland's
//!   rule, weighted-sum scalarization, feasibility checking
//! - [`games`] - conversion of the four game variants into crisp LPs, the
//!   crisp minimax oracle, and the Pareto non-dominance verifier
//! - [`io`] - game-description file parsing and solution report rendering
//! - [`cli`] - the `solve` / `oracle` / `check` command-line interface

pub mod cli;
pub mod fuzzy;
pub mod games;
pub mod ifuzzy;
pub mod io;
pub mod lp;

pub use fuzzy::{CutSet, Interval, RankingMatrix, TriangularFuzzyNumber};
pub use games::{
    CrispGame, FuzzyGoalsSpec, FuzzyPayoffSpec, GameSolution, IFuzzyGoalsSpec, MixedStrategy,
    PossSpec,
};
pub use ifuzzy::{IFuzzyPair, IFuzzyTolerance};
pub use lp::{LpModel, LpSolution, LpStatus};
