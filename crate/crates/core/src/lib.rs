//! Exact reductions between linear programs, symmetric matrix games, and
//! Chebyshev (`max |f_i|`) and L1 (`Σ |f_i|`) linear approximation problems.
//!
//! Every reduction returns its target problem together with a
//! [`ReductionCertificate`] that maps optimal target solutions back to the
//! source. All arithmetic is over arbitrary-precision rationals.

pub mod error;
pub mod generate;
pub mod io;
pub mod model;
pub mod oracles;
pub mod reductions;
pub mod report;
pub mod simplex;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result, StrategyViolation};
pub use model::{
    eval_affine, eval_cheb, eval_l1, int, rat, AffineFunction, ChebyshevProblem, L1Problem,
    LinearConstraint, LinearProgram, MatrixGame, Rational, Relation, Sense, Solution, StandardLP,
    Status, Strategy, VarSign,
};
pub use reductions::{GameChebVariant, ReductionCertificate, ReductionKind};
