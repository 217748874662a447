//! Problem-to-problem transformations, each paired with a certificate that
//! maps optimal solutions of the target back to the source exactly.
//!
//! ```text
//!   L1 ──l1_to_lp──▶ LP ◀──cheb_to_lp── Chebyshev
//!   │                │                      ▲
//!   │          lp_to_standard               │ game_to_cheb
//!   │                ▼                      │
//!   │            StandardLP ─standard_to_game─▶ MatrixGame
//!   └────────── l1_to_cheb_direct ──────────▶ Chebyshev
//! ```

mod chain;
mod chebyshev;
mod epigraph;
mod game;
mod standard;

use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::model::{Rational, StandardLP};

pub use chain::{
    cheb_chain_pullback, l1_to_cheb_direct, l1_to_cheb_linear, lp_to_cheb_linear,
    DEFAULT_DIRECT_CAP,
};
pub use chebyshev::{cheb_sol_to_strategy, game_to_cheb, GameChebVariant};
pub use epigraph::{cheb_to_lp, l1_to_lp, lp_sol_to_cheb_sol, lp_sol_to_l1_sol};
pub use game::{game_strategy_to_lp_sol, standard_to_game};
pub use standard::{lp_to_standard, standard_sol_pullback};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionKind {
    ChebToLp,
    L1ToLp,
    LpToStandard,
    StandardToGame,
    GameToCheb,
    LpToChebLinear,
    L1ToChebLinear,
}

/// `(variables, functions-or-constraints)` of one side of a reduction.
///
/// For a matrix game the second entry is the number of payoff rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dims {
    pub variables: usize,
    pub size: usize,
}

impl Dims {
    pub fn new(variables: usize, size: usize) -> Self {
        Self { variables, size }
    }
}

/// Placement of a source variable among standard-form columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Column {
    /// Free variable written as `pos - neg`.
    Split {
        pos: usize,
        neg: usize,
    },
    Kept {
        index: usize,
    },
}

#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum VarMap {
    /// Target variables are the source block followed by `auxiliary` t's.
    Auxiliary { original: usize, auxiliary: usize },
    /// One column placement per source variable. The source objective equals
    /// `±(standard objective) + objective_constant`, minus when `negated`.
    Standardized {
        columns: Vec<Column>,
        negated: bool,
        #[serde_as(as = "DisplayFromStr")]
        objective_constant: Rational,
    },
    /// Strategy `z = (y, w, t)` with `y` of length `dual`, `w` of length
    /// `primal` and the scalar `t` last. Keeps the source program for the
    /// optimality check and the value recovery.
    GameBlocks {
        dual: usize,
        primal: usize,
        source: StandardLP,
    },
    /// Chebyshev variables are the strategy coordinates themselves.
    Strategy {
        variables: usize,
        variant: GameChebVariant,
    },
    /// Composition, in application order.
    Chain { stages: Vec<ReductionCertificate> },
}

#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub kind: ReductionKind,
    pub source_dims: Dims,
    pub target_dims: Dims,
    #[serde_as(as = "Option<DisplayFromStr>")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift_c: Option<Rational>,
    #[serde_as(as = "Option<DisplayFromStr>")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale_alpha: Option<Rational>,
    pub var_map: VarMap,
}

impl ReductionCertificate {
    fn expect(&self, kind: ReductionKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::WrongCertificate {
                expected: kind,
                found: self.kind,
            })
        }
    }
}

/// Maps an optimal solution of a reduction target that is itself solved as an
/// LP back to the source. Covers every kind except the game stages, whose
/// inputs are strategies.
pub fn pullback(
    cert: &ReductionCertificate,
    s: crate::model::Solution,
) -> Result<crate::model::Solution> {
    match cert.kind {
        ReductionKind::ChebToLp => lp_sol_to_cheb_sol(cert, s),
        ReductionKind::L1ToLp => lp_sol_to_l1_sol(cert, s),
        ReductionKind::LpToStandard => standard_sol_pullback(cert, s),
        ReductionKind::LpToChebLinear | ReductionKind::L1ToChebLinear => {
            cheb_chain_pullback(cert, s)
        }
        ReductionKind::StandardToGame | ReductionKind::GameToCheb => {
            Err(Error::ContractViolation(format!(
                "{:?} certificates pull back strategies, not solutions",
                cert.kind
            )))
        }
    }
}
