//! Symmetric game as an unconstrained Chebyshev problem in the strategy
//! variables.
//!
//! With shift `c` (the largest payoff) the emitted functions are the rows of
//! `(M + c)x`, the entries `c - x_i`, and a final pair built from `Σx`.
//!
//! * [`GameChebVariant::Literal`] uses the pair `Σx + c - 1` and `-Σx - c + 1`.
//!   These are negatives of each other, so nothing penalizes `Σx < 1` and the
//!   minimum can fall below `c` at a point that is not a strategy (on
//!   rock-paper-scissors: `3/4` at `(1/4, 1/4, 1/4)`).
//! * [`GameChebVariant::Corrected`] first scales the game so that `c = 1` and uses
//!   the pair `Σx` and `2 - Σx`.
//!
//! For the corrected form the objective is at least 1 everywhere, since
//! `max(|Σx|, |2 - Σx|) ≥ 1` with equality iff `Σx = 1`. At value 1 the terms
//! `|1 - x_i| ≤ 1` give `x ≥ 0` and the rows give `M'x ≤ 0`, so the points
//! of value 1 are exactly the optimal strategies. On a strategy the objective
//! is `1 + max(0, max_i (M'x)_i)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Dims, ReductionCertificate, ReductionKind, VarMap};
use crate::error::{check_dim, Error, Result, StrategyViolation};
use crate::model::{AffineFunction, ChebyshevProblem, MatrixGame, Rational, Solution, Strategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GameChebVariant {
    Literal,
    #[default]
    Corrected,
}

pub fn game_to_cheb(
    g: &MatrixGame,
    variant: GameChebVariant,
) -> Result<(ChebyshevProblem, ReductionCertificate)> {
    if g.is_zero() {
        return Err(Error::TrivialGame);
    }
    let n = g.size();
    let largest = g.max_entry();
    let (matrix, shift, alpha) = match variant {
        GameChebVariant::Literal => (g.clone(), largest, Rational::one()),
        GameChebVariant::Corrected => {
            let alpha = largest.recip();
            (g.scaled(&alpha), Rational::one(), alpha)
        }
    };

    let mut functions = Vec::with_capacity(2 * n + 2);
    for row in matrix.matrix() {
        functions.push(AffineFunction::new(
            Rational::zero(),
            row.iter().map(|v| v + &shift).collect(),
        ));
    }
    for i in 0..n {
        functions
            .push(AffineFunction::constant(shift.clone(), n).sub(&AffineFunction::variable(i, n)));
    }
    let ones = vec![Rational::one(); n];
    let minus_ones = vec![-Rational::one(); n];
    match variant {
        GameChebVariant::Literal => {
            let k = &shift - Rational::one();
            functions.push(AffineFunction::new(k.clone(), ones));
            functions.push(AffineFunction::new(-k, minus_ones));
        }
        GameChebVariant::Corrected => {
            functions.push(AffineFunction::new(Rational::zero(), ones));
            functions.push(AffineFunction::new(&shift + Rational::one(), minus_ones));
        }
    }

    let cheb = ChebyshevProblem::new(functions).expect("nonempty, common arity");
    let cert = ReductionCertificate {
        kind: ReductionKind::GameToCheb,
        source_dims: Dims::new(n, n),
        target_dims: Dims::new(n, 2 * n + 2),
        shift_c: Some(shift),
        scale_alpha: Some(alpha),
        var_map: VarMap::Strategy {
            variables: n,
            variant,
        },
    };
    Ok((cheb, cert))
}

/// Accepts a Chebyshev optimum as a strategy of the source game.
///
/// The point must be a probability vector and the value must equal the
/// shift `c`. Together these imply optimality: `(M + c)x ≤ c` with `Σx = 1`
/// is `Mx ≤ 0`.
pub fn cheb_sol_to_strategy(cert: &ReductionCertificate, s: &Solution) -> Result<Strategy> {
    cert.expect(ReductionKind::GameToCheb)?;
    let (Some(point), Some(value)) = (s.point(), s.value()) else {
        return Err(StrategyViolation::MissingPoint.into());
    };
    check_dim(cert.target_dims.variables, point.len())?;
    let strategy = Strategy::new(point.to_vec())?;
    let shift = cert
        .shift_c
        .clone()
        .ok_or_else(|| Error::ContractViolation("game certificate without shift".into()))?;
    if *value != shift {
        return Err(StrategyViolation::ValueNotShift {
            value: value.clone(),
            shift,
        }
        .into());
    }
    Ok(strategy)
}
