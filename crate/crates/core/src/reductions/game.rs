//! Standard-form LP as a symmetric matrix game.
//!
//! For `max c·w, Aw ≤ b, w ≥ 0` with `A` of size `m×n` the payoff matrix is
//!
//! ```text
//!        y      w     t
//!   y [  0      A    -b ]
//!   w [ -Aᵀ     0     c ]
//!   t [  bᵀ    -cᵀ    0 ]
//! ```
//!
//! An optimal strategy `z = (y, w, t)` satisfies `Aw ≤ bt`, `Aᵀy ≥ ct` and
//! `b·y ≤ c·w`. When `t > 0`, `w/t` and `y/t` are primal and dual feasible
//! with `b·y/t ≤ c·w/t`, so both are optimal by weak duality. An optimal
//! strategy with `t > 0` exists iff primal and dual are both feasible.

use num_traits::{Signed, Zero};

use super::{Dims, ReductionCertificate, ReductionKind, VarMap};
use crate::error::{check_dim, Error, Result};
use crate::model::{dot, MatrixGame, Rational, Solution, StandardLP, Strategy};

#[allow(clippy::needless_range_loop)]
fn block_matrix(p: &StandardLP) -> Vec<Vec<Rational>> {
    let m = p.num_constraints();
    let n = p.num_vars();
    let size = m + n + 1;
    let t = m + n;
    let mut mat = vec![vec![Rational::zero(); size]; size];
    for i in 0..m {
        for j in 0..n {
            mat[i][m + j] = p.a[i][j].clone();
            mat[m + j][i] = -&p.a[i][j];
        }
        mat[i][t] = -&p.b[i];
        mat[t][i] = p.b[i].clone();
    }
    for j in 0..n {
        mat[m + j][t] = p.c[j].clone();
        mat[t][m + j] = -&p.c[j];
    }
    mat
}

pub fn standard_to_game(p: &StandardLP) -> (MatrixGame, ReductionCertificate) {
    let m = p.num_constraints();
    let n = p.num_vars();
    let size = m + n + 1;
    let game = MatrixGame::new(block_matrix(p)).expect("block construction is skew-symmetric");
    let cert = ReductionCertificate {
        kind: ReductionKind::StandardToGame,
        source_dims: Dims::new(n, m),
        target_dims: Dims::new(size, size),
        shift_c: None,
        scale_alpha: None,
        var_map: VarMap::GameBlocks {
            dual: m,
            primal: n,
            source: p.clone(),
        },
    };
    (game, cert)
}

/// Recovers the standard-form optimum `w/t` from an optimal strategy.
///
/// Returns [`Status::NoFiniteOptimum`](crate::model::Status) when `t = 0`.
/// Fails with a contract violation if `z` is not optimal (`Mz ≤ 0`).
pub fn game_strategy_to_lp_sol(cert: &ReductionCertificate, z: &Strategy) -> Result<Solution> {
    cert.expect(ReductionKind::StandardToGame)?;
    let VarMap::GameBlocks {
        dual,
        primal,
        source,
    } = &cert.var_map
    else {
        return Err(Error::ContractViolation(
            "game certificate without block partition".into(),
        ));
    };
    let (dual, primal) = (*dual, *primal);
    check_dim(dual + primal + 1, z.len())?;
    let z = z.as_slice();
    for (i, row) in block_matrix(source).iter().enumerate() {
        let v = dot(row, z);
        if v.is_positive() {
            return Err(Error::ContractViolation(format!(
                "strategy is not optimal: (Mz)[{i}] = {v} > 0"
            )));
        }
    }
    let t = &z[dual + primal];
    if t.is_zero() {
        return Ok(Solution::without_optimum(
            crate::model::Status::NoFiniteOptimum,
        ));
    }
    let w: Vec<Rational> = z[dual..dual + primal].iter().map(|v| v / t).collect();
    let value = source.objective(&w);
    Ok(Solution::optimal(w, value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{int, rat, Status};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn unit_lp() -> StandardLP {
        StandardLP::new(ints(&[1]), vec![ints(&[1])], ints(&[1])).unwrap()
    }

    #[test]
    fn unit_lp_gives_rock_paper_scissors() {
        let (g, cert) = standard_to_game(&unit_lp());
        let rps = MatrixGame::from_ints(&[&[0, 1, -1], &[-1, 0, 1], &[1, -1, 0]]).unwrap();
        assert_eq!(g, rps);
        assert_eq!(cert.target_dims, Dims::new(3, 3));
    }

    #[test]
    fn size_is_rows_plus_columns_plus_one() {
        let p = StandardLP::new(
            ints(&[1, 2, 3]),
            vec![ints(&[1, 0, 1]), ints(&[0, 1, 1])],
            ints(&[4, 5]),
        )
        .unwrap();
        assert_eq!(standard_to_game(&p).0.size(), 6);
        let empty = StandardLP::new(ints(&[1, -1]), vec![], vec![]).unwrap();
        assert_eq!(standard_to_game(&empty).0.size(), 3);
    }

    #[test]
    fn uniform_rps_strategy_recovers_optimum() {
        let (_, cert) = standard_to_game(&unit_lp());
        let z = Strategy::uniform(3);
        let s = game_strategy_to_lp_sol(&cert, &z).unwrap();
        assert_eq!(s, Solution::optimal(ints(&[1]), int(1)));
    }

    #[test]
    fn zero_scalar_means_no_finite_optimum() {
        // max w s.t. -w <= 0: unbounded; z = (0, 1, 0) has Mz = (0, 0, -1) <= 0
        let p = StandardLP::new(ints(&[1]), vec![ints(&[-1])], ints(&[0])).unwrap();
        let (_, cert) = standard_to_game(&p);
        let z = Strategy::new(ints(&[0, 1, 0])).unwrap();
        let s = game_strategy_to_lp_sol(&cert, &z).unwrap();
        assert_eq!(s.status(), Status::NoFiniteOptimum);
    }

    #[test]
    fn non_optimal_strategy_rejected() {
        let (_, cert) = standard_to_game(&unit_lp());
        let z = Strategy::new(vec![int(1), int(0), int(0)]).unwrap();
        assert!(matches!(
            game_strategy_to_lp_sol(&cert, &z),
            Err(Error::ContractViolation(_))
        ));
        let short = Strategy::new(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert!(matches!(
            game_strategy_to_lp_sol(&cert, &short),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
