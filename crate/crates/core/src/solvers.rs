//! Form-specific solvers on top of the exact simplex.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::model::{
    AffineFunction, ChebyshevProblem, L1Problem, LinearConstraint, LinearProgram, MatrixGame,
    Rational, Relation, Sense, Solution, Status, Strategy, VarSign,
};
use crate::reductions::{
    cheb_chain_pullback, cheb_to_lp, game_strategy_to_lp_sol, l1_to_cheb_linear, l1_to_lp,
    lp_sol_to_cheb_sol, lp_sol_to_l1_sol, lp_to_standard, standard_sol_pullback, standard_to_game,
    ReductionCertificate,
};
use crate::simplex::{self, StandardOutcome};

fn standard_solution(outcome: StandardOutcome) -> Solution {
    match outcome {
        StandardOutcome::Optimal { point, value } => Solution::optimal(point, value),
        StandardOutcome::Infeasible => Solution::infeasible(),
        StandardOutcome::Unbounded => Solution::unbounded(),
    }
}

/// Exact vertex optimum, or the infeasible/unbounded status.
pub fn simplex_solve(p: &LinearProgram) -> Solution {
    if p.num_vars() == 0 {
        return match p.is_feasible(&[]) {
            Ok(true) => Solution::optimal(vec![], p.objective.constant.clone()),
            _ => Solution::infeasible(),
        };
    }
    let (std, cert) = lp_to_standard(p).expect("validated program with variables");
    let s = standard_solution(simplex::solve_standard(&std));
    standard_sol_pullback(&cert, s).expect("certificate matches its own target")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameSolution {
    pub strategy: Strategy,
    /// Largest weight on the last coordinate among all optimal strategies.
    pub t_max: Rational,
}

fn strategy_constraints(g: &MatrixGame, with_t: bool) -> Vec<LinearConstraint> {
    let n = g.size();
    let arity = n + usize::from(with_t);
    let mut constraints = Vec::with_capacity(n + 1);
    for row in g.matrix() {
        let mut lhs = AffineFunction::new(Rational::zero(), row.clone()).widen(arity);
        if with_t {
            lhs.coefficients[n] = -Rational::one();
        }
        constraints.push(LinearConstraint::new(
            lhs,
            Relation::Le,
            AffineFunction::zero(arity),
        ));
    }
    let mut total = AffineFunction::new(Rational::zero(), vec![Rational::one(); n]).widen(arity);
    if with_t {
        total.coefficients[n] = Rational::zero();
    }
    constraints.push(LinearConstraint::new(
        total,
        Relation::Eq,
        AffineFunction::constant(Rational::one(), arity),
    ));
    constraints
}

/// Solves `min t, Mx ≤ t, x ≥ 0, Σx = 1` (value 0 for a symmetric game),
/// then maximizes `x_N` over the optimal strategies.
pub fn solve_game(g: &MatrixGame) -> GameSolution {
    let n = g.size();
    if g.is_zero() {
        let strategy = Strategy::uniform(n);
        let t_max = strategy.as_slice()[n - 1].clone();
        return GameSolution { strategy, t_max };
    }

    let mut signs = vec![VarSign::Nonneg; n];
    signs.push(VarSign::Free);
    let value_lp = LinearProgram {
        sense: Sense::Min,
        objective: AffineFunction::variable(n, n + 1),
        constraints: strategy_constraints(g, true),
        var_signs: signs,
    };
    let value = simplex_solve(&value_lp);
    assert_eq!(
        value.value(),
        Some(&Rational::zero()),
        "symmetric game must have value zero"
    );

    let face_lp = LinearProgram {
        sense: Sense::Max,
        objective: AffineFunction::variable(n - 1, n),
        constraints: strategy_constraints(g, false),
        var_signs: vec![VarSign::Nonneg; n],
    };
    let (point, t_max) = simplex_solve(&face_lp)
        .into_optimum()
        .expect("optimal strategies exist for symmetric games");
    let strategy = Strategy::new(point).expect("feasible for the strategy polytope");
    GameSolution { strategy, t_max }
}

pub fn solve_cheb(p: &ChebyshevProblem) -> Solution {
    let (lp, cert) = cheb_to_lp(p);
    lp_sol_to_cheb_sol(&cert, simplex_solve(&lp)).expect("certificate matches its own target")
}

/// Like [`solve_cheb`], but among all Chebyshev optima returns one maximizing
/// `x[coordinate]`.
pub fn solve_cheb_favoring(p: &ChebyshevProblem, coordinate: usize) -> Solution {
    let first = solve_cheb(p);
    let Some(best) = first.value().cloned() else {
        return first;
    };
    let n = p.arity();
    let bound = AffineFunction::constant(best.clone(), n);
    let mut constraints = Vec::with_capacity(2 * p.len());
    for f in &p.functions {
        constraints.push(LinearConstraint::new(
            f.clone(),
            Relation::Le,
            bound.clone(),
        ));
        constraints.push(LinearConstraint::new(f.clone(), Relation::Ge, bound.neg()));
    }
    let face = LinearProgram {
        sense: Sense::Max,
        objective: AffineFunction::variable(coordinate, n),
        constraints,
        var_signs: vec![VarSign::Free; n],
    };
    match simplex_solve(&face).into_optimum() {
        Some((point, _)) => Solution::optimal(point, best),
        // The face can be unbounded in the favored direction.
        None => first,
    }
}

pub fn solve_l1(p: &L1Problem) -> Solution {
    let (lp, cert) = l1_to_lp(p);
    lp_sol_to_l1_sol(&cert, simplex_solve(&lp)).expect("certificate matches its own target")
}

/// Solves an LP through its symmetric game. When no optimal strategy puts
/// weight on the scalar coordinate, a phase-one check decides between
/// infeasible and unbounded.
pub fn solve_lp_via_game(p: &LinearProgram) -> Result<Solution> {
    let (std, to_std) = lp_to_standard(p)?;
    let (game, to_game) = standard_to_game(&std);
    let solved = solve_game(&game);
    let s = game_strategy_to_lp_sol(&to_game, &solved.strategy)?;
    if s.status() == Status::NoFiniteOptimum {
        return Ok(if simplex::is_feasible(&std) {
            Solution::unbounded()
        } else {
            Solution::infeasible()
        });
    }
    standard_sol_pullback(&to_std, s)
}

/// Pulls a Chebyshev solution of a linear chain back to the source. If the
/// solver's optimum is a strategy with no weight on the game's scalar
/// coordinate, re-solves favoring that coordinate.
pub fn solve_chain(p: &ChebyshevProblem, cert: &ReductionCertificate) -> Result<Solution> {
    let s = cheb_chain_pullback(cert, solve_cheb(p))?;
    if s.status() != Status::NoFiniteOptimum {
        return Ok(s);
    }
    cheb_chain_pullback(cert, solve_cheb_favoring(p, p.arity() - 1))
}

/// L1 problem solved through the Chebyshev chain and pulled back.
pub fn solve_l1_via_cheb(p: &L1Problem) -> Result<Solution> {
    let (cheb, cert) = l1_to_cheb_linear(p)?;
    solve_chain(&cheb, &cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{int, rat};
    use crate::reductions::{game_to_cheb, GameChebVariant};

    fn lin(constant: i64, coefficients: &[i64]) -> AffineFunction {
        AffineFunction::from_ints(constant, coefficients)
    }

    fn le(lhs: AffineFunction, rhs: i64) -> LinearConstraint {
        let n = lhs.arity();
        LinearConstraint::new(lhs, Relation::Le, AffineFunction::constant(int(rhs), n))
    }

    fn rps() -> MatrixGame {
        MatrixGame::from_ints(&[&[0, 1, -1], &[-1, 0, 1], &[1, -1, 0]]).unwrap()
    }

    #[test]
    fn simplex_examples() {
        let p = LinearProgram::new(
            Sense::Max,
            lin(0, &[1, 1]),
            vec![le(lin(0, &[1, 2]), 4), le(lin(0, &[1, 0]), 2)],
            vec![VarSign::Nonneg; 2],
        )
        .unwrap();
        assert_eq!(
            simplex_solve(&p),
            Solution::optimal(vec![int(2), int(1)], int(3))
        );

        let q = LinearProgram::new(
            Sense::Max,
            lin(0, &[1]),
            vec![le(lin(0, &[1]), 1)],
            vec![VarSign::Nonneg],
        )
        .unwrap();
        assert_eq!(simplex_solve(&q).value(), Some(&int(1)));

        let r =
            LinearProgram::new(Sense::Max, lin(0, &[1]), vec![], vec![VarSign::Nonneg]).unwrap();
        assert_eq!(simplex_solve(&r).status(), Status::Unbounded);
    }

    #[test]
    fn simplex_without_variables() {
        let ok =
            LinearProgram::new(Sense::Min, lin(7, &[]), vec![le(lin(1, &[]), 2)], vec![]).unwrap();
        assert_eq!(simplex_solve(&ok), Solution::optimal(vec![], int(7)));
        let bad =
            LinearProgram::new(Sense::Min, lin(7, &[]), vec![le(lin(3, &[]), 2)], vec![]).unwrap();
        assert_eq!(simplex_solve(&bad).status(), Status::Infeasible);
    }

    #[test]
    fn game_examples() {
        let s = solve_game(&rps());
        assert_eq!(s.strategy, Strategy::uniform(3));
        assert_eq!(s.t_max, rat(1, 3));

        let g = MatrixGame::from_ints(&[&[0, 5], &[-5, 0]]).unwrap();
        let s = solve_game(&g);
        assert_eq!(s.strategy.as_slice(), &[int(1), int(0)]);
        assert_eq!(s.t_max, int(0));

        let s = solve_game(&MatrixGame::zero(4));
        assert_eq!(s.strategy, Strategy::uniform(4));
    }

    #[test]
    fn cheb_examples() {
        let p = ChebyshevProblem::new(vec![lin(0, &[1]), lin(-4, &[1])]).unwrap();
        assert_eq!(solve_cheb(&p), Solution::optimal(vec![int(2)], int(2)));

        let (corrected, _) = game_to_cheb(&rps(), GameChebVariant::Corrected).unwrap();
        assert_eq!(solve_cheb(&corrected).value(), Some(&int(1)));
        let (literal, _) = game_to_cheb(&rps(), GameChebVariant::Literal).unwrap();
        let s = solve_cheb(&literal);
        assert_eq!(s.value(), Some(&rat(3, 4)));
        assert_eq!(s.point().unwrap(), &[rat(1, 4), rat(1, 4), rat(1, 4)]);

        let constant = ChebyshevProblem::new(vec![lin(5, &[]), lin(-2, &[])]).unwrap();
        assert_eq!(solve_cheb(&constant), Solution::optimal(vec![], int(5)));
    }

    #[test]
    fn l1_examples() {
        let p = L1Problem::new(vec![lin(0, &[1]), lin(-1, &[1]), lin(-10, &[1])]).unwrap();
        assert_eq!(solve_l1(&p), Solution::optimal(vec![int(1)], int(10)));
        let q = L1Problem::new(vec![lin(0, &[1])]).unwrap();
        assert_eq!(solve_l1(&q), Solution::optimal(vec![int(0)], int(0)));
        let r = L1Problem::new(vec![lin(-1, &[1, 1]), lin(0, &[1, -1])]).unwrap();
        assert_eq!(
            solve_l1(&r),
            Solution::optimal(vec![rat(1, 2), rat(1, 2)], int(0))
        );
    }

    #[test]
    fn l1_through_chebyshev_chain() {
        let p = L1Problem::new(vec![lin(0, &[1]), lin(-1, &[1]), lin(-10, &[1])]).unwrap();
        assert_eq!(
            solve_l1_via_cheb(&p).unwrap(),
            Solution::optimal(vec![int(1)], int(10))
        );
        let q = L1Problem::new(vec![lin(0, &[1])]).unwrap();
        assert_eq!(
            solve_l1_via_cheb(&q).unwrap(),
            Solution::optimal(vec![int(0)], int(0))
        );
    }

    #[test]
    fn lp_via_game_statuses() {
        let unit = LinearProgram::new(
            Sense::Max,
            lin(0, &[1]),
            vec![le(lin(0, &[1]), 1)],
            vec![VarSign::Nonneg],
        )
        .unwrap();
        assert_eq!(
            solve_lp_via_game(&unit).unwrap(),
            Solution::optimal(vec![int(1)], int(1))
        );

        let unbounded = LinearProgram::new(
            Sense::Max,
            lin(0, &[1]),
            vec![le(lin(0, &[-1]), 0)],
            vec![VarSign::Nonneg],
        )
        .unwrap();
        assert_eq!(
            solve_lp_via_game(&unbounded).unwrap().status(),
            Status::Unbounded
        );

        let infeasible = LinearProgram::new(
            Sense::Max,
            lin(0, &[1]),
            vec![le(lin(0, &[1]), 1), le(lin(0, &[-1]), -2)],
            vec![VarSign::Nonneg],
        )
        .unwrap();
        assert_eq!(
            solve_lp_via_game(&infeasible).unwrap().status(),
            Status::Infeasible
        );
    }
}
