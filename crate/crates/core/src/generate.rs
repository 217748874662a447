//! Seeded random instances for verification suites.
//!
//! Everything draws from a caller-supplied [`ChaCha8Rng`], so a seed fully
//! determines the instance sequence on every platform.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::model::{
    dot, int, rat, AffineFunction, L1Problem, LinearConstraint, LinearProgram, MatrixGame,
    Rational, Relation, Sense, VarSign,
};

pub use rand::SeedableRng;
pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn grid(rng: &mut InstanceRng, max_num: i64, max_den: i64) -> Rational {
    rat(
        rng.random_range(-max_num..=max_num),
        rng.random_range(1..=max_den),
    )
}

fn affine(rng: &mut InstanceRng, arity: usize, max_num: i64) -> AffineFunction {
    AffineFunction::new(
        grid(rng, max_num, 2),
        (0..arity).map(|_| grid(rng, max_num, 2)).collect(),
    )
}

/// `U - Uᵀ` with entries of `U` on a small grid; never the zero matrix.
pub fn skew_game(rng: &mut InstanceRng, size: usize) -> MatrixGame {
    assert!(size >= 2, "a nonzero skew matrix needs size >= 2");
    loop {
        let u: Vec<Vec<Rational>> = (0..size)
            .map(|_| (0..size).map(|_| grid(rng, 3, 2)).collect())
            .collect();
        let m = (0..size)
            .map(|i| (0..size).map(|j| &u[i][j] - &u[j][i]).collect())
            .collect();
        let g = MatrixGame::new(m).expect("U - Uᵀ is skew");
        if !g.is_zero() {
            return g;
        }
    }
}

/// Arbitrary small LP; status is whatever falls out.
pub fn any_lp(rng: &mut InstanceRng, max_vars: usize, max_constraints: usize) -> LinearProgram {
    let n = rng.random_range(1..=max_vars);
    let var_signs = (0..n)
        .map(|_| {
            if rng.random_bool(0.3) {
                VarSign::Free
            } else {
                VarSign::Nonneg
            }
        })
        .collect();
    let m = rng.random_range(0..=max_constraints);
    let constraints = (0..m)
        .map(|_| {
            let rel = match rng.random_range(0..10) {
                0..=5 => Relation::Le,
                6..=8 => Relation::Ge,
                _ => Relation::Eq,
            };
            let lhs = affine(rng, n, 3);
            let rhs = AffineFunction::constant(int(rng.random_range(-4..=6)), n);
            LinearConstraint::new(lhs, rel, rhs)
        })
        .collect();
    let sense = if rng.random_bool(0.5) {
        Sense::Max
    } else {
        Sense::Min
    };
    LinearProgram::new(sense, affine(rng, n, 3), constraints, var_signs)
        .expect("consistent arities")
}

/// LP that is feasible (a random point satisfies every row) and bounded (a
/// coordinate box is included).
pub fn feasible_bounded_lp(
    rng: &mut InstanceRng,
    max_vars: usize,
    max_constraints: usize,
) -> LinearProgram {
    let n = rng.random_range(1..=max_vars);
    let var_signs: Vec<VarSign> = (0..n)
        .map(|_| {
            if rng.random_bool(0.5) {
                VarSign::Free
            } else {
                VarSign::Nonneg
            }
        })
        .collect();
    let anchor: Vec<Rational> = var_signs
        .iter()
        .map(|s| match s {
            VarSign::Free => grid(rng, 3, 2),
            VarSign::Nonneg => rat(rng.random_range(0..=3), rng.random_range(1..=2)),
        })
        .collect();
    let mut constraints = Vec::new();
    for _ in 0..rng.random_range(0..=max_constraints) {
        let a: Vec<Rational> = (0..n).map(|_| grid(rng, 3, 1)).collect();
        let at = dot(&a, &anchor);
        let relation = match rng.random_range(0..6) {
            0..=3 => Relation::Le,
            4 => Relation::Ge,
            _ => Relation::Eq,
        };
        let slack = int(rng.random_range(0..=2));
        let bound = match relation {
            Relation::Le => at + slack,
            Relation::Ge => at - slack,
            Relation::Eq => at,
        };
        constraints.push(LinearConstraint::new(
            AffineFunction::new(int(0), a),
            relation,
            AffineFunction::constant(bound, n),
        ));
    }
    for (j, sign) in var_signs.iter().enumerate() {
        let x = AffineFunction::variable(j, n);
        constraints.push(LinearConstraint::new(
            x.clone(),
            Relation::Le,
            AffineFunction::constant(int(4), n),
        ));
        if *sign == VarSign::Free {
            constraints.push(LinearConstraint::new(
                x,
                Relation::Ge,
                AffineFunction::constant(int(-4), n),
            ));
        }
    }
    let sense = if rng.random_bool(0.5) {
        Sense::Max
    } else {
        Sense::Min
    };
    LinearProgram::new(sense, affine(rng, n, 3), constraints, var_signs)
        .expect("consistent arities")
}

pub fn l1_problem(rng: &mut InstanceRng, max_functions: usize, max_vars: usize) -> L1Problem {
    let m = rng.random_range(1..=max_functions);
    let n = rng.random_range(1..=max_vars);
    L1Problem::new((0..m).map(|_| affine(rng, n, 4)).collect()).expect("common arity")
}

/// Exactly `m` functions in `n` variables.
pub fn l1_problem_sized(rng: &mut InstanceRng, m: usize, n: usize) -> L1Problem {
    L1Problem::new((0..m).map(|_| affine(rng, n, 4)).collect()).expect("common arity")
}
