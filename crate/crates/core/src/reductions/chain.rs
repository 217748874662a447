//! Composite reductions from L1 problems (and general LPs) to Chebyshev
//! problems.

use super::{
    cheb_sol_to_strategy, game_strategy_to_lp_sol, game_to_cheb, l1_to_lp, lp_to_standard,
    pullback, standard_to_game, Dims, GameChebVariant, ReductionCertificate, ReductionKind, VarMap,
};
use crate::error::{Error, Result};
use crate::model::{AffineFunction, ChebyshevProblem, L1Problem, LinearProgram, Solution};

pub const DEFAULT_DIRECT_CAP: usize = 20;

fn compose(
    kind: ReductionKind,
    source_dims: Dims,
    stages: Vec<ReductionCertificate>,
) -> ReductionCertificate {
    let last = stages.last().expect("at least one stage");
    ReductionCertificate {
        kind,
        source_dims,
        target_dims: last.target_dims,
        shift_c: last.shift_c.clone(),
        scale_alpha: last.scale_alpha.clone(),
        var_map: VarMap::Chain { stages },
    }
}

fn lp_stages(
    lp: &LinearProgram,
    variant: GameChebVariant,
) -> Result<(ChebyshevProblem, Vec<ReductionCertificate>)> {
    let (std, to_std) = lp_to_standard(lp)?;
    let (game, to_game) = standard_to_game(&std);
    let (cheb, to_cheb) = game_to_cheb(&game, variant)?;
    Ok((cheb, vec![to_std, to_game, to_cheb]))
}

/// General LP through standard form and the symmetric game to a Chebyshev
/// problem. `(n', m')` standard dims give `2(m'+n'+1)+2` functions in
/// `m'+n'+1` variables.
pub fn lp_to_cheb_linear(
    lp: &LinearProgram,
    variant: GameChebVariant,
) -> Result<(ChebyshevProblem, ReductionCertificate)> {
    let (cheb, stages) = lp_stages(lp, variant)?;
    let source = Dims::new(lp.num_vars(), lp.constraints.len());
    Ok((cheb, compose(ReductionKind::LpToChebLinear, source, stages)))
}

/// `(m, n)` L1 problem to a Chebyshev problem with `6m+4n+4` functions in
/// `3m+2n+1` variables, via the epigraph LP, standard form and the game.
pub fn l1_to_cheb_linear(p: &L1Problem) -> Result<(ChebyshevProblem, ReductionCertificate)> {
    let (lp, to_lp) = l1_to_lp(p);
    let (cheb, rest) = lp_stages(&lp, GameChebVariant::Corrected)?;
    let mut stages = vec![to_lp];
    stages.extend(rest);
    let source = Dims::new(p.arity(), p.len());
    Ok((cheb, compose(ReductionKind::L1ToChebLinear, source, stages)))
}

fn in_stage<T>(index: usize, cert: &ReductionCertificate, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Stage {
        index,
        kind: cert.kind,
        source: Box::new(e),
    })
}

/// Inverse of a composite certificate: strategy check, game recovery, then
/// the LP-level pullbacks in reverse order.
pub fn cheb_chain_pullback(cert: &ReductionCertificate, s: Solution) -> Result<Solution> {
    let VarMap::Chain { stages } = &cert.var_map else {
        return Err(Error::ContractViolation("not a chain certificate".into()));
    };
    let n = stages.len();
    let shape_ok = n >= 2
        && stages[n - 1].kind == ReductionKind::GameToCheb
        && stages[n - 2].kind == ReductionKind::StandardToGame;
    if !shape_ok {
        return Err(Error::ContractViolation(
            "chain must end with the game and Chebyshev stages".into(),
        ));
    }

    let strategy = in_stage(
        n - 1,
        &stages[n - 1],
        cheb_sol_to_strategy(&stages[n - 1], &s),
    )?;
    let mut sol = in_stage(
        n - 2,
        &stages[n - 2],
        game_strategy_to_lp_sol(&stages[n - 2], &strategy),
    )?;
    for (index, stage) in stages[..n - 2].iter().enumerate().rev() {
        sol = in_stage(index, stage, pullback(stage, sol))?;
    }
    Ok(sol)
}

/// `max |f_1 ± f_2 ± … ± f_m|` over all `2^(m-1)` sign patterns with the first
/// sign fixed to `+`. Pointwise equal to `Σ |f_i|`.
pub fn l1_to_cheb_direct(p: &L1Problem, cap: usize) -> Result<ChebyshevProblem> {
    let m = p.len();
    if m > cap || m > 63 {
        return Err(Error::CapExceeded { m, cap });
    }
    let (first, rest) = p.functions.split_first().expect("nonempty");
    let patterns = 1u64 << (m - 1);
    let mut functions = Vec::with_capacity(patterns as usize);
    for mask in 0..patterns {
        let f = rest
            .iter()
            .enumerate()
            .fold(first.clone(), |acc: AffineFunction, (i, g)| {
                if mask >> i & 1 == 1 {
                    acc.sub(g)
                } else {
                    acc.add(g)
                }
            });
        functions.push(f);
    }
    ChebyshevProblem::new(functions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{int, rat, Strategy};

    fn lin(constant: i64, coefficients: &[i64]) -> AffineFunction {
        AffineFunction::from_ints(constant, coefficients)
    }

    fn instance(m: usize, n: usize) -> L1Problem {
        L1Problem::new(
            (0..m)
                .map(|i| {
                    let cs: Vec<i64> = (0..n).map(|j| (i + j) as i64 % 3 - 1).collect();
                    lin(i as i64, &cs)
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn linear_chain_sizes() {
        for (m, n, funcs, vars) in [(2, 1, 20, 9), (3, 2, 30, 14)] {
            let (cheb, cert) = l1_to_cheb_linear(&instance(m, n)).unwrap();
            assert_eq!((cheb.len(), cheb.arity()), (funcs, vars));
            assert_eq!(cert.target_dims, Dims::new(vars, funcs));
            assert_eq!(cert.source_dims, Dims::new(n, m));
            let VarMap::Chain { stages } = &cert.var_map else {
                panic!()
            };
            assert_eq!(stages.len(), 4);
        }
    }

    #[test]
    fn direct_examples() {
        let p = L1Problem::new(vec![lin(0, &[1]), lin(-4, &[1])]).unwrap();
        let d = l1_to_cheb_direct(&p, DEFAULT_DIRECT_CAP).unwrap();
        assert_eq!(d.functions, vec![lin(-4, &[2]), lin(4, &[0])]);
        for x in [-3, 0, 2, 4, 9] {
            assert_eq!(d.eval(&[int(x)]).unwrap(), p.eval(&[int(x)]).unwrap());
        }
        assert_eq!(l1_to_cheb_direct(&instance(5, 2), 20).unwrap().len(), 16);
        assert_eq!(
            l1_to_cheb_direct(&instance(21, 1), DEFAULT_DIRECT_CAP).unwrap_err(),
            Error::CapExceeded { m: 21, cap: 20 }
        );
        let single = L1Problem::new(vec![lin(0, &[1])]).unwrap();
        assert_eq!(
            l1_to_cheb_direct(&single, 20).unwrap().functions,
            single.functions
        );
    }

    #[test]
    fn pullback_identifies_failing_stage() {
        let p = L1Problem::new(vec![lin(0, &[1])]).unwrap();
        let (cheb, cert) = l1_to_cheb_linear(&p).unwrap();
        let bad = Solution::optimal(vec![rat(1, 2); cheb.arity()], int(1));
        match cheb_chain_pullback(&cert, bad).unwrap_err() {
            Error::Stage { index, kind, .. } => {
                assert_eq!(index, 3);
                assert_eq!(kind, ReductionKind::GameToCheb);
            }
            e => panic!("unexpected {e:?}"),
        }
        // uniform is not optimal for this game
        let uniform = Strategy::uniform(cheb.arity()).into_vec();
        let err = cheb_chain_pullback(&cert, Solution::optimal(uniform, int(1))).unwrap_err();
        assert!(matches!(err, Error::Stage { index: 2, .. }));
    }
}
