//! Epigraph reformulations: `max |f_i|` and `Σ |f_i|` as linear programs.

use num_traits::One;

use super::{Dims, ReductionCertificate, ReductionKind, VarMap};
use crate::error::{check_dim, Error, Result};
use crate::model::{
    AffineFunction, ChebyshevProblem, L1Problem, LinearConstraint, LinearProgram, Rational,
    Relation, Sense, Solution, VarSign,
};

/// Appends `-t ≤ f ≤ t` for the auxiliary variable at index `t`.
fn push_band(constraints: &mut Vec<LinearConstraint>, f: &AffineFunction, t: usize, arity: usize) {
    let f = f.widen(arity);
    let t = AffineFunction::variable(t, arity);
    constraints.push(LinearConstraint::new(t.neg(), Relation::Le, f.clone()));
    constraints.push(LinearConstraint::new(f, Relation::Le, t));
}

fn signs(free: usize, nonneg: usize) -> Vec<VarSign> {
    let mut v = vec![VarSign::Free; free];
    v.resize(free + nonneg, VarSign::Nonneg);
    v
}

/// minimize `t` subject to `-t ≤ f_i ≤ t`, over `(x_1..x_n, t)`.
pub fn cheb_to_lp(p: &ChebyshevProblem) -> (LinearProgram, ReductionCertificate) {
    let n = p.arity();
    let m = p.len();
    let mut constraints = Vec::with_capacity(2 * m);
    for f in &p.functions {
        push_band(&mut constraints, f, n, n + 1);
    }
    let lp = LinearProgram {
        sense: Sense::Min,
        objective: AffineFunction::variable(n, n + 1),
        constraints,
        var_signs: signs(n, 1),
    };
    let cert = ReductionCertificate {
        kind: ReductionKind::ChebToLp,
        source_dims: Dims::new(n, m),
        target_dims: Dims::new(n + 1, 2 * m),
        shift_c: None,
        scale_alpha: None,
        var_map: VarMap::Auxiliary {
            original: n,
            auxiliary: 1,
        },
    };
    (lp, cert)
}

/// minimize `Σ t_i` subject to `-t_i ≤ f_i ≤ t_i`, over `(x_1..x_n, t_1..t_m)`.
pub fn l1_to_lp(p: &L1Problem) -> (LinearProgram, ReductionCertificate) {
    let n = p.arity();
    let m = p.len();
    let arity = n + m;
    let mut constraints = Vec::with_capacity(2 * m);
    for (i, f) in p.functions.iter().enumerate() {
        push_band(&mut constraints, f, n + i, arity);
    }
    let mut objective = AffineFunction::zero(arity);
    for t in &mut objective.coefficients[n..] {
        *t = Rational::one();
    }
    let lp = LinearProgram {
        sense: Sense::Min,
        objective,
        constraints,
        var_signs: signs(n, m),
    };
    let cert = ReductionCertificate {
        kind: ReductionKind::L1ToLp,
        source_dims: Dims::new(n, m),
        target_dims: Dims::new(n + m, 2 * m),
        shift_c: None,
        scale_alpha: None,
        var_map: VarMap::Auxiliary {
            original: n,
            auxiliary: m,
        },
    };
    (lp, cert)
}

fn drop_auxiliary(cert: &ReductionCertificate, s: Solution) -> Result<Solution> {
    let VarMap::Auxiliary { original, .. } = cert.var_map else {
        return Err(Error::ContractViolation(
            "epigraph certificate without an auxiliary map".into(),
        ));
    };
    if !s.is_optimal() {
        return Ok(s);
    }
    let (mut point, value) = s.into_optimum().expect("optimal");
    check_dim(cert.target_dims.variables, point.len())?;
    point.truncate(original);
    Ok(Solution::optimal(point, value))
}

/// Drops `t`. The LP optimum `t*` is the Chebyshev optimum.
pub fn lp_sol_to_cheb_sol(cert: &ReductionCertificate, s: Solution) -> Result<Solution> {
    cert.expect(ReductionKind::ChebToLp)?;
    drop_auxiliary(cert, s)
}

/// Drops the `t` block. At an LP optimum `t_i = |f_i(x)|`.
pub fn lp_sol_to_l1_sol(cert: &ReductionCertificate, s: Solution) -> Result<Solution> {
    cert.expect(ReductionKind::L1ToLp)?;
    drop_auxiliary(cert, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::int;

    fn lin(constant: i64, coefficients: &[i64]) -> AffineFunction {
        AffineFunction::from_ints(constant, coefficients)
    }

    #[test]
    fn cheb_to_lp_dims() {
        let p = ChebyshevProblem::new(vec![lin(0, &[1]), lin(-4, &[1])]).unwrap();
        let (lp, cert) = cheb_to_lp(&p);
        assert_eq!((lp.num_vars(), lp.constraints.len()), (2, 4));
        assert_eq!(cert.target_dims, Dims::new(2, 4));
        assert_eq!(lp.sense, Sense::Min);
        assert_eq!(lp.var_signs, vec![VarSign::Free, VarSign::Nonneg]);

        let q = ChebyshevProblem::new(vec![lin(0, &[1, 1]), lin(0, &[1, -1]), lin(0, &[-1, 0])])
            .unwrap();
        assert_eq!(cheb_to_lp(&q).1.target_dims, Dims::new(3, 6));
    }

    #[test]
    fn cheb_to_lp_constant_function() {
        let p = ChebyshevProblem::new(vec![lin(5, &[])]).unwrap();
        let (lp, _) = cheb_to_lp(&p);
        assert_eq!(lp.num_vars(), 1);
        assert!(lp.is_feasible(&[int(5)]).unwrap());
        assert!(!lp.is_feasible(&[int(4)]).unwrap());
    }

    #[test]
    fn lp_sol_to_cheb_sol_examples() {
        let p = ChebyshevProblem::new(vec![lin(0, &[1]), lin(-4, &[1])]).unwrap();
        let (_, cert) = cheb_to_lp(&p);
        let s = lp_sol_to_cheb_sol(&cert, Solution::optimal(vec![int(2), int(2)], int(2))).unwrap();
        assert_eq!(s, Solution::optimal(vec![int(2)], int(2)));
        assert_eq!(
            lp_sol_to_cheb_sol(&cert, Solution::infeasible()).unwrap(),
            Solution::infeasible()
        );
        assert!(matches!(
            lp_sol_to_cheb_sol(&cert, Solution::optimal(vec![int(2)], int(2))),
            Err(Error::DimensionMismatch { .. })
        ));

        let c = ChebyshevProblem::new(vec![lin(5, &[])]).unwrap();
        let (_, cert) = cheb_to_lp(&c);
        let s = lp_sol_to_cheb_sol(&cert, Solution::optimal(vec![int(5)], int(5))).unwrap();
        assert_eq!(s, Solution::optimal(vec![], int(5)));
    }

    #[test]
    fn l1_to_lp_dims_and_pullback() {
        let p = L1Problem::new(vec![lin(0, &[1]), lin(-1, &[1]), lin(-10, &[1])]).unwrap();
        let (lp, cert) = l1_to_lp(&p);
        assert_eq!((lp.num_vars(), lp.constraints.len()), (4, 6));
        assert_eq!(cert.target_dims, Dims::new(4, 6));
        assert!(lp.is_feasible(&[int(1), int(1), int(0), int(9)]).unwrap());
        let s = lp_sol_to_l1_sol(
            &cert,
            Solution::optimal(vec![int(1), int(1), int(0), int(9)], int(10)),
        )
        .unwrap();
        assert_eq!(s, Solution::optimal(vec![int(1)], int(10)));
        assert_eq!(
            lp_sol_to_l1_sol(&cert, Solution::unbounded()).unwrap(),
            Solution::unbounded()
        );

        let single = L1Problem::new(vec![lin(0, &[1])]).unwrap();
        let (lp, cert) = l1_to_lp(&single);
        assert_eq!((lp.num_vars(), lp.constraints.len()), (2, 2));
        let s = lp_sol_to_l1_sol(&cert, Solution::optimal(vec![int(0), int(0)], int(0))).unwrap();
        assert_eq!(s, Solution::optimal(vec![int(0)], int(0)));
    }

    #[test]
    fn wrong_certificate_kind() {
        let p = L1Problem::new(vec![lin(0, &[1])]).unwrap();
        let (_, cert) = l1_to_lp(&p);
        assert!(matches!(
            lp_sol_to_cheb_sol(&cert, Solution::infeasible()),
            Err(Error::WrongCertificate { .. })
        ));
    }
}
