//! Rewriting a general program as `max c·w, Aw ≤ b, w ≥ 0`.

use num_traits::Zero;

use super::{Column, Dims, ReductionCertificate, ReductionKind, VarMap};
use crate::error::{check_dim, Error, Result};
use crate::model::{LinearProgram, Rational, Relation, Sense, Solution, StandardLP, VarSign};

/// Free variables become `u - v` with adjacent columns; nonnegative ones are
/// kept. MIN is negated to MAX, GE rows are negated and EQ rows are split into
/// a LE row followed by the negated GE row.
pub fn lp_to_standard(p: &LinearProgram) -> Result<(StandardLP, ReductionCertificate)> {
    p.validate()?;
    if p.num_vars() == 0 {
        return Err(Error::NoVariables);
    }
    let mut columns = Vec::with_capacity(p.num_vars());
    let mut width = 0;
    for sign in &p.var_signs {
        match sign {
            VarSign::Free => {
                columns.push(Column::Split {
                    pos: width,
                    neg: width + 1,
                });
                width += 2;
            }
            VarSign::Nonneg => {
                columns.push(Column::Kept { index: width });
                width += 1;
            }
        }
    }

    let expand = |coefficients: &[Rational], negate: bool| -> Vec<Rational> {
        let mut row = vec![Rational::zero(); width];
        for (a, col) in coefficients.iter().zip(&columns) {
            let a = if negate { -a } else { a.clone() };
            match *col {
                Column::Split { pos, neg } => {
                    row[neg] = -&a;
                    row[pos] = a;
                }
                Column::Kept { index } => row[index] = a,
            }
        }
        row
    };

    let negated = p.sense == Sense::Min;
    let c = expand(&p.objective.coefficients, negated);

    let mut a = Vec::new();
    let mut b = Vec::new();
    for con in &p.constraints {
        // lhs - rhs  rel  0
        let d = con.lhs.sub(&con.rhs);
        if matches!(con.relation, Relation::Le | Relation::Eq) {
            a.push(expand(&d.coefficients, false));
            b.push(-&d.constant);
        }
        if matches!(con.relation, Relation::Ge | Relation::Eq) {
            a.push(expand(&d.coefficients, true));
            b.push(d.constant.clone());
        }
    }

    let target_dims = Dims::new(width, b.len());
    let std = StandardLP { c, a, b };
    let cert = ReductionCertificate {
        kind: ReductionKind::LpToStandard,
        source_dims: Dims::new(p.num_vars(), p.constraints.len()),
        target_dims,
        shift_c: None,
        scale_alpha: None,
        var_map: VarMap::Standardized {
            columns,
            negated,
            objective_constant: p.objective.constant.clone(),
        },
    };
    Ok((std, cert))
}

/// Recombines split columns and restores the objective sign and constant.
pub fn standard_sol_pullback(cert: &ReductionCertificate, s: Solution) -> Result<Solution> {
    cert.expect(ReductionKind::LpToStandard)?;
    let VarMap::Standardized {
        columns,
        negated,
        objective_constant,
    } = &cert.var_map
    else {
        return Err(Error::ContractViolation(
            "standardization certificate without a column map".into(),
        ));
    };
    if !s.is_optimal() {
        return Ok(s);
    }
    let (w, value) = s.into_optimum().expect("optimal");
    check_dim(cert.target_dims.variables, w.len())?;
    let x = columns
        .iter()
        .map(|col| match *col {
            Column::Split { pos, neg } => &w[pos] - &w[neg],
            Column::Kept { index } => w[index].clone(),
        })
        .collect();
    let value = if *negated { -value } else { value } + objective_constant;
    Ok(Solution::optimal(x, value))
}
