//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Works on `max c·w, Aw ≤ b, w ≥ 0`. Columns are laid out as
//! `[originals | slacks | artificials]`; rows with `b_i < 0` are negated and
//! given an artificial basic variable, all others start with their slack
//! basic.

use num_traits::{One, Signed, Zero};

use crate::model::{Rational, StandardLP};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardOutcome {
    Optimal {
        point: Vec<Rational>,
        value: Rational,
    },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
}

struct Unbounded;

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let inv = self.rows[r][col].recip();
        for v in &mut self.rows[r] {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][col].is_zero() {
                continue;
            }
            let factor = self.rows[i][col].clone();
            for (v, p) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        self.basis[r] = col;
    }

    /// Maximizes `cost·x` over the columns marked `allowed`.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> Result<(), Unbounded> {
        let mut is_basic = vec![false; self.width];
        for &b in &self.basis {
            is_basic[b] = true;
        }
        loop {
            // Bland: lowest-index column with positive reduced cost.
            let entering = (0..self.width).find(|&j| {
                if is_basic[j] || !allowed[j] {
                    return false;
                }
                let mut d = cost[j].clone();
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if !cost[b].is_zero() && !row[j].is_zero() {
                        d -= &cost[b] * &row[j];
                    }
                }
                d.is_positive()
            });
            let Some(col) = entering else {
                return Ok(());
            };

            // Ratio test, ties broken by lowest basic-variable index.
            let mut leaving: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[col].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &row[col];
                let better = match &leaving {
                    None => true,
                    Some((r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((r, _)) = leaving else {
                return Err(Unbounded);
            };
            is_basic[self.basis[r]] = false;
            is_basic[col] = true;
            self.pivot(r, col);
        }
    }

    fn column_values(&self, count: usize) -> Vec<Rational> {
        let mut w = vec![Rational::zero(); count];
        for (&b, v) in self.basis.iter().zip(&self.rhs) {
            if b < count {
                w[b] = v.clone();
            }
        }
        w
    }
}

/// Runs phase one. On success the tableau is feasible, has no artificial
/// basic variables, and redundant rows have been dropped.
fn phase_one(p: &StandardLP) -> Option<(Tableau, usize)> {
    let n = p.num_vars();
    let m = p.num_constraints();
    let negative: Vec<usize> = (0..m).filter(|&i| p.b[i].is_negative()).collect();
    let first_art = n + m;
    let width = first_art + negative.len();

    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut art = first_art;
    for i in 0..m {
        let mut row = vec![Rational::zero(); width];
        row[..n].clone_from_slice(&p.a[i]);
        row[n + i] = Rational::one();
        if p.b[i].is_negative() {
            for v in &mut row {
                *v = -&*v;
            }
            row[art] = Rational::one();
            rhs.push(-&p.b[i]);
            basis.push(art);
            art += 1;
        } else {
            rhs.push(p.b[i].clone());
            basis.push(n + i);
        }
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis,
        width,
    };

    if !negative.is_empty() {
        let mut cost = vec![Rational::zero(); width];
        for c in &mut cost[first_art..] {
            *c = -Rational::one();
        }
        let all = vec![true; width];
        if t.optimize(&cost, &all).is_err() {
            unreachable!("phase one objective is bounded by zero");
        }
        let infeasibility = t
            .basis
            .iter()
            .zip(&t.rhs)
            .filter(|(&b, _)| b >= first_art)
            .fold(Rational::zero(), |acc, (_, v)| acc + v);
        if infeasibility.is_positive() {
            return None;
        }
        // Drive zero-level artificials out of the basis.
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] < first_art {
                r += 1;
                continue;
            }
            match (0..first_art).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => {
                    t.pivot(r, j);
                    r += 1;
                }
                None => {
                    t.rows.remove(r);
                    t.rhs.remove(r);
                    t.basis.remove(r);
                }
            }
        }
    }
    Some((t, first_art))
}

pub fn solve_standard(p: &StandardLP) -> StandardOutcome {
    let n = p.num_vars();
    let Some((mut t, first_art)) = phase_one(p) else {
        return StandardOutcome::Infeasible;
    };
    let mut cost = vec![Rational::zero(); t.width];
    cost[..n].clone_from_slice(&p.c);
    let allowed: Vec<bool> = (0..t.width).map(|j| j < first_art).collect();
    if t.optimize(&cost, &allowed).is_err() {
        return StandardOutcome::Unbounded;
    }
    let point = t.column_values(n);
    let value = p.objective(&point);
    StandardOutcome::Optimal { point, value }
}

/// Phase one only.
pub fn is_feasible(p: &StandardLP) -> bool {
    phase_one(p).is_some()
}
