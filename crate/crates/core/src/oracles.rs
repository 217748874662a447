//! Brute-force verifiers for small instances.
//!
//! Nothing here touches the simplex or the standard-form rewrite. Linear
//! programs are enumerated in their own coordinates: every vertex of a
//! pointed polyhedron is the unique solution of `n` linearly independent
//! active constraints, and a pointed recession cone is generated by its
//! extreme rays, each cut out by `n - 1` of them.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_dim, Error, Result};
use crate::model::{
    dot, rat, L1Problem, LinearProgram, MatrixGame, Rational, Relation, Sense, Solution, Strategy,
    VarSign,
};
use crate::reductions::l1_to_cheb_direct;

pub const DEFAULT_LIMIT: u128 = 100_000;
/// Largest number of variables the enumerators accept.
pub const MAX_VARS: usize = 6;

type Row = (Vec<Rational>, Rational);

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(rows: &mut [Vec<Rational>], columns: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..columns {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for v in &mut rows[r] {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * p;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

fn rank(rows: &[Vec<Rational>], n: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, n).len()
}

/// Unique solution of `a x = b`, if there is one.
fn solve_unique(system: &[&Row], n: usize) -> Option<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = system
        .iter()
        .map(|(a, b)| {
            let mut row = a.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = rref(&mut m, n + 1);
    if pivots.len() != n || pivots.last() == Some(&n) {
        return None;
    }
    Some(m[..n].iter().map(|row| row[n].clone()).collect())
}

fn null_space(rows: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, n);
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&m[r][f];
            }
            v
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `{x : a·x ≤ b for ineq, a·x = b for eq}` in `n` variables.
#[derive(Debug, Clone)]
struct Polyhedron {
    n: usize,
    ineq: Vec<Row>,
    eq: Vec<Row>,
}

impl Polyhedron {
    fn contains(&self, x: &[Rational]) -> bool {
        self.ineq.iter().all(|(a, b)| dot(a, x) <= *b)
            && self.eq.iter().all(|(a, b)| dot(a, x) == *b)
    }

    fn normals(&self) -> Vec<Vec<Rational>> {
        self.ineq
            .iter()
            .chain(&self.eq)
            .map(|(a, _)| a.clone())
            .collect()
    }

    fn eq_rank(&self) -> usize {
        rank(
            &self.eq.iter().map(|(a, _)| a.clone()).collect::<Vec<_>>(),
            self.n,
        )
    }

    /// Restricts to the orthogonal complement of the lineality space, which
    /// makes the polyhedron pointed. Returns the lineality basis.
    fn make_pointed(&mut self) -> Vec<Vec<Rational>> {
        let lineality = null_space(&self.normals(), self.n);
        for l in &lineality {
            self.eq.push((l.clone(), Rational::zero()));
        }
        lineality
    }

    fn check_limit(&self, k: usize, limit: u128) -> Result<()> {
        if self.n > MAX_VARS {
            return Err(Error::LimitExceeded {
                count: self.n as u128,
                limit: MAX_VARS as u128,
            });
        }
        let count = binomial(self.ineq.len(), k);
        if count > limit {
            return Err(Error::LimitExceeded { count, limit });
        }
        Ok(())
    }

    /// All vertices of a pointed polyhedron, deduplicated, in order.
    fn vertices(&self, limit: u128) -> Result<Vec<Vec<Rational>>> {
        let e = self.eq_rank();
        let k = self.n - e;
        self.check_limit(k, limit)?;
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for_each_subset(self.ineq.len(), k, |subset| {
            let system: Vec<&Row> = self
                .eq
                .iter()
                .chain(subset.iter().map(|&i| &self.ineq[i]))
                .collect();
            if let Some(x) = solve_unique(&system, self.n) {
                if self.contains(&x) && seen.insert(x.clone()) {
                    out.push(x);
                }
            }
        });
        Ok(out)
    }

    /// Generators of the recession cone of a pointed polyhedron.
    fn extreme_rays(&self, limit: u128) -> Result<Vec<Vec<Rational>>> {
        let e = self.eq_rank();
        if e >= self.n {
            return Ok(vec![]);
        }
        let k = self.n - 1 - e;
        self.check_limit(k, limit)?;
        let mut rays = Vec::new();
        for_each_subset(self.ineq.len(), k, |subset| {
            let rows: Vec<Vec<Rational>> = self
                .eq
                .iter()
                .chain(subset.iter().map(|&i| &self.ineq[i]))
                .map(|(a, _)| a.clone())
                .collect();
            let basis = null_space(&rows, self.n);
            if basis.len() != 1 {
                return;
            }
            for d in [basis[0].clone(), basis[0].iter().map(|v| -v).collect()] {
                if self.ineq.iter().all(|(a, _)| !dot(a, &d).is_positive()) {
                    rays.push(d);
                }
            }
        });
        Ok(rays)
    }
}

fn lp_polyhedron(p: &LinearProgram) -> Polyhedron {
    let n = p.num_vars();
    let mut ineq = Vec::new();
    let mut eq = Vec::new();
    for c in &p.constraints {
        let d = c.lhs.sub(&c.rhs);
        let row = (d.coefficients.clone(), -&d.constant);
        match c.relation {
            Relation::Le => ineq.push(row),
            Relation::Ge => ineq.push((
                d.coefficients.iter().map(|v| -v).collect(),
                d.constant.clone(),
            )),
            Relation::Eq => eq.push(row),
        }
    }
    for (j, s) in p.var_signs.iter().enumerate() {
        if *s == VarSign::Nonneg {
            let mut a = vec![Rational::zero(); n];
            a[j] = -Rational::one();
            ineq.push((a, Rational::zero()));
        }
    }
    Polyhedron { n, ineq, eq }
}

/// Exhaustive LP solve by vertex and extreme-ray enumeration.
///
/// `limit` caps the number of constraint subsets examined per enumeration.
pub fn vertex_enum_solve(p: &LinearProgram, limit: u128) -> Result<Solution> {
    p.validate()?;
    let mut poly = lp_polyhedron(p);
    let lineality = poly.make_pointed();
    let vertices = poly.vertices(limit)?;
    if vertices.is_empty() {
        return Ok(Solution::infeasible());
    }
    // Direction of improvement.
    let gain: Vec<Rational> = match p.sense {
        Sense::Max => p.objective.coefficients.clone(),
        Sense::Min => p.objective.coefficients.iter().map(|v| -v).collect(),
    };
    if lineality.iter().any(|l| !dot(&gain, l).is_zero()) {
        return Ok(Solution::unbounded());
    }
    if poly
        .extreme_rays(limit)?
        .iter()
        .any(|d| dot(&gain, d).is_positive())
    {
        return Ok(Solution::unbounded());
    }
    let best = vertices
        .into_iter()
        .reduce(|best, x| {
            if dot(&gain, &x) > dot(&gain, &best) {
                x
            } else {
                best
            }
        })
        .expect("nonempty");
    let value = p.objective.eval(&best)?;
    Ok(Solution::optimal(best, value))
}

/// `Mx ≤ 0` exactly.
pub fn verify_strategy_optimal(g: &MatrixGame, x: &Strategy) -> Result<bool> {
    check_dim(g.size(), x.len())?;
    Ok(g.apply(x.as_slice())?.iter().all(|v| !v.is_positive()))
}

/// Vertices of `{Mx ≤ 0, x ≥ 0, Σx = 1}`, sorted.
pub fn enumerate_game_optima(g: &MatrixGame, limit: u128) -> Result<Vec<Strategy>> {
    let n = g.size();
    let mut ineq: Vec<Row> = g
        .matrix()
        .iter()
        .map(|row| (row.clone(), Rational::zero()))
        .collect();
    for j in 0..n {
        let mut a = vec![Rational::zero(); n];
        a[j] = -Rational::one();
        ineq.push((a, Rational::zero()));
    }
    let eq = vec![(vec![Rational::one(); n], Rational::one())];
    let poly = Polyhedron { n, ineq, eq };
    let mut out: Vec<Strategy> = poly
        .vertices(limit)?
        .into_iter()
        .map(|x| Strategy::new(x).expect("vertex of the strategy simplex"))
        .collect();
    assert!(
        !out.is_empty(),
        "symmetric games always have optimal strategies"
    );
    out.sort();
    Ok(out)
}

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| rat(rng.random_range(-60..=60), rng.random_range(1..=12)))
        .collect()
}

/// Compares `Σ|f_i|` with the direct sign-pattern reduction at `trials`
/// random rational points.
pub fn l1_cheb_pointwise_check(p: &L1Problem, trials: usize, seed: u64) -> Result<bool> {
    let direct = l1_to_cheb_direct(p, crate::reductions::DEFAULT_DIRECT_CAP)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x = random_point(&mut rng, p.arity());
        if p.eval(&x)? != direct.eval(&x)? {
            return Ok(false);
        }
    }
    Ok(true)
}
