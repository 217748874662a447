//! Exact value types for every problem form handled by the crate.
//!
//! All numbers are [`Rational`]s (arbitrary precision, always in lowest
//! terms). Nothing in this crate rounds.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{check_dim, Error, Result, StrategyViolation};

pub type Rational = num_rational::BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub(crate) fn sum(xs: &[Rational]) -> Rational {
    xs.iter().fold(Rational::zero(), |acc, x| acc + x)
}

/// `constant + Σ coefficients[j]·x[j]`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineFunction {
    #[serde_as(as = "DisplayFromStr")]
    pub constant: Rational,
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub coefficients: Vec<Rational>,
}

impl AffineFunction {
    pub fn new(constant: Rational, coefficients: Vec<Rational>) -> Self {
        Self {
            constant,
            coefficients,
        }
    }

    pub fn constant(value: Rational, arity: usize) -> Self {
        Self::new(value, vec![Rational::zero(); arity])
    }

    pub fn zero(arity: usize) -> Self {
        Self::constant(Rational::zero(), arity)
    }

    /// The coordinate function `x[index]`.
    pub fn variable(index: usize, arity: usize) -> Self {
        let mut f = Self::zero(arity);
        f.coefficients[index] = Rational::one();
        f
    }

    /// Convenience constructor from small integers: `from_ints(b0, &[c1, ..])`.
    pub fn from_ints(constant: i64, coefficients: &[i64]) -> Self {
        Self::new(
            int(constant),
            coefficients.iter().map(|&c| int(c)).collect(),
        )
    }

    pub fn arity(&self) -> usize {
        self.coefficients.len()
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        check_dim(self.arity(), x.len())?;
        Ok(&self.constant + dot(&self.coefficients, x))
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        Self::new(
            &self.constant + &other.constant,
            self.coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(
            &self.constant * factor,
            self.coefficients.iter().map(|c| c * factor).collect(),
        )
    }

    /// Same function over `arity` variables, the extra ones with zero
    /// coefficient. Existing variables keep their positions.
    pub fn widen(&self, arity: usize) -> Self {
        let mut coefficients = self.coefficients.clone();
        coefficients.resize(arity, Rational::zero());
        Self::new(self.constant.clone(), coefficients)
    }
}

impl fmt::Display for AffineFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        for (j, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, " {sign} x{}", j + 1)?;
            } else {
                write!(f, " {sign} {mag}*x{}", j + 1)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearConstraint {
    pub lhs: AffineFunction,
    #[serde(rename = "rel")]
    pub relation: Relation,
    pub rhs: AffineFunction,
}

impl LinearConstraint {
    pub fn new(lhs: AffineFunction, relation: Relation, rhs: AffineFunction) -> Self {
        Self { lhs, relation, rhs }
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> Result<bool> {
        let l = self.lhs.eval(x)?;
        let r = self.rhs.eval(x)?;
        Ok(match self.relation {
            Relation::Le => l <= r,
            Relation::Ge => l >= r,
            Relation::Eq => l == r,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VarSign {
    Free,
    Nonneg,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: AffineFunction,
    pub constraints: Vec<LinearConstraint>,
    pub var_signs: Vec<VarSign>,
}

impl LinearProgram {
    pub fn new(
        sense: Sense,
        objective: AffineFunction,
        constraints: Vec<LinearConstraint>,
        var_signs: Vec<VarSign>,
    ) -> Result<Self> {
        let lp = Self {
            sense,
            objective,
            constraints,
            var_signs,
        };
        lp.validate()?;
        Ok(lp)
    }

    pub fn num_vars(&self) -> usize {
        self.var_signs.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        check_dim(n, self.objective.arity())?;
        for c in &self.constraints {
            check_dim(n, c.lhs.arity())?;
            check_dim(n, c.rhs.arity())?;
        }
        Ok(())
    }

    /// Whether `x` satisfies every constraint and sign restriction.
    pub fn is_feasible(&self, x: &[Rational]) -> Result<bool> {
        check_dim(self.num_vars(), x.len())?;
        for (xi, sign) in x.iter().zip(&self.var_signs) {
            if *sign == VarSign::Nonneg && xi.is_negative() {
                return Ok(false);
            }
        }
        for c in &self.constraints {
            if !c.is_satisfied(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// maximize `c·w` subject to `A w ≤ b`, `w ≥ 0`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardLP {
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub c: Vec<Rational>,
    #[serde_as(as = "Vec<Vec<DisplayFromStr>>")]
    pub a: Vec<Vec<Rational>>,
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub b: Vec<Rational>,
}

impl StandardLP {
    pub fn new(c: Vec<Rational>, a: Vec<Vec<Rational>>, b: Vec<Rational>) -> Result<Self> {
        let p = Self { c, a, b };
        p.validate()?;
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.c.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.b.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.c.is_empty() {
            return Err(Error::NoVariables);
        }
        check_dim(self.b.len(), self.a.len())?;
        for row in &self.a {
            check_dim(self.c.len(), row.len())?;
        }
        Ok(())
    }

    pub fn objective(&self, w: &[Rational]) -> Rational {
        dot(&self.c, w)
    }

    pub fn is_feasible(&self, w: &[Rational]) -> bool {
        w.len() == self.num_vars()
            && w.iter().all(|x| !x.is_negative())
            && self
                .a
                .iter()
                .zip(&self.b)
                .all(|(row, bi)| dot(row, w) <= *bi)
    }
}

/// Symmetric two-player zero-sum game with skew-symmetric payoff `M = -Mᵀ`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixGame {
    #[serde_as(as = "Vec<Vec<DisplayFromStr>>")]
    matrix: Vec<Vec<Rational>>,
}

impl MatrixGame {
    /// Rejects non-square or non-skew-symmetric input.
    pub fn new(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let g = Self { matrix };
        g.validate()?;
        Ok(g)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    pub fn zero(size: usize) -> Self {
        Self {
            matrix: vec![vec![Rational::zero(); size]; size],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.matrix.len();
        if n == 0 {
            return Err(Error::InvariantViolation(
                "payoff matrix must be at least 1x1".into(),
            ));
        }
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvariantViolation(format!(
                    "payoff matrix row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        for i in 0..n {
            for j in i..n {
                if self.matrix[i][j] != -&self.matrix[j][i] {
                    return Err(Error::InvariantViolation(format!(
                        "payoff matrix not skew-symmetric at ({i},{j}): M[{i}][{j}] = {}, M[{j}][{i}] = {}",
                        self.matrix[i][j], self.matrix[j][i]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.matrix[i][j]
    }

    /// Largest entry. Positive unless the matrix is zero.
    pub fn max_entry(&self) -> Rational {
        self.matrix
            .iter()
            .flatten()
            .max()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Zero::is_zero)
    }

    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        check_dim(self.size(), x.len())?;
        Ok(self.matrix.iter().map(|row| dot(row, x)).collect())
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        Self::new(
            self.matrix
                .iter()
                .map(|row| row.iter().map(|v| v * factor).collect())
                .collect(),
        )
        .expect("scaling preserves skew symmetry")
    }
}

/// Mixed strategy: nonnegative entries summing to exactly one.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Strategy {
    #[serde_as(as = "Vec<DisplayFromStr>")]
    x: Vec<Rational>,
}

impl Strategy {
    pub fn new(x: Vec<Rational>) -> Result<Self> {
        if let Some((index, value)) = x.iter().enumerate().find(|(_, v)| v.is_negative()) {
            return Err(StrategyViolation::NegativeEntry {
                index,
                value: value.clone(),
            }
            .into());
        }
        let total = sum(&x);
        if !total.is_one() {
            return Err(StrategyViolation::SumNotOne { sum: total }.into());
        }
        Ok(Self { x })
    }

    pub fn uniform(size: usize) -> Self {
        Self {
            x: vec![rat(1, size as i64); size],
        }
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.x
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.x
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }
}

fn check_functions(functions: &[AffineFunction]) -> Result<usize> {
    let first = functions.first().ok_or(Error::NoFunctions)?;
    let n = first.arity();
    for f in functions {
        check_dim(n, f.arity())?;
    }
    Ok(n)
}

/// minimize `max_i |f_i(x)|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChebyshevProblem {
    pub functions: Vec<AffineFunction>,
}

impl ChebyshevProblem {
    pub fn new(functions: Vec<AffineFunction>) -> Result<Self> {
        check_functions(&functions)?;
        Ok(Self { functions })
    }

    pub fn validate(&self) -> Result<()> {
        check_functions(&self.functions).map(|_| ())
    }

    pub fn arity(&self) -> usize {
        self.functions[0].arity()
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        let mut best = Rational::zero();
        for f in &self.functions {
            let v = f.eval(x)?.abs();
            if v > best {
                best = v;
            }
        }
        Ok(best)
    }
}

/// minimize `Σ_i |f_i(x)|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct L1Problem {
    pub functions: Vec<AffineFunction>,
}

impl L1Problem {
    pub fn new(functions: Vec<AffineFunction>) -> Result<Self> {
        check_functions(&functions)?;
        Ok(Self { functions })
    }

    pub fn validate(&self) -> Result<()> {
        check_functions(&self.functions).map(|_| ())
    }

    pub fn arity(&self) -> usize {
        self.functions[0].arity()
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        let mut total = Rational::zero();
        for f in &self.functions {
            total += f.eval(x)?.abs();
        }
        Ok(total)
    }
}

pub fn eval_affine(f: &AffineFunction, x: &[Rational]) -> Result<Rational> {
    f.eval(x)
}

pub fn eval_cheb(p: &ChebyshevProblem, x: &[Rational]) -> Result<Rational> {
    p.eval(x)
}

pub fn eval_l1(p: &L1Problem, x: &[Rational]) -> Result<Rational> {
    p.eval(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
    /// Either infeasible or unbounded; the game route alone cannot tell which.
    NoFiniteOptimum,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Optimal => "optimal",
            Self::Infeasible => "infeasible",
            Self::Unbounded => "unbounded",
            Self::NoFiniteOptimum => "no_finite_optimum",
        })
    }
}

/// Point and value are present exactly when the status is optimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    status: Status,
    optimum: Option<(Vec<Rational>, Rational)>,
}

impl Solution {
    pub fn optimal(point: Vec<Rational>, value: Rational) -> Self {
        Self {
            status: Status::Optimal,
            optimum: Some((point, value)),
        }
    }

    /// A non-optimal outcome. Panics if passed [`Status::Optimal`].
    pub fn without_optimum(status: Status) -> Self {
        assert_ne!(status, Status::Optimal, "optimal solutions need a point");
        Self {
            status,
            optimum: None,
        }
    }

    pub fn infeasible() -> Self {
        Self::without_optimum(Status::Infeasible)
    }

    pub fn unbounded() -> Self {
        Self::without_optimum(Status::Unbounded)
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }

    pub fn point(&self) -> Option<&[Rational]> {
        self.optimum.as_ref().map(|(p, _)| p.as_slice())
    }

    pub fn value(&self) -> Option<&Rational> {
        self.optimum.as_ref().map(|(_, v)| v)
    }

    pub fn into_optimum(self) -> Option<(Vec<Rational>, Rational)> {
        self.optimum
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "status: {}", self.status)?;
        if let Some((point, value)) = &self.optimum {
            writeln!(f, "point: ({})", join(point))?;
            writeln!(f, "value: {value}")?;
        }
        Ok(())
    }
}

pub fn join(xs: &[Rational]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
