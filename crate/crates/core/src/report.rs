//! Human-readable reports: reduction size tables and the dossier comparing
//! the literal and corrected game-to-Chebyshev forms.

use std::fmt;
use std::ops::RangeInclusive;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::generate;
use crate::model::{join, rat, ChebyshevProblem, MatrixGame, Rational, Solution, Strategy};
use crate::oracles::{vertex_enum_solve, DEFAULT_LIMIT};
use crate::reductions::{
    cheb_sol_to_strategy, cheb_to_lp, game_to_cheb, l1_to_cheb_direct, l1_to_cheb_linear,
    GameChebVariant,
};
use crate::solvers::solve_cheb;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeRow {
    pub m: usize,
    pub n: usize,
    pub linear_functions: usize,
    pub linear_variables: usize,
    /// `None` when `m` exceeds the direct-reduction cap.
    pub direct_functions: Option<usize>,
}

/// Sizes measured by actually running both L1-to-Chebyshev reductions on a
/// seeded `m × n` instance for each `m`.
pub fn size_table(ms: RangeInclusive<usize>, n: usize, cap: usize) -> Result<Vec<SizeRow>> {
    let mut rng = generate::rng(0);
    ms.map(|m| {
        let p = generate::l1_problem_sized(&mut rng, m, n);
        let (linear, _) = l1_to_cheb_linear(&p)?;
        let direct_functions = match l1_to_cheb_direct(&p, cap) {
            Ok(d) => Some(d.len()),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(SizeRow {
            m,
            n,
            linear_functions: linear.len(),
            linear_variables: linear.arity(),
            direct_functions,
        })
    })
    .collect()
}

pub fn format_size_table(rows: &[SizeRow]) -> String {
    let mut out = format!(
        "{:>4} {:>4} {:>16} {:>16} {:>16}\n",
        "m", "n", "linear_funcs", "linear_vars", "direct_funcs"
    );
    for r in rows {
        let direct = r
            .direct_functions
            .map_or_else(|| "cap".to_string(), |d| d.to_string());
        out += &format!(
            "{:>4} {:>4} {:>16} {:>16} {:>16}\n",
            r.m, r.n, r.linear_functions, r.linear_variables, direct
        );
    }
    out
}

pub fn rock_paper_scissors() -> MatrixGame {
    MatrixGame::from_ints(&[&[0, 1, -1], &[-1, 0, 1], &[1, -1, 0]]).expect("skew")
}

/// Exhaustive optimum of a Chebyshev problem through its epigraph LP.
pub fn cheb_oracle(p: &ChebyshevProblem) -> Result<Solution> {
    let (lp, cert) = cheb_to_lp(p);
    crate::reductions::lp_sol_to_cheb_sol(&cert, vertex_enum_solve(&lp, DEFAULT_LIMIT)?)
}

/// Objective of the literal form at seeded random points that have a
/// negative entry or a coordinate sum above one. Returns the check counts
/// `(negative_points, excess_points)` and whether every point exceeded `c`.
pub fn literal_subclaims(
    g: &MatrixGame,
    samples: usize,
    seed: u64,
) -> Result<(usize, usize, bool)> {
    let (literal, cert) = game_to_cheb(g, GameChebVariant::Literal)?;
    let shift = cert.shift_c.expect("literal form records its shift");
    let mut rng = generate::rng(seed);
    let n = g.size();
    let (mut negative, mut excess, mut holds) = (0, 0, true);
    while negative < samples || excess < samples {
        let x: Vec<Rational> = (0..n)
            .map(|_| rat(rng.random_range(-20..=40), rng.random_range(1..=12)))
            .collect();
        let has_negative = x.iter().any(|v| *v < Rational::zero());
        let sum_excess = x.iter().fold(Rational::zero(), |a, v| a + v) > Rational::one();
        if !(has_negative || sum_excess) {
            continue;
        }
        negative += usize::from(has_negative);
        excess += usize::from(sum_excess);
        holds &= literal.eval(&x)? > shift;
    }
    Ok((negative, excess, holds))
}

#[derive(Debug, Clone)]
pub struct LiteralFormDossier {
    pub game: MatrixGame,
    pub shift: Rational,
    pub literal_simplex: Solution,
    pub literal_oracle: Solution,
    /// Why the literal optimum does not pull back to a strategy.
    pub literal_rejection: Option<Error>,
    pub corrected_simplex: Solution,
    pub corrected_oracle: Solution,
    pub corrected_strategy: Strategy,
    pub subclaim_samples: (usize, usize),
    pub subclaims_hold: bool,
}

impl LiteralFormDossier {
    /// Literal optimum strictly below the shift, at a point that is not a
    /// strategy, while the corrected form attains exactly 1 at a strategy.
    pub fn shows_discrepancy(&self) -> bool {
        let below = |s: &Solution| s.value().is_some_and(|v| *v < self.shift);
        below(&self.literal_simplex)
            && self.literal_simplex.value() == self.literal_oracle.value()
            && matches!(self.literal_rejection, Some(Error::NotAStrategy(_)))
            && self.corrected_simplex.value() == Some(&Rational::one())
            && self.corrected_oracle.value() == Some(&Rational::one())
    }
}

pub fn literal_form_dossier() -> Result<LiteralFormDossier> {
    let game = rock_paper_scissors();
    let (literal, lit_cert) = game_to_cheb(&game, GameChebVariant::Literal)?;
    let (corrected, cor_cert) = game_to_cheb(&game, GameChebVariant::Corrected)?;
    let literal_simplex = solve_cheb(&literal);
    let literal_oracle = cheb_oracle(&literal)?;
    let literal_rejection = cheb_sol_to_strategy(&lit_cert, &literal_simplex).err();
    let corrected_simplex = solve_cheb(&corrected);
    let corrected_oracle = cheb_oracle(&corrected)?;
    let corrected_strategy = cheb_sol_to_strategy(&cor_cert, &corrected_simplex)?;
    let (neg, exc, subclaims_hold) = literal_subclaims(&game, 200, 5)?;
    Ok(LiteralFormDossier {
        shift: lit_cert.shift_c.clone().expect("shift"),
        game,
        literal_simplex,
        literal_oracle,
        literal_rejection,
        corrected_simplex,
        corrected_oracle,
        corrected_strategy,
        subclaim_samples: (neg, exc),
        subclaims_hold,
    })
}

fn describe(s: &Solution) -> String {
    match (s.point(), s.value()) {
        (Some(p), Some(v)) => format!("value {v} at ({})", join(p)),
        _ => s.status().to_string(),
    }
}

impl fmt::Display for LiteralFormDossier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "game: rock-paper-scissors, N = {}", self.game.size())?;
        for row in self.game.matrix() {
            writeln!(f, "  [{}]", join(row))?;
        }
        writeln!(f, "shift c = {}", self.shift)?;
        writeln!(f)?;
        writeln!(f, "literal form (final pair sum(x)+c-1, -sum(x)-c+1):")?;
        writeln!(f, "  simplex: {}", describe(&self.literal_simplex))?;
        writeln!(f, "  oracle:  {}", describe(&self.literal_oracle))?;
        if let Some(p) = self.literal_simplex.point() {
            let sum = p.iter().fold(Rational::zero(), |a, v| a + v);
            writeln!(f, "  argmin coordinate sum: {sum}")?;
        }
        match &self.literal_rejection {
            Some(e) => writeln!(f, "  pullback: rejected ({e})")?,
            None => writeln!(f, "  pullback: accepted")?,
        }
        writeln!(
            f,
            "  negative-entry / sum>1 points above c: {} ({} and {} samples)",
            if self.subclaims_hold {
                "all"
            } else {
                "NOT all"
            },
            self.subclaim_samples.0,
            self.subclaim_samples.1
        )?;
        writeln!(f)?;
        writeln!(
            f,
            "corrected form (scaled to c = 1, final pair sum(x), 2-sum(x)):"
        )?;
        writeln!(f, "  simplex: {}", describe(&self.corrected_simplex))?;
        writeln!(f, "  oracle:  {}", describe(&self.corrected_oracle))?;
        writeln!(
            f,
            "  strategy: ({})",
            join(self.corrected_strategy.as_slice())
        )?;
        writeln!(f)?;
        writeln!(
            f,
            "discrepancy: {}",
            if self.shows_discrepancy() {
                "confirmed"
            } else {
                "NOT confirmed"
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::int;

    #[test]
    fn size_rows_follow_formulas() {
        let rows = size_table(2..=10, 1, 20).unwrap();
        let last = rows.last().unwrap();
        assert_eq!(
            (last.m, last.linear_functions, last.direct_functions),
            (10, 68, Some(512))
        );
        for r in &rows {
            assert_eq!(r.linear_functions, 6 * r.m + 4 * r.n + 4);
            assert_eq!(r.linear_variables, 3 * r.m + 2 * r.n + 1);
            assert_eq!(r.direct_functions, Some(1 << (r.m - 1)));
        }
        assert_eq!(size_table(3..=3, 1, 2).unwrap()[0].direct_functions, None);
        assert!(format_size_table(&rows).contains("  512\n"));
    }

    #[test]
    fn dossier_on_rock_paper_scissors() {
        let d = literal_form_dossier().unwrap();
        assert_eq!(d.shift, int(1));
        assert_eq!(d.literal_oracle.value(), Some(&rat(3, 4)));
        assert!(d.subclaims_hold);
        assert!(d.shows_discrepancy());
        let text = d.to_string();
        assert!(text.contains("value 3/4 at (1/4, 1/4, 1/4)"));
        assert!(text.contains("discrepancy: confirmed"));
    }
}
