//! Seeded randomized cross-checks between solvers, reductions and oracles.
//!
//! Each suite draws its instances from its own stream derived from the seed,
//! so a given `(seed, trials, max_size)` always checks the same instances.

use std::fmt;

use num_traits::One;

use crate::generate::{self, InstanceRng};
use crate::io::{emit_document, parse_problem, Document, Problem};
use crate::model::Status;
use crate::oracles::{
    enumerate_game_optima, l1_cheb_pointwise_check, verify_strategy_optimal, vertex_enum_solve,
    DEFAULT_LIMIT,
};
use crate::reductions::{
    cheb_sol_to_strategy, cheb_to_lp, game_to_cheb, l1_to_cheb_direct, l1_to_cheb_linear, l1_to_lp,
    GameChebVariant, DEFAULT_DIRECT_CAP,
};
use crate::solvers::{simplex_solve, solve_chain, solve_cheb, solve_l1, solve_lp_via_game};

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] {}: {} instances", self.name, self.checked)?;
        for failure in &self.failures {
            write!(f, "\n    {failure}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    /// Largest game size, and the scale for LP and L1 instance sizes.
    pub max_size: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 20,
            max_size: 5,
        }
    }
}

type Check = fn(&mut InstanceRng, &VerifyConfig) -> Result<(), String>;

fn run(name: &'static str, stream: u64, cfg: &VerifyConfig, check: Check) -> SuiteReport {
    let mut rng = generate::rng(cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ stream);
    let failures = (0..cfg.trials)
        .filter_map(|i| {
            check(&mut rng, cfg)
                .err()
                .map(|e| format!("trial {i}: {e}"))
        })
        .collect();
    SuiteReport {
        name,
        checked: cfg.trials,
        failures,
    }
}

fn size_laws(rng: &mut InstanceRng, cfg: &VerifyConfig) -> Result<(), String> {
    use rand::Rng;
    let m = rng.random_range(1..=cfg.max_size.max(1) * 2);
    let n = rng.random_range(1..=cfg.max_size.max(1));
    let p = generate::l1_problem_sized(rng, m, n);
    let cheb = crate::model::ChebyshevProblem::new(p.functions.clone()).expect("same functions");
    let sizes = [
        (
            "cheb_to_lp",
            cheb_to_lp(&cheb).1.target_dims,
            (n + 1, 2 * m),
        ),
        ("l1_to_lp", l1_to_lp(&p).1.target_dims, (m + n, 2 * m)),
        (
            "l1_to_cheb_linear",
            l1_to_cheb_linear(&p)
                .map_err(|e| e.to_string())?
                .1
                .target_dims,
            (3 * m + 2 * n + 1, 6 * m + 4 * n + 4),
        ),
    ];
    for (name, dims, (vars, size)) in sizes {
        if (dims.variables, dims.size) != (vars, size) {
            return Err(format!("{name} on (m={m}, n={n}): got {dims:?}"));
        }
    }
    let direct = l1_to_cheb_direct(&p, DEFAULT_DIRECT_CAP).map_err(|e| e.to_string())?;
    if direct.len() != 1 << (m - 1) {
        return Err(format!("direct on m={m}: {} functions", direct.len()));
    }
    Ok(())
}

fn game_equivalence(rng: &mut InstanceRng, cfg: &VerifyConfig) -> Result<(), String> {
    use rand::Rng;
    let size = rng.random_range(2..=cfg.max_size.clamp(2, 6));
    let g = generate::skew_game(rng, size);
    let (cheb, cert) = game_to_cheb(&g, GameChebVariant::Corrected).map_err(|e| e.to_string())?;
    let s = solve_cheb(&cheb);
    if s.value() != Some(&crate::model::Rational::one()) {
        return Err(format!("N={size}: Chebyshev value {:?}", s.value()));
    }
    let strategy = cheb_sol_to_strategy(&cert, &s).map_err(|e| e.to_string())?;
    if !verify_strategy_optimal(&g, &strategy).map_err(|e| e.to_string())? {
        return Err(format!("N={size}: pulled-back strategy is not optimal"));
    }
    for v in enumerate_game_optima(&g, DEFAULT_LIMIT).map_err(|e| e.to_string())? {
        if cheb.eval(v.as_slice()).map_err(|e| e.to_string())? != crate::model::Rational::one() {
            return Err(format!("N={size}: optimal vertex off the unit level"));
        }
    }
    Ok(())
}

fn simplex_vs_oracle(rng: &mut InstanceRng, _: &VerifyConfig) -> Result<(), String> {
    let lp = generate::any_lp(rng, 4, 8);
    let fast = simplex_solve(&lp);
    let truth = vertex_enum_solve(&lp, DEFAULT_LIMIT).map_err(|e| e.to_string())?;
    if fast.status() != truth.status() || fast.value() != truth.value() {
        return Err(format!(
            "simplex {} {:?} vs oracle {} {:?}",
            fast.status(),
            fast.value(),
            truth.status(),
            truth.value()
        ));
    }
    Ok(())
}

fn lp_game_chain(rng: &mut InstanceRng, _: &VerifyConfig) -> Result<(), String> {
    let lp = generate::feasible_bounded_lp(rng, 3, 4);
    let direct = simplex_solve(&lp);
    let via = solve_lp_via_game(&lp).map_err(|e| e.to_string())?;
    if direct.status() != Status::Optimal || via.value() != direct.value() {
        return Err(format!(
            "game route {:?} vs simplex {:?}",
            via.value(),
            direct.value()
        ));
    }
    Ok(())
}

fn l1_pipelines(rng: &mut InstanceRng, cfg: &VerifyConfig) -> Result<(), String> {
    use rand::Rng;
    let p = generate::l1_problem(rng, cfg.max_size.clamp(1, 6), 3);
    let reference = solve_l1(&p);
    let direct = solve_cheb(&l1_to_cheb_direct(&p, DEFAULT_DIRECT_CAP).map_err(|e| e.to_string())?);
    let (cheb, cert) = l1_to_cheb_linear(&p).map_err(|e| e.to_string())?;
    let linear = solve_chain(&cheb, &cert).map_err(|e| e.to_string())?;
    if direct.value() != reference.value() || linear.value() != reference.value() {
        return Err(format!(
            "values differ: lp {:?}, direct {:?}, linear {:?}",
            reference.value(),
            direct.value(),
            linear.value()
        ));
    }
    let seed = rng.random();
    if !l1_cheb_pointwise_check(&p, 100, seed).map_err(|e| e.to_string())? {
        return Err("pointwise identity failed".into());
    }
    Ok(())
}

fn serialization(rng: &mut InstanceRng, cfg: &VerifyConfig) -> Result<(), String> {
    let p = generate::l1_problem(rng, cfg.max_size.clamp(1, 6), 3);
    let (cheb, cert) = l1_to_cheb_linear(&p).map_err(|e| e.to_string())?;
    let lp = generate::any_lp(rng, 4, 8);
    let game = generate::skew_game(rng, cfg.max_size.clamp(2, 6));
    let docs = [
        Document::new(Problem::L1(p)),
        Document::with_certificate(Problem::Cheb(cheb), cert),
        Document::new(Problem::Lp(lp)),
        Document::new(Problem::Game(game)),
    ];
    for doc in docs {
        let text = emit_document(&doc);
        let back = parse_problem(text.as_bytes()).map_err(|e| e.to_string())?;
        if back != doc || emit_document(&back) != text {
            return Err(format!(
                "{} document did not round-trip",
                doc.problem.form()
            ));
        }
    }
    Ok(())
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    vec![
        run("size laws", 1, cfg, size_laws),
        run(
            "corrected game/Chebyshev equivalence",
            2,
            cfg,
            game_equivalence,
        ),
        run("simplex vs vertex enumeration", 3, cfg, simplex_vs_oracle),
        run("LP through symmetric game", 4, cfg, lp_game_chain),
        run("L1 pipelines agree", 5, cfg, l1_pipelines),
        run("serialization round trip", 6, cfg, serialization),
    ]
}
