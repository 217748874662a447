//! Acceptance gate. Prints one `[PASS]`/`[FAIL]` line per criterion and exits
//! nonzero if any criterion fails or exceeds its time budget.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::One;
use rand::Rng;

use linapprox::generate::{self, InstanceRng};
use linapprox::io::{emit_document, parse_problem};
use linapprox::oracles::{
    enumerate_game_optima, l1_cheb_pointwise_check, verify_strategy_optimal, vertex_enum_solve,
    DEFAULT_LIMIT,
};
use linapprox::reductions::{
    cheb_sol_to_strategy, cheb_to_lp, game_strategy_to_lp_sol, game_to_cheb, l1_to_cheb_direct,
    l1_to_cheb_linear, l1_to_lp, lp_to_standard, standard_sol_pullback, standard_to_game,
    DEFAULT_DIRECT_CAP,
};
use linapprox::report::{cheb_oracle, literal_subclaims, rock_paper_scissors};
use linapprox::solvers::{simplex_solve, solve_chain, solve_cheb, solve_game, solve_l1};
use linapprox::{
    int, AffineFunction, ChebyshevProblem, GameChebVariant, LinearConstraint, LinearProgram,
    Rational, Relation, Sense, Solution, Status, VarSign,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: linapprox::Error) -> String {
    e.to_string()
}

fn size_laws() -> Outcome {
    let mut rng = generate::rng(101);
    let mut checked = 0;
    for m in 1..=10 {
        for n in 1..=5 {
            let p = generate::l1_problem_sized(&mut rng, m, n);
            let cheb = ChebyshevProblem::new(p.functions.clone()).map_err(err)?;
            let (lp, _) = cheb_to_lp(&cheb);
            ensure(
                (lp.num_vars(), lp.constraints.len()) == (n + 1, 2 * m),
                || format!("cheb_to_lp ({m},{n})"),
            )?;
            let (lp, _) = l1_to_lp(&p);
            ensure(
                (lp.num_vars(), lp.constraints.len()) == (m + n, 2 * m),
                || format!("l1_to_lp ({m},{n})"),
            )?;
            let (linear, _) = l1_to_cheb_linear(&p).map_err(err)?;
            ensure(
                (linear.len(), linear.arity()) == (6 * m + 4 * n + 4, 3 * m + 2 * n + 1),
                || {
                    format!(
                        "l1_to_cheb_linear ({m},{n}): {} x {}",
                        linear.len(),
                        linear.arity()
                    )
                },
            )?;
            let direct = l1_to_cheb_direct(&p, DEFAULT_DIRECT_CAP).map_err(err)?;
            ensure(direct.len() == 1 << (m - 1), || format!("direct ({m},{n})"))?;
            checked += 1;
        }
    }
    for size in 2..=10 {
        for variant in [GameChebVariant::Literal, GameChebVariant::Corrected] {
            let g = generate::skew_game(&mut rng, size);
            let (cheb, _) = game_to_cheb(&g, variant).map_err(err)?;
            ensure((cheb.len(), cheb.arity()) == (2 * size + 2, size), || {
                format!("game_to_cheb N={size}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} shapes"))
}

fn corrected_equivalence() -> Outcome {
    let mut rng = generate::rng(202);
    let mut vertices = 0;
    let trials = 200;
    for i in 0..trials {
        let size = 2 + i % 5;
        let g = generate::skew_game(&mut rng, size);
        let (cheb, cert) = game_to_cheb(&g, GameChebVariant::Corrected).map_err(err)?;
        let s = solve_cheb(&cheb);
        ensure(s.value() == Some(&Rational::one()), || {
            format!("game {i} (N={size}): value {:?}", s.value())
        })?;
        let x = cheb_sol_to_strategy(&cert, &s).map_err(err)?;
        ensure(verify_strategy_optimal(&g, &x).map_err(err)?, || {
            format!("game {i}: pulled-back strategy not optimal")
        })?;
        for v in enumerate_game_optima(&g, DEFAULT_LIMIT).map_err(err)? {
            ensure(
                cheb.eval(v.as_slice()).map_err(err)? == Rational::one(),
                || format!("game {i}: optimal vertex off value 1"),
            )?;
            vertices += 1;
        }
    }
    Ok(format!(
        "{trials} games, N in 2..=6, {vertices} optimal vertices"
    ))
}

fn literal_discrepancy() -> Outcome {
    let g = rock_paper_scissors();
    let (literal, cert) = game_to_cheb(&g, GameChebVariant::Literal).map_err(err)?;
    let shift = cert.shift_c.clone().ok_or("no shift recorded")?;
    ensure(shift == int(1), || format!("shift {shift}"))?;
    let oracle = cheb_oracle(&literal).map_err(err)?;
    let simplex = solve_cheb(&literal);
    let value = oracle.value().ok_or("oracle found no optimum")?.clone();
    ensure(value < shift, || {
        format!("oracle value {value} not below c")
    })?;
    ensure(simplex.value() == Some(&value), || {
        "simplex disagrees with oracle".into()
    })?;
    for s in [&oracle, &simplex] {
        let sum = s
            .point()
            .unwrap()
            .iter()
            .fold(Rational::from_integer(0.into()), |a, v| a + v);
        ensure(sum != Rational::one(), || "argmin sums to 1".into())?;
    }
    let (neg, exc, holds) = literal_subclaims(&g, 500, 303).map_err(err)?;
    ensure(holds, || {
        "a negative-entry or sum>1 point scored <= c".into()
    })?;
    Ok(format!(
        "literal value {value} < c = {shift}; sub-claims hold on {neg}+{exc} points"
    ))
}

fn simplex_vs_oracle() -> Outcome {
    let mut rng = generate::rng(404);
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let trials = 150;
    for i in 0..trials {
        let lp = generate::any_lp(&mut rng, 4, 8);
        let fast = simplex_solve(&lp);
        let truth = vertex_enum_solve(&lp, DEFAULT_LIMIT).map_err(err)?;
        ensure(
            fast.status() == truth.status() && fast.value() == truth.value(),
            || {
                format!(
                    "lp {i}: simplex {} vs oracle {}",
                    fast.status(),
                    truth.status()
                )
            },
        )?;
        *counts.entry(truth.status().to_string()).or_default() += 1;
    }
    for status in [Status::Optimal, Status::Infeasible, Status::Unbounded] {
        ensure(counts.contains_key(&status.to_string()), || {
            format!("no {status} instance")
        })?;
    }
    Ok(format!("{trials} LPs, statuses {counts:?}"))
}

fn game_chain(lp: &LinearProgram) -> Result<(Solution, linapprox::MatrixGame), String> {
    let (std, to_std) = lp_to_standard(lp).map_err(err)?;
    let (game, to_game) = standard_to_game(&std);
    let z = solve_game(&game).strategy;
    let s = game_strategy_to_lp_sol(&to_game, &z).map_err(err)?;
    Ok((standard_sol_pullback(&to_std, s).map_err(err)?, game))
}

fn full_chain() -> Outcome {
    let x = AffineFunction::variable(0, 1);
    let unit = LinearProgram::new(
        Sense::Max,
        x.clone(),
        vec![LinearConstraint::new(
            x,
            Relation::Le,
            AffineFunction::constant(int(1), 1),
        )],
        vec![VarSign::Nonneg],
    )
    .map_err(err)?;
    let (s, game) = game_chain(&unit)?;
    ensure(game == rock_paper_scissors(), || {
        "unit LP game is not RPS".into()
    })?;
    ensure(
        s.point() == Some(&[int(1)][..]) && s.value() == Some(&int(1)),
        || format!("unit LP chain gave {s}"),
    )?;
    let mut rng = generate::rng(505);
    let trials = 60;
    for i in 0..trials {
        let lp = generate::feasible_bounded_lp(&mut rng, 3, 4);
        let direct = simplex_solve(&lp);
        ensure(direct.is_optimal(), || format!("lp {i} not optimal"))?;
        let (chain, _) = game_chain(&lp)?;
        ensure(chain.value() == direct.value(), || {
            format!(
                "lp {i}: chain {:?} vs simplex {:?}",
                chain.value(),
                direct.value()
            )
        })?;
    }
    Ok(format!(
        "unit LP via RPS gives x1 = 1, value 1; {trials} LPs agree"
    ))
}

fn l1_pipelines() -> Outcome {
    let mut rng: InstanceRng = generate::rng(606);
    let trials = 60;
    for i in 0..trials {
        let p = generate::l1_problem(&mut rng, 6, 3);
        let reference = solve_l1(&p);
        let direct = solve_cheb(&l1_to_cheb_direct(&p, DEFAULT_DIRECT_CAP).map_err(err)?);
        let (cheb, cert) = l1_to_cheb_linear(&p).map_err(err)?;
        let linear = solve_chain(&cheb, &cert).map_err(err)?;
        ensure(
            reference.is_optimal()
                && direct.value() == reference.value()
                && linear.value() == reference.value(),
            || {
                format!(
                    "instance {i}: lp {:?}, direct {:?}, linear {:?}",
                    reference.value(),
                    direct.value(),
                    linear.value()
                )
            },
        )?;
        ensure(
            l1_cheb_pointwise_check(&p, 100, rng.random()).map_err(err)?,
            || format!("instance {i}: pointwise check failed"),
        )?;
    }
    Ok(format!("{trials} instances, m <= 6, n <= 3"))
}

fn serialization() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut paths: Vec<_> = fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .map(|e| e.map(|e| e.path()).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "json"));
    paths.sort();
    ensure(!paths.is_empty(), || "empty fixture corpus".into())?;
    for path in &paths {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let bytes = fs::read(path).map_err(|e| e.to_string())?;
        let doc = parse_problem(&bytes).map_err(|e| format!("{name}: {e}"))?;
        let text = emit_document(&doc);
        ensure(text.as_bytes() == bytes, || {
            format!("{name}: not canonical")
        })?;
        let again = parse_problem(text.as_bytes()).map_err(|e| format!("{name}: {e}"))?;
        ensure(again == doc && emit_document(&again) == text, || {
            format!("{name}: round trip")
        })?;
    }
    Ok(format!("{} fixtures", paths.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("size laws", 5, size_laws),
        (
            "corrected game/Chebyshev equivalence",
            120,
            corrected_equivalence,
        ),
        ("literal form discrepancy on RPS", 10, literal_discrepancy),
        (
            "simplex agrees with vertex enumeration",
            120,
            simplex_vs_oracle,
        ),
        ("LP through symmetric game", 60, full_chain),
        ("L1 pipelines agree", 180, l1_pipelines),
        ("serialization round trip", 5, serialization),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let (mark, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {budget}s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        failed += usize::from(mark == "FAIL");
        println!(
            "[{mark}] criterion {}: {name} ({:.2}s) {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
