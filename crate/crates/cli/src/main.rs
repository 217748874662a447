use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use linapprox::io::{emit_problem, parse_problem, Document, Problem};
use linapprox::model::join;
use linapprox::reductions::{
    cheb_to_lp, game_to_cheb, l1_to_cheb_direct, l1_to_cheb_linear, l1_to_lp, lp_to_cheb_linear,
    lp_to_standard, standard_to_game, DEFAULT_DIRECT_CAP,
};
use linapprox::simplex::{solve_standard, StandardOutcome};
use linapprox::solvers::{simplex_solve, solve_chain, solve_cheb, solve_game, solve_l1};
use linapprox::verify::{run_all, VerifyConfig};
use linapprox::{report, GameChebVariant, ReductionCertificate, ReductionKind, Solution};

/// Exact reductions between LPs, symmetric games and Chebyshev / L1
/// approximation problems.
#[derive(Parser)]
#[command(name = "linapprox", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a problem to another form and write it with its certificate.
    Convert(ConvertArgs),
    /// Solve a problem exactly and print status, point and value.
    Solve(SolveArgs),
    /// Run seeded randomized cross-checks.
    Verify(VerifyArgs),
    /// Print L1-to-Chebyshev reduction sizes.
    Bench(BenchArgs),
    /// Print a counterexample dossier.
    Counterexample {
        #[arg(value_enum)]
        which: Counterexample,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Form {
    Lp,
    Standard,
    Game,
    Cheb,
    L1,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Linear,
    Direct,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Literal,
    Corrected,
}

impl From<Variant> for GameChebVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Literal => GameChebVariant::Literal,
            Variant::Corrected => GameChebVariant::Corrected,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Counterexample {
    #[value(name = "literal-form", alias = "eq5")]
    LiteralForm,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long, value_enum)]
    from: Form,
    #[arg(long, value_enum)]
    to: Form,
    #[arg(long, value_enum, default_value = "linear")]
    method: Method,
    #[arg(long, value_enum, default_value = "corrected")]
    variant: Variant,
    /// Largest `m` accepted by the direct method.
    #[arg(long, default_value_t = DEFAULT_DIRECT_CAP)]
    cap: usize,
    /// Input file; stdin when omitted.
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(short, long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..=6))]
    max_size: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// Range of `m`, e.g. `2..10` (inclusive).
    #[arg(long, value_parser = parse_range, default_value = "2..10")]
    m: (usize, usize),
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = DEFAULT_DIRECT_CAP)]
    cap: usize,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = lo.parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: usize = hi.parse().map_err(|e| format!("bad upper bound: {e}"))?;
    if lo == 0 || lo > hi {
        return Err(format!("need 1 <= lo <= hi, got {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// Failure categories mapped to exit codes.
enum Failure {
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn read_document(path: Option<&PathBuf>) -> Result<Document, Failure> {
    let bytes = match path {
        Some(p) => fs::read(p)
            .with_context(|| format!("reading {}", p.display()))
            .map_err(usage)?,
        None => {
            let mut buf = Vec::new();
            io::stdin()
                .read_to_end(&mut buf)
                .context("reading stdin")
                .map_err(usage)?;
            buf
        }
    };
    parse_problem(&bytes)
        .map_err(|e| usage(anyhow::Error::new(e).context("invalid input document")))
}

fn form_of(p: &Problem) -> Form {
    match p {
        Problem::Lp(_) => Form::Lp,
        Problem::Standard(_) => Form::Standard,
        Problem::Game(_) => Form::Game,
        Problem::Cheb(_) => Form::Cheb,
        Problem::L1(_) => Form::L1,
    }
}

fn summary(p: &Problem) -> String {
    let (vars, size) = p.dims();
    match p {
        Problem::Cheb(_) | Problem::L1(_) => format!("{size} functions, {vars} variables"),
        Problem::Game(_) => format!("{size}x{size} game"),
        Problem::Lp(_) | Problem::Standard(_) => format!("{size} constraints, {vars} variables"),
    }
}

fn convert(args: &ConvertArgs) -> Result<(), Failure> {
    let doc = read_document(args.input.as_ref())?;
    if form_of(&doc.problem) != args.from {
        return Err(usage(anyhow::anyhow!(
            "input form is {}, not the one given by --from",
            doc.problem.form()
        )));
    }
    let (target, cert): (Problem, Option<ReductionCertificate>) = match (&doc.problem, args.to) {
        (Problem::Cheb(p), Form::Lp) => {
            let (lp, c) = cheb_to_lp(p);
            (Problem::Lp(lp), Some(c))
        }
        (Problem::L1(p), Form::Lp) => {
            let (lp, c) = l1_to_lp(p);
            (Problem::Lp(lp), Some(c))
        }
        (Problem::Lp(p), Form::Standard) => {
            let (s, c) = lp_to_standard(p).map_err(anyhow::Error::new)?;
            (Problem::Standard(s), Some(c))
        }
        (Problem::Standard(p), Form::Game) => {
            let (g, c) = standard_to_game(p);
            (Problem::Game(g), Some(c))
        }
        (Problem::Game(g), Form::Cheb) => {
            let (p, c) = game_to_cheb(g, args.variant.into()).map_err(anyhow::Error::new)?;
            (Problem::Cheb(p), Some(c))
        }
        (Problem::Lp(lp), Form::Cheb) => {
            let (p, c) = lp_to_cheb_linear(lp, args.variant.into()).map_err(anyhow::Error::new)?;
            (Problem::Cheb(p), Some(c))
        }
        (Problem::L1(p), Form::Cheb) => match args.method {
            Method::Linear => {
                let (q, c) = l1_to_cheb_linear(p).map_err(anyhow::Error::new)?;
                (Problem::Cheb(q), Some(c))
            }
            Method::Direct => {
                let q = l1_to_cheb_direct(p, args.cap).map_err(usage)?;
                (Problem::Cheb(q), None)
            }
        },
        (p, _) => {
            return Err(usage(anyhow::anyhow!(
                "no reduction from {} to the requested form",
                p.form()
            )))
        }
    };
    let text = emit_problem(&target, cert.as_ref());
    match &args.output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("writing stdout")?,
    }
    eprintln!("{}", summary(&target));
    Ok(())
}

fn chain_kind(cert: &ReductionCertificate) -> bool {
    matches!(
        cert.kind,
        ReductionKind::LpToChebLinear | ReductionKind::L1ToChebLinear
    )
}

fn solve(args: &SolveArgs) -> Result<(), Failure> {
    let doc = read_document(args.input.as_ref())?;
    let out = match &doc.problem {
        Problem::Lp(p) => simplex_solve(p).to_string(),
        Problem::L1(p) => solve_l1(p).to_string(),
        Problem::Standard(p) => match solve_standard(p) {
            StandardOutcome::Optimal { point, value } => {
                Solution::optimal(point, value).to_string()
            }
            StandardOutcome::Infeasible => Solution::infeasible().to_string(),
            StandardOutcome::Unbounded => Solution::unbounded().to_string(),
        },
        Problem::Game(g) => {
            let s = solve_game(g);
            format!(
                "strategy: ({})\nt_max: {}\n",
                join(s.strategy.as_slice()),
                s.t_max
            )
        }
        Problem::Cheb(p) => match doc.certificate.as_ref().filter(|c| chain_kind(c)) {
            Some(cert) => {
                let source = solve_chain(p, cert).map_err(anyhow::Error::new)?;
                format!("source problem:\n{source}")
            }
            None => solve_cheb(p).to_string(),
        },
    };
    print!("{out}");
    if !out.ends_with('\n') {
        println!();
    }
    Ok(())
}

/// `Ok(false)` when some suite failed.
fn verify(args: &VerifyArgs) -> bool {
    let cfg = VerifyConfig {
        seed: args.seed,
        trials: args.trials,
        max_size: args.max_size as usize,
    };
    let reports = run_all(&cfg);
    for r in &reports {
        println!("{r}");
    }
    reports.iter().all(|r| r.passed())
}

fn bench(args: &BenchArgs) -> Result<(), Failure> {
    if args.n == 0 {
        return Err(usage(anyhow::anyhow!("--n must be at least 1")));
    }
    let rows =
        report::size_table(args.m.0..=args.m.1, args.n, args.cap).map_err(anyhow::Error::new)?;
    print!("{}", report::format_size_table(&rows));
    Ok(())
}

fn counterexample(which: Counterexample) -> Result<bool, Failure> {
    match which {
        Counterexample::LiteralForm => {
            let d = report::literal_form_dossier().map_err(anyhow::Error::new)?;
            print!("{d}");
            Ok(d.shows_discrepancy())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Convert(a) => convert(&a).map(|()| true),
        Command::Solve(a) => solve(&a).map(|()| true),
        Command::Verify(a) => Ok(verify(&a)),
        Command::Bench(a) => bench(&a).map(|()| true),
        Command::Counterexample { which } => counterexample(which),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
