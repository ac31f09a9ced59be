use std::process::ExitCode;

use clap::Parser;
use superflag::cases::{render, run_many, verify_all, CaseRequest, Format, ReductionMode};
use superflag::roots::{Algebra, DiagramId, ParabolicId};

/// Prolongation of parabolic symbols for G(3) and F(4).
///
/// Without --algebra every identification class of both algebras is run.
#[derive(Parser, Debug)]
#[command(version)]
struct Args {
    /// g3 or f4
    #[arg(long)]
    algebra: Option<Algebra>,
    /// Dynkin diagram, I..VI
    #[arg(long, requires = "algebra")]
    diagram: Option<String>,
    /// crossed nodes, e.g. 1,3
    #[arg(long, requires = "diagram")]
    parabolic: Option<String>,
    #[arg(long, default_value = "auto")]
    reduce: ReductionMode,
    /// highest level to compute
    #[arg(long)]
    threshold: Option<usize>,
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,
    /// worker threads, default one per core
    #[arg(long)]
    jobs: Option<usize>,
}

fn run(args: Args) -> superflag::Result<bool> {
    let format: Format = args.format.parse()?;
    let Some(a) = args.algebra else {
        let s = verify_all(&Algebra::ALL, args.jobs)?;
        print!("{}", s.render(format)?);
        return Ok(s.passed());
    };
    let parabolics = match (&args.diagram, &args.parabolic) {
        (Some(d), Some(c)) => vec![ParabolicId::parse(a, d, c)?],
        (Some(d), None) => DiagramId::parse(a, d)?.parabolics(),
        _ => {
            if args.reduce == ReductionMode::Auto && args.threshold.is_none() {
                let s = verify_all(&[a], args.jobs)?;
                print!("{}", s.render(format)?);
                return Ok(s.passed());
            }
            a.parabolics()
        }
    };
    let reqs: Vec<CaseRequest> = parabolics
        .into_iter()
        .map(|parabolic| CaseRequest { parabolic, reduce: args.reduce, threshold: args.threshold })
        .collect();
    let reports = run_many(&reqs, args.jobs)?;
    print!("{}", render(&reports, format, None)?);
    Ok(reports.iter().all(|r| r.passed()))
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
