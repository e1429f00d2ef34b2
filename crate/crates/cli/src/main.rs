//! `fsclass`: indicators and real/complex/quaternionic classification of
//! finite-dimensional *-algebras and *-coalgebras from JSON inputs.

mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fsclass::corep::{CoalgebraAnalysis, CqgAnalysis};
use fsclass::indicator::Analysis;
use fsclass::instance::{Instance, Kind};
use fsclass::{Error, Tolerance};
use log::info;
use serde::Serialize;

use render::{Duality, DualityRow, Format, Rendered};

#[derive(Parser)]
#[command(name = "fsclass", version, about = "Frobenius-Schur indicators and real/complex/quaternionic classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report which axioms and invariants hold.
    Verify(RunArgs),
    /// Irreducible representations: dimensions, multiplicities, characters.
    Irreps(RunArgs),
    /// Full indicator report (CSV unless --format is given).
    Indicators(RunArgs),
    /// Labels with real-basis or quaternion-map witnesses.
    Classify(RunArgs),
    /// Cross-check algebra and coalgebra indicators.
    Duality(RunArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Algebra,
    Group,
    Scheme,
    Groupoid,
    Double,
    Coalgebra,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Algebra => Kind::Algebra,
            KindArg::Group => Kind::Group,
            KindArg::Scheme => Kind::Scheme,
            KindArg::Groupoid => Kind::Groupoid,
            KindArg::Double => Kind::Double,
            KindArg::Coalgebra => Kind::Coalgebra,
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// JSON input file.
    input: PathBuf,
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Singular-value cutoff for rank decisions.
    #[arg(long)]
    tol_rank: Option<f64>,
    /// Rounding band for indicator values.
    #[arg(long)]
    tol_round: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Exit status plus the machine-readable error printed on stderr.
struct Failure {
    exit: u8,
    code: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = if matches!(e, Error::AgreementFailure { .. }) { 3 } else { 2 };
        Failure { exit, code: e.code().to_string(), message: e.to_string() }
    }
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    code: &'a str,
    message: &'a str,
}

impl RunArgs {
    fn tolerance(&self) -> Result<Tolerance, Error> {
        let d = Tolerance::default();
        Tolerance::new(self.tol_rank.unwrap_or(d.eps_rank), d.eps_eig, self.tol_round.unwrap_or(d.eps_round))
    }

    fn instance(&self, tol: &Tolerance) -> Result<Instance, Error> {
        let text = fs::read_to_string(&self.input)?;
        Instance::parse(self.kind.into(), &text, tol)
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("FSCLASS_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| Failure {
        exit: 2,
        code: "BadEnvironment".into(),
        message: format!("FSCLASS_THREADS={v:?} is not a positive integer"),
    })?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure {
        exit: 2,
        code: "BadEnvironment".into(),
        message: e.to_string(),
    })
}

fn duality(inst: &Instance, seed: u64, tol: &Tolerance) -> Result<Duality, Error> {
    let (co, vs) = inst.coalgebra(tol)?;
    let an = CoalgebraAnalysis::new(&co, &vs, seed, tol)?;
    let mut rows = Vec::new();
    for i in 0..an.coreps().len() {
        let rep = an.algebra_report(i, tol)?;
        let coalgebra_nu = an.corep_indicator(i, tol)?;
        let agree = (coalgebra_nu - rep.nu_formula).abs() < tol.eps_round;
        info!("corepresentation #{i}: algebra {:.6} coalgebra {:.6}", rep.nu_formula, coalgebra_nu);
        rows.push(DualityRow { index: i, dim: rep.dim, algebra_nu: rep.nu_formula, coalgebra_nu, agree });
    }
    let cqg = match inst.hopf() {
        Some(h) if h.is_hopf(tol) => {
            let cq = CqgAnalysis::new(h, seed, tol)?;
            let mut out = Vec::new();
            for i in 0..cq.coalgebra.coreps().len() {
                let sigma = cq.coalgebra.algebra_report(i, tol)?.sigma;
                let nu = cq.cqg_indicator(i, tol)?;
                out.push(DualityRow {
                    index: i,
                    dim: cq.coalgebra.coreps()[i].dim(),
                    algebra_nu: sigma as f64,
                    coalgebra_nu: nu,
                    agree: (nu - sigma as f64).abs() < tol.eps_round,
                });
            }
            Some(out)
        }
        _ => None,
    };
    Ok(Duality { rows, cqg })
}

fn run(command: &Command) -> Result<(Rendered, Option<Failure>), Failure> {
    let (args, default_format) = match command {
        Command::Indicators(a) => (a, Format::Csv),
        Command::Verify(a) | Command::Irreps(a) | Command::Classify(a) | Command::Duality(a) => (a, Format::Text),
    };
    let format = args.format.unwrap_or(default_format);
    let tol = args.tolerance()?;
    let inst = args.instance(&tol)?;
    info!("loaded {}", args.input.display());
    let analysis = || -> Result<Analysis, Error> {
        let (alg, s) = inst.algebra(&tol)?;
        Analysis::new(&alg, &s, args.seed, &tol)
    };
    let out = match command {
        Command::Verify(_) => {
            let checks = inst.verify(args.seed, &tol)?;
            let failed: Vec<&str> = checks.iter().filter(|c| !c.holds).map(|c| c.name).collect();
            let failure = (!failed.is_empty()).then(|| Failure {
                exit: 2,
                code: "VerificationFailed".into(),
                message: format!("checks failed: {}", failed.join(", ")),
            });
            return Ok((render::verify(&checks, format), failure));
        }
        Command::Irreps(_) => render::irreps(&analysis()?, format),
        Command::Indicators(_) => render::indicators(&analysis()?.report(&tol)?, format),
        Command::Classify(_) => render::classify(&analysis()?.report(&tol)?, format),
        Command::Duality(_) => {
            let d = duality(&inst, args.seed, &tol)?;
            let failure = (!d.all_agree()).then(|| Failure {
                exit: 3,
                code: "AgreementFailure".into(),
                message: format!("algebra/coalgebra indicators disagree on {} of {}", d.disagreements(), d.total()),
            });
            return Ok((render::duality(&d, format), failure));
        }
    };
    Ok((out, None))
}

fn emit(output: Option<&PathBuf>, text: &str) -> std::io::Result<()> {
    match output {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn report_failure(f: &Failure) -> ExitCode {
    let json = serde_json::to_string(&ErrorJson { code: &f.code, message: &f.message }).expect("plain strings");
    eprintln!("{json}");
    ExitCode::from(f.exit)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Err(f) = configure_threads() {
        return report_failure(&f);
    }
    let output = match &cli.command {
        Command::Verify(a)
        | Command::Irreps(a)
        | Command::Indicators(a)
        | Command::Classify(a)
        | Command::Duality(a) => a.output.clone(),
    };
    match run(&cli.command) {
        Ok((rendered, failure)) => {
            let text = match rendered {
                Ok(t) => t,
                Err(f) => return report_failure(&f),
            };
            if let Err(e) = emit(output.as_ref(), &text) {
                return report_failure(&Error::Io(e).into());
            }
            match failure {
                Some(f) => report_failure(&f),
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => report_failure(&f),
    }
}
