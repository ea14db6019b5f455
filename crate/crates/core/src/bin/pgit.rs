use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use principal_git::chambers::{
    enumerate_git_classes, quotient_cone_report, DEFAULT_CHAMBER_RANK_GUARD,
};
use principal_git::multiplicity::DEFAULT_KMAX;
use principal_git::report::{self, render, Format};
use principal_git::selftest::{self, DEFAULT_CASES, DEFAULT_SEED};
use principal_git::{
    CartanType, Error, FlagVariety, PrincipalElement, RootSystem, Weight, DEFAULT_WEYL_GUARD,
};

/// GIT classification of flag varieties under the principal SL2.
#[derive(Parser)]
#[command(name = "pgit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format: json, tsv or table.
    #[arg(long, global = true)]
    format: Option<Format>,

    /// Largest Weyl group order that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_WEYL_GUARD, value_parser = positive_u128)]
    guard_weyl: u128,

    /// Largest rank for chamber enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_CHAMBER_RANK_GUARD, value_parser = positive_usize)]
    guard_rank: usize,
}

#[derive(Args)]
struct TypeArg {
    /// Cartan type, e.g. `C2` or `A3xG2`.
    cartan_type: CartanType,
}

#[derive(Args)]
struct WeightArgs {
    #[command(flatten)]
    ty: TypeArg,

    /// Weight in fundamental-weight coordinates, e.g. `3,1`.
    #[arg(long, allow_hyphen_values = true)]
    weight: Weight,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, dim X, |W|, iota, m(g) and the orbit census.
    Info(TypeArg),
    /// Kirwan strata of the unstable locus.
    Strata(WeightArgs),
    /// Strata, movability and GIT class of a weight.
    Classify(WeightArgs),
    /// All GIT classes, chambers and walls.
    Chambers(TypeArg),
    /// Invariant dimension of one module, or along a ray.
    Mult {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "ray",
            required_unless_present = "ray"
        )]
        weight: Option<Weight>,
        #[arg(long, allow_hyphen_values = true)]
        ray: Option<Weight>,
        #[arg(long, default_value_t = DEFAULT_KMAX, requires = "ray")]
        kmax: u32,
    },
    /// Nef and effective cones of the quotient of a chamber.
    Cones {
        #[command(flatten)]
        ty: TypeArg,
        /// One-based class position as listed by `chambers`, or a signature.
        chamber: String,
    },
    /// Counts of one- and two-dimensional orbits.
    Census(TypeArg),
    /// Seeded property sweep.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_CASES)]
        cases: usize,
    },
}

fn positive_u128(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("guard must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_usize(s: &str) -> Result<usize, String> {
    positive_u128(s).map(|v| v as usize)
}

fn flag(cli: &Cli, ty: &TypeArg) -> Result<FlagVariety, Error> {
    FlagVariety::with_guard(ty.cartan_type.clone(), cli.guard_weyl)
}

fn run(cli: &Cli) -> Result<(String, bool), Error> {
    let fmt = cli.format.unwrap_or_default();
    let out = match &cli.command {
        Command::Info(t) => render(&report::info(&t.cartan_type)?, fmt),
        Command::Strata(a) => {
            let fv = flag(cli, &a.ty)?;
            render(&principal_git::git::strata(&fv, &a.weight)?, fmt)
        }
        Command::Classify(a) => {
            let fv = flag(cli, &a.ty)?;
            render(&report::classify(&fv, &a.weight)?, fmt)
        }
        Command::Chambers(t) => {
            let fv = flag(cli, t)?;
            render(&report::chambers(&fv, cli.guard_rank)?, fmt)
        }
        Command::Mult {
            ty,
            weight,
            ray,
            kmax,
        } => {
            let rs = RootSystem::new(ty.cartan_type.clone())?;
            let pe = PrincipalElement::new(&rs)?;
            match (weight, ray) {
                (Some(w), _) => render(&report::mult(&rs, &pe, w)?, fmt),
                (None, Some(r)) => {
                    let fmt = cli.format.unwrap_or(Format::Table);
                    render(&report::ray(&rs, &pe, r, *kmax)?, fmt)
                }
                (None, None) => unreachable!("clap requires --weight or --ray"),
            }
        }
        Command::Cones { ty, chamber } => {
            let fv = flag(cli, ty)?;
            let e = enumerate_git_classes(&fv, cli.guard_rank)?;
            let class = report::select_class(&e, chamber)?;
            render(&quotient_cone_report(&fv, class)?, fmt)
        }
        Command::Census(t) => render(&report::census(&t.cartan_type)?, fmt),
        Command::Selftest { seed, cases } => {
            let r = selftest::run(*seed, *cases)?;
            return Ok((render(&r, fmt), r.passed));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("pgit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
