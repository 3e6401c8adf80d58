use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use polycone::classify::{ClassifyOptions, DEFAULT_CLASSIFY_MAX_N, EXTENDED_CLASSIFY_MAX_N};
use polycone::cli::{self, ExitStatus, RunReport, Target};
use polycone::cyclic::DEFAULT_VERIFY_MAX_N;
use polycone::gorenstein::DegreeCap;
use polycone::{Error, Presentation};

#[derive(Parser)]
#[command(name = "polycone", version, about = "Cones of transversal polymatroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TargetArgs {
    /// Use the cyclic presentation {1,2},{2,3},…,{n,1}.
    #[arg(long, value_name = "N", conflicts_with = "presentation")]
    cyclic: Option<usize>,
    /// Presentation such as "n=4; {1,2},{2,3},{3,4},{4,1}".
    presentation: Option<String>,
}

#[derive(Args)]
struct Output {
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the base and check the exchange axiom.
    Bases {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Facets, span equations and extreme rays of the base cone.
    Facets {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Closed-form facet normals of the cyclic presentation.
    Predict {
        #[arg(long, value_name = "N")]
        cyclic: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Compare closed-form and computed facets for the cyclic presentation.
    Verify {
        #[arg(long, value_name = "N")]
        cyclic: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Hilbert series, canonical generators and Gorenstein verdict.
    Gorenstein {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_name = "K")]
        degree_cap: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// h-vector of the Hilbert series.
    Hilbert {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_name = "K")]
        degree_cap: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Gorenstein classes of all presentations over [N] up to symmetry.
    Classify {
        /// Ground-set size.
        n: usize,
        #[arg(long, default_value_t = 1)]
        m_min: usize,
        /// Defaults to N.
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long, value_name = "K")]
        degree_cap: Option<usize>,
        /// Allow N = 5.
        #[arg(long)]
        allow_n5: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Write the base as a Normaliz input file.
    EmitNormaliz {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        out: Output,
    },
}

fn target(args: &TargetArgs) -> Result<Target, Error> {
    match (&args.cyclic, &args.presentation) {
        (Some(n), None) => Ok(Target::Cyclic(*n)),
        (None, Some(s)) => Ok(Target::Presentation(s.parse::<Presentation>()?)),
        _ => Err(Error::Parse(
            "give either --cyclic N or a presentation string".into(),
        )),
    }
}

fn run(command: &Command) -> Result<(RunReport, bool), Error> {
    Ok(match command {
        Command::Bases { target: t, out } => (cli::cmd_bases(&target(t)?)?, out.json),
        Command::Facets { target: t, out } => (cli::cmd_facets(&target(t)?)?, out.json),
        Command::Predict { cyclic, out } => (cli::cmd_predict(*cyclic)?, out.json),
        Command::Verify { cyclic, out } => {
            let max_n = cli::budget_from_env(DEFAULT_VERIFY_MAX_N);
            (cli::cmd_verify(*cyclic, max_n)?, out.json)
        }
        Command::Gorenstein {
            target: t,
            degree_cap,
            out,
        } => (
            cli::cmd_gorenstein(&target(t)?, DegreeCap::from(*degree_cap))?,
            out.json,
        ),
        Command::Hilbert {
            target: t,
            degree_cap,
            out,
        } => (
            cli::cmd_hilbert(&target(t)?, DegreeCap::from(*degree_cap))?,
            out.json,
        ),
        Command::Classify {
            n,
            m_min,
            m_max,
            degree_cap,
            allow_n5,
            out,
        } => {
            let default_max = if *allow_n5 {
                EXTENDED_CLASSIFY_MAX_N
            } else {
                DEFAULT_CLASSIFY_MAX_N
            };
            let mut opts = ClassifyOptions::new(*n).with_m_range(*m_min, m_max.unwrap_or(*n));
            opts.degree_cap = DegreeCap::from(*degree_cap);
            opts.max_n = cli::budget_from_env(default_max);
            (cli::cmd_classify(&opts)?, out.json)
        }
        Command::EmitNormaliz { target: t, out } => {
            (cli::cmd_emit_normaliz(&target(t)?)?, out.json)
        }
    })
}

fn main() -> ExitCode {
    let parsed = Cli::parse();
    match run(&parsed.command) {
        Ok((report, json)) => {
            if json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_status().code() as u8)
        }
        Err(e) => {
            eprintln!("polycone: {e}");
            ExitCode::from(ExitStatus::for_error(&e).code() as u8)
        }
    }
}
