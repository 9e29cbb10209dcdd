use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use skeinlab::algebra::EvalPoint;
use skeinlab_cli::{
    cmd_bracket, cmd_colored_bracket, cmd_recoupling, cmd_report, cmd_verify_paper, cmd_wrt, init_threads,
    parse_colors, parse_mode, parse_sign, parse_window, CliError, Config, Fixture, Source,
};

/// Exact Kauffman-bracket and SO(3) invariant calculator.
#[derive(Parser)]
#[command(name = "skeinlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Level range a..b (inclusive).
    #[arg(long, global = true)]
    window: Option<String>,
    /// exact, float or auto.
    #[arg(long, global = true)]
    mode: Option<String>,
    /// Decimal digits in printed approximations.
    #[arg(long, global = true, default_value_t = 30)]
    precision: u32,
    /// text, csv, md or json.
    #[arg(long, global = true)]
    format: Option<String>,
    #[arg(long, global = true)]
    crossing_cap: Option<usize>,
    #[arg(long, global = true)]
    width_cap: Option<usize>,
    #[arg(long, global = true)]
    jw_cap: Option<usize>,
}

#[derive(Args)]
struct LinkArgs {
    /// Link file in JSON.
    file: Option<PathBuf>,
    #[arg(long, value_enum, conflicts_with = "file")]
    fixture: Option<Fixture>,
}

#[derive(Args)]
struct PointArgs {
    #[arg(long)]
    d: u32,
    /// + or -.
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    sign: String,
}

#[derive(Subcommand)]
enum Command {
    /// Kauffman bracket of a diagram.
    Bracket {
        #[command(flatten)]
        link: LinkArgs,
        /// Cross-check against the exhaustive state sum.
        #[arg(long)]
        oracle: bool,
    },
    /// Colored bracket, generic or at a root of unity.
    ColoredBracket {
        #[command(flatten)]
        link: LinkArgs,
        /// Comma-separated colors, one per component.
        #[arg(long)]
        colors: Option<String>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
    },
    /// Surgery invariant of one presentation at one level.
    Wrt {
        #[command(flatten)]
        link: LinkArgs,
        #[command(flatten)]
        point: PointArgs,
        /// Color of the meridian added to the Borromean fixture.
        #[arg(long, default_value_t = 0)]
        color: u32,
    },
    /// Recoupling data at one level.
    Recoupling {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, default_value_t = 1)]
        color: u32,
    },
    /// Run every check; exit 0 iff all pass.
    VerifyPaper,
    /// Tabulate every quantity over the window.
    Report,
}

fn config(c: &Common) -> Result<Config, CliError> {
    let defaults = Config::default();
    let cfg = Config {
        d_window: c.window.as_deref().map(parse_window).transpose()?,
        precision_digits: c.precision,
        mode: c.mode.as_deref().map(parse_mode).transpose()?,
        crossing_cap: c.crossing_cap.unwrap_or(defaults.crossing_cap),
        width_cap: c.width_cap.unwrap_or(defaults.width_cap),
        jw_cap: c.jw_cap.unwrap_or(defaults.jw_cap),
        output_format: c.format.as_deref().map(str::parse).transpose()?,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn source(link: &LinkArgs) -> Result<Source<'_>, CliError> {
    match (&link.file, link.fixture) {
        (Some(path), _) => Ok(Source::File(path)),
        (None, Some(f)) => Ok(Source::Fixture(f)),
        (None, None) => Err(CliError::Usage("give a link file or --fixture".into())),
    }
}

fn point(p: &PointArgs) -> Result<EvalPoint, CliError> {
    if p.d == 0 {
        return Err(CliError::Usage("--d must be at least 1".into()));
    }
    Ok(EvalPoint::new(p.d, parse_sign(&p.sign)?))
}

/// Output and whether the run passed.
fn run(cli: &Cli) -> Result<(String, bool), CliError> {
    init_threads()?;
    let cfg = config(&cli.common)?;
    match &cli.command {
        Command::Bracket { link, oracle } => Ok((cmd_bracket(&source(link)?, *oracle, &cfg)?, true)),
        Command::ColoredBracket { link, colors, d, sign } => {
            let colors = colors.as_deref().map(parse_colors).transpose()?;
            let p = match d {
                Some(0) => return Err(CliError::Usage("--d must be at least 1".into())),
                Some(d) => Some(EvalPoint::new(*d, parse_sign(sign)?)),
                None => None,
            };
            Ok((cmd_colored_bracket(&source(link)?, colors.as_deref(), p, &cfg)?, true))
        }
        Command::Wrt { link, point: p, color } => Ok((cmd_wrt(&source(link)?, *color, point(p)?, &cfg)?, true)),
        Command::Recoupling { point: p, color } => Ok((cmd_recoupling(point(p)?, *color, &cfg)?, true)),
        Command::VerifyPaper => {
            let report = cmd_verify_paper(&cfg)?;
            Ok((report.to_json(), report.all_pass()))
        }
        Command::Report => cmd_report(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, pass)) => {
            print!("{out}");
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
