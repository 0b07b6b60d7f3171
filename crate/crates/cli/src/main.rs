mod render;
mod svg;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use morse_core::polycore::{parse_rational, Rational};

#[derive(Parser)]
#[command(name = "morse-snakes", version, about = "Passports of real Morse polynomials")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Width to which critical value enclosures are refined.
    #[arg(long, global = true, default_value = "1e-12", value_parser = rational)]
    pub prec: Rational,
    /// Grid resolution per axis for scans and curve tracing.
    #[arg(long, global = true, default_value_t = 256)]
    pub resolution: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// List proper alternating permutations of an order, or count them.
    Paps {
        #[arg(long)]
        order: usize,
        /// Only passports starting with this entry.
        #[arg(long)]
        level: Option<usize>,
        #[arg(long)]
        count: bool,
    },
    /// Rows of the Euler-Bernoulli triangle.
    Triangle {
        #[arg(long, default_value_t = 5)]
        rows: usize,
    },
    /// Passport of a polynomial.
    Passport {
        /// Critical points `0 = x0 < x1 < ...`, comma separated.
        #[arg(long, value_delimiter = ',', value_parser = rational, conflicts_with = "coeffs")]
        critical_points: Option<Vec<Rational>>,
        /// Coefficients, highest degree first, comma separated.
        #[arg(long, value_delimiter = ',', value_parser = rational, allow_hyphen_values = true)]
        coeffs: Option<Vec<Rational>>,
    },
    /// Build a polynomial with a given passport.
    Construct {
        /// Passport such as `3,1,4,2`.
        passport: String,
        /// Evaluation budget of the search.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Stratum of the degree-5 normal form at `(b, c)`.
    Classify5 {
        #[arg(long, value_parser = rational)]
        b: Rational,
        #[arg(long, value_parser = rational)]
        c: Rational,
    },
    /// Curves dq = 0, g = 0, h = 0 of the degree-5 plane with landmarks.
    Curves5,
    /// Constant-passport components of the degree-6 section `c = γ`.
    Section6 {
        #[arg(long = "c", value_parser = rational)]
        gamma: Rational,
    },
    /// Values of γ where the section partition changes.
    Bifurcations {
        #[arg(long, value_parser = rational)]
        lo: Rational,
        #[arg(long, value_parser = rational)]
        hi: Rational,
        #[arg(long, default_value = "1e-4", value_parser = rational)]
        tol: Rational,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let result = match cli.command {
        Command::Paps { order, level, count } => render::paps(g, order, level, count),
        Command::Triangle { rows } => render::triangle(g, rows),
        Command::Passport { critical_points, coeffs } => render::passport(g, critical_points, coeffs),
        Command::Construct { passport, budget } => render::construct(g, &passport, budget),
        Command::Classify5 { b, c } => render::classify5(g, b, c),
        Command::Curves5 => render::curves5(g),
        Command::Section6 { gamma } => render::section6(g, &gamma),
        Command::Bifurcations { lo, hi, tol } => render::bifurcations(g, &lo, &hi, &tol),
    };
    let text = match result {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    match &g.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::FAILURE;
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}
