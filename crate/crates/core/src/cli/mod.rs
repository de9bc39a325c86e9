//! The `rhind` command line. Every subcommand is a thin adapter over the
//! library; [`run`] is what the binary calls.

mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand};

use crate::arith::{DecompositionPolicy, SequemMode, Strategy};
use crate::error::Result;
use crate::rational::Rational;

pub use output::{OutputFormat, Report};

/// Rationals are written `1/7`, `19`, or as comma-separated sums like `1,1/7`.
fn rational(s: &str) -> std::result::Result<Rational, String> {
    Rational::parse_sum_list(s).map_err(|e| e.to_string())
}

fn strategy(s: &str) -> std::result::Result<Strategy, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

fn sequem_mode(s: &str) -> std::result::Result<SequemMode, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "rhind",
    version,
    about = "Egyptian fractions and the arithmetic and geometry of the Rhind papyrus"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Seed for randomized runs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(flatten)]
    pub policy: PolicyArgs,

    #[command(subcommand)]
    pub command: Command,
}

/// Flags that map onto the decomposition policy.
#[derive(Debug, Args)]
pub struct PolicyArgs {
    /// greedy, splitting or shortest_search.
    #[arg(long, global = true, value_parser = strategy, default_value = "shortest_search")]
    pub strategy: Strategy,

    /// Most unit fractions the shortest search may use.
    #[arg(long, global = true, default_value_t = 4)]
    pub max_terms: u32,

    /// Largest denominator the shortest search may use.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub max_denominator: u64,

    /// Do not prefer a largest denominator with many divisors on ties.
    #[arg(long, global = true)]
    pub no_divisor_rich: bool,

    /// Write sums with unit fractions only, without a 2/3 term.
    #[arg(long, global = true)]
    pub no_two_thirds: bool,
}

impl PolicyArgs {
    pub fn policy(&self) -> DecompositionPolicy {
        DecompositionPolicy {
            strategy: self.strategy,
            max_terms: self.max_terms,
            max_denominator: self.max_denominator,
            prefer_divisor_rich: !self.no_divisor_rich,
            allow_two_thirds: !self.no_two_thirds,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a positive rational as a sum of unit fractions.
    Decompose {
        #[arg(value_parser = rational)]
        value: Rational,
    },
    /// The table of 2/n for odd n.
    Table2n {
        /// Largest n.
        #[arg(long, default_value_t = 99)]
        max: u64,
        /// Also list even n.
        #[arg(long)]
        include_even: bool,
    },
    /// Multiply (or divide) by doubling.
    Mul {
        a: u64,
        b: u64,
        /// Divide a by b instead.
        #[arg(long)]
        divide: bool,
    },
    /// Share loaves among men.
    Loaves {
        #[arg(long)]
        loaves: u64,
        #[arg(long)]
        men: u64,
    },
    /// Completion: what must be added to (or multiply) `given` to reach `target`.
    Sequem {
        #[arg(long, value_parser = rational)]
        given: Rational,
        #[arg(long, value_parser = rational)]
        target: Rational,
        /// additive or multiplicative.
        #[arg(long, value_parser = sequem_mode, default_value = "additive")]
        mode: SequemMode,
    },
    /// Solve multiplier × x = target.
    Hau {
        /// The multiplier; `1,1/7` means 1 + 1/7.
        #[arg(long, value_parser = rational)]
        multiplier: Rational,
        #[arg(long, value_parser = rational)]
        target: Rational,
        /// Solve by false position from this guess and print the steps.
        #[arg(long, value_parser = rational)]
        guess: Option<Rational>,
    },
    /// Shares in arithmetic progression (total, difference) or geometric (first, ratio).
    Shares {
        #[arg(long)]
        terms: u32,
        #[arg(long, value_parser = rational, conflicts_with_all = ["first", "ratio"], required_unless_present = "ratio")]
        total: Option<Rational>,
        #[arg(long, value_parser = rational, requires = "total")]
        difference: Option<Rational>,
        #[arg(long, value_parser = rational, requires = "ratio")]
        first: Option<Rational>,
        #[arg(long, value_parser = rational, requires = "first")]
        ratio: Option<Rational>,
    },
    /// Powers base^1 .. base^top and their sum.
    Ladder {
        #[arg(long)]
        base: u64,
        #[arg(long)]
        top: u32,
    },
    /// Areas of squares, rectangles, triangles and trapezoids.
    Area {
        #[command(subcommand)]
        shape: AreaShape,
    },
    /// Circle area by the square on 8/9 of the diameter.
    Circle {
        #[arg(long, value_parser = rational)]
        diameter: Rational,
    },
    /// The error of the value 256/81 against pi.
    PiError {
        /// Also compare 3 and 4.
        #[arg(long)]
        compare: bool,
    },
    /// The Edfu rule for four-sided fields.
    #[command(group(clap::ArgGroup::new("edfu_input").required(true)))]
    Edfu {
        /// Four sides a,b,c,d in cyclic order (one may be 0).
        #[arg(long, value_delimiter = ',', value_parser = rational, group = "edfu_input")]
        sides: Option<Vec<Rational>>,
        /// Vertices `x,y;x,y;...`, compared against the exact area.
        #[arg(long, group = "edfu_input")]
        vertices: Option<String>,
        /// Run the rule on this many random convex quadrilaterals (see --seed).
        #[arg(long, group = "edfu_input")]
        random: Option<usize>,
        /// Constructed rectangles added to a random run.
        #[arg(long, default_value_t = 0, requires = "random")]
        rectangles: usize,
    },
    /// Pyramid slope: give two of base, height and seked.
    Seked {
        #[arg(long, value_parser = rational)]
        base: Option<Rational>,
        #[arg(long, value_parser = rational)]
        height: Option<Rational>,
        #[arg(long, value_parser = rational)]
        seked: Option<Rational>,
        /// Palms per cubit.
        #[arg(long, default_value_t = crate::geometry::DEFAULT_PARTS)]
        parts: u32,
    },
    /// Height from a shadow and a reference stick.
    Shadow {
        #[arg(long, value_parser = rational)]
        shadow: Rational,
        #[arg(long, value_parser = rational)]
        stick: Rational,
        #[arg(long, value_parser = rational)]
        stick_shadow: Rational,
    },
    /// Granary volume: floor area times length.
    Granary {
        #[arg(long, value_parser = rational)]
        floor_area: Rational,
        #[arg(long, value_parser = rational)]
        length: Rational,
    },
    /// Primitive integer right triangles up to a perimeter.
    Triples {
        #[arg(long, default_value_t = 30)]
        limit: u64,
        /// Instead, test whether sides a,b,c form a right triangle.
        #[arg(long, value_delimiter = ',', value_parser = rational)]
        check: Option<Vec<Rational>>,
    },
    /// Replay a problem corpus and report scribal errors.
    Corpus {
        /// Corpus file (JSON).
        #[arg(required_unless_present = "starter", conflicts_with = "starter")]
        path: Option<PathBuf>,
        /// Use the bundled starter corpus.
        #[arg(long)]
        starter: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum AreaShape {
    Square {
        #[arg(long, value_parser = rational)]
        side: Rational,
    },
    Rectangle {
        #[arg(long, value_parser = rational)]
        width: Rational,
        #[arg(long, value_parser = rational)]
        height: Rational,
    },
    /// Half base times height.
    Triangle {
        #[arg(long, value_parser = rational)]
        base: Rational,
        #[arg(long, value_parser = rational)]
        height: Rational,
    },
    /// Half the product of two sides.
    TwoSides {
        #[arg(long, value_parser = rational)]
        side1: Rational,
        #[arg(long, value_parser = rational)]
        side2: Rational,
    },
    /// Half the sum of the parallel sides times the height.
    Trapezoid {
        #[arg(long, value_parser = rational)]
        side1: Rational,
        #[arg(long, value_parser = rational)]
        side2: Rational,
        #[arg(long, value_parser = rational)]
        height: Rational,
    },
    /// Leg times half the base for an isoceles triangle, against the true area.
    Gerbert {
        #[arg(long, value_parser = rational)]
        leg: Rational,
        #[arg(long, value_parser = rational)]
        base: Rational,
    },
}

/// The clap command, with negative numbers accepted as values at every level.
pub fn command() -> clap::Command {
    fn negatives(c: clap::Command) -> clap::Command {
        c.allow_negative_numbers(true).mut_subcommands(negatives)
    }
    negatives(Cli::command())
}

/// Executes one command line, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code: 0 on success, 1 on an engine error, 2 on
/// a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match command()
        .try_get_matches_from(args)
        .and_then(|m| Cli::from_arg_matches(&m))
    {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                2
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let _ = out.write_all(report.select(cli.format).as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<Report> {
    commands::dispatch(cli)
}
