//! `qtsym`: compute basis elements, apply operators, evaluate special values and
//! run the identity checks, with JSON output.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qtsym_core::bases::{FRoute, Family, TVariant};
use qtsym_core::identities::Suite;
use qtsym_core::Partition;

#[derive(Debug, Parser)]
#[command(name = "qtsym", version, about = "Exact symmetric functions over Q(q,t)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute one basis element, as a polynomial (with --N) or a symmetric function.
    Expand {
        #[command(flatten)]
        element: Element,
        #[command(flatten)]
        out: Output,
    },
    /// Lift a symmetric polynomial in N variables to the symmetric function it projects from.
    Lift {
        #[command(flatten)]
        element: Element,
        #[command(flatten)]
        out: Output,
    },
    /// Apply an operator to a basis element or to a JSON input.
    ApplyOp {
        /// Operator to apply.
        #[arg(value_enum)]
        op: Operator,
        #[command(flatten)]
        element: Element,
        /// Index r of H_N^r, or k of A^k.
        #[arg(long = "k")]
        k: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Closed-form special values of the interpolation polynomial I_{λ|N}.
    Special {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long = "N")]
        n: usize,
        /// JSON scalar `a` for the principal specialization.
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Run a suite of identity checks; exits 1 if any check fails.
    Verify {
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        #[arg(long = "max-N", default_value_t = 3)]
        max_n: usize,
        #[arg(long = "max-deg", default_value_t = 4)]
        max_deg: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Eigenvalue coefficients c_k(μ) of the hierarchy on I_μ.
    Eigen {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[command(flatten)]
        out: Output,
    },
    /// Table of all elements of a family with |λ| up to --max-deg.
    Table {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long = "max-deg")]
        max_deg: usize,
        #[arg(long = "N")]
        n: Option<usize>,
        #[arg(long, value_parser = parse_route, default_value = "definition")]
        route: FRoute,
        #[arg(long = "t-variant", value_parser = parse_t_variant, default_value = "t")]
        t_variant: TVariant,
        #[command(flatten)]
        out: Output,
    },
}

/// A basis element given by family and partition, or a JSON file.
#[derive(Debug, Args)]
struct Element {
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    #[arg(long = "N")]
    n: Option<usize>,
    #[arg(long, value_parser = parse_route, default_value = "definition")]
    route: FRoute,
    #[arg(long = "t-variant", value_parser = parse_t_variant, default_value = "t")]
    t_variant: TVariant,
    /// JSON file holding a polynomial or a symmetric function.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Output {
    /// Write JSON here instead of stdout.
    #[arg(long, visible_alias = "json")]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Operator {
    /// Macdonald operator H_N^r (needs --N and --k).
    Hn,
    /// D_N(z), coefficients in z.
    Dn,
    /// A_N(u) as a series in u.
    An,
    /// A^k on symmetric functions (needs --k).
    Ak,
    /// A_∞(u) as a series in u.
    Ainfty,
    /// A^1 through its vertex operator form.
    Vertex,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_route(s: &str) -> Result<FRoute, String> {
    s.parse()
}

fn parse_t_variant(s: &str) -> Result<TVariant, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("usage error");
            eprintln!("qtsym: {}", line.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qtsym: {e}");
            ExitCode::from(2)
        }
    }
}
