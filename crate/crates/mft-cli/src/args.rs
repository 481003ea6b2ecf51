use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "mft", version, about = "Exact and numeric solutions of cubic and quartic matrix field theories")]
pub struct Cli {
    /// Seed for randomised checks, recorded in every output.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Tolerance for residual checks; exceeding it exits with status 3.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Symbolic cubic model: free energies, intersection numbers, correlators.
    #[command(subcommand)]
    Kontsevich(KontsevichCmd),
    /// Numeric planar cubic model on Moyal-type measures.
    Cubic(CubicArgs),
    /// Catalan tables and the planar quartic N-point expansion.
    #[command(subcommand)]
    Catalan(CatalanCmd),
    /// Quartic model with a finite spectrum.
    QuarticFinite(QuarticArgs),
    /// Quartic model on four-dimensional Moyal space.
    Moyal4(Moyal4Args),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Annihilate,
    Laplacian,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    /// Includes the genus-one factor `r0^(-1/24)`.
    Np,
    Stable,
}

#[derive(Subcommand, Debug)]
pub enum KontsevichCmd {
    FreeEnergy {
        #[arg(long)]
        genus: usize,
        #[arg(long, value_enum, default_value_t = RouteArg::Both)]
        route: RouteArg,
    },
    Intersections {
        #[arg(long)]
        genus: usize,
    },
    Correlation {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        boundaries: usize,
        /// Also substitute into the loop equation.
        #[arg(long)]
        check_loop: bool,
    },
    Virasoro {
        #[arg(long)]
        n: usize,
        /// Highest power of u in the truncated partition function.
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Convention::Np)]
        convention: Convention,
    },
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("mode").multiple(false))]
pub struct CubicArgs {
    #[arg(long)]
    pub dim: u8,
    #[arg(long)]
    pub renorm_dim: u8,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: f64,
    #[arg(long, group = "mode", allow_negative_numbers = true)]
    pub x: Option<f64>,
    #[arg(long, group = "mode")]
    pub series: Option<usize>,
    #[arg(long, group = "mode")]
    pub c_only: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum CatalanCmd {
    /// Number of Catalan tables of length K.
    Count {
        #[arg(long)]
        k: usize,
    },
    Expand {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Table expansion against the naive recursion on random rational data.
    Verify {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("mode").multiple(false))]
pub struct QuarticArgs {
    #[arg(long)]
    pub spectrum: PathBuf,
    /// Overrides the coupling stored in the spectrum file.
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    #[arg(long, group = "mode", num_args = 2, value_names = ["Z", "W"], allow_negative_numbers = true)]
    pub two_point: Option<Vec<f64>>,
    #[arg(long, group = "mode")]
    pub check_identities: bool,
    /// Compares the pole expansion with the product formula at the eigenvalue points.
    #[arg(long, group = "mode")]
    pub rfe: bool,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("mode").multiple(false))]
pub struct Moyal4Args {
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: f64,
    /// Mass parameter; defaults to the natural choice.
    #[arg(long)]
    pub mu2: Option<f64>,
    #[arg(long, group = "mode", allow_negative_numbers = true)]
    pub measure: Option<f64>,
    #[arg(long, group = "mode")]
    pub fredholm: bool,
    #[arg(long, group = "mode")]
    pub dimension: bool,
    #[arg(long, group = "mode", num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    pub g2: Option<Vec<f64>>,
    #[arg(long, default_value_t = 2, requires = "g2")]
    pub order: usize,
}
