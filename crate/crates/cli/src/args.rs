use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "abstractdd",
    version,
    about = "Magma classification and order-dependence of MTBDD abstraction"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check commutativity, associativity, the medial law and units.
    Classify {
        #[command(flatten)]
        magma: MagmaSource,
        /// Trials for operations on infinite carriers.
        #[arg(long, default_value_t = 1000)]
        sample: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Abstract variables of a function and report the result per order.
    Abstract {
        #[command(flatten)]
        magma: MagmaSource,
        #[command(flatten)]
        function: FunctionSource,
        /// Variables to abstract.
        #[arg(long, num_args = 1.., required = true)]
        vars: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Order::Given)]
        order: Order,
        #[arg(long, value_enum, default_value_t = PolicyArg::Gated)]
        policy: PolicyArg,
    },
    /// Construct a function whose abstraction depends on the variable order.
    Search {
        #[command(flatten)]
        magma: MagmaSource,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Count small tables by law profile.
    Enumerate {
        #[arg(long)]
        size: usize,
        /// Comma-separated: medial, non-medial, associative, non-associative,
        /// commutative, non-commutative, has-unit, no-unit.
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
        /// Exemplar tables printed per profile.
        #[arg(long, default_value_t = 1)]
        examples: usize,
        /// Sample this many random tables instead of enumerating all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct MagmaSource {
    /// Catalog name, e.g. `tamura` or `z-add(3)`.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Composition table file.
    #[arg(long)]
    pub magma: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct FunctionSource {
    /// Function file (`vars: n` header, then `bits -> value` rows).
    #[arg(long)]
    pub function: Option<PathBuf>,
    /// Comma-separated values for rows `0..2^n`, variable 1 most significant.
    #[arg(long)]
    pub values: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Given,
    Ascending,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Gated,
    Forced,
}
