use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "fusioncat", version, about = "Exact checks on fusion and modular categories")]
pub struct Cli {
    /// Emit a single JSON object instead of text tables.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Category file.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// Built-in catalog entry.
    #[arg(long, value_name = "NAME")]
    pub catalog: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of the input data.
    Validate(Source),
    /// Simple objects, dimensions, fusion rules and the S-matrix.
    Info(Source),
    /// Fusion subcategories with their cointegral invariants.
    Subcats(Source),
    /// Müger centralizers by the S-matrix criterion and by f_Q(λ_D).
    Centralizer {
        #[command(flatten)]
        source: Source,
        /// Comma-separated generator labels; all subcategories when omitted.
        #[arg(long, value_name = "LABELS")]
        subcat: Option<String>,
    },
    /// Conjugacy classes: idempotents, class sums, sizes, structure constants.
    Classes(Source),
    /// Universal grading, adjoint and pointed parts, the prime-index check.
    Grading(Source),
    /// Run every check.
    Verify(Source),
    /// List catalog entries, or print one as a category file.
    Catalog {
        #[arg(long, value_name = "NAME")]
        export: Option<String>,
    },
}
