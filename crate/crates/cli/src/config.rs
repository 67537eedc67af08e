//! Command-line surface and the validated run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dpcodes::picard::SurfaceType;
use dpcodes::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "dpcodes", version, about = "Anticanonical codes on del Pezzo surfaces over finite fields")]
pub struct Cli {
    /// Worker threads for distance computations (also DPCODES_THREADS).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a surface and write its model file.
    Build(SurfaceArgs),
    /// Emit the generator matrix.
    Code(SurfaceArgs),
    /// Exact minimum distance, compared with the best-known snapshot.
    Mindist(SurfaceArgs),
    /// Full weight distribution.
    Wdist(SurfaceArgs),
    /// Parameter and Frobenius-type tables for one degree.
    Tables {
        #[arg(long)]
        degree: u32,
    },
    /// Run the acceptance criteria.
    Verify {
        /// Run every criterion (the default).
        #[arg(long)]
        all: bool,
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<u32>,
    },
    /// The order-5 automorphism of the degree-5 surface.
    Auto5 {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Classify a pencil of two quadrics read from a file.
    Pencil { file: PathBuf },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Matrix,
}

#[derive(Args, Debug, Clone, Default)]
pub struct SurfaceArgs {
    #[arg(long)]
    pub degree: Option<u32>,
    #[arg(long)]
    pub q: Option<u64>,
    /// Degree-4 type: 4_1, 4_2 or 4_3.
    #[arg(long = "type")]
    pub type_label: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum)]
    pub emit: Option<Emit>,
    /// Flynn factors by degree, coefficients constant term first.
    #[arg(long)]
    pub f1: Vec<String>,
    #[arg(long)]
    pub f2: Vec<String>,
    #[arg(long)]
    pub f3: Vec<String>,
    #[arg(long)]
    pub f4: Vec<String>,
    /// Flynn twist: `x` or a coefficient list.
    #[arg(long)]
    pub delta: Option<String>,
    /// Load the surface from a model file instead of building it.
    #[arg(long)]
    pub model: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// What to build, after validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    ModelFile(PathBuf),
    Seeded { degree: u32, q: u64, surface_type: SurfaceType, seed: u64 },
    Flynn { q: u64, surface_type: Option<SurfaceType>, factors: Vec<(usize, String)>, delta: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub source: Source,
    pub emit: Option<Emit>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(a: &SurfaceArgs) -> Result<RunConfig> {
        let bad = |s: String| Err(Error::InvalidParameters(s));
        let factors: Vec<(usize, String)> = [(1, &a.f1), (2, &a.f2), (3, &a.f3), (4, &a.f4)]
            .into_iter()
            .flat_map(|(d, v)| v.iter().map(move |s| (d, s.clone())))
            .collect();
        let source = if let Some(path) = &a.model {
            if a.degree.is_some() || a.q.is_some() || !factors.is_empty() {
                return bad("--model cannot be combined with --degree, --q or factors".into());
            }
            Source::ModelFile(path.clone())
        } else {
            let Some(degree) = a.degree else { return bad("--degree is required".into()) };
            let Some(q) = a.q else { return bad("--q is required".into()) };
            let parsed = a.type_label.as_deref().map(SurfaceType::parse).transpose()?;
            match degree {
                4 => {
                    if !factors.is_empty() || a.delta.is_some() {
                        if factors.iter().map(|f| f.0).sum::<usize>() != 5 {
                            return bad("Flynn factor degrees must sum to 5".into());
                        }
                        if parsed.is_some_and(|t| t.degree() != 4) {
                            return bad(format!("type {} is not a degree-4 type", parsed.unwrap().label()));
                        }
                        Source::Flynn {
                            q,
                            surface_type: parsed,
                            factors,
                            delta: a.delta.clone().unwrap_or_else(|| "x".into()),
                        }
                    } else {
                        let Some(t) = parsed else { return bad("degree 4 needs --type 4_1, 4_2 or 4_3".into()) };
                        if t.degree() != 4 {
                            return bad(format!("type {} is not a degree-4 type", t.label()));
                        }
                        Source::Seeded { degree, q, surface_type: t, seed: a.seed }
                    }
                }
                5 | 6 => {
                    let t = if degree == 5 { SurfaceType::Five7 } else { SurfaceType::Six6 };
                    if parsed.is_some_and(|p| p != t) {
                        return bad(format!("degree {degree} only supports type {}", t.label()));
                    }
                    if !factors.is_empty() || a.delta.is_some() {
                        return bad("Flynn data only applies to degree 4".into());
                    }
                    Source::Seeded { degree, q, surface_type: t, seed: a.seed }
                }
                d => return bad(format!("degree must be 4, 5 or 6 (got {d})")),
            }
        };
        Ok(RunConfig { source, emit: a.emit, out: a.out.clone() })
    }
}

/// Worker count from the flag or `DPCODES_THREADS`.
pub fn thread_count(flag: Option<usize>) -> Option<usize> {
    flag.or_else(|| std::env::var("DPCODES_THREADS").ok()?.parse().ok()).filter(|&n| n > 0)
}
