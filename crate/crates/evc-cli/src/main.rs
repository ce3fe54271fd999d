use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};

use evc_cli::commands::{self, Claim, GlobalOpts};
use evc_cli::formats::GraphFormat;
use evc_cli::generate::GenKind;

/// Eternal vertex cover toolkit.
///
/// Exit codes: 0 success / claims hold, 1 claim falsified or certificate
/// invalid, 2 usage or input error.
#[derive(Parser)]
#[command(name = "evc", version, about)]
struct Cli {
    /// Worker threads for corpus verification (overrides EVC_JOBS).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Include wall_time_ms in the report (breaks byte-for-byte
    /// reproducibility of the output).
    #[arg(long, global = true)]
    timing: bool,

    /// Human-readable progress on stderr.
    #[arg(long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file.
    file: PathBuf,

    /// Input format; by default .col/.dimacs/.clq read as DIMACS and
    /// anything else as an edge list.
    #[arg(long)]
    format: Option<GraphFormat>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact eternal vertex cover number via the game solver.
    Exact {
        #[command(flatten)]
        input: InputArgs,
        /// Occupancy model: multi (default) or single.
        #[arg(long, default_value = "multi")]
        model: String,
        /// Comma-separated labels that every configuration must occupy.
        #[arg(long)]
        forced: Option<String>,
    },
    /// Structural evc: chordal pipeline, then locally-connected blocks,
    /// else a lower bound only.
    Fast {
        #[command(flatten)]
        input: InputArgs,
        /// Run the exponential game solver when no structural method
        /// applies instead of reporting the bound only.
        #[arg(long)]
        allow_exact_fallback: bool,
        /// Write the per-vertex cover certificate to this JSON file.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Minimum vertex cover, optionally constrained to contain vertices.
    Mvc {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        forced: Option<String>,
    },
    /// Cut vertices, blocks, and the edge-to-block assignment.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Re-check a structural claim on a corpus of instances.
    Verify {
        /// lemma1 | lemma2 | cutprop | obs1 | theorem1
        claim: Claim,
        /// Corpus descriptor (see README); each claim has a default.
        #[arg(long)]
        corpus: Option<String>,
        /// Extra guard budgets above evc checked by cutprop.
        #[arg(long, default_value_t = 1)]
        delta: u32,
    },
    /// Certificate operations.
    Certificate {
        #[command(subcommand)]
        action: CertificateAction,
    },
    /// Seeded random instance generation.
    Generate {
        /// tree | chordal | interval | connected
        kind: GenKind,
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the graph here instead of only reporting it.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "edgelist")]
        format: GraphFormat,
    },
}

#[derive(Subcommand)]
enum CertificateAction {
    /// Verify a list of covers as a certificate for evc(G) <= k.
    Check {
        #[command(flatten)]
        input: InputArgs,
        k: usize,
        /// JSON array of covers (arrays of vertex labels).
        covers: PathBuf,
    },
}

fn worker_count(cli_jobs: Option<usize>) -> Option<usize> {
    cli_jobs.or_else(|| std::env::var("EVC_JOBS").ok().and_then(|v| v.parse().ok()))
}

fn run(cli: Cli) -> Result<i32> {
    if let Some(jobs) = worker_count(cli.jobs) {
        if jobs > 0 {
            // ignore the error if a pool already exists
            let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
        }
    }
    let opts = GlobalOpts { timing: cli.timing, verbose: cli.verbose };
    let (report, code) = match &cli.command {
        Command::Exact { input, model, forced } => {
            commands::cmd_exact(&input.file, input.format, model, forced, &opts)?
        }
        Command::Fast { input, allow_exact_fallback, certificate } => commands::cmd_fast(
            &input.file,
            input.format,
            *allow_exact_fallback,
            certificate,
            &opts,
        )?,
        Command::Mvc { input, forced } => {
            commands::cmd_mvc(&input.file, input.format, forced, &opts)?
        }
        Command::Decompose { input } => commands::cmd_decompose(&input.file, input.format, &opts)?,
        Command::Verify { claim, corpus, delta } => {
            commands::cmd_verify(*claim, corpus, *delta, &opts)?
        }
        Command::Certificate { action } => match action {
            CertificateAction::Check { input, k, covers } => {
                commands::cmd_certificate_check(&input.file, *k, covers, input.format, &opts)?
            }
        },
        Command::Generate { kind, n, density, seed, out, format } => {
            commands::cmd_generate(*kind, *n, *density, *seed, out, *format, &opts)?
        }
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
