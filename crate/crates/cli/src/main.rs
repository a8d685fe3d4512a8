//! Command-line surface of the string-reduction laboratory: generate
//! instances, run reduction edges, verify decode identities against the
//! brute-force oracles, and thread instances through whole chains.

use clap::{Parser, Subcommand, ValueEnum};
use strred_cli::edges::{self, pipeline, reduce, verify, ReduceOptions, VerificationReport};
use strred_cli::file::{self, FileError, InstanceFile, Kind};
use strred_cli::gen::{generate, GenParams};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "strred", version, about = "string-problem reduction laboratory")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Report format for verification output.
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a random instance of the given kind.
    Gen {
        /// Instance kind: dm, sn, rps, cci, ci, or text.
        kind: Kind,
        /// Main size (text length, string count, or array length).
        #[arg(long)]
        n: usize,
        /// Secondary count (patterns, query pairs, queries).
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Per-string length (patterns, pairs, query strings).
        #[arg(long, default_value_t = 4)]
        m: usize,
        /// Alphabet size.
        #[arg(long, default_value_t = 2)]
        sigma: u32,
        #[arg(long)]
        seed: u64,
        /// Plant a long run so the periodic machinery is exercised.
        #[arg(long)]
        periodic_rich: bool,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Apply one reduction edge to an instance file.
    Reduce {
        /// Edge name, e.g. dm-lz, dm-sn, sn-rps, rps-cci, cci-ci.
        edge: String,
        input: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        /// Use the binary-alphabet composition of the reduction.
        #[arg(long)]
        binary: bool,
        /// Synchronizing-set scale for dm-sn (defaults to max(1, log2(n)/6)).
        #[arg(long)]
        tau: Option<usize>,
    },
    /// Recompute and check the decode identity of a (reduced) instance file.
    Verify { input: PathBuf },
    /// Reduce along a whole chain, verifying every hop.
    Pipeline {
        /// Comma-separated chain of problem kinds, e.g. dm,sn,rps,cci,ci.
        #[arg(long)]
        chain: String,
        input: PathBuf,
    },
    /// Print the brute-force oracle answer of an instance file.
    Oracle {
        /// Instance kind; must match the file.
        kind: Kind,
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(pass) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn emit(reports: &[VerificationReport], format: ReportFormat) {
    match format {
        ReportFormat::Text => {
            for r in reports {
                print!("{}", r.render_text());
            }
            let passed = reports.iter().filter(|r| r.pass).count();
            println!("{passed}/{} checks passed", reports.len());
        }
        ReportFormat::Json => {
            println!("{}", serde_json::to_string_pretty(reports).expect("serializable"));
        }
    }
}

fn run(cli: Cli) -> Result<bool, FileError> {
    match cli.cmd {
        Cmd::Gen { kind, n, k, m, sigma, seed, periodic_rich, out } => {
            let params = GenParams { n, k, m, sigma, seed, periodic_rich };
            let instance = generate(kind, &params)?;
            instance.save(&out)?;
            println!("wrote {} ({})", out.display(), instance.summary());
            Ok(true)
        }
        Cmd::Reduce { edge, input, out, binary, tau } => {
            let source = InstanceFile::load(&input)?;
            let reduced = reduce(&edge, &source, ReduceOptions { binary, tau })?;
            reduced.save(&out)?;
            println!("wrote {} ({})", out.display(), reduced.summary());
            Ok(true)
        }
        Cmd::Verify { input } => {
            let instance = InstanceFile::load(&input)?;
            let report = verify(&instance)?;
            let pass = report.pass;
            emit(&[report], cli.report);
            Ok(pass)
        }
        Cmd::Pipeline { chain, input } => {
            let instance = InstanceFile::load(&input)?;
            let reports = pipeline(&chain, &instance)?;
            let pass = reports.iter().all(|r| r.pass);
            emit(&reports, cli.report);
            Ok(pass)
        }
        Cmd::Oracle { kind, input } => {
            let instance = InstanceFile::load(&input)?;
            if instance.kind != kind {
                return Err(FileError::Malformed(format!(
                    "file holds a {} instance, not {kind}",
                    instance.kind
                )));
            }
            if matches!(instance.payload, file::Payload::Texts { .. }) {
                for (name, value) in edges::text_stats(&instance)? {
                    println!("{name}: {value}");
                }
                return Ok(true);
            }
            let (answer, extra) = edges::oracle_answer(&instance)?;
            for (name, value) in extra {
                println!("{name}: {value}");
            }
            println!("answer: {}", if answer { "YES" } else { "NO" });
            Ok(true)
        }
    }
}
