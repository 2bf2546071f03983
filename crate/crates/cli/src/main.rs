//! `covscan`: classify families of Galois covers of curves satisfying the
//! distinguishing dimension condition, and analyze the resulting families.
//!
//! Exit codes: 0 success, 2 expectation mismatch against curated family
//! data, 3 internal integrality defect, 1 other errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use covers_core::catalog::{load_catalog, GroupCatalog};
use covers_core::cover::{load_family_fixtures, ScanBounds};
use covers_core::quotient::{detect_inclusions, AnalyzedFamily};
use covers_core::report::{
    build_report, emit_report, inclusion_dot, scan_tsv, ReportFormat,
};
use covers_core::scan::{analyze_family, run_scan, verify_unramified_lemma_input, ScanResult};
use covers_core::Error;

#[derive(Parser)]
#[command(
    name = "covscan",
    version,
    about = "Scan for and analyze families of Galois covers with extremal quadric behavior"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Group catalog file.
    #[arg(long, default_value = "data/groups.cat", global = true)]
    catalog: PathBuf,
    /// Curated family fixtures file.
    #[arg(long, default_value = "data/families.json", global = true)]
    fixtures: PathBuf,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate passports and report which satisfy the dimension condition.
    Scan {
        /// Base genus to scan: 1, 2, 3, or `all`.
        #[arg(long, default_value = "all")]
        gprime: String,
        /// Output format: tsv or json.
        #[arg(long, default_value = "tsv")]
        format: String,
        /// Override the genus ceiling (default 6*g'+1).  Results obtained
        /// with an override are watermarked in the output.
        #[arg(long)]
        gmax_override: Option<u32>,
    },
    /// Analyze the curated families against their pinned expectations.
    Analyze {
        /// Output format: json or tsv.
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Detect inclusions between families and emit the diagrams.
    Inclusions {
        /// Output format: dot or json.
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Run the internal consistency checks (catalog census, character
    /// tables, unramified-case lemma input, fixture expectations).
    Selftest,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(
            e.kind(),
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
        ) =>
        {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    if cli.common.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.common.jobs)
            .build_global()
        {
            eprintln!("covscan: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("covscan: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn parse_gprimes(s: &str) -> Result<Vec<u32>, Error> {
    match s {
        "all" => Ok(vec![1, 2, 3]),
        other => {
            let g: u32 = other
                .parse()
                .map_err(|_| Error::Invalid(format!("bad --gprime `{other}`")))?;
            if (1..=3).contains(&g) {
                Ok(vec![g])
            } else {
                Err(Error::Invalid(format!(
                    "--gprime must be 1..3 or `all`, got {g}"
                )))
            }
        }
    }
}

fn analyze_all(
    catalog: &GroupCatalog,
    fixtures_path: &std::path::Path,
) -> Result<Vec<AnalyzedFamily>, Error> {
    let fx = load_family_fixtures(fixtures_path, catalog)?;
    fx.iter().map(|f| analyze_family(catalog, f)).collect()
}

fn run(cli: &Cli) -> Result<(), Error> {
    let catalog = load_catalog(&cli.common.catalog)?;
    match &cli.command {
        Command::Scan {
            gprime,
            format,
            gmax_override,
        } => {
            let format: ReportFormat = format.parse()?;
            let mut scans: Vec<ScanResult> = Vec::new();
            for g in parse_gprimes(gprime)? {
                let bounds = match gmax_override {
                    Some(gm) => ScanBounds::with_g_max(g, *gm)?,
                    None => ScanBounds::for_base_genus(g)?,
                };
                scans.push(run_scan(&catalog, &bounds)?);
            }
            let watermark = gmax_override
                .map(|gm| format!("# NON-DEFAULT BOUNDS: g_max override {gm}\n"))
                .unwrap_or_default();
            match format {
                ReportFormat::Tsv => {
                    print!("{watermark}{}", scan_tsv(&scans));
                }
                ReportFormat::Json => {
                    let report = build_report(scans, &[], &[]);
                    print!("{watermark}{}", covers_core::report::report_json(&report)?);
                }
                ReportFormat::Dot => {
                    return Err(Error::Invalid(
                        "scan does not produce dot output; use `inclusions`".into(),
                    ))
                }
            }
            Ok(())
        }
        Command::Analyze { format } => {
            let format: ReportFormat = format.parse()?;
            let analyzed = analyze_all(&catalog, &cli.common.fixtures)?;
            let edges = detect_inclusions(&catalog, &analyzed)?;
            let report = build_report(Vec::new(), &analyzed, &edges);
            print!("{}", emit_report(&report, &analyzed, &edges, format)?);
            Ok(())
        }
        Command::Inclusions { format } => {
            let format: ReportFormat = format.parse()?;
            let analyzed = analyze_all(&catalog, &cli.common.fixtures)?;
            let edges = detect_inclusions(&catalog, &analyzed)?;
            match format {
                ReportFormat::Dot => print!("{}", inclusion_dot(&analyzed, &edges)),
                ReportFormat::Json => {
                    let report = build_report(Vec::new(), &analyzed, &edges);
                    print!("{}", covers_core::report::report_json(&report)?);
                }
                ReportFormat::Tsv => {
                    return Err(Error::Invalid(
                        "inclusions supports dot or json output".into(),
                    ))
                }
            }
            Ok(())
        }
        Command::Selftest => {
            println!("catalog: {} groups, census ok", catalog.len());
            verify_unramified_lemma_input(&catalog)?;
            println!("unramified-case lemma input: ok");
            for g in catalog.groups() {
                covers_core::chartab::character_table(g)?;
            }
            println!("character tables: {} groups ok", catalog.len());
            let analyzed = analyze_all(&catalog, &cli.common.fixtures)?;
            println!("families: {} analyzed, all expectations met", analyzed.len());
            let edges = detect_inclusions(&catalog, &analyzed)?;
            println!("inclusions: {} edges detected", edges.len());
            Ok(())
        }
    }
}
