//! Command-line front end for the verification suites.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::AlgebraKind;
use crate::report::TheoremReport;
use crate::suites::{self, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "cayley-plane",
    version,
    about = "Exact checks for the octonion, para-octonion and Okubo planes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Plane kind: octonion, para, okubo or all.
    #[arg(long, global = true, default_value = "all", value_parser = parse_kinds)]
    pub kind: KindSel,
    #[arg(long, global = true, env = "CAYLEY_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Algebra identities, structure tables, Gram matrix and the trivolution.
    Identities,
    /// Join, meet, parallels and quadrangles in each plane.
    PlaneAxioms,
    /// Veronese conditions and the incidence form.
    Veronese,
    /// Elations, triality and the isomorphisms between the planes.
    Collineations,
    /// Distance preservation of the isomorphisms.
    Isometry,
    /// Little Desargues and full-Desargues counterexamples.
    Desargues,
    /// Nonlinearity of the Okubo ternary ring.
    Ptr,
    /// The triple condition for maps of the Okubo algebra.
    G2,
    /// Structure tables and Gram matrix as JSON.
    DumpTables,
    /// Every suite, in command order.
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KindSel(pub Vec<AlgebraKind>);

fn parse_kinds(s: &str) -> Result<KindSel, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(KindSel(AlgebraKind::ALL.to_vec()));
    }
    s.parse::<AlgebraKind>()
        .map(|k| KindSel(vec![k]))
        .map_err(|e| e.to_string())
}

impl Command {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            Command::Identities => vec![Suite::Identities],
            Command::PlaneAxioms => vec![Suite::PlaneAxioms],
            Command::Veronese => vec![Suite::Veronese],
            Command::Collineations => vec![Suite::Collineations],
            Command::Isometry => vec![Suite::Isometry],
            Command::Desargues => vec![Suite::Desargues],
            Command::Ptr => vec![Suite::Ptr],
            Command::G2 => vec![Suite::G2],
            Command::DumpTables => vec![],
            Command::All => Suite::ALL.to_vec(),
        }
    }
}

/// Renders reports in the chosen format, followed by a summary.
pub fn render(reports: &[TheoremReport], format: Format) -> String {
    let passed = reports.iter().all(TheoremReport::passed);
    match format {
        Format::Json => {
            let doc = serde_json::json!({ "passed": passed, "reports": reports });
            serde_json::to_string_pretty(&doc).expect("reports serialize") + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                s.push_str(&r.to_string());
                s.push('\n');
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            s.push_str(&format!(
                "{} checks, {} failed: {}\n",
                reports.len(),
                failed,
                if passed { "ok" } else { "FAILED" }
            ));
            s
        }
    }
}

/// Runs the parsed command and returns the process exit status.
pub fn run(cli: &Cli) -> ExitCode {
    let (text, ok) = if cli.command == Command::DumpTables {
        let doc = suites::dump_tables();
        (
            serde_json::to_string_pretty(&doc).expect("tables serialize") + "\n",
            true,
        )
    } else {
        let reports = suites::run_suites(&cli.command.suites(), &cli.kind.0, cli.seed, cli.trials);
        (
            render(&reports, cli.format),
            reports.iter().all(TheoremReport::passed),
        )
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(1);
    }
    if !ok {
        eprintln!("error: one or more checks failed");
    }
    ExitCode::from(if ok { 0 } else { 1 })
}
