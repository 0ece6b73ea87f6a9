use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hochschild::linalg::{Field, FieldSpec};
use hochschild::path_algebra::{parse_presentation, AlgebraTable, QuiverPresentation, HECKE_PRESET};
use hochschild::report::{
    ext_table, hh_table, homdims_table, verify_report, with_algebra, AlgebraJob, CenterReport, GszListing, Method, Table, VerifyConfig,
    VerifyReport,
};
use serde::Serialize;

/// Minimal bimodule resolution and Hochschild cohomology of a tame Hecke block algebra.
#[derive(Parser, Debug)]
#[command(name = "hochschild", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensions of HH^n(A) with closed-form comparison.
    Hh(Common),
    /// Structural checks of the explicit resolution and its cross-checks.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Top degree for the generator-set checks.
        #[arg(long, default_value_t = 12)]
        gsz_degree: usize,
    },
    /// Basis of the center of A.
    Center(Common),
    /// Dimensions of Ext^n(S_i, S_j).
    Ext(Common),
    /// Elements of the generator set in one degree.
    Gsz {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// Dimensions of Hom(R_n, A) and Hom(Omega^n A, A).
    Homdims(Common),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Explicit,
    Oracle,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Explicit => Method::Explicit,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Bundled presentation.
    #[arg(long, conflicts_with = "presentation", default_value = HECKE_PRESET)]
    preset: String,
    /// Presentation file (vertices, arrows and relations).
    #[arg(long)]
    presentation: Option<PathBuf>,
    /// Coefficient field: q, or f<p> for a prime p.
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: FieldSpec,
    #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u64).range(1..))]
    max_degree: u64,
    #[arg(long, value_enum, default_value = "explicit")]
    method: MethodArg,
    /// Highest degree handed to the enveloping-algebra oracle.
    #[arg(long, default_value_t = hochschild::oracle::DEFAULT_ORACLE_DEGREE)]
    oracle_max_degree: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: hochschild::Error| e.to_string())
}

impl Common {
    fn load(&self) -> anyhow::Result<QuiverPresentation> {
        match &self.presentation {
            Some(path) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                parse_presentation(&text).with_context(|| format!("parsing {}", path.display()))
            }
            None => Ok(QuiverPresentation::preset(&self.preset)?),
        }
    }

    fn max_degree(&self) -> usize {
        self.max_degree as usize
    }
}

/// Anything the CLI can print in the three formats.
enum Output {
    Table(Table),
    Verify(Box<VerifyReport>),
    Center(CenterReport),
    Gsz(GszListing),
}

impl Output {
    /// True when the exit status should report a mathematical mismatch.
    fn failed(&self) -> bool {
        match self {
            Output::Table(t) => t.has_mismatch(),
            Output::Verify(r) => !r.passed,
            Output::Center(_) | Output::Gsz(_) => false,
        }
    }

    fn render(&self, format: Format) -> anyhow::Result<String> {
        fn json<T: Serialize>(x: &T) -> anyhow::Result<String> {
            Ok(serde_json::to_string_pretty(x)? + "\n")
        }
        Ok(match (self, format) {
            (Output::Table(t), Format::Text) => t.render_text(),
            (Output::Table(t), Format::Csv) => t.render_csv(),
            (Output::Table(t), Format::Json) => json(t)?,
            (Output::Verify(r), Format::Text) => r.render_text(),
            (Output::Verify(r), Format::Csv) => r.render_csv(),
            (Output::Verify(r), Format::Json) => json(r)?,
            (Output::Center(c), Format::Text) => c.render_text(),
            (Output::Center(c), Format::Csv) => c.render_csv(),
            (Output::Center(c), Format::Json) => json(c)?,
            (Output::Gsz(g), Format::Text) => g.render_text(),
            (Output::Gsz(g), Format::Csv) => g.render_csv(),
            (Output::Gsz(g), Format::Json) => json(g)?,
        })
    }
}

enum Job {
    Hh(usize, Method, usize),
    Verify(VerifyConfig),
    Center,
    Ext(usize),
    Homdims(usize),
}

impl AlgebraJob for Job {
    type Output = Output;

    fn run<F: Field>(self, algebra: AlgebraTable<F>) -> hochschild::Result<Output> {
        Ok(match self {
            Job::Hh(max, method, oracle) => Output::Table(hh_table(algebra, max, method, oracle)?),
            Job::Verify(config) => Output::Verify(Box::new(verify_report(algebra, &config)?)),
            Job::Center => Output::Center(CenterReport::compute(&algebra)),
            Job::Ext(max) => Output::Table(ext_table(algebra, max)?),
            Job::Homdims(max) => Output::Table(homdims_table(algebra, max)?),
        })
    }
}

fn run(cli: Cli) -> anyhow::Result<(Output, Common)> {
    let (common, job) = match cli.command {
        Command::Hh(c) => {
            let job = Job::Hh(c.max_degree(), c.method.into(), c.oracle_max_degree);
            (c, Some(job))
        }
        Command::Verify { common: c, gsz_degree } => {
            let job = Job::Verify(VerifyConfig {
                max_degree: c.max_degree(),
                method: c.method.into(),
                oracle_degree: c.oracle_max_degree,
                gsz_degree,
                ..Default::default()
            });
            (c, Some(job))
        }
        Command::Center(c) => (c, Some(Job::Center)),
        Command::Ext(c) => {
            let job = Job::Ext(c.max_degree());
            (c, Some(job))
        }
        Command::Homdims(c) => {
            let job = Job::Homdims(c.max_degree());
            (c, Some(job))
        }
        Command::Gsz { common: c, degree } => {
            let presentation = c.load()?;
            if degree == 0 {
                bail!("--degree must be at least 1");
            }
            return Ok((Output::Gsz(GszListing::compute(&presentation, degree)?), c));
        }
    };
    let presentation = common.load()?;
    let job = job.expect("set for every algebra command");
    let output = with_algebra(&presentation, common.field, job)?;
    Ok((output, common))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (output, common) = match run(cli) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let text = match output.render(common.format) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    match &common.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if output.failed() {
        if let Output::Verify(r) = &output {
            let degrees: Vec<String> = r.failing_degrees().iter().map(|n| n.to_string()).collect();
            eprintln!("verification failed at degree(s) {}", degrees.join(", "));
        }
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
