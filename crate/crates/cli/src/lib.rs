//! Command-line front end: argument parsing, dispatch and exit codes.

pub mod commands;
pub mod render;
pub mod report;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use ngerm_core::germ::GermData;
use ngerm_core::poly::{Oracle, PolyError, ReportOptions};
use ngerm_core::Semantics;

#[derive(Debug, Parser)]
#[command(
    name = "ngerm",
    version,
    about = "Newton diagrams, Milnor numbers and nondegeneracy of plane curve germs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Output format: json or text for reports, ascii or svg for `render`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for coordinate changes and model coefficients.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest truncation degree tried by the linear-algebra oracle.
    #[arg(long, global = true, default_value_t = ngerm_core::poly::DEFAULT_DEGREE_CAP)]
    pub degree_cap: u32,
    /// Which Milnor number computations to run.
    #[arg(long, global = true, value_enum, default_value_t = OracleArg::Both)]
    pub oracle: OracleArg,
    /// Read group exponents literally: a singleton smooth group must have exponent inf.
    #[arg(long, global = true)]
    pub literal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleArg {
    Resultant,
    Linear,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Newton diagram, face tests and Milnor number of a polynomial.
    AnalyzePoly(PolyInput),
    /// Invariants and verdicts of a germ-data file.
    AnalyzeGerm(GermInput),
    /// Model equation of an N-germ, with its verification.
    Model(GermInput),
    /// Draw a Newton diagram.
    Render(RenderInput),
    /// Compare the intrinsic verdicts of a germ with equations realizing it.
    Crosscheck {
        #[command(flatten)]
        germ: GermInput,
        /// Number of seeds tried, starting at `--seed`.
        #[arg(long, default_value_t = 5)]
        trials: u64,
    },
}

#[derive(Debug, Args)]
pub struct PolyInput {
    /// Polynomial expression in x and y, e.g. "(y^2 - x^3)*(y - x)".
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    pub expr: Option<String>,
    /// Read the expression from a file instead.
    #[arg(long, short)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GermInput {
    /// Germ-data JSON file.
    pub file: PathBuf,
    /// Milnor number of a branch with several characteristic pairs, as INDEX=VALUE.
    #[arg(long = "branch-milnor", value_parser = parse_override)]
    pub branch_milnor: Vec<(usize, u64)>,
}

#[derive(Debug, Args)]
pub struct RenderInput {
    /// Polynomial expression whose diagram and support are drawn.
    #[arg(required_unless_present_any = ["germ", "diagram"], conflicts_with_all = ["germ", "diagram"])]
    pub expr: Option<String>,
    /// Germ-data file; its model diagram is drawn.
    #[arg(long, conflicts_with = "diagram")]
    pub germ: Option<PathBuf>,
    /// Diagram as a sum of terms, e.g. "{2\3} + {1\inf}".
    #[arg(long)]
    pub diagram: Option<String>,
}

fn parse_override(text: &str) -> Result<(usize, u64), String> {
    let (i, v) = text.split_once('=').ok_or("expected INDEX=VALUE")?;
    let i = i.trim().parse().map_err(|_| format!("bad branch index {i:?}"))?;
    let v = v.trim().parse().map_err(|_| format!("bad Milnor number {v:?}"))?;
    Ok((i, v))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl GlobalArgs {
    pub fn report_options(&self) -> ReportOptions {
        let oracle = match self.oracle {
            OracleArg::Resultant => Oracle::Resultant,
            OracleArg::Linear => Oracle::Linear,
            OracleArg::Both => Oracle::Both,
        };
        ReportOptions {
            oracle,
            degree_cap: self.degree_cap,
            seed: self.seed,
        }
    }

    pub fn semantics(&self) -> Semantics {
        if self.literal {
            Semantics::Literal
        } else {
            Semantics::Relaxed
        }
    }

    /// The report format, rejecting the figure formats.
    fn report_format(&self) -> Result<Format, CliError> {
        match self.format {
            None | Some(Format::Text) => Ok(Format::Text),
            Some(Format::Json) => Ok(Format::Json),
            Some(f) => Err(CliError::Input(format!(
                "--format {f:?} only applies to render; use text or json"
            ))),
        }
    }

    fn figure_format(&self) -> Result<Format, CliError> {
        match self.format {
            None | Some(Format::Ascii) => Ok(Format::Ascii),
            Some(Format::Svg) => Ok(Format::Svg),
            Some(f) => Err(CliError::Input(format!("render draws ascii or svg, not {f:?}"))),
        }
    }
}

pub fn read_to_string(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

pub fn load_germ(path: &Path) -> Result<GermData, CliError> {
    let text = read_to_string(path)?;
    let g = GermData::from_json(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    if let Err(diags) = g.validate() {
        let lines: Vec<String> = diags.iter().map(|d| format!("  {d}")).collect();
        return Err(CliError::Input(format!(
            "{}: invalid germ data\n{}",
            path.display(),
            lines.join("\n")
        )));
    }
    Ok(g)
}

fn overrides(input: &GermInput) -> BTreeMap<usize, u64> {
    input.branch_milnor.iter().copied().collect()
}

/// Runs a parsed command line and returns what goes to standard output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::AnalyzePoly(input) => {
            let text = match (&input.expr, &input.file) {
                (Some(e), _) => e.clone(),
                (None, Some(p)) => read_to_string(p)?,
                (None, None) => return Err(CliError::Input("no polynomial given".into())),
            };
            let r = commands::analyze_poly(&text, &g.report_options())?;
            report::emit(&r, g.report_format()?)
        }
        Command::AnalyzeGerm(input) => {
            let germ = load_germ(&input.file)?;
            let r = commands::analyze_germ(&germ, g.semantics(), &overrides(input));
            report::emit(&r, g.report_format()?)
        }
        Command::Model(input) => {
            let germ = load_germ(&input.file)?;
            let r = commands::model(&germ, g.semantics(), g.seed, &g.report_options(), &overrides(input))?;
            report::emit(&r, g.report_format()?)
        }
        Command::Render(input) => {
            let format = g.figure_format()?;
            let figure = match (&input.expr, &input.germ, &input.diagram) {
                (Some(e), _, _) => render::Figure::from_polynomial(e)?,
                (None, Some(p), _) => render::Figure::from_germ(&load_germ(p)?, g.semantics())?,
                (None, None, Some(d)) => render::Figure::from_diagram_text(d)?,
                _ => return Err(CliError::Input("nothing to render".into())),
            };
            Ok(match format {
                Format::Svg => figure.svg(),
                _ => figure.ascii(),
            })
        }
        Command::Crosscheck { germ: input, trials } => {
            let germ = load_germ(&input.file)?;
            let r = commands::crosscheck(
                &germ,
                g.semantics(),
                g.seed,
                *trials,
                &g.report_options(),
                &overrides(input),
                &input.file.display().to_string(),
            )?;
            let out = report::emit(&r, g.report_format()?)?;
            if r.pass {
                Ok(out)
            } else {
                Err(CliError::Internal(format!("crosscheck failed\n{out}")))
            }
        }
    }
}
