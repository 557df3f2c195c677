//! Thin command-line wrapper around the library: construct polygons,
//! verify certificates, reproduce the reference table and gap analysis,
//! and render SVG figures.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 solve failure,
//! 3 certificate failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use smallgon::families::{
    construct_bn, construct_h8, construct_regular, construct_reinhardt, construct_z32,
    construct_z64, fixture_instance, FamilyInstance, FixtureName,
};
use smallgon::geom::{upper_bound_perimeter, ToleranceConfig};
use smallgon::report::{
    gaps_report, gaps_text, parse_polygon_input, perimeter_table, render_csv, render_svg,
    table_csv, table_text, PolygonDocument, SvgOptions,
};
use smallgon::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_SOLVE: u8 = 2;
const EXIT_CERTIFICATE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "smallgon",
    about = "Convex equilateral small polygons with near-maximal perimeter",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a polygon family instance and print its perimeter.
    Construct(ConstructArgs),
    /// Check the certificates of a stored polygon (document or CSV).
    Verify(VerifyArgs),
    /// Recompute the reference perimeter table for n = 16 … 256.
    Table(TableArgs),
    /// Gap analysis: how close the improved 32- and 64-gons come to the
    /// upper bound.
    Gaps,
    /// Render a polygon as an SVG figure.
    Render(RenderArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Family: regular | reinhardt:<m> | bn | z32 | z64 | h8 | fixture:<name>
    family: String,
    /// Vertex count (required for regular, reinhardt and bn).
    n: Option<usize>,
    /// Write a polygon document (or CSV) here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format for --out.
    #[arg(long, value_enum, default_value_t = OutputFormat::Document)]
    format: OutputFormat,
    /// Certificate tolerance recorded in the document.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Polygon document or bare x,y CSV.
    input: PathBuf,
    /// Certificate tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
    /// Write the table here as well as printing it.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    /// Polygon document or CSV to render; alternative to --family.
    input: Option<PathBuf>,
    /// Construct this family instead of reading a file.
    #[arg(long)]
    family: Option<String>,
    /// Vertex count for --family.
    #[arg(long)]
    n: Option<usize>,
    /// Output SVG path.
    #[arg(long)]
    out: PathBuf,
    /// Draw the unit-distance edges as solid lines.
    #[arg(long)]
    show_diameter_graph: bool,
    /// Tolerance for detecting unit-distance pairs.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    /// Self-describing JSON document.
    Document,
    /// Bare x,y lines.
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints its own message; fold all parse problems into the
            // usage exit code.
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NoSignChange { .. }
        | Error::NonFiniteResidual(_)
        | Error::BracketExhausted { .. }
        | Error::InfeasibleAngle { .. } => EXIT_SOLVE,
        _ => EXIT_USAGE,
    }
}

fn tolerances(cert_tol: Option<f64>) -> Result<ToleranceConfig, Error> {
    match cert_tol {
        Some(t) => ToleranceConfig::with_cert_tol(t),
        None => Ok(ToleranceConfig::default()),
    }
}

fn construct_family(family: &str, n: Option<usize>) -> Result<FamilyInstance, Error> {
    let need_n = || n.ok_or_else(|| Error::Domain(format!("family `{family}` needs a vertex count")));
    let check_n = |expected: usize| -> Result<(), Error> {
        match n {
            None => Ok(()),
            Some(given) if given == expected => Ok(()),
            Some(given) => Err(Error::Domain(format!(
                "family `{family}` has n = {expected}, got {given}"
            ))),
        }
    };
    if let Some(m) = family.strip_prefix("reinhardt:") {
        let m: usize = m
            .parse()
            .map_err(|_| Error::Domain(format!("bad subdivision base in `{family}`")))?;
        return construct_reinhardt(m, need_n()?);
    }
    if let Some(name) = family.strip_prefix("fixture:") {
        let name: FixtureName = name.parse()?;
        let inst = fixture_instance(name);
        check_n(inst.n)?;
        return Ok(inst);
    }
    match family {
        "regular" => construct_regular(need_n()?),
        "bn" => construct_bn(need_n()?),
        "z32" => {
            check_n(32)?;
            construct_z32()
        }
        "z64" => {
            check_n(64)?;
            construct_z64()
        }
        "h8" => {
            check_n(8)?;
            construct_h8()
        }
        other => Err(Error::Domain(format!("unknown family `{other}`"))),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Construct(args) => {
            let tol = tolerances(args.tol)?;
            let inst = construct_family(&args.family, args.n)?;
            let ub = upper_bound_perimeter(inst.n)?;
            println!("family    = {}", inst.family);
            println!("n         = {}", inst.n);
            println!("perimeter = {:.10}", inst.perimeter);
            println!("ub_n      = {ub:.10}");
            println!("gap       = {:.4e}", ub - inst.perimeter);
            if let Some(path) = args.out {
                let text = match args.format {
                    OutputFormat::Document => PolygonDocument::from_instance(&inst, &tol).render(),
                    OutputFormat::Csv => render_csv(&inst.polygon),
                };
                fs::write(path, text)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let tol = tolerances(args.tol)?;
            let text = fs::read_to_string(&args.input)?;
            let (polygon, nominal_side) = parse_polygon_input(&text)?;
            let report = polygon.certify(nominal_side, &tol);
            println!(
                "small       = {}  (margin {:+.3e})",
                report.small.pass, report.small.margin
            );
            println!(
                "convex      = {}  (min sigma {:+.3e})",
                report.convex.pass, report.convex.margin
            );
            println!(
                "equilateral = {}  (max side deviation {:.3e})",
                report.equilateral.pass, report.equilateral.margin
            );
            println!(
                "symmetric   = {}  (max mirror mismatch {:.3e})",
                report.symmetric.pass, report.symmetric.margin
            );
            println!("diameter pairs: {}", report.diameter_pairs.len());
            if report.all_pass() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_CERTIFICATE))
            }
        }
        Command::Table(args) => {
            let rows = perimeter_table()?;
            let text = match args.format {
                TableFormat::Text => table_text(&rows),
                TableFormat::Csv => table_csv(&rows),
            };
            print!("{text}");
            if let Some(path) = args.out {
                fs::write(path, text)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gaps => {
            let report = gaps_report()?;
            print!("{}", gaps_text(&report));
            Ok(ExitCode::SUCCESS)
        }
        Command::Render(args) => {
            let tol = tolerances(args.tol)?;
            let polygon = match (&args.input, &args.family) {
                (Some(path), None) => {
                    let text = fs::read_to_string(path)?;
                    parse_polygon_input(&text)?.0
                }
                (None, Some(family)) => construct_family(family, args.n)?.polygon,
                _ => {
                    return Err(Error::Domain(
                        "render needs either an input file or --family, not both".into(),
                    ))
                }
            };
            let svg = render_svg(
                &polygon,
                &SvgOptions {
                    show_diameter_graph: args.show_diameter_graph,
                    tol,
                },
            );
            fs::write(&args.out, svg)?;
            println!("wrote {}", args.out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}
