use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nkicon::{Axis, IconSpec64, Stadium64, SvgOptions};
use nkicon_cli::{
    classify_json, resolve_axis, run_classify, run_mesh, run_stadium_seam, run_survey, run_template, seam_csv,
    seam_json, survey_csv, to_json, CliError, CliResult, MeshFormat, SeamFormat, TemplateFormat,
};

#[derive(Parser)]
#[command(name = "nkicon", version, about = "Generalized sphericons: classify, mesh and unroll (N,k)-icons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count edges and surfaces and say whether the icon is a pita-form or D-form.
    Classify {
        #[command(flatten)]
        icon: IconArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Export a closed triangle mesh (STL or OBJ).
    Mesh {
        #[command(flatten)]
        icon: IconArgs,
        #[command(flatten)]
        size: SizeArgs,
        /// Azimuthal segments per full turn (even, >= 8).
        #[arg(long, default_value_t = 256)]
        segments: u32,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Unroll every surface into a flat template (SVG or JSON).
    Template {
        #[command(flatten)]
        icon: IconArgs,
        #[command(flatten)]
        size: SizeArgs,
        /// Leave out seam colours and labels.
        #[arg(long)]
        no_labels: bool,
        /// Outline stroke width in mm.
        #[arg(long, default_value_t = 0.25)]
        stroke: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Stitch pairing for a stadium: a pita-form seam, or with --offset a D-form
    /// seam against a second stadium.
    StadiumSeam {
        /// Length of the straight part (mm).
        #[arg(long)]
        h: f64,
        /// Cap radius (mm).
        #[arg(long)]
        r: f64,
        /// Arc length where a pita-form seam starts.
        #[arg(long, default_value_t = 0.0)]
        seam_start: f64,
        /// D-form: arc-length shift between the two boundaries.
        #[arg(long)]
        offset: Option<f64>,
        /// Second stadium for a D-form (defaults to a copy of the first).
        #[arg(long, requires = "offset")]
        h2: Option<f64>,
        #[arg(long, requires_all = ["offset", "h2"])]
        r2: Option<f64>,
        #[arg(long, default_value_t = 65)]
        samples: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Formula and traced feature counts for every canonical icon up to n-max.
    Survey {
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct IconArgs {
    /// Number of polygon sides.
    #[arg(long)]
    n: u32,
    /// Twist in steps of 2 pi / n.
    #[arg(long)]
    k: u32,
    /// Axis of revolution for even n.
    #[arg(long, value_enum)]
    axis: Option<AxisArg>,
}

#[derive(Args)]
struct SizeArgs {
    /// Polygon side length (mm).
    #[arg(long, conflicts_with = "r")]
    side: Option<f64>,
    /// Half the side length, the cap radius of odd and mm icons (mm).
    #[arg(long)]
    r: Option<f64>,
}

#[derive(Args)]
struct OutArgs {
    /// Output file; standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    Vv,
    Mm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Stl,
    Obj,
    Svg,
    Json,
    Csv,
}

impl IconArgs {
    fn axis(&self) -> CliResult<Axis> {
        let axis = self.axis.map(|a| match a {
            AxisArg::Vv => Axis::Vv,
            AxisArg::Mm => Axis::Mm,
        });
        resolve_axis(self.n, axis)
    }

    fn spec(&self, size: &SizeArgs, segments: u32) -> CliResult<IconSpec64> {
        let side = match (size.side, size.r) {
            (Some(s), _) => s,
            (None, Some(r)) => 2.0 * r,
            (None, None) => 20.0,
        };
        Ok(IconSpec64::new(self.n, self.k, self.axis()?, side, segments)?)
    }
}

impl OutArgs {
    fn format(&self, allowed: &[FormatArg]) -> CliResult<FormatArg> {
        let f = self.format.unwrap_or(allowed[0]);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            let name = f.to_possible_value().expect("no skipped variants").get_name().to_owned();
            Err(CliError::Usage(format!("--format {name} is not available for this command")))
        }
    }

    fn write(&self, bytes: &[u8]) -> CliResult<()> {
        match &self.out {
            Some(path) => fs::write(path, bytes)
                .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?,
            None => std::io::stdout().lock().write_all(bytes)?,
        }
        Ok(())
    }
}

fn warn(msg: &str) {
    eprintln!("warning: {msg}");
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Classify { icon, out } => {
            out.format(&[FormatArg::Json])?;
            let report = run_classify(icon.n, icon.k, icon.axis()?)?;
            out.write(classify_json(&report).as_bytes())
        }
        Command::Mesh { icon, size, segments, out } => {
            let format = match out.format(&[FormatArg::Stl, FormatArg::Obj])? {
                FormatArg::Obj => MeshFormat::Obj,
                _ => MeshFormat::Stl,
            };
            let result = run_mesh(&icon.spec(&size, segments)?, format)?;
            if let Some(w) = &result.warning {
                warn(w);
            }
            out.write(&result.bytes)?;
            // keep standard output clean when the mesh itself went there
            if out.out.is_some() {
                print!("{}", result.summary());
            } else {
                eprint!("{}", result.summary());
            }
            Ok(())
        }
        Command::Template { icon, size, no_labels, stroke, out } => {
            let format = match out.format(&[FormatArg::Svg, FormatArg::Json])? {
                FormatArg::Json => TemplateFormat::Json,
                _ => TemplateFormat::Svg,
            };
            let options = SvgOptions { stroke_width: stroke, labels: !no_labels, ..SvgOptions::default() };
            let result = run_template(&icon.spec(&size, 16)?, format, &options)?;
            if let Some(w) = &result.warning {
                warn(w);
            }
            out.write(result.text.as_bytes())
        }
        Command::StadiumSeam { h, r, seam_start, offset, h2, r2, samples, out } => {
            let format = match out.format(&[FormatArg::Csv, FormatArg::Json])? {
                FormatArg::Json => SeamFormat::Json,
                _ => SeamFormat::Csv,
            };
            let a = Stadium64::new(h, r)?;
            let b = match h2 {
                Some(h2) => Some(Stadium64::new(h2, r2.unwrap_or(r))?),
                None => None,
            };
            let seam = run_stadium_seam(&a, b.as_ref(), seam_start, offset, samples)?;
            if let Some(note) = seam.note {
                eprintln!("note: {note}");
            }
            match format {
                SeamFormat::Csv => out.write(&seam_csv(&seam)?),
                SeamFormat::Json => out.write(seam_json(&seam).as_bytes()),
            }
        }
        Command::Survey { n_max, out } => {
            let rows = run_survey(n_max)?;
            match out.format(&[FormatArg::Csv, FormatArg::Json])? {
                FormatArg::Json => out.write(to_json(&rows).as_bytes()),
                _ => out.write(&survey_csv(&rows)?),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
