//! `geomgrid`: lettericity, grid class membership and geometric realizations
//! from the command line.
//!
//! Exit status is 0 on success, 1 when the answer is negative (not a member,
//! a failed run) and 2 when the input cannot be read.

mod render;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use geomgrid::geometry::{geom_witness, local_orders};
use geomgrid::letters::minimal_lettering;
use geomgrid::pipeline::{class_experiment, geometrize};
use geomgrid::{GridMatrix, GriddedPermutation, Permutation, SimpleGraph};

use render::{RenderSpec, Target};

#[derive(Parser)]
#[command(name = "geomgrid", version, about = "Geometric grid classes and lettericity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lettericity of a graph file, with a witness lettering.
    Lettericity { graph: PathBuf },
    /// Inversion graph of a permutation, in graph file format.
    Invgraph {
        #[arg(long)]
        perm: String,
    },
    /// Whether a permutation lies in the monotone grid class of a matrix.
    GridCheck {
        #[arg(long)]
        perm: String,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Whether a permutation lies in the geometric grid class of a matrix.
    GeomCheck {
        #[arg(long)]
        perm: String,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[command(flatten)]
        svg: SvgArgs,
    },
    /// Builds a geometric gridding from a monotone one and a lettering.
    Geometrize {
        #[arg(long)]
        perm: String,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        #[command(flatten)]
        svg: SvgArgs,
    },
    /// Runs the construction on every small permutation of a grid class.
    Experiment {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        letters: usize,
        /// Also compare against the brute-force membership oracle.
        #[arg(long)]
        verify: bool,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draws a matrix, a realization, a gridding or a Hasse diagram.
    Render {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        perm: Option<String>,
        #[arg(long)]
        no_labels: bool,
        #[command(flatten)]
        svg: SvgArgs,
    },
}

#[derive(clap::Args)]
struct SvgArgs {
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long, default_value_t = 60)]
    scale: u32,
}

enum Failure {
    Negative(String),
    Input(String),
}

type Outcome = Result<String, Failure>;

fn input(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

/// File contents if `arg` names a file, otherwise `arg` itself.
fn text_of(arg: &str) -> Result<String, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| input(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn read_perm(arg: &str) -> Result<Permutation, Failure> {
    text_of(arg)?.parse().map_err(|e| input(format!("permutation {arg:?}: {e}")))
}

/// A matrix file, or inline rows separated by `/` (top row first).
fn read_matrix(arg: &str) -> Result<GridMatrix, Failure> {
    let text = text_of(arg)?.replace('/', "\n");
    text.parse().map_err(|e| input(format!("matrix {arg:?}: {e}")))
}

fn spec(target: Target, svg: &SvgArgs, labels: bool) -> Result<RenderSpec, Failure> {
    RenderSpec::new(target, svg.scale, labels).ok_or_else(|| input("--scale must be positive"))
}

fn write_svg(path: &Option<PathBuf>, doc: String) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, doc).map_err(|e| input(format!("{}: {e}", p.display()))),
        None => Ok(()),
    }
}

fn gridding_text(gp: &GriddedPermutation) -> String {
    let join = |d: &[usize]| d.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    format!(
        "matrix:\n{}column divisions: {}\nrow divisions: {}\n",
        gp.matrix().to_text(),
        join(gp.col_divs()),
        join(gp.row_divs())
    )
}

fn lettericity_cmd(graph: &Path) -> Outcome {
    let text = std::fs::read_to_string(graph).map_err(|e| input(format!("{}: {e}", graph.display())))?;
    let g: SimpleGraph = text.parse().map_err(|e| input(format!("{}: {e}", graph.display())))?;
    let lz = minimal_lettering(&g);
    Ok(format!("{}\n{}", lz.alphabet.len(), lz.to_text()))
}

fn grid_check(perm: &str, matrix: &str) -> Outcome {
    let pi = read_perm(perm)?;
    let m = read_matrix(matrix)?;
    match m.find_gridding(&pi) {
        Some(gp) => Ok(format!("member\n{}", gridding_text(&gp))),
        None => Err(Failure::Negative(format!("{pi} is NOT a member of Grid(M)"))),
    }
}

fn geom_check(perm: &str, matrix: &str, svg: &SvgArgs) -> Outcome {
    let pi = read_perm(perm)?;
    let m = read_matrix(matrix)?;
    let spec = spec(Target::Drawing, svg, true)?;
    let w = geom_witness(&pi, &m).ok_or_else(|| Failure::Negative(format!("{pi} is NOT a member of Geom(M)")))?;
    write_svg(&svg.svg, render::drawing(&spec, &w.signs, &w.realization))?;
    Ok(format!("member\n{}{}", gridding_text(&w.gridding), w.realization.to_text()))
}

fn geometrize_cmd(perm: &str, matrix: &str, k_max: usize, svg: &SvgArgs) -> Outcome {
    let pi = read_perm(perm)?;
    let m = read_matrix(matrix)?;
    let spec = spec(Target::Drawing, svg, true)?;
    let run = geometrize(&pi, &m, k_max).map_err(|e| Failure::Negative(format!("{pi}: {e}")))?;
    write_svg(&svg.svg, render::drawing(&spec, &run.signs, &run.realization))?;
    let mut s = String::new();
    let _ = writeln!(s, "letters: {}", run.letters_used());
    let _ = writeln!(s, "contracted: {}", run.contracted.perm());
    let signs = |v: &[i8]| v.iter().map(|x| if *x == 1 { "+" } else { "-" }).collect::<String>();
    let _ = writeln!(s, "column signs: {}", signs(run.signs.col_signs()));
    let _ = writeln!(s, "row signs: {}", signs(run.signs.row_signs()));
    s.push_str(&gridding_text(&run.gridding));
    s.push_str(&run.realization.to_text());
    Ok(s)
}

fn experiment(matrix: &str, n_max: usize, letters: usize, verify: bool, out: &Option<PathBuf>) -> Outcome {
    let m = read_matrix(matrix)?;
    let report = class_experiment(n_max, &m, letters, verify);
    let tsv = report.to_tsv();
    let body = match out {
        Some(p) => {
            std::fs::write(p, &tsv).map_err(|e| input(format!("{}: {e}", p.display())))?;
            report.summary()
        }
        None => tsv,
    };
    if report.all_passed() {
        Ok(body)
    } else {
        Err(Failure::Negative(body))
    }
}

fn render_cmd(target: Target, matrix: &str, perm: &Option<String>, labels: bool, svg: &SvgArgs) -> Outcome {
    let m = read_matrix(matrix)?;
    let spec = spec(target, svg, labels)?;
    let need_perm = || -> Result<Permutation, Failure> {
        read_perm(perm.as_deref().ok_or_else(|| input(format!("{target:?} needs --perm")))?)
    };
    let doc = match target {
        Target::Figure => render::figure(&spec, &m),
        Target::Gridding => {
            let pi = need_perm()?;
            let gp = m.find_gridding(&pi).ok_or_else(|| Failure::Negative(format!("{pi} is NOT a member of Grid(M)")))?;
            render::gridding(&spec, &gp)
        }
        Target::Drawing | Target::Hasse => {
            let pi = need_perm()?;
            let w = geom_witness(&pi, &m).ok_or_else(|| Failure::Negative(format!("{pi} is NOT a member of Geom(M)")))?;
            if target == Target::Drawing {
                render::drawing(&spec, &w.signs, &w.realization)
            } else {
                let orders = local_orders(&w.gridding, &w.signs).map_err(input)?;
                render::hasse(&spec, &orders).expect("a realized gridding has consistent orders")
            }
        }
    };
    match &svg.svg {
        Some(_) => {
            write_svg(&svg.svg, doc)?;
            Ok(String::new())
        }
        None => Ok(doc),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Lettericity { graph } => lettericity_cmd(graph),
        Command::Invgraph { perm } => read_perm(perm).map(|pi| pi.inversion_graph().to_text()),
        Command::GridCheck { perm, matrix } => grid_check(perm, matrix),
        Command::GeomCheck { perm, matrix, svg } => geom_check(perm, matrix, svg),
        Command::Geometrize { perm, matrix, k_max, svg } => geometrize_cmd(perm, matrix, *k_max, svg),
        Command::Experiment { matrix, n_max, letters, verify, out } => {
            experiment(matrix, *n_max, *letters, *verify, out)
        }
        Command::Render { target, matrix, perm, no_labels, svg } => {
            render_cmd(*target, matrix, perm, !no_labels, svg)
        }
    };
    match outcome {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Negative(s)) => {
            print!("{s}");
            if !s.ends_with('\n') {
                println!();
            }
            ExitCode::from(1)
        }
        Err(Failure::Input(s)) => {
            eprintln!("error: {s}");
            ExitCode::from(2)
        }
    }
}
