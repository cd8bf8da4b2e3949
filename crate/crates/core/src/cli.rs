//! Command-line front end. Exit codes: 0 success, 1 domain error, 2 malformed input.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::crystal::{bfs_component, is_extremal_bounded, Dir};
use crate::element::CrystalElement;
use crate::elementary::{Aff, Sign, SpinTensor};
use crate::error::CrystalError;
use crate::morphism::psi;
use crate::path::{construct_extremal, Path};
use crate::sampling::DEFAULT_SEED;
use crate::verify::{run_suite, SUITES};
use crate::weights::Color;

#[derive(Debug, Parser)]
#[command(name = "sl2-crystal", version, about = "Level-0 crystals of affine sl2: paths, walls, spins")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the extremal path p^(±)_depth of a component
    Construct {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        l: i64,
        #[arg(long)]
        n: usize,
        /// Finite domain types t1,...,t(n-1)
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        types: String,
        /// Domain parameters c1,...,c(n-1)
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        depth: i64,
    },
    /// Apply a word of operators, e.g. "f1 f0 e1", left to right
    Apply {
        #[arg(long)]
        ops: String,
        /// Exit with status 1 when the result is 0
        #[arg(long)]
        strict: bool,
        file: PathBuf,
    },
    /// Print the classification record
    Classify { file: PathBuf },
    /// Print the wall and domain tables
    Walls { file: PathBuf },
    /// Print the affinized spin image z^k|spins
    Psi { file: PathBuf },
    /// Decide extremality by characterization and by bounded Weyl search
    Extremal {
        file: PathBuf,
        #[arg(long)]
        weyl_depth: Option<usize>,
    },
    /// Export a bounded piece of a crystal graph
    Graph {
        /// Path file to start from
        #[arg(long, conflicts_with = "spins")]
        seed: Option<PathBuf>,
        /// Spin tensor seed such as "++" or "z^1|+-"
        #[arg(long, allow_hyphen_values = true)]
        spins: Option<String>,
        #[arg(long, default_value_t = 4)]
        radius: usize,
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Run a named invariant suite with a fixed seed
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

enum Failure {
    Domain(String),
    Input(String),
}

impl From<CrystalError> for Failure {
    fn from(e: CrystalError) -> Self {
        match e {
            CrystalError::Parse(_) => Failure::Input(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn read_path(file: &PathBuf) -> Result<Path, Failure> {
    let text = fs::read_to_string(file).map_err(|e| input(format!("{}: {e}", file.display())))?;
    Ok(text.parse::<Path>()?)
}

fn parse_list(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| input(format!("not an integer: {t:?}"))))
        .collect()
}

fn parse_ops(s: &str) -> Result<Vec<(Color, Dir)>, Failure> {
    s.split_whitespace()
        .map(|tok| {
            let mut it = tok.chars();
            let dir = match it.next() {
                Some('e') => Dir::Raise,
                Some('f') => Dir::Lower,
                _ => return Err(input(format!("bad operator {tok:?}"))),
            };
            let color = match it.as_str() {
                "0" => Color::Zero,
                "1" => Color::One,
                _ => return Err(input(format!("bad operator {tok:?}"))),
            };
            Ok((color, dir))
        })
        .collect()
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure::Domain(e.to_string());
    match cmd {
        Command::Construct { m, l, n, types, params, sign, depth } => {
            let sign = match sign.as_str() {
                "+" => Sign::Plus,
                "-" => Sign::Minus,
                _ => return Err(input(format!("sign must be + or -, got {sign:?}"))),
            };
            let types = parse_list(&types)?;
            let params = parse_list(&params)?;
            let p = construct_extremal(m, l, n, &types, &params, sign, depth)?;
            writeln!(out, "{}", p.to_json()).map_err(io)?;
        }
        Command::Apply { ops, strict, file } => {
            let word = parse_ops(&ops)?;
            let p = read_path(&file)?;
            match p.apply_word(&word) {
                Some(q) => writeln!(out, "{}", q.to_json()).map_err(io)?,
                None => {
                    writeln!(out, "0").map_err(io)?;
                    if strict {
                        return Ok(1);
                    }
                }
            }
        }
        Command::Classify { file } => {
            write!(out, "{}", read_path(&file)?.classify()).map_err(io)?;
        }
        Command::Walls { file } => {
            let p = read_path(&file)?;
            writeln!(out, "walls {}", p.wall_count()).map_err(io)?;
            writeln!(out, "position\ttype").map_err(io)?;
            for w in p.walls() {
                writeln!(out, "{}\t{}", w.position, w.sign).map_err(io)?;
            }
            let doms = p.domains();
            writeln!(out, "domains {}", doms.len()).map_err(io)?;
            writeln!(out, "index\tstart\tlength\ttype\tclass\tparam").map_err(io)?;
            for (j, d) in doms.iter().enumerate() {
                let dash = || "-".to_string();
                writeln!(
                    out,
                    "{j}\t{}\t{}\t{}\t{}\t{}",
                    d.start,
                    d.length.map_or_else(|| "inf".to_string(), |l| l.to_string()),
                    d.ty,
                    d.class.map_or_else(dash, |c| c.to_string()),
                    d.param.map_or_else(dash, |c| c.to_string()),
                )
                .map_err(io)?;
            }
        }
        Command::Psi { file } => {
            let p = read_path(&file)?;
            let spins = match psi(&p) {
                Ok(s) => s,
                Err(CrystalError::EmptySpin) => SpinTensor::default(),
                Err(e) => return Err(e.into()),
            };
            writeln!(out, "{}", Aff::new(p.degree(), spins)).map_err(io)?;
        }
        Command::Extremal { file, weyl_depth } => {
            let p = read_path(&file)?;
            let depth = weyl_depth.unwrap_or(2 * p.wall_count().max(1));
            let by_char = p.is_extremal_char()?;
            let by_search = is_extremal_bounded(&p, depth);
            writeln!(out, "characterization: {by_char}").map_err(io)?;
            writeln!(out, "bounded search (depth {depth}): {by_search}").map_err(io)?;
        }
        Command::Graph { seed, spins, radius, format } => {
            if format != "dot" {
                return Err(input(format!("unsupported format {format:?}")));
            }
            let start = match (seed, spins) {
                (Some(file), None) => CrystalElement::Path(read_path(&file)?),
                (None, Some(s)) if s.contains('|') => {
                    let a: Aff<SpinTensor> = s.parse()?;
                    CrystalElement::aff(a.zexp, CrystalElement::Spins(a.inner))
                }
                (None, Some(s)) => CrystalElement::Spins(s.parse()?),
                _ => return Err(input("graph needs exactly one of --seed or --spins")),
            };
            write!(out, "{}", bfs_component(&start, radius).to_dot()).map_err(io)?;
        }
        Command::Verify { suite, seed, trials } => {
            let Some(report) = run_suite(&suite, seed, trials) else {
                return Err(input(format!("unknown suite {suite:?}; known: {}", SUITES.join(", "))));
            };
            write!(out, "{report}").map_err(io)?;
            return Ok(if report.passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}
