//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a valid input gets a negative verdict
//! (not reflexive), 2 on malformed input or any other error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::polytope::io::{format_points, format_polytope, parse_polytope};
use crate::polytope::subpoly::{is_maximal, reflexive_subpolytopes};
use crate::polytope::Side;
use crate::scan::{partition_records, run_scan, HEADER};
use crate::weights::{cy_polytope, Mode, WeightBlock};

#[derive(Debug, Parser)]
#[command(name = "nefhodge", version, about = "Nef partitions and string-theoretic Hodge numbers of toric complete intersections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the vertices of the dual polytope.
    Dual { file: PathBuf },
    /// Count (or list) the lattice points of a polytope.
    Points {
        file: PathBuf,
        #[arg(long)]
        list: bool,
    },
    /// Decide whether a polytope is reflexive.
    Reflexive { file: PathBuf },
    /// Build the Calabi-Yau polytope of a weight block.
    Newton {
        file: PathBuf,
        #[arg(long, default_value = "full")]
        mode: Mode,
        /// Write the polytope here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate nef partitions of a reflexive polytope.
    Nef {
        file: PathBuf,
        #[arg(short, long, default_value_t = 2)]
        r: usize,
        /// Compute Hodge numbers for each partition.
        #[arg(long)]
        hodge: bool,
        /// Append the full Hodge matrix to each row (implies --hodge).
        #[arg(long)]
        matrix: bool,
        /// Keep every ordering of the parts.
        #[arg(long)]
        ordered: bool,
    },
    /// Find reflexive subpolytopes missing at most `max-drop` lattice points.
    Subpoly {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_drop: usize,
        /// Write each subpolytope to this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Run a manifest of weight blocks and polytopes with Hodge numbers.
    Scan {
        manifest: PathBuf,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the distinct (h11, h21) pairs here.
        #[arg(long)]
        plot: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotReflexive => 1,
        _ => 2,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Parse `args` (program name first) and run; returns the exit code.
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
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Dual { file } => {
            let p = parse_polytope(&read(&file)?, Side::M)?;
            let d = p.dual()?;
            match format_polytope(&d) {
                Ok(text) => out.write_all(text.as_bytes())?,
                Err(_) => {
                    writeln!(out, "{} {}", d.vertices().len(), d.dim())?;
                    for v in d.vertices() {
                        writeln!(out, "{v}")?;
                    }
                }
            }
            Ok(0)
        }
        Command::Points { file, list } => {
            let p = parse_polytope(&read(&file)?, Side::M)?;
            if list {
                out.write_all(format_points(p.dim(), &p.lattice_points()?).as_bytes())?;
            } else {
                writeln!(out, "points: {}", p.count_lattice_points()?)?;
            }
            Ok(0)
        }
        Command::Reflexive { file } => {
            let p = parse_polytope(&read(&file)?, Side::M)?;
            if p.is_reflexive() {
                writeln!(out, "reflexive: yes")?;
                Ok(0)
            } else {
                writeln!(out, "reflexive: no")?;
                Ok(1)
            }
        }
        Command::Newton { file, mode, out: dest } => {
            let block = WeightBlock::parse(&read(&file)?)?;
            let p = cy_polytope(&block, mode)?;
            let text = format_polytope(&p)?;
            match dest {
                Some(path) => write_file(&path, &text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(0)
        }
        Command::Nef {
            file,
            r,
            hodge,
            matrix,
            ordered,
        } => {
            let delta = parse_polytope(&read(&file)?, Side::M)?;
            let label = file.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let rows = partition_records(&label, &delta, r, hodge || matrix, ordered)?;
            if matrix {
                writeln!(out, "{HEADER}\tmatrix")?;
            } else {
                writeln!(out, "{HEADER}")?;
            }
            for (rec, data) in rows {
                match (matrix, data) {
                    (true, Some(h)) => {
                        let rows: Vec<String> = h
                            .h
                            .iter()
                            .map(|row| row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
                            .collect();
                        writeln!(out, "{rec}\t{}", rows.join("/"))?;
                    }
                    _ => writeln!(out, "{rec}")?,
                }
            }
            Ok(0)
        }
        Command::Subpoly { file, max_drop, out_dir } => {
            let p = parse_polytope(&read(&file)?, Side::M)?;
            let subs = reflexive_subpolytopes(&p, max_drop)?;
            writeln!(out, "index\tpoints\tvertices\tdropped\tmaximal")?;
            for (i, s) in subs.iter().enumerate() {
                writeln!(
                    out,
                    "{i}\t{}\t{}\t{}\t{}",
                    s.points,
                    s.polytope.vertices().len(),
                    s.dropped.len(),
                    if is_maximal(&subs, i) { "yes" } else { "no" }
                )?;
                if let Some(dir) = &out_dir {
                    std::fs::create_dir_all(dir)?;
                    write_file(&dir.join(format!("sub{i}.txt")), &format_polytope(&s.polytope)?)?;
                }
            }
            writeln!(err, "found {} reflexive subpolytopes", subs.len())?;
            Ok(0)
        }
        Command::Scan {
            manifest,
            out: dest,
            plot,
            jobs,
        } => {
            let text = read(&manifest)?;
            let base = manifest.parent().unwrap_or(Path::new("."));
            let report = run_scan(&text, base, jobs)?;
            for (ln, msg) in &report.failures {
                writeln!(err, "{}:{ln}: {msg}", manifest.display())?;
            }
            match dest {
                Some(path) => write_file(&path, &report.to_tsv())?,
                None => out.write_all(report.to_tsv().as_bytes())?,
            }
            if let Some(path) = plot {
                write_file(&path, &report.pairs_tsv())?;
            }
            Ok(if report.succeeded == 0 { 2 } else { 0 })
        }
    }
}
