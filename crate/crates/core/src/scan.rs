//! Table rows for nef partitions and the batch scan over a manifest.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hodge::{string_hodge, HodgeData};
use crate::nefpart::{enumerate_with, NefPartition};
use crate::polytope::io::parse_polytope;
use crate::polytope::{LatticePolytope, Side};
use crate::weights::{cy_polytope, Mode, WeightBlock};

pub const HEADER: &str =
    "input\tpartition\th11\th21\tminus_chi\tdelta_points\tdelta_vertices\tdual_points\tdual_vertices";

/// One output row: a partition with its Hodge pair and polytope counts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScanRecord {
    pub input: String,
    pub partition: String,
    pub hodge: Option<(i64, i64, i64)>,
    pub delta_points: usize,
    pub delta_vertices: usize,
    pub dual_points: usize,
    pub dual_vertices: usize,
}

impl ScanRecord {
    /// `(h11, h21, −χ, #Δ∩M, #Δ^v, #Δ*∩N, #Δ*^v)`.
    pub fn table_row(&self) -> Option<[i64; 7]> {
        let (a, b, c) = self.hodge?;
        Some([
            a,
            b,
            c,
            self.delta_points as i64,
            self.delta_vertices as i64,
            self.dual_points as i64,
            self.dual_vertices as i64,
        ])
    }
}

impl fmt::Display for ScanRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (h11, h21, mchi) = match self.hodge {
            Some((a, b, c)) => (a.to_string(), b.to_string(), c.to_string()),
            None => ("-".into(), "-".into(), "-".into()),
        };
        write!(
            f,
            "{}\t{}\t{h11}\t{h21}\t{mchi}\t{}\t{}\t{}\t{}",
            self.input,
            self.partition,
            self.delta_points,
            self.delta_vertices,
            self.dual_points,
            self.dual_vertices
        )
    }
}

/// `{0,1,2}{3,4}` for vertex index sets of `Δ*`.
pub fn format_partition(parts: &[Vec<usize>]) -> String {
    parts
        .iter()
        .map(|p| {
            let s: Vec<String> = p.iter().map(usize::to_string).collect();
            format!("{{{}}}", s.join(","))
        })
        .collect()
}

/// Rows for every nef partition of codimension `r` of the reflexive `delta`,
/// each with its Hodge matrix when `hodge` is set.
pub fn partition_records(
    input: &str,
    delta: &LatticePolytope,
    r: usize,
    hodge: bool,
    ordered: bool,
) -> Result<Vec<(ScanRecord, Option<HodgeData>)>> {
    if !delta.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let dual = delta.dual()?;
    let counts = (
        delta.count_lattice_points()?,
        delta.vertices().len(),
        dual.count_lattice_points()?,
        dual.vertices().len(),
    );
    let parts = enumerate_with(&dual, r, ordered)?;
    parts
        .par_iter()
        .map(|p| record(input, p, counts, hodge))
        .collect()
}

fn record(
    input: &str,
    p: &NefPartition,
    counts: (usize, usize, usize, usize),
    hodge: bool,
) -> Result<(ScanRecord, Option<HodgeData>)> {
    let data = if hodge {
        let h = string_hodge(p)?.hodge;
        if h.n == 3 && h.chi != 2 * (h.h[1][1] - h.h[2][1]) {
            return Err(Error::HodgeSymmetry("χ = 2(h11 − h21)".into()));
        }
        Some(h)
    } else {
        None
    };
    let rec = ScanRecord {
        input: input.to_string(),
        partition: format_partition(p.parts()),
        hodge: data.as_ref().and_then(|h| {
            let (a, b) = h.pair()?;
            Some((a, b, -h.chi))
        }),
        delta_points: counts.0,
        delta_vertices: counts.1,
        dual_points: counts.2,
        dual_vertices: counts.3,
    };
    Ok((rec, data))
}

/// A manifest line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ManifestEntry {
    Weights { file: PathBuf, mode: Mode, r: usize },
    Polytope { file: PathBuf, r: usize },
}

impl ManifestEntry {
    /// Label used in the `input` column.
    pub fn label(&self) -> String {
        let name = |p: &Path| p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        match self {
            ManifestEntry::Weights { file, mode, .. } => format!("{}:{mode}", name(file)),
            ManifestEntry::Polytope { file, .. } => name(file),
        }
    }

    pub fn codim(&self) -> usize {
        match self {
            ManifestEntry::Weights { r, .. } | ManifestEntry::Polytope { r, .. } => *r,
        }
    }

    /// The reflexive polytope `Δ` this entry describes.
    pub fn polytope(&self) -> Result<LatticePolytope> {
        match self {
            ManifestEntry::Weights { file, mode, .. } => {
                let block = WeightBlock::parse(&std::fs::read_to_string(file)?)?;
                cy_polytope(&block, *mode)
            }
            ManifestEntry::Polytope { file, .. } => parse_polytope(&std::fs::read_to_string(file)?, Side::M),
        }
    }
}

/// One entry per line: `W <weight-file> <mode> <r>` or `P <polytope-file> <r>`.
/// Relative paths are resolved against `base`. Malformed lines are returned
/// as errors in place so the batch can go on.
pub fn parse_manifest(text: &str, base: &Path) -> Vec<(usize, Result<ManifestEntry>)> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let ln = i + 1;
        let bad = |msg: &str| Error::Parse {
            line: ln,
            msg: msg.to_string(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_r = |s: &str| s.parse::<usize>().ok().filter(|&r| r > 0).ok_or_else(|| bad("codimension must be a positive integer"));
        let entry = match fields[..] {
            ["W", file, mode, r] => mode.parse::<Mode>().and_then(|mode| {
                Ok(ManifestEntry::Weights {
                    file: base.join(file),
                    mode,
                    r: parse_r(r)?,
                })
            }),
            ["P", file, r] => parse_r(r).map(|r| ManifestEntry::Polytope {
                file: base.join(file),
                r,
            }),
            _ => Err(bad("expected `W <file> <mode> <r>` or `P <file> <r>`")),
        };
        out.push((ln, entry));
    }
    out
}

#[derive(Debug, Clone, Default)]
pub struct ScanReport {
    /// Distinct rows per input, in manifest order.
    pub records: Vec<ScanRecord>,
    /// `(line, message)` for every entry that failed.
    pub failures: Vec<(usize, String)>,
    pub succeeded: usize,
}

impl ScanReport {
    /// Distinct `(h11, h21)` pairs, sorted.
    pub fn pairs(&self) -> Vec<(i64, i64)> {
        let set: BTreeSet<(i64, i64)> = self.records.iter().filter_map(|r| r.hodge.map(|(a, b, _)| (a, b))).collect();
        set.into_iter().collect()
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from(HEADER);
        s.push('\n');
        for r in &self.records {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    pub fn pairs_tsv(&self) -> String {
        let mut s = String::from("h11\th21\n");
        for (a, b) in self.pairs() {
            s.push_str(&format!("{a}\t{b}\n"));
        }
        s
    }
}

fn scan_entry(entry: &ManifestEntry) -> Result<Vec<ScanRecord>> {
    let delta = entry.polytope()?;
    let rows = partition_records(&entry.label(), &delta, entry.codim(), true, false)?;
    // one row per distinct geometry, keeping the first partition that gave it
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (rec, _) in rows {
        if seen.insert(rec.table_row()) {
            out.push(rec);
        }
    }
    Ok(out)
}

/// Run every manifest entry with Hodge numbers, using up to `jobs` threads.
pub fn run_scan(manifest: &str, base: &Path, jobs: usize) -> Result<ScanReport> {
    let entries = parse_manifest(manifest, base);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    let results: Vec<(usize, Result<Vec<ScanRecord>>)> = pool.install(|| {
        entries
            .par_iter()
            .map(|(ln, e)| {
                (
                    *ln,
                    match e {
                        Ok(entry) => scan_entry(entry),
                        Err(err) => Err(err.clone()),
                    },
                )
            })
            .collect()
    });
    let mut report = ScanReport::default();
    for (ln, res) in results {
        match res {
            Ok(rows) => {
                report.succeeded += 1;
                report.records.extend(rows);
            }
            Err(e) => report.failures.push((ln, e.to_string())),
        }
    }
    Ok(report)
}
