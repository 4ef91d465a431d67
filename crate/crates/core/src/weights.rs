//! Newton polytopes of (combined) weight systems.
//!
//! A weight block stacks `s` scaling relations on `n` homogeneous
//! coordinates together with the multi-degrees of `r` equations. The
//! Calabi-Yau polytope lives in the kernel lattice `{m : W·m = 0} ≅ Z^(n−s)`
//! after translating by the all-ones exponent vector.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::matrix::{echelon_coordinates, kernel_basis, IntMatrix};
use crate::polytope::{LatticePolytope, Side};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightBlock {
    /// `s × n`, one row per scaling relation.
    pub weights: Vec<Vec<i64>>,
    /// `r × s`, one row per equation.
    pub degrees: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Newton polytope of the total degree `Σ_k D[k]`.
    Full,
    /// Minkowski sum of the per-equation Newton polytopes.
    Minkowski,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Mode::Full),
            "minkowski" => Ok(Mode::Minkowski),
            _ => Err(Error::InvalidInput(format!("unknown mode `{s}` (expected full|minkowski)"))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Full => "full",
            Mode::Minkowski => "minkowski",
        })
    }
}

impl WeightBlock {
    pub fn new(weights: Vec<Vec<i64>>, degrees: Vec<Vec<i64>>) -> Result<Self> {
        let s = weights.len();
        if s == 0 {
            return Err(Error::InvalidInput("no scaling relations".into()));
        }
        let n = weights[0].len();
        for row in &weights {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if row.iter().any(|&w| w < 0) {
                return Err(Error::InvalidInput("negative weight".into()));
            }
            if row.iter().all(|&w| w == 0) {
                return Err(Error::InvalidInput("zero scaling relation".into()));
            }
        }
        if (0..n).any(|j| weights.iter().all(|r| r[j] == 0)) {
            return Err(Error::InvalidInput("coordinate with all weights zero".into()));
        }
        if degrees.is_empty() {
            return Err(Error::InvalidInput("no equations".into()));
        }
        for row in &degrees {
            if row.len() != s {
                return Err(Error::DimensionMismatch {
                    expected: s,
                    got: row.len(),
                });
            }
            if row.iter().any(|&d| d < 0) {
                return Err(Error::InvalidInput("negative degree".into()));
            }
        }
        Ok(WeightBlock { weights, degrees })
    }

    /// Single weight system with one equation per entry of `degrees`.
    pub fn single(weights: Vec<i64>, degrees: &[i64]) -> Result<Self> {
        Self::new(vec![weights], degrees.iter().map(|&d| vec![d]).collect())
    }

    pub fn num_coords(&self) -> usize {
        self.weights[0].len()
    }

    pub fn num_relations(&self) -> usize {
        self.weights.len()
    }

    pub fn num_equations(&self) -> usize {
        self.degrees.len()
    }

    /// Dimension of the toric ambient space, `n − s`.
    pub fn dim(&self) -> usize {
        self.num_coords() - self.num_relations()
    }

    /// Per relation: the equation degrees add up to the sum of the weights.
    pub fn check_calabi_yau(&self) -> Result<()> {
        for (i, w) in self.weights.iter().enumerate() {
            let total: i64 = self.degrees.iter().map(|d| d[i]).sum();
            if total != w.iter().sum::<i64>() {
                return Err(Error::NotCalabiYau(i));
            }
        }
        Ok(())
    }

    fn total_degree(&self) -> Vec<i64> {
        (0..self.num_relations())
            .map(|i| self.degrees.iter().map(|d| d[i]).sum())
            .collect()
    }

    /// Text format: `s n r`, then `s` lines of `n` weights, then `r` lines of
    /// `s` degrees. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let mut next_row = |what: &str| -> Result<(usize, Vec<i64>)> {
            let (ln, l) = rows.next().ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("missing {what}"),
            })?;
            let v = l
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>().map_err(|_| Error::Parse {
                        line: ln,
                        msg: format!("not an integer: `{t}`"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((ln, v))
        };
        let (hl, header) = next_row("header")?;
        let [s, n, r] = header[..] else {
            return Err(Error::Parse {
                line: hl,
                msg: "header must be `s n r`".into(),
            });
        };
        if s <= 0 || n <= 0 || r <= 0 {
            return Err(Error::Parse {
                line: hl,
                msg: "sizes must be positive".into(),
            });
        }
        let mut weights = Vec::new();
        for _ in 0..s {
            let (ln, w) = next_row("weight row")?;
            if w.len() != n as usize {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("expected {n} weights"),
                });
            }
            weights.push(w);
        }
        let mut degrees = Vec::new();
        for _ in 0..r {
            let (ln, d) = next_row("degree row")?;
            if d.len() != s as usize {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("expected {s} degrees"),
                });
            }
            degrees.push(d);
        }
        if let Ok((ln, _)) = next_row("") {
            return Err(Error::Parse {
                line: ln,
                msg: "trailing data".into(),
            });
        }
        Self::new(weights, degrees)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} {} {}\n",
            self.num_relations(),
            self.num_coords(),
            self.num_equations()
        );
        for row in self.weights.iter().chain(&self.degrees) {
            let t: Vec<String> = row.iter().map(i64::to_string).collect();
            s.push_str(&t.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Hull of the exponent vectors `m ≥ 0` with `W·m = deg`, in `Z^n`.
fn newton_for_degree(block: &WeightBlock, deg: &[i64]) -> Result<LatticePolytope> {
    let n = block.num_coords();
    let ineqs: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            let mut h = vec![0; n + 1];
            h[j + 1] = 1;
            h
        })
        .collect();
    let eqs: Vec<Vec<i64>> = block
        .weights
        .iter()
        .zip(deg)
        .map(|(w, &d)| {
            let mut h = Vec::with_capacity(n + 1);
            h.push(-d);
            h.extend_from_slice(w);
            h
        })
        .collect();
    let region = LatticePolytope::from_inequalities(Side::M, n, &ineqs, &eqs)?;
    let pts = region.lattice_points()?;
    if pts.is_empty() {
        return Err(Error::EmptyNewton);
    }
    LatticePolytope::from_points(Side::M, n, &pts)
}

/// Newton polytope `Δ(D[k])` of equation `k`, in the exponent lattice `Z^n`.
pub fn newton_polytope(block: &WeightBlock, k: usize) -> Result<LatticePolytope> {
    let deg = block
        .degrees
        .get(k)
        .ok_or_else(|| Error::InvalidInput(format!("no equation {k}")))?;
    newton_for_degree(block, deg)
}

/// Deterministic lattice isomorphism `{m ∈ Z^n : W·m = 0} → Z^(n−s)`.
#[derive(Debug, Clone)]
pub struct Projection {
    basis: IntMatrix,
}

impl Projection {
    pub fn new(block: &WeightBlock) -> Self {
        Projection {
            basis: kernel_basis(&IntMatrix::from_rows(&block.weights)),
        }
    }

    /// Coordinates of `m − (1,…,1)`.
    pub fn project(&self, m: &[i64]) -> Result<Vec<i64>> {
        let x: Vec<BigInt> = m.iter().map(|&v| BigInt::from(v - 1)).collect();
        let c = echelon_coordinates(&self.basis, &x)
            .ok_or_else(|| Error::InvalidInput("exponent vector off the anticanonical degree".into()))?;
        c.iter()
            .map(|v| i64::try_from(v).map_err(|_| Error::Overflow))
            .collect()
    }

    /// Inverse of [`Projection::project`].
    pub fn lift(&self, y: &[i64]) -> Vec<i64> {
        let n = self.basis.cols();
        (0..n)
            .map(|j| {
                let s: BigInt = y
                    .iter()
                    .enumerate()
                    .map(|(i, &t)| BigInt::from(t) * &self.basis[(i, j)])
                    .sum();
                i64::try_from(s).expect("lift stays in range") + 1
            })
            .collect()
    }
}

/// Calabi-Yau polytope `Δ` in `Z^(n−s)` with the all-ones exponent at the origin.
pub fn cy_polytope(block: &WeightBlock, mode: Mode) -> Result<LatticePolytope> {
    block.check_calabi_yau()?;
    let n = block.num_coords();
    let poly = match mode {
        Mode::Full => newton_for_degree(block, &block.total_degree())?,
        Mode::Minkowski => {
            let mut acc = newton_polytope(block, 0)?;
            for k in 1..block.num_equations() {
                acc = acc.minkowski_sum(&newton_polytope(block, k)?)?;
            }
            acc
        }
    };
    debug_assert_eq!(poly.dim(), n);
    let proj = Projection::new(block);
    let verts = poly.lattice_vertices().expect("hull of lattice points");
    let projected: Vec<Vec<i64>> = verts.iter().map(|v| proj.project(v)).collect::<Result<_>>()?;
    let delta = LatticePolytope::from_points(Side::M, block.dim(), &projected)?;
    if !delta.has_interior_origin() {
        return Err(Error::OriginNotInterior);
    }
    Ok(delta)
}
