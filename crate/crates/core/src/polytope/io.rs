//! Plain-text polytope format: a header line `<npoints> <dim>`, then one
//! point per line as whitespace-separated integers.

use std::fmt::Write as _;

use super::{LatticePolytope, Side};
use crate::error::{Error, Result};

/// Parse the point list; blank lines and `#` comments are skipped.
pub fn parse_points(text: &str) -> Result<(usize, Vec<Vec<i64>>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let nums = parse_ints(hl, header)?;
    let [npoints, dim] = nums[..] else {
        return Err(Error::Parse {
            line: hl,
            msg: "header must be `<npoints> <dim>`".into(),
        });
    };
    if npoints < 0 || dim < 0 {
        return Err(Error::Parse {
            line: hl,
            msg: "negative size in header".into(),
        });
    }
    let (npoints, dim) = (npoints as usize, dim as usize);
    let mut pts = Vec::with_capacity(npoints);
    for (ln, l) in lines.by_ref().take(npoints) {
        let p = parse_ints(ln, l)?;
        if p.len() != dim {
            return Err(Error::Parse {
                line: ln,
                msg: format!("expected {dim} coordinates, found {}", p.len()),
            });
        }
        pts.push(p);
    }
    if pts.len() != npoints {
        return Err(Error::Parse {
            line: hl,
            msg: format!("header announces {npoints} points, found {}", pts.len()),
        });
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::Parse {
            line: ln,
            msg: "trailing data after the point list".into(),
        });
    }
    Ok((dim, pts))
}

fn parse_ints(line: usize, s: &str) -> Result<Vec<i64>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<i64>().map_err(|_| Error::Parse {
                line,
                msg: format!("not an integer: `{t}`"),
            })
        })
        .collect()
}

/// Read a polytope as the convex hull of the listed points.
pub fn parse_polytope(text: &str, side: Side) -> Result<LatticePolytope> {
    let (dim, pts) = parse_points(text)?;
    if pts.is_empty() {
        return Err(Error::InvalidInput("polytope file lists no points".into()));
    }
    LatticePolytope::from_points(side, dim, &pts)
}

pub fn format_points(dim: usize, points: &[Vec<i64>]) -> String {
    let mut s = format!("{} {}\n", points.len(), dim);
    for p in points {
        let row: Vec<String> = p.iter().map(i64::to_string).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}

/// Write the vertices of a lattice polytope.
pub fn format_polytope(p: &LatticePolytope) -> Result<String> {
    let v = p
        .lattice_vertices()
        .ok_or_else(|| Error::InvalidInput("polytope has non-integral vertices".into()))?;
    Ok(format_points(p.dim(), &v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "4 2\n1 1\n1 -1\n-1 1\n-1 -1\n";
        let p = parse_polytope(text, Side::M).unwrap();
        let out = format_polytope(&p).unwrap();
        assert_eq!(parse_polytope(&out, Side::M).unwrap(), p);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_points("2 2\n1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_points("1 2\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_points("1 2\n1 1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_points(""), Err(Error::Parse { .. })));
    }
}
