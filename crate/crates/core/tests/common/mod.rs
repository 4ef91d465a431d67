#![allow(dead_code)]

use nefhodge::polytope::{LatticePolytope, Side};
use proptest::prelude::*;

pub fn square() -> LatticePolytope {
    let pts = vec![vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]];
    LatticePolytope::from_points(Side::M, 2, &pts).unwrap()
}

pub fn cross(d: usize) -> LatticePolytope {
    let mut pts = Vec::new();
    for i in 0..d {
        for s in [1, -1] {
            let mut p = vec![0; d];
            p[i] = s;
            pts.push(p);
        }
    }
    LatticePolytope::from_points(Side::M, d, &pts).unwrap()
}

/// `conv(±e_i, extra)` when it is reflexive.
pub fn reflexive_hull(d: usize, extra: &[Vec<i64>]) -> Option<LatticePolytope> {
    let mut pts: Vec<Vec<i64>> = extra.to_vec();
    for i in 0..d {
        for s in [1, -1] {
            let mut p = vec![0; d];
            p[i] = s;
            pts.push(p);
        }
    }
    let p = LatticePolytope::from_points(Side::M, d, &pts).ok()?;
    p.is_reflexive().then_some(p)
}

/// Reflexive polytopes with vertices in `{−1, 0, 1}^d`, `2 ≤ d ≤ 4`.
pub fn small_reflexive() -> impl Strategy<Value = LatticePolytope> {
    (2usize..=4)
        .prop_flat_map(|d| (Just(d), prop::collection::vec(prop::collection::vec(-1i64..=1, d), 0..8)))
        .prop_filter_map("not reflexive", |(d, extra)| reflexive_hull(d, &extra))
}
