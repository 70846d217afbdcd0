//! Named tight examples, the path-joining construction for large tight
//! families, and seeded random graphs with a guaranteed mad bound.

use crate::graph::Graph;
use crate::mad::{mad_at_most, MadBound};
use crate::rational::Rat;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("path length {got} is below the minimum {min}")]
    PathTooShort { got: usize, min: usize },
    #[error("invalid join specification: {0}")]
    InvalidSpec(String),
}

/// The 7-vertex tight example: mad = 18/7, square is K7, three 2-vertices.
pub fn fig1_graph() -> Graph {
    Graph::from_edges(
        7,
        &[
            (0, 1),
            (0, 3),
            (0, 5),
            (1, 2),
            (2, 4),
            (2, 6),
            (3, 4),
            (4, 6),
            (5, 6),
        ],
    )
    .unwrap()
}

/// Petersen graph as the Kneser graph K(5,2): vertices are the 2-subsets of
/// {1..5} in lexicographic order, adjacent when disjoint.
pub fn petersen() -> Graph {
    let mut subsets = Vec::new();
    for a in 1..=5u8 {
        for b in a + 1..=5 {
            subsets.push((a, b));
        }
    }
    let mut g = Graph::new(10);
    for i in 0..10 {
        for j in i + 1..10 {
            let (a, b) = subsets[i];
            let (c, d) = subsets[j];
            if a != c && a != d && b != c && b != d {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// Petersen with its lexicographically first edge deleted.
pub fn petersen_minus_edge() -> Graph {
    let mut g = petersen();
    let (u, v) = g.edges()[0];
    g.remove_edge(u, v);
    g
}

/// Two disjoint Petersen copies joined by a single path of length `ell >= 3`
/// between vertex 0 of each copy.
pub fn double_petersen_path(ell: usize) -> Result<Graph, GenError> {
    if ell < 3 {
        return Err(GenError::PathTooShort { got: ell, min: 3 });
    }
    let p = petersen();
    let spec = JoinSpec {
        paths: vec![(0, 0, ell)],
        min_len: 3,
    };
    join_with_paths(&p, &p, &spec)
}

/// Paths to add between a graph H and a disjoint copy of H': each triple is
/// (endpoint in H, endpoint in H', path length), all paths internally
/// disjoint and of length at least `min_len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinSpec {
    pub paths: Vec<(usize, usize, usize)>,
    pub min_len: usize,
}

impl JoinSpec {
    /// Family with mad <= 18/7 preserved: paths of length >= 5.
    pub fn family_18_7(paths: Vec<(usize, usize, usize)>) -> JoinSpec {
        JoinSpec { paths, min_len: 5 }
    }

    /// Family targeting mad = 14/5: paths of length >= 4.
    pub fn family_14_5(paths: Vec<(usize, usize, usize)>) -> JoinSpec {
        JoinSpec { paths, min_len: 4 }
    }

    /// Family targeting mad = 3: paths of length >= 3.
    pub fn family_3(paths: Vec<(usize, usize, usize)>) -> JoinSpec {
        JoinSpec { paths, min_len: 3 }
    }
}

/// Disjoint union of `h` and `h2` plus the internally-disjoint paths given by
/// `spec`. Vertices of `h` keep their ids, `h2` is shifted by h.n(), and path
/// interiors are appended in spec order.
pub fn join_with_paths(h: &Graph, h2: &Graph, spec: &JoinSpec) -> Result<Graph, GenError> {
    for &(u, v, len) in &spec.paths {
        if u >= h.n() || v >= h2.n() {
            return Err(GenError::InvalidSpec(format!(
                "endpoint ({u}, {v}) out of range"
            )));
        }
        if len < spec.min_len {
            return Err(GenError::PathTooShort {
                got: len,
                min: spec.min_len,
            });
        }
    }
    let shift = h.n();
    let interior: usize = spec.paths.iter().map(|&(_, _, len)| len - 1).sum();
    let mut g = Graph::new(shift + h2.n() + interior);
    for (u, v) in h.edges() {
        g.add_edge(u, v).unwrap();
    }
    for (u, v) in h2.edges() {
        g.add_edge(u + shift, v + shift).unwrap();
    }
    let mut next = shift + h2.n();
    for &(u, v, len) in &spec.paths {
        let mut prev = u;
        for _ in 0..len - 1 {
            g.add_edge(prev, next)
                .map_err(|e| GenError::InvalidSpec(e.to_string()))?;
            prev = next;
            next += 1;
        }
        g.add_edge(prev, v + shift)
            .map_err(|e| GenError::InvalidSpec(e.to_string()))?;
    }
    Ok(g)
}

/// Connected graph on at most `n` vertices with mad strictly below `bound`,
/// deterministic per seed. Grows a random tree, then attempts random extra
/// edges, rolling back any addition whose exact mad reaches the bound.
pub fn random_graph_mad_below(n: usize, bound: Rat, seed: u64) -> Graph {
    assert!(n >= 1);
    assert!(bound.is_positive());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    if n == 1 {
        return g;
    }
    // Random tree: attach each vertex to a uniform earlier one. A tree on
    // k vertices has average degree 2(k-1)/k < 2, so this respects any
    // bound > 2; for smaller bounds fall back to fewer vertices.
    if bound > Rat::from_int(2) || n == 2 {
        for v in 1..n {
            let u = rng.gen_range(0..v);
            g.add_edge(u, v).unwrap();
        }
    } else {
        // bound <= 2: a path on k vertices has mad 2(k-1)/k < bound iff
        // k < 2/(2 - bound) ... just use the largest path that fits.
        let mut k = 2;
        while k < n {
            if Rat::new(2 * (k as i64), (k + 1) as i64) < bound {
                k += 1;
            } else {
                break;
            }
        }
        g = Graph::new(k);
        for v in 1..k {
            g.add_edge(v - 1, v).unwrap();
        }
    }
    let n = g.n();
    let tries = 3 * n;
    // strict: mad < bound iff not (mad >= bound) iff no set with density
    // >= bound/2; test via mad_at_most against bound after each addition
    // and additionally reject equality with mad_exact when at_most holds.
    for _ in 0..tries {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || g.has_edge(u, v) {
            continue;
        }
        g.add_edge(u, v).unwrap();
        let keep = match mad_at_most(&g, bound) {
            MadBound::Exceeded { .. } => false,
            MadBound::AtMost => crate::mad::mad_exact(&g).unwrap().0 < bound,
        };
        if !keep {
            g.remove_edge(u, v);
        }
    }
    g
}
