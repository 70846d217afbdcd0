//! Exact maximum average degree via maximum-density subgraph computation,
//! the potential function rho(A) = a|A| - b|E(G[A])|, and the closure check
//! for path augmentations.
//!
//! mad(G)/2 is the maximum of |E(G[A])|/|A| over nonempty A. A candidate
//! density p/q is tested with a flow network whose capacities are scaled by q
//! so every comparison is exact: min cut < m*n*q iff some A has density > p/q.
//! Starting from the whole-graph density, each round either certifies the
//! current candidate as the maximum or produces a strictly denser cut side,
//! and achievable densities form a finite set, so the loop terminates with
//! the exact answer.

use crate::graph::Graph;
use crate::rational::Rat;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MadError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("augmentation path length {0} is below the minimum of 5")]
    PathTooShort(usize),
    #[error("path endpoints must be distinct vertices of the host graph")]
    BadEndpoints,
    #[error("brute-force oracle limited to {limit} vertices, got {n}")]
    TooLargeForBruteForce { n: usize, limit: usize },
}

/// Weights of the potential rho(A) = a|A| - b|E(G[A])|.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PotentialParams {
    pub a: u64,
    pub b: u64,
}

impl PotentialParams {
    /// The tight instance: rho(A) >= 0 for all A iff mad <= 18/7.
    pub const MAD_18_7: PotentialParams = PotentialParams { a: 9, b: 7 };
}

/// rho(A) = a|A| - b|E(G[A])| for the given vertex set.
pub fn rho(g: &Graph, a_set: &[usize], params: PotentialParams) -> i64 {
    let (sub, _) = g.induced_subgraph(a_set);
    params.a as i64 * sub.n() as i64 - params.b as i64 * sub.edge_count() as i64
}

// ---------------------------------------------------------------------------
// Dinic max flow on i128 capacities.

struct Flow {
    // edges stored as (to, cap); reverse edge at index ^ 1
    to: Vec<usize>,
    cap: Vec<i128>,
    head: Vec<Vec<usize>>,
}

impl Flow {
    fn new(n: usize) -> Flow {
        Flow {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); n],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, cap_uv: i128, cap_vu: i128) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(cap_uv);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(cap_vu);
    }

    fn bfs(&self, s: usize, level: &mut [i32]) {
        level.fill(-1);
        level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && level[v] < 0 {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: i128, level: &[i32], iter: &mut [usize]) -> i128 {
        if u == t {
            return pushed;
        }
        while iter[u] < self.head[u].len() {
            let e = self.head[u][iter[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let d = self.dfs(v, t, pushed.min(self.cap[e]), level, iter);
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            iter[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i128 {
        let n = self.head.len();
        let mut flow = 0;
        let mut level = vec![-1; n];
        loop {
            self.bfs(s, &mut level);
            if level[t] < 0 {
                return flow;
            }
            let mut iter = vec![0; n];
            loop {
                let f = self.dfs(s, t, i128::MAX, &level, &mut iter);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }

    /// Vertices reachable from `s` in the residual network.
    fn min_cut_side(&self, s: usize) -> Vec<bool> {
        let n = self.head.len();
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

/// Tests whether some nonempty A has |E(G[A])|/|A| > p/q; if so returns it.
///
/// Network (capacities scaled by q): s->v with m*q, v->t with m*q + 2p -
/// q*deg(v), each edge uv with q both ways. A cut with source side A costs
/// q*m*n - 2|A|(q*density(A) - p) scaled, so the min cut drops below q*m*n
/// exactly when a denser-than-p/q set exists.
fn denser_than(g: &Graph, p: i128, q: i128) -> Option<Vec<usize>> {
    let n = g.n();
    let m = g.edge_count() as i128;
    if m == 0 {
        return None; // densities are all zero
    }
    let s = n;
    let t = n + 1;
    let mut net = Flow::new(n + 2);
    for v in 0..n {
        net.add_edge(s, v, m * q, 0);
        net.add_edge(v, t, m * q + 2 * p - q * g.degree(v) as i128, 0);
    }
    for (u, v) in g.edges() {
        net.add_edge(u, v, q, q);
    }
    let flow = net.max_flow(s, t);
    if flow < m * (n as i128) * q {
        let side = net.min_cut_side(s);
        let a: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
        debug_assert!(!a.is_empty());
        Some(a)
    } else {
        None
    }
}

fn density_of(g: &Graph, a: &[usize]) -> Rat {
    let (sub, _) = g.induced_subgraph(a);
    Rat::new(sub.edge_count() as i64, sub.n() as i64)
}

/// Exact mad(G) together with one maximizing vertex set.
pub fn mad_exact(g: &Graph) -> Result<(Rat, Vec<usize>), MadError> {
    if g.n() == 0 {
        return Err(MadError::EmptyGraph);
    }
    if g.edge_count() == 0 {
        return Ok((Rat::ZERO, vec![0]));
    }
    // Start from the whole vertex set; every round either certifies the
    // current density as maximal or strictly improves it.
    let mut best: Vec<usize> = (0..g.n()).collect();
    let mut d = density_of(g, &best);
    while let Some(a) = denser_than(g, d.numer() as i128, d.denom() as i128) {
        let nd = density_of(g, &a);
        debug_assert!(nd > d);
        d = nd;
        best = a;
    }
    Ok((Rat::from_int(2) * d, best))
}

/// Result of a mad bound query: either the bound holds, or a vertex set whose
/// average degree exceeds it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MadBound {
    AtMost,
    Exceeded { witness: Vec<usize> },
}

/// Decides mad(g) <= bound with a single exact cut test.
pub fn mad_at_most(g: &Graph, bound: Rat) -> MadBound {
    assert!(bound.is_positive(), "bound must be positive");
    if g.n() == 0 || g.edge_count() == 0 {
        return MadBound::AtMost;
    }
    // mad <= bound iff no set has edge density > bound/2.
    match denser_than(g, bound.numer() as i128, 2 * bound.denom() as i128) {
        None => MadBound::AtMost,
        Some(witness) => MadBound::Exceeded { witness },
    }
}

/// Adds an internally-new path of length `ell >= 5` between `x` and `y` and
/// reports whether the result still satisfies mad <= 18/7 (computed
/// independently via `mad_exact`, not assumed from the closure property).
pub fn check_path_augmentation(
    f: &Graph,
    x: usize,
    y: usize,
    ell: usize,
) -> Result<(Graph, bool), MadError> {
    if ell < 5 {
        return Err(MadError::PathTooShort(ell));
    }
    if x == y || x >= f.n() || y >= f.n() {
        return Err(MadError::BadEndpoints);
    }
    let n = f.n();
    let mut g = Graph::new(n + ell - 1);
    for (u, v) in f.edges() {
        g.add_edge(u, v).unwrap();
    }
    let mut prev = x;
    for i in 0..ell - 1 {
        g.add_edge(prev, n + i).unwrap();
        prev = n + i;
    }
    g.add_edge(prev, y).unwrap();
    let (mad, _) = mad_exact(&g)?;
    Ok((g, mad <= Rat::new(18, 7)))
}

/// Brute-force mad over all nonempty vertex subsets; the oracle used by
/// property tests. Guarded to 20 vertices.
pub fn mad_brute_force(g: &Graph) -> Result<(Rat, Vec<usize>), MadError> {
    const LIMIT: usize = 20;
    let n = g.n();
    if n == 0 {
        return Err(MadError::EmptyGraph);
    }
    if n > LIMIT {
        return Err(MadError::TooLargeForBruteForce { n, limit: LIMIT });
    }
    let edges = g.edges();
    let mut best = (Rat::ZERO, vec![0]);
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as i64;
        let inside = edges
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count() as i64;
        let avg = Rat::new(2 * inside, size);
        if avg > best.0 {
            best = (avg, (0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    Ok(best)
}
