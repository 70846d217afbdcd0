//! Exact solvers: r-dynamic chromatic number, r-dynamic list coloring,
//! f-choosability (exact at small scale, sampling beyond), and verification
//! of greedy coloring certificates.
//!
//! The core search works over a "distinctness graph" D: the host graph's
//! edges plus every pair of neighbors of a vertex w with deg(w) <= r (those
//! neighbors must all receive distinct colors). Pairwise conflicts are
//! enforced by forward checking on D; the counting constraint for vertices of
//! degree above r is enforced by tracking, per vertex, the set of colors seen
//! in its neighborhood and the number of uncolored neighbors, failing as soon
//! as seen + uncolored drops below min(r, deg).

use crate::graph::{Coloring, Graph};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Per-vertex lists of allowed colors, indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListAssignment {
    pub lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    pub fn uniform(n: usize, colors: &[usize]) -> ListAssignment {
        ListAssignment {
            lists: vec![colors.to_vec(); n],
        }
    }

    /// JSON object mapping vertex ids (as strings) to color arrays; the keys
    /// must be exactly 0..n-1.
    pub fn from_json(s: &str) -> Result<ListAssignment, SolverError> {
        let map: BTreeMap<String, Vec<usize>> =
            serde_json::from_str(s).map_err(|e| SolverError::BadLists(e.to_string()))?;
        let n = map.len();
        let mut lists = vec![None; n];
        for (k, v) in map {
            let idx: usize = k
                .parse()
                .map_err(|_| SolverError::BadLists(format!("bad vertex key {k:?}")))?;
            if idx >= n {
                return Err(SolverError::BadLists(format!(
                    "vertex {idx} out of range for {n} keys"
                )));
            }
            lists[idx] = Some(v);
        }
        Ok(ListAssignment {
            lists: lists.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn to_json(&self) -> String {
        let map: BTreeMap<String, &Vec<usize>> = self
            .lists
            .iter()
            .enumerate()
            .map(|(v, l)| (v.to_string(), l))
            .collect();
        serde_json::to_string(&map).unwrap()
    }
}

/// Required list length per vertex; all values at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemandFunction {
    pub values: Vec<usize>,
}

impl DemandFunction {
    pub fn new(values: Vec<usize>) -> Result<DemandFunction, SolverError> {
        if values.iter().any(|&f| f == 0) {
            return Err(SolverError::BadLists("demand values must be >= 1".into()));
        }
        Ok(DemandFunction { values })
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn from_json(s: &str) -> Result<DemandFunction, SolverError> {
        let map: BTreeMap<String, usize> =
            serde_json::from_str(s).map_err(|e| SolverError::BadLists(e.to_string()))?;
        let n = map.len();
        let mut values = vec![0; n];
        for (k, v) in map {
            let idx: usize = k
                .parse()
                .map_err(|_| SolverError::BadLists(format!("bad vertex key {k:?}")))?;
            if idx >= n {
                return Err(SolverError::BadLists(format!(
                    "vertex {idx} out of range for {n} keys"
                )));
            }
            values[idx] = v;
        }
        DemandFunction::new(values)
    }
}

/// A vertex ordering plus avoidance moves (early, late): the early vertex is
/// colored with a color outside the late vertex's list, refunding one of the
/// late vertex's list positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyCertificate {
    pub ordering: Vec<usize>,
    pub avoidance_moves: Vec<(usize, usize)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("r must be at least 1")]
    BadR,
    #[error("search budget exhausted; chromatic number is in {lower}..={upper}")]
    BudgetExceeded { lower: usize, upper: usize },
    #[error("more than 128 distinct colors are not supported")]
    TooManyColors,
    #[error("total demand {total} exceeds the exact-check threshold {limit}")]
    ThresholdExceeded { total: usize, limit: usize },
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("bad list/demand input: {0}")]
    BadLists(String),
}

pub const CHOOSABLE_EXACT_THRESHOLD: usize = 12;

// ---------------------------------------------------------------------------
// Core backtracking engine.

struct Engine {
    g_adj: Vec<Vec<usize>>,
    d_adj: Vec<Vec<usize>>,
    need: Vec<usize>,
    dom: Vec<u128>,
    color: Vec<Option<usize>>,
    seen: Vec<u128>,
    unc: Vec<usize>,
    uncolored: usize,
    nodes: u64,
    budget: u64,
    symmetry: bool,
}

struct BudgetHit;

/// G's edges plus all pairs of neighbors of each vertex of degree <= r.
fn distinctness_adj(g: &Graph, r: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut sets: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    for w in 0..n {
        if g.degree(w) <= r {
            let nb = g.neighbors(w);
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    sets[nb[i]].insert(nb[j]);
                    sets[nb[j]].insert(nb[i]);
                }
            }
        }
    }
    sets.into_iter().map(|s| s.into_iter().collect()).collect()
}

impl Engine {
    fn new(g: &Graph, r: usize, dom: Vec<u128>, budget: u64, symmetry: bool) -> Engine {
        let n = g.n();
        Engine {
            g_adj: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
            d_adj: distinctness_adj(g, r),
            need: (0..n).map(|v| r.min(g.degree(v))).collect(),
            dom,
            color: vec![None; n],
            seen: vec![0; n],
            unc: (0..n).map(|v| g.degree(v)).collect(),
            uncolored: n,
            nodes: 0,
            budget,
            symmetry,
        }
    }

    fn pick_vertex(&self) -> usize {
        let mut best = usize::MAX;
        let mut best_size = u32::MAX;
        for v in 0..self.color.len() {
            if self.color[v].is_none() {
                let size = self.dom[v].count_ones();
                if size < best_size {
                    best_size = size;
                    best = v;
                }
            }
        }
        best
    }

    fn search(&mut self, max_used: i64) -> Result<bool, BudgetHit> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(BudgetHit);
        }
        if self.uncolored == 0 {
            return Ok(true);
        }
        let u = self.pick_vertex();
        let mut mask = self.dom[u];
        while mask != 0 {
            let c = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            if self.symmetry && c as i64 > max_used + 1 {
                break; // unused colors are interchangeable
            }
            let mut seen_touched: Vec<usize> = Vec::new();
            let mut dom_touched: Vec<(usize, u128)> = Vec::new();
            let bit = 1u128 << c;
            self.color[u] = Some(c);
            self.uncolored -= 1;
            let mut ok = true;
            for i in 0..self.g_adj[u].len() {
                let v = self.g_adj[u][i];
                self.unc[v] -= 1;
                if self.seen[v] & bit == 0 {
                    self.seen[v] |= bit;
                    seen_touched.push(v);
                }
            }
            for &v in &self.g_adj[u] {
                if (self.seen[v].count_ones() as usize) + self.unc[v] < self.need[v] {
                    ok = false;
                    break;
                }
            }
            if ok {
                for i in 0..self.d_adj[u].len() {
                    let v = self.d_adj[u][i];
                    if self.color[v].is_none() && self.dom[v] & bit != 0 {
                        dom_touched.push((v, self.dom[v]));
                        self.dom[v] &= !bit;
                        if self.dom[v] == 0 {
                            ok = false;
                            break;
                        }
                    }
                }
            }
            if ok && self.search(max_used.max(c as i64))? {
                return Ok(true);
            }
            for (v, old) in dom_touched {
                self.dom[v] = old;
            }
            for v in seen_touched {
                self.seen[v] &= !bit;
            }
            for i in 0..self.g_adj[u].len() {
                let v = self.g_adj[u][i];
                self.unc[v] += 1;
            }
            self.color[u] = None;
            self.uncolored += 1;
        }
        Ok(false)
    }

    fn witness(&self) -> Coloring {
        let mut phi = Coloring::empty(self.color.len());
        for (v, c) in self.color.iter().enumerate() {
            if let Some(c) = *c {
                phi.set(v, c);
            }
        }
        phi
    }
}

// ---------------------------------------------------------------------------
// Chromatic number.

/// Greedy clique in the distinctness graph: a lower bound on chi_r^d because
/// all its vertices must receive pairwise distinct colors.
fn clique_lower_bound(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    if n == 0 || n > 128 {
        return 1.min(n);
    }
    let rows: Vec<u128> = (0..n)
        .map(|v| adj[v].iter().fold(0u128, |m, &u| m | (1 << u)))
        .collect();
    let mut best = 1;
    for start in 0..n {
        let mut clique = 1usize;
        let mut cand = rows[start];
        while cand != 0 {
            // candidate with most neighbors among remaining candidates
            let mut pick = usize::MAX;
            let mut pick_deg = -1i64;
            let mut m = cand;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let d = (rows[v] & cand).count_ones() as i64;
                if d > pick_deg {
                    pick_deg = d;
                    pick = v;
                }
            }
            clique += 1;
            cand &= rows[pick];
        }
        best = best.max(clique);
    }
    best
}

/// Greedy proper coloring of the square graph: every neighbor of every vertex
/// gets a distinct color there, so the count is a valid upper bound for any r.
fn square_greedy_upper_bound(g: &Graph) -> usize {
    let sq = g.square();
    let n = sq.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(sq.degree(v)));
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for &v in &order {
        let taken: BTreeSet<usize> = sq
            .neighbors(v)
            .iter()
            .filter(|&&u| color[u] != usize::MAX)
            .map(|&u| color[u])
            .collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    used.max(1)
}

/// Exact r-dynamic chromatic number with a witness coloring. The optional
/// budget caps the number of search nodes per candidate k; exceeding it
/// reports the bracketing bounds instead of an answer.
pub fn chi_r_dynamic(
    g: &Graph,
    r: usize,
    budget: Option<u64>,
) -> Result<(usize, Coloring), SolverError> {
    if g.n() == 0 {
        return Err(SolverError::EmptyGraph);
    }
    if r == 0 {
        return Err(SolverError::BadR);
    }
    let budget = budget.unwrap_or(u64::MAX);
    let d_adj = distinctness_adj(g, r);
    let lb = clique_lower_bound(&d_adj)
        .max((0..g.n()).map(|v| r.min(g.degree(v)) + 1).max().unwrap());
    let ub = square_greedy_upper_bound(g).max(lb);
    if ub > 128 {
        return Err(SolverError::TooManyColors);
    }
    for k in lb..=ub {
        let dom = if k == 128 { u128::MAX } else { (1u128 << k) - 1 };
        let mut eng = Engine::new(g, r, vec![dom; g.n()], budget, true);
        match eng.search(-1) {
            Ok(true) => {
                let phi = eng.witness();
                debug_assert_eq!(
                    crate::graph::is_valid_r_dynamic(g, r, &phi, None),
                    Ok(true)
                );
                return Ok((k, phi));
            }
            Ok(false) => continue,
            Err(BudgetHit) => return Err(SolverError::BudgetExceeded { lower: k, upper: ub }),
        }
    }
    unreachable!("greedy upper bound is always satisfiable");
}

// ---------------------------------------------------------------------------
// List coloring.

/// Searches for an r-dynamic coloring with phi(v) in lists[v]; the search is
/// complete, so `None` is a proof of unsatisfiability.
pub fn color_with_lists(
    g: &Graph,
    r: usize,
    lists: &ListAssignment,
) -> Result<Option<Coloring>, SolverError> {
    if r == 0 {
        return Err(SolverError::BadR);
    }
    if lists.lists.len() != g.n() {
        return Err(SolverError::BadLists(format!(
            "{} lists for {} vertices",
            lists.lists.len(),
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok(Some(Coloring::empty(0)));
    }
    // compact the color universe into ids 0..k
    let palette: BTreeSet<usize> = lists.lists.iter().flatten().copied().collect();
    if palette.len() > 128 {
        return Err(SolverError::TooManyColors);
    }
    let palette: Vec<usize> = palette.into_iter().collect();
    let id_of: BTreeMap<usize, usize> = palette.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dom = vec![0u128; g.n()];
    for (v, list) in lists.lists.iter().enumerate() {
        for c in list {
            dom[v] |= 1 << id_of[c];
        }
        if dom[v] == 0 {
            return Ok(None); // empty list: trivially unsatisfiable
        }
    }
    let mut eng = Engine::new(g, r, dom, u64::MAX, false);
    match eng.search(-1) {
        Ok(true) => {
            let mut phi = Coloring::empty(g.n());
            for (v, c) in eng.color.iter().enumerate() {
                phi.set(v, palette[c.unwrap()]);
            }
            debug_assert_eq!(
                crate::graph::is_valid_r_dynamic(g, r, &phi, Some(&lists.lists)),
                Ok(true)
            );
            Ok(Some(phi))
        }
        Ok(false) => Ok(None),
        Err(BudgetHit) => unreachable!("budget is unlimited"),
    }
}

// ---------------------------------------------------------------------------
// Choosability.

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Choosability {
    Choosable,
    NotChoosable { lists: ListAssignment },
}

/// Exhaustive f-choosability check over list assignments with |L(v)| = f(v)
/// drawn from a universe of sum(f) colors, enumerated up to color relabeling:
/// scanning vertices in id order, each list may reuse previously-introduced
/// colors or extend the palette by consecutive new ones. Every assignment is
/// isomorphic to one of this shape, and plain properness is what L-coloring
/// requires, so refutations found here are genuine.
pub fn is_f_choosable_exact(g: &Graph, f: &DemandFunction) -> Result<Choosability, SolverError> {
    if f.values.len() != g.n() {
        return Err(SolverError::BadLists(format!(
            "{} demands for {} vertices",
            f.values.len(),
            g.n()
        )));
    }
    let total = f.total();
    if total > CHOOSABLE_EXACT_THRESHOLD {
        return Err(SolverError::ThresholdExceeded {
            total,
            limit: CHOOSABLE_EXACT_THRESHOLD,
        });
    }
    let mut lists: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let bad = enumerate_lists(g, &f.values, 0, 0, &mut lists)?;
    Ok(match bad {
        Some(lists) => Choosability::NotChoosable {
            lists: ListAssignment { lists },
        },
        None => Choosability::Choosable,
    })
}

fn enumerate_lists(
    g: &Graph,
    f: &[usize],
    v: usize,
    palette: usize,
    lists: &mut Vec<Vec<usize>>,
) -> Result<Option<Vec<Vec<usize>>>, SolverError> {
    if v == g.n() {
        let la = ListAssignment {
            lists: lists.clone(),
        };
        return Ok(match color_with_lists(g, 1, &la)? {
            Some(_) => None,
            None => Some(lists.clone()),
        });
    }
    let want = f[v];
    // choose which previously-introduced colors to reuse, then pad with the
    // next consecutive fresh colors
    for reuse_mask in 0u32..(1 << palette) {
        let reused = reuse_mask.count_ones() as usize;
        if reused > want {
            continue;
        }
        let fresh = want - reused;
        let mut list: Vec<usize> = (0..palette).filter(|c| reuse_mask >> c & 1 == 1).collect();
        list.extend(palette..palette + fresh);
        lists[v] = list;
        if let Some(bad) = enumerate_lists(g, f, v + 1, palette + fresh, lists)? {
            return Ok(Some(bad));
        }
    }
    lists[v] = Vec::new();
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampleOutcome {
    NoCounterexampleFound,
    Counterexample { lists: ListAssignment },
}

/// Draws `trials` random list assignments with |L(v)| = f(v) from a universe
/// of sum(f) colors and reports the first one that is not colorable.
pub fn choosability_sample(
    g: &Graph,
    f: &DemandFunction,
    trials: u64,
    seed: u64,
) -> Result<SampleOutcome, SolverError> {
    if f.values.len() != g.n() {
        return Err(SolverError::BadLists(format!(
            "{} demands for {} vertices",
            f.values.len(),
            g.n()
        )));
    }
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let universe = f.total().max(1);
    for _ in 0..trials {
        let lists: Vec<Vec<usize>> = f
            .values
            .iter()
            .map(|&fv| {
                let mut l = rand::seq::index::sample(&mut rng, universe, fv.min(universe)).into_vec();
                l.sort_unstable();
                l
            })
            .collect();
        let la = ListAssignment { lists };
        if color_with_lists(g, 1, &la)?.is_none() {
            return Ok(SampleOutcome::Counterexample { lists: la });
        }
    }
    Ok(SampleOutcome::NoCounterexampleFound)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertCheck {
    Valid,
    FailsAt { vertex: usize },
}

/// Checks the counting argument behind a greedy coloring order: each vertex
/// keeps f(v) minus one per earlier-colored neighbor, plus one refund per
/// avoidance move targeting it from an adjacent earlier vertex. A move source
/// must retain enough slack to dodge all its targets' lists. Validity implies
/// f-choosability.
pub fn verify_greedy_certificate(
    g: &Graph,
    f: &DemandFunction,
    cert: &GreedyCertificate,
) -> Result<CertCheck, SolverError> {
    let n = g.n();
    if f.values.len() != n {
        return Err(SolverError::BadLists(format!(
            "{} demands for {} vertices",
            f.values.len(),
            n
        )));
    }
    if cert.ordering.len() != n {
        return Err(SolverError::MalformedCertificate(
            "ordering length differs from vertex count".into(),
        ));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in cert.ordering.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(SolverError::MalformedCertificate(
                "ordering is not a permutation of the vertices".into(),
            ));
        }
        pos[v] = i;
    }
    let mut seen_moves = BTreeSet::new();
    for &(e, u) in &cert.avoidance_moves {
        if e >= n || u >= n || e == u {
            return Err(SolverError::MalformedCertificate(format!(
                "bad avoidance move ({e}, {u})"
            )));
        }
        if pos[e] >= pos[u] {
            return Err(SolverError::MalformedCertificate(format!(
                "avoidance move ({e}, {u}) does not precede its target"
            )));
        }
        if !seen_moves.insert((e, u)) {
            return Err(SolverError::MalformedCertificate(format!(
                "duplicate avoidance move ({e}, {u})"
            )));
        }
    }
    for &u in &cert.ordering {
        let debits = g.neighbors(u).iter().filter(|&&v| pos[v] < pos[u]).count() as i64;
        let credits = cert
            .avoidance_moves
            .iter()
            .filter(|&&(e, t)| t == u && g.has_edge(e, u))
            .count() as i64;
        let slack_for_targets: i64 = cert
            .avoidance_moves
            .iter()
            .filter(|&&(e, _)| e == u)
            .map(|&(_, t)| f.values[t] as i64)
            .sum();
        let avail = f.values[u] as i64 - debits + credits;
        if avail < 1 + slack_for_targets {
            return Ok(CertCheck::FailsAt { vertex: u });
        }
    }
    Ok(CertCheck::Valid)
}

// ---------------------------------------------------------------------------
// Gadget fixtures for the choosability operations.

/// K4 minus one edge, demands (2, 3, 2, 2).
pub fn gadget_h1() -> (Graph, DemandFunction) {
    let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    (g, DemandFunction::new(vec![2, 3, 2, 2]).unwrap())
}

fn gadget_h2_edges() -> Vec<(usize, usize)> {
    // ids: v1=0 v2=1 v3=2 v4=3 x1=4 x2=5 x=6 w=7
    vec![
        (6, 0),
        (6, 1),
        (6, 2),
        (6, 3),
        (6, 4),
        (6, 5),
        (6, 7),
        (4, 0),
        (4, 1),
        (4, 7),
        (5, 2),
        (5, 3),
        (5, 7),
        (4, 5),
        (0, 1),
        (2, 3),
    ]
}

fn gadget_cert() -> GreedyCertificate {
    GreedyCertificate {
        ordering: vec![6, 3, 2, 5, 7, 4, 1, 0],
        avoidance_moves: vec![(6, 0)],
    }
}

/// Eight-vertex gadget with a dominating hub, demands
/// (3, 3, 3, 2, 4, 4, 5, 3), plus its greedy certificate.
pub fn gadget_h2() -> (Graph, DemandFunction, GreedyCertificate) {
    let g = Graph::from_edges(8, &gadget_h2_edges()).unwrap();
    (
        g,
        DemandFunction::new(vec![3, 3, 3, 2, 4, 4, 5, 3]).unwrap(),
        gadget_cert(),
    )
}

/// The previous gadget with one extra chord and demands
/// (4, 3, 3, 2, 4, 4, 5, 3), plus the same-shaped certificate.
pub fn gadget_h3() -> (Graph, DemandFunction, GreedyCertificate) {
    let mut edges = gadget_h2_edges();
    edges.push((0, 2));
    let g = Graph::from_edges(8, &edges).unwrap();
    (
        g,
        DemandFunction::new(vec![4, 3, 3, 2, 4, 4, 5, 3]).unwrap(),
        gadget_cert(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fig1_graph;
    use crate::graph::is_valid_r_dynamic;

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn chi_small_graphs() {
        let (chi, phi) = chi_r_dynamic(&fig1_graph(), 3, None).unwrap();
        assert_eq!(chi, 7);
        assert_eq!(is_valid_r_dynamic(&fig1_graph(), 3, &phi, None), Ok(true));

        assert_eq!(chi_r_dynamic(&cycle(5), 3, None).unwrap().0, 5);

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(chi_r_dynamic(&star, 3, None).unwrap().0, 4);

        // r = 1 is the ordinary chromatic number
        assert_eq!(chi_r_dynamic(&cycle(5), 1, None).unwrap().0, 3);
        assert_eq!(chi_r_dynamic(&cycle(6), 1, None).unwrap().0, 2);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(chi_r_dynamic(&k4, 1, None).unwrap().0, 4);
    }

    #[test]
    fn chi_monotone_in_r() {
        let g = fig1_graph();
        let mut prev = 0;
        for r in 1..=4 {
            let (chi, _) = chi_r_dynamic(&g, r, None).unwrap();
            assert!(chi >= prev);
            prev = chi;
        }
    }

    #[test]
    fn budget_is_reported() {
        match chi_r_dynamic(&fig1_graph(), 3, Some(1)) {
            Err(SolverError::BudgetExceeded { lower, upper }) => {
                assert!(lower <= 7 && 7 <= upper);
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn list_coloring_fig1() {
        let g = fig1_graph();
        let l7 = ListAssignment::uniform(7, &[1, 2, 3, 4, 5, 6, 7]);
        let phi = color_with_lists(&g, 3, &l7).unwrap().unwrap();
        assert_eq!(is_valid_r_dynamic(&g, 3, &phi, Some(&l7.lists)), Ok(true));

        let l6 = ListAssignment::uniform(7, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(color_with_lists(&g, 3, &l6).unwrap(), None);

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let same = ListAssignment::uniform(2, &[1]);
        assert_eq!(color_with_lists(&k2, 1, &same).unwrap(), None);
    }

    #[test]
    fn identical_lists_match_chi() {
        let g = fig1_graph();
        for r in 1..=3 {
            let (chi, _) = chi_r_dynamic(&g, r, None).unwrap();
            for k in chi.saturating_sub(2).max(1)..=chi + 1 {
                let lists = ListAssignment::uniform(7, &(0..k).collect::<Vec<_>>());
                let sat = color_with_lists(&g, r, &lists).unwrap().is_some();
                assert_eq!(sat, k >= chi, "r={r} k={k}");
            }
        }
    }

    #[test]
    fn choosability_h1() {
        let (h1, f1) = gadget_h1();
        assert_eq!(
            is_f_choosable_exact(&h1, &f1).unwrap(),
            Choosability::Choosable
        );

        let f_all2 = DemandFunction::new(vec![2, 2, 2, 2]).unwrap();
        match is_f_choosable_exact(&h1, &f_all2).unwrap() {
            Choosability::NotChoosable { lists } => {
                assert_eq!(color_with_lists(&h1, 1, &lists).unwrap(), None);
                for (v, l) in lists.lists.iter().enumerate() {
                    assert_eq!(l.len(), f_all2.values[v]);
                }
            }
            Choosability::Choosable => panic!("K4 minus an edge is not 2-choosable"),
        }

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let f = DemandFunction::new(vec![1, 2]).unwrap();
        assert_eq!(
            is_f_choosable_exact(&k2, &f).unwrap(),
            Choosability::Choosable
        );
    }

    #[test]
    fn choosability_threshold() {
        let (h2, f2, _) = gadget_h2();
        assert_eq!(
            is_f_choosable_exact(&h2, &f2),
            Err(SolverError::ThresholdExceeded {
                total: 27,
                limit: 12
            })
        );
    }

    #[test]
    fn sampling() {
        let (h2, f2, _) = gadget_h2();
        assert_eq!(
            choosability_sample(&h2, &f2, 1000, 1).unwrap(),
            SampleOutcome::NoCounterexampleFound
        );

        let (h1, _) = gadget_h1();
        let f_all2 = DemandFunction::new(vec![2, 2, 2, 2]).unwrap();
        match choosability_sample(&h1, &f_all2, 100_000, 1).unwrap() {
            SampleOutcome::Counterexample { lists } => {
                assert_eq!(color_with_lists(&h1, 1, &lists).unwrap(), None);
            }
            SampleOutcome::NoCounterexampleFound => {
                panic!("a bad assignment has positive probability")
            }
        }

        let edgeless = Graph::new(3);
        let f1 = DemandFunction::new(vec![1, 1, 1]).unwrap();
        assert_eq!(
            choosability_sample(&edgeless, &f1, 10, 0).unwrap(),
            SampleOutcome::NoCounterexampleFound
        );
    }

    #[test]
    fn greedy_certificates() {
        let (h2, f2, cert) = gadget_h2();
        assert_eq!(
            verify_greedy_certificate(&h2, &f2, &cert).unwrap(),
            CertCheck::Valid
        );

        let (h3, f3, cert) = gadget_h3();
        assert_eq!(
            verify_greedy_certificate(&h3, &f3, &cert).unwrap(),
            CertCheck::Valid
        );

        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let f = DemandFunction::new(vec![1, 1, 1]).unwrap();
        let cert = GreedyCertificate {
            ordering: vec![0, 1, 2],
            avoidance_moves: vec![],
        };
        assert_eq!(
            verify_greedy_certificate(&k3, &f, &cert).unwrap(),
            CertCheck::FailsAt { vertex: 1 }
        );
    }

    #[test]
    fn malformed_certificates() {
        let (h2, f2, _) = gadget_h2();
        let bad_order = GreedyCertificate {
            ordering: vec![0, 0, 1, 2, 3, 4, 5, 6],
            avoidance_moves: vec![],
        };
        assert!(matches!(
            verify_greedy_certificate(&h2, &f2, &bad_order),
            Err(SolverError::MalformedCertificate(_))
        ));
        let bad_move = GreedyCertificate {
            ordering: vec![6, 3, 2, 5, 7, 4, 1, 0],
            avoidance_moves: vec![(0, 6)],
        };
        assert!(matches!(
            verify_greedy_certificate(&h2, &f2, &bad_move),
            Err(SolverError::MalformedCertificate(_))
        ));
    }

    #[test]
    fn certificate_implies_exact_choosability() {
        // cross-check on instances small enough for the exact check
        let path3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let f = DemandFunction::new(vec![1, 2, 2]).unwrap();
        let cert = GreedyCertificate {
            ordering: vec![0, 1, 2],
            avoidance_moves: vec![],
        };
        assert_eq!(
            verify_greedy_certificate(&path3, &f, &cert).unwrap(),
            CertCheck::Valid
        );
        assert_eq!(
            is_f_choosable_exact(&path3, &f).unwrap(),
            Choosability::Choosable
        );
    }

    #[test]
    fn list_json_round_trip() {
        let la = ListAssignment {
            lists: vec![vec![1, 2], vec![3], vec![]],
        };
        let json = la.to_json();
        assert_eq!(ListAssignment::from_json(&json).unwrap(), la);
        let parsed = ListAssignment::from_json(r#"{"0":[5,6],"1":[7]}"#).unwrap();
        assert_eq!(parsed.lists, vec![vec![5, 6], vec![7]]);
        assert!(ListAssignment::from_json(r#"{"0":[1],"2":[2]}"#).is_err());
    }
}

