//! Reducible-configuration matching. Each rule set (3, 4, 5) has an ordered
//! list of local patterns; `find_config_thm*` scans them in priority order and
//! returns the first match with a labeled witness and a reduction action.

use crate::graph::{classify_w, Graph, WClass};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// How to shrink the graph once a configuration is found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Action {
    RemoveVertices(Vec<usize>),
    RemoveEdge(usize, usize),
}

/// The configuration kinds, across all three rule sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ConfigKind {
    /// A vertex of degree at most one.
    Pendant,
    /// Two adjacent vertices of degree at most two.
    AdjacentTwoVertices,
    /// An adjacent pair with a common 2-vertex neighbor.
    AdjacentSharedTwoNeighbor,
    /// A W2/W3 vertex with two 2-neighbors whose far endpoints coincide.
    DoubledWeakPath,
    /// The seven-label induced pattern (variant a).
    InducedPatternA,
    /// The twelve-label induced pattern (variant b).
    InducedPatternB,
    /// Two adjacent W2 vertices.
    AdjacentW2Pair,
    /// A W3 vertex with a weak neighbor of degree at least four.
    W3HighDegreeWeakNeighbor,
    /// A W3 vertex whose degree-3 weak neighbor has a second 2-neighbor.
    W3WeakNeighborExtraTwoNeighbor,
    /// A W1 vertex with two W2 neighbors.
    W1WithTwoW2Neighbors,
    /// A 3-vertex with a W1 neighbor, a W2 neighbor, and a W3 weak neighbor.
    W1W2W3Junction,
    /// A k-vertex with at least k-1 2-neighbors.
    KVertexExcessTwoNeighbors { k: usize },
    /// Two adjacent W1 vertices.
    AdjacentW1Pair,
    /// A 3-vertex whose three neighbors are all in W1.
    ThreeW1Neighbors,
    /// A vertex of degree at most three with a 2-neighbor.
    SmallVertexWithTwoNeighbor,
}

/// A matched configuration: its kind, a labeled witness embedding, and the
/// reduction action it licenses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigMatch {
    pub kind: ConfigKind,
    pub witness: Vec<(&'static str, usize)>,
    pub action: Action,
}

impl Serialize for ConfigMatch {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let witness: BTreeMap<&str, usize> = self.witness.iter().copied().collect();
        let mut st = s.serialize_struct("ConfigMatch", 3)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("witness", &witness)?;
        st.serialize_field("action", &self.action)?;
        st.end()
    }
}

impl ConfigMatch {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).unwrap()
    }

    pub fn witness_vertex(&self, label: &str) -> Option<usize> {
        self.witness.iter().find(|(l, _)| *l == label).map(|&(_, v)| v)
    }
}

fn two_neighbors(g: &Graph, v: usize) -> Vec<usize> {
    g.neighbors(v).iter().copied().filter(|&u| g.degree(u) == 2).collect()
}

/// The neighbor of a 2-vertex other than `not`.
fn far_endpoint(g: &Graph, two_vertex: usize, not: usize) -> usize {
    debug_assert_eq!(g.degree(two_vertex), 2);
    let nb = g.neighbors(two_vertex);
    if nb[0] == not {
        nb[1]
    } else {
        nb[0]
    }
}

fn all_distinct(vs: &[usize]) -> bool {
    let mut s = vs.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

// ---------------------------------------------------------------------------
// Shared low-degree configurations.

fn find_pendant(g: &Graph) -> Option<ConfigMatch> {
    let v = (0..g.n()).find(|&v| g.degree(v) <= 1)?;
    Some(ConfigMatch {
        kind: ConfigKind::Pendant,
        witness: vec![("v", v)],
        action: Action::RemoveVertices(vec![v]),
    })
}

fn find_adjacent_two_vertices(g: &Graph) -> Option<ConfigMatch> {
    for x in 0..g.n() {
        if g.degree(x) > 2 {
            continue;
        }
        for &y in g.neighbors(x) {
            if g.degree(y) <= 2 {
                return Some(ConfigMatch {
                    kind: ConfigKind::AdjacentTwoVertices,
                    witness: vec![("x", x), ("y", y)],
                    action: Action::RemoveVertices(vec![x.min(y), x.max(y)]),
                });
            }
        }
    }
    None
}

fn find_shared_two_neighbor(g: &Graph) -> Option<ConfigMatch> {
    for x in 0..g.n() {
        for &y in g.neighbors(x) {
            for &w in g.neighbors(x) {
                if w != y && g.degree(w) == 2 && g.has_edge(w, y) {
                    return Some(ConfigMatch {
                        kind: ConfigKind::AdjacentSharedTwoNeighbor,
                        witness: vec![("x", x), ("y", y), ("w", w)],
                        action: Action::RemoveVertices(vec![w]),
                    });
                }
            }
        }
    }
    None
}

fn find_doubled_weak_path(g: &Graph) -> Option<ConfigMatch> {
    let class = classify_w(g);
    for x in 0..g.n() {
        if !matches!(class[x], WClass::W2 | WClass::W3) {
            continue;
        }
        let tn = two_neighbors(g, x);
        for i in 0..tn.len() {
            for j in i + 1..tn.len() {
                let (w1, w2) = (tn[i], tn[j]);
                let y1 = far_endpoint(g, w1, x);
                if y1 == far_endpoint(g, w2, x) {
                    return Some(ConfigMatch {
                        kind: ConfigKind::DoubledWeakPath,
                        witness: vec![("x", x), ("w1", w1), ("w2", w2), ("y", y1)],
                        action: Action::RemoveVertices(vec![w1]),
                    });
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Induced pattern matching.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternVariant {
    A,
    B,
}

#[derive(Clone, Copy)]
enum DegSpec {
    Exact(usize),
    AtLeast(usize),
}

struct Pattern {
    labels: &'static [&'static str],
    deg: &'static [DegSpec],
    edges: &'static [(usize, usize)],
    removal: &'static [usize],
    kind: ConfigKind,
}

use DegSpec::{AtLeast, Exact};

fn pattern_a() -> Pattern {
    Pattern {
        labels: &["v1", "v2", "v3", "v4", "v5", "w", "u"],
        deg: &[Exact(3), Exact(3), Exact(2), AtLeast(3), Exact(2), Exact(2), AtLeast(3)],
        edges: &[(0, 1), (0, 5), (0, 4), (3, 4), (3, 2), (1, 2), (5, 6)],
        removal: &[0, 2, 4, 5],
        kind: ConfigKind::InducedPatternA,
    }
}

fn pattern_b() -> Pattern {
    Pattern {
        labels: &[
            "v1", "v2", "v3", "v4", "v5", "v6", "w1", "w2", "w3", "u1", "u2", "u3",
        ],
        deg: &[
            Exact(3),
            Exact(3),
            Exact(3),
            Exact(2),
            AtLeast(3),
            Exact(2),
            Exact(2),
            Exact(2),
            Exact(2),
            AtLeast(3),
            AtLeast(3),
            AtLeast(3),
        ],
        edges: &[
            (0, 1),
            (0, 6),
            (0, 5),
            (3, 4),
            (3, 2),
            (1, 7),
            (1, 2),
            (6, 9),
            (4, 5),
            (7, 10),
            (8, 11),
            (8, 2),
        ],
        removal: &[0, 1, 2, 3, 5, 6, 7, 8],
        kind: ConfigKind::InducedPatternB,
    }
}

/// Backtracking search for an induced embedding of the pattern: labels map to
/// distinct host vertices, pattern edges and non-edges between labeled pairs
/// are preserved exactly, and degree constraints hold in the host graph.
fn embed(g: &Graph, pat: &Pattern, assign: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    let i = assign.len();
    if i == pat.labels.len() {
        return true;
    }
    'host: for v in 0..g.n() {
        if used[v] {
            continue;
        }
        match pat.deg[i] {
            Exact(d) => {
                if g.degree(v) != d {
                    continue;
                }
            }
            AtLeast(d) => {
                if g.degree(v) < d {
                    continue;
                }
            }
        }
        for j in 0..i {
            let want = pat.edges.contains(&(i.min(j), i.max(j)))
                || pat.edges.contains(&(i.max(j), i.min(j)));
            if g.has_edge(v, assign[j]) != want {
                continue 'host;
            }
        }
        assign.push(v);
        used[v] = true;
        if embed(g, pat, assign, used) {
            return true;
        }
        assign.pop();
        used[v] = false;
    }
    false
}

/// Looks for an induced copy of the given pattern variant.
pub fn match_fig4(g: &Graph, variant: PatternVariant) -> Option<ConfigMatch> {
    let pat = match variant {
        PatternVariant::A => pattern_a(),
        PatternVariant::B => pattern_b(),
    };
    let mut assign = Vec::new();
    let mut used = vec![false; g.n()];
    if !embed(g, &pat, &mut assign, &mut used) {
        return None;
    }
    let mut removal: Vec<usize> = pat.removal.iter().map(|&i| assign[i]).collect();
    removal.sort_unstable();
    Some(ConfigMatch {
        kind: pat.kind,
        witness: pat.labels.iter().copied().zip(assign).collect(),
        action: Action::RemoveVertices(removal),
    })
}

// ---------------------------------------------------------------------------
// Rule set 3 specific configurations.

fn find_adjacent_w2_pair(g: &Graph, class: &[WClass]) -> Option<ConfigMatch> {
    for x in 0..g.n() {
        if class[x] != WClass::W2 {
            continue;
        }
        for &y in g.neighbors(x) {
            if class[y] != WClass::W2 {
                continue;
            }
            let tx = two_neighbors(g, x);
            let ty = two_neighbors(g, y);
            let (v1, v2, v3, v4) = (tx[0], tx[1], ty[0], ty[1]);
            let mut s = vec![x, y, v1, v2, v3, v4];
            if !all_distinct(&s) {
                continue;
            }
            s.sort_unstable();
            return Some(ConfigMatch {
                kind: ConfigKind::AdjacentW2Pair,
                witness: vec![
                    ("x", x),
                    ("y", y),
                    ("v1", v1),
                    ("v2", v2),
                    ("v3", v3),
                    ("v4", v4),
                    ("u1", far_endpoint(g, v1, x)),
                    ("u2", far_endpoint(g, v2, x)),
                    ("u3", far_endpoint(g, v3, y)),
                    ("u4", far_endpoint(g, v4, y)),
                ],
                action: Action::RemoveVertices(s),
            });
        }
    }
    None
}

fn find_w3_high_degree_weak(g: &Graph, class: &[WClass]) -> Option<ConfigMatch> {
    for x in 0..g.n() {
        if class[x] != WClass::W3 {
            continue;
        }
        let tn = two_neighbors(g, x);
        for i in 0..3 {
            let u1 = far_endpoint(g, tn[i], x);
            if g.degree(u1) >= 4 {
                let others: Vec<usize> = (0..3).filter(|&j| j != i).map(|j| tn[j]).collect();
                let mut s = vec![x, tn[0], tn[1], tn[2]];
                s.sort_unstable();
                return Some(ConfigMatch {
                    kind: ConfigKind::W3HighDegreeWeakNeighbor,
                    witness: vec![
                        ("x", x),
                        ("v1", tn[i]),
                        ("v2", others[0]),
                        ("v3", others[1]),
                        ("u1", u1),
                    ],
                    action: Action::RemoveVertices(s),
                });
            }
        }
    }
    None
}

fn find_w3_weak_extra_two(g: &Graph, class: &[WClass]) -> Option<ConfigMatch> {
    for x in 0..g.n() {
        if class[x] != WClass::W3 {
            continue;
        }
        let tn = two_neighbors(g, x);
        for &v1 in &tn {
            let u1 = far_endpoint(g, v1, x);
            if g.degree(u1) != 3 {
                continue;
            }
            for &w in g.neighbors(u1) {
                if g.degree(w) == 2 && w != v1 && !tn.contains(&w) && w != x {
                    return Some(ConfigMatch {
                        kind: ConfigKind::W3WeakNeighborExtraTwoNeighbor,
                        witness: vec![("x", x), ("v1", v1), ("u1", u1), ("w", w)],
                        action: Action::RemoveVertices({
                            let mut s = vec![x, v1, u1, w];
                            s.sort_unstable();
                            s
                        }),
                    });
                }
            }
        }
    }
    None
}

fn find_w1_with_two_w2(g: &Graph, class: &[WClass]) -> Option<ConfigMatch> {
    for x in 0..g.n() {
        if class[x] != WClass::W1 {
            continue;
        }
        let w = two_neighbors(g, x)[0];
        let bigs: Vec<usize> = g.neighbors(x).iter().copied().filter(|&u| u != w).collect();
        let (x1, x2) = (bigs[0], bigs[1]);
        if class[x1] != WClass::W2 || class[x2] != WClass::W2 {
            continue;
        }
        let t1 = two_neighbors(g, x1);
        let t2 = two_neighbors(g, x2);
        let (v1, v2, v3, v4) = (t1[0], t1[1], t2[0], t2[1]);
        let mut s = vec![x, x1, x2, v1, v2, v3, v4, w];
        if !all_distinct(&s) {
            continue;
        }
        s.sort_unstable();
        return Some(ConfigMatch {
            kind: ConfigKind::W1WithTwoW2Neighbors,
            witness: vec![
                ("x", x),
                ("x1", x1),
                ("x2", x2),
                ("v1", v1),
                ("v2", v2),
                ("v3", v3),
                ("v4", v4),
                ("w", w),
            ],
            action: Action::RemoveVertices(s),
        });
    }
    None
}

fn find_junction(g: &Graph, class: &[WClass]) -> Option<ConfigMatch> {
    for x in 0..g.n() {
        if class[x] != WClass::W1 {
            continue;
        }
        let v1 = two_neighbors(g, x)[0];
        let u = far_endpoint(g, v1, x);
        if class[u] != WClass::W3 || u == x {
            continue;
        }
        let bigs: Vec<usize> = g.neighbors(x).iter().copied().filter(|&t| t != v1).collect();
        for &y in &bigs {
            if class[y] != WClass::W2 {
                continue;
            }
            let z = bigs[0] + bigs[1] - y;
            if class[z] != WClass::W1 {
                continue;
            }
            let vs: Vec<usize> =
                two_neighbors(g, u).into_iter().filter(|&t| t != v1).collect();
            let (v2, v3) = (vs[0], vs[1]);
            let ys = two_neighbors(g, y);
            let (y1, y2) = (ys[0], ys[1]);
            let z1 = two_neighbors(g, z)[0];
            let z2: usize = g
                .neighbors(z)
                .iter()
                .copied()
                .find(|&t| t != x && t != z1)?;
            let all = [x, y, z, u, v1, v2, v3, y1, y2, z1, z2];
            if !all_distinct(&all) {
                continue;
            }
            let mut s = vec![v1, v2, u];
            s.sort_unstable();
            return Some(ConfigMatch {
                kind: ConfigKind::W1W2W3Junction,
                witness: vec![
                    ("x", x),
                    ("y", y),
                    ("z", z),
                    ("u", u),
                    ("v1", v1),
                    ("v2", v2),
                    ("v3", v3),
                    ("y1", y1),
                    ("y2", y2),
                    ("z1", z1),
                    ("z2", z2),
                ],
                action: Action::RemoveVertices(s),
            });
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Rule set 4 / 5 specific configurations.

/// A vertex of degree k (k drawn from `ks`) with at least k-1 2-neighbors.
/// The removed edge goes to the leftover neighbor under rule set 4 and to the
/// lowest 2-neighbor under rule set 5.
fn find_k_vertex_excess(g: &Graph, ks: &[usize], remove_two_end: bool) -> Option<ConfigMatch> {
    for v in 0..g.n() {
        let k = g.degree(v);
        if !ks.contains(&k) {
            continue;
        }
        let tn = two_neighbors(g, v);
        if tn.len() < k - 1 {
            continue;
        }
        let other = if remove_two_end {
            tn[0]
        } else {
            let chosen = &tn[..k - 1];
            g.neighbors(v)
                .iter()
                .copied()
                .find(|u| !chosen.contains(u))
                .unwrap()
        };
        let mut witness = vec![("v", v)];
        let labels = ["v1", "v2", "v3", "v4", "v5"];
        let mut nbrs: Vec<usize> = tn[..(k - 1).min(tn.len())].to_vec();
        for &u in g.neighbors(v) {
            if !nbrs.contains(&u) {
                nbrs.push(u);
            }
        }
        for (i, &u) in nbrs.iter().enumerate() {
            witness.push((labels[i], u));
        }
        return Some(ConfigMatch {
            kind: ConfigKind::KVertexExcessTwoNeighbors { k },
            witness,
            action: Action::RemoveEdge(v, other),
        });
    }
    None
}

fn find_adjacent_w1_pair(g: &Graph, class: &[WClass]) -> Option<ConfigMatch> {
    for x in 0..g.n() {
        if class[x] != WClass::W1 {
            continue;
        }
        for &y in g.neighbors(x) {
            if class[y] != WClass::W1 {
                continue;
            }
            let xp = two_neighbors(g, x)[0];
            let yp = two_neighbors(g, y)[0];
            if xp == yp {
                continue;
            }
            return Some(ConfigMatch {
                kind: ConfigKind::AdjacentW1Pair,
                witness: vec![
                    ("x", x),
                    ("y", y),
                    ("x'", xp),
                    ("y'", yp),
                    ("w1", far_endpoint(g, xp, x)),
                    ("w2", far_endpoint(g, yp, y)),
                ],
                action: Action::RemoveVertices(vec![xp.min(yp), xp.max(yp)]),
            });
        }
    }
    None
}

fn find_three_w1_neighbors(g: &Graph, class: &[WClass]) -> Option<ConfigMatch> {
    for x in 0..g.n() {
        if g.degree(x) != 3 {
            continue;
        }
        let nb = g.neighbors(x);
        if nb.iter().any(|&u| class[u] != WClass::W1) {
            continue;
        }
        let (x1, x2, x3) = (nb[0], nb[1], nb[2]);
        let xp: Vec<usize> = nb.iter().map(|&u| two_neighbors(g, u)[0]).collect();
        let mut s = vec![x, x1, x2, x3, xp[0], xp[1], xp[2]];
        s.sort_unstable();
        s.dedup();
        return Some(ConfigMatch {
            kind: ConfigKind::ThreeW1Neighbors,
            witness: vec![
                ("x", x),
                ("x1", x1),
                ("x2", x2),
                ("x3", x3),
                ("x1'", xp[0]),
                ("x2'", xp[1]),
                ("x3'", xp[2]),
            ],
            action: Action::RemoveVertices(s),
        });
    }
    None
}

fn find_small_vertex_with_two_neighbor(g: &Graph) -> Option<ConfigMatch> {
    for x in 0..g.n() {
        if g.degree(x) > 3 {
            continue;
        }
        for &y in g.neighbors(x) {
            if g.degree(y) == 2 {
                return Some(ConfigMatch {
                    kind: ConfigKind::SmallVertexWithTwoNeighbor,
                    witness: vec![("x", x), ("y", y)],
                    action: Action::RemoveEdge(x, y),
                });
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Ordered scans per rule set.

fn find_low_degree(g: &Graph) -> Option<ConfigMatch> {
    find_pendant(g)
        .or_else(|| find_adjacent_two_vertices(g))
        .or_else(|| find_shared_two_neighbor(g))
        .or_else(|| find_doubled_weak_path(g))
}

/// First reducible configuration under the mad < 18/7 rule set, or None.
pub fn find_config_thm3(g: &Graph) -> Option<ConfigMatch> {
    if let Some(m) = find_low_degree(g) {
        return Some(m);
    }
    if let Some(m) = match_fig4(g, PatternVariant::A) {
        return Some(m);
    }
    if let Some(m) = match_fig4(g, PatternVariant::B) {
        return Some(m);
    }
    let class = classify_w(g);
    find_adjacent_w2_pair(g, &class)
        .or_else(|| find_w3_high_degree_weak(g, &class))
        .or_else(|| find_w3_weak_extra_two(g, &class))
        .or_else(|| find_w1_with_two_w2(g, &class))
        .or_else(|| find_junction(g, &class))
}

/// First reducible configuration under the mad < 14/5 rule set, or None.
pub fn find_config_thm4(g: &Graph) -> Option<ConfigMatch> {
    if let Some(m) = find_low_degree(g) {
        return Some(m);
    }
    let class = classify_w(g);
    find_k_vertex_excess(g, &[3, 4], false)
        .or_else(|| find_adjacent_w1_pair(g, &class))
        .or_else(|| find_three_w1_neighbors(g, &class))
}

/// First reducible configuration under the mad < 3 rule set, or None.
pub fn find_config_thm5(g: &Graph) -> Option<ConfigMatch> {
    find_low_degree(g)
        .or_else(|| find_small_vertex_with_two_neighbor(g))
        .or_else(|| find_k_vertex_excess(g, &[4, 5], true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fig1_graph, petersen, petersen_minus_edge};

    fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 0..n - 1 {
            g.add_edge(v, v + 1).unwrap();
        }
        g
    }

    fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        g.add_edge(n - 1, 0).unwrap();
        g
    }

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v).unwrap();
        }
        g
    }

    #[test]
    fn pendant_on_path() {
        let m = find_config_thm3(&path(5)).unwrap();
        assert_eq!(m.kind, ConfigKind::Pendant);
        assert_eq!(m.witness, vec![("v", 0)]);
        assert_eq!(m.action, Action::RemoveVertices(vec![0]));
    }

    #[test]
    fn adjacent_two_vertices_on_chorded_cycle() {
        let mut g = cycle(6);
        g.add_edge(0, 3).unwrap();
        let m = find_config_thm3(&g).unwrap();
        assert_eq!(m.kind, ConfigKind::AdjacentTwoVertices);
        assert_eq!(m.witness, vec![("x", 1), ("y", 2)]);
    }

    #[test]
    fn shared_two_neighbor() {
        // K4 on 0..4 plus a 2-vertex adjacent to 0 and 1.
        let g = graph(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1)],
        );
        let m = find_config_thm3(&g).unwrap();
        assert_eq!(m.kind, ConfigKind::AdjacentSharedTwoNeighbor);
        assert_eq!(m.action, Action::RemoveVertices(vec![4]));
    }

    #[test]
    fn doubled_weak_path() {
        // x=0 with 2-neighbors 1, 2 both ending at y=3; extra 2-vertex 4 on x-y.
        let g = graph(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 4), (3, 4)]);
        let m = find_config_thm3(&g).unwrap();
        assert_eq!(m.kind, ConfigKind::DoubledWeakPath);
        assert_eq!(m.witness_vertex("x"), Some(0));
        assert_eq!(m.witness_vertex("y"), Some(3));
        assert_eq!(m.action, Action::RemoveVertices(vec![1]));
    }

    #[test]
    fn pattern_a_literal_instance() {
        // Labels 0..7 = v1,v2,v3,v4,v5,w,u with pendant fillers 7..11.
        let g = graph(
            11,
            &[
                (0, 1),
                (0, 5),
                (0, 4),
                (3, 4),
                (3, 2),
                (1, 2),
                (5, 6),
                (1, 7),
                (3, 8),
                (6, 9),
                (6, 10),
            ],
        );
        let m = match_fig4(&g, PatternVariant::A).unwrap();
        assert_eq!(m.kind, ConfigKind::InducedPatternA);
        assert_eq!(m.action, Action::RemoveVertices(vec![0, 2, 4, 5]));
        assert!(match_fig4(&g, PatternVariant::B).is_none());
    }

    #[test]
    fn pattern_b_literal_instance() {
        let g = graph(
            19,
            &[
                (0, 1),
                (0, 6),
                (0, 5),
                (3, 4),
                (3, 2),
                (1, 7),
                (1, 2),
                (6, 9),
                (4, 5),
                (7, 10),
                (8, 11),
                (8, 2),
                (4, 12),
                (9, 13),
                (9, 14),
                (10, 15),
                (10, 16),
                (11, 17),
                (11, 18),
            ],
        );
        let m = match_fig4(&g, PatternVariant::B).unwrap();
        assert_eq!(m.kind, ConfigKind::InducedPatternB);
        assert_eq!(m.action, Action::RemoveVertices(vec![0, 1, 2, 3, 5, 6, 7, 8]));
        assert!(match_fig4(&g, PatternVariant::A).is_none());
    }

    #[test]
    fn patterns_absent_from_tight_examples() {
        for g in [fig1_graph(), petersen()] {
            assert!(match_fig4(&g, PatternVariant::A).is_none());
            assert!(match_fig4(&g, PatternVariant::B).is_none());
        }
    }

    #[test]
    fn adjacent_w2_pair() {
        // x=0, y=1 adjacent W2 vertices; far endpoints 6..10 on a cycle.
        let g = graph(
            10,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 5),
                (2, 6),
                (3, 7),
                (4, 8),
                (5, 9),
                (6, 7),
                (7, 8),
                (8, 9),
                (9, 6),
            ],
        );
        let m = find_config_thm3(&g).unwrap();
        assert_eq!(m.kind, ConfigKind::AdjacentW2Pair);
        assert_eq!(m.action, Action::RemoveVertices(vec![0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn w3_high_degree_weak_neighbor() {
        let g = graph(
            10,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 5),
                (3, 6),
                (4, 7),
                (4, 8),
                (4, 9),
                (5, 7),
                (5, 8),
                (6, 8),
                (6, 9),
                (7, 8),
                (8, 9),
                (9, 7),
            ],
        );
        let m = find_config_thm3(&g).unwrap();
        assert_eq!(m.kind, ConfigKind::W3HighDegreeWeakNeighbor);
        assert_eq!(m.witness_vertex("x"), Some(0));
        assert_eq!(m.witness_vertex("u1"), Some(4));
        assert_eq!(m.action, Action::RemoveVertices(vec![0, 1, 2, 3]));
    }

    #[test]
    fn w3_weak_neighbor_extra_two_neighbor() {
        let g = graph(
            12,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 5),
                (3, 6),
                (4, 7),
                (7, 8),
                (4, 9),
                (5, 10),
                (5, 11),
                (6, 10),
                (6, 11),
                (8, 9),
                (8, 10),
                (9, 11),
            ],
        );
        let m = find_config_thm3(&g).unwrap();
        assert_eq!(m.kind, ConfigKind::W3WeakNeighborExtraTwoNeighbor);
        assert_eq!(
            m.witness,
            vec![("x", 0), ("v1", 1), ("u1", 4), ("w", 7)]
        );
        assert_eq!(m.action, Action::RemoveVertices(vec![0, 1, 4, 7]));
    }

    #[test]
    fn w1_with_two_w2_neighbors() {
        let g = graph(
            13,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 5),
                (2, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 10),
                (6, 11),
                (7, 12),
                (8, 9),
                (9, 10),
                (10, 11),
                (11, 12),
                (12, 8),
            ],
        );
        let m = find_config_thm3(&g).unwrap();
        assert_eq!(m.kind, ConfigKind::W1WithTwoW2Neighbors);
        assert_eq!(m.action, Action::RemoveVertices(vec![0, 1, 2, 3, 4, 5, 6, 7]));
    }

    #[test]
    fn junction_instance() {
        // x=0, v1=1, y=2, z=3, u=4, v2=5, v3=6, y1=7, y2=8, z1=9, z2=10,
        // hollow ring 10..15.
        let g = graph(
            16,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (4, 1),
                (4, 5),
                (4, 6),
                (2, 7),
                (2, 8),
                (3, 9),
                (3, 10),
                (5, 11),
                (6, 12),
                (7, 13),
                (8, 14),
                (9, 15),
                (10, 11),
                (11, 12),
                (12, 13),
                (13, 14),
                (14, 15),
                (15, 10),
            ],
        );
        let m = find_config_thm3(&g).unwrap();
        assert_eq!(m.kind, ConfigKind::W1W2W3Junction);
        assert_eq!(m.witness_vertex("x"), Some(0));
        assert_eq!(m.witness_vertex("u"), Some(4));
        assert_eq!(m.witness_vertex("z1"), Some(9));
        assert_eq!(m.witness_vertex("z2"), Some(10));
        assert_eq!(m.action, Action::RemoveVertices(vec![1, 4, 5]));
    }

    #[test]
    fn tight_example_has_no_rule3_config() {
        assert!(find_config_thm3(&fig1_graph()).is_none());
    }

    #[test]
    fn k_vertex_excess_rule4() {
        // 3-vertex 0 with two 2-neighbors 1, 2; leftover neighbor 3.
        let g = graph(
            6,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
        );
        let m = find_config_thm4(&g).unwrap();
        assert_eq!(m.kind, ConfigKind::KVertexExcessTwoNeighbors { k: 3 });
        assert_eq!(m.action, Action::RemoveEdge(0, 3));
    }

    #[test]
    fn subdivided_k4_has_no_rule4_config() {
        let g = graph(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]);
        assert!(find_config_thm4(&g).is_none());
    }

    #[test]
    fn adjacent_w1_pair_instance() {
        let g = graph(
            8,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 5),
                (2, 6),
                (4, 7),
                (3, 5),
                (5, 6),
                (6, 7),
                (7, 3),
            ],
        );
        let m = find_config_thm4(&g).unwrap();
        assert_eq!(m.kind, ConfigKind::AdjacentW1Pair);
        assert_eq!(m.witness_vertex("x"), Some(0));
        assert_eq!(m.witness_vertex("y"), Some(1));
        assert_eq!(m.action, Action::RemoveVertices(vec![2, 4]));
    }

    #[test]
    fn three_w1_neighbors_instance() {
        let g = graph(
            10,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 5),
                (3, 6),
                (1, 8),
                (2, 9),
                (3, 7),
                (4, 7),
                (5, 8),
                (6, 9),
                (7, 8),
                (8, 9),
                (9, 7),
            ],
        );
        let m = find_config_thm4(&g).unwrap();
        assert_eq!(m.kind, ConfigKind::ThreeW1Neighbors);
        assert_eq!(
            m.action,
            Action::RemoveVertices(vec![0, 1, 2, 3, 4, 5, 6])
        );
    }

    #[test]
    fn rule4_not_found_on_tight_example() {
        assert!(find_config_thm4(&petersen_minus_edge()).is_none());
    }

    #[test]
    fn rule5_on_short_path_and_tight_example() {
        let m = find_config_thm5(&path(3)).unwrap();
        assert_eq!(m.kind, ConfigKind::Pendant);
        assert!(find_config_thm5(&petersen()).is_none());
    }

    #[test]
    fn rule5_edge_removal_on_subdivided_k4() {
        let g = graph(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]);
        let m = find_config_thm5(&g).unwrap();
        assert_eq!(m.kind, ConfigKind::SmallVertexWithTwoNeighbor);
        assert_eq!(m.action, Action::RemoveEdge(0, 4));
    }

    #[test]
    fn k_vertex_excess_rule5() {
        // K(2,4): 4-vertex 0 with four 2-neighbors, both far endpoints 4-vertices.
        let g = graph(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 5),
                (2, 5),
                (3, 5),
                (4, 5),
            ],
        );
        let m = find_config_thm5(&g).unwrap();
        assert_eq!(m.kind, ConfigKind::KVertexExcessTwoNeighbors { k: 4 });
        assert_eq!(m.action, Action::RemoveEdge(0, 1));
    }

    #[test]
    fn match_json_round_trip_shape() {
        let m = find_config_thm3(&path(4)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&m.to_json()).unwrap();
        assert!(v["kind"].is_string() || v["kind"].is_object());
        assert!(v["witness"].is_object());
    }
}
