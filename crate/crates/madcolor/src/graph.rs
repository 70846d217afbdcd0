//! Simple undirected graphs with dense integer vertex ids, plus the degree
//! structure (W-classes, weak neighbors) and the 3-dynamic validity checker
//! that every other module certifies against.

use thiserror::Error;

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted; no self-loops, no parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Adds the edge `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if let Ok(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].remove(pos);
            let pos = self.adj[v].binary_search(&u).unwrap();
            self.adj[v].remove(pos);
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    /// The graph square: an edge between every pair at distance 1 or 2.
    pub fn square(&self) -> Graph {
        let mut sq = self.clone();
        for w in 0..self.n() {
            let nb = &self.adj[w];
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    sq.add_edge(nb[i], nb[j]).unwrap();
                }
            }
        }
        sq
    }

    /// Vertices `u != v` sharing a common 2-neighbor with `v`.
    pub fn weak_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &w in &self.adj[v] {
            if self.degree(w) == 2 {
                for &u in &self.adj[w] {
                    if u != v && !out.contains(&u) {
                        out.push(u);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Induced subgraph on `s`; second component maps new ids to old ids.
    pub fn induced_subgraph(&self, s: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep: Vec<usize> = s.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut old_to_new = vec![usize::MAX; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut g = Graph::new(keep.len());
        for (new, &old) in keep.iter().enumerate() {
            for &w in &self.adj[old] {
                if old_to_new[w] != usize::MAX && old < w {
                    g.add_edge(new, old_to_new[w]).unwrap();
                }
            }
        }
        (g, keep)
    }

    /// BFS distances from `src`; `usize::MAX` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }
}

/// Class of a vertex by its count of degree-2 neighbors.
///
/// A vertex is in `Wi` iff it has degree 3 and exactly `i` 2-neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WClass {
    W0,
    W1,
    W2,
    W3,
    NotA3Vertex,
}

/// Classifies every vertex into its W-class.
pub fn classify_w(g: &Graph) -> Vec<WClass> {
    (0..g.n())
        .map(|v| {
            if g.degree(v) != 3 {
                return WClass::NotA3Vertex;
            }
            match g.neighbors(v).iter().filter(|&&u| g.degree(u) == 2).count() {
                0 => WClass::W0,
                1 => WClass::W1,
                2 => WClass::W2,
                3 => WClass::W3,
                _ => unreachable!(),
            }
        })
        .collect()
}

/// A (possibly partial) vertex coloring. Color ids are arbitrary non-negative
/// integers; they need not be contiguous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Option<usize>>,
}

impl Coloring {
    pub fn empty(n: usize) -> Coloring {
        Coloring {
            colors: vec![None; n],
        }
    }

    pub fn total(colors: Vec<usize>) -> Coloring {
        Coloring {
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: usize) {
        self.colors[v] = Some(c);
    }

    pub fn unset(&mut self, v: usize) {
        self.colors[v] = None;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|c| c.is_some())
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }
}

/// Which of the three validity conditions a vertex violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// Adjacent vertex with the same color.
    NotProper { neighbor: usize },
    /// Fewer than `min(r, deg)` distinct colors in the neighborhood.
    TooFewNeighborColors { seen: usize, required: usize },
    /// The assigned color is not in the vertex's list.
    ColorNotInList { color: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: usize,
    pub kind: ViolationKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ValidityError {
    #[error("vertex {0} is uncolored")]
    UncoloredVertex(usize),
}

/// Checks that `phi` is a valid r-dynamic coloring of `g`: proper, every
/// vertex sees at least `min(r, deg)` distinct neighbor colors, and (when
/// `lists` is given) each color comes from the vertex's list.
///
/// On failure reports the lowest-id violating vertex and the first failed
/// condition in the order proper / dynamic / list.
pub fn check_r_dynamic(
    g: &Graph,
    r: usize,
    phi: &Coloring,
    lists: Option<&[Vec<usize>]>,
) -> Result<Result<(), Violation>, ValidityError> {
    assert_eq!(phi.n(), g.n());
    for v in 0..g.n() {
        if phi.get(v).is_none() {
            return Err(ValidityError::UncoloredVertex(v));
        }
    }
    for v in 0..g.n() {
        let c = phi.get(v).unwrap();
        for &u in g.neighbors(v) {
            if phi.get(u) == Some(c) {
                return Ok(Err(Violation {
                    vertex: v,
                    kind: ViolationKind::NotProper { neighbor: u },
                }));
            }
        }
        let mut seen: Vec<usize> = g.neighbors(v).iter().map(|&u| phi.get(u).unwrap()).collect();
        seen.sort_unstable();
        seen.dedup();
        let required = r.min(g.degree(v));
        if seen.len() < required {
            return Ok(Err(Violation {
                vertex: v,
                kind: ViolationKind::TooFewNeighborColors {
                    seen: seen.len(),
                    required,
                },
            }));
        }
        if let Some(lists) = lists {
            if !lists[v].contains(&c) {
                return Ok(Err(Violation {
                    vertex: v,
                    kind: ViolationKind::ColorNotInList { color: c },
                }));
            }
        }
    }
    Ok(Ok(()))
}

/// Convenience wrapper: true iff the coloring is valid.
pub fn is_valid_r_dynamic(
    g: &Graph,
    r: usize,
    phi: &Coloring,
    lists: Option<&[Vec<usize>]>,
) -> Result<bool, ValidityError> {
    Ok(check_r_dynamic(g, r, phi, lists)?.is_ok())
}
