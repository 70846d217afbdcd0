//! Constructive list coloring. Each procedure checks the density
//! precondition, repeatedly peels a reducible configuration, colors the
//! reduced graph, and extends the coloring back by an exact search over the
//! freed vertices. The result is a coloring together with a reduction trace.

use crate::configs::{
    find_config_thm3, find_config_thm4, find_config_thm5, Action, ConfigKind, ConfigMatch,
};
use crate::discharging::RuleSet;
use crate::graph::{check_r_dynamic, Coloring, Graph};
use crate::mad::mad_exact;
use crate::rational::Rat;
use crate::solver::{color_with_lists, ListAssignment};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructiveError {
    #[error("mad is {mad}, not below the required bound {bound}")]
    PreconditionMad { mad: Rat, bound: Rat },
    #[error("list at vertex {vertex} has {len} colors, need at least {required}")]
    ListTooShort {
        vertex: usize,
        len: usize,
        required: usize,
    },
    #[error("invalid partial coloring: {0}")]
    InvalidPartial(String),
    #[error("malformed recoloring context: {0}")]
    MalformedContext(String),
    #[error("extension failed: {0}")]
    InternalExtensionFailure(String),
}

/// One peeled configuration: what was matched, the graph size after the
/// reduction, and which vertices were re-extended by exact search.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionStep {
    pub config: ConfigMatch,
    pub remaining_vertices: usize,
    pub remaining_edges: usize,
    pub reextended: Vec<usize>,
}

/// A graph on which no configuration matched despite the density
/// precondition; the coloring then falls back to plain exact search.
#[derive(Clone, Debug, Serialize)]
pub struct ProofGapReport {
    pub vertices: usize,
    pub edges: usize,
    pub mad: Rat,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub proof_gaps: Vec<ProofGapReport>,
}

impl ReductionTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).unwrap()
    }
}

pub struct ConstructiveOutcome {
    pub coloring: Coloring,
    pub trace: ReductionTrace,
}

/// Vertices that the extension argument may also recolor, beyond the removed
/// set itself.
fn recolorable_extras(m: &ConfigMatch) -> Vec<usize> {
    let grab = |labels: &[&str]| -> Vec<usize> {
        labels
            .iter()
            .map(|l| m.witness_vertex(l).unwrap())
            .collect()
    };
    match m.kind {
        ConfigKind::InducedPatternA => grab(&["v2"]),
        ConfigKind::W1W2W3Junction => grab(&["x", "y", "z", "y1", "y2", "z1"]),
        ConfigKind::AdjacentW1Pair => grab(&["x", "y"]),
        _ => Vec::new(),
    }
}

/// Vertices freed after an edge removal, per the matched kind.
fn edge_refree(g: &Graph, m: &ConfigMatch) -> Vec<usize> {
    match m.kind {
        ConfigKind::KVertexExcessTwoNeighbors { .. } => {
            let v = m.witness_vertex("v").unwrap();
            let mut s = vec![v];
            s.extend(g.neighbors(v).iter().copied().filter(|&u| g.degree(u) == 2));
            s
        }
        ConfigKind::SmallVertexWithTwoNeighbor => {
            vec![
                m.witness_vertex("x").unwrap(),
                m.witness_vertex("y").unwrap(),
            ]
        }
        _ => unreachable!("edge removal only arises from the kinds above"),
    }
}

/// Colors `g` from scratch by exact search with the given free vertices open
/// and everything else pinned to `phi`.
fn extend(
    g: &Graph,
    lists: &ListAssignment,
    phi: &Coloring,
    free: &[usize],
) -> Result<Coloring, ConstructiveError> {
    let mut dom = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        if free.contains(&v) {
            dom.push(lists.lists[v].clone());
        } else {
            dom.push(vec![phi.get(v).expect("pinned vertex is colored")]);
        }
    }
    let res = color_with_lists(g, 3, &ListAssignment { lists: dom })
        .map_err(|e| ConstructiveError::InternalExtensionFailure(e.to_string()))?;
    res.ok_or_else(|| {
        ConstructiveError::InternalExtensionFailure(format!(
            "no extension over freed vertices {free:?}"
        ))
    })
}

fn solve(
    g: &Graph,
    lists: &ListAssignment,
    rules: RuleSet,
    trace: &mut ReductionTrace,
) -> Result<Coloring, ConstructiveError> {
    if g.n() == 0 {
        return Ok(Coloring::empty(0));
    }
    let found = match rules {
        RuleSet::Thm3 => find_config_thm3(g),
        RuleSet::Thm4 => find_config_thm4(g),
        RuleSet::Thm5 => find_config_thm5(g),
    };
    let Some(m) = found else {
        let (mad, _) = mad_exact(g).expect("graph is non-empty");
        trace.proof_gaps.push(ProofGapReport {
            vertices: g.n(),
            edges: g.edge_count(),
            mad,
        });
        return color_with_lists(g, 3, lists)
            .map_err(|e| ConstructiveError::InternalExtensionFailure(e.to_string()))?
            .ok_or_else(|| {
                ConstructiveError::InternalExtensionFailure(
                    "fallback exact search found no coloring".into(),
                )
            });
    };
    match m.action.clone() {
        Action::RemoveVertices(s) => {
            let keep: Vec<usize> = (0..g.n()).filter(|v| !s.contains(v)).collect();
            let (h, new_to_old) = g.induced_subgraph(&keep);
            let sub_lists = ListAssignment {
                lists: new_to_old
                    .iter()
                    .map(|&old| lists.lists[old].clone())
                    .collect(),
            };
            let sub = solve(&h, &sub_lists, rules, trace)?;
            let mut phi = Coloring::empty(g.n());
            for (new, &old) in new_to_old.iter().enumerate() {
                phi.set(old, sub.get(new).unwrap());
            }
            let mut free = s.clone();
            for v in recolorable_extras(&m) {
                if !free.contains(&v) {
                    free.push(v);
                }
            }
            trace.steps.push(ReductionStep {
                config: m,
                remaining_vertices: h.n(),
                remaining_edges: h.edge_count(),
                reextended: free.clone(),
            });
            extend(g, lists, &phi, &free)
        }
        Action::RemoveEdge(u, v) => {
            let mut h = g.clone();
            h.remove_edge(u, v);
            let phi = solve(&h, lists, rules, trace)?;
            let free = edge_refree(g, &m);
            trace.steps.push(ReductionStep {
                config: m,
                remaining_vertices: h.n(),
                remaining_edges: h.edge_count(),
                reextended: free.clone(),
            });
            extend(g, lists, &phi, &free)
        }
    }
}

fn list_color(
    g: &Graph,
    lists: &ListAssignment,
    rules: RuleSet,
) -> Result<ConstructiveOutcome, ConstructiveError> {
    if g.n() == 0 {
        return Ok(ConstructiveOutcome {
            coloring: Coloring::empty(0),
            trace: ReductionTrace::default(),
        });
    }
    let (mad, _) = mad_exact(g).expect("graph is non-empty");
    let bound = rules.bound();
    if mad >= bound {
        return Err(ConstructiveError::PreconditionMad { mad, bound });
    }
    if lists.lists.len() != g.n() {
        return Err(ConstructiveError::InvalidPartial(format!(
            "{} lists for {} vertices",
            lists.lists.len(),
            g.n()
        )));
    }
    let required = rules.list_size();
    for (v, l) in lists.lists.iter().enumerate() {
        if l.len() < required {
            return Err(ConstructiveError::ListTooShort {
                vertex: v,
                len: l.len(),
                required,
            });
        }
    }
    let mut trace = ReductionTrace::default();
    let coloring = solve(g, lists, rules, &mut trace)?;
    debug_assert_eq!(
        check_r_dynamic(g, 3, &coloring, Some(&lists.lists)).map(|r| r.is_ok()),
        Ok(true)
    );
    Ok(ConstructiveOutcome { coloring, trace })
}

/// 3-dynamic list coloring from 6-lists, valid whenever mad < 18/7.
pub fn list_color_thm3(
    g: &Graph,
    lists: &ListAssignment,
) -> Result<ConstructiveOutcome, ConstructiveError> {
    list_color(g, lists, RuleSet::Thm3)
}

/// 3-dynamic list coloring from 7-lists, valid whenever mad < 14/5.
pub fn list_color_thm4(
    g: &Graph,
    lists: &ListAssignment,
) -> Result<ConstructiveOutcome, ConstructiveError> {
    list_color(g, lists, RuleSet::Thm4)
}

/// 3-dynamic list coloring from 8-lists, valid whenever mad < 3.
pub fn list_color_thm5(
    g: &Graph,
    lists: &ListAssignment,
) -> Result<ConstructiveOutcome, ConstructiveError> {
    list_color(g, lists, RuleSet::Thm5)
}

// ---------------------------------------------------------------------------
// List restriction for hand-checkable extension arguments.

/// Shrinks the lists of the uncolored set `s` so that any proper choice from
/// the shrunk lists extends `phi`: colored neighbors are excluded, colored
/// second-neighbors through low-degree paths are excluded, and two colors are
/// debited for each colored neighbor that is already dynamically saturated.
pub fn restrict_lists(
    g: &Graph,
    s: &[usize],
    phi: &Coloring,
    lists: &ListAssignment,
) -> Result<Vec<(usize, Vec<usize>)>, ConstructiveError> {
    let mut in_s = vec![false; g.n()];
    for &v in s {
        if v >= g.n() {
            return Err(ConstructiveError::InvalidPartial(format!(
                "vertex {v} out of range"
            )));
        }
        if in_s[v] {
            return Err(ConstructiveError::InvalidPartial(format!(
                "vertex {v} listed twice"
            )));
        }
        in_s[v] = true;
    }
    if lists.lists.len() != g.n() {
        return Err(ConstructiveError::InvalidPartial(
            "list assignment does not cover the graph".into(),
        ));
    }
    for v in 0..g.n() {
        if phi.get(v).is_some() == in_s[v] {
            return Err(ConstructiveError::InvalidPartial(format!(
                "vertex {v} must be colored exactly when outside s"
            )));
        }
    }
    let keep: Vec<usize> = (0..g.n()).filter(|&v| !in_s[v]).collect();
    let (h, new_to_old) = g.induced_subgraph(&keep);
    let mut sub = Coloring::empty(h.n());
    for (new, &old) in new_to_old.iter().enumerate() {
        sub.set(new, phi.get(old).unwrap());
    }
    if h.n() > 0 {
        match check_r_dynamic(&h, 3, &sub, None) {
            Ok(Ok(())) => {}
            Ok(Err(viol)) => {
                return Err(ConstructiveError::InvalidPartial(format!(
                    "phi is not 3-dynamic on g - s at vertex {}",
                    new_to_old[viol.vertex]
                )))
            }
            Err(e) => return Err(ConstructiveError::InvalidPartial(e.to_string())),
        }
    }
    let d_h = |u: usize| -> usize {
        g.neighbors(u).iter().filter(|&&t| !in_s[t]).count()
    };
    let mut out = Vec::new();
    let mut sorted: Vec<usize> = s.to_vec();
    sorted.sort_unstable();
    for &a in &sorted {
        let mut l = lists.lists[a].clone();
        l.sort_unstable();
        l.dedup();
        let colored_nbrs: Vec<usize> = g
            .neighbors(a)
            .iter()
            .copied()
            .filter(|&u| !in_s[u])
            .collect();
        let mut remove: Vec<usize> = Vec::new();
        for &u in &colored_nbrs {
            remove.push(phi.get(u).unwrap());
            let h_nbrs: Vec<usize> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&t| !in_s[t])
                .collect();
            if d_h(u) == 1 {
                remove.push(phi.get(h_nbrs[0]).unwrap());
            } else if d_h(u) >= 2 {
                let mut cand: Vec<usize> = h_nbrs
                    .iter()
                    .map(|&x| phi.get(x).unwrap())
                    .filter(|c| l.contains(c))
                    .collect();
                cand.sort_unstable();
                cand.dedup();
                remove.extend(cand.into_iter().take(2));
            }
        }
        for &w in g.neighbors(a) {
            if g.degree(w) != 2 {
                continue;
            }
            for &u in g.neighbors(w) {
                if u != a && !in_s[u] {
                    remove.push(phi.get(u).unwrap());
                }
            }
        }
        l.retain(|c| !remove.contains(c));
        out.push((a, l));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Local recoloring.

/// The five colored vertices, besides `x` itself, that the recoloring is
/// allowed to touch.
#[derive(Clone, Copy, Debug)]
pub struct RecolorContext {
    pub y: usize,
    pub z: usize,
    pub y1: usize,
    pub y2: usize,
    pub z1: usize,
}

/// Finds a coloring that changes the color of `x`, touching only `x` and the
/// context vertices, and agreeing with `phi` everywhere else.
pub fn recolor_claim1(
    g: &Graph,
    phi: &Coloring,
    x: usize,
    ctx: &RecolorContext,
    lists: &ListAssignment,
) -> Result<Coloring, ConstructiveError> {
    let all = [x, ctx.y, ctx.z, ctx.y1, ctx.y2, ctx.z1];
    for &v in &all {
        if v >= g.n() {
            return Err(ConstructiveError::MalformedContext(format!(
                "vertex {v} out of range"
            )));
        }
    }
    let mut uniq = all.to_vec();
    uniq.sort_unstable();
    uniq.dedup();
    if uniq.len() != all.len() {
        return Err(ConstructiveError::MalformedContext(
            "context vertices must be distinct".into(),
        ));
    }
    for (u, v, what) in [
        (x, ctx.y, "y adjacent to x"),
        (x, ctx.z, "z adjacent to x"),
        (ctx.y, ctx.y1, "y1 adjacent to y"),
        (ctx.y, ctx.y2, "y2 adjacent to y"),
        (ctx.z, ctx.z1, "z1 adjacent to z"),
    ] {
        if !g.has_edge(u, v) {
            return Err(ConstructiveError::MalformedContext(format!(
                "expected {what}"
            )));
        }
    }
    if lists.lists.len() != g.n() {
        return Err(ConstructiveError::MalformedContext(
            "list assignment does not cover the graph".into(),
        ));
    }
    match check_r_dynamic(g, 3, phi, None) {
        Ok(Ok(())) => {}
        _ => {
            return Err(ConstructiveError::InvalidPartial(
                "phi must be a total valid 3-dynamic coloring".into(),
            ))
        }
    }
    let old = phi.get(x).unwrap();
    let mut dom = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        if v == x {
            let mut l = lists.lists[v].clone();
            l.retain(|&c| c != old);
            dom.push(l);
        } else if all.contains(&v) {
            dom.push(lists.lists[v].clone());
        } else {
            dom.push(vec![phi.get(v).unwrap()]);
        }
    }
    color_with_lists(g, 3, &ListAssignment { lists: dom })
        .map_err(|e| ConstructiveError::InternalExtensionFailure(e.to_string()))?
        .ok_or_else(|| {
            ConstructiveError::InternalExtensionFailure("no recoloring exists".into())
        })
}
