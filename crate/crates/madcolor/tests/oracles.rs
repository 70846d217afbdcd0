//! Oracle cross-checks: every nontrivial answer is recomputed by an
//! independent, deliberately naive implementation at desk scale.

mod common;

use common::{chi_brute_force, nonisomorphic_graphs, random_graph};
use madcolor::configs::{find_config_thm3, find_config_thm4, find_config_thm5};
use madcolor::discharging::{discharge, RuleSet};
use madcolor::graph::{is_valid_r_dynamic, Graph};
use madcolor::mad::{mad_brute_force, mad_exact};
use madcolor::rational::Rat;
use madcolor::solver::{chi_r_dynamic, color_with_lists, ListAssignment};

// ---------------------------------------------------------------------------
// Naive configuration predicates (plain quantifier loops).

fn deg(g: &Graph, v: usize) -> usize {
    g.degree(v)
}

fn two_nbrs(g: &Graph, v: usize) -> Vec<usize> {
    g.neighbors(v).iter().copied().filter(|&u| deg(g, u) == 2).collect()
}

fn far(g: &Graph, w: usize, not: usize) -> usize {
    *g.neighbors(w).iter().find(|&&t| t != not).unwrap()
}

fn naive_low_degree(g: &Graph) -> bool {
    let n = g.n();
    if (0..n).any(|v| deg(g, v) <= 1) {
        return true;
    }
    for x in 0..n {
        for y in 0..n {
            if !g.has_edge(x, y) {
                continue;
            }
            if deg(g, x) <= 2 && deg(g, y) <= 2 {
                return true;
            }
            for w in 0..n {
                if w != x && w != y && deg(g, w) == 2 && g.has_edge(w, x) && g.has_edge(w, y) {
                    return true;
                }
            }
        }
    }
    for x in 0..n {
        if deg(g, x) != 3 {
            continue;
        }
        let tn = two_nbrs(g, x);
        for a in 0..tn.len() {
            for b in 0..tn.len() {
                if a != b && far(g, tn[a], x) == far(g, tn[b], x) {
                    return true;
                }
            }
        }
    }
    false
}

fn naive_pattern_a(g: &Graph) -> bool {
    let n = g.n();
    if n < 7 {
        return false;
    }
    // labels: v1 v2 v3 v4 v5 w u
    let edges = [(0, 1), (0, 5), (0, 4), (3, 4), (3, 2), (1, 2), (5, 6)];
    let exact = [
        Some(3usize),
        Some(3),
        Some(2),
        None,
        Some(2),
        Some(2),
        None,
    ];
    let mut tuple = [0usize; 7];
    fn rec(
        g: &Graph,
        depth: usize,
        tuple: &mut [usize; 7],
        edges: &[(usize, usize)],
        exact: &[Option<usize>; 7],
    ) -> bool {
        if depth == 7 {
            return true;
        }
        'v: for v in 0..g.n() {
            if tuple[..depth].contains(&v) {
                continue;
            }
            match exact[depth] {
                Some(d) => {
                    if g.degree(v) != d {
                        continue;
                    }
                }
                None => {
                    if g.degree(v) < 3 {
                        continue;
                    }
                }
            }
            for j in 0..depth {
                let want = edges.contains(&(j, depth)) || edges.contains(&(depth, j));
                if g.has_edge(v, tuple[j]) != want {
                    continue 'v;
                }
            }
            tuple[depth] = v;
            if rec(g, depth + 1, tuple, edges, exact) {
                return true;
            }
        }
        false
    }
    rec(g, 0, &mut tuple, &edges, &exact)
}

fn naive_thm3(g: &Graph) -> bool {
    if naive_low_degree(g) || naive_pattern_a(g) {
        return true;
    }
    let n = g.n();
    // the twelve-label pattern needs 12 distinct vertices; absent at this scale
    assert!(n < 12);
    let w_count = |v: usize| -> Option<usize> {
        (deg(g, v) == 3).then(|| two_nbrs(g, v).len())
    };
    // adjacent pair with exactly two 2-neighbors each, all six distinct
    for x in 0..n {
        for y in 0..n {
            if !g.has_edge(x, y) || w_count(x) != Some(2) || w_count(y) != Some(2) {
                continue;
            }
            let mut s = vec![x, y];
            s.extend(two_nbrs(g, x));
            s.extend(two_nbrs(g, y));
            let mut t = s.clone();
            t.sort_unstable();
            t.dedup();
            if t.len() == 6 {
                return true;
            }
        }
    }
    for x in 0..n {
        if w_count(x) != Some(3) {
            continue;
        }
        for v1 in two_nbrs(g, x) {
            let u1 = far(g, v1, x);
            if deg(g, u1) >= 4 {
                return true;
            }
            if deg(g, u1) == 3 {
                for &w in g.neighbors(u1) {
                    if deg(g, w) == 2
                        && w != x
                        && !two_nbrs(g, x).contains(&w)
                    {
                        return true;
                    }
                }
            }
        }
    }
    for x in 0..n {
        if w_count(x) != Some(1) {
            continue;
        }
        let w = two_nbrs(g, x)[0];
        let others: Vec<usize> = g.neighbors(x).iter().copied().filter(|&t| t != w).collect();
        if others.iter().all(|&t| w_count(t) == Some(2)) {
            let mut s = vec![x, w, others[0], others[1]];
            s.extend(two_nbrs(g, others[0]));
            s.extend(two_nbrs(g, others[1]));
            let mut t = s.clone();
            t.sort_unstable();
            t.dedup();
            if t.len() == 8 {
                return true;
            }
        }
        // junction: weak neighbor through w in W3, plus a W2 and a W1 neighbor
        let u = far(g, w, x);
        if u != x && w_count(u) == Some(3) {
            for &y in &others {
                let z = others[0] + others[1] - y;
                if w_count(y) == Some(2) && w_count(z) == Some(1) {
                    let z1 = two_nbrs(g, z)[0];
                    let z2 = *g
                        .neighbors(z)
                        .iter()
                        .find(|&&t| t != x && t != z1)
                        .unwrap();
                    let mut s = vec![x, y, z, u, w, z1, z2];
                    s.extend(two_nbrs(g, u).into_iter().filter(|&t| t != w));
                    s.extend(two_nbrs(g, y));
                    let mut t = s.clone();
                    t.sort_unstable();
                    t.dedup();
                    if t.len() == 11 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn naive_thm4(g: &Graph) -> bool {
    if naive_low_degree(g) {
        return true;
    }
    let n = g.n();
    for v in 0..n {
        let k = deg(g, v);
        if (k == 3 || k == 4) && two_nbrs(g, v).len() >= k - 1 {
            return true;
        }
    }
    let w1 = |v: usize| deg(g, v) == 3 && two_nbrs(g, v).len() == 1;
    for x in 0..n {
        for y in 0..n {
            if g.has_edge(x, y)
                && w1(x)
                && w1(y)
                && two_nbrs(g, x)[0] != two_nbrs(g, y)[0]
            {
                return true;
            }
        }
    }
    for x in 0..n {
        if deg(g, x) == 3 && g.neighbors(x).iter().all(|&u| w1(u)) {
            return true;
        }
    }
    false
}

fn naive_thm5(g: &Graph) -> bool {
    if naive_low_degree(g) {
        return true;
    }
    let n = g.n();
    for x in 0..n {
        if deg(g, x) <= 3 && !two_nbrs(g, x).is_empty() {
            return true;
        }
    }
    for v in 0..n {
        let k = deg(g, v);
        if (k == 4 || k == 5) && two_nbrs(g, v).len() >= k - 1 {
            return true;
        }
    }
    false
}

#[test]
fn config_finders_agree_with_naive_predicates_exhaustively() {
    for g in nonisomorphic_graphs(7) {
        assert_eq!(find_config_thm3(&g).is_some(), naive_thm3(&g), "{g:?}");
        assert_eq!(find_config_thm4(&g).is_some(), naive_thm4(&g), "{g:?}");
        assert_eq!(find_config_thm5(&g).is_some(), naive_thm5(&g), "{g:?}");
    }
}

#[test]
fn config_finders_agree_with_naive_predicates_on_random_graphs() {
    for seed in 0..300 {
        let g = random_graph(8, 25 + (seed % 40) as u32, seed);
        assert_eq!(find_config_thm3(&g).is_some(), naive_thm3(&g), "seed {seed}");
        assert_eq!(find_config_thm4(&g).is_some(), naive_thm4(&g), "seed {seed}");
        assert_eq!(find_config_thm5(&g).is_some(), naive_thm5(&g), "seed {seed}");
    }
}

// ---------------------------------------------------------------------------
// Solver and density invariants.

#[test]
fn chi_is_monotone_in_r_and_bounded_by_square() {
    for seed in 0..60 {
        let g = random_graph(8, 30, 1000 + seed);
        if g.edge_count() == 0 {
            continue;
        }
        let chis: Vec<usize> = (1..=3)
            .map(|r| chi_r_dynamic(&g, r, None).unwrap().0)
            .collect();
        assert!(chis[0] <= chis[1] && chis[1] <= chis[2]);
        let sq = chi_r_dynamic(&g.square(), 1, None).unwrap().0;
        assert!(chis[2] <= sq);
    }
}

#[test]
fn list_solutions_respect_lists() {
    for seed in 0..40 {
        let g = random_graph(7, 35, 2000 + seed);
        let lists = ListAssignment::uniform(7, &[2, 3, 5, 7, 11, 13]);
        if let Some(phi) = color_with_lists(&g, 3, &lists).unwrap() {
            assert_eq!(
                is_valid_r_dynamic(&g, 3, &phi, Some(&lists.lists)),
                Ok(true)
            );
        }
    }
}

#[test]
fn mad_agrees_with_subset_brute_force_on_random_graphs() {
    for seed in 0..120 {
        let g = random_graph(9, 30, 3000 + seed);
        if g.edge_count() == 0 {
            continue;
        }
        assert_eq!(
            mad_exact(&g).unwrap().0,
            mad_brute_force(&g).unwrap().0,
            "seed {seed}"
        );
    }
}

#[test]
fn chi_agrees_with_partition_oracle_on_random_graphs() {
    for seed in 0..60 {
        let g = random_graph(7, 40, 4000 + seed);
        for r in 1..=3 {
            assert_eq!(
                chi_r_dynamic(&g, r, None).unwrap().0,
                chi_brute_force(&g, r).unwrap(),
                "seed {seed} r {r}"
            );
        }
    }
}

#[test]
fn discharging_conserves_total_charge_on_arbitrary_graphs() {
    for seed in 0..100 {
        let g = random_graph(10, 30, 5000 + seed);
        for rules in [RuleSet::Thm3, RuleSet::Thm4, RuleSet::Thm5] {
            let ledger = discharge(&g, rules);
            assert_eq!(
                ledger.total_final(),
                Rat::from_int(2 * g.edge_count() as i64)
            );
        }
    }
}

#[test]
fn enumeration_counts_match_the_literature() {
    let all = nonisomorphic_graphs(7);
    let count = |n: usize| all.iter().filter(|g| g.n() == n).count();
    assert_eq!(count(1), 1);
    assert_eq!(count(2), 2);
    assert_eq!(count(3), 4);
    assert_eq!(count(4), 11);
    assert_eq!(count(5), 34);
    assert_eq!(count(6), 156);
    assert_eq!(count(7), 1044);
}
