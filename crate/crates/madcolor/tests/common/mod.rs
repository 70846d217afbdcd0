//! Shared helpers for the integration suites: exhaustive non-isomorphic graph
//! enumeration at desk scale, an independent partition-based chromatic oracle,
//! and a plain random graph source.

use madcolor::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

fn relabel(n: usize, mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_index(i, j) & 1 == 1 {
                let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                out |= 1 << pair_index(a, b);
            }
        }
    }
    out
}

fn mask_to_graph(n: usize, mask: u32) -> Graph {
    let mut g = Graph::new(n);
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_index(i, j) & 1 == 1 {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// All graphs with 1..=max_n vertices, one representative per isomorphism
/// class, built by vertex augmentation with canonical deduplication.
pub fn nonisomorphic_graphs(max_n: usize) -> Vec<Graph> {
    assert!(max_n <= 7, "canonical forms use u32 masks and full symmetry");
    let mut out: Vec<Graph> = vec![Graph::new(1)];
    let mut level: Vec<u32> = vec![0];
    for n in 2..=max_n {
        let perms = permutations(n);
        let canon = |mask: u32| -> u32 {
            perms.iter().map(|p| relabel(n, mask, p)).min().unwrap()
        };
        let mut next: HashSet<u32> = HashSet::new();
        for &parent in &level {
            for ext in 0u32..(1 << (n - 1)) {
                let mut mask = parent;
                for i in 0..n - 1 {
                    if ext >> i & 1 == 1 {
                        mask |= 1 << pair_index(i, n - 1);
                    }
                }
                next.insert(canon(mask));
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
        out.extend(level.iter().map(|&m| mask_to_graph(n, m)));
    }
    out
}

/// Independent r-dynamic chromatic number: enumerate set partitions by
/// restricted-growth strings and take the fewest blocks among valid ones.
pub fn chi_brute_force(g: &Graph, r: usize) -> Option<usize> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let mut best: Option<usize> = None;
    let mut a = vec![0usize; n];
    loop {
        let blocks = a.iter().max().unwrap() + 1;
        if best.map_or(true, |b| blocks < b) && partition_valid(g, r, &a) {
            best = Some(blocks);
        }
        // next restricted-growth string
        let mut i = n;
        loop {
            if i == 1 {
                return best;
            }
            i -= 1;
            let cap = a[..i].iter().max().unwrap() + 1;
            if a[i] < cap {
                a[i] += 1;
                for t in i + 1..n {
                    a[t] = 0;
                }
                break;
            }
            a[i] = 0;
        }
    }
}

fn partition_valid(g: &Graph, r: usize, block: &[usize]) -> bool {
    for v in 0..g.n() {
        let mut seen = 0u32;
        for &u in g.neighbors(v) {
            if block[u] == block[v] {
                return false;
            }
            seen |= 1 << block[u];
        }
        if (seen.count_ones() as usize) < r.min(g.degree(v)) {
            return false;
        }
    }
    true
}

/// Plain Erdos-Renyi style random graph, unconstrained density.
pub fn random_graph(n: usize, edge_prob_percent: u32, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen_range(0..100) < edge_prob_percent {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}
