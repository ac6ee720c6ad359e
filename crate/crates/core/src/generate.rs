//! Graph families: fixed shapes, seeded random graphs and exhaustive
//! enumerations for small orders.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Pair};

/// Largest order accepted by [`all_connected`].
pub const MAX_ENUMERATED_ORDER: usize = 7;
/// Largest order accepted by [`all_trees`].
pub const MAX_TREE_ORDER: usize = 14;

/// A family of graphs, as requested from the command line.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    RandomTree { n: usize, seed: u64 },
    Gnp { n: usize, p: f64, seed: u64 },
    AllConnected(usize),
}

/// Every member of `family`, lazily for the exhaustive ones.
pub fn generate_family(family: &Family) -> Result<Box<dyn Iterator<Item = Graph>>> {
    let one = |g: Result<Graph>| -> Result<Box<dyn Iterator<Item = Graph>>> {
        Ok(Box::new(std::iter::once(g?)))
    };
    match *family {
        Family::Path(n) => one(path(n)),
        Family::Cycle(n) => one(cycle(n)),
        Family::Star(n) => one(star(n)),
        Family::Complete(n) => one(complete(n)),
        Family::RandomTree { n, seed } => one(random_tree(n, seed)),
        Family::Gnp { n, p, seed } => one(gnp(n, p, seed)),
        Family::AllConnected(n) => Ok(Box::new(all_connected(n)?)),
    }
}

/// `P_n`: vertices `0..n`, edge `i` joins `i` and `i + 1`.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<Pair> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<Pair> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// `K_{1,n-1}` with center `0`.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParams("star needs n >= 1".into()));
    }
    let edges: Vec<Pair> = (1..n).map(|i| (0, i)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::new(n, &complete_edges(n))
}

fn complete_edges(n: usize) -> Vec<Pair> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Uniform labeled tree decoded from a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tree_with(n, &mut rng)
}

fn random_tree_with(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParams("tree needs n >= 1".into()));
    }
    if n <= 2 {
        return path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &code {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf remains");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges.sort_unstable_by_key(|&(a, b)| (a.min(b), a.max(b)));
    Graph::new(n, &edges)
}

/// Erdős–Rényi `G(n, p)`; may be disconnected.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!("p must lie in [0, 1], got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<Pair> = complete_edges(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, &edges)
}

/// A connected graph with `m` edges: a random spanning tree plus `m - n + 1`
/// uniformly chosen extra edges. Edges are listed in lexicographic order.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max = n * n.saturating_sub(1) / 2;
    if n == 0 || m + 1 < n || m > max {
        return Err(Error::InvalidParams(format!(
            "no connected graph with n={n}, m={m}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree_with(n, &mut rng)?;
    let mut chosen = tree.edges().to_vec();
    let mut rest: Vec<Pair> = complete_edges(n)
        .into_iter()
        .filter(|e| !chosen.contains(e))
        .collect();
    rest.shuffle(&mut rng);
    chosen.extend_from_slice(&rest[..m + 1 - n]);
    chosen.sort_unstable();
    Graph::new(n, &chosen)
}

/// Every labeled connected graph on `0..n`, each exactly once. Edge subsets
/// of `K_n` are visited in binary counting order, bit `i` standing for the
/// `i`-th pair in lexicographic order.
pub fn all_connected(n: usize) -> Result<AllConnected> {
    if n > MAX_ENUMERATED_ORDER {
        return Err(Error::TooLarge {
            n,
            limit: MAX_ENUMERATED_ORDER,
        });
    }
    let pairs = complete_edges(n);
    let end = 1u64 << pairs.len();
    Ok(AllConnected {
        n,
        pairs,
        mask: 0,
        end,
    })
}

/// Iterator returned by [`all_connected`].
#[derive(Clone, Debug)]
pub struct AllConnected {
    n: usize,
    pairs: Vec<Pair>,
    mask: u64,
    end: u64,
}

impl AllConnected {
    fn connected(&self, mask: u64) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut parts = self.n;
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    parts -= 1;
                }
            }
        }
        parts == 1
    }
}

impl Iterator for AllConnected {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.mask < self.end {
            let mask = self.mask;
            self.mask += 1;
            if self.connected(mask) {
                let edges: Vec<Pair> = (0..self.pairs.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.pairs[i])
                    .collect();
                return Some(Graph::new(self.n, &edges).expect("pairs of K_n are valid"));
            }
        }
        None
    }
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// ordered by canonical form.
pub fn all_trees(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_TREE_ORDER {
        return Err(Error::TooLarge {
            n,
            limit: MAX_TREE_ORDER,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeMap<String, Vec<Pair>> = BTreeMap::new();
    level.insert(canonical_tree(1, &[]), Vec::new());
    for order in 2..=n {
        let mut next = BTreeMap::new();
        for edges in level.values() {
            for v in 0..order - 1 {
                let mut grown = edges.clone();
                grown.push((v, order - 1));
                next.entry(canonical_tree(order, &grown)).or_insert(grown);
            }
        }
        level = next;
    }
    level
        .into_values()
        .map(|edges| Graph::new(n, &edges))
        .collect()
}

/// AHU encoding of a free tree, rooted at its center (the smaller encoding
/// when there are two centers).
fn canonical_tree(n: usize, edges: &[Pair]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // peel leaves until one or two vertices remain
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &adj[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| encode(&adj, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(adj, w, v))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_shapes() {
        assert_eq!(path(4).unwrap().edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(cycle(4).unwrap().m(), 4);
        assert_eq!(star(4).unwrap().degree(0), 3);
        assert_eq!(complete(5).unwrap().m(), 10);
        assert!(cycle(2).is_err());
    }

    #[test]
    fn all_connected_counts() {
        let three: Vec<_> = all_connected(3).unwrap().collect();
        assert_eq!(three.len(), 4);
        assert_eq!(three.iter().filter(|g| g.m() == 2).count(), 3);
        // OEIS A001187
        let counts: Vec<usize> = (1..=5).map(|n| all_connected(n).unwrap().count()).collect();
        assert_eq!(counts, [1, 1, 4, 38, 728]);
        assert!(matches!(all_connected(8), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn seeded_families_are_deterministic() {
        assert_eq!(gnp(5, 0.5, 7).unwrap(), gnp(5, 0.5, 7).unwrap());
        assert_eq!(random_tree(9, 3).unwrap(), random_tree(9, 3).unwrap());
        let g = random_connected(20, 60, 1).unwrap();
        assert_eq!(g.m(), 60);
        assert!(g.is_connected());
        assert_eq!(g, random_connected(20, 60, 1).unwrap());
    }

    #[test]
    fn random_trees_are_trees() {
        for seed in 0..20 {
            let t = random_tree(10, seed).unwrap();
            assert_eq!(t.m(), 9);
            assert!(t.is_connected());
        }
    }

    #[test]
    fn tree_classes() {
        // OEIS A000055
        let counts: Vec<usize> = (1..=10).map(|n| all_trees(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert!(all_trees(9).unwrap().iter().all(|t| t.is_connected() && t.m() == 8));
    }
}
