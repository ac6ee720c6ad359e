//! Simple undirected graphs with stable edge indices, plus the traversal
//! primitives the verifiers are built from.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// An unordered vertex pair, always stored as `(smaller, larger)`.
pub type Pair = (usize, usize);

/// Normalizes a vertex pair so that the smaller index comes first.
pub fn ordered(u: usize, v: usize) -> Pair {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edge `i` is the `i`-th pair handed to [`Graph::new`] and keeps that index
/// for the lifetime of the graph, so colorings can be plain arrays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Pair>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range
    /// endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let p = ordered(u, v);
            if !seen.insert(p) {
                return Err(Error::DuplicateEdge(p.0, p.1));
            }
            normalized.push(p);
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Pair] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Pair {
        self.edges[e]
    }

    /// Neighbors of `v` as `(neighbor, edge index)` in insertion order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Index of the edge joining `u` and `v`, if any.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.adj
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut sc = Scratch::new(self.n);
        self.mark_reachable(&mut sc, 0, |_| true, |_| true);
        (0..self.n).all(|v| sc.is_marked(v))
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.m() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange { edge: e, m: self.m() })
        }
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        self.component_count_without(None)
    }

    /// Number of connected components after deleting `removed` (if any).
    pub fn component_count_without(&self, removed: Option<usize>) -> usize {
        let mut sc = Scratch::new(self.n);
        let mut count = 0;
        let mut seen = vec![false; self.n];
        for r in 0..self.n {
            if Some(r) == removed || seen[r] {
                continue;
            }
            count += 1;
            sc.next_stamp();
            self.mark_reachable(&mut sc, r, |x| Some(x) != removed, |_| true);
            for (v, s) in seen.iter_mut().enumerate() {
                *s |= sc.is_marked(v);
            }
        }
        count
    }

    /// Vertices reachable from `root` once the given vertices and edges are
    /// deleted.
    pub fn dfs_component(
        &self,
        root: usize,
        removed_vertices: &[usize],
        removed_edges: &[usize],
    ) -> Result<BTreeSet<usize>> {
        self.check_vertex(root)?;
        for &v in removed_vertices {
            self.check_vertex(v)?;
        }
        for &e in removed_edges {
            self.check_edge(e)?;
        }
        if removed_vertices.contains(&root) {
            return Err(Error::RootRemoved(root));
        }
        let mut dead_v = vec![false; self.n];
        removed_vertices.iter().for_each(|&v| dead_v[v] = true);
        let mut dead_e = vec![false; self.m()];
        removed_edges.iter().for_each(|&e| dead_e[e] = true);
        let mut sc = Scratch::new(self.n);
        self.mark_reachable(&mut sc, root, |v| !dead_v[v], |e| !dead_e[e]);
        Ok((0..self.n).filter(|&v| sc.is_marked(v)).collect())
    }

    /// Hop distances from `root` with the given edges deleted.
    pub fn bfs_distances(&self, root: usize, removed_edges: &[usize]) -> Result<DistanceTable> {
        self.check_vertex(root)?;
        for &e in removed_edges {
            self.check_edge(e)?;
        }
        let mut dead_e = vec![false; self.m()];
        removed_edges.iter().for_each(|&e| dead_e[e] = true);
        let mut sc = Scratch::new(self.n);
        self.bfs_into(&mut sc, root, |e| !dead_e[e]);
        Ok(DistanceTable {
            source: root,
            dist: sc
                .dist
                .iter()
                .map(|&d| (d != UNREACHED).then_some(d))
                .collect(),
        })
    }

    /// All-pairs hop distances; `None` marks unreachable pairs.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<u32>>> {
        let mut sc = Scratch::new(self.n);
        (0..self.n)
            .map(|r| {
                self.bfs_into(&mut sc, r, |_| true);
                sc.dist
                    .iter()
                    .map(|&d| (d != UNREACHED).then_some(d))
                    .collect()
            })
            .collect()
    }

    /// Largest distance between two vertices, or `None` when disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for row in self.distance_matrix() {
            for d in row {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Whether the vertices admit a proper 2-coloring.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for r in 0..self.n {
            if side[r] != u8::MAX {
                continue;
            }
            side[r] = 0;
            let mut queue = VecDeque::from([r]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x] {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Says whether edge `e` is vertical or horizontal with respect to `u`.
    pub fn classify_edge(&self, u: usize, e: usize) -> Result<EdgeKind> {
        self.check_vertex(u)?;
        self.check_edge(e)?;
        self.require_connected()?;
        let table = self.bfs_distances(u, &[])?;
        let (s, t) = self.edges[e];
        // both finite on a connected graph
        let (ds, dt) = (table.dist[s].unwrap(), table.dist[t].unwrap());
        Ok(if ds.abs_diff(dt) == 1 {
            EdgeKind::Vertical
        } else {
            EdgeKind::Horizontal
        })
    }

    /// Biconnected decomposition of a connected graph.
    pub fn cut_vertices_and_blocks(&self) -> Result<BlockDecomposition> {
        self.require_connected()?;
        let blocks = self.biconnected_blocks();
        let mut count = vec![0usize; self.n];
        for block in &blocks {
            for v in block_vertices(self, block) {
                count[v] += 1;
            }
        }
        let cut_vertices = (0..self.n).filter(|&v| count[v] >= 2).collect();
        Ok(BlockDecomposition {
            cut_vertices,
            blocks,
        })
    }

    /// Whether the graph is connected, has at least three vertices, and has
    /// no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3
            && self
                .cut_vertices_and_blocks()
                .is_ok_and(|bd| bd.cut_vertices.is_empty())
    }

    /// Whether the graph is connected, has at least one edge, and no bridge.
    pub fn is_two_edge_connected(&self) -> bool {
        self.m() > 0
            && self
                .cut_vertices_and_blocks()
                .is_ok_and(|bd| bd.blocks.iter().all(|b| b.len() > 1))
    }

    /// Iterative Hopcroft-Tarjan over every component.
    fn biconnected_blocks(&self) -> Vec<Vec<usize>> {
        const NONE: usize = usize::MAX;
        let n = self.n;
        let mut disc = vec![NONE; n];
        let mut low = vec![0; n];
        let mut clock = 0;
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut blocks = Vec::new();
        // frame: (vertex, edge used to enter, next adjacency position)
        let mut frames: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != NONE {
                continue;
            }
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            frames.push((root, NONE, 0));
            while let Some(&mut (v, via, ref mut pos)) = frames.last_mut() {
                if *pos < self.adj[v].len() {
                    let (w, e) = self.adj[v][*pos];
                    *pos += 1;
                    if e == via {
                        continue;
                    }
                    if disc[w] == NONE {
                        edge_stack.push(e);
                        disc[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        frames.push((w, e, 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(e);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    frames.pop();
                    if let Some(&(parent, _, _)) = frames.last() {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] >= disc[parent] {
                            let mut block = Vec::new();
                            while let Some(f) = edge_stack.pop() {
                                block.push(f);
                                if f == via {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks.sort();
        blocks
    }

    pub(crate) fn mark_reachable(
        &self,
        sc: &mut Scratch,
        root: usize,
        vertex_ok: impl Fn(usize) -> bool,
        edge_ok: impl Fn(usize) -> bool,
    ) {
        sc.next_stamp();
        let stamp = sc.stamp;
        sc.stack.clear();
        sc.mark[root] = stamp;
        sc.stack.push(root);
        while let Some(x) = sc.stack.pop() {
            for &(y, e) in &self.adj[x] {
                if sc.mark[y] != stamp && edge_ok(e) && vertex_ok(y) {
                    sc.mark[y] = stamp;
                    sc.stack.push(y);
                }
            }
        }
    }

    pub(crate) fn bfs_into(&self, sc: &mut Scratch, root: usize, edge_ok: impl Fn(usize) -> bool) {
        sc.dist.iter_mut().for_each(|d| *d = UNREACHED);
        sc.stack.clear();
        sc.dist[root] = 0;
        sc.stack.push(root);
        let mut head = 0;
        while head < sc.stack.len() {
            let x = sc.stack[head];
            head += 1;
            let next = sc.dist[x] + 1;
            for &(y, e) in &self.adj[x] {
                if sc.dist[y] == UNREACHED && edge_ok(e) {
                    sc.dist[y] = next;
                    sc.stack.push(y);
                }
            }
        }
    }
}

/// Sentinel stored in [`Scratch::dist`] for vertices not reached.
pub(crate) const UNREACHED: u32 = u32::MAX;

/// Reusable traversal buffers. Marks use a generation stamp so clearing is
/// O(1) between traversals.
pub(crate) struct Scratch {
    mark: Vec<u32>,
    stamp: u32,
    stack: Vec<usize>,
    pub(crate) dist: Vec<u32>,
}

impl Scratch {
    pub(crate) fn new(n: usize) -> Scratch {
        Scratch {
            mark: vec![0; n],
            stamp: 0,
            stack: Vec::with_capacity(n),
            dist: vec![UNREACHED; n],
        }
    }

    fn next_stamp(&mut self) {
        if self.stamp == u32::MAX {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 0;
        }
        self.stamp += 1;
    }

    #[inline]
    pub(crate) fn is_marked(&self, v: usize) -> bool {
        self.mark[v] == self.stamp
    }
}

/// Hop distances from a single source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    pub source: usize,
    /// `None` for vertices that cannot be reached.
    pub dist: Vec<Option<u32>>,
}

impl DistanceTable {
    pub fn get(&self, v: usize) -> Option<u32> {
        self.dist[v]
    }
}

/// Position of an edge relative to BFS layers around a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    /// Endpoint distances differ by one.
    Vertical,
    /// Endpoints lie in the same layer.
    Horizontal,
}

/// Cut vertices and blocks (as sorted edge-index lists) of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub cut_vertices: BTreeSet<usize>,
    pub blocks: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    /// For every unordered pair of distinct vertices, the indices of blocks
    /// on the block-tree path between them. Every edge of those blocks lies
    /// on some simple path joining the pair, and no other edge does.
    pub(crate) fn blocks_between(&self, g: &Graph) -> Vec<Vec<Vec<usize>>> {
        let nb = self.blocks.len();
        let cuts: Vec<usize> = self.cut_vertices.iter().copied().collect();
        let cut_node = |v: usize| cuts.binary_search(&v).ok().map(|i| nb + i);
        let mut home = vec![usize::MAX; g.n()];
        let mut tree = vec![Vec::new(); nb + cuts.len()];
        for (b, block) in self.blocks.iter().enumerate() {
            for v in block_vertices(g, block) {
                match cut_node(v) {
                    Some(c) => {
                        tree[b].push(c);
                        tree[c].push(b);
                    }
                    None => home[v] = b,
                }
            }
        }
        let node_of = |v: usize| cut_node(v).unwrap_or(home[v]);
        let mut out = vec![vec![Vec::new(); g.n()]; g.n()];
        for u in 0..g.n() {
            let start = node_of(u);
            if start == usize::MAX {
                continue;
            }
            let mut parent = vec![usize::MAX; tree.len()];
            parent[start] = start;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &tree[x] {
                    if parent[y] == usize::MAX {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            for v in 0..g.n() {
                if v == u {
                    continue;
                }
                let mut x = node_of(v);
                let mut path = Vec::new();
                loop {
                    if x < nb {
                        path.push(x);
                    }
                    if x == start {
                        break;
                    }
                    x = parent[x];
                }
                path.sort_unstable();
                out[u][v] = path;
            }
        }
        out
    }
}

/// Vertices touched by a set of edges, sorted.
pub fn block_vertices(g: &Graph, block: &[usize]) -> Vec<usize> {
    let mut vs: Vec<usize> = block
        .iter()
        .flat_map(|&e| {
            let (s, t) = g.edge(e);
            [s, t]
        })
        .collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(2, &[(0, 1)]).unwrap().m(), 1);
        assert_eq!(path(4).edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            Graph::new(3, &[(0, 1), (0, 1)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(3, &[(2, 2)]), Err(Error::SelfLoop(2)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn dfs_component_examples() {
        let p4 = path(4);
        let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(p4.dfs_component(0, &[2], &[]).unwrap(), set(&[0, 1]));
        assert_eq!(p4.dfs_component(0, &[], &[]).unwrap(), set(&[0, 1, 2, 3]));
        let c4 = cycle(4);
        let e01 = c4.edge_index(0, 1).unwrap();
        assert_eq!(
            c4.dfs_component(0, &[], &[e01]).unwrap(),
            set(&[0, 1, 2, 3])
        );
        assert_eq!(p4.dfs_component(1, &[1], &[]), Err(Error::RootRemoved(1)));
    }

    #[test]
    fn bfs_examples() {
        let d = |t: DistanceTable| t.dist;
        assert_eq!(
            d(path(4).bfs_distances(0, &[]).unwrap()),
            vec![Some(0), Some(1), Some(2), Some(3)]
        );
        assert_eq!(
            d(cycle(4).bfs_distances(0, &[]).unwrap()),
            vec![Some(0), Some(1), Some(2), Some(1)]
        );
        assert_eq!(
            d(path(4).bfs_distances(0, &[1]).unwrap()),
            vec![Some(0), Some(1), None, None]
        );
    }

    #[test]
    fn classify_examples() {
        let c4 = cycle(4);
        assert_eq!(
            c4.classify_edge(0, c4.edge_index(1, 2).unwrap()).unwrap(),
            EdgeKind::Vertical
        );
        for &(_, e) in c4.neighbors(0) {
            assert_eq!(c4.classify_edge(0, e).unwrap(), EdgeKind::Vertical);
        }
        let c5 = cycle(5);
        assert_eq!(
            c5.classify_edge(0, c5.edge_index(2, 3).unwrap()).unwrap(),
            EdgeKind::Horizontal
        );
        let split = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(split.classify_edge(0, 0), Err(Error::Disconnected));
    }

    #[test]
    fn block_examples() {
        let bd = cycle(4).cut_vertices_and_blocks().unwrap();
        assert!(bd.cut_vertices.is_empty());
        assert_eq!(bd.blocks.len(), 1);

        let bd = path(4).cut_vertices_and_blocks().unwrap();
        assert_eq!(bd.cut_vertices, BTreeSet::from([1, 2]));
        assert_eq!(bd.blocks, vec![vec![0], vec![1], vec![2]]);

        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let bd = bowtie.cut_vertices_and_blocks().unwrap();
        assert_eq!(bd.cut_vertices, BTreeSet::from([2]));
        assert_eq!(bd.blocks.len(), 2);
    }

    #[test]
    fn structural_predicates() {
        assert!(cycle(5).is_two_connected());
        assert!(cycle(5).is_two_edge_connected());
        assert!(!path(3).is_two_edge_connected());
        assert!(cycle(4).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert_eq!(cycle(5).diameter(), Some(2));
        assert_eq!(Graph::new(3, &[(0, 1)]).unwrap().diameter(), None);
        assert_eq!(path(4).component_count_without(Some(1)), 2);
    }
}
