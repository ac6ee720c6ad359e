//! Exponential ground-truth checks by explicit simple-path enumeration.
//!
//! These exist to validate the polynomial verifiers and the reductions on
//! small instances, so every entry point refuses graphs above a vertex limit
//! instead of silently running for hours.

use std::ops::ControlFlow;

use crate::coloring::{EdgeColoring, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_VERTICES: usize = 12;

/// Simple paths as vertex sequences.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathList {
    pub paths: Vec<Vec<usize>>,
}

/// Path-enumeration checker with a configurable size guard.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub max_vertices: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl Oracle {
    fn guard(&self, g: &Graph) -> Result<()> {
        if g.n() > self.max_vertices {
            Err(Error::TooLarge {
                n: g.n(),
                limit: self.max_vertices,
            })
        } else {
            Ok(())
        }
    }

    /// Every simple `u`-`v` path with at most `max_len` edges, each exactly
    /// once, in depth-first order over increasing neighbor indices.
    pub fn simple_paths(
        &self,
        g: &Graph,
        u: usize,
        v: usize,
        max_len: Option<usize>,
    ) -> Result<PathList> {
        self.guard(g)?;
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if u == v {
            return Err(Error::DegeneratePair(u));
        }
        let mut paths = Vec::new();
        let _ = Walker::new(g).walk(u, v, max_len, &mut |vs, _| {
            paths.push(vs.to_vec());
            ControlFlow::Continue(())
        });
        Ok(PathList { paths })
    }

    /// Every pair has a simple path with an edge color of multiplicity one.
    pub fn cfc_edge(&self, g: &Graph, c: &EdgeColoring) -> Result<bool> {
        self.guard(g)?;
        c.expect_len(g.m())?;
        let mut walker = Walker::new(g);
        Ok(all_pairs(g, |u, v| {
            exists(&mut walker, u, v, None, |_, es| {
                has_unique(es.iter().map(|&e| c.color(e)), c.k())
            })
        }))
    }

    /// Every pair has a simple path with a vertex color of multiplicity one.
    pub fn cfc_vertex(&self, g: &Graph, c: &VertexColoring) -> Result<bool> {
        self.guard(g)?;
        c.expect_len(g.n())?;
        let mut walker = Walker::new(g);
        Ok(all_pairs(g, |u, v| {
            exists(&mut walker, u, v, None, |vs, _| {
                has_unique(vs.iter().map(|&x| c.color(x)), c.k())
            })
        }))
    }

    /// Every pair has a conflict-free path whose length is the distance.
    pub fn scfc(&self, g: &Graph, c: &EdgeColoring) -> Result<bool> {
        self.guard(g)?;
        c.expect_len(g.m())?;
        let dist = g.distance_matrix();
        let mut walker = Walker::new(g);
        Ok(all_pairs(g, |u, v| {
            let Some(d) = dist[u][v] else { return false };
            exists(&mut walker, u, v, Some(d as usize), |_, es| {
                es.len() == d as usize && has_unique(es.iter().map(|&e| c.color(e)), c.k())
            })
        }))
    }

    /// Every pair has a simple path whose edge colors are pairwise distinct.
    pub fn rainbow_connected(&self, g: &Graph, c: &EdgeColoring) -> Result<bool> {
        self.guard(g)?;
        c.expect_len(g.m())?;
        Ok(all_pairs(g, |u, v| has_rainbow_path(g, u, v, c.colors(), c.k())))
    }
}

pub fn enumerate_simple_paths(
    g: &Graph,
    u: usize,
    v: usize,
    max_len: Option<usize>,
) -> Result<PathList> {
    Oracle::default().simple_paths(g, u, v, max_len)
}

pub fn oracle_cfc_edge(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    Oracle::default().cfc_edge(g, c)
}

pub fn oracle_cfc_vertex(g: &Graph, c: &VertexColoring) -> Result<bool> {
    Oracle::default().cfc_vertex(g, c)
}

pub fn oracle_scfc(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    Oracle::default().scfc(g, c)
}

pub fn oracle_rainbow_connected(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    Oracle::default().rainbow_connected(g, c)
}

fn all_pairs(g: &Graph, mut pred: impl FnMut(usize, usize) -> bool) -> bool {
    (0..g.n()).all(|u| (u + 1..g.n()).all(|v| pred(u, v)))
}

fn exists(
    walker: &mut Walker<'_>,
    u: usize,
    v: usize,
    max_len: Option<usize>,
    mut pred: impl FnMut(&[usize], &[usize]) -> bool,
) -> bool {
    walker
        .walk(u, v, max_len, &mut |vs, es| {
            if pred(vs, es) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .is_break()
}

fn has_unique(colors: impl Iterator<Item = u32>, k: u32) -> bool {
    let mut count = vec![0u32; k as usize + 1];
    for c in colors {
        count[c as usize] += 1;
    }
    count.contains(&1)
}

/// Depth-first search over simple paths that only extends along colors not
/// yet used. Edges with color `0` count as absent.
pub(crate) fn has_rainbow_path(g: &Graph, u: usize, v: usize, colors: &[u32], k: u32) -> bool {
    fn go(
        g: &Graph,
        x: usize,
        target: usize,
        colors: &[u32],
        on_path: &mut [bool],
        used: &mut [bool],
    ) -> bool {
        if x == target {
            return true;
        }
        for &(y, e) in g.neighbors(x) {
            let c = colors[e] as usize;
            if c == 0 || on_path[y] || used[c] {
                continue;
            }
            on_path[y] = true;
            used[c] = true;
            let found = go(g, y, target, colors, on_path, used);
            on_path[y] = false;
            used[c] = false;
            if found {
                return true;
            }
        }
        false
    }
    let mut on_path = vec![false; g.n()];
    let mut used = vec![false; k as usize + 1];
    on_path[u] = true;
    go(g, u, v, colors, &mut on_path, &mut used)
}

/// Simple-path enumerator over adjacency sorted by neighbor index.
struct Walker<'g> {
    adj: Vec<Vec<(usize, usize)>>,
    on_path: Vec<bool>,
    vertices: Vec<usize>,
    edges: Vec<usize>,
    _g: std::marker::PhantomData<&'g Graph>,
}

impl<'g> Walker<'g> {
    fn new(g: &'g Graph) -> Self {
        let adj = (0..g.n())
            .map(|v| {
                let mut nb = g.neighbors(v).to_vec();
                nb.sort_unstable();
                nb
            })
            .collect();
        Walker {
            adj,
            on_path: vec![false; g.n()],
            vertices: Vec::new(),
            edges: Vec::new(),
            _g: std::marker::PhantomData,
        }
    }

    fn walk(
        &mut self,
        u: usize,
        v: usize,
        max_len: Option<usize>,
        visit: &mut dyn FnMut(&[usize], &[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        self.vertices.clear();
        self.edges.clear();
        self.on_path.iter_mut().for_each(|b| *b = false);
        self.vertices.push(u);
        self.on_path[u] = true;
        let limit = max_len.unwrap_or(usize::MAX);
        self.extend(v, limit, visit)
    }

    fn extend(
        &mut self,
        target: usize,
        limit: usize,
        visit: &mut dyn FnMut(&[usize], &[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let x = *self.vertices.last().unwrap();
        if x == target {
            return visit(&self.vertices, &self.edges);
        }
        if self.edges.len() == limit {
            return ControlFlow::Continue(());
        }
        for i in 0..self.adj[x].len() {
            let (y, e) = self.adj[x][i];
            if self.on_path[y] {
                continue;
            }
            self.on_path[y] = true;
            self.vertices.push(y);
            self.edges.push(e);
            let flow = self.extend(target, limit, visit);
            self.edges.pop();
            self.vertices.pop();
            self.on_path[y] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }
}
