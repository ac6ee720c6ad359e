//! Vertex coloring as a subset problem on a star.

use super::{MapKind, Maps, ReductionInstance, ReductionKind};
use crate::coloring::{Coloring, EdgeColoring, PairSet, VertexColoring};
use crate::error::Result;
use crate::graph::Graph;

/// Star with center `n` whose edge `v` joins host vertex `v` to the center;
/// the pairs are the host's edges. `k` does not affect the construction.
pub fn reduce_kcolor_to_subset(g: &Graph, _k: u32) -> Result<ReductionInstance> {
    let x = g.n();
    let mut maps = Maps::default();
    maps.push(MapKind::Center, 0, x);
    let edges: Vec<_> = (0..g.n()).map(|v| (v, x)).collect();
    for v in 0..g.n() {
        maps.push(MapKind::HostVertex, v, v);
        maps.push(MapKind::VertexLink, v, v);
    }
    let graph = Graph::new(x + 1, &edges)?;
    let pairs = PairSet::from_pairs(g.edges().iter().copied())?;
    Ok(ReductionInstance {
        kind: ReductionKind::KColorToSubset,
        graph,
        pairs,
        partial: None,
        maps,
    })
}

/// Vertex `v` takes the color of its star edge. Properness is not assumed;
/// check it with [`is_proper`].
pub fn extract_vertex_coloring(inst: &ReductionInstance, c: &EdgeColoring) -> Result<VertexColoring> {
    inst.expect_kind(ReductionKind::KColorToSubset)?;
    c.expect_len(inst.graph.m())?;
    let mut links: Vec<(usize, usize)> = inst.maps.of(MapKind::VertexLink).collect();
    links.sort_unstable();
    Coloring::new(links.into_iter().map(|(_, e)| c.color(e)).collect(), c.k())
}

pub fn is_proper(g: &Graph, c: &VertexColoring) -> bool {
    c.len() == g.n() && g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v))
}

/// A proper coloring with at most `k` colors, by backtracking in vertex
/// order.
pub fn k_colorable(g: &Graph, k: u32) -> Option<VertexColoring> {
    fn place(g: &Graph, k: u32, v: usize, colors: &mut Vec<u32>) -> bool {
        if v == g.n() {
            return true;
        }
        let used = colors.iter().copied().max().unwrap_or(0);
        for c in 1..=k.min(used + 1) {
            if g.neighbors(v).iter().all(|&(w, _)| w > v || colors[w] != c) {
                colors.push(c);
                if place(g, k, v + 1, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    if k == 0 {
        return (g.n() == 0).then(|| Coloring::from_raw(Vec::new(), 1));
    }
    let mut colors = Vec::with_capacity(g.n());
    place(g, k, 0, &mut colors).then(|| Coloring::from_raw(colors, k))
}
