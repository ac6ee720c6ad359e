//! Partial 2-coloring extension as a 2-color subset problem.
//!
//! Every precolored host edge `e` gets a private chain from the hub on its
//! side to a new vertex `c_e`, which hangs off the lower endpoint of `e`.
//! The pairs along the chain force it to alternate, and the alternation
//! carries the hub's color all the way to `e`.

use super::{from_id, to_id, MapKind, Maps, PartialEdgeColoring, ReductionInstance, ReductionKind};
use crate::coloring::{EdgeColoring, PairSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Chain length for a host on `n` vertices: `⌈n/2⌉`, bumped to be odd.
pub(crate) fn chain_length(n: usize) -> usize {
    let half = n.div_ceil(2);
    if half % 2 == 1 {
        half
    } else {
        half + 1
    }
}

/// Builds the gadget and its pair set. Host vertices and edges keep their
/// indices; then come `b1`, `c`, `b2`, and for each precolored edge in
/// index order `c_e` followed by its chain `t_1..t_r`. Edges after the host
/// are `b1 c`, `b2 c`, then per precolored edge its chain (hub end first)
/// and the edge from `c_e` to the lower endpoint of `e`.
pub fn reduce_partial2_to_subset(g: &Graph, partial: &PartialEdgeColoring) -> Result<ReductionInstance> {
    if partial.host != *g {
        return Err(Error::Reduction("partial coloring belongs to another graph".into()));
    }
    g.require_connected()?;
    let (n, m) = (g.n(), g.m());
    let r = chain_length(n);
    let mut maps = Maps::default();
    for v in 0..n {
        maps.push(MapKind::HostVertex, v, v);
    }
    for e in 0..m {
        maps.push(MapKind::HostEdge, e, e);
    }
    let (b1, c, b2) = (n, n + 1, n + 2);
    maps.push(MapKind::Hub, 1, b1);
    maps.push(MapKind::Center, 0, c);
    maps.push(MapKind::Hub, 2, b2);

    let mut edges = g.edges().to_vec();
    maps.push(MapKind::HubLink, 1, edges.len());
    edges.push((b1, c));
    maps.push(MapKind::HubLink, 2, edges.len());
    edges.push((b2, c));

    let mut pairs = PairSet::all(n);
    pairs.insert(b1, b2)?;
    let mut next = n + 3;
    for (&e, &color) in &partial.assigned {
        let hub = if color == 0 { b1 } else { b2 };
        let (low, high) = g.edge(e);
        let ce = next;
        let chain: Vec<usize> = (ce + 1..=ce + r).collect();
        next += r + 1;
        maps.push(MapKind::EdgeHub, e, ce);
        for &t in &chain {
            maps.push(MapKind::ChainVertex, e, t);
        }
        // c, b_i, t_1..t_r, c_e, ε(e), θ(e): consecutive vertices of the
        // forced path; every vertex is paired with the one two steps on
        let mut walk = vec![c, hub];
        walk.extend_from_slice(&chain);
        walk.extend([ce, low, high]);
        for pair in walk[1..walk.len() - 2].windows(2) {
            maps.push(MapKind::ChainEdge, e, edges.len());
            edges.push((pair[0], pair[1]));
        }
        maps.push(MapKind::HubReturn, e, edges.len());
        edges.push((ce, low));
        for j in 0..walk.len() - 2 {
            pairs.insert(walk[j], walk[j + 2])?;
        }
    }
    let graph = Graph::new(next, &edges)?;
    Ok(ReductionInstance {
        kind: ReductionKind::PartialToSubset,
        graph,
        pairs,
        partial: None,
        maps,
    })
}

/// Extends a host coloring that agrees with the partial coloring to the
/// gadget: `b1 c` gets `0`, `b2 c` gets `1`, and each chain alternates so
/// that the whole walk from `c` to the host edge alternates.
pub fn forward_color_partial2(
    inst: &ReductionInstance,
    partial: &PartialEdgeColoring,
    host: &EdgeColoring,
) -> Result<EdgeColoring> {
    inst.expect_kind(ReductionKind::PartialToSubset)?;
    partial.check_extension(host)?;
    let mut ids = vec![0u32; inst.graph.m()];
    ids[..host.len()].copy_from_slice(host.colors());
    ids[inst.maps.one(MapKind::HubLink, 1)?] = to_id(0);
    ids[inst.maps.one(MapKind::HubLink, 2)?] = to_id(1);
    for (&e, &color) in &partial.assigned {
        // the hub link has color `color`, so the walk starts with its opposite
        let mut next = 1 - color;
        for chain_edge in inst.maps.lookup(MapKind::ChainEdge, e) {
            ids[chain_edge] = to_id(next);
            next = 1 - next;
        }
        ids[inst.maps.one(MapKind::HubReturn, e)?] = to_id(next);
    }
    EdgeColoring::new(ids, 2)
}

/// Restricts a gadget witness to the host, renaming colors so that `b1 c`
/// has color `0`.
pub fn extract_host_coloring(inst: &ReductionInstance, full: &EdgeColoring) -> Result<EdgeColoring> {
    inst.expect_kind(ReductionKind::PartialToSubset)?;
    full.expect_len(inst.graph.m())?;
    let host_m = inst.maps.of(MapKind::HostEdge).count();
    let flip = from_id(full.color(inst.maps.one(MapKind::HubLink, 1)?)) == 1;
    let ids = full.colors()[..host_m]
        .iter()
        .map(|&id| if flip { 3 - id } else { id })
        .collect();
    EdgeColoring::new(ids, 2)
}

/// Convenience for tests: partial coloring from `(edge, color)` pairs.
#[cfg(test)]
fn fixed(g: &Graph, assigned: &[(usize, u32)]) -> PartialEdgeColoring {
    PartialEdgeColoring::new(g.clone(), assigned.iter().copied().collect::<std::collections::BTreeMap<_, _>>()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_scfc, verify_scfc_subset};

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn chain_lengths() {
        assert_eq!(chain_length(4), 3);
        assert_eq!(chain_length(3), 3);
        assert_eq!(chain_length(2), 1);
        assert_eq!(chain_length(6), 3);
        assert_eq!(chain_length(8), 5);
    }

    #[test]
    fn gadget_sizes() {
        let g = path(4);
        let inst = reduce_partial2_to_subset(&g, &fixed(&g, &[(0, 0), (2, 1)])).unwrap();
        let (n, h, r) = (4, 2, 3);
        assert_eq!(inst.graph.n(), n + 3 + h + h * r);
        assert_eq!(inst.graph.m(), 3 + 2 + h * (r + 2));
        assert_eq!(inst.pairs.len(), 6 + 1 + h * (r + 3));
        assert!(inst.graph.is_connected());
    }

    #[test]
    fn empty_partial_adds_only_the_hubs() {
        let g = path(3);
        let inst = reduce_partial2_to_subset(&g, &fixed(&g, &[])).unwrap();
        assert_eq!(inst.graph.n(), 6);
        assert_eq!(&inst.graph.edges()[2..], &[(3, 4), (4, 5)]);
        assert_eq!(inst.pairs.len(), 3 + 1);
        assert!(inst.pairs.contains(3, 5));
    }

    #[test]
    fn forward_coloring_certifies_pairs() {
        let g = path(4);
        // the least 2-coloring of P4 that strongly connects it
        let host = EdgeColoring::new(vec![1, 2, 1], 2).unwrap();
        assert!(verify_scfc(&g, &host).unwrap().ok);
        for assigned in [vec![], vec![(0, 0)], vec![(1, 1)], vec![(0, 0), (1, 1)], vec![(0, 0), (2, 0)]] {
            let partial = fixed(&g, &assigned);
            let inst = reduce_partial2_to_subset(&g, &partial).unwrap();
            let full = forward_color_partial2(&inst, &partial, &host).unwrap();
            assert!(verify_scfc_subset(&inst.graph, &full, &inst.pairs).unwrap().ok, "{assigned:?}");
            assert_eq!(extract_host_coloring(&inst, &full).unwrap(), host);
        }
    }

    #[test]
    fn forward_coloring_rejects_disagreeing_hosts() {
        let g = path(3);
        let partial = fixed(&g, &[(0, 1)]);
        let inst = reduce_partial2_to_subset(&g, &partial).unwrap();
        let host = EdgeColoring::new(vec![1, 2], 2).unwrap();
        assert!(forward_color_partial2(&inst, &partial, &host).is_err());
    }
}
