//! Subset problem on a star as a whole-graph problem on a bipartite gadget.

use super::{MapKind, Maps, ReductionInstance, ReductionKind};
use crate::coloring::{EdgeColoring, PairSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::verify_scfc_subset;

/// The vertex adjacent to every other vertex of a star (the larger one for
/// `K_2`).
pub fn star_center(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n < 2 || g.m() != n - 1 {
        return Err(Error::Reduction("input is not a star".into()));
    }
    (0..n)
        .rev()
        .find(|&v| g.degree(v) == n - 1)
        .ok_or_else(|| Error::Reduction("input is not a star".into()))
}

/// Star vertices keep their indices. The vertices `x_v` for each leaf and
/// `x_q` for each leaf pair `q` outside `p` (lexicographic order) form one
/// side `V1`; their primed copies, in the same order, form `V2`. Edges are
/// the star, leaf links, pair links, all of `V1 × V2` row by row, and the
/// center to every vertex of `V2`.
pub fn reduce_subset_star_to_scfc(star: &Graph, p: &PairSet) -> Result<ReductionInstance> {
    let a = star_center(star)?;
    let leaves: Vec<usize> = (0..star.n()).filter(|&v| v != a).collect();
    for (u, v) in p.iter() {
        if u == a || v == a || v >= star.n() {
            return Err(Error::Reduction(format!("pair ({u}, {v}) is not a pair of leaves")));
        }
    }
    let outside: Vec<(usize, usize)> = leaves
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| leaves[i + 1..].iter().map(move |&v| (u, v)))
        .filter(|&(u, v)| !p.contains(u, v))
        .collect();

    let side = leaves.len() + outside.len();
    let v1 = |i: usize| star.n() + i;
    let v2 = |i: usize| star.n() + side + i;
    let mut maps = Maps::default();
    for v in 0..star.n() {
        maps.push(MapKind::HostVertex, v, v);
    }
    for (i, &leaf) in leaves.iter().enumerate() {
        maps.push(MapKind::LeafHub, leaf, v1(i));
        maps.push(MapKind::LeafHubPrime, leaf, v2(i));
    }
    for q in 0..outside.len() {
        maps.push(MapKind::PairHub, q, v1(leaves.len() + q));
        maps.push(MapKind::PairHubPrime, q, v2(leaves.len() + q));
    }

    let mut edges = star.edges().to_vec();
    for e in 0..edges.len() {
        maps.push(MapKind::HostEdge, e, e);
    }
    for (i, &leaf) in leaves.iter().enumerate() {
        maps.push(MapKind::LeafLink, leaf, edges.len());
        edges.push((leaf, v1(i)));
    }
    for (q, &(u, v)) in outside.iter().enumerate() {
        let hub = v1(leaves.len() + q);
        maps.push(MapKind::PairLinkFirst, q, edges.len());
        edges.push((u, hub));
        maps.push(MapKind::PairLinkSecond, q, edges.len());
        edges.push((v, hub));
    }
    for i in 0..side {
        for j in 0..side {
            let kind = if i == j { MapKind::Matching } else { MapKind::Bipartite };
            maps.push(kind, i, edges.len());
            edges.push((v1(i), v2(j)));
        }
    }
    for j in 0..side {
        maps.push(MapKind::ApexLink, j, edges.len());
        edges.push((a, v2(j)));
    }
    let graph = Graph::new(star.n() + 2 * side, &edges)?;
    assert!(graph.is_bipartite(), "star gadget must be bipartite");
    Ok(ReductionInstance {
        kind: ReductionKind::StarToScfc,
        graph,
        pairs: p.clone(),
        partial: None,
        maps,
    })
}

/// Extends a star coloring that serves the pair set to the whole gadget.
pub fn forward_color_subset_star(inst: &ReductionInstance, star: &Graph, c: &EdgeColoring) -> Result<EdgeColoring> {
    inst.expect_kind(ReductionKind::StarToScfc)?;
    c.expect_len(star.m())?;
    if c.k() < 3 {
        return Err(Error::Reduction(format!(
            "star coloring must declare at least 3 colors, declares {}",
            c.k()
        )));
    }
    let report = verify_scfc_subset(star, c, &inst.pairs)?;
    if let Some((u, v)) = report.witness_pair {
        return Err(Error::Reduction(format!(
            "star coloring leaves pair ({u}, {v}) without a conflict-free shortest path"
        )));
    }
    let mut ids = vec![0u32; inst.graph.m()];
    ids[..star.m()].copy_from_slice(c.colors());
    for (kind, color) in [
        (MapKind::LeafLink, 3),
        (MapKind::PairLinkFirst, 1),
        (MapKind::PairLinkSecond, 2),
        (MapKind::Matching, 1),
        (MapKind::Bipartite, 2),
        (MapKind::ApexLink, 3),
    ] {
        for (_, e) in inst.maps.of(kind) {
            ids[e] = color;
        }
    }
    EdgeColoring::new(ids, c.k())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_scfc;

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn gadget_sizes() {
        let p = PairSet::from_pairs([(1, 2)]).unwrap();
        let inst = reduce_subset_star_to_scfc(&star(3), &p).unwrap();
        assert_eq!(inst.summary(), "V'=14 E'=40");
        let all = PairSet::from_pairs([(1, 2), (1, 3), (2, 3)]).unwrap();
        let inst = reduce_subset_star_to_scfc(&star(3), &all).unwrap();
        assert_eq!(inst.graph.n(), 4 + 6);
        assert!(inst.graph.is_bipartite());
        assert!(inst.graph.is_connected());
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = PairSet::from_pairs([(0, 1)]).unwrap();
        assert!(reduce_subset_star_to_scfc(&star(3), &p).is_err());
        let path = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(reduce_subset_star_to_scfc(&path, &PairSet::new()).is_err());
    }

    #[test]
    fn center_detection() {
        assert_eq!(star_center(&star(3)).unwrap(), 0);
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(star_center(&k2).unwrap(), 1);
        let reversed = Graph::new(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(star_center(&reversed).unwrap(), 3);
    }

    #[test]
    fn forward_coloring_validates() {
        let s = star(3);
        let rainbow = EdgeColoring::new(vec![1, 2, 3], 3).unwrap();
        for p in [
            PairSet::from_pairs([(1, 2), (1, 3), (2, 3)]).unwrap(),
            PairSet::from_pairs([(1, 2)]).unwrap(),
            PairSet::new(),
        ] {
            let inst = reduce_subset_star_to_scfc(&s, &p).unwrap();
            let full = forward_color_subset_star(&inst, &s, &rainbow).unwrap();
            assert!(verify_scfc(&inst.graph, &full).unwrap().ok, "{p:?}");
        }
        let inst = reduce_subset_star_to_scfc(&s, &PairSet::from_pairs([(1, 2)]).unwrap()).unwrap();
        let bad = EdgeColoring::new(vec![1, 1, 3], 3).unwrap();
        assert!(forward_color_subset_star(&inst, &s, &bad).is_err());
    }
}
