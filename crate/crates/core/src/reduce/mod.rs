//! Gadget constructions between the hardness problems, with witness
//! extraction back to the source instance.
//!
//! Partial colorings use the two colors `0` and `1`; when a gadget coloring
//! is handled as an [`EdgeColoring`](crate::EdgeColoring) those become color
//! ids `1` and `2` (see [`to_id`] and [`from_id`]).

mod kcolor;
mod partial;
mod sat;
mod star;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::coloring::{EdgeColoring, PairSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{content_lines, numbers, parse_error};

pub use kcolor::{extract_vertex_coloring, is_proper, k_colorable, reduce_kcolor_to_subset};
pub use partial::{extract_host_coloring, forward_color_partial2, reduce_partial2_to_subset};
pub use sat::{
    extract_sat_assignment, parse_dimacs_cnf, reduce_3sat_to_partial2, solve_3sat_bruteforce,
    encode_sat_assignment, CnfFormula, Literal, MAX_BRUTEFORCE_VARS,
};
pub use star::{forward_color_subset_star, reduce_subset_star_to_scfc, star_center};

/// Color id of partial color `c` in `{0, 1}`.
pub fn to_id(c: u32) -> u32 {
    c + 1
}

/// Partial color of color id `id` in `{1, 2}`.
pub fn from_id(id: u32) -> u32 {
    id - 1
}

/// A 2-coloring of some edges of `host`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialEdgeColoring {
    pub host: Graph,
    pub assigned: BTreeMap<usize, u32>,
}

impl PartialEdgeColoring {
    pub fn new(host: Graph, assigned: BTreeMap<usize, u32>) -> Result<Self> {
        for (&edge, &color) in &assigned {
            if edge >= host.m() {
                return Err(Error::EdgeOutOfRange { edge, m: host.m() });
            }
            if color > 1 {
                return Err(Error::PartialColor { edge, color });
            }
        }
        Ok(PartialEdgeColoring { host, assigned })
    }

    /// Color ids per edge, `0` where unassigned.
    pub fn to_ids(&self) -> Vec<u32> {
        let mut ids = vec![0; self.host.m()];
        for (&e, &c) in &self.assigned {
            ids[e] = to_id(c);
        }
        ids
    }

    pub fn uncolored(&self) -> Vec<usize> {
        (0..self.host.m())
            .filter(|e| !self.assigned.contains_key(e))
            .collect()
    }

    /// Errors unless `full` is a 2-coloring agreeing with every assignment.
    pub fn check_extension(&self, full: &EdgeColoring) -> Result<()> {
        full.expect_len(self.host.m())?;
        if full.k() > 2 {
            return Err(Error::Reduction(format!(
                "extension must use 2 colors, declares {}",
                full.k()
            )));
        }
        for (&e, &c) in &self.assigned {
            if full.color(e) != to_id(c) {
                return Err(Error::Reduction(format!(
                    "edge {e} is fixed to {c} but colored {}",
                    from_id(full.color(e))
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    SatToPartial,
    PartialToSubset,
    KColorToSubset,
    StarToScfc,
}

impl ReductionKind {
    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::SatToPartial => "sat2partial",
            ReductionKind::PartialToSubset => "partial2subset",
            ReductionKind::KColorToSubset => "kcolor2subset",
            ReductionKind::StarToScfc => "star2scfc",
        }
    }
}

impl FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            ReductionKind::SatToPartial,
            ReductionKind::PartialToSubset,
            ReductionKind::KColorToSubset,
            ReductionKind::StarToScfc,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::InvalidParams(format!("unknown reduction {s:?}")))
    }
}

/// What a map entry relates: the source object kind and the gadget element
/// it became. Destinations are vertices or edges of the gadget as noted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MapKind {
    /// host vertex → gadget vertex
    HostVertex,
    /// host edge → gadget edge
    HostEdge,
    /// clause index → vertex
    Clause,
    /// variable (1-based) → vertex
    Variable,
    /// `0` → the vertex joined to every variable
    Anchor,
    /// variable (1-based) → edge from its vertex to the anchor
    VariableLink,
    /// side `1` or `2` → hub vertex
    Hub,
    /// `0` → the vertex joining both hubs
    Center,
    /// colored host edge → its end-of-chain vertex
    EdgeHub,
    /// colored host edge → chain vertex, listed in chain order
    ChainVertex,
    /// side → edge between hub and center
    HubLink,
    /// colored host edge → chain edge, listed in chain order
    ChainEdge,
    /// colored host edge → edge from its end-of-chain vertex back into the host
    HubReturn,
    /// host vertex → star edge at that vertex
    VertexLink,
    /// leaf → leaf hub vertex
    LeafHub,
    /// leaf → primed leaf hub vertex
    LeafHubPrime,
    /// index of a leaf pair outside the pair set → pair hub vertex
    PairHub,
    /// same index → primed pair hub vertex
    PairHubPrime,
    /// leaf → edge to its leaf hub
    LeafLink,
    /// pair index → edge from the pair's first leaf to its hub
    PairLinkFirst,
    /// pair index → edge from the pair's second leaf to its hub
    PairLinkSecond,
    /// row → matched edge of the complete bipartite part
    Matching,
    /// row → unmatched edge of the complete bipartite part
    Bipartite,
    /// column → edge from the center to a primed vertex
    ApexLink,
}

const MAP_KINDS: [(MapKind, &str); 24] = [
    (MapKind::HostVertex, "host-vertex"),
    (MapKind::HostEdge, "host-edge"),
    (MapKind::Clause, "clause"),
    (MapKind::Variable, "variable"),
    (MapKind::Anchor, "anchor"),
    (MapKind::VariableLink, "variable-link"),
    (MapKind::Hub, "hub"),
    (MapKind::Center, "center"),
    (MapKind::EdgeHub, "edge-hub"),
    (MapKind::ChainVertex, "chain-vertex"),
    (MapKind::HubLink, "hub-link"),
    (MapKind::ChainEdge, "chain-edge"),
    (MapKind::HubReturn, "hub-return"),
    (MapKind::VertexLink, "vertex-link"),
    (MapKind::LeafHub, "leaf-hub"),
    (MapKind::LeafHubPrime, "leaf-hub-prime"),
    (MapKind::PairHub, "pair-hub"),
    (MapKind::PairHubPrime, "pair-hub-prime"),
    (MapKind::LeafLink, "leaf-link"),
    (MapKind::PairLinkFirst, "pair-link-first"),
    (MapKind::PairLinkSecond, "pair-link-second"),
    (MapKind::Matching, "matching"),
    (MapKind::Bipartite, "bipartite"),
    (MapKind::ApexLink, "apex-link"),
];

impl MapKind {
    pub fn name(self) -> &'static str {
        MAP_KINDS.iter().find(|(k, _)| *k == self).expect("every kind is named").1
    }

    /// Whether the destination is an edge index (otherwise a vertex).
    pub fn targets_edge(self) -> bool {
        use MapKind::*;
        matches!(
            self,
            HostEdge
                | VariableLink
                | HubLink
                | ChainEdge
                | HubReturn
                | VertexLink
                | LeafLink
                | PairLinkFirst
                | PairLinkSecond
                | Matching
                | Bipartite
                | ApexLink
        )
    }
}

impl FromStr for MapKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MAP_KINDS
            .iter()
            .find(|(_, name)| *name == s)
            .map(|(k, _)| *k)
            .ok_or_else(|| Error::InvalidParams(format!("unknown map kind {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapEntry {
    pub kind: MapKind,
    pub src: usize,
    pub dst: usize,
}

/// Bookkeeping from source objects to gadget elements, in construction
/// order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Maps(pub Vec<MapEntry>);

impl Maps {
    pub fn push(&mut self, kind: MapKind, src: usize, dst: usize) {
        self.0.push(MapEntry { kind, src, dst });
    }

    /// Destinations of `kind` entries for `src`, in order.
    pub fn lookup(&self, kind: MapKind, src: usize) -> impl Iterator<Item = usize> + '_ {
        self.of(kind).filter(move |e| e.0 == src).map(|e| e.1)
    }

    /// The single destination of `kind` for `src`.
    pub fn one(&self, kind: MapKind, src: usize) -> Result<usize> {
        self.lookup(kind, src).next().ok_or_else(|| {
            Error::Reduction(format!("maps have no {} entry for {src}", kind.name()))
        })
    }

    /// `(src, dst)` for every entry of `kind`.
    pub fn of(&self, kind: MapKind) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .filter(move |e| e.kind == kind)
            .map(|e| (e.src, e.dst))
    }

    /// Errors if an entry points outside `g`.
    pub fn check_against(&self, g: &Graph) -> Result<()> {
        for e in &self.0 {
            let limit = if e.kind.targets_edge() { g.m() } else { g.n() };
            if e.dst >= limit {
                return Err(Error::Reduction(format!(
                    "{} {} points at {} outside the gadget",
                    e.kind.name(),
                    e.src,
                    e.dst
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Maps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.0 {
            writeln!(f, "{} {} → {}", e.kind.name(), e.src, e.dst)?;
        }
        Ok(())
    }
}

pub fn parse_maps(text: &str) -> Result<Maps> {
    let mut maps = Maps::default();
    for (ln, l) in content_lines(text) {
        let (left, right) = l
            .split_once('→')
            .or_else(|| l.split_once("->"))
            .ok_or_else(|| parse_error(ln, "expected 'kind src → dst'"))?;
        let (kind, src) = left
            .trim()
            .split_once(char::is_whitespace)
            .ok_or_else(|| parse_error(ln, "expected 'kind src → dst'"))?;
        let kind: MapKind = kind.parse().map_err(|e: Error| parse_error(ln, e.to_string()))?;
        let [src] = numbers::<usize, 1>(ln, src)?;
        let [dst] = numbers::<usize, 1>(ln, right)?;
        maps.push(kind, src, dst);
    }
    Ok(maps)
}

/// A constructed gadget with everything needed to map witnesses back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionInstance {
    pub kind: ReductionKind,
    pub graph: Graph,
    /// Target pairs; empty when the target problem has none.
    pub pairs: PairSet,
    /// Fixed colors on the gadget, for the partial-extension target.
    pub partial: Option<PartialEdgeColoring>,
    pub maps: Maps,
}

impl ReductionInstance {
    /// Reassembles an instance from its serialized parts.
    pub fn from_parts(
        kind: ReductionKind,
        graph: Graph,
        pairs: PairSet,
        partial: Option<BTreeMap<usize, u32>>,
        maps: Maps,
    ) -> Result<Self> {
        pairs.check_against(&graph)?;
        maps.check_against(&graph)?;
        let partial = partial
            .map(|a| PartialEdgeColoring::new(graph.clone(), a))
            .transpose()?;
        Ok(ReductionInstance {
            kind,
            graph,
            pairs,
            partial,
            maps,
        })
    }

    pub(crate) fn expect_kind(&self, kind: ReductionKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::Reduction(format!(
                "expected a {} instance, got {}",
                kind.name(),
                self.kind.name()
            )))
        }
    }

    /// One-line size summary.
    pub fn summary(&self) -> String {
        let (n, m) = (self.graph.n(), self.graph.m());
        match self.kind {
            ReductionKind::SatToPartial => {
                let uncolored = self.partial.as_ref().map_or(m, |p| p.uncolored().len());
                format!("V'={n} E'={m} uncolored={uncolored}")
            }
            ReductionKind::StarToScfc => format!("V'={n} E'={m}"),
            _ => format!("V'={n} E'={m} P={}", self.pairs.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maps_round_trip() {
        let mut maps = Maps::default();
        maps.push(MapKind::Anchor, 0, 5);
        maps.push(MapKind::VariableLink, 3, 12);
        let text = maps.to_string();
        assert_eq!(text, "anchor 0 → 5\nvariable-link 3 → 12\n");
        assert_eq!(parse_maps(&text).unwrap(), maps);
        assert_eq!(parse_maps("anchor 0 -> 5\n").unwrap().0[0].dst, 5);
        assert!(parse_maps("nonsense 0 → 5\n").is_err());
        assert_eq!(maps.one(MapKind::VariableLink, 3), Ok(12));
        assert!(maps.one(MapKind::VariableLink, 1).is_err());
    }

    #[test]
    fn every_kind_has_a_distinct_name() {
        for (k, name) in MAP_KINDS {
            assert_eq!(name.parse::<MapKind>().unwrap(), k);
        }
        let names: std::collections::BTreeSet<_> = MAP_KINDS.iter().map(|p| p.1).collect();
        assert_eq!(names.len(), MAP_KINDS.len());
    }

    #[test]
    fn partial_validation() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let p = PartialEdgeColoring::new(g.clone(), BTreeMap::from([(1, 1)])).unwrap();
        assert_eq!(p.to_ids(), [0, 2]);
        assert_eq!(p.uncolored(), [0]);
        assert!(p.check_extension(&EdgeColoring::new(vec![1, 2], 2).unwrap()).is_ok());
        assert!(p.check_extension(&EdgeColoring::new(vec![1, 1], 2).unwrap()).is_err());
        assert_eq!(
            PartialEdgeColoring::new(g.clone(), BTreeMap::from([(0, 2)])),
            Err(Error::PartialColor { edge: 0, color: 2 })
        );
        assert!(PartialEdgeColoring::new(g, BTreeMap::from([(5, 0)])).is_err());
    }
}
