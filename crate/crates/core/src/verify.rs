//! Polynomial-time verifiers for conflict-free, vertex-conflict-free and
//! strong conflict-free connectivity of a colored graph.
//!
//! All verifiers scan unordered pairs in lexicographic order and stop at the
//! first pair without a suitable path; that pair is reported as the witness.
//! Within a pair they stop at the first certifying edge or vertex.

use crate::coloring::{EdgeColoring, PairSet, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Pair, Scratch, UNREACHED};

/// Outcome of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    /// First pair (in scan order) lacking a suitable path. Present exactly
    /// when `ok` is false.
    pub witness_pair: Option<Pair>,
    /// Per-pair certificates, filled only by the `audit_*` entry points.
    pub audit: Option<Vec<Certificate>>,
}

impl VerifyReport {
    fn pass(audit: Option<Vec<Certificate>>) -> VerifyReport {
        VerifyReport {
            ok: true,
            witness_pair: None,
            audit,
        }
    }

    fn fail(pair: Pair, audit: Option<Vec<Certificate>>) -> VerifyReport {
        VerifyReport {
            ok: false,
            witness_pair: Some(pair),
            audit,
        }
    }
}

/// Why a pair was accepted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub pair: Pair,
    pub via: Via,
}

/// The uniquely colored element of some path joining the pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Via {
    /// Edge `edge = st`, oriented so that the path meets `s` before `t`
    /// when walking from the pair's first vertex (strong variant); for the
    /// plain variant the orientation is the stored one.
    Edge { edge: usize, s: usize, t: usize },
    Vertex(usize),
}

/// Whether every pair of distinct vertices is joined by a path on which some
/// edge color occurs exactly once.
pub fn verify_cfc_edge(g: &Graph, c: &EdgeColoring) -> Result<VerifyReport> {
    cfc_edge(g, c, false)
}

/// [`verify_cfc_edge`] recording the certifying edge of every pair.
pub fn audit_cfc_edge(g: &Graph, c: &EdgeColoring) -> Result<VerifyReport> {
    cfc_edge(g, c, true)
}

/// Whether every pair of distinct vertices is joined by a path on which some
/// vertex color (endpoints included) occurs exactly once.
pub fn verify_cfc_vertex(g: &Graph, c: &VertexColoring) -> Result<VerifyReport> {
    cfc_vertex(g, c, false)
}

pub fn audit_cfc_vertex(g: &Graph, c: &VertexColoring) -> Result<VerifyReport> {
    cfc_vertex(g, c, true)
}

/// Whether every pair `u, v` is joined by a conflict-free path of length
/// exactly `d(u, v)`.
pub fn verify_scfc(g: &Graph, c: &EdgeColoring) -> Result<VerifyReport> {
    scfc(g, c, &PairSet::all(g.n()), false)
}

pub fn audit_scfc(g: &Graph, c: &EdgeColoring) -> Result<VerifyReport> {
    scfc(g, c, &PairSet::all(g.n()), true)
}

/// [`verify_scfc`] restricted to the pairs in `p`. An empty set passes.
/// Only the pairs need to be connected, not the whole graph.
pub fn verify_scfc_subset(g: &Graph, c: &EdgeColoring, p: &PairSet) -> Result<VerifyReport> {
    p.check_against(g)?;
    scfc(g, c, p, false)
}

pub fn audit_scfc_subset(g: &Graph, c: &EdgeColoring, p: &PairSet) -> Result<VerifyReport> {
    p.check_against(g)?;
    scfc(g, c, p, true)
}

fn cfc_edge(g: &Graph, c: &EdgeColoring, audit: bool) -> Result<VerifyReport> {
    g.require_connected()?;
    c.expect_len(g.m())?;
    let mut check = CfcEdgeCheck::new(g);
    Ok(scan(PairSet::all(g.n()).iter(), audit, |u, v| {
        check.certify(u, v, c.colors(), c.k())
    }))
}

fn cfc_vertex(g: &Graph, c: &VertexColoring, audit: bool) -> Result<VerifyReport> {
    g.require_connected()?;
    c.expect_len(g.n())?;
    let mut check = CfcVertexCheck::new(g);
    Ok(scan(PairSet::all(g.n()).iter(), audit, |u, v| {
        check.certify(u, v, c.colors(), c.k())
    }))
}

fn scfc(g: &Graph, c: &EdgeColoring, p: &PairSet, audit: bool) -> Result<VerifyReport> {
    c.expect_len(g.m())?;
    let mut check = ScfcCheck::new(g);
    check.require_pairs_connected(p)?;
    Ok(scan(p.iter(), audit, |u, v| {
        // Orientation from u is complete on its own; v is tried as the
        // source as well before the pair is rejected.
        check
            .certify(u, v, c.colors(), c.k())
            .or_else(|| check.certify(v, u, c.colors(), c.k()))
    }))
}

fn scan(
    pairs: impl Iterator<Item = Pair>,
    audit: bool,
    mut certify: impl FnMut(usize, usize) -> Option<Via>,
) -> VerifyReport {
    let mut certs = audit.then(Vec::new);
    for (u, v) in pairs {
        match certify(u, v) {
            Some(via) => {
                if let Some(certs) = certs.as_mut() {
                    certs.push(Certificate { pair: (u, v), via });
                }
            }
            None => return VerifyReport::fail((u, v), certs),
        }
    }
    VerifyReport::pass(certs)
}

/// Pair test for the edge variant.
///
/// For each color `i` and each edge `e = st` of that color, work in
/// `H = G - E_i + e`. A path through `e` avoiding all other edges of color
/// `i` exists iff `u`, `v`, `s`, `t` share a component of `H` and no single
/// vertex `z` leaves both `u` and `v` cut off from `{s, t}` in `H - z`.
///
/// Colors equal to `0` mark unassigned elements: they belong to no class and
/// are never removed. The search engine relies on this when it tests pairs
/// whose relevant edges are already fixed.
pub(crate) struct CfcEdgeCheck<'g> {
    g: &'g Graph,
    sc: Scratch,
}

impl<'g> CfcEdgeCheck<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        CfcEdgeCheck {
            g,
            sc: Scratch::new(g.n()),
        }
    }

    pub(crate) fn certify(&mut self, u: usize, v: usize, colors: &[u32], k: u32) -> Option<Via> {
        let g = self.g;
        for i in 1..=k {
            for e in (0..g.m()).filter(|&e| colors[e] == i) {
                let (s, t) = g.edge(e);
                let usable = |f: usize| colors[f] != i || f == e;
                g.mark_reachable(&mut self.sc, s, |_| true, usable);
                if !(self.sc.is_marked(u) && self.sc.is_marked(v) && self.sc.is_marked(t)) {
                    continue;
                }
                if !self.separated(u, v, s, t, usable) {
                    return Some(Via::Edge { edge: e, s, t });
                }
            }
        }
        None
    }

    fn separated(
        &mut self,
        u: usize,
        v: usize,
        s: usize,
        t: usize,
        usable: impl Fn(usize) -> bool + Copy,
    ) -> bool {
        let g = self.g;
        (0..g.n()).any(|z| {
            // s and t are adjacent in H, so one search covers both unless z
            // deletes the root.
            let root = if z == s { t } else { s };
            g.mark_reachable(&mut self.sc, root, |x| x != z, usable);
            let touches = |x: usize| x != z && self.sc.is_marked(x);
            !touches(u) && !touches(v)
        })
    }
}

/// Pair test for the vertex variant.
///
/// Color classes `V_i` play the role of the edge classes: for a candidate
/// vertex `w` of color `i`, work in `H = G - (V_i \ {w})`. The class shared
/// by both endpoints is skipped, and the class of exactly one endpoint needs
/// only a connectivity test because that endpoint already lies on every
/// path.
pub(crate) struct CfcVertexCheck<'g> {
    g: &'g Graph,
    sc: Scratch,
}

impl<'g> CfcVertexCheck<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        CfcVertexCheck {
            g,
            sc: Scratch::new(g.n()),
        }
    }

    pub(crate) fn certify(&mut self, u: usize, v: usize, colors: &[u32], k: u32) -> Option<Via> {
        let g = self.g;
        let (cu, cv) = (colors[u], colors[v]);
        for i in 1..=k {
            if i == cu && i == cv {
                continue;
            }
            if i == cu || i == cv {
                let end = if i == cu { u } else { v };
                let other = if end == u { v } else { u };
                g.mark_reachable(&mut self.sc, end, |x| colors[x] != i || x == end, |_| true);
                if self.sc.is_marked(other) {
                    return Some(Via::Vertex(end));
                }
                continue;
            }
            for w in (0..g.n()).filter(|&w| colors[w] == i) {
                let present = |x: usize| colors[x] != i || x == w;
                g.mark_reachable(&mut self.sc, w, present, |_| true);
                if !(self.sc.is_marked(u) && self.sc.is_marked(v)) {
                    continue;
                }
                let separated = (0..g.n()).filter(|&z| z != w).any(|z| {
                    g.mark_reachable(&mut self.sc, w, |x| x != z && present(x), |_| true);
                    let touches = |x: usize| x != z && self.sc.is_marked(x);
                    !touches(u) && !touches(v)
                });
                if !separated {
                    return Some(Via::Vertex(w));
                }
            }
        }
        None
    }
}

/// Pair test for the strong variant.
///
/// For a vertical edge `st` of color `i` with `d(u,s) < d(u,t) <= d(u,v)`,
/// a shortest `u`-`v` path using `st` as its only edge of color `i` exists
/// iff, in `H = G - E_i + st`, `d_H(u,s) = d(u,s)` and
/// `d_H(v,t) = d(u,v) - d(u,t)`.
pub(crate) struct ScfcCheck<'g> {
    g: &'g Graph,
    sc: Scratch,
    dist: Vec<Vec<u32>>,
}

impl<'g> ScfcCheck<'g> {
    /// Distances between components are [`UNREACHED`]; only pairs within
    /// one component may be certified.
    pub(crate) fn new(g: &'g Graph) -> Self {
        let mut sc = Scratch::new(g.n());
        let dist = (0..g.n())
            .map(|r| {
                g.bfs_into(&mut sc, r, |_| true);
                sc.dist.clone()
            })
            .collect();
        ScfcCheck { g, sc, dist }
    }

    pub(crate) fn distance(&self, u: usize, v: usize) -> u32 {
        self.dist[u][v]
    }

    pub(crate) fn require_pairs_connected(&self, p: &PairSet) -> Result<()> {
        match p.iter().any(|(u, v)| self.dist[u][v] == UNREACHED) {
            true => Err(Error::Disconnected),
            false => Ok(()),
        }
    }

    pub(crate) fn certify(&mut self, u: usize, v: usize, colors: &[u32], k: u32) -> Option<Via> {
        let g = self.g;
        let du = &self.dist[u];
        let d = du[v];
        debug_assert_ne!(d, UNREACHED);
        for i in 1..=k {
            for e in (0..g.m()).filter(|&e| colors[e] == i) {
                let (a, b) = g.edge(e);
                if du[a] == UNREACHED {
                    continue;
                }
                let (s, t) = if du[a] + 1 == du[b] {
                    (a, b)
                } else if du[b] + 1 == du[a] {
                    (b, a)
                } else {
                    continue;
                };
                if du[t] > d {
                    continue;
                }
                let usable = |f: usize| colors[f] != i || f == e;
                g.bfs_into(&mut self.sc, u, usable);
                if self.sc.dist[s] != du[s] {
                    continue;
                }
                g.bfs_into(&mut self.sc, v, usable);
                if self.sc.dist[t] != d - du[t] {
                    continue;
                }
                return Some(Via::Edge { edge: e, s, t });
            }
        }
        None
    }
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

    fn ec(colors: &[u32]) -> EdgeColoring {
        let k = colors.iter().copied().max().unwrap_or(1);
        EdgeColoring::new(colors.to_vec(), k).unwrap()
    }

    fn vc(colors: &[u32]) -> VertexColoring {
        let k = colors.iter().copied().max().unwrap_or(1);
        VertexColoring::new(colors.to_vec(), k).unwrap()
    }

    #[test]
    fn edge_examples() {
        assert!(verify_cfc_edge(&path(4), &ec(&[1, 2, 1])).unwrap().ok);
        let r = verify_cfc_edge(&path(4), &ec(&[1, 1, 1])).unwrap();
        assert!(!r.ok);
        // (0, 2) is the first failing pair in scan order; (0, 3) fails too.
        assert_eq!(r.witness_pair, Some((0, 2)));
        let far = PairSet::from_pairs([(0, 3)]).unwrap();
        assert!(!verify_scfc_subset(&path(4), &ec(&[1, 1, 1]), &far).unwrap().ok);
        assert!(verify_cfc_edge(&path(2), &ec(&[1])).unwrap().ok);
    }

    #[test]
    fn vertex_examples() {
        assert!(verify_cfc_vertex(&path(3), &vc(&[1, 2, 1])).unwrap().ok);
        assert!(!verify_cfc_vertex(&path(3), &vc(&[1, 1, 1])).unwrap().ok);
        let r = verify_cfc_vertex(&path(2), &vc(&[1, 1])).unwrap();
        assert_eq!(r.witness_pair, Some((0, 1)));
        assert!(verify_cfc_vertex(&path(2), &vc(&[1, 2])).unwrap().ok);
    }

    #[test]
    fn strong_examples() {
        let c4 = cycle(4);
        assert!(verify_scfc(&c4, &ec(&[1, 2, 1, 2])).unwrap().ok);
        let r = verify_scfc(&c4, &ec(&[1, 1, 1, 1])).unwrap();
        assert!(!r.ok);
        let (u, v) = r.witness_pair.unwrap();
        assert_eq!(v - u, 2, "antipodal pair expected");
        assert!(verify_scfc(&path(2), &ec(&[1])).unwrap().ok);
    }

    #[test]
    fn subset_examples() {
        let c4 = cycle(4);
        let mono = ec(&[1, 1, 1, 1]);
        assert!(verify_scfc_subset(&c4, &mono, &PairSet::new()).unwrap().ok);
        let adjacent = PairSet::from_pairs([(0, 1)]).unwrap();
        assert!(verify_scfc_subset(&c4, &mono, &adjacent).unwrap().ok);
        let antipodal = PairSet::from_pairs([(0, 2)]).unwrap();
        assert!(!verify_scfc_subset(&c4, &mono, &antipodal).unwrap().ok);
        let outside = PairSet::from_pairs([(0, 9)]).unwrap();
        assert!(matches!(
            verify_scfc_subset(&c4, &mono, &outside),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn preconditions() {
        let split = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(verify_cfc_edge(&split, &ec(&[1])), Err(Error::Disconnected));
        assert_eq!(
            verify_scfc(&path(3), &ec(&[1])),
            Err(Error::ColoringLength {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            verify_cfc_vertex(&path(3), &vc(&[1, 1])),
            Err(Error::ColoringLength {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn unused_declared_colors_are_skipped() {
        let c = EdgeColoring::new(vec![1, 3, 1], 5).unwrap();
        assert!(verify_cfc_edge(&path(4), &c).unwrap().ok);
        assert!(verify_scfc(&path(4), &c).unwrap().ok);
    }

    #[test]
    fn audit_records_every_pair() {
        let r = audit_scfc(&cycle(4), &ec(&[1, 2, 1, 2])).unwrap();
        let certs = r.audit.unwrap();
        assert_eq!(certs.len(), 6);
        for cert in certs {
            if let Via::Edge { edge, s, t } = cert.via {
                assert_eq!(cycle(4).edge(edge), crate::graph::ordered(s, t));
            }
        }
        // stops at the first failing pair (0, 2), after certifying (0, 1)
        let r = audit_cfc_edge(&path(4), &ec(&[1, 1, 1])).unwrap();
        assert_eq!(r.witness_pair, Some((0, 2)));
        assert_eq!(r.audit.unwrap().len(), 1);
    }
}
