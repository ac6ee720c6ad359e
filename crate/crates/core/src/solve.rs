//! Exact connection numbers by canonical enumeration of colorings.
//!
//! Colorings are enumerated in first-use canonical form: element 0 gets
//! color 1 and element `i` may use at most one more than the largest color
//! seen before it, so each class of colorings that differ only by a
//! permutation of color names is visited once. Enumeration is a depth-first
//! search in index order; a pair is tested as soon as every element that can
//! influence it has been assigned, and a failing pair prunes the subtree.
//!
//! The minimum is found by iterative deepening on the number of colors,
//! restricting level `k` to colorings that use exactly `k` colors, so the
//! first witness found is minimal and the lexicographically least at its
//! level.

use crate::coloring::{Coloring, EdgeColoring, PairSet, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Pair};
use crate::oracle::{self, Oracle};
use crate::verify::{self, CfcEdgeCheck, CfcVertexCheck, ScfcCheck};

/// Default number of pair tests a single solve may spend.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// A minimal color count and a coloring achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult<C> {
    pub value: usize,
    pub witness: C,
}

/// Exhaustive solver with a budget counted in pair tests.
#[derive(Clone, Copy, Debug)]
pub struct Solver {
    pub budget: u64,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl Solver {
    pub fn with_budget(budget: u64) -> Solver {
        Solver { budget }
    }

    /// Conflict-free connection number.
    pub fn cfc(&self, g: &Graph) -> Result<SolveResult<EdgeColoring>> {
        require_nontrivial(g)?;
        let pairs = path_edge_deps(g)?;
        let mut check = CfcEdgeCheck::new(g);
        let found = self.minimize(g.m(), pairs, |u, v, c, k| check.certify(u, v, c, k).is_some())?;
        let witness = Coloring::from_raw(found.1, found.0 as u32);
        assert!(verify::verify_cfc_edge(g, &witness)?.ok, "solver witness rejected");
        Ok(SolveResult {
            value: found.0,
            witness,
        })
    }

    /// Conflict-free vertex-connection number.
    pub fn vcfc(&self, g: &Graph) -> Result<SolveResult<VertexColoring>> {
        require_nontrivial(g)?;
        let bd = g.cut_vertices_and_blocks()?;
        let between = bd.blocks_between(g);
        let pairs = all_pairs(g.n())
            .map(|(u, v)| {
                let last = between[u][v]
                    .iter()
                    .flat_map(|&b| crate::graph::block_vertices(g, &bd.blocks[b]))
                    .max()
                    .unwrap_or(0)
                    .max(v);
                ((u, v), last)
            })
            .collect();
        let mut check = CfcVertexCheck::new(g);
        let found = self.minimize(g.n(), pairs, |u, v, c, k| check.certify(u, v, c, k).is_some())?;
        let witness = Coloring::from_raw(found.1, found.0 as u32);
        assert!(verify::verify_cfc_vertex(g, &witness)?.ok, "solver witness rejected");
        Ok(SolveResult {
            value: found.0,
            witness,
        })
    }

    /// Strong conflict-free connection number.
    pub fn scfc(&self, g: &Graph) -> Result<SolveResult<EdgeColoring>> {
        require_nontrivial(g)?;
        let mut check = ScfcCheck::new(g);
        let pairs = shortest_path_deps(g, &check, &PairSet::all(g.n()));
        let found = self.minimize(g.m(), pairs, |u, v, c, k| check.certify(u, v, c, k).is_some())?;
        let witness = Coloring::from_raw(found.1, found.0 as u32);
        assert!(verify::verify_scfc(g, &witness)?.ok, "solver witness rejected");
        Ok(SolveResult {
            value: found.0,
            witness,
        })
    }

    /// Rainbow connection number, for graphs within the oracle size guard.
    pub fn rc(&self, g: &Graph) -> Result<SolveResult<EdgeColoring>> {
        let guard = Oracle::default();
        if g.n() > guard.max_vertices {
            return Err(Error::TooLarge {
                n: g.n(),
                limit: guard.max_vertices,
            });
        }
        require_nontrivial(g)?;
        let pairs = path_edge_deps(g)?;
        let found = self.minimize(g.m(), pairs, |u, v, c, k| {
            oracle::has_rainbow_path(g, u, v, c, k)
        })?;
        let witness = Coloring::from_raw(found.1, found.0 as u32);
        assert!(guard.rainbow_connected(g, &witness)?, "solver witness rejected");
        Ok(SolveResult {
            value: found.0,
            witness,
        })
    }

    /// Looks for a coloring with at most `k` colors under which every pair
    /// in `p` is joined by a conflict-free shortest path. Returns the
    /// lexicographically least canonical witness, or `None` once the search
    /// space is exhausted.
    pub fn decide_subset_scfc(
        &self,
        g: &Graph,
        p: &PairSet,
        k: u32,
    ) -> Result<Option<EdgeColoring>> {
        if k == 0 {
            return Err(Error::NoColors);
        }
        p.check_against(g)?;
        let mut check = ScfcCheck::new(g);
        check.require_pairs_connected(p)?;
        let pairs = shortest_path_deps(g, &check, p);
        let mut budget = Budget::new(self.budget);
        let mut search = Search::new(g.m(), pairs);
        let outcome = search.run(k, false, &mut budget, &mut |u, v, c, k| {
            check.certify(u, v, c, k).is_some()
        });
        match outcome {
            Outcome::Found(colors) => {
                let witness = Coloring::from_raw(colors, k);
                assert!(
                    verify::verify_scfc_subset(g, &witness, p)?.ok,
                    "solver witness rejected"
                );
                Ok(Some(witness))
            }
            Outcome::Exhausted => Ok(None),
            Outcome::OutOfBudget => Err(Error::BudgetExceeded {
                budget: self.budget,
                lower: 0,
                upper: 0,
            }),
        }
    }

    /// [`Solver::decide_subset_scfc`] over all pairs: whether
    /// `scfc(g) <= k`.
    pub fn decide_scfc(&self, g: &Graph, k: u32) -> Result<Option<EdgeColoring>> {
        self.decide_subset_scfc(g, &PairSet::all(g.n()), k)
    }

    fn minimize(
        &self,
        elements: usize,
        pairs: Vec<(Pair, usize)>,
        test: impl FnMut(usize, usize, &[u32], u32) -> bool,
    ) -> Result<(usize, Vec<u32>)> {
        let mut test = test;
        let mut budget = Budget::new(self.budget);
        let mut search = Search::new(elements, pairs);
        for k in 1..=elements.max(1) {
            match search.run(k as u32, true, &mut budget, &mut test) {
                Outcome::Found(colors) => return Ok((k, colors)),
                Outcome::Exhausted => {}
                Outcome::OutOfBudget => {
                    return Err(Error::BudgetExceeded {
                        budget: self.budget,
                        lower: k,
                        upper: elements,
                    })
                }
            }
        }
        unreachable!("distinct colors on every element always succeed")
    }
}

pub fn solve_cfc(g: &Graph) -> Result<SolveResult<EdgeColoring>> {
    Solver::default().cfc(g)
}

pub fn solve_vcfc(g: &Graph) -> Result<SolveResult<VertexColoring>> {
    Solver::default().vcfc(g)
}

pub fn solve_scfc(g: &Graph) -> Result<SolveResult<EdgeColoring>> {
    Solver::default().scfc(g)
}

pub fn solve_rc_small(g: &Graph) -> Result<SolveResult<EdgeColoring>> {
    Solver::default().rc(g)
}

pub fn decide_subset_scfc(g: &Graph, p: &PairSet, k: u32) -> Result<Option<EdgeColoring>> {
    Solver::default().decide_subset_scfc(g, p, k)
}

fn require_nontrivial(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::TrivialGraph);
    }
    g.require_connected()
}

fn all_pairs(n: usize) -> impl Iterator<Item = Pair> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// For each pair, the largest index of an edge lying on some simple path
/// between its endpoints.
fn path_edge_deps(g: &Graph) -> Result<Vec<(Pair, usize)>> {
    let bd = g.cut_vertices_and_blocks()?;
    let between = bd.blocks_between(g);
    Ok(all_pairs(g.n())
        .map(|(u, v)| {
            let last = between[u][v]
                .iter()
                .filter_map(|&b| bd.blocks[b].last().copied())
                .max()
                .expect("connected pair has a path");
            ((u, v), last)
        })
        .collect())
}

/// For each pair in `p`, the largest index of an edge on some shortest path
/// between its endpoints.
fn shortest_path_deps(g: &Graph, check: &ScfcCheck<'_>, p: &PairSet) -> Vec<(Pair, usize)> {
    p.iter()
        .map(|(u, v)| {
            let d = check.distance(u, v);
            let last = (0..g.m())
                .filter(|&e| {
                    let (a, b) = g.edge(e);
                    let via = |x, y| check.distance(u, x).saturating_add(1).saturating_add(check.distance(y, v));
                    via(a, b) == d || via(b, a) == d
                })
                .max()
                .expect("distinct endpoints are joined by a shortest path");
            ((u, v), last)
        })
        .collect()
}

struct Budget {
    left: u64,
}

impl Budget {
    fn new(limit: u64) -> Budget {
        Budget { left: limit }
    }

    fn spend(&mut self) -> bool {
        if self.left == 0 {
            return false;
        }
        self.left -= 1;
        true
    }
}

enum Outcome {
    Found(Vec<u32>),
    Exhausted,
    OutOfBudget,
}

/// Canonical depth-first enumeration with pair tests placed at the element
/// that completes their dependencies.
struct Search {
    elements: usize,
    ready: Vec<Vec<Pair>>,
    last_ready: Option<usize>,
    colors: Vec<u32>,
}

type PairTest<'a> = dyn FnMut(usize, usize, &[u32], u32) -> bool + 'a;

impl Search {
    fn new(elements: usize, pairs: Vec<(Pair, usize)>) -> Search {
        let mut ready = vec![Vec::new(); elements];
        let mut last_ready = None;
        for (pair, at) in pairs {
            ready[at].push(pair);
            last_ready = last_ready.max(Some(at));
        }
        Search {
            elements,
            ready,
            last_ready,
            colors: vec![0; elements],
        }
    }

    fn run(&mut self, k: u32, exact: bool, budget: &mut Budget, test: &mut PairTest<'_>) -> Outcome {
        self.colors.iter_mut().for_each(|c| *c = 0);
        if exact && k as usize > self.elements {
            return Outcome::Exhausted;
        }
        match self.descend(0, 0, k, exact, budget, test) {
            Step::Found => Outcome::Found(self.colors.clone()),
            Step::Exhausted => Outcome::Exhausted,
            Step::OutOfBudget => Outcome::OutOfBudget,
        }
    }

    fn descend(
        &mut self,
        i: usize,
        max_used: u32,
        k: u32,
        exact: bool,
        budget: &mut Budget,
        test: &mut PairTest<'_>,
    ) -> Step {
        if self.last_ready.map_or(true, |last| i > last) {
            self.fill_tail(i, max_used, k, exact);
            return Step::Found;
        }
        let remaining_after = (self.elements - i - 1) as u32;
        for color in 1..=k.min(max_used + 1) {
            let used = max_used.max(color);
            if exact && used + remaining_after < k {
                continue;
            }
            self.colors[i] = color;
            match self.test_ready(i, k, budget, test) {
                Some(true) => match self.descend(i + 1, used, k, exact, budget, test) {
                    Step::Exhausted => {}
                    other => return other,
                },
                Some(false) => {}
                None => return Step::OutOfBudget,
            }
        }
        self.colors[i] = 0;
        Step::Exhausted
    }

    /// Tests pairs completed by element `i`. A failing pair moves to the
    /// front of its bucket so that siblings try it first.
    fn test_ready(&mut self, i: usize, k: u32, budget: &mut Budget, test: &mut PairTest<'_>) -> Option<bool> {
        for j in 0..self.ready[i].len() {
            if !budget.spend() {
                return None;
            }
            let (u, v) = self.ready[i][j];
            if !test(u, v, &self.colors, k) {
                self.ready[i].swap(0, j);
                return Some(false);
            }
        }
        Some(true)
    }

    /// Completes an unconstrained suffix with the least canonical tail.
    fn fill_tail(&mut self, i: usize, max_used: u32, k: u32, exact: bool) {
        let tail = &mut self.colors[i..];
        tail.iter_mut().for_each(|c| *c = 1);
        if exact {
            let missing = (k - max_used) as usize;
            let len = tail.len();
            for (j, c) in tail[len - missing..].iter_mut().enumerate() {
                *c = max_used + 1 + j as u32;
            }
        }
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}
