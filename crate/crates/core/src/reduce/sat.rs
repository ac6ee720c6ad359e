//! 3-CNF formulas and the reduction to partial 2-edge-coloring extension.

use std::collections::BTreeMap;

use super::{from_id, to_id, MapKind, Maps, PartialEdgeColoring, ReductionInstance, ReductionKind};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::parse_error;

/// Largest formula [`solve_3sat_bruteforce`] accepts.
pub const MAX_BRUTEFORCE_VARS: usize = 20;

/// A literal over variable `var`, numbered from 1 as in DIMACS.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn from_dimacs(x: i64) -> Literal {
        Literal {
            var: x.unsigned_abs() as usize,
            positive: x > 0,
        }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] == self.positive
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    /// Builds a formula from DIMACS-style signed triples, checking that no
    /// clause mentions a variable twice.
    pub fn new(num_vars: usize, clauses: &[[i64; 3]]) -> Result<CnfFormula> {
        let mut out = Vec::with_capacity(clauses.len());
        for (j, clause) in clauses.iter().enumerate() {
            out.push(check_clause(j, num_vars, clause)?);
        }
        Ok(CnfFormula {
            num_vars,
            clauses: out,
        })
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    /// Errors unless every variable occurs both positively and negatively.
    pub fn check_polarities(&self) -> Result<()> {
        for var in 1..=self.num_vars {
            for (positive, polarity) in [(true, "positively"), (false, "negatively")] {
                let seen = self
                    .clauses
                    .iter()
                    .flatten()
                    .any(|l| l.var == var && l.positive == positive);
                if !seen {
                    return Err(Error::MissingPolarity { var, polarity });
                }
            }
        }
        Ok(())
    }
}

fn check_clause(j: usize, num_vars: usize, lits: &[i64]) -> Result<[Literal; 3]> {
    if lits.len() != 3 {
        return Err(Error::ClauseArity {
            clause: j,
            arity: lits.len(),
        });
    }
    let lits: Vec<Literal> = lits.iter().map(|&x| Literal::from_dimacs(x)).collect();
    for (a, la) in lits.iter().enumerate() {
        if la.var == 0 || la.var > num_vars {
            return Err(Error::InvalidParams(format!(
                "clause {j} mentions variable {} outside 1..={num_vars}",
                la.var
            )));
        }
        if let Some(lb) = lits[a + 1..].iter().find(|lb| lb.var == la.var) {
            return Err(if lb.positive == la.positive {
                Error::RepeatedVariable { clause: j, var: la.var }
            } else {
                Error::TautologicalClause { clause: j, var: la.var }
            });
        }
    }
    Ok([lits[0], lits[1], lits[2]])
}

/// Parses DIMACS CNF restricted to clauses of exactly three distinct
/// variables.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut pending: Vec<i64> = Vec::new();
    let mut pending_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let fields: Vec<&str> = rest.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                _ => None,
            };
            if header.is_some() {
                return Err(parse_error(ln, "second header"));
            }
            header = Some(parsed.ok_or_else(|| parse_error(ln, "malformed header; expected 'p cnf VARS CLAUSES'"))?);
            continue;
        }
        let (num_vars, _) = header.ok_or_else(|| parse_error(ln, "clause before 'p cnf' header"))?;
        for tok in line.split_whitespace() {
            let x: i64 = tok
                .parse()
                .map_err(|_| parse_error(ln, format!("not a literal: {tok:?}")))?;
            if pending.is_empty() {
                pending_line = ln;
            }
            if x == 0 {
                clauses.push(check_clause(clauses.len(), num_vars, &pending).map_err(|e| match e {
                    Error::InvalidParams(msg) => parse_error(pending_line, msg),
                    other => other,
                })?);
                pending.clear();
            } else {
                pending.push(x);
            }
        }
    }
    let (num_vars, count) = header.ok_or_else(|| parse_error(1, "missing 'p cnf' header"))?;
    if !pending.is_empty() {
        return Err(parse_error(pending_line, "clause not terminated by 0"));
    }
    if clauses.len() != count {
        return Err(parse_error(
            1,
            format!("header announces {count} clauses, found {}", clauses.len()),
        ));
    }
    Ok(CnfFormula { num_vars, clauses })
}

/// The least satisfying assignment, ordering assignments as binary numbers
/// with `x1` most significant and false before true.
pub fn solve_3sat_bruteforce(f: &CnfFormula) -> Result<Option<Vec<bool>>> {
    let n = f.num_vars;
    if n > MAX_BRUTEFORCE_VARS {
        return Err(Error::TooLarge {
            n,
            limit: MAX_BRUTEFORCE_VARS,
        });
    }
    let mut assignment = vec![false; n];
    for bits in 0u32..1 << n {
        for (i, a) in assignment.iter_mut().enumerate() {
            *a = bits >> (n - 1 - i) & 1 == 1;
        }
        if f.satisfied_by(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

/// Clause vertices `0..l`, variable vertices `l..l+n`, then the anchor.
/// Edges: occurrences clause by clause, variable–anchor links, the clause
/// clique, then the variable clique. Only the links stay uncolored.
pub fn reduce_3sat_to_partial2(f: &CnfFormula) -> Result<ReductionInstance> {
    f.check_polarities()?;
    let (l, n) = (f.clauses.len(), f.num_vars);
    let clause_vertex = |j: usize| j;
    let var_vertex = |i: usize| l + i - 1;
    let anchor = l + n;
    let mut maps = Maps::default();
    for j in 0..l {
        maps.push(MapKind::Clause, j, clause_vertex(j));
    }
    for i in 1..=n {
        maps.push(MapKind::Variable, i, var_vertex(i));
    }
    maps.push(MapKind::Anchor, 0, anchor);

    let mut edges = Vec::new();
    let mut assigned = BTreeMap::new();
    for (j, clause) in f.clauses.iter().enumerate() {
        for lit in clause {
            assigned.insert(edges.len(), if lit.positive { 0 } else { 1 });
            edges.push((var_vertex(lit.var), clause_vertex(j)));
        }
    }
    for i in 1..=n {
        maps.push(MapKind::VariableLink, i, edges.len());
        edges.push((var_vertex(i), anchor));
    }
    for a in 0..l {
        for b in a + 1..l {
            assigned.insert(edges.len(), 0);
            edges.push((clause_vertex(a), clause_vertex(b)));
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            assigned.insert(edges.len(), 0);
            edges.push((var_vertex(a), var_vertex(b)));
        }
    }
    let graph = Graph::new(l + n + 1, &edges)?;
    let partial = PartialEdgeColoring::new(graph.clone(), assigned)?;
    Ok(ReductionInstance {
        kind: ReductionKind::SatToPartial,
        graph,
        pairs: Default::default(),
        partial: Some(partial),
        maps,
    })
}

/// Reads `x_i` off the color of its anchor link: true exactly when the link
/// has partial color `1`.
pub fn extract_sat_assignment(inst: &ReductionInstance, full: &EdgeColoring) -> Result<Vec<bool>> {
    inst.expect_kind(ReductionKind::SatToPartial)?;
    let partial = inst
        .partial
        .as_ref()
        .ok_or_else(|| Error::Reduction("instance carries no partial coloring".into()))?;
    partial.check_extension(full)?;
    let mut links: Vec<(usize, usize)> = inst.maps.of(MapKind::VariableLink).collect();
    links.sort_unstable();
    Ok(links
        .into_iter()
        .map(|(_, e)| from_id(full.color(e)) == 1)
        .collect())
}

/// The gadget coloring encoding `assignment`: fixed edges keep their colors,
/// and each variable link is colored 2 for true, 1 for false.
pub fn encode_sat_assignment(inst: &ReductionInstance, assignment: &[bool]) -> Result<EdgeColoring> {
    inst.expect_kind(ReductionKind::SatToPartial)?;
    let partial = inst
        .partial
        .as_ref()
        .ok_or_else(|| Error::Reduction("instance carries no fixed colors".into()))?;
    let links: Vec<_> = inst.maps.of(MapKind::VariableLink).collect();
    if assignment.len() != links.len() {
        return Err(Error::InvalidParams(format!(
            "assignment has {} values for {} variables",
            assignment.len(),
            links.len()
        )));
    }
    let mut ids = partial.to_ids();
    for (var, e) in links {
        ids[e] = to_id(assignment[var - 1] as u32);
    }
    EdgeColoring::new(ids, 2)
}
