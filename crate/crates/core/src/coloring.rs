//! Edge and vertex colorings, and vertex-pair sets.

use std::collections::BTreeSet;
use std::fmt;
use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::graph::{ordered, Graph, Pair};

/// Marker for colorings indexed by edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OnEdges;

/// Marker for colorings indexed by vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OnVertices;

/// A total assignment of colors `1..=k` to the edges or vertices of a graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring<T> {
    colors: Vec<u32>,
    k: u32,
    _on: PhantomData<T>,
}

pub type EdgeColoring = Coloring<OnEdges>;
pub type VertexColoring = Coloring<OnVertices>;

impl<T> Coloring<T> {
    pub fn new(colors: Vec<u32>, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::NoColors);
        }
        if let Some((index, &color)) = colors
            .iter()
            .enumerate()
            .find(|&(_, &c)| c == 0 || c > k)
        {
            return Err(Error::ColorOutOfRange { index, color, k });
        }
        Ok(Coloring {
            colors,
            k,
            _on: PhantomData,
        })
    }

    /// Every element gets color `1`.
    pub fn uniform(len: usize) -> Self {
        Coloring {
            colors: vec![1; len],
            k: 1,
            _on: PhantomData,
        }
    }

    /// Element `i` gets color `i + 1`.
    pub fn rainbow(len: usize) -> Self {
        Coloring {
            colors: (1..=len as u32).collect(),
            k: (len as u32).max(1),
            _on: PhantomData,
        }
    }

    /// Declared number of colors.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, i: usize) -> u32 {
        self.colors[i]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Applies `perm`, where color `c` becomes `perm[c - 1]`.
    pub fn relabeled(&self, perm: &[u32]) -> Result<Self> {
        Self::new(self.colors.iter().map(|&c| perm[c as usize - 1]).collect(), self.k)
    }

    /// Relabels colors by order of first appearance, producing the
    /// canonical representative of this coloring's permutation class.
    pub fn canonical(&self) -> Self {
        let mut map = vec![0u32; self.k as usize + 1];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c as usize] == 0 {
                    next += 1;
                    map[c as usize] = next;
                }
                map[c as usize]
            })
            .collect();
        Coloring {
            colors,
            k: self.k,
            _on: PhantomData,
        }
    }

    pub(crate) fn expect_len(&self, expected: usize) -> Result<()> {
        if self.colors.len() == expected {
            Ok(())
        } else {
            Err(Error::ColoringLength {
                expected,
                got: self.colors.len(),
            })
        }
    }

    pub(crate) fn from_raw(colors: Vec<u32>, k: u32) -> Self {
        debug_assert!(k >= 1 && colors.iter().all(|&c| (1..=k).contains(&c)));
        Coloring {
            colors,
            k,
            _on: PhantomData,
        }
    }
}

impl<T> fmt::Debug for Coloring<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring(k={}, {:?})", self.k, self.colors)
    }
}

/// A set of unordered pairs of distinct vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairSet(BTreeSet<Pair>);

impl PairSet {
    pub fn new() -> PairSet {
        PairSet::default()
    }

    /// All pairs of distinct vertices among `0..n`.
    pub fn all(n: usize) -> PairSet {
        PairSet(
            (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
        )
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<PairSet> {
        let mut set = PairSet::new();
        for (u, v) in pairs {
            set.insert(u, v)?;
        }
        Ok(set)
    }

    /// Inserts `{u, v}`; returns whether it was new.
    pub fn insert(&mut self, u: usize, v: usize) -> Result<bool> {
        if u == v {
            return Err(Error::DegeneratePair(u));
        }
        Ok(self.0.insert(ordered(u, v)))
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.contains(&ordered(u, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Pairs in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = Pair> + '_ {
        self.0.iter().copied()
    }

    pub(crate) fn check_against(&self, g: &Graph) -> Result<()> {
        for (u, v) in self.iter() {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
        }
        Ok(())
    }
}

impl FromIterator<Pair> for PairSet {
    /// Panics on a pair with equal endpoints; use [`PairSet::from_pairs`]
    /// for fallible construction.
    fn from_iter<I: IntoIterator<Item = Pair>>(iter: I) -> Self {
        PairSet::from_pairs(iter).expect("pair with equal endpoints")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(EdgeColoring::new(vec![1, 2, 1], 2).is_ok());
        assert_eq!(
            EdgeColoring::new(vec![1, 3], 2),
            Err(Error::ColorOutOfRange {
                index: 1,
                color: 3,
                k: 2
            })
        );
        assert_eq!(EdgeColoring::new(vec![0], 2).unwrap_err(), Error::ColorOutOfRange { index: 0, color: 0, k: 2 });
        assert_eq!(VertexColoring::new(vec![], 0), Err(Error::NoColors));
    }

    #[test]
    fn canonical_relabels_by_first_use() {
        let c = EdgeColoring::new(vec![3, 1, 3, 2], 3).unwrap();
        assert_eq!(c.canonical().colors(), &[1, 2, 1, 3]);
        assert_eq!(c.used(), 3);
        let r = c.relabeled(&[2, 3, 1]).unwrap();
        assert_eq!(r.colors(), &[1, 2, 1, 3]);
    }

    #[test]
    fn pair_sets_normalize() {
        let mut p = PairSet::new();
        assert!(p.insert(3, 1).unwrap());
        assert!(!p.insert(1, 3).unwrap());
        assert!(p.contains(3, 1));
        assert_eq!(p.insert(2, 2), Err(Error::DegeneratePair(2)));
        assert_eq!(PairSet::all(4).len(), 6);
    }
}
