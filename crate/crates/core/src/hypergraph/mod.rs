//! Uniform hypergraphs on dense vertex sets `0..n`.
//!
//! A [`Hypergraph`] is immutable once built: edges are strictly increasing
//! vertex lists stored in lexicographic order, so two values compare equal
//! exactly when they have the same labeled edge set.

mod build;
mod chromatic;
mod embed;
mod enumerate;
mod iso;

pub use build::*;
pub use chromatic::{chromatic_number, is_color_critical};
pub use embed::{contains_subgraph, find_embedding};
pub use enumerate::{
    enumerate_hypergraphs, iso_reduced_max_order, labeled_count, EnumerationMode, EXHAUSTIVE_MAX_UNIVERSE,
};
pub use iso::{canonical_form, canonical_labeling, is_isomorphic, transposition_orbits, CANONICAL_MAX_ORDER};

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An `r`-uniform hypergraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

/// Vertex degrees together with the minimum degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
}

impl DegreeProfile {
    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}

/// A partition of `0..n` into blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Consecutive blocks of the given sizes: block `i` holds the next `sizes[i]` vertices.
    pub fn from_sizes(sizes: &[usize]) -> Self {
        let mut next = 0;
        let blocks = sizes
            .iter()
            .map(|&s| {
                let b: Vec<usize> = (next..next + s).collect();
                next += s;
                b
            })
            .collect();
        Self { blocks }
    }

    /// Balanced partition of `0..n` into `l` blocks; remainder vertices go to the lowest blocks.
    pub fn balanced(n: usize, l: usize) -> Self {
        Self::from_sizes(&balanced_sizes(n, l))
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// All block sizes lie in `{floor(n/l), ceil(n/l)}`.
    pub fn is_balanced(&self) -> bool {
        is_balanced_sizes(&self.sizes())
    }

    /// Block index of every vertex.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.order()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v] = i;
            }
        }
        out
    }
}

/// Sizes of a balanced `l`-partition of `n`, larger blocks first.
pub fn balanced_sizes(n: usize, l: usize) -> Vec<usize> {
    assert!(l > 0, "partition needs at least one block");
    (0..l).map(|i| n / l + usize::from(i < n % l)).collect()
}

pub fn is_balanced_sizes(sizes: &[usize]) -> bool {
    let l = sizes.len();
    if l == 0 {
        return true;
    }
    let n: usize = sizes.iter().sum();
    let lo = n / l;
    let hi = n.div_ceil(l);
    sizes.iter().all(|&s| s >= lo && s <= hi)
}

impl Hypergraph {
    /// Validates and canonicalises an edge list.
    ///
    /// Vertices inside an edge may be given in any order. Wrong edge size,
    /// out-of-range vertices and duplicate edges are distinct errors.
    pub fn new<E, I>(n: usize, r: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        if r < 2 {
            return Err(Error::BadUniformity(r));
        }
        let mut out: Vec<Vec<usize>> = Vec::new();
        for e in edges {
            let e = e.as_ref();
            if e.len() != r {
                return Err(Error::EdgeSize { expected: r, got: e.len() });
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let mut s = e.to_vec();
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex(e.to_vec()));
            }
            out.push(s);
        }
        out.sort();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].clone()));
        }
        Ok(Self { n, r, edges: out })
    }

    /// Builds from edges that are already sorted, distinct and in range.
    pub(crate) fn from_sorted_unchecked(n: usize, r: usize, mut edges: Vec<Vec<usize>>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        debug_assert!(edges.iter().all(|e| e.len() == r && e.windows(2).all(|w| w[0] < w[1])));
        Self { n, r, edges }
    }

    pub fn empty(n: usize, r: usize) -> Self {
        assert!(r >= 2);
        Self { n, r, edges: Vec::new() }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn has_edge(&self, e: &[usize]) -> bool {
        let mut s = e.to_vec();
        s.sort_unstable();
        self.edges.binary_search(&s).is_ok()
    }

    pub fn edge_set(&self) -> HashSet<&[usize]> {
        self.edges.iter().map(Vec::as_slice).collect()
    }

    pub fn degrees(&self) -> DegreeProfile {
        let mut degrees = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                degrees[v] += 1;
            }
        }
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        DegreeProfile { degrees, min_degree }
    }

    /// Edge indices incident to each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Subgraph induced by `subset`, relabeled to `0..|subset|` in increasing vertex order.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Self> {
        let mut keep: Vec<usize> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut relabel = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            relabel[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| relabel[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| relabel[v]).collect())
            .collect();
        Ok(Self::from_sorted_unchecked(keep.len(), self.r, edges))
    }

    /// `H - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let rest: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&rest)
    }

    /// Same vertex set, one edge removed.
    pub fn delete_edge(&self, e: &[usize]) -> Self {
        let mut s = e.to_vec();
        s.sort_unstable();
        let edges = self.edges.iter().filter(|f| **f != s).cloned().collect();
        Self { n: self.n, r: self.r, edges }
    }

    /// Same vertex set with one more edge; `None` when the edge is invalid or present.
    pub fn with_edge(&self, e: &[usize]) -> Option<Self> {
        let mut s = e.to_vec();
        s.sort_unstable();
        if s.len() != self.r || s.windows(2).any(|w| w[0] == w[1]) || s.iter().any(|&v| v >= self.n) {
            return None;
        }
        match self.edges.binary_search(&s) {
            Ok(_) => None,
            Err(pos) => {
                let mut edges = self.edges.clone();
                edges.insert(pos, s);
                Some(Self { n: self.n, r: self.r, edges })
            }
        }
    }

    /// Applies a vertex relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: perm.len() });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameters("relabeling is not a permutation".into()));
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut f: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
                f.sort_unstable();
                f
            })
            .collect();
        Ok(Self::from_sorted_unchecked(self.n, self.r, edges))
    }

    /// Every `r`-subset of the vertex set not present as an edge.
    pub fn non_edges(&self) -> Vec<Vec<usize>> {
        combinations(self.n, self.r).filter(|c| self.edges.binary_search(c).is_err()).collect()
    }

    /// Adds a vertex with no edges.
    pub fn with_isolated_vertex(&self) -> Self {
        Self { n: self.n + 1, r: self.r, edges: self.edges.clone() }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let inc = self.incidence();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &ei in &inc[v] {
                for &u in &self.edges[ei] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Lexicographic iterator over the `k`-subsets of `0..n`.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let c = cur.as_mut().unwrap();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// `binom(n, k)` as `u64`, saturating on overflow.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// `binom(n, k)` as `f64`.
pub fn binomial_f64(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Falling factorial `(n)_k = n (n-1) ... (n-k+1)`.
pub fn falling_factorial(n: f64, k: usize) -> f64 {
    (0..k).map(|i| n - i as f64).product()
}

pub fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

impl std::fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-graph on {} vertices {{", self.r, self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let s: Vec<String> = e.iter().map(usize::to_string).collect();
            write!(f, "{}", s.join(" "))?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_validates_edges() {
        let k3 = Hypergraph::new(3, 2, [[0, 1], [0, 2], [1, 2]]).unwrap();
        assert_eq!(k3.size(), 3);
        let h = Hypergraph::new(4, 3, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert_eq!(h.size(), 2);
        assert_eq!(Hypergraph::new(3, 2, [vec![0, 1, 2]]), Err(Error::EdgeSize { expected: 2, got: 3 }));
        assert_eq!(Hypergraph::new(3, 2, [[0, 3]]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Hypergraph::new(3, 2, [[0, 1], [1, 0]]), Err(Error::DuplicateEdge(vec![0, 1])));
        assert!(matches!(Hypergraph::new(3, 2, [[1, 1]]), Err(Error::RepeatedVertex(_))));
        assert_eq!(Hypergraph::new(3, 1, [[0]]), Err(Error::BadUniformity(1)));
    }

    #[test]
    fn storage_is_canonical() {
        let a = Hypergraph::new(4, 2, [[3, 2], [1, 0]]).unwrap();
        let b = Hypergraph::new(4, 2, [[0, 1], [2, 3]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edges(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn degree_examples() {
        let k3 = complete(3, 2);
        let d = k3.degrees();
        assert_eq!(d.degrees, vec![2, 2, 2]);
        assert_eq!(d.min_degree, 2);
        let c4 = turan_hypergraph(4, 2, 2).unwrap();
        assert!(c4.degrees().degrees.iter().all(|&x| x == 2));
        let e = complete(4, 4);
        assert_eq!(e.degrees().degrees, vec![1; 4]);
    }

    #[test]
    fn induced_and_delete() {
        let k4 = complete(4, 2);
        assert_eq!(k4.induced_subgraph(&[0, 2, 3]).unwrap(), complete(3, 2));
        assert_eq!(k4.induced_subgraph(&[0, 1, 2, 3]).unwrap(), k4);
        let c4 = turan_hypergraph(4, 2, 2).unwrap();
        let side = c4.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!((side.order(), side.size()), (2, 0));

        let k3 = complete(3, 2);
        let d = k3.delete_vertex(1).unwrap();
        assert_eq!(d, Hypergraph::new(2, 2, [[0, 1]]).unwrap());
        let edge = complete(3, 3);
        assert_eq!(edge.delete_vertex(0).unwrap(), Hypergraph::empty(2, 3));
        // K_{2,2} minus a vertex is a path on three vertices.
        let p = c4.delete_vertex(0).unwrap();
        assert_eq!(p, Hypergraph::new(3, 2, [[0, 1], [0, 2]]).unwrap());
        assert!(c4.delete_vertex(4).is_err());
    }

    #[test]
    fn combinations_and_binomials() {
        assert_eq!(combinations(4, 2).count(), 6);
        assert_eq!(combinations(3, 0).count(), 1);
        assert_eq!(combinations(2, 3).count(), 0);
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(3, 5), 0);
        assert!((binomial_f64(40, 4) - 91390.0).abs() < 1e-9);
        assert_eq!(falling_factorial(5.0, 3), 60.0);
    }

    #[test]
    fn partitions() {
        assert_eq!(balanced_sizes(7, 3), vec![3, 2, 2]);
        let p = VertexPartition::balanced(7, 3);
        assert!(p.is_balanced());
        assert_eq!(p.blocks[0], vec![0, 1, 2]);
        assert!(!is_balanced_sizes(&[4, 1, 2]));
    }
}
