//! `r`-patterns, pattern colorings and the densities of pattern-colorable families.
//!
//! A pattern `([l], E)` lists the allowed color profiles of an edge. Profiles
//! are stored as multiplicity vectors `(m_0, ..., m_{l-1})` with `sum m_i = r`,
//! and colors are `0..l`.

mod closure;
mod density;
mod homomorphism;
mod probe;

pub use closure::{clone_vertex, closure_check, ClosureReport};
pub use density::{
    colorable_edge_count, ex_col_count, pattern_density, q_pattern, DensityConfig, DensityEstimate, DensityMethod,
};
pub use homomorphism::{
    edge_profile, find_homomorphism, find_homomorphism_with_budget, is_valid_coloring, maximal_colorable,
    DEFAULT_SEARCH_BUDGET,
};
pub use probe::degree_stability_probe;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pattern {
    l: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl Pattern {
    /// Validates and sorts the multiplicity vectors.
    pub fn new<I>(l: usize, r: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        if l == 0 {
            return Err(Error::InvalidParameters("a pattern needs at least one color".into()));
        }
        if r < 2 {
            return Err(Error::BadUniformity(r));
        }
        let mut out: Vec<Vec<usize>> = Vec::new();
        for m in edges {
            if m.len() != l {
                return Err(Error::DimensionMismatch { expected: l, got: m.len() });
            }
            let s: usize = m.iter().sum();
            if s != r {
                return Err(Error::EdgeSize { expected: r, got: s });
            }
            out.push(m);
        }
        out.sort();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].clone()));
        }
        Ok(Self { l, r, edges: out })
    }

    /// `K_l^r`: every profile with `r` distinct colors.
    pub fn complete(l: usize, r: usize) -> Result<Self> {
        Self::new(l, r, multiplicity_vectors(l, r).filter(|m| m.iter().all(|&x| x <= 1)))
    }

    /// Every profile except the monochromatic ones; its colorable graphs are
    /// the `k`-chromatic `r`-graphs.
    pub fn chromatic(k: usize, r: usize) -> Result<Self> {
        Self::new(k, r, multiplicity_vectors(k, r).filter(|m| m.iter().all(|&x| x < r)))
    }

    /// Every profile; everything is colorable.
    pub fn full(l: usize, r: usize) -> Result<Self> {
        Self::new(l, r, multiplicity_vectors(l, r))
    }

    pub fn colors(&self) -> usize {
        self.l
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn allows(&self, profile: &[usize]) -> bool {
        self.edges.binary_search_by(|m| m.as_slice().cmp(profile)).is_ok()
    }

    /// Color permutations `sigma` (as `sigma[c]`) mapping the profile set onto itself.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..self.l).collect();
        permutations(&mut perm, 0, &mut |p| {
            let ok = self.edges.iter().all(|m| {
                let mut image = vec![0; self.l];
                for (c, &k) in m.iter().enumerate() {
                    image[p[c]] = k;
                }
                self.allows(&image)
            });
            if ok {
                out.push(p.to_vec());
            }
        });
        out.sort();
        out
    }

    /// Whether every color permutation is an automorphism.
    pub fn is_fully_symmetric(&self) -> bool {
        // adjacent transpositions generate the symmetric group
        (0..self.l.saturating_sub(1)).all(|c| {
            self.edges.iter().all(|m| {
                let mut image = m.clone();
                image.swap(c, c + 1);
                self.allows(&image)
            })
        })
    }
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "pattern(l={}, r={}, {} profiles)", self.l, self.r, self.edges.len())
    }
}

fn permutations(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// All vectors of `l` nonnegative integers summing to `r`, in lexicographic order.
pub fn multiplicity_vectors(l: usize, r: usize) -> impl Iterator<Item = Vec<usize>> {
    compositions(r, l).into_iter()
}

/// All ways to write `n` as an ordered sum of `parts` nonnegative integers,
/// lexicographic.
pub fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(left - v, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(n, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// A vertex coloring with colors `0..l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    /// Consecutive blocks: the first `sizes[0]` vertices get color 0, and so on.
    pub fn from_class_sizes(sizes: &[usize]) -> Self {
        Self(sizes.iter().enumerate().flat_map(|(c, &s)| std::iter::repeat_n(c, s)).collect())
    }

    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn class_sizes(&self, l: usize) -> Vec<usize> {
        let mut s = vec![0; l];
        for &c in &self.0 {
            if c < l {
                s[c] += 1;
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        let k = Pattern::complete(3, 2).unwrap();
        assert_eq!(k.edges(), &[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let c = Pattern::chromatic(2, 3).unwrap();
        assert_eq!(c.edges(), &[vec![1, 2], vec![2, 1]]);
        assert_eq!(Pattern::full(1, 3).unwrap().edges(), &[vec![3]]);
        assert_eq!(Pattern::full(3, 3).unwrap().edges().len(), 10);
        assert!(Pattern::complete(2, 3).unwrap().edges().is_empty());
    }

    #[test]
    fn validation() {
        assert!(matches!(Pattern::new(2, 3, [vec![1, 1]]), Err(Error::EdgeSize { .. })));
        assert!(matches!(Pattern::new(2, 2, [vec![1, 1, 0]]), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(Pattern::new(2, 2, [vec![1, 1], vec![1, 1]]), Err(Error::DuplicateEdge(_))));
        assert!(Pattern::new(0, 2, Vec::<Vec<usize>>::new()).is_err());
        assert!(Pattern::new(2, 2, Vec::<Vec<usize>>::new()).is_ok());
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(Pattern::complete(3, 2).unwrap().automorphisms().len(), 6);
        assert!(Pattern::chromatic(3, 3).unwrap().is_fully_symmetric());
        let lop = Pattern::new(2, 2, [vec![1, 1], vec![2, 0]]).unwrap();
        assert_eq!(lop.automorphisms(), vec![vec![0, 1]]);
        assert!(!lop.is_fully_symmetric());
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4, 3).len(), 15);
        assert_eq!(
            multiplicity_vectors(2, 3).collect::<Vec<_>>(),
            vec![vec![0, 3], vec![1, 2], vec![2, 1], vec![3, 0]]
        );
        assert_eq!(Coloring::from_class_sizes(&[2, 0, 1]).0, vec![0, 0, 2]);
    }
}
