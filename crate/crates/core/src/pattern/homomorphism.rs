use std::collections::HashSet;

use super::{Coloring, Pattern};
use crate::error::{Error, Result};
use crate::hypergraph::{combinations, Hypergraph};

/// Node budget used by [`find_homomorphism`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

/// Color multiplicities of `edge` under `phi`.
pub fn edge_profile(edge: &[usize], phi: &[usize], l: usize) -> Vec<usize> {
    let mut m = vec![0; l];
    for &v in edge {
        m[phi[v]] += 1;
    }
    m
}

fn check_coloring(h: &Hypergraph, p: &Pattern, phi: &Coloring) -> Result<()> {
    if h.uniformity() != p.uniformity() {
        return Err(Error::UniformityMismatch(h.uniformity(), p.uniformity()));
    }
    if phi.len() != h.order() {
        return Err(Error::PartialColoring { expected: h.order(), got: phi.len() });
    }
    if let Some(&color) = phi.colors().iter().find(|&&c| c >= p.colors()) {
        return Err(Error::ColorOutOfRange { color, l: p.colors() });
    }
    Ok(())
}

/// Whether every edge's color profile under `phi` is allowed by `p`.
pub fn is_valid_coloring(h: &Hypergraph, p: &Pattern, phi: &Coloring) -> Result<bool> {
    check_coloring(h, p, phi)?;
    Ok(h.edges().iter().all(|e| p.allows(&edge_profile(e, phi.colors(), p.colors()))))
}

/// First valid coloring in the fixed search order, if any.
///
/// Vertices are colored in order of decreasing degree and colors are tried
/// in increasing order, so the answer is deterministic. Partially colored
/// edges are pruned as soon as their profile fits under no allowed profile.
pub fn find_homomorphism(h: &Hypergraph, p: &Pattern) -> Result<Option<Coloring>> {
    find_homomorphism_with_budget(h, p, DEFAULT_SEARCH_BUDGET)
}

/// As [`find_homomorphism`], failing with [`Error::SearchBudget`] after `budget` nodes.
pub fn find_homomorphism_with_budget(h: &Hypergraph, p: &Pattern, budget: u64) -> Result<Option<Coloring>> {
    if h.uniformity() != p.uniformity() {
        return Err(Error::UniformityMismatch(h.uniformity(), p.uniformity()));
    }
    let n = h.order();
    let l = p.colors();
    // every profile lying below some allowed profile
    let mut partial: HashSet<Vec<usize>> = HashSet::new();
    for m in p.edges() {
        let mut stack = vec![m.clone()];
        while let Some(v) = stack.pop() {
            if partial.insert(v.clone()) {
                for c in 0..l {
                    if v[c] > 0 {
                        let mut w = v.clone();
                        w[c] -= 1;
                        stack.push(w);
                    }
                }
            }
        }
    }
    let deg = h.degrees().degrees;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    let mut s =
        HomSearch { h, l, partial: &partial, inc: h.incidence(), order, phi: vec![usize::MAX; n], nodes: 0, budget };
    if s.extend(0)? {
        Ok(Some(Coloring(s.phi)))
    } else {
        Ok(None)
    }
}

struct HomSearch<'a> {
    h: &'a Hypergraph,
    l: usize,
    partial: &'a HashSet<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    order: Vec<usize>,
    phi: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl HomSearch<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudget(self.budget));
        }
        let v = self.order[depth];
        for c in 0..self.l {
            self.phi[v] = c;
            if self.consistent(v) && self.extend(depth + 1)? {
                return Ok(true);
            }
        }
        self.phi[v] = usize::MAX;
        Ok(false)
    }

    fn consistent(&self, v: usize) -> bool {
        self.inc[v].iter().all(|&ei| {
            let mut m = vec![0; self.l];
            for &u in &self.h.edges()[ei] {
                if self.phi[u] != usize::MAX {
                    m[self.phi[u]] += 1;
                }
            }
            self.partial.contains(&m)
        })
    }
}

/// The edge-maximal `p`-colorable graph with the given class sizes.
///
/// Class `c` occupies the next `class_sizes[c]` vertices; the returned
/// coloring is that block coloring. The edge count is
/// `sum over profiles m of prod_c binom(n_c, m_c)`.
pub fn maximal_colorable(class_sizes: &[usize], p: &Pattern) -> Result<(Hypergraph, Coloring)> {
    if class_sizes.len() != p.colors() {
        return Err(Error::DimensionMismatch { expected: p.colors(), got: class_sizes.len() });
    }
    let phi = Coloring::from_class_sizes(class_sizes);
    let n = phi.len();
    let edges: Vec<Vec<usize>> =
        combinations(n, p.uniformity()).filter(|e| p.allows(&edge_profile(e, phi.colors(), p.colors()))).collect();
    Ok((Hypergraph::new(n, p.uniformity(), edges)?, phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{binomial, chromatic_turan, complete, complete_bipartite, turan_hypergraph};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn exhaustive(h: &Hypergraph, p: &Pattern) -> bool {
        let n = h.order();
        let l = p.colors();
        let total = l.pow(n as u32);
        (0..total).any(|mut code| {
            let phi: Vec<usize> = (0..n)
                .map(|_| {
                    let c = code % l;
                    code /= l;
                    c
                })
                .collect();
            is_valid_coloring(h, p, &Coloring(phi)).unwrap()
        })
    }

    #[test]
    fn spec_examples() {
        let k3 = complete(3, 2);
        assert!(is_valid_coloring(&k3, &Pattern::complete(3, 2).unwrap(), &Coloring(vec![0, 1, 2])).unwrap());
        let k2 = Pattern::complete(2, 2).unwrap();
        let mut valid = 0;
        for code in 0..8usize {
            let phi = Coloring((0..3).map(|i| code >> i & 1).collect());
            valid += usize::from(is_valid_coloring(&k3, &k2, &phi).unwrap());
        }
        assert_eq!(valid, 0);
        assert!(find_homomorphism(&k3, &k2).unwrap().is_none());

        let q = chromatic_turan(6, 2, 3).unwrap();
        let chrom = Pattern::chromatic(2, 3).unwrap();
        assert!(is_valid_coloring(&q, &chrom, &Coloring::from_class_sizes(&[3, 3])).unwrap());

        let t = turan_hypergraph(7, 3, 3).unwrap();
        let phi = find_homomorphism(&t, &Pattern::complete(3, 3).unwrap()).unwrap().unwrap();
        assert!(is_valid_coloring(&t, &Pattern::complete(3, 3).unwrap(), &phi).unwrap());

        let empty = Hypergraph::empty(4, 2);
        assert_eq!(find_homomorphism(&empty, &k2).unwrap().unwrap().0, vec![0; 4]);
    }

    #[test]
    fn coloring_errors() {
        let k2 = Pattern::complete(2, 2).unwrap();
        let h = complete(3, 2);
        assert!(matches!(is_valid_coloring(&h, &k2, &Coloring(vec![0, 1])), Err(Error::PartialColoring { .. })));
        assert!(matches!(is_valid_coloring(&h, &k2, &Coloring(vec![0, 1, 2])), Err(Error::ColorOutOfRange { .. })));
        assert!(matches!(
            find_homomorphism_with_budget(&complete(9, 2), &Pattern::complete(8, 2).unwrap(), 1000),
            Err(Error::SearchBudget(1000))
        ));
    }

    #[test]
    fn search_agrees_with_exhaustive_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let patterns = [
            Pattern::complete(2, 2).unwrap(),
            Pattern::complete(3, 2).unwrap(),
            Pattern::new(2, 2, [vec![1, 1], vec![2, 0]]).unwrap(),
            Pattern::chromatic(2, 3).unwrap(),
            Pattern::complete(3, 3).unwrap(),
        ];
        for _ in 0..80 {
            let p = &patterns[rng.gen_range(0..patterns.len())];
            let r = p.uniformity();
            let n = rng.gen_range(r..=7);
            let edges: Vec<Vec<usize>> = combinations(n, r).filter(|_| rng.gen_bool(0.35)).collect();
            let h = Hypergraph::new(n, r, edges).unwrap();
            let found = find_homomorphism(&h, p).unwrap();
            assert_eq!(found.is_some(), exhaustive(&h, p), "{h}");
            if let Some(phi) = found {
                assert!(is_valid_coloring(&h, p, &phi).unwrap());
            }
        }
    }

    #[test]
    fn maximal_graphs() {
        let k2 = Pattern::complete(2, 2).unwrap();
        let (h, _) = maximal_colorable(&[2, 2], &k2).unwrap();
        assert_eq!(h, complete_bipartite(2, 2));
        let (t, _) = maximal_colorable(&[2, 2, 2], &Pattern::complete(3, 3).unwrap()).unwrap();
        assert_eq!(t, turan_hypergraph(6, 3, 3).unwrap());
        let (q, _) = maximal_colorable(&[4, 3], &Pattern::chromatic(2, 3).unwrap()).unwrap();
        assert_eq!(q, chromatic_turan(7, 2, 3).unwrap());
        let lop = Pattern::new(2, 3, [vec![1, 2], vec![3, 0]]).unwrap();
        let (h, phi) = maximal_colorable(&[3, 4], &lop).unwrap();
        assert_eq!(h.size() as u64, 3 * binomial(4, 2) + 1);
        // every absent triple breaks the block coloring
        for e in h.non_edges() {
            let bigger = h.with_edge(&e).unwrap();
            assert!(!is_valid_coloring(&bigger, &lop, &phi).unwrap());
        }
    }
}
