//! Constructors for the standard extremal families.

use super::{balanced_sizes, combinations, Hypergraph};
use crate::error::{Error, Result};

/// Result of [`blow_up`]: the graph and the original vertex behind every new vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowUp {
    pub graph: Hypergraph,
    pub class_of: Vec<usize>,
}

/// Replaces vertex `i` by `t[i]` clones; every edge becomes the full product of its classes.
pub fn blow_up(h: &Hypergraph, t: &[usize]) -> Result<BlowUp> {
    if t.len() != h.order() {
        return Err(Error::DimensionMismatch { expected: h.order(), got: t.len() });
    }
    if let Some(i) = t.iter().position(|&k| k == 0) {
        return Err(Error::ZeroMultiplicity(i));
    }
    let mut offset = Vec::with_capacity(t.len());
    let mut class_of = Vec::new();
    for (i, &k) in t.iter().enumerate() {
        offset.push(class_of.len());
        class_of.extend(std::iter::repeat_n(i, k));
    }
    let mut edges = Vec::new();
    for e in h.edges() {
        let mut idx = vec![0usize; e.len()];
        loop {
            edges.push(e.iter().zip(&idx).map(|(&v, &j)| offset[v] + j).collect::<Vec<_>>());
            // odometer over the product of the classes
            let mut p = e.len();
            let mut done = true;
            while p > 0 {
                p -= 1;
                idx[p] += 1;
                if idx[p] < t[e[p]] {
                    done = false;
                    break;
                }
                idx[p] = 0;
            }
            if done {
                break;
            }
        }
    }
    let graph = Hypergraph::from_sorted_unchecked(class_of.len(), h.uniformity(), edges);
    Ok(BlowUp { graph, class_of })
}

/// The `r`-expansion of a 2-graph: each edge gets `r - 2` fresh vertices of its own.
///
/// Fresh vertices are numbered from `v(F)` upwards in edge order.
pub fn expansion(f: &Hypergraph, r: usize) -> Result<Hypergraph> {
    if f.uniformity() != 2 {
        return Err(Error::UniformityMismatch(2, f.uniformity()));
    }
    if r < 2 {
        return Err(Error::BadUniformity(r));
    }
    let mut next = f.order();
    let mut edges = Vec::with_capacity(f.size());
    for e in f.edges() {
        let mut g = e.clone();
        g.extend(next..next + r - 2);
        next += r - 2;
        edges.push(g);
    }
    Ok(Hypergraph::from_sorted_unchecked(next, r, edges))
}

/// `K_n^r`.
pub fn complete(n: usize, r: usize) -> Hypergraph {
    assert!(r >= 2, "uniformity must be at least 2");
    Hypergraph::from_sorted_unchecked(n, r, combinations(n, r).collect())
}

/// A single edge on `r` vertices.
pub fn single_edge(r: usize) -> Hypergraph {
    complete(r, r)
}

/// Complete `l`-partite `r`-graph with consecutive blocks of the given sizes:
/// every `r`-set meeting each block at most once.
pub fn complete_partite(sizes: &[usize], r: usize) -> Hypergraph {
    blocks_graph(sizes, r, 1)
}

/// Complete `l`-chromatic `r`-graph: every `r`-set meeting each block at most `r - 1` times.
pub fn complete_chromatic(sizes: &[usize], r: usize) -> Hypergraph {
    blocks_graph(sizes, r, r - 1)
}

fn blocks_graph(sizes: &[usize], r: usize, cap: usize) -> Hypergraph {
    assert!(r >= 2, "uniformity must be at least 2");
    let mut block = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        block.extend(std::iter::repeat_n(i, s));
    }
    let n = block.len();
    let mut count = vec![0usize; sizes.len()];
    let edges = combinations(n, r)
        .filter(|c| {
            count.iter_mut().for_each(|x| *x = 0);
            c.iter().all(|&v| {
                count[block[v]] += 1;
                count[block[v]] <= cap
            })
        })
        .collect();
    Hypergraph::from_sorted_unchecked(n, r, edges)
}

/// `T_l^r(n)`, the balanced complete `l`-partite `r`-graph.
pub fn turan_hypergraph(n: usize, l: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 {
        return Err(Error::BadUniformity(r));
    }
    if l < r {
        return Err(Error::InvalidParameters(format!("Turán hypergraph needs l >= r (l = {l}, r = {r})")));
    }
    Ok(complete_partite(&balanced_sizes(n, l), r))
}

/// `Q_k^r(n)`, the balanced complete `k`-chromatic `r`-graph.
pub fn chromatic_turan(n: usize, k: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 {
        return Err(Error::BadUniformity(r));
    }
    if k < 2 {
        return Err(Error::InvalidParameters(format!("chromatic Turán graph needs k >= 2 (k = {k})")));
    }
    Ok(complete_chromatic(&balanced_sizes(n, k), r))
}

/// `F_{r,l}`: the edge `{0..r-1}` plus, for every pair `{i, j}` of `0..l-1` not inside
/// `{0..r-1}`, the edge `{i, j}` extended by its own `r - 2` fresh vertices.
///
/// Fresh vertices are allocated in lexicographic pair order starting at `l`.
pub fn f_rl(r: usize, l: usize) -> Result<Hypergraph> {
    if r < 2 {
        return Err(Error::BadUniformity(r));
    }
    if l <= r {
        return Err(Error::InvalidParameters(format!("F_(r,l) needs l > r (l = {l}, r = {r})")));
    }
    let mut edges = vec![(0..r).collect::<Vec<_>>()];
    let mut next = l;
    for pair in combinations(l, 2) {
        if pair[1] < r {
            continue;
        }
        let mut e = pair.clone();
        e.extend(next..next + r - 2);
        next += r - 2;
        edges.push(e);
    }
    Ok(Hypergraph::from_sorted_unchecked(next, r, edges))
}

/// Cycle `C_n` as a 2-graph.
pub fn cycle(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("cycle needs n >= 3 (n = {n})")));
    }
    Hypergraph::new(n, 2, (0..n).map(|i| [i, (i + 1) % n]))
}

/// Path with `n` vertices.
pub fn path(n: usize) -> Hypergraph {
    Hypergraph::from_sorted_unchecked(n, 2, (1..n).map(|i| vec![i - 1, i]).collect())
}

/// `K_{a,b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Hypergraph {
    complete_partite(&[a, b], 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{binomial, contains_subgraph};

    #[test]
    fn blow_up_examples() {
        let k2 = complete(2, 2);
        let b = blow_up(&k2, &[2, 3]).unwrap();
        assert_eq!(b.graph, complete_bipartite(2, 3));
        assert_eq!(b.graph.size(), 6);
        assert_eq!(b.class_of, vec![0, 0, 1, 1, 1]);

        let k3 = complete(3, 2);
        assert_eq!(blow_up(&k3, &[1, 1, 1]).unwrap().graph, k3);
        let t = blow_up(&k3, &[2, 2, 2]).unwrap().graph;
        assert_eq!(t.size(), 12);
        assert_eq!(t, turan_hypergraph(6, 3, 2).unwrap());

        assert_eq!(blow_up(&k3, &[1, 0, 1]).unwrap_err(), Error::ZeroMultiplicity(1));
        assert!(blow_up(&k3, &[1, 1]).is_err());
    }

    #[test]
    fn blow_up_of_edgeless_graph() {
        let h = Hypergraph::empty(2, 3);
        let b = blow_up(&h, &[2, 1]).unwrap();
        assert_eq!((b.graph.order(), b.graph.size()), (3, 0));
    }

    #[test]
    fn expansion_examples() {
        let k3 = complete(3, 2);
        let e = expansion(&k3, 3).unwrap();
        assert_eq!((e.order(), e.size()), (6, 3));
        assert_eq!(expansion(&k3, 2).unwrap(), k3);

        let k4 = complete(4, 2);
        let e = expansion(&k4, 3).unwrap();
        assert_eq!((e.order(), e.size()), (10, 6));
        // every pair of original vertices lies in a common edge
        for p in combinations(4, 2) {
            assert!(e.edges().iter().any(|f| f.contains(&p[0]) && f.contains(&p[1])));
        }
        // fresh vertices all have degree one
        let d = e.degrees();
        assert!(d.degrees[4..].iter().all(|&x| x == 1));
    }

    #[test]
    fn family_constructors() {
        assert_eq!(turan_hypergraph(6, 3, 2).unwrap().size(), 12);
        assert_eq!(chromatic_turan(4, 2, 3).unwrap().size(), 4);
        assert_eq!(complete(4, 3).size(), 4);
        assert!(turan_hypergraph(6, 2, 3).is_err());
        assert!(chromatic_turan(6, 1, 3).is_err());
    }

    #[test]
    fn turan_counts_match_closed_forms() {
        // direct count oracle: floor(n^2 (1 - 1/l) / 2) for r = 2
        for n in 2..12 {
            for l in 2..6 {
                let t = turan_hypergraph(n, l, 2).unwrap();
                let sizes = balanced_sizes(n, l);
                let pairs: usize =
                    (0..l).flat_map(|i| (i + 1..l).map(move |j| (i, j))).map(|(i, j)| sizes[i] * sizes[j]).sum();
                assert_eq!(t.size(), pairs);
                if n % l == 0 {
                    assert_eq!(2 * l * t.size(), n * n * (l - 1));
                }
            }
        }
        // l | n: e(T) = binom(l, r) (n / l)^r and e(Q) = binom(n, r) - k binom(n / k, r)
        for (n, l, r) in [(6, 3, 3), (8, 4, 3), (12, 4, 4), (9, 3, 3)] {
            let t = turan_hypergraph(n, l, r).unwrap();
            assert_eq!(t.size() as u64, binomial(l, r) * ((n / l) as u64).pow(r as u32));
        }
        for (n, k, r) in [(6, 2, 3), (8, 2, 3), (9, 3, 3), (8, 4, 4), (12, 3, 4)] {
            let q = chromatic_turan(n, k, r).unwrap();
            assert_eq!(q.size() as u64, binomial(n, r) - k as u64 * binomial(n / k, r));
        }
    }

    #[test]
    fn turan_graphs_avoid_larger_cliques() {
        for (n, l, r) in [(7, 2, 2), (8, 3, 2), (7, 3, 3)] {
            let t = turan_hypergraph(n, l, r).unwrap();
            assert!(!contains_subgraph(&t, &complete(l + 1, r)).unwrap());
            assert!(contains_subgraph(&t, &complete(l, r)).unwrap());
        }
        // no edge of Q_k^r(n) lies inside a block
        let q = chromatic_turan(8, 3, 3).unwrap();
        let block = crate::hypergraph::VertexPartition::balanced(8, 3).block_of();
        assert!(q.edges().iter().all(|e| e.iter().any(|&v| block[v] != block[e[0]])));
    }

    #[test]
    fn f_rl_layout() {
        let f = f_rl(3, 4).unwrap();
        // edge 012, pairs 03 13 23 each with one fresh vertex 4 5 6
        assert_eq!(f.edges(), &[vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 3, 6]]);
        assert!(f_rl(3, 3).is_err());
        let g = f_rl(2, 4).unwrap();
        assert_eq!(g, complete(4, 2));
    }

    #[test]
    fn small_named_graphs() {
        assert_eq!(cycle(5).unwrap().size(), 5);
        assert_eq!(path(4).size(), 3);
        assert!(cycle(2).is_err());
    }
}
