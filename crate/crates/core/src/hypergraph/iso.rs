//! Canonical labeling by colour refinement plus individualisation.
//!
//! The search tree branches on one vertex per transposition class of the
//! target cell; two vertices whose transposition is an automorphism give
//! isomorphic subtrees, so this pruning is exact.

use std::collections::HashSet;

use super::{Hypergraph, VertexPartition};
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`] and [`is_isomorphic`].
pub const CANONICAL_MAX_ORDER: usize = 12;

/// Relabeled copy of `h` that is identical for all graphs isomorphic to `h`.
pub fn canonical_form(h: &Hypergraph) -> Result<Hypergraph> {
    h.relabel(&canonical_labeling(h)?)
}

/// The relabeling `v -> labeling[v]` that [`canonical_form`] applies.
pub fn canonical_labeling(h: &Hypergraph) -> Result<Vec<usize>> {
    if h.order() > CANONICAL_MAX_ORDER {
        return Err(Error::TooLarge(format!(
            "canonical form is exact only up to {CANONICAL_MAX_ORDER} vertices (got {})",
            h.order()
        )));
    }
    Ok(labeling(h))
}

pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.order() != b.order() || a.uniformity() != b.uniformity() || a.size() != b.size() {
        return Ok(false);
    }
    let mut da = a.degrees().degrees;
    let mut db = b.degrees().degrees;
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Classes of the relation "swapping `u` and `v` fixes the edge set".
///
/// The relation is transitive (`(u w) = (u v)(v w)(u v)`), so its classes are
/// obtained directly. Blocks are listed by smallest member.
pub fn transposition_orbits(h: &Hypergraph) -> VertexPartition {
    let n = h.order();
    let edges = h.edge_set();
    let inc = h.incidence();
    let deg = h.degrees().degrees;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    'outer: for v in 0..n {
        for b in blocks.iter_mut() {
            let u = b[0];
            if deg[u] == deg[v] && swap_is_automorphism(h, &edges, &inc, u, v) {
                b.push(v);
                continue 'outer;
            }
        }
        blocks.push(vec![v]);
    }
    VertexPartition { blocks }
}

fn swap_is_automorphism(h: &Hypergraph, edges: &HashSet<&[usize]>, inc: &[Vec<usize>], u: usize, v: usize) -> bool {
    let mut buf = Vec::with_capacity(h.uniformity());
    for (a, b) in [(u, v), (v, u)] {
        for &ei in &inc[a] {
            let e = &h.edges()[ei];
            if e.contains(&b) {
                continue;
            }
            buf.clear();
            buf.extend(e.iter().map(|&x| if x == a { b } else { x }));
            buf.sort_unstable();
            if !edges.contains(buf.as_slice()) {
                return false;
            }
        }
    }
    true
}

/// `labeling[v]` is the canonical position of vertex `v`.
fn labeling(h: &Hypergraph) -> Vec<usize> {
    let n = h.order();
    if n == 0 {
        return Vec::new();
    }
    let inc = h.incidence();
    let orbit = {
        let parts = transposition_orbits(h);
        let mut id = vec![0; n];
        for (i, b) in parts.blocks.iter().enumerate() {
            for &v in b {
                id[v] = i;
            }
        }
        id
    };
    let mut best: Option<(Vec<Vec<usize>>, Vec<usize>)> = None;
    let mut colors = vec![0; n];
    refine(h, &inc, &mut colors);
    search(h, &inc, &orbit, colors, &mut best);
    best.unwrap().1
}

fn search(
    h: &Hypergraph,
    inc: &[Vec<usize>],
    orbit: &[usize],
    colors: Vec<usize>,
    best: &mut Option<(Vec<Vec<usize>>, Vec<usize>)>,
) {
    let n = colors.len();
    let mut count = vec![0usize; n];
    for &c in &colors {
        count[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| count[c] > 1) else {
        let cert = relabeled_edges(h, &colors);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, colors));
        }
        return;
    };
    let mut tried = HashSet::new();
    for v in 0..n {
        if colors[v] != target || !tried.insert(orbit[v]) {
            continue;
        }
        let mut next: Vec<usize> =
            colors.iter().enumerate().map(|(u, &c)| 2 * c + usize::from(c == target && u != v)).collect();
        rank(&mut next);
        refine(h, inc, &mut next);
        search(h, inc, orbit, next, best);
    }
}

fn relabeled_edges(h: &Hypergraph, labeling: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| {
            let mut f: Vec<usize> = e.iter().map(|&v| labeling[v]).collect();
            f.sort_unstable();
            f
        })
        .collect();
    out.sort_unstable();
    out
}

/// Replaces values by their rank among the distinct values.
fn rank(colors: &mut [usize]) {
    let mut vals: Vec<usize> = colors.to_vec();
    vals.sort_unstable();
    vals.dedup();
    for c in colors.iter_mut() {
        *c = vals.binary_search(c).unwrap();
    }
}

/// Colour refinement to the coarsest equitable partition below `colors`.
///
/// Colours are ranks of (old colour, multiset of neighbour colour tuples), so
/// the result is equivariant under relabeling.
fn refine(h: &Hypergraph, inc: &[Vec<usize>], colors: &mut [usize]) {
    let n = colors.len();
    let mut classes = {
        let mut v = colors.to_vec();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    loop {
        let sigs: Vec<(usize, Vec<Vec<usize>>)> = (0..n)
            .map(|v| {
                let mut s: Vec<Vec<usize>> = inc[v]
                    .iter()
                    .map(|&ei| {
                        let mut t: Vec<usize> = h.edges()[ei].iter().filter(|&&u| u != v).map(|&u| colors[u]).collect();
                        t.sort_unstable();
                        t
                    })
                    .collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<Vec<usize>>)> = sigs.iter().collect();
        distinct.sort_unstable();
        distinct.dedup();
        for v in 0..n {
            colors[v] = distinct.binary_search(&&sigs[v]).unwrap();
        }
        if distinct.len() == classes || distinct.len() == n {
            break;
        }
        classes = distinct.len();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{complete, complete_bipartite, cycle, path, turan_hypergraph};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, r: usize, p: f64) -> Hypergraph {
        let edges: Vec<Vec<usize>> = super::super::combinations(n, r).filter(|_| rng.gen_bool(p)).collect();
        Hypergraph::new(n, r, edges).unwrap()
    }

    /// Brute-force isomorphism over all permutations.
    fn iso_by_permutations(a: &Hypergraph, b: &Hypergraph) -> bool {
        fn rec(a: &Hypergraph, b: &Hypergraph, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let n = a.order();
            if perm.len() == n {
                return a.relabel(perm).unwrap() == *b;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    perm.push(v);
                    if rec(a, b, perm, used) {
                        return true;
                    }
                    perm.pop();
                    used[v] = false;
                }
            }
            false
        }
        a.order() == b.order() && a.size() == b.size() && rec(a, b, &mut Vec::new(), &mut vec![false; a.order()])
    }

    #[test]
    fn relabeled_triangle_is_isomorphic() {
        let k3 = complete(3, 2);
        let k3b = Hypergraph::new(3, 2, [[2, 0], [1, 2], [0, 1]]).unwrap();
        assert!(is_isomorphic(&k3, &k3b).unwrap());
        let c = canonical_form(&k3).unwrap();
        assert_eq!(canonical_form(&c).unwrap(), c);
    }

    #[test]
    fn same_degree_sequence_different_graphs() {
        // C_6 versus two disjoint triangles: both 2-regular on 6 vertices
        let c6 = cycle(6).unwrap();
        let two_k3 = Hypergraph::new(6, 2, [[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]]).unwrap();
        assert!(!iso_by_permutations(&c6, &two_k3));
        assert!(!is_isomorphic(&c6, &two_k3).unwrap());
        // K_{3,3} versus the prism, both 3-regular
        let k33 = complete_bipartite(3, 3);
        let prism =
            Hypergraph::new(6, 2, [[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5], [0, 3], [1, 4], [2, 5]]).unwrap();
        assert!(!iso_by_permutations(&k33, &prism));
        assert!(!is_isomorphic(&k33, &prism).unwrap());
    }

    #[test]
    fn canonical_form_agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(2..=6);
            let r = if n >= 4 && rng.gen_bool(0.3) { 3 } else { 2 };
            let a = random_graph(&mut rng, n, r, 0.5);
            let b = random_graph(&mut rng, n, r, 0.5);
            assert_eq!(is_isomorphic(&a, &b).unwrap(), iso_by_permutations(&a, &b), "{a} vs {b}");
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..10 {
            let n = 6 + trial % 5;
            let r = if trial % 3 == 0 { 3 } else { 2 };
            let g = random_graph(&mut rng, n, r, 0.4);
            let c = canonical_form(&g).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            for _ in 0..100 {
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.relabel(&perm).unwrap()).unwrap(), c);
            }
        }
    }

    #[test]
    fn refuses_large_orders() {
        assert!(matches!(canonical_form(&path(13)), Err(Error::TooLarge(_))));
    }

    #[test]
    fn orbit_examples() {
        let c4 = turan_hypergraph(4, 2, 2).unwrap();
        let orbits = transposition_orbits(&c4);
        let deg = c4.degrees().degrees;
        for b in &orbits.blocks {
            assert!(b.iter().all(|&v| deg[v] == deg[b[0]]));
        }
        assert_eq!(orbits.blocks, vec![vec![0, 1], vec![2, 3]]);

        let k3_plus = complete(3, 2).with_isolated_vertex();
        assert_eq!(transposition_orbits(&k3_plus).blocks, vec![vec![0, 1, 2], vec![3]]);

        assert_eq!(transposition_orbits(&complete(4, 4)).blocks, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn orbits_are_exactly_the_swap_automorphisms() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let n = rng.gen_range(3..=7);
            let g = random_graph(&mut rng, n, 2, 0.5);
            let orbits = transposition_orbits(&g);
            let block = orbits.block_of();
            for u in 0..n {
                for v in u + 1..n {
                    let mut perm: Vec<usize> = (0..n).collect();
                    perm.swap(u, v);
                    let fixed = g.relabel(&perm).unwrap() == g;
                    assert_eq!(fixed, block[u] == block[v]);
                }
            }
        }
    }
}
