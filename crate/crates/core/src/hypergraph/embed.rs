//! Subgraph containment by backtracking.

use std::collections::HashSet;

use super::Hypergraph;
use crate::error::{Error, Result};

/// Whether `host` contains a (not necessarily induced) copy of `pattern`.
pub fn contains_subgraph(host: &Hypergraph, pattern: &Hypergraph) -> Result<bool> {
    Ok(find_embedding(host, pattern)?.is_some())
}

/// An injective map `V(pattern) -> V(host)` sending edges to edges, if one exists.
///
/// Pattern vertices are placed in an order that keeps each new vertex attached
/// to as many placed ones as possible (ties by degree), and host candidates are
/// pruned by degree.
pub fn find_embedding(host: &Hypergraph, pattern: &Hypergraph) -> Result<Option<Vec<usize>>> {
    if host.uniformity() != pattern.uniformity() {
        return Err(Error::UniformityMismatch(host.uniformity(), pattern.uniformity()));
    }
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return Ok(None);
    }
    let pdeg = pattern.degrees().degrees;
    let hdeg = host.degrees().degrees;
    let order = placement_order(pattern, &pdeg);
    let mut position = vec![0; pattern.order()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // edges of the pattern that become fully mapped when order[i] is placed
    let mut closing: Vec<Vec<&[usize]>> = vec![Vec::new(); order.len()];
    for e in pattern.edges() {
        let last = e.iter().map(|&v| position[v]).max().unwrap();
        closing[last].push(e);
    }
    let edges: HashSet<&[usize]> = host.edge_set();
    let mut search = Search {
        host_order: host.order(),
        hdeg: &hdeg,
        pdeg: &pdeg,
        order: &order,
        closing: &closing,
        edges: &edges,
        map: vec![usize::MAX; pattern.order()],
        used: vec![false; host.order()],
        buf: Vec::with_capacity(pattern.uniformity()),
    };
    Ok(if search.extend(0) { Some(search.map) } else { None })
}

fn placement_order(pattern: &Hypergraph, deg: &[usize]) -> Vec<usize> {
    let n = pattern.order();
    let inc = pattern.incidence();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !placed[v]).max_by_key(|&v| (links[v], deg[v], std::cmp::Reverse(v))).unwrap();
        placed[v] = true;
        order.push(v);
        for &ei in &inc[v] {
            for &u in &pattern.edges()[ei] {
                if !placed[u] {
                    links[u] += 1;
                }
            }
        }
    }
    order
}

struct Search<'a> {
    host_order: usize,
    hdeg: &'a [usize],
    pdeg: &'a [usize],
    order: &'a [usize],
    closing: &'a [Vec<&'a [usize]>],
    edges: &'a HashSet<&'a [usize]>,
    map: Vec<usize>,
    used: Vec<bool>,
    buf: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for h in 0..self.host_order {
            if self.used[h] || self.hdeg[h] < self.pdeg[v] {
                continue;
            }
            self.map[v] = h;
            if self.closing_edges_present(depth) {
                self.used[h] = true;
                if self.extend(depth + 1) {
                    return true;
                }
                self.used[h] = false;
            }
            self.map[v] = usize::MAX;
        }
        false
    }

    fn closing_edges_present(&mut self, depth: usize) -> bool {
        for e in &self.closing[depth] {
            self.buf.clear();
            self.buf.extend(e.iter().map(|&u| self.map[u]));
            self.buf.sort_unstable();
            if !self.edges.contains(self.buf.as_slice()) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{chromatic_turan, complete, complete_bipartite, cycle, path, turan_hypergraph};

    #[test]
    fn containment_examples() {
        let t26 = turan_hypergraph(6, 2, 2).unwrap();
        assert!(!contains_subgraph(&t26, &complete(3, 2)).unwrap());
        assert!(contains_subgraph(&complete(4, 2), &complete(3, 2)).unwrap());
        assert!(contains_subgraph(&t26, &cycle(4).unwrap()).unwrap());
        assert!(!contains_subgraph(&t26, &cycle(5).unwrap()).unwrap());
        assert!(contains_subgraph(&cycle(6).unwrap(), &path(6)).unwrap());
        assert!(contains_subgraph(&complete(3, 2), &complete(3, 3)).is_err());
    }

    #[test]
    fn k4_3_needs_its_own_vertices() {
        // the 3-expansion of K_4 has 10 vertices and cannot sit in a 6-vertex host
        let e = crate::hypergraph::expansion(&complete(4, 2), 3).unwrap();
        let q = chromatic_turan(6, 2, 3).unwrap();
        assert!(!contains_subgraph(&q, &e).unwrap());
    }

    #[test]
    fn embedding_is_a_witness() {
        let host = complete_bipartite(3, 3);
        let pat = cycle(6).unwrap();
        let map = find_embedding(&host, &pat).unwrap().unwrap();
        let mut seen = map.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 6);
        for e in pat.edges() {
            assert!(host.has_edge(&[map[e[0]], map[e[1]]]));
        }
    }

    #[test]
    fn isolated_pattern_vertices_need_room() {
        let pat = complete(2, 2).with_isolated_vertex();
        assert!(!contains_subgraph(&complete(2, 2), &pat).unwrap());
        assert!(contains_subgraph(&path(3), &pat).unwrap());
    }
}
