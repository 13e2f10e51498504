use super::Hypergraph;
use crate::error::{Error, Result};

/// Chromatic number of a 2-graph by backtracking, starting from a greedy clique bound.
pub fn chromatic_number(f: &Hypergraph) -> Result<usize> {
    if f.uniformity() != 2 {
        return Err(Error::UniformityMismatch(2, f.uniformity()));
    }
    let n = f.order();
    if n == 0 {
        return Ok(0);
    }
    if f.size() == 0 {
        return Ok(1);
    }
    let mut adj = vec![vec![false; n]; n];
    for e in f.edges() {
        adj[e[0]][e[1]] = true;
        adj[e[1]][e[0]] = true;
    }
    let deg = f.degrees().degrees;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    let lower = greedy_clique(&adj, &order).max(2);
    for k in lower..=n {
        let mut color = vec![usize::MAX; n];
        if color_with(&adj, &order, 0, k, &mut color) {
            return Ok(k);
        }
    }
    Ok(n)
}

/// `chi(F) = l` and removing some single edge leaves an `(l - 1)`-colorable graph.
pub fn is_color_critical(f: &Hypergraph, l: usize) -> Result<bool> {
    if chromatic_number(f)? != l {
        return Ok(false);
    }
    for e in f.edges() {
        if chromatic_number(&f.delete_edge(e))? == l - 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

fn greedy_clique(adj: &[Vec<bool>], order: &[usize]) -> usize {
    order
        .iter()
        .map(|&s| {
            let mut clique = vec![s];
            for &v in order {
                if v != s && clique.iter().all(|&u| adj[u][v]) {
                    clique.push(v);
                }
            }
            clique.len()
        })
        .max()
        .unwrap_or(0)
}

fn color_with(adj: &[Vec<bool>], order: &[usize], depth: usize, k: usize, color: &mut [usize]) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    // symmetry: never open more than one new colour at a time
    let used = color.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |&m| m + 1);
    for c in 0..k.min(used + 1) {
        if (0..adj.len()).any(|u| adj[v][u] && color[u] == c) {
            continue;
        }
        color[v] = c;
        if color_with(adj, order, depth + 1, k, color) {
            return true;
        }
        color[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{combinations, complete, complete_bipartite, cycle};

    fn proper_two_colorings(f: &Hypergraph) -> usize {
        let n = f.order();
        (0..1u32 << n).filter(|m| f.edges().iter().all(|e| (m >> e[0] & 1) != (m >> e[1] & 1))).count()
    }

    #[test]
    fn chromatic_examples() {
        let k4 = complete(4, 2);
        assert_eq!(chromatic_number(&k4).unwrap(), 4);
        assert!(is_color_critical(&k4, 4).unwrap());

        let c5 = cycle(5).unwrap();
        assert_eq!(proper_two_colorings(&c5), 0);
        assert_eq!(chromatic_number(&c5).unwrap(), 3);
        for e in c5.edges() {
            assert!(proper_two_colorings(&c5.delete_edge(e)) > 0);
        }
        assert!(is_color_critical(&c5, 3).unwrap());

        let k23 = complete_bipartite(2, 3);
        assert_eq!(chromatic_number(&k23).unwrap(), 2);
        assert!(!is_color_critical(&k23, 3).unwrap());
    }

    #[test]
    fn small_cases() {
        assert_eq!(chromatic_number(&Hypergraph::empty(3, 2)).unwrap(), 1);
        assert_eq!(chromatic_number(&Hypergraph::empty(0, 2)).unwrap(), 0);
        assert!(chromatic_number(&complete(3, 3)).is_err());
        // Petersen graph has chromatic number 3
        let outer: Vec<[usize; 2]> = (0..5).map(|i| [i, (i + 1) % 5]).collect();
        let inner: Vec<[usize; 2]> = (0..5).map(|i| [5 + i, 5 + (i + 2) % 5]).collect();
        let spokes: Vec<[usize; 2]> = (0..5).map(|i| [i, i + 5]).collect();
        let p = Hypergraph::new(10, 2, outer.iter().chain(&inner).chain(&spokes)).unwrap();
        assert_eq!(chromatic_number(&p).unwrap(), 3);
        assert_eq!(combinations(5, 2).count(), 10);
    }
}
