use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{is_valid_coloring, Coloring, Pattern};
use crate::error::{Error, Result};
use crate::hypergraph::{blow_up, Hypergraph};

/// Adds a vertex `k = n` with color `j` that copies every edge through a
/// color-`j` vertex: the new edge set is `E ∪ {e - v + k : v in e, phi(v) = j}`.
pub fn clone_vertex(h: &Hypergraph, phi: &Coloring, j: usize) -> Result<(Hypergraph, Coloring)> {
    if phi.len() != h.order() {
        return Err(Error::PartialColoring { expected: h.order(), got: phi.len() });
    }
    if !phi.colors().contains(&j) {
        return Err(Error::EmptyClass(j));
    }
    let k = h.order();
    let mut edges: BTreeSet<Vec<usize>> = h.edges().iter().cloned().collect();
    for e in h.edges() {
        for &v in e.iter().filter(|&&v| phi.colors()[v] == j) {
            let mut f: Vec<usize> = e.iter().copied().filter(|&u| u != v).collect();
            f.push(k);
            edges.insert(f);
        }
    }
    let mut colors = phi.0.clone();
    colors.push(j);
    Ok((Hypergraph::new(k + 1, h.uniformity(), edges)?, Coloring(colors)))
}

/// Outcome of [`closure_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    /// Whether the input coloring was valid; when false nothing else was checked.
    pub input_valid: bool,
    pub induced_valid: bool,
    pub blow_up_valid: bool,
    pub failure: Option<String>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.input_valid && self.induced_valid && self.blow_up_valid
    }
}

/// Checks that the restriction of `phi` to `subset` colors the induced
/// subgraph validly, and that the lifted coloring colors `blow_up(h, t)`.
pub fn closure_check(
    h: &Hypergraph,
    p: &Pattern,
    phi: &Coloring,
    subset: &[usize],
    t: &[usize],
) -> Result<ClosureReport> {
    if !is_valid_coloring(h, p, phi)? {
        return Ok(ClosureReport {
            input_valid: false,
            induced_valid: false,
            blow_up_valid: false,
            failure: Some("input coloring is not valid".into()),
        });
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let induced = h.induced_subgraph(&sorted)?;
    let restricted = Coloring(sorted.iter().map(|&v| phi.colors()[v]).collect());
    let induced_valid = is_valid_coloring(&induced, p, &restricted)?;
    let b = blow_up(h, t)?;
    let lifted = Coloring(b.class_of.iter().map(|&c| phi.colors()[c]).collect());
    let blow_up_valid = is_valid_coloring(&b.graph, p, &lifted)?;
    let failure = match (induced_valid, blow_up_valid) {
        (false, _) => Some(format!("restriction to {sorted:?} is invalid")),
        (_, false) => Some(format!("lifted coloring of blow-up by {t:?} is invalid")),
        _ => None,
    };
    Ok(ClosureReport { input_valid: true, induced_valid, blow_up_valid, failure })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{complete_bipartite, is_isomorphic, single_edge, turan_hypergraph};
    use crate::pattern::maximal_colorable;

    #[test]
    fn cloning_examples() {
        let k2 = Pattern::complete(2, 2).unwrap();
        let t = turan_hypergraph(4, 2, 2).unwrap();
        let phi = Coloring::from_class_sizes(&[2, 2]);
        let (c, psi) = clone_vertex(&t, &phi, 0).unwrap();
        assert!(is_isomorphic(&c, &complete_bipartite(3, 2)).unwrap());
        assert!(is_valid_coloring(&c, &k2, &psi).unwrap());

        let e = single_edge(3);
        let (c, _) = clone_vertex(&e, &Coloring(vec![0, 1, 2]), 0).unwrap();
        assert_eq!(c.size(), 2);

        let (c, _) = clone_vertex(&e, &Coloring(vec![0, 1, 2]), 1).unwrap();
        assert_eq!(c.size(), 2);
        let iso = Hypergraph::new(4, 3, [[0, 1, 2]]).unwrap();
        let (c, _) = clone_vertex(&iso, &Coloring(vec![0, 1, 2, 3]), 3).unwrap();
        assert_eq!(c.edges(), iso.edges());

        assert!(matches!(clone_vertex(&e, &Coloring(vec![0, 1, 2]), 5), Err(Error::EmptyClass(5))));
    }

    #[test]
    fn iterated_cloning_stays_maximal() {
        let p = Pattern::chromatic(2, 3).unwrap();
        let mut sizes = vec![2, 2];
        let (mut h, mut phi) = maximal_colorable(&sizes, &p).unwrap();
        for step in 0..5 {
            let j = step % 2;
            (h, phi) = clone_vertex(&h, &phi, j).unwrap();
            sizes[j] += 1;
            let (m, _) = maximal_colorable(&sizes, &p).unwrap();
            assert!(is_isomorphic(&h, &m).unwrap());
            assert!(is_valid_coloring(&h, &p, &phi).unwrap());
        }
    }

    #[test]
    fn closure_examples() {
        let k2 = Pattern::complete(2, 2).unwrap();
        let h = complete_bipartite(2, 3);
        let phi = Coloring::from_class_sizes(&[2, 3]);
        let rep = closure_check(&h, &k2, &phi, &[0, 2, 4], &[2, 1, 3, 1, 1]).unwrap();
        assert!(rep.passed());
        let rep = closure_check(&h, &k2, &phi, &[0, 1, 2, 3, 4], &[1; 5]).unwrap();
        assert!(rep.passed());
        let bad = closure_check(&h, &k2, &Coloring(vec![0; 5]), &[0], &[1; 5]).unwrap();
        assert!(!bad.input_valid && !bad.passed());
    }
}
