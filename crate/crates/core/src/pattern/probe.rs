use super::{find_homomorphism, pattern_density, DensityConfig, DensityMethod, Pattern};
use crate::error::{Error, Result};
use crate::hypergraph::{contains_subgraph, enumerate_hypergraphs, factorial, EnumerationMode, Hypergraph};

/// Lists `forbidden`-free `r`-graphs on `n` vertices with
/// `min degree >= (pi / (r-1)! - epsilon) n^(r-1)` that admit no homomorphism
/// into `p`, where `pi` is the density of `Col(p)`.
///
/// An empty answer is evidence, not proof, of degree stability at this order.
pub fn degree_stability_probe(
    forbidden: &[Hypergraph],
    p: &Pattern,
    n: usize,
    epsilon: f64,
) -> Result<Vec<Hypergraph>> {
    let r = p.uniformity();
    if let Some(f) = forbidden.iter().find(|f| f.uniformity() != r) {
        return Err(Error::UniformityMismatch(r, f.uniformity()));
    }
    let pi = pattern_density(p, DensityMethod::SimplexOptimization, &DensityConfig::default())?.value;
    let threshold = (pi / factorial(r - 1) - epsilon) * (n as f64).powi(r as i32 - 1);
    let free = |g: &Hypergraph| forbidden.iter().all(|f| !contains_subgraph(g, f).unwrap_or(true));
    let graphs = enumerate_hypergraphs(n, r, EnumerationMode::IsoReduced { hereditary: true }, free)?;
    let mut out = Vec::new();
    for g in graphs {
        if g.degrees().min_degree as f64 >= threshold - 1e-12 && find_homomorphism(&g, p)?.is_none() {
            out.push(g);
        }
    }
    Ok(out)
}
