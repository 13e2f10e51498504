//! Edge densities of pattern-colorable families.
//!
//! `Col(P)` is hereditary and closed under blow-ups, so its density equals
//! its Lagrangian density: the maximum of
//! `q_P(y) = sum over profiles m of (r! / prod m_i!) prod y_i^{m_i}` over the
//! simplex. The finite-`n` route maximizes the closed-form edge count of the
//! maximal colorable graphs over all class-size vectors.

use serde::{Deserialize, Serialize};

use super::{compositions, Pattern};
use crate::error::Result;
use crate::hypergraph::{binomial, factorial};
use crate::spectral::{solve_objective, Objective, SolverConfig, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DensityMethod {
    SimplexOptimization,
    FiniteNRatio,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityConfig {
    pub solver: SolverConfig,
    /// Largest order scanned by the finite-`n` method; `None` picks a cap by `l`.
    pub n_max: Option<usize>,
}

impl Default for DensityConfig {
    fn default() -> Self {
        Self { solver: SolverConfig::default().with_restarts(64), n_max: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityEstimate {
    pub value: f64,
    pub method: DensityMethod,
    /// Optimal class proportions (for the finite-`n` method, at the last order).
    pub point: Vec<f64>,
    /// `(n, ex(Col(P), n) / binom(n, r))` for every scanned order.
    pub trace: Vec<(usize, f64)>,
    /// Last ratio of the trace; `value` is its extrapolation to `n = infinity`.
    pub last_ratio: Option<f64>,
    /// Solver residual for the simplex method.
    pub residual: Option<f64>,
}

impl DensityEstimate {
    pub fn trace_is_nonincreasing(&self, slack: f64) -> bool {
        self.trace.windows(2).all(|w| w[1].1 <= w[0].1 + slack)
    }
}

/// `q_P(y)`.
pub fn q_pattern(p: &Pattern, y: &[f64]) -> f64 {
    pattern_objective(p).value(y)
}

fn pattern_objective(p: &Pattern) -> Objective {
    let r = p.uniformity();
    let terms = p
        .edges()
        .iter()
        .map(|m| Term {
            coef: factorial(r) / m.iter().map(|&k| factorial(k)).product::<f64>(),
            vars: (0..m.len()).filter(|&c| m[c] > 0).map(|c| (c, m[c] as u32)).collect(),
        })
        .collect();
    Objective::new(r, vec![1.0; p.colors()], terms)
}

/// `max` over class-size vectors of the number of edges of the maximal
/// colorable graph on `n` vertices, with a maximizing vector.
///
/// For fully symmetric patterns only nonincreasing vectors are scanned.
/// Among maximizers the lexicographically largest is returned.
pub fn ex_col_count(p: &Pattern, n: usize) -> (u128, Vec<usize>) {
    let symmetric = p.is_fully_symmetric();
    let mut best: (u128, Vec<usize>) = (0, Vec::new());
    for sizes in compositions(n, p.colors()) {
        if symmetric && sizes.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        let count = colorable_edge_count(p, &sizes);
        if best.1.is_empty() || count > best.0 || (count == best.0 && sizes > best.1) {
            best = (count, sizes);
        }
    }
    best
}

/// Edge count of the maximal `p`-colorable graph with the given class sizes.
pub fn colorable_edge_count(p: &Pattern, sizes: &[usize]) -> u128 {
    p.edges().iter().map(|m| m.iter().zip(sizes).map(|(&mi, &ni)| binomial(ni, mi) as u128).product::<u128>()).sum()
}

fn default_cap(l: usize) -> usize {
    match l {
        0..=2 => 200,
        3 => 80,
        4 => 48,
        _ => 40,
    }
}

/// Estimates `pi(Col(P))`.
///
/// ```
/// use alpha_spectral::pattern::*;
/// let p = Pattern::chromatic(2, 3).unwrap();
/// let d = pattern_density(&p, DensityMethod::SimplexOptimization, &DensityConfig::default()).unwrap();
/// assert!((d.value - 0.75).abs() < 1e-9);
/// ```
pub fn pattern_density(p: &Pattern, method: DensityMethod, cfg: &DensityConfig) -> Result<DensityEstimate> {
    match method {
        DensityMethod::SimplexOptimization => {
            let est = solve_objective(&pattern_objective(p), 1.0, &cfg.solver, &[])?;
            Ok(DensityEstimate {
                value: est.lambda,
                method,
                point: est.vector.values,
                trace: Vec::new(),
                last_ratio: None,
                residual: Some(est.residual),
            })
        }
        DensityMethod::FiniteNRatio => Ok(finite_n(p, cfg.n_max.unwrap_or_else(|| default_cap(p.colors())))),
    }
}

/// Scans `n = r..=n_max` and extrapolates `ex(n) r! / n^r` to `n = infinity`.
///
/// The extrapolation interpolates a polynomial in `1/n` through `r + 1`
/// orders `n = q j` and evaluates it at 0 (Neville's scheme). The stride `q`
/// is chosen so the optimal class sizes at those orders are exactly
/// proportional; then `ex(n)` is a polynomial of degree `r` along the nodes
/// and the extrapolation is exact. Without such a stride the last ratio is
/// reported instead.
fn finite_n(p: &Pattern, n_max: usize) -> DensityEstimate {
    let r = p.uniformity();
    let l = p.colors();
    let n_max = n_max.max(l * (r + 1));
    let mut trace = Vec::new();
    let mut counts = Vec::new();
    for n in r..=n_max {
        let (count, sizes) = ex_col_count(p, n);
        trace.push((n, count as f64 / binomial(n, r) as f64));
        counts.push((count, sizes));
    }
    let at = |n: usize| &counts[n - r];
    let proportional = |q: usize| {
        let top = n_max / q;
        (top > r && q * (top - r) >= r).then(|| (top - r..=top).map(|j| j * q).collect::<Vec<_>>()).filter(|ns| {
            let (n0, s0) = (ns[0], &at(ns[0]).1);
            ns.iter().all(|&n| at(n).1.iter().zip(s0).all(|(&a, &b)| a * n0 == b * n))
        })
    };
    let strides = std::iter::once(l).chain((1..=2 * l).filter(|&q| q != l));
    let last_ratio = trace.last().map(|t| t.1);
    let value = match strides.filter_map(proportional).next() {
        Some(ns) => {
            let nodes: Vec<(f64, f64)> = ns
                .iter()
                .map(|&n| (1.0 / n as f64, at(n).0 as f64 * factorial(r) / (n as f64).powi(r as i32)))
                .collect();
            neville_at_zero(&nodes).clamp(0.0, 1.0)
        }
        None => last_ratio.unwrap_or(0.0),
    };
    let last_sizes = &at(n_max).1;
    DensityEstimate {
        value,
        method: DensityMethod::FiniteNRatio,
        point: last_sizes.iter().map(|&s| s as f64 / n_max as f64).collect(),
        last_ratio,
        trace,
        residual: None,
    }
}

fn neville_at_zero(nodes: &[(f64, f64)]) -> f64 {
    let mut p: Vec<f64> = nodes.iter().map(|t| t.1).collect();
    let k = nodes.len();
    for level in 1..k {
        for i in 0..k - level {
            let (xi, xj) = (nodes[i].0, nodes[i + level].0);
            p[i] = (xj * p[i] - xi * p[i + 1]) / (xj - xi);
        }
    }
    p[0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::falling_factorial;

    #[test]
    fn closed_form_identities_at_uniform_point() {
        for r in 2..=4 {
            for l in r..=6 {
                let y = vec![1.0 / l as f64; l];
                let target = falling_factorial(l as f64, r) / (l as f64).powi(r as i32);
                assert!((q_pattern(&Pattern::complete(l, r).unwrap(), &y) - target).abs() < 1e-14);
            }
            for k in 2..=4 {
                let y = vec![1.0 / k as f64; k];
                let target = 1.0 - (k as f64).powi(1 - r as i32);
                assert!((q_pattern(&Pattern::chromatic(k, r).unwrap(), &y) - target).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn ex_col_examples() {
        assert_eq!(ex_col_count(&Pattern::complete(2, 2).unwrap(), 6).0, 9);
        assert_eq!(ex_col_count(&Pattern::chromatic(2, 3).unwrap(), 6).0, 18);
        assert_eq!(ex_col_count(&Pattern::complete(3, 2).unwrap(), 7).0, 16);
        // asymmetric pattern: scanning every composition
        let lop = Pattern::new(2, 2, [vec![1, 1], vec![2, 0]]).unwrap();
        assert_eq!(ex_col_count(&lop, 5).0, 10);
    }

    #[test]
    fn both_methods_on_small_patterns() {
        let cfg = DensityConfig::default();
        let k32 = Pattern::complete(3, 2).unwrap();
        let s = pattern_density(&k32, DensityMethod::SimplexOptimization, &cfg).unwrap();
        let f = pattern_density(&k32, DensityMethod::FiniteNRatio, &cfg).unwrap();
        assert!((s.value - 2.0 / 3.0).abs() < 1e-9);
        assert!((f.value - 2.0 / 3.0).abs() < 1e-9);
        assert!(f.trace_is_nonincreasing(1e-12));
        assert!(f.trace.iter().all(|t| s.value <= t.1 + 1e-9));
        let single = Pattern::full(1, 3).unwrap();
        let s = pattern_density(&single, DensityMethod::SimplexOptimization, &cfg).unwrap();
        assert!((s.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn neville_reproduces_polynomials() {
        let nodes: Vec<(f64, f64)> = [0.1, 0.2, 0.25, 0.5].iter().map(|&h| (h, 3.0 - 2.0 * h + h * h * h)).collect();
        assert!((neville_at_zero(&nodes) - 3.0).abs() < 1e-12);
    }
}
