//! The Lagrangian polynomial and the alpha-spectral radius.
//!
//! For an `r`-graph `G` on `n` vertices,
//! `P_G(x) = r! * sum over edges {i_1..i_r} of x_{i_1} ... x_{i_r}` and
//! `lambda^(alpha)(G)` is the maximum of `P_G` over nonnegative `x` with
//! `||x||_alpha = 1`. At a maximizer the eigen-equation
//! `lambda * x_i^(alpha-1) = (r-1)! * sum_{e containing i} prod_{v in e - i} x_v`
//! holds on the support; its largest defect is reported as the residual.

mod objective;
mod solver;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{binomial_f64, factorial, Hypergraph};
use crate::pattern::Pattern;
pub(crate) use objective::{Objective, Term};

/// Solver family. `Auto` picks simplex at `alpha = 1`, projected gradient for
/// `1 < alpha < r` and power iteration for `alpha >= r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Power,
    ProjectedGradient,
    Simplex,
    Auto,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Power => "power",
            Method::ProjectedGradient => "projected-gradient",
            Method::Simplex => "simplex",
            Method::Auto => "auto",
        })
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "power" => Ok(Method::Power),
            "projected-gradient" | "pg" => Ok(Method::ProjectedGradient),
            "simplex" => Ok(Method::Simplex),
            "auto" => Ok(Method::Auto),
            _ => Err(Error::InvalidParameters(format!("unknown method `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Residual target.
    pub tolerance: f64,
    /// Iteration cap per start.
    pub max_iterations: usize,
    /// Starts for the multi-start methods (the uniform vector is always one).
    pub restarts: usize,
    pub seed: u64,
    pub method: Method,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { tolerance: 1e-10, max_iterations: 100_000, restarts: 32, seed: 0x5eed, method: Method::Auto }
    }
}

impl SolverConfig {
    pub fn with_restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(Error::InvalidParameters("tolerance must be positive".into()));
        }
        if self.restarts == 0 {
            return Err(Error::InvalidParameters("restarts must be at least 1".into()));
        }
        Ok(())
    }
}

/// Nonnegative vertex weights with the norm they were normalized in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightVector {
    pub values: Vec<f64>,
    pub alpha: f64,
}

impl WeightVector {
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v.abs().powf(self.alpha)).sum::<f64>().powf(1.0 / self.alpha)
    }
}

/// Best point found by a solve, with its certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralEstimate {
    /// `P_G(vector)`; a lower bound for the true radius.
    pub lambda: f64,
    pub vector: WeightVector,
    pub residual: f64,
    pub iterations: usize,
    pub restarts_used: usize,
    pub method: Method,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VectorStats {
    pub min: f64,
    pub max: f64,
    /// `max / min`; infinite when some entry is zero.
    pub principal_ratio: f64,
}

fn check_len(h: &Hypergraph, x: &[f64]) -> Result<()> {
    if x.len() != h.order() {
        return Err(Error::DimensionMismatch { expected: h.order(), got: x.len() });
    }
    Ok(())
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha >= 1.0) || !alpha.is_finite() {
        return Err(Error::InvalidAlpha(alpha));
    }
    Ok(())
}

/// `P_G(x)`, with no normalization applied.
///
/// ```
/// use alpha_spectral::{hypergraph::complete, spectral::lagrangian_poly};
/// let x = [1.0 / 3f64.sqrt(); 3];
/// assert!((lagrangian_poly(&complete(3, 2), &x).unwrap() - 2.0).abs() < 1e-12);
/// ```
pub fn lagrangian_poly(h: &Hypergraph, x: &[f64]) -> Result<f64> {
    check_len(h, x)?;
    Ok(Objective::from_hypergraph(h).value(x))
}

/// Gradient of `P_G` at `x`.
pub fn poly_gradient(h: &Hypergraph, x: &[f64]) -> Result<Vec<f64>> {
    check_len(h, x)?;
    Ok(Objective::from_hypergraph(h).gradient(x))
}

/// Eigen-equation defect of `(lambda, x)`; for `alpha = 1` the KKT defect on the simplex.
pub fn eigen_residual(h: &Hypergraph, alpha: f64, lambda: f64, x: &[f64]) -> Result<f64> {
    check_len(h, x)?;
    check_alpha(alpha)?;
    Ok(Objective::from_hypergraph(h).residual(alpha, lambda, x))
}

/// Computes `lambda^(alpha)(h)` as the best point over the configured starts.
///
/// ```
/// use alpha_spectral::{hypergraph::complete_bipartite, spectral::*};
/// let est = alpha_spectral_radius(&complete_bipartite(2, 8), 2.0, &SolverConfig::default()).unwrap();
/// assert!((est.lambda - 4.0).abs() < 1e-9);
/// assert!(est.converged);
/// ```
pub fn alpha_spectral_radius(h: &Hypergraph, alpha: f64, cfg: &SolverConfig) -> Result<SpectralEstimate> {
    alpha_spectral_radius_from(h, alpha, cfg, &[])
}

/// As [`alpha_spectral_radius`], with extra starting vectors tried first.
pub fn alpha_spectral_radius_from(
    h: &Hypergraph,
    alpha: f64,
    cfg: &SolverConfig,
    warm: &[Vec<f64>],
) -> Result<SpectralEstimate> {
    check_alpha(alpha)?;
    cfg.validate()?;
    for w in warm {
        check_len(h, w)?;
    }
    let obj = Objective::from_hypergraph(h);
    solve_objective(&obj, alpha, cfg, warm)
}

pub(crate) fn solve_objective(
    obj: &Objective,
    alpha: f64,
    cfg: &SolverConfig,
    warm: &[Vec<f64>],
) -> Result<SpectralEstimate> {
    let method = solver::resolve(cfg.method, alpha, obj.degree)?;
    if obj.terms.is_empty() || obj.dim() == 0 {
        let values = if obj.dim() == 0 { Vec::new() } else { obj.uniform(alpha) };
        return Ok(SpectralEstimate {
            lambda: 0.0,
            vector: WeightVector { values, alpha },
            residual: 0.0,
            iterations: 0,
            restarts_used: 0,
            method,
            converged: true,
        });
    }
    let sol = solver::solve(obj, alpha, cfg, warm)?;
    Ok(SpectralEstimate {
        lambda: sol.lambda,
        converged: sol.residual <= cfg.tolerance,
        vector: WeightVector { values: sol.y, alpha },
        residual: sol.residual,
        iterations: sol.iterations,
        restarts_used: sol.restarts,
        method: sol.method,
    })
}

/// Reduced objective of the maximal graph with the given class sizes whose
/// edges are the `r`-sets with color profile in `pattern`.
///
/// Returns the objective over the nonempty classes and their indices.
pub(crate) fn reduced_objective(class_sizes: &[usize], pattern: &Pattern) -> Result<(Objective, Vec<usize>)> {
    if class_sizes.len() != pattern.colors() {
        return Err(Error::DimensionMismatch { expected: pattern.colors(), got: class_sizes.len() });
    }
    let active: Vec<usize> = (0..class_sizes.len()).filter(|&c| class_sizes[c] > 0).collect();
    let mut index = vec![usize::MAX; class_sizes.len()];
    for (i, &c) in active.iter().enumerate() {
        index[c] = i;
    }
    let r = pattern.uniformity();
    let terms = pattern
        .edges()
        .iter()
        .filter(|m| m.iter().zip(class_sizes).all(|(mi, ni)| mi <= ni))
        .map(|m| {
            let coef = factorial(r) * m.iter().zip(class_sizes).map(|(&mi, &ni)| binomial_f64(ni, mi)).product::<f64>();
            let vars = (0..m.len()).filter(|&c| m[c] > 0).map(|c| (index[c], m[c] as u32)).collect();
            Term { coef, vars }
        })
        .collect();
    let weights = active.iter().map(|&c| class_sizes[c] as f64).collect();
    Ok((Objective::new(r, weights, terms), active))
}

/// `lambda^(alpha)` of the maximal pattern-colorable graph with the given
/// class sizes, solved with one weight per class.
///
/// Vertices within a class are pairwise transposable, so for `alpha > 1` the
/// principal eigenvector is constant on classes and the reduction is exact;
/// at `alpha = 1` averaging within a class never lowers the Lagrangian. The
/// returned vector is lifted to the vertex layout used by
/// [`maximal_colorable`](crate::pattern::maximal_colorable): class 0 first.
///
/// ```
/// use alpha_spectral::{pattern::Pattern, spectral::*};
/// let k2 = Pattern::complete(2, 2).unwrap();
/// let est = symmetric_spectral_radius(&[3, 3], &k2, 2.0, &SolverConfig::default()).unwrap();
/// assert!((est.lambda - 3.0).abs() < 1e-10);
/// ```
pub fn symmetric_spectral_radius(
    class_sizes: &[usize],
    pattern: &Pattern,
    alpha: f64,
    cfg: &SolverConfig,
) -> Result<SpectralEstimate> {
    check_alpha(alpha)?;
    cfg.validate()?;
    let (obj, active) = reduced_objective(class_sizes, pattern)?;
    let mut est = solve_objective(&obj, alpha, cfg, &[])?;
    let mut per_class = vec![0.0; class_sizes.len()];
    for (i, &c) in active.iter().enumerate() {
        per_class[c] = est.vector.values.get(i).copied().unwrap_or(0.0);
    }
    est.vector.values = class_sizes.iter().zip(&per_class).flat_map(|(&n, &v)| std::iter::repeat_n(v, n)).collect();
    Ok(est)
}

/// Solves along a nondecreasing grid, warm-starting each point from the
/// previous maximizer, which keeps the computed values monotone.
pub fn alpha_sweep(h: &Hypergraph, grid: &[f64], cfg: &SolverConfig) -> Result<Vec<SpectralEstimate>> {
    if grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidParameters("alpha grid must be sorted".into()));
    }
    let mut out: Vec<SpectralEstimate> = Vec::with_capacity(grid.len());
    for &alpha in grid {
        let warm: Vec<Vec<f64>> = out.last().map(|e| vec![e.vector.values.clone()]).unwrap_or_default();
        out.push(alpha_spectral_radius_from(h, alpha, cfg, &warm)?);
    }
    Ok(out)
}

pub fn vector_stats(x: &[f64]) -> VectorStats {
    let min = x.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = x.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let principal_ratio = if min > 0.0 { max / min } else { f64::INFINITY };
    VectorStats { min, max, principal_ratio }
}
