//! Finite-`n` audits of the inequalities, growth and balance statements.
//!
//! Each audit reports what it computed; asymptotic statements only yield
//! evidence at the orders checked.

use serde::{Deserialize, Serialize};

use super::{spectral_extremal, spex_col, AuditFlag, ExtremalReport, Witness};
use crate::error::{Error, Result};
use crate::hypergraph::{
    binomial_f64, canonical_form, complete, contains_subgraph, expansion, factorial, falling_factorial,
    is_color_critical, turan_hypergraph, Hypergraph,
};
use crate::pattern::{ex_col_count, find_homomorphism, pattern_density, DensityConfig, DensityMethod, Pattern};
use crate::spectral::{alpha_spectral_radius, vector_stats, SolverConfig};

use super::colorable_graphs;

const SLACK: f64 = 1e-9;

fn density_of(p: &Pattern) -> Result<f64> {
    Ok(pattern_density(p, DensityMethod::SimplexOptimization, &DensityConfig::default())?.value)
}

/// Bounds on `lambda^(alpha)(H)` from `e(H)` and, for `P`-colorable `H`, from `pi(Col(P))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityAudit {
    pub lambda: f64,
    pub converged: bool,
    pub edges: usize,
    pub pi: Option<f64>,
    /// `r! e / n^(r/alpha)`.
    pub lower: f64,
    /// `pi^(1/alpha) (r! e)^(1 - 1/alpha)`.
    pub holder: Option<f64>,
    /// `pi n^(r - r/alpha)`.
    pub power: Option<f64>,
    /// `pi n^r / r!`.
    pub edge_bound: Option<f64>,
    pub flags: Vec<AuditFlag>,
}

impl InequalityAudit {
    pub fn passed(&self) -> bool {
        self.flags.iter().all(|f| f.held)
    }
}

/// Evaluates `r! e / n^(r/alpha) <= lambda` and, with a pattern,
/// `lambda <= pi^(1/alpha) (r! e)^(1-1/alpha) <= pi n^(r - r/alpha)` and `e <= pi n^r / r!`.
pub fn inequality_audit(
    h: &Hypergraph,
    alpha: f64,
    p: Option<&Pattern>,
    cfg: &SolverConfig,
) -> Result<InequalityAudit> {
    let n = h.order() as f64;
    let r = h.uniformity();
    let rf = r as f64;
    let e = h.size() as f64;
    let est = alpha_spectral_radius(h, alpha, cfg)?;
    let lambda = est.lambda;
    let lower = if h.order() == 0 { 0.0 } else { factorial(r) * e / n.powf(rf / alpha) };
    let mut flags = vec![AuditFlag::new("spectral-lower-bound", lambda >= lower - SLACK, None)];
    let (mut pi, mut holder, mut power, mut edge_bound) = (None, None, None, None);
    if let Some(p) = p {
        if find_homomorphism(h, p)?.is_none() {
            return Err(Error::NotColorable);
        }
        let d = density_of(p)?;
        let hb = d.powf(1.0 / alpha) * (factorial(r) * e).powf(1.0 - 1.0 / alpha);
        let pb = d * n.powf(rf - rf / alpha);
        let eb = d * n.powi(r as i32) / factorial(r);
        flags.push(AuditFlag::new("holder-upper-bound", lambda <= hb + SLACK, None));
        flags.push(AuditFlag::new("holder-below-power-bound", hb <= pb + SLACK, None));
        flags.push(AuditFlag::new("power-upper-bound", lambda <= pb + SLACK, None));
        flags.push(AuditFlag::new("edge-density-bound", e <= eb + SLACK, None));
        (pi, holder, power, edge_bound) = (Some(d), Some(hb), Some(pb), Some(eb));
    }
    Ok(InequalityAudit {
        lambda,
        converged: est.converged,
        edges: h.size(),
        pi,
        lower,
        holder,
        power,
        edge_bound,
        flags,
    })
}

/// Where the graphs of a sequence audit come from.
#[derive(Debug, Clone, Copy)]
pub enum SequenceSource<'a> {
    Colorable(&'a Pattern),
    Forbidden { family: &'a [Hypergraph], r: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequencePoint {
    pub n: usize,
    pub lambda: f64,
    /// `lambda n^(r/alpha) / (n)_r`, or `lambda` itself at `alpha = 1`.
    pub normalized: f64,
}

/// Extremal values along `n` with the bracket they imply for the limit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceTrace {
    pub alpha: f64,
    pub r: usize,
    pub points: Vec<SequencePoint>,
    /// Nonincreasing normalized values for `alpha > 1`; nondecreasing values at `alpha = 1`.
    pub monotone: bool,
    /// `max lambda_n n^(r/alpha - r)` (at `alpha = 1`: `max lambda_n`).
    pub lower: f64,
    /// `min` of the normalized values; absent at `alpha = 1`.
    pub upper: Option<f64>,
}

pub fn sequence_audit(
    source: SequenceSource<'_>,
    alpha: f64,
    ns: impl IntoIterator<Item = usize>,
    cfg: &SolverConfig,
) -> Result<SequenceTrace> {
    let r = match source {
        SequenceSource::Colorable(p) => p.uniformity(),
        SequenceSource::Forbidden { r, .. } => r,
    };
    let rf = r as f64;
    let mut points = Vec::new();
    let mut lower = f64::NEG_INFINITY;
    for n in ns {
        let rep = match source {
            SequenceSource::Colorable(p) => spex_col(p, n, alpha, cfg)?,
            SequenceSource::Forbidden { family, r } => spectral_extremal(family, n, r, alpha, cfg)?,
        };
        let lambda = rep.optimum;
        let nf = n as f64;
        let normalized = if alpha == 1.0 {
            lambda
        } else if n >= r {
            lambda * nf.powf(rf / alpha) / falling_factorial(nf, r)
        } else {
            f64::INFINITY
        };
        let scaled = if alpha == 1.0 { lambda } else { lambda * nf.powf(rf / alpha - rf) };
        lower = lower.max(scaled);
        points.push(SequencePoint { n, lambda, normalized });
    }
    let finite: Vec<&SequencePoint> = points.iter().filter(|p| p.normalized.is_finite()).collect();
    let monotone = finite.windows(2).all(|w| {
        if alpha == 1.0 {
            w[1].normalized >= w[0].normalized - SLACK
        } else {
            w[1].normalized <= w[0].normalized + SLACK
        }
    });
    let upper = (alpha != 1.0).then(|| finite.iter().map(|p| p.normalized).fold(f64::INFINITY, f64::min));
    Ok(SequenceTrace { alpha, r, points, monotone, lower, upper })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthPoint {
    pub n: usize,
    pub lambda: f64,
    pub x_min: f64,
    pub min_degree: usize,
    pub composition: Vec<usize>,
}

/// One consecutive pair `(n, n+1)` of the growth inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthStep {
    pub n: usize,
    pub lambda_next: f64,
    /// `(1 + r (1 - 1/alpha - l/(alpha (n - l r + l))) x_min^alpha) lambda_n`.
    pub bound: f64,
    pub holds: bool,
    /// True when `n - l r + l <= 0`, where the statement says nothing.
    pub vacuous: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthAudit {
    pub alpha: f64,
    pub pi: f64,
    pub points: Vec<GrowthPoint>,
    pub steps: Vec<GrowthStep>,
    pub inequality_holds: bool,
    /// Smallest `M >= 0` with `x_min^alpha >= (1/n)(1 - pi M / (r n))` on the range.
    pub fitted_m_vector: f64,
    /// Smallest `M >= 0` with `min degree >= pi (1 - M/n) binom(n, r-1)` on the range.
    pub fitted_m_degree: f64,
}

/// Growth of the spectral extremal graphs of `Col(p)` along consecutive orders.
pub fn growth_audit(
    p: &Pattern,
    alpha: f64,
    ns: impl IntoIterator<Item = usize>,
    cfg: &SolverConfig,
) -> Result<GrowthAudit> {
    let r = p.uniformity();
    let (rf, lf) = (r as f64, p.colors() as f64);
    let pi = density_of(p)?;
    let mut points = Vec::new();
    for n in ns {
        let rep = spex_col(p, n, alpha, cfg)?;
        let w = best_witness(&rep)?;
        let x = w.vector.as_ref().expect("spectral witness carries a vector");
        points.push(GrowthPoint {
            n,
            lambda: rep.optimum,
            x_min: vector_stats(x).min,
            min_degree: w.graph.degrees().min_degree,
            composition: w.composition.clone().unwrap_or_default(),
        });
    }
    let mut steps = Vec::new();
    for pair in points.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        if b.n != a.n + 1 {
            continue;
        }
        let denom = a.n as f64 - lf * rf + lf;
        if denom <= 0.0 {
            steps.push(GrowthStep { n: a.n, lambda_next: b.lambda, bound: f64::NAN, holds: true, vacuous: true });
            continue;
        }
        let factor = 1.0 + rf * (1.0 - 1.0 / alpha - lf / (alpha * denom)) * a.x_min.powf(alpha);
        let bound = factor * a.lambda;
        steps.push(GrowthStep {
            n: a.n,
            lambda_next: b.lambda,
            bound,
            holds: b.lambda >= bound - SLACK * bound.abs().max(1.0),
            vacuous: false,
        });
    }
    let fitted_m_vector = points
        .iter()
        .map(|q| {
            let n = q.n as f64;
            (1.0 - n * q.x_min.powf(alpha)) * rf * n / pi
        })
        .fold(0.0, f64::max);
    let fitted_m_degree = points
        .iter()
        .map(|q| {
            let n = q.n as f64;
            n * (1.0 - q.min_degree as f64 / (pi * binomial_f64(q.n, r - 1)))
        })
        .fold(0.0, f64::max);
    Ok(GrowthAudit {
        alpha,
        pi,
        inequality_holds: steps.iter().all(|s| s.holds),
        points,
        steps,
        fitted_m_vector,
        fitted_m_degree,
    })
}

fn best_witness(rep: &ExtremalReport) -> Result<&Witness> {
    rep.witnesses.first().ok_or_else(|| Error::SolverFailure(format!("no witness at n = {}", rep.n)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BalanceRow {
    pub n: usize,
    pub lambda: f64,
    /// Every maximizing class-size vector (up to relabeling the classes).
    pub argmax: Vec<Vec<usize>>,
    /// `max_i |n_i - n/k|` over the maximizers.
    pub deviation: f64,
    pub balanced: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BalanceAudit {
    pub k: usize,
    pub r: usize,
    pub alpha: f64,
    pub rows: Vec<BalanceRow>,
    /// The constant `m` with `|V_i| = n/k +- m` across the rows.
    pub max_deviation: f64,
    pub all_balanced: bool,
}

/// Class sizes of the spectral extremal complete `k`-chromatic `r`-graphs.
pub fn balance_audit(
    k: usize,
    r: usize,
    alpha: f64,
    ns: impl IntoIterator<Item = usize>,
    cfg: &SolverConfig,
) -> Result<BalanceAudit> {
    let p = Pattern::chromatic(k, r)?;
    let mut rows = Vec::new();
    for n in ns {
        let rep = spex_col(&p, n, alpha, cfg)?;
        let argmax: Vec<Vec<usize>> = rep.witnesses.iter().filter_map(|w| w.composition.clone()).collect();
        let target = n as f64 / k as f64;
        let deviation = argmax.iter().flat_map(|s| s.iter().map(|&x| (x as f64 - target).abs())).fold(0.0, f64::max);
        let balanced = argmax.iter().all(|s| crate::hypergraph::is_balanced_sizes(s));
        rows.push(BalanceRow { n, lambda: rep.optimum, argmax, deviation, balanced });
    }
    Ok(BalanceAudit {
        k,
        r,
        alpha,
        max_deviation: rows.iter().map(|r| r.deviation).fold(0.0, f64::max),
        all_balanced: rows.iter().all(|r| r.balanced),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpexExAudit {
    pub n: usize,
    pub alpha: f64,
    /// `ex(Col(P), n) = pi n^r / r!`.
    pub hypothesis_holds: bool,
    pub ex: f64,
    pub spex: f64,
    pub ex_witnesses: Vec<Hypergraph>,
    pub spex_witnesses: Vec<Hypergraph>,
    pub sets_equal: bool,
    pub spex_within_ex: bool,
}

/// Compares the edge and spectral extremal graphs of `Col(p)` by brute force.
pub fn spex_eq_ex_audit(p: &Pattern, n: usize, alpha: f64, cfg: &SolverConfig) -> Result<SpexExAudit> {
    let r = p.uniformity();
    let pi = density_of(p)?;
    let (ex_count, _) = ex_col_count(p, n);
    let target = pi * (n as f64).powi(r as i32) / factorial(r);
    let hypothesis_holds = (ex_count as f64 - target).abs() <= 1e-9 * target.max(1.0);
    let graphs = colorable_graphs(p, n)?;
    let ex = graphs.iter().map(Hypergraph::size).max().unwrap_or(0);
    let ex_witnesses: Vec<Hypergraph> = graphs.iter().filter(|g| g.size() == ex).cloned().collect();
    use rayon::prelude::*;
    let lambdas: Vec<f64> =
        graphs.par_iter().map(|g| alpha_spectral_radius(g, alpha, cfg).map(|e| e.lambda)).collect::<Result<_>>()?;
    let spex = lambdas.iter().cloned().fold(0.0, f64::max);
    let spex_witnesses: Vec<Hypergraph> = graphs
        .iter()
        .zip(&lambdas)
        .filter(|(_, &l)| l >= spex - super::TIE_TOLERANCE)
        .map(|(g, _)| g.clone())
        .collect();
    Ok(SpexExAudit {
        n,
        alpha,
        hypothesis_holds,
        ex: ex as f64,
        spex,
        sets_equal: ex_witnesses == spex_witnesses,
        spex_within_ex: spex_witnesses.iter().all(|g| ex_witnesses.contains(g)),
        ex_witnesses,
        spex_witnesses,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinDegreeRow {
    pub witness: Hypergraph,
    pub x_min: f64,
    /// `1 - n x_min^alpha`.
    pub eps_prime: f64,
    pub hypothesis: bool,
    pub min_degree: usize,
    /// `(1 - eps) pi binom(n, r-1)`.
    pub bound: f64,
    /// `None` when the hypothesis fails and the witness is skipped.
    pub conclusion: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinDegreeAudit {
    pub pi: f64,
    pub rows: Vec<MinDegreeRow>,
    pub passed: bool,
}

/// On each spectral extremal `forbidden`-free witness whose eigenvector has
/// `x_min^alpha >= (1 - eps')/n` with `eps' < eps pi / (r-1)`, checks
/// `min degree >= (1 - eps) pi binom(n, r-1)`.
pub fn mindeg_audit(
    forbidden: &[Hypergraph],
    p: &Pattern,
    alpha: f64,
    n: usize,
    eps: f64,
    cfg: &SolverConfig,
) -> Result<MinDegreeAudit> {
    let r = p.uniformity();
    let pi = density_of(p)?;
    let rep = spectral_extremal(forbidden, n, r, alpha, cfg)?;
    let bound = (1.0 - eps) * pi * binomial_f64(n, r - 1);
    let rows: Vec<MinDegreeRow> = rep
        .witnesses
        .iter()
        .map(|w| {
            let x_min = vector_stats(w.vector.as_deref().unwrap_or(&[])).min;
            let eps_prime = 1.0 - n as f64 * x_min.powf(alpha);
            let hypothesis = eps_prime < eps * pi / (r as f64 - 1.0);
            let min_degree = w.graph.degrees().min_degree;
            MinDegreeRow {
                witness: w.graph.clone(),
                x_min,
                eps_prime,
                hypothesis,
                min_degree,
                bound,
                conclusion: hypothesis.then_some(min_degree as f64 >= bound - SLACK),
            }
        })
        .collect();
    let passed = rows.iter().all(|row| row.conclusion != Some(false));
    Ok(MinDegreeAudit { pi, rows, passed })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionAudit {
    pub report: ExtremalReport,
    /// Canonical `T_l^r(n)`.
    pub turan: Hypergraph,
    /// For `alpha > 1`: the witness set is exactly `{T_l^r(n)}`.
    pub unique_turan: Option<bool>,
    /// For `alpha = 1`: the optimum equals `(l)_r / l^r`.
    pub lagrangian_matches: Option<bool>,
    /// For `alpha = 1`: every witness contains `K_l^r`.
    pub witnesses_contain_clique: Option<bool>,
    pub passed: bool,
}

/// `SPEX` over graphs without the `r`-expansion of an `(l+1)`-color-critical 2-graph `f`.
pub fn expansion_spex_audit(
    f: &Hypergraph,
    l: usize,
    r: usize,
    alpha: f64,
    n: usize,
    cfg: &SolverConfig,
) -> Result<ExpansionAudit> {
    if !is_color_critical(f, l + 1)? {
        return Err(Error::InvalidParameters(format!("F is not {}-color-critical", l + 1)));
    }
    let fr = expansion(f, r)?;
    let report = spectral_extremal(&[fr], n, r, alpha, cfg)?;
    let turan = canonical_form(&turan_hypergraph(n, l, r)?)?;
    let (mut unique_turan, mut lagrangian_matches, mut witnesses_contain_clique) = (None, None, None);
    if alpha > 1.0 {
        unique_turan = Some(report.witness_graphs() == vec![&turan]);
    } else {
        let target = falling_factorial(l as f64, r) / (l as f64).powi(r as i32);
        lagrangian_matches = Some((report.optimum - target).abs() <= 1e-8);
        let clique = complete(l, r);
        let mut all = true;
        for w in &report.witnesses {
            all &= contains_subgraph(&w.graph, &clique)?;
        }
        witnesses_contain_clique = Some(all);
    }
    let passed = [unique_turan, lagrangian_matches, witnesses_contain_clique].iter().all(|f| f.unwrap_or(true));
    Ok(ExpansionAudit { report, turan, unique_turan, lagrangian_matches, witnesses_contain_clique, passed })
}
