//! Edge and spectral extremal problems at desk scale.
//!
//! `EX` maximizes the number of edges and `SPEX` maximizes `lambda^(alpha)`
//! over a family of `r`-graphs on `n` vertices. Families are given either by
//! a finite forbidden list (searched by enumeration) or as `Col(P)` (searched
//! over the maximal colorable graphs, one per class-size vector).

mod audit;
mod lemmas;

pub use audit::*;
pub use lemmas::{binomial_growth_gap, binomial_growth_threshold, decay_ratio_decreasing};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{
    binomial, canonical_labeling, complete, contains_subgraph, enumerate_hypergraphs, factorial, iso_reduced_max_order,
    EnumerationMode, Hypergraph, CANONICAL_MAX_ORDER, EXHAUSTIVE_MAX_UNIVERSE,
};
use crate::pattern::{colorable_edge_count, compositions, ex_col_count, find_homomorphism, maximal_colorable, Pattern};
use crate::spectral::{alpha_spectral_radius, symmetric_spectral_radius, SolverConfig, SpectralEstimate};

/// Witnesses of a `SPEX` optimum are retained when within this of the best value.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportKind {
    Ex,
    Spex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Exhaustive,
    IsoReduced,
    ColorableCandidates,
    ClosedForm,
}

/// A named check with its outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditFlag {
    pub name: String,
    pub held: bool,
    pub detail: Option<String>,
}

impl AuditFlag {
    pub fn new(name: &str, held: bool, detail: Option<String>) -> Self {
        Self { name: name.to_string(), held, detail }
    }
}

/// An extremal graph with the data that certifies it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Canonical form whenever the order allows it; serialized in the text format.
    #[serde(with = "crate::io::hg_text")]
    pub graph: Hypergraph,
    /// Edge count (`EX`) or `lambda` (`SPEX`).
    pub value: f64,
    /// Maximizing vector aligned with `graph`'s labels (`SPEX` only).
    pub vector: Option<Vec<f64>>,
    /// Class sizes for colorable-candidate searches.
    pub composition: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub kind: ReportKind,
    pub n: usize,
    pub r: usize,
    pub alpha: Option<f64>,
    pub optimum: f64,
    pub witnesses: Vec<Witness>,
    pub mode: SearchMode,
    /// Graphs (or class-size vectors) evaluated.
    pub candidates: usize,
    pub audits: Vec<AuditFlag>,
}

impl ExtremalReport {
    pub fn witness_graphs(&self) -> Vec<&Hypergraph> {
        self.witnesses.iter().map(|w| &w.graph).collect()
    }

    pub fn all_audits_hold(&self) -> bool {
        self.audits.iter().all(|a| a.held)
    }

    pub fn audit(&self, name: &str) -> Option<&AuditFlag> {
        self.audits.iter().find(|a| a.name == name)
    }
}

fn is_free(g: &Hypergraph, forbidden: &[Hypergraph]) -> bool {
    forbidden.iter().all(|f| !contains_subgraph(g, f).expect("uniformities checked"))
}

fn check_family(forbidden: &[Hypergraph], r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::BadUniformity(r));
    }
    match forbidden.iter().find(|f| f.uniformity() != r) {
        Some(f) => Err(Error::UniformityMismatch(r, f.uniformity())),
        None => Ok(()),
    }
}

/// Every `forbidden`-free `r`-graph on `n` vertices up to isomorphism.
///
/// Uses isomorphism-reduced generation (the property is hereditary) when the
/// order allows it, and labeled enumeration with canonical deduplication otherwise.
pub fn free_graphs(forbidden: &[Hypergraph], n: usize, r: usize) -> Result<(Vec<Hypergraph>, SearchMode)> {
    check_family(forbidden, r)?;
    let pred = |g: &Hypergraph| is_free(g, forbidden);
    if n <= iso_reduced_max_order(r) {
        let gs = enumerate_hypergraphs(n, r, EnumerationMode::IsoReduced { hereditary: true }, pred)?;
        return Ok((gs, SearchMode::IsoReduced));
    }
    if binomial(n, r) > EXHAUSTIVE_MAX_UNIVERSE {
        return Err(Error::TooLarge(format!("no enumeration mode covers n = {n}, r = {r}")));
    }
    let gs = enumerate_hypergraphs(n, r, EnumerationMode::Exhaustive, pred)?;
    Ok((dedupe_canonical(gs)?, SearchMode::Exhaustive))
}

fn dedupe_canonical(gs: Vec<Hypergraph>) -> Result<Vec<Hypergraph>> {
    let mut seen = std::collections::BTreeSet::new();
    for g in gs {
        seen.insert(crate::hypergraph::canonical_form(&g)?);
    }
    Ok(seen.into_iter().collect())
}

/// Whether no absent `r`-set can be added while staying `forbidden`-free.
pub fn is_edge_maximal(g: &Hypergraph, forbidden: &[Hypergraph]) -> bool {
    g.non_edges().iter().all(|e| !is_free(&g.with_edge(e).expect("absent edge"), forbidden))
}

/// `ex(n, forbidden)` with every extremal graph up to isomorphism.
///
/// ```
/// use alpha_spectral::{extremal::turan_number, hypergraph::complete};
/// let rep = turan_number(&[complete(3, 2)], 5, 2).unwrap();
/// assert_eq!(rep.optimum, 6.0);
/// assert_eq!(rep.witnesses.len(), 1);
/// ```
pub fn turan_number(forbidden: &[Hypergraph], n: usize, r: usize) -> Result<ExtremalReport> {
    check_family(forbidden, r)?;
    if forbidden.is_empty() {
        let k = complete(n, r);
        return Ok(ExtremalReport {
            kind: ReportKind::Ex,
            n,
            r,
            alpha: None,
            optimum: k.size() as f64,
            witnesses: vec![Witness { value: k.size() as f64, graph: k, vector: None, composition: None }],
            mode: SearchMode::ClosedForm,
            candidates: 1,
            audits: Vec::new(),
        });
    }
    let (graphs, mode) = free_graphs(forbidden, n, r)?;
    let best = graphs.iter().map(Hypergraph::size).max().unwrap_or(0);
    let witnesses = graphs
        .iter()
        .filter(|g| g.size() == best)
        .map(|g| Witness { graph: g.clone(), value: best as f64, vector: None, composition: None })
        .collect();
    Ok(ExtremalReport {
        kind: ReportKind::Ex,
        n,
        r,
        alpha: None,
        optimum: best as f64,
        witnesses,
        mode,
        candidates: graphs.len(),
        audits: Vec::new(),
    })
}

/// Relabels a vertex vector along `v -> perm[v]`.
fn permute_vector(x: &[f64], perm: &[usize]) -> Vec<f64> {
    let mut out = vec![0.0; x.len()];
    for (v, &p) in perm.iter().enumerate() {
        out[p] = x[v];
    }
    out
}

/// Canonical witness with its vector carried along; graphs above the
/// canonical-form cap are kept as given.
fn canonical_witness(
    g: Hypergraph,
    value: f64,
    vector: Option<Vec<f64>>,
    composition: Option<Vec<usize>>,
) -> Result<Witness> {
    if g.order() > CANONICAL_MAX_ORDER {
        return Ok(Witness { graph: g, value, vector, composition });
    }
    let perm = canonical_labeling(&g)?;
    Ok(Witness { graph: g.relabel(&perm)?, value, vector: vector.map(|x| permute_vector(&x, &perm)), composition })
}

/// Keeps the first witness of every graph.
fn dedupe_witnesses(ws: Vec<Witness>) -> Vec<Witness> {
    let mut seen: BTreeMap<Hypergraph, Witness> = BTreeMap::new();
    for w in ws {
        seen.entry(w.graph.clone()).or_insert(w);
    }
    seen.into_values().collect()
}

/// Maximizes `lambda^(alpha)` over `forbidden`-free graphs.
///
/// For `alpha >= r` only edge-maximal free graphs are solved: adding an edge
/// never lowers `lambda`, so every optimum value is attained by one of them.
/// Below `r` all free graphs are solved, since ties (notably at `alpha = 1`)
/// may include non-maximal graphs.
pub fn spectral_extremal(
    forbidden: &[Hypergraph],
    n: usize,
    r: usize,
    alpha: f64,
    cfg: &SolverConfig,
) -> Result<ExtremalReport> {
    check_family(forbidden, r)?;
    let (mut graphs, mode) = if forbidden.is_empty() {
        (vec![complete(n, r)], SearchMode::ClosedForm)
    } else {
        free_graphs(forbidden, n, r)?
    };
    let max_edges = graphs.iter().map(Hypergraph::size).max().unwrap_or(0);
    let maximal_only = alpha >= r as f64;
    if maximal_only {
        graphs.retain(|g| is_edge_maximal(g, forbidden));
    }
    let solved: Vec<(Hypergraph, SpectralEstimate)> =
        graphs.into_par_iter().map(|g| alpha_spectral_radius(&g, alpha, cfg).map(|e| (g, e))).collect::<Result<_>>()?;
    let best = solved.iter().map(|(_, e)| e.lambda).fold(0.0, f64::max);
    let unconverged = solved.iter().filter(|(_, e)| !e.converged).count();
    let mut witnesses = Vec::new();
    for (g, e) in solved.iter().filter(|(_, e)| e.lambda >= best - TIE_TOLERANCE) {
        witnesses.push(canonical_witness(g.clone(), e.lambda, Some(e.vector.values.clone()), None)?);
    }
    let witnesses = dedupe_witnesses(witnesses);
    let mut audits = vec![
        AuditFlag::new(
            "all-converged",
            unconverged == 0,
            (unconverged > 0).then(|| format!("{unconverged} of {} solves missed the tolerance", solved.len())),
        ),
        AuditFlag::new(
            "lower-bound-from-ex",
            best >= factorial(r) * max_edges as f64 / (n as f64).powf(r as f64 / alpha) - 1e-9,
            None,
        ),
    ];
    let all_maximal = witnesses.iter().all(|w| is_edge_maximal(&w.graph, forbidden));
    audits.push(AuditFlag::new(
        "witnesses-edge-maximal",
        all_maximal || alpha == 1.0,
        (!all_maximal).then(|| "some witness is not edge-maximal".to_string()),
    ));
    if maximal_only {
        audits.push(edge_deletion_audit(&witnesses, alpha, cfg)?);
    }
    Ok(ExtremalReport {
        kind: ReportKind::Spex,
        n,
        r,
        alpha: Some(alpha),
        optimum: best,
        witnesses,
        mode,
        candidates: solved.len(),
        audits,
    })
}

/// Deleting any edge of a connected witness with a positive eigenvector
/// lowers `lambda` by at least `1e-9`.
fn edge_deletion_audit(witnesses: &[Witness], alpha: f64, cfg: &SolverConfig) -> Result<AuditFlag> {
    let mut failures = Vec::new();
    for w in witnesses {
        let positive = w.vector.as_ref().is_some_and(|x| x.iter().all(|&v| v > 1e-9));
        if !w.graph.is_connected() || !positive {
            continue;
        }
        for e in w.graph.edges() {
            let lower = alpha_spectral_radius(&w.graph.delete_edge(e), alpha, cfg)?;
            if lower.lambda > w.value - 1e-9 {
                failures.push(format!("{e:?} in {}", w.graph));
            }
        }
    }
    Ok(AuditFlag::new("edge-deletion-strict", failures.is_empty(), (!failures.is_empty()).then(|| failures.join("; "))))
}

/// Class-size vectors of `n` into `p.colors()` parts, one per orbit of the
/// pattern's color automorphisms (the lexicographically largest image).
pub fn class_size_vectors(p: &Pattern, n: usize) -> Vec<Vec<usize>> {
    let autos = p.automorphisms();
    compositions(n, p.colors())
        .into_iter()
        .filter(|s| {
            autos.iter().all(|sigma| {
                let mut image = vec![0; s.len()];
                for (c, &k) in s.iter().enumerate() {
                    image[sigma[c]] = k;
                }
                image <= *s
            })
        })
        .collect()
}

/// `SPEX` over `Col(p)`: one symmetry-reduced solve per class-size vector.
///
/// When `binom(n, r) <= 20` the optimum is also cross-checked against full
/// solves of every `p`-colorable graph on `n` vertices.
pub fn spex_col(p: &Pattern, n: usize, alpha: f64, cfg: &SolverConfig) -> Result<ExtremalReport> {
    let r = p.uniformity();
    let comps = class_size_vectors(p, n);
    let solved: Vec<(Vec<usize>, SpectralEstimate)> = comps
        .into_par_iter()
        .map(|s| symmetric_spectral_radius(&s, p, alpha, cfg).map(|e| (s, e)))
        .collect::<Result<_>>()?;
    let best = solved.iter().map(|(_, e)| e.lambda).fold(0.0, f64::max);
    let unconverged = solved.iter().filter(|(_, e)| !e.converged).count();
    let mut witnesses = Vec::new();
    for (s, e) in solved.iter().filter(|(_, e)| e.lambda >= best - TIE_TOLERANCE) {
        let (g, _) = maximal_colorable(s, p)?;
        witnesses.push(canonical_witness(g, e.lambda, Some(e.vector.values.clone()), Some(s.clone()))?);
    }
    let witnesses = dedupe_witnesses(witnesses);
    let mut audits = vec![AuditFlag::new(
        "all-converged",
        unconverged == 0,
        (unconverged > 0).then(|| format!("{unconverged} of {} reduced solves missed the tolerance", solved.len())),
    )];
    if binomial(n, r) <= 20 && n >= r {
        let brute = colorable_graphs(p, n)?
            .into_par_iter()
            .map(|g| alpha_spectral_radius(&g, alpha, cfg).map(|e| e.lambda))
            .collect::<Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        audits.push(AuditFlag::new(
            "brute-force-agrees",
            (brute - best).abs() <= 1e-8,
            Some(format!("brute force {brute:.12}, reduced {best:.12}")),
        ));
    }
    Ok(ExtremalReport {
        kind: ReportKind::Spex,
        n,
        r,
        alpha: Some(alpha),
        optimum: best,
        witnesses,
        mode: SearchMode::ColorableCandidates,
        candidates: solved.len(),
        audits,
    })
}

/// Every `p`-colorable `r`-graph on `n` vertices up to isomorphism.
pub fn colorable_graphs(p: &Pattern, n: usize) -> Result<Vec<Hypergraph>> {
    let colorable = |g: &Hypergraph| find_homomorphism(g, p).expect("search budget").is_some();
    enumerate_hypergraphs(n, p.uniformity(), EnumerationMode::IsoReduced { hereditary: true }, colorable)
}

/// `ex(Col(p), n)` from the closed-form edge counts of the maximal colorable graphs.
pub fn ex_col(p: &Pattern, n: usize) -> Result<ExtremalReport> {
    let r = p.uniformity();
    let comps = class_size_vectors(p, n);
    let counts: Vec<(Vec<usize>, u128)> = comps
        .into_iter()
        .map(|s| {
            let c = colorable_edge_count(p, &s);
            (s, c)
        })
        .collect();
    let (best, _) = ex_col_count(p, n);
    let mut witnesses = Vec::new();
    for (s, _) in counts.iter().filter(|(_, c)| *c == best) {
        let (g, _) = maximal_colorable(s, p)?;
        witnesses.push(canonical_witness(g, best as f64, None, Some(s.clone()))?);
    }
    Ok(ExtremalReport {
        kind: ReportKind::Ex,
        n,
        r,
        alpha: None,
        optimum: best as f64,
        witnesses: dedupe_witnesses(witnesses),
        mode: SearchMode::ColorableCandidates,
        candidates: counts.len(),
        audits: Vec::new(),
    })
}
