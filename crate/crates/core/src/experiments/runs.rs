use std::collections::BTreeMap;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{CheckRecord, TargetSource};
use crate::error::Result;
use crate::extremal::{
    balance_audit, binomial_growth_gap, binomial_growth_threshold, decay_ratio_decreasing, growth_audit,
    inequality_audit, sequence_audit, spectral_extremal, spex_col, spex_eq_ex_audit, turan_number, SequenceSource,
};
use crate::hypergraph::{
    canonical_form, chromatic_turan, combinations, complete, cycle, factorial, falling_factorial, single_edge,
    transposition_orbits, turan_hypergraph, Hypergraph,
};
use crate::pattern::{
    closure_check, compositions, maximal_colorable, multiplicity_vectors, pattern_density, Coloring, DensityConfig,
    DensityMethod, Pattern,
};
use crate::spectral::{alpha_spectral_radius, alpha_sweep, symmetric_spectral_radius, vector_stats, SolverConfig};

use TargetSource::{Definition, Literature, Oracle};

fn solver(seed: u64) -> SolverConfig {
    SolverConfig::default().with_seed(seed)
}

fn canon(h: &Hypergraph) -> Result<Hypergraph> {
    canonical_form(h)
}

/// Each `r`-set of `0..n` kept independently with probability `p`.
fn random_graph(rng: &mut ChaCha8Rng, n: usize, r: usize, p: f64) -> Hypergraph {
    let edges: Vec<Vec<usize>> = combinations(n, r).filter(|_| rng.gen_bool(p)).collect();
    Hypergraph::new(n, r, edges).expect("combinations are valid edges")
}

pub(super) fn lagrangian_params() -> Value {
    json!({ "l": [2, 6], "r": [2, 6], "alpha": 1.0, "tolerance": 1e-8 })
}

pub(super) fn lagrangian_closed_forms(seed: u64) -> Result<Vec<CheckRecord>> {
    let cfg = solver(seed);
    let mut out = Vec::new();
    for l in 2..=6 {
        for r in 2..=l {
            let est = alpha_spectral_radius(&complete(l, r), 1.0, &cfg)?;
            let target = falling_factorial(l as f64, r) / (l as f64).powi(r as i32);
            out.push(CheckRecord::close(
                format!("lambda^(1)(K_{l}^{r}) = (l)_r / l^r"),
                est.lambda,
                target,
                1e-8,
                Literature,
            ));
        }
    }
    Ok(out)
}

pub(super) fn density_params() -> Value {
    json!({ "complete": { "l": [2, 5] }, "chromatic": { "k": [2, 4], "r": [2, 4] }, "tolerance": 1e-6 })
}

pub(super) fn density_closed_forms(seed: u64) -> Result<Vec<CheckRecord>> {
    let cfg = DensityConfig { solver: DensityConfig::default().solver.with_seed(seed), n_max: None };
    let mut cases = Vec::new();
    for l in 2..=5 {
        for r in 2..=l {
            let target = falling_factorial(l as f64, r) / (l as f64).powi(r as i32);
            cases.push((format!("K_{l}^{r}"), Pattern::complete(l, r)?, target));
        }
    }
    for k in 2..=4 {
        for r in 2..=4 {
            cases.push((
                format!("chromatic k={k}, r={r}"),
                Pattern::chromatic(k, r)?,
                1.0 - (k as f64).powi(1 - r as i32),
            ));
        }
    }
    let mut out = Vec::new();
    for (name, p, target) in cases {
        let s = pattern_density(&p, DensityMethod::SimplexOptimization, &cfg)?;
        out.push(CheckRecord::close(format!("pi({name}) by simplex optimization"), s.value, target, 1e-6, Literature));
        let f = pattern_density(&p, DensityMethod::FiniteNRatio, &cfg)?;
        out.push(CheckRecord::close(
            format!("pi({name}) by finite-n extrapolation"),
            f.value,
            target,
            1e-6,
            Literature,
        ));
        out.push(CheckRecord::holds(
            format!("ex/binom(n, r) nonincreasing for {name}"),
            f.trace_is_nonincreasing(1e-12),
            f.trace.len(),
            "nonincreasing",
            Definition,
        ));
    }
    Ok(out)
}

pub(super) fn oracle_params() -> Value {
    json!({
        "random_graphs": 30, "n": [2, 10], "edge_probability": [0.2, 0.8], "tolerance": 1e-8,
        "single_edge": { "alpha": [1.0, 1.5, 2.0, 3.0, 10.0], "r": [2, 3, 4], "tolerance": 1e-9 }
    })
}

pub(super) fn oracle_spectra(seed: u64) -> Result<Vec<CheckRecord>> {
    let cfg = solver(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for i in 0..30 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, 2, p);
        let mut a = DMatrix::<f64>::zeros(n, n);
        for e in g.edges() {
            a[(e[0], e[1])] = 1.0;
            a[(e[1], e[0])] = 1.0;
        }
        let top = SymmetricEigen::new(a).eigenvalues.iter().cloned().fold(0.0, f64::max);
        let est = alpha_spectral_radius(&g, 2.0, &cfg)?;
        out.push(CheckRecord::close(
            format!("random graph #{i} (n={n}, e={}): lambda^(2) = adjacency spectral radius", g.size()),
            est.lambda,
            top,
            1e-8,
            Oracle,
        ));
    }
    for r in 2..=4 {
        for alpha in [1.0, 1.5, 2.0, 3.0, 10.0] {
            let est = alpha_spectral_radius(&single_edge(r), alpha, &cfg)?;
            let target = factorial(r) / (r as f64).powf(r as f64 / alpha);
            out.push(CheckRecord::close(
                format!("single {r}-edge at alpha={alpha}: r!/r^(r/alpha)"),
                est.lambda,
                target,
                1e-9,
                Definition,
            ));
        }
    }
    Ok(out)
}

pub(super) fn monotonicity_params() -> Value {
    json!({ "random_graphs": 20, "n": [4, 8], "r": [2, 3], "edge_probability": 0.5,
            "grid": "12 log-spaced points in [1, 100]", "slack": 1e-8, "limit_ratio": 0.95 })
}

pub(super) fn alpha_monotonicity(seed: u64) -> Result<Vec<CheckRecord>> {
    let cfg = solver(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4d4f4e4f);
    let grid = crate::io::parse_alpha_grid("1:100:log:12")?;
    let mut out = Vec::new();
    for i in 0..20 {
        let r = rng.gen_range(2..=3);
        let n = rng.gen_range(4..=8);
        let g = random_graph(&mut rng, n, r, 0.5);
        let sweep = alpha_sweep(&g, &grid, &cfg)?;
        let worst = sweep.windows(2).map(|w| w[0].lambda - w[1].lambda).fold(0.0, f64::max);
        out.push(
            CheckRecord::holds(
                format!("graph #{i} (n={n}, r={r}, e={}): lambda^(alpha) nondecreasing on the grid", g.size()),
                worst <= 1e-8,
                worst,
                0.0,
                Literature,
            )
            .with_tolerance(1e-8),
        );
        let ceiling = factorial(r) * g.size() as f64;
        let last = sweep.last().expect("nonempty grid").lambda;
        out.push(CheckRecord::holds(
            format!("graph #{i} (r={r}): lambda^(100) in [0.95 r! e, r! e]"),
            last >= 0.95 * ceiling && last <= ceiling + 1e-8,
            last,
            json!([0.95 * ceiling, ceiling]),
            Literature,
        ));
        let floor = ceiling * (n as f64).powf(-(r as f64) / 100.0);
        out.push(CheckRecord::holds(
            format!("graph #{i}: lambda^(100) >= r! e / n^(r/100)"),
            last >= floor - 1e-9,
            last,
            floor,
            Definition,
        ));
    }
    Ok(out)
}

pub(super) fn inequality_params() -> Value {
    json!({ "alpha": [1.0, 1.5, 2.0, 3.0, 5.0], "slack": 1e-9,
            "graphs": "Turán and chromatic Turán graphs plus random subgraphs of maximal colorable graphs" })
}

pub(super) fn inequality_chain(seed: u64) -> Result<Vec<CheckRecord>> {
    let cfg = solver(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x494e4551);
    let mut suite: Vec<(String, Hypergraph, Pattern)> = vec![
        ("T_2(7)".into(), turan_hypergraph(7, 2, 2)?, Pattern::complete(2, 2)?),
        ("T_3(8)".into(), turan_hypergraph(8, 3, 2)?, Pattern::complete(3, 2)?),
        ("T_3^3(7)".into(), turan_hypergraph(7, 3, 3)?, Pattern::complete(3, 3)?),
        ("Q_2^3(7)".into(), chromatic_turan(7, 2, 3)?, Pattern::chromatic(2, 3)?),
        ("Q_3^3(7)".into(), chromatic_turan(7, 3, 3)?, Pattern::chromatic(3, 3)?),
    ];
    let patterns =
        [Pattern::complete(2, 2)?, Pattern::complete(3, 2)?, Pattern::chromatic(2, 3)?, Pattern::complete(4, 3)?];
    for i in 0..8 {
        let p = &patterns[i % patterns.len()];
        let n = rng.gen_range(p.colors().max(p.uniformity())..=8);
        let sizes = random_sizes(&mut rng, n, p.colors());
        let (full, _) = maximal_colorable(&sizes, p)?;
        let kept: Vec<Vec<usize>> = full.edges().iter().filter(|_| rng.gen_bool(0.7)).cloned().collect();
        let g = Hypergraph::new(n, p.uniformity(), kept)?;
        suite.push((format!("random subgraph #{i} of {p} on {n} vertices"), g, p.clone()));
    }
    let mut solves = 0;
    let mut skipped = 0;
    let mut violations = Vec::new();
    for (name, g, p) in &suite {
        for alpha in [1.0, 1.5, 2.0, 3.0, 5.0] {
            let audit = inequality_audit(g, alpha, Some(p), &cfg)?;
            if !audit.converged {
                skipped += 1;
                continue;
            }
            solves += 1;
            for f in audit.flags.iter().filter(|f| !f.held) {
                violations.push(format!("{name} at alpha={alpha}: {}", f.name));
            }
        }
    }
    Ok(vec![
        CheckRecord::holds(
            format!("no violated bound over {solves} converged solves ({skipped} unconverged skipped)"),
            violations.is_empty(),
            json!(violations),
            json!([]),
            Literature,
        )
        .with_tolerance(1e-9),
        CheckRecord::holds("at least one converged solve", solves > 0, solves, "> 0", Definition),
    ])
}

/// Uniform composition of `n` into `parts` nonnegative parts.
fn random_sizes(rng: &mut ChaCha8Rng, n: usize, parts: usize) -> Vec<usize> {
    let mut sizes = vec![0; parts];
    for _ in 0..n {
        sizes[rng.gen_range(0..parts)] += 1;
    }
    sizes
}

pub(super) fn turan_params() -> Value {
    json!({ "forbidden": "K_3", "n": [1, 8], "r": 2 })
}

pub(super) fn turan_r2(_seed: u64) -> Result<Vec<CheckRecord>> {
    let k3 = complete(3, 2);
    let mut out = Vec::new();
    for n in 1..=8 {
        let rep = turan_number(std::slice::from_ref(&k3), n, 2)?;
        out.push(CheckRecord::close(
            format!("ex({n}, K_3) = floor(n^2/4)"),
            rep.optimum,
            (n * n / 4) as f64,
            0.0,
            Literature,
        ));
        let turan = canon(&turan_hypergraph(n, 2, 2)?)?;
        out.push(CheckRecord::holds(
            format!("extremal K_3-free graphs on {n} vertices = {{T_2({n})}} ({:?} search)", rep.mode),
            rep.witness_graphs() == vec![&turan],
            rep.witnesses.len(),
            1,
            Oracle,
        ));
    }
    Ok(out)
}

pub(super) fn spectral_turan_params() -> Value {
    json!({ "K_3": { "alpha": [2.0, 3.0], "n": [5, 8] }, "C_5": { "alpha": 2.0, "n": 7 } })
}

pub(super) fn spectral_turan(seed: u64) -> Result<Vec<CheckRecord>> {
    let cfg = solver(seed);
    let mut cases: Vec<(String, Hypergraph, usize, f64)> = Vec::new();
    for alpha in [2.0, 3.0] {
        for n in 5..=8 {
            cases.push(("K_3".into(), complete(3, 2), n, alpha));
        }
    }
    cases.push(("C_5".into(), cycle(5)?, 7, 2.0));
    let mut out = Vec::new();
    for (name, f, n, alpha) in cases {
        let rep = spectral_extremal(&[f], n, 2, alpha, &cfg)?;
        let turan = canon(&turan_hypergraph(n, 2, 2)?)?;
        let found: Vec<String> = rep.witness_graphs().iter().map(|g| crate::io::write_hypergraph(g)).collect();
        out.push(CheckRecord::holds(
            format!("SPEX_{alpha}({name}-free, {n}) = {{T_2({n})}}"),
            rep.witness_graphs() == vec![&turan] && rep.all_audits_hold(),
            json!({ "lambda": rep.optimum, "witnesses": found }),
            crate::io::write_hypergraph(&turan),
            Literature,
        ));
    }
    Ok(out)
}

pub(super) fn partite_params() -> Value {
    json!({ "cases": [[2, 2, 2.0, 12], [3, 3, 3.0, 9]], "gap": 1e-9 })
}

pub(super) fn balanced_partite(seed: u64) -> Result<Vec<CheckRecord>> {
    let cfg = solver(seed);
    let mut out = Vec::new();
    for (l, r, alpha, n_max) in [(2usize, 2usize, 2.0, 12usize), (3, 3, 3.0, 9)] {
        let p = Pattern::complete(l, r)?;
        for n in l..=n_max {
            // one representative per multiset of class sizes
            let mut values: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
            for mut sizes in compositions(n, l) {
                sizes.sort_unstable_by(|a, b| b.cmp(a));
                if let std::collections::btree_map::Entry::Vacant(slot) = values.entry(sizes) {
                    let lambda = symmetric_spectral_radius(slot.key(), &p, alpha, &cfg)?.lambda;
                    slot.insert(lambda);
                }
            }
            let balanced = crate::hypergraph::balanced_sizes(n, l);
            let best = values[&balanced];
            let runner_up =
                values.iter().filter(|(s, _)| **s != balanced).map(|(_, &v)| v).fold(f64::NEG_INFINITY, f64::max);
            let gap = best - runner_up;
            out.push(
                CheckRecord::holds(
                    format!("complete {l}-partite {r}-graphs on {n} vertices, alpha={alpha}: balanced is the unique maximum"),
                    gap >= 1e-9,
                    gap,
                    ">= 1e-9",
                    Literature,
                )
                .with_tolerance(1e-9),
            );
        }
    }
    Ok(out)
}

pub(super) fn growth_params() -> Value {
    json!({ "cases": [
        { "pattern": "complete:l=2,r=2", "alpha": 2.0, "n": [10, 40] },
        { "pattern": "chromatic:k=2,r=3", "alpha": 3.0, "n": [6, 14] }
    ] })
}

pub(super) fn growth(seed: u64) -> Result<Vec<CheckRecord>> {
    let cfg = solver(seed);
    let mut out = Vec::new();
    let cases = [(Pattern::complete(2, 2)?, 2.0, 10..=40), (Pattern::chromatic(2, 3)?, 3.0, 6..=14)];
    for (p, alpha, ns) in cases {
        let g = growth_audit(&p, alpha, ns, &cfg)?;
        let checked = g.steps.iter().filter(|s| !s.vacuous).count();
        out.push(CheckRecord::holds(
            format!("{p}, alpha={alpha}: growth inequality at every step ({checked} nonvacuous)"),
            g.inequality_holds,
            json!(g.steps.iter().filter(|s| !s.holds).map(|s| s.n).collect::<Vec<_>>()),
            json!([]),
            Literature,
        ));
        out.push(CheckRecord::holds(
            format!("{p}, alpha={alpha}: finite M for the eigenvector bound"),
            g.fitted_m_vector.is_finite(),
            g.fitted_m_vector,
            "finite",
            Literature,
        ));
        out.push(CheckRecord::holds(
            format!("{p}, alpha={alpha}: finite M for the minimum-degree bound"),
            g.fitted_m_degree.is_finite(),
            g.fitted_m_degree,
            "finite",
            Literature,
        ));
        if p.colors() == 2 && p.uniformity() == 2 {
            let worst = g
                .points
                .iter()
                .map(|q| (q.lambda - (((q.n / 2) * q.n.div_ceil(2)) as f64).sqrt()).abs())
                .fold(0.0, f64::max);
            out.push(CheckRecord::close(
                "lambda^(2) = sqrt(floor(n/2) ceil(n/2)) along the range",
                worst,
                0.0,
                1e-8,
                Oracle,
            ));
        }
    }
    Ok(out)
}

pub(super) fn balance_params() -> Value {
    json!({ "cases": [[2, 3, 2.0], [2, 3, 3.0], [3, 2, 2.0]], "n_max": 14 })
}

pub(super) fn balance(seed: u64) -> Result<Vec<CheckRecord>> {
    let cfg = solver(seed);
    let mut out = Vec::new();
    for (k, r, alpha) in [(2usize, 3usize, 2.0), (2, 3, 3.0), (3, 2, 2.0)] {
        let b = balance_audit(k, r, alpha, k.max(r)..=14, &cfg)?;
        let unbalanced: Vec<Value> =
            b.rows.iter().filter(|row| !row.balanced).map(|row| json!([row.n, row.argmax])).collect();
        out.push(CheckRecord::holds(
            format!(
                "complete {k}-chromatic {r}-graphs, alpha={alpha}: every argmax is balanced (max deviation {:.2})",
                b.max_deviation
            ),
            b.all_balanced,
            json!(unbalanced),
            json!([]),
            Literature,
        ));
    }
    Ok(out)
}

pub(super) fn spex_ex_params() -> Value {
    json!({ "pattern": "complete:l=2,r=2", "n": [4, 6, 8], "alpha": 2.0 })
}

pub(super) fn spex_equals_ex(seed: u64) -> Result<Vec<CheckRecord>> {
    let cfg = solver(seed);
    let p = Pattern::complete(2, 2)?;
    let mut out = Vec::new();
    for n in [4, 6, 8] {
        let a = spex_eq_ex_audit(&p, n, 2.0, &cfg)?;
        let turan = canon(&turan_hypergraph(n, 2, 2)?)?;
        out.push(CheckRecord::holds(
            format!("n={n}: ex(Col(K_2), n) = pi n^2 / 2"),
            a.hypothesis_holds,
            a.ex,
            (n * n / 4) as f64,
            Definition,
        ));
        out.push(CheckRecord::holds(
            format!("n={n}: SPEX = EX = {{T_2({n})}} over all bipartite graphs"),
            a.sets_equal && a.ex_witnesses == vec![turan],
            json!({ "ex": a.ex_witnesses.len(), "spex": a.spex_witnesses.len(), "equal": a.sets_equal }),
            json!({ "ex": 1, "spex": 1, "equal": true }),
            Oracle,
        ));
    }
    Ok(out)
}

pub(super) fn lemma_params() -> Value {
    json!({ "decay_ratio": { "alpha": [1.1, 2.0, 5.0], "r": [2, 3, 5], "grid": 1000 },
            "threshold": { "alpha": [1.5, 2.0, 3.0], "r": [2, 3, 4], "m_cap": 10000, "hold_through": "10 * threshold" } })
}

pub(super) fn scalar_lemmas(_seed: u64) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for alpha in [1.1, 2.0, 5.0] {
        for r in [2, 3, 5] {
            out.push(CheckRecord::holds(
                format!("(1 - r x)/(1 - x)^(r/alpha) strictly decreasing, alpha={alpha}, r={r}"),
                decay_ratio_decreasing(alpha, r, 1000),
                "checked on 1000 points",
                "strictly decreasing",
                Literature,
            ));
        }
    }
    for alpha in [1.5, 2.0, 3.0] {
        for r in 2..=4 {
            for i in 1..=r {
                let threshold = binomial_growth_threshold(alpha, r, i, 10_000);
                let holds = threshold.is_some_and(|t| (t..=10 * t).all(|m| binomial_growth_gap(alpha, r, i, m) >= 0.0));
                out.push(CheckRecord::holds(
                    format!("binomial inequality alpha={alpha}, r={r}, i={i}: finite threshold, holds through 10x"),
                    holds,
                    json!(threshold),
                    "finite",
                    Literature,
                ));
            }
        }
    }
    Ok(out)
}

pub(super) fn closure_params() -> Value {
    json!({ "triples": 200, "l": [1, 3], "r": [2, 3], "n": [3, 7], "blow_up": [1, 2] })
}

pub(super) fn closure_properties(seed: u64) -> Result<Vec<CheckRecord>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x434c4f53);
    let mut failures = Vec::new();
    for i in 0..200 {
        let l = rng.gen_range(1..=3);
        let r = rng.gen_range(2..=3);
        let profiles: Vec<Vec<usize>> = multiplicity_vectors(l, r).filter(|_| rng.gen_bool(0.6)).collect();
        let p = Pattern::new(l, r, profiles)?;
        let n = rng.gen_range(3..=7);
        let phi = Coloring((0..n).map(|_| rng.gen_range(0..l)).collect());
        let allowed: Vec<Vec<usize>> = combinations(n, r)
            .filter(|e| p.allows(&crate::pattern::edge_profile(e, &phi.0, l)))
            .filter(|_| rng.gen_bool(0.6))
            .collect();
        let h = Hypergraph::new(n, r, allowed)?;
        let subset: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
        let t: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
        let rep = closure_check(&h, &p, &phi, &subset, &t)?;
        if !rep.passed() {
            failures.push(format!("triple #{i}: {}", rep.failure.unwrap_or_default()));
        }
    }
    Ok(vec![CheckRecord::holds(
        "200 valid (H, P, phi) stay valid under induced subgraphs and blow-ups",
        failures.is_empty(),
        json!(failures),
        json!([]),
        Literature,
    )])
}

pub(super) fn eigenvector_params() -> Value {
    json!({ "orbits": { "tolerance": 1e-6,
                        "graphs": ["T_2(7) a=2", "T_3(8) a=3", "T_3^3(7) a=3", "T_3^3(8) a=4", "Q_2^3(7) a=3", "Q_2^3(8) a=4", "Q_3^3(7) a=3"] },
            "principal_ratio": { "pattern": "complete:l=2,r=2", "alpha": 2.0, "fit": [6, 23], "holdout": [24, 40] } })
}

pub(super) fn eigenvector_structure(seed: u64) -> Result<Vec<CheckRecord>> {
    let cfg = solver(seed);
    let mut out = Vec::new();
    let cases = [
        ("T_2(7)", turan_hypergraph(7, 2, 2)?, 2.0),
        ("T_3(8)", turan_hypergraph(8, 3, 2)?, 3.0),
        ("T_3^3(7)", turan_hypergraph(7, 3, 3)?, 3.0),
        ("T_3^3(8)", turan_hypergraph(8, 3, 3)?, 4.0),
        ("Q_2^3(7)", chromatic_turan(7, 2, 3)?, 3.0),
        ("Q_2^3(8)", chromatic_turan(8, 2, 3)?, 4.0),
        ("Q_3^3(7)", chromatic_turan(7, 3, 3)?, 3.0),
    ];
    for (name, g, alpha) in cases {
        let est = alpha_spectral_radius(&g, alpha, &cfg)?;
        let x = &est.vector.values;
        let spread = transposition_orbits(&g)
            .blocks
            .iter()
            .map(|b| {
                let (lo, hi) =
                    b.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(x[v]), hi.max(x[v])));
                hi - lo
            })
            .fold(0.0, f64::max);
        out.push(
            CheckRecord::holds(
                format!("{name}, alpha={alpha}: converged eigenvector constant on twin classes"),
                est.converged && spread <= 1e-6,
                json!({ "converged": est.converged, "spread": spread }),
                "spread <= 1e-6",
                Literature,
            )
            .with_tolerance(1e-6),
        );
    }
    let p = Pattern::complete(2, 2)?;
    let mut scaled = Vec::new();
    for n in 6..=40 {
        let rep = spex_col(&p, n, 2.0, &cfg)?;
        let gamma = rep
            .witnesses
            .iter()
            .map(|w| vector_stats(w.vector.as_deref().unwrap_or(&[])).principal_ratio)
            .fold(0.0, f64::max);
        scaled.push((n, n as f64 * (gamma - 1.0)));
    }
    let c = scaled.iter().filter(|(n, _)| *n <= 23).map(|s| s.1).fold(0.0, f64::max);
    let worst = scaled.iter().filter(|(n, _)| *n >= 24).map(|s| s.1).fold(0.0, f64::max);
    out.push(CheckRecord::holds(
        "principal ratio of SPEX(Col(K_2), n) witnesses: gamma <= 1 + C/n with C fitted on n <= 23 holds on 24..40",
        c.is_finite() && worst <= c + 1e-9,
        json!({ "fitted_C": c, "holdout_max_n_gamma_minus_1": worst }),
        "holdout <= fitted C",
        Literature,
    ));
    Ok(out)
}

pub(super) fn sequence_params() -> Value {
    json!({ "normalized": { "pattern": "complete:l=2,r=2", "alpha": 2.0, "n": [4, 30], "limit_window": [0.5, 0.6] },
            "lagrangian": { "pattern": "complete:l=3,r=2", "alpha": 1.0, "n": [3, 12] } })
}

pub(super) fn sequence_limit(seed: u64) -> Result<Vec<CheckRecord>> {
    let cfg = solver(seed);
    let k2 = Pattern::complete(2, 2)?;
    let t = sequence_audit(SequenceSource::Colorable(&k2), 2.0, 4..=30, &cfg)?;
    let last = t.points.last().expect("nonempty range").normalized;
    let k3 = Pattern::complete(3, 2)?;
    let u = sequence_audit(SequenceSource::Colorable(&k3), 1.0, 3..=12, &cfg)?;
    Ok(vec![
        CheckRecord::holds(
            "lambda_n n^(r/alpha)/(n)_r nonincreasing for Col(K_2), alpha=2, n=4..30",
            t.monotone,
            last,
            "nonincreasing",
            Literature,
        ),
        CheckRecord::holds(
            "normalized value at n=30 lies in [0.5, 0.6]",
            (0.5..=0.6).contains(&last),
            last,
            json!([0.5, 0.6]),
            Literature,
        ),
        CheckRecord::holds(
            "lambda^(1) of SPEX(Col(K_3), n) nondecreasing, n=3..12",
            u.monotone,
            json!(u.points.iter().map(|p| p.lambda).collect::<Vec<_>>()),
            "nondecreasing",
            Literature,
        ),
        CheckRecord::close(
            "lambda^(1) at n=12 equals 2/3",
            u.points.last().expect("nonempty").lambda,
            2.0 / 3.0,
            1e-9,
            Oracle,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_sizes_sum_to_n() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 0..10 {
            assert_eq!(random_sizes(&mut rng, n, 3).iter().sum::<usize>(), n);
        }
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let a = random_graph(&mut ChaCha8Rng::seed_from_u64(9), 6, 3, 0.5);
        let b = random_graph(&mut ChaCha8Rng::seed_from_u64(9), 6, 3, 0.5);
        assert_eq!(a, b);
        assert!(crate::hypergraph::binomial(6, 3) as usize >= a.size());
    }
}
