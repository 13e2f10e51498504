//! Registered verification experiments and their reports.
//!
//! Every experiment is deterministic given its seed and produces a list of
//! check records. `verify` in the CLI and the acceptance suite both run them
//! from here.

mod runs;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// Where the target value of a check comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetSource {
    /// A closed form or statement from the literature.
    Literature,
    /// Follows directly from the definitions.
    Definition,
    /// An independent computation (brute force, dense eigensolver, ...).
    Oracle,
}

impl std::fmt::Display for TargetSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Literature => "literature",
            Self::Definition => "definition",
            Self::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub claim: String,
    pub computed: Value,
    pub target: Value,
    pub tolerance: Option<f64>,
    pub passed: bool,
    pub source: TargetSource,
}

impl CheckRecord {
    /// `|computed - target| <= tolerance`.
    pub fn close(claim: impl Into<String>, computed: f64, target: f64, tolerance: f64, source: TargetSource) -> Self {
        Self {
            claim: claim.into(),
            computed: computed.into(),
            target: target.into(),
            tolerance: Some(tolerance),
            passed: (computed - target).abs() <= tolerance,
            source,
        }
    }

    /// A check decided by the caller.
    pub fn holds(
        claim: impl Into<String>,
        passed: bool,
        computed: impl Into<Value>,
        target: impl Into<Value>,
        source: TargetSource,
    ) -> Self {
        Self { claim: claim.into(), computed: computed.into(), target: target.into(), tolerance: None, passed, source }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = Some(tolerance);
        self
    }
}

/// Static description of an experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub name: String,
    pub summary: String,
    pub seed: u64,
    /// Wall-clock budget used by the acceptance suite.
    pub budget_secs: u64,
    pub parameters: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub experiment: String,
    pub summary: String,
    pub version: String,
    pub seed: u64,
    pub parameters: Value,
    pub checks: Vec<CheckRecord>,
    pub passed: bool,
    pub wall_time_secs: f64,
}

impl RunReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn within_budget(&self, spec: &ExperimentSpec) -> bool {
        self.wall_time_secs <= spec.budget_secs as f64
    }

    pub fn markdown(&self) -> String {
        let mut out = format!(
            "### {}\n\n{}\n\n| claim | computed | target | tolerance | source | pass |\n|---|---|---|---|---|---|\n",
            self.experiment, self.summary
        );
        for c in &self.checks {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} |\n",
                c.claim.replace('|', "\\|"),
                cell(&c.computed),
                cell(&c.target),
                c.tolerance.map_or_else(|| "-".to_string(), |t| format!("{t:e}")),
                c.source,
                if c.passed { "yes" } else { "**no**" },
            ));
        }
        out.push_str(&format!(
            "\n{} of {} checks passed in {:.2} s.\n",
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len(),
            self.wall_time_secs
        ));
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Number(x) => match x.as_f64() {
            Some(f) if x.is_f64() => format!("{f:.10}"),
            _ => x.to_string(),
        },
        Value::String(s) => s.replace('|', "\\|"),
        other => other.to_string().replace('|', "\\|"),
    }
}

type RunFn = fn(u64) -> Result<Vec<CheckRecord>>;

struct Entry {
    name: &'static str,
    summary: &'static str,
    budget_secs: u64,
    parameters: fn() -> Value,
    run: RunFn,
}

pub const DEFAULT_SEED: u64 = 0x5eed;

const REGISTRY: &[Entry] = &[
    Entry {
        name: "lagrangian-closed-forms",
        summary: "Lagrangians of complete r-graphs equal (l)_r / l^r.",
        budget_secs: 10,
        parameters: runs::lagrangian_params,
        run: runs::lagrangian_closed_forms,
    },
    Entry {
        name: "density-closed-forms",
        summary: "Densities of the complete and chromatic patterns by both methods.",
        budget_secs: 30,
        parameters: runs::density_params,
        run: runs::density_closed_forms,
    },
    Entry {
        name: "oracle-spectra",
        summary: "lambda^(2) of random graphs against a dense eigensolver; single edges in closed form.",
        budget_secs: 30,
        parameters: runs::oracle_params,
        run: runs::oracle_spectra,
    },
    Entry {
        name: "alpha-monotonicity",
        summary: "lambda^(alpha) is nondecreasing in alpha and approaches r! e(G).",
        budget_secs: 60,
        parameters: runs::monotonicity_params,
        run: runs::alpha_monotonicity,
    },
    Entry {
        name: "inequality-chain",
        summary: "Edge and density bounds on lambda^(alpha) for pattern-colorable graphs.",
        budget_secs: 60,
        parameters: runs::inequality_params,
        run: runs::inequality_chain,
    },
    Entry {
        name: "turan-r2",
        summary: "ex(n, K_3) = floor(n^2/4) with T_2(n) as the only extremal graph.",
        budget_secs: 60,
        parameters: runs::turan_params,
        run: runs::turan_r2,
    },
    Entry {
        name: "spectral-turan",
        summary: "Spectral extremal K_3-free and C_5-free graphs are Turán graphs.",
        budget_secs: 300,
        parameters: runs::spectral_turan_params,
        run: runs::spectral_turan,
    },
    Entry {
        name: "balanced-partite",
        summary: "The balanced complete l-partite r-graph maximizes lambda^(alpha) among complete l-partite ones.",
        budget_secs: 60,
        parameters: runs::partite_params,
        run: runs::balanced_partite,
    },
    Entry {
        name: "growth",
        summary: "Growth inequality and fitted constants along spectral extremal colorable graphs.",
        budget_secs: 120,
        parameters: runs::growth_params,
        run: runs::growth,
    },
    Entry {
        name: "balance",
        summary: "Spectral extremal complete k-chromatic r-graphs have balanced classes.",
        budget_secs: 120,
        parameters: runs::balance_params,
        run: runs::balance,
    },
    Entry {
        name: "spex-equals-ex",
        summary: "Spectral and edge extremal bipartite graphs coincide.",
        budget_secs: 120,
        parameters: runs::spex_ex_params,
        run: runs::spex_equals_ex,
    },
    Entry {
        name: "scalar-lemmas",
        summary: "The monotone auxiliary function and the binomial inequality behind the growth bound.",
        budget_secs: 10,
        parameters: runs::lemma_params,
        run: runs::scalar_lemmas,
    },
    Entry {
        name: "closure-properties",
        summary: "Valid pattern colorings survive induced subgraphs and blow-ups.",
        budget_secs: 10,
        parameters: runs::closure_params,
        run: runs::closure_properties,
    },
    Entry {
        name: "eigenvector-structure",
        summary: "Eigenvectors are constant on twin classes; principal ratios are 1 + O(1/n).",
        budget_secs: 60,
        parameters: runs::eigenvector_params,
        run: runs::eigenvector_structure,
    },
    Entry {
        name: "sequence-limit",
        summary: "Normalized spectral extremal values are monotone and converge.",
        budget_secs: 60,
        parameters: runs::sequence_params,
        run: runs::sequence_limit,
    },
];

fn spec_of(e: &Entry, seed: u64) -> ExperimentSpec {
    ExperimentSpec {
        name: e.name.into(),
        summary: e.summary.into(),
        seed,
        budget_secs: e.budget_secs,
        parameters: (e.parameters)(),
    }
}

/// Every registered experiment at the default seed, in registry order.
pub fn registry() -> Vec<ExperimentSpec> {
    REGISTRY.iter().map(|e| spec_of(e, DEFAULT_SEED)).collect()
}

pub fn experiment_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.name).collect()
}

/// Runs one experiment.
///
/// ```
/// use alpha_spectral::experiments::{run_experiment, DEFAULT_SEED};
/// let report = run_experiment("scalar-lemmas", DEFAULT_SEED).unwrap();
/// assert!(report.passed);
/// ```
pub fn run_experiment(name: &str, seed: u64) -> Result<RunReport> {
    let entry = REGISTRY.iter().find(|e| e.name == name).ok_or_else(|| {
        Error::InvalidParameters(format!("unknown experiment `{name}`; registered: {}", experiment_names().join(", ")))
    })?;
    let spec = spec_of(entry, seed);
    let start = Instant::now();
    let checks = (entry.run)(seed)?;
    let wall = start.elapsed();
    Ok(RunReport {
        experiment: spec.name,
        summary: spec.summary,
        version: env!("CARGO_PKG_VERSION").into(),
        seed,
        parameters: spec.parameters,
        passed: !checks.is_empty() && checks.iter().all(|c| c.passed),
        checks,
        wall_time_secs: round_ms(wall),
    })
}

fn round_ms(d: Duration) -> f64 {
    (d.as_secs_f64() * 1000.0).round() / 1000.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique() {
        let mut names = experiment_names();
        let total = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), total);
        assert_eq!(total, 15);
    }

    #[test]
    fn unknown_experiment_lists_registry() {
        let err = run_experiment("nosuch", DEFAULT_SEED).unwrap_err().to_string();
        assert!(err.contains("turan-r2"));
    }

    #[test]
    fn markdown_table() {
        let report = RunReport {
            experiment: "demo".into(),
            summary: "s".into(),
            version: "0".into(),
            seed: 1,
            parameters: Value::Null,
            checks: vec![
                CheckRecord::close("a | b", 1.0, 1.0, 1e-9, TargetSource::Definition),
                CheckRecord::holds("c", false, "x", "y", TargetSource::Oracle),
            ],
            passed: false,
            wall_time_secs: 0.0,
        };
        let md = report.markdown();
        assert!(md.contains("a \\| b"));
        assert!(md.contains("**no**"));
        assert!(md.contains("1 of 2 checks passed"));
        assert_eq!(report.failures().count(), 1);
    }
}
