//! Exhaustive and isomorphism-reduced enumeration of small `r`-graphs.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{binomial, canonical_form, combinations, Hypergraph};
use crate::error::{Error, Result};

/// How [`enumerate_hypergraphs`] walks the search space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Every labeled edge subset. Requires `binom(n, r) <= 36`.
    Exhaustive,
    /// One canonical representative per isomorphism class, built vertex by
    /// vertex. With `hereditary` the predicate is also applied to every
    /// intermediate order, which is sound only for properties closed under
    /// vertex deletion.
    IsoReduced { hereditary: bool },
}

pub const EXHAUSTIVE_MAX_UNIVERSE: u64 = 36;

/// Largest order the isomorphism-reduced mode accepts for uniformity `r`.
pub fn iso_reduced_max_order(r: usize) -> usize {
    match r {
        2 => 10,
        3 => 7,
        _ => r + 3,
    }
}

/// All `r`-graphs on `n` vertices satisfying `pred`, in a deterministic order.
///
/// Exhaustive mode yields labeled graphs in order of their edge bitmask;
/// reduced mode yields canonical forms sorted by edge list.
pub fn enumerate_hypergraphs<P>(n: usize, r: usize, mode: EnumerationMode, pred: P) -> Result<Vec<Hypergraph>>
where
    P: Fn(&Hypergraph) -> bool + Sync,
{
    if r < 2 {
        return Err(Error::BadUniformity(r));
    }
    match mode {
        EnumerationMode::Exhaustive => {
            let universe: Vec<Vec<usize>> = combinations(n, r).collect();
            if universe.len() as u64 > EXHAUSTIVE_MAX_UNIVERSE {
                return Err(Error::TooLarge(format!(
                    "exhaustive enumeration over {} possible edges exceeds {EXHAUSTIVE_MAX_UNIVERSE}",
                    universe.len()
                )));
            }
            let total: u64 = 1 << universe.len();
            let out = (0..total)
                .into_par_iter()
                .filter_map(|mask| {
                    let edges = universe
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, e)| e.clone())
                        .collect();
                    let g = Hypergraph::from_sorted_unchecked(n, r, edges);
                    pred(&g).then_some(g)
                })
                .collect();
            Ok(out)
        }
        EnumerationMode::IsoReduced { hereditary } => {
            if n > iso_reduced_max_order(r) {
                return Err(Error::TooLarge(format!(
                    "isomorphism-reduced enumeration of {r}-graphs is capped at {} vertices (got {n})",
                    iso_reduced_max_order(r)
                )));
            }
            let start = n.min(r - 1);
            let mut level = vec![Hypergraph::empty(start, r)];
            if hereditary || start == n {
                level.retain(|g| pred(g));
            }
            for k in start + 1..=n {
                let filter = hereditary || k == n;
                level = extend_level(&level, k, filter, &pred)?;
            }
            Ok(level)
        }
    }
}

/// Number of labeled edge subsets, used for budget checks.
pub fn labeled_count(n: usize, r: usize) -> u64 {
    let m = binomial(n, r);
    if m >= 64 {
        u64::MAX
    } else {
        1 << m
    }
}

fn extend_level<P>(level: &[Hypergraph], k: usize, filter: bool, pred: &P) -> Result<Vec<Hypergraph>>
where
    P: Fn(&Hypergraph) -> bool + Sync,
{
    let r = level.first().map_or(2, Hypergraph::uniformity);
    let new_vertex = k - 1;
    let links: Vec<Vec<usize>> = combinations(new_vertex, r - 1)
        .map(|mut s| {
            s.push(new_vertex);
            s
        })
        .collect();
    let subsets: u64 = 1 << links.len();
    let found: Vec<HashSet<Hypergraph>> = level
        .par_iter()
        .map(|g| {
            let mut local = HashSet::new();
            for mask in 0..subsets {
                let mut edges = g.edges().to_vec();
                edges.extend(links.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e.clone()));
                let h = Hypergraph::from_sorted_unchecked(k, r, edges);
                if filter && !pred(&h) {
                    continue;
                }
                local.insert(canonical_form(&h).expect("order within canonical cap"));
            }
            local
        })
        .collect();
    let mut all: HashSet<Hypergraph> = HashSet::new();
    for s in found {
        all.extend(s);
    }
    let mut out: Vec<Hypergraph> = all.into_iter().collect();
    out.sort();
    Ok(out)
}
