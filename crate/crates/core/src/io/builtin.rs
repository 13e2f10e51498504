//! Named constructions: `name` or `name:key=value,key=value`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypergraph::{
    chromatic_turan, complete, complete_bipartite, cycle, f_rl, path, single_edge, turan_hypergraph, Hypergraph,
};
use crate::pattern::Pattern;

/// One example of every graph builder.
pub const BUILTIN_GRAPHS: &[&str] = &[
    "K_3",
    "K_5^3",
    "edge:r=3",
    "complete:n=6,r=3",
    "turan:n=6,l=3,r=2",
    "chromatic:n=7,k=2,r=3",
    "kab:a=2,b=3",
    "cycle:n=5",
    "path:n=4",
    "frl:r=3,l=4",
];

/// One example of every pattern builder.
pub const BUILTIN_PATTERNS: &[&str] = &["complete:l=3,r=2", "chromatic:k=2,r=3", "full:l=2,r=3"];

struct Spec<'a> {
    name: &'a str,
    params: BTreeMap<&'a str, usize>,
}

impl<'a> Spec<'a> {
    fn parse(text: &'a str) -> Result<Self> {
        let (name, rest) = text.split_once(':').unwrap_or((text, ""));
        let mut params = BTreeMap::new();
        for kv in rest.split(',').filter(|s| !s.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameters(format!("`{kv}` is not key=value in `{text}`")))?;
            let v = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameters(format!("`{v}` is not a nonnegative integer in `{text}`")))?;
            params.insert(k.trim(), v);
        }
        Ok(Self { name: name.trim(), params })
    }

    fn get(&self, key: &str) -> Result<usize> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| Error::InvalidParameters(format!("`{}` needs parameter `{key}`", self.name)))
    }

    fn only(&self, keys: &[&str]) -> Result<()> {
        match self.params.keys().find(|k| !keys.contains(k)) {
            Some(k) => Err(Error::InvalidParameters(format!("`{}` has no parameter `{k}`", self.name))),
            None => Ok(()),
        }
    }
}

/// `K_<n>` or `K_<n>^<r>` for complete graphs.
fn clique_shorthand(name: &str) -> Option<Result<Hypergraph>> {
    let rest = name.strip_prefix("K_")?;
    let (n, r) = rest.split_once('^').unwrap_or((rest, "2"));
    Some(match (n.parse(), r.parse()) {
        (Ok(n), Ok(r)) if r >= 2 => Ok(complete(n, r)),
        _ => Err(Error::InvalidParameters(format!("cannot read `{name}` as K_n or K_n^r"))),
    })
}

/// Builds a hypergraph from a builtin spec such as `turan:n=6,l=3,r=2`.
///
/// ```
/// use alpha_spectral::io::builtin_graph;
/// assert_eq!(builtin_graph("turan:n=6,l=3,r=2").unwrap().size(), 12);
/// ```
pub fn builtin_graph(spec: &str) -> Result<Hypergraph> {
    let s = Spec::parse(spec)?;
    if let Some(h) = clique_shorthand(s.name) {
        s.only(&[])?;
        return h;
    }
    match s.name {
        "edge" => {
            s.only(&["r"])?;
            Ok(single_edge(s.get("r")?))
        }
        "complete" => {
            s.only(&["n", "r"])?;
            Ok(complete(s.get("n")?, s.get("r")?))
        }
        "turan" => {
            s.only(&["n", "l", "r"])?;
            turan_hypergraph(s.get("n")?, s.get("l")?, s.get("r")?)
        }
        "chromatic" => {
            s.only(&["n", "k", "r"])?;
            chromatic_turan(s.get("n")?, s.get("k")?, s.get("r")?)
        }
        "kab" => {
            s.only(&["a", "b"])?;
            Ok(complete_bipartite(s.get("a")?, s.get("b")?))
        }
        "cycle" => {
            s.only(&["n"])?;
            cycle(s.get("n")?)
        }
        "path" => {
            s.only(&["n"])?;
            Ok(path(s.get("n")?))
        }
        "frl" => {
            s.only(&["r", "l"])?;
            f_rl(s.get("r")?, s.get("l")?)
        }
        other => Err(Error::InvalidParameters(format!(
            "unknown builtin graph `{other}`; known: K_n, K_n^r, edge, complete, turan, chromatic, kab, cycle, path, frl"
        ))),
    }
}

/// Builds a pattern from `complete:l=,r=`, `chromatic:k=,r=` or `full:l=,r=`.
pub fn builtin_pattern(spec: &str) -> Result<Pattern> {
    let s = Spec::parse(spec)?;
    match s.name {
        "complete" => {
            s.only(&["l", "r"])?;
            Pattern::complete(s.get("l")?, s.get("r")?)
        }
        "chromatic" => {
            s.only(&["k", "r"])?;
            Pattern::chromatic(s.get("k")?, s.get("r")?)
        }
        "full" => {
            s.only(&["l", "r"])?;
            Pattern::full(s.get("l")?, s.get("r")?)
        }
        other => Err(Error::InvalidParameters(format!(
            "unknown builtin pattern `{other}`; known: complete, chromatic, full"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_specs() {
        assert_eq!(builtin_graph("K_3").unwrap(), complete(3, 2));
        assert_eq!(builtin_graph("K_5^3").unwrap().size(), 10);
        assert_eq!(builtin_graph("edge:r=3").unwrap().size(), 1);
        assert_eq!(builtin_graph("chromatic:n=6,k=2,r=3").unwrap().size(), 18);
        assert_eq!(builtin_graph("kab:a=3,b=3").unwrap().size(), 9);
        assert_eq!(builtin_graph(" cycle : n = 5 ").unwrap().size(), 5);
        for bad in ["nosuch", "turan:n=6", "cycle:n=5,r=2", "cycle:n=x", "cycle:n", "K_x", "K_3:n=2"] {
            assert!(builtin_graph(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn pattern_specs() {
        assert_eq!(builtin_pattern("chromatic:k=2,r=3").unwrap(), Pattern::chromatic(2, 3).unwrap());
        assert_eq!(builtin_pattern("full:l=2,r=3").unwrap().edges().len(), 4);
        assert!(builtin_pattern("complete:l=3").is_err());
        for spec in BUILTIN_PATTERNS {
            assert!(builtin_pattern(spec).is_ok());
        }
    }
}
