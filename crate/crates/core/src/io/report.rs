use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectral::{vector_stats, Method, SpectralEstimate};

pub const SCHEMA_VERSION: u32 = 1;

const DEFAULT_GRID_POINTS: usize = 24;

/// Flat JSON form of a [`SpectralEstimate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralRecord {
    pub alpha: f64,
    pub lambda: f64,
    pub residual: f64,
    pub iterations: usize,
    pub method: Method,
    pub converged: bool,
    pub x_min: f64,
    pub principal_ratio: Option<f64>,
    pub vector: Vec<f64>,
}

impl From<&SpectralEstimate> for SpectralRecord {
    fn from(e: &SpectralEstimate) -> Self {
        let stats = vector_stats(&e.vector.values);
        Self {
            alpha: e.vector.alpha,
            lambda: e.lambda,
            residual: e.residual,
            iterations: e.iterations,
            method: e.method,
            converged: e.converged,
            x_min: stats.min,
            principal_ratio: stats.principal_ratio.is_finite().then_some(stats.principal_ratio),
            vector: e.vector.values.clone(),
        }
    }
}

/// Pretty JSON with `schema` and `report` fields next to the serialized fields of `value`.
///
/// Non-object values land under `data`.
pub fn to_json<T: Serialize>(report: &str, value: &T) -> Result<String> {
    let body = serde_json::to_value(value).map_err(|e| Error::InvalidParameters(e.to_string()))?;
    let mut out = serde_json::Map::new();
    out.insert("schema".into(), SCHEMA_VERSION.into());
    out.insert("report".into(), report.into());
    match body {
        serde_json::Value::Object(fields) => out.extend(fields),
        other => {
            out.insert("data".into(), other);
        }
    }
    serde_json::to_string_pretty(&out).map_err(|e| Error::InvalidParameters(e.to_string()))
}

/// Reads an `alpha` grid: `a,b,c`, `start:stop:log[:count]` or `start:stop:lin[:count]`.
///
/// ```
/// use alpha_spectral::io::parse_alpha_grid;
/// assert_eq!(parse_alpha_grid("1:4:lin:4").unwrap(), vec![1.0, 2.0, 3.0, 4.0]);
/// assert_eq!(parse_alpha_grid("1:100:log:3").unwrap(), vec![1.0, 10.0, 100.0]);
/// ```
pub fn parse_alpha_grid(text: &str) -> Result<Vec<f64>> {
    let bad = || Error::InvalidParameters(format!("cannot read alpha grid `{text}`"));
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad());
    let grid: Vec<f64> = if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if !(3..=4).contains(&parts.len()) {
            return Err(bad());
        }
        let (a, b) = (num(parts[0])?, num(parts[1])?);
        let count = match parts.get(3) {
            Some(c) => c.trim().parse::<usize>().map_err(|_| bad())?,
            None => DEFAULT_GRID_POINTS,
        };
        if count < 2 || !(b > a) {
            return Err(bad());
        }
        let t = |i: usize| i as f64 / (count - 1) as f64;
        match parts[2].trim() {
            "lin" => (0..count).map(|i| a + (b - a) * t(i)).collect(),
            "log" if a > 0.0 => (0..count).map(|i| (a.ln() + (b.ln() - a.ln()) * t(i)).exp()).collect(),
            _ => return Err(bad()),
        }
    } else {
        text.split(',').map(num).collect::<Result<_>>()?
    };
    if let Some(&a) = grid.iter().find(|&&a| !(a >= 1.0) || !a.is_finite()) {
        return Err(Error::InvalidAlpha(a));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameters(format!("alpha grid `{text}` is not strictly increasing")));
    }
    // undo ulp drift of the log map at integer grid points
    Ok(grid.into_iter().map(|a| if (a - a.round()).abs() < 1e-12 { a.round() } else { a }).collect())
}

/// `alpha,lambda,residual` rows with a header line.
pub fn sweep_csv(estimates: &[SpectralEstimate]) -> String {
    let mut out = String::from("alpha,lambda,residual\n");
    for e in estimates {
        out.push_str(&format!("{},{},{}\n", e.vector.alpha, e.lambda, e.residual));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        let g = parse_alpha_grid("1:100:log").unwrap();
        assert_eq!(g.len(), 24);
        assert_eq!((g[0], g[23]), (1.0, 100.0));
        assert_eq!(parse_alpha_grid("1, 2.5,3").unwrap(), vec![1.0, 2.5, 3.0]);
        for bad in ["0.5,1", "2,1", "1:2:cubic", "1:1:lin", "1:2", "1:2:lin:1", "x"] {
            assert!(parse_alpha_grid(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn json_envelope() {
        let s = to_json("demo", &serde_json::json!({"b": 1})).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["report"], "demo");
        assert_eq!(v["b"], 1);
        let s = to_json("list", &vec![1, 2]).unwrap();
        assert!(s.contains("\"data\""));
    }
}
