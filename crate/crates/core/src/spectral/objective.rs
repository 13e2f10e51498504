//! Homogeneous polynomials with nonnegative coefficients over weighted coordinates.
//!
//! A full hypergraph uses one coordinate per vertex with weight 1. A reduced
//! problem uses one coordinate per vertex class with weight equal to the class
//! size, so that `sum_c w_c y_c^alpha` is the alpha-norm of the lifted vector.

use nalgebra::{DMatrix, DVector};

use crate::hypergraph::{factorial, Hypergraph};

#[derive(Debug, Clone)]
pub(crate) struct Term {
    pub coef: f64,
    /// `(coordinate, exponent)` with positive exponents.
    pub vars: Vec<(usize, u32)>,
}

#[derive(Debug, Clone)]
pub(crate) struct Objective {
    pub degree: usize,
    pub weights: Vec<f64>,
    pub terms: Vec<Term>,
    incidence: Vec<Vec<usize>>,
}

impl Objective {
    pub fn new(degree: usize, weights: Vec<f64>, terms: Vec<Term>) -> Self {
        let mut incidence = vec![Vec::new(); weights.len()];
        for (i, t) in terms.iter().enumerate() {
            for &(c, _) in &t.vars {
                incidence[c].push(i);
            }
        }
        Self { degree, weights, terms, incidence }
    }

    /// `r! * sum over edges of the product of the edge's coordinates`.
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        let coef = factorial(h.uniformity());
        let terms = h.edges().iter().map(|e| Term { coef, vars: e.iter().map(|&v| (v, 1)).collect() }).collect();
        Self::new(h.uniformity(), vec![1.0; h.order()], terms)
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn value(&self, y: &[f64]) -> f64 {
        self.terms.iter().map(|t| t.coef * monomial(&t.vars, y, None)).sum()
    }

    pub fn gradient(&self, y: &[f64]) -> Vec<f64> {
        (0..self.dim())
            .map(|c| {
                self.incidence[c]
                    .iter()
                    .map(|&i| {
                        let t = &self.terms[i];
                        t.coef * partial(&t.vars, y, c)
                    })
                    .sum()
            })
            .collect()
    }

    pub fn hessian(&self, y: &[f64]) -> DMatrix<f64> {
        let d = self.dim();
        let mut h = DMatrix::zeros(d, d);
        for t in &self.terms {
            for (a, &(ca, ma)) in t.vars.iter().enumerate() {
                for &(cb, mb) in &t.vars[a..] {
                    let v = if ca == cb {
                        if ma < 2 {
                            continue;
                        }
                        t.coef * (ma * (ma - 1)) as f64 * monomial(&t.vars, y, Some((ca, 2, None)))
                    } else {
                        t.coef * (ma * mb) as f64 * monomial(&t.vars, y, Some((ca, 1, Some(cb))))
                    };
                    h[(ca, cb)] += v;
                    if ca != cb {
                        h[(cb, ca)] += v;
                    }
                }
            }
        }
        h
    }

    /// `sum_c w_c y_c^alpha`.
    pub fn norm_pow(&self, y: &[f64], alpha: f64) -> f64 {
        self.weights.iter().zip(y).map(|(w, v)| w * v.abs().powf(alpha)).sum()
    }

    /// Scales `y` onto the unit sphere; returns false for the zero vector.
    pub fn normalize(&self, y: &mut [f64], alpha: f64) -> bool {
        let s = self.norm_pow(y, alpha);
        if !(s > 0.0) || !s.is_finite() {
            return false;
        }
        let f = s.powf(-1.0 / alpha);
        y.iter_mut().for_each(|v| *v *= f);
        true
    }

    pub fn uniform(&self, alpha: f64) -> Vec<f64> {
        vec![self.total_weight().powf(-1.0 / alpha); self.dim()]
    }

    /// Largest defect of the stationarity conditions at `(lambda, y)`.
    ///
    /// For `alpha > 1` this is `max |lambda y_c^(alpha-1) - g_c / (r w_c)|`
    /// over the support. For `alpha = 1` unsupported coordinates also count
    /// whenever their scaled gradient exceeds `lambda`.
    pub fn residual(&self, alpha: f64, lambda: f64, y: &[f64]) -> f64 {
        let g = self.gradient(y);
        self.residual_with_gradient(alpha, lambda, y, &g)
    }

    pub fn residual_with_gradient(&self, alpha: f64, lambda: f64, y: &[f64], g: &[f64]) -> f64 {
        let r = self.degree as f64;
        let simplex = alpha == 1.0;
        let mut worst: f64 = 0.0;
        for c in 0..self.dim() {
            let scaled = g[c] / (r * self.weights[c]);
            let d = if y[c] > 0.0 {
                let p = if simplex { 1.0 } else { y[c].powf(alpha - 1.0) };
                (lambda * p - scaled).abs()
            } else if simplex {
                (scaled - lambda).max(0.0)
            } else {
                0.0
            };
            worst = worst.max(d);
        }
        worst
    }

    /// Dense Jacobian of the stationarity system on `support` (plus lambda).
    pub fn newton_system(&self, alpha: f64, lambda: f64, y: &[f64], support: &[usize]) -> (DMatrix<f64>, DVector<f64>) {
        let k = support.len();
        let r = self.degree as f64;
        let g = self.gradient(y);
        let hess = self.hessian(y);
        let mut jac = DMatrix::zeros(k + 1, k + 1);
        let mut rhs = DVector::zeros(k + 1);
        for (a, &c) in support.iter().enumerate() {
            let w = self.weights[c];
            let p = if alpha == 1.0 { 1.0 } else { y[c].powf(alpha - 1.0) };
            rhs[a] = -(g[c] / (r * w) - lambda * p);
            for (b, &d) in support.iter().enumerate() {
                jac[(a, b)] = hess[(c, d)] / (r * w);
            }
            if alpha != 1.0 {
                jac[(a, a)] -= lambda * (alpha - 1.0) * y[c].powf(alpha - 2.0);
            }
            jac[(a, k)] = -p;
            jac[(k, a)] = alpha * w * y[c].powf(alpha - 1.0);
        }
        rhs[k] = -(support.iter().map(|&c| self.weights[c] * y[c].powf(alpha)).sum::<f64>() - 1.0);
        (jac, rhs)
    }
}

/// `prod y_c^{m_c}`, optionally with derivative bookkeeping:
/// `Some((c, 1, Some(d)))` lowers the exponents of `c` and `d` by one,
/// `Some((c, 2, None))` lowers the exponent of `c` by two.
fn monomial(vars: &[(usize, u32)], y: &[f64], lower: Option<(usize, u32, Option<usize>)>) -> f64 {
    let mut acc = 1.0;
    for &(c, m) in vars {
        let mut e = m;
        if let Some((a, k, b)) = lower {
            if c == a {
                e -= k;
            }
            if Some(c) == b {
                e -= 1;
            }
        }
        if e > 0 {
            acc *= y[c].powi(e as i32);
        }
    }
    acc
}

fn partial(vars: &[(usize, u32)], y: &[f64], c: usize) -> f64 {
    let mut acc = 1.0;
    for &(v, m) in vars {
        if v == c {
            acc *= m as f64;
            if m > 1 {
                acc *= y[v].powi(m as i32 - 1);
            }
        } else {
            acc *= y[v].powi(m as i32);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::complete;

    #[test]
    fn hessian_matches_finite_differences() {
        let obj = Objective::new(
            3,
            vec![1.0, 2.0, 3.0],
            vec![
                Term { coef: 6.0, vars: vec![(0, 1), (1, 2)] },
                Term { coef: 2.0, vars: vec![(2, 3)] },
                Term { coef: 1.5, vars: vec![(0, 1), (1, 1), (2, 1)] },
            ],
        );
        let y = [0.3, 0.5, 0.7];
        let h = obj.hessian(&y);
        let step = 1e-6;
        for d in 0..3 {
            let mut up = y;
            let mut dn = y;
            up[d] += step;
            dn[d] -= step;
            let gu = obj.gradient(&up);
            let gd = obj.gradient(&dn);
            for c in 0..3 {
                let fd = (gu[c] - gd[c]) / (2.0 * step);
                assert!((fd - h[(c, d)]).abs() < 1e-6, "{c},{d}: {fd} vs {}", h[(c, d)]);
            }
        }
    }

    #[test]
    fn residual_vanishes_at_uniform_point_of_complete_graph() {
        let obj = Objective::from_hypergraph(&complete(4, 3));
        let y = obj.uniform(2.0);
        let lambda = obj.value(&y);
        assert!(obj.residual(2.0, lambda, &y) < 1e-14);
        let y1 = obj.uniform(1.0);
        assert!(obj.residual(1.0, obj.value(&y1), &y1) < 1e-14);
    }
}
