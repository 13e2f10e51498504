//! Ascent methods on the weighted alpha-sphere and the Newton polish.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::objective::Objective;
use super::{Method, SolverConfig};
use crate::error::{Error, Result};

/// Coordinates of an `alpha = 1` maximizer below this are reported as zero.
pub(crate) const SIMPLEX_ZERO: f64 = 1e-9;

/// Residual below which the ascent hands over to Newton's method.
const POLISH_TRIGGER: f64 = 1e-5;
const POLISH_EVERY: usize = 200;

#[derive(Debug, Clone)]
pub(crate) struct Solution {
    pub y: Vec<f64>,
    pub lambda: f64,
    pub residual: f64,
    pub iterations: usize,
    pub restarts: usize,
    pub method: Method,
}

#[derive(Debug, Clone)]
struct Run {
    y: Vec<f64>,
    lambda: f64,
    residual: f64,
    iterations: usize,
    method: Method,
}

/// Method chosen by `Auto`.
pub(crate) fn resolve(method: Method, alpha: f64, r: usize) -> Result<Method> {
    let m = match method {
        Method::Auto if alpha == 1.0 => Method::Simplex,
        Method::Auto if alpha >= r as f64 => Method::Power,
        Method::Auto => Method::ProjectedGradient,
        m => m,
    };
    match m {
        Method::Simplex if alpha != 1.0 => {
            Err(Error::InvalidParameters("the simplex method requires alpha = 1".into()))
        }
        Method::Power | Method::ProjectedGradient if alpha == 1.0 => {
            Err(Error::InvalidParameters("alpha = 1 requires the simplex method".into()))
        }
        m => Ok(m),
    }
}

pub(crate) fn solve(obj: &Objective, alpha: f64, cfg: &SolverConfig, warm: &[Vec<f64>]) -> Result<Solution> {
    let method = resolve(cfg.method, alpha, obj.degree)?;
    // For alpha >= r the problem is concave in y^alpha, so one start is enough.
    let single = method == Method::Power && alpha >= obj.degree as f64;
    let starts = starting_points(obj, alpha, cfg, warm, single);
    let runs: Vec<Run> = starts
        .par_iter()
        .map(|y0| match method {
            Method::Power => power(obj, alpha, y0.clone(), cfg),
            Method::ProjectedGradient => sphere_gradient(obj, alpha, y0.clone(), cfg, 0),
            _ => simplex_gradient(obj, y0.clone(), cfg),
        })
        .collect();
    if runs.iter().any(|r| !r.lambda.is_finite()) {
        return Err(Error::SolverFailure("non-finite objective value".into()));
    }
    let restarts = runs.len();
    let mut best = pick_best(runs);
    if alpha == 1.0 {
        clean_simplex_support(obj, &mut best);
    }
    Ok(Solution {
        y: best.y,
        lambda: best.lambda,
        residual: best.residual,
        iterations: best.iterations,
        restarts,
        method: best.method,
    })
}

fn starting_points(obj: &Objective, alpha: f64, cfg: &SolverConfig, warm: &[Vec<f64>], single: bool) -> Vec<Vec<f64>> {
    let mut starts: Vec<Vec<f64>> = warm
        .iter()
        .filter_map(|w| {
            let mut y: Vec<f64> = w.iter().map(|v| v.max(0.0)).collect();
            obj.normalize(&mut y, alpha).then_some(y)
        })
        .collect();
    starts.push(obj.uniform(alpha));
    if single {
        return starts;
    }
    let d = obj.dim();
    let extra = cfg.restarts.saturating_sub(1);
    let dirichlet = extra.div_ceil(2);
    for i in 0..extra {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(i as u64 + 1);
        let mut z = vec![0.0; d];
        if i < dirichlet {
            for v in z.iter_mut() {
                *v = -(1.0 - rng.gen::<f64>()).ln();
            }
        } else {
            let lo = obj.degree.min(d).max(1);
            let size = rng.gen_range(lo..=d);
            let mut idx: Vec<usize> = (0..d).collect();
            for k in 0..size {
                let j = rng.gen_range(k..d);
                idx.swap(k, j);
            }
            for &c in &idx[..size] {
                z[c] = 1.0;
            }
        }
        // z lives on the weighted simplex; map to the alpha-sphere
        let total: f64 = z.iter().sum();
        let y: Vec<f64> = z.iter().zip(&obj.weights).map(|(v, w)| (v / total / w).powf(1.0 / alpha)).collect();
        starts.push(y);
    }
    starts
}

/// Largest lambda; near-ties go to the lexicographically smallest rounded vector.
fn pick_best(runs: Vec<Run>) -> Run {
    let top = runs.iter().map(|r| r.lambda).fold(f64::NEG_INFINITY, f64::max);
    let slack = 1e-12 * top.abs().max(1.0);
    let key = |r: &Run| -> Vec<i64> { r.y.iter().map(|v| (v * 1e9).round() as i64).collect() };
    runs.into_iter().filter(|r| r.lambda >= top - slack).min_by(|a, b| key(a).cmp(&key(b))).expect("at least one start")
}

fn clean_simplex_support(obj: &Objective, run: &mut Run) {
    let mut y = run.y.clone();
    for v in y.iter_mut() {
        if *v < SIMPLEX_ZERO {
            *v = 0.0;
        }
    }
    if obj.normalize(&mut y, 1.0) {
        run.lambda = obj.value(&y);
        run.residual = obj.residual(1.0, run.lambda, &y);
        run.y = y;
    }
}

fn finish(obj: &Objective, alpha: f64, y: Vec<f64>, iterations: usize, method: Method) -> Run {
    let lambda = obj.value(&y);
    let residual = obj.residual(alpha, lambda, &y);
    Run { y, lambda, residual, iterations, method }
}

/// Replaces `run` by its Newton refinement when that is no worse.
fn try_polish(obj: &Objective, alpha: f64, y: &[f64], lambda: f64, residual: f64) -> Option<(Vec<f64>, f64, f64)> {
    let (z, lz, rz) = newton_polish(obj, alpha, y)?;
    let floor = lambda - 1e-12 * lambda.abs().max(1.0);
    (lz >= floor && rz < residual).then_some((z, lz, rz))
}

/// Nonlinear power iteration `y^(alpha-1) <- g / (r w) + shift * lambda * y^(alpha-1)`.
///
/// The shift is 0 above `alpha = r` and 1 otherwise; any decrease of the
/// objective hands the point over to projected gradient.
fn power(obj: &Objective, alpha: f64, mut y: Vec<f64>, cfg: &SolverConfig) -> Run {
    let r = obj.degree as f64;
    let shift = if alpha > r { 0.0 } else { 1.0 };
    let p = 1.0 / (alpha - 1.0);
    let mut lambda = obj.value(&y);
    for it in 0..cfg.max_iterations {
        let g = obj.gradient(&y);
        let res = obj.residual_with_gradient(alpha, lambda, &y, &g);
        if res <= cfg.tolerance {
            return Run { y, lambda, residual: res, iterations: it, method: Method::Power };
        }
        if res < POLISH_TRIGGER && it % POLISH_EVERY == 0 {
            if let Some((z, lz, rz)) = try_polish(obj, alpha, &y, lambda, res) {
                if rz <= cfg.tolerance {
                    return Run { y: z, lambda: lz, residual: rz, iterations: it, method: Method::Power };
                }
            }
        }
        let mut next: Vec<f64> = (0..y.len())
            .map(|c| {
                let t = g[c] / (r * obj.weights[c]) + shift * lambda * y[c].powf(alpha - 1.0);
                if t > 0.0 {
                    t.powf(p)
                } else {
                    0.0
                }
            })
            .collect();
        if !obj.normalize(&mut next, alpha) {
            break;
        }
        let value = obj.value(&next);
        if value < lambda - 1e-14 * lambda.abs().max(1.0) {
            let mut run = sphere_gradient(obj, alpha, y, cfg, it);
            run.method = Method::ProjectedGradient;
            return run;
        }
        y = next;
        lambda = value;
    }
    polished(obj, alpha, y, cfg.max_iterations, Method::Power)
}

fn polished(obj: &Objective, alpha: f64, y: Vec<f64>, iterations: usize, method: Method) -> Run {
    let mut run = finish(obj, alpha, y, iterations, method);
    if let Some((z, lz, rz)) = try_polish(obj, alpha, &run.y, run.lambda, run.residual) {
        run.y = z;
        run.lambda = lz;
        run.residual = rz;
    }
    run
}

/// Projected gradient ascent on `sum_c w_c y_c^alpha = 1` with adaptive step.
fn sphere_gradient(obj: &Objective, alpha: f64, mut y: Vec<f64>, cfg: &SolverConfig, spent: usize) -> Run {
    let r = obj.degree as f64;
    let mut lambda = obj.value(&y);
    let mut eta = 1.0;
    let mut it = spent;
    while it < cfg.max_iterations {
        let g = obj.gradient(&y);
        let res = obj.residual_with_gradient(alpha, lambda, &y, &g);
        if res <= cfg.tolerance {
            return Run { y, lambda, residual: res, iterations: it, method: Method::ProjectedGradient };
        }
        if res < POLISH_TRIGGER && it.is_multiple_of(POLISH_EVERY) {
            if let Some((z, lz, rz)) = try_polish(obj, alpha, &y, lambda, res) {
                if rz <= cfg.tolerance {
                    return Run { y: z, lambda: lz, residual: rz, iterations: it, method: Method::ProjectedGradient };
                }
            }
        }
        let d: Vec<f64> = (0..y.len()).map(|c| g[c] / obj.weights[c] - r * lambda * y[c].powf(alpha - 1.0)).collect();
        let mut moved = false;
        while eta > 1e-18 {
            let mut z: Vec<f64> = y.iter().zip(&d).map(|(a, b)| (a + eta * b).max(0.0)).collect();
            if obj.normalize(&mut z, alpha) {
                let value = obj.value(&z);
                if value > lambda {
                    y = z;
                    lambda = value;
                    eta *= 2.0;
                    moved = true;
                    break;
                }
            }
            eta *= 0.5;
        }
        it += 1;
        if !moved {
            break;
        }
    }
    polished(obj, alpha, y, it, Method::ProjectedGradient)
}

/// Projected gradient on the weighted simplex `sum_c w_c y_c = 1`.
///
/// Works in `z_c = w_c y_c`, where the feasible set is the standard simplex.
fn simplex_gradient(obj: &Objective, y: Vec<f64>, cfg: &SolverConfig) -> Run {
    let w = &obj.weights;
    let mut z: Vec<f64> = y.iter().zip(w).map(|(a, b)| a * b).collect();
    let to_y = |z: &[f64]| -> Vec<f64> { z.iter().zip(w).map(|(a, b)| a / b).collect() };
    let mut yv = to_y(&z);
    let mut lambda = obj.value(&yv);
    let mut eta = 1.0;
    let mut it = 0;
    while it < cfg.max_iterations {
        let g = obj.gradient(&yv);
        let res = obj.residual_with_gradient(1.0, lambda, &yv, &g);
        if res <= cfg.tolerance {
            return Run { y: yv, lambda, residual: res, iterations: it, method: Method::Simplex };
        }
        if res < POLISH_TRIGGER && it % POLISH_EVERY == 0 {
            if let Some((v, lv, rv)) = try_polish(obj, 1.0, &yv, lambda, res) {
                if rv <= cfg.tolerance {
                    return Run { y: v, lambda: lv, residual: rv, iterations: it, method: Method::Simplex };
                }
            }
        }
        let grad: Vec<f64> = g.iter().zip(w).map(|(a, b)| a / b).collect();
        let mut moved = false;
        while eta > 1e-18 {
            let step: Vec<f64> = z.iter().zip(&grad).map(|(a, b)| a + eta * b).collect();
            let cand = project_simplex(&step);
            let cy = to_y(&cand);
            let value = obj.value(&cy);
            if value > lambda {
                z = cand;
                yv = cy;
                lambda = value;
                eta *= 2.0;
                moved = true;
                break;
            }
            eta *= 0.5;
        }
        it += 1;
        if !moved {
            break;
        }
    }
    polished(obj, 1.0, yv, it, Method::Simplex)
}

/// Euclidean projection onto the probability simplex (sort-and-threshold).
pub(crate) fn project_simplex(v: &[f64]) -> Vec<f64> {
    let mut u = v.to_vec();
    u.sort_by(|a, b| b.total_cmp(a));
    let mut cum = 0.0;
    let mut theta = 0.0;
    for (j, &uj) in u.iter().enumerate() {
        cum += uj;
        let t = (cum - 1.0) / (j + 1) as f64;
        if uj - t > 0.0 {
            theta = t;
        }
    }
    v.iter().map(|x| (x - theta).max(0.0)).collect()
}

/// Newton's method on the stationarity system restricted to the support of `y`.
pub(crate) fn newton_polish(obj: &Objective, alpha: f64, y: &[f64]) -> Option<(Vec<f64>, f64, f64)> {
    let top = y.iter().cloned().fold(0.0, f64::max);
    if top <= 0.0 {
        return None;
    }
    let support: Vec<usize> = (0..y.len()).filter(|&c| y[c] > 1e-6 * top).collect();
    let mut cur: Vec<f64> = (0..y.len()).map(|c| if support.contains(&c) { y[c] } else { 0.0 }).collect();
    if !obj.normalize(&mut cur, alpha) {
        return None;
    }
    let mut lambda = obj.value(&cur);
    let k = support.len();
    let merit = |cur: &[f64], lambda: f64| obj.newton_system(alpha, lambda, cur, &support).1.amax();
    let mut m = merit(&cur, lambda);
    for _ in 0..50 {
        if m < 1e-15 {
            break;
        }
        let (jac, rhs) = obj.newton_system(alpha, lambda, &cur, &support);
        let delta = jac.lu().solve(&rhs)?;
        let mut t = 1.0;
        let mut improved = false;
        while t > 1e-6 {
            let mut cand = cur.clone();
            let mut ok = true;
            for (a, &c) in support.iter().enumerate() {
                cand[c] = cur[c] + t * delta[a];
                ok &= cand[c] > 0.0;
            }
            let cl = lambda + t * delta[k];
            if ok {
                let cm = merit(&cand, cl);
                if cm < m {
                    cur = cand;
                    lambda = cl;
                    m = cm;
                    improved = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if !improved {
            break;
        }
    }
    if !obj.normalize(&mut cur, alpha) || cur.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let value = obj.value(&cur);
    let res = obj.residual(alpha, value, &cur);
    Some((cur, value, res))
}
