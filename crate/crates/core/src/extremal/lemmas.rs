//! Two scalar facts used by the growth argument, checked numerically.

/// Whether `f(x) = (1 - r x) / (1 - x)^(r / alpha)` strictly decreases on
/// the grid `x = k / grid_size`, `k = 0..grid_size`.
pub fn decay_ratio_decreasing(alpha: f64, r: usize, grid_size: usize) -> bool {
    let r = r as f64;
    let f = |x: f64| (1.0 - r * x) / (1.0 - x).powf(r / alpha);
    let values: Vec<f64> = (0..grid_size).map(|k| f(k as f64 / grid_size as f64)).collect();
    values.windows(2).all(|w| w[1] < w[0])
}

/// `LHS - RHS` of
/// `binom(m+1, i) (m/(m+1))^(i/alpha) - binom(m, i) >= binom(m-1, i-1) (1 - 1/alpha - 1/(alpha (m-r+1)))`,
/// with both sides divided by `binom(m-1, i-1)` so large `m` stays finite.
pub fn binomial_growth_gap(alpha: f64, r: usize, i: usize, m: usize) -> f64 {
    let (mf, fi) = (m as f64, i as f64);
    let lhs = (mf + 1.0) * mf / (fi * (mf - fi + 1.0)) * (-(fi / alpha) * (1.0 / mf).ln_1p()).exp() - mf / fi;
    let rhs = 1.0 - 1.0 / alpha - 1.0 / (alpha * (m - r + 1) as f64);
    lhs - rhs
}

/// Least `m >= max(r, i)` such that the inequality holds for every `m'` in `[m, m_cap]`.
///
/// `None` when it fails at `m_cap` itself.
///
/// ```
/// use alpha_spectral::extremal::binomial_growth_threshold;
/// assert!(binomial_growth_threshold(2.0, 2, 1, 10_000).is_some());
/// ```
pub fn binomial_growth_threshold(alpha: f64, r: usize, i: usize, m_cap: usize) -> Option<usize> {
    let start = r.max(i).max(1);
    if m_cap < start {
        return None;
    }
    let mut threshold = start;
    for m in (start..=m_cap).rev() {
        if binomial_growth_gap(alpha, r, i, m) < 0.0 {
            if m == m_cap {
                return None;
            }
            threshold = m + 1;
            break;
        }
    }
    Some(threshold)
}
