//! Values fixed by closed forms or published tables, checked end to end.

use alpha_spectral::extremal::{spectral_extremal, turan_number};
use alpha_spectral::hypergraph::{complete, complete_bipartite, cycle, factorial, path, single_edge, Hypergraph};
use alpha_spectral::pattern::{pattern_density, DensityConfig, DensityMethod, Pattern};
use alpha_spectral::spectral::{alpha_spectral_radius, SolverConfig};

fn lambda(h: &Hypergraph, alpha: f64) -> f64 {
    alpha_spectral_radius(h, alpha, &SolverConfig::default()).unwrap().lambda
}

fn binom(n: usize, k: usize) -> f64 {
    (0..k).map(|i| (n - i) as f64 / (i + 1) as f64).product()
}

#[test]
fn complete_hypergraphs_at_every_alpha() {
    // Maclaurin plus the power-mean inequality put the maximizer at the uniform point.
    for r in 2..=4 {
        for n in r..=7 {
            for alpha in [1.0, 1.5, 2.0, 3.0, 5.0] {
                let expected = factorial(r) * binom(n, r) / (n as f64).powf(r as f64 / alpha);
                let got = lambda(&complete(n, r), alpha);
                assert!((got - expected).abs() < 1e-8, "K_{n}^{r} at {alpha}: {got} vs {expected}");
            }
        }
    }
}

#[test]
fn adjacency_spectra_of_classical_graphs() {
    for n in 2..=9 {
        let expected = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
        assert!((lambda(&path(n), 2.0) - expected).abs() < 1e-9, "P_{n}");
    }
    for n in 3..=9 {
        assert!((lambda(&cycle(n).unwrap(), 2.0) - 2.0).abs() < 1e-9, "C_{n}");
    }
    for (a, b) in [(1, 5), (2, 3), (3, 4), (4, 4)] {
        let expected = ((a * b) as f64).sqrt();
        assert!((lambda(&complete_bipartite(a, b), 2.0) - expected).abs() < 1e-9, "K_{a},{b}");
    }
    // Petersen graph is 3-regular
    let outer = (0..5).map(|i| vec![i, (i + 1) % 5]);
    let spokes = (0..5).map(|i| vec![i, i + 5]);
    let inner = (0..5).map(|i| vec![5 + i, 5 + (i + 2) % 5]);
    let petersen = Hypergraph::new(10, 2, outer.chain(spokes).chain(inner)).unwrap();
    assert!((lambda(&petersen, 2.0) - 3.0).abs() < 1e-9);
}

#[test]
fn known_lagrangians() {
    // K_4^3 minus an edge: 4/81 in the sum-over-edges normalization, times 3!
    let k4_minus = Hypergraph::new(4, 3, [[0, 1, 2], [0, 1, 3], [0, 2, 3]]).unwrap();
    assert!((lambda(&k4_minus, 1.0) - 24.0 / 81.0).abs() < 1e-9);
    // Fano plane: every pair lies in one line, so the optimum sits on a single edge
    let fano =
        Hypergraph::new(7, 3, [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]]).unwrap();
    assert!((lambda(&fano, 1.0) - 6.0 / 27.0).abs() < 1e-9);
    for r in 2..=5 {
        let expected = factorial(r) / (r as f64).powi(r as i32);
        assert!((lambda(&single_edge(r), 1.0) - expected).abs() < 1e-12);
    }
}

#[test]
fn published_turan_numbers() {
    // ex(n, C_4) for n = 1..9
    let c4 = cycle(4).unwrap();
    let got: Vec<f64> = (1..=9).map(|n| turan_number(std::slice::from_ref(&c4), n, 2).unwrap().optimum).collect();
    assert_eq!(got, vec![0.0, 1.0, 3.0, 4.0, 6.0, 7.0, 9.0, 11.0, 13.0]);
    // graphs of girth at least 5: ex(n, {C_3, C_4}) for n = 1..9
    let family = [complete(3, 2), c4];
    let got: Vec<f64> = (1..=9).map(|n| turan_number(&family, n, 2).unwrap().optimum).collect();
    assert_eq!(got, vec![0.0, 1.0, 2.0, 3.0, 5.0, 6.0, 8.0, 10.0, 12.0]);
    // ex(n, K_4) = t_3(n)
    for n in 4..=7 {
        let expected = (n * n - [0, 1, 1][n % 3]) / 3;
        assert_eq!(turan_number(&[complete(4, 2)], n, 2).unwrap().optimum, expected as f64, "n = {n}");
    }
}

#[test]
fn spectral_turan_small_orders() {
    let cfg = SolverConfig::default();
    // K_4-free at alpha = 2: the balanced complete tripartite graph
    for n in [6, 7] {
        let rep = spectral_extremal(&[complete(4, 2)], n, 2, 2.0, &cfg).unwrap();
        let t = alpha_spectral::hypergraph::turan_hypergraph(n, 3, 2).unwrap();
        assert!((rep.optimum - lambda(&t, 2.0)).abs() < 1e-9);
        assert_eq!(rep.witnesses.len(), 1);
    }
    // triangle-free Lagrangian: every graph with an edge reaches 1/2
    let rep = spectral_extremal(&[complete(3, 2)], 5, 2, 1.0, &cfg).unwrap();
    assert!((rep.optimum - 0.5).abs() < 1e-9);
    assert!(rep.witnesses.len() > 1);
}

#[test]
fn pattern_densities_by_both_methods() {
    let cfg = DensityConfig::default();
    let cases = [
        (Pattern::complete(4, 3).unwrap(), 3.0 / 8.0),
        (Pattern::chromatic(3, 3).unwrap(), 8.0 / 9.0),
        (Pattern::full(2, 3).unwrap(), 1.0),
        // only {2,1}-profiles: the 2-colored "star" pattern, optimum 4/9 at y = (2/3, 1/3)
        (Pattern::new(2, 3, [vec![2, 1]]).unwrap(), 4.0 / 9.0),
    ];
    for (p, expected) in cases {
        for method in [DensityMethod::SimplexOptimization, DensityMethod::FiniteNRatio] {
            let d = pattern_density(&p, method, &cfg).unwrap();
            assert!((d.value - expected).abs() < 1e-6, "{p} by {method:?}: {}", d.value);
        }
    }
}
