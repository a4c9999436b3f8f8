//! Burn-in sweep: solves the certified programs across a wide seed grid
//! and asserts the cross-parameter orderings everywhere. Broader than the
//! test suites; useful when touching the solver internals.
use gal::activation::{
    check_weighted_equality, rosenfeld_construct, ActivationOptions, ActivationVariant,
};
use gal::coloring::sigma;
use gal::graph::random_gnp;
use gal::independence::alpha_unweighted;
use gal::packing::alpha_star;
use gal::rational::to_f64;
use gal::representations::{extract_rep, rebuild_primal, validate_rep};
use gal::theta::{lovasz_theta, theta_minus, theta_plus, ThetaOptions};

fn main() {
    let topts = ThetaOptions::default();
    let aopts = ActivationOptions::default();
    let mut worst_link = f64::INFINITY;
    let mut worst_forward: f64 = 0.0;
    let mut solves = 0usize;
    let mut max_iters = 0usize;

    for n in 2..=8usize {
        for p10 in [1, 3, 5, 7, 9] {
            for seed in 0..12u64 {
                let g = random_gnp(
                    n,
                    p10 as f64 / 10.0,
                    9_000_000 + seed * 100 + n as u64 * 10 + p10,
                )
                .unwrap();
                let (a, _) = alpha_unweighted(&g).unwrap();
                let tm = theta_minus(&g, &topts).unwrap();
                let th = lovasz_theta(&g, &topts).unwrap();
                let tp = theta_plus(&g, &topts).unwrap();
                solves += 3;
                max_iters = max_iters
                    .max(tm.iterations)
                    .max(th.iterations)
                    .max(tp.iterations);
                let star = to_f64(&alpha_star(&g).unwrap().value);
                let (s, _) = sigma(&g).unwrap();
                for link in [
                    tm.value - a as f64,
                    th.value - tm.value,
                    tp.value - th.value,
                    star - tp.value,
                    s as f64 - star,
                ] {
                    worst_link = worst_link.min(link);
                    assert!(
                        link >= -1e-5,
                        "sandwich violated: n={n} p={p10} seed={seed} link={link}"
                    );
                }
            }
        }
    }
    println!("sandwich sweep: {solves} certified solves, worst link slack {worst_link:.2e}, max iters {max_iters}");

    let mut adversarial = vec![];
    for n in 3..=8usize {
        for seed in 0..8u64 {
            adversarial.push(random_gnp(n, 0.3, 10_000 + seed).unwrap());
            adversarial.push(random_gnp(n, 0.8, 20_000 + seed).unwrap());
        }
    }
    for n in 3..=8 {
        let star_edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
        adversarial.push(gal::Graph::from_edges(n, &star_edges).unwrap());
        let path_edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        adversarial.push(gal::Graph::from_edges(n, &path_edges).unwrap());
    }
    let mut reps = 0usize;
    for g in &adversarial {
        for cert in [
            lovasz_theta(g, &topts).unwrap(),
            theta_minus(g, &topts).unwrap(),
            theta_plus(g, &topts).unwrap(),
        ] {
            let rep = extract_rep(&cert).expect("extraction");
            let total: f64 = rep.weights.iter().sum();
            worst_forward = worst_forward.max((total - cert.value).abs());
            assert!(
                (total - cert.value).abs() <= 1e-5,
                "forward: {} vs {}",
                total,
                cert.value
            );
            let report = validate_rep(&rep, g);
            assert!(
                report.norm_deviation <= 1e-6
                    && report.forbidden_max <= 1e-6
                    && report.sign_violation <= 1e-6,
                "rep violations {report:?}"
            );
            let (_, value) = rebuild_primal(&rep);
            assert!(value >= total - 1e-6, "converse {value} vs {total}");
            reps += 1;
        }
    }
    println!("extraction sweep: {reps} reps, worst forward deviation {worst_forward:.2e}");

    let mut eqs = 0usize;
    for n in 4..=7usize {
        for seed in 0..4u64 {
            let g = random_gnp(n, 0.5, 30_000 + seed * 7 + n as u64).unwrap();
            for variant in [
                ActivationVariant::Theta,
                ActivationVariant::ThetaPmFirst,
                ActivationVariant::ThetaPmSecond,
            ] {
                let eq = check_weighted_equality(&g, variant, &aopts).unwrap();
                assert!(
                    eq.alpha_residual <= 1e-4 && eq.unit_residual <= 1e-5,
                    "equality failed n={n} seed={seed} {variant:?}: {eq:?}"
                );
                eqs += 1;
            }
        }
    }
    println!("weighted equality sweep: {eqs} checks");

    let mut wits = 0usize;
    for n in 3..=8usize {
        for seed in 0..10u64 {
            let g = random_gnp(n, 0.5, 40_000 + seed * 13 + n as u64).unwrap();
            let w = rosenfeld_construct(&g, "stress", &aopts).unwrap();
            assert!(num::Zero::is_zero(&w.residual), "n={n} seed={seed}");
            wits += 1;
        }
    }
    println!("exact witness sweep: {wits} witnesses, all residuals exactly 0");
}
