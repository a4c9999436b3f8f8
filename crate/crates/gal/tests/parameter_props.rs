//! Cross-parameter properties: weight monotonicity, the ceiling squeeze,
//! blow-up value transfer for the SDP side, and witness validity.

use gal::coloring::{chi, sigma};
use gal::graph::random_gnp;
use gal::independence::alpha;
use gal::packing::fractional_packing;
use gal::rational::{rat, rat_u64, to_f64, Rational};
use gal::theta::{weighted_theta, ThetaOptions, ThetaVariant};
use gal::weights::Weights;

fn pseudo_weights(n: usize, seed: u64, bound: i64) -> Vec<Rational> {
    let mut s = seed;
    (0..n)
        .map(|_| {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            rat(
                ((s >> 33) % bound as u64) as i64,
                1 + ((s >> 41) % 4) as i64,
            )
        })
        .collect()
}

#[test]
fn alpha_monotone_in_weights() {
    for seed in 0..6u64 {
        let g = random_gnp(8, 0.5, seed).unwrap();
        let p = pseudo_weights(8, seed, 5);
        let bump = pseudo_weights(8, seed + 77, 3);
        let r: Vec<Rational> = p.iter().zip(&bump).map(|(a, b)| a + b).collect();
        let ap = alpha(&g, &Weights::exact(p.clone()).unwrap()).unwrap();
        let ar = alpha(&g, &Weights::exact(r).unwrap()).unwrap();
        assert!(
            ap.value.as_exact().unwrap() <= ar.value.as_exact().unwrap(),
            "seed {seed}: raising weights cannot lower alpha"
        );
        // Additive cap: alpha(G, p + q*1) <= alpha(G, p) + q n.
        let q = rat(3, 2);
        let shifted: Vec<Rational> = p.iter().map(|a| a + &q).collect();
        let a_shift = alpha(&g, &Weights::exact(shifted).unwrap()).unwrap();
        let cap = ap.value.as_exact().unwrap() + &q * rat_u64(8);
        assert!(a_shift.value.as_exact().unwrap() <= &cap, "seed {seed}");
    }
}

#[test]
fn ceiling_squeeze_on_product_weights() {
    // alpha(G x (Gc, l p)) <= alpha(G x (Gc, ceil(l p))) <= alpha(G x (Gc, l p + 1)).
    let g = random_gnp(5, 0.5, 11).unwrap();
    let comp = g.complement();
    let product = g.strong_product(&comp);
    let p = pseudo_weights(5, 5, 4);
    for level in [1u64, 3] {
        let scaled: Vec<Rational> = p.iter().map(|x| x * rat_u64(level)).collect();
        let ceiled = Weights::exact(scaled.clone()).unwrap().ceil_scaled(1);
        let plus_one: Vec<Rational> = scaled.iter().map(|x| x + rat(1, 1)).collect();
        let ones = Weights::ones(5);
        let lo = alpha(&product, &ones.product(&Weights::exact(scaled).unwrap())).unwrap();
        let mid = alpha(&product, &ones.product(&Weights::from_integers(&ceiled))).unwrap();
        let hi = alpha(&product, &ones.product(&Weights::exact(plus_one).unwrap())).unwrap();
        assert!(lo.value.as_exact().unwrap() <= mid.value.as_exact().unwrap());
        assert!(mid.value.as_exact().unwrap() <= hi.value.as_exact().unwrap());
    }
}

#[test]
fn theta_blowup_transfer() {
    let opts = ThetaOptions::default();
    for seed in 0..3u64 {
        let g = random_gnp(5, 0.5, 20 + seed).unwrap();
        let m: Vec<u64> = (0..5).map(|i| 1 + (seed + i) % 3).collect();
        let blown = g.blowup(&m).unwrap();
        let direct = gal::theta::lovasz_theta(&blown, &opts).unwrap().value;
        let weighted = weighted_theta(&g, ThetaVariant::Lovasz, &Weights::from_integers(&m), &opts)
            .unwrap()
            .value;
        assert!(
            (direct - weighted).abs() <= 1e-5 * (1.0 + weighted),
            "seed {seed}: theta(Blup(G,m)) = {direct} vs theta(G,m) = {weighted}"
        );
    }
}

#[test]
fn alpha_star_blowup_transfer_exact() {
    for seed in 0..3u64 {
        let g = random_gnp(5, 0.5, 40 + seed).unwrap();
        let m: Vec<u64> = (0..5).map(|i| 1 + (seed + i) % 2).collect();
        let blown = g.blowup(&m).unwrap();
        let direct = fractional_packing(&blown, &Weights::ones(blown.n()))
            .unwrap()
            .value;
        let weighted = fractional_packing(&g, &Weights::from_integers(&m))
            .unwrap()
            .value;
        assert_eq!(direct, weighted, "seed {seed}");
    }
}

#[test]
fn witnesses_validate() {
    for seed in 0..5u64 {
        let g = random_gnp(9, 0.5, 60 + seed).unwrap();
        let w = Weights::exact(pseudo_weights(9, seed, 6)).unwrap();
        let a = alpha(&g, &w).unwrap();
        assert!(g.is_independent_set(&a.witness));
        let coloring = chi(&g).unwrap();
        for (u, v) in g.edges() {
            assert_ne!(coloring.classes[u], coloring.classes[v]);
        }
        let (count, cover) = sigma(&g).unwrap();
        assert_eq!(cover.len(), count);
        let mut seen = 0;
        for c in &cover {
            assert!(g.is_clique(c));
            seen += c.count();
        }
        assert_eq!(seen, g.n(), "cover partitions the vertices");
    }
}

#[test]
fn weighted_theta_tracks_weighted_alpha() {
    // alpha(G, p) <= theta(G, p) on exact weights.
    let opts = ThetaOptions::default();
    for seed in 0..4u64 {
        let g = random_gnp(7, 0.5, 80 + seed).unwrap();
        let w = Weights::exact(pseudo_weights(7, seed + 9, 5)).unwrap();
        let a = to_f64(alpha(&g, &w).unwrap().value.as_exact().unwrap());
        let t = weighted_theta(&g, ThetaVariant::Lovasz, &w, &opts)
            .unwrap()
            .value;
        assert!(a <= t + 1e-6, "seed {seed}: alpha {a} <= theta {t}");
    }
}
