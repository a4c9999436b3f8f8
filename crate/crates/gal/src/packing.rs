//! Fractional packing number alpha*(G, p) and its dual fractional clique
//! cover, both exact.
//!
//! Constraints are generated over maximal cliques only; non-maximal cliques
//! are dominated and change nothing (spot-checked in tests).

use num::{One, Zero};

use crate::cliques::{maximal_cliques, CliqueSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::{solve_lp, LpProblem, LpStatus};
use crate::rational::Rational;
use crate::weights::Weights;

#[derive(Clone, Debug)]
pub struct Packing {
    pub value: Rational,
    /// Optimal packing t_v, one per vertex.
    pub packing: Vec<Rational>,
    /// Dual cover weights s_C, aligned with `cliques`.
    pub cover: Vec<Rational>,
    pub cliques: CliqueSet,
}

/// alpha*(G, p): maximize sum p(v) t_v subject to sum_{v in C} t_v <= 1 for
/// every (maximal) clique. Weights must be exact; strong duality is witnessed
/// exactly by construction.
pub fn fractional_packing(g: &Graph, weights: &Weights) -> Result<Packing> {
    let w = weights.as_exact()?;
    if w.len() != g.n() {
        return Err(Error::invalid(format!(
            "weight count {} != vertex count {}",
            w.len(),
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok(Packing {
            value: Rational::zero(),
            packing: vec![],
            cover: vec![],
            cliques: maximal_cliques(g),
        });
    }
    let cliques = maximal_cliques(g);
    let rows: Vec<Vec<Rational>> = cliques
        .iter()
        .map(|c| {
            let mut row = vec![Rational::zero(); g.n()];
            for v in c.iter() {
                row[v] = Rational::one();
            }
            row
        })
        .collect();
    let problem = LpProblem {
        objective: w.to_vec(),
        rows,
        rhs: vec![Rational::one(); cliques.len()],
    };
    let sol = solve_lp(&problem)?;
    if sol.status != LpStatus::Optimal {
        return Err(Error::Solver(format!(
            "packing LP ended with status {:?}",
            sol.status
        )));
    }
    Ok(Packing {
        value: sol.objective,
        packing: sol.primal,
        cover: sol.dual,
        cliques,
    })
}

/// Unweighted alpha*(G).
pub fn alpha_star(g: &Graph) -> Result<Packing> {
    fractional_packing(g, &Weights::ones(g.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, random_gnp};
    use crate::independence::alpha_unweighted;
    use crate::rational::{rat, rat_int, rat_u64};

    #[test]
    fn pentagon() {
        let p = alpha_star(&cycle(5).unwrap()).unwrap();
        assert_eq!(p.value, rat(5, 2));
        assert_eq!(p.packing, vec![rat(1, 2); 5]);
        let dual_sum: Rational = p.cover.iter().sum();
        assert_eq!(dual_sum, rat(5, 2), "strong duality, exactly");
    }

    #[test]
    fn complete_graphs() {
        for n in 1..6 {
            let p = alpha_star(&complete(n).unwrap()).unwrap();
            assert_eq!(p.value, rat_int(1), "single clique constraint");
        }
    }

    #[test]
    fn weighted_complete_picks_max() {
        let g = complete(3).unwrap();
        let w = Weights::exact(vec![rat(1, 2), rat(7, 3), rat(2, 1)]).unwrap();
        let p = fractional_packing(&g, &w).unwrap();
        assert_eq!(p.value, rat(7, 3));
    }

    #[test]
    fn real_weights_rejected() {
        let g = cycle(5).unwrap();
        let w = Weights::real(vec![1.0; 5]).unwrap();
        assert!(fractional_packing(&g, &w).is_err());
    }

    #[test]
    fn strong_product_multiplicativity_pentagon() {
        let c5 = cycle(5).unwrap();
        let p = alpha_star(&c5.strong_product(&c5)).unwrap();
        assert_eq!(p.value, rat(25, 4), "alpha*(C5 (x) C5) = alpha*(C5)^2");
    }

    #[test]
    fn multiplicativity_random_pairs() {
        for seed in 0..3 {
            let g = random_gnp(5, 0.5, seed).unwrap();
            let h = random_gnp(5, 0.5, seed + 10).unwrap();
            let vg = alpha_star(&g).unwrap().value;
            let vh = alpha_star(&h).unwrap().value;
            let vp = alpha_star(&g.strong_product(&h)).unwrap().value;
            assert_eq!(vp, vg * vh, "seed {seed}");
        }
    }

    #[test]
    fn sandwiched_between_alpha_and_sigma() {
        for seed in 0..6 {
            let g = random_gnp(8, 0.5, seed).unwrap();
            let (a, _) = alpha_unweighted(&g).unwrap();
            let star = alpha_star(&g).unwrap().value;
            let (s, _) = crate::coloring::sigma(&g).unwrap();
            assert!(rat_u64(a) <= star, "alpha <= alpha*");
            assert!(star <= rat_u64(s as u64), "alpha* <= sigma");
        }
    }

    #[test]
    fn vertex_transitive_closed_form() {
        // On vertex-transitive graphs alpha* = n / omega; an independent
        // route through the clique number.
        use crate::graph::petersen;
        for (g, n, omega) in [
            (cycle(5).unwrap(), 5u64, 2u64),
            (cycle(7).unwrap(), 7, 2),
            (petersen(), 10, 2),
            (complete(5).unwrap(), 5, 5),
            (cycle(5).unwrap().strong_product(&cycle(5).unwrap()), 25, 4),
        ] {
            let p = alpha_star(&g).unwrap();
            assert_eq!(
                p.value,
                Rational::new(n.into(), omega.into()),
                "alpha*({n}-vertex) = {n}/{omega}"
            );
            assert_eq!(maximal_cliques(&g).max_size() as u64, omega);
        }
    }

    #[test]
    fn non_maximal_cliques_change_nothing() {
        for seed in 0..4 {
            let g = random_gnp(8, 0.5, seed).unwrap();
            let maximal_only = alpha_star(&g).unwrap().value;
            // Rebuild the LP over every clique: all single vertices, all
            // edges, and the maximal cliques.
            let cliques = maximal_cliques(&g);
            let mut rows: Vec<Vec<Rational>> = vec![];
            for v in 0..g.n() {
                let mut r = vec![Rational::zero(); g.n()];
                r[v] = Rational::one();
                rows.push(r);
            }
            for (u, v) in g.edges() {
                let mut r = vec![Rational::zero(); g.n()];
                r[u] = Rational::one();
                r[v] = Rational::one();
                rows.push(r);
            }
            for c in cliques.iter() {
                let mut r = vec![Rational::zero(); g.n()];
                for v in c.iter() {
                    r[v] = Rational::one();
                }
                rows.push(r);
            }
            let rhs = vec![Rational::one(); rows.len()];
            let sol = solve_lp(&LpProblem {
                objective: vec![Rational::one(); g.n()],
                rows,
                rhs,
            })
            .unwrap();
            assert_eq!(sol.objective, maximal_only, "seed {seed}");
        }
    }
}
