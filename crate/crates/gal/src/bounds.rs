//! Finite power tables: alpha(G^(x)n)^(1/n) and the clique-cover roots for
//! both products, next to theta(G) and alpha*(G). No limit is claimed; the
//! table only reports what the exact solvers can reach.

use crate::coloring::sigma;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::alpha_unweighted;
use crate::packing::alpha_star;
use crate::rational::{self, Rational};
use crate::theta::{lovasz_theta, ThetaOptions};

#[derive(Clone, Debug)]
pub struct PowerRow {
    pub n: u32,
    pub alpha: u64,
    pub alpha_root: f64,
    pub sigma_strong: u64,
    pub sigma_strong_root: f64,
    pub sigma_disjunctive: u64,
    pub sigma_disjunctive_root: f64,
}

#[derive(Clone, Debug)]
pub struct AsymptoticTable {
    pub rows: Vec<PowerRow>,
    pub theta: f64,
    pub alpha_star: Rational,
}

pub const DEFAULT_POWER_GUARD: usize = 40;

/// Exact parameters of G^(x)n and G^(*)n for n <= n_max, with the guard on
/// the power's vertex count.
pub fn asymptotic_bounds(
    g: &Graph,
    n_max: u32,
    guard: usize,
    theta_opts: &ThetaOptions,
) -> Result<AsymptoticTable> {
    if n_max < 1 {
        return Err(Error::invalid("n_max must be >= 1"));
    }
    let theta = lovasz_theta(g, theta_opts)?.value;
    let star = alpha_star(g)?.value;

    let mut rows = Vec::new();
    let mut strong = g.clone();
    let mut disj = g.clone();
    for n in 1..=n_max {
        if n > 1 {
            let next_size = strong.n() * g.n();
            if next_size > guard {
                return Err(Error::guard(format!("power G^{n}"), next_size, guard));
            }
            strong = strong.strong_product(g);
            disj = disj.disjunctive_product(g);
        } else if g.n() > guard {
            return Err(Error::guard("graph", g.n(), guard));
        }
        let (a, _) = alpha_unweighted(&strong)?;
        let (ss, _) = sigma(&strong)?;
        let (sd, _) = sigma(&disj)?;
        let root = |x: u64| (x as f64).powf(1.0 / n as f64);
        rows.push(PowerRow {
            n,
            alpha: a,
            alpha_root: root(a),
            sigma_strong: ss as u64,
            sigma_strong_root: root(ss as u64),
            sigma_disjunctive: sd as u64,
            sigma_disjunctive_root: root(sd as u64),
        });
    }
    Ok(AsymptoticTable {
        rows,
        theta,
        alpha_star: star,
    })
}

impl AsymptoticTable {
    /// Per-row sandwich: alpha-root <= theta <= alpha* <= sigma-strong-root.
    pub fn rows_respect_sandwich(&self, tol: f64) -> bool {
        let star = rational::to_f64(&self.alpha_star);
        self.rows.iter().all(|r| {
            r.alpha_root <= self.theta + tol
                && self.theta <= star + tol
                && star <= r.sigma_strong_root + tol
        })
    }
}
