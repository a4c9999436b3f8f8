//! Certified Lovasz / Schrijver / Szegedy numbers, weighted and unweighted.
//!
//! Each solve returns both sides of the duality: a primal matrix B (feasible
//! for the variant's pattern, trace 1, PSD) and a dual pair (lambda, Z) with
//! Z - Pi PSD, constant diagonal lambda and the variant's sign pattern. The
//! reported value is tr(B Pi); acceptance is defined purely by the two
//! feasibility residuals and the duality gap, so correctness is checkable
//! without trusting the solver internals.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sdp::{solve_conic, ConRow, ConicProblem, IpmOptions, PsdCoef};
use crate::weights::Weights;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaVariant {
    /// max tr B Pi, B_vw = 0 on edges.
    Lovasz,
    /// Additionally B_vw >= 0 everywhere (Schrijver's theta-minus).
    SchrijverMinus,
    /// Only B_vw <= 0 on edges (Szegedy's theta-plus).
    SzegedyPlus,
}

impl ThetaVariant {
    pub fn name(self) -> &'static str {
        match self {
            ThetaVariant::Lovasz => "theta",
            ThetaVariant::SchrijverMinus => "theta_minus",
            ThetaVariant::SzegedyPlus => "theta_plus",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ThetaProgram {
    pub graph: Graph,
    pub variant: ThetaVariant,
    pub weights: Weights,
}

impl ThetaProgram {
    pub fn new(graph: Graph, variant: ThetaVariant, weights: Weights) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::invalid("theta program needs at least one vertex"));
        }
        if weights.len() != graph.n() {
            return Err(Error::invalid(format!(
                "weight count {} != vertex count {}",
                weights.len(),
                graph.n()
            )));
        }
        Ok(ThetaProgram {
            graph,
            variant,
            weights,
        })
    }

    pub fn unweighted(graph: Graph, variant: ThetaVariant) -> Result<Self> {
        let n = graph.n();
        Self::new(graph, variant, Weights::ones(n))
    }

    /// Objective matrix Pi with entries sqrt(p(v) p(w)); rank one, entrywise
    /// nonnegative, equal to the all-ones matrix for unit weights.
    pub fn objective(&self) -> DMatrix<f64> {
        let w = self.weights.as_f64();
        let n = w.len();
        let sq: Vec<f64> = w.iter().map(|x| x.sqrt()).collect();
        DMatrix::from_fn(n, n, |i, j| sq[i] * sq[j])
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ThetaOptions {
    pub tol_gap: f64,
    pub tol_feas: f64,
    pub max_iter: usize,
}

impl Default for ThetaOptions {
    fn default() -> Self {
        ThetaOptions {
            tol_gap: 1e-7,
            tol_feas: 1e-8,
            max_iter: 500,
        }
    }
}

/// An accepted solve: value plus both certificates and their measured
/// residuals.
#[derive(Clone, Debug)]
pub struct CertifiedValue {
    /// tr(B Pi) from the primal certificate.
    pub value: f64,
    pub primal: DMatrix<f64>,
    pub dual_lambda: f64,
    pub dual_z: DMatrix<f64>,
    pub primal_residual: f64,
    pub dual_residual: f64,
    /// lambda - tr(B Pi), guaranteed <= tol_gap * (1 + |value|).
    pub gap: f64,
    pub iterations: usize,
    pub program: ThetaProgram,
}

pub fn solve_theta(prog: &ThetaProgram, opts: &ThetaOptions) -> Result<CertifiedValue> {
    if opts.tol_gap <= 0.0 {
        return Err(Error::invalid("tol_gap must be positive"));
    }
    let conic = assemble(prog);
    // Push the interior point well past the requested certificate
    // tolerances; retry once from a larger dual start if the first attempt
    // stalls early.
    let base = IpmOptions {
        max_iter: opts.max_iter,
        eps_feas: (opts.tol_feas * 0.25).min(5e-9),
        eps_gap: (opts.tol_gap * 0.25).min(5e-9),
        step_frac: 0.95,
        dual_start: 0.0,
    };
    let attempts = [
        base,
        IpmOptions {
            dual_start: 100.0 * (prog.objective().amax() + 1.0),
            step_frac: 0.9,
            ..base
        },
    ];
    let mut last: Option<CertifiedValue> = None;
    for ipm in &attempts {
        let sol = solve_conic(&conic, ipm);
        let cert = certify(prog, &conic, sol.x.clone(), &sol.y, sol.iterations);
        if accepts(&cert, opts) {
            return Ok(cert);
        }
        last = Some(cert);
    }
    let cert = last.expect("at least one attempt");
    Err(Error::Solver(format!(
        "{} did not reach certificate tolerances: primal residual {:.2e}, dual residual {:.2e}, gap {:.2e} (value {:.9})",
        prog.variant.name(),
        cert.primal_residual,
        cert.dual_residual,
        cert.gap,
        cert.value,
    )))
}

fn accepts(cert: &CertifiedValue, opts: &ThetaOptions) -> bool {
    let scale = 1.0 + cert.value.abs();
    cert.primal_residual <= opts.tol_feas
        && cert.dual_residual <= opts.tol_feas
        && cert.gap <= opts.tol_gap * scale
        && cert.gap >= -1e-6 * scale
}

fn assemble(prog: &ThetaProgram) -> ConicProblem {
    let g = &prog.graph;
    let n = g.n();
    let mut rows = vec![ConRow {
        psd: PsdCoef::Identity,
        lin: None,
        rhs: 1.0,
    }];
    let mut lin_count = 0usize;
    match prog.variant {
        ThetaVariant::Lovasz => {
            for (u, v) in g.edges() {
                rows.push(ConRow {
                    psd: PsdCoef::Pair(u, v),
                    lin: None,
                    rhs: 0.0,
                });
            }
        }
        ThetaVariant::SchrijverMinus => {
            for (u, v) in g.edges() {
                rows.push(ConRow {
                    psd: PsdCoef::Pair(u, v),
                    lin: None,
                    rhs: 0.0,
                });
            }
            // 2 X_uv - t = 0 with t >= 0 makes every non-adjacent entry
            // nonnegative (diagonal and edge entries are covered already).
            for (u, v) in g.non_edges() {
                rows.push(ConRow {
                    psd: PsdCoef::Pair(u, v),
                    lin: Some((lin_count, -1.0)),
                    rhs: 0.0,
                });
                lin_count += 1;
            }
        }
        ThetaVariant::SzegedyPlus => {
            // 2 X_uv + t = 0 with t >= 0 makes every edge entry nonpositive.
            for (u, v) in g.edges() {
                rows.push(ConRow {
                    psd: PsdCoef::Pair(u, v),
                    lin: Some((lin_count, 1.0)),
                    rhs: 0.0,
                });
                lin_count += 1;
            }
        }
    }
    ConicProblem {
        dim: n,
        lin_count,
        objective: -prog.objective(),
        rows,
    }
}

/// Builds the certificate pair from the solver state and measures the true
/// residuals. Z is assembled exactly from the multipliers (lambda I minus the
/// pattern entries), so its diagonal and zero pattern hold by construction;
/// B is the returned primal iterate.
fn certify(
    prog: &ThetaProgram,
    conic: &ConicProblem,
    b: DMatrix<f64>,
    y: &nalgebra::DVector<f64>,
    iterations: usize,
) -> CertifiedValue {
    let g = &prog.graph;
    let n = g.n();
    let pi = prog.objective();
    let value = pi.dot(&b);
    let lambda = -y[0];
    let mut z = DMatrix::<f64>::identity(n, n) * lambda;
    for (i, row) in conic.rows.iter().enumerate().skip(1) {
        if let PsdCoef::Pair(u, v) = row.psd {
            z[(u, v)] -= y[i];
            z[(v, u)] -= y[i];
        }
    }

    // Primal residuals: trace, pattern, PSD-ness.
    let mut primal_residual = (b.trace() - 1.0).abs();
    for (u, v) in g.edges() {
        let entry = b[(u, v)];
        match prog.variant {
            ThetaVariant::Lovasz | ThetaVariant::SchrijverMinus => {
                primal_residual = primal_residual.max(entry.abs());
            }
            ThetaVariant::SzegedyPlus => {
                primal_residual = primal_residual.max(entry.max(0.0));
            }
        }
    }
    if prog.variant == ThetaVariant::SchrijverMinus {
        for (u, v) in g.non_edges() {
            primal_residual = primal_residual.max((-b[(u, v)]).max(0.0));
        }
    }
    primal_residual = primal_residual.max(-min_eigenvalue(&b));

    // Dual residuals: Z - Pi PSD plus the variant's sign pattern.
    let mut dual_residual = (-min_eigenvalue(&(&z - &pi))).max(0.0);
    match prog.variant {
        ThetaVariant::Lovasz => {}
        ThetaVariant::SchrijverMinus => {
            for (u, v) in g.non_edges() {
                dual_residual = dual_residual.max(z[(u, v)].max(0.0));
            }
        }
        ThetaVariant::SzegedyPlus => {
            for (u, v) in g.edges() {
                dual_residual = dual_residual.max((-z[(u, v)]).max(0.0));
            }
        }
    }

    CertifiedValue {
        value,
        primal: b,
        dual_lambda: lambda,
        dual_z: z,
        primal_residual,
        dual_residual,
        gap: lambda - value,
        iterations,
        program: prog.clone(),
    }
}

fn min_eigenvalue(m: &DMatrix<f64>) -> f64 {
    let sym = (m + m.transpose()) * 0.5;
    sym.symmetric_eigen().eigenvalues.min()
}

pub fn lovasz_theta(g: &Graph, opts: &ThetaOptions) -> Result<CertifiedValue> {
    solve_theta(
        &ThetaProgram::unweighted(g.clone(), ThetaVariant::Lovasz)?,
        opts,
    )
}

pub fn theta_minus(g: &Graph, opts: &ThetaOptions) -> Result<CertifiedValue> {
    solve_theta(
        &ThetaProgram::unweighted(g.clone(), ThetaVariant::SchrijverMinus)?,
        opts,
    )
}

pub fn theta_plus(g: &Graph, opts: &ThetaOptions) -> Result<CertifiedValue> {
    solve_theta(
        &ThetaProgram::unweighted(g.clone(), ThetaVariant::SzegedyPlus)?,
        opts,
    )
}

pub fn weighted_theta(
    g: &Graph,
    variant: ThetaVariant,
    weights: &Weights,
    opts: &ThetaOptions,
) -> Result<CertifiedValue> {
    solve_theta(
        &ThetaProgram::new(g.clone(), variant, weights.clone())?,
        opts,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty_graph, petersen, random_gnp, Graph};
    use crate::rational::rat;

    fn opts() -> ThetaOptions {
        ThetaOptions::default()
    }

    /// Closed form for odd cycles: theta(C_n) = n cos(pi/n) / (1 + cos(pi/n)).
    fn theta_odd_cycle(n: usize) -> f64 {
        let c = (std::f64::consts::PI / n as f64).cos();
        n as f64 * c / (1.0 + c)
    }

    #[test]
    fn pentagon_is_sqrt5() {
        let cert = lovasz_theta(&cycle(5).unwrap(), &opts()).unwrap();
        assert!((cert.value - 5f64.sqrt()).abs() < 1e-7, "{}", cert.value);
        assert!(cert.gap.abs() <= 1e-7 * (1.0 + cert.value));
        assert!(cert.primal_residual <= 1e-8);
        assert!(cert.dual_residual <= 1e-8);
    }

    #[test]
    fn seven_cycle_closed_form() {
        let cert = lovasz_theta(&cycle(7).unwrap(), &opts()).unwrap();
        assert!((cert.value - theta_odd_cycle(7)).abs() < 1e-6);
        assert!((cert.value - 3.3176672).abs() < 1e-6);
        // The dual certificate independently brackets the value.
        assert!(cert.dual_lambda >= cert.value - 1e-9);
        assert!(cert.dual_lambda <= cert.value + 1e-6);
    }

    #[test]
    fn empty_and_complete() {
        for n in 1..7 {
            let e = lovasz_theta(&empty_graph(n).unwrap(), &opts()).unwrap();
            assert!((e.value - n as f64).abs() < 1e-7, "theta(empty {n})");
            let k = lovasz_theta(&complete(n).unwrap(), &opts()).unwrap();
            assert!((k.value - 1.0).abs() < 1e-7, "theta(K{n})");
        }
    }

    #[test]
    fn variants_coincide_on_pentagon() {
        let c5 = cycle(5).unwrap();
        let tm = theta_minus(&c5, &opts()).unwrap();
        let tp = theta_plus(&c5, &opts()).unwrap();
        assert!((tm.value - 5f64.sqrt()).abs() < 1e-6, "{}", tm.value);
        assert!((tp.value - 5f64.sqrt()).abs() < 1e-6, "{}", tp.value);
    }

    #[test]
    fn petersen_theta_is_four() {
        let cert = lovasz_theta(&petersen(), &opts()).unwrap();
        assert!((cert.value - 4.0).abs() < 1e-6, "{}", cert.value);
    }

    #[test]
    fn sandwich_ordering_on_random_graphs() {
        for seed in 0..6 {
            let g = random_gnp(7, 0.5, seed).unwrap();
            let tm = theta_minus(&g, &opts()).unwrap().value;
            let th = lovasz_theta(&g, &opts()).unwrap().value;
            let tp = theta_plus(&g, &opts()).unwrap().value;
            assert!(tm <= th + 2e-7, "seed {seed}: {tm} <= {th}");
            assert!(th <= tp + 2e-7, "seed {seed}: {th} <= {tp}");
        }
    }

    #[test]
    fn weighted_unit_equals_unweighted() {
        let g = random_gnp(6, 0.5, 9).unwrap();
        let a = lovasz_theta(&g, &opts()).unwrap();
        let b = weighted_theta(&g, ThetaVariant::Lovasz, &Weights::ones(6), &opts()).unwrap();
        assert_eq!(a.value, b.value, "same code path, identical result");
    }

    #[test]
    fn weighted_scaling_and_extremes() {
        let c5 = cycle(5).unwrap();
        let w = Weights::exact(vec![rat(3, 2); 5]).unwrap();
        let cert = weighted_theta(&c5, ThetaVariant::Lovasz, &w, &opts()).unwrap();
        assert!((cert.value - 1.5 * 5f64.sqrt()).abs() < 1e-6);

        // theta(empty, p) = sum p; theta(complete, p) = max p.
        let e4 = empty_graph(4).unwrap();
        let w = Weights::exact(vec![rat(1, 2), rat(2, 1), rat(3, 1), rat(1, 4)]).unwrap();
        let cert = weighted_theta(&e4, ThetaVariant::Lovasz, &w, &opts()).unwrap();
        assert!((cert.value - 5.75).abs() < 1e-6);
        let k4 = complete(4).unwrap();
        let cert = weighted_theta(&k4, ThetaVariant::Lovasz, &w, &opts()).unwrap();
        assert!((cert.value - 3.0).abs() < 1e-6);
    }

    #[test]
    fn zero_weight_vertices_stay_in_program() {
        let c5 = cycle(5).unwrap();
        let w =
            Weights::exact(vec![rat(1, 1), rat(0, 1), rat(1, 1), rat(1, 1), rat(0, 1)]).unwrap();
        let cert = weighted_theta(&c5, ThetaVariant::Lovasz, &w, &opts()).unwrap();
        assert_eq!(cert.primal.nrows(), 5, "indexing stays stable");
        // Weight sits on {0, 2, 3}; the heaviest independent set among those
        // picks two non-adjacent vertices: value 2.
        assert!((cert.value - 2.0).abs() < 1e-6, "{}", cert.value);
    }

    #[test]
    fn deterministic() {
        let g = random_gnp(7, 0.5, 4).unwrap();
        let a = lovasz_theta(&g, &opts()).unwrap();
        let b = lovasz_theta(&g, &opts()).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.iterations, b.iterations);
    }

    #[test]
    fn non_convergence_is_reported() {
        let g = random_gnp(7, 0.5, 2).unwrap();
        let starved = ThetaOptions {
            max_iter: 2,
            ..opts()
        };
        let err = lovasz_theta(&g, &starved);
        assert!(
            matches!(err, Err(crate::error::Error::Solver(_))),
            "iteration starvation must surface as a solver error"
        );
    }

    #[test]
    fn rejects_empty_graph_and_bad_tol() {
        let g = Graph::empty(0);
        assert!(ThetaProgram::unweighted(g, ThetaVariant::Lovasz).is_err());
        let c5 = cycle(5).unwrap();
        let bad = ThetaOptions {
            tol_gap: 0.0,
            ..opts()
        };
        assert!(solve_theta(
            &ThetaProgram::unweighted(c5, ThetaVariant::Lovasz).unwrap(),
            &bad
        )
        .is_err());
    }

    #[test]
    fn multiplicativity_strong_and_disjunctive() {
        let c5 = cycle(5).unwrap();
        let g6 = random_gnp(5, 0.5, 11).unwrap();
        for (g, h) in [(&c5, &g6), (&g6, &g6)] {
            let tg = lovasz_theta(g, &opts()).unwrap().value;
            let th = lovasz_theta(h, &opts()).unwrap().value;
            let ts = lovasz_theta(&g.strong_product(h), &opts()).unwrap().value;
            let td = lovasz_theta(&g.disjunctive_product(h), &opts())
                .unwrap()
                .value;
            let prod = tg * th;
            assert!((ts - prod).abs() <= 1e-4 * prod, "strong: {ts} vs {prod}");
            assert!(
                (td - prod).abs() <= 1e-4 * prod,
                "disjunctive: {td} vs {prod}"
            );
        }
    }

    #[test]
    fn one_sided_variant_product_bounds() {
        let g = random_gnp(5, 0.5, 21).unwrap();
        let h = random_gnp(5, 0.5, 22).unwrap();
        let tm_g = theta_minus(&g, &opts()).unwrap().value;
        let tm_h = theta_minus(&h, &opts()).unwrap().value;
        let tm_prod = theta_minus(&g.strong_product(&h), &opts()).unwrap().value;
        assert!(
            tm_prod >= tm_g * tm_h - 1e-5,
            "theta-(GxH) >= theta-(G) theta-(H)"
        );
        let tp_g = theta_plus(&g, &opts()).unwrap().value;
        let tp_h = theta_plus(&h, &opts()).unwrap().value;
        let tp_prod = theta_plus(&g.disjunctive_product(&h), &opts())
            .unwrap()
            .value;
        assert!(
            tp_prod <= tp_g * tp_h + 1e-5,
            "theta+(G*H) <= theta+(G) theta+(H)"
        );
    }
}
