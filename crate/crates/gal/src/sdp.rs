//! Dense primal-dual interior-point solver for the conic programs behind the
//! theta family.
//!
//! Problems have one matrix block X in the PSD cone plus an optional
//! nonnegative slack vector t, and every constraint matrix is either the
//! identity (the trace row) or a symmetrized single pair E_vw + E_wv. The
//! solver is an infeasible-start HKM predictor-corrector; the sparse
//! constraint structure makes the Schur complement O(m^2) to assemble.
//!
//! Everything is deterministic: fixed scaled-identity start, no randomness,
//! sequential linear algebra.

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};

#[derive(Clone, Copy, Debug)]
pub enum PsdCoef {
    /// Identity matrix (the trace constraint).
    Identity,
    /// E_vw + E_wv with v != w; inner product with X is 2 X_vw.
    Pair(usize, usize),
}

#[derive(Clone, Debug)]
pub struct ConRow {
    pub psd: PsdCoef,
    /// Slack coupling: (slack index, coefficient). Each slack appears in
    /// exactly one row, with coefficient +1 or -1.
    pub lin: Option<(usize, f64)>,
    pub rhs: f64,
}

/// min <C, X> subject to the rows, X PSD, t >= 0 (slack objective is zero).
#[derive(Clone, Debug)]
pub struct ConicProblem {
    pub dim: usize,
    pub lin_count: usize,
    pub objective: DMatrix<f64>,
    pub rows: Vec<ConRow>,
}

#[derive(Clone, Copy, Debug)]
pub struct IpmOptions {
    pub max_iter: usize,
    /// Target on scaled primal/dual residual max-norms.
    pub eps_feas: f64,
    /// Target on the relative primal-dual gap.
    pub eps_gap: f64,
    /// Fraction of the way to the cone boundary taken each step.
    pub step_frac: f64,
    /// Initial scale for the dual block; 0 derives it from the data.
    pub dual_start: f64,
}

impl Default for IpmOptions {
    fn default() -> Self {
        IpmOptions {
            max_iter: 500,
            eps_feas: 2e-9,
            eps_gap: 2e-9,
            step_frac: 0.95,
            dual_start: 0.0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConicSolution {
    pub x: DMatrix<f64>,
    pub slack: DVector<f64>,
    pub y: DVector<f64>,
    pub dual_psd: DMatrix<f64>,
    pub dual_slack: DVector<f64>,
    pub iterations: usize,
    pub primal_infeasibility: f64,
    pub dual_infeasibility: f64,
    pub relative_gap: f64,
    pub converged: bool,
}

struct Direction {
    dx: DMatrix<f64>,
    dt: DVector<f64>,
    dy: DVector<f64>,
    ds_mat: DMatrix<f64>,
    ds_vec: DVector<f64>,
}

pub fn solve_conic(p: &ConicProblem, opts: &IpmOptions) -> ConicSolution {
    let n = p.dim;
    let k = p.lin_count;
    let m = p.rows.len();
    debug_assert!(n >= 1 && m >= 1);

    let norm_c = p.objective.amax().max(1.0);
    let dual_start = if opts.dual_start > 0.0 {
        opts.dual_start
    } else {
        norm_c + (n as f64).sqrt()
    };

    let mut x = DMatrix::<f64>::identity(n, n);
    let mut t = DVector::<f64>::repeat(k, 1.0);
    let mut y = DVector::<f64>::zeros(m);
    let mut s_mat = DMatrix::<f64>::identity(n, n) * dual_start;
    let mut s_vec = DVector::<f64>::repeat(k, dual_start);

    let b: DVector<f64> = DVector::from_iterator(m, p.rows.iter().map(|r| r.rhs));
    let norm_b = b.amax().max(1.0);
    let cone_size = (n + k) as f64;

    let mut best: Option<(f64, ConicSolution)> = None;
    let mut iterations = 0usize;
    let mut stalls = 0usize;
    let mut best_score = f64::INFINITY;
    let mut last_improvement = 0usize;

    for iter in 0..opts.max_iter {
        iterations = iter;
        // Residuals.
        let mut rp = DVector::<f64>::zeros(m);
        for (i, row) in p.rows.iter().enumerate() {
            rp[i] = row.rhs - row_dot(row, &x, &t);
        }
        let mut rd_mat = &p.objective - &s_mat;
        for (i, row) in p.rows.iter().enumerate() {
            add_psd(&mut rd_mat, &row.psd, -y[i], n);
        }
        let mut rd_vec = DVector::<f64>::zeros(k);
        for (i, row) in p.rows.iter().enumerate() {
            if let Some((l, kappa)) = row.lin {
                rd_vec[l] = -s_vec[l] - y[i] * kappa;
            }
        }

        let pobj = p.objective.dot(&x);
        let dobj = b.dot(&y);
        let mu = (x.dot(&s_mat) + t.dot(&s_vec)) / cone_size;
        let pinf = rp.amax() / norm_b;
        let dinf = rd_mat.amax().max(if k > 0 { rd_vec.amax() } else { 0.0 }) / norm_c;
        let relgap = (pobj - dobj).abs() / (1.0 + pobj.abs() + dobj.abs());

        let score = pinf.max(dinf).max(relgap);
        if best.as_ref().is_none_or(|(s, _)| score < *s) {
            best = Some((
                score,
                ConicSolution {
                    x: symmetrize(&x),
                    slack: t.clone(),
                    y: y.clone(),
                    dual_psd: s_mat.clone(),
                    dual_slack: s_vec.clone(),
                    iterations: iter,
                    primal_infeasibility: pinf,
                    dual_infeasibility: dinf,
                    relative_gap: relgap,
                    converged: false,
                },
            ));
        }
        if score < 0.98 * best_score {
            best_score = score;
            last_improvement = iter;
        }
        if pinf <= opts.eps_feas && dinf <= opts.eps_feas && relgap <= opts.eps_gap {
            let (_, mut sol) = best.expect("recorded");
            sol.converged = true;
            sol.iterations = iter;
            return sol;
        }
        // Degenerate faces can leave the iteration crawling at the f64
        // floor; once nothing improves we return the best iterate and let
        // the certificate check decide.
        if iter > last_improvement + 12 {
            break;
        }

        // Factorizations.
        let Some(chol_s) = Cholesky::new(symmetrize(&s_mat)) else {
            break;
        };
        let s_inv = chol_s.inverse();
        let s_inv_x = &s_inv * &x;
        let tr_x_sinv = s_inv_x.trace();

        // Schur complement; symmetric because all blocks are.
        let mut schur = DMatrix::<f64>::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let v = schur_entry(
                    &p.rows[i].psd,
                    &p.rows[j].psd,
                    &x,
                    &s_inv,
                    &s_inv_x,
                    tr_x_sinv,
                );
                schur[(i, j)] = v;
                schur[(j, i)] = v;
            }
        }
        for (i, row) in p.rows.iter().enumerate() {
            if let Some((l, _)) = row.lin {
                schur[(i, i)] += t[l] / s_vec[l];
            }
        }
        let Some(chol_m) = cholesky_with_ridge(schur) else {
            break;
        };

        let ctx = StepContext {
            problem: p,
            x: &x,
            t: &t,
            s_vec: &s_vec,
            rd_mat: &rd_mat,
            rd_vec: &rd_vec,
            rp: &rp,
            s_inv: &s_inv,
            chol_m: &chol_m,
        };

        // Predictor (affine scaling).
        let aff = ctx.direction(0.0, None, None);
        let pa = max_step(&x, &aff.dx, &t, &aff.dt).min(1.0);
        let da = max_step(&s_mat, &aff.ds_mat, &s_vec, &aff.ds_vec).min(1.0);
        let mu_aff = ((&x + &aff.dx * pa).dot(&(&s_mat + &aff.ds_mat * da))
            + (&t + &aff.dt * pa).dot(&(&s_vec + &aff.ds_vec * da)))
            / cone_size;
        let sigma = (mu_aff / mu).powi(3).clamp(1e-12, 1.0);

        // Corrector with the Mehrotra cross terms.
        let cross_mat = &aff.dx * &aff.ds_mat;
        let cross_vec = aff.dt.component_mul(&aff.ds_vec);
        let dir = ctx.direction(sigma * mu, Some(&cross_mat), Some(&cross_vec));

        let ap = (opts.step_frac * max_step(&x, &dir.dx, &t, &dir.dt)).min(1.0);
        let ad = (opts.step_frac * max_step(&s_mat, &dir.ds_mat, &s_vec, &dir.ds_vec)).min(1.0);

        x += &dir.dx * ap;
        t += &dir.dt * ap;
        y += &dir.dy * ad;
        s_mat += &dir.ds_mat * ad;
        s_vec += &dir.ds_vec * ad;
        x = symmetrize(&x);
        s_mat = symmetrize(&s_mat);

        if ap < 1e-4 && ad < 1e-4 {
            stalls += 1;
            if stalls >= 5 {
                break;
            }
        } else {
            stalls = 0;
        }
        if mu < 1e-16 {
            break;
        }
    }

    let (_, mut sol) = best.expect("at least one iterate recorded");
    sol.iterations = iterations;
    sol
}

struct StepContext<'a> {
    problem: &'a ConicProblem,
    x: &'a DMatrix<f64>,
    t: &'a DVector<f64>,
    s_vec: &'a DVector<f64>,
    rd_mat: &'a DMatrix<f64>,
    rd_vec: &'a DVector<f64>,
    rp: &'a DVector<f64>,
    s_inv: &'a DMatrix<f64>,
    chol_m: &'a Cholesky<f64, Dyn>,
}

impl StepContext<'_> {
    /// Newton direction for target nu, with optional Mehrotra cross terms.
    /// Solves the Schur system M dy = rp - <A_i, R3> - lin terms, with
    /// R3 = nu Sinv - X - (K + X Rd) Sinv, then back-substitutes.
    fn direction(
        &self,
        nu: f64,
        cross_mat: Option<&DMatrix<f64>>,
        cross_vec: Option<&DVector<f64>>,
    ) -> Direction {
        let p = self.problem;
        let n = p.dim;
        let k = p.lin_count;
        let m = p.rows.len();

        let mut inner = self.x * self.rd_mat;
        if let Some(km) = cross_mat {
            inner += km;
        }
        let r3 = self.s_inv * nu - self.x - (&inner * self.s_inv);

        let mut rhs = DVector::<f64>::zeros(m);
        for (i, row) in p.rows.iter().enumerate() {
            let mut v = self.rp[i] - psd_inner(&row.psd, &r3);
            if let Some((l, kappa)) = row.lin {
                let cr = cross_vec.map_or(0.0, |c| c[l]);
                v -= kappa * (nu - self.t[l] * self.s_vec[l] - cr - self.t[l] * self.rd_vec[l])
                    / self.s_vec[l];
            }
            rhs[i] = v;
        }
        let dy = self.chol_m.solve(&rhs);

        let mut ds_mat = self.rd_mat.clone();
        for (i, row) in p.rows.iter().enumerate() {
            add_psd(&mut ds_mat, &row.psd, -dy[i], n);
        }
        let mut ds_vec = DVector::<f64>::zeros(k);
        for (i, row) in p.rows.iter().enumerate() {
            if let Some((l, kappa)) = row.lin {
                ds_vec[l] = self.rd_vec[l] - dy[i] * kappa;
            }
        }

        let mut inner2 = self.x * &ds_mat;
        if let Some(km) = cross_mat {
            inner2 += km;
        }
        let dx_raw = self.s_inv * nu - self.x - (&inner2 * self.s_inv);
        let dx = symmetrize(&dx_raw);

        let mut dt = DVector::<f64>::zeros(k);
        for l in 0..k {
            let cr = cross_vec.map_or(0.0, |c| c[l]);
            dt[l] = (nu - self.t[l] * self.s_vec[l] - cr - self.t[l] * ds_vec[l]) / self.s_vec[l];
        }

        Direction {
            dx,
            dt,
            dy,
            ds_mat,
            ds_vec,
        }
    }
}

fn row_dot(row: &ConRow, x: &DMatrix<f64>, t: &DVector<f64>) -> f64 {
    let mut v = psd_inner(&row.psd, x);
    if let Some((l, kappa)) = row.lin {
        v += kappa * t[l];
    }
    v
}

fn psd_inner(coef: &PsdCoef, mat: &DMatrix<f64>) -> f64 {
    match *coef {
        PsdCoef::Identity => mat.trace(),
        PsdCoef::Pair(v, w) => mat[(v, w)] + mat[(w, v)],
    }
}

fn add_psd(mat: &mut DMatrix<f64>, coef: &PsdCoef, scale: f64, n: usize) {
    match *coef {
        PsdCoef::Identity => {
            for i in 0..n {
                mat[(i, i)] += scale;
            }
        }
        PsdCoef::Pair(v, w) => {
            mat[(v, w)] += scale;
            mat[(w, v)] += scale;
        }
    }
}

/// tr(A X B Sinv) for the two sparse coefficient shapes.
fn schur_entry(
    a: &PsdCoef,
    b: &PsdCoef,
    x: &DMatrix<f64>,
    s_inv: &DMatrix<f64>,
    s_inv_x: &DMatrix<f64>,
    tr_x_sinv: f64,
) -> f64 {
    match (*a, *b) {
        (PsdCoef::Identity, PsdCoef::Identity) => tr_x_sinv,
        (PsdCoef::Identity, PsdCoef::Pair(c, d)) | (PsdCoef::Pair(c, d), PsdCoef::Identity) => {
            s_inv_x[(d, c)] + s_inv_x[(c, d)]
        }
        (PsdCoef::Pair(a1, b1), PsdCoef::Pair(c, d)) => {
            x[(b1, c)] * s_inv[(d, a1)]
                + x[(b1, d)] * s_inv[(c, a1)]
                + x[(a1, c)] * s_inv[(d, b1)]
                + x[(a1, d)] * s_inv[(c, b1)]
        }
    }
}

fn symmetrize(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m + m.transpose()) * 0.5
}

fn cholesky_with_ridge(m: DMatrix<f64>) -> Option<Cholesky<f64, Dyn>> {
    let scale = m.diagonal().amax().max(1.0);
    if let Some(c) = Cholesky::new(m.clone()) {
        return Some(c);
    }
    for attempt in 1..=8 {
        let extra = scale * 1e-14 * 10f64.powi(attempt);
        let mut ridged = m.clone();
        for i in 0..ridged.nrows() {
            ridged[(i, i)] += extra;
        }
        if let Some(c) = Cholesky::new(ridged) {
            return Some(c);
        }
    }
    None
}

/// Largest step a keeping (X + a dX, t + a dt) in the cone; infinity when
/// unconstrained.
fn max_step(x: &DMatrix<f64>, dx: &DMatrix<f64>, t: &DVector<f64>, dt: &DVector<f64>) -> f64 {
    let mut step = psd_max_step(x, dx);
    for l in 0..t.len() {
        if dt[l] < 0.0 {
            step = step.min(-t[l] / dt[l]);
        }
    }
    step
}

fn psd_max_step(x: &DMatrix<f64>, dx: &DMatrix<f64>) -> f64 {
    let Some(chol) = Cholesky::new(symmetrize(x)) else {
        return 0.0;
    };
    let l = chol.l();
    let Some(a1) = l.solve_lower_triangular(dx) else {
        return 0.0;
    };
    let Some(tmat) = l.solve_lower_triangular(&a1.transpose()) else {
        return 0.0;
    };
    let sym = symmetrize(&tmat);
    let eig = sym.symmetric_eigen();
    let lmin = eig.eigenvalues.min();
    if lmin >= -1e-14 {
        f64::INFINITY
    } else {
        -1.0 / lmin
    }
}
