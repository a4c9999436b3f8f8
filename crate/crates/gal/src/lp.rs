//! Exact simplex over arbitrary-precision rationals.
//!
//! Scope is exactly what the two clique LPs need: maximize c'x subject to
//! Ax <= b, x >= 0. Bland's pivot rule throughout, so the method cannot cycle
//! and every run is deterministic. No floating point anywhere in this module.
//!
//! The solution carries exact primal and dual vectors; optimality is verified
//! internally (primal/dual feasibility, complementary slackness, equal
//! objectives) before returning.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct LpProblem {
    /// Objective row (maximize).
    pub objective: Vec<Rational>,
    /// Constraint rows, each of length `objective.len()`.
    pub rows: Vec<Vec<Rational>>,
    /// Right-hand sides, one per row.
    pub rhs: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Primal values per variable (empty unless optimal).
    pub primal: Vec<Rational>,
    /// Dual values per constraint row (empty unless optimal).
    pub dual: Vec<Rational>,
    pub objective: Rational,
}

impl LpProblem {
    pub fn validate(&self) -> Result<()> {
        let n = self.objective.len();
        if self.rows.len() != self.rhs.len() {
            return Err(Error::invalid(format!(
                "row count {} != rhs count {}",
                self.rows.len(),
                self.rhs.len()
            )));
        }
        for (i, r) in self.rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::invalid(format!(
                    "row {i} has {} coefficients, expected {n}",
                    r.len()
                )));
            }
        }
        Ok(())
    }
}

/// Dense tableau; variables are [structural | slack | artificial].
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    n_struct: usize,
    n_slack: usize,
    n_art: usize,
}

impl Tableau {
    fn width(&self) -> usize {
        self.n_struct + self.n_slack + self.n_art
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.rows[row][col].clone();
        debug_assert!(!piv.is_zero());
        for x in self.rows[row].iter_mut() {
            *x /= &piv;
        }
        self.rhs[row] /= &piv;
        for r in 0..self.rows.len() {
            if r == row {
                continue;
            }
            let factor = self.rows[r][col].clone();
            if factor.is_zero() {
                continue;
            }
            for c in 0..self.width() {
                let delta = &factor * &self.rows[row][c];
                self.rows[r][c] -= delta;
            }
            let delta = &factor * &self.rhs[row];
            self.rhs[r] -= delta;
        }
        self.basis[row] = col;
    }

    /// Reduced costs z_j - c_j for the given objective over all columns,
    /// plus the current objective value.
    fn reduced(&self, obj: &[Rational]) -> (Vec<Rational>, Rational) {
        let m = self.rows.len();
        let cb: Vec<&Rational> = self.basis.iter().map(|&b| &obj[b]).collect();
        let mut red = Vec::with_capacity(self.width());
        for j in 0..self.width() {
            let mut z = Rational::zero();
            for i in 0..m {
                if !cb[i].is_zero() {
                    z += cb[i] * &self.rows[i][j];
                }
            }
            red.push(z - &obj[j]);
        }
        let mut val = Rational::zero();
        for i in 0..m {
            val += cb[i] * &self.rhs[i];
        }
        (red, val)
    }

    /// One simplex phase with Bland's rule. Returns false when the problem is
    /// unbounded in this phase.
    fn run(&mut self, obj: &[Rational], forbid: usize) -> bool {
        loop {
            let (red, _) = self.reduced(obj);
            // Bland: smallest-index column with negative reduced cost.
            let entering = (0..forbid).find(|&j| red[j].is_negative());
            let Some(col) = entering else {
                return true;
            };
            // Ratio test; Bland tiebreak on smallest basis variable.
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if a.is_positive() {
                    let ratio = &self.rhs[i] / a;
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }
}

pub fn solve_lp(p: &LpProblem) -> Result<LpSolution> {
    p.validate()?;
    let n = p.objective.len();
    let m = p.rows.len();

    // Normalize rows so every rhs is nonnegative; remember flipped rows
    // (their slack enters with -1 and they need an artificial variable).
    let mut flipped = vec![false; m];
    let mut rows = p.rows.clone();
    let mut rhs = p.rhs.clone();
    for i in 0..m {
        if rhs[i].is_negative() {
            flipped[i] = true;
            for x in rows[i].iter_mut() {
                *x = -x.clone();
            }
            rhs[i] = -rhs[i].clone();
        }
    }
    let n_art = flipped.iter().filter(|&&f| f).count();

    let width = n + m + n_art;
    let mut t = Tableau {
        rows: vec![vec![Rational::zero(); width]; m],
        rhs,
        basis: vec![0; m],
        n_struct: n,
        n_slack: m,
        n_art,
    };
    let mut art_idx = 0usize;
    for i in 0..m {
        for j in 0..n {
            t.rows[i][j] = rows[i][j].clone();
        }
        let slack_sign = if flipped[i] {
            -Rational::one()
        } else {
            Rational::one()
        };
        t.rows[i][n + i] = slack_sign;
        if flipped[i] {
            t.rows[i][n + m + art_idx] = Rational::one();
            t.basis[i] = n + m + art_idx;
            art_idx += 1;
        } else {
            t.basis[i] = n + i;
        }
    }

    // Phase I: minimize the artificial sum, i.e. maximize its negation.
    if n_art > 0 {
        let mut phase1 = vec![Rational::zero(); width];
        for j in (n + m)..width {
            phase1[j] = -Rational::one();
        }
        if !t.run(&phase1, width) {
            return Err(Error::Solver("phase-one unbounded (internal)".into()));
        }
        let (_, val) = t.reduced(&phase1);
        if val.is_negative() {
            return Ok(LpSolution {
                status: LpStatus::Infeasible,
                primal: vec![],
                dual: vec![],
                objective: Rational::zero(),
            });
        }
        // Pivot any lingering artificial out of the basis if possible.
        for i in 0..m {
            if t.basis[i] >= n + m {
                if let Some(col) = (0..n + m).find(|&j| !t.rows[i][j].is_zero()) {
                    t.pivot(i, col);
                }
            }
        }
    }

    // Phase II over structural + slack columns only.
    let mut obj = vec![Rational::zero(); width];
    obj[..n].clone_from_slice(&p.objective);
    if !t.run(&obj, n + m) {
        return Ok(LpSolution {
            status: LpStatus::Unbounded,
            primal: vec![],
            dual: vec![],
            objective: Rational::zero(),
        });
    }

    let mut primal = vec![Rational::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            primal[b] = t.rhs[i].clone();
        }
    }
    let (red, objective) = t.reduced(&obj);
    // Dual value of row i is the reduced cost of its slack column. Rows that
    // were normalized need no sign fix: their slack enters with -1, which
    // already compensates for the negation.
    let dual: Vec<Rational> = (0..m).map(|i| red[n + i].clone()).collect();

    verify_optimal(p, &primal, &dual, &objective)?;
    Ok(LpSolution {
        status: LpStatus::Optimal,
        primal,
        dual,
        objective,
    })
}

/// Exact optimality certificate: primal and dual feasibility, complementary
/// slackness, and matching objectives.
fn verify_optimal(p: &LpProblem, x: &[Rational], y: &[Rational], obj: &Rational) -> Result<()> {
    let fail = |msg: &str| Err(Error::Solver(format!("LP verification failed: {msg}")));
    if x.iter().any(|v| v.is_negative()) {
        return fail("primal negativity");
    }
    if y.iter().any(|v| v.is_negative()) {
        return fail("dual negativity");
    }
    let mut dual_obj = Rational::zero();
    for (i, row) in p.rows.iter().enumerate() {
        let ax: Rational = row.iter().zip(x).map(|(a, b)| a * b).sum();
        if ax > p.rhs[i] {
            return fail("primal constraint violated");
        }
        if !y[i].is_zero() && ax != p.rhs[i] {
            return fail("complementary slackness (rows)");
        }
        dual_obj += &y[i] * &p.rhs[i];
    }
    for j in 0..p.objective.len() {
        let aty: Rational = p.rows.iter().zip(y).map(|(row, yi)| &row[j] * yi).sum();
        if aty < p.objective[j] {
            return fail("dual constraint violated");
        }
        if !x[j].is_zero() && aty != p.objective[j] {
            return fail("complementary slackness (columns)");
        }
    }
    let primal_obj: Rational = p.objective.iter().zip(x).map(|(c, v)| c * v).sum();
    if &primal_obj != obj || dual_obj != primal_obj {
        return fail("objective mismatch");
    }
    Ok(())
}
