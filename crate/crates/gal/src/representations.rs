//! Orthonormal / obtuse representations extracted from optimal primal
//! matrices, with the handle vector and the weights p(v) = <h|phi_v>^2 that
//! drive the activation constructions.
//!
//! Conventions are phrased against the base graph G of the solved program:
//! an extracted representation from theta(G) is an orthonormal representation
//! of the complement (vectors orthogonal exactly on the edges of G); the
//! theta-minus extraction is additionally entrywise nonnegative; the
//! theta-plus extraction is obtuse (nonpositive on the edges of G).

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::theta::{CertifiedValue, ThetaVariant};

/// Eigenvalues of B below this are treated as exact zeros in the Gram
/// factorization.
const EIGENVALUE_CLAMP: f64 = 1e-10;
/// Rows with squared norm at or below this get a fresh orthogonal dimension
/// and weight zero; normalizing them would amplify solver noise. Inactive
/// rows land near the final barrier parameter (~1e-9), active rows carry
/// p(v)/theta, so the two populations sit orders of magnitude apart.
const ZERO_ROW_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    /// <phi_v|phi_w> = 0 for every edge vw of the base graph.
    OrOfComplement,
    /// Additionally <phi_v|phi_w> >= 0 for all pairs.
    NonnegOr,
    /// <phi_v|phi_w> <= 0 for every edge vw of the base graph.
    Obtuse,
}

impl RepKind {
    pub fn from_variant(v: ThetaVariant) -> RepKind {
        match v {
            ThetaVariant::Lovasz => RepKind::OrOfComplement,
            ThetaVariant::SchrijverMinus => RepKind::NonnegOr,
            ThetaVariant::SzegedyPlus => RepKind::Obtuse,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RepKind::OrOfComplement => "or_of_complement",
            RepKind::NonnegOr => "nonneg_or",
            RepKind::Obtuse => "obtuse",
        }
    }
}

#[derive(Clone, Debug)]
pub struct OrthoRep {
    pub kind: RepKind,
    pub base: Graph,
    /// One unit vector per vertex (dimension <= n + number of zero rows).
    pub vectors: Vec<DVector<f64>>,
    pub handle: DVector<f64>,
    /// p(v) = <h|phi_v>^2.
    pub weights: Vec<f64>,
}

/// Violation summary for a representation against its base graph.
#[derive(Clone, Copy, Debug)]
pub struct RepReport {
    /// max | norm(phi_v) - 1 |, handle included.
    pub norm_deviation: f64,
    /// max |<phi_v|phi_w>| over the kind's zero-pattern pairs (edges of the
    /// base for or_of_complement / nonneg_or); 0.0 for obtuse.
    pub forbidden_max: f64,
    /// Violation of the kind's sign requirements: for nonneg_or the amount
    /// the most negative pair dips below zero; for obtuse the amount the
    /// largest edge inner product exceeds zero.
    pub sign_violation: f64,
    /// min_v <h|phi_v>.
    pub handle_min: f64,
}

impl RepReport {
    pub fn ok(&self, kind: RepKind, tol: f64) -> bool {
        let consistent = match kind {
            RepKind::OrOfComplement => true,
            RepKind::NonnegOr | RepKind::Obtuse => self.handle_min >= -tol,
        };
        self.norm_deviation <= tol
            && self.forbidden_max <= tol
            && self.sign_violation <= tol
            && consistent
    }
}

/// Gram-factorizes the primal certificate and derives the handle and the
/// activation weights.
///
/// The certificate must come from a constant-1-weight program: the value
/// sandwich Sum p(v) in [tr(B Pi) - 1e-6, value + 1e-6] rests on the Jensen
/// step for Pi = J, and the pipeline only ever extracts from unweighted
/// solves.
pub fn extract_rep(cert: &CertifiedValue) -> Result<OrthoRep> {
    if !cert.program.weights.is_all_one() {
        return Err(Error::invalid(
            "representation extraction requires an unweighted (constant-1) certificate",
        ));
    }
    let scale = 1.0 + cert.value.abs();
    if cert.primal_residual > 1e-7 || cert.dual_residual > 1e-7 || cert.gap > 1e-6 * scale {
        return Err(Error::invalid(format!(
            "certificate rejected: residuals {:.2e}/{:.2e}, gap {:.2e}",
            cert.primal_residual, cert.dual_residual, cert.gap
        )));
    }
    let g = &cert.program.graph;
    let n = g.n();
    let b = (&cert.primal + cert.primal.transpose()) * 0.5;

    let eig = b.clone().symmetric_eigen();
    let mut kept: Vec<usize> = (0..n)
        .filter(|&i| eig.eigenvalues[i] > EIGENVALUE_CLAMP)
        .collect();
    // Deterministic column order: descending eigenvalue, index tiebreak.
    kept.sort_by(|&a, &c| {
        eig.eigenvalues[c]
            .partial_cmp(&eig.eigenvalues[a])
            .unwrap()
            .then(a.cmp(&c))
    });
    let d = kept.len();

    // psi_v = row v of U sqrt(Lambda); <psi_v|psi_w> = B_vw up to the clamp.
    let mut psi: Vec<DVector<f64>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut row = DVector::<f64>::zeros(d);
        for (j, &col) in kept.iter().enumerate() {
            row[j] = eig.eigenvectors[(v, col)] * eig.eigenvalues[col].sqrt();
        }
        psi.push(row);
    }
    let zero_rows: Vec<usize> = (0..n)
        .filter(|&v| psi[v].norm_squared() <= ZERO_ROW_TOL)
        .collect();
    let dim = d + zero_rows.len();

    let mut vectors: Vec<DVector<f64>> = Vec::with_capacity(n);
    let mut fresh = d;
    for v in 0..n {
        let mut phi = DVector::<f64>::zeros(dim);
        if zero_rows.contains(&v) {
            phi[fresh] = 1.0;
            fresh += 1;
        } else {
            let norm = psi[v].norm();
            for j in 0..d {
                phi[j] = psi[v][j] / norm;
            }
        }
        vectors.push(phi);
    }

    let handle = match RepKind::from_variant(cert.program.variant) {
        RepKind::Obtuse => {
            // Normalized vector sum over the nonzero rows; consistency comes
            // from nonnegative row sums of an optimal B. A top eigenvector
            // is not safe here: for obtuse Grams the positive operator norm
            // can sit strictly below the operator norm.
            let mut sum = DVector::<f64>::zeros(dim);
            for v in 0..n {
                if !zero_rows.contains(&v) {
                    for j in 0..d {
                        sum[j] += psi[v][j];
                    }
                }
            }
            let norm = sum.norm();
            if norm <= 1e-12 {
                return Err(Error::Solver(
                    "degenerate certificate: zero vector sum".into(),
                ));
            }
            sum / norm
        }
        kind => {
            // Top eigenvector of sum |phi><phi| via the Gram matrix; for the
            // nonnegative kind, |mu| is also a top eigenvector and makes the
            // handle consistent (Perron).
            let gram = DMatrix::<f64>::from_fn(n, n, |i, j| vectors[i].dot(&vectors[j]));
            let geig = gram.symmetric_eigen();
            let top = (0..n)
                .max_by(|&a, &c| {
                    geig.eigenvalues[a]
                        .partial_cmp(&geig.eigenvalues[c])
                        .unwrap()
                })
                .expect("n >= 1");
            let lambda = geig.eigenvalues[top];
            let mut mu: Vec<f64> = (0..n).map(|v| geig.eigenvectors[(v, top)]).collect();
            if kind == RepKind::NonnegOr {
                for x in mu.iter_mut() {
                    *x = x.abs();
                }
            } else {
                // Sign fixed so the largest-magnitude entry is positive.
                let lead = (0..n)
                    .max_by(|&a, &c| mu[a].abs().partial_cmp(&mu[c].abs()).unwrap())
                    .expect("n >= 1");
                if mu[lead] < 0.0 {
                    for x in mu.iter_mut() {
                        *x = -*x;
                    }
                }
            }
            let mut h = DVector::<f64>::zeros(dim);
            for v in 0..n {
                h += &vectors[v] * mu[v];
            }
            h / lambda.sqrt()
        }
    };

    let weights: Vec<f64> = vectors.iter().map(|phi| handle.dot(phi).powi(2)).collect();
    let total: f64 = weights.iter().sum();
    if total < cert.value - 1e-6 || total > cert.value + 1e-6 {
        return Err(Error::Solver(format!(
            "extracted weight sum {total:.9} escapes [{:.9} - 1e-6, {:.9} + 1e-6]",
            cert.value, cert.value
        )));
    }

    Ok(OrthoRep {
        kind: RepKind::from_variant(cert.program.variant),
        base: g.clone(),
        vectors,
        handle,
        weights,
    })
}

/// Measures every constraint class of `rep` against `g`.
pub fn validate_rep(rep: &OrthoRep, g: &Graph) -> RepReport {
    let mut norm_dev = (rep.handle.norm() - 1.0).abs();
    for phi in &rep.vectors {
        norm_dev = norm_dev.max((phi.norm() - 1.0).abs());
    }
    let mut forbidden: f64 = 0.0;
    let mut sign: f64 = 0.0;
    match rep.kind {
        RepKind::OrOfComplement => {
            for (u, v) in g.edges() {
                forbidden = forbidden.max(rep.vectors[u].dot(&rep.vectors[v]).abs());
            }
        }
        RepKind::NonnegOr => {
            for (u, v) in g.edges() {
                forbidden = forbidden.max(rep.vectors[u].dot(&rep.vectors[v]).abs());
            }
            for u in 0..g.n() {
                for v in (u + 1)..g.n() {
                    sign = sign.max(-rep.vectors[u].dot(&rep.vectors[v]));
                }
            }
        }
        RepKind::Obtuse => {
            for (u, v) in g.edges() {
                sign = sign.max(rep.vectors[u].dot(&rep.vectors[v]));
            }
        }
    }
    let handle_min = rep
        .vectors
        .iter()
        .map(|phi| rep.handle.dot(phi))
        .fold(f64::INFINITY, f64::min);
    RepReport {
        norm_deviation: norm_dev,
        forbidden_max: forbidden,
        sign_violation: sign.max(0.0),
        handle_min,
    }
}

/// Converse direction: rebuilds a primal-feasible matrix from a valid
/// representation, B_vw = (1/theta) <h|phi_v><phi_v|phi_w><phi_w|h>, and
/// returns it with its objective value tr(B J) >= theta.
pub fn rebuild_primal(rep: &OrthoRep) -> (DMatrix<f64>, f64) {
    let n = rep.vectors.len();
    let theta: f64 = rep.weights.iter().sum();
    let coeff: Vec<f64> = (0..n).map(|v| rep.handle.dot(&rep.vectors[v])).collect();
    let b = DMatrix::<f64>::from_fn(n, n, |i, j| {
        coeff[i] * coeff[j] * rep.vectors[i].dot(&rep.vectors[j]) / theta
    });
    let value = b.sum();
    (b, value)
}
