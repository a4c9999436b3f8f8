//! Per-vertex nonnegative weights, in an exact (rational) or real (f64)
//! flavor. Exact weights round-trip losslessly through the graph file format;
//! real weights come out of the SDP layer.

use num::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum Weights {
    Exact(Vec<Rational>),
    Real(Vec<f64>),
}

impl Weights {
    /// The constant-1 weight, exact flavor.
    pub fn ones(n: usize) -> Self {
        Weights::Exact(vec![Rational::one(); n])
    }

    pub fn exact(values: Vec<Rational>) -> Result<Self> {
        if values.iter().any(|v| v < &Rational::zero()) {
            return Err(Error::invalid("weights must be nonnegative"));
        }
        Ok(Weights::Exact(values))
    }

    pub fn real(values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::invalid("weights must be finite and nonnegative"));
        }
        Ok(Weights::Real(values))
    }

    pub fn from_integers(values: &[u64]) -> Self {
        Weights::Exact(values.iter().map(|&v| rational::rat_u64(v)).collect())
    }

    pub fn len(&self) -> usize {
        match self {
            Weights::Exact(v) => v.len(),
            Weights::Real(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Weights::Exact(_))
    }

    pub fn is_all_one(&self) -> bool {
        match self {
            Weights::Exact(v) => v.iter().all(|x| x.is_one()),
            Weights::Real(v) => v.iter().all(|&x| x == 1.0),
        }
    }

    pub fn as_f64(&self) -> Vec<f64> {
        match self {
            Weights::Exact(v) => v.iter().map(rational::to_f64).collect(),
            Weights::Real(v) => v.clone(),
        }
    }

    pub fn get_f64(&self, v: usize) -> f64 {
        match self {
            Weights::Exact(w) => rational::to_f64(&w[v]),
            Weights::Real(w) => w[v],
        }
    }

    pub fn as_exact(&self) -> Result<&[Rational]> {
        match self {
            Weights::Exact(v) => Ok(v),
            Weights::Real(_) => Err(Error::invalid(
                "operation requires exact rational weights, got real-valued weights",
            )),
        }
    }

    /// Integer vector view; errors unless every weight is a nonnegative integer.
    pub fn as_integers(&self) -> Result<Vec<u64>> {
        let exact = self.as_exact()?;
        exact
            .iter()
            .map(|r| {
                rational::to_u64(r)
                    .ok_or_else(|| Error::invalid(format!("weight {} is not an integer >= 0", r)))
            })
            .collect()
    }

    /// Pointwise product along the row-major product vertex order:
    /// `(pp')(v,v') = p(v) p'(v')`.
    pub fn product(&self, other: &Weights) -> Weights {
        match (self, other) {
            (Weights::Exact(a), Weights::Exact(b)) => {
                let mut out = Vec::with_capacity(a.len() * b.len());
                for x in a {
                    for y in b {
                        out.push(x * y);
                    }
                }
                Weights::Exact(out)
            }
            _ => {
                let a = self.as_f64();
                let b = other.as_f64();
                let mut out = Vec::with_capacity(a.len() * b.len());
                for &x in &a {
                    for &y in &b {
                        out.push(x * y);
                    }
                }
                Weights::Real(out)
            }
        }
    }

    pub fn sum_f64(&self) -> f64 {
        self.as_f64().iter().sum()
    }

    /// Integer weights `ceil(level * p(v))` per vertex. For real weights,
    /// values within 1e-9 of an integer are snapped to it before the ceiling
    /// so that exact-in-spirit products do not pick up a spurious +1.
    pub fn ceil_scaled(&self, level: u64) -> Vec<u64> {
        match self {
            Weights::Exact(v) => v
                .iter()
                .map(|r| {
                    let x = r * rational::rat_u64(level);
                    rational::ceil_big(&x).to_u64().expect("weight overflow")
                })
                .collect(),
            Weights::Real(v) => v
                .iter()
                .map(|&p| {
                    let x = level as f64 * p;
                    let r = x.round();
                    let snapped = if (x - r).abs() <= 1e-9 { r } else { x.ceil() };
                    snapped.max(0.0) as u64
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn ones_is_exact_and_all_one() {
        let w = Weights::ones(4);
        assert!(w.is_exact());
        assert!(w.is_all_one());
        assert_eq!(w.as_f64(), vec![1.0; 4]);
    }

    #[test]
    fn negative_rejected() {
        assert!(Weights::exact(vec![rat(-1, 2)]).is_err());
        assert!(Weights::real(vec![-0.5]).is_err());
        assert!(Weights::real(vec![f64::NAN]).is_err());
    }

    #[test]
    fn product_is_row_major() {
        let a = Weights::exact(vec![rat(1, 1), rat(2, 1)]).unwrap();
        let b = Weights::exact(vec![rat(3, 1), rat(5, 1)]).unwrap();
        let p = a.product(&b);
        assert_eq!(
            p.as_integers().unwrap(),
            vec![3, 5, 6, 10],
            "(pp')(v,v') = p(v)p'(v') in g-major order"
        );
    }

    #[test]
    fn ceil_scaled_snaps_near_integers() {
        // 3 * (1/3 + tiny float noise) must snap to 1, not jump to 2.
        let w = Weights::real(vec![1.0 / 3.0, 0.4472135955]).unwrap();
        assert_eq!(w.ceil_scaled(3), vec![1, 2]);
        let exact = Weights::exact(vec![rat(1, 3), rat(1, 2)]).unwrap();
        assert_eq!(exact.ceil_scaled(3), vec![1, 2]);
        assert_eq!(exact.ceil_scaled(2), vec![1, 1]);
    }

    #[test]
    fn integer_view() {
        let w = Weights::exact(vec![rat(4, 2), rat(0, 1)]).unwrap();
        assert_eq!(w.as_integers().unwrap(), vec![2, 0]);
        assert!(Weights::exact(vec![rat(1, 2)])
            .unwrap()
            .as_integers()
            .is_err());
        assert!(Weights::real(vec![2.0]).unwrap().as_integers().is_err());
    }
}
