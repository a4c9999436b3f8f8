//! Exact maximum-weight independent set by branch and bound.
//!
//! The bounding function is a greedy clique cover of the candidate set: an
//! independent set takes at most one vertex per clique, so the sum of
//! per-clique weight maxima bounds what remains. Vertex order is fixed
//! (descending degree, index tiebreak), which makes values and witnesses
//! independent of everything but the input.

use num::{BigInt, Signed, ToPrimitive};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{self, Rational};
use crate::weights::Weights;

/// Value of a maximum-weight independent set, matching the weight flavor.
#[derive(Clone, Debug, PartialEq)]
pub enum AlphaValue {
    Exact(Rational),
    Real(f64),
}

impl AlphaValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            AlphaValue::Exact(r) => rational::to_f64(r),
            AlphaValue::Real(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            AlphaValue::Exact(r) => Some(r),
            AlphaValue::Real(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AlphaResult {
    pub value: AlphaValue,
    pub witness: VertexSet,
}

/// Default guard on instance size; overridable through the options of the
/// higher-level drivers.
pub const DEFAULT_ALPHA_GUARD: usize = 64;

/// Maximum-weight independent set with exact or real weights. The witness is
/// re-verified against the graph before returning.
pub fn alpha(g: &Graph, weights: &Weights) -> Result<AlphaResult> {
    if weights.len() != g.n() {
        return Err(Error::invalid(format!(
            "weight count {} != vertex count {}",
            weights.len(),
            g.n()
        )));
    }
    let result = match weights {
        Weights::Exact(w) => {
            let (denom, ints) = rational::scale_to_integers(w);
            if ints.iter().any(|x| x.is_negative()) {
                return Err(Error::invalid("weights must be nonnegative"));
            }
            let as_i128: Option<Vec<i128>> = ints.iter().map(BigInt::to_i128).collect();
            let scaled =
                as_i128.ok_or_else(|| Error::invalid("weights too large for exact search"))?;
            let (best, witness) = search(g, &scaled, 0i128);
            let value = Rational::new(BigInt::from(best), denom);
            AlphaResult {
                value: AlphaValue::Exact(value),
                witness,
            }
        }
        Weights::Real(w) => {
            let (_, witness) = search(g, w, 1e-12f64);
            // Reported value is the plain re-sum over the witness, in index
            // order, so it does not depend on the search path.
            let value: f64 = witness.iter().map(|v| w[v]).sum();
            AlphaResult {
                value: AlphaValue::Real(value),
                witness,
            }
        }
    };
    debug_assert!(g.is_independent_set(&result.witness));
    if !g.is_independent_set(&result.witness) {
        return Err(Error::Solver(
            "independent-set witness failed validation".into(),
        ));
    }
    Ok(result)
}

/// Unweighted independence number.
pub fn alpha_unweighted(g: &Graph) -> Result<(u64, VertexSet)> {
    let r = alpha(g, &Weights::ones(g.n()))?;
    let v = r
        .value
        .as_exact()
        .and_then(rational::to_u64)
        .expect("unweighted alpha is a nonnegative integer");
    Ok((v, r.witness))
}

trait BbWeight:
    Copy + PartialOrd + std::ops::Add<Output = Self> + std::ops::Sub<Output = Self> + Default
{
}
impl BbWeight for i128 {}
impl BbWeight for f64 {}

struct Searcher<'a, W> {
    g: &'a Graph,
    w: &'a [W],
    order: Vec<usize>,
    non_nbrs: Vec<VertexSet>,
    prune_eps: W,
    best: W,
    best_set: VertexSet,
    cur_stack: Vec<usize>,
}

fn search<W: BbWeight>(g: &Graph, w: &[W], prune_eps: W) -> (W, VertexSet) {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    // Non-neighborhood masks (excluding the vertex itself) for the include
    // branch.
    let non_nbrs: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut s = VertexSet::full(n);
            s.subtract(g.neighbors(v));
            s.remove(v);
            s
        })
        .collect();
    let mut searcher = Searcher {
        g,
        w,
        order,
        non_nbrs,
        prune_eps,
        best: W::default(),
        best_set: VertexSet::new(n),
        cur_stack: Vec::new(),
    };
    // Greedy warm start: take vertices in static order whenever independent.
    let mut taken = VertexSet::new(n);
    let mut greedy = W::default();
    for idx in 0..n {
        let v = searcher.order[idx];
        if taken.is_disjoint(g.neighbors(v)) {
            taken.insert(v);
            greedy = greedy + w[v];
        }
    }
    searcher.best = greedy;
    searcher.best_set = taken;
    let full = VertexSet::full(n);
    searcher.recurse(&full, W::default());
    (searcher.best, searcher.best_set)
}

impl<W: BbWeight> Searcher<'_, W> {
    fn cover_bound(&self, p: &VertexSet) -> W {
        // Greedy clique partition of P in static order; bound is the sum of
        // per-clique weight maxima.
        let mut bound = W::default();
        let mut cliques: Vec<(VertexSet, W)> = Vec::new();
        for &v in &self.order {
            if !p.contains(v) {
                continue;
            }
            let mut placed = false;
            for (members, maxw) in cliques.iter_mut() {
                if members.is_subset(self.g.neighbors(v)) {
                    members.insert(v);
                    if self.w[v] > *maxw {
                        bound = bound + self.w[v] - *maxw;
                        *maxw = self.w[v];
                    }
                    placed = true;
                    break;
                }
            }
            if !placed {
                let mut m = VertexSet::new(self.g.n());
                m.insert(v);
                cliques.push((m, self.w[v]));
                bound = bound + self.w[v];
            }
        }
        bound
    }

    fn recurse(&mut self, p: &VertexSet, cur: W) {
        if cur > self.best {
            self.best = cur;
            self.best_set = VertexSet::from_iter_n(self.g.n(), self.cur_stack.iter().copied());
        }
        if p.is_empty() {
            return;
        }
        let bound = self.cover_bound(p);
        if cur + bound <= self.best + self.prune_eps {
            return;
        }
        // Branch vertex: first candidate in static order.
        let v = *self
            .order
            .iter()
            .find(|&&v| p.contains(v))
            .expect("nonempty candidate set");
        // Include v.
        let mut p_in = p.intersection(&self.non_nbrs[v]);
        self.cur_stack.push(v);
        self.recurse(&p_in, cur + self.w[v]);
        self.cur_stack.pop();
        // Exclude v.
        p_in = p.clone();
        p_in.remove(v);
        self.recurse(&p_in, cur);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty_graph, petersen, random_gnp};
    use crate::rational::{rat, rat_int};

    fn brute_alpha(g: &Graph) -> usize {
        assert!(g.n() <= 20);
        let mut best = 0;
        for mask in 0u64..(1 << g.n()) {
            let s = VertexSet::from_iter_n(g.n(), (0..g.n()).filter(|&i| mask >> i & 1 == 1));
            if g.is_independent_set(&s) {
                best = best.max(s.count());
            }
        }
        best
    }

    #[test]
    fn pentagon() {
        let c5 = cycle(5).unwrap();
        let (a, w) = alpha_unweighted(&c5).unwrap();
        assert_eq!(a, 2);
        assert!(c5.is_independent_set(&w));
        assert_eq!(w.count(), 2);
    }

    #[test]
    fn pentagon_strong_square() {
        let c5 = cycle(5).unwrap();
        let p = c5.strong_product(&c5);
        let (a, w) = alpha_unweighted(&p).unwrap();
        assert_eq!(a, 5);
        assert!(p.is_independent_set(&w));
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        for seed in 0..8 {
            let g = random_gnp(11, 0.4, seed).unwrap();
            let (a, _) = alpha_unweighted(&g).unwrap();
            assert_eq!(a as usize, brute_alpha(&g), "seed {seed}");
        }
    }

    #[test]
    fn weighted_uniform_scaling() {
        let c5 = cycle(5).unwrap();
        let w = Weights::exact(vec![rat(3, 2); 5]).unwrap();
        let r = alpha(&c5, &w).unwrap();
        assert_eq!(r.value.as_exact().unwrap(), &rat(3, 1));
    }

    #[test]
    fn real_weights_uniform() {
        let c5 = cycle(5).unwrap();
        let p = c5.strong_product(&c5);
        let inv_sqrt5 = 1.0 / 5.0_f64.sqrt();
        let w = Weights::real(vec![inv_sqrt5; 25]).unwrap();
        let r = alpha(&p, &w).unwrap();
        let expect = 5.0 * inv_sqrt5; // sqrt 5
        assert!((r.value.to_f64() - expect).abs() < 1e-9);
    }

    #[test]
    fn weighted_picks_heavy_vertex() {
        // Star: center heavy beats all leaves.
        let mut edges = vec![];
        for v in 1..6 {
            edges.push((0, v));
        }
        let g = Graph::from_edges(6, &edges).unwrap();
        let w = Weights::exact(vec![
            rat_int(10),
            rat_int(1),
            rat_int(1),
            rat_int(1),
            rat_int(1),
            rat_int(1),
        ])
        .unwrap();
        let r = alpha(&g, &w).unwrap();
        assert_eq!(r.value.as_exact().unwrap(), &rat_int(10));
        assert!(r.witness.contains(0));
    }

    #[test]
    fn zero_weights_are_fine() {
        let g = complete(4).unwrap();
        let w = Weights::exact(vec![rat_int(0); 4]).unwrap();
        let r = alpha(&g, &w).unwrap();
        assert_eq!(r.value.as_exact().unwrap(), &rat_int(0));
    }

    #[test]
    fn trivial_families() {
        assert_eq!(alpha_unweighted(&complete(7).unwrap()).unwrap().0, 1);
        assert_eq!(alpha_unweighted(&empty_graph(7).unwrap()).unwrap().0, 7);
        assert_eq!(alpha_unweighted(&petersen()).unwrap().0, 4);
    }

    #[test]
    fn disjunctive_multiplicativity() {
        for seed in 0..4 {
            let g = random_gnp(5, 0.5, seed).unwrap();
            let h = random_gnp(6, 0.5, seed + 50).unwrap();
            let (ag, _) = alpha_unweighted(&g).unwrap();
            let (ah, _) = alpha_unweighted(&h).unwrap();
            let (ap, _) = alpha_unweighted(&g.disjunctive_product(&h)).unwrap();
            assert_eq!(ap, ag * ah, "alpha(G*H) = alpha(G) alpha(H)");
        }
    }

    #[test]
    fn blowup_transfer() {
        for seed in 0..4 {
            let g = random_gnp(6, 0.5, seed).unwrap();
            let m = [2u64, 1, 3, 1, 2, 1];
            let b = g.blowup(&m).unwrap();
            let (ab, _) = alpha_unweighted(&b).unwrap();
            let r = alpha(&g, &Weights::from_integers(&m)).unwrap();
            assert_eq!(
                &rational::rat_u64(ab),
                r.value.as_exact().unwrap(),
                "alpha(Blup(G,m)) = alpha(G,m)"
            );
        }
    }
}
