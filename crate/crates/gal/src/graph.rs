//! Loopless undirected graphs on dense vertex indices, with the two products,
//! complement, blow-up and the named families used throughout.
//!
//! Product vertices are ordered row-major (first-factor index major) so that
//! every derived artifact is byte-reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Empty graph (no edges) on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
            labels: None,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "edge ({u},{v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        if self.adj[u].contains(v) {
            return Err(Error::invalid(format!("duplicate edge ({u},{v})")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    /// Lovasz convention: equal or adjacent.
    pub fn confusable(&self, u: usize, v: usize) -> bool {
        u == v || self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.count()).sum::<usize>() / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Non-adjacent distinct pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.adj[u].contains(v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::invalid("label count must equal vertex count"));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Complement: edge iff distinct and not adjacent. Involutive.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.adj[u].contains(v) {
                    g.add_edge(u, v);
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    fn product_labels(&self, other: &Graph) -> Vec<String> {
        let mut labels = Vec::with_capacity(self.n * other.n);
        for u in 0..self.n {
            for v in 0..other.n {
                labels.push(format!("({},{})", self.label_of(u), other.label_of(v)));
            }
        }
        labels
    }

    /// Strong ("and") product: `(vv',ww')` adjacent iff `v ~ w` and `v' ~ w'`
    /// and the pairs differ.
    pub fn strong_product(&self, other: &Graph) -> Graph {
        let n1 = self.n;
        let n2 = other.n;
        let mut g = Graph::empty(n1 * n2);
        for v in 0..n1 {
            for vp in 0..n2 {
                let a = v * n2 + vp;
                for w in 0..n1 {
                    for wp in 0..n2 {
                        let b = w * n2 + wp;
                        if b <= a {
                            continue;
                        }
                        if self.confusable(v, w) && other.confusable(vp, wp) {
                            g.add_edge(a, b);
                        }
                    }
                }
            }
        }
        g.labels = Some(self.product_labels(other));
        g
    }

    /// Disjunctive ("or") product: edge iff either coordinate pair is an edge.
    pub fn disjunctive_product(&self, other: &Graph) -> Graph {
        let n1 = self.n;
        let n2 = other.n;
        let mut g = Graph::empty(n1 * n2);
        for v in 0..n1 {
            for vp in 0..n2 {
                let a = v * n2 + vp;
                for w in 0..n1 {
                    for wp in 0..n2 {
                        let b = w * n2 + wp;
                        if b <= a {
                            continue;
                        }
                        if self.has_edge(v, w) || other.has_edge(vp, wp) {
                            g.add_edge(a, b);
                        }
                    }
                }
            }
        }
        g.labels = Some(self.product_labels(other));
        g
    }

    /// Blow-up: vertex `v` becomes an independent set of `m[v]` copies,
    /// copies of `v` and `w` fully joined iff `vw` is an edge. Vertices with
    /// `m[v] = 0` are dropped.
    pub fn blowup(&self, m: &[u64]) -> Result<Graph> {
        if m.len() != self.n {
            return Err(Error::invalid(format!(
                "blow-up weight count {} != vertex count {}",
                m.len(),
                self.n
            )));
        }
        let total: u64 = m.iter().sum();
        let total = usize::try_from(total).map_err(|_| Error::invalid("blow-up too large"))?;
        let mut start = vec![0usize; self.n];
        let mut labels = Vec::with_capacity(total);
        let mut acc = 0usize;
        for v in 0..self.n {
            start[v] = acc;
            for i in 1..=m[v] {
                labels.push(format!("({},{})", self.label_of(v), i));
            }
            acc += m[v] as usize;
        }
        let mut g = Graph::empty(total);
        for (u, v) in self.edges() {
            for i in 0..m[u] as usize {
                for j in 0..m[v] as usize {
                    g.add_edge(start[u] + i, start[v] + j);
                }
            }
        }
        g.labels = Some(labels);
        Ok(g)
    }

    /// The graph with vertices relabeled by `perm`: vertex `v` becomes
    /// `perm[v]`. Used by tests to compare products up to the canonical
    /// pair relabeling.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Adjacency-preserving sanity check used before trusting witnesses.
    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        let vs = s.to_vec();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let vs = s.to_vec();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("cycle needs n >= 1"));
    }
    let mut g = Graph::empty(n);
    if n == 2 {
        g.add_edge(0, 1);
    } else if n >= 3 {
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
    }
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("complete graph needs n >= 1"));
    }
    Ok(Graph::empty(n).complement())
}

pub fn empty_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("empty graph needs n >= 1"));
    }
    Ok(Graph::empty(n))
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    g
}

/// Erdos-Renyi G(n, p), deterministic for a fixed seed. Pairs are sampled in
/// ascending (u, v) order from a ChaCha stream so the output is stable across
/// platforms.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("random graph needs n >= 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid("edge probability must be in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Dispatch by family name, as used by the CLI `gen` subcommand.
pub fn generate(family: &str, n: usize, p: f64, seed: u64) -> Result<Graph> {
    match family {
        "cycle" => cycle(n),
        "complete" => complete(n),
        "empty" => empty_graph(n),
        "petersen" => Ok(petersen()),
        "random" => random_gnp(n, p, seed),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force strong product straight from the edge rule, kept
    /// independent of the implementation above.
    fn strong_oracle(g: &Graph, h: &Graph) -> Vec<(usize, usize)> {
        let n2 = h.n();
        let mut edges = Vec::new();
        for v in 0..g.n() {
            for vp in 0..h.n() {
                for w in 0..g.n() {
                    for wp in 0..h.n() {
                        let a = v * n2 + vp;
                        let b = w * n2 + wp;
                        if a >= b {
                            continue;
                        }
                        let same_v = v == w;
                        let same_vp = vp == wp;
                        let ev = g.has_edge(v, w);
                        let evp = h.has_edge(vp, wp);
                        // (vv',ww') in E iff v=w & v'w' in E', or vw in E & v'=w',
                        // or vw in E & v'w' in E'.
                        if (same_v && evp) || (ev && same_vp) || (ev && evp) {
                            edges.push((a, b));
                        }
                    }
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    #[test]
    fn strong_product_c5_c5() {
        let c5 = cycle(5).unwrap();
        let p = c5.strong_product(&c5);
        assert_eq!(p.n(), 25);
        assert_eq!(p.edge_count(), 100);
        for v in 0..25 {
            assert_eq!(p.degree(v), 8, "degree (2+1)(2+1)-1 at every vertex");
        }
        assert_eq!(p.edges(), strong_oracle(&c5, &c5));
    }

    #[test]
    fn strong_product_identity_and_complete() {
        let h = random_gnp(6, 0.5, 7).unwrap();
        let k1 = complete(1).unwrap();
        let p = k1.strong_product(&h);
        assert_eq!(p.n(), h.n());
        assert_eq!(p.edges(), h.edges());

        let k2 = complete(2).unwrap();
        let k3 = complete(3).unwrap();
        let k6 = k2.strong_product(&k3);
        assert_eq!(k6.edge_count(), 15);
        assert_eq!(
            k6,
            complete(6)
                .unwrap()
                .with_labels(k6.labels().unwrap().to_vec())
                .unwrap()
        );
    }

    #[test]
    fn disjunctive_product_c5_c5() {
        let c5 = cycle(5).unwrap();
        let p = c5.disjunctive_product(&c5);
        assert_eq!(p.n(), 25);
        assert_eq!(p.edge_count(), 200);
    }

    #[test]
    fn disjunctive_of_empty_is_empty() {
        let e3 = empty_graph(3).unwrap();
        let e4 = empty_graph(4).unwrap();
        let p = e3.disjunctive_product(&e4);
        assert_eq!(p.n(), 12);
        assert_eq!(p.edge_count(), 0);
    }

    #[test]
    fn de_morgan_identity() {
        for seed in 0..6u64 {
            let g = random_gnp(5, 0.5, seed).unwrap();
            let h = random_gnp(5, 0.4, seed + 100).unwrap();
            let lhs = g.strong_product(&h).complement();
            let rhs = g.complement().disjunctive_product(&h.complement());
            assert_eq!(lhs.edges(), rhs.edges(), "complement(G (x) H) = Gc (*) Hc");
        }
    }

    #[test]
    fn complement_pentagon_self() {
        let c5 = cycle(5).unwrap();
        let cc = c5.complement();
        // Pentagon is self-complementary under 0,2,4,1,3.
        let perm = [0usize, 3, 1, 4, 2];
        assert_eq!(cc.permuted(&perm).edges(), c5.edges());
        assert_eq!(c5.complement().complement(), c5);
        assert_eq!(complete(4).unwrap().complement().edge_count(), 0);
    }

    #[test]
    fn blowup_all_one_is_identity() {
        let g = random_gnp(7, 0.5, 3).unwrap();
        let b = g.blowup(&[1; 7]).unwrap();
        assert_eq!(b.n(), 7);
        assert_eq!(b.edges(), g.edges());
    }

    #[test]
    fn blowup_drops_zero_weights() {
        let g = cycle(4).unwrap();
        let b = g.blowup(&[2, 0, 1, 1]).unwrap();
        assert_eq!(b.n(), 4);
        // vertices: (0,1),(0,2),(2,1),(3,1); edges from 4-cycle 0-1-2-3-0:
        // only 2-3 and 3-0 survive vertex 1's removal.
        assert_eq!(b.edges(), vec![(0, 3), (1, 3), (2, 3)]);
        assert!(g.blowup(&[1, 1]).is_err(), "length mismatch rejected");
    }

    #[test]
    fn blowup_of_c5_doubles() {
        let c5 = cycle(5).unwrap();
        let b = c5.blowup(&[2; 5]).unwrap();
        assert_eq!(b.n(), 10);
        assert_eq!(b.edge_count(), 20);
        // Exhaustive independence oracle over all 2^10 subsets.
        let mut best = 0usize;
        for mask in 0u32..1024 {
            let s = VertexSet::from_iter_n(10, (0..10).filter(|&i| mask >> i & 1 == 1));
            if b.is_independent_set(&s) {
                best = best.max(s.count());
            }
        }
        assert_eq!(best, 4, "alpha(Blup(C5, 2)) = 4 by exhaustive search");
    }

    #[test]
    fn generators() {
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert_eq!(empty_graph(3).unwrap().edge_count(), 0);
        let p = petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        let a = random_gnp(8, 0.5, 1).unwrap();
        let b = random_gnp(8, 0.5, 1).unwrap();
        assert_eq!(a, b, "same seed, same graph");
        assert!(generate("moebius", 5, 0.0, 0).is_err());
    }

    #[test]
    fn edge_validation() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }
}
