//! Maximal clique enumeration (Bron-Kerbosch with pivoting).
//!
//! The enumeration is complete and deterministic: the pivot is the candidate
//! dominating the most of P (smallest index on ties) and the output is sorted
//! by vertex list, so the LP constraint order downstream is reproducible.

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct CliqueSet {
    cliques: Vec<VertexSet>,
}

impl CliqueSet {
    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.cliques.iter()
    }

    pub fn max_size(&self) -> usize {
        self.cliques.iter().map(|c| c.count()).max().unwrap_or(0)
    }
}

pub fn maximal_cliques(g: &Graph) -> CliqueSet {
    let n = g.n();
    let mut out = Vec::new();
    if n == 0 {
        return CliqueSet { cliques: out };
    }
    let r = VertexSet::new(n);
    let p = VertexSet::full(n);
    let x = VertexSet::new(n);
    expand(g, &r, p, x, &mut out);
    let mut keyed: Vec<(Vec<usize>, VertexSet)> =
        out.into_iter().map(|c| (c.to_vec(), c)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    CliqueSet {
        cliques: keyed.into_iter().map(|(_, c)| c).collect(),
    }
}

fn expand(g: &Graph, r: &VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    // Pivot from P union X maximizing |P cap N(u)|, smallest index on ties.
    let mut pivot = None;
    let mut best = usize::MAX;
    for u in p.iter().chain(x.iter()) {
        let covered = p.intersection(g.neighbors(u)).count();
        let remaining = p.count() - covered;
        if pivot.is_none() || remaining < best {
            best = remaining;
            pivot = Some(u);
        }
    }
    let pivot = pivot.expect("nonempty P or X");
    let mut candidates = p.difference(g.neighbors(pivot));
    let mut p = p;
    let mut x = x;
    for v in candidates.clone().iter() {
        if !candidates.contains(v) {
            continue;
        }
        let mut r2 = r.clone();
        r2.insert(v);
        let p2 = p.intersection(g.neighbors(v));
        let x2 = x.intersection(g.neighbors(v));
        expand(g, &r2, p2, x2, out);
        p.remove(v);
        x.insert(v);
        candidates.remove(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty_graph, random_gnp};

    fn assert_invariants(g: &Graph, cs: &CliqueSet) {
        let mut seen = VertexSet::new(g.n());
        for c in cs.iter() {
            assert!(g.is_clique(c), "every set induces a complete subgraph");
            seen.union_with(c);
        }
        assert_eq!(seen.count(), g.n(), "every vertex appears in some clique");
        for (i, a) in cs.iter().enumerate() {
            for (j, b) in cs.iter().enumerate() {
                if i != j {
                    assert!(!a.is_subset(b), "no clique contains another");
                }
            }
        }
    }

    #[test]
    fn c5_cliques_are_edges() {
        let c5 = cycle(5).unwrap();
        let cs = maximal_cliques(&c5);
        assert_eq!(cs.len(), 5);
        assert!(cs.iter().all(|c| c.count() == 2));
        assert_invariants(&c5, &cs);
    }

    #[test]
    fn complete_graph_single_clique() {
        let k6 = complete(6).unwrap();
        let cs = maximal_cliques(&k6);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.cliques()[0].count(), 6);
    }

    #[test]
    fn empty_graph_singletons() {
        let e4 = empty_graph(4).unwrap();
        let cs = maximal_cliques(&e4);
        assert_eq!(cs.len(), 4);
        assert!(cs.iter().all(|c| c.count() == 1));
    }

    #[test]
    fn strong_product_cliques_bounded() {
        let c5 = cycle(5).unwrap();
        let p = c5.strong_product(&c5);
        let cs = maximal_cliques(&p);
        // Cliques of a strong product are products of factor cliques, so the
        // maximum here is edge x edge.
        assert_eq!(cs.max_size(), 4);
        assert_eq!(cs.len(), 25);
        assert_invariants(&p, &cs);
    }

    #[test]
    fn random_graph_invariants() {
        for seed in 0..5 {
            let g = random_gnp(9, 0.5, seed).unwrap();
            let cs = maximal_cliques(&g);
            assert_invariants(&g, &cs);
        }
    }

    #[test]
    fn deterministic_order() {
        let g = random_gnp(8, 0.6, 42).unwrap();
        let a: Vec<Vec<usize>> = maximal_cliques(&g).iter().map(|c| c.to_vec()).collect();
        let b: Vec<Vec<usize>> = maximal_cliques(&g).iter().map(|c| c.to_vec()).collect();
        assert_eq!(a, b);
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(a, sorted, "output sorted by vertex list");
    }
}
