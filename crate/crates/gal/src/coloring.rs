//! Exact chromatic number and clique cover number.
//!
//! chi is a DSATUR-ordered branch and bound over color classes: a greedy
//! clique is precolored for symmetry breaking, a fresh color may only be the
//! next unused index, and the lower bound combines the clique with
//! ceil(n / alpha). sigma(G) = chi(complement G), sharing the engine.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::alpha_unweighted;

/// Guard for exact coloring instances.
pub const DEFAULT_CHI_GUARD: usize = 40;

#[derive(Clone, Debug)]
pub struct Coloring {
    pub count: usize,
    pub classes: Vec<usize>,
}

/// Exact chromatic number with a witness coloring.
pub fn chi(g: &Graph) -> Result<Coloring> {
    let n = g.n();
    if n == 0 {
        return Ok(Coloring {
            count: 0,
            classes: vec![],
        });
    }
    let clique = greedy_clique(g);
    let (alpha, _) = alpha_unweighted(g)?;
    let lb = clique.count().max(n.div_ceil(alpha as usize));
    let (ub, greedy_coloring) = dsatur_greedy(g);
    if ub == lb {
        return Ok(verify(g, lb, greedy_coloring));
    }
    for k in lb..ub {
        if let Some(classes) = k_colorable(g, k, &clique) {
            return Ok(verify(g, k, classes));
        }
    }
    Ok(verify(g, ub, greedy_coloring))
}

/// Clique cover number sigma(G) = chi(complement of G), with the cover as the
/// witness (each color class of the complement coloring is a clique of G).
pub fn sigma(g: &Graph) -> Result<(usize, Vec<VertexSet>)> {
    let comp = g.complement();
    let coloring = chi(&comp)?;
    let mut cover: Vec<VertexSet> = (0..coloring.count).map(|_| VertexSet::new(g.n())).collect();
    for (v, &c) in coloring.classes.iter().enumerate() {
        cover[c].insert(v);
    }
    for c in &cover {
        if !g.is_clique(c) {
            return Err(Error::Solver(
                "clique cover witness failed validation".into(),
            ));
        }
    }
    Ok((coloring.count, cover))
}

fn verify(g: &Graph, count: usize, classes: Vec<usize>) -> Coloring {
    debug_assert!(is_proper(g, &classes));
    assert!(is_proper(g, &classes), "coloring witness failed validation");
    assert!(classes.iter().all(|&c| c < count));
    Coloring { count, classes }
}

fn is_proper(g: &Graph, classes: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| classes[u] != classes[v])
}

/// Deterministic greedy clique: start at the max-degree vertex, extend inside
/// the common neighborhood by degree.
fn greedy_clique(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut clique = VertexSet::new(n);
    let mut common = VertexSet::full(n);
    for &v in &order {
        if common.contains(v) {
            clique.insert(v);
            common.intersect_with(g.neighbors(v));
        }
    }
    clique
}

/// DSATUR greedy upper bound; returns (color count, classes).
fn dsatur_greedy(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut classes = vec![usize::MAX; n];
    let mut used = 0usize;
    for _ in 0..n {
        // Most saturated uncolored vertex; degree then index tiebreaks.
        let v = (0..n)
            .filter(|&v| classes[v] == usize::MAX)
            .max_by_key(|&v| {
                (
                    saturation(g, &classes, v),
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("uncolored vertex remains");
        let forbidden: Vec<bool> = {
            let mut f = vec![false; used + 1];
            for u in g.neighbors(v).iter() {
                if classes[u] != usize::MAX && classes[u] < f.len() {
                    f[classes[u]] = true;
                }
            }
            f
        };
        let c = (0..=used).find(|&c| !forbidden[c]).unwrap();
        classes[v] = c;
        used = used.max(c + 1);
    }
    (used, classes)
}

fn saturation(g: &Graph, classes: &[usize], v: usize) -> usize {
    let mut seen = std::collections::BTreeSet::new();
    for u in g.neighbors(v).iter() {
        if classes[u] != usize::MAX {
            seen.insert(classes[u]);
        }
    }
    seen.len()
}

/// Backtracking k-colorability with the clique precolored and canonical
/// new-color introduction.
fn k_colorable(g: &Graph, k: usize, clique: &VertexSet) -> Option<Vec<usize>> {
    let n = g.n();
    if clique.count() > k {
        return None;
    }
    let mut classes = vec![usize::MAX; n];
    let mut used = 0usize;
    for v in clique.iter() {
        classes[v] = used;
        used += 1;
    }
    if extend(g, k, &mut classes, used) {
        Some(classes)
    } else {
        None
    }
}

fn extend(g: &Graph, k: usize, classes: &mut [usize], used: usize) -> bool {
    let n = g.n();
    let mut pick = None;
    let mut best = (0usize, 0usize);
    for v in 0..n {
        if classes[v] != usize::MAX {
            continue;
        }
        let key = (saturation(g, classes, v), g.degree(v));
        if pick.is_none() || key > best {
            best = key;
            pick = Some(v);
        }
    }
    let Some(v) = pick else {
        return true;
    };
    let mut forbidden = vec![false; k];
    for u in g.neighbors(v).iter() {
        if classes[u] != usize::MAX {
            forbidden[classes[u]] = true;
        }
    }
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if forbidden[c] {
            continue;
        }
        classes[v] = c;
        if extend(g, k, classes, used.max(c + 1)) {
            return true;
        }
        classes[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty_graph, random_gnp, Graph};

    #[test]
    fn odd_cycles_need_three() {
        assert_eq!(chi(&cycle(5).unwrap()).unwrap().count, 3);
        assert_eq!(chi(&cycle(7).unwrap()).unwrap().count, 3);
        assert_eq!(chi(&cycle(6).unwrap()).unwrap().count, 2);
    }

    #[test]
    fn bipartite_is_two() {
        // Random bipartite: parts {0..3}, {4..7}.
        let mut edges = vec![];
        for u in 0..4 {
            for v in 4..8 {
                if (u * 7 + v) % 3 != 0 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(8, &edges).unwrap();
        assert_eq!(chi(&g).unwrap().count, 2);
    }

    #[test]
    fn complete_and_empty() {
        assert_eq!(chi(&complete(6).unwrap()).unwrap().count, 6);
        assert_eq!(chi(&empty_graph(6).unwrap()).unwrap().count, 1);
        assert_eq!(sigma(&complete(6).unwrap()).unwrap().0, 1);
        assert_eq!(sigma(&empty_graph(6).unwrap()).unwrap().0, 6);
    }

    #[test]
    fn sigma_pentagon() {
        // Two disjoint edges plus a vertex.
        let (s, cover) = sigma(&cycle(5).unwrap()).unwrap();
        assert_eq!(s, 3);
        assert_eq!(cover.len(), 3);
    }

    #[test]
    fn sigma_equals_chi_of_complement() {
        for seed in 0..6 {
            let g = random_gnp(9, 0.5, seed).unwrap();
            let (s, _) = sigma(&g).unwrap();
            assert_eq!(s, chi(&g.complement()).unwrap().count);
        }
    }

    #[test]
    fn brute_force_cross_check() {
        // chi against exhaustive assignment search for tiny graphs.
        fn brute_chi(g: &Graph) -> usize {
            for k in 1..=g.n() {
                if try_all(g, k, &mut vec![usize::MAX; g.n()], 0) {
                    return k;
                }
            }
            0
        }
        fn try_all(g: &Graph, k: usize, classes: &mut Vec<usize>, v: usize) -> bool {
            if v == g.n() {
                return true;
            }
            for c in 0..k {
                if g.neighbors(v).iter().all(|u| classes[u] != c) {
                    classes[v] = c;
                    if try_all(g, k, classes, v + 1) {
                        return true;
                    }
                    classes[v] = usize::MAX;
                }
            }
            false
        }
        for seed in 0..6 {
            let g = random_gnp(8, 0.5, seed).unwrap();
            assert_eq!(chi(&g).unwrap().count, brute_chi(&g), "seed {seed}");
        }
    }
}
