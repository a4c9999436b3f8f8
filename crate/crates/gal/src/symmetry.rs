//! Vertex-transitivity detection by backtracking automorphism search.
//!
//! Desk-scale graphs only: the battery uses this to decide whether the
//! alpha(G (x) Gc) = |V| exactness check applies.

use crate::graph::Graph;

/// True when some automorphism maps vertex 0 to every other vertex.
pub fn is_vertex_transitive(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    if degrees.iter().any(|&d| d != degrees[0]) {
        return false;
    }
    (1..n).all(|target| {
        let mut mapping = vec![usize::MAX; n];
        let mut used = vec![false; n];
        mapping[0] = target;
        used[target] = true;
        extend(g, &degrees, &mut mapping, &mut used, 1)
    })
}

fn extend(
    g: &Graph,
    degrees: &[usize],
    mapping: &mut [usize],
    used: &mut [bool],
    v: usize,
) -> bool {
    let n = g.n();
    if v == n {
        return true;
    }
    for image in 0..n {
        if used[image] || degrees[image] != degrees[v] {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(mapping[u], image));
        if consistent {
            mapping[v] = image;
            used[image] = true;
            if extend(g, degrees, mapping, used, v + 1) {
                return true;
            }
            mapping[v] = usize::MAX;
            used[image] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty_graph, petersen, Graph};

    #[test]
    fn transitive_families() {
        assert!(is_vertex_transitive(&cycle(5).unwrap()));
        assert!(is_vertex_transitive(&cycle(7).unwrap()));
        assert!(is_vertex_transitive(&complete(5).unwrap()));
        assert!(is_vertex_transitive(&empty_graph(5).unwrap()));
        assert!(is_vertex_transitive(&petersen()));
    }

    #[test]
    fn non_transitive() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!is_vertex_transitive(&path));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_vertex_transitive(&star));
    }

    #[test]
    fn product_of_transitive_is_transitive() {
        let c5 = cycle(5).unwrap();
        assert!(is_vertex_transitive(&c5.strong_product(&c5)));
    }
}
