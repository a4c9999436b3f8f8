//! The `p gal` line-oriented graph format.
//!
//! ```text
//! # optional comments
//! p gal <n>
//! e <u> <v>        0-indexed, u != v, each unordered pair at most once
//! w <v> <num>/<den>  optional exact rational weight (default 1)
//! ```
//!
//! The writer is canonical: edges sorted lexicographically, weight lines only
//! for non-unit weights, so write(parse(t)) is byte-identical for
//! canonicalized inputs.

use num::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{self, Rational};
use crate::weights::Weights;

pub fn parse_graph(text: &str) -> Result<(Graph, Weights)> {
    let mut graph: Option<Graph> = None;
    let mut weights: Option<Vec<Rational>> = None;
    let mut weight_seen: Vec<bool> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        let fail = |msg: String| Error::Parse { line: lineno, msg };
        match fields[0] {
            "p" => {
                if graph.is_some() {
                    return Err(fail("duplicate header".into()));
                }
                if fields.len() != 3 || fields[1] != "gal" {
                    return Err(fail(format!("expected `p gal <n>`, got {line:?}")));
                }
                let n: usize = fields[2]
                    .parse()
                    .map_err(|_| fail(format!("bad vertex count {:?}", fields[2])))?;
                graph = Some(Graph::empty(n));
                weights = Some(vec![Rational::one(); n]);
                weight_seen = vec![false; n];
            }
            "e" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| fail("edge before header".into()))?;
                if fields.len() != 3 {
                    return Err(fail(format!("expected `e <u> <v>`, got {line:?}")));
                }
                let u: usize = fields[1]
                    .parse()
                    .map_err(|_| fail(format!("bad vertex {:?}", fields[1])))?;
                let v: usize = fields[2]
                    .parse()
                    .map_err(|_| fail(format!("bad vertex {:?}", fields[2])))?;
                g.add_edge_checked(u, v).map_err(|e| fail(e.to_string()))?;
            }
            "w" => {
                let w = weights
                    .as_mut()
                    .ok_or_else(|| fail("weight before header".into()))?;
                if fields.len() != 3 {
                    return Err(fail(format!("expected `w <v> <num>/<den>`, got {line:?}")));
                }
                let v: usize = fields[1]
                    .parse()
                    .map_err(|_| fail(format!("bad vertex {:?}", fields[1])))?;
                if v >= w.len() {
                    return Err(fail(format!("weight vertex {v} out of range")));
                }
                if weight_seen[v] {
                    return Err(fail(format!("duplicate weight for vertex {v}")));
                }
                let r = rational::parse_rational(fields[2]).map_err(|e| fail(e.to_string()))?;
                if r < Rational::from_integer(0.into()) {
                    return Err(fail(format!("negative weight for vertex {v}")));
                }
                w[v] = r;
                weight_seen[v] = true;
            }
            other => {
                return Err(fail(format!("unknown record {other:?}")));
            }
        }
    }
    let graph = graph.ok_or_else(|| Error::Parse {
        line: text.lines().count().max(1),
        msg: "missing `p gal <n>` header".into(),
    })?;
    let weights = Weights::Exact(weights.unwrap());
    Ok((graph, weights))
}

/// Canonical writer; weights must be exact rationals.
pub fn write_graph(g: &Graph, weights: &Weights) -> Result<String> {
    let w = weights.as_exact()?;
    if w.len() != g.n() {
        return Err(Error::invalid("weight count != vertex count"));
    }
    let mut out = String::new();
    out.push_str(&format!("p gal {}\n", g.n()));
    for (v, r) in w.iter().enumerate() {
        if !r.is_one() {
            out.push_str(&format!("w {} {}\n", v, rational::fmt_canonical(r)));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u, v));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn parse_k2() {
        let (g, w) = parse_graph("p gal 2\ne 0 1\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert!(w.is_all_one());
    }

    #[test]
    fn parse_weighted_k1() {
        let (g, w) = parse_graph("p gal 1\nw 0 3/2\n").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(w.as_exact().unwrap()[0], rat(3, 2));
    }

    #[test]
    fn loop_rejected_with_line_number() {
        let err = parse_graph("p gal 2\ne 0 0\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "{msg}");
        assert!(msg.contains("loop"), "{msg}");
    }

    #[test]
    fn duplicate_edge_rejected() {
        assert!(parse_graph("p gal 3\ne 0 1\ne 1 0\n").is_err());
        assert!(parse_graph("p gal 3\ne 0 1\ne 0 1\n").is_err());
    }

    #[test]
    fn out_of_range_rejected() {
        let err = parse_graph("p gal 2\ne 0 5\n").unwrap_err();
        assert!(err.to_string().contains("out of range"));
        assert!(parse_graph("p gal 2\nw 7 1/2\n").is_err());
    }

    #[test]
    fn malformed_lines() {
        assert!(parse_graph("p gal two\n").is_err());
        assert!(parse_graph("p gal 2\ne 0\n").is_err());
        assert!(parse_graph("e 0 1\n").is_err(), "edge before header");
        assert!(parse_graph("p gal 2\nq 1 2\n").is_err());
        assert!(parse_graph("").is_err(), "missing header");
        assert!(parse_graph("p gal 1\nw 0 1/2\nw 0 1/2\n").is_err());
        assert!(parse_graph("p gal 1\nw 0 -1/2\n").is_err());
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let (g, _) =
            parse_graph("# a pentagon\n\np gal 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n# tail\ne 0 4\n")
                .unwrap();
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn round_trip_is_fixed_point() {
        let text = "p gal 5\nw 2 7/3\ne 0 1\ne 0 4\ne 1 2\ne 2 3\ne 3 4\n";
        let (g, w) = parse_graph(text).unwrap();
        let written = write_graph(&g, &w).unwrap();
        assert_eq!(written, text);
        let (g2, w2) = parse_graph(&written).unwrap();
        assert_eq!(g2.edges(), g.edges());
        assert_eq!(write_graph(&g2, &w2).unwrap(), written);
    }

    #[test]
    fn writer_requires_exact() {
        let g = Graph::empty(1);
        let w = Weights::real(vec![0.5]).unwrap();
        assert!(write_graph(&g, &w).is_err());
    }
}
