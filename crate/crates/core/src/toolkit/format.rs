//! Plain-text instance and certificate files.
//!
//! ```text
//! c a path on three vertices, middle vertex may not gain an edge
//! p cep11 3 2
//! w 2 0 1
//! e 1 2
//! e 2 3
//! ```
//!
//! Vertex numbers in files are 1-based; internally vertex `k` is `VertexId(k - 1)`.
//! Weight lines give a* then d*; vertices without one default to `1 1`.
//! Certificates use `d u v` for deletions and `a u v` for additions.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Budget, EditSolution, Instance, Pair, VertexId};

fn input(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Input(format!("line {line}: {msg}"))
}

fn fields(line: &str) -> impl Iterator<Item = &str> {
    line.split_whitespace()
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| input(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| input(line, format!("{what} {tok:?} is not a non-negative integer")))
}

fn vertex(tok: Option<&str>, line: usize, n: usize) -> Result<VertexId> {
    let v = number(tok, line, "vertex")?;
    if v == 0 || v > n {
        return Err(input(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(VertexId(v as u32 - 1))
}

fn no_trailing<'a>(mut rest: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match rest.next() {
        Some(tok) => Err(input(line, format!("unexpected trailing token {tok:?}"))),
        None => Ok(()),
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut inst: Option<Instance> = None;
    let mut expected_edges = 0;
    let mut weighted = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tok = fields(raw);
        let Some(kind) = tok.next() else { continue };
        match kind {
            "c" => continue,
            "p" => {
                if inst.is_some() {
                    return Err(input(line, "second header line"));
                }
                if tok.next() != Some("cep11") {
                    return Err(input(line, "header must read `p cep11 <n> <m>`"));
                }
                let n = number(tok.next(), line, "vertex count")?;
                expected_edges = number(tok.next(), line, "edge count")?;
                no_trailing(tok, line)?;
                inst = Some(Instance::with_vertices(n));
            }
            "w" | "e" => {
                let g = inst.as_mut().ok_or_else(|| input(line, "data before the `p` header"))?;
                let n = g.vertex_count();
                let u = vertex(tok.next(), line, n)?;
                if kind == "w" {
                    let a = number(tok.next(), line, "a*")?;
                    let d = number(tok.next(), line, "d*")?;
                    no_trailing(tok, line)?;
                    if !weighted.insert(u) {
                        return Err(input(line, format!("second weight line for vertex {}", u.0 + 1)));
                    }
                    let budget = match (a, d) {
                        (0 | 1, 0 | 1) => Budget::new(a == 1, d == 1),
                        _ => return Err(input(line, "weights must be 0 or 1")),
                    };
                    g.set_budget(u, budget)?;
                } else {
                    let v = vertex(tok.next(), line, n)?;
                    no_trailing(tok, line)?;
                    if u == v {
                        return Err(input(line, format!("self-loop at vertex {}", u.0 + 1)));
                    }
                    if g.has_edge(u, v) {
                        return Err(input(line, format!("duplicate edge {} {}", u.0 + 1, v.0 + 1)));
                    }
                    g.add_edge(u, v)?;
                }
            }
            other => return Err(input(line, format!("unknown line type {other:?}"))),
        }
    }
    let inst = inst.ok_or_else(|| Error::Input("missing `p cep11 <n> <m>` header".into()))?;
    if inst.edge_count() != expected_edges {
        return Err(Error::Input(format!(
            "header announces {expected_edges} edges but {} were given",
            inst.edge_count()
        )));
    }
    Ok(inst)
}

/// Serializes an instance. Vertex ids are compacted to `1..=n` in ascending
/// order, so an instance whose ids are exactly `0..n` round-trips unchanged.
pub fn write_instance(inst: &Instance) -> String {
    let ids: Vec<VertexId> = inst.vertices().collect();
    let num = |v: VertexId| ids.binary_search(&v).expect("live vertex") + 1;
    let mut out = String::new();
    writeln!(out, "p cep11 {} {}", ids.len(), inst.edge_count()).unwrap();
    for &v in &ids {
        let b = inst.budget(v);
        if b != Budget::FULL {
            writeln!(out, "w {} {} {}", num(v), b.add as u8, b.del as u8).unwrap();
        }
    }
    for e in inst.edges() {
        writeln!(out, "e {} {}", num(e.first()), num(e.second())).unwrap();
    }
    out
}

/// Parses `d u v` / `a u v` lines (and `c` comments). Vertex numbers are
/// checked against `n` when given.
pub fn parse_certificate(text: &str, n: Option<usize>) -> Result<EditSolution> {
    let mut sol = EditSolution::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tok = fields(raw);
        let Some(kind) = tok.next() else { continue };
        let set = match kind {
            "c" => continue,
            "d" => &mut sol.deletions,
            "a" => &mut sol.additions,
            other => return Err(input(line, format!("unknown certificate line {other:?}"))),
        };
        let bound = n.unwrap_or(u32::MAX as usize);
        let u = vertex(tok.next(), line, bound)?;
        let v = vertex(tok.next(), line, bound)?;
        no_trailing(tok, line)?;
        if u == v {
            return Err(input(line, "a pair needs two distinct vertices"));
        }
        if !set.insert(Pair::new(u, v)) {
            return Err(input(line, "pair listed twice"));
        }
    }
    Ok(sol)
}

/// Deletions first, then additions, each in ascending order, 1-based.
pub fn write_certificate(sol: &EditSolution) -> String {
    let mut out = String::new();
    for (kind, set) in [('d', &sol.deletions), ('a', &sol.additions)] {
        for p in set {
            writeln!(out, "{kind} {} {}", p.first().0 + 1, p.second().0 + 1).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SAMPLE: &str = "c a path\np cep11 3 2\nw 2 0 1\ne 1 2\ne 2 3\n";

    #[test]
    fn parses_sample() {
        let g = parse_instance(SAMPLE).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert!(g.has_edge(VertexId(0), VertexId(1)));
        assert!(!g.can_add(VertexId(1)));
        assert!(g.can_delete(VertexId(1)));
        assert_eq!(write_instance(&g), "p cep11 3 2\nw 2 0 1\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn rejects_bad_files() {
        for bad in [
            "",
            "e 1 2\np cep11 2 1\n",
            "p cep11 2 1\ne 1 1\n",
            "p cep11 2 2\ne 1 2\ne 2 1\n",
            "p cep11 2 1\ne 1 3\n",
            "p cep11 2 0\nw 1 2 0\n",
            "p cep11 2 0\np cep11 2 0\n",
            "p cep11 2 2\ne 1 2\n",
            "p dimacs 2 0\n",
            "p cep11 2 0\nx\n",
            "p cep11 2 1\ne 1 2 3\n",
        ] {
            assert!(matches!(parse_instance(bad), Err(Error::Input(_))), "accepted {bad:?}");
        }
    }

    #[test]
    fn certificate_round_trip() {
        let text = "d 1 2\nd 3 4\na 2 5\n";
        let sol = parse_certificate(text, Some(5)).unwrap();
        assert_eq!(sol.deletions.len(), 2);
        assert_eq!(write_certificate(&sol), text);
        assert!(parse_certificate("d 1 9\n", Some(5)).is_err());
        assert!(parse_certificate("d 2 2\n", None).is_err());
    }

    prop_compose! {
        fn arb_instance()(n in 0usize..12)(
            n in Just(n),
            bits in proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2),
            weights in proptest::collection::vec((any::<bool>(), any::<bool>()), n),
        ) -> Instance {
            let mut g = Instance::with_vertices(n);
            let mut k = 0;
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if bits[k] {
                        g.add_edge(VertexId(u), VertexId(v)).unwrap();
                    }
                    k += 1;
                }
            }
            for (v, &(a, d)) in weights.iter().enumerate() {
                g.set_budget(VertexId(v as u32), Budget::new(a, d)).unwrap();
            }
            g
        }
    }

    proptest! {
        #[test]
        fn instance_round_trip(g in arb_instance()) {
            let text = write_instance(&g);
            let back = parse_instance(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(write_instance(&back), text);
        }
    }
}
