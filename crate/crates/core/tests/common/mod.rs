#![allow(dead_code)]

use std::collections::BTreeSet;

use cep11::graph::{find_violation, EditSolution, Instance, Pair, VertexId};
use cep11::matching::Graph;
use cep11::pipeline::verify_solution;
use cep11::reductions::{dispatch, Decision, ReductionStep, StepOutcome};
use cep11::toolkit::{oracle_decide, oracle_solve};
use cep11::Budget;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn v(i: usize) -> VertexId {
    VertexId(i as u32)
}

pub fn randomize_budgets(inst: &mut Instance, rng: &mut impl Rng, p_one: f64) {
    let vs: Vec<VertexId> = inst.vertices().collect();
    for x in vs {
        inst.set_budget(x, Budget::new(rng.gen_bool(p_one), rng.gen_bool(p_one))).unwrap();
    }
}

/// Adds `u v` unless that would create a triangle or a vertex of degree four.
pub fn try_sparse_edge(g: &mut Instance, a: VertexId, b: VertexId) -> bool {
    if a == b || g.has_edge(a, b) || g.degree(a) >= 3 || g.degree(b) >= 3 {
        return false;
    }
    if g.neighbors(a).iter().any(|&c| g.has_edge(c, b)) {
        return false;
    }
    g.add_edge(a, b).unwrap();
    true
}

/// A random triangle-free graph of maximum degree three.
pub fn sparse_graph(rng: &mut impl Rng, n: usize, p: f64) -> Instance {
    let mut g = Instance::with_vertices(n);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    for (a, b) in pairs {
        if rng.gen_bool(p) {
            try_sparse_edge(&mut g, v(a), v(b));
        }
    }
    g
}

/// A 4-cycle on `0..4` whose first `outside` vertices (in a random rotation)
/// get a private neighbour, plus `extra` further vertices; the non-cycle
/// vertices are joined at random while keeping the graph triangle-free with
/// maximum degree three.
pub fn c4_configuration(rng: &mut impl Rng, outside: usize, extra: usize, p: f64) -> Instance {
    let n = 4 + outside + extra;
    let mut g = Instance::with_vertices(n);
    for i in 0..4 {
        g.add_edge(v(i), v((i + 1) % 4)).unwrap();
    }
    let mut slots = [0usize, 1, 2, 3];
    slots.shuffle(rng);
    let mut on_cycle: Vec<usize> = slots[..outside].to_vec();
    on_cycle.sort_unstable();
    for (j, &c) in on_cycle.iter().enumerate() {
        g.add_edge(v(c), v(4 + j)).unwrap();
    }
    let mut pairs: Vec<(usize, usize)> = (4..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    for (a, b) in pairs {
        if rng.gen_bool(p) {
            try_sparse_edge(&mut g, v(a), v(b));
        }
    }
    g
}

/// Independent check of the matching formulation for tiny graphs: some
/// matching `D` of deletable edges and some matching `A` of addable non-edges
/// make `G - D + A` a cluster graph.
pub fn matching_formulation_decide(inst: &Instance) -> bool {
    let vs: Vec<VertexId> = inst.vertices().collect();
    let mut edges = Vec::new();
    let mut non_edges = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if inst.has_edge(a, b) {
                if inst.can_delete(a) && inst.can_delete(b) {
                    edges.push(Pair::new(a, b));
                }
            } else if inst.can_add(a) && inst.can_add(b) {
                non_edges.push(Pair::new(a, b));
            }
        }
    }
    let ds = all_matchings(&edges);
    let as_ = all_matchings(&non_edges);
    ds.iter().any(|d| {
        as_.iter().any(|a| {
            let sol = EditSolution::new(d.iter().copied().collect(), a.iter().copied().collect());
            verify_solution(inst, &sol).is_ok()
        })
    })
}

pub fn all_matchings(pairs: &[Pair]) -> Vec<Vec<Pair>> {
    fn go(pairs: &[Pair], i: usize, used: &mut BTreeSet<VertexId>, cur: &mut Vec<Pair>, out: &mut Vec<Vec<Pair>>) {
        if i == pairs.len() {
            out.push(cur.clone());
            return;
        }
        go(pairs, i + 1, used, cur, out);
        let [a, b] = pairs[i].ends();
        if !used.contains(&a) && !used.contains(&b) {
            used.insert(a);
            used.insert(b);
            cur.push(pairs[i]);
            go(pairs, i + 1, used, cur, out);
            cur.pop();
            used.remove(&a);
            used.remove(&b);
        }
    }
    let mut out = Vec::new();
    go(pairs, 0, &mut BTreeSet::new(), &mut Vec::new(), &mut out);
    out
}

/// Vertex masks of every matching of `g` (at most 16 vertices).
pub fn matching_masks(g: &Graph) -> BTreeSet<u32> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = BTreeSet::new();
    fn go(edges: &[(usize, usize)], i: usize, mask: u32, out: &mut BTreeSet<u32>) {
        if i == edges.len() {
            out.insert(mask);
            return;
        }
        go(edges, i + 1, mask, out);
        let (a, b) = edges[i];
        let m = (1 << a) | (1 << b);
        if mask & m == 0 {
            go(edges, i + 1, mask | m, out);
        }
    }
    go(&edges, 0, 0, &mut out);
    out
}

/// Whether `m` is a matching of `g` covering `cover` and avoiding `avoid`.
pub fn valid_witness(g: &Graph, cover: &BTreeSet<usize>, avoid: &BTreeSet<usize>, m: &[(usize, usize)]) -> bool {
    let mut used = BTreeSet::new();
    for &(a, b) in m {
        if !g.has_edge(a, b) || !used.insert(a) || !used.insert(b) {
            return false;
        }
    }
    cover.iter().all(|x| used.contains(x)) && !avoid.iter().any(|x| used.contains(x))
}

/// What one reduction application looked like, for the soundness checks.
pub struct Checked {
    pub kind: &'static str,
    pub pre_size: usize,
    pub ok: Result<(), String>,
}

/// Applies the reduction for the first violation of `pre` and checks it
/// against the oracle: a rewrite must keep the answer and lift every oracle
/// solution of the result to a verified solution of `pre`; a decision must
/// match the oracle. Returns `None` once `pre` is in the special class.
pub fn check_one_step(pre: &Instance) -> Option<(Checked, Option<Instance>)> {
    let violation = find_violation(pre)?;
    let expected = oracle_decide(pre).unwrap();
    let size = pre.vertex_count();
    let out = match dispatch(pre, &violation) {
        Err(e) => return Some((Checked { kind: "error", pre_size: size, ok: Err(e.to_string()) }, None)),
        Ok(out) => out,
    };
    Some(match out {
        StepOutcome::Decided(Decision::No(reason)) => {
            let ok = if expected { Err(format!("decided NO ({reason}) on a YES instance")) } else { Ok(()) };
            (Checked { kind: "decided", pre_size: size, ok }, None)
        }
        StepOutcome::Decided(Decision::Yes(sol)) => {
            let ok = match verify_solution(pre, &sol) {
                Ok(()) if expected => Ok(()),
                Ok(()) => Err("verified YES certificate on an oracle-NO instance".to_string()),
                Err(why) => Err(format!("decided YES with a bad certificate: {why}")),
            };
            (Checked { kind: "decided", pre_size: size, ok }, None)
        }
        StepOutcome::Rewritten(post, step) => {
            let ok = check_rewrite(pre, &post, &step, expected);
            (Checked { kind: step.kind(), pre_size: size, ok }, Some(post))
        }
    })
}

pub fn check_rewrite(pre: &Instance, post: &Instance, step: &ReductionStep, expected: bool) -> Result<(), String> {
    let post_sol = oracle_solve(post).map_err(|e| e.to_string())?;
    if post_sol.is_some() != expected {
        return Err(format!("oracle(pre) = {expected} but oracle(post) = {}", post_sol.is_some()));
    }
    if let Some(sol) = post_sol {
        let d = step.lift(&sol.deletions).map_err(|e| format!("lift failed: {e}"))?;
        let lifted = EditSolution::from_deletions(pre, d).map_err(|e| format!("lifted deletions: {e}"))?;
        verify_solution(pre, &lifted).map_err(|e| format!("lifted solution: {e}"))?;
    }
    Ok(())
}
