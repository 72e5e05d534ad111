//! Reproducible instance generators. All randomness comes from ChaCha8 seeded
//! with a `u64`, so a seed names the same instance on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{usage, Result};
use crate::graph::{Budget, Instance, VertexId};

/// Probability that a randomly drawn budget bit is 1.
pub const BUDGET_ONE_PROBABILITY: f64 = 0.75;

pub const NAMED: &[&str] = &["k23", "petersen", "c4", "c5", "k13", "k14", "p4", "cube", "h-graph"];

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_budget(rng: &mut impl Rng) -> Budget {
    Budget::new(
        rng.gen_bool(BUDGET_ONE_PROBABILITY),
        rng.gen_bool(BUDGET_ONE_PROBABILITY),
    )
}

fn pair(u: usize, v: usize) -> (VertexId, VertexId) {
    (VertexId(u as u32), VertexId(v as u32))
}

/// Erdős–Rényi graph with edge probability `p` and random budgets.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<Instance> {
    if !(0.0..=1.0).contains(&p) {
        return Err(usage!("edge probability {p} outside [0, 1]"));
    }
    let mut rng = rng(seed);
    let mut inst = Instance::with_vertices(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                let (a, b) = pair(u, v);
                inst.add_edge(a, b)?;
            }
        }
    }
    for v in 0..n {
        inst.set_budget(VertexId(v as u32), random_budget(&mut rng))?;
    }
    Ok(inst)
}

/// A YES-instance built backwards from a random cluster graph.
///
/// Clique sizes are uniform in `1..=clique_size_max`. Inside each clique a
/// random set of disjoint pairs is removed, each with probability
/// `edit_density`; about `edit_density * n / 2` disjoint pairs across cliques
/// are added. Endpoints of removed pairs get a* = 1, endpoints of added pairs
/// get d* = 1, and every other budget bit is random.
pub fn gen_planted(n: usize, seed: u64, clique_size_max: usize, edit_density: f64) -> Result<Instance> {
    if n == 0 {
        return Err(usage!("planted instances need at least one vertex"));
    }
    if clique_size_max == 0 {
        return Err(usage!("clique_size_max must be positive"));
    }
    if !(0.0..=1.0).contains(&edit_density) {
        return Err(usage!("edit density {edit_density} outside [0, 1]"));
    }
    let mut rng = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut clique_of = vec![0usize; n];
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut rest = &order[..];
    while !rest.is_empty() {
        let size = rng.gen_range(1..=clique_size_max).min(rest.len());
        let (head, tail) = rest.split_at(size);
        for &v in head {
            clique_of[v] = cliques.len();
        }
        cliques.push(head.to_vec());
        rest = tail;
    }

    let mut budgets: Vec<Budget> = (0..n).map(|_| random_budget(&mut rng)).collect();
    let mut inst = Instance::with_vertices(n);
    for clique in &cliques {
        let mut removed = vec![false; clique.len() * clique.len()];
        let k = clique.len();
        for i in 0..k / 2 {
            if rng.gen_bool(edit_density) {
                let (x, y) = (2 * i, 2 * i + 1);
                removed[x * k + y] = true;
                budgets[clique[x]].add = true;
                budgets[clique[y]].add = true;
            }
        }
        for x in 0..k {
            for y in x + 1..k {
                if !removed[x * k + y] {
                    let (a, b) = pair(clique[x], clique[y]);
                    inst.add_edge(a, b)?;
                }
            }
        }
    }

    let target = (edit_density * n as f64 / 2.0).round() as usize;
    let mut free: Vec<usize> = (0..n).collect();
    free.shuffle(&mut rng);
    let mut used = vec![false; n];
    let mut added = 0;
    for i in 0..free.len() {
        if added == target {
            break;
        }
        let u = free[i];
        if used[u] {
            continue;
        }
        if let Some(&v) = free[i + 1..].iter().find(|&&v| !used[v] && clique_of[v] != clique_of[u]) {
            used[u] = true;
            used[v] = true;
            budgets[u].del = true;
            budgets[v].del = true;
            let (a, b) = pair(u, v);
            inst.add_edge(a, b)?;
            added += 1;
        }
    }
    for (v, b) in budgets.into_iter().enumerate() {
        inst.set_budget(VertexId(v as u32), b)?;
    }
    Ok(inst)
}

fn named_edges(name: &str) -> Option<(usize, Vec<(u32, u32)>)> {
    let cycle = |k: u32| (0..k).map(|i| (i, (i + 1) % k)).collect::<Vec<_>>();
    let star = |k: u32| (1..=k).map(|i| (0, i)).collect::<Vec<_>>();
    Some(match name {
        "k23" => (5, vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
        "petersen" => {
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
                e.push((i, i + 5));
                e.push((5 + i, 5 + (i + 2) % 5));
            }
            (10, e)
        }
        "c4" => (4, cycle(4)),
        "c5" => (5, cycle(5)),
        "k13" => (4, star(3)),
        "k14" => (5, star(4)),
        "p4" => (4, vec![(0, 1), (1, 2), (2, 3)]),
        "cube" => {
            let mut e = Vec::new();
            for u in 0..8u32 {
                for bit in [1, 2, 4] {
                    if u & bit == 0 {
                        e.push((u, u | bit));
                    }
                }
            }
            (8, e)
        }
        // two adjacent centres 0 and 1, each with two leaves
        "h-graph" => (6, vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]),
        _ => return None,
    })
}

/// A named graph with all budgets 1, optionally followed by weight overrides:
/// `cube:a0=1,2:d0=5` sets a* = 0 on vertices 1 and 2 and d* = 0 on vertex 5
/// (vertex numbers are 1-based, as in instance files).
pub fn gen_named(spec: &str) -> Result<Instance> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default();
    let (n, edges) = named_edges(name)
        .ok_or_else(|| usage!("unknown graph name {name:?}; expected one of {}", NAMED.join(", ")))?;
    let mut inst = Instance::from_edges(n, &edges)?;
    for part in parts {
        let (key, list) = part
            .split_once('=')
            .ok_or_else(|| usage!("weight override {part:?} is not of the form a0=ids or d0=ids"))?;
        for tok in list.split(',') {
            let id: usize = tok
                .trim()
                .parse()
                .map_err(|_| usage!("bad vertex number {tok:?} in {part:?}"))?;
            if id == 0 || id > n {
                return Err(usage!("vertex {id} outside 1..={n} in {part:?}"));
            }
            let v = VertexId(id as u32 - 1);
            let mut b = inst.budget(v);
            match key {
                "a0" => b.add = false,
                "d0" => b.del = false,
                _ => return Err(usage!("unknown weight key {key:?}; use a0 or d0")),
            }
            inst.set_budget(v, b)?;
        }
    }
    Ok(inst)
}
