use std::collections::BTreeSet;

use super::{no, Plan, ReductionStep, StepOutcome};
use crate::error::{usage, Result};
use crate::graph::violation::find_triangle;
use crate::graph::{Instance, Pair, VertexId};

/// Grows the smallest triangle into the clique it must end up in and removes
/// it, or rejects a vertex of degree four or more once no triangle is left.
pub fn reduce_triangles(inst: &Instance) -> Result<StepOutcome> {
    if let Some(t) = find_triangle(inst, VertexId(0)) {
        return absorb(inst, t)?.realize(inst);
    }
    match inst.vertices().find(|&v| inst.degree(v) >= 4) {
        Some(v) => no(format!("vertex {v} has degree {} in a triangle-free graph", inst.degree(v))).realize(inst),
        None => Err(usage!("no triangle and no vertex of degree four or more")),
    }
}

/// At most one triangle edge can go, so the triangle lies inside one clique of
/// any solution. Neighbours of the growing clique `Q` are handled smallest id
/// first: a single edge to `Q` must be cut, `|Q| - 1` edges must be completed,
/// `|Q|` edges join `Q`, anything in between is fatal.
pub(crate) fn absorb(inst: &Instance, triangle: [VertexId; 3]) -> Result<Plan> {
    // edits so far, kept beside `inst` instead of on a copy of it
    let mut cut: BTreeSet<Pair> = BTreeSet::new();
    let mut spent_del: BTreeSet<VertexId> = BTreeSet::new();
    let mut spent_add: BTreeSet<VertexId> = BTreeSet::new();
    let can_delete = |spent: &BTreeSet<VertexId>, v: VertexId| inst.can_delete(v) && !spent.contains(&v);
    let can_add = |spent: &BTreeSet<VertexId>, v: VertexId| inst.can_add(v) && !spent.contains(&v);

    let mut clique: BTreeSet<VertexId> = triangle.into_iter().collect();
    let mut frontier: BTreeSet<VertexId> = BTreeSet::new();
    for &q in &triangle {
        frontier.extend(inst.neighbors(q).iter().filter(|u| !clique.contains(u)));
    }
    let mut deletions = Vec::new();
    let mut additions = Vec::new();

    while let Some(v) = frontier.pop_first() {
        let hits: Vec<VertexId> = inst
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| clique.contains(&u) && !cut.contains(&Pair::new(v, u)))
            .collect();
        let size = clique.len();
        if hits.len() == 1 {
            let q = hits[0];
            if !(can_delete(&spent_del, v) && can_delete(&spent_del, q)) {
                return Ok(no(format!("edge {v}-{q} must be cut from a clique but is not deletable")));
            }
            cut.insert(Pair::new(v, q));
            spent_del.extend([v, q]);
            deletions.push(Pair::new(v, q));
            continue;
        }
        if hits.len() == size - 1 {
            let m = *clique.iter().find(|q| !hits.contains(q)).expect("one clique vertex is missed");
            if !(can_add(&spent_add, v) && can_add(&spent_add, m)) {
                return Ok(no(format!("pair {v}-{m} must be added to a clique but is not addable")));
            }
            spent_add.extend([v, m]);
            additions.push(Pair::new(v, m));
        } else if hits.len() != size {
            return Ok(no(format!("vertex {v} sees {} of the {size} clique vertices", hits.len())));
        }
        clique.insert(v);
        frontier.extend(inst.neighbors(v).iter().filter(|u| !clique.contains(u)));
    }

    Ok(Plan::Step(ReductionStep::TriangleAbsorb { clique: clique.into_iter().collect(), deletions, additions }))
}
