use std::collections::{BTreeMap, BTreeSet};

use super::{no, Decision, Plan, ReductionStep, StepOutcome};
use crate::error::{usage, Result};
use crate::graph::{Instance, Pair, VertexId};
use crate::toolkit::oracle_solve;

/// Largest set [`apply_r_deletable`] accepts.
pub const R_DELETABLE_MAX: usize = 12;

/// Splits off a set `X` that every solution separates from the rest of the
/// graph. The caller is responsible for that property; this function only
/// checks that the cut is affordable and that `G[X]` is solvable on its own.
pub fn apply_r_deletable(inst: &Instance, x: &[VertexId]) -> Result<StepOutcome> {
    plan(inst, x)?.realize(inst)
}

pub(crate) fn plan(inst: &Instance, x: &[VertexId]) -> Result<Plan> {
    let set: BTreeSet<VertexId> = x.iter().copied().collect();
    if set.len() > R_DELETABLE_MAX {
        return Err(usage!(
            "R-deletable sets are limited to {R_DELETABLE_MAX} vertices, got {}",
            set.len()
        ));
    }
    if let Some(v) = set.iter().find(|&&v| !inst.contains(v)) {
        return Err(usage!("vertex {v} is not part of the instance"));
    }

    let mut cut = Vec::new();
    let mut load: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &v in &set {
        for &u in inst.neighbors(v) {
            if set.contains(&u) {
                continue;
            }
            if !inst.can_delete(u) || !inst.can_delete(v) {
                return Ok(no(format!("forced deletion of {v}-{u} is not allowed")));
            }
            cut.push(Pair::new(u, v));
            *load.entry(u).or_default() += 1;
            *load.entry(v).or_default() += 1;
        }
    }
    if let Some((v, _)) = load.iter().find(|(_, &k)| k > 1) {
        return Ok(no(format!("vertex {v} would need more than one deletion")));
    }
    cut.sort_unstable();

    let mut inner = inst.induced(&set.iter().copied().collect::<Vec<_>>());
    for p in &cut {
        for end in p.ends() {
            if set.contains(&end) {
                let mut b = inner.budget(end);
                b.del = false;
                inner.set_budget(end, b)?;
            }
        }
    }
    let Some(sol) = oracle_solve(&inner)? else {
        return Ok(no("the split-off part has no solution of its own"));
    };
    if set.len() == inst.vertex_count() {
        return Ok(Plan::Decided(Decision::Yes(sol)));
    }
    Ok(Plan::Step(ReductionStep::RDeletable { set: set.into_iter().collect(), cut, inner: sol.deletions }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Budget;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn forbidden_cut_is_no() {
        // C4 0..3 with a pendant 4 on vertex 0, d*(4) = 0
        let mut g = Instance::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        g.set_budget(v(4), Budget::new(true, false)).unwrap();
        assert!(apply_r_deletable(&g, &[v(0), v(1), v(2), v(3)]).unwrap().is_no());
    }

    #[test]
    fn isolated_c4_is_solved_with_both_chords() {
        let g = Instance::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        match apply_r_deletable(&g, &[v(0), v(1), v(2), v(3)]).unwrap() {
            StepOutcome::Decided(Decision::Yes(sol)) => {
                assert!(sol.deletions.is_empty());
                assert_eq!(sol.additions, BTreeSet::from([Pair::new(v(0), v(2)), Pair::new(v(1), v(3))]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn isolated_c4_beside_other_component_is_rewritten() {
        let g = Instance::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)]).unwrap();
        match apply_r_deletable(&g, &[v(0), v(1), v(2), v(3)]).unwrap() {
            StepOutcome::Rewritten(post, ReductionStep::RDeletable { cut, inner, .. }) => {
                assert!(cut.is_empty() && inner.is_empty());
                assert_eq!(post.vertex_count(), 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn p3_with_unaddable_end_is_no() {
        // u=0 - x=1 - v=2, d*(x) = 0, a*(u) = 0
        let mut g = Instance::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        g.set_budget(v(1), Budget::new(true, false)).unwrap();
        g.set_budget(v(0), Budget::new(false, true)).unwrap();
        assert!(apply_r_deletable(&g, &[v(0), v(1), v(2)]).unwrap().is_no());
    }

    #[test]
    fn cut_lowers_outside_budget() {
        // path 0-1-2-3, split off {0, 1}
        let g = Instance::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        match apply_r_deletable(&g, &[v(0), v(1)]).unwrap() {
            StepOutcome::Rewritten(post, ReductionStep::RDeletable { cut, .. }) => {
                assert_eq!(cut, vec![Pair::new(v(1), v(2))]);
                assert!(!post.can_delete(v(2)));
                assert!(post.can_delete(v(3)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn oversized_set_is_usage_error() {
        let g = Instance::with_vertices(13);
        let all: Vec<VertexId> = g.vertices().collect();
        assert!(apply_r_deletable(&g, &all).is_err());
    }
}
