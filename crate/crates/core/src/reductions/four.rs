use std::collections::BTreeSet;

use super::context::{rotation, C4Context, SIGMA, TAU};
use super::{no, rdel, resolve, split_component, Plan, ReductionStep, StepOutcome};
use crate::error::{invariant, usage, Result};
use crate::graph::{component_within, Instance, VertexId};

/// Handles a 4-cycle whose vertices all have degree three. The instance must
/// be triangle-free with maximum degree three.
pub fn reduce_c4_four_deg3(inst: &Instance, ctx: &C4Context) -> Result<StepOutcome> {
    plan(inst, ctx)?.realize(inst)
}

pub(crate) fn plan(inst: &Instance, ctx: &C4Context) -> Result<Plan> {
    if ctx.degree_three() != 4 {
        return Err(usage!("cycle {:?} has {} vertices of degree three", ctx.v, ctx.degree_three()));
    }
    run(inst, *ctx, false)
}

fn run(inst: &Instance, ctx: C4Context, rerooted: bool) -> Result<Plan> {
    let w = ctx.w.map(|x| x.expect("degree three"));
    if w[0] == w[2] || w[1] == w[3] {
        return Ok(no(format!("cycle {:?} with a shared outside neighbour spans a K2,3", ctx.v)));
    }
    if ctx.v.iter().any(|&v| !inst.can_add(v) || !inst.can_delete(v)) {
        return Ok(no(format!("cycle {:?} has a vertex with a spent budget", ctx.v)));
    }
    if (0..4).all(|i| ctx.e(inst, i)) {
        return split_component(inst, ctx.v[0]);
    }

    let k = (0..4).find(|&i| !ctx.e(inst, i)).expect("some e_i is absent");
    let ctx = ctx.relabel(rotation(k));
    let w = ctx.w.map(|x| x.expect("degree three"));
    let e = [0, 1, 2, 3].map(|i| ctx.e(inst, i));

    let option_i = !(e[1] && e[2] && e[3]) && w.iter().all(|&x| inst.can_delete(x));
    let option_ii = e[1] && e[3] && w.iter().all(|&x| inst.can_add(x));
    let v8 = ctx.with_outside();
    if let Some(out) = resolve(inst, option_i, option_ii, &ctx.v, &v8)? {
        return Ok(out);
    }
    // From here w1w4 and w2w3 are edges, w1w2 and w3w4 are not.

    let z = [0, 1, 2, 3].map(|i| ctx.z(inst, i));
    let z1_w3 = z[0] == Some(w[2]);
    let z2_w4 = z[1] == Some(w[3]);
    if z1_w3 && z2_w4 {
        return split_component(inst, ctx.v[0]);
    }
    if z1_w3 || z2_w4 {
        return rdel::plan(inst, &v8);
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if z[i].is_some() && z[i] == z[j] {
                return rdel::plan(inst, &ctx.v);
            }
        }
    }

    let has = |i: usize| z[i].is_some();
    let adj = |i: usize, j: usize| inst.has_edge(z[i].unwrap(), z[j].unwrap());
    if (has(0) && has(3) && !adj(0, 3)) || (has(1) && has(2) && !adj(1, 2)) {
        return rdel::plan(inst, &v8);
    }
    let gplus = (has(0) && has(2) && has(3) && !adj(2, 3))
        || (has(0) && has(1) && has(3) && !adj(0, 1))
        || (has(0) && has(1) && has(2) && !adj(0, 1))
        || (has(1) && has(2) && has(3) && !adj(2, 3));
    if gplus {
        return Ok(Plan::Step(ReductionStep::R2GPlus { v: ctx.v, w }));
    }

    if (has(0) && has(3)) || (has(1) && has(2)) {
        return paired(inst, ctx, rerooted);
    }
    star(inst, ctx)
}

/// `z1` and `z4` both exist (after swapping sides if only `z2`, `z3` do).
fn paired(inst: &Instance, ctx: C4Context, rerooted: bool) -> Result<Plan> {
    let mut ctx = ctx;
    if !(ctx.z(inst, 0).is_some() && ctx.z(inst, 3).is_some()) {
        ctx = ctx.relabel(TAU);
    }
    let mut z = [0, 1, 2, 3].map(|i| ctx.z(inst, i));
    if z[1].is_some() && z[2].is_some() {
        return split_component(inst, ctx.v[0]);
    }
    if z[1].is_some() {
        ctx = ctx.relabel(SIGMA);
        z = [0, 1, 2, 3].map(|i| ctx.z(inst, i));
    }
    let v8 = ctx.with_outside();
    let (z1, z4) = (z[0].unwrap(), z[3].unwrap());

    if let Some(z3) = z[2] {
        let mut v11: BTreeSet<VertexId> = v8.iter().copied().collect();
        v11.extend([z1, z3, z4]);
        if component_within(inst, ctx.v[0], v11.len()).is_some() {
            return split_component(inst, ctx.v[0]);
        }
        let blocked = inst.neighbors(z1).iter().any(|u| !v11.contains(u) && inst.has_edge(*u, z3));
        return if blocked {
            rdel::plan(inst, &v8)
        } else {
            rdel::plan(inst, &ctx.v)
        };
    }

    if inst.degree(z1) == 2 && inst.degree(z4) == 2 {
        return split_component(inst, ctx.v[0]);
    }
    if rerooted {
        return Err(invariant!("re-rooted cycle around {:?} needs another re-root", ctx.v));
    }
    let w = ctx.w.map(|x| x.unwrap());
    let next = C4Context::new(inst, [w[0], ctx.v[0], ctx.v[3], w[3]])?;
    run(inst, next, true)
}

/// At most one of `z1, z4` and at most one of `z2, z3` exists.
fn star(inst: &Instance, ctx: C4Context) -> Result<Plan> {
    let candidates = [ctx, ctx.relabel(SIGMA), ctx.relabel(TAU), ctx.relabel(TAU).relabel(SIGMA)];
    let Some(ctx) = candidates.into_iter().find(|c| c.z(inst, 0).is_some()) else {
        return split_component(inst, ctx.v[0]);
    };
    let w = ctx.w.map(|x| x.unwrap());
    let z1 = ctx.z(inst, 0).unwrap();
    let z = match (ctx.z(inst, 1), ctx.z(inst, 2)) {
        (Some(z2), None) => Some((z2, w[1])),
        (None, Some(z3)) => Some((z3, w[2])),
        (None, None) => None,
        (Some(_), Some(_)) => return Err(invariant!("both z2 and z3 exist around {:?}", ctx.v)),
    };
    Ok(Plan::Step(ReductionStep::R2Star { v: ctx.v, w, z1, z }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{find_violation, Violation};
    use crate::reductions::Decision;

    fn c4_of(g: &Instance) -> C4Context {
        match find_violation(g) {
            Some(Violation::C4 { cycle, degree_three: 4 }) => C4Context::new(g, cycle).unwrap(),
            other => panic!("expected a degree-3 cycle, got {other:?}"),
        }
    }

    #[test]
    fn cube_is_split_whole() {
        let mut e = Vec::new();
        for a in 0u32..8 {
            for bit in [1, 2, 4] {
                if a < a ^ bit {
                    e.push((a, a ^ bit));
                }
            }
        }
        let g = Instance::from_edges(8, &e).unwrap();
        match reduce_c4_four_deg3(&g, &c4_of(&g)).unwrap() {
            StepOutcome::Decided(Decision::Yes(sol)) => assert_eq!(sol.deletions.len(), 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn shared_neighbour_is_no() {
        // cycle 0-1-2-3, 0 and 2 share neighbour 4, 1 and 3 have 5 and 6
        let g = Instance::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4), (1, 5), (3, 6)]).unwrap();
        let ctx = C4Context::new(&g, [VertexId(0), VertexId(1), VertexId(2), VertexId(3)]).unwrap();
        assert!(reduce_c4_four_deg3(&g, &ctx).unwrap().is_no());
    }

    #[test]
    fn rejects_wrong_class() {
        let g = Instance::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let ctx = C4Context::new(&g, [VertexId(0), VertexId(1), VertexId(2), VertexId(3)]).unwrap();
        assert!(reduce_c4_four_deg3(&g, &ctx).is_err());
    }
}
