use super::context::{rotation, C4Context, FIX_13};
use super::{no, rdel, resolve, split_component, Plan, ReductionStep, StepOutcome};
use crate::error::{usage, Result};
use crate::graph::Instance;

/// Handles a 4-cycle with at most two vertices of degree three.
pub fn reduce_c4_general(inst: &Instance, ctx: &C4Context) -> Result<StepOutcome> {
    plan(inst, ctx)?.realize(inst)
}

pub(crate) fn plan(inst: &Instance, ctx: &C4Context) -> Result<Plan> {
    let k = ctx.degree_three();
    if k > 2 {
        return Err(usage!("cycle {:?} has {k} vertices of degree three", ctx.v));
    }
    if ctx.v.iter().any(|&v| !inst.can_delete(v)) {
        return rdel::plan(inst, &ctx.v);
    }
    let all_add = ctx.v.iter().all(|&v| inst.can_add(v));
    match k {
        0 => split_component(inst, ctx.v[0]),
        1 => {
            let i = (0..4).find(|&i| ctx.w[i].is_some()).unwrap();
            let mut ctx = ctx.relabel(rotation(i));
            let w1 = ctx.wi(0);
            let option_i = all_add && inst.can_delete(w1);
            let other = inst.can_add(w1) && (inst.can_add(ctx.v[1]) || inst.can_add(ctx.v[3]));
            if let Some(out) = resolve(inst, option_i, other, &ctx.v, &ctx.with_outside())? {
                return Ok(out);
            }
            if !inst.can_add(ctx.v[1]) {
                ctx = ctx.relabel(FIX_13);
            }
            Ok(Plan::Step(ReductionStep::R4Shrink { v: ctx.v, w1 }))
        }
        _ => {
            let i = (0..4).find(|&i| ctx.w[i].is_some()).unwrap();
            let mut ctx = ctx.relabel(rotation(i));
            if ctx.w[1].is_some() {
                ctx = ctx.relabel(FIX_13);
            }
            let adjacent = ctx.w[3].is_some();
            let yi = if adjacent { 3 } else { 2 };
            let (x_out, y_out) = (ctx.wi(0), ctx.wi(yi));
            if adjacent && inst.has_edge(x_out, y_out) {
                return split_component(inst, ctx.v[0]);
            }
            if !adjacent && x_out == y_out {
                return Ok(no(format!("cycle {:?} with a shared outside neighbour spans a K2,3", ctx.v)));
            }
            let v = ctx.v;
            let option_i = all_add && inst.can_delete(x_out) && inst.can_delete(y_out);
            let side = if adjacent { [v[1], v[2]] } else { [v[1], v[3]] };
            let other = [x_out, y_out, side[0], side[1]].iter().all(|&x| inst.can_add(x));
            if let Some(out) = resolve(inst, option_i, other, &v, &ctx.with_outside())? {
                return Ok(out);
            }
            let base = inst.next_id().0;
            let q = [0, 1, 2, 3].map(|j| crate::graph::VertexId(base + j));
            Ok(Plan::Step(ReductionStep::R4Gadget { v, y: v[yi], x_out, y_out, q }))
        }
    }
}
