use super::context::{rotation, C4Context, FIX_24};
use super::{no, rdel, resolve, split_component, Plan, ReductionStep, StepOutcome};
use crate::error::{invariant, usage, Result};
use crate::graph::Instance;

/// Handles a 4-cycle with exactly three vertices of degree three.
pub fn reduce_c4_three_deg3(inst: &Instance, ctx: &C4Context) -> Result<StepOutcome> {
    plan(inst, ctx)?.realize(inst)
}

pub(crate) fn plan(inst: &Instance, ctx: &C4Context) -> Result<Plan> {
    if ctx.degree_three() != 3 {
        return Err(usage!("cycle {:?} has {} vertices of degree three", ctx.v, ctx.degree_three()));
    }
    let k = (0..4).find(|&i| ctx.w[i].is_none()).expect("one vertex has degree two");
    let mut ctx = ctx.relabel(rotation((k + 1) % 4));
    let mut w = [0, 1, 2].map(|i| ctx.wi(i));
    if w[0] == w[2] {
        return Ok(no(format!("cycle {:?} with a shared outside neighbour spans a K2,3", ctx.v)));
    }
    let e12 = inst.has_edge(w[0], w[1]);
    let e23 = inst.has_edge(w[1], w[2]);
    match (e12, e23) {
        (false, false) => return rdel::plan(inst, &ctx.v),
        (true, true) => return split_component(inst, ctx.v[0]),
        (false, true) => {
            ctx = ctx.relabel(FIX_24);
            w = [0, 1, 2].map(|i| ctx.wi(i));
        }
        (true, false) => {}
    }
    if inst.degree(w[2]) == 3 {
        return rdel::plan(inst, &ctx.v);
    }

    let v = ctx.v;
    let option_i = v.iter().all(|&x| inst.can_add(x))
        && v[..3].iter().all(|&x| inst.can_delete(x))
        && w.iter().all(|&x| inst.can_delete(x));
    let option_iii = v.iter().all(|&x| inst.can_delete(x))
        && [w[0], v[0], v[1], w[1], v[3], w[2]].iter().all(|&x| inst.can_add(x));
    if let Some(out) = resolve(inst, option_i, option_iii, &v, &ctx.with_outside())? {
        return Ok(out);
    }

    let s = match (inst.degree(w[0]) == 3, inst.degree(w[1]) == 3) {
        (true, true) => return Err(invariant!("both w1 and w2 of {:?} have degree three", v)),
        (true, false) => 1,
        (false, _) => 2,
    };
    if inst.has_edge(w[s - 1], w[2]) {
        // w1 already sees w3, which closes the component at V7
        return split_component(inst, v[0]);
    }
    Ok(Plan::Step(ReductionStep::R3Gadget { v, w, s, x: inst.next_id() }))
}
