//! Rewrites that take an arbitrary instance to the special class, one
//! forbidden structure at a time.
//!
//! Every operation either decides the instance outright or returns a smaller
//! (or, for the two-vertex gadget, less cyclic) instance plus a
//! [`ReductionStep`] that can replay the rewrite and lift solutions back.

mod context;
mod four;
mod general;
mod normalize;
mod rdel;
mod step;
mod three;
mod triangle;

pub use context::{rotation, C4Context, Relabel, FIX_13, FIX_24, SIGMA, TAU};
pub use four::reduce_c4_four_deg3;
pub use general::reduce_c4_general;
pub use normalize::normalize_special;
#[cfg(test)]
pub(crate) use normalize::plan as normalize_plan;
pub(crate) use normalize::{plan_rule, Rule as NormalizeRule};
pub use rdel::{apply_r_deletable, R_DELETABLE_MAX};
pub use step::ReductionStep;
pub use three::reduce_c4_three_deg3;
pub use triangle::reduce_triangles;

use crate::error::{invariant, Result};
use crate::graph::{component_within, EditSolution, Instance, VertexId, Violation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    /// A full certificate for the instance the operation was applied to.
    Yes(EditSolution),
    No(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    Decided(Decision),
    Rewritten(Instance, ReductionStep),
}

impl StepOutcome {
    pub fn is_no(&self) -> bool {
        matches!(self, StepOutcome::Decided(Decision::No(_)))
    }
}

/// What a reduction decided, before the rewrite is carried out. The pipeline
/// applies steps in place; the public operations apply them to a copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Plan {
    Decided(Decision),
    Step(ReductionStep),
}

impl Plan {
    pub(crate) fn realize(self, pre: &Instance) -> Result<StepOutcome> {
        Ok(match self {
            Plan::Decided(d) => StepOutcome::Decided(d),
            Plan::Step(step) => StepOutcome::Rewritten(step.apply(pre)?, step),
        })
    }
}

pub(crate) fn no(reason: impl Into<String>) -> Plan {
    Plan::Decided(Decision::No(reason.into()))
}

/// Applies the reduction matching `violation`, which must come from
/// [`find_violation`](crate::graph::find_violation) on `inst`.
pub fn dispatch(inst: &Instance, violation: &Violation) -> Result<StepOutcome> {
    plan(inst, violation)?.realize(inst)
}

pub(crate) fn plan(inst: &Instance, violation: &Violation) -> Result<Plan> {
    match violation {
        Violation::Triangle(t) => triangle::absorb(inst, *t),
        Violation::HighDegree(v) => {
            Ok(no(format!("vertex {v} has degree {} in a triangle-free graph", inst.degree(*v))))
        }
        Violation::K23 { pair, common } => Ok(no(format!(
            "K2,3 on {}, {} and {}, {}, {}",
            pair[0], pair[1], common[0], common[1], common[2]
        ))),
        Violation::C4 { cycle, degree_three } => {
            let ctx = C4Context::new(inst, *cycle)?;
            match degree_three {
                4 => four::plan(inst, &ctx),
                3 => three::plan(inst, &ctx),
                _ => general::plan(inst, &ctx),
            }
        }
        Violation::SpecialClassBreach { .. } => normalize::plan(inst),
    }
}

/// Every solution restricted to a located 4-cycle follows option (i) (all
/// outside edges deleted, the cycle becomes a clique) or one of the options
/// that delete two opposite cycle edges. When weights or structure rule out
/// one side, the other is forced and a constant-size set splits off:
/// the cycle itself if only (i) survives, `wide` if only the others do.
pub(crate) fn resolve(
    inst: &Instance,
    option_i: bool,
    option_other: bool,
    cycle: &[VertexId],
    wide: &[VertexId],
) -> Result<Option<Plan>> {
    Ok(match (option_i, option_other) {
        (false, false) => Some(no("no deletion pattern fits the 4-cycle's budgets")),
        (true, false) => Some(rdel::plan(inst, cycle)?),
        (false, true) => Some(rdel::plan(inst, wide)?),
        (true, true) => None,
    })
}

/// Splits off the whole component of `v`, which the caller knows is small.
pub(crate) fn split_component(inst: &Instance, v: VertexId) -> Result<Plan> {
    match component_within(inst, v, R_DELETABLE_MAX) {
        Some(comp) => rdel::plan(inst, &comp),
        None => Err(invariant!("component of {v} exceeds {R_DELETABLE_MAX} vertices")),
    }
}
