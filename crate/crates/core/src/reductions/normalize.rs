use super::{no, rdel, Plan, ReductionStep, StepOutcome};
use crate::error::{usage, Result};
use crate::graph::{Instance, VertexId};

/// The normalisation rules in the order they are tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Rule {
    /// Degree-3 vertex that cannot lose an edge.
    CubicFrozen,
    /// Degree-2 vertex that cannot lose an edge.
    PathFrozen,
    /// Degree-3 vertex next to a vertex that cannot gain an edge.
    UnaddableNeighbour,
    /// Two adjacent degree-3 vertices.
    CubicPair,
}

impl Rule {
    pub(crate) const ALL: [Rule; 4] = [Rule::CubicFrozen, Rule::PathFrozen, Rule::UnaddableNeighbour, Rule::CubicPair];

    pub(crate) fn applies_at(self, inst: &Instance, v: VertexId) -> bool {
        let deg = inst.degree(v);
        match self {
            Rule::CubicFrozen => deg == 3 && !inst.can_delete(v),
            Rule::PathFrozen => deg == 2 && !inst.can_delete(v),
            Rule::UnaddableNeighbour => deg == 3 && inst.neighbors(v).iter().any(|&w| !inst.can_add(w)),
            Rule::CubicPair => deg == 3 && inst.neighbors(v).iter().any(|&w| inst.degree(w) == 3),
        }
    }
}

/// Brings a triangle-free, 4-cycle-free instance of maximum degree three into
/// the special class by fixing the first offending vertex or edge.
pub fn normalize_special(inst: &Instance) -> Result<StepOutcome> {
    plan(inst)?.realize(inst)
}

pub(crate) fn plan(inst: &Instance) -> Result<Plan> {
    for rule in Rule::ALL {
        if let Some(v) = inst.vertices().find(|&v| rule.applies_at(inst, v)) {
            return plan_rule(inst, rule, v);
        }
    }
    Err(usage!("instance already belongs to the special class"))
}

/// Applies `rule` at `v`, which must be the smallest vertex it applies to and
/// no earlier rule may apply anywhere.
pub(crate) fn plan_rule(inst: &Instance, rule: Rule, v: VertexId) -> Result<Plan> {
    let deg = |v: VertexId| inst.degree(v);
    match rule {
        Rule::CubicFrozen => Ok(no(format!("degree-3 vertex {v} cannot lose an edge"))),
        Rule::PathFrozen => {
            let mut set = vec![v];
            set.extend_from_slice(inst.neighbors(v));
            rdel::plan(inst, &set)
        }
        Rule::UnaddableNeighbour => {
            let w = *inst.neighbors(v).iter().find(|&&w| !inst.can_add(w)).expect("rule applies");
            if !inst.can_delete(v) || !inst.can_delete(w) {
                return Ok(no(format!("edge {v}-{w} must be deleted but is not deletable")));
            }
            Ok(Plan::Step(ReductionStep::NormalizeEdgeCut { u: v, w }))
        }
        Rule::CubicPair => {
            let w = *inst.neighbors(v).iter().find(|&&w| deg(w) == 3).expect("rule applies");
            Ok(Plan::Step(ReductionStep::NormalizeEdgeCut { u: v, w }))
        }
    }
}
