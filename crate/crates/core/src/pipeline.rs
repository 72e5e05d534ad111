//! End-to-end solving: component splitting, the reduction loop, the special
//! class decision, and lifting certificates back to the input.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{invariant, Result};
use crate::graph::{components, EditSolution, Instance, Pair, Violation};
use crate::reductions::{plan, plan_rule, Decision, Plan, ReductionStep};
use crate::special::{decide_special, extract_solution_special};
use crate::tracker::Tracker;

pub type ReductionTrace = Vec<ReductionStep>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Answer {
    Yes,
    No,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Applied rewrites, keyed by [`ReductionStep::kind`].
    pub steps: BTreeMap<&'static str, usize>,
    /// Rewrites plus outright decisions.
    pub total_steps: usize,
    /// Vertex count of the largest component processed.
    pub peak_component: usize,
    pub components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub answer: Answer,
    /// Present iff the answer is YES and a certificate was requested.
    pub certificate: Option<EditSolution>,
    pub trace: ReductionTrace,
    pub stats: Stats,
    /// Why the instance was rejected.
    pub reason: Option<String>,
}

/// The step budget for an instance on `n` vertices.
pub fn step_cap(n: usize) -> u128 {
    let n = n.max(1) as u128;
    64 * n * n * n
}

/// Decides the instance and, if asked, produces a certificate checked against
/// `inst` before it is returned.
pub fn solve(inst: &Instance, want_certificate: bool) -> Result<Verdict> {
    let cap = step_cap(inst.vertex_count());
    let parts = components(inst);
    let mut stats = Stats { components: parts.len(), ..Stats::default() };
    let mut trace = Vec::new();
    if parts.len() > 1 {
        trace.push(ReductionStep::ComponentSplit { parts: parts.clone() });
        *stats.steps.entry("component-split").or_default() += 1;
    }

    let mut next_fresh = inst.next_id();
    let mut reduced = BTreeSet::new();
    for part in &parts {
        stats.peak_component = stats.peak_component.max(part.len());
        let mut g = inst.induced(part);
        g.reserve_ids(next_fresh);
        let outcome = reduce_component(&mut g, &mut trace, &mut stats, cap, want_certificate)?;
        if g.next_id() > next_fresh {
            next_fresh = g.next_id();
        }
        match outcome {
            Ok(d) => reduced.extend(d),
            Err(reason) => {
                return Ok(Verdict { answer: Answer::No, certificate: None, trace, stats, reason: Some(reason) })
            }
        }
    }

    let certificate = if want_certificate {
        let sol = lift_solution(inst, &trace, &EditSolution::new(reduced, BTreeSet::new()))?;
        if let Err(why) = verify_solution(inst, &sol) {
            return Err(invariant!("lifted certificate fails verification: {why}"));
        }
        Some(sol)
    } else {
        None
    };
    Ok(Verdict { answer: Answer::Yes, certificate, trace, stats, reason: None })
}

/// Runs one component to a decision. The inner result is the deletion set of
/// the final reduced component on YES and the rejection reason on NO.
fn reduce_component(
    g: &mut Instance,
    trace: &mut ReductionTrace,
    stats: &mut Stats,
    cap: u128,
    want_certificate: bool,
) -> Result<std::result::Result<BTreeSet<Pair>, String>> {
    let mut tracker = Tracker::new(g);
    loop {
        let Some(violation) = tracker.next(g) else {
            return Ok(match decide_special(g)? {
                None => Err("no matching covers the vertices that must lose an edge".to_string()),
                Some(w) if want_certificate => Ok(extract_solution_special(g, &w)?.deletions),
                Some(_) => Ok(BTreeSet::new()),
            });
        };
        stats.total_steps += 1;
        if stats.total_steps as u128 > cap {
            return Err(invariant!("step cap {cap} exceeded"));
        }
        let planned = match violation {
            Violation::SpecialClassBreach { .. } => {
                let (rule, v) = tracker
                    .normalize_target(g)
                    .ok_or_else(|| invariant!("special-class breach without an applicable rule"))?;
                plan_rule(g, rule, v)?
            }
            other => plan(g, &other)?,
        };
        match planned {
            Plan::Decided(Decision::No(reason)) => return Ok(Err(reason)),
            Plan::Decided(Decision::Yes(sol)) => return Ok(Ok(sol.deletions)),
            Plan::Step(step) => {
                tracker.touch(g, &step.vertices());
                step.apply_in_place(g)?;
                *stats.steps.entry(step.kind()).or_default() += 1;
                trace.push(step);
            }
        }
    }
}

/// Maps a solution of the fully reduced instance back through `trace` to a
/// certificate of `original`. Additions of `reduced` are ignored; the final
/// additions are recomputed from the components of `G - D`.
pub fn lift_solution(original: &Instance, trace: &[ReductionStep], reduced: &EditSolution) -> Result<EditSolution> {
    let mut d = reduced.deletions.clone();
    for step in trace.iter().rev() {
        step.lift_in_place(&mut d)?;
    }
    let sol = EditSolution::from_deletions(original, d).map_err(|why| invariant!("lifting: {why}"))?;
    let mut seen = BTreeSet::new();
    for p in &sol.additions {
        for end in p.ends() {
            if !original.can_add(end) || !seen.insert(end) {
                return Err(invariant!("recomputed additions are not a matching of addable pairs at {end}"));
            }
        }
    }
    Ok(sol)
}

/// Checks `sol` against `inst`, naming the first failing condition.
pub fn verify_solution(inst: &Instance, sol: &EditSolution) -> std::result::Result<(), String> {
    let mut deleted_at = BTreeSet::new();
    for p in &sol.deletions {
        let [a, b] = p.ends();
        if !inst.contains(a) || !inst.contains(b) {
            return Err(format!("deletion {p} names a vertex outside the instance"));
        }
        if !inst.has_edge(a, b) {
            return Err(format!("deletion {p} is not an edge"));
        }
        for v in [a, b] {
            if !inst.can_delete(v) {
                return Err(format!("deletion {p} exceeds the deletion budget of {v}"));
            }
            if !deleted_at.insert(v) {
                return Err(format!("deletions are not a matching: {v} loses two edges"));
            }
        }
    }
    let mut added_at = BTreeSet::new();
    for p in &sol.additions {
        let [a, b] = p.ends();
        if !inst.contains(a) || !inst.contains(b) {
            return Err(format!("addition {p} names a vertex outside the instance"));
        }
        if inst.has_edge(a, b) {
            return Err(format!("addition {p} is already an edge"));
        }
        for v in [a, b] {
            if !inst.can_add(v) {
                return Err(format!("addition {p} exceeds the addition budget of {v}"));
            }
            if !added_at.insert(v) {
                return Err(format!("additions are not a matching: {v} gains two edges"));
            }
        }
    }
    let mut edited = inst.clone();
    for p in &sol.deletions {
        edited.remove_edge(p.first(), p.second()).map_err(|e| e.to_string())?;
    }
    for p in &sol.additions {
        edited.add_edge(p.first(), p.second()).map_err(|e| e.to_string())?;
    }
    for comp in components(&edited) {
        if let Some(&v) = comp.iter().find(|&&v| edited.degree(v) + 1 != comp.len()) {
            return Err(format!("the edited graph is not a cluster graph: component of {} is not a clique", v));
        }
    }
    Ok(())
}

/// Convenience wrapper returning only the answer.
pub fn decide(inst: &Instance) -> Result<bool> {
    Ok(solve(inst, false)?.answer == Answer::Yes)
}
