//! Incremental violation search for the reduction loop.
//!
//! Every kind of violation is anchored at one vertex (the smallest vertex of
//! a triangle or 4-cycle, the first vertex of a K_{2,3} pair, the vertex a
//! special-class rule applies to). For each kind the tracker keeps the set of
//! anchors that might currently carry a violation; every other vertex is known
//! to be clean. A rewrite only changes edges, degrees and budgets at the
//! vertices it names and their neighbours, so only anchors close to those can
//! change state. Queries walk the candidate set in ascending order and stop at
//! the first hit, which gives exactly the answer of a full scan.

use std::collections::BTreeSet;

use crate::graph::violation::{breach_at, c4_at, c4_violation, k23_at, triangle_at};
use crate::graph::{Instance, SpecialRule, VertexId, Violation};
use crate::reductions::NormalizeRule;

/// Candidate anchors of one family of violations that share a locality radius.
struct Lane {
    /// Distance from a changed vertex within which anchors may change state.
    reach: u8,
    /// Changed vertices not yet expanded into `dirty`.
    pending: BTreeSet<VertexId>,
    /// One candidate set per violation kind of the family.
    dirty: Vec<BTreeSet<VertexId>>,
}

impl Lane {
    fn new(inst: &Instance, reach: u8, kinds: usize) -> Self {
        let all: BTreeSet<VertexId> = inst.vertices().collect();
        Lane { reach, pending: BTreeSet::new(), dirty: vec![all; kinds] }
    }

    fn settle(&mut self, inst: &Instance) {
        let mut ball = BTreeSet::new();
        for t in std::mem::take(&mut self.pending) {
            if !inst.contains(t) {
                continue;
            }
            ball.insert(t);
            if self.reach >= 1 {
                for &x in inst.neighbors(t) {
                    ball.insert(x);
                    if self.reach >= 2 {
                        ball.extend(inst.neighbors(x).iter().copied());
                    }
                }
            }
        }
        for set in &mut self.dirty {
            set.extend(ball.iter().copied());
        }
    }

    /// Smallest anchor of kind `k` where `check` finds something.
    fn first<W>(
        &mut self,
        inst: &Instance,
        k: usize,
        mut check: impl FnMut(&Instance, VertexId) -> Option<W>,
    ) -> Option<W> {
        self.settle(inst);
        let set = &mut self.dirty[k];
        while let Some(&u) = set.first() {
            if inst.contains(u) {
                if let Some(w) = check(inst, u) {
                    return Some(w);
                }
            }
            set.pop_first();
        }
        None
    }
}

const TRIANGLE: usize = 0;
const HIGH_DEGREE: usize = 1;
const K23: usize = 2;
const C4: usize = 3;
const BREACH: usize = 4;

pub(crate) struct Tracker {
    lanes: [Lane; 5],
    scratch: Vec<(VertexId, VertexId)>,
}

impl Tracker {
    pub(crate) fn new(inst: &Instance) -> Self {
        Tracker {
            lanes: [
                Lane::new(inst, 1, 1),
                Lane::new(inst, 0, 1),
                Lane::new(inst, 2, 1),
                Lane::new(inst, 2, 3),
                Lane::new(inst, 1, NormalizeRule::ALL.len()),
            ],
            scratch: Vec::new(),
        }
    }

    /// Records that a rewrite naming `named` is about to be applied to `pre`.
    pub(crate) fn touch(&mut self, pre: &Instance, named: &[VertexId]) {
        let mut changed: BTreeSet<VertexId> = named.iter().copied().collect();
        for &v in named {
            if pre.contains(v) {
                changed.extend(pre.neighbors(v).iter().copied());
            }
        }
        for lane in &mut self.lanes {
            lane.pending.extend(changed.iter().copied());
        }
    }

    /// Same answer as [`find_violation`](crate::graph::find_violation).
    pub(crate) fn next(&mut self, inst: &Instance) -> Option<Violation> {
        if let Some(t) = self.lanes[TRIANGLE].first(inst, 0, triangle_at) {
            return Some(Violation::Triangle(t));
        }
        if let Some(v) = self.lanes[HIGH_DEGREE].first(inst, 0, |g, v| (g.degree(v) >= 4).then_some(v)) {
            return Some(Violation::HighDegree(v));
        }
        let scratch = &mut self.scratch;
        if let Some((pair, common)) = self.lanes[K23].first(inst, 0, |g, u| k23_at(g, u, scratch)) {
            return Some(Violation::K23 { pair, common });
        }
        for slot in 0..3 {
            if let Some(cycle) = self.lanes[C4].first(inst, slot, |g, a| c4_at(g, a, slot)) {
                return Some(c4_violation(inst, cycle));
            }
        }
        let rule = |k: usize| NormalizeRule::ALL[k];
        let lane = &mut self.lanes[BREACH];
        let frozen = [0, 1].into_iter().filter_map(|k| lane.first(inst, k, |g, v| rule(k).applies_at(g, v).then_some(v))).min();
        let anchored = [
            (SpecialRule::DeletionBudget, frozen),
            (SpecialRule::AdditionNeighbor, lane.first(inst, 2, |g, v| rule(2).applies_at(g, v).then_some(v))),
            (SpecialRule::AdjacentDegreeThree, lane.first(inst, 3, |g, v| rule(3).applies_at(g, v).then_some(v))),
        ];
        anchored.into_iter().find_map(|(r, u)| breach_at(inst, r, u?))
    }

    /// The normalisation rule to apply next and the vertex it applies to.
    /// Only meaningful once [`next`](Self::next) reports a special-class breach.
    pub(crate) fn normalize_target(&mut self, inst: &Instance) -> Option<(NormalizeRule, VertexId)> {
        let lane = &mut self.lanes[BREACH];
        NormalizeRule::ALL
            .iter()
            .enumerate()
            .find_map(|(k, &rule)| lane.first(inst, k, |g, v| rule.applies_at(g, v).then_some((rule, v))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{find_violation, Budget};
    use crate::reductions::{normalize_plan, plan, plan_rule, Plan};
    use crate::toolkit::gen_planted;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Runs the reduction loop, checking the tracker against full scans at
    /// every step. Records the kinds of the applied steps.
    fn replay(mut g: Instance, kinds: &mut BTreeSet<&'static str>) -> usize {
        let mut tracker = Tracker::new(&g);
        let mut steps = 0;
        loop {
            let expected = find_violation(&g);
            assert_eq!(tracker.next(&g), expected);
            let Some(violation) = expected else { return steps };
            let p = match violation {
                Violation::SpecialClassBreach { .. } => {
                    let (rule, v) = tracker.normalize_target(&g).unwrap();
                    let p = plan_rule(&g, rule, v).unwrap();
                    assert_eq!(p, normalize_plan(&g).unwrap());
                    p
                }
                other => plan(&g, &other).unwrap(),
            };
            let Plan::Step(step) = p else { return steps };
            tracker.touch(&g, &step.vertices());
            step.apply_in_place(&mut g).unwrap();
            kinds.insert(step.kind());
            steps += 1;
        }
    }

    #[test]
    fn agrees_with_full_scans_on_planted_instances() {
        let (mut total, mut kinds) = (0, BTreeSet::new());
        for seed in 0..200 {
            let g = gen_planted(120, seed, 1 + seed as usize % 6, 0.2 + (seed % 5) as f64 * 0.2).unwrap();
            total += replay(g, &mut kinds);
        }
        assert!(total > 2000, "{total}");
        assert!(kinds.contains("triangle-absorb"), "{kinds:?}");
    }

    /// Random graph of maximum degree three, so that runs reach the 4-cycle
    /// and normalisation stages.
    fn cubic_ish(rng: &mut ChaCha8Rng, n: usize) -> Instance {
        let mut g = Instance::with_vertices(n);
        for _ in 0..n * 3 / 2 {
            let (a, b) = (VertexId(rng.gen_range(0..n as u32)), VertexId(rng.gen_range(0..n as u32)));
            if a != b && !g.has_edge(a, b) && g.degree(a) < 3 && g.degree(b) < 3 {
                g.add_edge(a, b).unwrap();
            }
        }
        for v in g.vertices().collect::<Vec<_>>() {
            g.set_budget(v, Budget::new(rng.gen_bool(0.95), rng.gen_bool(0.95))).unwrap();
        }
        g
    }

    #[test]
    fn agrees_with_full_scans_on_sparse_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (mut total, mut kinds) = (0, BTreeSet::new());
        for _ in 0..2000 {
            let n = rng.gen_range(6..60);
            total += replay(cubic_ish(&mut rng, n), &mut kinds);
        }
        assert!(total > 1000, "{total}");
        for kind in ["r-deletable", "r3-gadget", "r4-shrink", "r4-gadget", "normalize-edge-cut"] {
            assert!(kinds.contains(kind), "{kinds:?}");
        }
    }
}
