use std::collections::BTreeSet;

use crate::error::{invariant, Result};
use crate::graph::{Budget, Instance, Pair, VertexId};

/// One rewrite of the reduction pipeline, with everything needed to replay it
/// on the pre-step instance and to map a deletion set of the post-step
/// instance back to the pre-step instance.
///
/// Cycle vertices are stored already relabelled into the orientation the
/// rewrite was derived in, so `v[0]..v[3]` always play the roles `v1..v4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionStep {
    /// Clique `clique` grown from a triangle and removed; `deletions` are the
    /// edges cut from it, `additions` the pairs filled in while growing.
    TriangleAbsorb { clique: Vec<VertexId>, deletions: Vec<Pair>, additions: Vec<Pair> },
    /// Set split off together with all its cut edges and a solution of its inside.
    RDeletable { set: Vec<VertexId>, cut: Vec<Pair>, inner: BTreeSet<Pair> },
    /// Cycle removed, `w1w2` and `w3w4` added.
    R2GPlus { v: [VertexId; 4], w: [VertexId; 4] },
    /// `w1..w4` removed, `v1z1` added and `v3z` when `z` exists. `z` carries
    /// its neighbour among `w2, w3`.
    R2Star { v: [VertexId; 4], w: [VertexId; 4], z1: VertexId, z: Option<(VertexId, VertexId)> },
    /// `v1..v4` and `w_{3-s}` removed; fresh `x` (a* = 1, d* = 0) hung on `w_s`,
    /// and `w_s` joined to `w3`.
    R3Gadget { v: [VertexId; 4], w: [VertexId; 3], s: usize, x: VertexId },
    /// `v3, v4` removed and d*(v2) set to 0; `w1` is the outside neighbour of `v1`.
    R4Shrink { v: [VertexId; 4], w1: VertexId },
    /// The cycle minus `x = v1` and `y` (`v4` or `v3`) removed and replaced by
    /// the path `q1 x q3 q4 y q6`; `x_out`, `y_out` stay attached.
    R4Gadget {
        v: [VertexId; 4],
        y: VertexId,
        x_out: VertexId,
        y_out: VertexId,
        q: [VertexId; 4],
    },
    /// Edge `uw` deleted, both endpoints lose their deletion budget.
    NormalizeEdgeCut { u: VertexId, w: VertexId },
    /// The instance was processed one connected component at a time.
    ComponentSplit { parts: Vec<Vec<VertexId>> },
}

fn edge(u: VertexId, v: VertexId) -> Pair {
    Pair::new(u, v)
}

fn forbid_delete(g: &mut Instance, v: VertexId) -> Result<()> {
    let mut b = g.budget(v);
    b.del = false;
    g.set_budget(v, b)
}

impl ReductionStep {
    pub fn kind(&self) -> &'static str {
        match self {
            ReductionStep::TriangleAbsorb { .. } => "triangle-absorb",
            ReductionStep::RDeletable { .. } => "r-deletable",
            ReductionStep::R2GPlus { .. } => "r2-gplus",
            ReductionStep::R2Star { .. } => "r2-star",
            ReductionStep::R3Gadget { .. } => "r3-gadget",
            ReductionStep::R4Shrink { .. } => "r4-shrink",
            ReductionStep::R4Gadget { .. } => "r4-gadget",
            ReductionStep::NormalizeEdgeCut { .. } => "normalize-edge-cut",
            ReductionStep::ComponentSplit { .. } => "component-split",
        }
    }

    /// Performs the rewrite on `pre`. Fresh vertices must receive exactly the
    /// ids recorded in the step.
    pub fn apply(&self, pre: &Instance) -> Result<Instance> {
        let mut g = pre.clone();
        self.apply_in_place(&mut g)?;
        Ok(g)
    }

    /// Like [`apply`](Self::apply) but rewrites `g` itself. On error `g` may
    /// be left partly rewritten.
    pub fn apply_in_place(&self, g: &mut Instance) -> Result<()> {
        match self {
            ReductionStep::TriangleAbsorb { clique, deletions, .. } => {
                let inside: BTreeSet<VertexId> = clique.iter().copied().collect();
                for p in deletions {
                    for end in p.ends() {
                        if !inside.contains(&end) {
                            forbid_delete(g, end)?;
                        }
                    }
                }
                for &v in clique {
                    g.remove_vertex(v)?;
                }
            }
            ReductionStep::RDeletable { set, cut, .. } => {
                let inside: BTreeSet<VertexId> = set.iter().copied().collect();
                for p in cut {
                    for end in p.ends() {
                        if !inside.contains(&end) {
                            forbid_delete(g, end)?;
                        }
                    }
                }
                for &v in set {
                    g.remove_vertex(v)?;
                }
            }
            ReductionStep::R2GPlus { v, w } => {
                for &x in v {
                    g.remove_vertex(x)?;
                }
                g.add_edge(w[0], w[1])?;
                g.add_edge(w[2], w[3])?;
            }
            ReductionStep::R2Star { v, w, z1, z } => {
                for &x in w {
                    g.remove_vertex(x)?;
                }
                g.add_edge(v[0], *z1)?;
                if let Some((z, _)) = z {
                    g.add_edge(v[2], *z)?;
                }
            }
            ReductionStep::R3Gadget { v, w, s, x } => {
                for &c in v {
                    g.remove_vertex(c)?;
                }
                let (keep, drop) = match s {
                    1 => (w[0], w[1]),
                    2 => (w[1], w[0]),
                    _ => return Err(invariant!("R3 gadget side must be 1 or 2, got {s}")),
                };
                g.remove_vertex(drop)?;
                let fresh = g.add_vertex(Budget::new(true, false));
                if fresh != *x {
                    return Err(invariant!("R3 gadget vertex expected id {x}, got {fresh}"));
                }
                g.add_edge(keep, w[2])?;
                g.add_edge(keep, fresh)?;
            }
            ReductionStep::R4Shrink { v, .. } => {
                g.remove_vertex(v[2])?;
                g.remove_vertex(v[3])?;
                forbid_delete(g, v[1])?;
            }
            ReductionStep::R4Gadget { v, y, q, .. } => {
                let x = v[0];
                for &c in &v[1..] {
                    if c != *y {
                        g.remove_vertex(c)?;
                    }
                }
                if g.has_edge(x, *y) {
                    g.remove_edge(x, *y)?;
                }
                g.set_budget(x, Budget::FULL)?;
                g.set_budget(*y, Budget::FULL)?;
                let budgets = [Budget::new(true, false), Budget::FULL, Budget::FULL, Budget::new(true, false)];
                for (expect, b) in q.iter().zip(budgets) {
                    let fresh = g.add_vertex(b);
                    if fresh != *expect {
                        return Err(invariant!("gadget vertex expected id {expect}, got {fresh}"));
                    }
                }
                for (a, b) in [(q[0], x), (x, q[1]), (q[1], q[2]), (q[2], *y), (*y, q[3])] {
                    g.add_edge(a, b)?;
                }
            }
            ReductionStep::NormalizeEdgeCut { u, w } => {
                g.remove_edge(*u, *w)?;
                forbid_delete(g, *u)?;
                forbid_delete(g, *w)?;
            }
            ReductionStep::ComponentSplit { .. } => {}
        }
        Ok(())
    }

    /// Maps a deletion set of the post-step instance to one of the pre-step
    /// instance. Additions are never lifted; they are recomputed at the end.
    pub fn lift(&self, reduced: &BTreeSet<Pair>) -> Result<BTreeSet<Pair>> {
        let mut d = reduced.clone();
        self.lift_in_place(&mut d)?;
        Ok(d)
    }

    /// Like [`lift`](Self::lift) but rewrites `d` itself.
    pub fn lift_in_place(&self, d: &mut BTreeSet<Pair>) -> Result<()> {
        match self {
            ReductionStep::TriangleAbsorb { deletions, .. } => d.extend(deletions.iter().copied()),
            ReductionStep::RDeletable { cut, inner, .. } => {
                d.extend(cut.iter().copied());
                d.extend(inner.iter().copied());
            }
            ReductionStep::R2GPlus { v, w } => {
                let e1 = edge(w[0], w[1]);
                let e3 = edge(w[2], w[3]);
                if d.contains(&e1) != d.contains(&e3) {
                    return Err(invariant!("reduced solution deletes one of w1w2, w3w4 around {:?}", w));
                }
                if d.contains(&e1) {
                    d.remove(&e1);
                    d.remove(&e3);
                    d.extend((0..4).map(|i| edge(v[i], w[i])));
                } else if d.contains(&edge(w[1], w[2])) || d.contains(&edge(w[3], w[0])) {
                    return Err(invariant!("reduced solution deletes w2w3 or w4w1 around {:?}", w));
                } else {
                    d.insert(edge(v[0], v[1]));
                    d.insert(edge(v[2], v[3]));
                }
            }
            ReductionStep::R2Star { v, w, z1, z } => {
                let cycle = [edge(v[0], v[1]), edge(v[1], v[2]), edge(v[2], v[3]), edge(v[3], v[0])];
                let on_cycle: Vec<Pair> = cycle.iter().copied().filter(|e| d.contains(e)).collect();
                match on_cycle.len() {
                    0 => {
                        if !d.remove(&edge(v[0], *z1)) {
                            return Err(invariant!("intact cycle {:?} must cut v1z1", v));
                        }
                        d.insert(edge(*z1, w[0]));
                        if let Some((z, wj)) = z {
                            if !d.remove(&edge(v[2], *z)) {
                                return Err(invariant!("intact cycle {:?} must cut v3z", v));
                            }
                            d.insert(edge(*z, *wj));
                        }
                        d.insert(edge(v[0], v[1]));
                        d.insert(edge(v[2], v[3]));
                    }
                    2 => {
                        for e in on_cycle {
                            d.remove(&e);
                        }
                        d.extend((0..4).map(|i| edge(v[i], w[i])));
                    }
                    k => return Err(invariant!("{k} cycle edges of {:?} deleted", v)),
                }
            }
            ReductionStep::R3Gadget { v, w, s, .. } => {
                let joined = edge(w[s - 1], w[2]);
                if d.remove(&joined) {
                    d.extend((0..3).map(|i| edge(v[i], w[i])));
                } else {
                    d.insert(edge(v[1], v[2]));
                    d.insert(edge(v[3], v[0]));
                }
            }
            ReductionStep::R4Shrink { v, w1 } => {
                if !d.contains(&edge(v[0], *w1)) {
                    d.insert(edge(v[1], v[2]));
                    d.insert(edge(v[3], v[0]));
                }
            }
            ReductionStep::R4Gadget { v, y, x_out, q, .. } => {
                let outside_cut = d.contains(&edge(v[0], *x_out));
                // the gadget path holds every edge at a gadget vertex
                let x = v[0];
                for (a, b) in [(q[0], x), (x, q[1]), (q[1], q[2]), (q[2], *y), (*y, q[3])] {
                    d.remove(&edge(a, b));
                }
                debug_assert!(!d.iter().any(|p| q.iter().any(|&g| p.contains(g))));
                if !outside_cut {
                    d.insert(edge(v[1], v[2]));
                    d.insert(edge(v[3], v[0]));
                }
            }
            ReductionStep::NormalizeEdgeCut { u, w } => {
                d.insert(edge(*u, *w));
            }
            ReductionStep::ComponentSplit { .. } => {}
        }
        Ok(())
    }

    /// Every vertex the step names, sorted.
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = match self {
            ReductionStep::TriangleAbsorb { clique, deletions, .. } => {
                clique.iter().copied().chain(deletions.iter().flat_map(|p| p.ends())).collect()
            }
            ReductionStep::RDeletable { set, cut, .. } => {
                set.iter().copied().chain(cut.iter().flat_map(|p| p.ends())).collect()
            }
            ReductionStep::R2GPlus { v, w } => v.iter().chain(w).copied().collect(),
            ReductionStep::R2Star { v, w, z1, z } => {
                let mut out: Vec<VertexId> = v.iter().chain(w).copied().collect();
                out.push(*z1);
                out.extend(z.map(|(z, _)| z));
                out
            }
            ReductionStep::R3Gadget { v, w, x, .. } => v.iter().chain(w).chain([x]).copied().collect(),
            ReductionStep::R4Shrink { v, w1 } => v.iter().chain([w1]).copied().collect(),
            ReductionStep::R4Gadget { v, x_out, y_out, q, .. } => {
                v.iter().chain([x_out, y_out]).chain(q).copied().collect()
            }
            ReductionStep::NormalizeEdgeCut { u, w } => vec![*u, *w],
            ReductionStep::ComponentSplit { .. } => Vec::new(),
        };
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Ids of fresh vertices introduced by the step.
    pub fn fresh_vertices(&self) -> Vec<VertexId> {
        match self {
            ReductionStep::R3Gadget { x, .. } => vec![*x],
            ReductionStep::R4Gadget { q, .. } => q.to_vec(),
            _ => Vec::new(),
        }
    }
}
