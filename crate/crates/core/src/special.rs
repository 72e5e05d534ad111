//! Decision and certificate construction for the special class: triangle-free,
//! 4-cycle-free, maximum degree three, every vertex of degree at least two may
//! lose an edge, and degree-3 vertices are pairwise non-adjacent and never next
//! to a vertex that cannot gain an edge.
//!
//! In this class an instance is YES exactly when some matching of deletable
//! edges covers the set `Y` below; any maximal extension of such a matching
//! leaves only paths on at most three vertices.

use std::collections::BTreeSet;

use crate::error::{invariant, usage, Result};
use crate::graph::{components, find_violation, EditSolution, Instance, Pair, VertexId};
use crate::matching::{constrained_matching, constrained_matching_doubled, Graph, MatchingQuery};

/// Components up to this size use the padded construction; larger ones use the
/// sparse doubled graph, which avoids the quadratic clique on free vertices.
pub const PADDED_MATCHING_MAX: usize = 200;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionSets {
    /// Vertices by degree, `x[i]` for degree `i`.
    pub x: [BTreeSet<VertexId>; 4],
    /// Degree-2 vertices with a degree-3 neighbour.
    pub x2_near: BTreeSet<VertexId>,
    /// The remaining degree-2 vertices.
    pub x2_far: BTreeSet<VertexId>,
    /// Vertices of `x2_far` next to a vertex that cannot gain an edge.
    pub z: BTreeSet<VertexId>,
    /// Vertices that must lose an edge.
    pub y: BTreeSet<VertexId>,
    /// Vertices that cannot lose an edge.
    pub forbidden: BTreeSet<VertexId>,
}

fn check_special(inst: &Instance) -> Result<()> {
    match find_violation(inst) {
        None => Ok(()),
        Some(v) => Err(usage!("instance is outside the special class: {v:?}")),
    }
}

fn sets_of(inst: &Instance, comp: &[VertexId]) -> PartitionSets {
    let mut s = PartitionSets::default();
    for &v in comp {
        s.x[inst.degree(v).min(3)].insert(v);
        if !inst.can_delete(v) {
            s.forbidden.insert(v);
        }
    }
    for &v in &s.x[2] {
        if inst.neighbors(v).iter().any(|&u| inst.degree(u) == 3) {
            s.x2_near.insert(v);
        } else {
            s.x2_far.insert(v);
        }
    }
    for &v in &s.x2_far {
        if inst.neighbors(v).iter().any(|&u| !inst.can_add(u)) {
            s.z.insert(v);
        }
    }
    s.y = s.z.iter().chain(&s.x2_near).chain(&s.x[3]).copied().collect();
    s
}

/// The vertex classes of a connected special instance with at least two vertices.
pub fn partition_sets(inst: &Instance) -> Result<PartitionSets> {
    check_special(inst)?;
    let comps = components(inst);
    if comps.len() != 1 || inst.vertex_count() < 2 {
        return Err(usage!("partition sets need a connected instance with at least two vertices"));
    }
    Ok(sets_of(inst, &comps[0]))
}

/// A matching of deletable edges covering every vertex that must lose an
/// edge, or `None` if the instance is NO.
pub fn decide_special(inst: &Instance) -> Result<Option<Vec<Pair>>> {
    check_special(inst)?;
    let mut witness = Vec::new();
    for comp in components(inst) {
        if comp.len() < 2 {
            continue;
        }
        let sets = sets_of(inst, &comp);
        if sets.y.intersection(&sets.forbidden).next().is_some() {
            return Ok(None);
        }
        let local = |v: &VertexId| comp.binary_search(v).expect("vertex of the component");
        let mut g = Graph::new(comp.len());
        for (i, &u) in comp.iter().enumerate() {
            for w in inst.neighbors(u) {
                g.add_edge(i, local(w));
            }
        }
        let q = MatchingQuery::new(sets.y.iter().map(local), sets.forbidden.iter().map(local))?;
        let found = if comp.len() <= PADDED_MATCHING_MAX {
            constrained_matching(&g, &q)?
        } else {
            constrained_matching_doubled(&g, &q)?
        };
        match found {
            Some(m) => witness.extend(m.into_iter().map(|(a, b)| Pair::new(comp[a], comp[b]))),
            None => return Ok(None),
        }
    }
    witness.sort_unstable();
    Ok(Some(witness))
}

/// Extends `witness` greedily to a maximal matching of deletable edges and
/// completes every remaining 3-vertex path to a triangle.
pub fn extract_solution_special(inst: &Instance, witness: &[Pair]) -> Result<EditSolution> {
    let mut covered = BTreeSet::new();
    let mut deletions = BTreeSet::new();
    for &p in witness {
        let [a, b] = p.ends();
        if !inst.has_edge(a, b) || !inst.can_delete(a) || !inst.can_delete(b) {
            return Err(invariant!("witness edge {p} is not a deletable edge"));
        }
        if !covered.insert(a) || !covered.insert(b) {
            return Err(invariant!("witness is not a matching at {p}"));
        }
        deletions.insert(p);
    }
    for p in inst.edges() {
        let [a, b] = p.ends();
        if inst.can_delete(a) && inst.can_delete(b) && !covered.contains(&a) && !covered.contains(&b) {
            covered.insert(a);
            covered.insert(b);
            deletions.insert(p);
        }
    }

    let mut rest = inst.clone();
    for p in &deletions {
        rest.remove_edge(p.first(), p.second())?;
    }
    let mut additions = BTreeSet::new();
    for comp in components(&rest) {
        match comp.len() {
            1 | 2 => {}
            3 => {
                let ends: Vec<VertexId> = comp.iter().copied().filter(|&v| rest.degree(v) == 1).collect();
                let [a, b] = ends[..] else {
                    return Err(invariant!("component {comp:?} of G - D is not a path"));
                };
                if !inst.can_add(a) || !inst.can_add(b) {
                    return Err(invariant!("path {comp:?} has an end that cannot gain an edge"));
                }
                additions.insert(Pair::new(a, b));
            }
            k => return Err(invariant!("component of G - D has {k} vertices: {comp:?}")),
        }
    }
    Ok(EditSolution { deletions, additions })
}
