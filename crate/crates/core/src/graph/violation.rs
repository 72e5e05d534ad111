//! Class membership for the reduction pipeline.
//!
//! [`find_violation`] reports the highest-priority obstruction to the special
//! class: triangles, then vertices of degree four or more, then K_{2,3}
//! subgraphs, then 4-cycles grouped by how many of their vertices have degree
//! three, and finally breaches of the three special-class rules. Within one
//! kind the witness with the lexicographically smallest id tuple wins.

use super::{Instance, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SpecialRule {
    /// A vertex of degree at least two with d* = 0.
    DeletionBudget,
    /// A degree-3 vertex next to a vertex with a* = 0.
    AdditionNeighbor,
    /// Two adjacent degree-3 vertices.
    AdjacentDegreeThree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Triangle([VertexId; 3]),
    HighDegree(VertexId),
    K23 { pair: [VertexId; 2], common: [VertexId; 3] },
    /// `cycle` lists the vertices in cyclic order, smallest first, with
    /// `cycle[1] < cycle[3]`.
    C4 { cycle: [VertexId; 4], degree_three: usize },
    SpecialClassBreach { rule: SpecialRule, witness: Vec<VertexId> },
}

/// Returns `None` iff the instance lies in the special class.
pub fn find_violation(inst: &Instance) -> Option<Violation> {
    if let Some(t) = find_triangle(inst, VertexId(0)) {
        return Some(Violation::Triangle(t));
    }
    if let Some(v) = inst.vertices().find(|&v| inst.degree(v) >= 4) {
        return Some(Violation::HighDegree(v));
    }
    if let Some((pair, common)) = find_k23(inst) {
        return Some(Violation::K23 { pair, common });
    }
    if let Some(c4) = find_c4(inst) {
        return Some(c4);
    }
    find_special_breach(inst)
}

/// Smallest triangle whose minimum vertex is at least `from`.
pub(crate) fn find_triangle(inst: &Instance, from: VertexId) -> Option<[VertexId; 3]> {
    inst.vertices().skip_while(|&u| u < from).find_map(|u| triangle_at(inst, u))
}

/// Smallest triangle whose minimum vertex is `u`.
pub(crate) fn triangle_at(inst: &Instance, u: VertexId) -> Option<[VertexId; 3]> {
    let nb = inst.neighbors(u);
    let start = nb.partition_point(|&x| x <= u);
    for (i, &v) in nb[start..].iter().enumerate() {
        for &w in &nb[start + i + 1..] {
            if inst.has_edge(v, w) {
                return Some([u, v, w]);
            }
        }
    }
    None
}

fn find_k23(inst: &Instance) -> Option<([VertexId; 2], [VertexId; 3])> {
    let mut scratch = Vec::new();
    inst.vertices().find_map(|u| k23_at(inst, u, &mut scratch))
}

/// First K_{2,3} whose pair starts at `u` and ends at a larger vertex.
pub(crate) fn k23_at(
    inst: &Instance,
    u: VertexId,
    counts: &mut Vec<(VertexId, VertexId)>,
) -> Option<([VertexId; 2], [VertexId; 3])> {
    if inst.degree(u) < 3 {
        return None;
    }
    // (far endpoint, middle) of every 2-path leaving u towards a larger id
    counts.clear();
    for &x in inst.neighbors(u) {
        for &v in inst.neighbors(x) {
            if v > u {
                counts.push((v, x));
            }
        }
    }
    counts.sort_unstable();
    let mut i = 0;
    while i < counts.len() {
        let mut j = i;
        while j < counts.len() && counts[j].0 == counts[i].0 {
            j += 1;
        }
        if j - i >= 3 {
            let common = [counts[i].1, counts[i + 1].1, counts[i + 2].1];
            return Some(([u, counts[i].0], common));
        }
        i = j;
    }
    None
}

/// Calls `f` once per 4-cycle, in canonical orientation (`c[0]` minimal, `c[1] < c[3]`).
pub(crate) fn for_each_c4(inst: &Instance, mut f: impl FnMut([VertexId; 4])) {
    for a in inst.vertices() {
        for_each_c4_at(inst, a, &mut f);
    }
}

/// The 4-cycles whose minimum vertex is `a`.
fn for_each_c4_at(inst: &Instance, a: VertexId, f: &mut impl FnMut([VertexId; 4])) {
    let na = inst.neighbors(a);
    let start = na.partition_point(|&x| x <= a);
    for (i, &b) in na[start..].iter().enumerate() {
        for &d in &na[start + i + 1..] {
            for &c in inst.neighbors(b) {
                if c > a && c != d && inst.has_edge(c, d) {
                    f([a, b, c, d]);
                }
            }
        }
    }
}

fn degree_three_count(inst: &Instance, c: &[VertexId; 4]) -> usize {
    c.iter().filter(|&&v| inst.degree(v) == 3).count()
}

/// Priority class of a 4-cycle: 0 for four degree-3 vertices, 1 for three,
/// 2 for at most two.
pub(crate) fn c4_slot(inst: &Instance, c: &[VertexId; 4]) -> usize {
    match degree_three_count(inst, c) {
        4 => 0,
        3 => 1,
        _ => 2,
    }
}

/// Smallest 4-cycle of class `slot` whose minimum vertex is `a`.
pub(crate) fn c4_at(inst: &Instance, a: VertexId, slot: usize) -> Option<[VertexId; 4]> {
    let mut best: Option<[VertexId; 4]> = None;
    for_each_c4_at(inst, a, &mut |c| {
        if c4_slot(inst, &c) == slot && best.is_none_or(|b| c < b) {
            best = Some(c);
        }
    });
    best
}

pub(crate) fn c4_violation(inst: &Instance, cycle: [VertexId; 4]) -> Violation {
    Violation::C4 { cycle, degree_three: degree_three_count(inst, &cycle) }
}

fn find_c4(inst: &Instance) -> Option<Violation> {
    let mut best: [Option<[VertexId; 4]>; 3] = [None, None, None];
    for_each_c4(inst, |c| {
        let slot = c4_slot(inst, &c);
        if best[slot].is_none_or(|b| c < b) {
            best[slot] = Some(c);
        }
    });
    best.iter().flatten().next().map(|&cycle| c4_violation(inst, cycle))
}

/// The breach of `rule` anchored at `u`, if any.
pub(crate) fn breach_at(inst: &Instance, rule: SpecialRule, u: VertexId) -> Option<Violation> {
    let witness = match rule {
        SpecialRule::DeletionBudget => (inst.degree(u) >= 2 && !inst.can_delete(u)).then(|| vec![u]),
        SpecialRule::AdditionNeighbor if inst.degree(u) == 3 => {
            inst.neighbors(u).iter().find(|&&w| !inst.can_add(w)).map(|&w| vec![u, w])
        }
        SpecialRule::AdjacentDegreeThree if inst.degree(u) == 3 => {
            inst.neighbors(u).iter().find(|&&w| w > u && inst.degree(w) == 3).map(|&w| vec![u, w])
        }
        _ => None,
    }?;
    Some(Violation::SpecialClassBreach { rule, witness })
}

fn find_special_breach(inst: &Instance) -> Option<Violation> {
    [SpecialRule::DeletionBudget, SpecialRule::AdditionNeighbor, SpecialRule::AdjacentDegreeThree]
        .into_iter()
        .find_map(|rule| inst.vertices().find_map(|u| breach_at(inst, rule, u)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Budget;

    fn petersen() -> Instance {
        let mut e = Vec::new();
        for i in 0..5u32 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Instance::from_edges(10, &e).unwrap()
    }

    #[test]
    fn k4_reports_smallest_triangle() {
        let k4 = Instance::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            find_violation(&k4),
            Some(Violation::Triangle([VertexId(0), VertexId(1), VertexId(2)]))
        );
    }

    #[test]
    fn star_reports_high_degree_center() {
        let k14 = Instance::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(find_violation(&k14), Some(Violation::HighDegree(VertexId(0))));
    }

    #[test]
    fn petersen_breaches_adjacent_degree_three() {
        match find_violation(&petersen()) {
            Some(Violation::SpecialClassBreach { rule, witness }) => {
                assert_eq!(rule, SpecialRule::AdjacentDegreeThree);
                assert_eq!(witness, vec![VertexId(0), VertexId(1)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn k23_beats_its_4_cycles() {
        let k23 = Instance::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(matches!(find_violation(&k23), Some(Violation::K23 { .. })));
    }

    #[test]
    fn c4_priority_by_degree_three_count() {
        // cube: every 4-cycle has four degree-3 vertices
        let cube = Instance::from_edges(
            8,
            &[(0, 1), (1, 3), (3, 2), (2, 0), (4, 5), (5, 7), (7, 6), (6, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        assert_eq!(
            find_violation(&cube),
            Some(Violation::C4 {
                cycle: [VertexId(0), VertexId(1), VertexId(3), VertexId(2)],
                degree_three: 4
            })
        );
        let c4 = Instance::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(matches!(find_violation(&c4), Some(Violation::C4 { degree_three: 0, .. })));
    }

    #[test]
    fn special_class_rules_in_order() {
        let mut p3 = Instance::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_violation(&p3), None);
        p3.set_budget(VertexId(1), Budget::new(true, false)).unwrap();
        assert!(matches!(
            find_violation(&p3),
            Some(Violation::SpecialClassBreach { rule: SpecialRule::DeletionBudget, .. })
        ));
        let mut k13 = Instance::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(find_violation(&k13), None);
        k13.set_budget(VertexId(2), Budget::new(false, true)).unwrap();
        assert_eq!(
            find_violation(&k13),
            Some(Violation::SpecialClassBreach {
                rule: SpecialRule::AdditionNeighbor,
                witness: vec![VertexId(0), VertexId(2)]
            })
        );
    }
}
