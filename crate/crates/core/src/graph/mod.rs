//! Weighted instances of (1,1)-Cluster Editing and structural queries on them.
//!
//! Vertex ids are stable: removing vertices never renumbers the survivors, and
//! freshly added vertices always receive an id larger than any id ever used by
//! the instance. Reduction traces rely on this to refer back to original vertices.

mod solution;
pub(crate) mod violation;

pub use solution::EditSolution;
pub use violation::{find_violation, SpecialRule, Violation};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{usage, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An unordered pair of distinct vertices, stored with the smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair(VertexId, VertexId);

impl Pair {
    /// Panics if `u == v`.
    pub fn new(u: VertexId, v: VertexId) -> Self {
        assert_ne!(u, v, "a pair needs two distinct vertices");
        if u < v {
            Pair(u, v)
        } else {
            Pair(v, u)
        }
    }

    pub fn first(self) -> VertexId {
        self.0
    }

    pub fn second(self) -> VertexId {
        self.1
    }

    pub fn ends(self) -> [VertexId; 2] {
        [self.0, self.1]
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Per-vertex edit budgets: `add` is a*(v) = 1, `del` is d*(v) = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Budget {
    pub add: bool,
    pub del: bool,
}

impl Budget {
    pub const FULL: Budget = Budget { add: true, del: true };

    pub fn new(add: bool, del: bool) -> Self {
        Budget { add, del }
    }

    /// Builds a budget from 0/1 values, rejecting anything else.
    pub fn from_bits(add: u8, del: u8) -> Result<Self> {
        match (add, del) {
            (0 | 1, 0 | 1) => Ok(Budget { add: add == 1, del: del == 1 }),
            _ => Err(Error::Input(format!("budgets must be 0 or 1, got ({add}, {del})"))),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::FULL
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Slot {
    budget: Budget,
    // sorted ascending
    nbrs: Vec<VertexId>,
}

/// An undirected simple graph with per-vertex addition and deletion budgets in {0,1}.
///
/// Storage is keyed by id, so a small subinstance of a large graph stays small.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Instance {
    slots: BTreeMap<VertexId, Slot>,
    next: u32,
    edges: usize,
}

impl Instance {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` vertices with ids `0..n`, no edges, full budgets.
    pub fn with_vertices(n: usize) -> Self {
        let mut inst = Self::new();
        for _ in 0..n {
            inst.add_vertex(Budget::FULL);
        }
        inst
    }

    /// Convenience constructor used heavily by tests: vertices `0..n`, full budgets.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut inst = Self::with_vertices(n);
        for &(u, v) in edges {
            inst.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(inst)
    }

    pub fn add_vertex(&mut self, budget: Budget) -> VertexId {
        let id = VertexId(self.next);
        self.next += 1;
        self.slots.insert(id, Slot { budget, nbrs: Vec::new() });
        id
    }

    /// The id the next `add_vertex` call will hand out.
    pub fn next_id(&self) -> VertexId {
        VertexId(self.next)
    }

    /// Makes sure fresh ids start at `bound` or later.
    pub fn reserve_ids(&mut self, bound: VertexId) {
        self.next = self.next.max(bound.0);
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.slots.contains_key(&v)
    }

    #[inline]
    fn slot(&self, v: VertexId) -> &Slot {
        match self.slots.get(&v) {
            Some(s) => s,
            None => panic!("vertex {v} is not part of the instance"),
        }
    }

    #[inline]
    fn slot_mut(&mut self, v: VertexId) -> &mut Slot {
        match self.slots.get_mut(&v) {
            Some(s) => s,
            None => panic!("vertex {v} is not part of the instance"),
        }
    }

    fn require(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(usage!("vertex {v} is not part of the instance"))
        }
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.require(u)?;
        self.require(v)?;
        if u == v {
            return Err(usage!("self-loop at vertex {u}"));
        }
        let pos = match self.slot(u).nbrs.binary_search(&v) {
            Ok(_) => return Err(usage!("duplicate edge {u}-{v}")),
            Err(p) => p,
        };
        self.slot_mut(u).nbrs.insert(pos, v);
        let s = self.slot_mut(v);
        let pos = s.nbrs.binary_search(&u).unwrap_err();
        s.nbrs.insert(pos, u);
        self.edges += 1;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.require(u)?;
        self.require(v)?;
        match self.slot(u).nbrs.binary_search(&v) {
            Ok(p) => {
                self.slot_mut(u).nbrs.remove(p);
            }
            Err(_) => return Err(usage!("{u}-{v} is not an edge")),
        }
        let s = self.slot_mut(v);
        let p = s.nbrs.binary_search(&u).expect("adjacency is symmetric");
        s.nbrs.remove(p);
        self.edges -= 1;
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> Result<()> {
        let slot = self.slots.remove(&v).ok_or_else(|| usage!("vertex {v} is not part of the instance"))?;
        for u in slot.nbrs {
            let s = self.slot_mut(u);
            let p = s.nbrs.binary_search(&v).expect("adjacency is symmetric");
            s.nbrs.remove(p);
            self.edges -= 1;
        }
        Ok(())
    }

    pub fn set_budget(&mut self, v: VertexId, budget: Budget) -> Result<()> {
        self.require(v)?;
        self.slot_mut(v).budget = budget;
        Ok(())
    }

    #[inline]
    pub fn budget(&self, v: VertexId) -> Budget {
        self.slot(v).budget
    }

    #[inline]
    pub fn can_add(&self, v: VertexId) -> bool {
        self.slot(v).budget.add
    }

    #[inline]
    pub fn can_delete(&self, v: VertexId) -> bool {
        self.slot(v).budget.del
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.slot(v).nbrs
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.slot(v).nbrs.len()
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        match (self.slots.get(&u), self.contains(v)) {
            (Some(s), true) => s.nbrs.binary_search(&v).is_ok(),
            _ => false,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.slots.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// Live vertices in ascending id order.
    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = VertexId> + '_ {
        self.slots.keys().copied()
    }

    /// Edges as pairs, ascending.
    pub fn edges(&self) -> impl Iterator<Item = Pair> + '_ {
        self.slots.iter().flat_map(|(&u, s)| {
            s.nbrs.iter().filter(move |&&v| v > u).map(move |&v| Pair(u, v))
        })
    }

    /// The subinstance induced by `keep`, with ids and budgets preserved.
    /// Fresh ids of the result continue after those of `self`.
    pub fn induced(&self, keep: &[VertexId]) -> Instance {
        let set: BTreeSet<VertexId> = keep.iter().copied().filter(|&v| self.contains(v)).collect();
        let mut slots = BTreeMap::new();
        let mut edges = 0;
        for &v in &set {
            let nbrs: Vec<VertexId> =
                self.neighbors(v).iter().copied().filter(|u| set.contains(u)).collect();
            edges += nbrs.len();
            slots.insert(v, Slot { budget: self.budget(v), nbrs });
        }
        Instance { slots, next: self.next, edges: edges / 2 }
    }

    /// Renumbers the live vertices to `0..n` in ascending order.
    /// Returns the compacted instance and the old id of every new id.
    pub fn compacted(&self) -> (Instance, Vec<VertexId>) {
        let old: Vec<VertexId> = self.vertices().collect();
        let new_of = |u: &VertexId| VertexId(old.binary_search(u).expect("live vertex") as u32);
        let slots = old
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let nbrs = self.neighbors(v).iter().map(new_of).collect();
                (VertexId(i as u32), Slot { budget: self.budget(v), nbrs })
            })
            .collect();
        (Instance { slots, next: old.len() as u32, edges: self.edges }, old)
    }

    /// Largest live id plus one (0 for an empty instance).
    pub fn id_bound(&self) -> usize {
        self.slots.keys().next_back().map_or(0, |v| v.index() + 1)
    }
}

/// Connected components, each sorted ascending, ordered by their minimum vertex.
pub fn components(inst: &Instance) -> Vec<Vec<VertexId>> {
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    let mut out = Vec::new();
    for s in inst.vertices() {
        if !seen.insert(s) {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &u in inst.neighbors(v) {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// The component containing `v`, sorted ascending.
pub fn component_of(inst: &Instance, v: VertexId) -> Vec<VertexId> {
    let mut seen = BTreeSet::from([v]);
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for &u in inst.neighbors(x) {
            if seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen.into_iter().collect()
}

/// The component containing `v` if it has at most `limit` vertices. Stops
/// exploring as soon as the bound is exceeded.
pub fn component_within(inst: &Instance, v: VertexId, limit: usize) -> Option<Vec<VertexId>> {
    let mut seen = BTreeSet::from([v]);
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for &u in inst.neighbors(x) {
            if seen.insert(u) {
                if seen.len() > limit {
                    return None;
                }
                stack.push(u);
            }
        }
    }
    Some(seen.into_iter().collect())
}

pub fn is_clique(inst: &Instance, vs: &[VertexId]) -> bool {
    vs.iter().all(|&v| inst.degree(v) + 1 >= vs.len())
        && vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| inst.has_edge(u, v)))
}

/// True iff every connected component is a clique.
pub fn is_cluster_graph(inst: &Instance) -> bool {
    components(inst).iter().all(|c| c.iter().all(|&v| inst.degree(v) + 1 == c.len()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeClass {
    Deletable,
    NonDeletable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairClass {
    Addable,
    NonAddable,
}

pub fn classify_edge(inst: &Instance, u: VertexId, v: VertexId) -> Result<EdgeClass> {
    if u == v || !inst.has_edge(u, v) {
        return Err(usage!("{u}-{v} is not an edge"));
    }
    Ok(if inst.can_delete(u) && inst.can_delete(v) {
        EdgeClass::Deletable
    } else {
        EdgeClass::NonDeletable
    })
}

pub fn classify_pair(inst: &Instance, u: VertexId, v: VertexId) -> Result<PairClass> {
    if u == v || !inst.contains(u) || !inst.contains(v) || inst.has_edge(u, v) {
        return Err(usage!("{u}-{v} is not a non-adjacent vertex pair"));
    }
    Ok(if inst.can_add(u) && inst.can_add(v) {
        PairClass::Addable
    } else {
        PairClass::NonAddable
    })
}
