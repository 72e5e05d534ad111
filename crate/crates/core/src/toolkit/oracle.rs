//! Exhaustive decision by enumerating vertex partitions.
//!
//! A partition is a valid target cluster graph iff every vertex has at most
//! d*(v) edges leaving its part and at most a*(v) non-neighbours inside it.
//! With budgets in {0,1} both counts are 0 or 1, so a bitmask of "spent"
//! vertices is enough state for incremental pruning.

use std::collections::BTreeSet;

use crate::error::{usage, Result};
use crate::graph::{EditSolution, Instance, Pair, VertexId};

/// Largest instance the oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 14;

struct Search {
    adj: Vec<u16>,
    can_add: u16,
    can_del: u16,
    n: usize,
    block: Vec<usize>,
    masks: Vec<u16>,
}

impl Search {
    /// Assigns vertices `v..n` given that `0..v` are placed; `added` and
    /// `deleted` mark vertices whose budget is already used.
    fn run(&mut self, v: usize, added: u16, deleted: u16) -> bool {
        if v == self.n {
            return true;
        }
        let bit = 1u16 << v;
        let placed = bit - 1;
        let blocks = self.masks.len();
        for b in 0..=blocks {
            let same = if b < blocks { self.masks[b] } else { 0 };
            let missing = same & !self.adj[v];
            let cross = placed & !same & self.adj[v];
            if missing.count_ones() > (self.can_add & bit != 0) as u32
                || missing & (added | !self.can_add) != 0
                || cross.count_ones() > (self.can_del & bit != 0) as u32
                || cross & (deleted | !self.can_del) != 0
            {
                continue;
            }
            let added = if missing != 0 { added | missing | bit } else { added };
            let deleted = if cross != 0 { deleted | cross | bit } else { deleted };
            if b == blocks {
                self.masks.push(bit);
            } else {
                self.masks[b] |= bit;
            }
            self.block[v] = b;
            if self.run(v + 1, added, deleted) {
                return true;
            }
            if b == blocks {
                self.masks.pop();
            } else {
                self.masks[b] &= !bit;
            }
        }
        false
    }
}

/// Some witness certificate iff the instance is a YES-instance.
pub fn oracle_solve(inst: &Instance) -> Result<Option<EditSolution>> {
    let n = inst.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(usage!(
            "oracle limited to {ORACLE_MAX_VERTICES} vertices, instance has {n}"
        ));
    }
    let ids: Vec<VertexId> = inst.vertices().collect();
    let local = |v: VertexId| ids.binary_search(&v).expect("neighbour is a live vertex");
    let mut s = Search {
        adj: vec![0; n],
        can_add: 0,
        can_del: 0,
        n,
        block: vec![0; n],
        masks: Vec::new(),
    };
    for (i, &v) in ids.iter().enumerate() {
        for &u in inst.neighbors(v) {
            s.adj[i] |= 1 << local(u);
        }
        if inst.can_add(v) {
            s.can_add |= 1 << i;
        }
        if inst.can_delete(v) {
            s.can_del |= 1 << i;
        }
    }
    if !s.run(0, 0, 0) {
        return Ok(None);
    }
    let mut deletions = BTreeSet::new();
    let mut additions = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let same = s.block[i] == s.block[j];
            let edge = s.adj[i] & (1 << j) != 0;
            if same && !edge {
                additions.insert(Pair::new(ids[i], ids[j]));
            } else if !same && edge {
                deletions.insert(Pair::new(ids[i], ids[j]));
            }
        }
    }
    Ok(Some(EditSolution::new(deletions, additions)))
}

pub fn oracle_decide(inst: &Instance) -> Result<bool> {
    oracle_solve(inst).map(|s| s.is_some())
}
