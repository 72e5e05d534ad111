use crate::error::{usage, Result};
use crate::graph::{Instance, VertexId};

/// Relabelling maps on cycle positions: position `i` of the result takes
/// position `p[i]` of the source.
pub type Relabel = [usize; 4];

/// Reflection swapping `v1 <-> v4` and `v2 <-> v3`.
pub const SIGMA: Relabel = [3, 2, 1, 0];
/// Reflection swapping `v1 <-> v2` and `v3 <-> v4`.
pub const TAU: Relabel = [1, 0, 3, 2];
/// Reflection fixing `v1` and `v3`.
pub const FIX_13: Relabel = [0, 3, 2, 1];
/// Reflection fixing `v2` and `v4`.
pub const FIX_24: Relabel = [2, 1, 0, 3];

pub fn rotation(k: usize) -> Relabel {
    [k % 4, (k + 1) % 4, (k + 2) % 4, (k + 3) % 4]
}

/// A 4-cycle `v1 v2 v3 v4` of the current instance together with the outside
/// neighbour `w_i` of every cycle vertex of degree three.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct C4Context {
    pub v: [VertexId; 4],
    pub w: [Option<VertexId>; 4],
}

impl C4Context {
    /// Fails unless `cycle` lists a 4-cycle of `inst` in cyclic order and
    /// every cycle vertex has degree at most three.
    pub fn new(inst: &Instance, cycle: [VertexId; 4]) -> Result<Self> {
        for i in 0..4 {
            let (a, b) = (cycle[i], cycle[(i + 1) % 4]);
            if !inst.contains(a) || !inst.has_edge(a, b) {
                return Err(usage!("{cycle:?} is not a 4-cycle of the instance"));
            }
        }
        if cycle[0] == cycle[2] || cycle[1] == cycle[3] {
            return Err(usage!("{cycle:?} repeats a vertex"));
        }
        let mut w = [None; 4];
        for i in 0..4 {
            let v = cycle[i];
            let outside: Vec<VertexId> = inst
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| u != cycle[(i + 1) % 4] && u != cycle[(i + 3) % 4])
                .collect();
            match outside.as_slice() {
                [] => {}
                [x] => w[i] = Some(*x),
                _ => return Err(usage!("cycle vertex {v} has degree {}", inst.degree(v))),
            }
        }
        Ok(C4Context { v: cycle, w })
    }

    pub fn relabel(&self, p: Relabel) -> Self {
        C4Context {
            v: p.map(|i| self.v[i]),
            w: p.map(|i| self.w[i]),
        }
    }

    pub fn degree_three(&self) -> usize {
        self.w.iter().flatten().count()
    }

    /// `w_i`, which must exist.
    pub fn wi(&self, i: usize) -> VertexId {
        self.w[i].expect("cycle vertex has an outside neighbour")
    }

    /// Whether `e_i = w_i w_{i+1}` is an edge (false if either end is missing).
    pub fn e(&self, inst: &Instance, i: usize) -> bool {
        match (self.w[i], self.w[(i + 1) % 4]) {
            (Some(a), Some(b)) => inst.has_edge(a, b),
            _ => false,
        }
    }

    /// The third neighbour `z_i` of a degree-3 `w_i`, in the orientation where
    /// `w1w4` and `w2w3` are edges: the neighbour other than `v_i` and its
    /// partner (`w4` for `w1`, `w3` for `w2` and so on).
    pub fn z(&self, inst: &Instance, i: usize) -> Option<VertexId> {
        let wi = self.w[i]?;
        let partner = self.w[3 - i];
        if inst.degree(wi) != 3 {
            return None;
        }
        inst.neighbors(wi).iter().copied().find(|&u| u != self.v[i] && Some(u) != partner)
    }

    pub fn cycle_vertices(&self) -> Vec<VertexId> {
        self.v.to_vec()
    }

    /// Cycle vertices plus all existing outside neighbours (V8, V7 or V(C) + x', y').
    pub fn with_outside(&self) -> Vec<VertexId> {
        let mut s: Vec<VertexId> = self.v.iter().copied().chain(self.w.iter().flatten().copied()).collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabel_maps_positions() {
        let g = Instance::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        let c = C4Context::new(&g, [VertexId(0), VertexId(1), VertexId(2), VertexId(3)]).unwrap();
        assert_eq!(c.degree_three(), 4);
        let r = c.relabel(rotation(1));
        assert_eq!(r.v[0], VertexId(1));
        assert_eq!(r.w[3], Some(VertexId(4)));
        let s = c.relabel(SIGMA);
        assert_eq!(s.v, [VertexId(3), VertexId(2), VertexId(1), VertexId(0)]);
        assert_eq!(c.relabel(TAU).relabel(TAU), c);
        assert_eq!(c.relabel(FIX_13).v[2], VertexId(2));
        assert_eq!(c.relabel(FIX_24).v[1], VertexId(1));
    }

    #[test]
    fn rejects_non_cycles() {
        let p4 = Instance::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(C4Context::new(&p4, [VertexId(0), VertexId(1), VertexId(2), VertexId(3)]).is_err());
    }
}
