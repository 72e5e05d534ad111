//! Maximum-cardinality matching on general graphs and matchings that must
//! cover one vertex set while avoiding another.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{usage, Result};

const NONE: usize = usize::MAX;

/// A compact undirected graph on vertices `0..n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Ignores loops and duplicate edges.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.len() && v < self.len(), "edge {u}-{v} out of range");
        if u == v || self.adj[u].contains(&v) {
            return;
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    fn sort_adjacency(&mut self) {
        for nb in &mut self.adj {
            nb.sort_unstable();
        }
    }
}

/// Edmonds' blossom-shrinking search. Per-search state is reset only on the
/// vertices the search touched, so repeated searches stay cheap on large
/// sparse graphs.
struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    even: Vec<bool>,
    dirty: Vec<bool>,
    in_blossom: Vec<bool>,
    mark: Vec<u32>,
    stamp: u32,
    touched: Vec<usize>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.len();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            even: vec![false; n],
            dirty: vec![false; n],
            in_blossom: vec![false; n],
            mark: vec![0; n],
            stamp: 0,
            touched: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn touch(&mut self, v: usize) {
        if !self.dirty[v] {
            self.dirty[v] = true;
            self.touched.push(v);
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.dirty[v] = false;
            self.even[v] = false;
            self.parent[v] = NONE;
            self.base[v] = v;
        }
        self.touched.clear();
        self.queue.clear();
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.stamp += 1;
        loop {
            a = self.base[a];
            self.mark[a] = self.stamp;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.mark[b] == self.stamp {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, v: usize, to: usize) {
        let cur = self.lca(v, to);
        for &t in &self.touched {
            self.in_blossom[t] = false;
        }
        self.mark_path(v, cur, to);
        self.mark_path(to, cur, v);
        for i in 0..self.touched.len() {
            let t = self.touched[i];
            if self.in_blossom[self.base[t]] {
                self.base[t] = cur;
                if !self.even[t] {
                    self.even[t] = true;
                    self.queue.push_back(t);
                }
            }
        }
    }

    /// Searches for an augmenting path from the exposed vertex `root` and
    /// applies it. Returns whether the matching grew.
    fn augment_from(&mut self, root: usize) -> bool {
        self.reset();
        self.touch(root);
        self.even[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.g.adj[v].len() {
                let to = self.g.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    self.contract(v, to);
                } else if self.parent[to] == NONE {
                    self.touch(to);
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        self.flip(to);
                        return true;
                    }
                    let m = self.mate[to];
                    self.touch(m);
                    self.even[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        false
    }

    fn flip(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

fn pairs_of(mate: &[usize]) -> Vec<(usize, usize)> {
    mate.iter()
        .enumerate()
        .filter(|&(u, &v)| v != NONE && u < v)
        .map(|(u, &v)| (u, v))
        .collect()
}

fn mate_array(g: &Graph) -> Vec<usize> {
    let mut sorted = g.clone();
    sorted.sort_adjacency();
    let mut b = Blossom::new(&sorted);
    // greedy start, ascending
    for u in 0..sorted.len() {
        if b.mate[u] != NONE {
            continue;
        }
        if let Some(&v) = sorted.adj[u].iter().find(|&&v| b.mate[v] == NONE) {
            b.mate[u] = v;
            b.mate[v] = u;
        }
    }
    for u in 0..sorted.len() {
        if b.mate[u] == NONE {
            b.augment_from(u);
        }
    }
    b.mate
}

/// A maximum-cardinality matching, as pairs `(u, v)` with `u < v`, sorted.
/// Deterministic for a fixed graph.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    pairs_of(&mate_array(g))
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.len().is_multiple_of(2) && maximum_matching(g).len() * 2 == g.len()
}

/// Which vertices a matching must cover and which it must leave exposed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchingQuery {
    cover: BTreeSet<usize>,
    avoid: BTreeSet<usize>,
}

impl MatchingQuery {
    pub fn new(
        cover: impl IntoIterator<Item = usize>,
        avoid: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let cover: BTreeSet<usize> = cover.into_iter().collect();
        let avoid: BTreeSet<usize> = avoid.into_iter().collect();
        if let Some(v) = cover.intersection(&avoid).next() {
            return Err(usage!("vertex {v} is both required and forbidden"));
        }
        Ok(MatchingQuery { cover, avoid })
    }

    pub fn cover(&self) -> &BTreeSet<usize> {
        &self.cover
    }

    pub fn avoid(&self) -> &BTreeSet<usize> {
        &self.avoid
    }

    fn check(&self, n: usize) -> Result<()> {
        match self.cover.iter().chain(&self.avoid).find(|&&v| v >= n) {
            Some(v) => Err(usage!("query vertex {v} outside graph of {n} vertices")),
            None => Ok(()),
        }
    }
}

/// `G - Z` relabelled to `0..k`, with the original id of each kept vertex.
fn without_avoided(g: &Graph, q: &MatchingQuery) -> (Graph, Vec<usize>) {
    let kept: Vec<usize> = (0..g.len()).filter(|v| !q.avoid.contains(v)).collect();
    let mut local = vec![NONE; g.len()];
    for (i, &v) in kept.iter().enumerate() {
        local[v] = i;
    }
    let mut h = Graph::new(kept.len());
    for (u, v) in g.edges() {
        if local[u] != NONE && local[v] != NONE {
            h.add_edge(local[u], local[v]);
        }
    }
    (h, kept)
}

/// A matching of `g` covering every vertex of `q.cover()` and none of
/// `q.avoid()`, or `None` if there is none.
///
/// Built literally through the padded perfect-matching test: drop the avoided
/// vertices, pad the free part `U` to even parity with one isolated vertex,
/// complete `U` into a clique and ask for a perfect matching. The auxiliary
/// graph is dense in `|U|`; see [`constrained_matching_doubled`] for large inputs.
pub fn constrained_matching(g: &Graph, q: &MatchingQuery) -> Result<Option<Vec<(usize, usize)>>> {
    q.check(g.len())?;
    let (mut aux, kept) = without_avoided(g, q);
    let real = aux.len();
    let mut free: Vec<usize> = (0..real).filter(|&i| !q.cover.contains(&kept[i])).collect();
    if real % 2 == 1 {
        free.push(aux.add_vertex());
    }
    for (i, &u) in free.iter().enumerate() {
        for &v in &free[i + 1..] {
            aux.add_edge(u, v);
        }
    }
    let m = maximum_matching(&aux);
    if m.len() * 2 != aux.len() {
        return Ok(None);
    }
    let in_free: BTreeSet<usize> = free.into_iter().collect();
    let mut out: Vec<(usize, usize)> = m
        .into_iter()
        .filter(|&(u, v)| !(in_free.contains(&u) && in_free.contains(&v)))
        .map(|(u, v)| (kept[u], kept[v]))
        .collect();
    out.sort_unstable();
    Ok(Some(out))
}

/// Same contract as [`constrained_matching`], decided on a sparse auxiliary
/// graph: two copies of `G - Z`, with every free vertex joined to its twin.
/// A perfect matching of the doubled graph restricted to the first copy covers
/// all required vertices, and any covering matching extends to one.
pub fn constrained_matching_doubled(
    g: &Graph,
    q: &MatchingQuery,
) -> Result<Option<Vec<(usize, usize)>>> {
    q.check(g.len())?;
    let (h, kept) = without_avoided(g, q);
    let k = h.len();
    let mut aux = Graph::new(2 * k);
    for (u, v) in h.edges() {
        aux.add_edge(u, v);
        aux.add_edge(k + u, k + v);
    }
    for (i, orig) in kept.iter().enumerate() {
        if !q.cover.contains(orig) {
            aux.add_edge(i, k + i);
        }
    }
    let m = maximum_matching(&aux);
    if m.len() != k {
        return Ok(None);
    }
    let mut out: Vec<(usize, usize)> = m
        .into_iter()
        .filter(|&(u, v)| u < k && v < k)
        .map(|(u, v)| (kept[u], kept[v]))
        .collect();
    out.sort_unstable();
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e)
    }

    fn is_matching(g: &Graph, m: &[(usize, usize)]) -> bool {
        let mut used = BTreeSet::new();
        m.iter().all(|&(u, v)| g.has_edge(u, v) && used.insert(u) && used.insert(v))
    }

    #[test]
    fn small_maximum_matchings() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(maximum_matching(&p3).len(), 1);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let m = maximum_matching(&c4);
        assert_eq!(m.len(), 2);
        assert!(is_matching(&c4, &m));
    }

    #[test]
    fn petersen_is_perfectly_matchable() {
        let g = petersen();
        let m = maximum_matching(&g);
        assert_eq!(m.len(), 5);
        assert!(is_matching(&g, &m));
    }

    #[test]
    fn blossom_needed_for_odd_cycles() {
        // two triangles joined by a path through a blossom: 0-1-2-0, 2-3, 3-4-5-3
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        assert_eq!(maximum_matching(&g).len(), 3);
        // a flower whose stem forces augmentation through the contracted cycle
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (3, 6), (6, 7), (5, 7)],
        );
        let m = maximum_matching(&g);
        assert_eq!(m.len(), 4);
        assert!(is_matching(&g, &m));
    }

    #[test]
    fn constrained_examples() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let q = MatchingQuery::new([1], []).unwrap();
        let m = constrained_matching(&p3, &q).unwrap().unwrap();
        assert!(m == vec![(0, 1)] || m == vec![(1, 2)]);

        let k13 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let q = MatchingQuery::new([1, 2, 3], []).unwrap();
        assert_eq!(constrained_matching(&k13, &q).unwrap(), None);
        assert_eq!(constrained_matching_doubled(&k13, &q).unwrap(), None);

        let q = MatchingQuery::new([0], [1]).unwrap();
        assert_eq!(constrained_matching(&p3, &q).unwrap(), None);
        assert_eq!(constrained_matching_doubled(&p3, &q).unwrap(), None);
    }

    #[test]
    fn query_rejects_overlap_and_out_of_range() {
        assert!(MatchingQuery::new([1, 2], [2]).is_err());
        let q = MatchingQuery::new([5], []).unwrap();
        assert!(constrained_matching(&Graph::new(3), &q).is_err());
    }

    #[test]
    fn empty_graph_and_empty_query() {
        let g = Graph::new(0);
        let q = MatchingQuery::default();
        assert_eq!(constrained_matching(&g, &q).unwrap(), Some(vec![]));
        assert_eq!(maximum_matching(&g), vec![]);
        let g = Graph::new(3);
        assert_eq!(constrained_matching(&g, &q).unwrap(), Some(vec![]));
        assert_eq!(constrained_matching_doubled(&g, &q).unwrap(), Some(vec![]));
    }

    /// Every matching of `g`, by recursion over the edge list.
    fn all_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
        fn go(
            edges: &[(usize, usize)],
            used: &mut Vec<bool>,
            cur: &mut Vec<(usize, usize)>,
            out: &mut Vec<Vec<(usize, usize)>>,
        ) {
            let Some((&(u, v), rest)) = edges.split_first() else {
                out.push(cur.clone());
                return;
            };
            go(rest, used, cur, out);
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                cur.push((u, v));
                go(rest, used, cur, out);
                cur.pop();
                used[u] = false;
                used[v] = false;
            }
        }
        let edges: Vec<_> = g.edges().collect();
        let mut out = Vec::new();
        go(&edges, &mut vec![false; g.len()], &mut Vec::new(), &mut out);
        out
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::new(n);
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            g.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn maximum_matching_matches_enumeration(g in arb_graph(9)) {
            let m = maximum_matching(&g);
            prop_assert!(is_matching(&g, &m));
            let best = all_matchings(&g).iter().map(Vec::len).max().unwrap();
            prop_assert_eq!(m.len(), best);
        }

        #[test]
        fn constrained_matching_matches_enumeration(
            g in arb_graph(8),
            roles in proptest::collection::vec(0u8..3, 8),
        ) {
            let n = g.len();
            let cover: Vec<usize> = (0..n).filter(|&v| roles[v] == 1).collect();
            let avoid: Vec<usize> = (0..n).filter(|&v| roles[v] == 2).collect();
            let q = MatchingQuery::new(cover.clone(), avoid.clone()).unwrap();
            let exists = all_matchings(&g).iter().any(|m| {
                let hit: BTreeSet<usize> = m.iter().flat_map(|&(u, v)| [u, v]).collect();
                cover.iter().all(|v| hit.contains(v)) && avoid.iter().all(|v| !hit.contains(v))
            });
            for res in [constrained_matching(&g, &q).unwrap(), constrained_matching_doubled(&g, &q).unwrap()] {
                prop_assert_eq!(res.is_some(), exists);
                if let Some(m) = res {
                    prop_assert!(is_matching(&g, &m));
                    let hit: BTreeSet<usize> = m.iter().flat_map(|&(u, v)| [u, v]).collect();
                    prop_assert!(cover.iter().all(|v| hit.contains(v)));
                    prop_assert!(avoid.iter().all(|v| !hit.contains(v)));
                }
            }
        }
    }
}
