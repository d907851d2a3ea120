//! Immutable simple graphs over at most 64 vertices.
//!
//! Adjacency is stored as one `u64` row per vertex. Every constructor checks
//! symmetry and irreflexivity, so any `Graph` value satisfies both.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

/// Largest order a [`Graph`] can have: one machine word per adjacency row.
pub const MAX_ORDER: usize = 64;

/// A set of vertex indices, stored as a bitset.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = BitIter;
    fn into_iter(self) -> BitIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone)]
pub struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for BitIter {}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Outcome of a 2-colouring attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// One colour class; its complement is the other.
    Bipartite { side: VertexSet },
    /// Vertices of an odd cycle, in cyclic order.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite { .. })
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = Self::empty(n)?.adj;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::InvalidVertex {
                    vertex: u,
                    order: n,
                });
            }
            if v >= n {
                return Err(GraphError::InvalidVertex {
                    vertex: v,
                    order: n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from adjacency rows, rejecting asymmetric or looped input.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mask = full_mask(n);
        for (u, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::InvalidVertex {
                    vertex: (row & !mask).trailing_zeros() as usize,
                    order: n,
                });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            for v in BitIter(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Caller guarantees symmetry and irreflexivity; checked in debug builds.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Self::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| BitIter(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::InvalidVertex {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        self.component_within(start, full_mask(self.n))
    }

    fn component_within(&self, start: usize, allowed: u64) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Connected components, each listed once, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = full_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component_within(left.trailing_zeros() as usize, left);
            left &= !c.0;
            out.push(c);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0).len() == self.n
    }

    /// Whether deleting `v` disconnects the rest of a connected graph.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let rest = full_mask(self.n) & !(1 << v);
        if rest == 0 {
            return false;
        }
        self.component_within(rest.trailing_zeros() as usize, rest)
            .0
            != rest
    }

    /// Connected with exactly as many edges as vertices.
    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.size() == self.n && self.is_connected()
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() + 1 == self.n && self.is_connected()
    }

    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in BitIter(self.adj[u]) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in BitIter(self.adj[u]) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Length of a shortest odd cycle; `None` for bipartite graphs.
    pub fn odd_girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let dist = self.bfs_distances(root);
            for (u, v) in self.edges() {
                if let (Some(a), Some(b)) = (dist[u], dist[v]) {
                    if a == b {
                        let len = 2 * a + 1;
                        best = Some(best.map_or(len, |x| x.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Two-colours the graph, or returns an odd cycle as witness.
    pub fn bipartition(&self) -> Bipartition {
        let mut colour = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for root in 0..self.n {
            if colour[root] != u8::MAX {
                continue;
            }
            colour[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in BitIter(self.adj[u]) {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return Bipartition::OddCycle(tree_cycle(&parent, &depth, u, w));
                    }
                }
            }
        }
        let side = (0..self.n).filter(|&v| colour[v] == 0).collect();
        Bipartition::Bipartite { side }
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_bipartite()
    }

    /// Degree-one vertices.
    pub fn pendant_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to at least one pendant vertex (support vertices).
    pub fn p_dominators(&self) -> VertexSet {
        let mut s = VertexSet::empty();
        for p in self.pendant_vertices() {
            s.0 |= self.adj[p];
        }
        s
    }

    /// Number of pendant neighbours of `v`.
    pub fn pendant_count(&self, v: usize) -> usize {
        self.neighbors(v)
            .intersection(self.pendant_vertices())
            .len()
    }

    /// `self(u) ⋄ other(w)`: identifies `u` with `w`.
    ///
    /// Vertices of `self` keep their indices; the identified vertex is `u`;
    /// vertex `x != w` of `other` lands at the index given by the returned map.
    pub fn coalescence(
        &self,
        u: usize,
        other: &Graph,
        w: usize,
    ) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_vertex(u)?;
        other.check_vertex(w)?;
        let n = self.n + other.n - 1;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut map = vec![0; other.n];
        let mut next = self.n;
        for (x, slot) in map.iter_mut().enumerate() {
            if x == w {
                *slot = u;
            } else {
                *slot = next;
                next += 1;
            }
        }
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        for (a, b) in other.edges() {
            let (a, b) = (map[a], map[b]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok((Graph::from_adjacency_unchecked(adj), map))
    }

    /// Corona `self ∘ other`: copy `i` of `other` occupies indices
    /// `n + i*|other| ..`, all joined to vertex `i`.
    pub fn corona(&self, other: &Graph) -> Result<Graph, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let n = self.n * (1 + other.n);
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        for i in 0..self.n {
            let base = self.n + i * other.n;
            for x in 0..other.n {
                adj[base + x] = (other.adj[x] << base) | 1 << i;
                adj[i] |= 1 << (base + x);
            }
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    pub fn with_edge_added(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph { n: self.n, adj })
    }

    pub fn with_edge_removed(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Graph { n: self.n, adj })
    }

    /// Deletes `removed` and relabels the rest contiguously; `map[old]` is the
    /// new index of a surviving vertex.
    pub fn without_vertices(
        &self,
        removed: VertexSet,
    ) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        if let Some(bad) = removed.difference(self.vertices()).first() {
            return Err(GraphError::InvalidVertex {
                vertex: bad,
                order: self.n,
            });
        }
        let keep = self.vertices().difference(removed);
        let (g, kept) = self.induced_subgraph(keep);
        let mut map = vec![None; self.n];
        for (new, &old) in kept.iter().enumerate() {
            map[old] = Some(new);
        }
        Ok((g, map))
    }

    /// Subgraph induced by `keep`; second value lists the original index of
    /// each new vertex.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = keep.intersection(self.vertices()).to_vec();
        let mut pos = [u8::MAX; 64];
        for (i, &v) in kept.iter().enumerate() {
            pos[v] = i as u8;
        }
        let adj = kept
            .iter()
            .map(|&v| BitIter(self.adj[v] & keep.0).fold(0u64, |acc, w| acc | 1 << pos[w]))
            .collect();
        (Graph::from_adjacency_unchecked(adj), kept)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation);
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(GraphError::BadPermutation);
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            adj[perm[u]] = BitIter(self.adj[u]).fold(0, |acc, w| acc | 1 << perm[w]);
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Whether every edge of `self` is an edge of `host` (same vertex set).
    pub fn is_spanning_subgraph_of(&self, host: &Graph) -> bool {
        self.n == host.n && self.adj.iter().zip(&host.adj).all(|(a, b)| a & !b == 0)
    }
}

/// Cycle closed by the non-tree edge `u-w` in a BFS forest.
fn tree_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    /// Brute-force odd girth: shortest odd closed walk via boolean matrix powers.
    fn odd_girth_oracle(g: &Graph) -> Option<usize> {
        let n = g.order();
        // reach[k][u] = set of vertices reachable by walks of length exactly k
        let mut cur: Vec<u64> = (0..n).map(|u| 1u64 << u).collect();
        for k in 1..=n {
            let next: Vec<u64> = cur
                .iter()
                .map(|&s| BitIter(s).fold(0u64, |acc, v| acc | g.rows()[v]))
                .collect();
            cur = next;
            if k % 2 == 1 && (0..n).any(|u| cur[u] >> u & 1 == 1) {
                return Some(k);
            }
        }
        None
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::empty(65).is_err());
        assert!(matches!(
            Graph::from_adjacency(vec![0b10, 0]),
            Err(GraphError::Asymmetric(0, 1))
        ));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(path(7).girth(), None);
        // lollipop L_{3,2}
        let lol = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert_eq!(lol.girth(), Some(3));
        assert_eq!(cycle(6).girth(), Some(6));
        assert_eq!(petersen().girth(), Some(5));
    }

    #[test]
    fn odd_girth_examples() {
        assert_eq!(cycle(7).odd_girth(), Some(7));
        assert_eq!(cycle(6).odd_girth(), None);
        assert_eq!(complete(4).odd_girth(), Some(3));
        assert_eq!(petersen().odd_girth(), Some(5));
        for g in [cycle(9), complete(5), petersen(), path(4)] {
            assert_eq!(g.odd_girth(), odd_girth_oracle(&g));
        }
    }

    #[test]
    fn bipartition_examples() {
        assert!(path(5).is_bipartite());
        match cycle(3).bipartition() {
            Bipartition::OddCycle(c) => {
                let mut c = c;
                c.sort();
                assert_eq!(c, vec![0, 1, 2]);
            }
            _ => panic!("triangle is not bipartite"),
        }
        match petersen().bipartition() {
            Bipartition::OddCycle(c) => {
                assert_eq!(c.len() % 2, 1);
                for i in 0..c.len() {
                    assert!(petersen().has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
            _ => panic!("petersen graph is not bipartite"),
        }
    }

    #[test]
    fn pendants_and_supports() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.pendant_vertices().to_vec(), vec![1, 2, 3]);
        assert_eq!(star.p_dominators().to_vec(), vec![0]);
        assert!(cycle(5).pendant_vertices().is_empty());
        assert!(cycle(5).p_dominators().is_empty());
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_eq!(paw.pendant_vertices().to_vec(), vec![3]);
        assert_eq!(paw.p_dominators().to_vec(), vec![2]);
    }

    #[test]
    fn coalescence_examples() {
        let k1 = Graph::empty(1).unwrap();
        let (g, _) = cycle(3).coalescence(0, &k1, 0).unwrap();
        assert_eq!(g, cycle(3));
        let (g, map) = cycle(5).coalescence(0, &cycle(5), 0).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.degree(0), 4);
        assert_eq!(map[0], 0);
        assert!(cycle(3).coalescence(3, &k1, 0).is_err());
    }

    #[test]
    fn corona_examples() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.corona(&k1).unwrap(), complete(2));
        let c = cycle(4).corona(&k1).unwrap();
        assert_eq!(c.order(), 8);
        assert_eq!(c.pendant_vertices().len(), 4);
        assert!(matches!(
            Graph::empty(0).unwrap().corona(&k1),
            Err(GraphError::EmptyGraph)
        ));
    }

    #[test]
    fn edit_examples() {
        let p3 = complete(3).with_edge_removed(0, 1).unwrap();
        assert_eq!(p3.size(), 2);
        assert_eq!(p3.degree(2), 2);
        let c3 = path(3).with_edge_added(0, 2).unwrap();
        assert_eq!(c3, complete(3));
        assert!(path(3).with_edge_removed(0, 2).is_err());
        assert!(path(3).with_edge_added(0, 1).is_err());
        let (p4, map) = cycle(5).without_vertices(VertexSet::singleton(0)).unwrap();
        assert_eq!(p4, path(4));
        assert_eq!(map, vec![None, Some(0), Some(1), Some(2), Some(3)]);
    }

    #[test]
    fn cut_vertices_and_components() {
        let p = path(4);
        assert!(!p.is_cut_vertex(0));
        assert!(p.is_cut_vertex(1));
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components().len(), 2);
        assert!(!two.is_connected());
    }
}
