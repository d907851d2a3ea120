//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine an ordered partition to an
//! equitable one, individualise a vertex of the first non-singleton cell and
//! recurse. Leaves are compared by their relabelled adjacency rows and the
//! largest one wins. Automorphisms discovered at leaves, together with the
//! transpositions of twin vertices, prune sibling branches that lie in the
//! same orbit of the prefix stabiliser.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;
use crate::graph::{BitIter, Graph};
use crate::graph6;

/// Largest order accepted by [`canonical_form`]. The search is exponential in
/// the worst case; sparse graphs of this size finish quickly in practice.
pub const CANON_MAX_ORDER: usize = 40;

/// Isomorphism-invariant encoding: adjacency rows of the canonically
/// relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    /// The canonically relabelled graph.
    pub fn graph(&self) -> Graph {
        Graph::from_adjacency_unchecked(self.rows.clone())
    }

    /// Upper-triangle adjacency bits in graph6 (column-major) order.
    pub fn upper_triangle(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.order * self.order.saturating_sub(1) / 2);
        for j in 1..self.order {
            for i in 0..j {
                bits.push(self.rows[i] >> j & 1 == 1);
            }
        }
        bits
    }

    /// graph6 string of the canonically relabelled graph.
    pub fn to_graph6(&self) -> String {
        graph6::encode(&self.graph())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_graph6())
    }
}

/// Result of a canonical-labelling search.
#[derive(Clone, Debug)]
pub struct Labelling {
    /// `labels[i]` is the original vertex placed at canonical position `i`.
    pub labels: Vec<usize>,
    pub form: CanonicalForm,
    /// Generators (not necessarily minimal) of the automorphism group.
    pub generators: Vec<Vec<usize>>,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_labelling(g).map(|l| l.form)
}

pub fn canonical_labelling(g: &Graph) -> Result<Labelling, GraphError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(GraphError::OrderTooLarge(n));
    }
    if n == 0 {
        return Ok(Labelling {
            labels: vec![],
            form: CanonicalForm {
                order: 0,
                rows: vec![],
            },
            generators: vec![],
        });
    }
    let mut search = Search {
        adj: g.rows(),
        n,
        best: None,
        first: None,
        autos: twin_transpositions(g.rows()),
    };
    let mut cells = vec![crate::graph::full_mask(n)];
    let mut queue = VecDeque::from([crate::graph::full_mask(n)]);
    search.refine(&mut cells, &mut queue);
    search.descend(cells, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    Ok(Labelling {
        labels: best.lab.iter().map(|&v| v as usize).collect(),
        form: CanonicalForm {
            order: n,
            rows: best.cert,
        },
        generators: search
            .autos
            .into_iter()
            .map(|p| p.into_iter().map(usize::from).collect())
            .collect(),
    })
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Orbits of the automorphism group, as a representative per vertex.
pub fn orbit_representatives(labelling: &Labelling) -> Vec<usize> {
    let n = labelling.labels.len();
    let mut uf = UnionFind::new(n);
    for p in &labelling.generators {
        for (x, &y) in p.iter().enumerate() {
            uf.union(x, y);
        }
    }
    (0..n).map(|v| uf.find(v)).collect()
}

struct Leaf {
    cert: Vec<u64>,
    lab: Vec<u8>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    best: Option<Leaf>,
    first: Option<Leaf>,
    autos: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn refine(&self, cells: &mut Vec<u64>, queue: &mut VecDeque<u64>) {
        let mut buckets: Vec<(u32, u64)> = Vec::with_capacity(8);
        while let Some(splitter) = queue.pop_front() {
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell & (cell - 1) == 0 {
                    i += 1;
                    continue;
                }
                buckets.clear();
                for v in BitIter(cell) {
                    let k = (self.adj[v] & splitter).count_ones();
                    match buckets.iter_mut().find(|b| b.0 == k) {
                        Some(b) => b.1 |= 1 << v,
                        None => buckets.push((k, 1 << v)),
                    }
                }
                if buckets.len() == 1 {
                    i += 1;
                    continue;
                }
                buckets.sort_unstable_by_key(|b| b.0);
                cells.splice(i..=i, buckets.iter().map(|b| b.1));
                queue.extend(buckets.iter().map(|b| b.1));
                i += buckets.len();
            }
            if cells.len() == self.n {
                return;
            }
        }
    }

    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<u8>) {
        let Some(target) = cells.iter().position(|c| c & (c - 1) != 0) else {
            self.leaf(&cells);
            return;
        };
        let mut explored: Vec<u8> = Vec::new();
        for v in BitIter(cells[target]) {
            let v = v as u8;
            if !explored.is_empty() && self.same_orbit(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest = child[target] & !(1u64 << v);
            child[target] = 1u64 << v;
            child.insert(target + 1, rest);
            let mut queue = VecDeque::from([1u64 << v]);
            self.refine(&mut child, &mut queue);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn same_orbit(&self, v: u8, explored: &[u8], prefix: &[u8]) -> bool {
        let mut uf = UnionFind::new(self.n);
        let mut any = false;
        for p in &self.autos {
            if prefix.iter().all(|&x| p[x as usize] == x) {
                any = true;
                for (x, &y) in p.iter().enumerate() {
                    uf.union(x, y as usize);
                }
            }
        }
        any && explored
            .iter()
            .any(|&u| uf.find(u as usize) == uf.find(v as usize))
    }

    fn leaf(&mut self, cells: &[u64]) {
        let lab: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut pos = [0u8; 64];
        for (i, &v) in lab.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        let cert: Vec<u64> = lab
            .iter()
            .map(|&v| BitIter(self.adj[v as usize]).fold(0u64, |acc, w| acc | 1 << pos[w]))
            .collect();
        let leaf = Leaf { cert, lab };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                cert: leaf.cert.clone(),
                lab: leaf.lab.clone(),
            });
            self.best = Some(leaf);
            return;
        };
        if leaf.cert == first.cert {
            let auto = automorphism(&first.lab, &leaf.lab);
            self.autos.push(auto);
        }
        let best = self.best.as_ref().unwrap();
        if leaf.cert == best.cert {
            if best.cert != first.cert {
                let auto = automorphism(&best.lab, &leaf.lab);
                self.autos.push(auto);
            }
        } else if leaf.cert > best.cert {
            self.best = Some(leaf);
        }
    }
}

fn automorphism(from: &[u8], to: &[u8]) -> Vec<u8> {
    let mut p = vec![0u8; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        p[a as usize] = b;
    }
    p
}

/// Transpositions swapping vertices with identical neighbourhoods (ignoring
/// each other); each is an automorphism.
fn twin_transpositions(adj: &[u64]) -> Vec<Vec<u8>> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 1..n {
        for w in 0..u {
            if adj[u] & !(1 << w) == adj[w] & !(1 << u) {
                let mut p: Vec<u8> = (0..n as u8).collect();
                p.swap(u, w);
                out.push(p);
                break;
            }
        }
    }
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins, so representatives are orbit minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    /// Minimum adjacency code over all n! relabellings.
    fn brute_force_form(g: &Graph) -> Vec<u64> {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<u64>> = None;
        permute_all(&mut perm, 0, &mut |p| {
            let h = g.permuted(p).unwrap();
            let code = h.rows().to_vec();
            if best.as_ref().map_or(true, |b| code < *b) {
                best = Some(code);
            }
        });
        best.unwrap()
    }

    fn permute_all(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute_all(p, k + 1, f);
            p.swap(k, i);
        }
    }

    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len())
            .map(|mask| {
                let e: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                Graph::from_edges(n, &e).unwrap()
            })
            .collect()
    }

    #[test]
    fn relabelled_cycle_has_same_form() {
        let c5 = cycle(5);
        let f = canonical_form(&c5).unwrap();
        let h = c5.permuted(&[3, 0, 4, 1, 2]).unwrap();
        assert_eq!(canonical_form(&h).unwrap(), f);
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&star).unwrap());
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        let graphs = all_graphs(4);
        let forms: HashSet<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        let oracle: HashSet<_> = graphs.iter().map(brute_force_form).collect();
        assert_eq!(oracle.len(), 11);
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn matches_brute_force_partition_on_five_vertices() {
        let graphs = all_graphs(5);
        let mut seen: std::collections::HashMap<CanonicalForm, Vec<u64>> = Default::default();
        for g in &graphs {
            let f = canonical_form(g).unwrap();
            let b = brute_force_form(g);
            if let Some(prev) = seen.insert(f, b.clone()) {
                assert_eq!(prev, b, "equal forms for non-isomorphic graphs");
            }
        }
        assert_eq!(seen.len(), 34);
    }

    #[test]
    fn invariant_under_random_relabellings() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let petersen = {
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
                e.push((i, i + 5));
                e.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::from_edges(10, &e).unwrap()
        };
        let star_of_stars = Graph::from_edges(
            9,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 5),
                (2, 6),
                (2, 7),
                (3, 8),
            ],
        )
        .unwrap();
        for g in [cycle(9), petersen, star_of_stars] {
            let f = canonical_form(&g).unwrap();
            let mut perm: Vec<usize> = (0..g.order()).collect();
            for _ in 0..100 {
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.permuted(&perm).unwrap()).unwrap(), f);
            }
        }
    }

    #[test]
    fn form_graph_is_isomorphic_relabelling() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let l = canonical_labelling(&g).unwrap();
        let mut inv = vec![0; 6];
        for (i, &v) in l.labels.iter().enumerate() {
            inv[v] = i;
        }
        assert_eq!(g.permuted(&inv).unwrap(), l.form.graph());
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        let l = canonical_labelling(&g).unwrap();
        for p in &l.generators {
            assert_eq!(g.permuted(p).unwrap(), g);
        }
        let reps = orbit_representatives(&l);
        assert_eq!(reps[1], reps[2]);
        assert_eq!(reps[4], reps[6]);
        assert_ne!(reps[0], reps[1]);
    }

    #[test]
    fn many_twins_stay_fast() {
        // a hub with 30 pendants
        let e: Vec<_> = (1..31).map(|i| (0, i)).collect();
        let g = Graph::from_edges(31, &e).unwrap();
        assert!(canonical_form(&g).is_ok());
        assert!(canonical_form(&Graph::empty(41).unwrap()).is_err());
    }
}
