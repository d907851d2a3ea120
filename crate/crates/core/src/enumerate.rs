//! Isomorph-free generation of small connected graphs and of nonbipartite
//! unicyclic graphs, plus predicate filtering.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_labelling, CanonicalForm};
use crate::domination::{self, gamma};
use crate::error::EnumerateError;
use crate::graph::{Graph, VertexSet};

pub const MAX_CONNECTED_ORDER: usize = 10;
pub const MAX_UNICYCLIC_ORDER: usize = 13;

fn deletion_key(g: &Graph, v: usize) -> (usize, usize) {
    (
        g.degree(v),
        g.neighbors(v).iter().map(|w| g.degree(w)).sum(),
    )
}

/// Augmentations of `parent` by one new vertex that pass the canonical
/// parent test, one per isomorphism class, as canonical graphs.
pub fn canonical_children(
    parent: &Graph,
    parent_form: &CanonicalForm,
) -> Vec<(Graph, CanonicalForm)> {
    let m = parent.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut rows = parent.rows().to_vec();
    rows.push(0);
    for mask in 1u64..(1 << m) {
        let mut adj = rows.clone();
        adj[m] = mask;
        for v in VertexSet::from_bits(mask) {
            adj[v] |= 1 << m;
        }
        let child = Graph::from_adjacency(adj).expect("valid augmentation");
        let key = deletion_key(&child, m);
        let mut candidates = VertexSet::singleton(m);
        let mut rejected = false;
        for u in 0..m {
            let k = deletion_key(&child, u);
            if k > key {
                continue;
            }
            if child.is_cut_vertex(u) {
                continue;
            }
            if k < key {
                rejected = true;
                break;
            }
            candidates.insert(u);
        }
        if rejected {
            continue;
        }
        let lab = canonical_labelling(&child).expect("order within canonical range");
        if candidates.len() > 1 {
            let chosen = lab
                .labels
                .iter()
                .copied()
                .find(|&v| candidates.contains(v))
                .expect("candidate set is nonempty");
            if chosen != m {
                let (reduced, _) = child
                    .without_vertices(VertexSet::singleton(chosen))
                    .unwrap();
                if canonical_form(&reduced).unwrap() != *parent_form {
                    continue;
                }
            }
        }
        if seen.insert(lab.form.clone()) {
            out.push((lab.form.graph(), lab.form));
        }
    }
    out
}

fn check_connected_order(n: usize) -> Result<(), EnumerateError> {
    if !(1..=MAX_CONNECTED_ORDER).contains(&n) {
        return Err(EnumerateError::OrderOutOfRange {
            n,
            min: 1,
            max: MAX_CONNECTED_ORDER,
        });
    }
    Ok(())
}

struct Frame {
    children: std::vec::IntoIter<(Graph, CanonicalForm)>,
}

/// Lazy depth-first stream of connected graphs of order `n`, one per
/// isomorphism class, in a fixed order.
pub struct ConnectedGraphs {
    n: usize,
    stack: Vec<Frame>,
    pending_single: bool,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.pending_single {
            self.pending_single = false;
            return Some(Graph::empty(1).unwrap());
        }
        loop {
            let frame = self.stack.last_mut()?;
            match frame.children.next() {
                None => {
                    self.stack.pop();
                }
                Some((g, form)) => {
                    if g.order() == self.n {
                        return Some(g);
                    }
                    let children = canonical_children(&g, &form);
                    self.stack.push(Frame {
                        children: children.into_iter(),
                    });
                }
            }
        }
    }
}

pub fn connected_graphs(n: usize) -> Result<ConnectedGraphs, EnumerateError> {
    check_connected_order(n)?;
    let k1 = Graph::empty(1).unwrap();
    let form = canonical_form(&k1).unwrap();
    Ok(ConnectedGraphs {
        n,
        stack: if n == 1 {
            vec![]
        } else {
            vec![Frame {
                children: canonical_children(&k1, &form).into_iter(),
            }]
        },
        pending_single: n == 1,
    })
}

/// Applies `f` to every connected graph of order `n`, splitting the work by
/// parent graph across the current rayon pool. Results keep the order of
/// [`connected_graphs`].
pub fn connected_map<T, F>(n: usize, f: F) -> Result<Vec<T>, EnumerateError>
where
    T: Send,
    F: Fn(&Graph) -> Option<T> + Sync,
{
    check_connected_order(n)?;
    if n <= 2 {
        return Ok(connected_graphs(n)?.filter_map(|g| f(&g)).collect());
    }
    let parents: Vec<Graph> = connected_graphs(n - 1)?.collect();
    let chunks: Vec<Vec<T>> = parents
        .par_iter()
        .map(|p| {
            let form = canonical_form(p).unwrap();
            canonical_children(p, &form)
                .into_iter()
                .filter_map(|(g, _)| f(&g))
                .collect()
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// Rooted trees up to a size bound, each stored as its sorted list of
/// child subtree ids. Ids increase with size.
#[derive(Clone, Debug)]
pub struct RootedTreeCatalog {
    sizes: Vec<usize>,
    children: Vec<Vec<usize>>,
    by_size: Vec<Vec<usize>>,
}

impl RootedTreeCatalog {
    pub fn new(max_size: usize) -> Self {
        let mut cat = RootedTreeCatalog {
            sizes: vec![],
            children: vec![],
            by_size: vec![vec![]],
        };
        for s in 1..=max_size {
            let mut made = Vec::new();
            let mut current = Vec::new();
            cat.multisets(s - 1, usize::MAX, &mut current, &mut made);
            let mut ids = Vec::new();
            for kids in made {
                ids.push(cat.sizes.len());
                cat.sizes.push(s);
                cat.children.push(kids);
            }
            cat.by_size.push(ids);
        }
        cat
    }

    /// Non-increasing id sequences whose sizes sum to `remaining`.
    fn multisets(
        &self,
        remaining: usize,
        max_id: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for size in 1..=remaining {
            for &id in self.by_size.get(size).into_iter().flatten() {
                if id > max_id {
                    continue;
                }
                cur.push(id);
                self.multisets(remaining - size, id, cur, out);
                cur.pop();
            }
        }
    }

    pub fn count(&self, size: usize) -> usize {
        self.by_size.get(size).map_or(0, Vec::len)
    }

    pub fn ids_of_size(&self, size: usize) -> &[usize] {
        self.by_size.get(size).map_or(&[], Vec::as_slice)
    }

    pub fn size(&self, id: usize) -> usize {
        self.sizes[id]
    }

    /// Adds the non-root vertices of tree `id` below vertex `root`.
    fn attach(&self, id: usize, root: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) {
        for &child in &self.children[id] {
            let v = *next;
            *next += 1;
            edges.push((root, v));
            self.attach(child, v, next, edges);
        }
    }
}

/// Whether `seq` is the least of its rotations and reflections.
fn is_least_necklace(seq: &[usize]) -> bool {
    let g = seq.len();
    for start in 0..g {
        for dir in [1isize, -1] {
            for i in 0..g {
                let j = (start as isize + dir * i as isize).rem_euclid(g as isize) as usize;
                match seq[j].cmp(&seq[i]) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => break,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    true
}

/// Nonbipartite unicyclic graphs of order `n`, one per isomorphism class,
/// optionally with a fixed cycle length. Cycle vertices come first, in
/// cyclic order.
pub fn unicyclic_nonbipartite(
    n: usize,
    girth: Option<usize>,
) -> Result<Vec<Graph>, EnumerateError> {
    if !(3..=MAX_UNICYCLIC_ORDER).contains(&n) {
        return Err(EnumerateError::OrderOutOfRange {
            n,
            min: 3,
            max: MAX_UNICYCLIC_ORDER,
        });
    }
    let cat = RootedTreeCatalog::new(n - 2);
    let lengths: Vec<usize> = match girth {
        Some(g) if g % 2 == 1 && g >= 3 && g <= n => vec![g],
        Some(_) => vec![],
        None => (3..=n).step_by(2).collect(),
    };
    let mut out = Vec::new();
    for g in lengths {
        let mut seq = Vec::with_capacity(g);
        sequences(&cat, g, n - g, &mut seq, &mut |s| {
            if is_least_necklace(s) {
                let mut edges: Vec<(usize, usize)> = (0..g).map(|i| (i, (i + 1) % g)).collect();
                let mut next = g;
                for (c, &id) in s.iter().enumerate() {
                    cat.attach(id, c, &mut next, &mut edges);
                }
                out.push(Graph::from_edges(n, &edges).expect("valid unicyclic graph"));
            }
        });
    }
    Ok(out)
}

fn sequences(
    cat: &RootedTreeCatalog,
    g: usize,
    extra: usize,
    seq: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if seq.len() == g {
        if extra == 0 {
            emit(seq);
        }
        return;
    }
    let slots_left = g - seq.len() - 1;
    for size in 1..=extra + 1 {
        for &id in cat.ids_of_size(size) {
            // the first entry must be the least on the necklace
            if let Some(&first) = seq.first() {
                if id < first {
                    continue;
                }
            }
            let used = size - 1;
            if used > extra {
                continue;
            }
            if slots_left == 0 && used != extra {
                continue;
            }
            seq.push(id);
            sequences(cat, g, extra - used, seq, emit);
            seq.pop();
        }
    }
}

/// Spanning nonbipartite unicyclic subgraph with the same odd girth and
/// domination number.
pub fn spanning_unicyclic_witness(g: &Graph) -> Result<Graph, EnumerateError> {
    if !g.is_connected() || g.is_bipartite() {
        return Err(EnumerateError::Precondition(
            "graph must be connected and nonbipartite".into(),
        ));
    }
    if g.is_unicyclic() {
        return Ok(g.clone());
    }
    let go = g.odd_girth().expect("nonbipartite");
    let target = gamma(g);
    let cycles = cycles_of_length(g, go);
    let dominating = minimum_dominating_sets(g, target);
    for c in &cycles {
        for &d in &dominating {
            if let Some(h) = grow_around(g, c, d) {
                debug_assert!(h.is_unicyclic() && h.odd_girth() == Some(go));
                if gamma(&h) == target {
                    return Ok(h);
                }
            }
        }
    }
    brute_force_witness(g, go, target).ok_or_else(|| EnumerateError::NoWitness(format!("{g:?}")))
}

/// Keeps cycle `c`, joins every vertex not dominated along `c` to a member of
/// `d`, then connects the rest without closing another cycle.
fn grow_around(g: &Graph, c: &[usize], d: VertexSet) -> Option<Graph> {
    let n = g.order();
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while uf[r] != r {
            r = uf[r];
        }
        let mut y = x;
        while uf[y] != r {
            let next = uf[y];
            uf[y] = r;
            y = next;
        }
        r
    }
    let mut edges = Vec::new();
    for i in 0..c.len() {
        let (a, b) = (c[i], c[(i + 1) % c.len()]);
        edges.push((a, b));
        let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
        uf[ra] = rb;
    }
    let on_cycle: VertexSet = c.iter().copied().collect();
    let mut dominated = d;
    for i in 0..c.len() {
        if d.contains(c[i]) {
            dominated.insert(c[(i + 1) % c.len()]);
            dominated.insert(c[(i + c.len() - 1) % c.len()]);
        }
    }
    let order: Vec<usize> = on_cycle
        .iter()
        .chain(g.vertices().difference(on_cycle).iter())
        .collect();
    for v in order {
        if dominated.contains(v) {
            continue;
        }
        let options = g.neighbors(v).intersection(d);
        let mut joined = false;
        for w in options {
            let (rv, rw) = (find(&mut uf, v), find(&mut uf, w));
            if rv != rw {
                uf[rv] = rw;
                edges.push((v, w));
                joined = true;
                break;
            }
        }
        if !joined {
            return None;
        }
        dominated.insert(v);
    }
    for (a, b) in g.edges() {
        let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
        if ra != rb {
            uf[ra] = rb;
            edges.push((a, b));
        }
    }
    Graph::from_edges(n, &edges).ok()
}

fn brute_force_witness(g: &Graph, go: usize, target: usize) -> Option<Graph> {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() > 24 {
        return None;
    }
    let mut result = None;
    choose(edges.len(), n, &mut |pick| {
        let chosen: Vec<(usize, usize)> = pick.iter().map(|&i| edges[i]).collect();
        let h = Graph::from_edges(n, &chosen).unwrap();
        if h.is_unicyclic() && h.odd_girth() == Some(go) && gamma(&h) == target {
            result = Some(h);
            return true;
        }
        false
    });
    result
}

/// Calls `f` on each `k`-subset of `0..m` until it returns true.
fn choose(m: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) {
    fn rec(
        start: usize,
        m: usize,
        k: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            if rec(i + 1, m, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, m, k, &mut Vec::new(), f);
}

/// Every cycle of length `len`, each listed once as a vertex sequence.
pub fn cycles_of_length(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(len);
    for start in 0..g.order() {
        path.push(start);
        extend_cycle(
            g,
            start,
            len,
            VertexSet::singleton(start),
            &mut path,
            &mut out,
        );
        path.pop();
    }
    out
}

fn extend_cycle(
    g: &Graph,
    start: usize,
    len: usize,
    used: VertexSet,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    if path.len() == len {
        // smallest vertex first, and the direction with the smaller second entry
        if g.has_edge(last, start) && path[1] < path[len - 1] {
            out.push(path.clone());
        }
        return;
    }
    for w in g.neighbors(last).difference(used) {
        if w <= start {
            continue;
        }
        path.push(w);
        extend_cycle(
            g,
            start,
            len,
            used.union(VertexSet::singleton(w)),
            path,
            out,
        );
        path.pop();
    }
}

/// All dominating sets of size `k`.
pub fn minimum_dominating_sets(g: &Graph, k: usize) -> Vec<VertexSet> {
    let n = g.order();
    let mut out = Vec::new();
    choose(n, k, &mut |pick| {
        let s: VertexSet = pick.iter().copied().collect();
        if domination::is_dominating_set(g, s) {
            out.push(s);
        }
        out.len() >= 64
    });
    out
}

/// Predicates on connected graphs of a fixed order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphFilter {
    pub n: usize,
    pub nonbipartite: bool,
    pub unicyclic: bool,
    pub gamma: Option<usize>,
    /// Inclusive bounds on γ.
    pub gamma_range: Option<(usize, usize)>,
    pub girth: Option<usize>,
    pub max_odd_girth: Option<usize>,
}

impl GraphFilter {
    pub fn new(n: usize) -> Self {
        GraphFilter {
            n,
            ..Default::default()
        }
    }

    pub fn nonbipartite(mut self) -> Self {
        self.nonbipartite = true;
        self
    }

    pub fn unicyclic(mut self) -> Self {
        self.unicyclic = true;
        self
    }

    pub fn with_gamma(mut self, gamma: usize) -> Self {
        self.gamma = Some(gamma);
        self
    }

    pub fn with_gamma_range(mut self, lo: usize, hi: usize) -> Self {
        self.gamma_range = Some((lo, hi));
        self
    }

    pub fn with_girth(mut self, girth: usize) -> Self {
        self.girth = Some(girth);
        self
    }

    pub fn with_max_odd_girth(mut self, bound: usize) -> Self {
        self.max_odd_girth = Some(bound);
        self
    }

    /// Largest domination number of a connected graph of order `n`.
    pub fn gamma_ceiling(n: usize) -> usize {
        if n <= 1 {
            n
        } else {
            n / 2
        }
    }

    /// Why no connected graph can pass, if that is evident up front.
    pub fn unsatisfiable(&self) -> Option<String> {
        let n = self.n;
        if n == 0 {
            return Some("order 0".into());
        }
        let cap = Self::gamma_ceiling(n);
        let (mut lo, mut hi) = (1, cap);
        if let Some(g) = self.gamma {
            lo = lo.max(g);
            hi = hi.min(g);
        }
        if let Some((a, b)) = self.gamma_range {
            lo = lo.max(a);
            hi = hi.min(b);
        }
        if lo > hi {
            return Some(format!(
                "no connected graph of order {n} has domination number in the requested range (at most {cap})"
            ));
        }
        if (self.nonbipartite || self.unicyclic) && n < 3 {
            return Some(format!("order {n} has no cycle"));
        }
        if let Some(g) = self.girth {
            if g < 3 || g > n {
                return Some(format!("girth {g} impossible at order {n}"));
            }
        }
        if let Some(b) = self.max_odd_girth {
            if b < 3 {
                return Some(format!("odd girth bound {b} below 3"));
            }
        }
        None
    }

    /// Structural predicates only.
    pub fn matches_structure(&self, g: &Graph) -> bool {
        if g.order() != self.n || !g.is_connected() {
            return false;
        }
        if self.unicyclic && !g.is_unicyclic() {
            return false;
        }
        if self.nonbipartite && g.is_bipartite() {
            return false;
        }
        if let Some(girth) = self.girth {
            if g.girth() != Some(girth) {
                return false;
            }
        }
        if let Some(b) = self.max_odd_girth {
            match g.odd_girth() {
                Some(og) if og <= b => {}
                _ => return false,
            }
        }
        true
    }

    pub fn needs_gamma(&self) -> bool {
        self.gamma.is_some() || self.gamma_range.is_some()
    }

    pub fn matches_gamma(&self, value: usize) -> bool {
        self.gamma.is_none_or(|g| g == value)
            && self
                .gamma_range
                .is_none_or(|(lo, hi)| lo <= value && value <= hi)
    }

    pub fn matches(&self, g: &Graph) -> bool {
        self.matches_structure(g) && (!self.needs_gamma() || self.matches_gamma(gamma(g)))
    }
}

/// Stream adaptor applying a [`GraphFilter`]; cheap predicates run first.
pub struct FilterStream<I> {
    inner: I,
    filter: GraphFilter,
    /// Set when the filter is evidently unsatisfiable; the stream is then empty.
    pub warning: Option<String>,
}

impl<I: Iterator<Item = Graph>> Iterator for FilterStream<I> {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.warning.is_some() {
            return None;
        }
        self.inner.by_ref().find(|g| self.filter.matches(g))
    }
}

pub fn filter_stream<I: Iterator<Item = Graph>>(
    stream: I,
    filter: &GraphFilter,
) -> FilterStream<I> {
    FilterStream {
        inner: stream,
        filter: filter.clone(),
        warning: filter.unsatisfiable(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::families::{complete, cycle, lollipop};

    fn labelled_oracle(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut forms = HashSet::new();
        for mask in 0u64..1 << pairs.len() {
            let e: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::from_edges(n, &e).unwrap();
            if g.is_connected() {
                forms.insert(canonical_form(&g).unwrap());
            }
        }
        forms.len()
    }

    #[test]
    fn small_counts_match_oracle() {
        for n in 1..=5 {
            let got: Vec<Graph> = connected_graphs(n).unwrap().collect();
            assert_eq!(got.len(), labelled_oracle(n), "n={n}");
            let forms: HashSet<_> = got.iter().map(|g| canonical_form(g).unwrap()).collect();
            assert_eq!(forms.len(), got.len());
        }
        assert_eq!(connected_graphs(4).unwrap().count(), 6);
        assert_eq!(connected_graphs(5).unwrap().count(), 21);
    }

    #[test]
    fn parallel_map_preserves_order() {
        let seq: Vec<Graph> = connected_graphs(6).unwrap().collect();
        let par = connected_map(6, |g| Some(g.clone())).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn bounds() {
        assert!(connected_graphs(0).is_err());
        assert!(connected_graphs(11).is_err());
        assert!(unicyclic_nonbipartite(2, None).is_err());
        assert!(unicyclic_nonbipartite(14, None).is_err());
    }

    #[test]
    fn rooted_tree_counts() {
        let cat = RootedTreeCatalog::new(11);
        let counts: Vec<usize> = (1..=11).map(|s| cat.count(s)).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842]);
    }

    #[test]
    fn necklace_test() {
        assert!(is_least_necklace(&[0, 0, 1]));
        assert!(!is_least_necklace(&[0, 1, 0]));
        assert!(is_least_necklace(&[0, 1, 2, 1]));
        assert!(!is_least_necklace(&[0, 2, 1, 1]));
    }

    #[test]
    fn unicyclic_small_cases() {
        let three = unicyclic_nonbipartite(3, None).unwrap();
        assert_eq!(three.len(), 1);
        assert!(are_isomorphic(&three[0], &cycle(3).unwrap().graph).unwrap());
        let four = unicyclic_nonbipartite(4, Some(3)).unwrap();
        assert_eq!(four.len(), 1);
        assert!(are_isomorphic(&four[0], &lollipop(3, 1).unwrap().graph).unwrap());
        for g in unicyclic_nonbipartite(9, Some(5)).unwrap() {
            assert!(g.is_unicyclic());
            assert_eq!(g.girth(), Some(5));
        }
    }

    #[test]
    fn unicyclic_matches_filtered_connected() {
        for n in 3..=7 {
            let mine: HashSet<_> = unicyclic_nonbipartite(n, None)
                .unwrap()
                .iter()
                .map(|g| canonical_form(g).unwrap())
                .collect();
            let filter = GraphFilter::new(n).nonbipartite().unicyclic();
            let reference: HashSet<_> = filter_stream(connected_graphs(n).unwrap(), &filter)
                .map(|g| canonical_form(&g).unwrap())
                .collect();
            assert_eq!(mine, reference, "n={n}");
            assert_eq!(mine.len(), unicyclic_nonbipartite(n, None).unwrap().len());
        }
    }

    #[test]
    fn witness_examples() {
        let k4 = complete(4).unwrap().graph;
        let h = spanning_unicyclic_witness(&k4).unwrap();
        assert!(h.is_unicyclic() && h.is_spanning_subgraph_of(&k4));
        assert_eq!(h.girth(), Some(3));
        assert_eq!(gamma(&h), 1);
        let l = lollipop(5, 2).unwrap().graph;
        assert_eq!(spanning_unicyclic_witness(&l).unwrap(), l);
        assert!(spanning_unicyclic_witness(&cycle(4).unwrap().graph).is_err());
    }

    #[test]
    fn filter_examples() {
        let f = GraphFilter::new(5).nonbipartite().with_gamma(2);
        let got: Vec<Graph> = filter_stream(connected_graphs(5).unwrap(), &f).collect();
        assert!(got
            .iter()
            .any(|g| are_isomorphic(g, &cycle(5).unwrap().graph).unwrap()));
        assert!(got
            .iter()
            .any(|g| are_isomorphic(g, &lollipop(3, 2).unwrap().graph).unwrap()));
        // the paw is dominated by its degree-3 vertex
        let f = GraphFilter::new(4).nonbipartite().with_gamma(1);
        let got: Vec<Graph> = filter_stream(connected_graphs(4).unwrap(), &f).collect();
        assert!(got
            .iter()
            .any(|g| are_isomorphic(g, &lollipop(3, 1).unwrap().graph).unwrap()));
        let f = GraphFilter::new(4).nonbipartite().with_gamma(2);
        assert_eq!(filter_stream(connected_graphs(4).unwrap(), &f).count(), 0);
        let f = GraphFilter::new(4).with_gamma(3);
        let mut s = filter_stream(connected_graphs(4).unwrap(), &f);
        assert!(s.warning.is_some());
        assert!(s.next().is_none());
    }
}
