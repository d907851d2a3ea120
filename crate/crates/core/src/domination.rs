//! Exact domination numbers and closed forms for the named families.

use crate::error::{DominationError, FamilyError, GraphError};
use crate::families::{self, FamilySpec, HVariant};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationResult {
    pub gamma: usize,
    /// Lexicographically least minimum dominating set under the constraints.
    pub witness: VertexSet,
    pub include: VertexSet,
    pub exclude: VertexSet,
}

pub fn is_dominating_set(g: &Graph, s: VertexSet) -> bool {
    let mut covered = s;
    for v in s {
        covered = covered.union(g.neighbors(v));
    }
    g.vertices().is_subset(covered)
}

fn closed_cover(g: &Graph, s: VertexSet) -> u64 {
    s.iter()
        .fold(0, |acc, v| acc | g.closed_neighbors(v).bits())
}

/// Branch and bound for the fewest extra vertices from `allowed` that
/// dominate `undominated`.
struct Solver {
    closed: Vec<u64>,
}

impl Solver {
    fn new(g: &Graph) -> Self {
        let closed = (0..g.order())
            .map(|v| g.closed_neighbors(v).bits())
            .collect();
        Solver { closed }
    }

    fn greedy(&self, mut undominated: u64, allowed: u64) -> Option<usize> {
        let mut count = 0;
        while undominated != 0 {
            let best = VertexSet::from_bits(allowed).iter().max_by_key(|&v| {
                (
                    (self.closed[v] & undominated).count_ones(),
                    std::cmp::Reverse(v),
                )
            })?;
            if self.closed[best] & undominated == 0 {
                return None;
            }
            undominated &= !self.closed[best];
            count += 1;
        }
        Some(count)
    }

    /// Minimum number of vertices of `allowed` covering `undominated`, if any
    /// cover exists.
    fn minimum(&self, undominated: u64, allowed: u64) -> Option<usize> {
        let upper = self.greedy(undominated, allowed)?;
        let mut best = upper;
        self.search(undominated, allowed, 0, &mut best);
        Some(best)
    }

    fn search(&self, undominated: u64, allowed: u64, depth: usize, best: &mut usize) {
        if undominated == 0 {
            *best = (*best).min(depth);
            return;
        }
        if depth + 1 >= *best {
            return;
        }
        let mut max_cover = 0;
        for v in VertexSet::from_bits(allowed) {
            max_cover = max_cover.max((self.closed[v] & undominated).count_ones());
        }
        if max_cover == 0 {
            return;
        }
        let lower = (undominated.count_ones()).div_ceil(max_cover) as usize;
        if depth + lower >= *best {
            return;
        }
        // the undominated vertex with the fewest candidates
        let mut pivot_cands = u64::MAX;
        for u in VertexSet::from_bits(undominated) {
            let cands = self.closed[u] & allowed;
            if cands.count_ones() < pivot_cands.count_ones() {
                pivot_cands = cands;
                if cands.count_ones() <= 1 {
                    break;
                }
            }
        }
        if pivot_cands == 0 {
            return;
        }
        let mut order: Vec<usize> = VertexSet::from_bits(pivot_cands).to_vec();
        order.sort_by_key(|&c| std::cmp::Reverse((self.closed[c] & undominated).count_ones()));
        let mut allowed = allowed;
        for c in order {
            self.search(undominated & !self.closed[c], allowed, depth + 1, best);
            // later branches never pick c again
            allowed &= !(1 << c);
        }
    }
}

fn check_set(g: &Graph, s: VertexSet) -> Result<(), GraphError> {
    match s.difference(g.vertices()).first() {
        Some(v) => Err(GraphError::InvalidVertex {
            vertex: v,
            order: g.order(),
        }),
        None => Ok(()),
    }
}

fn validate(g: &Graph, include: VertexSet, exclude: VertexSet) -> Result<(), DominationError> {
    check_set(g, include)?;
    check_set(g, exclude)?;
    if let Some(v) = include.intersection(exclude).first() {
        return Err(DominationError::Conflict(v));
    }
    let allowed = g.vertices().difference(exclude);
    for v in g.vertices() {
        if g.closed_neighbors(v).intersection(allowed).is_empty() {
            return Err(DominationError::Infeasible(v));
        }
    }
    Ok(())
}

/// Domination number alone, without constructing a witness.
pub fn gamma(g: &Graph) -> usize {
    let solver = Solver::new(g);
    solver
        .minimum(g.vertices().bits(), g.vertices().bits())
        .expect("every vertex dominates itself")
}

/// Least size of a dominating set containing `include` and avoiding `exclude`.
pub fn constrained_gamma(
    g: &Graph,
    include: VertexSet,
    exclude: VertexSet,
) -> Result<usize, DominationError> {
    validate(g, include, exclude)?;
    let solver = Solver::new(g);
    let allowed = g.vertices().difference(exclude).difference(include).bits();
    let undominated = g.vertices().bits() & !closed_cover(g, include);
    let extra = solver.minimum(undominated, allowed).ok_or_else(|| {
        DominationError::Infeasible(VertexSet::from_bits(undominated).first().unwrap_or(0))
    })?;
    Ok(include.len() + extra)
}

pub fn domination_number(
    g: &Graph,
    include: VertexSet,
    exclude: VertexSet,
) -> Result<DominationResult, DominationError> {
    let total = constrained_gamma(g, include, exclude)?;
    let solver = Solver::new(g);
    let mut chosen = include;
    let mut allowed = g.vertices().difference(exclude).difference(include).bits();
    let mut remaining = total - include.len();
    for v in 0..g.order() {
        let undominated = g.vertices().bits() & !closed_cover(g, chosen);
        if undominated == 0 {
            break;
        }
        if allowed >> v & 1 == 0 {
            continue;
        }
        allowed &= !(1 << v);
        let after = undominated & !solver.closed[v];
        let fits = match solver.minimum(after, allowed) {
            Some(m) => m + 1 <= remaining,
            None => false,
        };
        if fits {
            chosen.insert(v);
            remaining -= 1;
        }
    }
    debug_assert!(is_dominating_set(g, chosen) && chosen.len() == total);
    Ok(DominationResult {
        gamma: total,
        witness: chosen,
        include,
        exclude,
    })
}

/// A minimum dominating set containing every support vertex and no pendant
/// vertex, or `None` when no minimum dominating set has that shape.
pub fn minimal_dominating_set_avoiding_pendants(g: &Graph) -> Option<DominationResult> {
    let res = domination_number(g, g.p_dominators(), g.pendant_vertices()).ok()?;
    (res.gamma == gamma(g)).then_some(res)
}

/// Whether `g` is `C_4` or a corona `H ∘ K_1`: every vertex is a pendant or
/// has exactly one pendant neighbour, matched one to one.
pub fn corona_characterization(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return false;
    }
    if n == 4 && g.size() == 4 && g.degrees().iter().all(|&d| d == 2) {
        return true;
    }
    if n % 2 == 1 {
        return false;
    }
    if n == 2 {
        return g.size() == 1;
    }
    let pendants = g.pendant_vertices();
    let supports = g.vertices().difference(pendants);
    pendants.len() == n / 2
        && supports.iter().all(|v| g.pendant_count(v) == 1)
        && pendants
            .iter()
            .all(|p| supports.contains(g.neighbors(p).first().unwrap()))
}

fn ceil_div3(x: i64) -> i64 {
    (x + 2).div_euclid(3)
}

/// Predicted domination number from the closed forms for paths, cycles,
/// sunlike graphs, the `H` graphs and `scriptH`.
pub fn gamma_formula(spec: &FamilySpec) -> Result<usize, FamilyError> {
    let no_form = || FamilyError::NoClosedForm(spec.to_string());
    let v = match spec {
        FamilySpec::Path { n } | FamilySpec::Cycle { n } => ceil_div3(*n as i64),
        FamilySpec::Complete { .. } => 1,
        FamilySpec::Sunlike { g, k } => {
            families::sunlike_star(*g, *k)?;
            *k as i64 + ceil_div3(*g as i64 - *k as i64 - 2)
        }
        FamilySpec::ScriptH { n, alpha } => {
            families::script_h_parameters(*n, *alpha)?;
            let (n, a) = (*n as i64, *alpha as i64);
            if a == 0 {
                1
            } else if n - 2 * a <= 2 {
                a
            } else {
                ceil_div3(n - 2 * a - 2) + a
            }
        }
        FamilySpec::H {
            variant,
            eps,
            k,
            s,
            a,
        } => {
            families::h_family(*variant, *eps, *k, a.as_deref(), *s)?;
            let (e, k) = (*eps as i64, *k as i64);
            let h2 = if e - k - 1 <= 2 {
                k + 1
            } else {
                ceil_div3(e - k - 4) + k + 1
            };
            let integral = e - k - 1 >= 3 && (e - k - 4) % 3 == 0;
            match variant {
                HVariant::H2 => h2,
                HVariant::H4 if integral => h2,
                HVariant::H4 => h2 - 1,
                HVariant::H5 if integral => h2 - 1,
                _ => return Err(no_form()),
            }
        }
        FamilySpec::Corona { base } => families::build(base)?.graph.order() as i64,
        _ => return Err(no_form()),
    };
    Ok(v as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{corona_k1, cycle, lollipop, path, script_h, sunlike_star};

    fn brute_gamma(g: &Graph) -> usize {
        let n = g.order();
        (0u64..1 << n)
            .filter(|&m| is_dominating_set(g, VertexSet::from_bits(m)))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn dominating_set_checks() {
        let c4 = cycle(4).unwrap().graph;
        assert!(is_dominating_set(&c4, set(&[0, 2])));
        let p3 = path(3).unwrap().graph;
        assert!(is_dominating_set(&p3, set(&[1])));
        let c7 = cycle(7).unwrap().graph;
        assert!(!is_dominating_set(&c7, set(&[0, 3])));
    }

    #[test]
    fn small_domination_numbers() {
        assert_eq!(gamma(&path(7).unwrap().graph), 3);
        assert_eq!(gamma(&cycle(5).unwrap().graph), 2);
        assert_eq!(gamma(&Graph::empty(1).unwrap()), 1);
        let c4k1 = corona_k1(&FamilySpec::Cycle { n: 4 }).unwrap().graph;
        assert_eq!(gamma(&c4k1), 4);
    }

    #[test]
    fn witness_is_lex_least() {
        let p7 = path(7).unwrap().graph;
        let r = domination_number(&p7, VertexSet::empty(), VertexSet::empty()).unwrap();
        assert_eq!(r.witness.to_vec(), vec![0, 2, 5]);
        let c6 = cycle(6).unwrap().graph;
        let r = domination_number(&c6, VertexSet::empty(), VertexSet::empty()).unwrap();
        assert_eq!(r.witness.to_vec(), vec![0, 3]);
    }

    #[test]
    fn constraints() {
        let p3 = path(3).unwrap().graph;
        let r = domination_number(&p3, set(&[0]), VertexSet::empty()).unwrap();
        assert_eq!(r.gamma, 2);
        assert_eq!(
            domination_number(&p3, set(&[0]), set(&[0])),
            Err(DominationError::Conflict(0))
        );
        assert_eq!(
            domination_number(&p3, VertexSet::empty(), set(&[0, 1])),
            Err(DominationError::Infeasible(0))
        );
    }

    #[test]
    fn solver_matches_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let n = rng.gen_range(1..=11);
            let mut e = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(0.3) {
                        e.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &e).unwrap();
            let r = domination_number(&g, VertexSet::empty(), VertexSet::empty()).unwrap();
            assert_eq!(r.gamma, brute_gamma(&g));
            let least = (0u64..1 << n)
                .filter(|&m| m.count_ones() as usize == r.gamma)
                .map(VertexSet::from_bits)
                .filter(|&s| is_dominating_set(&g, s))
                .min_by(|a, b| a.to_vec().cmp(&b.to_vec()))
                .unwrap();
            assert_eq!(r.witness, least);
        }
    }

    #[test]
    fn avoiding_pendants_examples() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(
            minimal_dominating_set_avoiding_pendants(&star)
                .unwrap()
                .witness,
            set(&[0])
        );
        let l31 = lollipop(3, 1).unwrap();
        let r = minimal_dominating_set_avoiding_pendants(&l31.graph).unwrap();
        assert_eq!(r.witness, set(&[l31.v(3)]));
        let p4 = path(4).unwrap().graph;
        assert_eq!(
            minimal_dominating_set_avoiding_pendants(&p4)
                .unwrap()
                .witness,
            set(&[1, 2])
        );
    }

    #[test]
    fn corona_shapes() {
        assert!(corona_characterization(&cycle(4).unwrap().graph));
        assert!(corona_characterization(&path(4).unwrap().graph));
        assert!(!corona_characterization(&cycle(5).unwrap().graph));
        assert!(!corona_characterization(&path(3).unwrap().graph));
    }

    #[test]
    fn formula_examples() {
        assert_eq!(gamma_formula(&FamilySpec::Path { n: 10 }).unwrap(), 4);
        assert_eq!(
            gamma_formula(&FamilySpec::Sunlike { g: 7, k: 2 }).unwrap(),
            3
        );
        assert_eq!(
            gamma_formula(&FamilySpec::ScriptH { n: 9, alpha: 3 }).unwrap(),
            4
        );
        assert!(matches!(
            gamma_formula(&FamilySpec::Lollipop { g: 3, l: 2 }),
            Err(FamilyError::NoClosedForm(_))
        ));
        assert!(matches!(
            gamma_formula(&FamilySpec::ScriptH { n: 4, alpha: 2 }),
            Err(FamilyError::Unrealizable(_))
        ));
    }

    #[test]
    fn formulas_agree_on_small_instances() {
        for n in 3..=15 {
            assert_eq!(
                gamma(&cycle(n).unwrap().graph),
                gamma_formula(&FamilySpec::Cycle { n }).unwrap()
            );
        }
        for g in 3..=8 {
            for k in 1..=g {
                let s = sunlike_star(g, k).unwrap();
                assert_eq!(
                    gamma(&s.graph),
                    gamma_formula(&s.spec).unwrap(),
                    "g={g} k={k}"
                );
            }
        }
        for n in 3..=12 {
            for alpha in 0..=n {
                if let Ok(h) = script_h(n, alpha) {
                    assert_eq!(
                        gamma(&h.graph),
                        gamma_formula(&h.spec).unwrap(),
                        "n={n} a={alpha}"
                    );
                }
            }
        }
    }
}
