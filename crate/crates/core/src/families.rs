//! Named graph families with their conventional vertex labels.
//!
//! Lollipop-based families put `v_i` at index `i - 1`: the cycle is
//! `v_1 .. v_g`, the tail `v_g .. v_{g+l}`. Pendant vertices added on top of
//! the lollipop follow the spine, in order of their support vertex. The
//! [`VertexRole`] list of a [`FamilyGraph`] records the mapping.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::FamilyError;
use crate::graph::{Graph, VertexSet};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HVariant {
    H1,
    H2,
    H3,
    H4,
    H5,
}

impl fmt::Display for HVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HVariant::H1 => "H1",
            HVariant::H2 => "H2",
            HVariant::H3 => "H3",
            HVariant::H4 => "H4",
            HVariant::H5 => "H5",
        };
        f.write_str(s)
    }
}

/// Parameters of a family member. The text form (`Display`/`FromStr`) is
/// used on the command line and in reports, e.g. `scriptH n=9 alpha=3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Lollipop {
        g: usize,
        l: usize,
    },
    /// Triangle, a path of length `k` from `v_3`, and `n - 3 - k` pendants at
    /// the far end of the path.
    C3Star {
        n: usize,
        k: usize,
    },
    /// Lollipop `L_{g,l}` plus `count` pendants at `v_i` for each `i => count`.
    FGraph {
        g: usize,
        l: usize,
        attachments: BTreeMap<usize, usize>,
    },
    /// The `H^k` graphs built on `L_{3, eps-3}`. `s` counts the pendant
    /// vertices at `v_{eps-1}`, `v_eps` included. `a` fixes the supports of
    /// `H1`; other variants ignore it.
    H {
        variant: HVariant,
        eps: usize,
        k: usize,
        a: Option<Vec<usize>>,
        s: usize,
    },
    /// `H^{alpha-1}_2` of order `n` with one pendant at `v_{eps-1}`, where
    /// `eps = n - alpha + 1`; `alpha = 0` is the triangle.
    ScriptH {
        n: usize,
        alpha: usize,
    },
    /// Cycle `C_g` with one pendant on each of `v_1 .. v_k`.
    Sunlike {
        g: usize,
        k: usize,
    },
    /// `base ∘ K_1`.
    Corona {
        base: Box<FamilySpec>,
    },
}

/// Role of a vertex in a family construction.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexRole {
    /// `v_i` (1-based) on the cycle, path or lollipop spine.
    Spine(usize),
    /// The `ordinal`-th pendant hung on spine vertex `v_support`.
    Pendant { support: usize, ordinal: usize },
    /// Corona copy attached to base vertex index `base`.
    CoronaCopy { base: usize },
}

/// Membership flags for graphs built on a lollipop.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub struct FClass {
    /// Every support vertex other than `v_{g+l-1}` carries exactly one pendant.
    pub script_f: bool,
    /// `script_f` and `v_g` is a support vertex.
    pub script_f_circle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyGraph {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub roles: Vec<VertexRole>,
    /// Set for graphs that are `F_{g,l}`-graphs under their construction labels.
    pub f_class: Option<FClass>,
}

impl FamilyGraph {
    /// Index of spine vertex `v_i`.
    pub fn vertex(&self, i: usize) -> Option<usize> {
        self.roles.iter().position(|r| *r == VertexRole::Spine(i))
    }

    /// Index of `v_i`; panics when the family has no such vertex.
    pub fn v(&self, i: usize) -> usize {
        self.vertex(i)
            .unwrap_or_else(|| panic!("{} has no vertex v{i}", self.spec))
    }
}

struct Builder {
    roles: Vec<VertexRole>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn spine(len: usize) -> Self {
        Builder {
            roles: (1..=len).map(VertexRole::Spine).collect(),
            edges: Vec::new(),
        }
    }

    fn lollipop(g: usize, l: usize) -> Self {
        let mut b = Self::spine(g + l);
        for i in 0..g {
            b.edges.push((i, (i + 1) % g));
        }
        for i in g - 1..g + l - 1 {
            b.edges.push((i, i + 1));
        }
        b
    }

    fn pendant(&mut self, support_label: usize) -> usize {
        let at = self
            .roles
            .iter()
            .position(|r| *r == VertexRole::Spine(support_label))
            .expect("support is a spine vertex");
        let ordinal = self
            .roles
            .iter()
            .filter(
                |r| matches!(r, VertexRole::Pendant { support, .. } if *support == support_label),
            )
            .count()
            + 1;
        let idx = self.roles.len();
        self.roles.push(VertexRole::Pendant {
            support: support_label,
            ordinal,
        });
        self.edges.push((at, idx));
        idx
    }

    /// Re-hangs pendant `p` from its current support onto spine vertex `to`.
    fn move_pendant(&mut self, p: usize, to: usize) {
        let to_idx = self
            .roles
            .iter()
            .position(|r| *r == VertexRole::Spine(to))
            .expect("target is a spine vertex");
        let e = self
            .edges
            .iter_mut()
            .find(|(a, b)| *a == p || *b == p)
            .expect("pendant has an edge");
        *e = (to_idx, p);
    }

    fn finish(self, spec: FamilySpec) -> Result<FamilyGraph, FamilyError> {
        let graph = Graph::from_edges(self.roles.len(), &self.edges)?;
        Ok(FamilyGraph {
            spec,
            graph,
            roles: self.roles,
            f_class: None,
        })
    }
}

fn out_of_range(msg: impl Into<String>) -> FamilyError {
    FamilyError::OutOfRange(msg.into())
}

pub fn path(n: usize) -> Result<FamilyGraph, FamilyError> {
    if n == 0 {
        return Err(out_of_range("path needs n >= 1"));
    }
    let mut b = Builder::spine(n);
    b.edges = (1..n).map(|i| (i - 1, i)).collect();
    b.finish(FamilySpec::Path { n })
}

pub fn cycle(n: usize) -> Result<FamilyGraph, FamilyError> {
    if n < 3 {
        return Err(out_of_range("cycle needs n >= 3"));
    }
    let mut b = Builder::spine(n);
    b.edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    b.finish(FamilySpec::Cycle { n })
}

pub fn complete(n: usize) -> Result<FamilyGraph, FamilyError> {
    if n == 0 {
        return Err(out_of_range("complete graph needs n >= 1"));
    }
    let mut b = Builder::spine(n);
    b.edges = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    b.finish(FamilySpec::Complete { n })
}

pub fn lollipop(g: usize, l: usize) -> Result<FamilyGraph, FamilyError> {
    if g < 3 || l < 1 {
        return Err(out_of_range(format!(
            "lollipop needs g >= 3 and l >= 1, got g={g} l={l}"
        )));
    }
    let mut fg = Builder::lollipop(g, l).finish(FamilySpec::Lollipop { g, l })?;
    fg.f_class = Some(f_class_of(&fg.graph, g, l, &fg.roles));
    Ok(fg)
}

pub fn c3_star(n: usize, k: usize) -> Result<FamilyGraph, FamilyError> {
    if n < 3 || k + 3 > n {
        return Err(out_of_range(format!(
            "c3star needs 0 <= k <= n - 3, got n={n} k={k}"
        )));
    }
    let mut b = Builder::spine(3 + k);
    b.edges = vec![(0, 1), (1, 2), (2, 0)];
    for i in 2..2 + k {
        b.edges.push((i, i + 1));
    }
    for _ in 0..n - 3 - k {
        b.pendant(3 + k);
    }
    b.finish(FamilySpec::C3Star { n, k })
}

pub fn f_graph(
    g: usize,
    l: usize,
    attachments: &BTreeMap<usize, usize>,
) -> Result<FamilyGraph, FamilyError> {
    if g < 3 || l < 1 {
        return Err(out_of_range(format!(
            "F-graph needs g >= 3 and l >= 1, got g={g} l={l}"
        )));
    }
    for &v in attachments.keys() {
        if v == g + l {
            return Err(out_of_range(format!(
                "v{v} is the pendant end of the lollipop"
            )));
        }
        if v == 0 || v > g + l {
            return Err(out_of_range(format!("no vertex v{v} in L_{{{g},{l}}}")));
        }
    }
    let mut b = Builder::lollipop(g, l);
    for (&v, &count) in attachments {
        for _ in 0..count {
            b.pendant(v);
        }
    }
    let attachments = attachments
        .iter()
        .filter(|(_, &c)| c > 0)
        .map(|(&k, &v)| (k, v))
        .collect();
    let mut fg = b.finish(FamilySpec::FGraph { g, l, attachments })?;
    fg.f_class = Some(f_class_of(&fg.graph, g, l, &fg.roles));
    Ok(fg)
}

/// Flags for a lollipop-based graph whose spine labels are given by `roles`.
fn f_class_of(graph: &Graph, g: usize, l: usize, roles: &[VertexRole]) -> FClass {
    let idx = |i: usize| {
        roles
            .iter()
            .position(|r| *r == VertexRole::Spine(i))
            .unwrap()
    };
    let labelling = FLabelling {
        g,
        l,
        spine: (1..=g + l).map(idx).collect(),
    };
    labelling.classify(graph)
}

pub fn h_family(
    variant: HVariant,
    eps: usize,
    k: usize,
    a: Option<&[usize]>,
    s: usize,
) -> Result<FamilyGraph, FamilyError> {
    let spec = FamilySpec::H {
        variant,
        eps,
        k,
        a: a.map(<[usize]>::to_vec),
        s,
    };
    if eps == 3 {
        // L_{3,0}: the bare triangle, only meaningful without pendants.
        if k != 0 || s != 1 || !matches!(variant, HVariant::H1 | HVariant::H2) {
            return Err(out_of_range(
                "eps = 3 admits only k = 0, s = 1 (the triangle)",
            ));
        }
        let mut b = Builder::spine(3);
        b.edges = vec![(0, 1), (1, 2), (2, 0)];
        return b.finish(spec);
    }
    if eps < 3 {
        return Err(out_of_range(format!("eps must be >= 3, got {eps}")));
    }
    if k + 2 > eps {
        return Err(out_of_range(format!(
            "need k <= eps - 2, got k={k} eps={eps}"
        )));
    }
    if s == 0 {
        return Err(out_of_range(
            "v_{eps-1} carries at least the pendant v_eps (s >= 1)",
        ));
    }
    match variant {
        HVariant::H3 if s < 2 || k < 1 => {
            return Err(out_of_range(
                "H3 needs s >= 2 pendants at v_{eps-1} and k >= 1",
            ))
        }
        HVariant::H4 if k < 1 => return Err(out_of_range("H4 needs k >= 1")),
        HVariant::H5 if k < 2 => return Err(out_of_range("H5 needs k >= 2")),
        _ => {}
    }
    let h2_supports: Vec<usize> = (eps - 1 - k..=eps - 2).collect();
    let supports = if variant == HVariant::H1 {
        match a {
            Some(a) => {
                if a.len() != k {
                    return Err(out_of_range(format!(
                        "H1 needs {k} support indices, got {}",
                        a.len()
                    )));
                }
                if a.windows(2).any(|w| w[0] >= w[1]) || a.iter().any(|&x| x == 0 || x > eps - 2) {
                    return Err(out_of_range(format!(
                        "supports must satisfy 1 <= a_1 < ... < a_k <= eps - 2, got {a:?}"
                    )));
                }
                a.to_vec()
            }
            None if k == 0 => Vec::new(),
            None => return Err(out_of_range("H1 with k >= 1 needs explicit supports a")),
        }
    } else {
        h2_supports.clone()
    };
    let mut b = Builder::lollipop(3, eps - 3);
    let mut tau = BTreeMap::new();
    for &v in &supports {
        tau.insert(v, b.pendant(v));
    }
    let mut omegas = Vec::new();
    for _ in 1..s {
        omegas.push(b.pendant(eps - 1));
    }
    match variant {
        HVariant::H1 | HVariant::H2 => {}
        HVariant::H3 => {
            b.move_pendant(tau[&(eps - 1 - k)], eps - 1);
            for w in omegas {
                b.move_pendant(w, eps);
            }
        }
        HVariant::H4 => b.move_pendant(tau[&(eps - 1 - k)], eps - 1),
        HVariant::H5 => {
            b.move_pendant(tau[&(eps - 1 - k)], eps - 1);
            b.move_pendant(tau[&(eps - k)], eps - 1);
        }
    }
    // keep the pendant roles in sync with where the edges now hang
    let moved = b.edges.clone();
    for (i, role) in b.roles.iter_mut().enumerate() {
        if let VertexRole::Pendant { support, .. } = role {
            let (x, y) = *moved.iter().find(|(x, y)| *x == i || *y == i).unwrap();
            let other = if x == i { y } else { x };
            *support = other + 1;
        }
    }
    let mut fg = b.finish(spec)?;
    if variant != HVariant::H3 {
        fg.f_class = Some(f_class_of(&fg.graph, 3, eps - 3, &fg.roles));
    }
    Ok(fg)
}

/// `eps = n - alpha + 1` and `k = alpha - 1` of the underlying `H2`, or why
/// the pair is not realizable.
pub fn script_h_parameters(n: usize, alpha: usize) -> Result<(usize, usize), FamilyError> {
    if alpha == 0 {
        return if n == 3 {
            Ok((3, 0))
        } else {
            Err(FamilyError::Unrealizable(format!(
                "alpha = 0 forces n = 3, got n={n}"
            )))
        };
    }
    if alpha > n {
        return Err(FamilyError::Unrealizable(format!(
            "alpha={alpha} exceeds n={n}"
        )));
    }
    let eps = n - alpha + 1;
    if eps < 4 {
        return Err(FamilyError::Unrealizable(format!(
            "n={n} alpha={alpha} gives eps={eps}, below the smallest lollipop L_{{3,1}}"
        )));
    }
    let k = alpha - 1;
    if k + 2 > eps {
        return Err(FamilyError::Unrealizable(format!(
            "n={n} alpha={alpha}: {k} supports do not fit on v_1..v_{}",
            eps - 2
        )));
    }
    Ok((eps, k))
}

pub fn script_h(n: usize, alpha: usize) -> Result<FamilyGraph, FamilyError> {
    let (eps, k) = script_h_parameters(n, alpha)?;
    let mut fg = if alpha == 0 {
        cycle(3)?
    } else {
        h_family(HVariant::H2, eps, k, None, 1)?
    };
    fg.spec = FamilySpec::ScriptH { n, alpha };
    Ok(fg)
}

pub fn sunlike_star(g: usize, k: usize) -> Result<FamilyGraph, FamilyError> {
    if g < 3 || k > g {
        return Err(out_of_range(format!(
            "sunlike needs g >= 3 and 0 <= k <= g, got g={g} k={k}"
        )));
    }
    let mut b = Builder::spine(g);
    b.edges = (0..g).map(|i| (i, (i + 1) % g)).collect();
    for v in 1..=k {
        b.pendant(v);
    }
    b.finish(FamilySpec::Sunlike { g, k })
}

pub fn corona_k1(base: &FamilySpec) -> Result<FamilyGraph, FamilyError> {
    let inner = build(base)?;
    let graph = inner.graph.corona(&Graph::empty(1)?)?;
    let mut roles = inner.roles;
    roles.extend((0..inner.graph.order()).map(|b| VertexRole::CoronaCopy { base: b }));
    Ok(FamilyGraph {
        spec: FamilySpec::Corona {
            base: Box::new(base.clone()),
        },
        graph,
        roles,
        f_class: None,
    })
}

pub fn build(spec: &FamilySpec) -> Result<FamilyGraph, FamilyError> {
    match spec {
        FamilySpec::Path { n } => path(*n),
        FamilySpec::Cycle { n } => cycle(*n),
        FamilySpec::Complete { n } => complete(*n),
        FamilySpec::Lollipop { g, l } => lollipop(*g, *l),
        FamilySpec::C3Star { n, k } => c3_star(*n, *k),
        FamilySpec::FGraph { g, l, attachments } => f_graph(*g, *l, attachments),
        FamilySpec::H {
            variant,
            eps,
            k,
            a,
            s,
        } => h_family(*variant, *eps, *k, a.as_deref(), *s),
        FamilySpec::ScriptH { n, alpha } => script_h(*n, *alpha),
        FamilySpec::Sunlike { g, k } => sunlike_star(*g, *k),
        FamilySpec::Corona { base } => corona_k1(base),
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<FamilyGraph, FamilyError> {
        build(self)
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "path n={n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle n={n}"),
            FamilySpec::Complete { n } => write!(f, "complete n={n}"),
            FamilySpec::Lollipop { g, l } => write!(f, "lollipop g={g} l={l}"),
            FamilySpec::C3Star { n, k } => write!(f, "c3star n={n} k={k}"),
            FamilySpec::FGraph { g, l, attachments } => {
                write!(f, "fgraph g={g} l={l}")?;
                if !attachments.is_empty() {
                    let parts: Vec<String> = attachments
                        .iter()
                        .map(|(v, c)| format!("{v}:{c}"))
                        .collect();
                    write!(f, " attach={}", parts.join(","))?;
                }
                Ok(())
            }
            FamilySpec::H {
                variant,
                eps,
                k,
                a,
                s,
            } => {
                write!(f, "{variant} eps={eps} k={k}")?;
                if let Some(a) = a {
                    if !a.is_empty() {
                        write!(f, " a={}", join(a))?;
                    }
                }
                write!(f, " s={s}")
            }
            FamilySpec::ScriptH { n, alpha } => write!(f, "scriptH n={n} alpha={alpha}"),
            FamilySpec::Sunlike { g, k } => write!(f, "sunlike g={g} k={k}"),
            FamilySpec::Corona { base } => write!(f, "corona {base}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Self, FamilyError> {
        let err = |m: &str| FamilyError::Parse(text.to_string(), m.to_string());
        let mut words = text.split_whitespace();
        let head = words.next().ok_or_else(|| err("empty spec"))?;
        if head.eq_ignore_ascii_case("corona") {
            let rest: Vec<&str> = words.collect();
            let base: FamilySpec = rest.join(" ").parse()?;
            return Ok(FamilySpec::Corona {
                base: Box::new(base),
            });
        }
        let mut params: BTreeMap<&str, &str> = BTreeMap::new();
        for w in words {
            let (key, value) = w
                .split_once('=')
                .ok_or_else(|| err(&format!("expected key=value, got `{w}`")))?;
            if params.insert(key, value).is_some() {
                return Err(err(&format!("duplicate key `{key}`")));
            }
        }
        let take = |params: &mut BTreeMap<&str, &str>, key: &str| -> Result<usize, FamilyError> {
            let v = params
                .remove(key)
                .ok_or_else(|| err(&format!("missing `{key}`")))?;
            v.parse()
                .map_err(|_| err(&format!("`{key}` must be a nonnegative integer, got `{v}`")))
        };
        let spec = match head.to_ascii_lowercase().as_str() {
            "path" => FamilySpec::Path {
                n: take(&mut params, "n")?,
            },
            "cycle" => FamilySpec::Cycle {
                n: take(&mut params, "n")?,
            },
            "complete" => FamilySpec::Complete {
                n: take(&mut params, "n")?,
            },
            "lollipop" => FamilySpec::Lollipop {
                g: take(&mut params, "g")?,
                l: take(&mut params, "l")?,
            },
            "c3star" => FamilySpec::C3Star {
                n: take(&mut params, "n")?,
                k: take(&mut params, "k")?,
            },
            "scripth" => FamilySpec::ScriptH {
                n: take(&mut params, "n")?,
                alpha: take(&mut params, "alpha")?,
            },
            "sunlike" => FamilySpec::Sunlike {
                g: take(&mut params, "g")?,
                k: take(&mut params, "k")?,
            },
            "fgraph" => {
                let (g, l) = (take(&mut params, "g")?, take(&mut params, "l")?);
                let mut attachments = BTreeMap::new();
                if let Some(list) = params.remove("attach") {
                    for item in list.split(',').filter(|s| !s.is_empty()) {
                        let (v, c) = item.split_once(':').ok_or_else(|| {
                            err(&format!("attachment `{item}` is not vertex:count"))
                        })?;
                        let v: usize = v.parse().map_err(|_| err(&format!("bad vertex `{v}`")))?;
                        let c: usize = c.parse().map_err(|_| err(&format!("bad count `{c}`")))?;
                        *attachments.entry(v).or_insert(0) += c;
                    }
                }
                FamilySpec::FGraph { g, l, attachments }
            }
            "h1" | "h2" | "h3" | "h4" | "h5" => {
                let variant = match &head[1..] {
                    "1" => HVariant::H1,
                    "2" => HVariant::H2,
                    "3" => HVariant::H3,
                    "4" => HVariant::H4,
                    _ => HVariant::H5,
                };
                let eps = take(&mut params, "eps")?;
                let k = take(&mut params, "k")?;
                let s = if params.contains_key("s") {
                    take(&mut params, "s")?
                } else {
                    1
                };
                let a = match params.remove("a") {
                    Some(list) => Some(
                        list.split(',')
                            .filter(|s| !s.is_empty())
                            .map(|x| x.parse().map_err(|_| err(&format!("bad index `{x}`"))))
                            .collect::<Result<Vec<usize>, _>>()?,
                    ),
                    None => None,
                };
                FamilySpec::H {
                    variant,
                    eps,
                    k,
                    a,
                    s,
                }
            }
            other => return Err(err(&format!("unknown family `{other}`"))),
        };
        if let Some(key) = params.keys().next() {
            return Err(err(&format!("unexpected key `{key}`")));
        }
        Ok(spec)
    }
}

/// A way of reading a unicyclic graph as an `F_{g,l}`-graph: `spine[i]` is
/// the vertex playing `v_{i+1}` for `i < g + l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FLabelling {
    pub g: usize,
    pub l: usize,
    pub spine: Vec<usize>,
}

impl FLabelling {
    /// Vertex playing `v_i` (1-based).
    pub fn v(&self, i: usize) -> usize {
        self.spine[i - 1]
    }

    pub fn cycle(&self) -> &[usize] {
        &self.spine[..self.g]
    }

    pub fn classify(&self, graph: &Graph) -> FClass {
        let tail_support = self.v(self.g + self.l - 1);
        let supports = graph.p_dominators();
        let script_f = supports
            .iter()
            .filter(|&v| v != tail_support)
            .all(|v| graph.pendant_count(v) == 1);
        FClass {
            script_f,
            script_f_circle: script_f && supports.contains(self.v(self.g)),
        }
    }
}

/// All labellings under which `graph` is an `F_{g,l}`-graph (lollipop plus
/// pendants on non-pendant lollipop vertices). Empty when it is not one.
pub fn f_labellings(graph: &Graph) -> Vec<FLabelling> {
    if !graph.is_unicyclic() {
        return Vec::new();
    }
    let cycle = cycle_order(graph);
    let g = cycle.len();
    let on_cycle: VertexSet = cycle.iter().copied().collect();
    let pendants = graph.pendant_vertices();
    // (cycle position, tail after v_g) candidates
    let mut roots: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut deep = Vec::new();
    for (pos, &c) in cycle.iter().enumerate() {
        let off = graph.neighbors(c).difference(on_cycle);
        if !off.difference(pendants).is_empty() {
            deep.push(pos);
        }
    }
    match deep.len() {
        0 => {
            for (pos, &c) in cycle.iter().enumerate() {
                if let Some(p) = graph.neighbors(c).intersection(pendants).first() {
                    roots.push((pos, vec![p]));
                }
            }
        }
        1 => {
            let pos = deep[0];
            let mut tail = Vec::new();
            let (mut prev, mut cur) = (usize::MAX, cycle[pos]);
            loop {
                let children =
                    graph
                        .neighbors(cur)
                        .difference(on_cycle)
                        .difference(if prev == usize::MAX {
                            VertexSet::empty()
                        } else {
                            VertexSet::singleton(prev)
                        });
                let inner = children.difference(pendants);
                match inner.len() {
                    0 => {
                        // cur is v_{g+l-1}; any of its leaves is v_{g+l}
                        tail.push(children.first().expect("non-leaf tail vertex has a leaf"));
                        break;
                    }
                    1 => {
                        let next = inner.first().unwrap();
                        tail.push(next);
                        prev = cur;
                        cur = next;
                    }
                    _ => return Vec::new(),
                }
            }
            roots.push((pos, tail));
        }
        _ => return Vec::new(),
    }
    let mut out = Vec::new();
    for (pos, tail) in roots {
        for dir in [1isize, -1] {
            let mut spine: Vec<usize> = (1..=g)
                .map(|i| {
                    let p = (pos as isize + dir * i as isize).rem_euclid(g as isize) as usize;
                    cycle[p]
                })
                .collect();
            spine.extend(&tail);
            out.push(FLabelling {
                g,
                l: tail.len(),
                spine,
            });
        }
    }
    out
}

/// Vertices of the unique cycle of a unicyclic graph, in cyclic order.
pub fn cycle_order(graph: &Graph) -> Vec<usize> {
    let mut alive = graph.vertices();
    let mut deg = graph.degrees();
    let mut stack: Vec<usize> = alive.iter().filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive.contains(v) {
            continue;
        }
        alive.remove(v);
        for w in graph.neighbors(v).intersection(alive) {
            deg[w] -= 1;
            if deg[w] == 1 {
                stack.push(w);
            }
        }
    }
    let Some(start) = alive.first() else {
        return Vec::new();
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = graph
            .neighbors(cur)
            .intersection(alive)
            .iter()
            .find(|&w| w != prev && w != start || (w == start && order.len() > 2 && w != prev));
        match next {
            Some(w) if w == start => break,
            Some(w) => {
                order.push(w);
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    order
}
