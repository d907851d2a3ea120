//! Certification runs: each suite scans every graph in a bounded domain,
//! records the least `q_min` and the classes attaining it, and compares them
//! with the named family graphs. Batteries check standard facts over whole
//! enumerations and count pass, fail and skip outcomes.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::canon::{canonical_form, CanonicalForm};
use crate::domination::{
    constrained_gamma, corona_characterization, gamma, gamma_formula, is_dominating_set,
    minimal_dominating_set_avoiding_pendants,
};
use crate::enumerate::{
    connected_map, spanning_unicyclic_witness, unicyclic_nonbipartite, GraphFilter,
};
use crate::error::{SpectralError, VerifyError};
use crate::families::{
    c3_star, f_graph, f_labellings, h_family, lollipop, script_h, script_h_parameters,
    sunlike_star, FamilyGraph, FamilySpec, HVariant,
};
use crate::graph::{Graph, VertexSet};
use crate::graph6;
use crate::spectral::structure::branches_at;
use crate::spectral::{
    check_interlacing_with, check_relocation_lemma, eigen, find_odd_cycle_coalescence, q_matrix,
    q_min_with, rayleigh, validate_f3_max_at_v3, validate_odd_cycle_symmetry,
    validate_tree_monotone, validate_unicyclic_signs, validate_zero_branch, Tolerances, Verdict,
    VertexVector,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// No graph satisfies the suite's preconditions.
    EmptyDomain,
    /// Passed on a restricted domain that bounds the full one.
    Reduced,
}

impl Status {
    pub fn passed(self) -> bool {
        self != Status::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::EmptyDomain => "empty-domain",
            Status::Reduced => "reduced",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Domain {
    pub description: String,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArgminEntry {
    pub graph6: String,
    /// graph6 of the canonical form.
    pub canonical: String,
    pub family_match: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub candidate: String,
    pub q: f64,
    /// `q - q*`.
    pub delta: f64,
    pub in_domain: bool,
    pub matches_argmin: bool,
}

/// Tally of one battery.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub examined: usize,
    pub passed: usize,
    pub failed: usize,
    /// Not checked because `q_min` is not simple.
    pub skipped: usize,
    /// The statement's hypothesis does not apply to the instance.
    pub not_applicable: usize,
    /// First few failure descriptions.
    pub failures: Vec<String>,
}

const MAX_RECORDED_FAILURES: usize = 10;

/// Result of checking one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped,
    NotApplicable,
}

impl Outcome {
    fn from_bool(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(msg())
        }
    }
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn record(&mut self, outcome: Outcome) {
        self.examined += 1;
        match outcome {
            Outcome::Pass => self.passed += 1,
            Outcome::Fail(msg) => {
                self.failed += 1;
                if self.failures.len() < MAX_RECORDED_FAILURES {
                    self.failures.push(msg);
                }
            }
            Outcome::Skipped => self.skipped += 1,
            Outcome::NotApplicable => self.not_applicable += 1,
        }
    }

    pub fn extend(&mut self, outcomes: impl IntoIterator<Item = Outcome>) {
        for o in outcomes {
            self.record(o);
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    pub domain: Domain,
    /// Tie tolerance used for the argmin.
    pub tolerance: f64,
    pub qstar: Option<f64>,
    pub argmin: Vec<ArgminEntry>,
    pub unique: bool,
    pub comparisons: Vec<Comparison>,
    pub runtime_ms: u64,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<SearchReport>,
}

impl SearchReport {
    fn empty(suite: &str, params: BTreeMap<String, Value>, description: String) -> Self {
        SearchReport {
            suite: suite.into(),
            params,
            domain: Domain {
                description,
                count: 0,
            },
            tolerance: 0.0,
            qstar: None,
            argmin: Vec::new(),
            unique: false,
            comparisons: Vec::new(),
            runtime_ms: 0,
            status: Status::EmptyDomain,
            notes: Vec::new(),
            checks: Vec::new(),
            parts: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status.passed()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Copy with every real number rounded to `digits` significant digits.
    pub fn rounded(&self, digits: usize) -> SearchReport {
        let r = |x: f64| round_significant(x, digits);
        let mut out = self.clone();
        out.tolerance = r(out.tolerance);
        out.qstar = out.qstar.map(r);
        for c in &mut out.comparisons {
            c.q = r(c.q);
            c.delta = r(c.delta);
        }
        out.parts = out.parts.iter().map(|p| p.rounded(digits)).collect();
        out
    }

    /// Copy with `runtime_ms` zeroed throughout.
    pub fn without_timing(&self) -> SearchReport {
        let mut out = self.clone();
        out.runtime_ms = 0;
        out.parts = out.parts.iter().map(SearchReport::without_timing).collect();
        out
    }

    pub const CSV_HEADER: &'static str =
        "suite,params,domain_count,qstar,unique,argmin_graph6,family_match,status,runtime_ms";

    pub fn csv_row(&self) -> String {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let argmin = self
            .argmin
            .iter()
            .map(|a| a.canonical.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        let matched = self
            .argmin
            .iter()
            .filter_map(|a| a.family_match.as_deref())
            .collect::<Vec<_>>()
            .join(" ");
        let qstar = self
            .qstar
            .map(|q| format_significant(q, 12))
            .unwrap_or_default();
        [
            csv_field(&self.suite),
            csv_field(&params),
            self.domain.count.to_string(),
            qstar,
            self.unique.to_string(),
            csv_field(&argmin),
            csv_field(&matched),
            self.status.as_str().to_string(),
            self.runtime_ms.to_string(),
        ]
        .join(",")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn round_significant(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

/// `x` in plain or exponent notation with `digits` significant digits.
pub fn format_significant(x: f64, digits: usize) -> String {
    let y = round_significant(x, digits);
    format!("{y}")
}

/// Settings shared by all suites.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub tolerances: Tolerances,
    /// Two classes tie when `|q_a - q_b| <= max(tie_floor, tie_floor * q*)`.
    pub tie_floor: f64,
    /// Seed for the randomized batteries.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            tolerances: Tolerances::default(),
            tie_floor: 1e-9,
            seed: 0x5eed,
        }
    }
}

impl VerifyConfig {
    pub fn tie_tolerance(&self, qstar: f64) -> f64 {
        self.tie_floor.max(self.tie_floor * qstar)
    }
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

// ---------------------------------------------------------------------------
// scanning

/// One graph that passed a domain filter.
#[derive(Clone, Debug)]
pub struct Scanned {
    pub q: f64,
    pub gamma: usize,
    pub graph: Graph,
}

/// Where a scan draws its graphs from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomainSource {
    /// All connected graphs of the order.
    Connected(usize),
    /// The nonbipartite unicyclic graphs of the order.
    Unicyclic { n: usize, girth: Option<usize> },
}

/// `q_min` and `γ` of every graph from `source` that passes `filter`, in
/// enumeration order.
pub fn scan_domain(
    source: &DomainSource,
    filter: &GraphFilter,
    tol: &Tolerances,
) -> Result<Vec<Scanned>, VerifyError> {
    let f = |g: &Graph| -> Option<Result<Scanned, SpectralError>> {
        if !filter.matches_structure(g) {
            return None;
        }
        let gm = gamma(g);
        if !filter.matches_gamma(gm) {
            return None;
        }
        Some(q_min_with(g, tol).map(|r| Scanned {
            q: r.q_min,
            gamma: gm,
            graph: g.clone(),
        }))
    };
    let raw = match source {
        DomainSource::Connected(n) => connected_map(*n, f)?,
        DomainSource::Unicyclic { n, girth } => {
            use rayon::prelude::*;
            let all = unicyclic_nonbipartite(*n, *girth)?;
            all.par_iter().filter_map(f).collect()
        }
    };
    Ok(raw.into_iter().collect::<Result<Vec<_>, _>>()?)
}

/// Least value over a scan and the classes within tie tolerance of it.
#[derive(Clone, Debug)]
pub struct Extremum {
    pub qstar: f64,
    pub tie: f64,
    /// One graph per class, ordered by canonical form.
    pub argmin: Vec<(CanonicalForm, Graph)>,
    pub unique: bool,
}

pub fn extremum(entries: &[Scanned], cfg: &VerifyConfig) -> Result<Option<Extremum>, VerifyError> {
    let Some(qstar) = entries.iter().map(|e| e.q).reduce(f64::min) else {
        return Ok(None);
    };
    let tie = cfg.tie_tolerance(qstar);
    let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for e in entries.iter().filter(|e| e.q <= qstar + tie) {
        classes
            .entry(canonical_form(&e.graph)?)
            .or_insert_with(|| e.graph.clone());
    }
    let unique = classes.len() == 1;
    Ok(Some(Extremum {
        qstar,
        tie,
        argmin: classes.into_iter().collect(),
        unique,
    }))
}

struct Candidate {
    spec: FamilySpec,
    form: CanonicalForm,
    q: f64,
}

fn candidate(fg: &FamilyGraph, tol: &Tolerances) -> Result<Candidate, VerifyError> {
    Ok(Candidate {
        spec: fg.spec.clone(),
        form: canonical_form(&fg.graph)?,
        q: q_min_with(&fg.graph, tol)?.q_min,
    })
}

/// Whether the class of `c` occurs among the scanned graphs.
fn in_domain(c: &Candidate, entries: &[Scanned]) -> Result<bool, VerifyError> {
    let close = 1e-8 * (1.0 + c.q.abs());
    for e in entries.iter().filter(|e| (e.q - c.q).abs() <= close) {
        if canonical_form(&e.graph)? == c.form {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Report for a scan compared against named candidates. Passes when the
/// argmin is a single class equal to a candidate found in the domain.
fn extremal_report(
    suite: &str,
    params: BTreeMap<String, Value>,
    description: String,
    entries: &[Scanned],
    candidates: &[FamilyGraph],
    cfg: &VerifyConfig,
) -> Result<SearchReport, VerifyError> {
    let mut report = SearchReport::empty(suite, params, description);
    report.domain.count = entries.len();
    let Some(ext) = extremum(entries, cfg)? else {
        report
            .notes
            .push("no graph satisfies the domain filter".into());
        return Ok(report);
    };
    let cands = candidates
        .iter()
        .map(|c| candidate(c, &cfg.tolerances))
        .collect::<Result<Vec<_>, _>>()?;
    report.tolerance = ext.tie;
    report.qstar = Some(ext.qstar);
    report.unique = ext.unique;
    report.argmin = ext
        .argmin
        .iter()
        .map(|(form, g)| ArgminEntry {
            graph6: graph6::encode(g),
            canonical: form.to_graph6(),
            family_match: cands
                .iter()
                .find(|c| &c.form == form)
                .map(|c| c.spec.to_string()),
        })
        .collect();
    let mut matched = false;
    for c in &cands {
        let member = in_domain(c, entries)?;
        let hit = ext.argmin.iter().any(|(f, _)| *f == c.form);
        if !member {
            report
                .notes
                .push(format!("{} is not in the scanned domain", c.spec));
        }
        matched |= member && hit;
        report.comparisons.push(Comparison {
            candidate: c.spec.to_string(),
            q: c.q,
            delta: c.q - ext.qstar,
            in_domain: member,
            matches_argmin: hit,
        });
    }
    let named: Vec<String> = report
        .argmin
        .iter()
        .filter_map(|a| a.family_match.clone())
        .collect();
    if named.is_empty() {
        report
            .notes
            .push("argmin matches no named candidate".into());
    } else {
        report
            .notes
            .push(format!("argmin matches {}", named.join(", ")));
    }
    if !ext.unique {
        report
            .notes
            .push(format!("{} classes tie at the minimum", ext.argmin.len()));
    }
    report.status = if ext.unique && matched {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(report)
}

/// Plain search: least `q_min` over the graphs passing `filter`. Unicyclic
/// nonbipartite filters use the dedicated unicyclic stream.
pub fn search_report(
    filter: &GraphFilter,
    cfg: &VerifyConfig,
) -> Result<SearchReport, VerifyError> {
    let start = Instant::now();
    let n = filter.n;
    let mut p = params(&[("n", json!(n))]);
    for (key, on) in [
        ("nonbipartite", filter.nonbipartite),
        ("unicyclic", filter.unicyclic),
    ] {
        if on {
            p.insert(key.into(), json!(true));
        }
    }
    if let Some(g) = filter.gamma {
        p.insert("gamma".into(), json!(g));
    }
    if let Some((lo, hi)) = filter.gamma_range {
        p.insert("gamma_range".into(), json!([lo, hi]));
    }
    if let Some(g) = filter.girth {
        p.insert("girth".into(), json!(g));
    }
    if let Some(b) = filter.max_odd_girth {
        p.insert("max_odd_girth".into(), json!(b));
    }
    let description = format!("connected graphs of order {n} matching the filter");
    if let Some(why) = filter.unsatisfiable() {
        let mut report = SearchReport::empty("search", p, description);
        report.notes.push(format!("filter is unsatisfiable: {why}"));
        report.runtime_ms = elapsed_ms(start);
        return Ok(report);
    }
    let source = if filter.unicyclic && filter.nonbipartite {
        DomainSource::Unicyclic {
            n,
            girth: filter.girth,
        }
    } else {
        DomainSource::Connected(n)
    };
    let entries = scan_domain(&source, filter, &cfg.tolerances)?;
    let mut report = extremal_report("search", p, description, &entries, &[], cfg)?;
    report.notes.retain(|n| !n.starts_with("argmin matches"));
    if report.status == Status::Fail {
        report.status = Status::Pass;
    }
    report.runtime_ms = elapsed_ms(start);
    Ok(report)
}

// ---------------------------------------------------------------------------
// extremal suites

fn odd_in(n: usize, lo: usize, hi: usize, what: &str) -> Result<(), VerifyError> {
    if n % 2 == 0 || n < lo || n > hi {
        return Err(VerifyError::Bounds(format!(
            "{what} needs odd n in {lo}..={hi}, got {n}"
        )));
    }
    Ok(())
}

pub fn suite_theorem_1_1(n: usize) -> Result<SearchReport, VerifyError> {
    suite_theorem_1_1_with(n, &VerifyConfig::default())
}

/// Connected nonbipartite graphs with `γ = (n-1)/2`, compared against
/// `scriptH(n, (n-3)/2)` and, when realizable, `scriptH(n, (n-1)/2)`.
pub fn suite_theorem_1_1_with(n: usize, cfg: &VerifyConfig) -> Result<SearchReport, VerifyError> {
    odd_in(n, 5, 9, "theorem-1.1")?;
    let start = Instant::now();
    let target = (n - 1) / 2;
    let filter = GraphFilter::new(n).nonbipartite().with_gamma(target);
    let entries = scan_domain(&DomainSource::Connected(n), &filter, &cfg.tolerances)?;
    let mut cands = vec![script_h(n, (n - 3) / 2)?];
    let mut notes = Vec::new();
    match script_h(n, (n - 1) / 2) {
        Ok(h) => cands.push(h),
        Err(e) => notes.push(format!(
            "scriptH n={n} alpha={} unrealizable: {e}",
            (n - 1) / 2
        )),
    }
    let mut report = extremal_report(
        "theorem-1.1",
        params(&[("n", json!(n)), ("gamma", json!(target))]),
        format!("connected nonbipartite graphs of order {n} with domination number {target}"),
        &entries,
        &cands,
        cfg,
    )?;
    report.notes.extend(notes);
    report.runtime_ms = elapsed_ms(start);
    Ok(report)
}

/// Least `alpha <= (n-3)/2` with `ceil((n - 2 alpha - 2)/3) + alpha = gamma`.
pub fn script_h_alpha(n: usize, gamma: usize) -> Option<usize> {
    (1..=(n.saturating_sub(3)) / 2).find(|&a| (n - 2 * a - 2).div_ceil(3) + a == gamma)
}

/// Whether `(n+1)/3 < gamma <= (n-2)/2`.
pub fn gamma_in_open_range(n: usize, gamma: usize) -> bool {
    3 * gamma > n + 1 && 2 * gamma + 2 <= n
}

/// Smallest order `n >= 5` for which `gamma` lies in the range.
pub fn smallest_order_for(gamma: usize) -> Option<usize> {
    let n = (2 * gamma + 2).max(5);
    gamma_in_open_range(n, gamma).then_some(n)
}

pub fn suite_theorem_1_2(n: usize, gamma: f64) -> Result<SearchReport, VerifyError> {
    suite_theorem_1_2_with(n, gamma, &VerifyConfig::default())
}

/// Nonbipartite graphs of odd girth at most 5 with the given `γ`, compared
/// against `scriptH(n, alpha)`. General connected graphs for `n <= 9`;
/// unicyclic graphs for `10 <= n <= 13`, reported as `reduced`.
pub fn suite_theorem_1_2_with(
    n: usize,
    gamma_value: f64,
    cfg: &VerifyConfig,
) -> Result<SearchReport, VerifyError> {
    if !(5..=13).contains(&n) {
        return Err(VerifyError::Bounds(format!(
            "theorem-1.2 needs n in 5..=13, got {n}"
        )));
    }
    let start = Instant::now();
    let shown = if gamma_value.fract() == 0.0 && gamma_value >= 0.0 {
        json!(gamma_value as usize)
    } else {
        json!(gamma_value)
    };
    let p = params(&[("n", json!(n)), ("gamma", shown)]);
    let base = format!(
        "nonbipartite graphs of order {n}, odd girth at most 5, domination number {gamma_value}"
    );
    let integral = gamma_value.fract() == 0.0 && gamma_value >= 1.0;
    let g = gamma_value as usize;
    if !integral || !gamma_in_open_range(n, g) {
        let mut report = SearchReport::empty("theorem-1.2", p, base);
        if integral {
            report.notes.push(format!(
                "domination number {g} is outside ((n+1)/3, (n-2)/2] for n = {n}; the domain is empty"
            ));
            match smallest_order_for(g) {
                Some(m) => report.notes.push(format!(
                    "smallest order admitting domination number {g}: {m}"
                )),
                None => report
                    .notes
                    .push(format!("no order admits domination number {g}")),
            }
        } else {
            report.notes.push(format!(
                "domination number {gamma_value} is not an integer; the domain is empty"
            ));
        }
        report.runtime_ms = elapsed_ms(start);
        return Ok(report);
    }
    let filter = GraphFilter::new(n)
        .nonbipartite()
        .with_max_odd_girth(5)
        .with_gamma(g);
    let reduced = n >= 10;
    let (source, description) = if reduced {
        (
            DomainSource::Unicyclic { n, girth: None },
            format!("unicyclic {base}"),
        )
    } else {
        (DomainSource::Connected(n), format!("connected {base}"))
    };
    let entries = scan_domain(&source, &filter, &cfg.tolerances)?;
    let alpha = script_h_alpha(n, g);
    let cands = match alpha {
        Some(a) => vec![script_h(n, a)?],
        None => Vec::new(),
    };
    let mut p = p;
    p.insert("alpha".into(), json!(alpha));
    let mut report = extremal_report("theorem-1.2", p, description, &entries, &cands, cfg)?;
    if alpha.is_none() {
        report
            .notes
            .push(format!("no alpha <= (n-3)/2 reaches domination number {g}"));
        if report.status == Status::Pass {
            report.status = Status::Fail;
        }
    }
    if reduced {
        report.notes.push(
            "restricted to unicyclic graphs: every graph in the full domain has a spanning \
             nonbipartite unicyclic subgraph with the same odd girth and domination number, and \
             deleting edges never raises the least Q-eigenvalue, so the unicyclic minimum is the \
             full minimum; uniqueness over the full domain is not certified"
                .into(),
        );
        if report.status == Status::Pass {
            report.status = Status::Reduced;
        }
    }
    report.runtime_ms = elapsed_ms(start);
    Ok(report)
}

pub fn suite_theorem_4_4_and_4_7(n: usize) -> Result<SearchReport, VerifyError> {
    suite_theorem_4_4_and_4_7_with(n, &VerifyConfig::default())
}

/// Nonbipartite unicyclic graphs with `γ = (n-1)/2`, and separately those of
/// girth 3, compared against `scriptH(n, (n-3)/2)`.
pub fn suite_theorem_4_4_and_4_7_with(
    n: usize,
    cfg: &VerifyConfig,
) -> Result<SearchReport, VerifyError> {
    odd_in(n, 5, 13, "theorem-4.4-4.7")?;
    let start = Instant::now();
    let target = (n - 1) / 2;
    let filter = GraphFilter::new(n).with_gamma(target);
    let entries = scan_domain(
        &DomainSource::Unicyclic { n, girth: None },
        &filter,
        &cfg.tolerances,
    )?;
    let cands = vec![script_h(n, (n - 3) / 2)?];
    let p = params(&[("n", json!(n)), ("gamma", json!(target))]);
    let mut report = extremal_report(
        "theorem-4.4-4.7",
        p.clone(),
        format!("nonbipartite unicyclic graphs of order {n} with domination number {target}"),
        &entries,
        &cands,
        cfg,
    )?;
    let girth3: Vec<Scanned> = entries
        .iter()
        .filter(|e| e.graph.girth() == Some(3))
        .cloned()
        .collect();
    let mut part = extremal_report(
        "theorem-4.4-4.7/girth-3",
        p,
        format!("nonbipartite unicyclic graphs of order {n}, girth 3, domination number {target}"),
        &girth3,
        &cands,
        cfg,
    )?;
    part.runtime_ms = elapsed_ms(start);
    if !part.passed() || part.status == Status::EmptyDomain {
        report.status = Status::Fail;
    }
    report.parts.push(part);
    report.runtime_ms = elapsed_ms(start);
    Ok(report)
}

/// The `C*_{3,k}` graph expected to minimize `q_min` at order `n` and
/// domination number `gamma <= (n+1)/3`.
pub fn c3_star_expected(n: usize, gamma: usize) -> Result<FamilyGraph, VerifyError> {
    let k = if n <= 3 * gamma + 1 {
        n - 4
    } else {
        3 * gamma - 3
    };
    Ok(c3_star(n, k)?)
}

pub fn suite_lemma_2_11(n: usize) -> Result<SearchReport, VerifyError> {
    suite_lemma_2_11_with(n, &VerifyConfig::default())
}

/// Connected nonbipartite graphs with `γ <= (n+1)/3`, one part per `γ`,
/// each compared with `C*_{3,n-4}` when `n <= 3γ+1` and `C*_{3,3γ-3}` otherwise.
pub fn suite_lemma_2_11_with(n: usize, cfg: &VerifyConfig) -> Result<SearchReport, VerifyError> {
    if !(4..=9).contains(&n) {
        return Err(VerifyError::Bounds(format!(
            "lemma-2.11 needs n in 4..=9, got {n}"
        )));
    }
    let start = Instant::now();
    let cap = (n + 1) / 3;
    let filter = GraphFilter::new(n).nonbipartite().with_gamma_range(1, cap);
    let entries = scan_domain(&DomainSource::Connected(n), &filter, &cfg.tolerances)?;
    let mut by_gamma: BTreeMap<usize, Vec<Scanned>> = BTreeMap::new();
    for e in &entries {
        by_gamma.entry(e.gamma).or_default().push(e.clone());
    }
    let mut parts = Vec::new();
    let mut cands = Vec::new();
    for (&g, group) in &by_gamma {
        let expected = c3_star_expected(n, g)?;
        let part = extremal_report(
            "lemma-2.11/gamma",
            params(&[("n", json!(n)), ("gamma", json!(g))]),
            format!("connected nonbipartite graphs of order {n} with domination number {g}"),
            group,
            std::slice::from_ref(&expected),
            cfg,
        )?;
        cands.push(expected);
        parts.push(part);
    }
    let mut report = extremal_report(
        "lemma-2.11",
        params(&[("n", json!(n)), ("gamma_max", json!(cap))]),
        format!("connected nonbipartite graphs of order {n} with domination number at most {cap}"),
        &entries,
        &cands,
        cfg,
    )?;
    report.status = if parts.is_empty() {
        Status::EmptyDomain
    } else if parts.iter().all(|p| p.status == Status::Pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    report.parts = parts;
    report.runtime_ms = elapsed_ms(start);
    Ok(report)
}

// ---------------------------------------------------------------------------
// F-graph structure

/// Largest order of the generated `F_{g,l}` instances.
pub const F_GRAPH_MAX_ORDER: usize = 12;

/// Every `F_{g,l}`-graph with odd `g >= 5` and at most `max_n` vertices in
/// the restricted class: one pendant on each chosen support among
/// `v_1 .. v_{g+l-2}`, any number of extra pendants on `v_{g+l-1}`.
pub fn restricted_f_graphs(max_n: usize) -> Result<Vec<FamilyGraph>, VerifyError> {
    let mut out = Vec::new();
    for g in (5..=max_n).step_by(2) {
        for l in 1..=max_n.saturating_sub(g) {
            let spare = max_n - g - l;
            let positions: Vec<usize> = (1..=g + l - 2).collect();
            for mask in 0u32..1 << positions.len() {
                let chosen = mask.count_ones() as usize;
                if chosen > spare {
                    continue;
                }
                for extra in 0..=spare - chosen {
                    let mut attach = BTreeMap::new();
                    for (i, &v) in positions.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            attach.insert(v, 1);
                        }
                    }
                    if extra > 0 {
                        attach.insert(g + l - 1, extra);
                    }
                    out.push(f_graph(g, l, &attach)?);
                }
            }
        }
    }
    Ok(out)
}

/// Clause checks for one instance with `γ = (n-1)/2`.
fn f_structure_outcomes(fg: &FamilyGraph) -> [Outcome; 3] {
    let (g, l) = match fg.spec {
        FamilySpec::FGraph { g, l, .. } => (g, l),
        _ => unreachable!("generated from f_graph"),
    };
    let graph = &fg.graph;
    let doms = graph.p_dominators();
    let free: Vec<usize> = (1..=g).filter(|&i| !doms.contains(fg.v(i))).collect();
    let f = free.len();
    let tag = || format!("{} (f = {f}, free {:?})", fg.spec, free);
    let first = if f == g {
        Outcome::from_bool(g == 5, || format!("{}: f = g with g = {g}", tag()))
    } else {
        Outcome::NotApplicable
    };
    let second = if f != g {
        Outcome::from_bool(f <= 3 && f != 2, || format!("{}: f = {f}", tag()))
    } else {
        Outcome::NotApplicable
    };
    let third = if f == 3 && f != g {
        let prev = |i: usize| if i == 1 { g } else { i - 1 };
        let consecutive = (1..g).any(|i| {
            let mut t = vec![prev(i), i, i + 1];
            t.sort_unstable();
            t == free
        });
        let tail_ok = (g + 1..g + l).all(|i| doms.contains(fg.v(i)));
        Outcome::from_bool(consecutive && tail_ok, || {
            format!(
                "{}: consecutive = {consecutive}, tail supports = {tail_ok}",
                tag()
            )
        })
    } else {
        Outcome::NotApplicable
    };
    [first, second, third]
}

pub fn suite_theorem_3_2() -> Result<SearchReport, VerifyError> {
    suite_theorem_3_2_with(&VerifyConfig::default())
}

/// Structure of nonbipartite `F_{g,l}`-graphs with `g >= 5` and
/// `γ = (n-1)/2`: at most three cycle vertices lack pendants (all of them
/// only when `g = 5`), never exactly two, and three are consecutive with
/// every other spine vertex a support.
pub fn suite_theorem_3_2_with(cfg: &VerifyConfig) -> Result<SearchReport, VerifyError> {
    use rayon::prelude::*;
    let start = Instant::now();
    let _ = cfg;
    let all = restricted_f_graphs(F_GRAPH_MAX_ORDER)?;
    let hits: Vec<[Outcome; 3]> = all
        .par_iter()
        .filter(|fg| {
            let n = fg.graph.order();
            n % 2 == 1 && gamma(&fg.graph) == (n - 1) / 2
        })
        .map(f_structure_outcomes)
        .collect();
    let mut checks = [
        Check::new("f = g forces g = 5"),
        Check::new("f != g forces f <= 3 and f != 2"),
        Check::new("f = 3: consecutive, remaining spine vertices are supports"),
    ];
    for row in &hits {
        for (c, o) in checks.iter_mut().zip(row.iter().cloned()) {
            c.record(o);
        }
    }
    let mut report = SearchReport::empty(
        "theorem-3.2",
        params(&[("max_n", json!(F_GRAPH_MAX_ORDER)), ("min_girth", json!(5))]),
        format!(
            "F-graphs with odd girth >= 5, order <= {F_GRAPH_MAX_ORDER}, domination number (n-1)/2 \
             (from {} generated instances)",
            all.len()
        ),
    );
    report.domain.count = hits.len();
    report.status = if hits.is_empty() {
        Status::EmptyDomain
    } else if checks.iter().all(Check::ok) {
        Status::Pass
    } else {
        Status::Fail
    };
    report.checks = checks.to_vec();
    report.runtime_ms = elapsed_ms(start);
    Ok(report)
}

// ---------------------------------------------------------------------------
// batteries over enumerations

/// Runs `f` on every connected graph of each order in `orders`.
fn over_connected<F>(
    name: &str,
    orders: std::ops::RangeInclusive<usize>,
    f: F,
) -> Result<Check, VerifyError>
where
    F: Fn(&Graph) -> Vec<Outcome> + Sync,
{
    let mut check = Check::new(name);
    for n in orders {
        for outcomes in connected_map(n, |g| Some(f(g)))? {
            check.extend(outcomes);
        }
    }
    Ok(check)
}

fn g6(g: &Graph) -> String {
    graph6::encode(g)
}

/// `q_min <= 1e-9` exactly when the graph is bipartite.
pub fn battery_bipartite_zero_law(max_n: usize, tol: &Tolerances) -> Result<Check, VerifyError> {
    over_connected("zero least eigenvalue iff bipartite", 1..=max_n, |g| {
        vec![match q_min_with(g, tol) {
            Ok(r) => Outcome::from_bool((r.q_min <= 1e-9) == g.is_bipartite(), || {
                format!(
                    "{}: q_min = {:e}, bipartite = {}",
                    g6(g),
                    r.q_min,
                    g.is_bipartite()
                )
            }),
            Err(e) => Outcome::Fail(format!("{}: {e}", g6(g))),
        }]
    })
}

/// Eigenvalues are at least `-1e-10` and sum to the degree sum.
pub fn battery_spectrum_sanity(max_n: usize) -> Result<Check, VerifyError> {
    over_connected(
        "nonnegative spectrum with trace equal to degree sum",
        1..=max_n,
        |g| {
            vec![match eigen::symmetric_eigen(&q_matrix(g)) {
                Ok(e) => {
                    let trace: f64 = e.values.iter().sum();
                    let degs = 2.0 * g.size() as f64;
                    Outcome::from_bool(
                        e.values[0] >= -1e-10 && (trace - degs).abs() <= 1e-8,
                        || {
                            format!(
                                "{}: least {:e}, trace {trace} vs {degs}",
                                g6(g),
                                e.values[0]
                            )
                        },
                    )
                }
                Err(e) => Outcome::Fail(format!("{}: {e}", g6(g))),
            }]
        },
    )
}

/// `x^T Q x >= q_min - 1e-10` for random unit vectors.
pub fn battery_rayleigh(max_n: usize, per_graph: usize, seed: u64) -> Result<Check, VerifyError> {
    over_connected("Rayleigh quotient bounded below by q_min", 1..=max_n, |g| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ g.rows().iter().fold(0, |a, r| a * 31 + r));
        let q = match q_min_with(g, &Tolerances::default()) {
            Ok(r) => r.q_min,
            Err(e) => return vec![Outcome::Fail(format!("{}: {e}", g6(g)))],
        };
        (0..per_graph)
            .map(|_| {
                let raw: Vec<f64> = (0..g.order()).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let x = VertexVector::new(raw);
                if x.norm() == 0.0 {
                    return Outcome::NotApplicable;
                }
                let x = x.normalized();
                let r = rayleigh(g, &x).expect("dimensions agree");
                Outcome::from_bool(r >= q - 1e-10, || format!("{}: {r} < {q}", g6(g)))
            })
            .collect()
    })
}

/// Spectra of `G` and `G - e` interleave, for every edge.
pub fn battery_interlacing(max_n: usize, tol: f64) -> Result<Check, VerifyError> {
    over_connected("edge-deletion interlacing", 2..=max_n, |g| {
        g.edges()
            .map(|e| match check_interlacing_with(g, e, tol) {
                Ok(ok) => Outcome::from_bool(ok, || format!("{} minus {}-{}", g6(g), e.0, e.1)),
                Err(err) => Outcome::Fail(format!("{}: {err}", g6(g))),
            })
            .collect()
    })
}

pub fn battery_qmin_below_mindeg(max_n: usize, tol: &Tolerances) -> Result<Check, VerifyError> {
    over_connected("q_min below minimum degree", 2..=max_n, |g| {
        vec![match q_min_with(g, tol) {
            Ok(r) => Outcome::from_bool(g.min_degree() as f64 - r.q_min > tol.strict, || {
                format!("{}: q_min {} vs delta {}", g6(g), r.q_min, g.min_degree())
            }),
            Err(e) => Outcome::Fail(format!("{}: {e}", g6(g))),
        }]
    })
}

/// Every connected nonbipartite graph has a spanning nonbipartite unicyclic
/// subgraph with the same odd girth and domination number.
pub fn battery_spanning_unicyclic(max_n: usize) -> Result<Check, VerifyError> {
    over_connected("spanning unicyclic witness", 3..=max_n, |g| {
        if g.is_bipartite() {
            return vec![Outcome::NotApplicable];
        }
        vec![match spanning_unicyclic_witness(g) {
            Ok(w) => {
                let ok = w.is_spanning_subgraph_of(g)
                    && w.is_unicyclic()
                    && !w.is_bipartite()
                    && w.odd_girth() == g.odd_girth()
                    && gamma(&w) == gamma(g);
                Outcome::from_bool(ok, || format!("{}: bad witness {}", g6(g), g6(&w)))
            }
            Err(e) => Outcome::Fail(format!("{}: {e}", g6(g))),
        }]
    })
}

/// `γ = n/2` exactly for `C_4` and coronas `H ∘ K_1`.
pub fn battery_corona(max_n: usize) -> Result<Check, VerifyError> {
    over_connected("half-order domination iff C4 or corona", 2..=max_n, |g| {
        let half = 2 * gamma(g) == g.order();
        vec![Outcome::from_bool(
            half == corona_characterization(g),
            || format!("{}: gamma = n/2 is {half}", g6(g)),
        )]
    })
}

/// `γ <= n/2` without isolated vertices.
pub fn battery_ore_bound(max_n: usize) -> Result<Check, VerifyError> {
    over_connected("domination number at most n/2", 2..=max_n, |g| {
        vec![Outcome::from_bool(2 * gamma(g) <= g.order(), || g6(g))]
    })
}

/// Exhaustive subset minimum, independent of the solver.
fn brute_force_gamma(g: &Graph) -> usize {
    let n = g.order();
    (1..=n)
        .find(|&k| subsets_of_size(n, k).any(|s| is_dominating_set(g, VertexSet::from_bits(s))))
        .unwrap_or(n)
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut cur = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        if cur == 0 {
            done = true;
        } else {
            // next subset with the same popcount
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
        }
        Some(out)
    })
}

pub fn battery_solver_brute_force(max_n: usize) -> Result<Check, VerifyError> {
    over_connected("solver equals subset minimum", 1..=max_n, |g| {
        let (a, b) = (gamma(g), brute_force_gamma(g));
        vec![Outcome::from_bool(a == b, || {
            format!("{}: solver {a}, subsets {b}", g6(g))
        })]
    })
}

/// Graphs with pendants have a minimum dominating set made of supports and
/// no pendants; a support with two or more pendants is in every minimum
/// dominating set and none of its pendants is.
pub fn battery_pendant_dominating_sets(max_n: usize) -> Result<[Check; 2], VerifyError> {
    let mut first = Check::new("minimum dominating set with all supports and no pendants");
    let mut second = Check::new("multi-pendant supports forced in, their pendants forced out");
    for n in 2..=max_n {
        let rows = connected_map(n, |g| {
            let pendants = g.pendant_vertices();
            if pendants.is_empty() {
                return Some((Outcome::NotApplicable, Outcome::NotApplicable));
            }
            let a = Outcome::from_bool(
                minimal_dominating_set_avoiding_pendants(g).is_some(),
                || g6(g),
            );
            let multi: Vec<usize> = g
                .p_dominators()
                .iter()
                .filter(|&v| g.pendant_count(v) >= 2)
                .collect();
            if multi.is_empty() {
                return Some((a, Outcome::NotApplicable));
            }
            let gm = gamma(g);
            let raises = |inc: VertexSet, exc: VertexSet| match constrained_gamma(g, inc, exc) {
                Ok(v) => v > gm,
                Err(_) => true,
            };
            let mut ok = true;
            for &v in &multi {
                ok &= raises(VertexSet::empty(), VertexSet::singleton(v));
                for p in g.neighbors(v).intersection(pendants) {
                    ok &= raises(VertexSet::singleton(p), VertexSet::empty());
                }
            }
            Some((a, Outcome::from_bool(ok, || g6(g))))
        })?;
        for (a, b) in rows {
            first.record(a);
            second.record(b);
        }
    }
    Ok([first, second])
}

fn formula_outcome(fg: &FamilyGraph) -> Outcome {
    let solved = gamma(&fg.graph);
    match gamma_formula(&fg.spec) {
        Ok(f) => Outcome::from_bool(f == solved, || {
            format!("{}: solver {solved}, formula {f}", fg.spec)
        }),
        Err(e) => Outcome::Fail(format!("{}: {e}", fg.spec)),
    }
}

/// Solver against the closed forms: paths and cycles up to 30, sunlike
/// graphs up to girth 13 (all `0 <= k <= g`), realizable `scriptH` up to
/// order 20, `H2` up to `eps = 14`.
pub fn battery_domination_formulas() -> Result<Vec<Check>, VerifyError> {
    let mut paths = Check::new("paths and cycles: ceil(n/3)");
    for n in 1..=30 {
        paths.record(formula_outcome(&crate::families::path(n)?));
        if n >= 3 {
            paths.record(formula_outcome(&crate::families::cycle(n)?));
        }
    }
    let mut sun = Check::new("sunlike: k + ceil((g-k-2)/3)");
    for g in 3..=13 {
        for k in 0..=g {
            sun.record(formula_outcome(&sunlike_star(g, k)?));
        }
    }
    let mut sh = Check::new("scriptH closed form");
    for n in 3..=20 {
        for alpha in 0..=n {
            if script_h_parameters(n, alpha).is_ok() {
                sh.record(formula_outcome(&script_h(n, alpha)?));
            }
        }
    }
    let mut h2 = Check::new("H2 closed form");
    for eps in 3..=14 {
        for k in 0..=eps - 2 {
            if let Ok(h) = h_family(HVariant::H2, eps, k, None, 1) {
                h2.record(formula_outcome(&h));
            }
        }
    }
    Ok(vec![paths, sun, sh, h2])
}

/// `γ(G) <= k + ceil((g-k-2)/3)` on random sunlike graphs, `k` counting the
/// supports on the cycle. Pendants go on random cycle vertices; `v_g` always
/// carries the tail pendant.
pub fn battery_sunlike_bound(count: usize, seed: u64) -> Result<Check, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut check = Check::new("sunlike upper bound");
    for _ in 0..count {
        let g = rng.gen_range(3..=11);
        let mut attach = BTreeMap::new();
        for v in 1..g {
            if rng.gen_bool(0.5) {
                attach.insert(v, rng.gen_range(1..=2));
            }
        }
        attach.insert(g, rng.gen_range(0..=1));
        let graph = f_graph(g, 1, &attach)?.graph;
        let k = graph.p_dominators().len() as i64;
        let bound = (k + (g as i64 - k - 2 + 2).div_euclid(3)) as usize;
        let gm = gamma(&graph);
        check.record(Outcome::from_bool(gm <= bound, || {
            format!("{}: gamma {gm} > bound {bound}", g6(&graph))
        }));
    }
    Ok(check)
}

/// `γ(H1) <= γ(H2) <= γ(H3)` and the `H4`/`H5` closed forms, for `eps <= max_eps`.
pub fn battery_h_relations(max_eps: usize) -> Result<Vec<Check>, VerifyError> {
    let mut h1 = Check::new("gamma(H1) <= gamma(H2)");
    let mut h3 = Check::new("gamma(H2) <= gamma(H3)");
    let mut h45 = Check::new("H4 and H5 closed forms");
    for eps in 4..=max_eps {
        for k in 0..=eps - 2 {
            let h2 = gamma(&h_family(HVariant::H2, eps, k, None, 1)?.graph);
            for mask in 0u32..1 << (eps - 2) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let a: Vec<usize> = (1..=eps - 2).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let g1 = gamma(&h_family(HVariant::H1, eps, k, Some(&a), 1)?.graph);
                h1.record(Outcome::from_bool(g1 <= h2, || {
                    format!("eps={eps} k={k} a={a:?}: {g1} > {h2}")
                }));
            }
            if k >= 1 {
                for s in 2..=3 {
                    let h2s = gamma(&h_family(HVariant::H2, eps, k, None, s)?.graph);
                    let g3 = gamma(&h_family(HVariant::H3, eps, k, None, s)?.graph);
                    h3.record(Outcome::from_bool(h2s <= g3, || {
                        format!("eps={eps} k={k} s={s}: {h2s} > {g3}")
                    }));
                }
                h45.record(formula_outcome(&h_family(HVariant::H4, eps, k, None, 1)?));
            }
            let integral = eps >= k + 4 && (eps - k - 4) % 3 == 0;
            if k >= 2 && integral {
                h45.record(formula_outcome(&h_family(HVariant::H5, eps, k, None, 1)?));
            }
        }
    }
    Ok(vec![h1, h3, h45])
}

// ---------------------------------------------------------------------------
// eigenvector structure

fn verdict(v: Result<Verdict, SpectralError>, g: &Graph, what: &str) -> Outcome {
    match v {
        Ok(Verdict::Holds) => Outcome::Pass,
        Ok(Verdict::Violated(msg)) => Outcome::Fail(format!("{} {what}: {msg}", g6(g))),
        Ok(Verdict::Skipped(_)) => Outcome::Skipped,
        Err(SpectralError::Shape(_)) => Outcome::NotApplicable,
        Err(e) => Outcome::Fail(format!("{} {what}: {e}", g6(g))),
    }
}

/// Names of the per-graph structure checks, in the order they are reported.
pub const STRUCTURE_CHECKS: [&str; 5] = [
    "bipartite branches: zero or sign-alternating",
    "tree branches: magnitudes grow away from the root",
    "odd cycle on a bipartite graph: simple, symmetric, peaked at the root",
    "unicyclic cycle sign pattern",
    "triangle F-graphs: peak at v_3",
];

/// Outcomes of the five structure checks on one graph, using its computed
/// least eigenvector.
pub fn structure_outcomes(g: &Graph, tol: &Tolerances) -> [Vec<Outcome>; 5] {
    let mut out: [Vec<Outcome>; 5] = Default::default();
    let x = match q_min_with(g, tol) {
        Ok(r) => r.eigenvector,
        Err(e) => {
            for o in out.iter_mut() {
                o.push(Outcome::Fail(format!("{}: {e}", g6(g))));
            }
            return out;
        }
    };
    for root in 0..g.order() {
        for branch in branches_at(g, root) {
            let (h, _) = g.induced_subgraph(branch);
            if h.is_bipartite() {
                out[0].push(verdict(
                    validate_zero_branch(g, &x, root, branch, tol),
                    g,
                    "zero branch",
                ));
            }
            if h.is_tree() && h.order() >= 2 && !g.is_bipartite() {
                let v = validate_tree_monotone(g, &x, root, branch, tol);
                // a zero branch is outside the hypothesis, not a multiplicity skip
                out[1].push(match v {
                    Ok(Verdict::Skipped(_)) => Outcome::NotApplicable,
                    other => verdict(other, g, "tree branch"),
                });
            }
        }
    }
    out[2].push(if find_odd_cycle_coalescence(g).is_some() {
        verdict(validate_odd_cycle_symmetry(g, &x, tol), g, "odd cycle")
    } else {
        Outcome::NotApplicable
    });
    out[3].push(if g.is_unicyclic() && !g.is_bipartite() {
        verdict(validate_unicyclic_signs(g, &x, tol), g, "cycle signs")
    } else {
        Outcome::NotApplicable
    });
    let triangle_f = f_labellings(g)
        .iter()
        .any(|lab| lab.g == 3 && lab.classify(g).script_f);
    out[4].push(if triangle_f && !g.is_bipartite() {
        verdict(validate_f3_max_at_v3(g, &x, tol), g, "triangle peak")
    } else {
        Outcome::NotApplicable
    });
    out
}

/// A random nonbipartite unicyclic family member.
pub fn random_family_instance(rng: &mut ChaCha8Rng) -> FamilyGraph {
    loop {
        let odd = |rng: &mut ChaCha8Rng, lo: usize, hi: usize| 2 * rng.gen_range(lo..=hi) + 1;
        let made = match rng.gen_range(0..6) {
            0 => lollipop(odd(rng, 1, 4), rng.gen_range(1..=5)),
            1 => {
                let g = odd(rng, 1, 4);
                let l = rng.gen_range(1..=3);
                let mut attach = BTreeMap::new();
                for v in 1..g + l - 1 {
                    if rng.gen_bool(0.5) {
                        attach.insert(v, 1);
                    }
                }
                attach.insert(g + l - 1, rng.gen_range(0..=2));
                f_graph(g, l, &attach)
            }
            2 => {
                let n = rng.gen_range(5..=16);
                let alpha = rng.gen_range(0..=n / 2);
                script_h(n, alpha)
            }
            3 => {
                let g = odd(rng, 1, 5);
                sunlike_star(g, rng.gen_range(0..=g))
            }
            4 => {
                let n = rng.gen_range(4..=14);
                c3_star(n, rng.gen_range(0..=n - 3))
            }
            _ => {
                let eps = rng.gen_range(4..=12);
                let k = rng.gen_range(0..=eps - 2);
                let variant =
                    [HVariant::H2, HVariant::H3, HVariant::H4, HVariant::H5][rng.gen_range(0..4)];
                h_family(variant, eps, k, None, rng.gen_range(1..=3))
            }
        };
        if let Ok(fg) = made {
            if fg.graph.order() <= 20 && fg.graph.is_unicyclic() && !fg.graph.is_bipartite() {
                return fg;
            }
        }
    }
}

/// Structure checks over every nonbipartite unicyclic graph of order
/// `3..=max_n` plus `random` seeded family instances.
pub fn battery_eigenvector_structure(
    max_n: usize,
    random: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<Vec<Check>, VerifyError> {
    use rayon::prelude::*;
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 3..=max_n {
        graphs.extend(unicyclic_nonbipartite(n, None)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    graphs.extend((0..random).map(|_| random_family_instance(&mut rng).graph));
    let rows: Vec<[Vec<Outcome>; 5]> = graphs
        .par_iter()
        .map(|g| structure_outcomes(g, tol))
        .collect();
    let mut checks: Vec<Check> = STRUCTURE_CHECKS.iter().map(|n| Check::new(*n)).collect();
    for row in rows {
        for (c, outs) in checks.iter_mut().zip(row) {
            c.extend(outs);
        }
    }
    Ok(checks)
}

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, &edges).expect("valid tree")
}

/// Moving a pendant tree to a vertex of larger eigenvector magnitude lowers
/// `q_min`; random nonbipartite hosts and trees.
pub fn battery_relocation(count: usize, seed: u64, tol: &Tolerances) -> Result<Check, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut check = Check::new("tree relocation lowers q_min");
    let mut done = 0;
    while done < count {
        let host = random_family_instance(&mut rng).graph;
        if host.order() > 12 {
            continue;
        }
        let v1 = rng.gen_range(0..host.order());
        let v2 = rng.gen_range(0..host.order());
        if v1 == v2 {
            continue;
        }
        let size = rng.gen_range(2..=4);
        let tree = random_tree(&mut rng, size);
        let u = rng.gen_range(0..tree.order());
        check.record(match check_relocation_lemma(&host, v1, v2, &tree, u, tol) {
            Ok(Verdict::Holds) => Outcome::Pass,
            Ok(Verdict::Skipped(_)) => Outcome::NotApplicable,
            Ok(Verdict::Violated(m)) => {
                Outcome::Fail(format!("{} v1={v1} v2={v2}: {m}", g6(&host)))
            }
            Err(e) => Outcome::Fail(format!("{}: {e}", g6(&host))),
        });
        done += 1;
    }
    Ok(check)
}

pub fn suite_preliminaries() -> Result<SearchReport, VerifyError> {
    suite_preliminaries_with(&VerifyConfig::default())
}

/// All batteries at their default bounds.
pub fn suite_preliminaries_with(cfg: &VerifyConfig) -> Result<SearchReport, VerifyError> {
    let start = Instant::now();
    let tol = &cfg.tolerances;
    let mut checks = vec![
        battery_bipartite_zero_law(8, tol)?,
        battery_spectrum_sanity(8)?,
        battery_rayleigh(6, 100, cfg.seed)?,
        battery_interlacing(7, tol.interlace)?,
        battery_qmin_below_mindeg(8, tol)?,
        battery_spanning_unicyclic(7)?,
        battery_corona(8)?,
        battery_ore_bound(8)?,
        battery_solver_brute_force(7)?,
    ];
    checks.extend(battery_pendant_dominating_sets(8)?);
    checks.extend(battery_domination_formulas()?);
    checks.push(battery_sunlike_bound(200, cfg.seed)?);
    checks.extend(battery_h_relations(12)?);
    checks.extend(battery_eigenvector_structure(9, 200, cfg.seed, tol)?);
    checks.push(battery_relocation(200, cfg.seed, tol)?);
    let mut report = SearchReport::empty(
        "preliminaries",
        params(&[("seed", json!(cfg.seed))]),
        "invariant batteries over enumerated and seeded random graphs".into(),
    );
    report.domain.count = checks.iter().map(|c| c.examined).sum();
    report.status = if checks.iter().all(Check::ok) {
        Status::Pass
    } else {
        Status::Fail
    };
    for c in checks.iter().filter(|c| !c.ok()) {
        report
            .notes
            .push(format!("{}: {} failures", c.name, c.failed));
    }
    let skips: usize = checks.iter().map(|c| c.skipped).sum();
    report.notes.push(format!(
        "{skips} instances skipped because q_min is not simple"
    ));
    report.checks = checks;
    report.runtime_ms = elapsed_ms(start);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_solutions() {
        assert_eq!(script_h_alpha(10, 4), Some(2));
        assert_eq!(script_h_alpha(12, 5), Some(3));
        assert_eq!(script_h_alpha(13, 5), Some(2));
    }

    #[test]
    fn feasible_pairs_up_to_thirteen() {
        let pairs: Vec<(usize, usize)> = (5..=13)
            .flat_map(|n| (1..=n).map(move |g| (n, g)))
            .filter(|&(n, g)| gamma_in_open_range(n, g))
            .collect();
        assert_eq!(pairs, vec![(10, 4), (12, 5), (13, 5)]);
        assert_eq!(smallest_order_for(4), Some(10));
        assert_eq!(smallest_order_for(3), None);
    }

    #[test]
    fn subset_enumeration_counts() {
        assert_eq!(subsets_of_size(6, 3).count(), 20);
        assert_eq!(subsets_of_size(4, 0).count(), 1);
        assert_eq!(subsets_of_size(5, 5).count(), 1);
        assert!(subsets_of_size(5, 2).all(|s| s.count_ones() == 2 && s < 32));
    }

    #[test]
    fn rounding() {
        assert_eq!(
            round_significant(0.381_966_011_250_105_1, 12),
            0.381966011250
        );
        assert_eq!(format_significant(1.0 / 3.0, 3), "0.333");
        assert_eq!(round_significant(0.0, 12), 0.0);
    }

    #[test]
    fn empty_domain_for_half_integer() {
        let r = suite_theorem_1_2(9, 3.5).unwrap();
        assert_eq!(r.status, Status::EmptyDomain);
        assert_eq!(r.domain.count, 0);
        let r = suite_theorem_1_2(9, 4.0).unwrap();
        assert_eq!(r.status, Status::EmptyDomain);
    }

    #[test]
    fn c3_star_case_split() {
        assert_eq!(
            c3_star_expected(7, 2).unwrap().spec,
            FamilySpec::C3Star { n: 7, k: 3 }
        );
        assert_eq!(
            c3_star_expected(4, 1).unwrap().spec,
            FamilySpec::C3Star { n: 4, k: 0 }
        );
        assert_eq!(
            c3_star_expected(8, 3).unwrap().spec,
            FamilySpec::C3Star { n: 8, k: 4 }
        );
    }

    #[test]
    fn small_suites() {
        let r = suite_theorem_1_1(5).unwrap();
        assert!(r.unique, "{}", r.to_json());
        let r = suite_lemma_2_11(4).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.to_json());
        assert_eq!(r.argmin[0].family_match.as_deref(), Some("c3star n=4 k=0"));
    }

    #[test]
    fn report_round_trip() {
        let r = suite_theorem_4_4_and_4_7(5).unwrap();
        let back: SearchReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.csv_row().starts_with("theorem-4.4-4.7,"));
    }
}
