//! The hamiltonian index `h(G)`, the hamiltonian path index `h_p(G)`, and
//! upper bounds on `h_p(G)`.
//!
//! Level 0 is decided on `G` directly and level 1 through dominating trails.
//! From level 2 on, `L^k(G)` is traceable (hamiltonian) exactly when `G` has
//! an `EUP_k` (`EU_k`) subgraph, so no line graph is ever built. Membership in
//! `EUP_1` does not characterize traceability of `L(G)`, which is why level 1
//! goes through trails.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::eup::{find_witness, Variant};
use crate::graph::{EdgeId, MultiGraph, Subgraph, Trail, VertexId};
use crate::hamilton::{hamiltonian_cycle, hamiltonian_path};
use crate::linegraph::iterated_line_graph;
use crate::search::{Exhausted, Search, SearchOptions};
use crate::structure::{
    branches, find_dominating_trail, max_trail, pendent_cycles, Branch, MaxTrail,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    /// `h_p`: traceability.
    Path,
    /// `h`: hamiltonicity.
    Cycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DirectOracle,
    DominatingTrail,
    #[serde(rename = "EUP-witness")]
    EupWitness,
    #[serde(rename = "EU-witness")]
    EuWitness,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::DirectOracle => "direct-oracle",
            Method::DominatingTrail => "dominating-trail",
            Method::EupWitness => "EUP-witness",
            Method::EuWitness => "EU-witness",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum IndexWitness {
    /// Hamiltonian path or cycle of `G` as a vertex sequence.
    Vertices(Vec<VertexId>),
    Trail(Trail),
    Subgraph(Subgraph),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexResult {
    pub kind: IndexKind,
    pub value: usize,
    pub method: Method,
    pub witness: IndexWitness,
    pub cross_check: Option<CrossCheck>,
}

fn unknown<T>(s: Search<T>) -> Result<Option<T>> {
    s.into_option().map_err(Error::Budget)
}

/// `h_p(G)`: the least `n` with `L^n(G)` traceable.
pub fn hamiltonian_path_index(g: &MultiGraph, opts: &SearchOptions) -> Result<IndexResult> {
    g.require_connected()?;
    let result = |value, method, witness| IndexResult {
        kind: IndexKind::Path,
        value,
        method,
        witness,
        cross_check: None,
    };
    if let Some(p) = unknown(hamiltonian_path(g, opts))? {
        return Ok(result(0, Method::DirectOracle, IndexWitness::Vertices(p)));
    }
    if g.size() >= 3 {
        if let Some(t) = unknown(find_dominating_trail(g, false, opts)?)? {
            return Ok(result(1, Method::DominatingTrail, IndexWitness::Trail(t)));
        }
    }
    let limit = bound_cor2(g)?.max(2);
    for k in 2..=limit {
        if let Some(h) = unknown(find_witness(g, k, Variant::Eup, opts)?)? {
            return Ok(result(k, Method::EupWitness, IndexWitness::Subgraph(h)));
        }
    }
    Err(Error::Inconsistent(format!(
        "no EUP witness up to the diameter bound {limit}"
    )))
}

/// `h(G)`: the least `n` with `L^n(G)` hamiltonian. Undefined for paths.
pub fn hamiltonian_index(g: &MultiGraph, opts: &SearchOptions) -> Result<IndexResult> {
    g.require_connected()?;
    if g.is_path() {
        return Err(Error::PathHasNoIndex);
    }
    let result = |value, method, witness| IndexResult {
        kind: IndexKind::Cycle,
        value,
        method,
        witness,
        cross_check: None,
    };
    if let Some(c) = unknown(hamiltonian_cycle(g, opts))? {
        return Ok(result(0, Method::DirectOracle, IndexWitness::Vertices(c)));
    }
    if g.size() >= 3 {
        if let Some(t) = unknown(find_dominating_trail(g, true, opts)?)? {
            return Ok(result(1, Method::DominatingTrail, IndexWitness::Trail(t)));
        }
    }
    let limit = hamiltonian_index_limit(g)?;
    for k in 2..=limit {
        if let Some(h) = unknown(find_witness(g, k, Variant::Eu, opts)?)? {
            return Ok(result(k, Method::EuWitness, IndexWitness::Subgraph(h)));
        }
    }
    Err(Error::Inconsistent(format!("no EU witness up to {limit}")))
}

/// A level at which `V_{≥3}(G)` alone, as isolated vertices, is an `EU_k`
/// subgraph: every pair is within `k − 1` and every branch is short enough.
fn hamiltonian_index_limit(g: &MultiGraph) -> Result<usize> {
    let longest = branches(g).iter().map(|b| b.len()).max().unwrap_or(0);
    Ok(2.max(g.diameter()? + 1).max(longest))
}

/// Ingredients of the bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundStats {
    pub n: usize,
    pub mt_star: usize,
    pub d3_star: usize,
    pub diam: usize,
    /// `Δ′(G)`: the largest number of distinct neighbors of a vertex.
    pub delta_prime: usize,
    pub d3_doublestar: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub thm_b1: usize,
    pub cor1: usize,
    pub cor2: usize,
    pub thm_b2: usize,
    pub stats: BoundStats,
}

impl BoundsReport {
    pub fn values(&self) -> [(&'static str, usize); 4] {
        [
            ("thm_b1", self.thm_b1),
            ("cor1", self.cor1),
            ("cor2", self.cor2),
            ("thm_b2", self.thm_b2),
        ]
    }

    pub fn min(&self) -> usize {
        self.values()
            .iter()
            .map(|&(_, v)| v)
            .min()
            .expect("four bounds")
    }
}

fn b1_from(g: &MultiGraph, mt: &MaxTrail) -> usize {
    g.order() + 2 - mt.mt_star - mt.d3_star
}

fn cor1_from(g: &MultiGraph, mt: &MaxTrail) -> usize {
    1.max(g.order() - mt.mt_star)
}

/// `n − mt*(G) − d*_{≥3}(G) + 2`.
pub fn bound_thm_b1(g: &MultiGraph, opts: &SearchOptions) -> Result<usize> {
    Ok(b1_from(g, &max_trail(g, opts)?))
}

/// `max{1, n − mt*(G)}`.
pub fn bound_cor1(g: &MultiGraph, opts: &SearchOptions) -> Result<usize> {
    Ok(cor1_from(g, &max_trail(g, opts)?))
}

/// `max{1, n − diam(G) − 1}`.
pub fn bound_cor2(g: &MultiGraph) -> Result<usize> {
    let d = g.diameter()?;
    Ok(1.max(g.order().saturating_sub(d + 1)))
}

/// `d**_{≥3}(G)`: over vertices with `Δ′(G)` distinct neighbors, the most
/// vertices of degree at least 3 outside the neighborhood.
pub fn d3_doublestar(g: &MultiGraph) -> usize {
    let high: BTreeSet<VertexId> = g.vertices().filter(|&v| g.deg(v) >= 3).collect();
    let dp = g.max_distinct_degree();
    g.vertices()
        .filter_map(|v| {
            let nb = g.distinct_neighbors(v).expect("vertex in range");
            (nb.len() == dp).then(|| high.difference(&nb).count())
        })
        .max()
        .unwrap_or(0)
}

/// `⌊(n − Δ′(G) − d**_{≥3}(G)) / 3⌋ + 3`.
pub fn bound_thm_b2(g: &MultiGraph) -> Result<usize> {
    g.require_connected()?;
    Ok(thm_b2_from(
        g.order(),
        g.max_distinct_degree(),
        d3_doublestar(g),
    ))
}

fn thm_b2_from(n: usize, delta_prime: usize, dss: usize) -> usize {
    n.saturating_sub(delta_prime + dss) / 3 + 3
}

/// All four bounds from one maximum trail.
pub fn bounds(g: &MultiGraph, opts: &SearchOptions) -> Result<BoundsReport> {
    g.require_connected()?;
    let mt = max_trail(g, opts)?;
    let stats = BoundStats {
        n: g.order(),
        mt_star: mt.mt_star,
        d3_star: mt.d3_star,
        diam: g.diameter()?,
        delta_prime: g.max_distinct_degree(),
        d3_doublestar: d3_doublestar(g),
    };
    Ok(BoundsReport {
        thm_b1: b1_from(g, &mt),
        cor1: cor1_from(g, &mt),
        cor2: bound_cor2(g)?,
        thm_b2: thm_b2_from(stats.n, stats.delta_prime, stats.d3_doublestar),
        stats,
    })
}

/// The `EUP` subgraph behind the first bound: a maximum trail plus every
/// vertex of degree at least 3, at `k = n − mt* − d*_{≥3} + 2` (at least 2).
pub fn thm_b1_witness(g: &MultiGraph, opts: &SearchOptions) -> Result<(usize, Subgraph)> {
    let mt = max_trail(g, opts)?;
    let k = b1_from(g, &mt);
    let mut h = Subgraph::canonical(g, mt.trail.edges.iter().copied());
    if h.is_empty() {
        h.isolated.insert(mt.trail.vertices[0]);
    }
    Ok((k, h))
}

/// The `EUP` subgraph behind the second bound, or `None` when
/// `Δ′(G) ≤ 2` (then `G` is traceable).
///
/// Takes the two branches with the most vertices of degree 1 or 2 (longer
/// first on ties), joins them by a shortest trail avoiding their edges, and
/// adds every pendent cycle and every vertex of degree at least 3.
pub fn thm_b2_witness(g: &MultiGraph) -> Result<Option<(usize, Subgraph)>> {
    let k = bound_thm_b2(g)?;
    if g.max_distinct_degree() <= 2 {
        return Ok(None);
    }
    let mut bs = branches(g);
    let weight = |b: &Branch| {
        let low = b
            .vertices
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .filter(|&&v| g.deg(v) <= 2)
            .count();
        (low, b.len())
    };
    bs.sort_by_key(|b| std::cmp::Reverse(weight(b)));
    if bs.len() < 2 {
        return Err(Error::Inconsistent(
            "a vertex with three neighbors but fewer than two branches".into(),
        ));
    }
    let (b1, b2) = (&bs[0], &bs[1]);
    let blocked: BTreeSet<EdgeId> = b1.edges.iter().chain(&b2.edges).copied().collect();
    let (e1, e2) = (b1.ends(), b2.ends());
    let mut best: Option<Vec<EdgeId>> = None;
    for a in [e1.0, e1.1] {
        let tree = bfs_tree(g, a, &blocked);
        for z in [e2.0, e2.1] {
            if let Some(p) = path_to(&tree, z) {
                if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                    best = Some(p);
                }
            }
        }
    }
    let link = best.ok_or_else(|| Error::Inconsistent("branches cannot be joined".into()))?;
    let mut edges: BTreeSet<EdgeId> = blocked;
    edges.extend(link);
    for c in pendent_cycles(g) {
        edges.extend(c.edges);
    }
    Ok(Some((k, Subgraph::canonical(g, edges))))
}

/// BFS parent edges from `root`, not using `blocked` edges.
fn bfs_tree(
    g: &MultiGraph,
    root: VertexId,
    blocked: &BTreeSet<EdgeId>,
) -> Vec<Option<(VertexId, EdgeId)>> {
    let mut parent = vec![None; g.order()];
    let mut seen = vec![false; g.order()];
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &(u, e) in g.incident(v) {
            if !seen[u] && !blocked.contains(&e) {
                seen[u] = true;
                parent[u] = Some((v, e));
                queue.push_back(u);
            }
        }
    }
    parent[root] = Some((root, usize::MAX));
    parent
}

fn path_to(tree: &[Option<(VertexId, EdgeId)>], target: VertexId) -> Option<Vec<EdgeId>> {
    let mut out = Vec::new();
    let mut cur = target;
    loop {
        let (p, e) = tree[cur]?;
        if e == usize::MAX {
            return Some(out);
        }
        out.push(e);
        cur = p;
    }
}

/// Limits for building iterated line graphs during a cross-check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossCheckCaps {
    /// Largest line graph that will be built.
    pub vertex_cap: usize,
    pub search: SearchOptions,
}

impl Default for CrossCheckCaps {
    fn default() -> Self {
        CrossCheckCaps {
            vertex_cap: 200,
            search: SearchOptions::with_budget(20_000_000),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CrossCheck {
    Confirmed,
    /// A level was too large to build or to decide within the budget.
    CapExceeded {
        level: usize,
        detail: String,
    },
    Mismatch {
        level: usize,
        expected: bool,
        order: usize,
        size: usize,
    },
}

impl CrossCheck {
    pub fn is_mismatch(&self) -> bool {
        matches!(self, CrossCheck::Mismatch { .. })
    }
}

fn level_graph(g: &MultiGraph, level: usize, cap: usize) -> Result<MultiGraph> {
    if level == 0 {
        Ok(g.clone())
    } else {
        iterated_line_graph(g, level, cap)
    }
}

fn level_property(g: &MultiGraph, kind: IndexKind, opts: &SearchOptions) -> Search<()> {
    match kind {
        IndexKind::Path => hamiltonian_path(g, opts).map(|_| ()),
        IndexKind::Cycle => hamiltonian_cycle(g, opts).map(|_| ()),
    }
}

fn capped(level: usize, detail: impl fmt::Display) -> CrossCheck {
    CrossCheck::CapExceeded {
        level,
        detail: detail.to_string(),
    }
}

/// Confirms a claimed index by building `L^{v−1}(G)` and `L^v(G)` and
/// deciding them directly.
pub fn direct_index_cross_check(
    g: &MultiGraph,
    claimed: &IndexResult,
    caps: &CrossCheckCaps,
) -> CrossCheck {
    let v = claimed.value;
    let levels: Vec<(usize, bool)> = match v {
        0 => vec![(0, true)],
        _ => vec![(v - 1, false), (v, true)],
    };
    for (level, expected) in levels {
        let lg = match level_graph(g, level, caps.vertex_cap) {
            Ok(lg) => lg,
            Err(e) => return capped(level, e),
        };
        let got = match level_property(&lg, claimed.kind, &caps.search) {
            Search::Found(()) => true,
            Search::Absent => false,
            Search::Unknown(e) => return capped(level, e),
        };
        if got != expected {
            return CrossCheck::Mismatch {
                level,
                expected,
                order: lg.order(),
                size: lg.size(),
            };
        }
    }
    CrossCheck::Confirmed
}

impl IndexResult {
    pub fn with_cross_check(mut self, g: &MultiGraph, caps: &CrossCheckCaps) -> Self {
        self.cross_check = Some(direct_index_cross_check(g, &self, caps));
        self
    }
}

/// Budget exhaustion surfaced as a value rather than an error.
pub fn exhausted_of(e: &Error) -> Option<&Exhausted> {
    match e {
        Error::Budget(x) => Some(x),
        _ => None,
    }
}
