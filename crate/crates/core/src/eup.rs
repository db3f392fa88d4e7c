//! Membership tests and witness search for `EU_k(G)` and `EUP_k(G)`.
//!
//! A subgraph `H` of `G` belongs to `EU_k(G)` when
//!
//! * (I) every vertex of `H` has even degree in `H`,
//! * (II) isolated vertices of `H` have degree at least 3 in `G`, and every
//!   such vertex of `G` lies in `H`,
//! * (III) for every way of splitting the components of `H` into two
//!   nonempty groups, the groups are within distance `k − 1` in `G`,
//! * (IV) every branch of `G` sharing no edge with `H` has length at most
//!   `k + 1`,
//! * (V) every branch of `G` that meets a degree-1 vertex has length at most
//!   `k`.
//!
//! `EUP_k(G)` relaxes (I) to "at most two odd vertices" and (V) to branches
//! sharing no edge with `H`. Subgraphs must be nonempty.
//!
//! Condition (III) is evaluated as connectivity of the auxiliary graph whose
//! nodes are the components of `H`, two components being joined when their
//! distance in `G` is at most `k − 1`. That is equivalent to the bipartition
//! reading above.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Subgraph, VertexId};
use crate::search::{Exhausted, Meter, Search, SearchOptions};
use crate::structure::{branches, Branch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `EU_k`: hamiltonicity of `L^k(G)`.
    Eu,
    /// `EUP_k`: traceability of `L^k(G)`.
    Eup,
}

impl Variant {
    fn odd_limit(self) -> usize {
        match self {
            Variant::Eu => 0,
            Variant::Eup => 2,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Eu => "EU",
            Variant::Eup => "EUP",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "eu" => Ok(Variant::Eu),
            "eup" => Ok(Variant::Eup),
            other => Err(Error::InvalidParameter(format!(
                "unknown variant `{other}`"
            ))),
        }
    }
}

/// Why a condition failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    OddVertices {
        vertices: Vec<VertexId>,
        allowed: usize,
    },
    EmptySubgraph,
    LowDegreeIsolated {
        vertex: VertexId,
        degree: usize,
    },
    MissingHighDegree {
        vertex: VertexId,
    },
    Separated {
        side: Vec<VertexId>,
        rest: Vec<VertexId>,
        /// `None` when the two sides lie in different components of `G`.
        distance: Option<usize>,
        limit: usize,
    },
    LongBranch {
        vertices: Vec<VertexId>,
        length: usize,
        limit: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OddVertices { vertices, allowed } => {
                write!(
                    f,
                    "{} odd vertices {vertices:?}, at most {allowed} allowed",
                    vertices.len()
                )
            }
            Violation::EmptySubgraph => f.write_str("subgraph is empty"),
            Violation::LowDegreeIsolated { vertex, degree } => {
                write!(f, "isolated vertex {vertex} has degree {degree} < 3 in G")
            }
            Violation::MissingHighDegree { vertex } => {
                write!(f, "vertex {vertex} has degree >= 3 in G but is not in H")
            }
            Violation::Separated {
                side,
                rest,
                distance,
                limit,
            } => match distance {
                Some(d) => write!(
                    f,
                    "components {side:?} and {rest:?} are {d} apart, limit {limit}"
                ),
                None => write!(f, "components {side:?} and {rest:?} are disconnected in G"),
            },
            Violation::LongBranch {
                vertices,
                length,
                limit,
            } => {
                write!(f, "branch {vertices:?} has length {length} > {limit}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail(Violation),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    fn from_violation(v: Option<Violation>) -> Self {
        v.map_or(Verdict::Pass, Verdict::Fail)
    }
}

/// Per-condition verdicts for one `(H, k, variant)` query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub variant: Variant,
    pub k: usize,
    /// (I) or (I)′.
    pub parity: Verdict,
    /// (II).
    pub isolated: Verdict,
    /// (III).
    pub spacing: Verdict,
    /// (IV).
    pub branch_length: Verdict,
    /// (V) or (V)′.
    pub pendant_branch: Verdict,
}

impl ConditionReport {
    pub fn passes(&self) -> bool {
        self.verdicts().iter().all(|(_, v)| v.passed())
    }

    pub fn verdicts(&self) -> [(&'static str, &Verdict); 5] {
        let (one, five) = match self.variant {
            Variant::Eu => ("I", "V"),
            Variant::Eup => ("I'", "V'"),
        };
        [
            (one, &self.parity),
            ("II", &self.isolated),
            ("III", &self.spacing),
            ("IV", &self.branch_length),
            (five, &self.pendant_branch),
        ]
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}_{}: {}",
            self.variant,
            self.k,
            if self.passes() { "pass" } else { "fail" }
        )?;
        for (name, v) in self.verdicts() {
            match v {
                Verdict::Pass => writeln!(f, "  ({name}) pass")?,
                Verdict::Fail(why) => writeln!(f, "  ({name}) fail: {why}")?,
            }
        }
        Ok(())
    }
}

fn disjoint_from(b: &Branch, h: &Subgraph) -> bool {
    b.edges.iter().all(|e| !h.edges.contains(e))
}

/// Evaluates every condition for `h` directly from the definitions.
pub fn check_conditions(
    g: &MultiGraph,
    h: &Subgraph,
    k: usize,
    variant: Variant,
) -> Result<ConditionReport> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    h.validate(g)?;

    let odd: Vec<VertexId> = h.odd_vertices(g).into_iter().collect();
    let allowed = variant.odd_limit();
    let parity = Verdict::from_violation((odd.len() > allowed).then_some(Violation::OddVertices {
        vertices: odd,
        allowed,
    }));

    let vh = h.vertices(g);
    let isolated = Verdict::from_violation(if vh.is_empty() {
        Some(Violation::EmptySubgraph)
    } else if let Some(&v) = h.isolated.iter().find(|&&v| g.deg(v) < 3) {
        Some(Violation::LowDegreeIsolated {
            vertex: v,
            degree: g.deg(v),
        })
    } else {
        g.vertices()
            .find(|&v| g.deg(v) >= 3 && !vh.contains(&v))
            .map(|vertex| Violation::MissingHighDegree { vertex })
    });

    let spacing = Verdict::from_violation(spacing_violation(g, h, k));

    let bs = branches(g);
    let branch_length = Verdict::from_violation(
        bs.iter()
            .find(|b| disjoint_from(b, h) && b.len() > k + 1)
            .map(|b| Violation::LongBranch {
                vertices: b.vertices.clone(),
                length: b.len(),
                limit: k + 1,
            }),
    );
    let pendant_branch = Verdict::from_violation(
        bs.iter()
            .filter(|b| b.touches_degree_one)
            .find(|b| (variant == Variant::Eu || disjoint_from(b, h)) && b.len() > k)
            .map(|b| Violation::LongBranch {
                vertices: b.vertices.clone(),
                length: b.len(),
                limit: k,
            }),
    );

    Ok(ConditionReport {
        variant,
        k,
        parity,
        isolated,
        spacing,
        branch_length,
        pendant_branch,
    })
}

/// Component-threshold test for (III).
fn spacing_violation(g: &MultiGraph, h: &Subgraph, k: usize) -> Option<Violation> {
    let comps = h.components(g);
    if comps.len() <= 1 {
        return None;
    }
    let limit = k - 1;
    // dist[i][j] = d_G(C_i, C_j)
    let dist: Vec<Vec<Option<usize>>> = comps
        .iter()
        .map(|c| {
            let d = g.distances_from_set(c.iter().copied());
            comps
                .iter()
                .map(|other| other.iter().filter_map(|&v| d[v]).min())
                .collect()
        })
        .collect();
    let mut reached = vec![false; comps.len()];
    reached[0] = true;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..comps.len() {
            if !reached[j] && dist[i][j].is_some_and(|d| d <= limit) {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    if reached.iter().all(|&r| r) {
        return None;
    }
    let pick = |want: bool| -> Vec<VertexId> {
        comps
            .iter()
            .zip(&reached)
            .filter(|(_, &r)| r == want)
            .flat_map(|(c, _)| c.iter().copied())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    };
    let distance = (0..comps.len())
        .filter(|&i| reached[i])
        .flat_map(|i| {
            (0..comps.len())
                .filter(|&j| !reached[j])
                .map(move |j| (i, j))
        })
        .filter_map(|(i, j)| dist[i][j])
        .min();
    Some(Violation::Separated {
        side: pick(true),
        rest: pick(false),
        distance,
        limit,
    })
}

/// Brute-force (III): every bipartition of the components of `h` must have
/// crossing distance at most `k − 1`. Exponential; for testing only.
pub fn spacing_by_bipartitions(g: &MultiGraph, h: &Subgraph, k: usize) -> bool {
    let comps = h.components(g);
    let c = comps.len();
    if c <= 1 {
        return true;
    }
    assert!(c <= 20, "too many components to enumerate bipartitions");
    (1u32..(1 << c) - 1).all(|mask| {
        let (a, b): (BTreeSet<VertexId>, BTreeSet<VertexId>) = (
            comps
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, s)| s.iter().copied())
                .collect(),
            comps
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 0)
                .flat_map(|(_, s)| s.iter().copied())
                .collect(),
        );
        g.subgraph_distance(&a, &b)
            .ok()
            .flatten()
            .is_some_and(|d| d < k)
    })
}

// ---------------------------------------------------------------------------
// Witness search

/// One way of intersecting `H` with a branch.
#[derive(Clone, Debug)]
struct Pattern {
    edges: Vec<EdgeId>,
    vertices: Vec<VertexId>,
    /// Internal vertices left with degree 1.
    internal_odd: usize,
    /// Edges of the pattern at the first and last end of the branch.
    end_degree: (u32, u32),
    /// True when the optimistic (III) check cannot change by choosing it.
    full: bool,
}

struct Unit {
    ends: Option<(VertexId, VertexId)>,
    patterns: Vec<Pattern>,
}

/// Maximal patterns of a branch given as its edge list and vertex list
/// (`vertices.len() == edges.len() + 1`).
///
/// Partial patterns are reduced to maximal representatives: a longer prefix
/// (or suffix, or interior segment) has the same parity effect and only
/// brings its component closer to everything else, so it dominates the
/// shorter ones for every condition. `cyclic` marks a component that is a
/// bare cycle, whose first vertex is internal too.
fn unit_patterns(
    edges: &[EdgeId],
    vertices: &[VertexId],
    cyclic: bool,
    odd_limit: usize,
) -> Vec<Pattern> {
    let l = edges.len();
    let make = |sel: &[bool]| -> Pattern {
        let chosen: Vec<EdgeId> = (0..l).filter(|&i| sel[i]).map(|i| edges[i]).collect();
        let mut vs: Vec<VertexId> = (0..l)
            .filter(|&i| sel[i])
            .flat_map(|i| [vertices[i], vertices[i + 1]])
            .collect();
        vs.sort_unstable();
        vs.dedup();
        let mut internal_odd = (1..l).filter(|&i| sel[i - 1] != sel[i]).count();
        if cyclic && sel[0] != sel[l - 1] {
            internal_odd += 1;
        }
        let end_degree = if cyclic {
            (0, 0)
        } else {
            (sel[0] as u32, sel[l - 1] as u32)
        };
        Pattern {
            full: chosen.len() == l,
            edges: chosen,
            vertices: vs,
            internal_odd,
            end_degree,
        }
    };
    let mut sels: Vec<Vec<bool>> = vec![vec![true; l], vec![false; l]];
    if odd_limit >= 1 && l >= 2 {
        if cyclic {
            // All but one edge: two odd vertices at the gap.
            if odd_limit >= 2 {
                for gap in 0..l {
                    let mut s = vec![true; l];
                    s[gap] = false;
                    sels.push(s);
                }
            }
        } else {
            let mut prefix = vec![true; l];
            prefix[l - 1] = false;
            let mut suffix = vec![true; l];
            suffix[0] = false;
            sels.push(prefix);
            sels.push(suffix);
            if odd_limit >= 2 {
                if l >= 3 {
                    let mut middle = vec![true; l];
                    middle[0] = false;
                    middle[l - 1] = false;
                    sels.push(middle);
                }
                for gap in 1..l - 1 {
                    let mut s = vec![true; l];
                    s[gap] = false;
                    sels.push(s);
                }
            }
        }
    }
    sels.iter()
        .map(|s| make(s))
        .filter(|p| p.internal_odd <= odd_limit)
        .collect()
}

struct Plan<'g> {
    g: &'g MultiGraph,
    k: usize,
    odd_limit: usize,
    units: Vec<Unit>,
    /// W vertices whose degree in `H` is settled after unit `i`.
    settle: Vec<Vec<VertexId>>,
    high: BitSet,
    /// Vertices of units `i..` (index `units.len()` is empty).
    suffix_vertices: Vec<BitSet>,
    suffix_edges: Vec<BitSet>,
    /// Vertices within distance `k − 1`, used when `k ≥ 2`.
    balls: Vec<BitSet>,
}

impl<'g> Plan<'g> {
    /// `None` when some condition fails for every candidate.
    fn new(g: &'g MultiGraph, k: usize, variant: Variant) -> Option<Self> {
        let odd_limit = variant.odd_limit();
        let bs = branches(g);
        if variant == Variant::Eu && bs.iter().any(|b| b.touches_degree_one && b.len() > k) {
            return None;
        }
        let n = g.order();
        let mut raw: Vec<(Option<(VertexId, VertexId)>, Vec<Pattern>)> = Vec::new();
        for b in &bs {
            let mut pats = unit_patterns(&b.edges, &b.vertices, false, odd_limit);
            let empty_ok = b.len() <= k + 1 && !(b.touches_degree_one && b.len() > k);
            pats.retain(|p| !p.edges.is_empty() || empty_ok);
            raw.push((Some(b.ends()), pats));
        }
        // A graph that is a bare cycle has no branches.
        if bs.is_empty() && g.is_cycle() {
            let mut vertices = vec![0];
            let mut edges = Vec::new();
            let (mut cur, mut via) = (0, usize::MAX);
            for _ in 0..g.size() {
                let &(next, e) = g
                    .incident(cur)
                    .iter()
                    .find(|&&(_, e)| e != via)
                    .expect("cycle");
                edges.push(e);
                vertices.push(next);
                cur = next;
                via = e;
            }
            raw.push((None, unit_patterns(&edges, &vertices, true, odd_limit)));
        }

        // Order units so that W vertices are settled early: rank W vertices by
        // BFS from a maximum-degree vertex and sort units by their later end.
        let rank = {
            let start = g
                .vertices()
                .max_by_key(|&v| (g.deg(v), std::cmp::Reverse(v)))
                .unwrap_or(0);
            let mut order = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::from([start]);
            let mut next = 0;
            if n > 0 {
                order[start] = 0;
            }
            while let Some(v) = queue.pop_front() {
                for &(u, _) in g.incident(v) {
                    if order[u] == usize::MAX {
                        next += 1;
                        order[u] = next;
                        queue.push_back(u);
                    }
                }
            }
            order
        };
        let mut idx: Vec<usize> = (0..raw.len()).collect();
        idx.sort_by_key(|&i| match raw[i].0 {
            Some((a, b)) => (rank[a].max(rank[b]), rank[a].min(rank[b]), i),
            None => (0, 0, i),
        });
        let units: Vec<Unit> = idx
            .into_iter()
            .map(|i| Unit {
                ends: raw[i].0,
                patterns: raw[i].1.clone(),
            })
            .collect();

        let mut last_touch = vec![None; n];
        for (i, u) in units.iter().enumerate() {
            if let Some((a, b)) = u.ends {
                last_touch[a] = Some(i);
                last_touch[b] = Some(i);
            }
        }
        let mut settle = vec![Vec::new(); units.len()];
        for v in 0..n {
            if let Some(i) = last_touch[v] {
                settle[i].push(v);
            }
        }

        let mut high = BitSet::new(n);
        for v in g.vertices().filter(|&v| g.deg(v) >= 3) {
            high.insert(v);
        }
        let mut suffix_vertices = vec![BitSet::new(n); units.len() + 1];
        let mut suffix_edges = vec![BitSet::new(g.size()); units.len() + 1];
        for i in (0..units.len()).rev() {
            let mut vs = suffix_vertices[i + 1].clone();
            let mut es = suffix_edges[i + 1].clone();
            for p in &units[i].patterns {
                for &v in &p.vertices {
                    vs.insert(v);
                }
                for &e in &p.edges {
                    es.insert(e);
                }
            }
            suffix_vertices[i] = vs;
            suffix_edges[i] = es;
        }
        let balls = if k >= 2 {
            g.distance_matrix()
                .iter()
                .map(|row| {
                    let mut b = BitSet::new(n);
                    for (u, &d) in row.iter().enumerate() {
                        if (d as usize) < k {
                            b.insert(u);
                        }
                    }
                    b
                })
                .collect()
        } else {
            Vec::new()
        };
        Some(Plan {
            g,
            k,
            odd_limit,
            units,
            settle,
            high,
            suffix_vertices,
            suffix_edges,
            balls,
        })
    }

    /// Are all `required` vertices mutually linked through `nodes`, where
    /// nodes within distance `k − 1` are linked (or, for `k = 1`, nodes
    /// joined by an edge of `edges`)?
    fn linked(&self, required: &BitSet, nodes: &BitSet, edges: &BitSet) -> bool {
        let Some(start) = required.iter().next() else {
            return true;
        };
        let mut reached = BitSet::new(self.g.order());
        reached.insert(start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            if self.k >= 2 {
                for y in self.balls[x]
                    .iter_masked(nodes, &reached)
                    .collect::<Vec<_>>()
                {
                    reached.insert(y);
                    stack.push(y);
                }
            } else {
                for &(y, e) in self.g.incident(x) {
                    if edges.contains(e) && nodes.contains(y) && !reached.contains(y) {
                        reached.insert(y);
                        stack.push(y);
                    }
                }
            }
        }
        required.iter().all(|v| reached.contains(v))
    }
}

struct State {
    degree: Vec<u32>,
    in_h: Vec<u32>,
    odd: usize,
    chosen: BitSet,
    choice: Vec<usize>,
}

impl State {
    fn new(plan: &Plan) -> Self {
        State {
            degree: vec![0; plan.g.order()],
            in_h: vec![0; plan.g.order()],
            odd: 0,
            chosen: BitSet::new(plan.g.size()),
            choice: Vec::new(),
        }
    }

    fn definite(&self, plan: &Plan) -> BitSet {
        let mut d = plan.high.clone();
        for (v, &c) in self.in_h.iter().enumerate() {
            if c > 0 {
                d.insert(v);
            }
        }
        d
    }
}

/// Depth-first search over units. Returns `Ok(true)` when a witness is
/// sitting in `st.chosen`.
fn descend(plan: &Plan, st: &mut State, depth: usize, meter: &Meter) -> Result<bool, Exhausted> {
    if depth == plan.units.len() {
        return Ok(leaf_passes(plan, st));
    }
    let unit = &plan.units[depth];
    for (pi, p) in unit.patterns.iter().enumerate() {
        meter.tick()?;
        if try_pattern(plan, st, depth, pi, p) {
            let ok = p.full || {
                let definite = st.definite(plan);
                let mut nodes = definite.clone();
                nodes.union_with(&plan.suffix_vertices[depth + 1]);
                let mut edges = st.chosen.clone();
                edges.union_with(&plan.suffix_edges[depth + 1]);
                plan.linked(&definite, &nodes, &edges)
            };
            if ok && descend(plan, st, depth + 1, meter)? {
                return Ok(true);
            }
        }
        undo_pattern(plan, st, depth, p);
    }
    Ok(false)
}

/// Applies pattern `p` at unit `depth`; false if the parity budget is blown
/// (the caller still undoes it).
fn try_pattern(plan: &Plan, st: &mut State, depth: usize, pi: usize, p: &Pattern) -> bool {
    st.choice.push(pi);
    for &e in &p.edges {
        st.chosen.insert(e);
    }
    for &v in &p.vertices {
        st.in_h[v] += 1;
    }
    st.odd += p.internal_odd;
    if let Some((a, b)) = plan.units[depth].ends {
        st.degree[a] += p.end_degree.0;
        st.degree[b] += p.end_degree.1;
    }
    for &v in &plan.settle[depth] {
        st.odd += (st.degree[v] % 2) as usize;
    }
    st.odd <= plan.odd_limit
}

fn undo_pattern(plan: &Plan, st: &mut State, depth: usize, p: &Pattern) {
    for &v in &plan.settle[depth] {
        st.odd -= (st.degree[v] % 2) as usize;
    }
    if let Some((a, b)) = plan.units[depth].ends {
        st.degree[a] -= p.end_degree.0;
        st.degree[b] -= p.end_degree.1;
    }
    st.odd -= p.internal_odd;
    for &v in &p.vertices {
        st.in_h[v] -= 1;
    }
    for &e in &p.edges {
        st.chosen.remove(e);
    }
    st.choice.pop();
}

fn leaf_passes(plan: &Plan, st: &State) -> bool {
    let vh = st.definite(plan);
    if vh.is_empty() {
        return false;
    }
    plan.linked(&vh, &vh, &st.chosen)
}

fn finish(g: &MultiGraph, k: usize, variant: Variant, chosen: &BitSet) -> Result<Subgraph> {
    let h = Subgraph::canonical(g, chosen.iter());
    let report = check_conditions(g, &h, k, variant)?;
    if !report.passes() {
        return Err(Error::Inconsistent(format!(
            "search produced a failing candidate:\n{report}"
        )));
    }
    Ok(h)
}

/// Searches for a member of `EU_k(G)` or `EUP_k(G)`.
///
/// Candidates are the canonical subgraphs `H(S)`: an edge set `S` plus every
/// vertex of degree at least 3 in `G` that `S` misses, as an isolated
/// vertex. Any member of the family has this form, so the search is
/// complete. The search walks branches in a fixed order and returns the
/// first witness in that order; with `workers > 1` the top-level choices
/// are explored in parallel and the same witness is returned.
pub fn find_witness(
    g: &MultiGraph,
    k: usize,
    variant: Variant,
    opts: &SearchOptions,
) -> Result<Search<Subgraph>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    g.require_connected()?;
    let Some(plan) = Plan::new(g, k, variant) else {
        return Ok(Search::Absent);
    };
    let meter = opts.meter(&format!("find_witness({variant}_{k})"));

    if opts.workers <= 1 || plan.units.is_empty() {
        let mut st = State::new(&plan);
        return match descend(&plan, &mut st, 0, &meter) {
            Ok(true) => finish(g, k, variant, &st.chosen).map(Search::Found),
            Ok(false) => Ok(Search::Absent),
            Err(e) => Ok(Search::Unknown(e)),
        };
    }

    let unknown = AtomicBool::new(false);
    let exhausted = std::sync::Mutex::new(None);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| {
            Error::InvalidParameter(format!("cannot start {} workers: {e}", opts.workers))
        })?;
    let top = &plan.units[0].patterns;
    let found = pool.install(|| {
        (0..top.len()).into_par_iter().find_map_first(|pi| {
            let mut st = State::new(&plan);
            let p = &top[pi];
            let mut result = None;
            if let Err(e) = meter.tick() {
                unknown.store(true, Ordering::Relaxed);
                *exhausted.lock().expect("poisoned") = Some(e);
                return None;
            }
            if try_pattern(&plan, &mut st, 0, pi, p) {
                match descend(&plan, &mut st, 1, &meter) {
                    Ok(true) => result = Some(st.chosen.clone()),
                    Ok(false) => {}
                    Err(e) => {
                        unknown.store(true, Ordering::Relaxed);
                        *exhausted.lock().expect("poisoned") = Some(e);
                    }
                }
            }
            result
        })
    });
    match found {
        Some(chosen) => finish(g, k, variant, &chosen).map(Search::Found),
        None if unknown.load(Ordering::Relaxed) => Ok(Search::Unknown(
            exhausted
                .into_inner()
                .expect("poisoned")
                .unwrap_or_else(|| meter.exhausted(false)),
        )),
        None => Ok(Search::Absent),
    }
}

/// Brute-force membership over every edge subset's canonical subgraph.
/// Exponential in `|E(G)|`; the independent oracle for [`find_witness`].
pub fn exists_by_enumeration(
    g: &MultiGraph,
    k: usize,
    variant: Variant,
) -> Result<Option<Subgraph>> {
    let m = g.size();
    if m > 24 {
        return Err(Error::InvalidParameter(format!(
            "{m} edges is too many to enumerate"
        )));
    }
    for mask in 0u32..(1 << m) {
        let h = Subgraph::canonical(g, (0..m).filter(|&e| mask >> e & 1 == 1));
        if check_conditions(g, &h, k, variant)?.passes() {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// JSON shape for a witness: `{edges, isolated_vertices, report}`.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessRecord {
    pub edges: Vec<EdgeId>,
    pub isolated_vertices: Vec<VertexId>,
    pub report: ConditionReport,
}

impl WitnessRecord {
    pub fn new(g: &MultiGraph, h: &Subgraph, k: usize, variant: Variant) -> Result<Self> {
        Ok(WitnessRecord {
            edges: h.edges.iter().copied().collect(),
            isolated_vertices: h.isolated.iter().copied().collect(),
            report: check_conditions(g, h, k, variant)?,
        })
    }
}
