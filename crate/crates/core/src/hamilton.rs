//! Hamiltonian path and cycle oracles, and the lift of dominating trails of
//! `G` to hamiltonian paths and cycles of `L(G)`.
//!
//! Up to [`DP_VERTEX_CAP`] vertices the oracles run a Held–Karp style bitmask
//! dynamic program; above that they fall back to depth-first backtracking
//! under the search budget. Both are exact.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Trail, VertexId};
use crate::linegraph::line_graph;
use crate::search::{Exhausted, Meter, Search, SearchOptions};
use crate::structure::check_dominating;

/// Largest order handled by the bitmask dynamic program.
pub const DP_VERTEX_CAP: usize = 20;

fn neighbor_masks(g: &MultiGraph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.incident(v).iter().fold(0u32, |m, &(u, _)| m | 1 << u))
        .collect()
}

/// Hamiltonian path by bitmask DP. `g.order()` must be at most 20.
///
/// `ends[mask]` holds the vertices at which some path covering exactly
/// `mask` can end.
pub fn hamiltonian_path_dp(g: &MultiGraph) -> Option<Vec<VertexId>> {
    let n = g.order();
    assert!(n <= DP_VERTEX_CAP, "DP limited to {DP_VERTEX_CAP} vertices");
    if n == 0 {
        return None;
    }
    let adj = neighbor_masks(g);
    let full = (1u32 << n) - 1;
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let mut e = ends[mask as usize];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut nb = adj[v] & !mask;
            while nb != 0 {
                let u = nb.trailing_zeros();
                nb &= nb - 1;
                ends[(mask | 1 << u) as usize] |= 1 << u;
            }
        }
    }
    if ends[full as usize] == 0 {
        return None;
    }
    let mut v = ends[full as usize].trailing_zeros() as usize;
    let mut mask = full;
    let mut path = vec![v];
    while mask.count_ones() > 1 {
        let prev = mask & !(1 << v);
        let cands = ends[prev as usize] & adj[v];
        let u = cands.trailing_zeros() as usize;
        path.push(u);
        mask = prev;
        v = u;
    }
    path.reverse();
    Some(path)
}

/// Hamiltonian cycle by bitmask DP over paths that start at vertex 0.
pub fn hamiltonian_cycle_dp(g: &MultiGraph) -> Option<Vec<VertexId>> {
    let n = g.order();
    assert!(n <= DP_VERTEX_CAP, "DP limited to {DP_VERTEX_CAP} vertices");
    if n < 2 {
        return None;
    }
    if n == 2 {
        return (g.incident(0).len() >= 2).then(|| vec![0, 1]);
    }
    let adj = neighbor_masks(g);
    let full = (1u32 << n) - 1;
    let mut ends = vec![0u32; 1 << n];
    ends[1] = 1;
    for mask in (1..=full).step_by(2) {
        let mut e = ends[mask as usize];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut nb = adj[v] & !mask;
            while nb != 0 {
                let u = nb.trailing_zeros();
                nb &= nb - 1;
                ends[(mask | 1 << u) as usize] |= 1 << u;
            }
        }
    }
    let closing = ends[full as usize] & adj[0] & !1;
    if closing == 0 {
        return None;
    }
    let mut v = closing.trailing_zeros() as usize;
    let mut mask = full;
    let mut path = vec![v];
    while mask.count_ones() > 1 {
        let prev = mask & !(1 << v);
        let u = (ends[prev as usize] & adj[v]).trailing_zeros() as usize;
        path.push(u);
        mask = prev;
        v = u;
    }
    path.reverse();
    Some(path)
}

struct Backtrack<'g> {
    g: &'g MultiGraph,
    adj: Vec<Vec<VertexId>>,
    on_path: Vec<bool>,
    path: Vec<VertexId>,
    /// Unvisited neighbors of each vertex.
    free_deg: Vec<usize>,
}

impl<'g> Backtrack<'g> {
    fn new(g: &'g MultiGraph) -> Self {
        let adj: Vec<Vec<VertexId>> = g
            .vertices()
            .map(|v| {
                g.distinct_neighbors(v)
                    .unwrap_or_default()
                    .into_iter()
                    .collect()
            })
            .collect();
        let free_deg = adj.iter().map(Vec::len).collect();
        Backtrack {
            g,
            adj,
            on_path: vec![false; g.order()],
            path: Vec::new(),
            free_deg,
        }
    }

    fn push(&mut self, v: VertexId) {
        self.on_path[v] = true;
        self.path.push(v);
        for &u in &self.adj[v] {
            self.free_deg[u] -= 1;
        }
    }

    fn pop(&mut self) {
        let v = self.path.pop().expect("nonempty");
        self.on_path[v] = false;
        for &u in &self.adj[v] {
            self.free_deg[u] += 1;
        }
    }

    /// Extends the current path to a hamiltonian path (or cycle back to
    /// `path[0]` when `cycle`).
    fn extend(&mut self, cycle: bool, meter: &Meter) -> Result<bool, Exhausted> {
        meter.tick()?;
        let n = self.g.order();
        let cur = *self.path.last().expect("nonempty");
        if self.path.len() == n {
            return Ok(!cycle || self.adj[cur].contains(&self.path[0]));
        }
        // An unvisited vertex with no unvisited neighbor can only be entered
        // from `cur` as the very last vertex.
        let need = if cycle { 2 } else { 1 };
        let mut stuck = false;
        for v in 0..n {
            if self.on_path[v] {
                continue;
            }
            let adjacent_to_cur = self.adj[cur].contains(&v);
            let slack = usize::from(cycle && self.adj[v].contains(&self.path[0]));
            if self.free_deg[v] + usize::from(adjacent_to_cur) + slack < need {
                return Ok(false);
            }
            stuck |= self.free_deg[v] == 0;
        }
        if stuck && self.path.len() + 1 < n {
            return Ok(false);
        }
        let mut cands: Vec<VertexId> = self.adj[cur]
            .iter()
            .copied()
            .filter(|&u| !self.on_path[u])
            .collect();
        // Fewest onward options first.
        cands.sort_by_key(|&u| (self.free_deg[u], u));
        for u in cands {
            self.push(u);
            if self.extend(cycle, meter)? {
                return Ok(true);
            }
            self.pop();
        }
        Ok(false)
    }
}

fn backtrack_search(g: &MultiGraph, cycle: bool, opts: &SearchOptions) -> Search<Vec<VertexId>> {
    let op = if cycle {
        "hamiltonian_cycle"
    } else {
        "hamiltonian_path"
    };
    let meter = opts.meter(op);
    let n = g.order();
    let mut bt = Backtrack::new(g);
    let starts: Vec<VertexId> = if cycle {
        vec![0]
    } else {
        let leaves: Vec<VertexId> = (0..n).filter(|&v| bt.adj[v].len() == 1).collect();
        if leaves.len() > 2 {
            return Search::Absent;
        }
        if leaves.is_empty() {
            (0..n).collect()
        } else {
            vec![leaves[0]]
        }
    };
    for s in starts {
        bt.push(s);
        match bt.extend(cycle, &meter) {
            Ok(true) => return Search::Found(bt.path.clone()),
            Ok(false) => bt.pop(),
            Err(e) => return Search::Unknown(e),
        }
    }
    Search::Absent
}

/// Exact hamiltonian path search with a vertex-sequence witness.
pub fn hamiltonian_path(g: &MultiGraph, opts: &SearchOptions) -> Search<Vec<VertexId>> {
    let n = g.order();
    if n == 0 || !g.is_connected() {
        return Search::Absent;
    }
    if n <= DP_VERTEX_CAP {
        return hamiltonian_path_dp(g).map_or(Search::Absent, Search::Found);
    }
    backtrack_search(g, false, opts)
}

/// Exact hamiltonian cycle search. A 2-cycle (two parallel edges) counts;
/// `K_1` and `K_2` do not.
pub fn hamiltonian_cycle(g: &MultiGraph, opts: &SearchOptions) -> Search<Vec<VertexId>> {
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return Search::Absent;
    }
    if n <= DP_VERTEX_CAP {
        return hamiltonian_cycle_dp(g).map_or(Search::Absent, Search::Found);
    }
    if g.vertices()
        .any(|v| g.distinct_neighbors(v).map_or(0, |s| s.len()) < 2)
    {
        return Search::Absent;
    }
    backtrack_search(g, true, opts)
}

/// Independent check that `seq` visits every vertex once along edges.
pub fn is_hamiltonian_path(g: &MultiGraph, seq: &[VertexId]) -> bool {
    let n = g.order();
    seq.len() == n
        && n > 0
        && seq.iter().copied().collect::<BTreeSet<_>>().len() == n
        && seq.iter().all(|&v| v < n)
        && seq.windows(2).all(|w| g.has_edge_between(w[0], w[1]))
}

/// Like [`is_hamiltonian_path`] plus the closing edge. For two vertices the
/// closing step needs a second, parallel edge.
pub fn is_hamiltonian_cycle(g: &MultiGraph, seq: &[VertexId]) -> bool {
    if !is_hamiltonian_path(g, seq) || seq.len() < 2 {
        return false;
    }
    if seq.len() == 2 {
        return g
            .incident(seq[0])
            .iter()
            .filter(|&&(u, _)| u == seq[1])
            .count()
            >= 2;
    }
    g.has_edge_between(seq[seq.len() - 1], seq[0])
}

/// Orders every edge of `g` along the trail: trail edges in trail order, and
/// each remaining edge inserted (ascending id) at the first visit of the
/// first trail vertex it touches.
fn lifted_order(g: &MultiGraph, t: &Trail) -> Vec<EdgeId> {
    let on_trail: BTreeSet<EdgeId> = t.edges.iter().copied().collect();
    let mut placed = vec![false; g.size()];
    let mut seen = vec![false; g.order()];
    let mut order = Vec::with_capacity(g.size());
    let mut pendant_at = |v: VertexId, order: &mut Vec<EdgeId>, placed: &mut Vec<bool>| {
        if seen[v] {
            return;
        }
        seen[v] = true;
        let mut pend: Vec<EdgeId> = g
            .incident(v)
            .iter()
            .map(|&(_, e)| e)
            .filter(|e| !on_trail.contains(e) && !placed[*e])
            .collect();
        pend.sort_unstable();
        for e in pend {
            placed[e] = true;
            order.push(e);
        }
    };
    pendant_at(t.vertices[0], &mut order, &mut placed);
    for (i, &e) in t.edges.iter().enumerate() {
        placed[e] = true;
        order.push(e);
        pendant_at(t.vertices[i + 1], &mut order, &mut placed);
    }
    order
}

fn trail_in_line_graph(lg: &MultiGraph, order: &[EdgeId], closed: bool) -> Result<Trail> {
    let mut seq = order.to_vec();
    if closed {
        seq.push(order[0]);
    }
    let mut edges = Vec::with_capacity(seq.len().saturating_sub(1));
    for w in seq.windows(2) {
        let e = lg
            .incident(w[0])
            .iter()
            .find(|&&(u, _)| u == w[1])
            .map(|&(_, e)| e)
            .ok_or_else(|| {
                Error::Inconsistent(format!(
                    "line-graph vertices {} and {} not adjacent",
                    w[0], w[1]
                ))
            })?;
        edges.push(e);
    }
    Trail::new(lg, seq, edges)
}

/// Turns a dominating trail of `g` into a hamiltonian path of `L(g)`.
///
/// The returned trail lives in `line_graph(g)`; its vertices are edge ids of
/// `g`. It is verified as a hamiltonian path before being returned.
pub fn lift_trail_to_path(g: &MultiGraph, t: &Trail) -> Result<Trail> {
    check_dominating(g, t)?;
    let lg = line_graph(g)?.graph;
    let order = lifted_order(g, t);
    if !is_hamiltonian_path(&lg, &order) {
        return Err(Error::Inconsistent(
            "lifted order is not a hamiltonian path of L(G)".into(),
        ));
    }
    trail_in_line_graph(&lg, &order, false)
}

/// Turns a dominating closed trail of `g` (at least three edges) into a
/// hamiltonian cycle of `L(g)`, returned as a closed trail of `line_graph(g)`.
pub fn lift_closed_trail_to_cycle(g: &MultiGraph, t: &Trail) -> Result<Trail> {
    if !(t.is_closed() || t.is_empty()) {
        return Err(Error::InvalidTrail("trail is not closed".into()));
    }
    if g.size() < 3 {
        return Err(Error::InvalidParameter(
            "lifting to a cycle needs at least three edges".into(),
        ));
    }
    check_dominating(g, t)?;
    let lg = line_graph(g)?.graph;
    let order = lifted_order(g, t);
    if !is_hamiltonian_cycle(&lg, &order) {
        return Err(Error::Inconsistent(
            "lifted order is not a hamiltonian cycle of L(G)".into(),
        ));
    }
    trail_in_line_graph(&lg, &order, true)
}
