//! Degree classes, branches, pendent cycles, and exact trail searches.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Trail, VertexId};
use crate::search::{Exhausted, Meter, Search, SearchOptions};

/// Partition of `V(G)` by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeClasses {
    /// `V_i(G)` for every degree `i` that occurs.
    pub by_degree: BTreeMap<usize, BTreeSet<VertexId>>,
    /// `V_{≥3}(G)`.
    pub high: BTreeSet<VertexId>,
    /// `W(G) = V(G) \ V_2(G)`.
    pub w: BTreeSet<VertexId>,
}

impl DegreeClasses {
    pub fn class(&self, degree: usize) -> BTreeSet<VertexId> {
        self.by_degree.get(&degree).cloned().unwrap_or_default()
    }
}

pub fn degree_classes(g: &MultiGraph) -> DegreeClasses {
    let mut by_degree: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
    for v in g.vertices() {
        by_degree.entry(g.deg(v)).or_default().insert(v);
    }
    DegreeClasses {
        high: g.vertices().filter(|&v| g.deg(v) >= 3).collect(),
        w: g.vertices().filter(|&v| g.deg(v) != 2).collect(),
        by_degree,
    }
}

/// A maximal path whose ends have degree other than 2 and whose internal
/// vertices have degree 2.
///
/// A cycle hanging from a single vertex of `W(G)` is reported as a closed
/// branch with both ends equal to that vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Branch {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub is_closed: bool,
    /// True when the branch meets `V_1(G)`.
    pub touches_degree_one: bool,
}

impl Branch {
    /// `|E(b)|`.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn ends(&self) -> (VertexId, VertexId) {
        (
            self.vertices[0],
            *self.vertices.last().expect("branches are nontrivial"),
        )
    }

    pub fn internal(&self) -> &[VertexId] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

/// `B(G)`. Every edge lies in exactly one branch, except edges of a
/// component that is a cycle of degree-2 vertices, which lies in none.
pub fn branches(g: &MultiGraph) -> Vec<Branch> {
    let mut assigned = vec![false; g.size()];
    let mut out = Vec::new();
    for w in g.vertices().filter(|&v| g.deg(v) != 2) {
        for &(first, e0) in g.incident(w) {
            if assigned[e0] {
                continue;
            }
            assigned[e0] = true;
            let mut vertices = vec![w];
            let mut edges = vec![e0];
            let (mut cur, mut via) = (first, e0);
            while g.deg(cur) == 2 {
                vertices.push(cur);
                let &(next, e) = g
                    .incident(cur)
                    .iter()
                    .find(|&&(_, e)| e != via)
                    .expect("degree-2 vertex has a second edge");
                assigned[e] = true;
                edges.push(e);
                cur = next;
                via = e;
            }
            vertices.push(cur);
            let touches_degree_one = g.deg(w) == 1 || g.deg(cur) == 1;
            out.push(Branch {
                is_closed: cur == w,
                vertices,
                edges,
                touches_degree_one,
            });
        }
    }
    out
}

/// `B_1(G)`: branches meeting a vertex of degree 1.
pub fn branches_b1(g: &MultiGraph) -> Vec<Branch> {
    branches(g)
        .into_iter()
        .filter(|b| b.touches_degree_one)
        .collect()
}

/// `PC(G)`: cycles meeting `V_{≥3}(G)` in exactly one vertex, as closed
/// trails starting and ending at that vertex.
///
/// All other vertices of such a cycle have degree 2, so these are exactly
/// the closed branches.
pub fn pendent_cycles(g: &MultiGraph) -> Vec<Trail> {
    branches(g)
        .into_iter()
        .filter(|b| b.is_closed)
        .map(|b| Trail {
            vertices: b.vertices,
            edges: b.edges,
        })
        .collect()
}

/// `MT*(G)` and the statistics derived from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxTrail {
    pub trail: Trail,
    /// `mt*(G)`: distinct vertices on the trail.
    pub mt_star: usize,
    /// `d*_{≥3}(G)`: vertices of degree at least 3 missed by the trail.
    pub d3_star: usize,
}

/// Incremental bookkeeping for a trail under construction.
struct TrailState<'g> {
    g: &'g MultiGraph,
    used: BitSet,
    visits: Vec<u32>,
    cover: Vec<u8>,
    covered: usize,
    distinct: usize,
    high: Vec<bool>,
    high_visited: usize,
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl<'g> TrailState<'g> {
    fn new(g: &'g MultiGraph) -> Self {
        TrailState {
            g,
            used: BitSet::new(g.size()),
            visits: vec![0; g.order()],
            cover: vec![0; g.size()],
            covered: 0,
            distinct: 0,
            high: g.vertices().map(|v| g.deg(v) >= 3).collect(),
            high_visited: 0,
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn visit(&mut self, v: VertexId) {
        self.vertices.push(v);
        self.visits[v] += 1;
        if self.visits[v] == 1 {
            self.distinct += 1;
            if self.high[v] {
                self.high_visited += 1;
            }
            for &(_, e) in self.g.incident(v) {
                if self.cover[e] == 0 {
                    self.covered += 1;
                }
                self.cover[e] += 1;
            }
        }
    }

    fn unvisit(&mut self) {
        let v = self.vertices.pop().expect("nonempty trail");
        self.visits[v] -= 1;
        if self.visits[v] == 0 {
            self.distinct -= 1;
            if self.high[v] {
                self.high_visited -= 1;
            }
            for &(_, e) in self.g.incident(v) {
                self.cover[e] -= 1;
                if self.cover[e] == 0 {
                    self.covered -= 1;
                }
            }
        }
    }

    fn step(&mut self, e: EdgeId, to: VertexId) {
        self.used.insert(e);
        self.edges.push(e);
        self.visit(to);
    }

    fn back(&mut self) {
        let e = self.edges.pop().expect("nonempty trail");
        self.used.remove(e);
        self.unvisit();
    }

    fn current(&self) -> VertexId {
        *self.vertices.last().expect("trail has a start")
    }

    fn trail(&self) -> Trail {
        Trail {
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
        }
    }
}

/// Finds `MT*(G)`: a trail with the most distinct vertices and, among those,
/// the fewest vertices of degree at least 3 left off it.
///
/// Exact search over all trails, memoizing `(end vertex, used edge set)`
/// states, which determine every continuation.
pub fn max_trail(g: &MultiGraph, opts: &SearchOptions) -> Result<MaxTrail> {
    g.require_connected()?;
    let meter = opts.meter("max_trail");
    let total_high = g.vertices().filter(|&v| g.deg(v) >= 3).count();
    let mut best: Option<(usize, usize, Trail)> = None;
    let mut seen = HashSet::new();
    let mut st = TrailState::new(g);

    fn better(a: (usize, usize), b: &Option<(usize, usize, Trail)>) -> bool {
        match b {
            None => true,
            Some((m, d, _)) => a.0 > *m || (a.0 == *m && a.1 < *d),
        }
    }

    fn dfs(
        st: &mut TrailState,
        seen: &mut HashSet<(VertexId, BitSet)>,
        best: &mut Option<(usize, usize, Trail)>,
        total_high: usize,
        meter: &Meter,
    ) -> Result<bool, Exhausted> {
        meter.tick()?;
        let score = (st.distinct, total_high - st.high_visited);
        if better(score, best) {
            *best = Some((score.0, score.1, st.trail()));
            if score.0 == st.g.order() {
                return Ok(true);
            }
        }
        if !seen.insert((st.current(), st.used.clone())) {
            return Ok(false);
        }
        let cur = st.current();
        for &(u, e) in st.g.incident(cur) {
            if st.used.contains(e) {
                continue;
            }
            st.step(e, u);
            let done = dfs(st, seen, best, total_high, meter)?;
            st.back();
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }

    for s in g.vertices() {
        st.visit(s);
        let done = dfs(&mut st, &mut seen, &mut best, total_high, &meter)?;
        st.unvisit();
        if done {
            break;
        }
    }
    let (mt_star, d3_star, trail) = best.expect("a connected graph has at least one vertex");
    Ok(MaxTrail {
        trail,
        mt_star,
        d3_star,
    })
}

/// Searches for a dominating trail: every edge of `g` has an endpoint on it.
///
/// A single vertex counts as a (closed) trail when it alone dominates, as
/// the center of a star does. Open trails that are found are extended
/// greedily (lowest edge id first) until their end is stuck, so the result
/// is maximal at its end. Closed trails are searched from their smallest
/// vertex.
pub fn find_dominating_trail(
    g: &MultiGraph,
    closed: bool,
    opts: &SearchOptions,
) -> Result<Search<Trail>> {
    g.require_connected()?;
    let op = if closed {
        "find_dominating_trail(closed)"
    } else {
        "find_dominating_trail(open)"
    };
    let meter = opts.meter(op);
    let m = g.size();
    let mut st = TrailState::new(g);
    let mut seen: HashSet<(VertexId, VertexId, BitSet)> = HashSet::new();

    fn dfs(
        st: &mut TrailState,
        start: VertexId,
        closed: bool,
        seen: &mut HashSet<(VertexId, VertexId, BitSet)>,
        meter: &Meter,
    ) -> Result<bool, Exhausted> {
        meter.tick()?;
        let cur = st.current();
        let m = st.g.size();
        if st.covered == m && (!closed || cur == start) {
            return Ok(true);
        }
        // Open-trail continuations do not depend on the start vertex.
        let key_start = if closed { start } else { usize::MAX };
        if !seen.insert((key_start, cur, st.used.clone())) {
            return Ok(false);
        }
        for &(u, e) in st.g.incident(cur) {
            if st.used.contains(e) || (closed && u < start) {
                continue;
            }
            st.step(e, u);
            if dfs(st, start, closed, seen, meter)? {
                return Ok(true);
            }
            st.back();
        }
        Ok(false)
    }

    for s in g.vertices() {
        st.visit(s);
        let found = match dfs(&mut st, s, closed, &mut seen, &meter) {
            Ok(f) => f,
            Err(e) => return Ok(Search::Unknown(e)),
        };
        if found {
            if !closed {
                extend_greedily(&mut st);
            }
            let t = st.trail();
            debug_assert!(t.dominates(g) && (m == 0 || !closed || t.is_closed() || t.is_empty()));
            return Ok(Search::Found(t));
        }
        st.unvisit();
    }
    Ok(Search::Absent)
}

fn extend_greedily(st: &mut TrailState) {
    loop {
        let cur = st.current();
        let next =
            st.g.incident(cur)
                .iter()
                .filter(|&&(_, e)| !st.used.contains(e))
                .min_by_key(|&&(_, e)| e)
                .copied();
        match next {
            Some((u, e)) => st.step(e, u),
            None => break,
        }
    }
}

/// Checks that `t` is a dominating trail of `g`, returning the first
/// undominated edge otherwise.
pub fn check_dominating(g: &MultiGraph, t: &Trail) -> Result<()> {
    t.validate(g)?;
    match t.first_undominated(g) {
        None => Ok(()),
        Some(edge) => Err(Error::NotDominating { edge }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, cycle, path, star};

    fn opts() -> SearchOptions {
        SearchOptions::with_budget(10_000_000)
    }

    #[test]
    fn degree_classes_examples() {
        let dc = degree_classes(&families::fig1());
        assert_eq!(dc.class(3), [2, 5, 8, 11].into());
        assert!(degree_classes(&cycle(6).unwrap()).w.is_empty());
        let dc = degree_classes(&star(3).unwrap());
        assert_eq!(dc.class(1), [1, 2, 3].into());
        assert_eq!(dc.class(3), [0].into());
    }

    #[test]
    fn fig1_branches() {
        let g = families::fig1();
        let bs = branches(&g);
        assert_eq!(bs.len(), 7);
        assert_eq!(branches_b1(&g).len(), 2);
        let paths: BTreeSet<Vec<usize>> = bs
            .iter()
            .map(|b| {
                let mut v = b.vertices.clone();
                if v[0] > *v.last().unwrap() {
                    v.reverse();
                }
                v
            })
            .collect();
        for expected in [
            vec![0, 1, 2],
            vec![2, 3, 4, 5],
            vec![5, 6, 7, 8],
            vec![8, 9, 10],
        ] {
            assert!(paths.contains(&expected), "missing branch {expected:?}");
        }
    }

    #[test]
    fn path_and_cycle_branches() {
        let bs = branches(&path(5).unwrap());
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].len(), 4);
        assert!(bs[0].touches_degree_one);
        assert!(branches(&cycle(6).unwrap()).is_empty());
    }

    #[test]
    fn branch_shape_invariants_on_families() {
        for g in [
            families::fig1(),
            families::fig2(3).unwrap(),
            families::fig3(1, 6).unwrap(),
            families::fig4a(),
            families::fig4b(2).unwrap(),
        ] {
            let bs = branches(&g);
            let mut seen = BTreeSet::new();
            for b in &bs {
                let (a, z) = b.ends();
                assert_ne!(g.degree(a).unwrap(), 2);
                assert_ne!(g.degree(z).unwrap(), 2);
                assert!(b.internal().iter().all(|&v| g.degree(v).unwrap() == 2));
                for &e in &b.edges {
                    assert!(seen.insert(e), "edge {e} in two branches");
                }
            }
            assert_eq!(seen.len(), g.size());
        }
    }

    #[test]
    fn pendent_cycle_counts() {
        assert_eq!(pendent_cycles(&families::fig4a()).len(), 2);
        assert!(pendent_cycles(&cycle(5).unwrap()).is_empty());
        assert!(pendent_cycles(&families::fig2(1).unwrap()).is_empty());
    }

    #[test]
    fn max_trail_examples() {
        let mt = max_trail(&families::fig3(1, 6).unwrap(), &opts()).unwrap();
        assert_eq!((mt.mt_star, mt.d3_star), (13, 4));
        let mt = max_trail(&path(6).unwrap(), &opts()).unwrap();
        assert_eq!((mt.mt_star, mt.d3_star), (6, 0));
        let k5 = families::complete(5).unwrap();
        let mt = max_trail(&k5, &opts()).unwrap();
        assert_eq!((mt.mt_star, mt.d3_star), (5, 0));
        mt.trail.validate(&k5).unwrap();
        assert!(matches!(
            max_trail(&MultiGraph::new(3, [(0, 1)]).unwrap(), &opts()),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn max_trail_reports_budget_exhaustion() {
        let g = families::fig3(1, 6).unwrap();
        assert!(matches!(
            max_trail(&g, &SearchOptions::with_budget(5)),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn dominating_trail_examples() {
        let g = families::fig1();
        let t = find_dominating_trail(&g, false, &opts())
            .unwrap()
            .found()
            .unwrap();
        assert_eq!(t.vertices, (0..11).collect::<Vec<_>>());

        let c6 = cycle(6).unwrap();
        let t = find_dominating_trail(&c6, true, &opts())
            .unwrap()
            .found()
            .unwrap();
        assert!(t.is_closed() && t.len() == 6);

        let f2 = families::fig2(1).unwrap();
        let t = find_dominating_trail(&f2, true, &opts())
            .unwrap()
            .found()
            .unwrap();
        assert_eq!(t.vertex_set(), (0..6).collect());

        // Star: the center alone dominates; no nontrivial closed trail exists.
        let t = find_dominating_trail(&star(4).unwrap(), true, &opts())
            .unwrap()
            .found()
            .unwrap();
        assert_eq!(t, Trail::trivial(0));

        // Three long legs cannot all be reached by one trail.
        let f2 = families::fig2(2).unwrap();
        assert!(find_dominating_trail(&f2, false, &opts())
            .unwrap()
            .is_absent());
    }

    #[test]
    fn check_dominating_reports_edge() {
        let g = path(4).unwrap();
        assert!(matches!(
            check_dominating(&g, &Trail::trivial(0)),
            Err(Error::NotDominating { edge: 1 })
        ));
    }
}
