//! Loopless undirected multigraphs with stable edge identifiers, subgraph
//! handles and trails.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// A finite, undirected, loopless multigraph.
///
/// Vertices are `0..order()`. Edges carry dense ids `0..size()` in insertion
/// order; parallel edges are distinct ids. The graph is immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    order: usize,
    edges: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<(VertexId, EdgeId)>>,
}

impl MultiGraph {
    /// Builds a graph from `(u, v)` pairs; edge `i` gets id `i`.
    pub fn new(
        order: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let edges: Vec<_> = edges.into_iter().collect();
        let mut incidence = vec![Vec::new(); order];
        for (id, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= order {
                    return Err(Error::UnknownVertex { vertex: x, order });
                }
            }
            if u == v {
                return Err(Error::Loop {
                    edge: id,
                    vertex: u,
                });
            }
            incidence[u].push((v, id));
            incidence[v].push((u, id));
        }
        Ok(MultiGraph {
            order,
            edges,
            incidence,
        })
    }

    pub fn empty(order: usize) -> Self {
        MultiGraph {
            order,
            edges: Vec::new(),
            incidence: vec![Vec::new(); order],
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges, counting parallel edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.order
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `(neighbor, edge)` pairs at `v`, one per incident edge.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.incidence[v]
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::UnknownVertex {
                vertex: v,
                order: self.order,
            })
        }
    }

    /// Degree with multiplicity.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incidence[v].len())
    }

    pub(crate) fn deg(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    /// `N_G(v)`: neighbors without multiplicity.
    pub fn distinct_neighbors(&self, v: VertexId) -> Result<BTreeSet<VertexId>> {
        self.check_vertex(v)?;
        Ok(self.incidence[v].iter().map(|&(u, _)| u).collect())
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Δ′(G)`, the largest number of distinct neighbors of a vertex.
    pub fn max_distinct_degree(&self) -> usize {
        self.vertices()
            .map(|v| self.distinct_neighbors(v).map(|n| n.len()).unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    pub fn has_edge_between(&self, u: VertexId, v: VertexId) -> bool {
        self.incidence[u].iter().any(|&(w, _)| w == v)
    }

    /// Vertices of odd degree.
    pub fn odd_vertices(&self) -> BTreeSet<VertexId> {
        self.vertices().filter(|&v| self.deg(v) % 2 == 1).collect()
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: VertexId) -> Vec<Option<usize>> {
        self.distances_from_set([source])
    }

    pub(crate) fn distances_from_set(
        &self,
        sources: impl IntoIterator<Item = VertexId>,
    ) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        let mut queue = VecDeque::new();
        for s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &(u, _) in &self.incidence[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// All-pairs distance matrix, `u32::MAX` for unreachable pairs.
    pub(crate) fn distance_matrix(&self) -> Vec<Vec<u32>> {
        self.vertices()
            .map(|v| {
                self.distances_from(v)
                    .into_iter()
                    .map(|d| d.map_or(u32::MAX, |d| d as u32))
                    .collect()
            })
            .collect()
    }

    /// `d_G(A, B)`: minimum distance between a vertex of `a` and one of `b`;
    /// `None` means infinite.
    pub fn subgraph_distance(
        &self,
        a: &BTreeSet<VertexId>,
        b: &BTreeSet<VertexId>,
    ) -> Result<Option<usize>> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for &v in a.iter().chain(b.iter()) {
            self.check_vertex(v)?;
        }
        let dist = self.distances_from_set(a.iter().copied());
        Ok(b.iter().filter_map(|&v| dist[v]).min())
    }

    pub fn connected_components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &(u, _) in &self.incidence[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// True for graphs with exactly one component. The null graph is not
    /// connected.
    pub fn is_connected(&self) -> bool {
        self.order > 0 && self.distances_from(0).iter().all(Option::is_some)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn diameter(&self) -> Result<usize> {
        self.require_connected()?;
        Ok(self
            .vertices()
            .map(|v| {
                self.distances_from(v)
                    .into_iter()
                    .map(|d| d.unwrap_or(0))
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0))
    }

    /// `Ē(H)`: edges of `G` with at least one endpoint in `V(H)`.
    pub fn incident_edges(&self, h: &Subgraph) -> BTreeSet<EdgeId> {
        let vs = h.vertices(self);
        (0..self.size())
            .filter(|&e| {
                let (u, v) = self.edges[e];
                vs.contains(&u) || vs.contains(&v)
            })
            .collect()
    }

    /// True when the graph is a path (including `K_1` and `K_2`).
    pub fn is_path(&self) -> bool {
        self.is_connected()
            && self.size() + 1 == self.order
            && self.vertices().all(|v| self.deg(v) <= 2)
    }

    /// True when the graph is a single cycle (including the 2-cycle).
    pub fn is_cycle(&self) -> bool {
        self.order >= 2
            && self.is_connected()
            && self.size() == self.order
            && self.vertices().all(|v| self.deg(v) == 2)
    }
}

/// A subgraph `H ⊆ G` given by an edge set plus explicitly isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct Subgraph {
    pub edges: BTreeSet<EdgeId>,
    #[serde(rename = "isolated_vertices")]
    pub isolated: BTreeSet<VertexId>,
}

impl Subgraph {
    /// Validates that the edges exist in `g` and the isolated vertices are
    /// not endpoints of any chosen edge.
    pub fn new(
        g: &MultiGraph,
        edges: impl IntoIterator<Item = EdgeId>,
        isolated: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self> {
        let h = Subgraph {
            edges: edges.into_iter().collect(),
            isolated: isolated.into_iter().collect(),
        };
        h.validate(g)?;
        Ok(h)
    }

    pub fn validate(&self, g: &MultiGraph) -> Result<()> {
        if let Some(&e) = self.edges.iter().find(|&&e| e >= g.size()) {
            return Err(Error::InvalidSubgraph(format!(
                "edge {e} is not an edge of a graph with {} edges",
                g.size()
            )));
        }
        if let Some(&v) = self.isolated.iter().find(|&&v| v >= g.order()) {
            return Err(Error::InvalidSubgraph(format!(
                "vertex {v} is not a vertex of a graph with {} vertices",
                g.order()
            )));
        }
        let ends = self.edge_endpoints(g);
        if let Some(v) = self.isolated.intersection(&ends).next() {
            return Err(Error::InvalidSubgraph(format!(
                "vertex {v} is listed as isolated but is an endpoint of a chosen edge"
            )));
        }
        Ok(())
    }

    /// The canonical subgraph for an edge set: every vertex of degree at
    /// least three in `g` that the edges miss becomes an isolated vertex.
    pub fn canonical(g: &MultiGraph, edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let edges: BTreeSet<EdgeId> = edges.into_iter().collect();
        let mut h = Subgraph {
            edges,
            isolated: BTreeSet::new(),
        };
        let ends = h.edge_endpoints(g);
        h.isolated = g
            .vertices()
            .filter(|&v| g.deg(v) >= 3 && !ends.contains(&v))
            .collect();
        h
    }

    pub fn edge_endpoints(&self, g: &MultiGraph) -> BTreeSet<VertexId> {
        self.edges
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect()
    }

    /// `V(H)`.
    pub fn vertices(&self, g: &MultiGraph) -> BTreeSet<VertexId> {
        let mut vs = self.edge_endpoints(g);
        vs.extend(self.isolated.iter().copied());
        vs
    }

    /// `d_H(v)`, counting parallel edges.
    pub fn degree(&self, g: &MultiGraph, v: VertexId) -> usize {
        g.incident(v)
            .iter()
            .filter(|(_, e)| self.edges.contains(e))
            .count()
    }

    /// `O(H)`.
    pub fn odd_vertices(&self, g: &MultiGraph) -> BTreeSet<VertexId> {
        let mut deg = vec![0usize; g.order()];
        for &e in &self.edges {
            let (u, v) = g.endpoints(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        (0..g.order()).filter(|&v| deg[v] % 2 == 1).collect()
    }

    /// Components of `H`; each isolated vertex is its own component.
    pub fn components(&self, g: &MultiGraph) -> Vec<BTreeSet<VertexId>> {
        let vs: Vec<VertexId> = self.vertices(g).into_iter().collect();
        let mut parent: Vec<usize> = (0..g.order()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &e in &self.edges {
            let (u, v) = g.endpoints(e);
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
            }
        }
        let mut groups: std::collections::BTreeMap<usize, BTreeSet<VertexId>> = Default::default();
        for v in vs {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().insert(v);
        }
        let mut out: Vec<_> = groups.into_values().collect();
        out.sort();
        out
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty() && self.isolated.is_empty()
    }
}

/// An edge-distinct walk `v_0 e_1 v_1 … e_t v_t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Trail {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Trail {
    pub fn trivial(v: VertexId) -> Self {
        Trail {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Checks incidence and edge-distinctness against `g`.
    pub fn new(g: &MultiGraph, vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Result<Self> {
        let t = Trail { vertices, edges };
        t.validate(g)?;
        Ok(t)
    }

    /// Builds the trail that starts at `start` and follows `edges` in order.
    pub fn from_edges(g: &MultiGraph, start: VertexId, edges: Vec<EdgeId>) -> Result<Self> {
        g.check_vertex(start)?;
        let mut vertices = vec![start];
        let mut cur = start;
        for &e in &edges {
            if e >= g.size() {
                return Err(Error::UnknownEdge {
                    edge: e,
                    size: g.size(),
                });
            }
            let (a, b) = g.endpoints(e);
            cur = if a == cur {
                b
            } else if b == cur {
                a
            } else {
                return Err(Error::InvalidTrail(format!(
                    "edge {e} is not incident with vertex {cur}"
                )));
            };
            vertices.push(cur);
        }
        Trail::new(g, vertices, edges)
    }

    pub fn validate(&self, g: &MultiGraph) -> Result<()> {
        if self.vertices.len() != self.edges.len() + 1 {
            return Err(Error::InvalidTrail(format!(
                "{} vertices do not match {} edges",
                self.vertices.len(),
                self.edges.len()
            )));
        }
        for &v in &self.vertices {
            g.check_vertex(v)?;
        }
        let mut used = BTreeSet::new();
        for (i, &e) in self.edges.iter().enumerate() {
            if e >= g.size() {
                return Err(Error::UnknownEdge {
                    edge: e,
                    size: g.size(),
                });
            }
            if !used.insert(e) {
                return Err(Error::InvalidTrail(format!("edge {e} is repeated")));
            }
            let (a, b) = g.endpoints(e);
            let (x, y) = (self.vertices[i], self.vertices[i + 1]);
            if !((a == x && b == y) || (a == y && b == x)) {
                return Err(Error::InvalidTrail(format!(
                    "edge {e} does not join vertices {x} and {y}"
                )));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        !self.edges.is_empty() && self.vertices.first() == self.vertices.last()
    }

    /// Distinct vertices visited.
    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices.iter().copied().collect()
    }

    /// True when every edge of `g` has an endpoint on the trail.
    pub fn dominates(&self, g: &MultiGraph) -> bool {
        self.first_undominated(g).is_none()
    }

    pub(crate) fn first_undominated(&self, g: &MultiGraph) -> Option<EdgeId> {
        let vs = self.vertex_set();
        (0..g.size()).find(|&e| {
            let (a, b) = g.endpoints(e);
            !vs.contains(&a) && !vs.contains(&b)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn two_cycle_degree_counts_parallel_edges() {
        let g = families::two_cycle();
        assert_eq!(g.degree(0).unwrap(), 2);
        assert_eq!(g.distinct_neighbors(0).unwrap().len(), 1);
        assert!(!g.is_simple());
        assert!(g.is_cycle());
    }

    #[test]
    fn degrees_of_star_and_isolated_vertex() {
        let g = families::star(3).unwrap();
        assert_eq!(g.degree(0).unwrap(), 3);
        assert_eq!(MultiGraph::empty(1).degree(0).unwrap(), 0);
        assert!(matches!(
            g.degree(9),
            Err(Error::UnknownVertex {
                vertex: 9,
                order: 4
            })
        ));
    }

    #[test]
    fn loops_and_bad_endpoints_are_rejected() {
        assert!(matches!(
            MultiGraph::new(2, [(1, 1)]),
            Err(Error::Loop { edge: 0, vertex: 1 })
        ));
        assert!(matches!(
            MultiGraph::new(2, [(0, 2)]),
            Err(Error::UnknownVertex { .. })
        ));
    }

    #[test]
    fn simple_graph_distinct_degree_equals_degree() {
        let g = families::petersen();
        for v in g.vertices() {
            assert_eq!(g.distinct_neighbors(v).unwrap().len(), g.degree(v).unwrap());
        }
    }

    #[test]
    fn subgraph_distance_cases() {
        let g = families::path(5).unwrap();
        let a: BTreeSet<_> = [0, 1].into();
        let b: BTreeSet<_> = [1, 4].into();
        assert_eq!(g.subgraph_distance(&a, &b).unwrap(), Some(0));
        let c: BTreeSet<_> = [4].into();
        assert_eq!(g.subgraph_distance(&a, &c).unwrap(), Some(3));
        assert!(matches!(
            g.subgraph_distance(&BTreeSet::new(), &c),
            Err(Error::EmptyVertexSet)
        ));

        let split = MultiGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        let l: BTreeSet<_> = [0].into();
        let r: BTreeSet<_> = [3].into();
        assert_eq!(split.subgraph_distance(&l, &r).unwrap(), None);
    }

    #[test]
    fn fig1_isolated_vertex_is_one_step_from_the_long_path() {
        // BFS on the generator: v12 (id 11) is adjacent to v3, v6, v9.
        let g = families::fig1();
        let path: BTreeSet<_> = (0..11).collect();
        let v12: BTreeSet<_> = [11].into();
        assert_eq!(g.subgraph_distance(&v12, &path).unwrap(), Some(1));
    }

    #[test]
    fn diameter_and_component_queries() {
        assert_eq!(families::path(5).unwrap().diameter().unwrap(), 4);
        let split = MultiGraph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(split.diameter(), Err(Error::Disconnected)));
        assert_eq!(split.connected_components().len(), 2);
    }

    #[test]
    fn incident_edges_and_odd_vertices() {
        let g = families::cycle(6).unwrap();
        let all = Subgraph::new(&g, 0..6, []).unwrap();
        assert_eq!(g.incident_edges(&all), (0..6).collect());
        assert!(all.odd_vertices(&g).is_empty());

        let h = Subgraph::new(&g, [0], [3]).unwrap();
        assert_eq!(h.components(&g).len(), 2);
        assert_eq!(h.odd_vertices(&g), [0, 1].into());
        assert_eq!(g.incident_edges(&h), [0, 1, 2, 3, 5].into());
    }

    #[test]
    fn subgraph_rejects_isolated_endpoint() {
        let g = families::path(3).unwrap();
        assert!(Subgraph::new(&g, [0], [1]).is_err());
        assert!(Subgraph::new(&g, [7], []).is_err());
    }

    #[test]
    fn trail_validation() {
        let g = families::cycle(4).unwrap();
        let t = Trail::from_edges(&g, 0, vec![0, 1, 2, 3]).unwrap();
        assert!(t.is_closed());
        assert!(t.dominates(&g));
        assert!(Trail::new(&g, vec![0, 1, 0], vec![0, 0]).is_err());
        assert!(Trail::from_edges(&g, 0, vec![1]).is_err());
        assert!(!Trail::trivial(0).is_closed());
    }
}
