//! Small-graph corpora: exhaustive enumeration up to isomorphism and graph6
//! ingestion.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::format::{parse_graph6_corpus, to_graph6};
use crate::graph::MultiGraph;

/// Largest order accepted by [`connected_graphs_on`].
pub const MAX_ENUMERATION_ORDER: usize = 7;
/// Largest size accepted by [`connected_graphs_with_edges`].
pub const MAX_ENUMERATION_SIZE: usize = 8;

/// A corpus entry with a stable identifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusGraph {
    /// graph6 for simple graphs, otherwise `multi:<n>:<u-v,…>`.
    pub id: String,
    pub graph: MultiGraph,
}

impl CorpusGraph {
    pub fn new(graph: MultiGraph) -> Self {
        CorpusGraph {
            id: graph_id(&graph),
            graph,
        }
    }

    pub fn named(id: impl Into<String>, graph: MultiGraph) -> Self {
        CorpusGraph {
            id: id.into(),
            graph,
        }
    }
}

/// Identifier used in reports.
pub fn graph_id(g: &MultiGraph) -> String {
    to_graph6(g).unwrap_or_else(|_| {
        let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("multi:{}:{}", g.order(), edges.join(","))
    })
}

fn multiplicities(g: &MultiGraph) -> Vec<u8> {
    let n = g.order();
    let mut m = vec![0u8; n * n];
    for &(u, v) in g.edges() {
        m[u * n + v] += 1;
        m[v * n + u] += 1;
    }
    m
}

/// Isomorphism-invariant label of each vertex: degree, then the sorted
/// degrees of its neighbors.
fn vertex_invariants(g: &MultiGraph) -> Vec<(usize, Vec<usize>)> {
    g.vertices()
        .map(|v| {
            let mut nb: Vec<usize> = g
                .incident(v)
                .iter()
                .map(|&(u, _)| g.incident(u).len())
                .collect();
            nb.sort_unstable();
            (g.incident(v).len(), nb)
        })
        .collect()
}

/// Canonical form: the relabeling, among those listing vertices by
/// increasing invariant, whose upper-triangle multiplicity string is
/// smallest. Isomorphic graphs get identical forms.
pub fn canonical_form(g: &MultiGraph) -> MultiGraph {
    let n = g.order();
    let mult = multiplicities(g);
    let inv = vertex_invariants(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    // Positions p whose vertex must come from the same invariant class.
    let class_of_pos: Vec<usize> = {
        let mut c = vec![0; n];
        for p in 1..n {
            c[p] = c[p - 1] + usize::from(inv[order[p]] != inv[order[p - 1]]);
        }
        c
    };
    let class_of_vertex: BTreeMap<usize, usize> =
        (0..n).map(|p| (order[p], class_of_pos[p])).collect();

    struct Search<'a> {
        n: usize,
        mult: &'a [u8],
        class_of_pos: &'a [usize],
        class_of_vertex: &'a BTreeMap<usize, usize>,
        perm: Vec<usize>,
        used: Vec<bool>,
        cur: Vec<u8>,
        best: Option<(Vec<u8>, Vec<usize>)>,
    }

    impl Search<'_> {
        /// Entries for position `p` are `mult(perm[q], perm[p])` for `q < p`,
        /// appended column by column; prune as soon as the prefix is worse.
        fn go(&mut self, p: usize) {
            if p == self.n {
                if self.best.as_ref().is_none_or(|(b, _)| self.cur < *b) {
                    self.best = Some((self.cur.clone(), self.perm.clone()));
                }
                return;
            }
            for v in 0..self.n {
                if self.used[v] || self.class_of_vertex[&v] != self.class_of_pos[p] {
                    continue;
                }
                let start = self.cur.len();
                for q in 0..p {
                    self.cur.push(self.mult[self.perm[q] * self.n + v]);
                }
                let worse = self
                    .best
                    .as_ref()
                    .is_some_and(|(b, _)| self.cur.as_slice() > &b[..self.cur.len()]);
                if !worse {
                    self.used[v] = true;
                    self.perm.push(v);
                    self.go(p + 1);
                    self.perm.pop();
                    self.used[v] = false;
                }
                self.cur.truncate(start);
            }
        }
    }

    let mut s = Search {
        n,
        mult: &mult,
        class_of_pos: &class_of_pos,
        class_of_vertex: &class_of_vertex,
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        cur: Vec::new(),
        best: None,
    };
    s.go(0);
    let perm = s.best.map(|(_, p)| p).unwrap_or_default();
    let mut pos = vec![0; n];
    for (p, &v) in perm.iter().enumerate() {
        pos[v] = p;
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .collect();
    edges.sort_unstable();
    MultiGraph::new(n, edges).expect("relabeling preserves validity")
}

fn key(g: &MultiGraph) -> (usize, Vec<(usize, usize)>) {
    (g.order(), g.edges().to_vec())
}

/// Every connected simple graph on exactly `n` vertices, once per
/// isomorphism class, in canonical form and sorted by id.
pub fn connected_graphs_on(n: usize) -> Result<Vec<MultiGraph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidParameter(format!(
            "enumeration is limited to {MAX_ENUMERATION_ORDER} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut layer: BTreeMap<_, MultiGraph> = BTreeMap::new();
    let empty = canonical_form(&MultiGraph::empty(n));
    layer.insert(key(&empty), empty);
    let mut connected = Vec::new();
    while !layer.is_empty() {
        let mut next = BTreeMap::new();
        for g in layer.values() {
            if g.is_connected() {
                connected.push(g.clone());
            }
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge_between(u, v) {
                        continue;
                    }
                    let mut edges = g.edges().to_vec();
                    edges.push((u, v));
                    let c = canonical_form(&MultiGraph::new(n, edges).expect("valid"));
                    next.entry(key(&c)).or_insert(c);
                }
            }
        }
        layer = next;
    }
    Ok(sorted_by_id(connected))
}

/// Connected simple graphs on `1..=max_vertices` vertices.
pub fn enumerate_connected_graphs(max_vertices: usize) -> Result<Vec<MultiGraph>> {
    let mut all = Vec::new();
    for n in 1..=max_vertices {
        all.extend(connected_graphs_on(n)?);
    }
    Ok(all)
}

/// Connected graphs with `1..=max_edges` edges, once per isomorphism class.
/// With `multi`, parallel edges are allowed.
pub fn connected_graphs_with_edges(max_edges: usize, multi: bool) -> Result<Vec<MultiGraph>> {
    if max_edges > MAX_ENUMERATION_SIZE {
        return Err(Error::InvalidParameter(format!(
            "enumeration is limited to {MAX_ENUMERATION_SIZE} edges, got {max_edges}"
        )));
    }
    let mut all = Vec::new();
    if max_edges == 0 {
        return Ok(all);
    }
    let k2 = MultiGraph::new(2, [(0, 1)]).expect("valid");
    let mut layer = BTreeMap::from([(key(&k2), k2)]);
    for _ in 1..max_edges {
        let mut next = BTreeMap::new();
        for g in layer.values() {
            let n = g.order();
            let mut grow = |order: usize, extra: (usize, usize)| {
                let mut edges = g.edges().to_vec();
                edges.push(extra);
                let c = canonical_form(&MultiGraph::new(order, edges).expect("valid"));
                next.entry(key(&c)).or_insert(c);
            };
            for u in 0..n {
                grow(n + 1, (u, n));
                for v in u + 1..n {
                    if multi || !g.has_edge_between(u, v) {
                        grow(n, (u, v));
                    }
                }
            }
        }
        all.extend(std::mem::replace(&mut layer, next).into_values());
    }
    all.extend(layer.into_values());
    Ok(sorted_by_id(all))
}

fn sorted_by_id(graphs: Vec<MultiGraph>) -> Vec<MultiGraph> {
    let mut tagged: Vec<(String, MultiGraph)> =
        graphs.into_iter().map(|g| (graph_id(&g), g)).collect();
    tagged.sort_by(|a, b| (a.1.order(), a.1.size(), &a.0).cmp(&(b.1.order(), b.1.size(), &b.0)));
    tagged.into_iter().map(|(_, g)| g).collect()
}

/// Wraps graphs as corpus entries.
pub fn corpus_of(graphs: impl IntoIterator<Item = MultiGraph>) -> Vec<CorpusGraph> {
    graphs.into_iter().map(CorpusGraph::new).collect()
}

/// Reads a graph6 corpus file's contents; ids are the input strings.
pub fn corpus_from_graph6(text: &str) -> Result<Vec<CorpusGraph>> {
    let graphs = parse_graph6_corpus(text)?;
    let ids = text.lines().map(str::trim).filter(|l| !l.is_empty());
    Ok(ids
        .zip(graphs)
        .map(|(id, g)| CorpusGraph::named(id.trim_start_matches(">>graph6<<"), g))
        .collect())
}
