//! The line-graph operator `L(G)` and its iterates.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph};

/// Default vertex cap for [`iterated_line_graph`]; sizes grow very fast.
pub const DEFAULT_VERTEX_CAP: usize = 5000;

/// `L(G)` together with the edge of `G` each of its vertices stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraph {
    pub graph: MultiGraph,
    /// `origin[x]` is the edge of `G` represented by vertex `x` of `L(G)`.
    pub origin: Vec<EdgeId>,
}

/// Builds `L(G)`.
///
/// Vertex `i` of the result is edge `i` of `g`. Two vertices are joined by a
/// single edge when their edges share at least one endpoint, so `L(G)` is
/// simple even when `g` has parallel edges. Edges are numbered in
/// lexicographic order of their endpoint pairs.
pub fn line_graph(g: &MultiGraph) -> Result<LineGraph> {
    if g.size() == 0 {
        return Err(Error::Edgeless);
    }
    Ok(LineGraph {
        graph: line_graph_unchecked(g),
        origin: (0..g.size()).collect(),
    })
}

fn line_graph_unchecked(g: &MultiGraph) -> MultiGraph {
    let mut pairs = Vec::new();
    for v in g.vertices() {
        let inc = g.incident(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                pairs.push((e.min(f), e.max(f)));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    MultiGraph::new(g.size(), pairs).expect("distinct edges give distinct line-graph vertices")
}

/// Number of vertices `L(g)` would have, without building it.
pub fn line_graph_order(g: &MultiGraph) -> usize {
    g.size()
}

/// `L^n(G)`, refusing to build any level with more than `cap` vertices.
///
/// Fails with [`Error::CapExceeded`] naming the level that would overflow, or
/// [`Error::EdgelessAtLevel`] when an intermediate graph has no edges left to
/// turn into vertices (level 0 is `g` itself).
pub fn iterated_line_graph(g: &MultiGraph, n: usize, cap: usize) -> Result<MultiGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "iteration count must be at least 1".into(),
        ));
    }
    let mut cur = g.clone();
    for level in 1..=n {
        if cur.size() == 0 {
            return Err(Error::EdgelessAtLevel { level: level - 1 });
        }
        if cur.size() > cap {
            return Err(Error::CapExceeded {
                level,
                vertices: cur.size(),
                cap,
            });
        }
        cur = line_graph_unchecked(&cur);
    }
    Ok(cur)
}

/// True when `g` has no induced `K_{1,3}`.
pub fn is_claw_free(g: &MultiGraph) -> bool {
    find_claw(g).is_none()
}

/// An induced claw as `(center, [leaves])`, if any.
pub fn find_claw(g: &MultiGraph) -> Option<(usize, [usize; 3])> {
    let n = g.order();
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    for c in g.vertices() {
        let nb: Vec<usize> = g.distinct_neighbors(c).ok()?.into_iter().collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if adj[nb[i] * n + nb[j]] {
                    continue;
                }
                for l in j + 1..nb.len() {
                    if !adj[nb[i] * n + nb[l]] && !adj[nb[j] * n + nb[l]] {
                        return Some((c, [nb[i], nb[j], nb[l]]));
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, star, two_cycle};
    use crate::format::to_graph6;

    fn same_shape(a: &MultiGraph, b: &MultiGraph) -> bool {
        let mut da: Vec<_> = a.vertices().map(|v| a.degree(v).unwrap()).collect();
        let mut db: Vec<_> = b.vertices().map(|v| b.degree(v).unwrap()).collect();
        da.sort();
        db.sort();
        a.order() == b.order()
            && a.size() == b.size()
            && da == db
            && a.is_connected() == b.is_connected()
    }

    #[test]
    fn small_line_graphs() {
        let l = line_graph(&path(4).unwrap()).unwrap();
        assert!(same_shape(&l.graph, &path(3).unwrap()));
        let l = line_graph(&star(3).unwrap()).unwrap();
        assert!(same_shape(&l.graph, &cycle(3).unwrap()));
        let l = line_graph(&two_cycle()).unwrap();
        assert!(same_shape(&l.graph, &path(2).unwrap()));
        assert_eq!(l.origin, vec![0, 1]);
    }

    #[test]
    fn edgeless_input_is_rejected() {
        assert_eq!(line_graph(&path(1).unwrap()), Err(Error::Edgeless));
    }

    #[test]
    fn iterates() {
        let l2 = iterated_line_graph(&path(5).unwrap(), 2, DEFAULT_VERTEX_CAP).unwrap();
        assert!(same_shape(&l2, &path(3).unwrap()));
        let c6 = cycle(6).unwrap();
        let l3 = iterated_line_graph(&c6, 3, DEFAULT_VERTEX_CAP).unwrap();
        assert!(same_shape(&l3, &c6));
        let l2 = iterated_line_graph(&star(3).unwrap(), 2, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(
            to_graph6(&l2).unwrap(),
            to_graph6(&cycle(3).unwrap()).unwrap()
        );
    }

    #[test]
    fn iteration_errors() {
        // P_3 -> K_2 -> K_1 -> nothing left.
        assert_eq!(
            iterated_line_graph(&path(3).unwrap(), 3, 100),
            Err(Error::EdgelessAtLevel { level: 2 })
        );
        let k5 = crate::families::complete(5).unwrap();
        assert_eq!(
            iterated_line_graph(&k5, 3, 50),
            Err(Error::CapExceeded {
                level: 3,
                vertices: 150,
                cap: 50
            })
        );
    }

    #[test]
    fn claw_detection() {
        assert!(!is_claw_free(&star(3).unwrap()));
        assert!(is_claw_free(&cycle(5).unwrap()));
        assert!(is_claw_free(&line_graph(&star(5).unwrap()).unwrap().graph));
    }
}
