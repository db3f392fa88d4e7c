//! Deterministic generators for standard graphs and the extremal families.
//!
//! Vertex numbering is part of each generator's contract and is documented
//! on the function, so tests and callers can refer to named vertices.

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

fn build(order: usize, edges: Vec<(usize, usize)>) -> MultiGraph {
    MultiGraph::new(order, edges).expect("generator produces a valid loopless graph")
}

fn check_min(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::InvalidParameter(format!(
            "{name} must be at least {min}, got {value}"
        )))
    } else {
        Ok(())
    }
}

/// `P_n` on vertices `0..n`, edge `i` joining `i` and `i + 1`.
pub fn path(n: usize) -> Result<MultiGraph> {
    check_min("path order", n, 1)?;
    Ok(build(n, (1..n).map(|i| (i - 1, i)).collect()))
}

/// `C_n`, edge `i` joining `i` and `(i + 1) mod n`. `n = 2` gives the 2-cycle.
pub fn cycle(n: usize) -> Result<MultiGraph> {
    check_min("cycle order", n, 2)?;
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

/// `K_{1,m}` with center `0` and leaves `1..=m`.
pub fn star(m: usize) -> Result<MultiGraph> {
    check_min("star size", m, 1)?;
    Ok(build(m + 1, (1..=m).map(|i| (0, i)).collect()))
}

/// `K_n`, edges in lexicographic order.
pub fn complete(n: usize) -> Result<MultiGraph> {
    check_min("complete graph order", n, 1)?;
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Ok(build(n, edges))
}

/// The multigraph of order 2 with two parallel edges.
pub fn two_cycle() -> MultiGraph {
    build(2, vec![(0, 1), (0, 1)])
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, edges)
}

/// A graph with no `EUP_1` subgraph whose line graph is still traceable.
///
/// `v_i` is vertex `i - 1`: the path `v_1 … v_11` is `0..=10` (edges `0..10`)
/// and `v_12 = 11` is joined to `v_3, v_6, v_9` by edges `10, 11, 12`.
/// Twelve vertices, thirteen edges.
pub fn fig1() -> MultiGraph {
    let mut edges: Vec<_> = (1..11).map(|i| (i - 1, i)).collect();
    for v in [2, 5, 8] {
        edges.push((11, v));
    }
    build(12, edges)
}

/// A 6-cycle with a path of length `k` hanging from each of three pairwise
/// non-adjacent cycle vertices; `h_p = h = k`.
///
/// Cycle vertices are `0..6` (edge `i` joins `i` and `i + 1 mod 6`). The
/// pendant path at cycle vertex `2i` uses vertices `6 + i·k ..= 5 + (i+1)·k`,
/// listed outward. `n = 6 + 3k`, `|E| = 6 + 3k`.
pub fn fig2(k: usize) -> Result<MultiGraph> {
    check_min("k", k, 1)?;
    let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    for i in 0..3 {
        let mut prev = 2 * i;
        for j in 0..k {
            let v = 6 + i * k + j;
            edges.push((prev, v));
            prev = v;
        }
    }
    Ok(build(6 + 3 * k, edges))
}

/// Vertex ids of the named vertices of [`fig3`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fig3Labels {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub z: Vec<usize>,
    /// `w_1 … w_5`.
    pub w: [usize; 5],
}

impl Fig3Labels {
    pub fn new(s: usize, t: usize) -> Self {
        Fig3Labels {
            x: (0..t).collect(),
            // y_i sits at 2t + 1 - i so the long path reads 0..=2t.
            y: (1..=t).map(|i| 2 * t + 1 - i).collect(),
            z: (2 * t + 1..2 * t + 1 + s).collect(),
            w: [
                t,
                2 * t + s + 1,
                2 * t + s + 2,
                2 * t + s + 3,
                2 * t + s + 4,
            ],
        }
    }
}

/// The family that makes `h_p ≤ n − mt* − d*_{≥3} + 2` tight.
///
/// A path `x_1 … x_t w_1 y_t … y_1` (vertices `0..=2t`, see
/// [`Fig3Labels`]), a tail `w_1 z_1 … z_s w_2`, and a `K_4` on
/// `{w_2, w_3, w_4, w_5}`. The top gadget is read off the drawing as a
/// 4-cycle `w_2 w_3 w_4 w_5` with both chords, i.e. `K_4`; that reading is the
/// one consistent with `n = 2t + s + 5` and `d*_{≥3} = 4`.
/// Requires `s ≥ 1` and `t ≥ s + 5`.
pub fn fig3(s: usize, t: usize) -> Result<MultiGraph> {
    check_min("s", s, 1)?;
    if t < s + 5 {
        return Err(Error::InvalidParameter(format!(
            "fig3 needs t >= s + 5, got s = {s}, t = {t}"
        )));
    }
    let l = Fig3Labels::new(s, t);
    let mut edges: Vec<_> = (1..=2 * t).map(|i| (i - 1, i)).collect();
    let mut prev = l.w[0];
    for &z in &l.z {
        edges.push((prev, z));
        prev = z;
    }
    edges.push((prev, l.w[1]));
    let [_, w2, w3, w4, w5] = l.w;
    edges.extend([(w2, w3), (w3, w4), (w4, w5), (w5, w2), (w2, w4), (w3, w5)]);
    Ok(build(2 * t + s + 5, edges))
}

/// A path of seven vertices carrying two pendent cycles: a 4-cycle at the
/// fifth vertex and a 2-cycle (two parallel edges) at the third.
///
/// Path vertices `0..7`; 4-cycle `4, 7, 8, 9`; 2-cycle `2, 10`.
pub fn fig4a() -> MultiGraph {
    let mut edges: Vec<_> = (1..7).map(|i| (i - 1, i)).collect();
    edges.extend([(4, 7), (7, 8), (8, 9), (9, 4)]);
    edges.extend([(2, 10), (2, 10)]);
    build(11, edges)
}

/// The family that makes `h_p ≤ ⌊(n − Δ′ − d**_{≥3})/3⌋ + 3` tight.
///
/// Center `0` with pendant leaves `1, 2, 3`. For `i` in `0..3`, a path of `s`
/// vertices leaves the center and ends at the attachment vertex of the
/// `i`-th `K_4`, so each center-to-`K_4` branch has length `s + 1`. Block `i`
/// occupies `4 + i·(s + 4) ..`: its `s` path vertices (outward), then the four
/// `K_4` vertices with the attachment vertex first.
/// `n = 3s + 16`, `|E| = 3s + 24`.
pub fn fig4b(s: usize) -> Result<MultiGraph> {
    check_min("s", s, 1)?;
    let mut edges = vec![(0, 1), (0, 2), (0, 3)];
    for i in 0..3 {
        let base = 4 + i * (s + 4);
        let mut prev = 0;
        for j in 0..s {
            edges.push((prev, base + j));
            prev = base + j;
        }
        let k: Vec<usize> = (base + s..base + s + 4).collect();
        edges.push((prev, k[0]));
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((k[a], k[b]));
            }
        }
    }
    Ok(build(3 * s + 16, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_generators() {
        assert_eq!(path(1).unwrap().order(), 1);
        assert_eq!(path(1).unwrap().size(), 0);
        let tc = two_cycle();
        assert_eq!((tc.order(), tc.size()), (2, 2));
        let s = star(3).unwrap();
        assert_eq!((s.order(), s.size()), (4, 3));
        assert_eq!(complete(5).unwrap().size(), 10);
        assert!(path(0).is_err());
        assert!(cycle(1).is_err());
        assert!(star(0).is_err());
        let p = petersen();
        assert_eq!((p.order(), p.size()), (10, 15));
        assert!(p.vertices().all(|v| p.degree(v).unwrap() == 3));
        assert!(p.is_simple());
    }

    #[test]
    fn fig1_shape() {
        let g = fig1();
        assert_eq!((g.order(), g.size()), (12, 13));
        assert!(g.is_connected() && g.is_simple());
        let deg3: Vec<_> = g
            .vertices()
            .filter(|&v| g.degree(v).unwrap() == 3)
            .collect();
        // v3, v6, v9, v12
        assert_eq!(deg3, vec![2, 5, 8, 11]);
    }

    #[test]
    fn fig2_counts() {
        for k in 1..5 {
            let g = fig2(k).unwrap();
            assert_eq!(g.order(), 6 + 3 * k);
            assert_eq!(g.size(), 6 + 3 * k);
            let deg3: Vec<_> = g
                .vertices()
                .filter(|&v| g.degree(v).unwrap() == 3)
                .collect();
            assert_eq!(deg3, vec![0, 2, 4]);
        }
    }

    #[test]
    fn fig3_counts_and_parameter_check() {
        let g = fig3(1, 6).unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(g.size(), 2 * 6 + 2 + 6);
        let l = Fig3Labels::new(1, 6);
        let deg3: Vec<_> = g
            .vertices()
            .filter(|&v| g.degree(v).unwrap() >= 3)
            .collect();
        let mut w = l.w.to_vec();
        w.sort();
        assert_eq!(deg3, w);
        assert!(fig3(2, 6).is_err());
        assert_eq!(fig3(2, 7).unwrap().order(), 2 * 7 + 2 + 5);
    }

    #[test]
    fn fig4_counts() {
        for s in 1..4 {
            let g = fig4b(s).unwrap();
            assert_eq!(g.order(), 3 * s + 16);
            assert_eq!(g.size(), 3 * s + 24);
            assert!(g.is_connected());
            assert_eq!(g.degree(0).unwrap(), 6);
        }
        let a = fig4a();
        assert_eq!((a.order(), a.size()), (11, 12));
        assert!(a.is_connected());
    }
}
