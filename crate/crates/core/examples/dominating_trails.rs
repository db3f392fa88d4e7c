//! Finds dominating trails and lifts them to hamiltonian paths and cycles
//! of the line graph.

use itline::families;
use itline::hamilton::{
    is_hamiltonian_cycle, is_hamiltonian_path, lift_closed_trail_to_cycle, lift_trail_to_path,
};
use itline::linegraph::line_graph;
use itline::search::SearchOptions;
use itline::structure::{find_dominating_trail, max_trail};
use itline::Result;

fn main() -> Result<()> {
    let opts = SearchOptions::default();
    let g = families::fig1();

    if let Some(t) = find_dominating_trail(&g, false, &opts)?.found() {
        let path = lift_trail_to_path(&g, &t)?;
        let l = line_graph(&g)?.graph;
        println!("fig1 open trail through {:?}", t.vertices);
        println!(
            "  lifted to L(G): {:?} (hamiltonian: {})",
            path.vertices,
            is_hamiltonian_path(&l, &path.vertices)
        );
    }
    let closed = find_dominating_trail(&g, true, &opts)?;
    println!("fig1 has a closed dominating trail: {:?}", closed.decided());

    let k4 = families::complete(4)?;
    if let Some(t) = find_dominating_trail(&k4, true, &opts)?.found() {
        let cycle = lift_closed_trail_to_cycle(&k4, &t)?;
        let l = line_graph(&k4)?.graph;
        let body = &cycle.vertices[..cycle.vertices.len() - 1];
        println!(
            "K_4 closed trail lifts to a hamiltonian cycle: {}",
            is_hamiltonian_cycle(&l, body)
        );
    }

    let mt = max_trail(&families::fig3(1, 6)?, &opts)?;
    println!(
        "fig3(1, 6): longest trail covers {} vertices, misses {} of degree >= 3",
        mt.mt_star, mt.d3_star
    );
    Ok(())
}
