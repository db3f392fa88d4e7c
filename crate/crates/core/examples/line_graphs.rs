//! Builds line graphs and iterates them until the order passes a cap.

use itline::families;
use itline::linegraph::{is_claw_free, line_graph};
use itline::{iterated_line_graph, Result};

fn main() -> Result<()> {
    let g = families::two_cycle();
    let l = line_graph(&g)?;
    println!(
        "two parallel edges: L has {} vertices and {} edges",
        l.graph.order(),
        l.graph.size()
    );

    let star = families::star(4)?;
    for n in 1..=3 {
        let ln = iterated_line_graph(&star, n, 10_000)?;
        println!(
            "L^{n}(K_1,4): {} vertices, {} edges, claw-free: {}",
            ln.order(),
            ln.size(),
            is_claw_free(&ln)
        );
    }

    match iterated_line_graph(&families::petersen(), 5, 1_000) {
        Ok(g) => println!("L^5(Petersen) has {} vertices", g.order()),
        Err(e) => println!("L^5(Petersen) refused: {e}"),
    }
    Ok(())
}
