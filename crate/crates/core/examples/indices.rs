//! Computes the hamiltonian path index and hamiltonian index and confirms
//! them by building the iterated line graphs directly.

use itline::families;
use itline::indices::{hamiltonian_index, hamiltonian_path_index, CrossCheckCaps};
use itline::search::SearchOptions;
use itline::Result;

fn main() -> Result<()> {
    let opts = SearchOptions::default();
    let caps = CrossCheckCaps::default();
    let graphs = [
        ("K_1,4", families::star(4)?),
        ("Petersen", families::petersen()),
        ("fig1", families::fig1()),
        ("fig2(2)", families::fig2(2)?),
    ];
    for (name, g) in &graphs {
        let hp = hamiltonian_path_index(g, &opts)?.with_cross_check(g, &caps);
        let h = hamiltonian_index(g, &opts)?;
        println!(
            "{name}: h_p = {} via {}, h = {} via {}, direct check {:?}",
            hp.value, hp.method, h.value, h.method, hp.cross_check
        );
    }
    match hamiltonian_index(&families::path(5)?, &opts) {
        Ok(r) => println!("P_5: h = {}", r.value),
        Err(e) => println!("P_5: {e}"),
    }
    Ok(())
}
