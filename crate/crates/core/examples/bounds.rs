//! Evaluates the four upper bounds on the hamiltonian path index and checks
//! the constructive witnesses behind two of them.

use itline::eup::{check_conditions, Variant};
use itline::families;
use itline::indices::{bounds, hamiltonian_path_index, thm_b1_witness, thm_b2_witness};
use itline::search::SearchOptions;
use itline::Result;

fn main() -> Result<()> {
    let opts = SearchOptions::default();
    for (name, g) in [
        ("fig3(2, 7)", families::fig3(2, 7)?),
        ("fig4b(2)", families::fig4b(2)?),
    ] {
        let b = bounds(&g, &opts)?;
        let hp = hamiltonian_path_index(&g, &opts)?;
        println!("{name}: h_p = {}", hp.value);
        for (bound, value) in b.values() {
            println!("  {bound:>6} = {value}");
        }
        println!("  stats {:?}", b.stats);

        let (k, h) = thm_b1_witness(&g, &opts)?;
        println!(
            "  trail witness passes at k = {k}: {}",
            check_conditions(&g, &h, k, Variant::Eup)?.passes()
        );
        if let Some((k, h)) = thm_b2_witness(&g)? {
            println!(
                "  branch witness passes at k = {k}: {}",
                check_conditions(&g, &h, k, Variant::Eup)?.passes()
            );
        }
    }
    Ok(())
}
