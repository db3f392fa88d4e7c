//! Searches for EUP_k and EU_k members and prints the per-condition report.

use itline::eup::{check_conditions, exists_by_enumeration, find_witness, Variant};
use itline::families;
use itline::search::{Search, SearchOptions};
use itline::Result;

fn main() -> Result<()> {
    let opts = SearchOptions::default();
    let g = families::fig1();

    for k in 1..=2 {
        for variant in [Variant::Eup, Variant::Eu] {
            match find_witness(&g, k, variant, &opts)? {
                Search::Found(h) => {
                    println!(
                        "{variant}_{k}: edges {:?}, isolated {:?}",
                        h.edges, h.isolated
                    );
                    print!("{}", check_conditions(&g, &h, k, variant)?);
                }
                Search::Absent => println!("{variant}_{k}: empty"),
                Search::Unknown(e) => println!("{variant}_{k}: undecided ({e})"),
            }
        }
    }

    let brute = exists_by_enumeration(&g, 1, Variant::Eup)?;
    println!(
        "exhaustive enumeration agrees that EUP_1 is empty: {}",
        brute.is_none()
    );
    Ok(())
}
