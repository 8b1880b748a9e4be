//! Compare the known upper bounds on the burning number of a tree.
//!
//!     cargo run --example bounds_table

use treeburn::bounds::prior_bounds;

fn main() {
    println!(
        "{:>7} {:>4} | {:>4} {:>5} {:>8} {:>5} {:>7} {:>9} {:>6}",
        "n", "n2", "conj", "main1", "murakami", "bessy", "land_lu", "bastide", "bonato"
    );
    for (n, n2) in [(6, 0), (10, 3), (50, 0), (50, 10), (100, 0), (1000, 31), (1000, 500), (1_000_000, 0)] {
        let t = prior_bounds(n, n2);
        println!(
            "{:>7} {:>4} | {:>4} {:>5} {:>8} {:>5} {:>7} {:>9} {:>6}{}",
            n,
            n2,
            t.conjecture,
            t.main1,
            t.murakami,
            t.bessy,
            t.land_lu,
            t.bastide,
            t.bonato_2016,
            if t.corollary_main_applies { "  *" } else { "" }
        );
    }
    println!("* few enough degree-2 vertices that main1 <= ceil(sqrt(n))");
}
