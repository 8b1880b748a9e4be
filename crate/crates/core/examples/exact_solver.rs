//! Exact burning numbers of small graphs, checked against the definition.
//!
//!     cargo run --release --example exact_solver

use treeburn::exact::{burnable_within, burning_number, burning_number_naive, spanning_tree_min};
use treeburn::graph::{gen_cycle, gen_double_star, gen_full_binary, gen_path};

fn main() {
    println!("{:>3} {:>6} {:>6}", "n", "b(P_n)", "b(C_n)");
    for n in [3, 4, 5, 9, 10, 16, 17, 25] {
        let p = burning_number(&gen_path(n).unwrap()).unwrap();
        let c = burning_number(&gen_cycle(n).unwrap()).unwrap();
        println!("{n:>3} {:>6} {:>6}", p.burning_number, c.burning_number);
    }

    let d = gen_double_star(2, 2).unwrap();
    let r = burning_number(&d).unwrap();
    println!(
        "double star D(2,2): b = {} via {:?} ({} search nodes), naive agrees: {}",
        r.burning_number,
        r.witness.sources(),
        r.nodes_explored,
        burning_number_naive(&d).unwrap().burning_number == r.burning_number
    );
    println!("  two rounds possible? {:?}", burnable_within(&d, 2).unwrap());

    let tree = gen_full_binary(4).unwrap();
    let r = burning_number(&tree).unwrap();
    println!("full binary tree of order {}: b = {}", tree.vertex_count(), r.burning_number);

    let c6 = gen_cycle(6).unwrap();
    println!("C6: b = {}, best spanning tree b = {}", burning_number(&c6).unwrap().burning_number, spanning_tree_min(&c6).unwrap());
}
