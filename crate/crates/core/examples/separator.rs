//! The two structural moves behind the construction: a separator vertex
//! with one heavy branch, and smoothing a vertex out of a tree.
//!
//!     cargo run --example separator

use treeburn::construct::{find_separator, smooth, Threshold};
use treeburn::graph::{gen_random_no_deg2, gen_star};

fn main() {
    let t = gen_random_no_deg2(15, 4).unwrap();
    println!("tree of order {}: {:?}", t.vertex_count(), t.edges());

    let p = Threshold::from_halves(9);
    let sep = find_separator(&t, p).unwrap();
    println!("separator for p = {p}: v = {}", sep.v);
    for (x, size) in sep.neighbors.iter().zip(&sep.sizes) {
        let tag = if *x == sep.heavy_neighbor() { "heavy" } else { "light" };
        println!("  branch at {x}: {size} vertices ({tag})");
    }
    assert!(sep.verify(&t));

    let star = gen_star(4).unwrap();
    let sr = smooth(&star, 0).unwrap();
    println!(
        "smoothing the centre of K(1,4): {} vertices left, removed {:?}, path {:?}",
        sr.tree.vertex_count(),
        sr.removed,
        sr.path_order
    );

    let w = t.vertices().find(|&v| t.degree(v) >= 3).unwrap();
    let sr = smooth(&t, w).unwrap();
    println!(
        "smoothing {w} in the random tree: order {} -> {}, degree-2 vertices left: {}",
        t.vertex_count(),
        sr.tree.vertex_count(),
        sr.tree.degree2_census().0
    );
}
