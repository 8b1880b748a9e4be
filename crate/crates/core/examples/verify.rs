//! Certificates are checked from the tree and sequence alone, so edits to
//! any stored field are caught.
//!
//!     cargo run --example verify

use treeburn::certificate::{parse_and_verify, verify, CertificateDocument};
use treeburn::construct::construct_general;
use treeburn::graph::gen_random_tree;

fn main() {
    let t = gen_random_tree(80, 5).unwrap();
    let doc = CertificateDocument::new(&construct_general(&t).unwrap(), Some(5));
    let json = doc.to_json();
    println!("fresh certificate: {:?}", parse_and_verify(&json).unwrap());

    let mut reordered = doc.clone();
    reordered.sequence.swap(0, 1);
    report("first two sources swapped", verify(&reordered));

    let mut labels = doc.clone();
    *labels.labels.values_mut().next().unwrap() += 1;
    report("one label edited", verify(&labels));

    let mut target = doc.clone();
    target.target -= 1;
    report("target lowered", verify(&target));

    let mut tree = doc.clone();
    tree.tree.edges.pop();
    report("edge deleted", verify(&tree));

    report("truncated file", parse_and_verify(&json[..json.len() / 2]));
}

fn report<T: std::fmt::Debug>(what: &str, r: Result<T, treeburn::certificate::VerifyFailure>) {
    match r {
        Ok(v) => println!("{what}: accepted {v:?}"),
        Err(f) => println!("{what}: rejected ({}) {}", f.kind, f.detail),
    }
}
