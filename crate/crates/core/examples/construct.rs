//! Build a bounded burning sequence for a random tree and print its trace.
//!
//!     cargo run --release --example construct [ORDER] [SEED]

use treeburn::bounds::bound_main1;
use treeburn::certificate::CertificateDocument;
use treeburn::construct::construct_general;
use treeburn::exact::burning_number;
use treeburn::graph::gen_random_tree;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("numeric argument"));
    let n = args.next().unwrap_or(120) as usize;
    let seed = args.next().unwrap_or(1);

    let t = gen_random_tree(n, seed).unwrap();
    let cert = construct_general(&t).unwrap();
    println!(
        "n = {}, n2 = {}, m = {}: length {} within target {}",
        cert.n, cert.n2, cert.m, cert.sequence.len(), cert.target
    );
    assert_eq!(cert.target, bound_main1(cert.n, cert.n2));
    println!("sources {:?}", cert.sequence.sources());
    for ev in &cert.trace {
        println!("  {}", serde_json::to_string(ev).unwrap());
    }
    if n <= 40 {
        println!("exact burning number: {}", burning_number(&t).unwrap().burning_number);
    }

    let doc = CertificateDocument::new(&cert, Some(seed));
    let path = std::env::temp_dir().join(format!("treeburn-{n}-{seed}.json"));
    std::fs::write(&path, doc.to_json()).unwrap();
    println!("certificate written to {}", path.display());
}
