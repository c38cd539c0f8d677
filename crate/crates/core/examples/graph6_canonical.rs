//! graph6 encoding and decoding, canonical labelling, and enumeration of
//! small connected graphs up to isomorphism.
//!
//! ```text
//! cargo run --example graph6_canonical
//! ```

use std::error::Error;
use std::io::Cursor;

use spectral_deletion::graph::{canonical_form, complete, enumerate_connected, graph6, path, Graph};

pub fn run() -> Result<(), Box<dyn Error>> {
    for (name, g) in [("K3", complete(3)?), ("K4", complete(4)?), ("P3", path(3)?)] {
        println!("{name} -> {}", g.to_graph6()?);
    }

    let corpus = ">>graph6<<Bw\n\nC~\nCr\n";
    let graphs = graph6::read_all(Cursor::new(corpus))?;
    println!("read {} graphs, edge counts {:?}", graphs.len(), graphs.iter().map(Graph::edge_count).collect::<Vec<_>>());
    match graph6::parse("@@") {
        Err(e) => println!("\"@@\" rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    // Two labellings of the paw graph share one canonical key.
    let a = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])?;
    let b = a.relabel(&[3, 1, 0, 2]);
    let (ka, kb) = (canonical_form(&a)?, canonical_form(&b)?);
    println!("paw: {} and {} share canonical form {}", a.to_graph6()?, b.to_graph6()?, ka.to_graph().to_graph6()?);
    assert_eq!(ka, kb);

    for n in 1..=7 {
        let classes = enumerate_connected(n)?;
        let sample: Vec<String> = classes.iter().take(4).map(|g| g.to_graph6().unwrap()).collect();
        println!("n = {n}: {:>3} connected graphs, first {}", classes.len(), sample.join(" "));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
